//! Property tests: structural invariants over randomly generated words,
//! codes, trapezoidal words and polynomials.

use proptest::prelude::*;

use stirperm::code::{code_set_stat, decode, encode, SpCode};
use stirperm::poly::Polynomial;
use stirperm::stats::{j_stat, scalar_stat, set_stat, JKind, SetStatId, StatId};
use stirperm::trapezoid::{
    code_from_dumont, dumont_from_code, dumont_from_riordan, matching_from_riordan,
    riordan_from_dumont, riordan_from_matching, DumontWord, RiordanWord,
};
use stirperm::trees::{perm_to_tree, tree_to_perm};
use stirperm::words::is_stirling;

/// Build a k-Stirling word from raw gap choices (choice j mod the gap
/// count at that level), mirroring the insertion scheme.
fn word_from_gaps(raw: &[u64], k: u32) -> Vec<u32> {
    let mut word: Vec<u32> = Vec::new();
    for (j, &g) in raw.iter().enumerate() {
        let gaps = (k as usize) * j + 1;
        let at = (g % gaps as u64) as usize;
        word.splice(at..at, std::iter::repeat_n((j + 1) as u32, k as usize));
    }
    word
}

fn stirling_word(max_n: usize, k: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(any::<u64>(), 1..=max_n).prop_map(move |raw| word_from_gaps(&raw, k))
}

fn sp_code(max_n: usize) -> impl Strategy<Value = SpCode> {
    prop::collection::vec(any::<u64>(), 0..max_n).prop_map(|raw| {
        let mut tuples: Vec<(u32, u8)> = vec![(0, 0)];
        for (idx, &r) in raw.iter().enumerate() {
            let level = idx + 1;
            let free: Vec<(u32, u8)> = (1..=level as u32)
                .flat_map(|a| (1..=3u8).map(move |b| (a, b)))
                .filter(|t| !tuples.contains(t))
                .collect();
            tuples.push(free[(r % free.len() as u64) as usize]);
        }
        SpCode::new(tuples).expect("constructed tuples are valid")
    })
}

fn dumont_word(max_n: usize) -> impl Strategy<Value = DumontWord> {
    prop::collection::vec(any::<u64>(), 1..=max_n).prop_map(|raw| {
        let entries: Vec<i64> = raw
            .iter()
            .enumerate()
            .map(|(idx, &r)| {
                let bound = idx as i64; // |w| <= idx
                (r % (2 * bound as u64 + 1)) as i64 - bound
            })
            .collect();
        DumontWord::new(entries).expect("entries within the trapezoid")
    })
}

fn riordan_word(max_n: usize) -> impl Strategy<Value = RiordanWord> {
    prop::collection::vec(any::<u64>(), 1..=max_n).prop_map(|raw| {
        let entries: Vec<u32> = raw
            .iter()
            .enumerate()
            .map(|(idx, &r)| (r % (2 * idx as u64 + 1)) as u32 + 1)
            .collect();
        RiordanWord::new(entries).expect("entries within the trapezoid")
    })
}

fn small_poly(vars: &'static [&'static str]) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (
            -9i64..=9,
            prop::collection::vec(0u32..=3, vars.len()),
        ),
        0..5,
    )
    .prop_map(move |terms| {
        let mut acc = Polynomial::zero();
        for (c, exps) in terms {
            acc = acc.add(&Polynomial::monomial(c, vars, &exps));
        }
        acc
    })
}

proptest! {
    #[test]
    fn generated_words_are_stirling_with_balanced_counts(
        (k, raw) in (1u32..=3).prop_flat_map(|k| {
            (Just(k), prop::collection::vec(any::<u64>(), 1..=5))
        })
    ) {
        let w = word_from_gaps(&raw, k);
        prop_assert!(is_stirling(&w, k));
        let n = raw.len() as u64;
        let total = scalar_stat(&w, StatId::Asc)
            + scalar_stat(&w, StatId::Des)
            + scalar_stat(&w, StatId::Plat);
        prop_assert_eq!(total, k as u64 * n + 1);
        let mut refined = 0;
        for j in 1..=k {
            refined += j_stat(&w, k, j, JKind::Plateau).unwrap();
            refined += j_stat(&w, k, j, JKind::Ascent).unwrap();
            refined += j_stat(&w, k, j, JKind::Descent).unwrap();
        }
        prop_assert_eq!(refined, k as u64 * n + 1);
    }

    #[test]
    fn reversal_swaps_the_paired_statistics(w in stirling_word(6, 2)) {
        let rev: Vec<u32> = w.iter().rev().copied().collect();
        prop_assert_eq!(scalar_stat(&rev, StatId::Asc), scalar_stat(&w, StatId::Des));
        prop_assert_eq!(scalar_stat(&rev, StatId::Des), scalar_stat(&w, StatId::Asc));
        prop_assert_eq!(scalar_stat(&rev, StatId::Ap), scalar_stat(&w, StatId::Pd));
        prop_assert_eq!(scalar_stat(&rev, StatId::Pd), scalar_stat(&w, StatId::Ap));
        prop_assert_eq!(scalar_stat(&rev, StatId::Lap), scalar_stat(&w, StatId::Rpd));
        prop_assert_eq!(scalar_stat(&rev, StatId::Rpd), scalar_stat(&w, StatId::Lap));
    }

    #[test]
    fn up_down_pair_bounds(w in stirling_word(6, 2)) {
        let ud = scalar_stat(&w, StatId::Ud);
        let eud = scalar_stat(&w, StatId::Eud);
        prop_assert!(ud <= eud && eud <= ud + 1);
        let ap = scalar_stat(&w, StatId::Ap);
        let lap = scalar_stat(&w, StatId::Lap);
        prop_assert!(lap == ap || lap == ap + 1);
        // scalar values agree with set cardinalities
        for (scalar, set) in [
            (StatId::Asc, SetStatId::Asc),
            (StatId::Des, SetStatId::Des),
            (StatId::Plat, SetStatId::Plat),
            (StatId::Lap, SetStatId::Lap),
            (StatId::Rpd, SetStatId::Rpd),
            (StatId::Eud, SetStatId::Eud),
        ] {
            prop_assert_eq!(scalar_stat(&w, scalar), set_stat(&w, set).len() as u64);
        }
    }

    #[test]
    fn word_code_round_trip_and_transport(w in stirling_word(7, 2)) {
        let c = encode(&w).unwrap();
        prop_assert_eq!(decode(&c).unwrap(), w.clone());
        for s in SetStatId::ALL {
            prop_assert_eq!(set_stat(&w, s), code_set_stat(&c, s));
        }
        let t = perm_to_tree(&w).unwrap();
        prop_assert_eq!(tree_to_perm(&t), w);
    }

    #[test]
    fn code_round_trip_and_switch_involution(c in sp_code(7), b1 in 1u8..=3, b2 in 1u8..=3) {
        prop_assert_eq!(encode(&decode(&c).unwrap()).unwrap(), c.clone());
        if b1 != b2 {
            let switched = c.switch(b1, b2);
            prop_assert!(decode(&switched).is_ok());
            prop_assert_eq!(switched.switch(b1, b2), c);
        }
    }

    #[test]
    fn trapezoidal_round_trips(w in dumont_word(7), t in riordan_word(7)) {
        prop_assert_eq!(dumont_from_riordan(&riordan_from_dumont(&w)), w.clone());
        prop_assert_eq!(dumont_from_code(&code_from_dumont(&w)), w.clone());
        prop_assert_eq!(riordan_from_matching(&matching_from_riordan(&t)).unwrap(), t);
        let (dist, nneg, npos) = w.stats();
        prop_assert_eq!(dist + nneg + npos, 2 * w.len() as u64 + 1);
    }

    #[test]
    fn polynomial_ring_axioms(
        a in small_poly(&["x", "y", "z"]),
        b in small_poly(&["x", "y", "z"]),
        c in small_poly(&["x", "y", "z"]),
    ) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), Polynomial::zero());
        prop_assert_eq!(
            a.partial("x").partial("y"),
            a.partial("y").partial("x")
        );
        prop_assert_eq!(Polynomial::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn symmetrization_round_trips_the_elementary_basis(p in small_poly(&["x", "y", "z"])) {
        // sum over all six variable permutations is symmetric
        let perms = [
            ["x", "y", "z"], ["x", "z", "y"], ["y", "x", "z"],
            ["y", "z", "x"], ["z", "x", "y"], ["z", "y", "x"],
        ];
        let mut sym = Polynomial::zero();
        for perm in perms {
            let mut map = std::collections::BTreeMap::new();
            for (from, to) in ["x", "y", "z"].iter().zip(perm) {
                map.insert(from.to_string(), Polynomial::var(to));
            }
            sym = sym.add(&p.substitute(&map));
        }
        prop_assert!(sym.is_symmetric());
        let eb = sym.to_elementary_basis().unwrap();
        prop_assert_eq!(eb.expand_elementary(&["x", "y", "z"]).unwrap(), sym);
    }
}
