//! The theorem-verification registry: each identity or worked example the
//! library implements is certified by brute force at desk scale.
//!
//! Every target is a pure function from a range to pass/fail plus a first
//! counterexample. The registry is a data table, so `verify --all` runs the
//! whole battery and doubles as the acceptance gate.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::code::{code_count, decode, encode, enumerate_codes, SpCode};
use crate::convert::{Object, ObjectKind};
use crate::error::Error;
use crate::families::{
    binomial, carlitz_coefficient, gamma3, gamma_k, gamma_k_instantiate, poly_c3, poly_ck,
    poly_family, poly_n3, second_order_eulerian, second_order_row, Family,
};
use crate::grammar::{builtin, BuiltinGrammar};
use crate::parse::parse_poly;
use crate::poly::Polynomial;
use crate::stats::{scalar_stat, set_stat, SetStatId, StatId};
use crate::trapezoid::{
    code_from_dumont, dumont_from_riordan, enumerate_dumont, enumerate_matchings,
    enumerate_riordan, matching_from_riordan, riordan_from_dumont, riordan_from_matching,
    DumontWord, PerfectMatching, RiordanWord,
};
use crate::trees::{code_to_tree, enumerate_plane_trees, perm_to_tree, tree_to_code, tree_to_perm};
use crate::words::{enumerate_q, enumerate_q1, q_count, word_string, Letter};

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub range: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

type CheckResult = Result<(), String>;

fn fail(msg: impl Into<String>) -> CheckResult {
    Err(msg.into())
}

trait OrFail<T> {
    fn or_fail(self) -> Result<T, String>;
}

impl<T> OrFail<T> for Result<T, Error> {
    fn or_fail(self) -> Result<T, String> {
        self.map_err(|e| e.to_string())
    }
}

/// Parameters a check receives: inclusive order bound, inclusive arity
/// bound (only some checks use it), and the enumeration cap.
#[derive(Clone, Copy, Debug)]
pub struct CheckParams {
    pub max_n: u32,
    pub max_k: u32,
    pub cap: u64,
}

pub struct CheckInfo {
    pub id: &'static str,
    pub summary: &'static str,
    pub default_max_n: u32,
    pub default_max_k: u32,
    pub uses_k: bool,
    run: fn(CheckParams) -> CheckResult,
}

fn q_words(n: u32, cap: u64) -> Result<Vec<Vec<Letter>>, String> {
    Ok(enumerate_q(n, 2, cap).or_fail()?.map(|s| s.into_word()).collect())
}

fn dist(words: &[Vec<Letter>], s: StatId) -> BTreeMap<u64, u64> {
    let mut map = BTreeMap::new();
    for w in words {
        *map.entry(scalar_stat(w, s)).or_default() += 1;
    }
    map
}

fn set_key(word: &[Letter], s: SetStatId) -> Vec<u32> {
    set_stat(word, s).into_iter().collect()
}

// ---------------------------------------------------------------------------
// equidistribution checks
// ---------------------------------------------------------------------------

fn check_bona(p: CheckParams) -> CheckResult {
    for n in 1..=p.max_n {
        let words = q_words(n, p.cap)?;
        let asc = dist(&words, StatId::Asc);
        let plat = dist(&words, StatId::Plat);
        let des = dist(&words, StatId::Des);
        if asc != plat || plat != des {
            return fail(format!(
                "n={n}: asc {asc:?}, plat {plat:?}, des {des:?} differ"
            ));
        }
    }
    Ok(())
}

fn check_laprpd(p: CheckParams) -> CheckResult {
    for n in 1..=p.max_n {
        let words = q_words(n, p.cap)?;
        let lap = dist(&words, StatId::Lap);
        let eud = dist(&words, StatId::Eud);
        let rpd = dist(&words, StatId::Rpd);
        if lap != eud || eud != rpd {
            return fail(format!(
                "n={n}: lap {lap:?}, eud {eud:?}, rpd {rpd:?} differ"
            ));
        }
    }
    Ok(())
}

fn check_apud(p: CheckParams) -> CheckResult {
    for n in 1..=p.max_n {
        let words = q_words(n, p.cap)?;
        if dist(&words, StatId::Ap) != dist(&words, StatId::Ud) {
            return fail(format!("n={n}: ap and ud distributions differ"));
        }
        if dist(&words, StatId::Lap) != dist(&words, StatId::Eud) {
            return fail(format!("n={n}: lap and eud distributions differ"));
        }
        // The first-copy index cap in the up-down-pair definition never
        // excludes anything beyond what the missing right sentinel already
        // excludes: dropping it changes no value.
        for w in &words {
            let len = w.len();
            let mut uncapped = 0u64;
            let mut first = BTreeMap::new();
            let mut second = BTreeMap::new();
            for (i, &c) in w.iter().enumerate() {
                first.entry(c).or_insert(i + 1);
                second.insert(c, i + 1);
            }
            for (&v, &f) in &first {
                let s = second[&v];
                let pred = if f == 1 { 0 } else { w[f - 2] };
                if s < len && pred < v && w[s] < v {
                    uncapped += 1;
                }
            }
            if uncapped != scalar_stat(w, StatId::Ud) {
                return fail(format!(
                    "n={n}: index cap changes ud on {}",
                    word_string(w)
                ));
            }
        }
    }
    Ok(())
}

fn scaled_family(f: Family, n: u32, cap: u64) -> Result<Polynomial, String> {
    poly_family(f, n, cap).or_fail()
}

fn check_prop21(p: CheckParams) -> CheckResult {
    for n in 1..=p.max_n {
        let a_n = scaled_family(Family::A, n, p.cap)?;
        let b_n = scaled_family(Family::B, n, p.cap)?;
        let mut lap_counts: BTreeMap<u64, BigInt> = BTreeMap::new();
        let mut ap_counts: BTreeMap<u64, BigInt> = BTreeMap::new();
        for w in enumerate_q1(n, p.cap).or_fail()? {
            *lap_counts.entry(scalar_stat(&w, StatId::Lap)).or_default() += 1;
            *ap_counts.entry(scalar_stat(&w, StatId::Ap)).or_default() += 1;
        }
        let lap_poly = counts_to_poly(&lap_counts);
        let ap_poly = counts_to_poly(&ap_counts);
        let lhs = a_n.scale(BigInt::from(2u32).pow(n));
        if lhs != lap_poly {
            return fail(format!("n={n}: 2^n A_n = {lhs} but lap sum = {lap_poly}"));
        }
        if b_n != ap_poly {
            return fail(format!("n={n}: B_n = {b_n} but ap sum = {ap_poly}"));
        }
    }
    Ok(())
}

fn counts_to_poly(counts: &BTreeMap<u64, BigInt>) -> Polynomial {
    let mut acc = Polynomial::zero();
    for (&v, c) in counts {
        acc = acc.add(&Polynomial::monomial(c.clone(), &["x"], &[v as u32]));
    }
    acc
}

fn check_convo(p: CheckParams) -> CheckResult {
    let cap = p.cap;
    let m: Vec<Polynomial> = (0..=p.max_n)
        .map(|i| scaled_family(Family::M, i, cap))
        .collect::<Result<_, _>>()?;
    let n_polys: Vec<Polynomial> = (0..=p.max_n)
        .map(|i| scaled_family(Family::N, i, cap))
        .collect::<Result<_, _>>()?;
    for n in 1..=p.max_n {
        let mut conv_nn = Polynomial::zero();
        let mut conv_mn = Polynomial::zero();
        for i in 0..=n {
            let b = binomial(n as u64, i as u64);
            conv_nn = conv_nn.add(
                &n_polys[i as usize].mul(&n_polys[(n - i) as usize]).scale(b.clone()),
            );
            conv_mn = conv_mn.add(&m[i as usize].mul(&n_polys[(n - i) as usize]).scale(b));
        }
        let lhs_a = scaled_family(Family::A, n, cap)?.scale(BigInt::from(2u32).pow(n));
        if lhs_a != conv_nn {
            return fail(format!("n={n}: 2^n A_n = {lhs_a} but N*N convolution = {conv_nn}"));
        }
        let b_n = scaled_family(Family::B, n, cap)?;
        if b_n != conv_mn {
            return fail(format!("n={n}: B_n = {b_n} but M*N convolution = {conv_mn}"));
        }
    }
    Ok(())
}

fn check_families(p: CheckParams) -> CheckResult {
    for n in 0..=p.max_n {
        for f in [Family::A, Family::B, Family::M, Family::N, Family::C] {
            scaled_family(f, n, p.cap)?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// set-valued equidistribution and symmetry
// ---------------------------------------------------------------------------

type PairDist = BTreeMap<(Vec<u32>, Vec<u32>), u64>;

fn pair_dist(words: &[Vec<Letter>], a: SetStatId, b: SetStatId) -> PairDist {
    let mut map = PairDist::new();
    for w in words {
        *map.entry((set_key(w, a), set_key(w, b))).or_default() += 1;
    }
    map
}

fn check_pairs_equal(p: CheckParams, pairs: &[(SetStatId, SetStatId)]) -> CheckResult {
    for n in 1..=p.max_n {
        let words = q_words(n, p.cap)?;
        let base = pair_dist(&words, pairs[0].0, pairs[0].1);
        for &(a, b) in &pairs[1..] {
            if pair_dist(&words, a, b) != base {
                return fail(format!(
                    "n={n}: joint distribution of ({},{}) differs from ({},{})",
                    a.name(),
                    b.name(),
                    pairs[0].0.name(),
                    pairs[0].1.name()
                ));
            }
        }
    }
    Ok(())
}

fn check_thm34(p: CheckParams) -> CheckResult {
    check_pairs_equal(
        p,
        &[
            (SetStatId::Asc, SetStatId::Dasc),
            (SetStatId::Plat, SetStatId::Dplat),
            (SetStatId::Des, SetStatId::Ddes),
            (SetStatId::Asc, SetStatId::Uu),
            (SetStatId::Plat, SetStatId::Pasc),
            (SetStatId::Des, SetStatId::Dd),
        ],
    )
}

fn check_thm35(p: CheckParams) -> CheckResult {
    check_pairs_equal(
        p,
        &[
            (SetStatId::Asc, SetStatId::Lap),
            (SetStatId::Plat, SetStatId::Lap),
            (SetStatId::Des, SetStatId::Rpd),
            (SetStatId::Asc, SetStatId::Eud),
            (SetStatId::Plat, SetStatId::Rpd),
            (SetStatId::Des, SetStatId::Eud),
        ],
    )
}

fn check_thm36(p: CheckParams) -> CheckResult {
    let six = [
        SetStatId::Dasc,
        SetStatId::Dplat,
        SetStatId::Ddes,
        SetStatId::Pasc,
        SetStatId::Uu,
        SetStatId::Dd,
    ];
    for n in 1..=p.max_n {
        let words = q_words(n, p.cap)?;
        let singles: Vec<BTreeMap<Vec<u32>, u64>> = six
            .iter()
            .map(|&s| {
                let mut map = BTreeMap::new();
                for w in &words {
                    *map.entry(set_key(w, s)).or_default() += 1;
                }
                map
            })
            .collect();
        for (i, m) in singles.iter().enumerate().skip(1) {
            if m != &singles[0] {
                return fail(format!(
                    "n={n}: {} not equidistributed with {}",
                    six[i].name(),
                    six[0].name()
                ));
            }
        }
        for i in 0..six.len() {
            for j in i + 1..six.len() {
                let ab = pair_dist(&words, six[i], six[j]);
                let ba: PairDist =
                    pair_dist(&words, six[j], six[i]).into_iter().collect();
                let swapped: PairDist = ba.into_iter().map(|((a, b), c)| ((b, a), c)).collect();
                if ab != swapped {
                    return fail(format!(
                        "n={n}: joint ({},{}) not symmetric",
                        six[i].name(),
                        six[j].name()
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_thm37(p: CheckParams) -> CheckResult {
    let triples = [
        [SetStatId::Asc, SetStatId::Plat, SetStatId::Des],
        [SetStatId::Lap, SetStatId::Rpd, SetStatId::Eud],
        [SetStatId::Dasc, SetStatId::Pasc, SetStatId::Dd],
        [SetStatId::Ddes, SetStatId::Dplat, SetStatId::Uu],
    ];
    let perms3: [[usize; 3]; 6] =
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for n in 1..=p.max_n {
        let words = q_words(n, p.cap)?;
        for triple in triples {
            let mut base: BTreeMap<[Vec<u32>; 3], u64> = BTreeMap::new();
            for w in &words {
                let key = [set_key(w, triple[0]), set_key(w, triple[1]), set_key(w, triple[2])];
                *base.entry(key).or_default() += 1;
            }
            for perm in perms3 {
                let permuted: BTreeMap<[Vec<u32>; 3], u64> = base
                    .iter()
                    .map(|(k, &c)| {
                        ([k[perm[0]].clone(), k[perm[1]].clone(), k[perm[2]].clone()], c)
                    })
                    .fold(BTreeMap::new(), |mut acc, (k, c)| {
                        *acc.entry(k).or_default() += c;
                        acc
                    });
                if permuted != base {
                    return fail(format!(
                        "n={n}: triple ({},{},{}) not invariant under {perm:?}",
                        triple[0].name(),
                        triple[1].name(),
                        triple[2].name()
                    ));
                }
            }
        }
        // polynomial-level symmetry
        if !poly_c3(n, p.cap).or_fail()?.is_symmetric() {
            return fail(format!("n={n}: trivariate second-order polynomial not symmetric"));
        }
        if !poly_n3(n, p.cap).or_fail()?.is_symmetric() {
            return fail(format!("n={n}: trivariate lap/eud/rpd polynomial not symmetric"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// trees, trapezoidal words, matchings
// ---------------------------------------------------------------------------

fn check_qntn(p: CheckParams) -> CheckResult {
    for n in 1..=p.max_n {
        let mut by_words = Polynomial::zero();
        for w in q_words(n, p.cap)? {
            by_words = by_words.add(&Polynomial::monomial(
                1,
                &["x", "y", "z"],
                &[
                    scalar_stat(&w, StatId::Asc) as u32,
                    scalar_stat(&w, StatId::Plat) as u32,
                    scalar_stat(&w, StatId::Des) as u32,
                ],
            ));
        }
        let mut by_trees = Polynomial::zero();
        for c in enumerate_codes(n, p.cap).or_fail()? {
            let (exl, exm, exr) = code_to_tree(&c).or_fail()?.exterior_counts();
            by_trees = by_trees.add(&Polynomial::monomial(
                1,
                &["x", "y", "z"],
                &[exl as u32, exm as u32, exr as u32],
            ));
        }
        if by_words != by_trees {
            return fail(format!(
                "n={n}: exterior-count sum {by_trees} differs from statistic sum {by_words}"
            ));
        }
    }
    Ok(())
}

fn check_dumont_dt(p: CheckParams) -> CheckResult {
    for n in 1..=p.max_n {
        let mut by_dt = Polynomial::zero();
        for w in enumerate_dumont(n, p.cap).or_fail()? {
            let (d, nn, np) = w.stats();
            by_dt = by_dt.add(&Polynomial::monomial(
                1,
                &["x", "y", "z"],
                &[d as u32, nn as u32, np as u32],
            ));
        }
        let c3 = poly_c3(n, p.cap).or_fail()?;
        if by_dt != c3 {
            return fail(format!("n={n}: trapezoidal sum {by_dt} differs from {c3}"));
        }
    }
    Ok(())
}

fn check_dumont_rec(p: CheckParams) -> CheckResult {
    let xyz = parse_poly("x*y*z").or_fail()?;
    let mut current = xyz.clone();
    for n in 1..=p.max_n {
        if current != poly_c3(n, p.cap).or_fail()? {
            return fail(format!("n={n}: recurrence iterate {current} disagrees"));
        }
        let d = current.partial("x").add(&current.partial("y")).add(&current.partial("z"));
        current = xyz.mul(&d);
    }
    Ok(())
}

fn check_roundtrips(p: CheckParams) -> CheckResult {
    for n in 1..=p.max_n {
        for w in q_words(n, p.cap)? {
            let c = encode(&w).or_fail()?;
            if decode(&c).or_fail()? != w {
                return fail(format!("code round-trip fails on {}", word_string(&w)));
            }
            let t = perm_to_tree(&w).or_fail()?;
            if tree_to_perm(&t) != w {
                return fail(format!("tree round-trip fails on {}", word_string(&w)));
            }
            if tree_to_code(&t) != c {
                return fail(format!("tree code differs from word code on {}", word_string(&w)));
            }
        }
        for c in enumerate_codes(n, p.cap).or_fail()? {
            if encode(&decode(&c).or_fail()?).or_fail()? != c {
                return fail(format!("decode/encode fails on {c}"));
            }
            if tree_to_perm(&code_to_tree(&c).or_fail()?) != decode(&c).or_fail()? {
                return fail(format!("build-tree walk differs from decode on {c}"));
            }
        }
        for w in enumerate_dumont(n, p.cap).or_fail()? {
            let t = riordan_from_dumont(&w);
            if dumont_from_riordan(&t) != w {
                return fail(format!("entrywise recode round-trip fails on {:?}", w.entries()));
            }
            let c = code_from_dumont(&w);
            if crate::trapezoid::dumont_from_code(&c) != w {
                return fail(format!("dumont/code round-trip fails on {:?}", w.entries()));
            }
        }
        for t in enumerate_riordan(n, p.cap).or_fail()? {
            let m = matching_from_riordan(&t);
            if riordan_from_matching(&m).or_fail()? != t {
                return fail(format!("matching round-trip fails on {:?}", t.entries()));
            }
        }
    }
    Ok(())
}

fn check_cardinalities(p: CheckParams) -> CheckResult {
    for n in 1..=p.max_n {
        let expected = code_count(n);
        let q = enumerate_q(n, 2, p.cap).or_fail()?.count() as u128;
        let codes = enumerate_codes(n, p.cap).or_fail()?.count() as u128;
        let trees: std::collections::BTreeSet<_> = enumerate_codes(n, p.cap)
            .or_fail()?
            .map(|c| code_to_tree(&c).map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()?;
        let riordan = enumerate_riordan(n, p.cap).or_fail()?.count() as u128;
        let dumont = enumerate_dumont(n, p.cap).or_fail()?.count() as u128;
        let matchings = enumerate_matchings(n, p.cap).or_fail()?.len() as u128;
        for (name, got) in [
            ("stirling permutations", q),
            ("codes", codes),
            ("ternary trees", trees.len() as u128),
            ("riordan words", riordan),
            ("dumont words", dumont),
            ("matchings", matchings),
        ] {
            if got != expected {
                return fail(format!("n={n}: {name} count {got} != (2n-1)!! = {expected}"));
            }
        }
        if q_count(n, 2) != expected {
            return fail(format!("n={n}: closed-form count differs"));
        }
    }
    Ok(())
}

fn check_table1(p: CheckParams) -> CheckResult {
    for n in 1..=p.max_n {
        for w in q_words(n, p.cap)? {
            let c = encode(&w).or_fail()?;
            for s in SetStatId::ALL {
                if set_stat(&w, s) != crate::code::code_set_stat(&c, s) {
                    return fail(format!(
                        "n={n}: {} transport fails on {}",
                        s.name(),
                        word_string(&w)
                    ));
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// grammars and e-positivity
// ---------------------------------------------------------------------------

fn check_chen22(p: CheckParams) -> CheckResult {
    let g = builtin(BuiltinGrammar::G, None).or_fail()?;
    let h = builtin(BuiltinGrammar::H, None).or_fail()?;
    let mut subs = BTreeMap::new();
    subs.insert("u".to_string(), parse_poly("x+y+z").or_fail()?);
    subs.insert("v".to_string(), parse_poly("x*y+y*z+z*x").or_fail()?);
    subs.insert("w".to_string(), parse_poly("x*y*z").or_fail()?);
    let mut dg = Polynomial::var("x");
    let mut dh = Polynomial::var("w");
    for n in 1..=p.max_n {
        dg = g.derive(&dg);
        if n > 1 {
            dh = h.derive(&dh);
        }
        if dg != dh.substitute(&subs) {
            return fail(format!("n={n}: the two grammar routes disagree"));
        }
        // the grammar route through p1,p2,p3 is the same dynamics renamed
        let i = builtin(BuiltinGrammar::I, None).or_fail()?;
        let mut rename = BTreeMap::new();
        rename.insert("w".to_string(), Polynomial::var("p3"));
        rename.insert("v".to_string(), Polynomial::var("p1"));
        rename.insert("u".to_string(), Polynomial::var("p2").scale(3));
        if i.derive_n(&Polynomial::var("p3"), n - 1) != dh.substitute(&rename) {
            return fail(format!("n={n}: the renamed grammar disagrees"));
        }
    }
    Ok(())
}

fn check_mainthm51(p: CheckParams) -> CheckResult {
    let w1 = parse_poly("x+y+z").or_fail()?;
    let w3 = parse_poly("x*y*z").or_fail()?;
    for n in 1..=p.max_n {
        let n3 = poly_n3(n, p.cap).or_fail()?;
        let table = gamma3(n).or_fail()?;
        let mut rhs = Polynomial::zero();
        for (&(i, j, k), c) in table.entries() {
            let coeff = c * BigInt::from(3u32).pow(i);
            rhs = rhs.add(&w1.pow(j).mul(&w3.pow(k)).scale(coeff));
        }
        if n3 != rhs {
            return fail(format!("n={n}: 3^i-gamma aggregation {rhs} differs from {n3}"));
        }
        let eb = n3.to_elementary_basis().or_fail()?;
        if !eb.is_nonnegative() {
            return fail(format!("n={n}: negative coefficient in the elementary basis"));
        }
        for (exps, _) in eb.terms() {
            let e2 = eb.vars().iter().position(|v| v == "e2").map(|i| exps[i]).unwrap_or(0);
            if e2 != 0 {
                return fail(format!("n={n}: unexpected e2 power in {eb}"));
            }
        }
    }
    Ok(())
}

fn check_mainthm64(p: CheckParams) -> CheckResult {
    for n in 2..=p.max_n {
        let k_lo = (n.saturating_sub(2)).max(1);
        for k in k_lo..=p.max_k {
            if k + 2 < n {
                continue;
            }
            let table = gamma_k(n, k).or_fail()?;
            let inst = gamma_k_instantiate(&table, k).or_fail()?;
            let ck = poly_ck(n, k, p.cap).or_fail()?;
            if inst != ck {
                return fail(format!(
                    "n={n}, k={k}: elementary expansion differs from the enumerator"
                ));
            }
        }
    }
    Ok(())
}

fn check_epositivity(p: CheckParams) -> CheckResult {
    for n in 1..=p.max_n {
        let c3 = poly_c3(n, p.cap).or_fail()?;
        let eb = c3.to_elementary_basis().or_fail()?;
        if !eb.is_nonnegative() {
            return fail(format!("n={n}: negative coefficient in elementary basis of C"));
        }
        let table = gamma3(n).or_fail()?;
        let mut expected = Polynomial::zero();
        for (&(i, j, k), c) in table.entries() {
            expected = expected.add(&Polynomial::monomial(
                c.clone(),
                &["e1", "e2", "e3"],
                &[i, j, k],
            ));
        }
        if eb != expected {
            return fail(format!("n={n}: elementary basis {eb} differs from gamma table"));
        }
        // gamma entries count bounded-degree increasing plane trees by
        // degree profile: i deg-2, j deg-1, k leaves
        let mut tree_counts: BTreeMap<(u32, u32, u32), BigInt> = BTreeMap::new();
        for t in enumerate_plane_trees(n, 3, p.cap).or_fail()? {
            let prof = t.degree_profile();
            let at = |i: usize| prof.get(i).copied().unwrap_or(0) as u32;
            *tree_counts.entry((at(2), at(1), at(0))).or_default() += 1;
        }
        if &tree_counts != table.entries() {
            return fail(format!("n={n}: ternary gamma table differs from tree counts"));
        }
        if n >= 2 {
            let table_k = gamma_k(n, n).or_fail()?;
            let mut profile_counts: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
            for t in enumerate_plane_trees(n, n - 1, p.cap).or_fail()? {
                let prof: Vec<u32> = t.degree_profile().iter().map(|&x| x as u32).collect();
                *profile_counts.entry(prof).or_default() += 1;
            }
            if &profile_counts != table_k.entries() {
                return fail(format!("n={n}: profile gamma table differs from tree counts"));
            }
        }
    }
    Ok(())
}

fn check_gamman3(p: CheckParams) -> CheckResult {
    for n in 3..=p.max_n {
        let table = gamma_k(n, n).or_fail()?;
        let mut profile = vec![0u32; n as usize];
        profile[0] = 2;
        profile[1] = n - 3;
        profile[2] = 1;
        let got = table.get(&profile);
        let expected = BigInt::from(2u32).pow(n) - BigInt::from(2 * n);
        if got != expected {
            return fail(format!("n={n}: gamma{profile:?} = {got}, expected {expected}"));
        }
    }
    // boundary columns of the table: the path profile counts 1, the star
    // profile counts (n-1)!
    for n in 2..=p.max_n.min(7) {
        let table = gamma_k(n, n).or_fail()?;
        let mut path = vec![0u32; n as usize];
        path[0] = 1;
        path[1] = n - 1;
        if table.get(&path) != BigInt::from(1) {
            return fail(format!("n={n}: path profile {path:?} is not 1"));
        }
        let mut star = vec![0u32; n as usize];
        star[0] = n - 1;
        star[n as usize - 1] = 1;
        let factorial: BigInt = (1..n as u64).map(BigInt::from).product();
        if table.get(&star) != factorial {
            return fail(format!("n={n}: star profile {star:?} is not (n-1)!"));
        }
    }
    Ok(())
}

fn check_cn2(p: CheckParams) -> CheckResult {
    for n in 1..=p.max_n {
        let got = second_order_eulerian(n, 2);
        let expected = BigInt::from(2u32).pow(n + 1) - BigInt::from(2 * (n + 1));
        if got != expected {
            return fail(format!("n={n}: C(n,2) = {got}, expected {expected}"));
        }
    }
    Ok(())
}

fn check_propfinal(p: CheckParams) -> CheckResult {
    for n in 2..=p.max_n {
        let table = gamma_k(n, n).or_fail()?;
        let row = second_order_row(n - 1);
        for j in 1..n {
            let mut total = BigInt::zero();
            for (profile, c) in table.entries() {
                if profile[0] == j {
                    total += c;
                }
            }
            let expected = row.get(j as usize).cloned().unwrap_or_else(BigInt::zero);
            if total != expected {
                return fail(format!(
                    "n={n}, j={j}: gamma column sum {total} != second-order entry {expected}"
                ));
            }
        }
    }
    Ok(())
}

fn check_carlitz(p: CheckParams) -> CheckResult {
    for n in 1..=p.max_n {
        let coeffs = poly_family(Family::C, n, p.cap).or_fail()?.to_univariate("x").or_fail()?;
        for m in 0..=n {
            let got = coeffs.get(m as usize).cloned().unwrap_or_else(BigInt::zero);
            let expected = carlitz_coefficient(n, m);
            if got != expected {
                return fail(format!(
                    "n={n}, m={m}: coefficient {got} differs from alternating sum {expected}"
                ));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// property suites
// ---------------------------------------------------------------------------

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    fn poly(&mut self, vars: &[&str]) -> Polynomial {
        let mut acc = Polynomial::zero();
        for _ in 0..=self.below(5) {
            let coef = self.below(19) as i64 - 9;
            let exps: Vec<u32> = vars.iter().map(|_| self.below(4) as u32).collect();
            acc = acc.add(&Polynomial::monomial(coef, vars, &exps));
        }
        acc
    }
}

fn check_leibniz(_: CheckParams) -> CheckResult {
    let mut rng = XorShift(0x5eed_1234_dead_beef);
    let h = builtin(BuiltinGrammar::H, None).or_fail()?;
    let vars = ["u", "v", "w"];
    for round in 0..200 {
        let a = rng.poly(&vars);
        let b = rng.poly(&vars);
        let product_rule = h.derive(&a.mul(&b));
        let expanded = h.derive(&a).mul(&b).add(&a.mul(&h.derive(&b)));
        if product_rule != expanded {
            return fail(format!("round {round}: Leibniz fails for ({a}) * ({b})"));
        }
        let s = rng.below(7) as i64 - 3;
        let t = rng.below(7) as i64 - 3;
        let linear = h.derive(&a.scale(s).add(&b.scale(t)));
        if linear != h.derive(&a).scale(s).add(&h.derive(&b).scale(t)) {
            return fail(format!("round {round}: linearity fails"));
        }
        if a.partial("u").partial("v") != a.partial("v").partial("u") {
            return fail(format!("round {round}: partials do not commute on {a}"));
        }
        if a.substitute(&BTreeMap::new()) != a {
            return fail(format!("round {round}: identity substitution changes {a}"));
        }
    }
    Ok(())
}

fn check_elem_basis(p: CheckParams) -> CheckResult {
    for n in 1..=p.max_n {
        for (label, poly) in
            [("C", poly_c3(n, p.cap).or_fail()?), ("N", poly_n3(n, p.cap).or_fail()?)]
        {
            let eb = poly.to_elementary_basis().or_fail()?;
            let back = eb.expand_elementary(&["x", "y", "z"]).or_fail()?;
            if back != poly {
                return fail(format!("n={n}: {label} does not round-trip the basis change"));
            }
        }
    }
    Ok(())
}

fn check_convert_roundtrip(p: CheckParams) -> CheckResult {
    let kinds = [
        ObjectKind::Stirling,
        ObjectKind::Code,
        ObjectKind::Tree,
        ObjectKind::Riordan,
        ObjectKind::Dumont,
        ObjectKind::Matching,
    ];
    for n in 1..=p.max_n {
        for w in q_words(n, p.cap)? {
            let start = Object::Word(w.clone());
            for &k1 in &kinds {
                let mid = start.clone().convert(k1).or_fail()?;
                let text = mid.to_json_value().to_string();
                let parsed = Object::from_json_value(
                    k1,
                    &serde_json::from_str(&text).map_err(|e| e.to_string())?,
                )
                .or_fail()?;
                if parsed != mid {
                    return fail(format!("JSON round-trip fails at {:?} for {}", k1, text));
                }
                for &k2 in &kinds {
                    let there = mid.clone().convert(k2).or_fail()?;
                    let back = there.convert(ObjectKind::Stirling).or_fail()?;
                    if back != start {
                        return fail(format!(
                            "{:?} -> {:?} -> word fails on {}",
                            k1,
                            k2,
                            word_string(&w)
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// worked examples, reproduced bit-exactly
// ---------------------------------------------------------------------------

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> CheckResult {
    if got != want {
        return fail(format!("{what}: got {got:?}, want {want:?}"));
    }
    Ok(())
}

fn check_examples(_: CheckParams) -> CheckResult {
    let code = |t: &[(u32, u8)]| SpCode::new(t.to_vec()).or_fail();

    // code trace of 551443312662
    let stages: [(&[Letter], &[(u32, u8)]); 6] = [
        (&[1, 1], &[(0, 0)]),
        (&[1, 1, 2, 2], &[(0, 0), (1, 3)]),
        (&[1, 3, 3, 1, 2, 2], &[(0, 0), (1, 3), (1, 2)]),
        (&[1, 4, 4, 3, 3, 1, 2, 2], &[(0, 0), (1, 3), (1, 2), (3, 1)]),
        (&[5, 5, 1, 4, 4, 3, 3, 1, 2, 2], &[(0, 0), (1, 3), (1, 2), (3, 1), (1, 1)]),
        (
            &[5, 5, 1, 4, 4, 3, 3, 1, 2, 6, 6, 2],
            &[(0, 0), (1, 3), (1, 2), (3, 1), (1, 1), (2, 2)],
        ),
    ];
    for (word, tuples) in stages {
        expect("code trace", encode(word).or_fail()?, code(tuples)?)?;
        expect("decode trace", decode(&code(tuples)?).or_fail()?, word.to_vec())?;
    }

    // thirteen set-valued statistics of one permutation
    let sigma: Vec<Letter> = vec![7, 7, 4, 4, 1, 2, 2, 3, 3, 1, 5, 6, 6, 5];
    let c7 = code(&[(0, 0), (1, 2), (2, 3), (1, 1), (1, 3), (5, 2), (4, 1)])?;
    expect("code of the example word", encode(&sigma).or_fail()?, c7.clone())?;
    let sets: [(SetStatId, &[u32]); 13] = [
        (SetStatId::Asc, &[2, 3, 5, 6, 7]),
        (SetStatId::Plat, &[2, 3, 4, 6, 7]),
        (SetStatId::Des, &[3, 4, 5, 6, 7]),
        (SetStatId::Lap, &[2, 3, 6, 7]),
        (SetStatId::Rpd, &[3, 4, 6, 7]),
        (SetStatId::Eud, &[3, 5, 6, 7]),
        (SetStatId::Dasc, &[5]),
        (SetStatId::Dplat, &[4]),
        (SetStatId::Ddes, &[5]),
        (SetStatId::Pasc, &[2]),
        (SetStatId::Apd, &[3, 6]),
        (SetStatId::Uu, &[2]),
        (SetStatId::Dd, &[4]),
    ];
    for (s, want) in sets {
        let want: std::collections::BTreeSet<u32> = want.iter().copied().collect();
        expect(&format!("{} of the example word", s.name()), set_stat(&sigma, s), want.clone())?;
        expect(&format!("{} transported", s.name()), crate::code::code_set_stat(&c7, s), want)?;
    }

    // tuple switch and its effect
    let switched = c7.switch(2, 3);
    expect(
        "switched code",
        switched.clone(),
        code(&[(0, 0), (1, 3), (2, 2), (1, 1), (1, 2), (5, 3), (4, 1)])?,
    )?;
    expect(
        "switched word",
        decode(&switched).or_fail()?,
        vec![7, 7, 4, 4, 1, 5, 5, 6, 6, 1, 2, 3, 3, 2],
    )?;

    // matching growth trace
    let t = RiordanWord::new(vec![1, 1, 1, 3, 2, 10]).or_fail()?;
    let match_stages: [&[(u32, u32)]; 6] = [
        &[(1, 2)],
        &[(1, 4), (2, 3)],
        &[(1, 6), (2, 5), (3, 4)],
        &[(3, 8), (1, 7), (2, 6), (4, 5)],
        &[(2, 10), (4, 9), (1, 8), (3, 7), (5, 6)],
        &[(10, 12), (2, 11), (4, 9), (1, 8), (3, 7), (5, 6)],
    ];
    for (len, blocks) in match_stages.iter().enumerate() {
        let prefix = RiordanWord::new(t.entries()[..=len].to_vec()).or_fail()?;
        expect(
            "matching trace",
            matching_from_riordan(&prefix),
            PerfectMatching::new(blocks.to_vec()).or_fail()?,
        )?;
    }

    // signed trapezoidal word trace
    let w = DumontWord::new(vec![0, 0, 0, -1, 1, 5, 1]).or_fail()?;
    let code_stages: [&[(u32, u8)]; 7] = [
        &[(0, 0)],
        &[(0, 0), (1, 1)],
        &[(0, 0), (1, 1), (2, 1)],
        &[(0, 0), (1, 1), (2, 1), (1, 2)],
        &[(0, 0), (1, 1), (2, 1), (1, 2), (1, 3)],
        &[(0, 0), (1, 1), (2, 1), (1, 2), (1, 3), (5, 3)],
        &[(0, 0), (1, 1), (2, 1), (1, 2), (1, 3), (5, 3), (5, 1)],
    ];
    for (len, tuples) in code_stages.iter().enumerate() {
        let prefix = DumontWord::new(w.entries()[..=len].to_vec()).or_fail()?;
        expect("signed word trace", code_from_dumont(&prefix), code(tuples)?)?;
    }

    // figure trees
    for (tuples, word) in [
        (vec![(0, 0), (1, 1)], vec![2, 2, 1, 1]),
        (vec![(0, 0), (1, 2)], vec![1, 2, 2, 1]),
        (vec![(0, 0), (1, 3)], vec![1, 1, 2, 2]),
        (vec![(0, 0), (1, 1), (1, 3), (3, 1)], vec![2, 2, 1, 1, 4, 4, 3, 3]),
    ] {
        let c = code(&tuples)?;
        expect("figure tree word", tree_to_perm(&code_to_tree(&c).or_fail()?), word)?;
    }

    // up-down pair example values
    expect("ud(123321)", scalar_stat(&[1, 2, 3, 3, 2, 1], StatId::Ud), 2)?;
    expect("eud(123321)", scalar_stat(&[1, 2, 3, 3, 2, 1], StatId::Eud), 3)?;
    expect("ud(331221)", scalar_stat(&[3, 3, 1, 2, 2, 1], StatId::Ud), 2)?;
    expect("eud(331221)", scalar_stat(&[3, 3, 1, 2, 2, 1], StatId::Eud), 2)?;

    // j-plateau example on a 4-Stirling word
    let four: Vec<Letter> = vec![1, 1, 1, 2, 2, 3, 3, 3, 3, 2, 2, 1];
    use crate::stats::{j_stat, JKind};
    expect("plat_1", j_stat(&four, 4, 1, JKind::Plateau).or_fail()?, 3)?;
    expect("plat_2", j_stat(&four, 4, 2, JKind::Plateau).or_fail()?, 2)?;
    expect("plat_3", j_stat(&four, 4, 3, JKind::Plateau).or_fail()?, 2)?;

    // small polynomial values
    let p = |s: &str| parse_poly(s).or_fail();
    expect("C1", poly_family(Family::C, 1, 1 << 20).or_fail()?, p("x")?)?;
    expect("C2", poly_family(Family::C, 2, 1 << 20).or_fail()?, p("x + 2*x^2")?)?;
    expect("C3", poly_family(Family::C, 3, 1 << 20).or_fail()?, p("x + 8*x^2 + 6*x^3")?)?;

    // displayed derivative iterates
    let i = builtin(BuiltinGrammar::I, None).or_fail()?;
    let p3 = Polynomial::var("p3");
    expect("first iterate", i.derive_n(&p3, 1), p("p1*p3")?)?;
    expect("second iterate", i.derive_n(&p3, 2), p("p1^2*p3 + 6*p2*p3^2")?)?;
    expect("third iterate", i.derive_n(&p3, 3), p("p1^3*p3 + 24*p1*p2*p3^2 + 6*p3^3")?)?;

    // elementary-basis table for the lap/eud/rpd enumerator, orders 1..6
    let n_table = [
        "e3",
        "e1*e3",
        "e1^2*e3 + 6*e3^2",
        "e1^3*e3 + 24*e1*e3^2 + 6*e3^3",
        "e1^4*e3 + 66*e1^2*e3^2 + 42*e1*e3^3 + 144*e3^3",
        "e1^5*e3 + 156*e1^3*e3^2 + 192*e1^2*e3^3 + 1224*e1*e3^3 + 540*e3^4",
    ];
    for (idx, want) in n_table.iter().enumerate() {
        let n = idx as u32 + 1;
        let eb = poly_n3(n, 1 << 20).or_fail()?.to_elementary_basis().or_fail()?;
        expect(&format!("N_{n} in the elementary basis"), eb, p(want)?)?;
    }

    // displayed window expansions for the multivariate family
    let t4 = gamma_k(4, 4).or_fail()?;
    let want4: BTreeMap<Vec<u32>, BigInt> = [
        (vec![1, 3, 0, 0], 1.into()),
        (vec![2, 1, 1, 0], 8.into()),
        (vec![3, 0, 0, 1], 6.into()),
    ]
    .into_iter()
    .collect();
    expect("order-4 window expansion", t4.entries().clone(), want4)?;
    let t5 = gamma_k(5, 5).or_fail()?;
    let want5: BTreeMap<Vec<u32>, BigInt> = [
        (vec![1, 4, 0, 0, 0], 1.into()),
        (vec![2, 2, 1, 0, 0], 22.into()),
        (vec![3, 0, 2, 0, 0], 16.into()),
        (vec![3, 1, 0, 1, 0], 42.into()),
        (vec![4, 0, 0, 0, 1], 24.into()),
    ]
    .into_iter()
    .collect();
    expect("order-5 window expansion", t5.entries().clone(), want5)?;

    // the eight-element listing of the mixed-multiplicity family
    let q1: std::collections::BTreeSet<Vec<Letter>> =
        enumerate_q1(2, 1 << 20).or_fail()?.collect();
    let listed: std::collections::BTreeSet<Vec<Letter>> = [
        vec![1, 2, 2, 3, 3],
        vec![1, 2, 3, 3, 2],
        vec![1, 3, 3, 2, 2],
        vec![3, 3, 1, 2, 2],
        vec![2, 2, 1, 3, 3],
        vec![2, 2, 3, 3, 1],
        vec![2, 3, 3, 2, 1],
        vec![3, 3, 2, 2, 1],
    ]
    .into_iter()
    .collect();
    expect("mixed-multiplicity listing", q1, listed)?;

    Ok(())
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

pub fn checks() -> &'static [CheckInfo] {
    const CHECKS: &[CheckInfo] = &[
        CheckInfo { id: "bona", summary: "ascents, plateaux and descents are equidistributed", default_max_n: 6, default_max_k: 0, uses_k: false, run: check_bona },
        CheckInfo { id: "laprpd", summary: "lap, eud and rpd are equidistributed", default_max_n: 6, default_max_k: 0, uses_k: false, run: check_laprpd },
        CheckInfo { id: "apud", summary: "ap matches ud and lap matches eud", default_max_n: 6, default_max_k: 0, uses_k: false, run: check_apud },
        CheckInfo { id: "prop21", summary: "scaled Eulerian and type-B polynomials over the mixed family", default_max_n: 4, default_max_k: 0, uses_k: false, run: check_prop21 },
        CheckInfo { id: "convo", summary: "binomial convolutions for 2^n A_n and B_n", default_max_n: 6, default_max_k: 0, uses_k: false, run: check_convo },
        CheckInfo { id: "families", summary: "A, B, M, N, C recurrences agree with enumeration", default_max_n: 6, default_max_k: 0, uses_k: false, run: check_families },
        CheckInfo { id: "thm34", summary: "six bivariate set-valued pairs share one joint distribution", default_max_n: 6, default_max_k: 0, uses_k: false, run: check_thm34 },
        CheckInfo { id: "thm35", summary: "six pairs against lap, rpd, eud share one joint distribution", default_max_n: 6, default_max_k: 0, uses_k: false, run: check_thm35 },
        CheckInfo { id: "thm36", summary: "the six pattern statistics are equidistributed and pairwise symmetric", default_max_n: 6, default_max_k: 0, uses_k: false, run: check_thm36 },
        CheckInfo { id: "thm37", summary: "triple set-valued distributions are symmetric", default_max_n: 6, default_max_k: 0, uses_k: false, run: check_thm37 },
        CheckInfo { id: "qntn", summary: "exterior slot counts match asc, plat, des", default_max_n: 6, default_max_k: 0, uses_k: false, run: check_qntn },
        CheckInfo { id: "dumont_dt", summary: "dist/nneg/npos over signed trapezoidal words", default_max_n: 6, default_max_k: 0, uses_k: false, run: check_dumont_dt },
        CheckInfo { id: "dumont_rec", summary: "the xyz(dx+dy+dz) recurrence", default_max_n: 6, default_max_k: 0, uses_k: false, run: check_dumont_rec },
        CheckInfo { id: "chen22", summary: "the two grammar routes for the trivariate polynomial", default_max_n: 8, default_max_k: 0, uses_k: false, run: check_chen22 },
        CheckInfo { id: "mainthm51", summary: "3^i gamma expansion of the lap/eud/rpd enumerator", default_max_n: 6, default_max_k: 0, uses_k: false, run: check_mainthm51 },
        CheckInfo { id: "mainthm64", summary: "elementary expansion of the multivariate enumerator", default_max_n: 4, default_max_k: 4, uses_k: true, run: check_mainthm64 },
        CheckInfo { id: "gamman3", summary: "gamma(n; 2, n-3, 1, 0, ...) = 2^n - 2n", default_max_n: 10, default_max_k: 0, uses_k: false, run: check_gamman3 },
        CheckInfo { id: "cn2", summary: "second column of the second-order triangle", default_max_n: 10, default_max_k: 0, uses_k: false, run: check_cn2 },
        CheckInfo { id: "propfinal", summary: "triangle entries as gamma column sums", default_max_n: 7, default_max_k: 0, uses_k: false, run: check_propfinal },
        CheckInfo { id: "carlitz", summary: "alternating binomial/Stirling form of the coefficients", default_max_n: 6, default_max_k: 0, uses_k: false, run: check_carlitz },
        CheckInfo { id: "roundtrips", summary: "all bijections round-trip on their full domains", default_max_n: 6, default_max_k: 0, uses_k: false, run: check_roundtrips },
        CheckInfo { id: "cardinalities", summary: "every family has (2n-1)!! members", default_max_n: 7, default_max_k: 0, uses_k: false, run: check_cardinalities },
        CheckInfo { id: "table1", summary: "set-valued statistics transport through the code", default_max_n: 6, default_max_k: 0, uses_k: false, run: check_table1 },
        CheckInfo { id: "epositivity", summary: "elementary-basis coefficients are tree counts", default_max_n: 7, default_max_k: 0, uses_k: false, run: check_epositivity },
        CheckInfo { id: "leibniz", summary: "derivation laws on randomized polynomials", default_max_n: 0, default_max_k: 0, uses_k: false, run: check_leibniz },
        CheckInfo { id: "elem_basis", summary: "elementary basis conversion round-trips", default_max_n: 6, default_max_k: 0, uses_k: false, run: check_elem_basis },
        CheckInfo { id: "convert_roundtrip", summary: "object conversions and JSON round-trip", default_max_n: 4, default_max_k: 0, uses_k: false, run: check_convert_roundtrip },
        CheckInfo { id: "examples", summary: "worked examples reproduced bit-exactly", default_max_n: 0, default_max_k: 0, uses_k: false, run: check_examples },
    ];
    CHECKS
}

pub fn find(id: &str) -> Result<&'static CheckInfo, Error> {
    checks()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownName(format!("theorem id {id:?}")))
}

fn range_string(info: &CheckInfo, params: CheckParams) -> String {
    if info.default_max_n == 0 {
        "fixed instances".to_string()
    } else if info.uses_k {
        format!("n <= {}, k <= {}", params.max_n, params.max_k)
    } else {
        format!("n <= {}", params.max_n)
    }
}

/// Run one registered check; `max_n`/`max_k` default from the registry.
pub fn run(
    id: &str,
    max_n: Option<u32>,
    max_k: Option<u32>,
    cap: u64,
) -> Result<VerificationReport, Error> {
    let info = find(id)?;
    let params = CheckParams {
        max_n: max_n.unwrap_or(info.default_max_n),
        max_k: max_k.unwrap_or(info.default_max_k),
        cap,
    };
    let outcome = (info.run)(params);
    Ok(VerificationReport {
        id: info.id.to_string(),
        range: range_string(info, params),
        pass: outcome.is_ok(),
        counterexample: outcome.err(),
    })
}

/// Run the entire registry at default ranges, in registry order.
pub fn run_all(cap: u64) -> Vec<VerificationReport> {
    checks()
        .iter()
        .map(|info| run(info.id, None, None, cap).expect("registered id"))
        .collect()
}
