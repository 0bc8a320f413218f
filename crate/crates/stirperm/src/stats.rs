//! Scalar and set-valued word statistics.
//!
//! Every statistic scans with explicit virtual zero sentinels; which
//! sentinels a statistic activates is recorded in the
//! [`boundary_convention`] table rather than hard-wired into each scanner,
//! so tests can enumerate the conventions. Set-valued statistics collect
//! letter values, not positions, and are defined on ordinary Stirling
//! permutations (two copies of each letter).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::words::{BoundaryConvention, Letter};

/// Scalar statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum StatId {
    Asc,
    Des,
    Plat,
    Ap,
    Pd,
    Lap,
    Rpd,
    Ud,
    Eud,
    Dasc,
    Dplat,
    Ddes,
    Pasc,
    Apd,
    Uu,
    Dd,
}

impl StatId {
    pub const ALL: [StatId; 16] = [
        StatId::Asc,
        StatId::Des,
        StatId::Plat,
        StatId::Ap,
        StatId::Pd,
        StatId::Lap,
        StatId::Rpd,
        StatId::Ud,
        StatId::Eud,
        StatId::Dasc,
        StatId::Dplat,
        StatId::Ddes,
        StatId::Pasc,
        StatId::Apd,
        StatId::Uu,
        StatId::Dd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StatId::Asc => "asc",
            StatId::Des => "des",
            StatId::Plat => "plat",
            StatId::Ap => "ap",
            StatId::Pd => "pd",
            StatId::Lap => "lap",
            StatId::Rpd => "rpd",
            StatId::Ud => "ud",
            StatId::Eud => "eud",
            StatId::Dasc => "dasc",
            StatId::Dplat => "dplat",
            StatId::Ddes => "ddes",
            StatId::Pasc => "pasc",
            StatId::Apd => "apd",
            StatId::Uu => "uu",
            StatId::Dd => "dd",
        }
    }

    pub fn parse(s: &str) -> Result<StatId> {
        StatId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownName(format!("statistic {s:?}")))
    }
}

/// Set-valued statistics (value sets over the letters of the word).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SetStatId {
    Asc,
    Plat,
    Des,
    Lap,
    Rpd,
    Eud,
    Dasc,
    Dplat,
    Ddes,
    Pasc,
    Apd,
    Uu,
    Dd,
}

impl SetStatId {
    pub const ALL: [SetStatId; 13] = [
        SetStatId::Asc,
        SetStatId::Plat,
        SetStatId::Des,
        SetStatId::Lap,
        SetStatId::Rpd,
        SetStatId::Eud,
        SetStatId::Dasc,
        SetStatId::Dplat,
        SetStatId::Ddes,
        SetStatId::Pasc,
        SetStatId::Apd,
        SetStatId::Uu,
        SetStatId::Dd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SetStatId::Asc => "Asc",
            SetStatId::Plat => "Plat",
            SetStatId::Des => "Des",
            SetStatId::Lap => "Lap",
            SetStatId::Rpd => "Rpd",
            SetStatId::Eud => "Eud",
            SetStatId::Dasc => "Dasc",
            SetStatId::Dplat => "Dplat",
            SetStatId::Ddes => "Ddes",
            SetStatId::Pasc => "Pasc",
            SetStatId::Apd => "Apd",
            SetStatId::Uu => "Uu",
            SetStatId::Dd => "Dd",
        }
    }

    pub fn parse(s: &str) -> Result<SetStatId> {
        SetStatId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownName(format!("set statistic {s:?}")))
    }
}

/// Which sentinels each scalar statistic activates.
///
/// asc/des/plat compare against both virtual zeros; ap/pd are interior
/// only; lap takes the left zero, rpd the right; ud takes the left zero
/// and caps the first-copy index; eud takes both. The pattern statistics
/// of the set display run under both sentinels, except apd whose left
/// sentinel is disabled (the worked value set forces this reading).
pub fn boundary_convention(s: StatId) -> BoundaryConvention {
    let (left_zero, right_zero) = match s {
        StatId::Asc | StatId::Des | StatId::Plat => (true, true),
        StatId::Ap | StatId::Pd => (false, false),
        StatId::Lap => (true, false),
        StatId::Rpd => (false, true),
        StatId::Ud => (true, false),
        StatId::Eud => (true, true),
        StatId::Apd => (false, true),
        StatId::Dasc
        | StatId::Dplat
        | StatId::Ddes
        | StatId::Pasc
        | StatId::Uu
        | StatId::Dd => (true, true),
    };
    BoundaryConvention { left_zero, right_zero }
}

/// Value at 1-based position `pos`, where 0 and len+1 address the virtual
/// sentinels. `None` means the position is inaccessible under `conv`.
fn at(word: &[Letter], pos: isize, conv: BoundaryConvention) -> Option<i64> {
    let len = word.len() as isize;
    if pos == 0 {
        return conv.left_zero.then_some(0);
    }
    if pos == len + 1 {
        return conv.right_zero.then_some(0);
    }
    if pos >= 1 && pos <= len {
        Some(word[(pos - 1) as usize] as i64)
    } else {
        None
    }
}

/// Comparison count over slots i = 0..=len of (pos i, pos i+1).
fn comparisons(word: &[Letter], conv: BoundaryConvention, rel: impl Fn(i64, i64) -> bool) -> u64 {
    let len = word.len() as isize;
    (0..=len)
        .filter(|&i| {
            matches!((at(word, i, conv), at(word, i + 1, conv)), (Some(a), Some(b)) if rel(a, b))
        })
        .count() as u64
}

/// Plateau entries i with pred < sigma_i = sigma_{i+1}.
fn ascent_plateaus(word: &[Letter], conv: BoundaryConvention) -> u64 {
    let len = word.len() as isize;
    (1..len)
        .filter(|&i| {
            word[(i - 1) as usize] == word[i as usize]
                && matches!(at(word, i - 1, conv), Some(p) if p < word[(i - 1) as usize] as i64)
        })
        .count() as u64
}

/// Plateau entries i with sigma_{i-1} = sigma_i > succ.
fn plateau_descents(word: &[Letter], conv: BoundaryConvention) -> u64 {
    let len = word.len() as isize;
    (2..=len)
        .filter(|&i| {
            word[(i - 2) as usize] == word[(i - 1) as usize]
                && matches!(at(word, i + 1, conv), Some(s) if s < word[(i - 1) as usize] as i64)
        })
        .count() as u64
}

/// 1-based (first, second) occurrence of each letter. Panics unless every
/// letter appears exactly twice.
fn letter_pairs(word: &[Letter]) -> Vec<(usize, usize)> {
    let n = word.iter().max().copied().unwrap_or(0) as usize;
    assert_eq!(word.len(), 2 * n, "pair statistics need two copies of each letter");
    let mut first = vec![0usize; n];
    let mut second = vec![0usize; n];
    for (i, &c) in word.iter().enumerate() {
        let c = (c - 1) as usize;
        if first[c] == 0 {
            first[c] = i + 1;
        } else {
            assert_eq!(second[c], 0, "pair statistics need two copies of each letter");
            second[c] = i + 1;
        }
    }
    first.into_iter().zip(second).collect()
}

/// Up-down pairs: pred of the first copy below the letter, successor of the
/// second copy below the letter, first-copy index at most `index_cap`.
fn up_down_pairs(word: &[Letter], conv: BoundaryConvention, index_cap: usize) -> u64 {
    letter_pairs(word)
        .into_iter()
        .enumerate()
        .filter(|&(v, (f, s))| {
            let v = (v + 1) as i64;
            f <= index_cap
                && matches!(at(word, f as isize - 1, conv), Some(p) if p < v)
                && matches!(at(word, s as isize + 1, conv), Some(q) if q < v)
        })
        .count() as u64
}

/// Scalar statistic of a word under the statistic's boundary convention.
///
/// asc/des/plat/ap/pd/lap/rpd are defined for any multipermutation; the
/// remaining ones need two copies of each letter.
pub fn scalar_stat(word: &[Letter], s: StatId) -> u64 {
    let conv = boundary_convention(s);
    let len = word.len();
    match s {
        StatId::Asc => comparisons(word, conv, |a, b| a < b),
        StatId::Des => comparisons(word, conv, |a, b| a > b),
        StatId::Plat => comparisons(word, conv, |a, b| a == b),
        StatId::Ap | StatId::Lap => ascent_plateaus(word, conv),
        StatId::Pd | StatId::Rpd => plateau_descents(word, conv),
        StatId::Ud => up_down_pairs(word, conv, len.saturating_sub(2)),
        StatId::Eud => up_down_pairs(word, conv, len.saturating_sub(1)),
        StatId::Dasc
        | StatId::Dplat
        | StatId::Ddes
        | StatId::Pasc
        | StatId::Apd
        | StatId::Uu
        | StatId::Dd => {
            let set_id = match s {
                StatId::Dasc => SetStatId::Dasc,
                StatId::Dplat => SetStatId::Dplat,
                StatId::Ddes => SetStatId::Ddes,
                StatId::Pasc => SetStatId::Pasc,
                StatId::Apd => SetStatId::Apd,
                StatId::Uu => SetStatId::Uu,
                _ => SetStatId::Dd,
            };
            set_stat(word, set_id).len() as u64
        }
    }
}

/// Set-valued statistic of an ordinary Stirling permutation.
pub fn set_stat(word: &[Letter], s: SetStatId) -> BTreeSet<Letter> {
    let both = BoundaryConvention { left_zero: true, right_zero: true };
    let len = word.len() as isize;
    let w = |i: isize| word[(i - 1) as usize];
    let mut out = BTreeSet::new();
    match s {
        SetStatId::Asc => {
            for i in 1..=len {
                if matches!(at(word, i - 1, both), Some(p) if p < w(i) as i64) {
                    out.insert(w(i));
                }
            }
        }
        SetStatId::Plat => {
            for i in 1..len {
                if w(i) == w(i + 1) {
                    out.insert(w(i));
                }
            }
        }
        SetStatId::Des => {
            for i in 1..=len {
                if matches!(at(word, i + 1, both), Some(q) if q < w(i) as i64) {
                    out.insert(w(i));
                }
            }
        }
        SetStatId::Lap => {
            for i in 1..len {
                if w(i) == w(i + 1)
                    && matches!(at(word, i - 1, both), Some(p) if p < w(i) as i64)
                {
                    out.insert(w(i));
                }
            }
        }
        SetStatId::Rpd => {
            for i in 2..=len {
                if w(i - 1) == w(i)
                    && matches!(at(word, i + 1, both), Some(q) if q < w(i) as i64)
                {
                    out.insert(w(i));
                }
            }
        }
        SetStatId::Eud | SetStatId::Uu | SetStatId::Dd => {
            for (v, (f, s_idx)) in letter_pairs(word).into_iter().enumerate() {
                let v = (v + 1) as Letter;
                let pred = at(word, f as isize - 1, both).expect("both sentinels");
                let succ = at(word, s_idx as isize + 1, both).expect("both sentinels");
                let keep = match s {
                    SetStatId::Eud => pred < v as i64 && succ < v as i64,
                    SetStatId::Uu => pred < v as i64 && succ > v as i64,
                    _ => pred > v as i64 && succ < v as i64,
                };
                if keep {
                    out.insert(v);
                }
            }
        }
        SetStatId::Dasc => {
            for i in 1..=len {
                if matches!(at(word, i - 1, both), Some(p) if p < w(i) as i64)
                    && matches!(at(word, i + 1, both), Some(q) if q > w(i) as i64)
                {
                    out.insert(w(i));
                }
            }
        }
        SetStatId::Dplat => {
            for i in 1..len {
                if w(i) == w(i + 1)
                    && matches!(at(word, i - 1, both), Some(p) if p > w(i) as i64)
                {
                    out.insert(w(i));
                }
            }
        }
        SetStatId::Ddes => {
            for i in 1..=len {
                if matches!(at(word, i - 1, both), Some(p) if p > w(i) as i64)
                    && matches!(at(word, i + 1, both), Some(q) if q < w(i) as i64)
                {
                    out.insert(w(i));
                }
            }
        }
        SetStatId::Pasc => {
            for i in 2..=len {
                if w(i - 1) == w(i)
                    && matches!(at(word, i + 1, both), Some(q) if q > w(i) as i64)
                {
                    out.insert(w(i));
                }
            }
        }
        SetStatId::Apd => {
            // Left sentinel off: the predecessor must be a real entry.
            let conv = BoundaryConvention { left_zero: false, right_zero: true };
            for i in 2..len {
                if w(i) == w(i + 1)
                    && w(i - 1) < w(i)
                    && matches!(at(word, i + 2, conv), Some(q) if q < w(i) as i64)
                {
                    out.insert(w(i));
                }
            }
        }
    }
    out
}

/// A j-statistic query kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JKind {
    Plateau,
    Ascent,
    Descent,
}

/// Count of j-plateaux / j-ascents / j-descents of a k-Stirling word: the
/// index must be a plateau (ascent, descent) whose entry has exactly j-1
/// earlier indices holding the same value.
pub fn j_stat(word: &[Letter], k: u32, j: u32, kind: JKind) -> Result<u64> {
    if j == 0 || j > k {
        return Err(Error::Domain(format!("j={j} out of range for k={k}")));
    }
    let both = BoundaryConvention { left_zero: true, right_zero: true };
    let len = word.len() as isize;
    let seen_before = |i: isize| -> u32 {
        // occurrences of word[i] strictly before position i (1-based)
        let v = word[(i - 1) as usize];
        word[..(i - 1) as usize].iter().filter(|&&c| c == v).count() as u32
    };
    let count = match kind {
        JKind::Plateau => (1..len)
            .filter(|&i| word[(i - 1) as usize] == word[i as usize] && seen_before(i) == j - 1)
            .count(),
        JKind::Ascent => (0..=len)
            .filter(|&i| {
                let a = at(word, i, both).expect("both sentinels");
                let b = at(word, i + 1, both).expect("both sentinels");
                if a >= b {
                    return false;
                }
                let occ = if i == 0 { 0 } else { seen_before(i) };
                occ == j - 1
            })
            .count(),
        JKind::Descent => (1..=len)
            .filter(|&i| {
                let a = at(word, i, both).expect("both sentinels");
                let b = at(word, i + 1, both).expect("both sentinels");
                a > b && seen_before(i) == j - 1
            })
            .count(),
    };
    Ok(count as u64)
}

/// Type-B descent count of a signed permutation, with pi(0) = 0.
pub fn des_type_b(pi: &[i64]) -> u64 {
    let get = |i: usize| if i == 0 { 0 } else { pi[i - 1] };
    (0..pi.len()).filter(|&i| get(i) > get(i + 1)).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vals: &[Letter]) -> BTreeSet<Letter> {
        vals.iter().copied().collect()
    }

    #[test]
    fn up_down_pair_examples() {
        assert_eq!(scalar_stat(&[1, 2, 3, 3, 2, 1], StatId::Ud), 2);
        assert_eq!(scalar_stat(&[1, 2, 3, 3, 2, 1], StatId::Eud), 3);
        assert_eq!(scalar_stat(&[3, 3, 1, 2, 2, 1], StatId::Ud), 2);
        assert_eq!(scalar_stat(&[3, 3, 1, 2, 2, 1], StatId::Eud), 2);
        assert_eq!(scalar_stat(&[1, 1], StatId::Ud), 0);
        assert_eq!(scalar_stat(&[1, 1], StatId::Eud), 1);
    }

    #[test]
    fn lap_eud_rpd_on_q2() {
        for (word, lap, eud, rpd) in [
            (vec![1, 1, 2, 2], 2, 1, 1),
            (vec![1, 2, 2, 1], 1, 2, 1),
            (vec![2, 2, 1, 1], 1, 1, 2),
        ] {
            assert_eq!(scalar_stat(&word, StatId::Lap), lap, "{word:?}");
            assert_eq!(scalar_stat(&word, StatId::Eud), eud, "{word:?}");
            assert_eq!(scalar_stat(&word, StatId::Rpd), rpd, "{word:?}");
        }
        assert_eq!(scalar_stat(&[2, 2, 1, 1], StatId::Lap), 1);
        assert_eq!(scalar_stat(&[1, 1], StatId::Ap), 0);
        assert_eq!(scalar_stat(&[1, 1], StatId::Lap), 1);
    }

    #[test]
    fn asc_des_plat_sum() {
        for word in [vec![1, 1], vec![1, 2, 2, 1], vec![2, 2, 1, 1, 3, 3]] {
            let total = scalar_stat(&word, StatId::Asc)
                + scalar_stat(&word, StatId::Des)
                + scalar_stat(&word, StatId::Plat);
            assert_eq!(total, word.len() as u64 + 1);
        }
    }

    #[test]
    fn set_stats_worked_example() {
        let sigma = [7, 7, 4, 4, 1, 2, 2, 3, 3, 1, 5, 6, 6, 5];
        assert_eq!(set_stat(&sigma, SetStatId::Asc), set(&[2, 3, 5, 6, 7]));
        assert_eq!(set_stat(&sigma, SetStatId::Plat), set(&[2, 3, 4, 6, 7]));
        assert_eq!(set_stat(&sigma, SetStatId::Des), set(&[3, 4, 5, 6, 7]));
        assert_eq!(set_stat(&sigma, SetStatId::Lap), set(&[2, 3, 6, 7]));
        assert_eq!(set_stat(&sigma, SetStatId::Rpd), set(&[3, 4, 6, 7]));
        assert_eq!(set_stat(&sigma, SetStatId::Eud), set(&[3, 5, 6, 7]));
        assert_eq!(set_stat(&sigma, SetStatId::Dasc), set(&[5]));
        assert_eq!(set_stat(&sigma, SetStatId::Dplat), set(&[4]));
        assert_eq!(set_stat(&sigma, SetStatId::Ddes), set(&[5]));
        assert_eq!(set_stat(&sigma, SetStatId::Pasc), set(&[2]));
        assert_eq!(set_stat(&sigma, SetStatId::Apd), set(&[3, 6]));
        assert_eq!(set_stat(&sigma, SetStatId::Uu), set(&[2]));
        assert_eq!(set_stat(&sigma, SetStatId::Dd), set(&[4]));
    }

    #[test]
    fn set_stats_small_words() {
        assert_eq!(set_stat(&[1, 1], SetStatId::Lap), set(&[1]));
        assert_eq!(set_stat(&[1, 1], SetStatId::Dasc), set(&[]));
        assert_eq!(set_stat(&[2, 2, 1, 1], SetStatId::Des), set(&[1, 2]));
        assert_eq!(set_stat(&[2, 2, 1, 1], SetStatId::Rpd), set(&[1, 2]));
        assert_eq!(set_stat(&[2, 2, 1, 1], SetStatId::Eud), set(&[2]));
    }

    #[test]
    fn j_plateaux_examples() {
        let sigma = [1, 1, 1, 2, 2, 3, 3, 3, 3, 2, 2, 1];
        assert_eq!(j_stat(&sigma, 4, 1, JKind::Plateau).unwrap(), 3);
        assert_eq!(j_stat(&sigma, 4, 2, JKind::Plateau).unwrap(), 2);
        assert_eq!(j_stat(&sigma, 4, 3, JKind::Plateau).unwrap(), 2);
        assert!(j_stat(&sigma, 4, 5, JKind::Plateau).is_err());
        assert!(j_stat(&sigma, 4, 0, JKind::Plateau).is_err());

        assert_eq!(j_stat(&[1, 1, 2, 2], 2, 1, JKind::Plateau).unwrap(), 2);
        assert_eq!(j_stat(&[1, 1, 2, 2, 3, 3], 2, 1, JKind::Plateau).unwrap(), 3);
    }

    #[test]
    fn j_stat_totals() {
        let word = [1, 1, 1, 2, 2, 3, 3, 3, 3, 2, 2, 1];
        let k = 4;
        let mut total = 0;
        for j in 1..=k {
            total += j_stat(&word, k, j, JKind::Plateau).unwrap();
            total += j_stat(&word, k, j, JKind::Ascent).unwrap();
            total += j_stat(&word, k, j, JKind::Descent).unwrap();
        }
        assert_eq!(total, word.len() as u64 + 1);
    }

    #[test]
    fn type_b_descents() {
        assert_eq!(des_type_b(&[1, 2, 3]), 0);
        assert_eq!(des_type_b(&[-1]), 1);
        // distribution over the 8 signed permutations of [2]: 1 + 6x + x^2
        let mut counts = [0u64; 3];
        for pi in crate::words::enumerate_signed(2, 100).unwrap() {
            counts[des_type_b(&pi) as usize] += 1;
        }
        assert_eq!(counts, [1, 6, 1]);
    }

    #[test]
    fn boundary_table() {
        let conv = |s| boundary_convention(s);
        assert_eq!(conv(StatId::Asc), BoundaryConvention { left_zero: true, right_zero: true });
        assert_eq!(conv(StatId::Ap), BoundaryConvention { left_zero: false, right_zero: false });
        assert_eq!(conv(StatId::Lap), BoundaryConvention { left_zero: true, right_zero: false });
        assert_eq!(conv(StatId::Rpd), BoundaryConvention { left_zero: false, right_zero: true });
        assert_eq!(conv(StatId::Ud), BoundaryConvention { left_zero: true, right_zero: false });
        assert_eq!(conv(StatId::Eud), BoundaryConvention { left_zero: true, right_zero: true });
    }
}
