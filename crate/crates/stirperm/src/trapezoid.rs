//! Trapezoidal words, perfect matchings, and the bijections tying them to
//! codes.
//!
//! Riordan words have t_i in 1..=2i-1; Dumont words are signed with
//! |w_i| < i. Both families, the matchings of [2n], and the codes of
//! length n all have (2n-1)!! members and the maps here witness that.

use std::collections::BTreeSet;

use crate::code::SpCode;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RiordanWord(Vec<u32>);

impl RiordanWord {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        for (i, &t) in word.iter().enumerate() {
            let bound = 2 * (i as u32 + 1) - 1;
            if t < 1 || t > bound {
                return Err(Error::InvalidObject(format!(
                    "riordan word entry {} at position {} outside 1..={}",
                    t,
                    i + 1,
                    bound
                )));
            }
        }
        if word.is_empty() {
            return Err(Error::InvalidObject("riordan word must be nonempty".into()));
        }
        Ok(RiordanWord(word))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DumontWord(Vec<i64>);

impl DumontWord {
    pub fn new(word: Vec<i64>) -> Result<Self> {
        for (i, &w) in word.iter().enumerate() {
            if w.unsigned_abs() > i as u64 {
                return Err(Error::InvalidObject(format!(
                    "dumont word entry {} at position {} needs |w| < {}",
                    w,
                    i + 1,
                    i + 1
                )));
            }
        }
        if word.is_empty() {
            return Err(Error::InvalidObject("dumont word must be nonempty".into()));
        }
        Ok(DumontWord(word))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// (dist, nneg, npos): the number of distinct values, n minus the
    /// number of distinct negative values, n minus the number of distinct
    /// positive values. Counting values rather than positions is what
    /// makes the monomials homogeneous of degree 2n+1: zero always occurs,
    /// so dist = 1 + (n - nneg) + (n - npos).
    pub fn stats(&self) -> (u64, u64, u64) {
        let n = self.0.len() as u64;
        let dist = self.0.iter().collect::<BTreeSet<_>>().len() as u64;
        let neg = self.0.iter().filter(|&&w| w < 0).collect::<BTreeSet<_>>().len() as u64;
        let pos = self.0.iter().filter(|&&w| w > 0).collect::<BTreeSet<_>>().len() as u64;
        (dist, n - neg, n - pos)
    }
}

/// Perfect matching of [2n] in standard form: each block (i, j) with i < j,
/// blocks sorted by first element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PerfectMatching(Vec<(u32, u32)>);

impl PerfectMatching {
    /// Accepts blocks in any order and canonicalizes to standard form.
    pub fn new(mut blocks: Vec<(u32, u32)>) -> Result<Self> {
        let m = 2 * blocks.len() as u32;
        let mut seen = vec![false; m as usize + 1];
        for b in blocks.iter_mut() {
            if b.0 > b.1 {
                *b = (b.1, b.0);
            }
            for v in [b.0, b.1] {
                if v < 1 || v > m {
                    return Err(Error::InvalidObject(format!("element {v} outside 1..={m}")));
                }
                if seen[v as usize] {
                    return Err(Error::InvalidObject(format!("element {v} matched twice")));
                }
                seen[v as usize] = true;
            }
            if b.0 == b.1 {
                return Err(Error::InvalidObject(format!("degenerate block ({},{})", b.0, b.1)));
            }
        }
        blocks.sort();
        Ok(PerfectMatching(blocks))
    }

    pub fn blocks(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn partner(&self, v: u32) -> u32 {
        for &(a, b) in &self.0 {
            if a == v {
                return b;
            }
            if b == v {
                return a;
            }
        }
        panic!("element {v} not matched")
    }
}

/// Entrywise recoding of a Dumont word into a Riordan word:
/// 0 -> 1, k -> 2k, -k -> 2k+1.
pub fn riordan_from_dumont(w: &DumontWord) -> RiordanWord {
    let word = w
        .entries()
        .iter()
        .map(|&x| match x {
            0 => 1,
            k if k > 0 => 2 * k as u32,
            k => 2 * (-k) as u32 + 1,
        })
        .collect();
    RiordanWord::new(word).expect("recoding preserves the trapezoidal bounds")
}

/// Inverse of [`riordan_from_dumont`].
pub fn dumont_from_riordan(t: &RiordanWord) -> DumontWord {
    let word = t
        .entries()
        .iter()
        .map(|&x| match x {
            1 => 0,
            x if x % 2 == 0 => (x / 2) as i64,
            x => -((x / 2) as i64),
        })
        .collect();
    DumontWord::new(word).expect("recoding preserves the trapezoidal bounds")
}

/// Relabel `blocks` (on values `old_support`) order-isomorphically onto
/// `new_support` (both sorted).
fn relabel(blocks: &[(u32, u32)], old_support: &[u32], new_support: &[u32]) -> Vec<(u32, u32)> {
    debug_assert_eq!(old_support.len(), new_support.len());
    let map = |v: u32| {
        let idx = old_support.binary_search(&v).expect("value in support");
        new_support[idx]
    };
    blocks.iter().map(|&(a, b)| (map(a), map(b))).collect()
}

/// Grow a matching from a Riordan word: appending letter i to a word of
/// length m opens the block (i, 2m+2) and pushes the old blocks
/// order-isomorphically onto the remaining labels.
pub fn matching_from_riordan(t: &RiordanWord) -> PerfectMatching {
    let mut blocks: Vec<(u32, u32)> = vec![(1, 2)];
    for (idx, &letter) in t.entries().iter().enumerate().skip(1) {
        let m = idx as u32; // current matching covers [2m]
        let old_support: Vec<u32> = (1..=2 * m).collect();
        let new_support: Vec<u32> =
            (1..=2 * m + 2).filter(|&v| v != letter && v != 2 * m + 2).collect();
        let mut grown = relabel(&blocks, &old_support, &new_support);
        grown.push((letter, 2 * m + 2));
        blocks = grown;
    }
    PerfectMatching::new(blocks).expect("construction yields a matching")
}

/// Inverse of [`matching_from_riordan`]: the last letter is the partner of
/// the largest element; remove that block and compress.
pub fn riordan_from_matching(m: &PerfectMatching) -> Result<RiordanWord> {
    let mut blocks = m.blocks().to_vec();
    let mut letters = vec![0u32; m.size()];
    for step in (1..m.size()).rev() {
        let top = 2 * (step as u32 + 1);
        let pos = blocks
            .iter()
            .position(|&(_, b)| b == top)
            .ok_or_else(|| Error::InvalidObject(format!("element {top} is not a block maximum")))?;
        let (i, _) = blocks.remove(pos);
        letters[step] = i;
        let support: Vec<u32> = (1..=top).filter(|&v| v != i && v != top).collect();
        let target: Vec<u32> = (1..=top - 2).collect();
        blocks = relabel(&blocks, &support, &target);
    }
    letters[0] = 1;
    RiordanWord::new(letters)
}

/// Code from a Dumont word, letter by letter: a repeated value points at
/// its previous occurrence (b=1); a new negative value -j gives (j,2); a
/// new positive value j gives (j,3).
pub fn code_from_dumont(w: &DumontWord) -> SpCode {
    let entries = w.entries();
    let mut tuples: Vec<(u32, u8)> = vec![(0, 0)];
    for (idx, &x) in entries.iter().enumerate().skip(1) {
        let prior = &entries[..idx];
        let tuple = if let Some(j) = prior.iter().rposition(|&y| y == x) {
            (j as u32 + 1, 1)
        } else if x < 0 {
            ((-x) as u32, 2)
        } else {
            (x as u32, 3)
        };
        tuples.push(tuple);
    }
    SpCode::new(tuples).expect("dumont words map onto valid codes")
}

/// Inverse of [`code_from_dumont`].
pub fn dumont_from_code(c: &SpCode) -> DumontWord {
    let mut entries: Vec<i64> = vec![0];
    for &(a, b) in c.tuples().iter().skip(1) {
        let x = match b {
            1 => entries[(a - 1) as usize],
            2 => -(a as i64),
            _ => a as i64,
        };
        entries.push(x);
    }
    DumontWord::new(entries).expect("codes map onto valid dumont words")
}

fn double_factorial(n: u32) -> u128 {
    (1..=n as u128).map(|j| 2 * j - 1).product()
}

fn guard(n: u32, cap: u64) -> Result<()> {
    let requested = double_factorial(n);
    if requested > cap as u128 {
        return Err(Error::CapExceeded { requested, cap: cap as u128 });
    }
    Ok(())
}

/// All Riordan words of length n, entries odometer-ordered.
pub fn enumerate_riordan(n: u32, cap: u64) -> Result<impl Iterator<Item = RiordanWord>> {
    if n == 0 {
        return Err(Error::Domain("enumerate_riordan needs n >= 1".into()));
    }
    guard(n, cap)?;
    let mut cur: Option<Vec<u32>> = Some(vec![1; n as usize]);
    Ok(std::iter::from_fn(move || {
        let word = cur.clone()?;
        let mut next = word.clone();
        let mut i = next.len();
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            let bound = 2 * i as u32 - 1;
            if next[i - 1] < bound {
                next[i - 1] += 1;
                cur = Some(next);
                break;
            }
            next[i - 1] = 1;
            i -= 1;
        }
        Some(RiordanWord(word))
    }))
}

/// All Dumont words of length n, entries odometer-ordered from -i+1 to i-1.
pub fn enumerate_dumont(n: u32, cap: u64) -> Result<impl Iterator<Item = DumontWord>> {
    if n == 0 {
        return Err(Error::Domain("enumerate_dumont needs n >= 1".into()));
    }
    guard(n, cap)?;
    let mut cur: Option<Vec<i64>> = Some((0..n as i64).map(|i| -i).collect());
    Ok(std::iter::from_fn(move || {
        let word = cur.clone()?;
        let mut next = word.clone();
        let mut i = next.len();
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            let bound = i as i64 - 1;
            if next[i - 1] < bound {
                next[i - 1] += 1;
                cur = Some(next);
                break;
            }
            next[i - 1] = -bound;
            i -= 1;
        }
        Some(DumontWord(word))
    }))
}

/// All perfect matchings of [2n]: pair the smallest free element with every
/// larger free element, partners ascending.
pub fn enumerate_matchings(n: u32, cap: u64) -> Result<Vec<PerfectMatching>> {
    if n == 0 {
        return Err(Error::Domain("enumerate_matchings needs n >= 1".into()));
    }
    guard(n, cap)?;
    let mut out = Vec::new();
    let mut blocks = Vec::new();
    let free: Vec<u32> = (1..=2 * n).collect();
    fn go(free: &[u32], blocks: &mut Vec<(u32, u32)>, out: &mut Vec<PerfectMatching>) {
        if free.is_empty() {
            out.push(PerfectMatching(blocks.clone()));
            return;
        }
        let a = free[0];
        for idx in 1..free.len() {
            let b = free[idx];
            let mut rest = free.to_vec();
            rest.remove(idx);
            rest.remove(0);
            blocks.push((a, b));
            go(&rest, blocks, out);
            blocks.pop();
        }
    }
    go(&free, &mut blocks, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::decode;
    use crate::words::DEFAULT_CAP;

    fn dumont(entries: &[i64]) -> DumontWord {
        DumontWord::new(entries.to_vec()).unwrap()
    }

    fn riordan(entries: &[u32]) -> RiordanWord {
        RiordanWord::new(entries.to_vec()).unwrap()
    }

    fn code(tuples: &[(u32, u8)]) -> SpCode {
        SpCode::new(tuples.to_vec()).unwrap()
    }

    #[test]
    fn entrywise_recoding() {
        assert_eq!(riordan_from_dumont(&dumont(&[0, 0])), riordan(&[1, 1]));
        assert_eq!(riordan_from_dumont(&dumont(&[0, 1])), riordan(&[1, 2]));
        assert_eq!(riordan_from_dumont(&dumont(&[0, -1])), riordan(&[1, 3]));
        assert_eq!(riordan_from_dumont(&dumont(&[0, -1, 2])), riordan(&[1, 3, 4]));
        assert_eq!(dumont_from_riordan(&riordan(&[1, 3, 4])), dumont(&[0, -1, 2]));
    }

    #[test]
    fn matching_growth_trace() {
        let t = riordan(&[1, 1, 1, 3, 2, 10]);
        let stages: [&[(u32, u32)]; 6] = [
            &[(1, 2)],
            &[(1, 4), (2, 3)],
            &[(1, 6), (2, 5), (3, 4)],
            &[(3, 8), (1, 7), (2, 6), (4, 5)],
            &[(2, 10), (4, 9), (1, 8), (3, 7), (5, 6)],
            &[(10, 12), (2, 11), (4, 9), (1, 8), (3, 7), (5, 6)],
        ];
        for (len, expected) in stages.iter().enumerate() {
            let prefix = riordan(&t.entries()[..=len]);
            let m = matching_from_riordan(&prefix);
            let expected = PerfectMatching::new(expected.to_vec()).unwrap();
            assert_eq!(m, expected, "prefix length {}", len + 1);
        }
        assert_eq!(riordan_from_matching(&matching_from_riordan(&t)).unwrap(), t);
    }

    #[test]
    fn small_matchings() {
        assert_eq!(
            matching_from_riordan(&riordan(&[1])),
            PerfectMatching::new(vec![(1, 2)]).unwrap()
        );
        assert_eq!(
            matching_from_riordan(&riordan(&[1, 2])),
            PerfectMatching::new(vec![(2, 4), (1, 3)]).unwrap()
        );
        assert_eq!(
            matching_from_riordan(&riordan(&[1, 1])),
            PerfectMatching::new(vec![(1, 4), (2, 3)]).unwrap()
        );
        assert_eq!(
            matching_from_riordan(&riordan(&[1, 3])),
            PerfectMatching::new(vec![(3, 4), (1, 2)]).unwrap()
        );
    }

    #[test]
    fn dumont_code_trace() {
        let w = dumont(&[0, 0, 0, -1, 1, 5, 1]);
        let stages: [&[(u32, u8)]; 7] = [
            &[(0, 0)],
            &[(0, 0), (1, 1)],
            &[(0, 0), (1, 1), (2, 1)],
            &[(0, 0), (1, 1), (2, 1), (1, 2)],
            &[(0, 0), (1, 1), (2, 1), (1, 2), (1, 3)],
            &[(0, 0), (1, 1), (2, 1), (1, 2), (1, 3), (5, 3)],
            &[(0, 0), (1, 1), (2, 1), (1, 2), (1, 3), (5, 3), (5, 1)],
        ];
        for (len, expected) in stages.iter().enumerate() {
            let prefix = dumont(&w.entries()[..=len]);
            assert_eq!(code_from_dumont(&prefix), code(expected), "prefix length {}", len + 1);
        }
        assert_eq!(dumont_from_code(&code_from_dumont(&w)), w);
    }

    #[test]
    fn dumont_code_small_cases() {
        assert_eq!(code_from_dumont(&dumont(&[0])), code(&[(0, 0)]));
        assert_eq!(code_from_dumont(&dumont(&[0, 1, -1])), code(&[(0, 0), (1, 3), (1, 2)]));
        assert_eq!(code_from_dumont(&dumont(&[0, 0])), code(&[(0, 0), (1, 1)]));
        assert_eq!(code_from_dumont(&dumont(&[0, -1])), code(&[(0, 0), (1, 2)]));
        assert_eq!(code_from_dumont(&dumont(&[0, 1])), code(&[(0, 0), (1, 3)]));
        // full n=3 listing
        let pairs: [(&[i64], &[(u32, u8)]); 15] = [
            (&[0, 0, 0], &[(0, 0), (1, 1), (2, 1)]),
            (&[0, 0, -1], &[(0, 0), (1, 1), (1, 2)]),
            (&[0, 0, 1], &[(0, 0), (1, 1), (1, 3)]),
            (&[0, 0, -2], &[(0, 0), (1, 1), (2, 2)]),
            (&[0, 0, 2], &[(0, 0), (1, 1), (2, 3)]),
            (&[0, -1, 0], &[(0, 0), (1, 2), (1, 1)]),
            (&[0, -1, 1], &[(0, 0), (1, 2), (1, 3)]),
            (&[0, -1, -1], &[(0, 0), (1, 2), (2, 1)]),
            (&[0, -1, -2], &[(0, 0), (1, 2), (2, 2)]),
            (&[0, -1, 2], &[(0, 0), (1, 2), (2, 3)]),
            (&[0, 1, 0], &[(0, 0), (1, 3), (1, 1)]),
            (&[0, 1, -1], &[(0, 0), (1, 3), (1, 2)]),
            (&[0, 1, 1], &[(0, 0), (1, 3), (2, 1)]),
            (&[0, 1, -2], &[(0, 0), (1, 3), (2, 2)]),
            (&[0, 1, 2], &[(0, 0), (1, 3), (2, 3)]),
        ];
        for (w, c) in pairs {
            assert_eq!(code_from_dumont(&dumont(w)), code(c), "{w:?}");
        }
    }

    #[test]
    fn dumont_stat_examples() {
        assert_eq!(dumont(&[0, 0]).stats(), (1, 2, 2));
        assert_eq!(dumont(&[0, -1]).stats(), (2, 1, 2));
        assert_eq!(dumont(&[0]).stats(), (1, 1, 1));
    }

    #[test]
    fn family_counts() {
        for n in 1..=6u32 {
            let expected = double_factorial(n);
            assert_eq!(enumerate_riordan(n, DEFAULT_CAP).unwrap().count() as u128, expected);
            assert_eq!(enumerate_dumont(n, DEFAULT_CAP).unwrap().count() as u128, expected);
            assert_eq!(enumerate_matchings(n, DEFAULT_CAP).unwrap().len() as u128, expected);
        }
    }

    #[test]
    fn round_trips_over_full_families() {
        for n in 1..=5u32 {
            for w in enumerate_dumont(n, DEFAULT_CAP).unwrap() {
                assert_eq!(dumont_from_riordan(&riordan_from_dumont(&w)), w);
                assert_eq!(dumont_from_code(&code_from_dumont(&w)), w);
                assert!(decode(&code_from_dumont(&w)).is_ok());
            }
            for t in enumerate_riordan(n, DEFAULT_CAP).unwrap() {
                let m = matching_from_riordan(&t);
                assert_eq!(riordan_from_matching(&m).unwrap(), t);
            }
        }
    }

    #[test]
    fn validation_rejects_bad_objects() {
        assert!(RiordanWord::new(vec![2]).is_err());
        assert!(RiordanWord::new(vec![1, 4]).is_err());
        assert!(DumontWord::new(vec![1]).is_err());
        assert!(DumontWord::new(vec![0, 2]).is_err());
        assert!(PerfectMatching::new(vec![(1, 1)]).is_err());
        assert!(PerfectMatching::new(vec![(1, 2), (2, 3)]).is_err());
        assert!(PerfectMatching::new(vec![(1, 5), (2, 3)]).is_err());
    }
}
