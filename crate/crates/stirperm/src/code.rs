//! Codes for Stirling permutations: the peel/insert bijection with words,
//! statistic transport, and the tuple-switch involutions.
//!
//! A code of length n is ((0,0),(a_1,b_1),...,(a_{n-1},b_{n-1})) with
//! 1 <= a_i <= i, b_i in {1,2,3} and pairwise distinct tuples. Encoding
//! peels the adjacent pair of the largest letter top-down; decoding inserts
//! letters bottom-up. At every insertion stage the 2m+1 gaps of a word
//! realize exactly the 2m+1 unused tuples, so the qualifying gap is always
//! unique.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::stats::SetStatId;
use crate::words::{is_stirling, Letter};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SpCode {
    tuples: Vec<(u32, u8)>,
}

impl SpCode {
    pub fn new(tuples: Vec<(u32, u8)>) -> Result<Self> {
        if tuples.first() != Some(&(0, 0)) {
            return Err(Error::InvalidCode("first tuple must be (0,0)".into()));
        }
        for (i, &(a, b)) in tuples.iter().enumerate().skip(1) {
            if a < 1 || a as usize > i {
                return Err(Error::InvalidCode(format!("tuple {i}: a={a} out of range 1..={i}")));
            }
            if !(1..=3).contains(&b) {
                return Err(Error::InvalidCode(format!("tuple {i}: b={b} out of range 1..=3")));
            }
        }
        let distinct: BTreeSet<_> = tuples.iter().collect();
        if distinct.len() != tuples.len() {
            return Err(Error::InvalidCode("tuples must be pairwise distinct".into()));
        }
        Ok(SpCode { tuples })
    }

    /// Number of letters of the coded permutation.
    pub fn n(&self) -> u32 {
        self.tuples.len() as u32
    }

    pub fn tuples(&self) -> &[(u32, u8)] {
        &self.tuples
    }

    pub fn contains(&self, a: u32, b: u8) -> bool {
        self.tuples.contains(&(a, b))
    }

    /// Swap the second components `b` and `b_alt` in every tuple. An
    /// involution on codes of fixed length.
    pub fn switch(&self, b: u8, b_alt: u8) -> SpCode {
        assert!(b != b_alt && (1..=3).contains(&b) && (1..=3).contains(&b_alt));
        let tuples = self
            .tuples
            .iter()
            .map(|&(a, t)| {
                if t == b {
                    (a, b_alt)
                } else if t == b_alt {
                    (a, b)
                } else {
                    (a, t)
                }
            })
            .collect();
        SpCode { tuples }
    }
}

impl std::fmt::Display for SpCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &(a, b) in &self.tuples {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

/// Classify the gap (left, right) around an insertion point, using virtual
/// zeros at both ends: an ascent gap is named by its right element, a
/// plateau gap by the repeated letter, a descent gap by its left element.
fn classify_gap(left: Letter, right: Letter) -> (u32, u8) {
    use std::cmp::Ordering::*;
    match left.cmp(&right) {
        Less => (right, 1),
        Equal => (right, 2),
        Greater => (left, 3),
    }
}

/// Code of a Stirling permutation: repeatedly strip the adjacent pair of
/// the largest letter and record the gap it occupied.
pub fn encode(word: &[Letter]) -> Result<SpCode> {
    if !is_stirling(word, 2) {
        return Err(Error::NotStirling(format!("{word:?}")));
    }
    let mut w = word.to_vec();
    let n = w.len() / 2;
    let mut tuples = vec![(0u32, 0u8); n];
    for m in (2..=n).rev() {
        let pos = w
            .iter()
            .position(|&c| c == m as Letter)
            .expect("letter present");
        debug_assert_eq!(w[pos + 1], m as Letter, "largest pair is adjacent");
        let left = if pos == 0 { 0 } else { w[pos - 1] };
        let right = if pos + 2 == w.len() { 0 } else { w[pos + 2] };
        tuples[m - 1] = classify_gap(left, right);
        w.drain(pos..pos + 2);
    }
    Ok(SpCode { tuples })
}

/// Inverse of [`encode`]: insert letters 2..=n ascending, each pair into
/// the unique gap whose classification matches its tuple.
pub fn decode(code: &SpCode) -> Result<Vec<Letter>> {
    let n = code.n() as usize;
    let mut w: Vec<Letter> = vec![1, 1];
    for m in 2..=n {
        let want = code.tuples[m - 1];
        let mut found = None;
        for gap in 0..=w.len() {
            let left = if gap == 0 { 0 } else { w[gap - 1] };
            let right = if gap == w.len() { 0 } else { w[gap] };
            if classify_gap(left, right) == want {
                found = Some(gap);
                break;
            }
        }
        let Some(gap) = found else {
            return Err(Error::InvalidCode(format!(
                "no qualifying gap for tuple ({},{}) at letter {m}",
                want.0, want.1
            )));
        };
        w.splice(gap..gap, [m as Letter, m as Letter]);
    }
    Ok(w)
}

/// Set-valued statistic read off the code alone, agreeing with
/// [`crate::stats::set_stat`] on the decoded word.
///
/// For twelve of the thirteen statistics the value is a membership formula
/// over the universe [n]: tuple (v,1) marks a filled left slot of v, (v,2)
/// a filled middle slot, (v,3) a filled right slot. Apd is the letters with
/// no tuple at all, minus the chain of left children from the root (their
/// predecessor position is the virtual zero, which apd does not see).
pub fn code_set_stat(code: &SpCode, s: SetStatId) -> BTreeSet<u32> {
    let n = code.n();
    let has = |v: u32, b: u8| code.contains(v, b);
    let pick = |f: &dyn Fn(u32) -> bool| -> BTreeSet<u32> { (1..=n).filter(|&v| f(v)).collect() };
    match s {
        SetStatId::Asc => pick(&|v| !has(v, 1)),
        SetStatId::Plat => pick(&|v| !has(v, 2)),
        SetStatId::Des => pick(&|v| !has(v, 3)),
        SetStatId::Lap => pick(&|v| !has(v, 1) && !has(v, 2)),
        SetStatId::Rpd => pick(&|v| !has(v, 2) && !has(v, 3)),
        SetStatId::Eud => pick(&|v| !has(v, 1) && !has(v, 3)),
        SetStatId::Dasc => pick(&|v| !has(v, 1) && has(v, 2)),
        SetStatId::Dplat => pick(&|v| has(v, 1) && !has(v, 2)),
        SetStatId::Ddes => pick(&|v| has(v, 2) && !has(v, 3)),
        SetStatId::Pasc => pick(&|v| !has(v, 2) && has(v, 3)),
        SetStatId::Uu => pick(&|v| !has(v, 1) && has(v, 3)),
        SetStatId::Dd => pick(&|v| has(v, 1) && !has(v, 3)),
        SetStatId::Apd => {
            let leaves: BTreeSet<u32> =
                (1..=n).filter(|&v| !has(v, 1) && !has(v, 2) && !has(v, 3)).collect();
            let mut spine = BTreeSet::new();
            let mut v = 1u32;
            loop {
                spine.insert(v);
                match code.tuples.iter().position(|&t| t == (v, 1)) {
                    Some(idx) => v = idx as u32 + 1, // tuple idx codes letter idx+1
                    None => break,
                }
            }
            leaves.difference(&spine).copied().collect()
        }
    }
}

/// `|CQ_n| = (2n-1)!!`.
pub fn code_count(n: u32) -> u128 {
    (1..=n as u128).map(|j| 2 * j - 1).product()
}

/// All codes of length n exactly once: positions run left to right, tuples
/// at each position in (a,b)-lexicographic order, skipping used ones.
pub fn enumerate_codes(n: u32, cap: u64) -> Result<impl Iterator<Item = SpCode>> {
    if n == 0 {
        return Err(Error::Domain("enumerate_codes needs n >= 1".into()));
    }
    if code_count(n) > cap as u128 {
        return Err(Error::CapExceeded { requested: code_count(n), cap: cap as u128 });
    }
    let mut stack: Vec<SpCode> = vec![SpCode { tuples: vec![(0, 0)] }];
    let target = n as usize;
    Ok(std::iter::from_fn(move || loop {
        let code = stack.pop()?;
        let len = code.tuples.len();
        if len == target {
            return Some(code);
        }
        // push in reverse so the smallest tuple is popped first
        for a in (1..=len as u32).rev() {
            for b in (1..=3u8).rev() {
                if !code.contains(a, b) {
                    let mut tuples = code.tuples.clone();
                    tuples.push((a, b));
                    stack.push(SpCode { tuples });
                }
            }
        }
    }))
}
