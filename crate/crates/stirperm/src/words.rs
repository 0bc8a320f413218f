//! Multipermutation families and their exhaustive generators.
//!
//! Generation uses the insertion scheme (the k copies of the new largest
//! letter always sit in adjacent positions, so removing them recurses),
//! which makes the order deterministic: enumerate the order-(n-1) family
//! first, then insertion gaps left to right. A brute-force filter over all
//! multiset permutations exists in the test suite as an independent oracle.

use crate::error::{Error, Result};

pub type Letter = u32;

/// Objects generated before a typed cap error is raised.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// Which virtual zero sentinels are active when a statistic scans a word.
/// Sentinels are never stored in the word itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundaryConvention {
    pub left_zero: bool,
    pub right_zero: bool,
}

/// `true` iff every letter `1..=max` occurs exactly `k` times and every
/// entry lying strictly between two equal letters is at least that letter.
/// Malformed multiplicities yield `false`, not an error.
pub fn is_stirling(word: &[Letter], k: u32) -> bool {
    if word.is_empty() || k == 0 || word.contains(&0) {
        return false;
    }
    let n = *word.iter().max().expect("nonempty") as usize;
    if word.len() != n * k as usize {
        return false;
    }
    let mut counts = vec![0u32; n];
    for &c in word {
        counts[(c - 1) as usize] += 1;
    }
    if counts.iter().any(|&c| c != k) {
        return false;
    }
    has_stirling_property(word)
}

/// The between-occurrences condition alone, for an arbitrary multiplicity
/// profile.
pub fn has_stirling_property(word: &[Letter]) -> bool {
    let n = word.iter().max().copied().unwrap_or(0) as usize;
    let mut first = vec![usize::MAX; n];
    let mut last = vec![0usize; n];
    for (i, &c) in word.iter().enumerate() {
        let c = (c - 1) as usize;
        if first[c] == usize::MAX {
            first[c] = i;
        }
        last[c] = i;
    }
    for v in 0..n {
        if first[v] == usize::MAX || first[v] == last[v] {
            continue;
        }
        if word[first[v] + 1..last[v]].iter().any(|&c| c < (v + 1) as Letter) {
            return false;
        }
    }
    true
}

/// Validate against an explicit multiplicity profile: letter `i` must occur
/// exactly `profile[i-1]` times.
pub fn is_stirling_profile(word: &[Letter], profile: &[u32]) -> bool {
    if word.contains(&0) {
        return false;
    }
    let mut counts = vec![0u64; profile.len()];
    for &c in word {
        let idx = (c - 1) as usize;
        if idx >= profile.len() {
            return false;
        }
        counts[idx] += 1;
    }
    if counts.iter().zip(profile).any(|(&c, &p)| c != p as u64) {
        return false;
    }
    has_stirling_property(word)
}

/// A word over the multiset {1^m1, ..., n^mn} together with its
/// multiplicity profile, optionally carrying the Stirling property.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MultiPerm {
    word: Vec<Letter>,
    profile: Vec<u32>,
}

impl MultiPerm {
    /// Validates the multiplicity profile and the Stirling property.
    pub fn new_stirling(word: Vec<Letter>, profile: Vec<u32>) -> Result<Self> {
        if !is_stirling_profile(&word, &profile) {
            return Err(Error::NotStirling(format!("{word:?} over profile {profile:?}")));
        }
        Ok(MultiPerm { word, profile })
    }

    /// Validates only the multiplicity profile.
    pub fn new(word: Vec<Letter>, profile: Vec<u32>) -> Result<Self> {
        let mut counts = vec![0u32; profile.len()];
        for &c in &word {
            match counts.get_mut((c as usize).wrapping_sub(1)) {
                Some(slot) => *slot += 1,
                None => {
                    return Err(Error::InvalidObject(format!(
                        "letter {c} outside the profile"
                    )))
                }
            }
        }
        if counts != profile {
            return Err(Error::InvalidObject(format!(
                "multiplicities {counts:?} do not match profile {profile:?}"
            )));
        }
        Ok(MultiPerm { word, profile })
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn profile(&self) -> &[u32] {
        &self.profile
    }

    pub fn is_stirling(&self) -> bool {
        has_stirling_property(&self.word)
    }
}

/// A k-Stirling permutation of order n (k copies of each letter in `[n]`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct StirlingPerm {
    word: Vec<Letter>,
    n: u32,
    k: u32,
}

impl StirlingPerm {
    pub fn new(word: Vec<Letter>, k: u32) -> Result<Self> {
        if !is_stirling(&word, k) {
            return Err(Error::NotStirling(format!("{word:?} with k={k}")));
        }
        let n = *word.iter().max().expect("nonempty");
        Ok(StirlingPerm { word, n, k })
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn into_word(self) -> Vec<Letter> {
        self.word
    }
}

impl std::fmt::Display for StirlingPerm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", word_string(&self.word))
    }
}

/// Compact rendering: digits run together while all letters are below ten.
pub fn word_string(word: &[Letter]) -> String {
    if word.iter().all(|&c| c <= 9) {
        word.iter().map(|c| c.to_string()).collect()
    } else {
        word.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
    }
}

/// `|Q_n(k)| = prod_{j=0}^{n-1} (jk + 1)`.
pub fn q_count(n: u32, k: u32) -> u128 {
    (0..n as u128).map(|j| j * k as u128 + 1).product()
}

/// `|Q_n^(1)| = 2^n n!`.
pub fn q1_count(n: u32) -> u128 {
    (1..=n as u128).map(|j| 2 * j).product()
}

pub fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

fn guard(requested: u128, cap: u64) -> Result<()> {
    if requested > cap as u128 {
        return Err(Error::CapExceeded { requested, cap: cap as u128 });
    }
    Ok(())
}

/// Words built by an insertion odometer: level `j` (1-based) chooses one of
/// `gap_count(j)` gaps; the word is rebuilt from the choices on demand.
/// Increments run rightmost-fastest, so the order is lexicographic on the
/// gap-choice vector.
struct InsertionIter<F, G> {
    gaps: Vec<usize>,
    gap_count: F,
    build: G,
    done: bool,
}

impl<F, G> Iterator for InsertionIter<F, G>
where
    F: Fn(usize) -> usize,
    G: Fn(&[usize]) -> Vec<Letter>,
{
    type Item = Vec<Letter>;

    fn next(&mut self) -> Option<Vec<Letter>> {
        if self.done {
            return None;
        }
        let word = (self.build)(&self.gaps);
        let mut level = self.gaps.len();
        loop {
            if level == 0 {
                self.done = true;
                break;
            }
            let i = level - 1;
            self.gaps[i] += 1;
            if self.gaps[i] < (self.gap_count)(level) {
                break;
            }
            self.gaps[i] = 0;
            level -= 1;
        }
        Some(word)
    }
}

fn insert_block(word: &mut Vec<Letter>, gap: usize, letter: Letter, copies: usize) {
    word.splice(gap..gap, std::iter::repeat_n(letter, copies));
}

/// Every element of `Q_n(k)` exactly once, in insertion order.
pub fn enumerate_q(n: u32, k: u32, cap: u64) -> Result<impl Iterator<Item = StirlingPerm>> {
    if n == 0 || k == 0 {
        return Err(Error::Domain("enumerate_q needs n >= 1 and k >= 1".into()));
    }
    guard(q_count(n, k), cap)?;
    let ku = k as usize;
    let iter = InsertionIter {
        gaps: vec![0; n as usize],
        gap_count: move |level: usize| ku * (level - 1) + 1,
        build: move |gaps: &[usize]| {
            let mut word = Vec::with_capacity(gaps.len() * ku);
            for (j, &g) in gaps.iter().enumerate() {
                insert_block(&mut word, g, (j + 1) as Letter, ku);
            }
            word
        },
        done: false,
    };
    Ok(iter.map(move |word| {
        let n = *word.iter().max().expect("nonempty");
        StirlingPerm { word, n, k }
    }))
}

/// Stirling permutations of `{1, 2^2, ..., (n+1)^2}` (one 1, pairs above).
pub fn enumerate_q1(n: u32, cap: u64) -> Result<impl Iterator<Item = Vec<Letter>>> {
    if n == 0 {
        return Err(Error::Domain("enumerate_q1 needs n >= 1".into()));
    }
    guard(q1_count(n), cap)?;
    let iter = InsertionIter {
        gaps: vec![0; n as usize],
        gap_count: |level: usize| 2 * level,
        build: |gaps: &[usize]| {
            let mut word = vec![1];
            for (j, &g) in gaps.iter().enumerate() {
                insert_block(&mut word, g, (j + 2) as Letter, 2);
            }
            word
        },
        done: false,
    };
    Ok(iter)
}

/// All permutations of `[n]` in lexicographic order.
pub fn enumerate_permutations(n: u32, cap: u64) -> Result<impl Iterator<Item = Vec<u32>>> {
    guard(factorial(n), cap)?;
    use itertools::Itertools;
    Ok((1..=n).permutations(n as usize))
}

/// All signed permutations of `[n]`: each permutation under every sign
/// mask, masks ascending.
pub fn enumerate_signed(n: u32, cap: u64) -> Result<impl Iterator<Item = Vec<i64>>> {
    guard(factorial(n) << n, cap)?;
    use itertools::Itertools;
    let perms = (1..=n as i64).permutations(n as usize);
    Ok(perms.flat_map(move |p| {
        (0u64..1 << n).map(move |mask| {
            p.iter()
                .enumerate()
                .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                .collect::<Vec<i64>>()
        })
    }))
}

#[cfg(test)]
pub mod oracle {
    //! Independent brute-force generators used only as test oracles.

    use super::*;
    use std::collections::BTreeSet;

    /// All distinct permutations of the multiset with the given profile,
    /// by plain backtracking.
    pub fn multiset_permutations(profile: &[u32]) -> Vec<Vec<Letter>> {
        let total: u32 = profile.iter().sum();
        let mut remaining = profile.to_vec();
        let mut cur = Vec::with_capacity(total as usize);
        let mut out = Vec::new();
        fn go(remaining: &mut [u32], cur: &mut Vec<Letter>, total: u32, out: &mut Vec<Vec<Letter>>) {
            if cur.len() == total as usize {
                out.push(cur.clone());
                return;
            }
            for v in 0..remaining.len() {
                if remaining[v] > 0 {
                    remaining[v] -= 1;
                    cur.push((v + 1) as Letter);
                    go(remaining, cur, total, out);
                    cur.pop();
                    remaining[v] += 1;
                }
            }
        }
        go(&mut remaining, &mut cur, total, &mut out);
        out
    }

    /// Brute-force `Q_n(k)` as a sorted set: filter every multiset
    /// permutation through the Stirling property.
    pub fn stirling_by_filter(n: u32, k: u32) -> BTreeSet<Vec<Letter>> {
        let profile = vec![k; n as usize];
        multiset_permutations(&profile)
            .into_iter()
            .filter(|w| is_stirling(w, k))
            .collect()
    }

    pub fn q1_by_filter(n: u32) -> BTreeSet<Vec<Letter>> {
        let mut profile = vec![2u32; (n + 1) as usize];
        profile[0] = 1;
        multiset_permutations(&profile)
            .into_iter()
            .filter(|w| is_stirling_profile(w, &profile))
            .collect()
    }
}
