//! Ternary and bounded-degree plane increasing trees.
//!
//! A ternary increasing tree on [n] has three ordered child slots per node
//! (left, middle, right) and increasing labels along root paths. Reading
//! the tree depth-first with two copies of each label placed between its
//! three slots yields a Stirling permutation; the build-tree code records
//! where each new node attaches and coincides with the word code.

use crate::code::SpCode;
use crate::error::{Error, Result};
use crate::words::Letter;

pub const LEFT: usize = 0;
pub const MIDDLE: usize = 1;
pub const RIGHT: usize = 2;

/// Ternary increasing tree; `slots[v-1]` holds the children of label v.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TernaryTree {
    slots: Vec<[Option<u32>; 3]>,
}

impl TernaryTree {
    /// Validate: labels 1..=n each used once below a smaller parent.
    pub fn new(slots: Vec<[Option<u32>; 3]>) -> Result<Self> {
        let n = slots.len() as u32;
        if n == 0 {
            return Err(Error::InvalidObject("tree needs at least the root".into()));
        }
        let mut parent = vec![0u32; n as usize + 1];
        for (i, node) in slots.iter().enumerate() {
            let v = i as u32 + 1;
            for child in node.iter().flatten() {
                if *child <= v || *child > n {
                    return Err(Error::InvalidObject(format!(
                        "child {child} of node {v} violates increasing labels"
                    )));
                }
                if parent[*child as usize] != 0 {
                    return Err(Error::InvalidObject(format!("node {child} has two parents")));
                }
                parent[*child as usize] = v;
            }
        }
        if parent.iter().skip(2).any(|&p| p == 0) {
            return Err(Error::InvalidObject("tree is not connected".into()));
        }
        Ok(TernaryTree { slots })
    }

    pub fn size(&self) -> u32 {
        self.slots.len() as u32
    }

    pub fn slots(&self) -> &[[Option<u32>; 3]] {
        &self.slots
    }

    pub fn child(&self, v: u32, slot: usize) -> Option<u32> {
        self.slots[(v - 1) as usize][slot]
    }

    /// Counts of empty left / middle / right slots; they always sum to
    /// 2n + 1.
    pub fn exterior_counts(&self) -> (u64, u64, u64) {
        let mut counts = [0u64; 3];
        for node in &self.slots {
            for (s, c) in node.iter().enumerate() {
                if c.is_none() {
                    counts[s] += 1;
                }
            }
        }
        (counts[0], counts[1], counts[2])
    }
}

/// Depth-first reading: left subtree, label, middle subtree, label, right
/// subtree.
pub fn tree_to_perm(tree: &TernaryTree) -> Vec<Letter> {
    fn walk(tree: &TernaryTree, v: u32, out: &mut Vec<Letter>) {
        if let Some(c) = tree.child(v, LEFT) {
            walk(tree, c, out);
        }
        out.push(v);
        if let Some(c) = tree.child(v, MIDDLE) {
            walk(tree, c, out);
        }
        out.push(v);
        if let Some(c) = tree.child(v, RIGHT) {
            walk(tree, c, out);
        }
    }
    let mut out = Vec::with_capacity(2 * tree.slots.len());
    walk(tree, 1, &mut out);
    out
}

/// Inverse of the depth-first reading: split the word at the two copies of
/// its smallest letter and recurse on the three factors.
pub fn perm_to_tree(word: &[Letter]) -> Result<TernaryTree> {
    if !crate::words::is_stirling(word, 2) {
        return Err(Error::NotStirling(format!("{word:?}")));
    }
    let n = (word.len() / 2) as u32;
    let mut slots = vec![[None; 3]; n as usize];
    fn build(word: &[Letter], slots: &mut Vec<[Option<u32>; 3]>) -> u32 {
        let root = *word.iter().min().expect("nonempty");
        let first = word.iter().position(|&c| c == root).expect("present");
        let second = word.iter().rposition(|&c| c == root).expect("present");
        let parts = [&word[..first], &word[first + 1..second], &word[second + 1..]];
        for (slot, part) in parts.into_iter().enumerate() {
            if !part.is_empty() {
                let child = build(part, slots);
                slots[(root - 1) as usize][slot] = Some(child);
            }
        }
        root
    }
    build(word, &mut slots);
    TernaryTree::new(slots)
}

/// Grow the tree along its code: tuple (a_i, b_i) attaches node i+1 in slot
/// b_i of node a_i.
pub fn code_to_tree(code: &SpCode) -> Result<TernaryTree> {
    let n = code.n();
    let mut slots = vec![[None; 3]; n as usize];
    for (i, &(a, b)) in code.tuples().iter().enumerate().skip(1) {
        let v = i as u32 + 1;
        let slot = &mut slots[(a - 1) as usize][(b - 1) as usize];
        if slot.is_some() {
            return Err(Error::InvalidCode(format!(
                "slot {b} of node {a} already occupied when adding {v}"
            )));
        }
        *slot = Some(v);
    }
    TernaryTree::new(slots)
}

/// Read the code back off the tree: node i+1 was attached to its parent's
/// slot, and parents are always smaller, so tuple ranges hold by
/// construction.
pub fn tree_to_code(tree: &TernaryTree) -> SpCode {
    let n = tree.size();
    let mut tuples = vec![(0u32, 0u8); n as usize];
    for v in 1..=n {
        for (s, child) in tree.slots[(v - 1) as usize].iter().enumerate() {
            if let Some(c) = child {
                tuples[(*c - 1) as usize] = (v, s as u8 + 1);
            }
        }
    }
    SpCode::new(tuples).expect("valid tree yields valid code")
}

/// Increasing plane tree with ordered children; `children[v-1]` lists the
/// children of label v left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneTree {
    children: Vec<Vec<u32>>,
}

impl PlaneTree {
    pub fn size(&self) -> u32 {
        self.children.len() as u32
    }

    pub fn children(&self) -> &[Vec<u32>] {
        &self.children
    }

    /// Degree profile (i_1, ..., i_n): i_j = number of vertices with j-1
    /// children.
    pub fn degree_profile(&self) -> Vec<u64> {
        let n = self.children.len();
        let mut profile = vec![0u64; n];
        for ch in &self.children {
            profile[ch.len()] += 1;
        }
        profile
    }
}

/// All increasing plane trees on [n] with every degree at most
/// `max_degree`, by inserting labels ascending into each admissible ordered
/// position. The running count is checked against the cap.
pub fn enumerate_plane_trees(n: u32, max_degree: u32, cap: u64) -> Result<Vec<PlaneTree>> {
    if n == 0 || max_degree == 0 {
        return Err(Error::Domain("enumerate_plane_trees needs n >= 1, max_degree >= 1".into()));
    }
    let mut trees = vec![PlaneTree { children: vec![Vec::new()] }];
    for m in 2..=n {
        let mut next = Vec::new();
        for tree in &trees {
            for v in 1..m {
                let deg = tree.children[(v - 1) as usize].len();
                if deg as u32 >= max_degree {
                    continue;
                }
                for pos in 0..=deg {
                    let mut children = tree.children.clone();
                    children[(v - 1) as usize].insert(pos, m);
                    children.push(Vec::new());
                    next.push(PlaneTree { children });
                    if next.len() as u64 > cap {
                        return Err(Error::CapExceeded {
                            requested: next.len() as u128,
                            cap: cap as u128,
                        });
                    }
                }
            }
        }
        trees = next;
    }
    Ok(trees)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{decode, enumerate_codes};
    use crate::words::{enumerate_q, DEFAULT_CAP};
    use std::collections::BTreeMap;

    fn code(tuples: &[(u32, u8)]) -> SpCode {
        SpCode::new(tuples.to_vec()).unwrap()
    }

    #[test]
    fn order_two_trees_read_as_listed() {
        for (slot, word) in [
            (LEFT, vec![2, 2, 1, 1]),
            (MIDDLE, vec![1, 2, 2, 1]),
            (RIGHT, vec![1, 1, 2, 2]),
        ] {
            let mut slots = vec![[None; 3]; 2];
            slots[0][slot] = Some(2);
            let tree = TernaryTree::new(slots).unwrap();
            assert_eq!(tree_to_perm(&tree), word);
            assert_eq!(perm_to_tree(&word).unwrap(), tree);
        }
        let single = TernaryTree::new(vec![[None; 3]]).unwrap();
        assert_eq!(tree_to_perm(&single), vec![1, 1]);
    }

    #[test]
    fn order_three_figure_tree() {
        // 1 has left child 2 and right child 3; 3 has left child 4
        let tree = code_to_tree(&code(&[(0, 0), (1, 1), (1, 3), (3, 1)])).unwrap();
        assert_eq!(tree_to_perm(&tree), vec![2, 2, 1, 1, 4, 4, 3, 3]);
        assert_eq!(tree_to_code(&tree), code(&[(0, 0), (1, 1), (1, 3), (3, 1)]));
    }

    #[test]
    fn code_to_tree_matches_decode() {
        for n in 1..=6 {
            for c in enumerate_codes(n, DEFAULT_CAP).unwrap() {
                let tree = code_to_tree(&c).unwrap();
                assert_eq!(tree_to_perm(&tree), decode(&c).unwrap());
                assert_eq!(tree_to_code(&tree), c);
            }
        }
    }

    #[test]
    fn round_trip_words() {
        for n in 1..=6 {
            for sp in enumerate_q(n, 2, DEFAULT_CAP).unwrap() {
                let tree = perm_to_tree(sp.word()).unwrap();
                assert_eq!(tree_to_perm(&tree), sp.word());
            }
        }
    }

    #[test]
    fn occupied_slot_is_rejected() {
        // (1,1) twice is already rejected by the code validator, so force
        // the collision through a raw code with distinct tuples mapping to
        // the same slot: impossible; instead check the validator directly.
        assert!(TernaryTree::new(vec![[Some(2), None, None], [Some(2), None, None]]).is_err());
    }

    #[test]
    fn exterior_counts_track_statistics() {
        let t = perm_to_tree(&[2, 2, 1, 1]).unwrap();
        assert_eq!(t.exterior_counts(), (1, 2, 2));
        let single = perm_to_tree(&[1, 1]).unwrap();
        assert_eq!(single.exterior_counts(), (1, 1, 1));
        for n in 1..=5 {
            for sp in enumerate_q(n, 2, DEFAULT_CAP).unwrap() {
                let t = perm_to_tree(sp.word()).unwrap();
                let (exl, exm, exr) = t.exterior_counts();
                assert_eq!(exl + exm + exr, 2 * n as u64 + 1);
                use crate::stats::{scalar_stat, StatId};
                assert_eq!(exl, scalar_stat(sp.word(), StatId::Asc));
                assert_eq!(exm, scalar_stat(sp.word(), StatId::Plat));
                assert_eq!(exr, scalar_stat(sp.word(), StatId::Des));
            }
        }
    }

    #[test]
    fn plane_tree_profiles() {
        // n=3, bound 3: one path (profile: 1 leaf, 2 deg-1), two stars
        // (2 leaves, 1 deg-2)
        let trees = enumerate_plane_trees(3, 3, DEFAULT_CAP).unwrap();
        let mut by_profile: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
        for t in &trees {
            *by_profile.entry(t.degree_profile()).or_default() += 1;
        }
        let expected: BTreeMap<Vec<u64>, usize> =
            [(vec![1, 2, 0], 1), (vec![2, 0, 1], 2)].into_iter().collect();
        assert_eq!(by_profile, expected);

        assert_eq!(enumerate_plane_trees(1, 3, DEFAULT_CAP).unwrap().len(), 1);

        // n=4, bound 3: profiles with gamma counts 1, 8, 6
        let trees = enumerate_plane_trees(4, 3, DEFAULT_CAP).unwrap();
        let mut by_profile: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
        for t in &trees {
            *by_profile.entry(t.degree_profile()).or_default() += 1;
        }
        let expected: BTreeMap<Vec<u64>, usize> =
            [(vec![1, 3, 0, 0], 1), (vec![2, 1, 1, 0], 8), (vec![3, 0, 0, 1], 6)]
                .into_iter()
                .collect();
        assert_eq!(by_profile, expected);
    }

    #[test]
    fn plane_tree_counts() {
        // totals with degree bound 3, small orders by hand
        for (n, expected) in [(1u32, 1usize), (2, 1), (3, 3), (4, 15), (5, 81)] {
            assert_eq!(enumerate_plane_trees(n, 3, DEFAULT_CAP).unwrap().len(), expected);
        }
        // unbounded (degree < n suffices): (2n-3)!! plane recursive trees
        for n in 2..=6u32 {
            let count = enumerate_plane_trees(n, n - 1, DEFAULT_CAP).unwrap().len();
            let dfact: u128 = (1..n as u128).map(|j| 2 * j - 1).product();
            assert_eq!(count as u128, dfact);
        }
    }
}
