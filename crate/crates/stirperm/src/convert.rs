//! Conversions between the object families, routed through the code
//! representation, plus the JSON encodings used on the wire.
//!
//! JSON shapes: a word is an array of integers; a code an array of [a,b]
//! pairs starting with [0,0]; a matching an array of [i,j] blocks in
//! standard form; a ternary tree nests {"label": v, "slots": [c|null x3]}.

use serde_json::{json, Value};

use crate::code::{decode, encode, SpCode};
use crate::error::{Error, Result};
use crate::trapezoid::{
    code_from_dumont, dumont_from_code, dumont_from_riordan, matching_from_riordan,
    riordan_from_dumont, riordan_from_matching, DumontWord, PerfectMatching, RiordanWord,
};
use crate::trees::{code_to_tree, tree_to_code, PlaneTree, TernaryTree};
use crate::words::{Letter, StirlingPerm};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObjectKind {
    Stirling,
    Code,
    Tree,
    Riordan,
    Dumont,
    Matching,
}

impl ObjectKind {
    pub fn parse(s: &str) -> Result<ObjectKind> {
        match s {
            "stirling" => Ok(ObjectKind::Stirling),
            "code" => Ok(ObjectKind::Code),
            "tree" => Ok(ObjectKind::Tree),
            "riordan" => Ok(ObjectKind::Riordan),
            "dumont" => Ok(ObjectKind::Dumont),
            "matching" => Ok(ObjectKind::Matching),
            _ => Err(Error::UnknownName(format!("object kind {s:?}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ObjectKind::Stirling => "stirling",
            ObjectKind::Code => "code",
            ObjectKind::Tree => "tree",
            ObjectKind::Riordan => "riordan",
            ObjectKind::Dumont => "dumont",
            ObjectKind::Matching => "matching",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Word(Vec<Letter>),
    Code(SpCode),
    Tree(TernaryTree),
    Riordan(RiordanWord),
    Dumont(DumontWord),
    Matching(PerfectMatching),
}

impl Object {
    pub fn kind(&self) -> ObjectKind {
        match self {
            Object::Word(_) => ObjectKind::Stirling,
            Object::Code(_) => ObjectKind::Code,
            Object::Tree(_) => ObjectKind::Tree,
            Object::Riordan(_) => ObjectKind::Riordan,
            Object::Dumont(_) => ObjectKind::Dumont,
            Object::Matching(_) => ObjectKind::Matching,
        }
    }

    fn into_code(self) -> Result<SpCode> {
        Ok(match self {
            Object::Word(w) => encode(&w)?,
            Object::Code(c) => c,
            Object::Tree(t) => tree_to_code(&t),
            Object::Riordan(t) => code_from_dumont(&dumont_from_riordan(&t)),
            Object::Dumont(w) => code_from_dumont(&w),
            Object::Matching(m) => {
                code_from_dumont(&dumont_from_riordan(&riordan_from_matching(&m)?))
            }
        })
    }

    fn from_code(code: SpCode, kind: ObjectKind) -> Result<Object> {
        Ok(match kind {
            ObjectKind::Stirling => Object::Word(decode(&code)?),
            ObjectKind::Code => Object::Code(code),
            ObjectKind::Tree => Object::Tree(code_to_tree(&code)?),
            ObjectKind::Dumont => Object::Dumont(dumont_from_code(&code)),
            ObjectKind::Riordan => Object::Riordan(riordan_from_dumont(&dumont_from_code(&code))),
            ObjectKind::Matching => Object::Matching(matching_from_riordan(&riordan_from_dumont(
                &dumont_from_code(&code),
            ))),
        })
    }

    /// Convert to another family through the code hub.
    pub fn convert(self, target: ObjectKind) -> Result<Object> {
        if self.kind() == target {
            return Ok(self);
        }
        Object::from_code(self.into_code()?, target)
    }

    pub fn to_json_value(&self) -> Value {
        match self {
            Object::Word(w) => json!(w),
            Object::Code(c) => {
                Value::Array(c.tuples().iter().map(|&(a, b)| json!([a, b])).collect())
            }
            Object::Tree(t) => ternary_to_json(t, 1),
            Object::Riordan(t) => json!(t.entries()),
            Object::Dumont(w) => json!(w.entries()),
            Object::Matching(m) => {
                Value::Array(m.blocks().iter().map(|&(a, b)| json!([a, b])).collect())
            }
        }
    }

    pub fn from_json_value(kind: ObjectKind, v: &Value) -> Result<Object> {
        match kind {
            ObjectKind::Stirling => {
                let word = int_array(v)?;
                let word: Vec<Letter> = word
                    .into_iter()
                    .map(|x| u32::try_from(x).map_err(|_| bad("letters must be positive")))
                    .collect::<Result<_>>()?;
                // arity is determined by the word itself
                let max = word.iter().max().copied().unwrap_or(0);
                if max == 0 {
                    return Err(bad("empty word"));
                }
                let k = (word.len() as u32) / max;
                Ok(Object::Word(StirlingPerm::new(word, k.max(1))?.into_word()))
            }
            ObjectKind::Code => {
                let pairs = pair_array(v)?;
                let tuples = pairs
                    .into_iter()
                    .map(|(a, b)| {
                        Ok((
                            u32::try_from(a).map_err(|_| bad("code entries must be >= 0"))?,
                            u8::try_from(b).map_err(|_| bad("code entries must be >= 0"))?,
                        ))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Object::Code(SpCode::new(tuples)?))
            }
            ObjectKind::Tree => Ok(Object::Tree(ternary_from_json(v)?)),
            ObjectKind::Riordan => {
                let entries = int_array(v)?
                    .into_iter()
                    .map(|x| u32::try_from(x).map_err(|_| bad("riordan entries are positive")))
                    .collect::<Result<_>>()?;
                Ok(Object::Riordan(RiordanWord::new(entries)?))
            }
            ObjectKind::Dumont => Ok(Object::Dumont(DumontWord::new(int_array(v)?)?)),
            ObjectKind::Matching => {
                let blocks = pair_array(v)?
                    .into_iter()
                    .map(|(a, b)| {
                        Ok((
                            u32::try_from(a).map_err(|_| bad("matching entries are positive"))?,
                            u32::try_from(b).map_err(|_| bad("matching entries are positive"))?,
                        ))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Object::Matching(PerfectMatching::new(blocks)?))
            }
        }
    }
}

fn bad(msg: &str) -> Error {
    Error::InvalidObject(msg.to_string())
}

fn int_array(v: &Value) -> Result<Vec<i64>> {
    v.as_array()
        .ok_or_else(|| bad("expected a JSON array"))?
        .iter()
        .map(|x| x.as_i64().ok_or_else(|| bad("expected an integer")))
        .collect()
}

fn pair_array(v: &Value) -> Result<Vec<(i64, i64)>> {
    v.as_array()
        .ok_or_else(|| bad("expected a JSON array"))?
        .iter()
        .map(|x| {
            let pair = int_array(x)?;
            if pair.len() != 2 {
                return Err(bad("expected [a,b] pairs"));
            }
            Ok((pair[0], pair[1]))
        })
        .collect()
}

fn ternary_to_json(tree: &TernaryTree, v: u32) -> Value {
    let slots: Vec<Value> = (0..3)
        .map(|s| match tree.child(v, s) {
            Some(c) => ternary_to_json(tree, c),
            None => Value::Null,
        })
        .collect();
    json!({"label": v, "slots": slots})
}

fn ternary_from_json(v: &Value) -> Result<TernaryTree> {
    fn walk(v: &Value, slots: &mut Vec<(u32, [Option<u32>; 3])>) -> Result<u32> {
        let obj = v.as_object().ok_or_else(|| bad("expected a tree object"))?;
        let label = obj
            .get("label")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("tree node needs a positive label"))? as u32;
        let raw = obj
            .get("slots")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("tree node needs a slots array"))?;
        if raw.len() != 3 {
            return Err(bad("tree slots must have exactly three entries"));
        }
        let mut children = [None; 3];
        for (i, child) in raw.iter().enumerate() {
            if !child.is_null() {
                children[i] = Some(walk(child, slots)?);
            }
        }
        slots.push((label, children));
        Ok(label)
    }
    let mut flat = Vec::new();
    let root = walk(v, &mut flat)?;
    if root != 1 {
        return Err(bad("tree root must be labelled 1"));
    }
    let n = flat.iter().map(|&(l, _)| l).max().unwrap_or(0) as usize;
    if flat.len() != n {
        return Err(bad("tree labels must be 1..=n"));
    }
    let mut slots = vec![[None; 3]; n];
    for (label, children) in flat {
        slots[(label - 1) as usize] = children;
    }
    TernaryTree::new(slots)
}

/// JSON for bounded-degree plane trees: {"label": v, "children": [...]}.
pub fn plane_tree_to_json(tree: &PlaneTree) -> Value {
    fn walk(tree: &PlaneTree, v: u32) -> Value {
        let children: Vec<Value> = tree.children()[(v - 1) as usize]
            .iter()
            .map(|&c| walk(tree, c))
            .collect();
        json!({"label": v, "children": children})
    }
    walk(tree, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{enumerate_q, DEFAULT_CAP};

    #[test]
    fn conversions_round_trip_through_every_kind() {
        let kinds = [
            ObjectKind::Stirling,
            ObjectKind::Code,
            ObjectKind::Tree,
            ObjectKind::Riordan,
            ObjectKind::Dumont,
            ObjectKind::Matching,
        ];
        for sp in enumerate_q(4, 2, DEFAULT_CAP).unwrap() {
            let start = Object::Word(sp.word().to_vec());
            for &k1 in &kinds {
                let there = start.clone().convert(k1).unwrap();
                let back = there.clone().convert(ObjectKind::Stirling).unwrap();
                assert_eq!(back, start, "via {k1:?}");
                // JSON round-trip at each kind
                let v = there.to_json_value();
                assert_eq!(Object::from_json_value(k1, &v).unwrap(), there);
            }
        }
    }

    #[test]
    fn worked_conversion() {
        let word: Vec<u32> = vec![5, 5, 1, 4, 4, 3, 3, 1, 2, 6, 6, 2];
        let code = Object::Word(word.clone()).convert(ObjectKind::Code).unwrap();
        assert_eq!(
            code.to_json_value().to_string(),
            "[[0,0],[1,3],[1,2],[3,1],[1,1],[2,2]]"
        );
    }

    #[test]
    fn rejects_invalid_json_objects() {
        assert!(Object::from_json_value(ObjectKind::Stirling, &json!([1, 2, 1, 2])).is_err());
        assert!(Object::from_json_value(ObjectKind::Code, &json!([[0, 0], [2, 1]])).is_err());
        assert!(Object::from_json_value(ObjectKind::Dumont, &json!([0, 5])).is_err());
        assert!(Object::from_json_value(ObjectKind::Matching, &json!([[1, 1]])).is_err());
        assert!(Object::from_json_value(ObjectKind::Stirling, &json!("nope")).is_err());
    }
}
