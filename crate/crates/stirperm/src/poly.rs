//! Exact sparse multivariate polynomial arithmetic over arbitrary-precision
//! integers, with formal partial derivatives, simultaneous substitution,
//! elementary symmetric functions and conversion to the elementary basis.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sparse multivariate polynomial with `BigInt` coefficients.
///
/// Terms map exponent vectors (aligned with `vars`) to nonzero
/// coefficients. Equality is semantic: variables that never occur with a
/// positive exponent do not matter, so `x` over `{x}` equals `x` over
/// `{x,y}`.
#[derive(Clone, Debug, Default)]
pub struct Polynomial {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Polynomial { vars: Vec::new(), terms }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], BigInt::one());
        Polynomial { vars: vec![name.to_string()], terms }
    }

    /// A single monomial `c * prod vars[i]^exps[i]`.
    pub fn monomial(c: impl Into<BigInt>, vars: &[&str], exps: &[u32]) -> Self {
        assert_eq!(vars.len(), exps.len());
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps.to_vec(), c);
        }
        Polynomial { vars: vars.iter().map(|s| s.to_string()).collect(), terms }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms as (exponent vector aligned with `vars`, coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Total degree of the polynomial, or None for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Remap this polynomial onto a wider variable list that contains all
    /// of `self.vars`.
    fn reindex(&self, vars: &[String]) -> Polynomial {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("target vars must cover source"))
            .collect();
        let mut terms = BTreeMap::new();
        for (exps, c) in &self.terms {
            let mut e = vec![0u32; vars.len()];
            for (i, &x) in exps.iter().enumerate() {
                e[map[i]] = x;
            }
            terms.insert(e, c.clone());
        }
        Polynomial { vars: vars.to_vec(), terms }
    }

    /// Union alphabet: left order first, then unseen right variables.
    fn union_vars(&self, other: &Polynomial) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    fn insert_term(terms: &mut BTreeMap<Vec<u32>, BigInt>, exps: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let vars = self.union_vars(other);
        let a = self.reindex(&vars);
        let b = other.reindex(&vars);
        let mut terms = a.terms;
        for (exps, c) in b.terms {
            Self::insert_term(&mut terms, exps, c);
        }
        Polynomial { vars, terms }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Polynomial {
        let c = c.into();
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * &c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let vars = self.union_vars(other);
        let a = self.reindex(&vars);
        let b = other.reindex(&vars);
        let mut terms = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                Self::insert_term(&mut terms, exps, ca * cb);
            }
        }
        Polynomial { vars, terms }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative with respect to `name`. Unknown variables
    /// differentiate to zero.
    pub fn partial(&self, name: &str) -> Polynomial {
        let Some(i) = self.index_of(name) else {
            return Polynomial::zero();
        };
        let mut terms = BTreeMap::new();
        for (exps, c) in &self.terms {
            if exps[i] == 0 {
                continue;
            }
            let mut e = exps.clone();
            e[i] -= 1;
            Self::insert_term(&mut terms, e, c * BigInt::from(exps[i]));
        }
        Polynomial { vars: self.vars.clone(), terms }
    }

    /// Simultaneous substitution. Variables missing from `map` stay
    /// themselves.
    pub fn substitute(&self, map: &BTreeMap<String, Polynomial>) -> Polynomial {
        let images: Vec<Polynomial> = self
            .vars
            .iter()
            .map(|v| map.get(v).cloned().unwrap_or_else(|| Polynomial::var(v)))
            .collect();
        let mut acc = Polynomial::zero();
        for (exps, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e));
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Coefficient of the monomial described by `assignment` (variables not
    /// mentioned must have exponent zero).
    pub fn coefficient(&self, assignment: &[(&str, u32)]) -> BigInt {
        let mut exps = vec![0u32; self.vars.len()];
        for (name, e) in assignment {
            match self.index_of(name) {
                Some(i) => exps[i] = *e,
                None if *e == 0 => {}
                None => return BigInt::zero(),
            }
        }
        self.terms.get(&exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficient vector `[c_0, c_1, ...]` when the polynomial only uses
    /// the single variable `name`.
    pub fn to_univariate(&self, name: &str) -> Result<Vec<BigInt>> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (exps, c) in &self.terms {
            let mut deg = 0u32;
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    if self.vars[i] != name {
                        return Err(Error::Domain(format!(
                            "polynomial uses variable {} besides {}",
                            self.vars[i], name
                        )));
                    }
                    deg = e;
                }
            }
            let deg = deg as usize;
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, BigInt::zero());
            }
            coeffs[deg] = c.clone();
        }
        Ok(coeffs)
    }

    /// Build `sum coeffs[i] * name^i`.
    pub fn from_univariate(coeffs: &[BigInt], name: &str) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                terms.insert(vec![i as u32], c.clone());
            }
        }
        Polynomial { vars: vec![name.to_string()], terms }
    }

    /// True when the polynomial is invariant under every permutation of its
    /// own variable list.
    pub fn is_symmetric(&self) -> bool {
        let m = self.vars.len();
        for i in 0..m.saturating_sub(1) {
            let swapped: BTreeMap<Vec<u32>, BigInt> = self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(i, i + 1);
                    (e, c.clone())
                })
                .collect();
            if swapped != self.terms {
                return false;
            }
        }
        true
    }

    /// The elementary symmetric polynomial `e_k` in the given variables.
    /// `e_0 = 1`; `k` beyond the variable count is rejected.
    pub fn elementary(k: usize, vars: &[&str]) -> Result<Polynomial> {
        if k > vars.len() {
            return Err(Error::Domain(format!(
                "e_{k} undefined over {} variables",
                vars.len()
            )));
        }
        let mut acc = Polynomial::zero();
        for subset in vars.iter().combinations(k) {
            let mut term = Polynomial::one();
            for v in subset {
                term = term.mul(&Polynomial::var(v));
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Express a symmetric polynomial in the elementary basis.
    ///
    /// Returns a polynomial over the fresh alphabet `e1..e_m` (m = number
    /// of input variables) such that substituting `e_i -> elementary(i)`
    /// reproduces the input exactly. Uses lex leading-term reduction.
    pub fn to_elementary_basis(&self) -> Result<Polynomial> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric(self.vars.join(",")));
        }
        let m = self.vars.len();
        let var_refs: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let e_vars: Vec<String> = (1..=m).map(|i| format!("e{i}")).collect();
        let elems: Vec<Polynomial> = (1..=m)
            .map(|i| Polynomial::elementary(i, &var_refs))
            .collect::<Result<_>>()?;

        let mut rest = self.clone();
        let mut out = BTreeMap::new();
        while !rest.is_zero() {
            // BTreeMap keys are lex-ordered, so the last key is the lex
            // leading monomial.
            let (exps, coef) = rest.terms.iter().next_back().expect("nonzero");
            let exps = exps.clone();
            let coef = coef.clone();
            if exps.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::NotSymmetric(self.vars.join(",")));
            }
            // e_1^(a1-a2) e_2^(a2-a3) ... e_m^(am) has the same lex leading
            // monomial.
            let mut e_exps = vec![0u32; m];
            let mut reducer = Polynomial::constant(coef.clone());
            for i in 0..m {
                let next = if i + 1 < m { exps[i + 1] } else { 0 };
                let d = exps[i] - next;
                e_exps[i] = d;
                if d > 0 {
                    reducer = reducer.mul(&elems[i].pow(d));
                }
            }
            rest = rest.sub(&reducer);
            Self::insert_term(&mut out, e_exps, coef);
        }
        Ok(Polynomial { vars: e_vars, terms: out })
    }

    /// Substitute `e_i -> elementary(i, vars)`; inverse of
    /// [`to_elementary_basis`](Self::to_elementary_basis).
    pub fn expand_elementary(&self, vars: &[&str]) -> Result<Polynomial> {
        let mut map = BTreeMap::new();
        for (i, _) in vars.iter().enumerate() {
            map.insert(format!("e{}", i + 1), Polynomial::elementary(i + 1, vars)?);
        }
        Ok(self.substitute(&map))
    }

    /// Terms in graded lexicographic order on the declared variable order,
    /// largest first. This fixes printing and the JSON encoding.
    fn sorted_terms(&self) -> Vec<(&Vec<u32>, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(ea, _), (eb, _)| {
            let da: u32 = ea.iter().sum();
            let db: u32 = eb.iter().sum();
            db.cmp(&da).then_with(|| eb.cmp(ea))
        });
        v
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        let vars = self.union_vars(other);
        self.reindex(&vars).terms == other.reindex(&vars).terms
    }
}

impl Eq for Polynomial {}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in self.sorted_terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || exps.iter().all(|&e| e == 0) {
                factors.push(abs.to_string());
            }
            for (i, &e) in exps.iter().enumerate() {
                if e == 1 {
                    factors.push(self.vars[i].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.vars[i], e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// JSON shape: `{"vars": [...], "terms": [{"coef": "decimal", "exps": [...]}]}`.
/// Coefficients are decimal strings so they stay bit-exact at any size.
#[derive(Serialize, Deserialize)]
pub struct PolynomialJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
pub struct TermJson {
    pub coef: String,
    pub exps: Vec<u32>,
}

impl From<&Polynomial> for PolynomialJson {
    fn from(p: &Polynomial) -> Self {
        PolynomialJson {
            vars: p.vars.clone(),
            terms: p
                .sorted_terms()
                .into_iter()
                .map(|(e, c)| TermJson { coef: c.to_string(), exps: e.clone() })
                .collect(),
        }
    }
}

impl TryFrom<PolynomialJson> for Polynomial {
    type Error = Error;

    fn try_from(j: PolynomialJson) -> Result<Polynomial> {
        let names: BTreeSet<&String> = j.vars.iter().collect();
        if names.len() != j.vars.len() {
            return Err(Error::InvalidObject("duplicate variable name".into()));
        }
        let mut terms = BTreeMap::new();
        for t in j.terms {
            if t.exps.len() != j.vars.len() {
                return Err(Error::InvalidObject(
                    "exponent vector length does not match vars".into(),
                ));
            }
            let c: BigInt = t
                .coef
                .parse()
                .map_err(|_| Error::InvalidObject(format!("bad coefficient {:?}", t.coef)))?;
            Polynomial::insert_term(&mut terms, t.exps, c);
        }
        Ok(Polynomial { vars: j.vars, terms })
    }
}

impl Polynomial {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolynomialJson::from(self)).expect("serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Polynomial> {
        let j: PolynomialJson =
            serde_json::from_str(s).map_err(|e| Error::InvalidObject(e.to_string()))?;
        j.try_into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn p(src: &str) -> Polynomial {
        parse_poly(src).unwrap()
    }

    #[test]
    fn ring_basics() {
        assert_eq!(p("(x+y)*(x-y)"), p("x^2 - y^2"));
        assert_eq!(p("x").add(&Polynomial::zero()), p("x"));
        assert_eq!(p("x*y*z*(x+y+z)"), p("x^2*y*z + x*y^2*z + x*y*z^2"));
    }

    #[test]
    fn partial_derivatives() {
        assert_eq!(p("x^2*y").partial("x"), p("2*x*y"));
        assert_eq!(Polynomial::constant(7).partial("x"), Polynomial::zero());
        assert_eq!(p("x*y").partial("x").partial("y"), p("x*y").partial("y").partial("x"));
        // xyz*(dx+dy+dz) applied to xyz
        let w = p("x*y*z");
        let d = w.partial("x").add(&w.partial("y")).add(&w.partial("z"));
        assert_eq!(w.mul(&d), p("x^2*y^2*z + x^2*y*z^2 + x*y^2*z^2"));
    }

    #[test]
    fn substitution() {
        let mut map = BTreeMap::new();
        map.insert("u".to_string(), p("x+y+z"));
        map.insert("v".to_string(), p("x*y+y*z+z*x"));
        map.insert("w".to_string(), p("x*y*z"));
        assert_eq!(p("v*w").substitute(&map), p("(x*y+y*z+z*x)*(x*y*z)"));
        let id = BTreeMap::new();
        assert_eq!(p("x^2 - 3*y").substitute(&id), p("x^2 - 3*y"));
    }

    #[test]
    fn elementary_symmetric() {
        assert_eq!(Polynomial::elementary(0, &["x", "y", "z"]).unwrap(), Polynomial::one());
        assert_eq!(Polynomial::elementary(3, &["x", "y", "z"]).unwrap(), p("x*y*z"));
        assert_eq!(Polynomial::elementary(2, &["x", "y", "z"]).unwrap(), p("x*y+y*z+z*x"));
        assert!(Polynomial::elementary(4, &["x", "y", "z"]).is_err());
    }

    #[test]
    fn elementary_basis_conversion() {
        assert_eq!(p("x+y+z").to_elementary_basis().unwrap(), p("e1"));
        // (x+y+z)^2 * xyz + 6*(xyz)^2
        let n3 = p("(x+y+z)^2*x*y*z + 6*(x*y*z)^2");
        assert_eq!(n3.to_elementary_basis().unwrap(), p("e1^2*e3 + 6*e3^2"));
        let back = n3
            .to_elementary_basis()
            .unwrap()
            .expand_elementary(&["x", "y", "z"])
            .unwrap();
        assert_eq!(back, n3);
        assert!(p("x^2 + y").to_elementary_basis().is_err());
    }

    #[test]
    fn equality_ignores_unused_vars() {
        let a = Polynomial::monomial(1, &["x", "y"], &[1, 0]);
        assert_eq!(a, Polynomial::var("x"));
        assert_ne!(a, Polynomial::var("y"));
    }

    #[test]
    fn json_round_trip() {
        let q = p("3*x^2*y - 12345678901234567890*z + 1");
        assert_eq!(Polynomial::from_json(&q.to_json()).unwrap(), q);
    }

    #[test]
    fn display_is_graded_lex() {
        assert_eq!(p("1 + x + x^2*y").to_string(), "x^2*y + x + 1");
        assert_eq!(p("x - x").to_string(), "0");
    }
}
