//! Context-free grammars in the differential sense: a finite map from
//! symbols to polynomials inducing a derivation D_G (linear, Leibniz).
//! Symbols without a rule derive to zero, so letters can safely be treated
//! as constants.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::parse::parse_poly;
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grammar {
    rules: BTreeMap<String, Polynomial>,
}

impl Grammar {
    pub fn new(rules: BTreeMap<String, Polynomial>) -> Self {
        Grammar { rules }
    }

    pub fn rules(&self) -> &BTreeMap<String, Polynomial> {
        &self.rules
    }

    pub fn rule(&self, symbol: &str) -> Option<&Polynomial> {
        self.rules.get(symbol)
    }

    /// One application of the formal derivative.
    pub fn derive(&self, p: &Polynomial) -> Polynomial {
        let vars: Vec<String> = p.vars().to_vec();
        let var_refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        let mut acc = Polynomial::zero();
        for (i, v) in vars.iter().enumerate() {
            let Some(rhs) = self.rules.get(v) else { continue };
            // product rule: differentiate the i-th variable of every term
            let mut part = Polynomial::zero();
            for (exps, c) in p.terms() {
                let e = exps[i];
                if e == 0 {
                    continue;
                }
                let mut lowered = exps.clone();
                lowered[i] -= 1;
                let mono = Polynomial::monomial(c * BigInt::from(e), &var_refs, &lowered);
                part = part.add(&mono);
            }
            acc = acc.add(&part.mul(rhs));
        }
        acc
    }

    /// n-fold derivative, normalizing after each step.
    pub fn derive_n(&self, p: &Polynomial, n: u32) -> Polynomial {
        let mut acc = p.clone();
        for _ in 0..n {
            acc = self.derive(&acc);
        }
        acc
    }
}

impl fmt::Display for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (sym, rhs) in &self.rules {
            if !first {
                writeln!(f, ";")?;
            }
            write!(f, "{sym} -> {rhs}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parse the rule DSL: one `sym -> polynomial` per line or
/// semicolon-separated; `#` starts a comment. Duplicate rules are
/// rejected; the pretty-printer round-trips.
pub fn parse_grammar(src: &str) -> Result<Grammar> {
    let mut rules = BTreeMap::new();
    for (lineno, raw_line) in src.lines().enumerate() {
        let line = raw_line.split('#').next().unwrap_or("");
        for piece in line.split(';') {
            if piece.trim().is_empty() {
                continue;
            }
            let col_of = |sub: &str| offset_of(raw_line, sub) + 1;
            let Some((lhs, rhs)) = piece.split_once("->") else {
                return Err(Error::Parse {
                    line: lineno + 1,
                    col: col_of(piece.trim_start()),
                    msg: format!("expected `sym -> polynomial`, got {:?}", piece.trim()),
                });
            };
            let sym = lhs.trim();
            if sym.is_empty()
                || !sym.chars().next().unwrap().is_ascii_alphabetic()
                || !sym.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                return Err(Error::Parse {
                    line: lineno + 1,
                    col: col_of(lhs.trim_start()),
                    msg: format!("bad rule symbol {sym:?}"),
                });
            }
            let poly = parse_poly(rhs).map_err(|e| match e {
                Error::Parse { col, msg, .. } => Error::Parse {
                    line: lineno + 1,
                    col: offset_of(raw_line, rhs) + col,
                    msg,
                },
                other => other,
            })?;
            if rules.insert(sym.to_string(), poly).is_some() {
                return Err(Error::Parse {
                    line: lineno + 1,
                    col: col_of(lhs.trim_start()),
                    msg: format!("duplicate rule for {sym}"),
                });
            }
        }
    }
    Ok(Grammar { rules })
}

fn offset_of(hay: &str, needle: &str) -> usize {
    let hay_ptr = hay.as_ptr() as usize;
    let needle_ptr = needle.as_ptr() as usize;
    needle_ptr.saturating_sub(hay_ptr)
}

/// The built-in grammars.
///
/// * `G`: x, y, z each rewrite to xyz.
/// * `H`: u -> 3w, v -> 2uw, w -> vw (the image of G under u = x+y+z,
///   v = xy+yz+zx, w = xyz).
/// * `I`: p3 -> p1*p3, p1 -> 6*p2*p3, p2 -> p3.
/// * `G1` (needs k): x1..x_{k+1} each rewrite to x1*...*x_{k+1}.
/// * `G2` (needs k): x1 -> e_{k+1}, e_i -> (k-i+2) e_{i-1} e_{k+1} with
///   e_0 treated as 1, the e_i being opaque letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinGrammar {
    G,
    H,
    I,
    G1,
    G2,
}

impl BuiltinGrammar {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "G" => Ok(BuiltinGrammar::G),
            "H" => Ok(BuiltinGrammar::H),
            "I" => Ok(BuiltinGrammar::I),
            "G1" => Ok(BuiltinGrammar::G1),
            "G2" => Ok(BuiltinGrammar::G2),
            _ => Err(Error::UnknownName(format!("grammar {s:?}"))),
        }
    }
}

pub fn builtin(name: BuiltinGrammar, k: Option<u32>) -> Result<Grammar> {
    let need_k = || {
        k.filter(|&k| k >= 1)
            .ok_or_else(|| Error::Domain("this grammar needs an arity k >= 1".into()))
    };
    match name {
        BuiltinGrammar::G => parse_grammar("x -> x*y*z; y -> x*y*z; z -> x*y*z"),
        BuiltinGrammar::H => parse_grammar("u -> 3*w; v -> 2*u*w; w -> v*w"),
        BuiltinGrammar::I => parse_grammar("p3 -> p1*p3; p1 -> 6*p2*p3; p2 -> p3"),
        BuiltinGrammar::G1 => {
            let k = need_k()?;
            let mut rules = BTreeMap::new();
            let product = (1..=k + 1)
                .map(|i| Polynomial::var(&format!("x{i}")))
                .fold(Polynomial::one(), |acc, v| acc.mul(&v));
            for i in 1..=k + 1 {
                rules.insert(format!("x{i}"), product.clone());
            }
            Ok(Grammar { rules })
        }
        BuiltinGrammar::G2 => {
            let k = need_k()?;
            let mut rules = BTreeMap::new();
            let top = Polynomial::var(&format!("e{}", k + 1));
            rules.insert("x1".to_string(), top.clone());
            for i in 1..=k + 1 {
                let coeff = BigInt::from(k + 2 - i);
                let lower = if i == 1 {
                    Polynomial::one()
                } else {
                    Polynomial::var(&format!("e{}", i - 1))
                };
                rules.insert(format!("e{i}"), lower.mul(&top).scale(coeff));
            }
            Ok(Grammar { rules })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(src: &str) -> Polynomial {
        parse_poly(src).unwrap()
    }

    #[test]
    fn parses_and_round_trips() {
        let g = parse_grammar("x -> x*y*z; y -> x*y*z; z -> x*y*z").unwrap();
        assert_eq!(g, builtin(BuiltinGrammar::G, None).unwrap());
        let printed = g.to_string();
        assert_eq!(parse_grammar(&printed).unwrap(), g);

        let h = parse_grammar("u -> 3*w\nv -> 2*u*w\nw -> v*w").unwrap();
        assert_eq!(h.rule("u").unwrap(), &p("3*w"));

        assert!(parse_grammar("x -> x; x -> y").is_err());
        assert!(parse_grammar("1x -> y").is_err());
        assert!(parse_grammar("x => y").is_err());
        match parse_grammar("x -> y\nz -> w^") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn empty_rule_set_derives_to_zero() {
        let g = parse_grammar("").unwrap();
        assert_eq!(g.derive(&p("x^2 + 3*y")), Polynomial::zero());
    }

    #[test]
    fn derivative_basics() {
        let g = builtin(BuiltinGrammar::G, None).unwrap();
        assert_eq!(g.derive(&p("x")), p("x*y*z"));
        assert_eq!(g.derive_n(&p("x"), 2), p("x^2*y^2*z + x^2*y*z^2 + x*y^2*z^2"));

        let i = builtin(BuiltinGrammar::I, None).unwrap();
        assert_eq!(i.rule("p2").unwrap(), &p("p3"));
        assert_eq!(i.derive_n(&p("p3"), 1), p("p1*p3"));
        assert_eq!(i.derive_n(&p("p3"), 2), p("p1^2*p3 + 6*p2*p3^2"));
        assert_eq!(i.derive_n(&p("p3"), 3), p("p1^3*p3 + 24*p1*p2*p3^2 + 6*p3^3"));
    }

    #[test]
    fn leibniz_and_linearity() {
        let g = builtin(BuiltinGrammar::H, None).unwrap();
        let a = p("u^2*w - 3*v");
        let b = p("v*w + 2");
        assert_eq!(g.derive(&a.mul(&b)), g.derive(&a).mul(&b).add(&a.mul(&g.derive(&b))));
        let lin = g.derive(&a.scale(5).add(&b.scale(-2)));
        assert_eq!(lin, g.derive(&a).scale(5).add(&g.derive(&b).scale(-2)));
    }

    #[test]
    fn builtin_g1_g2() {
        let g1 = builtin(BuiltinGrammar::G1, Some(2)).unwrap();
        assert_eq!(g1.rule("x2").unwrap(), &p("x1*x2*x3"));
        assert_eq!(g1.derive(&p("x1")), p("x1*x2*x3"));

        let g2 = builtin(BuiltinGrammar::G2, Some(3)).unwrap();
        assert_eq!(g2.rule("e2").unwrap(), &p("3*e1*e4"));
        assert_eq!(g2.rule("e1").unwrap(), &p("4*e4"));
        assert_eq!(g2.rule("x1").unwrap(), &p("e4"));
        assert!(builtin(BuiltinGrammar::G2, None).is_err());

        // displayed iterates: D^2(x1) = e_k e_{k+1}, D^3 = e_k^2 e_{k+1} + 2 e_{k-1} e_{k+1}^2
        let k = 3;
        let g2 = builtin(BuiltinGrammar::G2, Some(k)).unwrap();
        assert_eq!(g2.derive_n(&p("x1"), 2), p("e3*e4"));
        assert_eq!(g2.derive_n(&p("x1"), 3), p("e3^2*e4 + 2*e2*e4^2"));
        assert_eq!(
            g2.derive_n(&p("x1"), 4),
            p("e3^3*e4 + 8*e2*e3*e4^2 + 6*e1*e4^3")
        );
        // the order-5 expansion at k = 4
        let g2 = builtin(BuiltinGrammar::G2, Some(4)).unwrap();
        assert_eq!(
            g2.derive_n(&p("x1"), 5),
            p("e4^4*e5 + 22*e4^2*e3*e5^2 + 16*e3^2*e5^3 + 42*e2*e4*e5^3 + 24*e1*e5^4")
        );
    }
}
