//! Named polynomial families, gamma tables and classical triangles.
//!
//! Every family here is computed along at least two independent routes
//! (statistic sum over the defining objects, recurrence, grammar
//! derivative, tree counts) and the routes are compared exactly; a
//! mismatch raises a route-disagreement error instead of picking a side.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::code::enumerate_codes;
use crate::error::{Error, Result};
use crate::grammar::{builtin, parse_grammar, BuiltinGrammar, Grammar};
use crate::poly::Polynomial;
use crate::stats::{j_stat, scalar_stat, des_type_b, JKind, StatId};
use crate::trees::code_to_tree;
use crate::words::{
    enumerate_permutations, enumerate_q, enumerate_signed, Letter,
};

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Stirling numbers of the second kind by the triangle recurrence.
pub fn stirling2(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    if n == 0 {
        return BigInt::one();
    }
    let zero = BigInt::zero();
    let mut row = vec![BigInt::one()]; // row 0
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); (m + 1) as usize];
        for j in 1..=m as usize {
            let above = if j < row.len() { &row[j] } else { &zero };
            next[j] = BigInt::from(j) * above + &row[j - 1];
        }
        row = next;
    }
    row[k as usize].clone()
}

/// Second-order Eulerian triangle row n as coefficients of x^0..x^n,
/// from the recurrence C_{n+1,j} = j C_{n,j} + (2n+2-j) C_{n,j-1}.
pub fn second_order_row(n: u32) -> Vec<BigInt> {
    let zero = BigInt::zero();
    let mut row = vec![BigInt::one()]; // n = 0: constant 1
    for m in 0..n {
        let mut next = vec![BigInt::zero(); m as usize + 2];
        for j in 1..next.len() {
            let same = if j < row.len() { &row[j] } else { &zero };
            let left = &row[j - 1];
            next[j] = BigInt::from(j) * same + BigInt::from(2 * m as u64 + 2 - j as u64) * left;
        }
        row = next;
    }
    row
}

pub fn second_order_eulerian(n: u32, j: u32) -> BigInt {
    let row = second_order_row(n);
    row.get(j as usize).cloned().unwrap_or_else(BigInt::zero)
}

/// Univariate generating polynomial of a scalar statistic over a word
/// family.
fn distribution_poly<I: IntoIterator<Item = Vec<Letter>>>(
    words: I,
    stat: impl Fn(&[Letter]) -> u64,
    var: &str,
) -> Polynomial {
    let mut counts: BTreeMap<u64, BigInt> = BTreeMap::new();
    for w in words {
        *counts.entry(stat(&w)).or_default() += 1;
    }
    let mut acc = Polynomial::zero();
    for (v, c) in counts {
        acc = acc.add(&Polynomial::monomial(c, &[var], &[v as u32]));
    }
    acc
}

/// The five univariate families: descents over permutations (A), type-B
/// descents over signed permutations (B), ascent-plateaux (M), left
/// ascent-plateaux (N) and plateaux (C) over Stirling permutations.
///
/// A uses descents with virtual zeros at both ends, so A_1 = x; this is
/// one factor of x off the classical Eulerian convention and is the
/// convention under which the convolution identities hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    A,
    B,
    M,
    N,
    C,
}

impl Family {
    pub fn parse(s: &str) -> Result<Family> {
        match s {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "M" => Ok(Family::M),
            "N" => Ok(Family::N),
            "C" => Ok(Family::C),
            _ => Err(Error::UnknownName(format!("family {s:?}"))),
        }
    }

    fn recurrence_step(self, n: u32, p: &Polynomial) -> Polynomial {
        let x = Polynomial::var("x");
        let dp = p.partial("x");
        let n = n as i64;
        match self {
            // A_{n+1} = (n+1) x A_n + x(1-x) A_n'
            Family::A => x.scale(n + 1).mul(p).add(&x.mul(&Polynomial::one().sub(&x)).mul(&dp)),
            // B_{n+1} = (2nx + 1 + x) B_n + 2x(1-x) B_n'
            Family::B => x
                .scale(2 * n + 1)
                .add(&Polynomial::one())
                .mul(p)
                .add(&x.mul(&Polynomial::one().sub(&x)).scale(2).mul(&dp)),
            // M_{n+1} = (2nx + 1) M_n + 2x(1-x) M_n'
            Family::M => x
                .scale(2 * n)
                .add(&Polynomial::one())
                .mul(p)
                .add(&x.mul(&Polynomial::one().sub(&x)).scale(2).mul(&dp)),
            // N_{n+1} = (2n+1) x N_n + 2x(1-x) N_n'
            Family::N => x.scale(2 * n + 1).mul(p).add(&x.mul(&Polynomial::one().sub(&x)).scale(2).mul(&dp)),
            // C_{n+1} = (2n+1) x C_n + x(1-x) C_n'
            Family::C => x.scale(2 * n + 1).mul(p).add(&x.mul(&Polynomial::one().sub(&x)).mul(&dp)),
        }
    }

    fn by_recurrence(self, n: u32) -> Polynomial {
        let mut p = Polynomial::one();
        for m in 0..n {
            p = self.recurrence_step(m, &p);
        }
        p
    }

    fn by_statistics(self, n: u32, cap: u64) -> Result<Polynomial> {
        Ok(match self {
            Family::A => distribution_poly(
                enumerate_permutations(n, cap)?,
                |w| scalar_stat(w, StatId::Des),
                "x",
            ),
            Family::B => {
                let mut counts: BTreeMap<u64, BigInt> = BTreeMap::new();
                for pi in enumerate_signed(n, cap)? {
                    *counts.entry(des_type_b(&pi)).or_default() += 1;
                }
                let mut acc = Polynomial::zero();
                for (v, c) in counts {
                    acc = acc.add(&Polynomial::monomial(c, &["x"], &[v as u32]));
                }
                acc
            }
            Family::M => distribution_poly(
                enumerate_q(n, 2, cap)?.map(|s| s.into_word()),
                |w| scalar_stat(w, StatId::Ap),
                "x",
            ),
            Family::N => distribution_poly(
                enumerate_q(n, 2, cap)?.map(|s| s.into_word()),
                |w| scalar_stat(w, StatId::Lap),
                "x",
            ),
            Family::C => distribution_poly(
                enumerate_q(n, 2, cap)?.map(|s| s.into_word()),
                |w| scalar_stat(w, StatId::Plat),
                "x",
            ),
        })
    }
}

/// Univariate family polynomial in x, computed by statistic sum and by
/// recurrence; the routes must agree exactly.
pub fn poly_family(f: Family, n: u32, cap: u64) -> Result<Polynomial> {
    let rec = f.by_recurrence(n);
    if n == 0 {
        return Ok(rec);
    }
    let stat = f.by_statistics(n, cap)?;
    if stat != rec {
        return Err(Error::RouteDisagreement {
            what: format!("{f:?}_{n}"),
            detail: format!("statistics gave {stat}, recurrence gave {rec}"),
        });
    }
    Ok(rec)
}

fn trivariate_stat_sum(
    n: u32,
    cap: u64,
    stats: [StatId; 3],
    vars: [&str; 3],
) -> Result<Polynomial> {
    let mut counts: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for sp in enumerate_q(n, 2, cap)? {
        let e: Vec<u32> = stats.iter().map(|&s| scalar_stat(sp.word(), s) as u32).collect();
        *counts.entry(e).or_default() += 1;
    }
    let mut acc = Polynomial::zero();
    for (e, c) in counts {
        acc = acc.add(&Polynomial::monomial(c, &vars, &e));
    }
    Ok(acc)
}

/// Trivariate second-order Eulerian polynomial in x, y, z; three routes
/// (statistic sum, grammar derivative, exterior tree counts) must agree.
pub fn poly_c3(n: u32, cap: u64) -> Result<Polynomial> {
    if n == 0 {
        return Ok(Polynomial::one());
    }
    let by_stats =
        trivariate_stat_sum(n, cap, [StatId::Asc, StatId::Des, StatId::Plat], ["x", "y", "z"])?;

    let g = builtin(BuiltinGrammar::G, None)?;
    let by_grammar = g.derive_n(&Polynomial::var("x"), n);

    let mut by_trees = Polynomial::zero();
    let mut tree_counts: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for code in enumerate_codes(n, cap)? {
        let t = code_to_tree(&code)?;
        let (exl, exm, exr) = t.exterior_counts();
        *tree_counts.entry(vec![exl as u32, exm as u32, exr as u32]).or_default() += 1;
    }
    for (e, c) in tree_counts {
        by_trees = by_trees.add(&Polynomial::monomial(c, &["x", "y", "z"], &e));
    }

    if by_stats != by_grammar || by_stats != by_trees {
        return Err(Error::RouteDisagreement {
            what: format!("C_{n}(x,y,z)"),
            detail: format!(
                "statistics {by_stats}; grammar {by_grammar}; trees {by_trees}"
            ),
        });
    }
    Ok(by_stats)
}

/// Trivariate left ascent-plateau / exterior up-down-pair / right
/// plateau-descent enumerator; the statistic sum must match the grammar-I
/// specialization.
pub fn poly_n3(n: u32, cap: u64) -> Result<Polynomial> {
    if n == 0 {
        return Ok(Polynomial::one());
    }
    let by_stats =
        trivariate_stat_sum(n, cap, [StatId::Lap, StatId::Eud, StatId::Rpd], ["x", "y", "z"])?;

    let i = builtin(BuiltinGrammar::I, None)?;
    let iterate = i.derive_n(&Polynomial::var("p3"), n - 1);
    let mut map = BTreeMap::new();
    map.insert("p1".to_string(), crate::parse::parse_poly("x+y+z")?);
    map.insert("p2".to_string(), Polynomial::one());
    map.insert("p3".to_string(), crate::parse::parse_poly("x*y*z")?);
    let by_grammar = iterate.substitute(&map);

    if by_stats != by_grammar {
        return Err(Error::RouteDisagreement {
            what: format!("N_{n}(x,y,z)"),
            detail: format!("statistics {by_stats}; grammar {by_grammar}"),
        });
    }
    Ok(by_stats)
}

/// Multivariate k-th order Eulerian polynomial in x1..x_{k+1}: the
/// j-plateau refinement sum over k-Stirling words against the grammar-G1
/// derivative. The result is checked to be exchangeable in its variables.
pub fn poly_ck(n: u32, k: u32, cap: u64) -> Result<Polynomial> {
    if k == 0 {
        return Err(Error::Domain("poly_ck needs k >= 1".into()));
    }
    if n == 0 {
        return Ok(Polynomial::one());
    }
    let vars: Vec<String> = (1..=k + 1).map(|i| format!("x{i}")).collect();
    let var_refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();

    let mut counts: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for sp in enumerate_q(n, k, cap)? {
        let mut exps = vec![0u32; k as usize + 1];
        for j in 1..k {
            exps[(j - 1) as usize] = j_stat(sp.word(), k, j, JKind::Plateau)? as u32;
        }
        exps[(k - 1) as usize] = scalar_stat(sp.word(), StatId::Des) as u32;
        exps[k as usize] = scalar_stat(sp.word(), StatId::Asc) as u32;
        *counts.entry(exps).or_default() += 1;
    }
    let mut by_stats = Polynomial::zero();
    for (e, c) in counts {
        by_stats = by_stats.add(&Polynomial::monomial(c, &var_refs, &e));
    }

    let g1 = builtin(BuiltinGrammar::G1, Some(k))?;
    let by_grammar = g1.derive_n(&Polynomial::var("x1"), n);

    if by_stats != by_grammar {
        return Err(Error::RouteDisagreement {
            what: format!("C_{n} over {} variables", k + 1),
            detail: format!("statistics {by_stats}; grammar {by_grammar}"),
        });
    }
    if !by_grammar.is_symmetric() {
        return Err(Error::RouteDisagreement {
            what: format!("C_{n} over {} variables", k + 1),
            detail: "polynomial is not exchangeable in its variables".into(),
        });
    }
    Ok(by_grammar)
}

/// Coefficients of (x+y+z)^i (xy+yz+zx)^j (xyz)^k in the trivariate
/// second-order Eulerian polynomial; nonzero entries satisfy
/// i + 2j + 3k = 2n + 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaTable3 {
    pub n: u32,
    entries: BTreeMap<(u32, u32, u32), BigInt>,
}

impl GammaTable3 {
    pub fn entries(&self) -> &BTreeMap<(u32, u32, u32), BigInt> {
        &self.entries
    }

    pub fn get(&self, i: u32, j: u32, k: u32) -> BigInt {
        self.entries.get(&(i, j, k)).cloned().unwrap_or_else(BigInt::zero)
    }
}

fn exponent_of(p: &Polynomial, exps: &[u32], name: &str) -> u32 {
    p.vars().iter().position(|v| v == name).map(|i| exps[i]).unwrap_or(0)
}

/// Gamma table extracted from the (n-1)-st derivative of w under the
/// grammar u -> 3w, v -> 2uw, w -> vw.
pub fn gamma3(n: u32) -> Result<GammaTable3> {
    if n == 0 {
        return Err(Error::Domain("gamma3 needs n >= 1".into()));
    }
    let h = builtin(BuiltinGrammar::H, None)?;
    let p = h.derive_n(&Polynomial::var("w"), n - 1);
    let mut entries = BTreeMap::new();
    for (exps, c) in p.terms() {
        let key = (
            exponent_of(&p, exps, "u"),
            exponent_of(&p, exps, "v"),
            exponent_of(&p, exps, "w"),
        );
        let (i, j, k) = key;
        if i + 2 * j + 3 * k != 2 * n + 1 {
            return Err(Error::RouteDisagreement {
                what: format!("gamma3({n})"),
                detail: format!("entry {key:?} violates i+2j+3k = 2n+1"),
            });
        }
        entries.insert(key, c.clone());
    }
    Ok(GammaTable3 { n, entries })
}

/// Gamma coefficients of the multivariate k-th order Eulerian polynomial,
/// indexed by degree profiles (i_1, ..., i_n). The table is the same for
/// every k >= n-2, so it is computed over a symbolic window of elementary
/// symmetric letters; [`gamma_k_instantiate`] re-expands at a concrete k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaTableK {
    pub n: u32,
    entries: BTreeMap<Vec<u32>, BigInt>,
}

impl GammaTableK {
    pub fn entries(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.entries
    }

    pub fn get(&self, profile: &[u32]) -> BigInt {
        self.entries.get(profile).cloned().unwrap_or_else(BigInt::zero)
    }
}

/// Window grammar: g_t stands for e_{k+1-t}; the rule coefficients
/// (k-i+2) become t+1, independent of k.
fn window_grammar(n: u32) -> Grammar {
    let mut src = String::new();
    for t in 0..n {
        src.push_str(&format!("g{t} -> {}*g{}*g0;", t + 1, t + 1));
    }
    parse_grammar(&src).expect("window grammar source is well-formed")
}

/// The gamma table for order n, valid for every k >= n-2.
pub fn gamma_k(n: u32, k: u32) -> Result<GammaTableK> {
    if n < 2 {
        return Err(Error::Domain("gamma_k needs n >= 2".into()));
    }
    if k + 2 < n {
        return Err(Error::Domain(format!("gamma_k needs k >= n-2 (got n={n}, k={k})")));
    }
    let g = window_grammar(n);
    let p = g.derive_n(&Polynomial::var("g0"), n - 1);
    let mut entries = BTreeMap::new();
    for (exps, c) in p.terms() {
        let profile: Vec<u32> =
            (0..n).map(|t| exponent_of(&p, exps, &format!("g{t}"))).collect();
        let total: u32 = profile.iter().sum();
        let i1 = profile[0];
        let i_n = profile[n as usize - 1];
        if total != n || i1 < 1 || i1 > n - 1 || i_n > 1 || (i_n == 1 && i1 != n - 1) {
            return Err(Error::RouteDisagreement {
                what: format!("gamma_k({n})"),
                detail: format!("profile {profile:?} violates the structural constraints"),
            });
        }
        entries.insert(profile, c.clone());
    }
    Ok(GammaTableK { n, entries })
}

/// Expand the table at a concrete k into a polynomial over x1..x_{k+1}.
pub fn gamma_k_instantiate(table: &GammaTableK, k: u32) -> Result<Polynomial> {
    if k + 2 < table.n {
        return Err(Error::Domain(format!(
            "instantiation needs k >= n-2 (got n={}, k={k})",
            table.n
        )));
    }
    let vars: Vec<String> = (1..=k + 1).map(|i| format!("x{i}")).collect();
    let var_refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let mut elems: Vec<Polynomial> = Vec::new(); // index t holds e_{k+1-t}
    for t in 0..table.n {
        let idx = (k + 1 - t) as usize;
        elems.push(Polynomial::elementary(idx, &var_refs)?);
    }
    let mut acc = Polynomial::zero();
    for (profile, c) in &table.entries {
        let mut term = Polynomial::constant(c.clone());
        for (t, &e) in profile.iter().enumerate() {
            if e > 0 {
                term = term.mul(&elems[t].pow(e));
            }
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Check the finite-coefficient form of the Carlitz identity for one n:
/// the x^m coefficient of C_n(x) equals
/// sum_{k=0}^{m} (-1)^{m-k} binom(2n+1, m-k) S(n+k, k).
pub fn carlitz_coefficient(n: u32, m: u32) -> BigInt {
    let mut acc = BigInt::zero();
    for k in 0..=m as u64 {
        let sign = if (m as u64 - k).is_multiple_of(2) { 1 } else { -1 };
        acc += BigInt::from(sign)
            * binomial(2 * n as u64 + 1, m as u64 - k)
            * stirling2(n as u64 + k, k);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::words::DEFAULT_CAP;

    fn p(src: &str) -> Polynomial {
        parse_poly(src).unwrap()
    }

    #[test]
    fn triangles() {
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(0, 0), BigInt::one());
        assert_eq!(stirling2(5, 0), BigInt::zero());
        assert_eq!(second_order_eulerian(1, 1), BigInt::one());
        assert_eq!(
            second_order_row(3),
            vec![BigInt::zero(), BigInt::one(), BigInt::from(8), BigInt::from(6)]
        );
        assert_eq!(
            second_order_row(4),
            [0, 1, 22, 58, 24].map(BigInt::from).to_vec()
        );
    }

    #[test]
    fn small_family_values() {
        assert_eq!(poly_family(Family::C, 1, DEFAULT_CAP).unwrap(), p("x"));
        assert_eq!(poly_family(Family::C, 2, DEFAULT_CAP).unwrap(), p("x + 2*x^2"));
        assert_eq!(poly_family(Family::C, 3, DEFAULT_CAP).unwrap(), p("x + 8*x^2 + 6*x^3"));
        assert_eq!(poly_family(Family::M, 2, DEFAULT_CAP).unwrap(), p("1 + 2*x"));
        assert_eq!(poly_family(Family::N, 2, DEFAULT_CAP).unwrap(), p("2*x + x^2"));
        assert_eq!(poly_family(Family::A, 1, DEFAULT_CAP).unwrap(), p("x"));
        assert_eq!(poly_family(Family::A, 2, DEFAULT_CAP).unwrap(), p("x + x^2"));
        assert_eq!(poly_family(Family::B, 2, DEFAULT_CAP).unwrap(), p("1 + 6*x + x^2"));
        assert_eq!(poly_family(Family::B, 0, DEFAULT_CAP).unwrap(), p("1"));
    }

    #[test]
    fn trivariate_families() {
        assert_eq!(poly_c3(1, DEFAULT_CAP).unwrap(), p("x*y*z"));
        assert_eq!(poly_c3(2, DEFAULT_CAP).unwrap(), p("x^2*y^2*z + x^2*y*z^2 + x*y^2*z^2"));
        assert_eq!(poly_n3(1, DEFAULT_CAP).unwrap(), p("x*y*z"));
        assert_eq!(poly_n3(2, DEFAULT_CAP).unwrap(), p("x*y*z*(x+y+z)"));
        for n in 1..=5 {
            assert!(poly_c3(n, DEFAULT_CAP).unwrap().is_symmetric());
            assert!(poly_n3(n, DEFAULT_CAP).unwrap().is_symmetric());
        }
    }

    #[test]
    fn multivariate_family() {
        assert_eq!(poly_ck(1, 3, DEFAULT_CAP).unwrap(), p("x1*x2*x3*x4"));
        assert_eq!(poly_ck(2, 1, DEFAULT_CAP).unwrap(), p("x1*x2*(x1+x2)"));
        // k = 2 recovers the trivariate polynomial under renaming
        for n in 1..=5u32 {
            let ck = poly_ck(n, 2, DEFAULT_CAP).unwrap();
            let mut map = BTreeMap::new();
            map.insert("x1".into(), Polynomial::var("z"));
            map.insert("x2".into(), Polynomial::var("y"));
            map.insert("x3".into(), Polynomial::var("x"));
            assert_eq!(ck.substitute(&map), poly_c3(n, DEFAULT_CAP).unwrap(), "n={n}");
        }
    }

    #[test]
    fn gamma3_tables() {
        let t = gamma3(3).unwrap();
        let expected: BTreeMap<(u32, u32, u32), BigInt> =
            [((0, 2, 1), 1.into()), ((1, 0, 2), 2.into())].into_iter().collect();
        assert_eq!(t.entries(), &expected);

        let t4 = gamma3(4).unwrap();
        assert_eq!(t4.get(0, 3, 1), BigInt::one());
        assert_eq!(t4.get(1, 1, 2), BigInt::from(8));
        assert_eq!(t4.get(0, 0, 3), BigInt::from(6));
        assert_eq!(t4.entries().len(), 3);
    }

    #[test]
    fn gamma_k_tables_match_displayed_expansions() {
        let t4 = gamma_k(4, 2).unwrap();
        let expected4: BTreeMap<Vec<u32>, BigInt> = [
            (vec![1, 3, 0, 0], 1.into()),
            (vec![2, 1, 1, 0], 8.into()),
            (vec![3, 0, 0, 1], 6.into()),
        ]
        .into_iter()
        .collect();
        assert_eq!(t4.entries(), &expected4);

        let t5 = gamma_k(5, 3).unwrap();
        let expected5: BTreeMap<Vec<u32>, BigInt> = [
            (vec![1, 4, 0, 0, 0], 1.into()),
            (vec![2, 2, 1, 0, 0], 22.into()),
            (vec![3, 0, 2, 0, 0], 16.into()),
            (vec![3, 1, 0, 1, 0], 42.into()),
            (vec![4, 0, 0, 0, 1], 24.into()),
        ]
        .into_iter()
        .collect();
        assert_eq!(t5.entries(), &expected5);

        assert!(gamma_k(5, 2).is_err());
    }

    #[test]
    fn gamma_k_instantiation_matches_g1() {
        for (n, k) in [(2u32, 1u32), (3, 1), (3, 2), (4, 2), (4, 3)] {
            let table = gamma_k(n, k).unwrap();
            let inst = gamma_k_instantiate(&table, k).unwrap();
            let g1 = builtin(BuiltinGrammar::G1, Some(k)).unwrap();
            assert_eq!(inst, g1.derive_n(&Polynomial::var("x1"), n), "n={n} k={k}");
        }
    }

    #[test]
    fn carlitz_small() {
        // coefficients of C_3 are (0, 1, 8, 6)
        for (m, c) in [(0i64, 0i64), (1, 1), (2, 8), (3, 6)] {
            assert_eq!(carlitz_coefficient(3, m as u32), BigInt::from(c));
        }
    }
}
