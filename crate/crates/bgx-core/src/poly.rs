//! Sparse multivariate Laurent polynomials over `Rat`.
//!
//! A [`LaurentPoly`] owns an ordered list of variable names and a sparse term
//! map from exponent vectors (entries may be negative) to nonzero rational
//! coefficients. Binary operations align variable sets by name first — the
//! left operand's order wins, unseen variables from the right are appended —
//! so callers can mix polynomials built over different variable lists.
//!
//! Monomial comparisons are delegated to [`MonomialOrder`]; variables earlier
//! in the list are *larger*. The same order drives the JSON wire form, which
//! lists terms in descending graded reverse-lexicographic order so output is
//! deterministic byte-for-byte.

use crate::rational::{format_rat, Rat, RatRepr};
use num_traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Term order on exponent vectors of equal length.
///
/// `GrevLex` compares total degree first, breaking ties so that the vector
/// whose *last* differing entry is smaller is the larger monomial. `Lex`
/// compares entries left to right. In both orders, variables that appear
/// earlier in a polynomial's variable list dominate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp_exps(&self, a: &[i64], b: &[i64]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::GrevLex => {
                let da: i64 = a.iter().sum();
                let db: i64 = b.iter().sum();
                match da.cmp(&db) {
                    Ordering::Equal => {
                        for (x, y) in a.iter().zip(b).rev() {
                            match x.cmp(y) {
                                Ordering::Equal => continue,
                                // Smaller trailing exponent means the larger monomial.
                                Ordering::Less => return Ordering::Greater,
                                Ordering::Greater => return Ordering::Less,
                            }
                        }
                        Ordering::Equal
                    }
                    other => other,
                }
            }
            MonomialOrder::Lex => {
                for (x, y) in a.iter().zip(b) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum PolyError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("evaluation raises zero to a negative power (variable `{0}`)")]
    ZeroToNegativePower(String),
    #[error("operation requires a polynomial (no negative exponents), found exponent {exp} on `{var}`")]
    NotPolynomial { var: String, exp: i64 },
    #[error("invalid wire data: {0}")]
    Wire(String),
}

/// A sparse Laurent polynomial. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<i64>, Rat>,
}

impl LaurentPoly {
    pub fn zero(vars: &[&str]) -> Self {
        LaurentPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: Rat) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn one(vars: &[&str]) -> Self {
        Self::constant(vars, Rat::one())
    }

    /// The variable `name`, which must be in `vars`.
    pub fn var(vars: &[&str], name: &str) -> Self {
        let mut p = Self::zero(vars);
        let i = p
            .vars
            .iter()
            .position(|v| v == name)
            .unwrap_or_else(|| panic!("variable `{name}` not among {vars:?}"));
        let mut exp = vec![0; p.vars.len()];
        exp[i] = 1;
        p.terms.insert(exp, Rat::one());
        p
    }

    /// A single term `coeff * prod vars[i]^exps[i]`.
    pub fn monomial(vars: &[&str], exps: &[i64], coeff: Rat) -> Self {
        assert_eq!(vars.len(), exps.len(), "exponent/variable length mismatch");
        let mut p = Self::zero(vars);
        if !coeff.is_zero() {
            p.terms.insert(exps.to_vec(), coeff);
        }
        p
    }

    pub fn from_terms(vars: &[&str], terms: impl IntoIterator<Item = (Vec<i64>, Rat)>) -> Self {
        let mut p = Self::zero(vars);
        for (exp, c) in terms {
            assert_eq!(exp.len(), p.vars.len(), "exponent length mismatch");
            p.add_term(exp, c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&vec![0; self.vars.len()][..].to_vec())
                .is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0))
    }

    /// The constant term (zero if absent).
    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&vec![0; self.vars.len()])
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// True when every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    pub fn coeff(&self, exps: &[i64]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, exp: Vec<i64>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    o.insert(sum);
                }
            }
        }
    }

    /// Rewrite over `target` variables (a superset by name, any order).
    pub fn embed(&self, target: &[&str]) -> Result<LaurentPoly, PolyError> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                target
                    .iter()
                    .position(|t| t == v)
                    .ok_or_else(|| PolyError::UnknownVariable(v.clone()))
            })
            .collect::<Result<_, _>>()?;
        let mut out = LaurentPoly::zero(target);
        for (exp, c) in &self.terms {
            let mut e = vec![0i64; target.len()];
            for (i, &x) in exp.iter().enumerate() {
                e[map[i]] = x;
            }
            out.terms.insert(e, c.clone());
        }
        Ok(out)
    }

    /// Merge variable lists: left order first, unseen right variables appended.
    pub fn aligned(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        if a.vars == b.vars {
            return (a.clone(), b.clone());
        }
        let mut merged: Vec<String> = a.vars.clone();
        for v in &b.vars {
            if !merged.contains(v) {
                merged.push(v.clone());
            }
        }
        let names: Vec<&str> = merged.iter().map(|s| s.as_str()).collect();
        (a.embed(&names).unwrap(), b.embed(&names).unwrap())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let (mut a, b) = Self::aligned(self, other);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x.clone() * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let (a, b) = Self::aligned(self, other);
        let mut out = LaurentPoly {
            vars: a.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Multiply by a single term in this polynomial's own variables.
    pub fn mul_term(&self, exp: &[i64], c: &Rat) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, x)| {
                    (
                        e.iter().zip(exp).map(|(a, b)| a + b).collect(),
                        x.clone() * c,
                    )
                })
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one(&self.var_refs());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn var_refs(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    /// Total degree (sum of exponents, max over terms); `None` for zero.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Degree with per-variable weights; `None` for the zero polynomial.
    pub fn weighted_degree(&self, weights: &[i64]) -> Option<i64> {
        assert_eq!(weights.len(), self.vars.len());
        self.terms
            .keys()
            .map(|e| e.iter().zip(weights).map(|(x, w)| x * w).sum())
            .max()
    }

    /// True when every term has the same weighted degree (zero counts as yes).
    pub fn is_homogeneous(&self, weights: &[i64]) -> bool {
        assert_eq!(weights.len(), self.vars.len());
        let mut degs = self
            .terms
            .keys()
            .map(|e| e.iter().zip(weights).map(|(x, w)| x * w).sum::<i64>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Degree in a single variable; `None` for zero.
    pub fn degree_in(&self, var: &str) -> Option<i64> {
        let i = self.vars.iter().position(|v| v == var)?;
        self.terms.keys().map(|e| e[i]).max()
    }

    /// Per-variable minimum exponents over all terms (the Laurent "valuation").
    pub fn min_exponents(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |mut acc, e| {
            for (a, x) in acc.iter_mut().zip(e) {
                *a = (*a).min(*x);
            }
            acc
        }))
    }

    /// Leading (exponent, coefficient) under `order`; `None` for zero.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Vec<i64>, &Rat)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp_exps(a, b))
    }

    /// Divide all coefficients by the leading one.
    pub fn monic(&self, order: MonomialOrder) -> LaurentPoly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = Rat::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    pub fn partial_derivative(&self, var: &str) -> Result<LaurentPoly, PolyError> {
        let i = self
            .vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| PolyError::UnknownVariable(var.to_string()))?;
        let mut out = LaurentPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c.clone() * Rat::from_integer(e[i].into()));
        }
        Ok(out)
    }

    /// Evaluate at a rational point. Variables absent from `point` must not
    /// occur; zero raised to a negative power is an error.
    pub fn eval(&self, point: &BTreeMap<String, Rat>) -> Result<Rat, PolyError> {
        let vals: Vec<Option<&Rat>> = self.vars.iter().map(|v| point.get(v)).collect();
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let v = vals[i].ok_or_else(|| PolyError::UnknownVariable(self.vars[i].clone()))?;
                if v.is_zero() {
                    if x < 0 {
                        return Err(PolyError::ZeroToNegativePower(self.vars[i].clone()));
                    }
                    term = Rat::zero();
                    break;
                }
                let p = pow_rat(v, x);
                term *= p;
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Substitute a single variable by a Laurent polynomial. The exponents of
    /// `var` in `self` must be nonnegative.
    pub fn substitute_poly(&self, var: &str, value: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
        let i = self
            .vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| PolyError::UnknownVariable(var.to_string()))?;
        let mut out = LaurentPoly::zero(&self.var_refs());
        for (e, c) in &self.terms {
            if e[i] < 0 {
                return Err(PolyError::NotPolynomial {
                    var: var.to_string(),
                    exp: e[i],
                });
            }
            let mut rest = e.clone();
            let k = rest[i] as u32;
            rest[i] = 0;
            let term = LaurentPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::from([(rest, c.clone())]),
            };
            out = out.add(&term.mul(&value.pow(k)));
        }
        Ok(out)
    }

    /// Set a variable to a rational constant.
    pub fn eval_var(&self, var: &str, value: &Rat) -> Result<LaurentPoly, PolyError> {
        let i = self
            .vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| PolyError::UnknownVariable(var.to_string()))?;
        let mut out = LaurentPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            if e[i] < 0 && value.is_zero() {
                return Err(PolyError::ZeroToNegativePower(var.to_string()));
            }
            let mut e2 = e.clone();
            e2[i] = 0;
            let scaled = if e[i] == 0 {
                c.clone()
            } else if value.is_zero() {
                Rat::zero()
            } else {
                c.clone() * pow_rat(value, e[i])
            };
            out.add_term(e2, scaled);
        }
        Ok(out)
    }

    /// Drop variables that no longer occur, keeping only `keep` (by name)
    /// if given; otherwise keep every variable with a nonzero exponent.
    pub fn prune_vars(&self) -> LaurentPoly {
        let used: Vec<usize> = (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|e| e[i] != 0))
            .collect();
        if used.len() == self.vars.len() {
            return self.clone();
        }
        let vars: Vec<String> = used.iter().map(|&i| self.vars[i].clone()).collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (used.iter().map(|&i| e[i]).collect(), c.clone()))
            .collect();
        LaurentPoly { vars, terms }
    }

    /// Terms in descending `order`, as (exponent, coefficient) pairs.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Vec<i64>, Rat)> {
        let mut v: Vec<(Vec<i64>, Rat)> = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        v.sort_by(|(a, _), (b, _)| order.cmp_exps(b, a));
        v
    }
}

fn pow_rat(v: &Rat, e: i64) -> Rat {
    let p = num_traits::pow::pow(v.clone(), e.unsigned_abs() as usize);
    if e >= 0 {
        p
    } else {
        Rat::one() / p
    }
}

// ---------------------------------------------------------------------------
// Wire form

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<i64>,
    #[serde(flatten)]
    coeff: RatRepr,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    vars: Vec<String>,
    terms: Vec<TermRepr>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .sorted_terms(MonomialOrder::GrevLex)
            .into_iter()
            .map(|(exp, c)| TermRepr {
                exp,
                coeff: RatRepr::from(&c),
            })
            .collect();
        PolyRepr {
            vars: self.vars.clone(),
            terms,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let mut seen = std::collections::BTreeSet::new();
        for v in &repr.vars {
            if !seen.insert(v) {
                return Err(D::Error::custom(format!("duplicate variable `{v}`")));
            }
        }
        let mut p = LaurentPoly {
            vars: repr.vars,
            terms: BTreeMap::new(),
        };
        for t in repr.terms {
            if t.exp.len() != p.vars.len() {
                return Err(D::Error::custom(format!(
                    "exponent vector {:?} does not match {} variables",
                    t.exp,
                    p.vars.len()
                )));
            }
            let c = Rat::try_from(&t.coeff).map_err(D::Error::custom)?;
            if p.terms.contains_key(&t.exp) {
                return Err(D::Error::custom(format!("duplicate exponent {:?}", t.exp)));
            }
            if !c.is_zero() {
                p.terms.insert(t.exp, c);
            }
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in self.sorted_terms(MonomialOrder::GrevLex) {
            let mono: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], e)
                    }
                })
                .collect();
            let mono = mono.join("*");
            let (sgn, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sgn == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sgn)?;
            }
            if mono.is_empty() {
                write!(f, "{}", format_rat(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", format_rat(&mag), mono)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn hx() -> [&'static str; 2] {
        ["h", "x"]
    }

    #[test]
    fn grevlex_orders_earlier_variables_higher() {
        let o = MonomialOrder::GrevLex;
        // h^2 > h*x > x^2 in vars [h, x].
        assert_eq!(o.cmp_exps(&[2, 0], &[1, 1]), Ordering::Greater);
        assert_eq!(o.cmp_exps(&[1, 1], &[0, 2]), Ordering::Greater);
        // degree dominates
        assert_eq!(o.cmp_exps(&[0, 3], &[2, 0]), Ordering::Greater);
    }

    #[test]
    fn lex_ignores_degree() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp_exps(&[1, 0], &[0, 5]), Ordering::Greater);
    }

    #[test]
    fn arithmetic_basics() {
        let h = LaurentPoly::var(&hx(), "h");
        let x = LaurentPoly::var(&hx(), "x");
        let p = h.add(&x).pow(2); // h^2 + 2hx + x^2
        assert_eq!(p.coeff(&[1, 1]), rat_int(2));
        assert_eq!(p.num_terms(), 3);
        let q = p.sub(&h.mul(&h)).sub(&x.mul(&x));
        assert_eq!(q, h.mul(&x).scale(&rat_int(2)));
    }

    #[test]
    fn alignment_merges_variable_sets() {
        let h = LaurentPoly::var(&["h"], "h");
        let q = LaurentPoly::var(&["q1"], "q1");
        let s = h.add(&q);
        assert_eq!(s.vars(), &["h".to_string(), "q1".to_string()]);
        assert_eq!(s.coeff(&[1, 0]), rat_int(1));
        assert_eq!(s.coeff(&[0, 1]), rat_int(1));
    }

    #[test]
    fn laurent_exponents_multiply() {
        let xinv = LaurentPoly::monomial(&["x"], &[-1], rat_int(1));
        let x = LaurentPoly::var(&["x"], "x");
        assert!(xinv.mul(&x).is_one());
        assert!(!xinv.is_polynomial());
    }

    #[test]
    fn eval_rejects_zero_to_negative() {
        let xinv = LaurentPoly::monomial(&["x"], &[-1], rat_int(1));
        let mut pt = BTreeMap::new();
        pt.insert("x".to_string(), rat_int(0));
        assert!(xinv.eval(&pt).is_err());
        pt.insert("x".to_string(), rat(1, 2));
        assert_eq!(xinv.eval(&pt).unwrap(), rat_int(2));
    }

    #[test]
    fn derivative_and_degree() {
        let h = LaurentPoly::var(&hx(), "h");
        let x = LaurentPoly::var(&hx(), "x");
        let p = h.pow(3).sub(&h.mul(&x).scale(&rat_int(2)));
        let dh = p.partial_derivative("h").unwrap();
        assert_eq!(dh, h.pow(2).scale(&rat_int(3)).sub(&x.scale(&rat_int(2))));
        assert_eq!(p.total_degree(), Some(3));
        assert!(p.is_homogeneous(&[1, 2]));
    }

    #[test]
    fn leading_term_under_both_orders() {
        let h = LaurentPoly::var(&hx(), "h");
        let x = LaurentPoly::var(&hx(), "x");
        // p = h + x^3: grevlex leader is x^3 (degree), lex leader is h.
        let p = h.add(&x.pow(3));
        assert_eq!(p.leading_term(MonomialOrder::GrevLex).unwrap().0, &vec![0, 3]);
        assert_eq!(p.leading_term(MonomialOrder::Lex).unwrap().0, &vec![1, 0]);
    }

    #[test]
    fn wire_round_trip_and_term_order() {
        let h = LaurentPoly::var(&hx(), "h");
        let x = LaurentPoly::var(&hx(), "x");
        let p = x.pow(2).sub(&h).add(&LaurentPoly::one(&hx()).scale(&rat(1, 3)));
        let js = serde_json::to_string(&p).unwrap();
        // descending grevlex: x^2 first, then h, then the constant
        let v: serde_json::Value = serde_json::from_str(&js).unwrap();
        let exps: Vec<Vec<i64>> = v["terms"]
            .as_array()
            .unwrap()
            .iter()
            .map(|t| {
                t["exp"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|x| x.as_i64().unwrap())
                    .collect()
            })
            .collect();
        assert_eq!(exps, vec![vec![0, 2], vec![1, 0], vec![0, 0]]);
        let back: LaurentPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn display_is_readable() {
        let h = LaurentPoly::var(&hx(), "h");
        let x = LaurentPoly::var(&hx(), "x");
        let p = h.pow(2).sub(&x.scale(&rat_int(2)));
        assert_eq!(p.to_string(), "h^2 - 2*x");
    }
}
