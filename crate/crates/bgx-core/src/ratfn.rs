//! Rational functions `numer/denom` over [`LaurentPoly`], kept in a canonical
//! reduced form, plus the exact polynomial division and multivariate GCD they
//! rely on.
//!
//! Canonical form: numerator and denominator are true polynomials (no
//! negative exponents), share no common factor (their GCD is 1), carry no
//! common monomial content, and the denominator is monic with respect to
//! graded reverse-lexicographic order. Zero is represented as `0/1`. Two
//! canonical rational functions are equal iff their components are equal,
//! so `PartialEq` is structural.
//!
//! The GCD uses the primitive polynomial-remainder-sequence algorithm,
//! recursing on the last variable that actually occurs: extract contents,
//! run a pseudo-remainder loop on the primitive parts, and reassemble. Fast
//! paths cover monomials and constants, which dominate in practice because
//! denominators here are usually products of a monomial with a few short
//! factors.

use crate::poly::{LaurentPoly, MonomialOrder, PolyError};
use crate::rational::Rat;
use crate::unipoly;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, thiserror::Error)]
pub enum RatFnError {
    #[error("division by zero")]
    DivisionByZero,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

// ---------------------------------------------------------------------------
// Exact division and GCD on polynomial LaurentPolys

/// Exact multivariate division: `Some(q)` with `a = q*b` when `b` divides
/// `a`, otherwise `None`. Both inputs must be polynomials on the same
/// variable list; callers align first.
pub fn poly_div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    assert!(!b.is_zero(), "division by the zero polynomial");
    let (mut r, b) = LaurentPoly::aligned(a, b);
    let names: Vec<String> = r.vars().to_vec();
    let vars: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let mut q = LaurentPoly::zero(&vars);
    let (lb, cb) = {
        let (e, c) = b.leading_term(MonomialOrder::GrevLex).unwrap();
        (e.clone(), c.clone())
    };
    while !r.is_zero() {
        let (lr, cr) = {
            let (e, c) = r.leading_term(MonomialOrder::GrevLex).unwrap();
            (e.clone(), c.clone())
        };
        let exp: Vec<i64> = lr.iter().zip(&lb).map(|(x, y)| x - y).collect();
        if exp.iter().any(|&e| e < 0) {
            return None;
        }
        let coeff = cr / cb.clone();
        q = q.add(&LaurentPoly::monomial(&vars, &exp, coeff.clone()));
        r = r.sub(&b.mul_term(&exp, &coeff));
    }
    Some(q)
}

fn degree_in_idx(p: &LaurentPoly, i: usize) -> Option<i64> {
    p.terms().map(|(e, _)| e[i]).max()
}

/// Coefficient of `var^k` as a polynomial in the remaining variables
/// (same variable list, exponent of `var` zeroed).
fn coeff_of_power(p: &LaurentPoly, i: usize, k: i64) -> LaurentPoly {
    let vars: Vec<&str> = p.vars().iter().map(|s| s.as_str()).collect();
    let terms = p.terms().filter(|(e, _)| e[i] == k).map(|(e, c)| {
        let mut e2 = e.clone();
        e2[i] = 0;
        (e2, c.clone())
    });
    LaurentPoly::from_terms(&vars, terms)
}

/// One pseudo-remainder step sequence: returns `r` with
/// `lc(g)^k * f = q*g + r` and `deg_v r < deg_v g`.
fn pseudo_rem(f: &LaurentPoly, g: &LaurentPoly, i: usize) -> LaurentPoly {
    let dg = degree_in_idx(g, i).expect("pseudo_rem: zero divisor");
    let lc = coeff_of_power(g, i, dg);
    let mut r = f.clone();
    loop {
        let dr = match degree_in_idx(&r, i) {
            None => return r,
            Some(d) => d,
        };
        if dr < dg {
            return r;
        }
        let cr = coeff_of_power(&r, i, dr);
        let mut shift = vec![0i64; r.vars().len()];
        shift[i] = dr - dg;
        // r <- lc*r - cr*v^(dr-dg)*g ; the degree-dr terms cancel exactly.
        r = r.mul(&lc).sub(&g.mul(&cr).mul_term(&shift, &Rat::one()));
    }
}

/// Content of `p` with respect to variable index `i`: the GCD of its
/// coefficients as polynomials in the other variables.
fn content_wrt(p: &LaurentPoly, i: usize) -> LaurentPoly {
    let dmax = degree_in_idx(p, i).expect("content of zero polynomial");
    let mut acc: Option<LaurentPoly> = None;
    for k in 0..=dmax {
        let c = coeff_of_power(p, i, k);
        if c.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => c,
            Some(g) => poly_gcd(&g, &c),
        });
        if acc.as_ref().is_some_and(|g| g.is_constant()) {
            break;
        }
    }
    acc.expect("content of zero polynomial")
}

/// GCD of two polynomials (no negative exponents), normalized monic under
/// graded reverse-lexicographic order. `gcd(0, p) = monic(p)`; the GCD of two
/// nonzero constants is 1.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let (a, b) = LaurentPoly::aligned(a, b);
    debug_assert!(a.is_polynomial() && b.is_polynomial(), "gcd needs polynomials");
    if a.is_zero() {
        return b.monic(MonomialOrder::GrevLex);
    }
    if b.is_zero() {
        return a.monic(MonomialOrder::GrevLex);
    }
    let vars: Vec<&str> = a.vars().iter().map(|s| s.as_str()).collect();
    if a.is_constant() || b.is_constant() {
        return LaurentPoly::one(&vars);
    }
    // Monomial fast path: the GCD with a monomial is the shared monomial part.
    let mono = |p: &LaurentPoly, other: &LaurentPoly| -> Option<LaurentPoly> {
        if p.num_terms() != 1 {
            return None;
        }
        let e = p.terms().next().unwrap().0.clone();
        let m = other.min_exponents().unwrap();
        let shared: Vec<i64> = e.iter().zip(&m).map(|(x, y)| (*x).min(*y)).collect();
        Some(LaurentPoly::monomial(&vars, &shared, Rat::one()))
    };
    if let Some(g) = mono(&a, &b).or_else(|| mono(&b, &a)) {
        return g;
    }
    if a == b {
        return a.monic(MonomialOrder::GrevLex);
    }
    // Pull out the shared monomial content up front; it both shrinks the
    // operands and lets the recursive contents work on primitive-ish parts.
    let ma = a.min_exponents().unwrap();
    let mb = b.min_exponents().unwrap();
    let shared: Vec<i64> = ma.iter().zip(&mb).map(|(x, y)| (*x).min(*y)).collect();
    if shared.iter().any(|&e| e > 0) {
        let neg: Vec<i64> = shared.iter().map(|e| -e).collect();
        let a2 = a.mul_term(&neg, &Rat::one());
        let b2 = b.mul_term(&neg, &Rat::one());
        return poly_gcd(&a2, &b2).mul_term(&shared, &Rat::one());
    }
    // One- and two-variable inputs usually reduce to a univariate Euclidean
    // algorithm, which sidesteps the integer blowup of pseudo-remainders.
    if let Some(g) = low_var_gcd(&a, &b) {
        return g;
    }
    // Recurse on the last variable that occurs in either operand.
    let i = (0..vars.len())
        .rev()
        .find(|&i| {
            a.terms().any(|(e, _)| e[i] != 0) || b.terms().any(|(e, _)| e[i] != 0)
        })
        .expect("nonconstant polynomials must use a variable");
    let ca = content_wrt(&a, i);
    let cb = content_wrt(&b, i);
    let c = poly_gcd(&ca, &cb);
    let mut f = poly_div_exact(&a, &ca).expect("content divides");
    let mut g = poly_div_exact(&b, &cb).expect("content divides");
    if degree_in_idx(&f, i) < degree_in_idx(&g, i) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        let r = pseudo_rem(&f, &g, i);
        if r.is_zero() {
            break;
        }
        if degree_in_idx(&r, i) == Some(0) {
            // A nonzero remainder of degree 0 in the main variable means the
            // primitive parts are coprime in that variable.
            g = LaurentPoly::one(&vars);
            break;
        }
        let cr = content_wrt(&r, i);
        f = g;
        g = poly_div_exact(&r, &cr).expect("content divides");
    }
    c.mul(&g).monic(MonomialOrder::GrevLex)
}

/// Univariate-reduction fast path for [`poly_gcd`]. Covers two shapes:
/// operands supported on one common variable, and operands that are both
/// weighted-homogeneous in the same two variables under positive integer
/// weights `(1, w)`. A weighted-homogeneous polynomial with no monomial
/// content is the minimal homogenization of the univariate polynomial read
/// off along the weight-`w` variable; divisors of graded elements are graded,
/// minimal homogenization is multiplicative, and a content-free operand has
/// content-free divisors, so the GCD is the homogenization of the univariate
/// GCD times the shared monomial content. `None` when the operands fit
/// neither shape, in which case the caller falls back to the generic
/// pseudo-remainder recursion.
fn low_var_gcd(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    let vars: Vec<&str> = a.vars().iter().map(|s| s.as_str()).collect();
    let mut eff: Vec<usize> = Vec::new();
    for i in 0..vars.len() {
        if a.terms().any(|(e, _)| e[i] != 0) || b.terms().any(|(e, _)| e[i] != 0) {
            eff.push(i);
            if eff.len() > 2 {
                return None;
            }
        }
    }
    let ma = a.min_exponents().unwrap();
    let mb = b.min_exponents().unwrap();
    let shared: Vec<i64> = ma.iter().zip(&mb).map(|(x, y)| (*x).min(*y)).collect();
    let strip = |p: &LaurentPoly, m: &[i64]| -> LaurentPoly {
        if m.iter().all(|&e| e == 0) {
            p.clone()
        } else {
            let neg: Vec<i64> = m.iter().map(|e| -e).collect();
            p.mul_term(&neg, &Rat::one())
        }
    };
    let sa = strip(a, &ma);
    let sb = strip(b, &mb);
    // coefficient of each power of `vars[q]`, as a dense univariate polynomial
    let dehom = |p: &LaurentPoly, q: usize| -> Option<unipoly::UPoly> {
        let mut coeffs: Vec<Rat> = Vec::new();
        for (e, c) in p.terms() {
            let beta = usize::try_from(e[q]).ok()?;
            if coeffs.len() <= beta {
                coeffs.resize(beta + 1, Rat::zero());
            }
            if !coeffs[beta].is_zero() {
                return None; // two terms share a power: not of this shape
            }
            coeffs[beta] = c.clone();
        }
        Some(unipoly::trim(coeffs))
    };
    // homogenize back over the shared monomial content
    let lift = |ghat: &unipoly::UPoly, p: usize, q: usize, w: i64| -> LaurentPoly {
        let gd = unipoly::deg(ghat).expect("gcd of nonzero polynomials") as i64;
        let terms = ghat
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(beta, c)| {
                let mut e = shared.clone();
                e[p] += w * (gd - beta as i64);
                e[q] += beta as i64;
                (e, c.clone())
            });
        LaurentPoly::from_terms(&vars, terms).monic(MonomialOrder::GrevLex)
    };
    match eff[..] {
        [q] => {
            let ga = dehom(&sa, q)?;
            let gb = dehom(&sb, q)?;
            Some(lift(&unipoly::gcd(&ga, &gb), q, q, 0))
        }
        [u, v] => {
            for (p, q) in [(u, v), (v, u)] {
                let Some(w) = common_weight(&sa, &sb, p, q) else {
                    continue;
                };
                let (Some(ga), Some(gb)) = (dehom(&sa, q), dehom(&sb, q)) else {
                    continue;
                };
                return Some(lift(&unipoly::gcd(&ga, &gb), p, q, w));
            }
            None
        }
        _ => None,
    }
}

/// The positive integer `w` making both polynomials homogeneous when
/// `vars[p]` has weight 1 and `vars[q]` has weight `w`, if one exists.
/// Callers guarantee both polynomials are supported on exactly these two
/// variables and have at least two terms each, so the weight is always
/// pinned by some pair of terms.
fn common_weight(a: &LaurentPoly, b: &LaurentPoly, p: usize, q: usize) -> Option<i64> {
    let mut w: Option<i64> = None;
    for poly in [a, b] {
        let mut it = poly.terms();
        let (e0, _) = it.next()?;
        for (e, _) in it {
            let da = e[p] - e0[p];
            let db = e[q] - e0[q];
            // distinct terms supported on two variables must differ in `q`
            // for any finite weight to balance them
            if db == 0 || da % db != 0 {
                return None;
            }
            let cand = -da / db;
            if cand <= 0 {
                return None;
            }
            match w {
                None => w = Some(cand),
                Some(x) if x == cand => {}
                Some(_) => return None,
            }
        }
    }
    w
}

/// Division with remainder, treating both operands as univariate in `var`
/// over polynomials in the remaining variables. Each reduction step must
/// divide exactly by the leading coefficient of `b` (always true when `b` is
/// monic in `var`); returns `None` otherwise.
pub fn poly_divmod_in(
    a: &LaurentPoly,
    b: &LaurentPoly,
    var: &str,
) -> Option<(LaurentPoly, LaurentPoly)> {
    let (mut r, b) = LaurentPoly::aligned(a, b);
    let names: Vec<String> = r.vars().to_vec();
    let vars: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let i = vars.iter().position(|v| *v == var)?;
    let db = degree_in_idx(&b, i)?;
    let lb = coeff_of_power(&b, i, db);
    let mut q = LaurentPoly::zero(&vars);
    loop {
        let dr = match degree_in_idx(&r, i) {
            None => return Some((q, r)),
            Some(d) => d,
        };
        if dr < db {
            return Some((q, r));
        }
        let cr = coeff_of_power(&r, i, dr);
        let t = poly_div_exact(&cr, &lb)?;
        let mut shift = vec![0i64; vars.len()];
        shift[i] = dr - db;
        let qt = t.mul_term(&shift, &Rat::one());
        q = q.add(&qt);
        r = r.sub(&qt.mul(&b));
    }
}

// ---------------------------------------------------------------------------
// RationalFn

/// A reduced fraction of polynomials; see the module docs for the canonical
/// form. Construct with [`RationalFn::new`] or the `From` impls.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalFn {
    numer: LaurentPoly,
    denom: LaurentPoly,
}

impl RationalFn {
    /// Build `numer/denom` and reduce to canonical form.
    pub fn new(numer: LaurentPoly, denom: LaurentPoly) -> Result<Self, RatFnError> {
        if denom.is_zero() {
            return Err(RatFnError::DivisionByZero);
        }
        Ok(Self::reduce(numer, denom))
    }

    fn reduce(numer: LaurentPoly, denom: LaurentPoly) -> Self {
        let (n, d) = LaurentPoly::aligned(&numer, &denom);
        let vars: Vec<&str> = n.vars().iter().map(|s| s.as_str()).collect();
        if n.is_zero() {
            return RationalFn {
                numer: LaurentPoly::zero(&vars),
                denom: LaurentPoly::one(&vars),
            };
        }
        // Shift by a single monomial so both parts become polynomials with no
        // shared monomial content: per variable, subtract the smaller of the
        // two minimum exponents.
        let mn = n.min_exponents().unwrap();
        let md = d.min_exponents().unwrap();
        let shift: Vec<i64> = mn.iter().zip(&md).map(|(a, b)| -(*a).min(*b)).collect();
        let mut n = n.mul_term(&shift, &Rat::one());
        let mut d = d.mul_term(&shift, &Rat::one());
        if !d.is_constant() {
            let g = poly_gcd(&n, &d);
            if !g.is_constant() {
                n = poly_div_exact(&n, &g).expect("gcd divides numerator");
                d = poly_div_exact(&d, &g).expect("gcd divides denominator");
            }
        }
        let lc = d.leading_term(MonomialOrder::GrevLex).unwrap().1.clone();
        let inv = Rat::one() / lc;
        RationalFn {
            numer: n.scale(&inv),
            denom: d.scale(&inv),
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let vars: Vec<&str> = p.vars().iter().map(|s| s.as_str()).collect();
        let one = LaurentPoly::one(&vars);
        Self::reduce(p, one)
    }

    pub fn from_int(vars: &[&str], v: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(vars, crate::rational::rat_int(v)))
    }

    pub fn zero(vars: &[&str]) -> Self {
        RationalFn {
            numer: LaurentPoly::zero(vars),
            denom: LaurentPoly::one(vars),
        }
    }

    pub fn one(vars: &[&str]) -> Self {
        RationalFn {
            numer: LaurentPoly::one(vars),
            denom: LaurentPoly::one(vars),
        }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.numer
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.numer.is_one() && self.denom.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.denom.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.numer.is_constant() && self.denom.is_one()
    }

    pub fn neg(&self) -> Self {
        RationalFn {
            numer: self.numer.neg(),
            denom: self.denom.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.denom == other.denom {
            return Self::reduce(self.numer.add(&other.numer), self.denom.clone());
        }
        let n = self
            .numer
            .mul(&other.denom)
            .add(&other.numer.mul(&self.denom));
        let d = self.denom.mul(&other.denom);
        Self::reduce(n, d)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            let (a, _) = LaurentPoly::aligned(&self.numer, &other.numer);
            let vars: Vec<&str> = a.vars().iter().map(|s| s.as_str()).collect();
            return Self::zero(&vars);
        }
        // Cross-cancel before multiplying to keep intermediate sizes down.
        let g1 = poly_gcd(&self.numer, &other.denom);
        let g2 = poly_gcd(&other.numer, &self.denom);
        let n1 = poly_div_exact(&LaurentPoly::aligned(&self.numer, &g1).0, &g1).unwrap();
        let d2 = poly_div_exact(&LaurentPoly::aligned(&other.denom, &g1).0, &g1).unwrap();
        let n2 = poly_div_exact(&LaurentPoly::aligned(&other.numer, &g2).0, &g2).unwrap();
        let d1 = poly_div_exact(&LaurentPoly::aligned(&self.denom, &g2).0, &g2).unwrap();
        Self::reduce(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn inv(&self) -> Result<Self, RatFnError> {
        if self.is_zero() {
            return Err(RatFnError::DivisionByZero);
        }
        Ok(Self::reduce(self.denom.clone(), self.numer.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, RatFnError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, RatFnError> {
        if e == 0 {
            let vars: Vec<&str> = self.numer.vars().iter().map(|s| s.as_str()).collect();
            return Ok(Self::one(&vars));
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Ok(RationalFn {
            numer: base.numer.pow(k),
            denom: base.denom.pow(k),
        })
    }

    pub fn eval(&self, point: &BTreeMap<String, Rat>) -> Result<Rat, RatFnError> {
        let d = self.denom.eval(point)?;
        if d.is_zero() {
            return Err(RatFnError::DivisionByZero);
        }
        Ok(self.numer.eval(point)? / d)
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "({}) / ({})", self.numer, self.denom)
        }
    }
}

/// Substitute rational functions for variables of `p`. Unbound variables pass
/// through as themselves; bound variables may appear with negative exponents.
pub fn substitute(
    p: &LaurentPoly,
    bindings: &BTreeMap<String, RationalFn>,
) -> Result<RationalFn, RatFnError> {
    let vars: Vec<&str> = p.vars().iter().map(|s| s.as_str()).collect();
    let mut acc = RationalFn::zero(&vars);
    for (exp, c) in p.terms() {
        let mut rest = vec![0i64; vars.len()];
        let mut factor = RationalFn::one(&vars);
        for (i, &e) in exp.iter().enumerate() {
            if e == 0 {
                continue;
            }
            match bindings.get(&p.vars()[i]) {
                Some(v) => factor = factor.mul(&v.pow(e)?),
                None => rest[i] = e,
            }
        }
        let term = RationalFn::from_poly(LaurentPoly::monomial(&vars, &rest, c.clone()));
        acc = acc.add(&term.mul(&factor));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn vars2() -> [&'static str; 2] {
        ["h", "x"]
    }

    fn h() -> LaurentPoly {
        LaurentPoly::var(&vars2(), "h")
    }

    fn x() -> LaurentPoly {
        LaurentPoly::var(&vars2(), "x")
    }

    #[test]
    fn exact_division_inverts_multiplication() {
        let a = h().add(&x()).pow(3);
        let b = h().add(&x());
        let q = poly_div_exact(&a, &b).unwrap();
        assert_eq!(q, h().add(&x()).pow(2));
        assert!(poly_div_exact(&a.add(&LaurentPoly::one(&vars2())), &b).is_none());
    }

    #[test]
    fn gcd_of_products_recovers_shared_factor() {
        let f = h().add(&x()); // h + x
        let g = h().sub(&x().scale(&rat_int(2))); // h - 2x
        let k = h().mul(&h()).add(&x()); // h^2 + x
        let a = f.mul(&k);
        let b = f.mul(&g);
        let d = poly_gcd(&a, &b);
        assert_eq!(d, f.monic(MonomialOrder::GrevLex));
    }

    #[test]
    fn gcd_handles_monomials_and_constants() {
        let m = LaurentPoly::monomial(&vars2(), &[2, 1], rat_int(6));
        let p = h().mul(&x()).mul(&h().add(&x()));
        let d = poly_gcd(&m, &p);
        assert_eq!(d, LaurentPoly::monomial(&vars2(), &[1, 1], rat_int(1)));
        let c = LaurentPoly::constant(&vars2(), rat_int(5));
        assert!(poly_gcd(&c, &p).is_one());
    }

    #[test]
    fn gcd_three_variables() {
        let vars = ["h", "x", "q1"];
        let hh = LaurentPoly::var(&vars, "h");
        let xx = LaurentPoly::var(&vars, "x");
        let q1 = LaurentPoly::var(&vars, "q1");
        // shared factor (h^2 - q1*x)
        let s = hh.pow(2).sub(&q1.mul(&xx));
        let a = s.mul(&hh.add(&q1));
        let b = s.mul(&xx.pow(2).add(&q1));
        assert_eq!(poly_gcd(&a, &b), s.monic(MonomialOrder::GrevLex));
    }

    #[test]
    fn canonical_form_clears_laurent_monomials() {
        // (x^-1 * (h + x)) / (x^-2 * h)  ==  x*(h+x) / h
        let n = h().add(&x()).mul_term(&[0, -1], &rat_int(1));
        let d = h().mul_term(&[0, -2], &rat_int(1));
        let r = RationalFn::new(n, d).unwrap();
        assert_eq!(r.numer(), &h().add(&x()).mul_term(&[0, 1], &rat_int(1)));
        assert_eq!(r.denom(), &h());
    }

    #[test]
    fn fraction_arithmetic_reduces() {
        let a = RationalFn::new(h(), x()).unwrap(); // h/x
        let b = RationalFn::new(x(), h()).unwrap(); // x/h
        assert!(a.mul(&b).is_one());
        let s = a.add(&b); // (h^2 + x^2)/(hx)
        assert_eq!(s.numer(), &h().pow(2).add(&x().pow(2)));
        assert_eq!(s.denom(), &h().mul(&x()));
        let diff = s.sub(&a).sub(&b);
        assert!(diff.is_zero());
    }

    #[test]
    fn denominator_is_monic() {
        let d = h().scale(&rat_int(3)).add(&x().scale(&rat_int(6)));
        let r = RationalFn::new(LaurentPoly::one(&vars2()), d).unwrap();
        let lead = r.denom().leading_term(MonomialOrder::GrevLex).unwrap();
        assert!(lead.1.is_one());
    }

    #[test]
    fn divmod_by_monic_in_variable() {
        // a = (h^2 + x) * (h - x) + x^3, divide by h - x in h
        let b = h().sub(&x());
        let a = h().pow(2).add(&x()).mul(&b).add(&x().pow(3));
        let (q, r) = poly_divmod_in(&a, &b, "h").unwrap();
        assert_eq!(q, h().pow(2).add(&x()));
        assert_eq!(r, x().pow(3));
        assert_eq!(q.mul(&b).add(&r), a);
    }

    #[test]
    fn substitute_with_rational_values() {
        // p = h^2 - x, bind h -> 1/x: result (1 - x^3)/x^2
        let p = h().pow(2).sub(&x());
        let mut bind = BTreeMap::new();
        bind.insert(
            "h".to_string(),
            RationalFn::new(LaurentPoly::one(&vars2()), x()).unwrap(),
        );
        let r = substitute(&p, &bind).unwrap();
        let expect = RationalFn::new(
            LaurentPoly::one(&vars2()).sub(&x().pow(3)),
            x().pow(2),
        )
        .unwrap();
        assert_eq!(r, expect);
    }
}
