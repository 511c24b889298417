//! The cohomology ring of `X = Bl_{G(k, n-1)} G(k, n)`, the blowup of a
//! Grassmannian along a hyperplane sub-Grassmannian, in its two natural
//! bases.
//!
//! Basis **B1** reflects the blowup description: pullbacks `σ_λ` of ambient
//! Schubert classes (`λ` in the `k × (n-k)` box) together with classes
//! `E^i σ_μ` for `1 ≤ i ≤ k-1` and `μ` in the center's `k × (n-1-k)` box,
//! where `E` is the exceptional divisor. Products use three rules: pullbacks
//! multiply in the ambient ring; a pullback meets `E^i σ_μ` by restricting
//! to the center (`σ_ν · E^i σ_μ = E^i (ν|_Z · μ)`); and
//! `E^i σ_μ · E^j σ_ν = E^{i+j}(μν)`, after which powers `E^m` with `m ≥ k`
//! are rewritten through the relation
//!
//! `E^k = Σ_{i=1}^{k-1} (-1)^{k-1-i} E^i σ_{1^{k-i}}  +  (-1)^{k-1} σ_{1^k}`,
//!
//! whose `i = 0` term is an ambient class.
//!
//! Basis **B2** reflects the bundle description of the same variety over
//! `G(k-1, n-1)`: classes `E^i σ̄_λ` with `0 ≤ i ≤ n-k` and `λ` in the
//! `(k-1) × (n-k)` box, multiplying as a truncated polynomial ring in `E`
//! with one relation `E^{n-k+1} = -Σ_{a=1}^{n-k} E^a σ̄_{n-k+1-a}`.
//!
//! Both define the same ring; for `k = 2` an explicit conversion is
//! available in both directions (`σ̄_a = σ_a - E σ_{a-1}` and
//! `σ_{(a,b)} = Σ_{i=b}^{a} E^i σ̄_{a+b-i}`). Integration reads the
//! coefficient of the top class of each basis, and Poincaré-dual elements
//! come with closed formulas, verified by the pairing-matrix tests.

use crate::rational::{Rat, RatRepr};
use crate::schubert::{
    dual_partition, fits_in_box, normalize_partition, partitions_in_box, pieri_column, pieri_row,
    Partition, SchubertError, SchubertExpr,
};
use num_traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, thiserror::Error, PartialEq)]
pub enum CohomError {
    #[error("the blowup ring needs k >= 2 and n >= k+1, got k={k}, n={n}")]
    BadDomain { k: u32, n: u32 },
    #[error("basis element out of range: e-power {e} with partition {lambda:?} in basis {basis:?} on X_({k},{n})")]
    KeyOutOfRange {
        basis: Basis,
        e: u32,
        lambda: Vec<u32>,
        k: u32,
        n: u32,
    },
    #[error("operands live in different rings or bases")]
    Mismatch,
    #[error("basis conversion is implemented for k = 2 only (requested k = {0})")]
    UnsupportedConversion(u32),
    #[error(transparent)]
    Schubert(#[from] SchubertError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    B1,
    B2,
}

/// A cohomology class of the blowup, stored as a sparse combination of
/// basis elements `(e-power, partition)` in the chosen basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomClass {
    k: u32,
    n: u32,
    basis: Basis,
    terms: BTreeMap<(u32, Partition), Rat>,
}

fn check_domain(k: u32, n: u32) -> Result<(), CohomError> {
    if k < 2 || n < k + 1 {
        return Err(CohomError::BadDomain { k, n });
    }
    Ok(())
}

/// Valid `(e, λ)` keys of the requested basis, in a deterministic order.
pub fn basis_keys(k: u32, n: u32, basis: Basis) -> Result<Vec<(u32, Partition)>, CohomError> {
    check_domain(k, n)?;
    let mut out = Vec::new();
    match basis {
        Basis::B1 => {
            for l in partitions_in_box(k, n) {
                out.push((0, l));
            }
            for i in 1..k {
                for m in partitions_in_box(k, n - 1) {
                    out.push((i, m));
                }
            }
        }
        Basis::B2 => {
            for i in 0..=(n - k) {
                for l in partitions_in_box(k - 1, n - 1) {
                    out.push((i, l));
                }
            }
        }
    }
    Ok(out)
}

fn key_in_range(k: u32, n: u32, basis: Basis, e: u32, lambda: &[u32]) -> bool {
    match basis {
        Basis::B1 => {
            if e == 0 {
                fits_in_box(lambda, k, n - k)
            } else {
                e < k && fits_in_box(lambda, k, n - 1 - k)
            }
        }
        Basis::B2 => e <= n - k && fits_in_box(lambda, k - 1, (n - 1) - (k - 1)),
    }
}

impl CohomClass {
    pub fn zero(k: u32, n: u32, basis: Basis) -> Result<Self, CohomError> {
        check_domain(k, n)?;
        Ok(CohomClass {
            k,
            n,
            basis,
            terms: BTreeMap::new(),
        })
    }

    pub fn one(k: u32, n: u32, basis: Basis) -> Result<Self, CohomError> {
        Self::element(k, n, basis, 0, &[])
    }

    /// A single basis element `E^e σ_λ` (B1) or `E^e σ̄_λ` (B2).
    pub fn element(k: u32, n: u32, basis: Basis, e: u32, lambda: &[u32]) -> Result<Self, CohomError> {
        check_domain(k, n)?;
        let lambda = normalize_partition(lambda)?;
        if !key_in_range(k, n, basis, e, &lambda) {
            return Err(CohomError::KeyOutOfRange {
                basis,
                e,
                lambda,
                k,
                n,
            });
        }
        let mut c = Self::zero(k, n, basis)?;
        c.terms.insert((e, lambda), Rat::one());
        Ok(c)
    }

    /// The exceptional divisor class `E`.
    pub fn exceptional(k: u32, n: u32, basis: Basis) -> Result<Self, CohomError> {
        Self::element(k, n, basis, 1, &[])
    }

    /// The hyperplane pullback `σ_1` (B1 only; convert for B2 when k = 2).
    pub fn hyperplane(k: u32, n: u32) -> Result<Self, CohomError> {
        Self::element(k, n, Basis::B1, 0, &[1])
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, Partition), &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: u32, lambda: &[u32]) -> Rat {
        let l = normalize_partition(lambda).unwrap_or_else(|_| lambda.to_vec());
        self.terms.get(&(e, l)).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, key: (u32, Partition), c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    fn compatible(&self, other: &Self) -> Result<(), CohomError> {
        if self.k != other.k || self.n != other.n || self.basis != other.basis {
            return Err(CohomError::Mismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, CohomError> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (key, c) in &other.terms {
            out.add_term(key.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CohomError> {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return CohomClass {
                k: self.k,
                n: self.n,
                basis: self.basis,
                terms: BTreeMap::new(),
            };
        }
        CohomClass {
            k: self.k,
            n: self.n,
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(key, x)| (key.clone(), x.clone() * c))
                .collect(),
        }
    }

    /// Cohomological degree of each term is `e + |λ|`; returns the graded
    /// piece of degree `d`.
    pub fn graded_piece(&self, d: u32) -> Self {
        CohomClass {
            k: self.k,
            n: self.n,
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|((e, l), _)| e + l.iter().sum::<u32>() == d)
                .map(|(key, c)| (key.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, CohomError> {
        self.compatible(other)?;
        let mut raw: BTreeMap<(u32, Partition), Rat> = BTreeMap::new();
        for ((i, mu), c) in &self.terms {
            for ((j, nu), d) in &other.terms {
                let cd = c.clone() * d.clone();
                match self.basis {
                    Basis::B1 => b1_term_mul(self.k, self.n, *i, mu, *j, nu, &cd, &mut raw),
                    Basis::B2 => {
                        let prod = SchubertExpr::class(self.k - 1, self.n - 1, mu)?
                            .mul(&SchubertExpr::class(self.k - 1, self.n - 1, nu)?);
                        for (rho, x) in prod.terms() {
                            merge(&mut raw, (i + j, rho.clone()), x.clone() * cd.clone());
                        }
                    }
                }
            }
        }
        let mut out = Self::zero(self.k, self.n, self.basis)?;
        out.terms = match self.basis {
            Basis::B1 => reduce_exceptional_powers_b1(self.k, self.n, raw),
            Basis::B2 => reduce_exceptional_powers_b2(self.k, self.n, raw),
        };
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn pow(&self, mut e: u32) -> Result<Self, CohomError> {
        let mut acc = Self::one(self.k, self.n, self.basis)?;
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Integration over `X`. In B1 only pure ambient classes can reach the
    /// top degree, so this is the coefficient of `σ_{(n-k)^k}`; in B2 it is
    /// the coefficient of `E^{n-k} σ̄_{(n-k)^{k-1}}`.
    pub fn integrate(&self) -> Rat {
        let key = match self.basis {
            Basis::B1 => (0u32, vec![self.n - self.k; self.k as usize]),
            Basis::B2 => (
                self.n - self.k,
                vec![self.n - self.k; (self.k - 1) as usize],
            ),
        };
        let key = (key.0, normalize_partition(&key.1).unwrap());
        self.terms.get(&key).cloned().unwrap_or_else(Rat::zero)
    }

    /// `∫_X self · other`.
    pub fn pair(&self, other: &Self) -> Result<Rat, CohomError> {
        Ok(self.mul(other)?.integrate())
    }

    /// Poincaré dual, extended linearly from the closed formulas on basis
    /// elements:
    ///
    /// * B1, `e = 0`: `(σ_λ)^∨ = σ_{λ^∨}` (ambient dual).
    /// * B1, `e = i ≥ 1`:
    ///   `(E^i σ_μ)^∨ = σ_{μ^∨} · Σ_{a=1}^{k-i} (-1)^{a+i-1} E^a σ_{1^{k-i-a}}`,
    ///   with `μ^∨` taken in the center's box.
    /// * B2: `(E^i σ̄_λ)^∨ = σ̄_{λ^∨} · Σ_{a=0}^{n-k-i} E^a σ̄_{n-k-i-a}`,
    ///   with `λ^∨` taken in the `(k-1) × (n-k)` box.
    pub fn dual(&self) -> Result<Self, CohomError> {
        let mut out = Self::zero(self.k, self.n, self.basis)?;
        for ((e, l), c) in &self.terms {
            let d = self.dual_element(*e, l)?.scale(c);
            out = out.add(&d)?;
        }
        Ok(out)
    }

    fn dual_element(&self, e: u32, lambda: &Partition) -> Result<Self, CohomError> {
        let (k, n) = (self.k, self.n);
        match self.basis {
            Basis::B1 => {
                if e == 0 {
                    let dual = dual_partition(lambda, k, n)?;
                    Self::element(k, n, Basis::B1, 0, &dual)
                } else {
                    let mu_dual = dual_partition(lambda, k, n - 1)?;
                    let left = Self::element(k, n, Basis::B1, 0, &mu_dual)?;
                    let mut series = Self::zero(k, n, Basis::B1)?;
                    for a in 1..=(k - e) {
                        let ones = vec![1u32; (k - e - a) as usize];
                        if !fits_in_box(&ones, k, n - 1 - k) {
                            // the column class vanishes on a small center
                            continue;
                        }
                        let sgn = if (a + e - 1) % 2 == 0 {
                            Rat::one()
                        } else {
                            -Rat::one()
                        };
                        series =
                            series.add(&Self::element(k, n, Basis::B1, a, &ones)?.scale(&sgn))?;
                    }
                    left.mul(&series)
                }
            }
            Basis::B2 => {
                let width = n - k;
                let mut padded = lambda.clone();
                padded.resize((k - 1) as usize, 0);
                let l_dual: Vec<u32> = padded.iter().rev().map(|&p| width - p).collect();
                let left = Self::element(k, n, Basis::B2, 0, &l_dual)?;
                let mut series = Self::zero(k, n, Basis::B2)?;
                for a in 0..=(width - e) {
                    series = series.add(&Self::element(k, n, Basis::B2, a, &[width - e - a])?)?;
                }
                left.mul(&series)
            }
        }
    }

    /// Change of basis, implemented for `k = 2`:
    /// `σ_{(a,b)} = Σ_{i=b}^{a} E^i σ̄_{a+b-i}` and `σ̄_a = σ_a - E σ_{a-1}`.
    pub fn convert(&self) -> Result<Self, CohomError> {
        if self.k != 2 {
            return Err(CohomError::UnsupportedConversion(self.k));
        }
        let n = self.n;
        match self.basis {
            Basis::B1 => {
                let mut out = Self::zero(2, n, Basis::B2)?;
                let e_b2 = Self::exceptional(2, n, Basis::B2)?;
                for ((i, l), c) in &self.terms {
                    // pure σ_{(a,b)} first, then multiply by E^i in B2
                    let a = l.first().copied().unwrap_or(0);
                    let b = l.get(1).copied().unwrap_or(0);
                    let mut pure = Self::zero(2, n, Basis::B2)?;
                    for t in b..=a {
                        pure = pure.add(&Self::element(2, n, Basis::B2, t, &[a + b - t])?)?;
                    }
                    let shifted = e_b2.pow(*i)?.mul(&pure)?;
                    out = out.add(&shifted.scale(c))?;
                }
                Ok(out)
            }
            Basis::B2 => {
                let mut out = Self::zero(2, n, Basis::B1)?;
                let e_b1 = Self::exceptional(2, n, Basis::B1)?;
                for ((i, l), c) in &self.terms {
                    let a = l.first().copied().unwrap_or(0);
                    // σ̄_a = σ_a - E σ_{a-1}; σ̄_0 = 1
                    let bar = if a == 0 {
                        Self::one(2, n, Basis::B1)?
                    } else {
                        // a <= n-2 guarantees the row a-1 fits the center box
                        let head = Self::element(2, n, Basis::B1, 0, &[a])?;
                        let tail = Self::element(2, n, Basis::B1, 1, &[a - 1])?;
                        head.sub(&tail)?
                    };
                    let shifted = e_b1.pow(*i)?.mul(&bar)?;
                    out = out.add(&shifted.scale(c))?;
                }
                Ok(out)
            }
        }
    }
}

fn merge(map: &mut BTreeMap<(u32, Partition), Rat>, key: (u32, Partition), c: Rat) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
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

/// One raw term-by-term product in B1, accumulating into `out` (E-powers may
/// temporarily exceed `k-1`).
fn b1_term_mul(
    k: u32,
    n: u32,
    i: u32,
    mu: &Partition,
    j: u32,
    nu: &Partition,
    coeff: &Rat,
    out: &mut BTreeMap<(u32, Partition), Rat>,
) {
    match (i, j) {
        (0, 0) => {
            let prod = SchubertExpr::class(k, n, mu)
                .unwrap()
                .mul(&SchubertExpr::class(k, n, nu).unwrap());
            for (rho, x) in prod.terms() {
                merge(out, (0, rho.clone()), x.clone() * coeff.clone());
            }
        }
        (0, _) | (_, 0) => {
            // restrict the ambient factor to the center's box, then multiply
            // there; restriction is zero if it does not fit
            let (amb, e, ctr) = if i == 0 { (mu, j, nu) } else { (nu, i, mu) };
            if !fits_in_box(amb, k, n - 1 - k) {
                return;
            }
            let prod = SchubertExpr::class(k, n - 1, amb)
                .unwrap()
                .mul(&SchubertExpr::class(k, n - 1, ctr).unwrap());
            for (rho, x) in prod.terms() {
                merge(out, (e, rho.clone()), x.clone() * coeff.clone());
            }
        }
        _ => {
            let prod = SchubertExpr::class(k, n - 1, mu)
                .unwrap()
                .mul(&SchubertExpr::class(k, n - 1, nu).unwrap());
            for (rho, x) in prod.terms() {
                merge(out, (i + j, rho.clone()), x.clone() * coeff.clone());
            }
        }
    }
}

/// Rewrite all terms with `E`-power >= k through the degree-k relation; the
/// `i = 0` term of the relation lands among ambient classes.
fn reduce_exceptional_powers_b1(
    k: u32,
    n: u32,
    mut terms: BTreeMap<(u32, Partition), Rat>,
) -> BTreeMap<(u32, Partition), Rat> {
    loop {
        let key = terms.keys().find(|(e, _)| *e >= k).cloned();
        let Some((m, mu)) = key else {
            return terms;
        };
        let c = terms.remove(&(m, mu.clone())).unwrap();
        for idx in 0..k {
            let new_e = m - k + idx;
            let strip = k - idx;
            let sgn = if (k - 1 - idx) % 2 == 0 {
                c.clone()
            } else {
                -c.clone()
            };
            if new_e == 0 {
                // ambient: μ lives in the smaller box, so it is also an
                // ambient partition
                for rho in pieri_column(&mu, strip, k, n) {
                    merge(&mut terms, (0, rho), sgn.clone());
                }
            } else {
                for rho in pieri_column(&mu, strip, k, n - 1) {
                    merge(&mut terms, (new_e, rho), sgn.clone());
                }
            }
        }
    }
}

/// Rewrite all terms with `E`-power > n-k through the bundle relation
/// `E^{n-k+1} = -Σ_{a=1}^{n-k} E^a σ̄_{n-k+1-a}`.
fn reduce_exceptional_powers_b2(
    k: u32,
    n: u32,
    mut terms: BTreeMap<(u32, Partition), Rat>,
) -> BTreeMap<(u32, Partition), Rat> {
    let top = n - k;
    loop {
        let key = terms.keys().find(|(e, _)| *e > top).cloned();
        let Some((m, lambda)) = key else {
            return terms;
        };
        let c = terms.remove(&(m, lambda.clone())).unwrap();
        for a in 1..=top {
            let new_e = m - (top + 1) + a;
            let row = top + 1 - a;
            for rho in pieri_row(&lambda, row, k - 1, n - 1) {
                merge(&mut terms, (new_e, rho), -c.clone());
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Wire form

#[derive(Serialize, Deserialize)]
struct KeyRepr {
    e: u32,
    lambda: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct CohomTermRepr {
    key: KeyRepr,
    #[serde(flatten)]
    coeff: RatRepr,
}

#[derive(Serialize, Deserialize)]
struct CohomClassRepr {
    k: u32,
    n: u32,
    basis: Basis,
    terms: Vec<CohomTermRepr>,
}

impl Serialize for CohomClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CohomClassRepr {
            k: self.k,
            n: self.n,
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|((e, l), c)| CohomTermRepr {
                    key: KeyRepr {
                        e: *e,
                        lambda: l.clone(),
                    },
                    coeff: RatRepr::from(c),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CohomClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CohomClassRepr::deserialize(deserializer)?;
        let mut out = CohomClass::zero(repr.k, repr.n, repr.basis).map_err(D::Error::custom)?;
        for t in repr.terms {
            let lambda = normalize_partition(&t.key.lambda).map_err(D::Error::custom)?;
            if !key_in_range(repr.k, repr.n, repr.basis, t.key.e, &lambda) {
                return Err(D::Error::custom(format!(
                    "key (E^{}, {:?}) out of range for basis {:?} on X_({}, {})",
                    t.key.e, lambda, repr.basis, repr.k, repr.n
                )));
            }
            let c = Rat::try_from(&t.coeff).map_err(D::Error::custom)?;
            out.add_term((t.key.e, lambda), c);
        }
        Ok(out)
    }
}

impl fmt::Display for CohomClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let bar = match self.basis {
            Basis::B1 => "s",
            Basis::B2 => "sb",
        };
        let mut first = true;
        for ((e, l), c) in &self.terms {
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
            let mut name = String::new();
            if *e == 1 {
                name.push('E');
            } else if *e > 1 {
                name.push_str(&format!("E^{e}"));
            }
            if !l.is_empty() {
                if !name.is_empty() {
                    name.push('*');
                }
                name.push_str(&format!("{bar}{l:?}"));
            }
            if name.is_empty() {
                write!(f, "{}", crate::rational::format_rat(&mag))?;
            } else if mag.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{}*{name}", crate::rational::format_rat(&mag))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    #[test]
    fn basis_sizes_agree() {
        for n in 4..=8u32 {
            for k in 2..n {
                if n < k + 1 {
                    continue;
                }
                let b1 = basis_keys(k, n, Basis::B1).unwrap().len();
                let b2 = basis_keys(k, n, Basis::B2).unwrap().len();
                assert_eq!(b1, b2, "basis sizes differ on X_({k},{n})");
            }
        }
        // X_{2,5}: 10 ambient + 6 center classes = 16 = 4 * C(4,1)
        assert_eq!(basis_keys(2, 5, Basis::B1).unwrap().len(), 16);
    }

    #[test]
    fn exceptional_square_on_blown_up_plane() {
        // X_{2,3} is the plane blown up at a point: E^2 = -σ_{1,1} in B1 and
        // -E σ̄_1 in B2.
        let e1 = CohomClass::exceptional(2, 3, Basis::B1).unwrap();
        let sq = e1.mul(&e1).unwrap();
        assert_eq!(sq.coeff(0, &[1, 1]), rat_int(-1));
        assert_eq!(sq.terms().count(), 1);
        let e2 = CohomClass::exceptional(2, 3, Basis::B2).unwrap();
        let sq = e2.mul(&e2).unwrap();
        assert_eq!(sq.coeff(1, &[1]), rat_int(-1));
        assert_eq!(sq.terms().count(), 1);
        // and ∫ E^2 = -1 via either basis
        assert_eq!(e1.pair(&e1).unwrap(), rat_int(-1));
        assert_eq!(e2.pair(&e2).unwrap(), rat_int(-1));
    }

    #[test]
    fn hyperbar_powers_vanish_beyond_the_small_box() {
        // H̄ = σ̄_1 on X_{2,4}: H̄^2 = σ̄_2 and H̄^3 = 0
        let h = CohomClass::element(2, 4, Basis::B2, 0, &[1]).unwrap();
        let h2 = h.mul(&h).unwrap();
        assert_eq!(h2.coeff(0, &[2]), rat_int(1));
        assert_eq!(h2.terms().count(), 1);
        assert!(h2.mul(&h).unwrap().is_zero());
    }

    #[test]
    fn frozen_conversions_on_x25() {
        let n = 5;
        // σ_1 -> σ̄_1 + E
        let s1 = CohomClass::hyperplane(2, n).unwrap();
        let c = s1.convert().unwrap();
        assert_eq!(c.coeff(0, &[1]), rat_int(1));
        assert_eq!(c.coeff(1, &[]), rat_int(1));
        assert_eq!(c.terms().count(), 2);
        // σ_{1,1} -> E σ̄_1
        let s11 = CohomClass::element(2, n, Basis::B1, 0, &[1, 1]).unwrap();
        let c = s11.convert().unwrap();
        assert_eq!(c.coeff(1, &[1]), rat_int(1));
        assert_eq!(c.terms().count(), 1);
        // σ_2 -> σ̄_2 + E σ̄_1 + E^2
        let s2 = CohomClass::element(2, n, Basis::B1, 0, &[2]).unwrap();
        let c = s2.convert().unwrap();
        assert_eq!(c.coeff(0, &[2]), rat_int(1));
        assert_eq!(c.coeff(1, &[1]), rat_int(1));
        assert_eq!(c.coeff(2, &[]), rat_int(1));
        assert_eq!(c.terms().count(), 3);
        // σ̄_1 -> σ_1 - E
        let hbar = CohomClass::element(2, n, Basis::B2, 0, &[1]).unwrap();
        let c = hbar.convert().unwrap();
        assert_eq!(c.coeff(0, &[1]), rat_int(1));
        assert_eq!(c.coeff(1, &[]), rat_int(-1));
    }

    #[test]
    fn conversion_round_trips_and_respects_products() {
        for n in 4..=6u32 {
            for key in basis_keys(2, n, Basis::B1).unwrap() {
                let x = CohomClass::element(2, n, Basis::B1, key.0, &key.1).unwrap();
                let back = x.convert().unwrap().convert().unwrap();
                assert_eq!(back, x, "round trip of {key:?} on X_(2,{n})");
            }
            // conversion is a ring map: check on a pair of divisor powers
            let s1 = CohomClass::hyperplane(2, n).unwrap();
            let e = CohomClass::exceptional(2, n, Basis::B1).unwrap();
            let a = s1.mul(&s1).unwrap().sub(&e.mul(&s1).unwrap()).unwrap();
            let lhs = a.mul(&e).unwrap().convert().unwrap();
            let rhs = a.convert().unwrap().mul(&e.convert().unwrap()).unwrap();
            assert_eq!(lhs, rhs, "conversion vs product on X_(2,{n})");
        }
    }

    #[test]
    fn pairing_matrices_are_identity_after_dualizing() {
        for (k, n) in [(2u32, 4u32), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6)] {
            for basis in [Basis::B1, Basis::B2] {
                let keys = basis_keys(k, n, basis).unwrap();
                for key_a in &keys {
                    let a = CohomClass::element(k, n, basis, key_a.0, &key_a.1).unwrap();
                    let a_dual = a.dual().unwrap();
                    for key_b in &keys {
                        let b = CohomClass::element(k, n, basis, key_b.0, &key_b.1).unwrap();
                        let got = b.pair(&a_dual).unwrap();
                        let want = if key_a == key_b {
                            rat_int(1)
                        } else {
                            rat_int(0)
                        };
                        assert_eq!(
                            got, want,
                            "pairing <{key_b:?}, dual {key_a:?}> in {basis:?} on X_({k},{n})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn pairings_agree_across_bases_for_k2() {
        for n in 4..=6u32 {
            let keys = basis_keys(2, n, Basis::B1).unwrap();
            for key_a in &keys {
                let a = CohomClass::element(2, n, Basis::B1, key_a.0, &key_a.1).unwrap();
                for key_b in &keys {
                    let b = CohomClass::element(2, n, Basis::B1, key_b.0, &key_b.1).unwrap();
                    let via_b1 = a.pair(&b).unwrap();
                    let via_b2 = a.convert().unwrap().pair(&b.convert().unwrap()).unwrap();
                    assert_eq!(via_b1, via_b2, "routes differ at {key_a:?}, {key_b:?}");
                }
            }
        }
    }

    #[test]
    fn products_are_associative_in_both_bases() {
        let n = 5;
        let s1 = CohomClass::hyperplane(2, n).unwrap();
        let e = CohomClass::exceptional(2, n, Basis::B1).unwrap();
        let es = CohomClass::element(2, n, Basis::B1, 1, &[2, 1]).unwrap();
        let ab_c = s1.mul(&e).unwrap().mul(&es).unwrap();
        let a_bc = s1.mul(&e.mul(&es).unwrap()).unwrap();
        assert_eq!(ab_c, a_bc);
        let hb = CohomClass::element(2, n, Basis::B2, 0, &[1]).unwrap();
        let eb = CohomClass::exceptional(2, n, Basis::B2).unwrap();
        let xb = CohomClass::element(2, n, Basis::B2, 2, &[2]).unwrap();
        let ab_c = hb.mul(&eb).unwrap().mul(&xb).unwrap();
        let a_bc = hb.mul(&eb.mul(&xb).unwrap()).unwrap();
        assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn integral_of_center_classes_vanishes_in_b1() {
        // E^i σ_μ never reaches the top degree
        let n = 6;
        for key in basis_keys(2, n, Basis::B1).unwrap() {
            if key.0 == 0 {
                continue;
            }
            let x = CohomClass::element(2, n, Basis::B1, key.0, &key.1).unwrap();
            assert_eq!(x.integrate(), rat_int(0));
        }
    }

    #[test]
    fn wire_round_trip() {
        let x = CohomClass::element(2, 5, Basis::B1, 1, &[2, 1])
            .unwrap()
            .scale(&crate::rational::rat(-3, 7));
        let js = serde_json::to_string(&x).unwrap();
        let back: CohomClass = serde_json::from_str(&js).unwrap();
        assert_eq!(back, x);
        // out-of-range keys are rejected
        let bad = r#"{"k":2,"n":5,"basis":"B1","terms":[{"key":{"e":2,"lambda":[]},"num":"1","den":"1"}]}"#;
        assert!(serde_json::from_str::<CohomClass>(bad).is_err());
    }
}
