//! Numerical classification of blowups `Bl_Z G(k, n)` where the center `Z`
//! is a smaller Grassmannian `G(k', n')` embedded as a smooth Schubert
//! variety.
//!
//! The embedding data is a pair `(a, b)` encoding the partition
//! `λ = ((n-k)^a, (n-k-b)^{k-a})`, from which the center is
//! `G(k-a, k+b-a)`. Everything here is exact integer arithmetic layered on
//! the Schubert calculus of [`crate::schubert`]: Fano tests, indices,
//! exceptional-divisor positivity, the Mori/nef intersection table, the
//! projective-bundle structures, and the birational/fibration invariant
//! `H'^N`.
//!
//! Codimension 0 and 1 centers are rejected as degenerate: codimension 0
//! means the center is the whole space, and blowing up a Cartier divisor is
//! an isomorphism, so neither has an exceptional curve class to classify.

use crate::schubert::{
    center_of, degree_of_grassmannian, segre_normal_bundle, SchubertError, SchubertExpr,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Debug, Clone, thiserror::Error, PartialEq)]
pub enum BlowupError {
    #[error("invalid blowup data: {0}")]
    InvalidSpec(String),
    #[error("degenerate center (codimension {0} <= 1): the blowup is trivial or divisorial and has no exceptional curve class")]
    DegenerateCenter(u32),
    #[error("the center is a point; it contains no line")]
    NoLineOnCenter,
    #[error(transparent)]
    Schubert(#[from] SchubertError),
}

/// The data `(k, n, a, b)` of a Schubert-center blowup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupSpec {
    pub k: u32,
    pub n: u32,
    pub a: u32,
    pub b: u32,
}

impl BlowupSpec {
    pub fn new(k: u32, n: u32, a: u32, b: u32) -> Result<Self, BlowupError> {
        let spec = BlowupSpec { k, n, a, b };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), BlowupError> {
        let BlowupSpec { k, n, a, b } = *self;
        if n < 2 || k == 0 || k >= n {
            return Err(BlowupError::InvalidSpec(format!(
                "need 2 <= n and 1 <= k <= n-1, got k={k}, n={n}"
            )));
        }
        if a > k || b > n - k {
            return Err(BlowupError::InvalidSpec(format!(
                "need 0 <= a <= k and 0 <= b <= n-k, got a={a}, b={b}"
            )));
        }
        // The partition ((n-k)^a, (n-k-b)^{k-a}) must be nonzero, i.e. the
        // center must be a proper subvariety.
        if a == 0 && b == n - k {
            return Err(BlowupError::InvalidSpec(
                "the partition is zero: the center is the whole Grassmannian".into(),
            ));
        }
        Ok(())
    }

    /// `(k', n')` of the center `G(k', n')`.
    pub fn center(&self) -> (u32, u32) {
        center_of(self.k, self.n, self.a, self.b)
    }

    /// Codimension of the center: `k(n-k) - k'(n'-k')`.
    pub fn codim(&self) -> u32 {
        let (kp, np) = self.center();
        self.k * (self.n - self.k) - kp * (np - kp)
    }

    pub fn center_dim(&self) -> u32 {
        let (kp, np) = self.center();
        kp * (np - kp)
    }
}

/// The projective-bundle structures a blowup can carry. A single spec may
/// match several (on projective space the types overlap), so reports carry a
/// set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BundleType {
    TypeI,
    TypeII,
    TypeIII,
}

/// Intersection numbers against the Mori-cone generators `e` (a line in the
/// exceptional divisor) and `ℓ - e` (strict transform direction), plus the
/// nef generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionTable {
    pub h_dot_l: i64,
    pub h_dot_e: i64,
    pub e_dot_l: i64,
    pub e_dot_e: i64,
    pub anticanonical_dot_e: i64,
    pub anticanonical_dot_l_minus_e: i64,
    pub nef_generators: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub spec: BlowupSpec,
    pub center_k: u32,
    pub center_n: u32,
    pub codim: u32,
    pub is_fano: bool,
    pub fano_index: u32,
    pub exceptional_fano: bool,
    pub bundle_types: BTreeSet<BundleType>,
    pub intersections: IntersectionTable,
    /// `H'^N`, computed on demand by [`fibration_number`]; `None` when the
    /// report was produced without it.
    #[serde(with = "bigint_string")]
    pub fibration_number: Option<BigInt>,
}

/// Serialize big integers as decimal strings, matching the rational wire
/// form elsewhere.
mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.serialize_some(&x.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        let s: Option<String> = Option::deserialize(d)?;
        match s {
            None => Ok(None),
            Some(x) => BigInt::from_str(&x)
                .map(Some)
                .map_err(serde::de::Error::custom),
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Intersection table of the blowup: curve classes pair with `H`, `E`, and
/// the anticanonical class `nH - (c-1)E`.
pub fn mori_nef_data(spec: &BlowupSpec) -> Result<IntersectionTable, BlowupError> {
    spec.validate()?;
    let c = spec.codim();
    if c <= 1 {
        return Err(BlowupError::DegenerateCenter(c));
    }
    Ok(IntersectionTable {
        h_dot_l: 1,
        h_dot_e: 0,
        e_dot_l: 0,
        e_dot_e: -1,
        anticanonical_dot_e: c as i64 - 1,
        anticanonical_dot_l_minus_e: spec.n as i64 - c as i64 + 1,
        nef_generators: ["H".into(), "H - E".into()],
    })
}

/// Full numerical classification. The fibration number is left out (see
/// [`fibration_number`]); everything else is constant-time arithmetic.
pub fn classify(spec: &BlowupSpec) -> Result<ClassificationReport, BlowupError> {
    spec.validate()?;
    let (kp, np) = spec.center();
    let c = spec.codim();
    if c <= 1 {
        return Err(BlowupError::DegenerateCenter(c));
    }
    let intersections = mori_nef_data(spec)?;
    let is_fano = c <= spec.n;
    let mut bundle_types = BTreeSet::new();
    if spec.a == 0 && spec.b == spec.n - spec.k - 1 {
        bundle_types.insert(BundleType::TypeI);
    }
    if spec.a == 1 && spec.b == spec.n - spec.k {
        bundle_types.insert(BundleType::TypeII);
    }
    if spec.k == 1 || spec.n - spec.k == 1 {
        bundle_types.insert(BundleType::TypeIII);
    }
    Ok(ClassificationReport {
        spec: *spec,
        center_k: kp,
        center_n: np,
        codim: c,
        is_fano,
        fano_index: gcd(spec.n, c - 1),
        exceptional_fano: c < spec.n,
        bundle_types,
        intersections,
        fibration_number: None,
    })
}

/// The exact integer `H'^N` where `H'` is the pullback-minus-exceptional
/// polarization and `N = k(n-k)`:
///
/// `H'^N = deg G(k,n) - Σ_{i=0}^{dim Z} C(N, i) · ∫_Z s_{dim Z - i}(N_Z) · σ_1^i`.
///
/// Zero exactly when the second extremal contraction is a fibration rather
/// than birational.
pub fn fibration_number(spec: &BlowupSpec) -> Result<BigInt, BlowupError> {
    spec.validate()?;
    let c = spec.codim();
    if c <= 1 {
        return Err(BlowupError::DegenerateCenter(c));
    }
    let big_n = spec.k * (spec.n - spec.k);
    let dim_z = spec.center_dim();
    let segre = segre_normal_bundle(spec.k, spec.n, spec.a, spec.b)?;
    let mut correction = BigInt::zero();
    for i in 0..=dim_z {
        let mut piece: SchubertExpr = segre[(dim_z - i) as usize].clone();
        for _ in 0..i {
            piece = piece.mul_sigma_row(1);
        }
        let integral = piece.integrate();
        assert!(
            integral.denom().is_one(),
            "Segre integrals over the center must be integers"
        );
        correction += binomial(big_n, i) * integral.numer();
    }
    Ok(degree_of_grassmannian(spec.k, spec.n) - correction)
}

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Evaluate the Plücker-dimension identity
/// `C(p+q, p) + C(n', k') = C(n, k)` for the center of `spec`.
pub fn dimension_equality(p: u32, q: u32, spec: &BlowupSpec) -> Result<bool, BlowupError> {
    if p == 0 || q == 0 {
        return Err(BlowupError::InvalidSpec("need p, q >= 1".into()));
    }
    spec.validate()?;
    let (kp, np) = spec.center();
    Ok(binomial(p + q, p) + binomial(np, kp) == binomial(spec.n, spec.k))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InequalityKind {
    Strict,
    Equal,
}

/// Compare `C(α(β+1)-β, α)` against `C(α(β+1)-1, α-1)` exactly. The first is
/// always at least the second; equality holds iff `α = 1` or `β = 1`.
pub fn combinatorial_inequality(alpha: u32, beta: u32) -> Result<InequalityKind, BlowupError> {
    if alpha == 0 || beta == 0 {
        return Err(BlowupError::InvalidSpec("need alpha, beta >= 1".into()));
    }
    let lhs = binomial(alpha * (beta + 1) - beta, alpha);
    let rhs = binomial(alpha * (beta + 1) - 1, alpha - 1);
    assert!(
        (&lhs - &rhs).sign() != num_bigint::Sign::Minus,
        "inequality direction violated: C = {lhs} vs {rhs}"
    );
    Ok(if lhs == rhs {
        InequalityKind::Equal
    } else {
        InequalityKind::Strict
    })
}

/// Splitting type of the conormal bundle of the center restricted to a line:
/// `(c - (n - n'), n - n')` copies of `O` and `O(-1)` respectively. Requires
/// the center to contain a line (positive dimension).
pub fn normal_splitting_on_line(spec: &BlowupSpec) -> Result<(u32, u32), BlowupError> {
    spec.validate()?;
    let c = spec.codim();
    if c <= 1 {
        return Err(BlowupError::DegenerateCenter(c));
    }
    if spec.center_dim() == 0 {
        return Err(BlowupError::NoLineOnCenter);
    }
    let (_, np) = spec.center();
    let drop = spec.n - np;
    Ok((c - drop, drop))
}

/// All valid specs (codimension at least 2) for a fixed ambient `G(k, n)`.
pub fn valid_specs(k: u32, n: u32) -> Vec<BlowupSpec> {
    let mut out = Vec::new();
    if k == 0 || k >= n {
        return out;
    }
    for a in 0..=k {
        for b in 0..=(n - k) {
            if let Ok(spec) = BlowupSpec::new(k, n, a, b) {
                if spec.codim() >= 2 {
                    out.push(spec);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_blowups_of_small_grassmannians() {
        // Blowing up a point of G(2,4): codim 4 <= 4, Fano.
        let r = classify(&BlowupSpec::new(2, 4, 2, 0).unwrap()).unwrap();
        assert_eq!((r.center_k, r.center_n), (0, 0));
        assert_eq!(r.codim, 4);
        assert!(r.is_fano);
        // A point of G(2,5): codim 6 > 5, not Fano.
        let r = classify(&BlowupSpec::new(2, 5, 2, 0).unwrap()).unwrap();
        assert_eq!(r.codim, 6);
        assert!(!r.is_fano);
    }

    #[test]
    fn hyperplane_grassmannian_center_is_type_i() {
        // (2, n, 0, n-3): center G(2, n-1), codim 2, always Fano.
        for n in 5..=9u32 {
            let r = classify(&BlowupSpec::new(2, n, 0, n - 3).unwrap()).unwrap();
            assert_eq!((r.center_k, r.center_n), (2, n - 1));
            assert_eq!(r.codim, 2);
            assert!(r.is_fano);
            assert!(r.bundle_types.contains(&BundleType::TypeI));
        }
    }

    #[test]
    fn intersection_table_values() {
        let spec = BlowupSpec::new(2, 6, 0, 3).unwrap(); // codim 2
        let t = mori_nef_data(&spec).unwrap();
        assert_eq!(
            (t.h_dot_l, t.h_dot_e, t.e_dot_l, t.e_dot_e),
            (1, 0, 0, -1)
        );
        assert_eq!(t.anticanonical_dot_e, 1);
        assert_eq!(t.anticanonical_dot_l_minus_e, 5);
        // (-K)·ℓ = (-K)·e + (-K)·(ℓ-e) = n
        assert_eq!(
            t.anticanonical_dot_e + t.anticanonical_dot_l_minus_e,
            spec.n as i64
        );
        // X_{3,7}: codim 3, (-K)·e = 2
        let spec = BlowupSpec::new(3, 7, 0, 3).unwrap();
        assert_eq!(spec.codim(), 3);
        assert_eq!(mori_nef_data(&spec).unwrap().anticanonical_dot_e, 2);
    }

    #[test]
    fn degenerate_centers_are_rejected() {
        // whole-space center: invalid partition
        assert!(BlowupSpec::new(2, 5, 0, 3).is_err());
        // divisorial center in projective space: codim 1
        let spec = BlowupSpec::new(1, 4, 0, 2).unwrap();
        assert_eq!(spec.codim(), 1);
        assert!(matches!(
            classify(&spec),
            Err(BlowupError::DegenerateCenter(1))
        ));
    }

    #[test]
    fn kleiman_positivity_matches_codim_bound() {
        for n in 2..=12u32 {
            for k in 1..n {
                for spec in valid_specs(k, n) {
                    let r = classify(&spec).unwrap();
                    let t = &r.intersections;
                    let kleiman =
                        t.anticanonical_dot_e > 0 && t.anticanonical_dot_l_minus_e > 0;
                    assert_eq!(r.is_fano, kleiman, "Kleiman mismatch at {spec:?}");
                    assert_eq!(r.is_fano, r.codim <= n, "codim bound mismatch at {spec:?}");
                    // index divides the anticanonical degree of both rays
                    assert_eq!(t.anticanonical_dot_e % r.fano_index as i64, 0);
                    assert_eq!(
                        t.anticanonical_dot_l_minus_e % r.fano_index as i64,
                        0
                    );
                    assert_eq!(r.exceptional_fano, r.codim < n);
                }
            }
        }
    }

    #[test]
    fn fano_point_blowups_are_projective_spaces_and_g24() {
        let mut fano_ambients = BTreeSet::new();
        for n in 2..=12u32 {
            for k in 1..n {
                for spec in valid_specs(k, n) {
                    if spec.center_dim() != 0 {
                        continue;
                    }
                    let r = classify(&spec).unwrap();
                    if r.is_fano {
                        fano_ambients.insert((k, n));
                    }
                }
            }
        }
        for (k, n) in fano_ambients {
            let projective_space = k == 1 || k == n - 1;
            assert!(
                projective_space || (k, n) == (2, 4),
                "unexpected Fano point-blowup ambient G({k},{n})"
            );
        }
    }

    #[test]
    fn fibration_numbers_match_known_contractions() {
        // Fano fibration over G(1,3)-center data
        let f = fibration_number(&BlowupSpec::new(2, 5, 1, 2).unwrap()).unwrap();
        assert!(f.is_zero());
        // point blowup of G(2,4) is birational: 2 - 1 = 1
        let f = fibration_number(&BlowupSpec::new(2, 4, 2, 0).unwrap()).unwrap();
        assert_eq!(f, BigInt::one());
        // TypeI contraction is a projective bundle: vanishes
        let f = fibration_number(&BlowupSpec::new(2, 4, 0, 1).unwrap()).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn bundle_types_force_fibration_and_dimension_identity() {
        for (k, n) in [(2u32, 5u32), (2, 6), (3, 6)] {
            // TypeI: (a,b) = (0, n-k-1), identity with (p,q) = (k-1, n-k)
            let spec = BlowupSpec::new(k, n, 0, n - k - 1).unwrap();
            let r = classify(&spec).unwrap();
            assert!(r.bundle_types.contains(&BundleType::TypeI));
            assert!(fibration_number(&spec).unwrap().is_zero());
            assert!(dimension_equality(k - 1, n - k, &spec).unwrap());
            // TypeII: (a,b) = (1, n-k), identity with (p,q) = (k, n-1-k)
            let spec = BlowupSpec::new(k, n, 1, n - k).unwrap();
            let r = classify(&spec).unwrap();
            assert!(r.bundle_types.contains(&BundleType::TypeII));
            assert!(fibration_number(&spec).unwrap().is_zero());
            assert!(dimension_equality(k, n - 1 - k, &spec).unwrap());
        }
        // non-bundle spec: identity fails for a generic (p, q)
        let spec = BlowupSpec::new(2, 5, 1, 1).unwrap();
        assert!(!dimension_equality(1, 3, &spec).unwrap());
    }

    #[test]
    fn combinatorial_inequality_boundary() {
        for beta in 1..=40u32 {
            assert_eq!(
                combinatorial_inequality(1, beta).unwrap(),
                InequalityKind::Equal
            );
        }
        for alpha in 1..=40u32 {
            assert_eq!(
                combinatorial_inequality(alpha, 1).unwrap(),
                InequalityKind::Equal
            );
        }
        for alpha in 2..=40u32 {
            for beta in 2..=40u32 {
                assert_eq!(
                    combinatorial_inequality(alpha, beta).unwrap(),
                    InequalityKind::Strict,
                    "alpha={alpha}, beta={beta}"
                );
            }
        }
        // spot value: alpha = beta = 2 gives C(4,2)=6 vs C(5,1)=5
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(5, 1), BigInt::from(5));
    }

    #[test]
    fn conormal_splitting_on_lines() {
        let spec = BlowupSpec::new(2, 4, 0, 1).unwrap();
        assert_eq!(normal_splitting_on_line(&spec).unwrap(), (1, 1));
        let spec = BlowupSpec::new(3, 7, 0, 2).unwrap();
        assert_eq!(normal_splitting_on_line(&spec).unwrap(), (4, 2));
        // linear-subspace centers in projective space: trivial part vanishes
        let spec = BlowupSpec::new(1, 5, 0, 2).unwrap();
        let (t, _) = normal_splitting_on_line(&spec).unwrap();
        assert_eq!(t, 0);
        // a point center has no line
        let spec = BlowupSpec::new(2, 4, 2, 0).unwrap();
        assert!(matches!(
            normal_splitting_on_line(&spec),
            Err(BlowupError::NoLineOnCenter)
        ));
    }
}
