//! The classical cohomology ring of a Grassmannian `G(k, n)` of `k`-planes
//! in `n`-space, in the Schubert basis.
//!
//! Classes are rational linear combinations of Schubert classes `σ_λ`,
//! indexed by partitions in the `k × (n-k)` box. Products go through Pieri's
//! rule (row and column versions) and the Giambelli determinant, expanded by
//! Leibniz; integration reads off the coefficient of the top class. A
//! Littlewood–Richardson tableau counter and the hook-length degree formula
//! are provided as independent cross-checks of the same structure constants.

use crate::rational::{Rat, RatRepr};
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// A partition: weakly decreasing positive parts, trailing zeros trimmed.
pub type Partition = Vec<u32>;

#[derive(Debug, Clone, thiserror::Error, PartialEq)]
pub enum SchubertError {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("partition {lambda:?} does not fit in the {k} x {width} box")]
    OutOfBox { lambda: Vec<u32>, k: u32, width: u32 },
    #[error("classes live on different Grassmannians: G({0}, {1}) vs G({2}, {3})")]
    Mismatch(u32, u32, u32, u32),
    #[error("invalid Grassmannian G({k}, {n})")]
    BadGrassmannian { k: u32, n: u32 },
}

/// Validate weak decrease and trim trailing zeros.
pub fn normalize_partition(parts: &[u32]) -> Result<Partition, SchubertError> {
    for w in parts.windows(2) {
        if w[0] < w[1] {
            return Err(SchubertError::NotDecreasing(parts.to_vec()));
        }
    }
    let mut p = parts.to_vec();
    while p.last() == Some(&0) {
        p.pop();
    }
    Ok(p)
}

pub fn fits_in_box(lambda: &[u32], k: u32, width: u32) -> bool {
    lambda.len() as u32 <= k && lambda.first().copied().unwrap_or(0) <= width
}

/// All partitions in the `k × (n-k)` box, lexicographically ascending.
/// There are `binomial(n, k)` of them.
pub fn partitions_in_box(k: u32, n: u32) -> Vec<Partition> {
    assert!(n >= k, "G({k}, {n}) requires k <= n");
    let width = n - k;
    let mut out = Vec::new();
    let mut cur: Partition = Vec::new();
    fn rec(out: &mut Vec<Partition>, cur: &mut Partition, rows_left: u32, max_part: u32) {
        out.push(cur.clone());
        if rows_left == 0 {
            return;
        }
        for p in 1..=max_part {
            cur.push(p);
            rec(out, cur, rows_left - 1, p);
            cur.pop();
        }
    }
    rec(&mut out, &mut cur, k, width);
    out.sort();
    out
}

/// The Poincaré-dual partition `(n-k-λ_k, ..., n-k-λ_1)`.
pub fn dual_partition(lambda: &[u32], k: u32, n: u32) -> Result<Partition, SchubertError> {
    let lambda = normalize_partition(lambda)?;
    let width = n - k;
    if !fits_in_box(&lambda, k, width) {
        return Err(SchubertError::OutOfBox {
            lambda,
            k,
            width,
        });
    }
    let mut padded = lambda.clone();
    padded.resize(k as usize, 0);
    let dual: Vec<u32> = padded.iter().rev().map(|&p| width - p).collect();
    normalize_partition(&dual)
}

/// Pieri rule for a row: partitions obtained from `lambda` by adding a
/// horizontal strip of `m` boxes inside the box.
pub fn pieri_row(lambda: &[u32], m: u32, k: u32, n: u32) -> Vec<Partition> {
    let width = n - k;
    if m > width {
        return Vec::new();
    }
    let mut padded = lambda.to_vec();
    padded.resize(k as usize, 0);
    let mut out = Vec::new();
    // Choose mu interlacing lambda: mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ...
    fn rec(
        out: &mut Vec<Partition>,
        padded: &[u32],
        cur: &mut Vec<u32>,
        i: usize,
        left: u32,
        upper: u32,
    ) {
        if i == padded.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let lo = padded[i];
        let hi = upper.min(lo + left);
        for v in lo..=hi {
            cur.push(v);
            rec(out, padded, cur, i + 1, left - (v - lo), padded[i]);
            cur.pop();
        }
    }
    rec(&mut out, &padded, &mut Vec::new(), 0, m, width);
    out.into_iter()
        .map(|p| normalize_partition(&p).unwrap())
        .collect()
}

/// Pieri rule for a column: add a vertical strip of `m` boxes (at most one
/// per row).
pub fn pieri_column(lambda: &[u32], m: u32, k: u32, n: u32) -> Vec<Partition> {
    let width = n - k;
    if m > k {
        return Vec::new();
    }
    let mut padded = lambda.to_vec();
    padded.resize(k as usize, 0);
    let mut out = Vec::new();
    for rows in (0..k as usize).combinations(m as usize) {
        let mut mu = padded.clone();
        for &r in &rows {
            mu[r] += 1;
        }
        let ok = mu.windows(2).all(|w| w[0] >= w[1]) && mu[0] <= width;
        if ok {
            out.push(normalize_partition(&mu).unwrap());
        }
    }
    out
}

/// A rational combination of Schubert classes on a fixed `G(k, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertExpr {
    k: u32,
    n: u32,
    terms: BTreeMap<Partition, Rat>,
}

impl SchubertExpr {
    pub fn zero(k: u32, n: u32) -> Self {
        assert!(k <= n, "G({k}, {n}) requires k <= n");
        SchubertExpr {
            k,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(k: u32, n: u32) -> Self {
        Self::class(k, n, &[]).unwrap()
    }

    /// The single Schubert class `σ_λ`.
    pub fn class(k: u32, n: u32, lambda: &[u32]) -> Result<Self, SchubertError> {
        if k > n {
            return Err(SchubertError::BadGrassmannian { k, n });
        }
        let lambda = normalize_partition(lambda)?;
        if !fits_in_box(&lambda, k, n - k) {
            return Err(SchubertError::OutOfBox {
                lambda,
                k,
                width: n - k,
            });
        }
        let mut e = Self::zero(k, n);
        e.terms.insert(lambda, Rat::one());
        Ok(e)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &[u32]) -> Rat {
        let lambda = normalize_partition(lambda).unwrap_or_else(|_| lambda.to_vec());
        self.terms.get(&lambda).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
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

    fn check(&self, other: &Self) -> Result<(), SchubertError> {
        if self.k != other.k || self.n != other.n {
            return Err(SchubertError::Mismatch(self.k, self.n, other.k, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other).expect("mismatched Grassmannians");
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.k, self.n);
        }
        SchubertExpr {
            k: self.k,
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(l, x)| (l.clone(), x.clone() * c))
                .collect(),
        }
    }

    /// Multiply by the row class `σ_m`.
    pub fn mul_sigma_row(&self, m: u32) -> Self {
        if m == 0 {
            return self.clone();
        }
        let mut out = Self::zero(self.k, self.n);
        for (l, c) in &self.terms {
            for mu in pieri_row(l, m, self.k, self.n) {
                out.add_term(mu, c.clone());
            }
        }
        out
    }

    /// Multiply by the column class `σ_{1^m}`.
    pub fn mul_sigma_column(&self, m: u32) -> Self {
        if m == 0 {
            return self.clone();
        }
        let mut out = Self::zero(self.k, self.n);
        for (l, c) in &self.terms {
            for mu in pieri_column(l, m, self.k, self.n) {
                out.add_term(mu, c.clone());
            }
        }
        out
    }

    /// Full cup product via the Giambelli determinant on the right factor,
    /// expanded by Leibniz and folded through Pieri.
    pub fn mul(&self, other: &Self) -> Self {
        self.check(other).expect("mismatched Grassmannians");
        let mut out = Self::zero(self.k, self.n);
        for (mu, d) in &other.terms {
            let prod = self.mul_partition(mu);
            for (l, c) in prod.terms {
                out.add_term(l, c * d.clone());
            }
        }
        out
    }

    fn mul_partition(&self, mu: &Partition) -> Self {
        let r = mu.len();
        if r == 0 {
            return self.clone();
        }
        if r == 1 {
            return self.mul_sigma_row(mu[0]);
        }
        // det(σ_{μ_i + j - i}) over column permutations; each summand is a
        // product of row classes applied by Pieri. Entries below zero or
        // above the box width are the zero class and kill the summand.
        let width = (self.n - self.k) as i64;
        let mut out = Self::zero(self.k, self.n);
        for perm in (0..r).permutations(r) {
            let rows: Vec<i64> = perm
                .iter()
                .enumerate()
                .map(|(i, &j)| mu[i] as i64 + j as i64 - i as i64)
                .collect();
            if rows.iter().any(|&v| v < 0 || v > width) {
                continue;
            }
            let sign = perm_sign(&perm);
            let mut acc = self.scale(&if sign { Rat::one() } else { -Rat::one() });
            for &m in &rows {
                if m == 0 {
                    continue;
                }
                acc = acc.mul_sigma_row(m as u32);
                if acc.is_zero() {
                    break;
                }
            }
            out = out.add(&acc);
        }
        out
    }

    /// The coefficient of the top class (the full box): `∫ self`.
    pub fn integrate(&self) -> Rat {
        let top = normalize_partition(&vec![self.n - self.k; self.k as usize]).unwrap();
        self.terms.get(&top).cloned().unwrap_or_else(Rat::zero)
    }

    /// `∫ self · other`.
    pub fn pair(&self, other: &Self) -> Rat {
        self.mul(other).integrate()
    }

    /// The part of the expression in cohomological degree `d` (partitions of
    /// size `d`).
    pub fn graded_piece(&self, d: u32) -> Self {
        SchubertExpr {
            k: self.k,
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.iter().sum::<u32>() == d)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }
}

fn perm_sign(perm: &[usize]) -> bool {
    let mut even = true;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                even = !even;
            }
        }
    }
    even
}

/// Degree of `G(k, n)` in its Plücker embedding: `∫ σ_1^{k(n-k)}`.
pub fn degree_of_grassmannian(k: u32, n: u32) -> BigInt {
    assert!(k <= n);
    let dim = k * (n - k);
    let mut acc = SchubertExpr::one(k, n);
    for _ in 0..dim {
        acc = acc.mul_sigma_row(1);
    }
    let r = acc.integrate();
    assert!(r.denom().is_one(), "degree must be an integer");
    r.numer().clone()
}

/// The same degree by the hook-length formula on the `k × (n-k)` rectangle:
/// `(k(n-k))! / ∏ hooks`. An independent closed form used to cross-check
/// [`degree_of_grassmannian`].
pub fn degree_by_hook_lengths(k: u32, n: u32) -> BigInt {
    assert!(k <= n);
    let width = n - k;
    let mut num = BigInt::one();
    for i in 1..=(k * width) {
        num *= BigInt::from(i);
    }
    let mut den = BigInt::one();
    for i in 1..=k {
        for j in 1..=width {
            let hook = (k - i) + (width - j) + 1;
            den *= BigInt::from(hook);
        }
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "hook product must divide the factorial");
    q
}

/// Littlewood–Richardson coefficient `c^ν_{λμ}` by direct tableau counting:
/// semistandard skew tableaux of shape `ν/λ` and content `μ` whose reverse
/// reading word is a lattice word. Exponential in the number of boxes; meant
/// as an oracle for small shapes.
pub fn lr_coefficient(lambda: &[u32], mu: &[u32], nu: &[u32]) -> u64 {
    let lambda = match normalize_partition(lambda) {
        Ok(p) => p,
        Err(_) => return 0,
    };
    let mu = match normalize_partition(mu) {
        Ok(p) => p,
        Err(_) => return 0,
    };
    let nu = match normalize_partition(nu) {
        Ok(p) => p,
        Err(_) => return 0,
    };
    let size_skew: i64 =
        nu.iter().map(|&x| x as i64).sum::<i64>() - lambda.iter().map(|&x| x as i64).sum::<i64>();
    if size_skew != mu.iter().map(|&x| x as i64).sum::<i64>() {
        return 0;
    }
    // lambda must be contained in nu
    for (i, &l) in lambda.iter().enumerate() {
        if nu.get(i).copied().unwrap_or(0) < l {
            return 0;
        }
    }
    // Cells in reading order: each row right to left, rows top to bottom.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for (r, &nr) in nu.iter().enumerate() {
        let lo = lambda.get(r).copied().unwrap_or(0) as usize;
        for c in (lo..nr as usize).rev() {
            cells.push((r, c));
        }
    }
    let mut grid: Vec<Vec<usize>> = nu.iter().map(|&w| vec![0; w as usize]).collect();
    let mut counts = vec![0u32; mu.len()];
    fn rec(
        cells: &[(usize, usize)],
        idx: usize,
        grid: &mut Vec<Vec<usize>>,
        counts: &mut Vec<u32>,
        mu: &[u32],
        lambda: &[u32],
        total: &mut u64,
    ) {
        if idx == cells.len() {
            *total += 1;
            return;
        }
        let (r, c) = cells[idx];
        for v in 1..=mu.len() {
            if counts[v - 1] >= mu[v - 1] {
                continue;
            }
            // lattice word: after placing v, #v must not exceed #(v-1)
            if v >= 2 && counts[v - 1] + 1 > counts[v - 2] {
                continue;
            }
            // weakly increasing along the row: cell to the right was filled
            // earlier in reading order
            if c + 1 < grid[r].len() {
                let right = grid[r][c + 1];
                if right != 0 && v > right {
                    continue;
                }
            }
            // strictly increasing down the column: compare with the cell
            // above if it belongs to the skew shape
            if r > 0 {
                let above_in_skew = c >= lambda.get(r - 1).copied().unwrap_or(0) as usize
                    && c < grid[r - 1].len();
                if above_in_skew {
                    let above = grid[r - 1][c];
                    if above != 0 && v <= above {
                        continue;
                    }
                    // the cell above is filled before this one in reading order
                }
            }
            grid[r][c] = v;
            counts[v - 1] += 1;
            rec(cells, idx + 1, grid, counts, mu, lambda, total);
            counts[v - 1] -= 1;
            grid[r][c] = 0;
        }
    }
    let mut total = 0;
    rec(&cells, 0, &mut grid, &mut counts, &mu, &lambda, &mut total);
    total
}

// ---------------------------------------------------------------------------
// Normal-bundle classes for a sub-Grassmannian center

/// The center of the blowup determined by `(k, n, a, b)`: the sub-
/// Grassmannian `G(k-a, k+b-a)` cut out by the partition
/// `((n-k)^a, (n-k-b)^{k-a})`.
pub fn center_of(k: u32, n: u32, a: u32, b: u32) -> (u32, u32) {
    assert!(a <= k && b <= n - k, "invalid embedding data (a, b)");
    (k - a, k + b - a)
}

/// Graded pieces `c_0, c_1, ...` of the total Chern class of the normal
/// bundle of the center inside `G(k, n)`, expressed in the center's own
/// Schubert basis: `c(N) = (Σ_i σ_i)^a · (Σ_j σ_{1^j})^{n-k-b}`, truncated
/// by the center's box.
pub fn chern_normal_bundle(k: u32, n: u32, a: u32, b: u32) -> Result<Vec<SchubertExpr>, SchubertError> {
    if a > k || b > n - k {
        return Err(SchubertError::BadGrassmannian { k, n });
    }
    let (kp, np) = center_of(k, n, a, b);
    if kp > np {
        return Err(SchubertError::BadGrassmannian { k: kp, n: np });
    }
    let width = np - kp;
    let mut total = SchubertExpr::one(kp, np);
    let mut row_sum = SchubertExpr::zero(kp, np);
    for m in 0..=width {
        row_sum = row_sum.add(&SchubertExpr::class(kp, np, &[m]).unwrap());
    }
    let mut col_sum = SchubertExpr::zero(kp, np);
    for m in 0..=kp {
        col_sum = col_sum.add(&SchubertExpr::class(kp, np, &vec![1; m as usize]).unwrap());
    }
    for _ in 0..a {
        total = total.mul(&row_sum);
    }
    for _ in 0..(n - k - b) {
        total = total.mul(&col_sum);
    }
    let dim = kp * width;
    Ok((0..=dim).map(|d| total.graded_piece(d)).collect())
}

/// Segre classes of the same normal bundle, graded `s_0, s_1, ...` up to the
/// center's dimension.
///
/// Rather than running the defining recursion `s_m = -Σ c_i s_{m-i}` (kept
/// as a cross-check in the tests), this uses the Whitney-sum inverse: on any
/// Grassmannian the total classes `Σ_i σ_i` and `Σ_j (-1)^j σ_{1^j}` are
/// mutually inverse (they are `c(Q)` and `c(S)` of the tautological
/// sequence), so
///
/// `s(N) = (Σ_j (-1)^j σ_{1^j})^a · (Σ_i (-1)^i σ_i)^{n-k-b}`,
///
/// which needs only Pieri multiplications.
pub fn segre_normal_bundle(k: u32, n: u32, a: u32, b: u32) -> Result<Vec<SchubertExpr>, SchubertError> {
    if a > k || b > n - k {
        return Err(SchubertError::BadGrassmannian { k, n });
    }
    let (kp, np) = center_of(k, n, a, b);
    if kp > np {
        return Err(SchubertError::BadGrassmannian { k: kp, n: np });
    }
    let width = np - kp;
    let mut total = SchubertExpr::one(kp, np);
    for _ in 0..a {
        let mut next = SchubertExpr::zero(kp, np);
        for m in 0..=kp {
            let sgn = if m % 2 == 0 { Rat::one() } else { -Rat::one() };
            next = next.add(&total.mul_sigma_column(m).scale(&sgn));
        }
        total = next;
    }
    for _ in 0..(n - k - b) {
        let mut next = SchubertExpr::zero(kp, np);
        for m in 0..=width {
            let sgn = if m % 2 == 0 { Rat::one() } else { -Rat::one() };
            next = next.add(&total.mul_sigma_row(m).scale(&sgn));
        }
        total = next;
    }
    let dim = kp * width;
    Ok((0..=dim).map(|d| total.graded_piece(d)).collect())
}

// ---------------------------------------------------------------------------
// Wire form

#[derive(Serialize, Deserialize)]
struct SchubertTermRepr {
    lambda: Vec<u32>,
    #[serde(flatten)]
    coeff: RatRepr,
}

#[derive(Serialize, Deserialize)]
struct SchubertExprRepr {
    k: u32,
    n: u32,
    terms: Vec<SchubertTermRepr>,
}

impl Serialize for SchubertExpr {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SchubertExprRepr {
            k: self.k,
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| SchubertTermRepr {
                    lambda: l.clone(),
                    coeff: RatRepr::from(c),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SchubertExpr {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SchubertExprRepr::deserialize(deserializer)?;
        let mut out = SchubertExpr::zero(repr.k, repr.n);
        for t in repr.terms {
            let lambda = normalize_partition(&t.lambda).map_err(D::Error::custom)?;
            if !fits_in_box(&lambda, repr.k, repr.n - repr.k) {
                return Err(D::Error::custom(format!(
                    "partition {:?} outside the {} x {} box",
                    lambda,
                    repr.k,
                    repr.n - repr.k
                )));
            }
            let c = Rat::try_from(&t.coeff).map_err(D::Error::custom)?;
            out.add_term(lambda, c);
        }
        Ok(out)
    }
}

impl fmt::Display for SchubertExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (l, c) in &self.terms {
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
            let name = if l.is_empty() {
                "1".to_string()
            } else {
                format!("s{l:?}")
            };
            if mag.is_one() && !l.is_empty() {
                write!(f, "{name}")?;
            } else if l.is_empty() {
                write!(f, "{}", crate::rational::format_rat(&mag))?;
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
    fn box_enumeration_counts_binomials() {
        let p24 = partitions_in_box(2, 4);
        let expect: Vec<Partition> = vec![
            vec![],
            vec![1],
            vec![1, 1],
            vec![2],
            vec![2, 1],
            vec![2, 2],
        ];
        assert_eq!(p24, expect);
        assert_eq!(partitions_in_box(2, 5).len(), 10);
        assert_eq!(partitions_in_box(3, 6).len(), 20);
        assert_eq!(partitions_in_box(0, 3), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn duals_reverse_and_complement() {
        assert_eq!(dual_partition(&[2, 1], 2, 4).unwrap(), vec![1]);
        assert_eq!(dual_partition(&[], 2, 4).unwrap(), vec![2, 2]);
        assert_eq!(dual_partition(&[3, 1], 2, 5).unwrap(), vec![2]);
    }

    #[test]
    fn pieri_square_of_sigma_one() {
        // σ_1 · σ_1 = σ_2 + σ_{1,1} on G(2,4)
        let s1 = SchubertExpr::class(2, 4, &[1]).unwrap();
        let sq = s1.mul(&s1);
        assert_eq!(sq.coeff(&[2]), rat_int(1));
        assert_eq!(sq.coeff(&[1, 1]), rat_int(1));
        assert_eq!(sq.terms().count(), 2);
    }

    #[test]
    fn column_pieri_adds_vertical_strips() {
        let got = pieri_column(&[1], 2, 3, 6);
        let expect: Vec<Partition> = vec![vec![2, 1], vec![1, 1, 1]];
        assert_eq!(
            got.iter().cloned().collect::<std::collections::BTreeSet<_>>(),
            expect.into_iter().collect()
        );
    }

    #[test]
    fn giambelli_products_match_tableau_counts() {
        // every structure constant on a few Grassmannians against the
        // Littlewood-Richardson tableau counter
        for (k, n) in [(2u32, 4u32), (2, 5), (3, 6)] {
            let parts = partitions_in_box(k, n);
            for l in &parts {
                let sl = SchubertExpr::class(k, n, l).unwrap();
                for m in &parts {
                    let sm = SchubertExpr::class(k, n, m).unwrap();
                    let prod = sl.mul(&sm);
                    for nu in &parts {
                        let got = prod.coeff(nu);
                        let want = rat_int(lr_coefficient(l, m, nu) as i64);
                        assert_eq!(got, want, "c^{nu:?}_({l:?}, {m:?}) on G({k},{n})");
                    }
                }
            }
        }
    }

    #[test]
    fn product_is_commutative_and_associative() {
        let (k, n) = (3, 6);
        let a = SchubertExpr::class(k, n, &[2, 1]).unwrap();
        let b = SchubertExpr::class(k, n, &[1, 1]).unwrap();
        let c = SchubertExpr::class(k, n, &[3]).unwrap();
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn poincare_pairing_is_a_permutation_matrix() {
        for (k, n) in [(2u32, 5u32), (3, 6)] {
            let parts = partitions_in_box(k, n);
            for l in &parts {
                let sl = SchubertExpr::class(k, n, l).unwrap();
                for m in &parts {
                    let sm = SchubertExpr::class(k, n, m).unwrap();
                    let v = sl.pair(&sm);
                    let expect = if *m == dual_partition(l, k, n).unwrap() {
                        rat_int(1)
                    } else {
                        rat_int(0)
                    };
                    assert_eq!(v, expect, "pairing σ{l:?}·σ{m:?} on G({k},{n})");
                }
            }
        }
    }

    #[test]
    fn degrees_match_hook_length_formula() {
        let known = [((2u32, 4u32), 2i64), ((2, 5), 5), ((2, 6), 14), ((3, 6), 42)];
        for ((k, n), d) in known {
            assert_eq!(degree_of_grassmannian(k, n), BigInt::from(d));
        }
        for n in 2..=8u32 {
            for k in 1..n {
                if k * (n - k) <= 12 {
                    assert_eq!(
                        degree_of_grassmannian(k, n),
                        degree_by_hook_lengths(k, n),
                        "degree of G({k},{n})"
                    );
                }
            }
        }
    }

    #[test]
    fn normal_bundle_chern_for_hyperplane_center() {
        // (k,n,a,b) = (2,4,0,1): center G(2,3), c(N) = 1 + σ_1 + σ_{1,1}
        let c = chern_normal_bundle(2, 4, 0, 1).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c[0], SchubertExpr::one(2, 3));
        assert_eq!(c[1], SchubertExpr::class(2, 3, &[1]).unwrap());
        assert_eq!(c[2], SchubertExpr::class(2, 3, &[1, 1]).unwrap());
        // Segre: s_1 = -σ_1, s_2 = σ_1^2 - σ_{1,1} = 0 in the 2x1 box
        let s = segre_normal_bundle(2, 4, 0, 1).unwrap();
        assert_eq!(s[1], SchubertExpr::class(2, 3, &[1]).unwrap().scale(&rat_int(-1)));
        assert!(s[2].is_zero());
    }

    #[test]
    fn segre_matches_defining_recursion() {
        // s_0 = 1, s_m = -(c_1 s_{m-1} + ... + c_m s_0) computed with the
        // full product, against the Whitney-inverse shortcut.
        for (k, n, a, b) in [(2u32, 4u32, 0u32, 1u32), (2, 5, 1, 2), (3, 6, 0, 2), (2, 6, 1, 4)] {
            let c = chern_normal_bundle(k, n, a, b).unwrap();
            let (kp, np) = center_of(k, n, a, b);
            let dim = (kp * (np - kp)) as usize;
            let mut s: Vec<SchubertExpr> = vec![SchubertExpr::one(kp, np)];
            for m in 1..=dim {
                let mut acc = SchubertExpr::zero(kp, np);
                for i in 1..=m.min(c.len() - 1) {
                    acc = acc.add(&c[i].mul(&s[m - i]));
                }
                s.push(acc.scale(&rat_int(-1)));
            }
            let fast = segre_normal_bundle(k, n, a, b).unwrap();
            assert_eq!(fast.len(), s.len(), "length at ({k},{n},{a},{b})");
            for (m, (x, y)) in fast.iter().zip(&s).enumerate() {
                assert_eq!(x, y, "s_{m} at ({k},{n},{a},{b})");
            }
        }
    }

    #[test]
    fn expr_wire_round_trip() {
        let a = SchubertExpr::class(2, 5, &[2, 1]).unwrap();
        let b = SchubertExpr::class(2, 5, &[1]).unwrap();
        let e = a.add(&b.scale(&rat_int(-3)));
        let js = serde_json::to_string(&e).unwrap();
        let back: SchubertExpr = serde_json::from_str(&js).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn lr_oracle_known_values() {
        // c^{(2,1)}_{(1),(1,1)} = 1, c^{(2,1)}_{(1),(2)} = 1 (no box)
        assert_eq!(lr_coefficient(&[1], &[1, 1], &[2, 1]), 1);
        assert_eq!(lr_coefficient(&[1], &[2], &[2, 1]), 1);
        // c^{(2,2)}_{(1),(1)} = 0 (sizes differ)
        assert_eq!(lr_coefficient(&[1], &[1], &[2, 2]), 0);
        // c^{(3,2,1)}_{(2,1),(2,1)} = 2: the classic multiplicity-two case
        assert_eq!(lr_coefficient(&[2, 1], &[2, 1], &[3, 2, 1]), 2);
    }
}
