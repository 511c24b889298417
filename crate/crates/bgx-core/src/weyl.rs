//! Symmetric-group combinatorics behind the curve-neighborhood vanishing
//! argument: permutation lengths, Bruhat order, Hecke products, the curve
//! classes `z_d`, minimal coset representatives modulo the parabolic
//! `W_P = <s_i : i != k-1, k>`, and the exhaustive length-bound check that
//! forces two-point invariants to vanish beyond low degrees.
//!
//! Permutations are stored in one-line notation with 1-based entries. The
//! degree element for `d = (d1, d2)` is built two independent ways — as a
//! Hecke product of copies of `t_{1,n}` and `t_{1,k}` (or `t_{k,n}`), and as
//! the closed group product
//!
//! `t_{1,n} t_{2,n-1} … t_{d2,n-d2+1} · t_{d2+1,m} … t_{d1,m+d2-d1+1}`
//! (for `d1 >= d2`, with `m = min{n-d2, k}` and `t_{i,j} = id` when
//! `i >= j`), and symmetrically for `d1 < d2` — and the two routes are
//! required to agree.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, thiserror::Error, PartialEq)]
pub enum WeylError {
    #[error("one-line notation must list 1..n exactly once, got {0:?}")]
    NotAPermutation(Vec<u32>),
    #[error("permutations act on different sets ({0} vs {1} letters)")]
    SizeMismatch(usize, usize),
    #[error("transposition t_({i},{j}) needs 1 <= i < j <= n = {n}")]
    BadTransposition { i: u32, j: u32, n: u32 },
    #[error("parabolic data needs 2 <= k <= n-1, got k={k}, n={n}")]
    BadParabolic { k: u32, n: u32 },
    #[error("the degree element z_d needs (d1, d2) != (0, 0)")]
    ZeroDegree,
    #[error("the two constructions of z_d disagree for d=({d1},{d2}), k={k}, n={n}: {hecke} vs {closed}")]
    RouteMismatch {
        d1: u32,
        d2: u32,
        k: u32,
        n: u32,
        hecke: String,
        closed: String,
    },
    #[error("{0} is not a minimal coset representative")]
    NotMinimalRep(String),
    #[error("the length bound applies only when d1 >= 2 or d2 >= 2, got ({0},{1})")]
    BoundHypotheses(u32, u32),
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    one_line: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: u32) -> Self {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    pub fn from_one_line(entries: Vec<u32>) -> Result<Self, WeylError> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(WeylError::NotAPermutation(entries));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { one_line: entries })
    }

    pub fn n(&self) -> u32 {
        self.one_line.len() as u32
    }

    pub fn one_line(&self) -> &[u32] {
        &self.one_line
    }

    /// Image of the (1-based) letter `i`.
    pub fn apply(&self, i: u32) -> u32 {
        self.one_line[(i - 1) as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(p, &v)| v == p as u32 + 1)
    }

    /// The simple reflection `s_i` swapping `i` and `i+1`.
    pub fn simple(n: u32, i: u32) -> Result<Self, WeylError> {
        Self::transposition(n, i, i + 1)
    }

    /// The transposition `t_{i,j}` with `i < j`.
    pub fn transposition(n: u32, i: u32, j: u32) -> Result<Self, WeylError> {
        if i == 0 || i >= j || j > n {
            return Err(WeylError::BadTransposition { i, j, n });
        }
        let mut w = Self::identity(n);
        w.one_line.swap((i - 1) as usize, (j - 1) as usize);
        Ok(w)
    }

    /// Group product `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Result<Self, WeylError> {
        if self.n() != other.n() {
            return Err(WeylError::SizeMismatch(
                self.one_line.len(),
                other.one_line.len(),
            ));
        }
        Ok(Permutation {
            one_line: other.one_line.iter().map(|&v| self.apply(v)).collect(),
        })
    }

    /// Right multiplication by `s_i` (swaps positions `i`, `i+1`).
    fn right_simple(&self, i: u32) -> Self {
        let mut w = self.clone();
        w.one_line.swap((i - 1) as usize, i as usize);
        w
    }

    /// Number of inversions.
    pub fn length(&self) -> u64 {
        let v = &self.one_line;
        let mut count = 0;
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                if v[a] > v[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// A reduced word `[i_1, …, i_l]` with `self = s_{i_1} ⋯ s_{i_l}`,
    /// found by unwinding the first descent repeatedly.
    pub fn reduced_word(&self) -> Vec<u32> {
        let mut v = self.clone();
        let mut word = Vec::new();
        loop {
            let Some(i) = (1..v.n()).find(|&i| v.apply(i) > v.apply(i + 1)) else {
                word.reverse();
                return word;
            };
            v = v.right_simple(i);
            word.push(i);
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, v) in self.one_line.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Bruhat order via the sorted-prefix criterion: `u <= w` iff for every `j`
/// the increasing rearrangement of `u(1..=j)` is entrywise at most that of
/// `w(1..=j)`.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> Result<bool, WeylError> {
    if u.n() != w.n() {
        return Err(WeylError::SizeMismatch(
            u.one_line.len(),
            w.one_line.len(),
        ));
    }
    let n = u.n() as usize;
    for j in 1..n {
        let mut a: Vec<u32> = u.one_line[..j].to_vec();
        let mut b: Vec<u32> = w.one_line[..j].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        if a.iter().zip(&b).any(|(x, y)| x > y) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Hecke (0-Hecke monoid) product `w · v`, evaluated letter by letter along
/// a reduced word of `v`: each `s_i` is applied only when it increases the
/// length.
pub fn hecke_mul(w: &Permutation, v: &Permutation) -> Result<Permutation, WeylError> {
    if w.n() != v.n() {
        return Err(WeylError::SizeMismatch(
            w.one_line.len(),
            v.one_line.len(),
        ));
    }
    Ok(hecke_mul_word(w, &v.reduced_word()))
}

/// Hecke product of `w` with the word `s_{i_1} ⋯ s_{i_l}` (any word, not
/// necessarily reduced).
pub fn hecke_mul_word(w: &Permutation, word: &[u32]) -> Permutation {
    let mut acc = w.clone();
    for &i in word {
        if acc.apply(i) < acc.apply(i + 1) {
            acc = acc.right_simple(i);
        }
    }
    acc
}

/// The parabolic subgroup data: `W_P` is generated by all simple
/// reflections except `s_{k-1}` and `s_k`, so its orbits on positions are
/// `{1..k-1}`, `{k}`, `{k+1..n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicSpec {
    pub k: u32,
    pub n: u32,
}

impl ParabolicSpec {
    pub fn new(k: u32, n: u32) -> Result<Self, WeylError> {
        if k < 2 || k + 1 > n {
            return Err(WeylError::BadParabolic { k, n });
        }
        Ok(ParabolicSpec { k, n })
    }
}

/// Minimal-length representative of the coset `w W_P`: sort the one-line
/// entries within each block of positions moved by `W_P`.
pub fn min_coset_rep(w: &Permutation, p: ParabolicSpec) -> Result<Permutation, WeylError> {
    if w.n() != p.n {
        return Err(WeylError::SizeMismatch(w.one_line.len(), p.n as usize));
    }
    let mut rep = w.clone();
    let k = p.k as usize;
    rep.one_line[..k - 1].sort_unstable();
    rep.one_line[k..].sort_unstable();
    Ok(rep)
}

/// Membership in `W^P`, the set of minimal coset representatives.
pub fn is_min_coset_rep(w: &Permutation, p: ParabolicSpec) -> Result<bool, WeylError> {
    Ok(min_coset_rep(w, p)? == *w)
}

/// The permutation `[(n-k+1) … n 1 … (n-k)]` indexing the blowup inside the
/// two-step flag variety; its length is `k(n-k)`.
pub fn block_rotation(p: ParabolicSpec) -> Permutation {
    let mut v: Vec<u32> = (p.n - p.k + 1..=p.n).collect();
    v.extend(1..=p.n - p.k);
    Permutation { one_line: v }
}

/// The degree element `z_d` for the curve class `d = d1·e + d2·(l-e)`,
/// computed along both published constructions; disagreement is reported as
/// an error since it would falsify the closed product formula.
pub fn z_d(d1: u32, d2: u32, p: ParabolicSpec) -> Result<Permutation, WeylError> {
    if d1 == 0 && d2 == 0 {
        return Err(WeylError::ZeroDegree);
    }
    let hecke = z_d_hecke(d1, d2, p)?;
    let closed = z_d_closed(d1, d2, p)?;
    if hecke != closed {
        return Err(WeylError::RouteMismatch {
            d1,
            d2,
            k: p.k,
            n: p.n,
            hecke: hecke.to_string(),
            closed: closed.to_string(),
        });
    }
    Ok(hecke)
}

fn z_d_hecke(d1: u32, d2: u32, p: ParabolicSpec) -> Result<Permutation, WeylError> {
    let (k, n) = (p.k, p.n);
    let t1n = Permutation::transposition(n, 1, n)?;
    let mut acc = Permutation::identity(n);
    if d1 >= d2 {
        for _ in 0..d2 {
            acc = hecke_mul(&acc, &t1n)?;
        }
        let t1k = Permutation::transposition(n, 1, k)?;
        for _ in 0..d1 - d2 {
            acc = hecke_mul(&acc, &t1k)?;
        }
    } else {
        for _ in 0..d1 {
            acc = hecke_mul(&acc, &t1n)?;
        }
        let tkn = Permutation::transposition(n, k, n)?;
        for _ in 0..d2 - d1 {
            acc = hecke_mul(&acc, &tkn)?;
        }
    }
    Ok(acc)
}

fn z_d_closed(d1: u32, d2: u32, p: ParabolicSpec) -> Result<Permutation, WeylError> {
    let (k, n) = (p.k, p.n);
    let mut acc = Permutation::identity(n);
    // group product with t_{i,j} read as identity when i >= j
    let push = |acc: &Permutation, i: i64, j: i64| -> Result<Permutation, WeylError> {
        if 0 < i && i < j && j <= n as i64 {
            acc.compose(&Permutation::transposition(n, i as u32, j as u32)?)
        } else {
            Ok(acc.clone())
        }
    };
    let (d1, d2, k, n64) = (d1 as i64, d2 as i64, k as i64, n as i64);
    if d1 >= d2 {
        for i in 1..=d2 {
            acc = push(&acc, i, n64 + 1 - i)?;
        }
        let m = (n64 - d2).min(k);
        for i in d2 + 1..=d1 {
            acc = push(&acc, i, m + d2 + 1 - i)?;
        }
    } else {
        for i in 1..=d1 {
            acc = push(&acc, i, n64 + 1 - i)?;
        }
        let r = (d1 + 1).max(k);
        for step in 0..d2 - d1 {
            acc = push(&acc, r + step, n64 - d1 - step)?;
        }
    }
    Ok(acc)
}

/// Dimension of the degree-`d` curve neighborhood of the Schubert variety
/// indexed by `u ∈ W^P` inside the ambient two-step flag variety:
/// `len(u · z_d^P)` in the Hecke product, with the degree-zero convention
/// `len(u)`.
pub fn curve_nbhd_dim(
    u: &Permutation,
    d1: u32,
    d2: u32,
    p: ParabolicSpec,
) -> Result<u64, WeylError> {
    if !is_min_coset_rep(u, p)? {
        return Err(WeylError::NotMinimalRep(u.to_string()));
    }
    if d1 == 0 && d2 == 0 {
        return Ok(u.length());
    }
    let zdp = min_coset_rep(&z_d(d1, d2, p)?, p)?;
    Ok(hecke_mul(u, &zdp)?.length())
}

/// Outcome of the degree-versus-length comparison for one curve class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LenBoundReport {
    pub lhs: u64,
    pub bound: u64,
    pub ok: bool,
    pub exceptional_case: bool,
}

/// Check `len(z_d^P) - (d1(k-1) + d2(n-k+1)) < 0` (for the two exceptional
/// families) or `< -1` (otherwise), for degrees with `d1 >= 2` or
/// `d2 >= 2`. It is this gap that kills all two-point invariants in those
/// degrees.
pub fn verify_len_bound(
    d1: u32,
    d2: u32,
    p: ParabolicSpec,
) -> Result<LenBoundReport, WeylError> {
    if d1 < 2 && d2 < 2 {
        return Err(WeylError::BoundHypotheses(d1, d2));
    }
    let zdp = min_coset_rep(&z_d(d1, d2, p)?, p)?;
    let lhs = zdp.length();
    let bound = (d1 as u64) * ((p.k - 1) as u64) + (d2 as u64) * ((p.n - p.k + 1) as u64);
    let exceptional_case = (d1, d2) == (2, 1) || ((d1, d2) == (2, 0) && p.k == 2);
    let ok = if exceptional_case {
        lhs < bound
    } else {
        lhs + 1 < bound
    };
    Ok(LenBoundReport {
        lhs,
        bound,
        ok,
        exceptional_case,
    })
}
