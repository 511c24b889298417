//! Exact-arithmetic algebra for blowups of Grassmannians along smaller
//! Grassmannians.
//!
//! The crate is organized as a tower. At the bottom sit sparse Laurent
//! polynomials over arbitrary-precision rationals ([`poly`]), reduced
//! rational functions with a multivariate GCD ([`ratfn`]), and Gröbner bases
//! over rational-function coefficient fields ([`ideal`]). On top of those:
//!
//! * [`schubert`] — the classical cohomology ring of a Grassmannian
//!   `G(k, n)`: Pieri and Giambelli products, integration, degrees.
//! * [`blowup`] — numerical classification of blowups of `G(k, n)` along
//!   linearly embedded sub-Grassmannians: Fano tests, indices, extremal
//!   rays, fibration invariants.
//! * [`cohomology`] — the cohomology ring of the blowup of `G(k, n)` along
//!   `G(k, n-1)` in its two natural bases, with products, duals, and the
//!   intersection pairing.
//! * [`weyl`] — symmetric-group combinatorics behind curve neighborhoods:
//!   Bruhat order, Hecke products, minimal-length coset representatives.
//! * [`gw`] — two-point genus-zero Gromov–Witten invariants of the blowup
//!   in the exceptional-curve degrees.
//! * [`quantum`] — the small quantum cohomology ring for `k = 2`: the
//!   presentation with two deformation parameters, quantum products through
//!   a ring isomorphism, and the checks tying products back to invariants.
//! * [`mirror`] — the Laurent-polynomial superpotential whose Jacobi ring
//!   matches the quantum presentation, with the elimination chain and exact
//!   ideal-correspondence certificates.

pub mod blowup;
pub mod cohomology;
pub mod gw;
pub mod ideal;
pub mod mirror;
pub mod poly;
pub mod quantum;
pub mod rational;
pub mod ratfn;
pub mod schubert;
mod unipoly;
pub mod weyl;

pub use ideal::{CoefficientField, GroebnerBasis, IdealBasis, Rank};
pub use poly::{LaurentPoly, MonomialOrder};
pub use rational::Rat;
pub use ratfn::RationalFn;
