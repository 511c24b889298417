//! Gröbner bases for ideals in `K[order vars]` where `K` is either the
//! rationals or a field of rational functions in parameter variables.
//!
//! Polynomials enter as [`LaurentPoly`] values mixing order and parameter
//! variables; internally each is split into a [`QPoly`], a sparse map from
//! order-variable exponent vectors to [`RationalFn`] coefficients over the
//! parameters. Buchberger's algorithm with the coprime-pair criterion and
//! degree-ordered pair selection produces a fully reduced, monic basis, from
//! which normal forms, quotient dimensions, and ideal-equality tests follow.
//!
//! Exponents of order variables must be nonnegative; parameter exponents may
//! be negative (they fold into the coefficient field).

use crate::poly::{LaurentPoly, MonomialOrder, PolyError};
use crate::ratfn::{RatFnError, RationalFn};
use crate::rational::Rat;
use crate::unipoly;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, thiserror::Error)]
pub enum IdealError {
    #[error("variable `{0}` is neither an order variable nor a parameter")]
    UnknownVariable(String),
    #[error("order variable `{var}` occurs with negative exponent {exp}")]
    NegativeOrderExponent { var: String, exp: i64 },
    #[error("`{0}` is listed both as an order variable and as a parameter")]
    OverlappingVariable(String),
    #[error("normal form has a non-polynomial coefficient ({0}); it cannot be returned as a Laurent polynomial")]
    NonPolynomialCoefficient(String),
    #[error("the product-order route applies to lex over a rational-function field only")]
    ProductOrderNeedsLex,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    RatFn(#[from] RatFnError),
}

/// Whether the coefficient field is plain `Q` or rational functions in the
/// given parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoefficientField {
    Rational,
    RationalFunctions { params: Vec<String> },
}

impl CoefficientField {
    pub fn params(&self) -> &[String] {
        match self {
            CoefficientField::Rational => &[],
            CoefficientField::RationalFunctions { params } => params,
        }
    }
}

/// Dimension of the quotient ring as a vector space over the coefficient
/// field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rank {
    Finite(u64),
    Infinite,
}

/// A polynomial in the order variables with coefficients in the parameter
/// field. The exponent vectors index order variables only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    order_vars: Vec<String>,
    param_vars: Vec<String>,
    terms: BTreeMap<Vec<i64>, RationalFn>,
}

impl QPoly {
    pub fn zero(order_vars: &[String], param_vars: &[String]) -> Self {
        QPoly {
            order_vars: order_vars.to_vec(),
            param_vars: param_vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    /// Split a mixed Laurent polynomial into order-variable monomials with
    /// parameter-field coefficients.
    pub fn from_laurent(
        p: &LaurentPoly,
        order_vars: &[String],
        param_vars: &[String],
    ) -> Result<Self, IdealError> {
        for v in order_vars {
            if param_vars.contains(v) {
                return Err(IdealError::OverlappingVariable(v.clone()));
            }
        }
        let mut role = Vec::with_capacity(p.vars().len());
        for v in p.vars() {
            if let Some(i) = order_vars.iter().position(|o| o == v) {
                role.push((true, i));
            } else if let Some(i) = param_vars.iter().position(|o| o == v) {
                role.push((false, i));
            } else {
                return Err(IdealError::UnknownVariable(v.clone()));
            }
        }
        let par_refs: Vec<&str> = param_vars.iter().map(|s| s.as_str()).collect();
        let mut out = QPoly::zero(order_vars, param_vars);
        for (exp, c) in p.terms() {
            let mut oexp = vec![0i64; order_vars.len()];
            let mut pexp = vec![0i64; param_vars.len()];
            for (j, &e) in exp.iter().enumerate() {
                let (is_order, i) = role[j];
                if is_order {
                    if e < 0 {
                        return Err(IdealError::NegativeOrderExponent {
                            var: p.vars()[j].clone(),
                            exp: e,
                        });
                    }
                    oexp[i] += e;
                } else {
                    pexp[i] += e;
                }
            }
            let coeff = RationalFn::from_poly(LaurentPoly::monomial(&par_refs, &pexp, c.clone()));
            out.add_term(oexp, coeff);
        }
        Ok(out)
    }

    /// Reassemble as a Laurent polynomial over order variables followed by
    /// parameters; fails if any coefficient has a denominator.
    pub fn to_laurent(&self) -> Result<LaurentPoly, IdealError> {
        let mut vars: Vec<&str> = self.order_vars.iter().map(|s| s.as_str()).collect();
        vars.extend(self.param_vars.iter().map(|s| s.as_str()));
        let mut out = LaurentPoly::zero(&vars);
        for (oexp, c) in &self.terms {
            if !c.is_polynomial() {
                return Err(IdealError::NonPolynomialCoefficient(c.to_string()));
            }
            for (pexp, r) in c.numer().terms() {
                let mut e = oexp.clone();
                e.extend_from_slice(pexp);
                out = out.add(&LaurentPoly::monomial(&vars, &e, r.clone()));
            }
        }
        Ok(out)
    }

    /// As `to_laurent`, but multiplies through by the least common multiple
    /// of coefficient denominators first, so it always succeeds. The result
    /// generates the same ideal.
    pub fn to_laurent_cleared(&self) -> LaurentPoly {
        let mut lcm = LaurentPoly::one(
            &self
                .param_vars
                .iter()
                .map(|s| s.as_str())
                .collect::<Vec<_>>(),
        );
        for c in self.terms.values() {
            let g = crate::ratfn::poly_gcd(&lcm, c.denom());
            let extra = crate::ratfn::poly_div_exact(c.denom(), &g).expect("gcd divides");
            lcm = lcm.mul(&extra);
        }
        let scale = RationalFn::from_poly(lcm);
        let mut scaled = self.clone();
        for c in scaled.terms.values_mut() {
            *c = c.mul(&scale);
        }
        scaled.to_laurent().expect("denominators cleared")
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &RationalFn)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exp: Vec<i64>, c: RationalFn) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    o.insert(sum);
                }
            }
        }
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> QPoly {
        QPoly {
            order_vars: self.order_vars.clone(),
            param_vars: self.param_vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        let mut out = QPoly::zero(&self.order_vars, &self.param_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    /// Multiply by `coeff * order_vars^exp`.
    pub fn mul_mono(&self, exp: &[i64], coeff: &RationalFn) -> QPoly {
        if coeff.is_zero() {
            return QPoly::zero(&self.order_vars, &self.param_vars);
        }
        QPoly {
            order_vars: self.order_vars.clone(),
            param_vars: self.param_vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    (
                        e.iter().zip(exp).map(|(a, b)| a + b).collect(),
                        c.mul(coeff),
                    )
                })
                .collect(),
        }
    }

    pub fn leading(&self, order: MonomialOrder) -> Option<(&Vec<i64>, &RationalFn)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp_exps(a, b))
    }

    fn make_monic(&self, order: MonomialOrder) -> QPoly {
        match self.leading(order) {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.inv().expect("leading coefficient is nonzero");
                let mut out = self.clone();
                for c in out.terms.values_mut() {
                    *c = c.mul(&inv);
                }
                out
            }
        }
    }
}

fn monomial_qpoly(order_vars: &[String], param_vars: &[String], exp: &[i64]) -> QPoly {
    let pars: Vec<&str> = param_vars.iter().map(|s| s.as_str()).collect();
    let mut p = QPoly::zero(order_vars, param_vars);
    p.terms.insert(exp.to_vec(), RationalFn::one(&pars));
    p
}

fn divides(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm_exp(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| (*x).max(*y)).collect()
}

/// Generators plus the data needed to interpret them: which variables are
/// ordered, which are parameters, and the monomial order.
#[derive(Debug, Clone)]
pub struct IdealBasis {
    pub generators: Vec<LaurentPoly>,
    pub order_vars: Vec<String>,
    pub field: CoefficientField,
    pub order: MonomialOrder,
}

impl IdealBasis {
    pub fn new(
        generators: Vec<LaurentPoly>,
        order_vars: &[&str],
        field: CoefficientField,
        order: MonomialOrder,
    ) -> Self {
        IdealBasis {
            generators,
            order_vars: order_vars.iter().map(|s| s.to_string()).collect(),
            field,
            order,
        }
    }

    /// Run Buchberger's algorithm to a fully reduced basis.
    pub fn groebner(&self) -> Result<GroebnerBasis, IdealError> {
        let params = self.field.params().to_vec();
        let gens: Vec<QPoly> = self
            .generators
            .iter()
            .map(|g| QPoly::from_laurent(g, &self.order_vars, &params))
            .collect::<Result<_, _>>()?;
        Ok(GroebnerBasis::compute(
            gens,
            self.order,
            &self.order_vars,
            &params,
        ))
    }

    /// Lex Gröbner basis over a rational-function field, computed without
    /// fraction arithmetic: run Buchberger over `Q` with the parameters
    /// adjoined as trailing lex variables. Lex on the combined list is a
    /// product order with the order variables dominant, so the result is a
    /// Gröbner basis of the extended ideal (clear a denominator from any
    /// element of the extension and compare leading blocks), with the same
    /// order-variable staircase. The converted basis is then made monic and
    /// reduced, so the output agrees with [`IdealBasis::groebner`] — it just
    /// avoids the coefficient blowup of fraction-field reduction.
    pub fn groebner_via_lex_product(&self) -> Result<GroebnerBasis, IdealError> {
        let params = self.field.params().to_vec();
        if self.order != MonomialOrder::Lex || params.is_empty() {
            return Err(IdealError::ProductOrderNeedsLex);
        }
        let combined: Vec<&str> = self
            .order_vars
            .iter()
            .chain(params.iter())
            .map(|s| s.as_str())
            .collect();
        let gens: Vec<LaurentPoly> = self
            .generators
            .iter()
            .map(|g| g.embed(&combined))
            .collect::<Result<_, _>>()?;
        let inner = IdealBasis::new(gens, &combined, CoefficientField::Rational, MonomialOrder::Lex);
        let gb4 = inner.groebner()?;
        let mut basis: Vec<QPoly> = Vec::new();
        for g in gb4.basis() {
            let p = g.to_laurent_cleared();
            let q = QPoly::from_laurent(&p, &self.order_vars, &params)?;
            if !q.is_zero() {
                basis.push(q.make_monic(MonomialOrder::Lex));
            }
        }
        Ok(GroebnerBasis::finish(
            basis,
            MonomialOrder::Lex,
            &self.order_vars,
            &params,
        ))
    }

    /// Lex Gröbner basis of a weighted-homogeneous ideal, without running
    /// Buchberger under lex. Two routes, both anchored to a cheap graded
    /// basis: first, shape-position reconstruction over the full parameter
    /// field ([`GroebnerBasis::convert_to_lex_shape`]), which certifies its
    /// result symbolically; if the shape assumption fails, scale the
    /// weight-one `dehom` parameter to 1 (the grading makes that a ring
    /// automorphism on the ideal's data), convert the scaled graded basis by
    /// the FGLM walk, and restore the parameter on each reduced element by
    /// weighted-degree bookkeeping — the scaling leaves order monomials
    /// untouched, so the rehomogenized set is still reduced.
    ///
    /// `var_weights` aligns with the order variables, `param_weights` with
    /// the field parameters; `dehom` indexes the parameter to scale away,
    /// which must have weight 1.
    pub fn groebner_lex_homogeneous(
        &self,
        var_weights: &[i64],
        param_weights: &[i64],
        dehom: usize,
    ) -> Result<GroebnerBasis, IdealError> {
        let params = self.field.params().to_vec();
        if self.order != MonomialOrder::Lex
            || params.is_empty()
            || dehom >= params.len()
            || param_weights.get(dehom) != Some(&1)
            || var_weights.len() != self.order_vars.len()
            || param_weights.len() != params.len()
        {
            return Err(IdealError::ProductOrderNeedsLex);
        }
        // generators must be genuinely homogeneous for the scaling argument
        let combined: Vec<&str> = self
            .order_vars
            .iter()
            .chain(params.iter())
            .map(|s| s.as_str())
            .collect();
        let combined_weights: Vec<i64> = var_weights
            .iter()
            .chain(param_weights.iter())
            .copied()
            .collect();
        let mut scaled_gens = Vec::new();
        for g in &self.generators {
            let emb = g.embed(&combined)?;
            if !emb.is_homogeneous(&combined_weights) {
                return Err(IdealError::ProductOrderNeedsLex);
            }
            scaled_gens.push(emb.eval_var(&params[dehom], &Rat::one())?.prune_vars());
        }
        // fast path: a graded basis over the full parameter field plus
        // shape-position reconstruction, certified symbolically; falls
        // through to the scaled conversion when the shape assumption fails
        let grev = IdealBasis::new(
            self.generators.clone(),
            &self
                .order_vars
                .iter()
                .map(|s| s.as_str())
                .collect::<Vec<_>>(),
            self.field.clone(),
            MonomialOrder::GrevLex,
        )
        .groebner()?;
        if let Some(gb) = grev.convert_to_lex_shape(var_weights, param_weights) {
            return Ok(gb);
        }
        let rest_params: Vec<String> = params
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != dehom)
            .map(|(_, p)| p.clone())
            .collect();
        // grevlex keeps the scaled computation cheap; the FGLM walk then
        // reaches lex by linear algebra, which respects zero-dimensionality
        let inner = IdealBasis::new(
            scaled_gens,
            &self
                .order_vars
                .iter()
                .map(|s| s.as_str())
                .collect::<Vec<_>>(),
            if rest_params.is_empty() {
                CoefficientField::Rational
            } else {
                CoefficientField::RationalFunctions {
                    params: rest_params.clone(),
                }
            },
            MonomialOrder::GrevLex,
        );
        let small_gb = inner
            .groebner()?
            .convert_order(MonomialOrder::Lex)
            .ok_or(IdealError::ProductOrderNeedsLex)?;
        // rehomogenize: give every term the dehom-parameter power that
        // levels its weighted degree with the element's maximum
        let mut basis: Vec<QPoly> = Vec::new();
        for g in small_gb.basis() {
            let p = g.to_laurent_cleared().embed(&combined)?;
            let degs: Vec<i64> = p
                .terms()
                .map(|(e, _)| {
                    e.iter()
                        .zip(&combined_weights)
                        .map(|(a, w)| a * w)
                        .sum::<i64>()
                })
                .collect();
            let d = *degs.iter().max().expect("nonzero basis element");
            let dehom_pos = self.order_vars.len() + dehom;
            let rehom = LaurentPoly::from_terms(
                &combined,
                p.terms().zip(&degs).map(|((e, c), &w)| {
                    let mut e = e.clone();
                    e[dehom_pos] += d - w;
                    (e, c.clone())
                }),
            );
            let q = QPoly::from_laurent(&rehom, &self.order_vars, &params)?;
            if !q.is_zero() {
                basis.push(q.make_monic(MonomialOrder::Lex));
            }
        }
        // the scaling leaves every order monomial unchanged, so the inner
        // reduced basis stays reduced — only the sort order needs restoring
        basis.sort_by(|a, b| {
            MonomialOrder::Lex.cmp_exps(
                a.leading(MonomialOrder::Lex).unwrap().0,
                b.leading(MonomialOrder::Lex).unwrap().0,
            )
        });
        Ok(GroebnerBasis {
            order: MonomialOrder::Lex,
            order_vars: self.order_vars.clone(),
            param_vars: params,
            basis,
        })
    }
}

/// A fully reduced, monic Gröbner basis, sorted by ascending leading
/// monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    order_vars: Vec<String>,
    param_vars: Vec<String>,
    basis: Vec<QPoly>,
}

impl GroebnerBasis {
    fn compute(
        gens: Vec<QPoly>,
        order: MonomialOrder,
        order_vars: &[String],
        param_vars: &[String],
    ) -> Self {
        let mut basis: Vec<QPoly> = Vec::new();
        for g in gens {
            if !g.is_zero() {
                basis.push(g.make_monic(order));
            }
        }
        // Pair queue keyed by (total degree of the lcm, indices): the normal
        // selection strategy keeps intermediate polynomials small.
        let mut pairs: BTreeSet<(i64, usize, usize)> = BTreeSet::new();
        let queue_pairs = |pairs: &mut BTreeSet<(i64, usize, usize)>,
                               basis: &[QPoly],
                               j: usize| {
            let lm_j = basis[j].leading(order).unwrap().0.clone();
            for (i, g) in basis.iter().enumerate().take(j) {
                let lm_i = g.leading(order).unwrap().0;
                let deg: i64 = lcm_exp(lm_i, &lm_j).iter().sum();
                pairs.insert((deg, i, j));
            }
        };
        for j in 0..basis.len() {
            queue_pairs(&mut pairs, &basis, j);
        }
        while let Some(&(deg, i, j)) = pairs.iter().next() {
            pairs.remove(&(deg, i, j));
            let lm_i = basis[i].leading(order).unwrap().0.clone();
            let lm_j = basis[j].leading(order).unwrap().0.clone();
            // Buchberger's coprime criterion: disjoint leading supports
            // reduce to zero automatically.
            if lm_i.iter().zip(&lm_j).all(|(a, b)| *a.min(b) == 0) {
                continue;
            }
            let lcm = lcm_exp(&lm_i, &lm_j);
            let shift_i: Vec<i64> = lcm.iter().zip(&lm_i).map(|(a, b)| a - b).collect();
            let shift_j: Vec<i64> = lcm.iter().zip(&lm_j).map(|(a, b)| a - b).collect();
            let one = RationalFn::one(
                &param_vars.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
            );
            let s = basis[i]
                .mul_mono(&shift_i, &one)
                .sub(&basis[j].mul_mono(&shift_j, &one));
            let r = reduce_full(&s, &basis, order);
            if !r.is_zero() {
                basis.push(r.make_monic(order));
                queue_pairs(&mut pairs, &basis, basis.len() - 1);
            }
        }
        Self::finish(basis, order, order_vars, param_vars)
    }

    /// Minimalize, tail-reduce, and sort a (not necessarily reduced)
    /// Gröbner basis of monic elements.
    fn finish(
        basis: Vec<QPoly>,
        order: MonomialOrder,
        order_vars: &[String],
        param_vars: &[String],
    ) -> Self {
        // Minimalize: drop elements whose leading monomial another leading
        // monomial divides.
        let mut keep: Vec<QPoly> = Vec::new();
        'outer: for (i, g) in basis.iter().enumerate() {
            let lm = g.leading(order).unwrap().0;
            for (j, h) in basis.iter().enumerate() {
                if i == j {
                    continue;
                }
                let lm_h = h.leading(order).unwrap().0;
                if divides(lm_h, lm) && (lm_h != lm || j < i) {
                    continue 'outer;
                }
            }
            keep.push(g.clone());
        }
        // Tail-reduce each element against the others.
        let reduced: Vec<QPoly> = (0..keep.len())
            .map(|i| {
                let others: Vec<QPoly> = keep
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, g)| g.clone())
                    .collect();
                reduce_full(&keep[i], &others, order).make_monic(order)
            })
            .collect();
        let mut basis = reduced;
        basis.sort_by(|a, b| {
            order.cmp_exps(a.leading(order).unwrap().0, b.leading(order).unwrap().0)
        });
        GroebnerBasis {
            order,
            order_vars: order_vars.to_vec(),
            param_vars: param_vars.to_vec(),
            basis,
        }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn order_vars(&self) -> &[String] {
        &self.order_vars
    }

    pub fn basis(&self) -> &[QPoly] {
        &self.basis
    }

    /// Basis elements as Laurent polynomials, denominators cleared.
    pub fn basis_polys(&self) -> Vec<LaurentPoly> {
        self.basis.iter().map(|g| g.to_laurent_cleared()).collect()
    }

    /// Convert a zero-dimensional basis to the reduced basis under another
    /// monomial order by linear algebra on normal forms (the FGLM walk):
    /// enumerate monomials in the target order, compute each normal-form
    /// coordinate vector from an already-visited neighbour via a
    /// multiplication map, and emit a basis element whenever the vector
    /// falls in the span of the accepted staircase.
    pub fn convert_order(&self, target: MonomialOrder) -> Option<GroebnerBasis> {
        let stairs = self.standard_monomials()?;
        let dim = stairs.len();
        let nvars = self.order_vars.len();
        let row_of: BTreeMap<&Vec<i64>, usize> =
            stairs.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let pars: Vec<&str> = self.param_vars.iter().map(|s| s.as_str()).collect();
        let rf_zero = RationalFn::zero(&pars);
        let to_vec = |p: &QPoly| -> Vec<RationalFn> {
            let mut v = vec![rf_zero.clone(); dim];
            for (e, c) in p.terms() {
                v[*row_of.get(e).expect("normal form on staircase")] = c.clone();
            }
            v
        };
        // multiplication maps on the quotient, one column per staircase row
        let mut mult: Vec<Vec<Option<Vec<RationalFn>>>> = vec![vec![None; dim]; nvars];
        for (i, cols) in mult.iter_mut().enumerate() {
            for (b, col) in stairs.iter().zip(cols.iter_mut()) {
                let mut e = b.clone();
                e[i] += 1;
                let mono = monomial_qpoly(&self.order_vars, &self.param_vars, &e);
                *col = Some(to_vec(&self.normal_form_q(&mono)));
            }
        }
        // accepted target staircase with echelonized span tracking
        let mut accepted_exps: Vec<Vec<i64>> = Vec::new();
        let mut accepted_vecs: Vec<Vec<RationalFn>> = Vec::new();
        // echelon rows paired with their expression in accepted vectors
        let mut echelon: Vec<(usize, Vec<RationalFn>, Vec<RationalFn>)> = Vec::new();
        let mut found_lms: Vec<Vec<i64>> = Vec::new();
        let mut out: Vec<QPoly> = Vec::new();
        let mut frontier: Vec<Vec<i64>> = vec![vec![0; nvars]];
        while let Some(pos) = frontier
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| target.cmp_exps(a, b))
            .map(|(i, _)| i)
        {
            let m = frontier.swap_remove(pos);
            if found_lms.iter().any(|lm| divides(lm, &m)) {
                continue;
            }
            let v = if m.iter().all(|&e| e == 0) {
                let mono = monomial_qpoly(&self.order_vars, &self.param_vars, &m);
                to_vec(&self.normal_form_q(&mono))
            } else {
                let i = m.iter().position(|&e| e > 0).expect("nonzero monomial");
                let mut prev = m.clone();
                prev[i] -= 1;
                let Some(j) = accepted_exps.iter().position(|e| e == &prev) else {
                    // the neighbour was dependent, so m lies under a found
                    // leading monomial and was filtered above
                    continue;
                };
                let col = &accepted_vecs[j];
                let mut v = vec![rf_zero.clone(); dim];
                for (r, c) in col.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mcol = mult[i][r].as_ref().expect("precomputed column");
                    for (vr, mc) in v.iter_mut().zip(mcol) {
                        if !mc.is_zero() {
                            *vr = vr.add(&mc.mul(c));
                        }
                    }
                }
                v
            };
            // reduce v against the echelon, tracking the combination
            let mut res = v.clone();
            let mut combo = vec![rf_zero.clone(); accepted_exps.len()];
            for (pivot, row, expr) in &echelon {
                if res[*pivot].is_zero() {
                    continue;
                }
                let f = res[*pivot].clone();
                for (rr, br) in res.iter_mut().zip(row) {
                    if !br.is_zero() {
                        *rr = rr.sub(&br.mul(&f));
                    }
                }
                for (cr, er) in combo.iter_mut().zip(expr) {
                    if !er.is_zero() {
                        *cr = cr.add(&er.mul(&f));
                    }
                }
            }
            match res.iter().position(|c| !c.is_zero()) {
                None => {
                    // dependent: m - Σ combo_j · accepted_j is a reduced
                    // basis element
                    let mut g = monomial_qpoly(&self.order_vars, &self.param_vars, &m);
                    for (j, c) in combo.iter().enumerate() {
                        if !c.is_zero() {
                            g = g.sub(
                                &monomial_qpoly(
                                    &self.order_vars,
                                    &self.param_vars,
                                    &accepted_exps[j],
                                )
                                .mul_mono(&vec![0; nvars], c),
                            );
                        }
                    }
                    found_lms.push(m);
                    out.push(g);
                }
                Some(pivot) => {
                    let scale = res[pivot].inv().expect("nonzero pivot");
                    let row: Vec<RationalFn> = res.iter().map(|c| c.mul(&scale)).collect();
                    // row = scale·(v - Σ combo_j a_j), with v joining the
                    // accepted vectors as the last coordinate
                    let mut expr_row: Vec<RationalFn> = combo
                        .iter()
                        .map(|c| c.mul(&scale).neg())
                        .collect();
                    expr_row.push(scale.clone());
                    // existing echelon rows gain a zero coordinate for the
                    // new accepted vector
                    for (_, _, e) in echelon.iter_mut() {
                        e.push(rf_zero.clone());
                    }
                    echelon.push((pivot, row, expr_row));
                    accepted_exps.push(m.clone());
                    accepted_vecs.push(v);
                    for i in 0..nvars {
                        let mut nm = m.clone();
                        nm[i] += 1;
                        if !frontier.contains(&nm) {
                            frontier.push(nm);
                        }
                    }
                }
            }
        }
        if accepted_exps.len() != dim {
            return None;
        }
        Some(GroebnerBasis::finish(
            out.into_iter().map(|g| g.make_monic(target)).collect(),
            target,
            &self.order_vars,
            &self.param_vars,
        ))
    }

    /// Lex conversion of a two-variable, zero-dimensional basis over two
    /// parameters, exploiting weighted homogeneity and the generic shape of
    /// such lex bases: one univariate polynomial in the smaller variable and
    /// one element rewriting the larger variable as a polynomial in the
    /// smaller. Both candidates solve linear systems in the normal-form
    /// coordinates of powers of the smaller variable, so the systems are
    /// solved at rational specializations of the parameters and the exact
    /// coefficients recovered by univariate rational reconstruction — the
    /// grading determines the first parameter from the second. The result is
    /// then certified symbolically: both elements must have normal form zero
    /// against `self`, so they generate a subideal; their coprime leading
    /// monomials make the pair a Gröbner basis of that subideal, whose
    /// quotient rank is the staircase size by construction — and a subideal
    /// of equal finite corank is the whole ideal. Returns `None` when the
    /// shape assumption (or any check) fails; the caller then falls back to
    /// the generic conversion.
    pub(crate) fn convert_to_lex_shape(
        &self,
        var_weights: &[i64],
        param_weights: &[i64],
    ) -> Option<GroebnerBasis> {
        if self.order_vars.len() != 2
            || self.param_vars.len() != 2
            || !(var_weights.len() == 2 && var_weights.iter().all(|&w| w == 1))
            || param_weights.len() != 2
            || param_weights[0] != 1
            || param_weights[1] < 1
        {
            return None;
        }
        let w = param_weights[1];
        let stairs = self.standard_monomials()?;
        let dim = stairs.len();
        if dim == 0 {
            return None;
        }
        let row_of: BTreeMap<&Vec<i64>, usize> =
            stairs.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let sigma: Vec<i64> = stairs.iter().map(|e| e[0] + e[1]).collect();
        let pars: Vec<&str> = self.param_vars.iter().map(|s| s.as_str()).collect();
        let rf_one = RationalFn::one(&pars);

        // normal forms of powers of the smaller variable, and of the larger
        let mut nfs: Vec<QPoly> = Vec::with_capacity(dim + 1);
        nfs.push(self.normal_form_q(&monomial_qpoly(
            &self.order_vars,
            &self.param_vars,
            &[0, 0],
        )));
        for j in 1..=dim {
            let shifted = nfs[j - 1].mul_mono(&[0, 1], &rf_one);
            nfs.push(self.normal_form_q(&shifted));
        }
        let nf_h = self.normal_form_q(&monomial_qpoly(
            &self.order_vars,
            &self.param_vars,
            &[1, 0],
        ));

        // coordinates on the staircase as sparse (exponent, value) lists in
        // the second parameter at first parameter = 1; the grading forces
        // each coordinate to be homogeneous of a known degree, which is what
        // later pins the first parameter back down
        let coord_rows = |p: &QPoly, deg_shift: i64| -> Option<Vec<Vec<(i64, Rat)>>> {
            let mut rows: Vec<Vec<(i64, Rat)>> = vec![Vec::new(); dim];
            for (e, c) in p.terms() {
                let r = *row_of.get(e)?;
                if !c.is_polynomial() {
                    return None;
                }
                let expect = deg_shift - sigma[r];
                let nv = c.numer().vars();
                let p0 = nv.iter().position(|v| *v == self.param_vars[0])?;
                let p1 = nv.iter().position(|v| *v == self.param_vars[1])?;
                let mut lst = Vec::new();
                for (pe, pc) in c.numer().terms() {
                    if pe[p0] + w * pe[p1] != expect {
                        return None;
                    }
                    lst.push((pe[p1], pc.clone()));
                }
                rows[r] = lst;
            }
            Some(rows)
        };
        let cols: Vec<Vec<Vec<(i64, Rat)>>> = (0..=dim)
            .map(|j| coord_rows(&nfs[j], j as i64))
            .collect::<Option<_>>()?;
        let hcol = coord_rows(&nf_h, 1)?;
        let max_exp = cols
            .iter()
            .flatten()
            .chain(hcol.iter())
            .flatten()
            .map(|(e, _)| *e)
            .max()
            .unwrap_or(0)
            .max(0) as usize;

        // dense univariate views of the same coordinates; the membership
        // certificates below live entirely in this one variable
        let to_upoly = |lst: &[(i64, Rat)]| -> unipoly::UPoly {
            let mut v: unipoly::UPoly = Vec::new();
            for (e, c) in lst {
                let e = *e as usize;
                if v.len() <= e {
                    v.resize(e + 1, Rat::zero());
                }
                v[e] = c.clone();
            }
            unipoly::trim(v)
        };
        let cols_u: Vec<Vec<unipoly::UPoly>> = cols
            .iter()
            .map(|rows| rows.iter().map(|r| to_upoly(r)).collect())
            .collect();
        let hcol_u: Vec<unipoly::UPoly> = hcol.iter().map(|r| to_upoly(r)).collect();

        // Membership certificate for a candidate tail: the identity
        // `target = Σ_j coeff_j · column_j` is coordinate-wise an equality of
        // homogeneous functions of one common weighted degree per row, so it
        // holds iff it holds at first parameter = 1 — one univariate identity
        // per staircase row, cleared of denominators by their least common
        // multiple. This is exact symbolic verification, just in one variable
        // instead of two.
        let tails_member = |target: &[unipoly::UPoly],
                            raw: &[(unipoly::UPoly, unipoly::UPoly)]|
         -> bool {
            let mut l: unipoly::UPoly = vec![Rat::one()];
            for (_, d) in raw {
                let g = unipoly::gcd(&l, d);
                let (q, rem) = unipoly::divmod(d, &g);
                debug_assert!(rem.is_empty());
                l = unipoly::mul(&l, &q);
            }
            let scaled: Vec<unipoly::UPoly> = raw
                .iter()
                .map(|(num, d)| {
                    let (q, rem) = unipoly::divmod(&l, d);
                    debug_assert!(rem.is_empty());
                    unipoly::mul(num, &q)
                })
                .collect();
            (0..dim).all(|r| {
                let mut acc = unipoly::mul(&target[r], &l);
                for (j, s) in scaled.iter().enumerate() {
                    if s.is_empty() || cols_u[j][r].is_empty() {
                        continue;
                    }
                    acc = unipoly::sub(&acc, &unipoly::mul(s, &cols_u[j][r]));
                }
                acc.is_empty()
            })
        };

        // Sample the second parameter at integer nodes, with all the linear
        // algebra done over 64-bit prime fields: each prime reduces the
        // coordinate tables once, solves the staircase system at every node,
        // and contributes one residue stream per coefficient. Fitted residues
        // are lifted by Chinese remaindering with a held-out prime as a
        // consistency check; the symbolic membership certificate above is the
        // actual soundness gate, so the numeric layer only has to be fast.
        struct PrimeData {
            p: u64,
            cols: Vec<Vec<Vec<(usize, u64)>>>,
            hcol: Vec<Vec<(usize, u64)>>,
            sols: Vec<Option<(Vec<u64>, Vec<u64>)>>,
        }
        let reduce_rows = |rows: &[Vec<(i64, Rat)>], p: u64| -> Option<Vec<Vec<(usize, u64)>>> {
            rows.iter()
                .map(|lst| {
                    lst.iter()
                        .map(|(e, c)| Some((*e as usize, unipoly::rat_mod(c, p)?)))
                        .collect()
                })
                .collect()
        };
        let mut stream = unipoly::PrimeStream::new();
        let mut primes: Vec<PrimeData> = Vec::new();
        let mut bad_primes = 0usize;
        let mut us: Vec<u64> = Vec::new();
        let mut next_u: u64 = 1;
        let start = dim / (w as usize) + 2;
        let node_cap = 8 * start + 32;
        let mut bound = start;
        let mut want_primes = 3usize;
        let prime_cap = 64usize;
        loop {
            while primes.len() < want_primes {
                let p = stream.take_next();
                match (
                    cols.iter()
                        .map(|rows| reduce_rows(rows, p))
                        .collect::<Option<Vec<_>>>(),
                    reduce_rows(&hcol, p),
                ) {
                    (Some(pc), Some(ph)) => primes.push(PrimeData {
                        p,
                        cols: pc,
                        hcol: ph,
                        sols: Vec::new(),
                    }),
                    _ => {
                        // a coefficient denominator vanished at this prime
                        bad_primes += 1;
                        if bad_primes > 16 {
                            return None;
                        }
                    }
                }
            }
            while us.len() < 2 * bound + 2 {
                us.push(next_u);
                next_u += 1;
            }
            for pd in &mut primes {
                while pd.sols.len() < us.len() {
                    let u = us[pd.sols.len()];
                    let p = pd.p;
                    let mut upow = Vec::with_capacity(max_exp + 1);
                    upow.push(1u64);
                    for _ in 0..max_exp {
                        upow.push(unipoly::mulmod(*upow.last().unwrap(), u, p));
                    }
                    let eval = |rows: &[Vec<(usize, u64)>]| -> Vec<u64> {
                        rows.iter()
                            .map(|lst| {
                                lst.iter().fold(0u64, |acc, (e, c)| {
                                    unipoly::addmod(acc, unipoly::mulmod(*c, upow[*e], p), p)
                                })
                            })
                            .collect()
                    };
                    let colvals: Vec<Vec<u64>> = (0..dim).map(|j| eval(&pd.cols[j])).collect();
                    let a: Vec<Vec<u64>> = (0..dim)
                        .map(|r| (0..dim).map(|j| colvals[j][r]).collect())
                        .collect();
                    let b1 = eval(&pd.cols[dim]);
                    let b2 = eval(&pd.hcol);
                    // `None` marks a node whose staircase matrix is singular
                    // at this prime; it simply contributes no sample here
                    pd.sols.push(unipoly::mp_gauss_two(a, b1, b2, p));
                }
            }
            // reconstruct each coefficient from the residue streams, keeping
            // both the symbolic lift and the raw fit for the certificates
            let recover = |first: bool,
                           deg_of: &dyn Fn(usize) -> i64|
             -> Result<
                (Vec<RationalFn>, Vec<(unipoly::UPoly, unipoly::UPoly)>),
                unipoly::ResidueFit,
            > {
                let mut out = Vec::with_capacity(dim);
                let mut raw = Vec::with_capacity(dim);
                for j in 0..dim {
                    let samples: Vec<(u64, Vec<(u64, u64)>)> = primes
                        .iter()
                        .map(|pd| {
                            let pts = us
                                .iter()
                                .zip(&pd.sols)
                                .filter_map(|(&u, sol)| {
                                    let (c1, c2) = sol.as_ref()?;
                                    Some((u, if first { c1[j] } else { c2[j] }))
                                })
                                .collect();
                            (pd.p, pts)
                        })
                        .collect();
                    match unipoly::fit_rational_residues(&samples) {
                        unipoly::ResidueFit::Fit(num, den) => {
                            let lifted = self
                                .rehomogenize_coeff(&num, &den, deg_of(j), w)
                                .ok_or(unipoly::ResidueFit::NeedPrimes)?;
                            out.push(lifted);
                            raw.push((num, den));
                        }
                        need => return Err(need),
                    }
                }
                Ok((out, raw))
            };
            let fits = recover(true, &|j| dim as i64 - j as i64)
                .and_then(|c| recover(false, &|j| 1 - j as i64).map(|h| (c, h)));
            match fits {
                Ok(((c_tail, c_raw), (h_tail, h_raw))) => {
                    // Membership of both candidates makes the pair generate a
                    // subideal; the coprime leading monomials make the pair a
                    // Gröbner basis of that subideal, whose quotient rank is
                    // `dim` by its staircase. A subideal of equal finite corank
                    // is the whole ideal, so nothing further needs reducing.
                    if tails_member(&cols_u[dim], &c_raw) && tails_member(&hcol_u, &h_raw) {
                        // x^dim - Σ c_j x^j and h - Σ c'_j x^j
                        let mut g1 = QPoly::zero(&self.order_vars, &self.param_vars);
                        g1.add_term(vec![0, dim as i64], rf_one.clone());
                        for (j, c) in c_tail.iter().enumerate() {
                            g1.add_term(vec![0, j as i64], c.neg());
                        }
                        let mut g2 = QPoly::zero(&self.order_vars, &self.param_vars);
                        g2.add_term(vec![1, 0], rf_one.clone());
                        for (j, c) in h_tail.iter().enumerate() {
                            g2.add_term(vec![0, j as i64], c.neg());
                        }
                        return Some(GroebnerBasis {
                            order: MonomialOrder::Lex,
                            order_vars: self.order_vars.clone(),
                            param_vars: self.param_vars.clone(),
                            basis: vec![g1, g2],
                        });
                    }
                    // a failed certificate means every numeric check agreed
                    // on a wrong answer; widen both the nodes and the primes
                    bound *= 2;
                    want_primes *= 2;
                }
                Err(unipoly::ResidueFit::NeedPoints) => bound *= 2,
                Err(_) => want_primes *= 2,
            }
            if bound > node_cap || want_primes > prime_cap {
                return None;
            }
        }
    }

    /// Restore a coefficient from its specialization at first parameter = 1:
    /// a homogeneous function of degree `d` under weights `(1, w)` is
    /// `p1^d · f(p2/p1^w)`, so each reconstructed numerator and denominator
    /// term lifts by weighted-degree bookkeeping.
    fn rehomogenize_coeff(
        &self,
        num: &[Rat],
        den: &[Rat],
        d: i64,
        w: i64,
    ) -> Option<RationalFn> {
        let pars: Vec<&str> = self.param_vars.iter().map(|s| s.as_str()).collect();
        if num.is_empty() {
            return Some(RationalFn::zero(&pars));
        }
        let td = (den.len() - 1) as i64;
        let mut nh = LaurentPoly::zero(&pars);
        for (t, a) in num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let t = t as i64;
            nh = nh.add(&LaurentPoly::monomial(
                &pars,
                &[d + w * (td - t), t],
                a.clone(),
            ));
        }
        let mut dh = LaurentPoly::zero(&pars);
        for (t, b) in den.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let t = t as i64;
            dh = dh.add(&LaurentPoly::monomial(&pars, &[w * (td - t), t], b.clone()));
        }
        RationalFn::new(nh, dh).ok()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis.len() == 1
            && self.basis[0]
                .leading(self.order)
                .is_some_and(|(e, _)| e.iter().all(|&x| x == 0))
    }

    pub fn normal_form_q(&self, p: &QPoly) -> QPoly {
        reduce_full(p, &self.basis, self.order)
    }

    /// Fully reduced remainder of `p` modulo the basis. Errors if `p` mixes
    /// in unknown variables or if the remainder picks up parameter
    /// denominators (then it is not expressible as a Laurent polynomial).
    pub fn normal_form(&self, p: &LaurentPoly) -> Result<LaurentPoly, IdealError> {
        let q = QPoly::from_laurent(p, &self.order_vars, &self.param_vars)?;
        self.normal_form_q(&q).to_laurent()
    }

    pub fn reduces_to_zero(&self, p: &LaurentPoly) -> Result<bool, IdealError> {
        let q = QPoly::from_laurent(p, &self.order_vars, &self.param_vars)?;
        Ok(self.normal_form_q(&q).is_zero())
    }

    /// Monomials outside the leading-term ideal, or `None` when there are
    /// infinitely many. The quotient ring is spanned by these over the
    /// coefficient field.
    pub fn standard_monomials(&self) -> Option<Vec<Vec<i64>>> {
        if self.is_unit_ideal() {
            return Some(Vec::new());
        }
        let lms: Vec<Vec<i64>> = self
            .basis
            .iter()
            .map(|g| g.leading(self.order).unwrap().0.clone())
            .collect();
        let nvars = self.order_vars.len();
        // Finite iff every order variable appears as a pure power among the
        // leading monomials.
        let mut bounds = vec![0i64; nvars];
        for i in 0..nvars {
            let b = lms
                .iter()
                .filter(|e| e.iter().enumerate().all(|(j, &x)| x == 0 || j == i))
                .map(|e| e[i])
                .min()?;
            bounds[i] = b;
        }
        let mut out = Vec::new();
        let mut cur = vec![0i64; nvars];
        loop {
            if !lms.iter().any(|lm| divides(lm, &cur)) {
                out.push(cur.clone());
            }
            // odometer over the box given by the pure-power bounds
            let mut i = 0;
            loop {
                if i == nvars {
                    let mut sorted = out;
                    sorted.sort_by(|a, b| self.order.cmp_exps(a, b));
                    return Some(sorted);
                }
                cur[i] += 1;
                if cur[i] < bounds[i] {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }

    pub fn quotient_rank(&self) -> Rank {
        match self.standard_monomials() {
            Some(m) => Rank::Finite(m.len() as u64),
            None => Rank::Infinite,
        }
    }
}

fn reduce_full(p: &QPoly, basis: &[QPoly], order: MonomialOrder) -> QPoly {
    let mut work = p.clone();
    let mut rem = QPoly::zero(&p.order_vars, &p.param_vars);
    'outer: while let Some((lm, lc)) = work.leading(order) {
        let lm = lm.clone();
        let lc = lc.clone();
        for g in basis {
            let (glm, _) = g.leading(order).expect("basis elements are nonzero");
            if divides(glm, &lm) {
                let shift: Vec<i64> = lm.iter().zip(glm).map(|(a, b)| a - b).collect();
                // basis elements are monic, so the coefficient is just lc
                work = work.sub(&g.mul_mono(&shift, &lc));
                continue 'outer;
            }
        }
        rem.add_term(lm.clone(), lc.clone());
        work.terms.remove(&lm);
    }
    rem
}

/// Mutual-containment test: both generating sets reduce to zero against the
/// other side's basis.
pub fn ideal_equal(a: &IdealBasis, b: &IdealBasis) -> Result<bool, IdealError> {
    let ga = a.groebner()?;
    let gb = b.groebner()?;
    for g in &b.generators {
        if !ga.reduces_to_zero(g)? {
            return Ok(false);
        }
    }
    for g in &a.generators {
        if !gb.reduces_to_zero(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    const V: [&str; 4] = ["h", "x", "q1", "q2"];

    fn pv(name: &str) -> LaurentPoly {
        LaurentPoly::var(&V, name)
    }

    /// h^2 - q1*x and h^2 + hx + x^2 - q1*x - q2: the smallest interesting
    /// two-generator system over Q(q1, q2).
    fn small_system() -> Vec<LaurentPoly> {
        let (h, x, q1, q2) = (pv("h"), pv("x"), pv("q1"), pv("q2"));
        let g1 = h.pow(2).sub(&q1.mul(&x));
        let g2 = h
            .pow(2)
            .add(&h.mul(&x))
            .add(&x.pow(2))
            .sub(&q1.mul(&x))
            .sub(&q2);
        vec![g1, g2]
    }

    fn basis_over_params(gens: Vec<LaurentPoly>, order: MonomialOrder) -> IdealBasis {
        IdealBasis::new(
            gens,
            &["h", "x"],
            CoefficientField::RationalFunctions {
                params: vec!["q1".into(), "q2".into()],
            },
            order,
        )
    }

    #[test]
    fn small_system_grevlex_basis() {
        let gb = basis_over_params(small_system(), MonomialOrder::GrevLex)
            .groebner()
            .unwrap();
        let polys = gb.basis_polys();
        assert_eq!(polys.len(), 3);
        let (h, x, q1, q2) = (pv("h"), pv("x"), pv("q1"), pv("q2"));
        let e1 = h.mul(&x).add(&x.pow(2)).sub(&q2);
        let e2 = h.pow(2).sub(&q1.mul(&x));
        let e3 = x
            .pow(3)
            .sub(&q1.mul(&x.pow(2)))
            .add(&h.mul(&q2))
            .sub(&q2.mul(&x));
        for want in [&e1, &e2, &e3] {
            assert!(
                polys.iter().any(|p| {
                    let (a, b) = LaurentPoly::aligned(p, want);
                    a == b
                }),
                "missing basis element {want}"
            );
        }
    }

    #[test]
    fn small_system_staircase_and_rank() {
        let gb = basis_over_params(small_system(), MonomialOrder::GrevLex)
            .groebner()
            .unwrap();
        let stairs = gb.standard_monomials().unwrap();
        // {1, h, x, x^2} in (h, x) exponents
        let expect: Vec<Vec<i64>> = vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![0, 2]];
        let as_set: BTreeSet<_> = stairs.iter().cloned().collect();
        assert_eq!(as_set, expect.into_iter().collect());
        assert_eq!(gb.quotient_rank(), Rank::Finite(4));

        let gb_lex = basis_over_params(small_system(), MonomialOrder::Lex)
            .groebner()
            .unwrap();
        let stairs: BTreeSet<_> = gb_lex.standard_monomials().unwrap().into_iter().collect();
        let expect: BTreeSet<Vec<i64>> =
            [vec![0, 0], vec![0, 1], vec![0, 2], vec![0, 3]].into();
        assert_eq!(stairs, expect);
        assert_eq!(gb_lex.quotient_rank(), Rank::Finite(4));
    }

    #[test]
    fn normal_form_of_cube() {
        let gb = basis_over_params(small_system(), MonomialOrder::GrevLex)
            .groebner()
            .unwrap();
        let nf = gb.normal_form(&pv("h").pow(3)).unwrap();
        // q1*q2 - q1*x^2
        let want = pv("q1")
            .mul(&pv("q2"))
            .sub(&pv("q1").mul(&pv("x").pow(2)));
        let (a, b) = LaurentPoly::aligned(&nf, &want);
        assert_eq!(a, b);
    }

    #[test]
    fn classical_limit_basis() {
        // Setting both parameters to zero: (h^2, h^2 + hx + x^2) over plain Q.
        let vars = ["h", "x"];
        let h = LaurentPoly::var(&vars, "h");
        let x = LaurentPoly::var(&vars, "x");
        let gens = vec![h.pow(2), h.pow(2).add(&h.mul(&x)).add(&x.pow(2))];
        let gb = IdealBasis::new(gens, &vars, CoefficientField::Rational, MonomialOrder::GrevLex)
            .groebner()
            .unwrap();
        let polys = gb.basis_polys();
        let expect = [h.pow(2), h.mul(&x).add(&x.pow(2)), x.pow(3)];
        assert_eq!(polys.len(), 3);
        for want in &expect {
            assert!(polys.iter().any(|p| p == want), "missing {want}");
        }
        assert_eq!(gb.quotient_rank(), Rank::Finite(4));
    }

    #[test]
    fn principal_ideal_has_infinite_quotient() {
        let vars = ["h", "x"];
        let h = LaurentPoly::var(&vars, "h");
        let gb = IdealBasis::new(vec![h], &vars, CoefficientField::Rational, MonomialOrder::GrevLex)
            .groebner()
            .unwrap();
        assert_eq!(gb.quotient_rank(), Rank::Infinite);
    }

    #[test]
    fn unit_ideal_detection() {
        let vars = ["h", "x"];
        let h = LaurentPoly::var(&vars, "h");
        let hp1 = h.add(&LaurentPoly::one(&vars));
        let gb = IdealBasis::new(
            vec![h, hp1],
            &vars,
            CoefficientField::Rational,
            MonomialOrder::GrevLex,
        )
        .groebner()
        .unwrap();
        assert!(gb.is_unit_ideal());
        assert_eq!(gb.quotient_rank(), Rank::Finite(0));
    }

    #[test]
    fn ideal_equality_mutual_reduction() {
        let a = basis_over_params(small_system(), MonomialOrder::GrevLex);
        // Same ideal, different generators: add a multiple of g1 to g2.
        let gens = small_system();
        let mixed = vec![gens[0].clone(), gens[1].add(&gens[0].mul(&pv("x")))];
        let b = basis_over_params(mixed, MonomialOrder::GrevLex);
        assert!(ideal_equal(&a, &b).unwrap());
        let c = basis_over_params(vec![gens[0].clone()], MonomialOrder::GrevLex);
        assert!(!ideal_equal(&a, &c).unwrap());
    }

    #[test]
    fn normal_form_is_idempotent_and_linear() {
        let gb = basis_over_params(small_system(), MonomialOrder::GrevLex)
            .groebner()
            .unwrap();
        let (h, x) = (pv("h"), pv("x"));
        let p = h.pow(4).add(&h.mul(&x).scale(&rat_int(3)));
        let q = x.pow(5).sub(&h.pow(2).mul(&x.pow(2)));
        let nf_p = gb.normal_form(&p).unwrap();
        let nf_q = gb.normal_form(&q).unwrap();
        assert_eq!(gb.normal_form(&nf_p).unwrap(), nf_p);
        let sum_nf = gb.normal_form(&p.add(&q)).unwrap();
        let (a, b) = LaurentPoly::aligned(&sum_nf, &nf_p.add(&nf_q));
        assert_eq!(a, b);
        // members reduce to zero
        for g in small_system() {
            assert!(gb.reduces_to_zero(&g.mul(&h.add(&x))).unwrap());
        }
    }

    #[test]
    fn rejects_negative_order_exponents() {
        let hinv = LaurentPoly::monomial(&["h", "x"], &[-1, 0], rat_int(1));
        let r = QPoly::from_laurent(&hinv, &["h".into(), "x".into()], &[]);
        assert!(r.is_err());
    }
}
