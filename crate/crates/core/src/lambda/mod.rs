//! λ-rings: the carrier interface, two concrete instances, Adams operations
//! and the axiom checker.
//!
//! A λ-ring is a commutative unital ring with operations `λ^n` (`n ≥ 0`)
//! such that
//!
//! 1. `λ^0(x) = 1`
//! 2. `λ^1(x) = x`
//! 3. `λ^n(1) = 0` for `n ≥ 2`
//! 4. `λ^n(x + y) = Σ_{i+j=n} λ^i(x) λ^j(y)`
//! 5. `λ^n(xy) = P_n(λ^1(x), …, λ^n(x); λ^1(y), …, λ^n(y))`
//! 6. `λ^n(λ^m(x)) = P_{n,m}(λ^1(x), …, λ^{nm}(x))`

mod adams;
mod axioms;
mod binomial;
mod group_ring;
mod samples;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::intpoly::{Alphabet, Polynomial, Var};
use crate::universal::UniversalId;

pub use adams::{
    adams_from_lambdas, adams_series, adams_via_newton, adams_via_q, check_adams_properties, check_adams_routes,
    check_minus_one, check_negation, lambda_negative, negative_series,
};
pub use axioms::check_lambda_axioms;
pub use binomial::{binomial, BinomialInt};
pub use group_ring::{GroupRingElem, LineGroupRing, ParseRingError, MAX_GROUP_ORDER};
pub use samples::{binomial_samples, group_ring_samples, pick_pairs, Samples};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LambdaError {
    #[error("{0} is not available under the current caps")]
    MissingUniversal(UniversalId),
}

/// A commutative unital ring with λ-operations.
pub trait LambdaRing {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display;

    /// Short descriptor used in reports, e.g. `binomial-int`.
    fn describe(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, k: &BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn lambda(&self, n: u32, x: &Self::Elem) -> Self::Elem;

    /// `[λ^0(x), …, λ^n(x)]`. Instances override this when the whole series
    /// is cheaper to compute at once.
    fn lambda_series(&self, x: &Self::Elem, n: u32) -> Vec<Self::Elem> {
        (0..=n).map(|k| self.lambda(k, x)).collect()
    }

    /// Whether `x ∈ pR`.
    fn divisible_by(&self, x: &Self::Elem, p: u32) -> bool;

    /// An Adams operation computed from the instance's own structure, if it
    /// has one independent of the λ-operations.
    fn adams_oracle(&self, _n: u32, _x: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn pow(&self, x: &Self::Elem, exp: u32) -> Self::Elem {
        (0..exp).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    fn scale(&self, k: i64, x: &Self::Elem) -> Self::Elem {
        self.mul(&self.from_int(&BigInt::from(k)), x)
    }
}

/// Evaluates a polynomial in `S` and `T` with `s_i ↦ s_values[i − 1]` and
/// `t_j ↦ t_values[j − 1]`.
///
/// Panics if the polynomial uses another alphabet or an index beyond the
/// supplied values.
pub fn evaluate<R: LambdaRing>(ring: &R, poly: &Polynomial, s_values: &[R::Elem], t_values: &[R::Elem]) -> R::Elem {
    let mut powers: HashMap<(Var, u32), R::Elem> = HashMap::new();
    let mut acc = ring.zero();
    for (mono, coeff) in poly.terms() {
        let mut term = ring.from_int(coeff);
        for &(v, e) in mono.factors() {
            let base = match v.alphabet() {
                Alphabet::S => &s_values[v.index() as usize - 1],
                Alphabet::T => &t_values[v.index() as usize - 1],
                other => panic!("cannot evaluate alphabet {other} in a λ-ring"),
            };
            let pw = powers.entry((v, e)).or_insert_with(|| ring.pow(base, e));
            term = ring.mul(&term, pw);
        }
        acc = ring.add(&acc, &term);
    }
    acc
}
