//! Symmetric functions in one or two finite alphabets and their rewriting in
//! the elementary basis.
//!
//! The decomposition is the classical leading-term elimination: if the lex
//! leading exponent vector of a symmetric polynomial is `(a_1 ≥ … ≥ a_n)`,
//! subtract `c·e_1^{a_1−a_2}⋯e_n^{a_n}` and repeat. The leading monomial
//! strictly decreases at every step, which is asserted.

use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigInt;
use thiserror::Error;

use crate::intpoly::{Alphabet, Monomial, Polynomial, Var};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("elementary index {k} out of range for {n} variables")]
    IndexOutOfRange { k: u32, n: u32 },
    #[error("power sum index must be at least 1")]
    ZeroPowerSum,
    #[error("alphabet {0} cannot carry symmetric variables (use X or Y)")]
    InvalidAlphabet(Alphabet),
    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,
    #[error("variable {0} is outside the declared alphabet")]
    ForeignVariable(Var),
    #[error("input is not symmetric in {0}")]
    NonSymmetricInput(Alphabet),
    #[error("elementary-basis roundtrip failed; this is a bug")]
    RoundtripMismatch,
}

/// The first `size` variables of alphabet `X` or `Y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VarSet {
    alphabet: Alphabet,
    size: u32,
}

impl VarSet {
    pub fn new(alphabet: Alphabet, size: u32) -> Result<VarSet, SymError> {
        if !matches!(alphabet, Alphabet::X | Alphabet::Y) {
            return Err(SymError::InvalidAlphabet(alphabet));
        }
        if size == 0 {
            return Err(SymError::EmptyAlphabet);
        }
        Ok(VarSet { alphabet, size })
    }

    /// `x_1, …, x_n`. Panics if `n == 0`.
    pub fn x(n: u32) -> VarSet {
        VarSet::new(Alphabet::X, n).expect("alphabet size must be positive")
    }

    /// `y_1, …, y_n`. Panics if `n == 0`.
    pub fn y(n: u32) -> VarSet {
        VarSet::new(Alphabet::Y, n).expect("alphabet size must be positive")
    }

    pub fn alphabet(self) -> Alphabet {
        self.alphabet
    }

    pub fn size(self) -> u32 {
        self.size
    }

    pub fn var(self, i: u32) -> Var {
        Var::new(self.alphabet, i)
    }

    pub fn vars(self) -> impl Iterator<Item = Var> {
        (1..=self.size).map(move |i| Var::new(self.alphabet, i))
    }

    pub fn contains(self, v: Var) -> bool {
        v.alphabet() == self.alphabet && v.index() <= self.size
    }

    /// Alphabet of the elementary symmetric functions of this set (`S` for
    /// `X`, `T` for `Y`).
    pub fn elementary_alphabet(self) -> Alphabet {
        match self.alphabet {
            Alphabet::X => Alphabet::S,
            _ => Alphabet::T,
        }
    }
}

/// Output of the elementary-basis rewrite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryBasisResult {
    pub expression: Polynomial,
    /// Set once back-substitution has reproduced the input exactly.
    pub checked: bool,
}

/// `e_k` of the variable set; `e_0 = 1`.
pub fn elementary(k: u32, vs: VarSet) -> Result<Polynomial, SymError> {
    if k > vs.size {
        return Err(SymError::IndexOutOfRange { k, n: vs.size });
    }
    Ok(Polynomial::from_terms(
        vs.vars()
            .combinations(k as usize)
            .map(|c| (Monomial::from_pairs(c.into_iter().map(|v| (v, 1))), 1)),
    ))
}

/// `x_1^r + ⋯ + x_n^r`.
pub fn power_sum(r: u32, vs: VarSet) -> Result<Polynomial, SymError> {
    if r == 0 {
        return Err(SymError::ZeroPowerSum);
    }
    Ok(Polynomial::from_terms(vs.vars().map(|v| (Monomial::var_pow(v, r), 1))))
}

fn check_vars(p: &Polynomial, allowed: impl Fn(Var) -> bool) -> Result<(), SymError> {
    match p.vars().into_iter().find(|&v| !allowed(v)) {
        Some(v) => Err(SymError::ForeignVariable(v)),
        None => Ok(()),
    }
}

/// Invariance under the adjacent transpositions of `vs`; other variables are
/// left alone.
fn symmetric_in(p: &Polynomial, vs: VarSet) -> bool {
    (1..vs.size).all(|i| {
        let swapped = p.map_vars(|v| {
            if v.alphabet() != vs.alphabet {
                v
            } else if v.index() == i {
                vs.var(i + 1)
            } else if v.index() == i + 1 {
                vs.var(i)
            } else {
                v
            }
        });
        swapped == *p
    })
}

pub fn is_symmetric(p: &Polynomial, vs: VarSet) -> Result<bool, SymError> {
    check_vars(p, |v| vs.contains(v))?;
    Ok(symmetric_in(p, vs))
}

pub fn is_bisymmetric(p: &Polynomial, ax: VarSet, ay: VarSet) -> Result<bool, SymError> {
    if ax.alphabet != Alphabet::X {
        return Err(SymError::InvalidAlphabet(ax.alphabet));
    }
    if ay.alphabet != Alphabet::Y {
        return Err(SymError::InvalidAlphabet(ay.alphabet));
    }
    check_vars(p, |v| ax.contains(v) || ay.contains(v))?;
    Ok(symmetric_in(p, ax) && symmetric_in(p, ay))
}

/// Rewrites `p` in the elementary symmetric functions of `vs`.
pub fn to_elementary_basis(p: &Polynomial, vs: VarSet) -> Result<ElementaryBasisResult, SymError> {
    check_vars(p, |v| vs.contains(v))?;
    to_elementary_basis_over(p, vs)
}

/// Like [`to_elementary_basis`], but variables outside `vs`'s alphabet are
/// treated as coefficients. They must not use the output alphabet.
pub fn to_elementary_basis_over(p: &Polynomial, vs: VarSet) -> Result<ElementaryBasisResult, SymError> {
    let target = vs.elementary_alphabet();
    check_vars(p, |v| {
        (v.alphabet() != vs.alphabet || v.index() <= vs.size) && v.alphabet() != target
    })?;
    if !symmetric_in(p, vs) {
        return Err(SymError::NonSymmetricInput(vs.alphabet));
    }
    let mut elim = Eliminator::new(vs);
    let expression = elim.decompose(p);
    if elim.expand(&expression) != *p {
        return Err(SymError::RoundtripMismatch);
    }
    Ok(ElementaryBasisResult { expression, checked: true })
}

/// Two-alphabet rewrite in `s_i` and `t_j`: first in `X` with `Y` as
/// coefficients, then in `Y` with `S` as coefficients.
pub fn to_elementary_basis_2(
    p: &Polynomial,
    ax: VarSet,
    ay: VarSet,
) -> Result<ElementaryBasisResult, SymError> {
    if !is_bisymmetric(p, ax, ay)? {
        let alphabet = if symmetric_in(p, ax) { Alphabet::Y } else { Alphabet::X };
        return Err(SymError::NonSymmetricInput(alphabet));
    }
    let mut ex = Eliminator::new(ax);
    let mut ey = Eliminator::new(ay);
    let in_s = ex.decompose(p);
    let expression = ey.decompose(&in_s);
    if ex.expand(&ey.expand(&expression)) != *p {
        return Err(SymError::RoundtripMismatch);
    }
    Ok(ElementaryBasisResult { expression, checked: true })
}

/// Leading-term elimination state for one variable set, caching powers of the
/// elementary polynomials.
struct Eliminator {
    vs: VarSet,
    elementary: Vec<Polynomial>,
    powers: HashMap<(usize, u32), Polynomial>,
}

impl Eliminator {
    fn new(vs: VarSet) -> Eliminator {
        let elementary = (0..=vs.size)
            .map(|k| elementary(k, vs).expect("k within range"))
            .collect();
        Eliminator { vs, elementary, powers: HashMap::new() }
    }

    fn power(&mut self, k: usize, exp: u32) -> &Polynomial {
        let base = &self.elementary[k];
        self.powers.entry((k, exp)).or_insert_with(|| base.pow(exp))
    }

    fn decompose(&mut self, p: &Polynomial) -> Polynomial {
        let alphabet = self.vs.alphabet;
        let target = self.vs.elementary_alphabet();
        let n = self.vs.size as usize;
        let mut rest = p.clone();
        let mut out = Polynomial::zero();
        let mut previous: Option<Monomial> = None;
        while !rest.is_zero() {
            let lead = rest.leading_monomial_lex(alphabet).expect("nonzero");
            if let Some(prev) = &previous {
                assert!(lead < *prev, "leading monomial must strictly decrease");
            }
            let a = lead.exponent_vector(alphabet, n);
            debug_assert!(a.windows(2).all(|w| w[0] >= w[1]), "symmetric input has a partition as leading exponent");

            // Coefficient of the leading power product; other alphabets ride along.
            let coeff = Polynomial::from_terms(
                rest.terms()
                    .filter(|(m, _)| m.restrict(alphabet) == lead)
                    .map(|(m, c)| (m.without(alphabet), c.clone())),
            );

            let mut product = Polynomial::one();
            let mut in_basis = Vec::new();
            for k in 1..=n {
                let d = a[k - 1] - a.get(k).copied().unwrap_or(0);
                if d > 0 {
                    product = &product * self.power(k, d);
                    in_basis.push((Var::new(target, k as u32), d));
                }
            }
            rest -= &(&product * &coeff);
            out += &(&coeff * &Polynomial::term(Monomial::from_pairs(in_basis), BigInt::from(1)));
            previous = Some(lead);
        }
        out
    }

    /// Back-substitution `s_k ↦ e_k` (or `t_k ↦ e_k`).
    fn expand(&mut self, q: &Polynomial) -> Polynomial {
        let target = self.vs.elementary_alphabet();
        let mut out = Polynomial::zero();
        for (m, c) in q.terms() {
            let mut image = Polynomial::one();
            let mut kept = Vec::new();
            for &(v, e) in m.factors() {
                if v.alphabet() == target && v.index() <= self.vs.size {
                    image = &image * self.power(v.index() as usize, e);
                } else {
                    kept.push((v, e));
                }
            }
            out += &image.mul_term(&Monomial::from_pairs(kept), c);
        }
        out
    }
}

/// Substitution map `s_k ↦ e_k(vs)` for `k = 1..=n`.
pub fn elementary_assignment(vs: VarSet) -> HashMap<Var, Polynomial> {
    (1..=vs.size)
        .map(|k| {
            (
                Var::new(vs.elementary_alphabet(), k),
                elementary(k, vs).expect("k within range"),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u32) -> Polynomial {
        Polynomial::var(Var::x(i))
    }
    fn y(i: u32) -> Polynomial {
        Polynomial::var(Var::y(i))
    }
    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(elementary(2, VarSet::x(3)).unwrap(), x(1) * x(2) + x(1) * x(3) + x(2) * x(3));
        assert_eq!(elementary(0, VarSet::x(5)).unwrap(), Polynomial::one());
        assert_eq!(elementary(3, VarSet::x(3)).unwrap(), x(1) * x(2) * x(3));
        assert_eq!(elementary(4, VarSet::x(3)), Err(SymError::IndexOutOfRange { k: 4, n: 3 }));
    }

    #[test]
    fn elementary_term_counts() {
        for n in 1..=6u32 {
            for k in 0..=n {
                let e = elementary(k, VarSet::x(n)).unwrap();
                let binom = (0..k).fold(1u64, |acc, i| acc * u64::from(n - i) / u64::from(i + 1));
                assert_eq!(e.len() as u64, binom);
                assert!(e.terms().all(|(_, c)| *c == BigInt::from(1)));
            }
        }
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sum(1, VarSet::x(2)).unwrap(), x(1) + x(2));
        assert_eq!(power_sum(3, VarSet::x(1)).unwrap(), x(1).pow(3));
        assert_eq!(power_sum(2, VarSet::x(2)).unwrap(), x(1).pow(2) + x(2).pow(2));
        assert_eq!(power_sum(0, VarSet::x(2)), Err(SymError::ZeroPowerSum));
    }

    #[test]
    fn symmetry_examples() {
        let x2 = VarSet::x(2);
        assert!(is_symmetric(&(x(1) * x(2) + x(1) + x(2)), x2).unwrap());
        assert!(!is_symmetric(&(x(1).pow(2) + x(2)), x2).unwrap());
        assert!(is_symmetric(&power_sum(5, VarSet::x(4)).unwrap(), VarSet::x(4)).unwrap());
        assert_eq!(is_symmetric(&x(3), x2), Err(SymError::ForeignVariable(Var::x(3))));
        assert_eq!(is_symmetric(&y(1), x2), Err(SymError::ForeignVariable(Var::y(1))));
    }

    #[test]
    fn bisymmetry_examples() {
        let (ax, ay) = (VarSet::x(2), VarSet::y(2));
        assert!(is_bisymmetric(&((x(1) + x(2)) * (y(1) + y(2))), ax, ay).unwrap());
        assert!(!is_bisymmetric(&(x(1) * y(1) + x(2) * y(2)), ax, ay).unwrap());
        let mut h = Polynomial::one();
        for i in 1..=2 {
            for j in 1..=2 {
                h = h * (Polynomial::one() + x(i) * y(j));
            }
        }
        assert!(is_bisymmetric(&h, ax, ay).unwrap());
    }

    #[test]
    fn decomposition_examples() {
        let r = to_elementary_basis(&power_sum(2, VarSet::x(2)).unwrap(), VarSet::x(2)).unwrap();
        assert!(r.checked);
        assert_eq!(r.expression, p("+1*s1^2 -2*s2"));
        let r = to_elementary_basis(&elementary(2, VarSet::x(3)).unwrap(), VarSet::x(3)).unwrap();
        assert_eq!(r.expression, p("+1*s2"));
        let r = to_elementary_basis(&power_sum(3, VarSet::x(3)).unwrap(), VarSet::x(3)).unwrap();
        assert_eq!(r.expression, p("+1*s1^3 -3*s1*s2 +3*s3"));
    }

    #[test]
    fn decomposition_rejects_non_symmetric() {
        assert_eq!(
            to_elementary_basis(&(x(1).pow(2) + x(2)), VarSet::x(2)),
            Err(SymError::NonSymmetricInput(Alphabet::X))
        );
    }

    #[test]
    fn two_alphabet_examples() {
        let (ax, ay) = (VarSet::x(2), VarSet::y(2));
        let r = to_elementary_basis_2(&((x(1) + x(2)) * (y(1) + y(2))), ax, ay).unwrap();
        assert_eq!(r.expression, p("+1*s1*t1"));
        let q = power_sum(2, ax).unwrap() * power_sum(1, ay).unwrap();
        let r = to_elementary_basis_2(&q, ax, ay).unwrap();
        assert_eq!(r.expression, p("+1*s1^2*t1 -2*s2*t1"));
        let r = to_elementary_basis_2(&Polynomial::one(), ax, ay).unwrap();
        assert_eq!(r.expression, Polynomial::one());
        assert_eq!(
            to_elementary_basis_2(&(x(1) * y(1) + x(2) * y(1)), ax, ay),
            Err(SymError::NonSymmetricInput(Alphabet::Y))
        );
    }

    #[test]
    fn parameters_ride_along() {
        // t1 acts as a coefficient.
        let t1 = Polynomial::var(Var::t(1));
        let q = &power_sum(2, VarSet::x(2)).unwrap() * &t1;
        let r = to_elementary_basis_over(&q, VarSet::x(2)).unwrap();
        assert_eq!(r.expression, p("+1*s1^2*t1 -2*s2*t1"));
        let clash = Polynomial::var(Var::s(1)) * x(1);
        assert!(to_elementary_basis_over(&clash, VarSet::x(1)).is_err());
    }

    #[test]
    fn power_sum_expression_is_stable_in_n() {
        for r in 1..=5u32 {
            let base = to_elementary_basis(&power_sum(r, VarSet::x(r)).unwrap(), VarSet::x(r))
                .unwrap()
                .expression;
            for n in r + 1..=r + 2 {
                let wider = to_elementary_basis(&power_sum(r, VarSet::x(n)).unwrap(), VarSet::x(n))
                    .unwrap()
                    .expression;
                // Isobaric weight r keeps s_{r+1}, … out of the wider result.
                assert_eq!(wider, base, "r={r} n={n}");
            }
        }
    }
}
