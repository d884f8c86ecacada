//! The universal polynomials `Q_n`, `P_n` and `P_{n,m}`.
//!
//! * `Q_n(s_1, …, s_n)` expresses the power sum `x_1^n + ⋯ + x_n^n`.
//! * `P_n(s; t)` is the `t^n` coefficient of `Π_{i,j ≤ n} (1 + x_i y_j t)`
//!   in the elementary bases of both alphabets; it governs `λ^n(xy)`.
//! * `P_{n,m}(s_1, …, s_{nm})` is the `t^n` coefficient of the product of
//!   `1 + x_{i_1}⋯x_{i_m} t` over all `m`-subsets of `nm` variables; it
//!   governs `λ^n(λ^m(x))`.
//!
//! Every polynomial is generated by two independent routes and the routes
//! must agree exactly.

mod cache;
mod checks;
mod series;
mod table;

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::intpoly::{Alphabet, Monomial, Polynomial, Var};
use crate::symfun::{self, SymError, VarSet};
use series::TruncatedSeries;

pub use cache::{PolyCache, FORMAT_VERSION};
pub use checks::{
    check_composition_coefficient_sums, check_composition_linear, check_composition_routes,
    check_composition_unit, check_isobaric_weights, check_linearity_lemma, check_newton_identity,
    check_newton_routes, check_product_coefficient_sums, check_product_routes, check_product_specialization,
    composition_sign, universal_suite,
};
pub use table::{Generator, UniversalTable};

#[derive(Debug, Error)]
pub enum UniversalError {
    #[error("invalid parameters for {0}")]
    InvalidParams(UniversalId),
    #[error("{id} exceeds the {cap_name} cap of {cap} (estimated cost: {estimate}); pass --force to override")]
    CapExceeded {
        id: UniversalId,
        cap_name: &'static str,
        cap: u32,
        estimate: String,
    },
    #[error("generation routes disagree for {id}:\n  definition: {definition}\n  alternate:  {alternate}")]
    RouteMismatch {
        id: UniversalId,
        definition: Box<Polynomial>,
        alternate: Box<Polynomial>,
    },
    #[error("{id} violates its isobaric weight invariant")]
    WeightViolation { id: UniversalId },
    #[error("corrupt cache entry {path}: {reason}")]
    CorruptCache { path: String, reason: String },
    #[error("cache I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Symmetric(#[from] SymError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Q,
    P,
    Pnm,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Q => "q",
            Kind::P => "p",
            Kind::Pnm => "pnm",
        }
    }
}

/// Which universal polynomial, with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UniversalId {
    Q(u32),
    P(u32),
    Pnm(u32, u32),
}

impl UniversalId {
    pub fn kind(self) -> Kind {
        match self {
            UniversalId::Q(_) => Kind::Q,
            UniversalId::P(_) => Kind::P,
            UniversalId::Pnm(..) => Kind::Pnm,
        }
    }

    pub fn params(self) -> Vec<u32> {
        match self {
            UniversalId::Q(n) | UniversalId::P(n) => vec![n],
            UniversalId::Pnm(n, m) => vec![n, m],
        }
    }

    pub fn from_parts(kind: Kind, params: &[u32]) -> Option<UniversalId> {
        match (kind, params) {
            (Kind::Q, &[n]) => Some(UniversalId::Q(n)),
            (Kind::P, &[n]) => Some(UniversalId::P(n)),
            (Kind::Pnm, &[n, m]) => Some(UniversalId::Pnm(n, m)),
            _ => None,
        }
    }

    /// Cache key: kind, parameters and serialization format version.
    pub fn cache_key(self) -> String {
        format!("{}/{}@v{}", self.kind().as_str(), self.file_stem(), FORMAT_VERSION)
    }

    pub(crate) fn file_stem(self) -> String {
        self.params().iter().map(u32::to_string).join("-")
    }

    /// Checks the isobaric weights: `Q_n` has S-weight `n`, `P_n` S- and
    /// T-weight `n`, `P_{n,m}` S-weight `nm`, and nothing else appears.
    pub fn weights_hold(self, body: &Polynomial) -> bool {
        let (s_weight, t_weight) = match self {
            UniversalId::Q(n) => (u64::from(n), 0),
            UniversalId::P(n) => (u64::from(n), u64::from(n)),
            UniversalId::Pnm(n, m) => (u64::from(n) * u64::from(m), 0),
        };
        !body.is_zero()
            && body.terms().all(|(mono, _)| {
                mono.vars().all(|v| matches!(v.alphabet(), Alphabet::S | Alphabet::T))
                    && mono.weight_in(Alphabet::S) == s_weight
                    && mono.weight_in(Alphabet::T) == t_weight
            })
    }
}

impl fmt::Display for UniversalId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UniversalId::Q(n) => write!(f, "Q_{n}"),
            UniversalId::P(n) => write!(f, "P_{n}"),
            UniversalId::Pnm(n, m) => write!(f, "P_{{{n},{m}}}"),
        }
    }
}

/// Which generation route produced a stored body.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Definition,
    Alternate,
}

/// A generated universal polynomial. Bodies are only constructed after both
/// routes agreed (or after a verified cache load).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalPoly {
    pub id: UniversalId,
    pub body: Polynomial,
    pub route: Route,
}

impl UniversalPoly {
    pub fn kind(&self) -> Kind {
        self.id.kind()
    }

    pub fn cache_key(&self) -> String {
        self.id.cache_key()
    }
}

/// Feasibility caps for generation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Largest `n` for `P_n`.
    pub product: u32,
    /// Largest `n·m` for `P_{n,m}`.
    pub composition: u32,
    /// Largest `n` for `Q_n`.
    pub newton: u32,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps { product: 4, composition: 8, newton: 8 }
    }
}

impl Caps {
    /// No effective limit; used by `--force`.
    pub fn unbounded() -> Caps {
        Caps { product: u32::MAX, composition: u32::MAX, newton: u32::MAX }
    }

    pub fn admit(&self, id: UniversalId) -> Result<(), UniversalError> {
        let breach = |cap_name, cap, estimate: String| {
            Err(UniversalError::CapExceeded { id, cap_name, cap, estimate })
        };
        match id {
            UniversalId::Q(n) if n > self.newton => {
                breach("newton", self.newton, format!("decomposition of a degree-{n} power sum in {n} variables"))
            }
            UniversalId::P(n) if n > self.product => breach(
                "product",
                self.product,
                format!("{} linear factors over {} variables, symmetric rewrite in 2 alphabets", n * n, 2 * n),
            ),
            UniversalId::Pnm(n, m) if u64::from(n) * u64::from(m) > u64::from(self.composition) => {
                let nm = u64::from(n) * u64::from(m);
                breach(
                    "composition",
                    self.composition,
                    format!("C({nm},{m}) = {} compound factors over {nm} variables", binomial_u128(nm, u64::from(m))),
                )
            }
            _ => Ok(()),
        }
    }
}

fn binomial_u128(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * u128::from(n - i) / u128::from(i + 1))
}

fn validate(id: UniversalId) -> Result<(), UniversalError> {
    let ok = match id {
        UniversalId::Q(n) | UniversalId::P(n) => n >= 1,
        UniversalId::Pnm(n, m) => n >= 1 && m >= 1 && n.checked_mul(m).is_some(),
    };
    if ok {
        Ok(())
    } else {
        Err(UniversalError::InvalidParams(id))
    }
}

fn agree(id: UniversalId, definition: Polynomial, alternate: Polynomial) -> Result<UniversalPoly, UniversalError> {
    if definition != alternate {
        return Err(UniversalError::RouteMismatch {
            id,
            definition: Box::new(definition),
            alternate: Box::new(alternate),
        });
    }
    if !id.weights_hold(&definition) {
        return Err(UniversalError::WeightViolation { id });
    }
    Ok(UniversalPoly { id, body: definition, route: Route::Definition })
}

/// `Q_n` by symmetrizing the power sum `x_1^n + ⋯ + x_n^n`.
pub fn newton_q_definition(n: u32) -> Result<Polynomial, UniversalError> {
    validate(UniversalId::Q(n))?;
    let vs = VarSet::x(n);
    let p = symfun::power_sum(n, vs)?;
    Ok(symfun::to_elementary_basis(&p, vs)?.expression)
}

/// `Q_1, …, Q_n` by the Newton recursion
/// `Q_k = Σ_{i<k} (−1)^{i−1} s_i Q_{k−i} + (−1)^{k+1} k s_k`.
pub fn newton_q_recursive(n: u32) -> Result<Vec<Polynomial>, UniversalError> {
    validate(UniversalId::Q(n))?;
    let s = |i: u32| Polynomial::var(Var::s(i));
    let mut qs: Vec<Polynomial> = Vec::with_capacity(n as usize);
    for k in 1..=n {
        let mut q = s(k).scale(&BigInt::from(if k % 2 == 1 { i64::from(k) } else { -i64::from(k) }));
        for i in 1..k {
            let term = &s(i) * &qs[(k - i - 1) as usize];
            if i % 2 == 1 {
                q += &term;
            } else {
                q -= &term;
            }
        }
        qs.push(q);
    }
    Ok(qs)
}

pub fn newton_q(n: u32, caps: &Caps) -> Result<UniversalPoly, UniversalError> {
    let id = UniversalId::Q(n);
    validate(id)?;
    caps.admit(id)?;
    let definition = newton_q_definition(n)?;
    let alternate = newton_q_recursive(n)?.pop().expect("n >= 1");
    agree(id, definition, alternate)
}

/// The `t^n` coefficient of `h(t) = Π_{i,j ≤ n} (1 + x_i y_j t)`, expanded in
/// `x` and `y`.
pub fn product_expansion(n: u32) -> Polynomial {
    let mut h = TruncatedSeries::one(n as usize);
    for i in 1..=n {
        for j in 1..=n {
            h.mul_linear(&Polynomial::term(Monomial::from_pairs([(Var::x(i), 1), (Var::y(j), 1)]), 1));
        }
    }
    h.into_coefficient(n as usize)
}

/// `P_n` from `h(t)` and the two-alphabet elementary rewrite.
pub fn product_p_definition(n: u32) -> Result<Polynomial, UniversalError> {
    validate(UniversalId::P(n))?;
    let coeff = product_expansion(n);
    Ok(symfun::to_elementary_basis_2(&coeff, VarSet::x(n), VarSet::y(n))?.expression)
}

/// `P_n` from `h̃(t) = Π_i (1 + x_i t_1 t + x_i² t_2 t² + ⋯ + x_i^n t_n t^n)`,
/// where the `t_j` are already elementary, so only `X` is rewritten.
pub fn product_p_alternate(n: u32) -> Result<Polynomial, UniversalError> {
    validate(UniversalId::P(n))?;
    let deg = n as usize;
    let mut h = TruncatedSeries::one(deg);
    for i in 1..=n {
        let mut factor = vec![Polynomial::one()];
        for k in 1..=n {
            factor.push(Polynomial::term(Monomial::from_pairs([(Var::x(i), k), (Var::t(k), 1)]), 1));
        }
        h = h.mul(&TruncatedSeries::from_coeffs(deg, factor));
    }
    let coeff = h.into_coefficient(deg);
    Ok(symfun::to_elementary_basis_over(&coeff, VarSet::x(n))?.expression)
}

pub fn product_p(n: u32, caps: &Caps) -> Result<UniversalPoly, UniversalError> {
    let id = UniversalId::P(n);
    validate(id)?;
    caps.admit(id)?;
    agree(id, product_p_definition(n)?, product_p_alternate(n)?)
}

/// Products `x_{i_1}⋯x_{i_m}` over `m`-subsets of `nm` variables, in lex
/// order of the index tuples.
fn compound_monomials(vars: u32, m: u32) -> Vec<Polynomial> {
    (1..=vars)
        .combinations(m as usize)
        .map(|idx| Polynomial::term(Monomial::from_pairs(idx.into_iter().map(|i| (Var::x(i), 1))), 1))
        .collect()
}

/// `P_{n,m}` by expanding `g(t)` as a product of series `1 + c·t` in lex
/// factor order.
pub fn composition_p_definition(n: u32, m: u32) -> Result<Polynomial, UniversalError> {
    validate(UniversalId::Pnm(n, m))?;
    let nm = n * m;
    let deg = n as usize;
    let mut g = TruncatedSeries::one(deg);
    for c in compound_monomials(nm, m) {
        g = g.mul(&TruncatedSeries::from_coeffs(deg, vec![Polynomial::one(), c]));
    }
    let coeff = g.into_coefficient(deg);
    Ok(symfun::to_elementary_basis(&coeff, VarSet::x(nm))?.expression)
}

/// `P_{n,m}` as `e_n` of the compound monomials, accumulated incrementally
/// (`E_k ← E_k + c·E_{k−1}`) over the factors in reverse order.
pub fn composition_p_alternate(n: u32, m: u32) -> Result<Polynomial, UniversalError> {
    validate(UniversalId::Pnm(n, m))?;
    let nm = n * m;
    let deg = n as usize;
    let mut e = TruncatedSeries::one(deg);
    for c in compound_monomials(nm, m).iter().rev() {
        e.mul_linear(c);
    }
    let coeff = e.into_coefficient(deg);
    Ok(symfun::to_elementary_basis(&coeff, VarSet::x(nm))?.expression)
}

pub fn composition_p(n: u32, m: u32, caps: &Caps) -> Result<UniversalPoly, UniversalError> {
    let id = UniversalId::Pnm(n, m);
    validate(id)?;
    caps.admit(id)?;
    agree(id, composition_p_definition(n, m)?, composition_p_alternate(n, m)?)
}

/// Generates any universal polynomial through its two routes.
pub fn generate(id: UniversalId, caps: &Caps) -> Result<UniversalPoly, UniversalError> {
    match id {
        UniversalId::Q(n) => newton_q(n, caps),
        UniversalId::P(n) => product_p(n, caps),
        UniversalId::Pnm(n, m) => composition_p(n, m, caps),
    }
}

/// Value of the body with every variable set to 1.
pub fn coefficient_sum(u: &UniversalPoly) -> BigInt {
    u.body.coefficient_sum()
}

/// The part of the body of degree at most one in `alphabet`.
pub fn linear_part(u: &UniversalPoly, alphabet: Alphabet) -> Polynomial {
    u.body.truncate_min_degree(alphabet, 2)
}
