//! λ-modules and the square-zero graded λ-ring `R ⊕ M_1 ⊕ ⋯ ⊕ M_d`.
//!
//! A λ-module over a λ-ring `R` is an `R`-module `M` with additive maps
//! `λ_{M,n}` (`n ≥ 1`) such that
//!
//! 1. `λ_{M,1} = id`
//! 2. `λ_{M,n} λ_{M,m} = λ_{M,nm}`
//! 3. `λ_{M,n}(a·x) = ψ^n(a) λ_{M,n}(x)`
//!
//! Given one, the graded ring with `(a, x)(b, y) = (ab, ay + bx)` and
//! `λ^r(a)_k = Σ_{i<r} λ^i(a_0) · (−1)^{r−i−1} λ_{M,r−i}(a_k)` is a λ-ring,
//! and `(−1)^{r−1} λ^r` restricted to a positive degree gives the module
//! back.

mod checks;
mod samples;

use std::fmt;

use thiserror::Error;

use crate::lambda::{adams_series, LambdaRing};

pub use checks::{
    check_composition_sign, check_composition_sign_with, check_graded_lambda_ring, check_graded_newton,
    check_module_axioms, check_module_extraction, check_semilinearity, check_sign_identity, check_sign_identity_with,
    check_width_independence, composition_sign,
};
pub use samples::graded_samples;

/// A module over a λ-ring with operations `λ_{M,n}`, `n ≥ 1`.
pub trait LambdaModule {
    type Ring: LambdaRing;
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display;

    fn ring(&self) -> &Self::Ring;

    /// Short descriptor used in reports, e.g. `adams`.
    fn describe(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;

    /// The scalar action `a·x`.
    fn act(&self, a: &<Self::Ring as LambdaRing>::Elem, x: &Self::Elem) -> Self::Elem;

    /// `λ_{M,n}(x)` for `n ≥ 1`.
    fn lambda_m(&self, n: u32, x: &Self::Elem) -> Self::Elem;

    /// `[λ_{M,1}(x), …, λ_{M,n}(x)]`.
    fn lambda_m_series(&self, x: &Self::Elem, n: u32) -> Vec<Self::Elem> {
        (1..=n).map(|k| self.lambda_m(k, x)).collect()
    }

    /// Whether `x ∈ pM`.
    fn divisible_by(&self, x: &Self::Elem, p: u32) -> bool;
}

/// `R` as a module over itself with `λ_{M,n} = ψ^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdamsModule<R> {
    ring: R,
}

impl<R: LambdaRing> AdamsModule<R> {
    pub fn new(ring: R) -> AdamsModule<R> {
        AdamsModule { ring }
    }
}

impl<R: LambdaRing> LambdaModule for AdamsModule<R> {
    type Ring = R;
    type Elem = R::Elem;

    fn ring(&self) -> &R {
        &self.ring
    }

    fn describe(&self) -> String {
        "adams".to_string()
    }

    fn zero(&self) -> R::Elem {
        self.ring.zero()
    }

    fn add(&self, x: &R::Elem, y: &R::Elem) -> R::Elem {
        self.ring.add(x, y)
    }

    fn neg(&self, x: &R::Elem) -> R::Elem {
        self.ring.neg(x)
    }

    fn act(&self, a: &R::Elem, x: &R::Elem) -> R::Elem {
        self.ring.mul(a, x)
    }

    fn lambda_m(&self, n: u32, x: &R::Elem) -> R::Elem {
        self.lambda_m_series(x, n).swap_remove(n as usize - 1)
    }

    fn lambda_m_series(&self, x: &R::Elem, n: u32) -> Vec<R::Elem> {
        adams_series(&self.ring, x, n)
    }

    fn divisible_by(&self, x: &R::Elem, p: u32) -> bool {
        self.ring.divisible_by(x, p)
    }
}

/// `(a_0; a_1, …, a_d)` with `a_0 ∈ R` and `a_k ∈ M_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElement<A, X> {
    pub base: A,
    pub parts: Vec<X>,
}

impl<A: fmt::Display, X: fmt::Display> fmt::Display for GradedElement<A, X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.base)?;
        for (k, x) in self.parts.iter().enumerate() {
            write!(f, "{} {x}", if k == 0 { ";" } else { "," })?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("graded elements have widths {left} and {right}")]
pub struct ShapeError {
    pub left: usize,
    pub right: usize,
}

type RingElem<M> = <<M as LambdaModule>::Ring as LambdaRing>::Elem;
pub type GradedElem<M> = GradedElement<RingElem<M>, <M as LambdaModule>::Elem>;

/// The square-zero extension `R ⊕ M_1 ⊕ ⋯ ⊕ M_d` with the same module in
/// every positive degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRing<M> {
    module: M,
    width: usize,
}

impl<M: LambdaModule> GradedRing<M> {
    pub fn new(module: M, width: usize) -> GradedRing<M> {
        assert!(width >= 1, "truncation width must be at least 1");
        GradedRing { module, width }
    }

    pub fn module(&self) -> &M {
        &self.module
    }

    pub fn base_ring(&self) -> &M::Ring {
        self.module.ring()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// `(a, 0, …, 0)`.
    pub fn from_base(&self, a: RingElem<M>) -> GradedElem<M> {
        GradedElement { base: a, parts: vec![self.module.zero(); self.width] }
    }

    /// `x` placed in degree `degree` (1-based), zero elsewhere.
    pub fn embed(&self, degree: usize, x: M::Elem) -> GradedElem<M> {
        let mut e = self.from_base(self.base_ring().zero());
        e.parts[degree - 1] = x;
        e
    }

    pub fn element(&self, base: RingElem<M>, parts: Vec<M::Elem>) -> GradedElem<M> {
        assert_eq!(parts.len(), self.width, "one part per positive degree");
        GradedElement { base, parts }
    }

    pub fn try_mul(&self, a: &GradedElem<M>, b: &GradedElem<M>) -> Result<GradedElem<M>, ShapeError> {
        if a.parts.len() != b.parts.len() {
            return Err(ShapeError { left: a.parts.len(), right: b.parts.len() });
        }
        let m = &self.module;
        let parts = a
            .parts
            .iter()
            .zip(&b.parts)
            .map(|(x, y)| m.add(&m.act(&a.base, y), &m.act(&b.base, x)))
            .collect();
        Ok(GradedElement { base: self.base_ring().mul(&a.base, &b.base), parts })
    }
}

impl<M: LambdaModule> LambdaRing for GradedRing<M> {
    type Elem = GradedElem<M>;

    fn describe(&self) -> String {
        format!("graded({};{};d={})", self.base_ring().describe(), self.module.describe(), self.width)
    }

    fn zero(&self) -> Self::Elem {
        self.from_base(self.base_ring().zero())
    }

    fn one(&self) -> Self::Elem {
        self.from_base(self.base_ring().one())
    }

    fn from_int(&self, k: &num_bigint::BigInt) -> Self::Elem {
        self.from_base(self.base_ring().from_int(k))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let parts = a.parts.iter().zip(&b.parts).map(|(x, y)| self.module.add(x, y)).collect();
        GradedElement { base: self.base_ring().add(&a.base, &b.base), parts }
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        let parts = a.parts.iter().map(|x| self.module.neg(x)).collect();
        GradedElement { base: self.base_ring().neg(&a.base), parts }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.try_mul(a, b).expect("graded elements of one ring share a width")
    }

    fn lambda(&self, n: u32, x: &Self::Elem) -> Self::Elem {
        self.lambda_series(x, n).swap_remove(n as usize)
    }

    fn lambda_series(&self, x: &Self::Elem, n: u32) -> Vec<Self::Elem> {
        let ring = self.base_ring();
        let m = &self.module;
        let base = ring.lambda_series(&x.base, n);
        // λ^j on a positive part is (−1)^{j−1} λ_{M,j}.
        let signed: Vec<Vec<M::Elem>> = x
            .parts
            .iter()
            .map(|part| {
                let mut s = m.lambda_m_series(part, n);
                for v in s.iter_mut().skip(1).step_by(2) {
                    *v = m.neg(v);
                }
                s
            })
            .collect();
        base.iter()
            .enumerate()
            .map(|(r, b)| {
                let parts = signed
                    .iter()
                    .map(|s| (0..r).fold(m.zero(), |acc, i| m.add(&acc, &m.act(&base[i], &s[r - i - 1]))))
                    .collect();
                GradedElement { base: b.clone(), parts }
            })
            .collect()
    }

    fn divisible_by(&self, x: &Self::Elem, p: u32) -> bool {
        self.base_ring().divisible_by(&x.base, p) && x.parts.iter().all(|v| self.module.divisible_by(v, p))
    }
}

/// The module `M_k` with `λ_{M,r} := (−1)^{r−1} λ^r` read off a graded
/// ring.
#[derive(Clone, Debug)]
pub struct ExtractedModule<M> {
    graded: GradedRing<M>,
    degree: usize,
}

/// The λ-module carried by degree `degree` of `graded`.
pub fn extract_module<M: LambdaModule + Clone>(graded: &GradedRing<M>, degree: usize) -> ExtractedModule<M> {
    assert!((1..=graded.width()).contains(&degree), "degree outside the truncation");
    ExtractedModule { graded: graded.clone(), degree }
}

impl<M: LambdaModule> ExtractedModule<M> {
    fn project(&self, e: GradedElem<M>) -> M::Elem {
        e.parts.into_iter().nth(self.degree - 1).expect("degree within width")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

impl<M: LambdaModule> LambdaModule for ExtractedModule<M> {
    type Ring = M::Ring;
    type Elem = M::Elem;

    fn ring(&self) -> &M::Ring {
        self.graded.base_ring()
    }

    fn describe(&self) -> String {
        format!("extracted({};k={})", self.graded.module().describe(), self.degree)
    }

    fn zero(&self) -> M::Elem {
        self.project(self.graded.zero())
    }

    fn add(&self, x: &M::Elem, y: &M::Elem) -> M::Elem {
        let g = &self.graded;
        self.project(g.add(&g.embed(self.degree, x.clone()), &g.embed(self.degree, y.clone())))
    }

    fn neg(&self, x: &M::Elem) -> M::Elem {
        self.project(self.graded.neg(&self.graded.embed(self.degree, x.clone())))
    }

    fn act(&self, a: &RingElem<M>, x: &M::Elem) -> M::Elem {
        let g = &self.graded;
        self.project(g.mul(&g.from_base(a.clone()), &g.embed(self.degree, x.clone())))
    }

    fn lambda_m(&self, n: u32, x: &M::Elem) -> M::Elem {
        self.lambda_m_series(x, n).swap_remove(n as usize - 1)
    }

    fn lambda_m_series(&self, x: &M::Elem, n: u32) -> Vec<M::Elem> {
        let series = self.graded.lambda_series(&self.graded.embed(self.degree, x.clone()), n);
        series
            .into_iter()
            .enumerate()
            .skip(1)
            .map(|(r, e)| {
                let v = self.project(e);
                if r % 2 == 0 {
                    self.neg(&v)
                } else {
                    v
                }
            })
            .collect()
    }

    fn divisible_by(&self, x: &M::Elem, p: u32) -> bool {
        self.graded.module().divisible_by(x, p)
    }
}
