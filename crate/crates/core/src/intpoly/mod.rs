//! Exact sparse multivariate polynomials over arbitrary-precision integers.
//!
//! Variables are drawn from five fixed alphabets. The global variable order is
//! alphabet-major (`X < Y < S < T < U`) and index-ascending inside an
//! alphabet; monomials are compared lexicographically on their exponent
//! vectors under that order. Polynomials keep a canonical form at all times:
//! no zero coefficient and no zero exponent is ever stored, so structural
//! equality is polynomial equality.

mod json;
mod text;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use text::ParsePolyError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
}

/// One of the five variable families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Alphabet {
    /// Underlying variables `x_i`.
    X,
    /// Second family of underlying variables `y_j`.
    Y,
    /// Elementary symmetric functions of the `x_i`.
    S,
    /// Elementary symmetric functions of the `y_j`.
    T,
    /// Generic arguments.
    U,
}

impl Alphabet {
    pub const ALL: [Alphabet; 5] = [Alphabet::X, Alphabet::Y, Alphabet::S, Alphabet::T, Alphabet::U];

    pub fn letter(self) -> char {
        match self {
            Alphabet::X => 'x',
            Alphabet::Y => 'y',
            Alphabet::S => 's',
            Alphabet::T => 't',
            Alphabet::U => 'u',
        }
    }

    pub fn from_letter(c: char) -> Option<Alphabet> {
        Some(match c.to_ascii_lowercase() {
            'x' => Alphabet::X,
            'y' => Alphabet::Y,
            's' => Alphabet::S,
            't' => Alphabet::T,
            'u' => Alphabet::U,
            _ => return None,
        })
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter().to_ascii_uppercase())
    }
}

/// A variable `alphabet_index`, index starting at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    alphabet: Alphabet,
    index: u32,
}

impl Var {
    /// Panics if `index` is zero.
    pub fn new(alphabet: Alphabet, index: u32) -> Var {
        assert!(index >= 1, "variable indices start at 1");
        Var { alphabet, index }
    }

    pub fn try_new(alphabet: Alphabet, index: u32) -> Option<Var> {
        (index >= 1).then_some(Var { alphabet, index })
    }

    pub fn x(i: u32) -> Var {
        Var::new(Alphabet::X, i)
    }
    pub fn y(i: u32) -> Var {
        Var::new(Alphabet::Y, i)
    }
    pub fn s(i: u32) -> Var {
        Var::new(Alphabet::S, i)
    }
    pub fn t(i: u32) -> Var {
        Var::new(Alphabet::T, i)
    }
    pub fn u(i: u32) -> Var {
        Var::new(Alphabet::U, i)
    }

    pub fn alphabet(self) -> Alphabet {
        self.alphabet
    }

    pub fn index(self) -> u32 {
        self.index
    }

    /// Same index, different alphabet.
    pub fn with_alphabet(self, alphabet: Alphabet) -> Var {
        Var { alphabet, index: self.index }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.alphabet.letter(), self.index)
    }
}

/// A power product, stored as `(variable, exponent)` pairs sorted by variable
/// with every exponent positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    pub fn var_pow(v: Var, exp: u32) -> Monomial {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, exp)])
        }
    }

    /// Builds a monomial from arbitrary pairs, merging repeats and dropping
    /// zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Monomial {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> u32 {
        match self.0.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&(_, e)| u64::from(e)).sum()
    }

    pub fn degree_in(&self, alphabet: Alphabet) -> u64 {
        self.in_alphabet(alphabet).map(|&(_, e)| u64::from(e)).sum()
    }

    /// Σ index·exponent over the variables of `alphabet`.
    pub fn weight_in(&self, alphabet: Alphabet) -> u64 {
        self.in_alphabet(alphabet)
            .map(|&(v, e)| u64::from(v.index) * u64::from(e))
            .sum()
    }

    fn in_alphabet(&self, alphabet: Alphabet) -> impl Iterator<Item = &(Var, u32)> {
        self.0.iter().filter(move |(v, _)| v.alphabet == alphabet)
    }

    /// The part of the monomial living in `alphabet`.
    pub fn restrict(&self, alphabet: Alphabet) -> Monomial {
        Monomial(self.in_alphabet(alphabet).copied().collect())
    }

    /// The part of the monomial outside `alphabet`.
    pub fn without(&self, alphabet: Alphabet) -> Monomial {
        Monomial(self.0.iter().filter(|(v, _)| v.alphabet != alphabet).copied().collect())
    }

    /// Exponent vector `(e_1, …, e_n)` of the first `n` variables of `alphabet`.
    pub fn exponent_vector(&self, alphabet: Alphabet, n: usize) -> Vec<u32> {
        let mut out = vec![0; n];
        for &(v, e) in self.in_alphabet(alphabet) {
            let i = v.index as usize;
            if i <= n {
                out[i - 1] = e;
            }
        }
        out
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }

    /// Renames variables; the renaming need not be injective.
    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (f(v), e)))
    }
}

impl Ord for Monomial {
    /// Lexicographic order on exponent vectors under the global variable order.
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            match a.0.cmp(&b.0) {
                // `self` has a positive exponent where `other` has zero.
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match a.1.cmp(&b.1) {
                    Ordering::Equal => {}
                    ord => return ord,
                },
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial in canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Polynomial {
        Polynomial::term(Monomial::one(), c)
    }

    pub fn var(v: Var) -> Polynomial {
        Polynomial::term(Monomial::var(v), 1)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Polynomial {
        let mut p = Polynomial::zero();
        p.add_term(m, c.into());
        p
    }

    /// Canonicalizes an arbitrary list of terms.
    pub fn from_terms<I, C>(terms: I) -> Polynomial
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in descending lex order (the serialization order).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_term_ref(&mut self, m: &Monomial, c: &BigInt) {
        if let Some(slot) = self.terms.get_mut(m) {
            *slot += c;
            if slot.is_zero() {
                self.terms.remove(m);
            }
        } else if !c.is_zero() {
            self.terms.insert(m.clone(), c.clone());
        }
    }

    pub fn coefficient_of(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Multiplies every term by `c·m`.
    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn total_degree(&self) -> Result<u64, PolyError> {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .ok_or(PolyError::ZeroPolynomial)
    }

    pub fn degree_in(&self, alphabet: Alphabet) -> Result<u64, PolyError> {
        self.terms
            .keys()
            .map(|m| m.degree_in(alphabet))
            .max()
            .ok_or(PolyError::ZeroPolynomial)
    }

    /// Sum of all coefficients, i.e. the value at the all-ones point.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Lexicographically greatest monomial of `p` restricted to `alphabet`.
    ///
    /// Only the `alphabet` part of the monomial is returned; variables of
    /// other alphabets are treated as part of the coefficient.
    pub fn leading_monomial_lex(&self, alphabet: Alphabet) -> Result<Monomial, PolyError> {
        self.terms
            .keys()
            .map(|m| m.restrict(alphabet))
            .max()
            .ok_or(PolyError::ZeroPolynomial)
    }

    /// Drops every term whose degree in `alphabet` is at least `min_deg`.
    pub fn truncate_min_degree(&self, alphabet: Alphabet, min_deg: u64) -> Polynomial {
        assert!(min_deg >= 1, "truncation degree must be positive");
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_in(alphabet) < min_deg)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies the ring homomorphism sending each variable in `assignment` to
    /// its image and every other variable to itself.
    pub fn substitute(&self, assignment: &HashMap<Var, Polynomial>) -> Polynomial {
        if assignment.is_empty() {
            return self.clone();
        }
        let mut powers: HashMap<(Var, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut image = Polynomial::one();
            for &(v, e) in m.factors() {
                match assignment.get(&v) {
                    Some(q) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| q.pow(e));
                        image = &image * &*pw;
                    }
                    None => kept.push((v, e)),
                }
            }
            out += &image.mul_term(&Monomial(kept), c);
        }
        out
    }

    /// Evaluates at an integer point.
    pub fn evaluate(&self, value: impl Fn(Var) -> BigInt) -> BigInt {
        let mut cache: HashMap<Var, BigInt> = HashMap::new();
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.factors() {
                let x = cache.entry(v).or_insert_with(|| value(v));
                t *= num_traits::pow(x.clone(), e as usize);
            }
            acc += t;
        }
        acc
    }

    /// Renames variables (e.g. a transposition of indices).
    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.map_vars(&f), c.clone());
        }
        out
    }

    /// Groups terms by their `alphabet` part. The values collect the
    /// remaining factors, so `p = Σ key·value`.
    pub fn split_by(&self, alphabet: Alphabet) -> BTreeMap<Monomial, Polynomial> {
        let mut out: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.restrict(alphabet))
                .or_default()
                .add_term(m.without(alphabet), c.clone());
        }
        out
    }

    /// Largest absolute coefficient, zero for the zero polynomial.
    pub fn max_abs_coefficient(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term_ref(m, c);
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term_ref(m, &-c);
        }
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (mut big, small) = if self.len() >= rhs.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        big += small;
        big
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        Polynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl From<Var> for Polynomial {
    fn from(v: Var) -> Polynomial {
        Polynomial::var(v)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Polynomial {
        Polynomial::constant(c)
    }
}
