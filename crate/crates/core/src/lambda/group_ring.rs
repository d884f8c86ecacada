//! The group ring `Z[G]` of a finite abelian group, with every group element
//! a line: `λ_t(g) = 1 + g·t`.
//!
//! A general element is split by coefficient sign, `x = x⁺ − x⁻`. Then
//! `λ_t(x⁺)` is the product of `(1 + g t)^{c_g}` (elementary symmetric
//! functions of the multiset of lines) and `λ_t(−x⁻)` is the inverse series
//! of `λ_t(x⁻)`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::{binomial, negative_series, LambdaRing};

/// Largest supported group order.
pub const MAX_GROUP_ORDER: u64 = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseRingError {
    #[error("bad group descriptor `{0}` (expected e.g. `Z/2xZ/3`)")]
    BadGroup(String),
    #[error("group order exceeds {MAX_GROUP_ORDER}")]
    TooLarge,
    #[error("unknown ring descriptor `{0}` (expected `binomial-int` or `line-group-ring:Z/2xZ/3`)")]
    UnknownRing(String),
}

/// Element of `Z[G]`: one coefficient per group element, indexed in
/// mixed radix (last factor fastest).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingElem {
    coeffs: Vec<BigInt>,
    moduli: Arc<[u32]>,
}

impl GroupRingElem {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

fn decode(moduli: &[u32], mut g: usize) -> Vec<u32> {
    let mut out = vec![0; moduli.len()];
    for (slot, &m) in out.iter_mut().zip(moduli).rev() {
        *slot = (g % m as usize) as u32;
        g /= m as usize;
    }
    out
}

impl fmt::Display for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (g, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let sign = if c.is_negative() { '-' } else { '+' };
            let label: Vec<String> = decode(&self.moduli, g).iter().map(u32::to_string).collect();
            write!(f, "{sign}{}*[{}]", c.abs(), label.join(","))?;
        }
        Ok(())
    }
}

/// `Z[Z/m_1 × ⋯ × Z/m_k]` with group elements as lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineGroupRing {
    moduli: Arc<[u32]>,
    order: usize,
    mul_table: Vec<usize>,
}

impl LineGroupRing {
    pub fn new(moduli: Vec<u32>) -> Result<LineGroupRing, ParseRingError> {
        if moduli.is_empty() || moduli.contains(&0) {
            return Err(ParseRingError::BadGroup(format!("{moduli:?}")));
        }
        let order = moduli.iter().try_fold(1u64, |acc, &m| {
            let next = acc * u64::from(m);
            (next <= MAX_GROUP_ORDER).then_some(next)
        });
        let order = order.ok_or(ParseRingError::TooLarge)? as usize;
        let moduli: Arc<[u32]> = moduli.into();
        let mut ring = LineGroupRing { moduli, order, mul_table: Vec::with_capacity(order * order) };
        for g in 0..order {
            for h in 0..order {
                let (a, b) = (decode(&ring.moduli, g), decode(&ring.moduli, h));
                let sum: Vec<u32> = a.iter().zip(&b).zip(ring.moduli.iter()).map(|((x, y), m)| (x + y) % m).collect();
                ring.mul_table.push(ring.encode(&sum));
            }
        }
        Ok(ring)
    }

    pub fn cyclic(m: u32) -> LineGroupRing {
        LineGroupRing::new(vec![m]).expect("valid cyclic group")
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn encode(&self, tuple: &[u32]) -> usize {
        tuple.iter().zip(self.moduli.iter()).fold(0, |acc, (&a, &m)| acc * m as usize + (a % m) as usize)
    }

    pub fn decode(&self, g: usize) -> Vec<u32> {
        decode(&self.moduli, g)
    }

    pub fn group_mul(&self, g: usize, h: usize) -> usize {
        self.mul_table[g * self.order + h]
    }

    pub fn group_pow(&self, g: usize, n: u32) -> usize {
        (0..n).fold(0, |acc, _| self.group_mul(acc, g))
    }

    /// One generator per cyclic factor.
    pub fn generators(&self) -> Vec<usize> {
        (0..self.moduli.len())
            .map(|i| {
                let mut t = vec![0; self.moduli.len()];
                t[i] = 1;
                self.encode(&t)
            })
            .collect()
    }

    /// Builds an element from one integer per group element.
    pub fn element<I: IntoIterator<Item = i64>>(&self, coeffs: I) -> GroupRingElem {
        let mut c: Vec<BigInt> = coeffs.into_iter().map(BigInt::from).collect();
        assert_eq!(c.len(), self.order, "one coefficient per group element");
        c.shrink_to_fit();
        GroupRingElem { coeffs: c, moduli: self.moduli.clone() }
    }

    fn from_coeffs(&self, coeffs: Vec<BigInt>) -> GroupRingElem {
        GroupRingElem { coeffs, moduli: self.moduli.clone() }
    }

    /// The line `g` as a ring element.
    pub fn line(&self, g: usize) -> GroupRingElem {
        let mut c = vec![BigInt::zero(); self.order];
        c[g] = BigInt::one();
        self.from_coeffs(c)
    }

    fn scaled_line(&self, g: usize, k: BigInt) -> GroupRingElem {
        let mut c = vec![BigInt::zero(); self.order];
        c[g] = k;
        self.from_coeffs(c)
    }

    /// `e_n` of a multiset of lines; zero when `n` exceeds its size.
    pub fn lambda_sum_of_lines(&self, lines: &[usize], n: u32) -> GroupRingElem {
        let mut counts = vec![BigInt::zero(); self.order];
        for &g in lines {
            counts[g] += 1;
        }
        self.lines_series(&counts, n).swap_remove(n as usize)
    }

    /// `[λ^0, …, λ^n]` of `Σ counts[g]·g` with every count non-negative:
    /// `Π_g (1 + g t)^{c_g} = Π_g Σ_k C(c_g, k) g^k t^k`.
    fn lines_series(&self, counts: &[BigInt], n: u32) -> Vec<GroupRingElem> {
        let mut acc: Vec<GroupRingElem> = (0..=n).map(|k| if k == 0 { self.one() } else { self.zero() }).collect();
        for (g, c) in counts.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let factor: Vec<GroupRingElem> =
                (0..=n).map(|k| self.scaled_line(self.group_pow(g, k), binomial(c, k))).collect();
            acc = self.series_mul(&acc, &factor);
        }
        acc
    }

    fn series_mul(&self, a: &[GroupRingElem], b: &[GroupRingElem]) -> Vec<GroupRingElem> {
        let n = a.len().min(b.len());
        (0..n)
            .map(|k| {
                (0..=k).fold(self.zero(), |acc, i| {
                    if a[i].is_zero() || b[k - i].is_zero() {
                        acc
                    } else {
                        self.add(&acc, &self.mul(&a[i], &b[k - i]))
                    }
                })
            })
            .collect()
    }
}

impl FromStr for LineGroupRing {
    type Err = ParseRingError;

    /// Parses `Z/2xZ/3` (also accepts `Z/2×Z/3` and `Z/6`).
    fn from_str(s: &str) -> Result<LineGroupRing, ParseRingError> {
        let bad = || ParseRingError::BadGroup(s.to_string());
        let moduli = s
            .split(['x', '×'])
            .map(|f| f.trim().strip_prefix("Z/").and_then(|m| m.parse::<u32>().ok()).ok_or_else(bad))
            .collect::<Result<Vec<_>, _>>()?;
        LineGroupRing::new(moduli)
    }
}

impl fmt::Display for LineGroupRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.moduli.iter().map(|m| format!("Z/{m}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl LambdaRing for LineGroupRing {
    type Elem = GroupRingElem;

    fn describe(&self) -> String {
        format!("line-group-ring:{self}")
    }

    fn zero(&self) -> GroupRingElem {
        self.from_coeffs(vec![BigInt::zero(); self.order])
    }

    fn one(&self) -> GroupRingElem {
        self.line(0)
    }

    fn from_int(&self, k: &BigInt) -> GroupRingElem {
        self.scaled_line(0, k.clone())
    }

    fn add(&self, a: &GroupRingElem, b: &GroupRingElem) -> GroupRingElem {
        self.from_coeffs(a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect())
    }

    fn neg(&self, a: &GroupRingElem) -> GroupRingElem {
        self.from_coeffs(a.coeffs.iter().map(|x| -x).collect())
    }

    fn mul(&self, a: &GroupRingElem, b: &GroupRingElem) -> GroupRingElem {
        let mut out = vec![BigInt::zero(); self.order];
        for (g, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (h, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    out[self.group_mul(g, h)] += x * y;
                }
            }
        }
        self.from_coeffs(out)
    }

    fn lambda(&self, n: u32, x: &GroupRingElem) -> GroupRingElem {
        self.lambda_series(x, n).swap_remove(n as usize)
    }

    fn lambda_series(&self, x: &GroupRingElem, n: u32) -> Vec<GroupRingElem> {
        let positive: Vec<BigInt> = x.coeffs.iter().map(|c| if c.is_positive() { c.clone() } else { BigInt::zero() }).collect();
        let negative: Vec<BigInt> = x.coeffs.iter().map(|c| if c.is_negative() { -c } else { BigInt::zero() }).collect();
        let pos = self.lines_series(&positive, n);
        if negative.iter().all(Zero::is_zero) {
            return pos;
        }
        let neg = negative_series(self, &self.lines_series(&negative, n));
        self.series_mul(&pos, &neg)
    }

    fn divisible_by(&self, x: &GroupRingElem, p: u32) -> bool {
        let p = BigInt::from(p);
        x.coeffs.iter().all(|c| c.is_multiple_of(&p))
    }

    /// `ψ^n(Σ c_g g) = Σ c_g g^n`.
    fn adams_oracle(&self, n: u32, x: &GroupRingElem) -> Option<GroupRingElem> {
        let mut out = vec![BigInt::zero(); self.order];
        for (g, c) in x.coeffs.iter().enumerate() {
            out[self.group_pow(g, n)] += c;
        }
        Some(self.from_coeffs(out))
    }
}
