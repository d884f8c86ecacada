use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::LambdaRing;

/// `C(x, n) = x(x−1)⋯(x−n+1)/n!`, defined for every integer `x`.
pub fn binomial(x: &BigInt, n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 0..n {
        acc = acc * (x - BigInt::from(k)) / BigInt::from(k + 1);
    }
    acc
}

/// The integers with `λ^n(x) = C(x, n)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BinomialInt;

impl LambdaRing for BinomialInt {
    type Elem = BigInt;

    fn describe(&self) -> String {
        "binomial-int".to_string()
    }

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn from_int(&self, k: &BigInt) -> BigInt {
        k.clone()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn lambda(&self, n: u32, x: &BigInt) -> BigInt {
        binomial(x, n)
    }

    fn lambda_series(&self, x: &BigInt, n: u32) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(n as usize + 1);
        out.push(BigInt::one());
        for k in 1..=n {
            let next = &out[k as usize - 1] * (x - BigInt::from(k - 1)) / BigInt::from(k);
            out.push(next);
        }
        out
    }

    fn divisible_by(&self, x: &BigInt, p: u32) -> bool {
        x.is_multiple_of(&BigInt::from(p))
    }

    fn adams_oracle(&self, _n: u32, x: &BigInt) -> Option<BigInt> {
        Some(x.clone())
    }
}
