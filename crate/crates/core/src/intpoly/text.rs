//! Canonical text form: `+3*s1^2*t2 -2*s2*t2 +1*s3`, terms in descending lex
//! order, `0` for the zero polynomial.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use super::{Alphabet, Monomial, Polynomial, Var};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse polynomial term `{token}`: {reason}")]
pub struct ParsePolyError {
    token: String,
    reason: &'static str,
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms_desc().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            write!(f, "{sign}{}", c.abs())?;
            if !m.is_one() {
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}

fn parse_var(tok: &str, factor: &str) -> Result<(Var, u32), ParsePolyError> {
    let err = |reason| ParsePolyError { token: tok.to_string(), reason };
    let (name, exp) = match factor.split_once('^') {
        Some((n, e)) => (n, e.parse::<u32>().map_err(|_| err("bad exponent"))?),
        None => (factor, 1),
    };
    let mut chars = name.chars();
    let alphabet = chars
        .next()
        .and_then(Alphabet::from_letter)
        .ok_or_else(|| err("unknown variable letter"))?;
    let index: u32 = chars.as_str().parse().map_err(|_| err("bad variable index"))?;
    let var = Var::try_new(alphabet, index).ok_or_else(|| err("variable index must be positive"))?;
    if exp == 0 {
        return Err(err("zero exponent"));
    }
    Ok((var, exp))
}

impl FromStr for Polynomial {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Polynomial, ParsePolyError> {
        let s = s.trim();
        if s == "0" {
            return Ok(Polynomial::zero());
        }
        let mut p = Polynomial::zero();
        for tok in s.split_whitespace() {
            let err = |reason| ParsePolyError { token: tok.to_string(), reason };
            let (neg, body) = match tok.as_bytes().first() {
                Some(b'+') => (false, &tok[1..]),
                Some(b'-') => (true, &tok[1..]),
                _ => return Err(err("term must start with a sign")),
            };
            let mut factors = body.split('*');
            let coeff_str = factors.next().unwrap_or_default();
            let mut coeff: BigInt = coeff_str.parse().map_err(|_| err("bad coefficient"))?;
            if coeff.is_negative() {
                return Err(err("bad coefficient"));
            }
            if neg {
                coeff = -coeff;
            }
            let pairs = factors.map(|f| parse_var(tok, f)).collect::<Result<Vec<_>, _>>()?;
            p.add_term(Monomial::from_pairs(pairs), coeff);
        }
        if p.is_zero() {
            return Err(ParsePolyError { token: s.to_string(), reason: "terms cancel; write 0" });
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_descending_lex() {
        let s = |i| Polynomial::var(Var::s(i));
        let t = |i| Polynomial::var(Var::t(i));
        let p = s(1).pow(2) * t(2) + s(2) * t(1).pow(2) - Polynomial::constant(2) * s(2) * t(2);
        assert_eq!(p.to_string(), "+1*s1^2*t2 +1*s2*t1^2 -2*s2*t2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::constant(-4).to_string(), "-4");
    }

    #[test]
    fn parses_canonical_and_loose_input() {
        let p: Polynomial = "+1*s1^3 -3*s1*s2 +3*s3".parse().unwrap();
        assert_eq!(p.to_string(), "+1*s1^3 -3*s1*s2 +3*s3");
        let q: Polynomial = "+3*s1^2*t2 -2*s2*t2 +1*s2*t1^2".parse().unwrap();
        assert_eq!(q.to_string(), "+3*s1^2*t2 +1*s2*t1^2 -2*s2*t2");
        assert!("x1".parse::<Polynomial>().is_err());
        assert!("+1*q1".parse::<Polynomial>().is_err());
        assert!("+1*x0".parse::<Polynomial>().is_err());
        assert!("+1*x1^0".parse::<Polynomial>().is_err());
    }
}
