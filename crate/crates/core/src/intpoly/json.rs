//! JSON form: `[{"coeff": "3", "mono": [["S", 1, 2], ["T", 2, 1]]}, …]`,
//! terms in descending lex order, factors in variable order.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Alphabet, Monomial, Polynomial, Var};

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: String,
    mono: Vec<(Alphabet, u32, u32)>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms_desc()
            .map(|(m, c)| TermRepr {
                coeff: c.to_string(),
                mono: m.factors().iter().map(|&(v, e)| (v.alphabet(), v.index(), e)).collect(),
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Polynomial, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(deserializer)?;
        let mut seen = BTreeSet::new();
        let mut p = Polynomial::zero();
        for t in terms {
            let coeff: BigInt = t.coeff.parse().map_err(|_| D::Error::custom("bad coefficient"))?;
            if coeff.is_zero() {
                return Err(D::Error::custom("zero coefficient in canonical form"));
            }
            let mut factors = Vec::with_capacity(t.mono.len());
            for (alphabet, index, exp) in t.mono {
                let v = Var::try_new(alphabet, index).ok_or_else(|| D::Error::custom("variable index 0"))?;
                if exp == 0 {
                    return Err(D::Error::custom("zero exponent in canonical form"));
                }
                factors.push((v, exp));
            }
            let sorted = factors.windows(2).all(|w| w[0].0 < w[1].0);
            if !sorted {
                return Err(D::Error::custom("monomial factors not sorted"));
            }
            let m = Monomial(factors);
            if !seen.insert(m.clone()) {
                return Err(D::Error::custom("duplicate monomial"));
            }
            p.add_term(m, coeff);
        }
        Ok(p)
    }
}
