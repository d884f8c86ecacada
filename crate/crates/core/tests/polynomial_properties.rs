use std::collections::{BTreeMap, HashMap};

use lamod_core::intpoly::{Alphabet, Monomial, Polynomial, Var};
use num_bigint::BigInt;
use proptest::prelude::*;

const VARS: [(Alphabet, u32); 6] =
    [(Alphabet::X, 1), (Alphabet::X, 2), (Alphabet::Y, 1), (Alphabet::S, 1), (Alphabet::S, 2), (Alphabet::T, 1)];

fn var(i: usize) -> Var {
    let (a, k) = VARS[i];
    Var::new(a, k)
}

fn poly() -> impl Strategy<Value = Polynomial> {
    let term = (-20i64..=20, proptest::collection::vec(0u32..=3, VARS.len()));
    proptest::collection::vec(term, 0..6).prop_map(|terms| {
        let mut p = Polynomial::zero();
        for (c, exps) in terms {
            let pairs: Vec<(Var, u32)> = exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (var(i), e)).collect();
            p.add_term(Monomial::from_pairs(pairs), BigInt::from(c));
        }
        p
    })
}

fn point() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-4i64..=4, VARS.len())
}

fn at(p: &Polynomial, pt: &[i64]) -> BigInt {
    p.evaluate(|v| {
        let i = VARS.iter().position(|&(a, k)| a == v.alphabet() && k == v.index()).expect("known variable");
        BigInt::from(pt[i])
    })
}

/// Dense product over exponent vectors, independent of the sparse kernel.
fn dense_mul(p: &Polynomial, q: &Polynomial) -> BTreeMap<Vec<u32>, BigInt> {
    let dense = |p: &Polynomial| -> Vec<(Vec<u32>, BigInt)> {
        p.terms().map(|(m, c)| ((0..VARS.len()).map(|i| m.exponent(var(i))).collect(), c.clone())).collect()
    };
    let mut out: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for (a, ca) in dense(p) {
        for (b, cb) in dense(q) {
            let e: Vec<u32> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += &ca * &cb;
        }
    }
    out.retain(|_, c| *c != BigInt::from(0));
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p + &Polynomial::zero(), p.clone());
        prop_assert_eq!(&p * &Polynomial::one(), p.clone());
        prop_assert!((&p - &p).is_zero());
        prop_assert!((&p * &Polynomial::zero()).is_zero());
    }

    #[test]
    fn canonical_form_has_no_zero_coefficients(p in poly(), q in poly()) {
        let zero = BigInt::from(0);
        for r in [&p + &q, &p * &q, &p - &q] {
            prop_assert!(r.terms().all(|(_, c)| *c != zero));
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(), q in poly(), pt in point()) {
        prop_assert_eq!(at(&(&p + &q), &pt), at(&p, &pt) + at(&q, &pt));
        prop_assert_eq!(at(&(&p * &q), &pt), at(&p, &pt) * at(&q, &pt));
    }

    #[test]
    fn sparse_product_matches_dense(p in poly(), q in poly()) {
        let sparse: BTreeMap<Vec<u32>, BigInt> = (&p * &q)
            .terms()
            .map(|(m, c)| ((0..VARS.len()).map(|i| m.exponent(var(i))).collect(), c.clone()))
            .collect();
        prop_assert_eq!(sparse, dense_mul(&p, &q));
    }

    #[test]
    fn substitution_is_a_homomorphism(p in poly(), q in poly(), img1 in poly(), img2 in poly()) {
        let assign: HashMap<Var, Polynomial> = [(var(0), img1), (var(3), img2)].into_iter().collect();
        prop_assert_eq!((&p * &q).substitute(&assign), &p.substitute(&assign) * &q.substitute(&assign));
        prop_assert_eq!((&p + &q).substitute(&assign), &p.substitute(&assign) + &q.substitute(&assign));
    }

    #[test]
    fn truncation_splits_by_degree(p in poly(), k in 1u64..4) {
        let low = p.truncate_min_degree(Alphabet::X, k);
        let high = &p - &low;
        prop_assert!(low.terms().all(|(m, _)| m.degree_in(Alphabet::X) < k));
        prop_assert!(high.terms().all(|(m, _)| m.degree_in(Alphabet::X) >= k));
    }

    #[test]
    fn text_and_json_roundtrip(p in poly()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<Polynomial>().unwrap(), p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Polynomial>(&json).unwrap(), p);
    }
}

#[test]
fn product_example_against_dense_oracle() {
    let p: Polynomial = "+1*x1 +1*x2".parse().unwrap();
    let q: Polynomial = "+1*x1 -1*x2".parse().unwrap();
    assert_eq!((&p * &q).to_string(), "+1*x1^2 -1*x2^2");
    let dense = dense_mul(&p, &q);
    assert_eq!(dense.len(), 2);
    assert_eq!(dense[&vec![2, 0, 0, 0, 0, 0]], BigInt::from(1));
    assert_eq!(dense[&vec![0, 2, 0, 0, 0, 0]], BigInt::from(-1));
}
