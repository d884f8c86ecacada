//! The six λ-ring axioms, evaluated on samples.

use super::{evaluate, LambdaRing, Samples};
use crate::report::{Checker, VerificationReport, Witness};
use crate::universal::UniversalTable;

/// Runs axioms (1)–(4) for `n ≤ max_n`, axiom (5) for `n` up to the product
/// cap and axiom (6) for `nm` up to the composition cap. Axioms (1), (2) and
/// (6) visit every element, (4) and (5) every sampled pair, (3) the unit.
///
/// Stops at the first counterexample, whose witness names the axiom.
pub fn check_lambda_axioms<R: LambdaRing>(
    ring: &R,
    table: &UniversalTable,
    samples: &Samples<R::Elem>,
    max_n: u32,
) -> VerificationReport {
    let caps = *table.caps();
    let mut c = Checker::new("lambda-axioms")
        .param("ring", ring.describe())
        .param("n_max", max_n)
        .param("product_cap", caps.product)
        .param("composition_cap", caps.composition)
        .param("elements", samples.len())
        .param("pairs", samples.pair_count());
    let depth = max_n.max(caps.product).max(caps.composition);
    let series: Vec<Vec<R::Elem>> = samples.elems().iter().map(|x| ring.lambda_series(x, depth)).collect();
    let one = ring.one();

    for (x, lam) in samples.elems().iter().zip(&series) {
        c.expect(lam[0] == one, || Witness::new(&lam[0], &one).input("axiom", 1).input("n", 0).input("x", x));
        if lam.len() > 1 {
            c.expect(lam[1] == *x, || Witness::new(&lam[1], x).input("axiom", 2).input("n", 1).input("x", x));
        }
        if c.failed() {
            return c.finish();
        }
    }

    let zero = ring.zero();
    let lam_one = ring.lambda_series(&one, max_n);
    for n in 2..=max_n as usize {
        c.expect(lam_one[n] == zero, || Witness::new(&lam_one[n], &zero).input("axiom", 3).input("n", n).input("x", &one));
    }
    if c.failed() {
        return c.finish();
    }

    let elems = samples.elems();
    for &(i, j) in samples.pair_indices() {
        let (x, y, lx, ly) = (&elems[i], &elems[j], &series[i], &series[j]);
        let sum = ring.lambda_series(&ring.add(x, y), max_n);
        for n in 0..=max_n as usize {
            let rhs = (0..=n).fold(ring.zero(), |acc, i| ring.add(&acc, &ring.mul(&lx[i], &ly[n - i])));
            c.expect(sum[n] == rhs, || {
                Witness::new(&sum[n], &rhs).input("axiom", 4).input("n", n).input("x", x).input("y", y)
            });
        }
        if c.failed() {
            return c.finish();
        }
    }

    for &(i, j) in samples.pair_indices() {
        let (x, y, lx, ly) = (&elems[i], &elems[j], &series[i], &series[j]);
        let prod = ring.lambda_series(&ring.mul(x, y), caps.product);
        for n in 1..=caps.product {
            let Some(p) = table.p(n) else { break };
            let rhs = evaluate(ring, p, &lx[1..], &ly[1..]);
            c.expect(prod[n as usize] == rhs, || {
                Witness::new(&prod[n as usize], &rhs).input("axiom", 5).input("n", n).input("x", x).input("y", y)
            });
        }
        if c.failed() {
            return c.finish();
        }
    }

    for (x, lam) in samples.elems().iter().zip(&series) {
        for m in 1..=caps.composition {
            let outer = ring.lambda_series(&lam[m as usize], caps.composition / m);
            for n in 1..=caps.composition / m {
                let Some(p) = table.pnm(n, m) else { continue };
                let rhs = evaluate(ring, p, &lam[1..], &[]);
                c.expect(outer[n as usize] == rhs, || {
                    Witness::new(&outer[n as usize], &rhs).input("axiom", 6).input("n", n).input("m", m).input("x", x)
                });
            }
        }
        if c.failed() {
            return c.finish();
        }
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::lambda::{binomial_samples, group_ring_samples, BinomialInt, LineGroupRing};
    use crate::universal::{Caps, Generator};

    fn table(product: u32, composition: u32) -> UniversalTable {
        UniversalTable::build(&Generator::new(Caps { product, composition, newton: 2 }, None)).unwrap()
    }

    /// Integers with `λ^2` forced to zero.
    struct NoSecondPower;

    impl LambdaRing for NoSecondPower {
        type Elem = BigInt;
        fn describe(&self) -> String {
            "binomial-int-without-lambda2".into()
        }
        fn zero(&self) -> BigInt {
            BinomialInt.zero()
        }
        fn one(&self) -> BigInt {
            BinomialInt.one()
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
            if n == 2 {
                BigInt::from(0)
            } else {
                BinomialInt.lambda(n, x)
            }
        }
        fn divisible_by(&self, x: &BigInt, p: u32) -> bool {
            BinomialInt.divisible_by(x, p)
        }
    }

    #[test]
    fn binomial_integers_pass() {
        let r = check_lambda_axioms(&BinomialInt, &table(3, 4), &binomial_samples(-3, 5), 4);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn cyclic_group_ring_passes() {
        let ring = LineGroupRing::cyclic(3);
        let samples = group_ring_samples(&ring, 2, 40, 120, 0);
        let r = check_lambda_axioms(&ring, &table(3, 4), &samples, 4);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn corrupted_lambda_fails_at_additivity() {
        let r = check_lambda_axioms(&NoSecondPower, &table(2, 2), &binomial_samples(0, 2), 3);
        assert!(!r.passed());
        let w = r.witness.unwrap();
        assert_eq!(w.inputs["axiom"], "4");
        assert_eq!(w.inputs["n"], "2");
        assert_eq!((w.inputs["x"].as_str(), w.inputs["y"].as_str()), ("1", "1"));
        assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("0", "1"));
    }
}
