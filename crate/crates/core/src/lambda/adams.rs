//! Adams operations and the negative-part recursion.

use num_bigint::BigInt;

use super::{evaluate, LambdaError, LambdaRing, Samples};
use crate::report::{Checker, VerificationReport, Witness};
use crate::universal::{UniversalId, UniversalTable};

/// `[λ^0(−y), …, λ^n(−y)]` from `[λ^0(y), …, λ^n(y)]`, using
/// `Σ_{i+j=n} λ^i(y) λ^j(−y) = 0` for `n ≥ 1`.
pub fn negative_series<R: LambdaRing>(ring: &R, lam: &[R::Elem]) -> Vec<R::Elem> {
    let mut out: Vec<R::Elem> = Vec::with_capacity(lam.len());
    out.push(ring.one());
    for n in 1..lam.len() {
        let sum = (1..=n).fold(ring.zero(), |acc, i| ring.add(&acc, &ring.mul(&lam[i], &out[n - i])));
        out.push(ring.neg(&sum));
    }
    out
}

/// `λ^n(−y)` computed from the λ-operations of `y` alone.
pub fn lambda_negative<R: LambdaRing>(ring: &R, y: &R::Elem, n: u32) -> R::Elem {
    negative_series(ring, &ring.lambda_series(y, n)).swap_remove(n as usize)
}

/// `[ψ^1, …, ψ^n]` from `[λ^0, …, λ^n]` by Newton's formula
/// `ψ^k = Σ_{i=1}^{k−1} (−1)^{i−1} λ^i ψ^{k−i} + (−1)^{k+1} k λ^k`.
pub fn adams_from_lambdas<R: LambdaRing>(ring: &R, lam: &[R::Elem]) -> Vec<R::Elem> {
    let mut psi: Vec<R::Elem> = Vec::with_capacity(lam.len().saturating_sub(1));
    for k in 1..lam.len() {
        let mut acc = ring.scale(k as i64, &lam[k]);
        if k % 2 == 0 {
            acc = ring.neg(&acc);
        }
        for i in 1..k {
            let term = ring.mul(&lam[i], &psi[k - i - 1]);
            acc = if i % 2 == 1 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
        }
        psi.push(acc);
    }
    psi
}

/// `[ψ^1(x), …, ψ^n(x)]` by Newton's formula.
pub fn adams_series<R: LambdaRing>(ring: &R, x: &R::Elem, n: u32) -> Vec<R::Elem> {
    adams_from_lambdas(ring, &ring.lambda_series(x, n))
}

pub fn adams_via_newton<R: LambdaRing>(ring: &R, n: u32, x: &R::Elem) -> R::Elem {
    assert!(n >= 1, "Adams operations are indexed from 1");
    adams_series(ring, x, n).swap_remove(n as usize - 1)
}

/// `ψ^n(x) = Q_n(λ^1(x), …, λ^n(x))`.
pub fn adams_via_q<R: LambdaRing>(
    ring: &R,
    table: &UniversalTable,
    n: u32,
    x: &R::Elem,
) -> Result<R::Elem, LambdaError> {
    let q = table.q(n).ok_or(LambdaError::MissingUniversal(UniversalId::Q(n)))?;
    let lam = ring.lambda_series(x, n);
    Ok(evaluate(ring, q, &lam[1..], &[]))
}

/// `ψ^n` through `Q_n`, through Newton's recursion and through the
/// instance's own oracle, for `n ≤ max_n` and every sampled element.
pub fn check_adams_routes<R: LambdaRing>(
    ring: &R,
    table: &UniversalTable,
    samples: &Samples<R::Elem>,
    max_n: u32,
) -> VerificationReport {
    let mut c = Checker::new("adams-routes")
        .param("ring", ring.describe())
        .param("n_max", max_n)
        .param("elements", samples.len());
    for x in samples.elems() {
        let lam = ring.lambda_series(x, max_n);
        let newton = adams_from_lambdas(ring, &lam);
        for n in 1..=max_n {
            let witness = |route: &str, lhs: &R::Elem, rhs: &R::Elem| {
                Witness::new(lhs, rhs).input("n", n).input("x", x).input("routes", route)
            };
            let via_newton = &newton[n as usize - 1];
            match table.q(n) {
                Some(q) => {
                    let via_q = evaluate(ring, q, &lam[1..=n as usize], &[]);
                    c.expect(via_q == *via_newton, || witness("q/newton", &via_q, via_newton));
                }
                None => c.fail(Witness::new(LambdaError::MissingUniversal(UniversalId::Q(n)), "").input("n", n)),
            }
            if let Some(oracle) = ring.adams_oracle(n, x) {
                c.expect(oracle == *via_newton, || witness("oracle/newton", &oracle, via_newton));
            }
        }
        if c.failed() {
            break;
        }
    }
    c.finish()
}

/// `ψ^1 = id`, additivity, multiplicativity, `ψ^n ψ^m = ψ^{nm}` for
/// `nm ≤ max_n`, and `ψ^p(a) ≡ a^p (mod p)` for the given primes.
pub fn check_adams_properties<R: LambdaRing>(
    ring: &R,
    samples: &Samples<R::Elem>,
    max_n: u32,
    primes: &[u32],
) -> VerificationReport {
    let primes_label: Vec<String> = primes.iter().map(u32::to_string).collect();
    let mut c = Checker::new("adams-properties")
        .param("ring", ring.describe())
        .param("n_max", max_n)
        .param("primes", primes_label.join(","))
        .param("elements", samples.len())
        .param("pairs", samples.pair_count());
    let depth = primes.iter().copied().fold(max_n, u32::max);
    for x in samples.elems() {
        let psi = adams_series(ring, x, depth);
        c.expect(psi[0] == *x, || Witness::new(&psi[0], x).input("property", "identity").input("x", x));
        for n in 2..=max_n {
            for m in 2..=max_n / n {
                let lhs = adams_via_newton(ring, n, &psi[m as usize - 1]);
                let rhs = &psi[(n * m) as usize - 1];
                c.expect(lhs == *rhs, || {
                    Witness::new(&lhs, rhs).input("property", "composition").input("n", n).input("m", m).input("x", x)
                });
            }
        }
        for &p in primes {
            let diff = ring.sub(&psi[p as usize - 1], &ring.pow(x, p));
            c.expect(ring.divisible_by(&diff, p), || {
                Witness::new(&diff, format!("divisible by {p}")).input("property", "frobenius").input("p", p).input("x", x)
            });
        }
        if c.failed() {
            return c.finish();
        }
    }
    for (x, y) in samples.pairs() {
        let px = adams_series(ring, x, max_n);
        let py = adams_series(ring, y, max_n);
        let sum = adams_series(ring, &ring.add(x, y), max_n);
        let prod = adams_series(ring, &ring.mul(x, y), max_n);
        for n in 1..=max_n as usize {
            let add = ring.add(&px[n - 1], &py[n - 1]);
            c.expect(sum[n - 1] == add, || {
                Witness::new(&sum[n - 1], &add).input("property", "additive").input("n", n).input("x", x).input("y", y)
            });
            let mul = ring.mul(&px[n - 1], &py[n - 1]);
            c.expect(prod[n - 1] == mul, || {
                Witness::new(&prod[n - 1], &mul).input("property", "multiplicative").input("n", n).input("x", x).input("y", y)
            });
        }
        if c.failed() {
            break;
        }
    }
    c.finish()
}

/// `λ^n(−x)` from the instance against the negative-part recursion, and
/// `λ^n(x + (−x)) = 0` for `1 ≤ n ≤ max_n`.
pub fn check_negation<R: LambdaRing>(ring: &R, samples: &Samples<R::Elem>, max_n: u32) -> VerificationReport {
    let mut c = Checker::new("lambda-negation")
        .param("ring", ring.describe())
        .param("n_max", max_n)
        .param("elements", samples.len());
    let zero = ring.zero();
    for x in samples.elems() {
        let lam = ring.lambda_series(x, max_n);
        let direct = ring.lambda_series(&ring.neg(x), max_n);
        let recursive = negative_series(ring, &lam);
        for n in 1..=max_n as usize {
            c.expect(direct[n] == recursive[n], || {
                Witness::new(&direct[n], &recursive[n]).input("n", n).input("x", x).input("identity", "negative")
            });
            let cancel = (0..=n).fold(ring.zero(), |acc, i| ring.add(&acc, &ring.mul(&lam[i], &direct[n - i])));
            c.expect(cancel == zero, || {
                Witness::new(&cancel, &zero).input("n", n).input("x", x).input("identity", "cancellation")
            });
        }
        if c.failed() {
            break;
        }
    }
    c.finish()
}

/// `λ^n(−1) = (−1)^n` for `n ≤ max_n`.
pub fn check_minus_one<R: LambdaRing>(ring: &R, max_n: u32) -> VerificationReport {
    let mut c = Checker::new("lambda-minus-one").param("ring", ring.describe()).param("n_max", max_n);
    let minus_one = ring.neg(&ring.one());
    let lam = ring.lambda_series(&minus_one, max_n);
    for (n, v) in lam.iter().enumerate() {
        let expected = ring.from_int(&BigInt::from(if n % 2 == 0 { 1 } else { -1 }));
        c.expect(*v == expected, || Witness::new(v, &expected).input("n", n));
    }
    c.finish()
}
