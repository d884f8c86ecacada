//! Coefficient-level verification of the universal polynomials.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::{
    composition_p_alternate, composition_p_definition, newton_q_definition, newton_q_recursive,
    product_expansion, product_p_alternate, product_p_definition, Generator, UniversalError, UniversalId,
};
use crate::intpoly::{Alphabet, Polynomial, Var};
use crate::report::{Checker, VerificationReport, Witness};
use crate::symfun::{elementary_assignment, VarSet};

/// `c(n, m) = −1` if `n` and `m` are both even, `+1` otherwise.
pub fn composition_sign(n: u32, m: u32) -> i32 {
    if n % 2 == 0 && m % 2 == 0 {
        -1
    } else {
        1
    }
}

fn error_witness(id: UniversalId, e: &UniversalError) -> Witness {
    Witness::new("generation failed", e).input("poly", id)
}

fn route_case(checker: &mut Checker, id: UniversalId, routes: Result<(Polynomial, Polynomial), UniversalError>) {
    match routes {
        Ok((def, alt)) => {
            let ok = def == alt;
            checker.expect(ok, || Witness::new(&def, &alt).input("poly", id));
        }
        Err(e) => checker.fail(error_witness(id, &e)),
    }
}

/// Symmetrized power sum against the Newton recursion, `n = 1..=max_n`.
pub fn check_newton_routes(max_n: u32) -> VerificationReport {
    let mut c = Checker::new("newton-q-routes").param("n_max", max_n);
    match newton_q_recursive(max_n.max(1)) {
        Ok(rec) => {
            for n in 1..=max_n {
                let routes = newton_q_definition(n).map(|d| (d, rec[(n - 1) as usize].clone()));
                route_case(&mut c, UniversalId::Q(n), routes);
            }
        }
        Err(e) => c.fail(error_witness(UniversalId::Q(max_n), &e)),
    }
    c.finish()
}

/// `h(t)` with a two-alphabet rewrite against `h̃(t)` with an `X`-only
/// rewrite, `n = 1..=max_n`.
pub fn check_product_routes(max_n: u32) -> VerificationReport {
    let mut c = Checker::new("product-p-routes").param("n_max", max_n);
    for n in 1..=max_n {
        let routes = product_p_definition(n).and_then(|d| Ok((d, product_p_alternate(n)?)));
        route_case(&mut c, UniversalId::P(n), routes);
    }
    c.finish()
}

/// Series-product expansion against incremental `e_n` accumulation, all
/// `nm ≤ max_nm`.
pub fn check_composition_routes(max_nm: u32) -> VerificationReport {
    let mut c = Checker::new("composition-p-routes").param("nm_max", max_nm);
    for (n, m) in composition_params(max_nm) {
        let routes = composition_p_definition(n, m).and_then(|d| Ok((d, composition_p_alternate(n, m)?)));
        route_case(&mut c, UniversalId::Pnm(n, m), routes);
    }
    c.finish()
}

fn composition_params(max_nm: u32) -> impl Iterator<Item = (u32, u32)> {
    (1..=max_nm).flat_map(move |n| (1..=max_nm / n).map(move |m| (n, m)))
}

fn all_ids(gen: &Generator) -> Vec<UniversalId> {
    let caps = gen.caps();
    let mut ids: Vec<UniversalId> = (1..=caps.newton).map(UniversalId::Q).collect();
    ids.extend((1..=caps.product).map(UniversalId::P));
    ids.extend(composition_params(caps.composition).map(|(n, m)| UniversalId::Pnm(n, m)));
    ids
}

fn with_body(c: &mut Checker, gen: &Generator, id: UniversalId, f: impl FnOnce(&mut Checker, &Polynomial)) {
    match gen.get(id) {
        Ok(u) => f(c, &u.body),
        Err(e) => c.fail(error_witness(id, &e)),
    }
}

fn caps_params(c: Checker, gen: &Generator) -> Checker {
    let caps = gen.caps();
    c.param("newton_cap", caps.newton)
        .param("product_cap", caps.product)
        .param("composition_cap", caps.composition)
}

/// Isobaric weight invariant for everything within the caps.
pub fn check_isobaric_weights(gen: &Generator) -> VerificationReport {
    let mut c = caps_params(Checker::new("isobaric-weights"), gen);
    for id in all_ids(gen) {
        with_body(&mut c, gen, id, |c, body| {
            c.expect(id.weights_hold(body), || Witness::new(body, "isobaric").input("poly", id));
        });
    }
    c.finish()
}

/// Substituting elementary polynomials back into `P_n` reproduces the `t^n`
/// coefficient of `Π (1 + x_i y_j t)` in `n + n` variables.
pub fn check_product_specialization(gen: &Generator) -> VerificationReport {
    let max_n = gen.caps().product;
    let mut c = Checker::new("product-p-specialization").param("n_max", max_n);
    for n in 1..=max_n {
        with_body(&mut c, gen, UniversalId::P(n), |c, body| {
            let mut assign: HashMap<Var, Polynomial> = elementary_assignment(VarSet::x(n));
            assign.extend(elementary_assignment(VarSet::y(n)));
            let lhs = body.substitute(&assign);
            let rhs = product_expansion(n);
            c.expect(lhs == rhs, || Witness::new(&lhs, &rhs).input("n", n));
        });
    }
    c.finish()
}

/// `P_{1,m} = s_m` for every generated `m`.
pub fn check_composition_unit(gen: &Generator) -> VerificationReport {
    let max_m = gen.caps().composition;
    let mut c = Checker::new("composition-p-unit").param("m_max", max_m);
    for m in 1..=max_m {
        with_body(&mut c, gen, UniversalId::Pnm(1, m), |c, body| {
            let expected = Polynomial::var(Var::s(m));
            c.expect(*body == expected, || Witness::new(body, &expected).input("m", m));
        });
    }
    c.finish()
}

/// Coefficient sum of `P_n` is 1 for `n = 1` and 0 for `n > 1`.
pub fn check_product_coefficient_sums(gen: &Generator) -> VerificationReport {
    let max_n = gen.caps().product;
    let mut c = Checker::new("product-p-coefficient-sum").param("n_max", max_n);
    for n in 1..=max_n {
        with_body(&mut c, gen, UniversalId::P(n), |c, body| {
            let expected = BigInt::from(u8::from(n == 1));
            let got = body.coefficient_sum();
            c.expect(got == expected, || Witness::new(&got, &expected).input("n", n));
        });
    }
    c.finish()
}

/// Coefficient sum of `P_{n,m}` is 1 if `m` is odd or `n = 1`, else 0.
pub fn check_composition_coefficient_sums(gen: &Generator) -> VerificationReport {
    let max_nm = gen.caps().composition;
    let mut c = Checker::new("composition-p-coefficient-sum").param("nm_max", max_nm);
    for (n, m) in composition_params(max_nm) {
        with_body(&mut c, gen, UniversalId::Pnm(n, m), |c, body| {
            let expected = BigInt::from(u8::from(m % 2 == 1 || n == 1));
            let got = body.coefficient_sum();
            c.expect(got == expected, || Witness::new(&got, &expected).input("n", n).input("m", m));
        });
    }
    c.finish()
}

fn composition_linear_case(c: &mut Checker, gen: &Generator, n: u32, m: u32) {
    with_body(c, gen, UniversalId::Pnm(n, m), |c, body| {
        let linear = body.truncate_min_degree(Alphabet::S, 2);
        let expected = Polynomial::var(Var::s(n * m)).scale(&BigInt::from(composition_sign(n, m)));
        c.expect(linear == expected, || Witness::new(&linear, &expected).input("n", n).input("m", m));
    });
}

/// The part of `P_{n,m}` linear in `S` is exactly `c·s_{nm}`.
pub fn check_composition_linear(n: u32, m: u32, gen: &Generator) -> VerificationReport {
    let mut c = Checker::new("composition-p-linear-part").param("n", n).param("m", m);
    composition_linear_case(&mut c, gen, n, m);
    c.finish()
}

fn linearity_case(c: &mut Checker, gen: &Generator, n: u32) {
    let p = match gen.get(UniversalId::P(n)) {
        Ok(u) => u.body,
        Err(e) => return c.fail(error_witness(UniversalId::P(n), &e)),
    };
    let q = match gen.get(UniversalId::Q(n)) {
        Ok(u) => u.body,
        Err(e) => return c.fail(error_witness(UniversalId::Q(n), &e)),
    };
    // t_i t_j = 0 and t_i^k = 0 (k > 1) kill every T-degree ≥ 2 monomial.
    let reduced = p.truncate_min_degree(Alphabet::T, 2);
    let expected = &q * &Polynomial::var(Var::t(n));
    c.expect(reduced == expected, || {
        Witness::new(&reduced, &expected).input("n", n).input("difference", &reduced - &expected)
    });
}

/// `P_n` modulo `T`-degree ≥ 2 equals `Q_n·t_n`.
pub fn check_linearity_lemma(n: u32, gen: &Generator) -> VerificationReport {
    let mut c = Checker::new("product-p-linearity").param("n", n);
    linearity_case(&mut c, gen, n);
    c.finish()
}

fn newton_identity_case(c: &mut Checker, qs: &[Polynomial], k: u32) {
    let s = |i: u32| Polynomial::var(Var::s(i));
    let mut lhs = qs[(k - 1) as usize].clone();
    for i in 1..k {
        let term = &s(i) * &qs[(k - i - 1) as usize];
        if i % 2 == 1 {
            lhs -= &term;
        } else {
            lhs += &term;
        }
    }
    let sign = if k % 2 == 1 { 1 } else { -1 };
    let rhs = s(k).scale(&BigInt::from(sign * i64::from(k)));
    c.expect(lhs == rhs, || Witness::new(&lhs, &rhs).input("k", k));
}

/// `Q_k − s_1Q_{k−1} + ⋯ + (−1)^{k−1}s_{k−1}Q_1 = (−1)^{k+1}·k·s_k`, with the
/// `Q_i` taken from the symmetrization route only.
pub fn check_newton_identity(k: u32) -> VerificationReport {
    let mut c = Checker::new("newton-identity").param("k", k);
    newton_identities(&mut c, k);
    c.finish()
}

fn newton_identities(c: &mut Checker, max_k: u32) {
    let qs: Result<Vec<Polynomial>, _> = (1..=max_k).map(newton_q_definition).collect();
    match qs {
        Ok(qs) => {
            for k in 1..=max_k {
                newton_identity_case(c, &qs, k);
            }
        }
        Err(e) => c.fail(error_witness(UniversalId::Q(max_k), &e)),
    }
}

/// Every universal-polynomial check at the generator's caps, sorted.
pub fn universal_suite(gen: &Generator) -> Vec<VerificationReport> {
    let caps = *gen.caps();
    let mut out = vec![
        check_newton_routes(caps.newton),
        check_product_routes(caps.product),
        check_composition_routes(caps.composition),
        check_isobaric_weights(gen),
        check_product_specialization(gen),
        check_composition_unit(gen),
        check_product_coefficient_sums(gen),
        check_composition_coefficient_sums(gen),
    ];

    let mut c = Checker::new("composition-p-linear-part").param("nm_max", caps.composition);
    for (n, m) in composition_params(caps.composition) {
        composition_linear_case(&mut c, gen, n, m);
    }
    out.push(c.finish());

    let mut c = Checker::new("product-p-linearity").param("n_max", caps.product);
    for n in 1..=caps.product.min(caps.newton) {
        linearity_case(&mut c, gen, n);
    }
    out.push(c.finish());

    let mut c = Checker::new("newton-identity").param("k_max", caps.newton);
    newton_identities(&mut c, caps.newton);
    out.push(c.finish());

    crate::report::sort_reports(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universal::Caps;

    fn gen() -> Generator {
        Generator::new(Caps { product: 3, composition: 6, newton: 6 }, None)
    }

    #[test]
    fn sign_table() {
        assert_eq!(composition_sign(2, 2), -1);
        assert_eq!(composition_sign(2, 3), 1);
        assert_eq!(composition_sign(1, 4), 1);
        assert_eq!(composition_sign(4, 2), -1);
    }

    #[test]
    fn lemma_checks_pass() {
        let g = gen();
        for n in 1..=3 {
            assert!(check_linearity_lemma(n, &g).passed(), "n={n}");
        }
        assert!(check_composition_linear(2, 2, &g).passed());
        assert!(check_composition_linear(2, 3, &g).passed());
        for k in 1..=4 {
            assert!(check_composition_linear(1, k, &g).passed());
        }
        for k in 1..=6 {
            assert!(check_newton_identity(k).passed());
        }
    }

    #[test]
    fn suite_is_sorted_and_green() {
        let reports = universal_suite(&gen());
        assert_eq!(reports.len(), 11);
        assert!(reports.windows(2).all(|w| w[0].check <= w[1].check));
        for r in &reports {
            assert!(r.passed(), "{r}");
            assert!(r.cases > 0, "{r}");
        }
    }

    #[test]
    fn cap_errors_surface_as_failures() {
        let g = Generator::new(Caps { product: 1, composition: 1, newton: 1 }, None);
        let r = check_linearity_lemma(2, &g);
        assert!(!r.passed());
        assert!(r.witness.is_some());
    }
}
