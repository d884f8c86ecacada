//! Acceptance criteria, one printed PASS/FAIL line each. All comparisons are
//! exact.

use std::process::Command;
use std::time::{Duration, Instant};

use lamod_core::intpoly::{Alphabet, Monomial, Polynomial, Var};
use lamod_core::lambda::{
    binomial_samples, check_adams_properties, check_adams_routes, check_lambda_axioms, group_ring_samples,
    BinomialInt, LambdaRing, LineGroupRing,
};
use lamod_core::lambda_module::check_sign_identity;
use lamod_core::report::VerificationReport;
use lamod_core::suite::{self, ModuleSpec, RingSpec, RunConfig, Suite, FROBENIUS_PRIMES};
use lamod_core::universal::{
    check_linearity_lemma, check_newton_identity, check_newton_routes, check_product_routes, coefficient_sum,
    linear_part, Caps, Generator, UniversalId, UniversalTable,
};
use num_bigint::BigInt;

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn from_reports<'a>(reports: impl IntoIterator<Item = &'a VerificationReport>) -> Outcome {
        let mut cases = 0;
        let mut checks = 0;
        for r in reports {
            checks += 1;
            cases += r.cases;
            if !r.passed() {
                return Outcome { ok: false, detail: r.to_string() };
            }
        }
        Outcome { ok: checks > 0, detail: format!("{checks} checks, {cases} cases") }
    }

    fn timed(self, elapsed: Duration, limit: Duration) -> Outcome {
        let within = elapsed < limit;
        Outcome {
            ok: self.ok && within,
            detail: format!("{}; {:.3?} (limit {:?})", self.detail, elapsed, limit),
        }
    }

    fn fail(detail: impl Into<String>) -> Outcome {
        Outcome { ok: false, detail: detail.into() }
    }
}

fn generator() -> Generator {
    Generator::new(Caps::default(), None)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let report = check_newton_routes(8);
    Outcome::from_reports([&report]).timed(start.elapsed(), Duration::from_secs(10))
}

fn criterion_2() -> Outcome {
    let reports: Vec<_> = (1..=8).map(check_newton_identity).collect();
    Outcome::from_reports(&reports)
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let report = check_product_routes(4);
    Outcome::from_reports([&report]).timed(start.elapsed(), Duration::from_secs(120))
}

fn criterion_4() -> Outcome {
    let gen = generator();
    for n in 1..=4 {
        let sum = coefficient_sum(&gen.get(UniversalId::P(n)).unwrap());
        let expected = BigInt::from(if n == 1 { 1 } else { 0 });
        if sum != expected {
            return Outcome::fail(format!("P_{n}: coefficient sum {sum}, expected {expected}"));
        }
    }
    Outcome { ok: true, detail: "sums 1, 0, 0, 0 for n = 1..4".into() }
}

fn composition_pairs() -> Vec<(u32, u32)> {
    (1..=8).flat_map(|n| (1..=8 / n).map(move |m| (n, m))).collect()
}

fn criterion_5() -> Outcome {
    let gen = generator();
    let mut zeros = Vec::new();
    for (n, m) in composition_pairs() {
        let sum = coefficient_sum(&gen.get(UniversalId::Pnm(n, m)).unwrap());
        let expected = BigInt::from(if m % 2 == 1 || n == 1 { 1 } else { 0 });
        if sum != expected {
            return Outcome::fail(format!("P_{{{n},{m}}}: coefficient sum {sum}, expected {expected}"));
        }
        if expected == BigInt::from(0) {
            zeros.push(format!("({n},{m})"));
        }
    }
    Outcome { ok: true, detail: format!("{} pairs; zero sums at {}", composition_pairs().len(), zeros.join(" ")) }
}

fn criterion_6() -> Outcome {
    let gen = generator();
    let negative = [(2, 2), (2, 4), (4, 2)];
    for (n, m) in composition_pairs() {
        let c = if negative.contains(&(n, m)) { -1 } else { 1 };
        let expected = Polynomial::term(Monomial::var(Var::s(n * m)), c);
        let linear = linear_part(&gen.get(UniversalId::Pnm(n, m)).unwrap(), Alphabet::S);
        if linear != expected {
            return Outcome::fail(format!("P_{{{n},{m}}}: linear part {linear}, expected {expected}"));
        }
    }
    Outcome { ok: true, detail: "c = -1 exactly at (2,2) (2,4) (4,2); no other linear terms".into() }
}

fn criterion_7() -> Outcome {
    let gen = generator();
    let reports: Vec<_> = (1..=4).map(|n| check_linearity_lemma(n, &gen)).collect();
    Outcome::from_reports(&reports)
}

/// Integers `[−5, 5]` with every pair, `Z[Z/2]` over its whole coefficient
/// box `[−2, 2]`, `Z[Z/2 × Z/3]` over 150 elements of that box.
fn criterion_8(table: &UniversalTable) -> Outcome {
    let z2 = LineGroupRing::cyclic(2);
    let z6 = LineGroupRing::new(vec![2, 3]).unwrap();
    let reports = [
        check_lambda_axioms(&BinomialInt, table, &binomial_samples(-5, 5), 6),
        check_lambda_axioms(&z2, table, &group_ring_samples(&z2, 2, 625, 625, 0), 6),
        check_lambda_axioms(&z6, table, &group_ring_samples(&z6, 2, 150, 400, 0), 6),
    ];
    let mut out = Outcome::from_reports(&reports);
    let control = check_lambda_axioms(&NoSecondPower, table, &binomial_samples(0, 2), 6);
    match &control.witness {
        Some(w) if w.inputs.get("axiom").map(String::as_str) == Some("4") => {
            out.detail.push_str(&format!("; negative control fails at axiom 4 with x={}, y={}", w.inputs["x"], w.inputs["y"]));
        }
        _ => return Outcome::fail(format!("negative control did not fail at axiom 4: {control}")),
    }
    out
}

fn criterion_9(table: &UniversalTable) -> Outcome {
    let z2 = LineGroupRing::cyclic(2);
    let z6 = LineGroupRing::new(vec![2, 3]).unwrap();
    let ints = binomial_samples(-10, 10);
    let s2 = group_ring_samples(&z2, 2, 625, 625, 0);
    let s6 = group_ring_samples(&z6, 2, 150, 400, 0);
    let reports = [
        check_adams_routes(&BinomialInt, table, &ints, 6),
        check_adams_routes(&z2, table, &s2, 6),
        check_adams_routes(&z6, table, &s6, 6),
        check_adams_properties(&BinomialInt, &ints, 6, &FROBENIUS_PRIMES),
        check_adams_properties(&z2, &s2, 6, &FROBENIUS_PRIMES),
        check_adams_properties(&z6, &s6, 6, &FROBENIUS_PRIMES),
    ];
    Outcome::from_reports(&reports)
}

fn criterion_10(gen: &Generator) -> Outcome {
    let config = RunConfig { seed: 0, rings: RingSpec::default_roster(), modules: vec![ModuleSpec::Adams] };
    let report = match suite::run(Suite::Module, &config, gen) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(e.to_string()),
    };
    for ring in RingSpec::default_roster() {
        let ring = ring.to_string();
        for check in ["graded-lambda-axioms", "graded-semilinearity", "graded-composition-sign", "module-extraction"] {
            let found = report.reports.iter().find(|r| r.check == check && r.params.get("ring") == Some(&ring));
            let Some(found) = found else {
                return Outcome::fail(format!("{check} missing for {ring}"));
            };
            if check == "graded-lambda-axioms" && found.params["elements"].parse::<usize>().unwrap() < 100 {
                return Outcome::fail(format!("fewer than 100 graded elements for {ring}"));
            }
        }
    }
    Outcome::from_reports(&report.reports)
}

fn criterion_11() -> Outcome {
    let start = Instant::now();
    let report = check_sign_identity(20);
    let elapsed = start.elapsed();
    Outcome::from_reports([&report]).timed(elapsed, Duration::from_millis(1))
}

fn check_all_json(extra: &[&str]) -> (Vec<u8>, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_lamod"))
        .args(["check", "all", "--output", "json"])
        .args(extra)
        .env_remove("LAMOD_CACHE_DIR")
        .output()
        .expect("run lamod");
    assert!(out.status.success(), "check all failed: {}", String::from_utf8_lossy(&out.stdout));
    (out.stdout, start.elapsed())
}

fn criterion_12() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let (first, _) = check_all_json(&[]);
    let (second, _) = check_all_json(&[]);
    let (cold, cold_time) = check_all_json(&["--cache-dir", cache]);
    let (warm, warm_time) = check_all_json(&["--cache-dir", cache]);
    if first != second {
        return Outcome::fail("two runs differ");
    }
    if cold != first || warm != first {
        return Outcome::fail("cache changed the report");
    }
    Outcome {
        ok: true,
        detail: format!("{} bytes identical across 4 runs; cold {cold_time:.2?}, warm {warm_time:.2?}", first.len()),
    }
}

/// Integers with `λ^2` forced to zero.
struct NoSecondPower;

impl LambdaRing for NoSecondPower {
    type Elem = BigInt;
    fn describe(&self) -> String {
        "binomial-int-without-lambda2".into()
    }
    fn zero(&self) -> BigInt {
        BigInt::from(0)
    }
    fn one(&self) -> BigInt {
        BigInt::from(1)
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
fn acceptance() {
    let gen = generator();
    let table = UniversalTable::build(&gen).unwrap();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("Q route agreement, n = 1..8", Box::new(criterion_1)),
        ("Newton identity, k = 1..8", Box::new(criterion_2)),
        ("P_n route agreement, n = 1..4", Box::new(criterion_3)),
        ("coefficient sums of P_n", Box::new(criterion_4)),
        ("coefficient sums of P_{n,m}, nm <= 8", Box::new(criterion_5)),
        ("linear part of P_{n,m}, nm <= 8", Box::new(criterion_6)),
        ("P_n modulo T-degree 2 is Q_n t_n, n = 1..4", Box::new(criterion_7)),
        ("lambda-ring axioms on the instances", Box::new(|| criterion_8(&table))),
        ("Adams operations: three routes and Frobenius", Box::new(|| criterion_9(&table))),
        ("graded square-zero ring and module extraction", Box::new(|| criterion_10(&gen))),
        ("sign identity, r, s <= 20", Box::new(criterion_11)),
        ("deterministic reports, cache-independent", Box::new(criterion_12)),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = run();
        let status = if outcome.ok { "PASS" } else { "FAIL" };
        println!("{status} criterion {:>2}: {name} ({})", i + 1, outcome.detail);
        if !outcome.ok {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
