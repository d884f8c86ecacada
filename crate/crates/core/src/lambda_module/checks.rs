//! Verification of λ-modules and of the graded square-zero λ-ring built on
//! them.

use super::{extract_module, GradedElem, GradedRing, LambdaModule, RingElem};
use crate::lambda::{adams_series, check_lambda_axioms, pick_pairs, LambdaRing, Samples};
use crate::report::{Checker, VerificationReport, Witness};
use crate::universal::UniversalTable;

pub use crate::universal::composition_sign;

fn module_params(c: Checker, graded_or_module: (&str, &str), width: Option<usize>) -> Checker {
    let c = c.param("ring", graded_or_module.0).param("module", graded_or_module.1);
    match width {
        Some(d) => c.param("width", d),
        None => c,
    }
}

fn graded_params<M: LambdaModule>(c: Checker, graded: &GradedRing<M>) -> Checker {
    module_params(c, (&graded.base_ring().describe(), &graded.module().describe()), Some(graded.width()))
}

/// Module axioms on `module`, recorded into `c`: `λ_{M,1} = id`,
/// `λ_{M,n} λ_{M,m} = λ_{M,nm}` and semilinearity for `n, nm ≤ max_n`, and
/// additivity of every `λ_{M,n}`.
fn module_axiom_cases<M: LambdaModule>(
    c: &mut Checker,
    module: &M,
    scalars: &[RingElem<M>],
    elems: &Samples<M::Elem>,
    max_n: u32,
    seed: u64,
) {
    let ring = module.ring();
    let series: Vec<Vec<M::Elem>> = elems.elems().iter().map(|x| module.lambda_m_series(x, max_n)).collect();
    for (x, ser) in elems.elems().iter().zip(&series) {
        c.expect(ser[0] == *x, || Witness::new(&ser[0], x).input("axiom", "identity").input("x", x));
        for m in 2..=max_n / 2 {
            let outer = module.lambda_m_series(&ser[m as usize - 1], max_n / m);
            for n in 2..=max_n / m {
                let (lhs, rhs) = (&outer[n as usize - 1], &ser[(n * m) as usize - 1]);
                c.expect(lhs == rhs, || {
                    Witness::new(lhs, rhs).input("axiom", "composition").input("n", n).input("m", m).input("x", x)
                });
            }
        }
        if c.failed() {
            return;
        }
    }
    let items = elems.elems();
    for &(i, j) in elems.pair_indices() {
        let sum = module.lambda_m_series(&module.add(&items[i], &items[j]), max_n);
        for n in 1..=max_n as usize {
            let rhs = module.add(&series[i][n - 1], &series[j][n - 1]);
            c.expect(sum[n - 1] == rhs, || {
                Witness::new(&sum[n - 1], &rhs)
                    .input("axiom", "additive")
                    .input("n", n)
                    .input("x", &items[i])
                    .input("y", &items[j])
            });
        }
        if c.failed() {
            return;
        }
    }
    let psi: Vec<Vec<RingElem<M>>> = scalars.iter().map(|a| adams_series(ring, a, max_n)).collect();
    for (i, j) in pick_pairs(scalars.len(), items.len(), elems.pair_count(), seed) {
        let (a, x) = (&scalars[i], &items[j]);
        let lhs = module.lambda_m_series(&module.act(a, x), max_n);
        for n in 1..=max_n as usize {
            let rhs = module.act(&psi[i][n - 1], &series[j][n - 1]);
            c.expect(lhs[n - 1] == rhs, || {
                Witness::new(&lhs[n - 1], &rhs).input("axiom", "semilinear").input("n", n).input("a", a).input("x", x)
            });
        }
        if c.failed() {
            return;
        }
    }
}

/// The λ-module axioms on samples of scalars and module elements.
pub fn check_module_axioms<M: LambdaModule>(
    module: &M,
    scalars: &[RingElem<M>],
    elems: &Samples<M::Elem>,
    max_n: u32,
    seed: u64,
) -> VerificationReport {
    let mut c = module_params(Checker::new("module-axioms"), (&module.ring().describe(), &module.describe()), None)
        .param("n_max", max_n)
        .param("elements", elems.len());
    module_axiom_cases(&mut c, module, scalars, elems, max_n, seed);
    c.finish()
}

/// Reads `λ_{M,r} = (−1)^{r−1} λ^r` off every positive degree of `graded`,
/// checks the module axioms for it, and checks that it agrees with the
/// module the graded ring was built from.
pub fn check_module_extraction<M: LambdaModule + Clone>(
    graded: &GradedRing<M>,
    scalars: &[RingElem<M>],
    elems: &Samples<M::Elem>,
    max_n: u32,
    seed: u64,
) -> VerificationReport {
    let mut c = graded_params(Checker::new("module-extraction"), graded)
        .param("n_max", max_n)
        .param("elements", elems.len());
    for k in 1..=graded.width() {
        let extracted = extract_module(graded, k);
        module_axiom_cases(&mut c, &extracted, scalars, elems, max_n, seed);
        for x in elems.elems() {
            let (lhs, rhs) = (extracted.lambda_m_series(x, max_n), graded.module().lambda_m_series(x, max_n));
            for n in 0..max_n as usize {
                c.expect(lhs[n] == rhs[n], || {
                    Witness::new(&lhs[n], &rhs[n]).input("axiom", "roundtrip").input("n", n + 1).input("degree", k).input("x", x)
                });
            }
        }
        if c.failed() {
            break;
        }
    }
    c.finish()
}

/// The λ-ring axioms on the graded ring.
pub fn check_graded_lambda_ring<M: LambdaModule>(
    graded: &GradedRing<M>,
    table: &UniversalTable,
    samples: &Samples<GradedElem<M>>,
    max_n: u32,
) -> VerificationReport {
    let mut report = check_lambda_axioms(graded, table, samples, max_n);
    report.check = "graded-lambda-axioms".to_string();
    report.params.insert("ring".into(), graded.base_ring().describe());
    report.params.insert("module".into(), graded.module().describe());
    report.params.insert("width".into(), graded.width().to_string());
    report
}

/// `λ^r(a·x) = ψ^r(a) λ^r(x)` on every positive degree, `r ≤ max_r`, with
/// `a·x` the graded product `(a, 0)(0, x)`.
pub fn check_semilinearity<M: LambdaModule>(
    graded: &GradedRing<M>,
    scalars: &[RingElem<M>],
    elems: &Samples<M::Elem>,
    max_r: u32,
    seed: u64,
) -> VerificationReport {
    let mut c = graded_params(Checker::new("graded-semilinearity"), graded)
        .param("r_max", max_r)
        .param("elements", elems.len());
    let ring = graded.base_ring();
    let m = graded.module();
    let items = elems.elems();
    let psi: Vec<Vec<RingElem<M>>> = scalars.iter().map(|a| adams_series(ring, a, max_r)).collect();
    for k in 1..=graded.width() {
        let plain: Vec<Vec<GradedElem<M>>> =
            items.iter().map(|x| graded.lambda_series(&graded.embed(k, x.clone()), max_r)).collect();
        for (i, j) in pick_pairs(scalars.len(), items.len(), elems.pair_count(), seed) {
            let (a, x) = (&scalars[i], &items[j]);
            let ax = graded.mul(&graded.from_base(a.clone()), &graded.embed(k, x.clone()));
            let lhs = graded.lambda_series(&ax, max_r);
            for r in 1..=max_r as usize {
                let rhs = m.act(&psi[i][r - 1], &plain[j][r].parts[k - 1]);
                let lhs = &lhs[r].parts[k - 1];
                c.expect(*lhs == rhs, || {
                    Witness::new(lhs, &rhs).input("r", r).input("degree", k).input("a", a).input("x", x)
                });
            }
            if c.failed() {
                return c.finish();
            }
        }
    }
    c.finish()
}

/// `λ^r λ^s = c(r, s) λ^{rs}` on positive parts for `rs ≤ max_rs`.
pub fn check_composition_sign<M: LambdaModule>(
    graded: &GradedRing<M>,
    elems: &Samples<M::Elem>,
    max_rs: u32,
) -> VerificationReport {
    check_composition_sign_with(graded, elems, max_rs, "standard", composition_sign)
}

/// [`check_composition_sign`] against an arbitrary sign table, labelled
/// `table` in the report.
pub fn check_composition_sign_with<M: LambdaModule>(
    graded: &GradedRing<M>,
    elems: &Samples<M::Elem>,
    max_rs: u32,
    table: &str,
    sign: impl Fn(u32, u32) -> i32,
) -> VerificationReport {
    let mut c = graded_params(Checker::new("graded-composition-sign"), graded)
        .param("rs_max", max_rs)
        .param("sign_table", table)
        .param("elements", elems.len());
    for k in 1..=graded.width() {
        for x in elems.elems() {
            let ser = graded.lambda_series(&graded.embed(k, x.clone()), max_rs);
            for s in 1..=max_rs {
                let outer = graded.lambda_series(&ser[s as usize], max_rs / s);
                for r in 1..=max_rs / s {
                    let lhs = &outer[r as usize].parts[k - 1];
                    let target = &ser[(r * s) as usize].parts[k - 1];
                    let rhs = if sign(r, s) < 0 { graded.module().neg(target) } else { target.clone() };
                    c.expect(*lhs == rhs, || {
                        Witness::new(lhs, &rhs)
                            .input("r", r)
                            .input("s", s)
                            .input("c", sign(r, s))
                            .input("degree", k)
                            .input("x", x)
                    });
                }
            }
            if c.failed() {
                return c.finish();
            }
        }
    }
    c.finish()
}

fn minus_one_pow(e: u32) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `(−1)^{rs+1} = (−1)^{r+1} (−1)^{s+1} c(r, s)` for `1 ≤ r, s ≤ max`.
pub fn check_sign_identity(max: u32) -> VerificationReport {
    check_sign_identity_with(max, "standard", composition_sign)
}

pub fn check_sign_identity_with(max: u32, table: &str, sign: impl Fn(u32, u32) -> i32) -> VerificationReport {
    let mut c = Checker::new("sign-identity").param("max", max).param("sign_table", table);
    for r in 1..=max {
        for s in 1..=max {
            let lhs = minus_one_pow(r * s + 1);
            let rhs = minus_one_pow(r + 1) * minus_one_pow(s + 1) * i64::from(sign(r, s));
            c.expect(lhs == rhs, || Witness::new(lhs, rhs).input("r", r).input("s", s));
        }
    }
    c.finish()
}

/// `ψ^r((0, x)) = (−1)^{r+1} r λ^r((0, x))` for `r ≤ max_r`, with `ψ^r`
/// from Newton's formula on the graded ring.
pub fn check_graded_newton<M: LambdaModule>(
    graded: &GradedRing<M>,
    elems: &Samples<M::Elem>,
    max_r: u32,
) -> VerificationReport {
    let mut c = graded_params(Checker::new("graded-newton"), graded)
        .param("r_max", max_r)
        .param("elements", elems.len());
    for k in 1..=graded.width() {
        for x in elems.elems() {
            let e = graded.embed(k, x.clone());
            let lam = graded.lambda_series(&e, max_r);
            let psi = adams_series(graded, &e, max_r);
            for r in 1..=max_r {
                let scaled = graded.scale(r as i64 * minus_one_pow(r + 1), &lam[r as usize]);
                let lhs = &psi[r as usize - 1];
                c.expect(*lhs == scaled, || Witness::new(lhs, &scaled).input("r", r).input("degree", k).input("x", x));
            }
            if c.failed() {
                return c.finish();
            }
        }
    }
    c.finish()
}

/// λ-operations on `(a; x_1, …, x_d)` agree degree by degree with those on
/// `(a; x_k)` in the width-1 ring.
pub fn check_width_independence<M: LambdaModule + Clone>(
    module: &M,
    width: usize,
    scalars: &[RingElem<M>],
    elems: &Samples<M::Elem>,
    max_n: u32,
    seed: u64,
) -> VerificationReport {
    let narrow = GradedRing::new(module.clone(), 1);
    let wide = GradedRing::new(module.clone(), width);
    let mut c = graded_params(Checker::new("width-independence"), &wide)
        .param("n_max", max_n)
        .param("elements", elems.len());
    let items = elems.elems();
    for (i, j) in pick_pairs(scalars.len(), items.len(), elems.pair_count(), seed) {
        let a = &scalars[i];
        let parts: Vec<M::Elem> = (0..width).map(|k| items[(j + k) % items.len()].clone()).collect();
        let e = wide.element(a.clone(), parts.clone());
        let lhs = wide.lambda_series(&e, max_n);
        for (k, x) in parts.iter().enumerate() {
            let rhs = narrow.lambda_series(&narrow.element(a.clone(), vec![x.clone()]), max_n);
            for n in 0..=max_n as usize {
                let ok = lhs[n].base == rhs[n].base && lhs[n].parts[k] == rhs[n].parts[0];
                c.expect(ok, || Witness::new(&lhs[n], &rhs[n]).input("n", n).input("degree", k + 1).input("x", &e));
            }
        }
        if c.failed() {
            break;
        }
    }
    c.finish()
}
