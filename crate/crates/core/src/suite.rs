//! The verification suites run by `lamod check`: instance descriptors,
//! default rosters and sample budgets, and the merged report.

use std::fmt;
use std::str::FromStr;
use std::thread;

use serde::Serialize;

use crate::lambda::{
    binomial_samples, check_adams_properties, check_adams_routes, check_lambda_axioms, check_minus_one,
    check_negation, group_ring_samples, BinomialInt, LambdaRing, LineGroupRing, ParseRingError, Samples,
};
use crate::lambda_module::{
    check_composition_sign, check_graded_lambda_ring, check_graded_newton, check_module_axioms,
    check_module_extraction, check_semilinearity, check_sign_identity, check_width_independence, graded_samples,
    AdamsModule, GradedRing, LambdaModule,
};
use crate::report::{sort_reports, Status, VerificationReport};
use crate::universal::{universal_suite, Caps, Generator, UniversalError, UniversalTable};

/// Primes for the Frobenius congruence `ψ^p(a) ≡ a^p (mod p)`.
pub const FROBENIUS_PRIMES: [u32; 3] = [2, 3, 5];
/// Largest `n` for axioms (1)–(4) and for the Adams checks.
pub const LAMBDA_MAX_N: u32 = 6;
/// Largest `n` for the negation and `λ^n(−1)` checks.
pub const NEGATION_MAX_N: u32 = 8;
/// Largest `r`, `rs` or `nm` for the graded-ring checks.
pub const GRADED_MAX_N: u32 = 8;
/// Largest `r` for semilinearity on the graded ring.
pub const SEMILINEAR_MAX_R: u32 = 6;
/// Bound for the sign identity.
pub const SIGN_IDENTITY_MAX: u32 = 20;
/// Width used by the truncation-independence check.
pub const WIDE_WIDTH: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Universal,
    Lambda,
    Module,
    All,
}

impl Suite {
    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Universal => "universal",
            Suite::Lambda => "lambda",
            Suite::Module => "module",
            Suite::All => "all",
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A λ-ring instance named on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingSpec {
    BinomialInt,
    LineGroupRing(LineGroupRing),
}

impl RingSpec {
    /// `binomial-int`, `line-group-ring:Z/2`, `line-group-ring:Z/2xZ/3`.
    pub fn default_roster() -> Vec<RingSpec> {
        vec![
            RingSpec::BinomialInt,
            RingSpec::LineGroupRing(LineGroupRing::cyclic(2)),
            RingSpec::LineGroupRing(LineGroupRing::new(vec![2, 3]).expect("valid group")),
        ]
    }
}

impl FromStr for RingSpec {
    type Err = ParseRingError;

    fn from_str(s: &str) -> Result<RingSpec, ParseRingError> {
        if s == "binomial-int" {
            return Ok(RingSpec::BinomialInt);
        }
        match s.strip_prefix("line-group-ring:") {
            Some(group) => Ok(RingSpec::LineGroupRing(group.parse()?)),
            None => Err(ParseRingError::UnknownRing(s.to_string())),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::BinomialInt => f.write_str(&BinomialInt.describe()),
            RingSpec::LineGroupRing(r) => f.write_str(&r.describe()),
        }
    }
}

/// A λ-module named on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleSpec {
    Adams,
}

impl FromStr for ModuleSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<ModuleSpec, String> {
        match s {
            "adams" => Ok(ModuleSpec::Adams),
            other => Err(format!("unknown module descriptor `{other}` (expected `adams`)")),
        }
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleSpec::Adams => f.write_str("adams"),
        }
    }
}

/// What to run, independent of where universal polynomials come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub seed: u64,
    pub rings: Vec<RingSpec>,
    pub modules: Vec<ModuleSpec>,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig { seed: 0, rings: RingSpec::default_roster(), modules: vec![ModuleSpec::Adams] }
    }
}

/// Merged outcome of a suite run. Serializes deterministically.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub caps: Caps,
    pub status: Status,
    pub reports: Vec<VerificationReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationReport> {
        self.reports.iter().filter(|r| !r.passed())
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.reports {
            writeln!(f, "{r}")?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "suite {}: {} checks, {} failed (seed {}, caps newton={} product={} composition={})",
            self.suite,
            self.reports.len(),
            failed,
            self.seed,
            self.caps.newton,
            self.caps.product,
            self.caps.composition
        )
    }
}

fn lambda_reports<R: LambdaRing>(ring: &R, table: &UniversalTable, samples: &Samples<R::Elem>) -> Vec<VerificationReport> {
    let adams_n = LAMBDA_MAX_N.min(table.caps().newton);
    vec![
        check_lambda_axioms(ring, table, samples, LAMBDA_MAX_N),
        check_adams_routes(ring, table, samples, adams_n),
        check_adams_properties(ring, samples, LAMBDA_MAX_N, &FROBENIUS_PRIMES),
        check_negation(ring, samples, NEGATION_MAX_N),
        check_minus_one(ring, NEGATION_MAX_N),
    ]
}

/// Graded samples: every `(a; x)` for the integers (121 of them), a seeded
/// 121 otherwise.
const GRADED_ELEMS: usize = 121;
const GRADED_PAIRS: usize = 300;

fn module_reports<M: LambdaModule + Clone>(
    module: &M,
    table: &UniversalTable,
    scalars: &[<M::Ring as LambdaRing>::Elem],
    elems: &Samples<M::Elem>,
    seed: u64,
) -> Vec<VerificationReport> {
    let graded = GradedRing::new(module.clone(), 1);
    let graded_elems = graded_samples(&graded, scalars, elems.elems(), GRADED_ELEMS, GRADED_PAIRS, seed);
    vec![
        check_module_axioms(module, scalars, elems, GRADED_MAX_N, seed),
        check_graded_lambda_ring(&graded, table, &graded_elems, LAMBDA_MAX_N),
        check_semilinearity(&graded, scalars, elems, SEMILINEAR_MAX_R, seed),
        check_composition_sign(&graded, elems, GRADED_MAX_N),
        check_graded_newton(&graded, elems, GRADED_MAX_N),
        check_module_extraction(&graded, scalars, elems, GRADED_MAX_N, seed),
        check_width_independence(module, WIDE_WIDTH, scalars, elems, LAMBDA_MAX_N, seed),
    ]
}

struct Instance<'a> {
    suite: Suite,
    modules: &'a [ModuleSpec],
    table: &'a UniversalTable,
    seed: u64,
}

impl Instance<'_> {
    fn run<R>(&self, ring: &R, lambda_samples: &Samples<R::Elem>, module_samples: &Samples<R::Elem>) -> Vec<VerificationReport>
    where
        R: LambdaRing + Clone,
    {
        let mut out = Vec::new();
        if self.suite.includes(Suite::Lambda) {
            out.extend(lambda_reports(ring, self.table, lambda_samples));
        }
        if self.suite.includes(Suite::Module) {
            for spec in self.modules {
                match spec {
                    ModuleSpec::Adams => {
                        let module = AdamsModule::new(ring.clone());
                        out.extend(module_reports(&module, self.table, module_samples.elems(), module_samples, self.seed));
                    }
                }
            }
        }
        out
    }

    /// Integers: `[−5, 5]` with every pair. Group rings: the coefficient box
    /// `[−2, 2]`, whole when it has at most 625 points, otherwise 150
    /// elements and 400 pairs for the λ-ring checks and 60 elements and 200
    /// pairs for the module checks.
    fn run_spec(&self, spec: &RingSpec) -> Vec<VerificationReport> {
        match spec {
            RingSpec::BinomialInt => {
                let samples = binomial_samples(-5, 5);
                self.run(&BinomialInt, &samples, &samples)
            }
            RingSpec::LineGroupRing(ring) => {
                let small = 5u64.checked_pow(ring.order() as u32).is_some_and(|n| n <= 625);
                let (lambda, module) = if small {
                    let s = group_ring_samples(ring, 2, 625, 625, self.seed);
                    (s.clone(), s)
                } else {
                    (
                        group_ring_samples(ring, 2, 150, 400, self.seed),
                        group_ring_samples(ring, 2, 60, 200, self.seed),
                    )
                };
                self.run(ring, &lambda, &module)
            }
        }
    }
}

/// Runs `suite` over the configured instances. Checks run concurrently; the
/// merged list is sorted by check name, then parameters.
pub fn run(suite: Suite, config: &RunConfig, generator: &Generator) -> Result<SuiteReport, UniversalError> {
    let needs_table = suite.includes(Suite::Lambda) || suite.includes(Suite::Module);
    let table = if needs_table { Some(UniversalTable::build(generator)?) } else { None };
    let mut reports = Vec::new();
    thread::scope(|scope| {
        let universal = suite.includes(Suite::Universal).then(|| scope.spawn(|| universal_suite(generator)));
        let instances: Vec<_> = match &table {
            Some(table) => config
                .rings
                .iter()
                .map(|spec| {
                    let inst = Instance { suite, modules: &config.modules, table, seed: config.seed };
                    scope.spawn(move || inst.run_spec(spec))
                })
                .collect(),
            None => Vec::new(),
        };
        if let Some(h) = universal {
            reports.extend(h.join().expect("universal checks panicked"));
        }
        for h in instances {
            reports.extend(h.join().expect("instance checks panicked"));
        }
    });
    if suite.includes(Suite::Module) {
        reports.push(check_sign_identity(SIGN_IDENTITY_MAX));
    }
    sort_reports(&mut reports);
    let status = if reports.iter().all(VerificationReport::passed) { Status::Pass } else { Status::Fail };
    Ok(SuiteReport { suite, seed: config.seed, caps: *generator.caps(), status, reports })
}
