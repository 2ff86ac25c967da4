use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::analyze::{coverage_subset_budget, natural_symmetry};
use super::oracle::{BruteForceOracle, ORACLE_MAX_N};
use super::{necklace_count, Report};
use crate::annihilator::exact_ai_with_budget;
use crate::boolean::{walsh_spectrum_and_nonlinearity, AffineForm, AffineSubspace, BooleanFunction};
use crate::bounds::{
    corollary4_bound, coverage_certifier, nl_bound_from_ai, restricted_weight_window_check,
    theorem2_certificate, weight_window_check, AiCertificate,
};
use crate::error::{Error, Result};
use crate::families::{orbit_representatives, symmetric_expand, SimplifiedValueVector};
use crate::math::ceil_half;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanMode {
    /// Every function in `n <= 4` variables.
    Exhaustive,
    /// Every symmetric function, `n <= 12`.
    Symmetric,
    /// Rotation-symmetric functions, `n <= 10`: all of them up to 16 orbits,
    /// otherwise a seeded sample.
    Rsbf,
    /// Seeded uniform sample of all functions.
    Random,
}

impl ScanMode {
    fn max_n(self) -> usize {
        match self {
            ScanMode::Exhaustive => 4,
            ScanMode::Symmetric => 12,
            ScanMode::Rsbf => 10,
            ScanMode::Random => crate::boolean::MAX_VARIABLES,
        }
    }

    /// Size of the population the mode walks.
    fn population(self, n: usize) -> u64 {
        let pow = |e: u64| if e >= 64 { u64::MAX } else { 1u64 << e };
        match self {
            ScanMode::Exhaustive | ScanMode::Random => pow(1 << n),
            ScanMode::Symmetric => pow(n as u64 + 1),
            ScanMode::Rsbf => pow(necklace_count(n)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Exact AI equals the brute-force oracle (`n <= 4`).
    AiOracle,
    /// `AI <= ceil(n/2)`.
    AiUpper,
    /// Weight lies in the window implied by the exact AI.
    WeightWindow,
    /// `NL >= 2 sum_{i <= AI-2} C(n-1, i)`.
    NlBound,
    /// Weight, symmetric and coverage certificates never exceed the exact AI.
    CertSound,
    /// The symmetric certificate never exceeds the exact AI.
    Cor4Sound,
    /// Restricted weight window on a random subspace of codimension <= 3.
    RestrictedWindow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOptions {
    pub mode: ScanMode,
    pub n: usize,
    /// Empty selects every check that applies to `n`.
    pub checks: Vec<Check>,
    pub count: usize,
    pub seed: u64,
    pub budget: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Hex truth table.
    pub function: String,
    pub check: Check,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub mode: ScanMode,
    pub n: usize,
    pub checks: Vec<Check>,
    pub functions: u64,
    pub sampled: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub max_ai_observed: usize,
    /// Number of functions per exact AI value.
    pub ai_histogram: BTreeMap<usize, u64>,
    pub counterexamples: Vec<Counterexample>,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

impl Report for ScanReport {}

fn random_function(n: usize, rng: &mut ChaCha8Rng) -> BooleanFunction {
    BooleanFunction::from_fn(n, |_| rng.random_bool(0.5)).expect("n validated")
}

/// Random affine subspace of codimension `1..=min(3, n - 1)`.
pub(crate) fn random_subspace(n: usize, rng: &mut ChaCha8Rng) -> AffineSubspace {
    let r = rng.random_range(1..=3.min(n - 1));
    loop {
        let forms: Vec<AffineForm> = (0..r)
            .map(|_| AffineForm::new(rng.random_range(1..(1u32 << n)), rng.random_bool(0.5)))
            .collect();
        if let Ok(l) = AffineSubspace::new(n, &forms) {
            if l.codim() == r {
                return l;
            }
        }
    }
}

fn population(options: &ScanOptions, rng: &mut ChaCha8Rng) -> Result<(Vec<BooleanFunction>, bool)> {
    let n = options.n;
    Ok(match options.mode {
        ScanMode::Exhaustive => {
            let tables = 1u64 << (1 << n);
            let functions = (0..tables)
                .map(|t| BooleanFunction::from_words(n, vec![t]))
                .collect::<Result<_>>()?;
            (functions, false)
        }
        ScanMode::Symmetric => {
            let functions = (0..(1u32 << (n + 1)))
                .map(|m| SimplifiedValueVector::from_mask(n, m).map(|v| symmetric_expand(&v)))
                .collect::<Result<_>>()?;
            (functions, false)
        }
        ScanMode::Rsbf => {
            let orbits = orbit_representatives(n)?;
            let build = |choice: &dyn Fn(usize) -> bool| {
                let mut f = BooleanFunction::zero(n).expect("n validated");
                for (k, o) in orbits.iter().enumerate() {
                    if choice(k) {
                        for x in o.members() {
                            f.set(x, true);
                        }
                    }
                }
                f
            };
            if orbits.len() <= 16 {
                let functions = (0..(1u64 << orbits.len()))
                    .map(|m| build(&|k| m >> k & 1 == 1))
                    .collect();
                (functions, false)
            } else {
                let functions = (0..options.count)
                    .map(|_| {
                        let bits: Vec<bool> = (0..orbits.len()).map(|_| rng.random_bool(0.5)).collect();
                        build(&|k| bits[k])
                    })
                    .collect();
                (functions, true)
            }
        }
        ScanMode::Random => (
            (0..options.count).map(|_| random_function(n, rng)).collect(),
            true,
        ),
    })
}

fn default_checks(n: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    if n <= ORACLE_MAX_N {
        checks.push(Check::AiOracle);
    }
    checks.extend([
        Check::AiUpper,
        Check::WeightWindow,
        Check::NlBound,
        Check::CertSound,
        Check::Cor4Sound,
        Check::RestrictedWindow,
    ]);
    checks
}

fn soundness_certificates(f: &BooleanFunction, budget: u64, symmetric_only: bool) -> Vec<AiCertificate> {
    let vector = SimplifiedValueVector::of_function(f);
    let mut out: Vec<AiCertificate> = vector.iter().map(corollary4_bound).collect();
    if symmetric_only {
        return out;
    }
    out.push(theorem2_certificate(f));
    if f.n() >= 2 {
        if let Ok(c) = coverage_certifier(f, natural_symmetry(f), coverage_subset_budget(f.n(), budget)) {
            out.push(c);
        }
    }
    out
}

pub fn cmd_scan(options: &ScanOptions) -> Result<ScanReport> {
    let n = options.n;
    BooleanFunction::zero(n)?;
    if n > options.mode.max_n() {
        return Err(Error::CostLimit {
            required: options.mode.population(n),
            budget: options.mode.population(options.mode.max_n()),
        });
    }
    let mut checks = if options.checks.is_empty() {
        default_checks(n)
    } else {
        options.checks.clone()
    };
    checks.sort();
    checks.dedup();
    let oracle = if checks.contains(&Check::AiOracle) {
        Some(BruteForceOracle::new(n)?)
    } else {
        None
    };
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let (functions, sampled) = population(options, &mut rng)?;

    let mut counterexamples = Vec::new();
    let mut ai_histogram = BTreeMap::new();
    let t = ceil_half(n);
    for f in &functions {
        let ai = exact_ai_with_budget(f, options.budget)?.ai;
        *ai_histogram.entry(ai).or_insert(0u64) += 1;
        let mut fail = |check: Check, detail: String| {
            counterexamples.push(Counterexample {
                function: f.to_hex(),
                check,
                detail,
            })
        };
        for &check in &checks {
            match check {
                Check::AiOracle => {
                    let brute = oracle.as_ref().expect("built above").algebraic_immunity(f)?;
                    if brute != ai {
                        fail(check, format!("engine {ai}, brute force {brute}"));
                    }
                }
                Check::AiUpper => {
                    if ai > t {
                        fail(check, format!("AI {ai} > {t}"));
                    }
                }
                Check::WeightWindow => {
                    if ai >= 1 && !weight_window_check(f, ai - 1) {
                        fail(check, format!("weight {} outside the window for AI {ai}", f.weight()));
                    }
                }
                Check::NlBound => {
                    let (_, nl) = walsh_spectrum_and_nonlinearity(f);
                    let bound = nl_bound_from_ai(n, ai);
                    if nl < bound {
                        fail(check, format!("NL {nl} < {bound} for AI {ai}"));
                    }
                }
                Check::CertSound | Check::Cor4Sound => {
                    for c in soundness_certificates(f, options.budget, check == Check::Cor4Sound) {
                        if c.bound > ai {
                            fail(check, format!("{} bound {} > AI {ai}", c.method, c.bound));
                        }
                    }
                }
                Check::RestrictedWindow => {
                    if ai >= 1 && n >= 2 {
                        let l = random_subspace(n, &mut rng);
                        if !restricted_weight_window_check(f, &l, ai)? {
                            fail(check, format!("restricted weight outside the window on codim {}", l.codim()));
                        }
                    }
                }
            }
        }
    }
    Ok(ScanReport {
        mode: options.mode,
        n,
        checks,
        functions: functions.len() as u64,
        sampled,
        seed: sampled.then_some(options.seed),
        max_ai_observed: ai_histogram.keys().next_back().copied().unwrap_or(0),
        ai_histogram,
        counterexamples,
    })
}
