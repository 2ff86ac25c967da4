use serde::Serialize;

use super::{Report, Warning};
use crate::annihilator::{exact_ai_bounded, DEFAULT_WORK_BUDGET};
use crate::boolean::{autocorrelation_profile, walsh_spectrum_and_nonlinearity, BooleanFunction, Degree};
use crate::bounds::{
    corollary4_bound, coverage_certifier, theorem2_certificate, AiCertificate, Symmetry,
};
use crate::error::{Error, Result};
use crate::families::{is_rotation_symmetric, SimplifiedValueVector};
use crate::math::ceil_half;

/// How hard to try for the exact algebraic immunity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExactAi {
    /// Computed under the budget; omitted with a warning when it does not fit.
    BestEffort,
    /// Requested explicitly: a budget overrun is an error. With a degree,
    /// only annihilators up to that degree are searched.
    Required { max_degree: Option<usize> },
}

/// Certificates `analyze` can attach without extra parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CertifyMethod {
    Theorem2,
    Corollary4,
    Coverage,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub exact_ai: ExactAi,
    /// `None` attaches every applicable certificate; an explicit list makes
    /// each one mandatory.
    pub certify: Option<Vec<CertifyMethod>>,
    pub budget: u64,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            exact_ai: ExactAi::BestEffort,
            certify: None,
            budget: DEFAULT_WORK_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub weight: u64,
    pub balanced: bool,
    pub degree: Degree,
    pub nonlinearity: u64,
    pub delta: u64,
    pub pc_order: usize,
    pub rotation_symmetric: bool,
    pub symmetric: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ai_exact: Option<usize>,
    pub ai_lower_bounds: Vec<AiCertificate>,
    pub warnings: Vec<Warning>,
}

impl Report for AnalysisReport {}

/// Subsets the coverage certifier may visit: each costs two restricted
/// counts over `2^ceil(n/2)` points.
pub(crate) fn coverage_subset_budget(n: usize, budget: u64) -> u64 {
    budget >> (ceil_half(n) + 1)
}

pub(crate) fn natural_symmetry(f: &BooleanFunction) -> Symmetry {
    if SimplifiedValueVector::of_function(f).is_some() {
        Symmetry::Symmetric
    } else if is_rotation_symmetric(f) {
        Symmetry::Rotation
    } else {
        Symmetry::Generic
    }
}

pub fn cmd_analyze(f: &BooleanFunction, options: &AnalyzeOptions) -> Result<AnalysisReport> {
    let n = f.n();
    let (weight, balanced) = f.weight_and_balance();
    let (_, nonlinearity) = walsh_spectrum_and_nonlinearity(f);
    let profile = autocorrelation_profile(f);
    let vector = SimplifiedValueVector::of_function(f);
    let mut warnings = Vec::new();

    let (max_degree, required) = match options.exact_ai {
        ExactAi::BestEffort => (ceil_half(n), false),
        ExactAi::Required { max_degree } => (max_degree.unwrap_or(ceil_half(n)), true),
    };
    let ai_exact = match exact_ai_bounded(f, max_degree, Some(options.budget)) {
        Ok(Some(r)) => Some(r.ai),
        Ok(None) => {
            warnings.push(
                Warning::new(
                    "AI_ABOVE_SEARCH_DEGREE",
                    format!("no annihilator of degree <= {max_degree}; AI exceeds the search limit"),
                )
                .with("lower_bound", max_degree + 1),
            );
            None
        }
        Err(e @ Error::CostLimit { .. }) if required => return Err(e),
        Err(Error::CostLimit { required, budget }) => {
            warnings.push(
                Warning::new("COST_CAP", "exact AI skipped: work budget exceeded")
                    .with("required", required)
                    .with("budget", budget),
            );
            None
        }
        Err(e) => return Err(e),
    };

    let (methods, mandatory) = match &options.certify {
        Some(list) => {
            let mut list = list.clone();
            list.sort();
            list.dedup();
            (list, true)
        }
        None => {
            let mut list = vec![CertifyMethod::Theorem2];
            if vector.is_some() {
                list.push(CertifyMethod::Corollary4);
            }
            list.push(CertifyMethod::Coverage);
            (list, false)
        }
    };
    let mut ai_lower_bounds = Vec::new();
    for method in methods {
        let certificate = match method {
            CertifyMethod::Theorem2 => Ok(theorem2_certificate(f)),
            CertifyMethod::Corollary4 => vector.as_ref().map(corollary4_bound).ok_or(Error::NotSymmetric),
            CertifyMethod::Coverage if n < 2 => {
                Err(Error::InvalidParameter("coverage needs n >= 2".into()))
            }
            CertifyMethod::Coverage => coverage_certifier(
                f,
                natural_symmetry(f),
                coverage_subset_budget(n, options.budget),
            ),
        };
        match certificate {
            Ok(c) => ai_lower_bounds.push(c),
            Err(e) if mandatory => return Err(e),
            Err(e) => warnings.push(
                Warning::new("CERTIFICATE_SKIPPED", e.to_string()).with("method", format!("{method:?}")),
            ),
        }
    }
    if let Some(ai) = ai_exact {
        for c in ai_lower_bounds.iter().filter(|c| c.bound > ai) {
            warnings.push(
                Warning::new("UNSOUND_CERTIFICATE", "certified bound exceeds the exact value")
                    .with("method", c.method)
                    .with("bound", c.bound)
                    .with("ai_exact", ai),
            );
        }
    }

    Ok(AnalysisReport {
        n,
        weight,
        balanced,
        degree: f.degree(),
        nonlinearity,
        delta: profile.delta,
        pc_order: profile.pc_order,
        rotation_symmetric: is_rotation_symmetric(f),
        symmetric: vector.is_some(),
        ai_exact,
        ai_lower_bounds,
        warnings,
    })
}
