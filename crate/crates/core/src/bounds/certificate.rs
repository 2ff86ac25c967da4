use std::fmt;

use serde::Serialize;

use crate::annihilator::Side;
use crate::boolean::AffineSubspace;

/// Which result a certificate rests on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    Theorem2,
    Corollary1,
    Corollary4,
    Corollary5,
    Coverage,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Theorem2 => "THEOREM2",
            Method::Corollary1 => "COROLLARY1",
            Method::Corollary4 => "COROLLARY4",
            Method::Corollary5 => "COROLLARY5",
            Method::Coverage => "COVERAGE",
        })
    }
}

/// Symmetry assumed when enumerating subspace families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Symmetry {
    Generic,
    Symmetric,
    Rotation,
}

/// Restricted support of one side on one affine subspace at level `d`.
///
/// `condition_met` is `restricted_weight >= 2^t - 2^(t-d)`: every nonzero
/// annihilator of the side then has degree at least `d` or vanishes on the
/// subspace. `strict_condition_met` is the `>` form, which already forces
/// degree at least `d + 1`. `vanishing_degree` is the sharpest such level:
/// annihilators of degree below it vanish on the subspace (`None` when the
/// side is identically 1 there, so every annihilator vanishes).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubspaceDichotomy {
    pub subspace: AffineSubspace,
    pub side: Side,
    pub level: usize,
    pub restricted_weight: u64,
    pub threshold: u64,
    pub condition_met: bool,
    pub strict_condition_met: bool,
    pub vanishing_degree: Option<usize>,
}

/// `2^t - 2^(t-d)`, for `d <= t`.
pub fn level_threshold(t: usize, d: usize) -> u64 {
    (1u64 << t) - (1u64 << (t - d))
}

/// Largest `D` such that a side with `weight` ones on a `t`-dimensional
/// subspace admits no nonzero restricted annihilator of degree `< D`.
///
/// A nonzero function of degree `e` on `t` variables has at least `2^(t-e)`
/// ones, and a restricted annihilator is supported on the `2^t - weight`
/// zeros of the side. `None` means there are no zeros at all.
pub fn vanishing_degree(weight: u64, t: usize) -> Option<usize> {
    let zeros = (1u64 << t) - weight;
    (zeros > 0).then(|| t - crate::math::floor_log2(zeros) as usize)
}

/// One tested level with its threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Threshold {
    pub level: usize,
    pub value: u64,
    pub satisfied: bool,
}

/// Method-specific record backing a certificate.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Evidence {
    #[serde(rename = "U", skip_serializing_if = "Option::is_none")]
    pub u: Option<u64>,
    /// First sum of the symmetric bound (ones on the low family).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub low_sum: Option<u64>,
    /// Second sum of the symmetric bound (zeros on the high family).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub high_sum: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_size: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub log2_h: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub power_of_two_edge: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symmetry: Option<Symmetry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subsets_checked: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub dichotomies: Vec<SubspaceDichotomy>,
    pub thresholds: Vec<Threshold>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// A certified lower bound `AI(f) >= bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AiCertificate {
    pub method: Method,
    pub bound: usize,
    pub n: usize,
    pub evidence: Evidence,
}
