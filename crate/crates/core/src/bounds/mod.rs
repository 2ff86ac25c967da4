//! Lower-bound certificates for algebraic immunity.
//!
//! The common device: if a side (`f` or `1 + f`) takes the value 1 on most of
//! an affine subspace `L`, any low-degree annihilator of that side must vanish
//! on all of `L`. Enough such subspaces force the annihilator to vanish on
//! every point of small (or large) weight, which in turn forces high degree.

mod certificate;

use serde::Serialize;

pub use certificate::{
    level_threshold, vanishing_degree, AiCertificate, Evidence, Method, SubspaceDichotomy,
    Symmetry, Threshold,
};

use crate::annihilator::{
    annihilator_space_basis, exact_ai_with_budget, Side, DEFAULT_WORK_BUDGET,
};
use crate::boolean::{
    distance_to_affine, restricted_support_count, AffineForm, AffineSubspace, AnfPolynomial,
    BooleanFunction,
};
use crate::error::{Error, Result};
use crate::families::{
    corollary3_threshold, is_rotation_symmetric, orbit_representatives_of_weight,
    SimplifiedValueVector, TailParity,
};
use crate::math::{binomial, binomial_prefix_sum, ceil_half, ceil_log2};

/// Degree bound on the annihilators of a single function from its weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE", tag = "kind", content = "degree")]
pub enum Theorem2Bound {
    /// Weight at most `2^(n-1)`: nothing beyond the trivial statement.
    Vacuous,
    /// Every annihilator has degree at least this.
    AtLeast(usize),
    /// The function is constant 1; it has no nonzero annihilator.
    Unbounded,
}

impl Theorem2Bound {
    pub fn as_level(self) -> Option<usize> {
        match self {
            Theorem2Bound::Vacuous => Some(0),
            Theorem2Bound::AtLeast(d) => Some(d),
            Theorem2Bound::Unbounded => None,
        }
    }
}

/// Largest `d` with `wt(f) >= 2^n - 2^(n-d)`, i.e. `n - ceil(log2(2^n - wt))`.
/// Weights up to `2^(n-1)` are reported as vacuous.
pub fn theorem2_degree_bound(f: &BooleanFunction) -> Theorem2Bound {
    let n = f.n();
    let w = f.weight();
    let full = 1u64 << n;
    if w == full {
        return Theorem2Bound::Unbounded;
    }
    if w <= full / 2 {
        return Theorem2Bound::Vacuous;
    }
    Theorem2Bound::AtLeast(n - ceil_log2(full - w) as usize)
}

/// `AI(f) >= min` of the weight bounds of `f` and `1 + f`.
pub fn theorem2_certificate(f: &BooleanFunction) -> AiCertificate {
    let n = f.n();
    let sides = [theorem2_degree_bound(f), theorem2_degree_bound(&f.complement())];
    let bound = sides
        .iter()
        .filter_map(|b| b.as_level())
        .min()
        .unwrap_or(0)
        .min(ceil_half(n));
    let mut evidence = Evidence {
        weight: Some(f.weight()),
        ..Evidence::default()
    };
    for (side, b) in [Side::Function, Side::Complement].into_iter().zip(sides) {
        let note = match b {
            Theorem2Bound::Vacuous => format!(
                "{}: weight <= 2^(n-1), vacuous for balanced or light input",
                side.label()
            ),
            Theorem2Bound::AtLeast(d) => {
                evidence.thresholds.push(Threshold {
                    level: d,
                    value: level_threshold(n, d),
                    satisfied: true,
                });
                format!("{}: annihilators have degree >= {d}", side.label())
            }
            Theorem2Bound::Unbounded => format!("{}: constant 1, no annihilator", side.label()),
        };
        evidence.notes.push(note);
    }
    AiCertificate {
        method: Method::Theorem2,
        bound,
        n,
        evidence,
    }
}

/// Restricted support of `side` on `subspace` tested at level `d`.
pub fn theorem3_dichotomy(
    f: &BooleanFunction,
    subspace: &AffineSubspace,
    side: Side,
    d: usize,
) -> Result<SubspaceDichotomy> {
    let t = subspace.dim();
    if d > t {
        return Err(Error::DegreeOutOfRange { degree: d, n: t });
    }
    let restricted_weight = restricted_support_count(&side.select(f), subspace)?;
    let threshold = level_threshold(t, d);
    Ok(SubspaceDichotomy {
        subspace: subspace.clone(),
        side,
        level: d,
        restricted_weight,
        threshold,
        condition_met: restricted_weight >= threshold,
        strict_condition_met: restricted_weight > threshold,
        vanishing_degree: vanishing_degree(restricted_weight, t),
    })
}

/// How the hyperplane dichotomy for a balanced function came out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE", tag = "kind")]
pub enum Corollary1Resolution {
    /// Exact computation gives `AI(f) >= d`.
    AiAtLeastLevel { ai: usize },
    /// `AI(f) < d`, and every minimal-degree annihilator of `side` is a
    /// multiple of `factor` (it vanishes where `factor + 1` does).
    Divisible {
        ai: usize,
        side: Side,
        factor: String,
        witness: AnfPolynomial,
    },
    /// Exact computation was out of budget.
    Unresolved,
    /// Neither branch holds. Never expected; kept so a failure is reported
    /// rather than hidden.
    Contradiction { ai: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Corollary1Analysis {
    pub distance: u64,
    pub level: usize,
    pub resolution: Corollary1Resolution,
    pub certificate: AiCertificate,
}

/// `d(f, l) >= 2^n - 2^(n-d)` for balanced `f`: either `AI(f) >= d` or the
/// minimal annihilators of `f` are multiples of `l` (those of `1 + f`,
/// multiples of `l + 1`).
pub fn corollary1_analyze(
    f: &BooleanFunction,
    l: &AffineForm,
    budget: Option<u64>,
) -> Result<Corollary1Analysis> {
    let n = f.n();
    if l.is_degenerate() {
        return Err(Error::DegenerateForm);
    }
    if !f.is_balanced() {
        return Err(Error::NotBalanced);
    }
    let distance = distance_to_affine(f, l)?;
    let full = 1u64 << n;
    let level = if distance >= full {
        n
    } else {
        n - ceil_log2(full - distance) as usize
    };
    let t = ceil_half(n);
    let mut evidence = Evidence {
        distance: Some(distance),
        thresholds: vec![Threshold {
            level,
            value: level_threshold(n, level),
            satisfied: true,
        }],
        ..Evidence::default()
    };
    let resolution = match exact_ai_with_budget(f, budget.unwrap_or(DEFAULT_WORK_BUDGET)) {
        Err(Error::CostLimit { .. }) => Corollary1Resolution::Unresolved,
        Err(e) => return Err(e),
        Ok(r) if r.ai >= level => Corollary1Resolution::AiAtLeastLevel { ai: r.ai },
        Ok(r) => resolve_divisibility(f, l, r.ai)?,
    };
    let bound = match resolution {
        Corollary1Resolution::AiAtLeastLevel { .. } => level.min(t),
        _ => 0,
    };
    evidence.notes.push(match &resolution {
        Corollary1Resolution::AiAtLeastLevel { ai } => format!("exact AI {ai} >= level {level}"),
        Corollary1Resolution::Divisible { side, factor, .. } => format!(
            "AI below level {level}; minimal annihilators of {} are multiples of {factor}",
            side.label()
        ),
        Corollary1Resolution::Unresolved => "exact computation over budget; dichotomy unresolved".into(),
        Corollary1Resolution::Contradiction { .. } => "neither branch holds".into(),
    });
    Ok(Corollary1Analysis {
        distance,
        level,
        resolution,
        certificate: AiCertificate {
            method: Method::Corollary1,
            bound,
            n,
            evidence,
        },
    })
}

fn resolve_divisibility(
    f: &BooleanFunction,
    l: &AffineForm,
    ai: usize,
) -> Result<Corollary1Resolution> {
    let n = f.n();
    // annihilators of f must vanish on {l = 0}; those of 1+f on {l = 1}
    for (side, hyperplane_form) in [(Side::Function, *l), (Side::Complement, l.complement())] {
        let basis = annihilator_space_basis(f, side, ai)?;
        let minimal: Vec<&AnfPolynomial> = basis
            .iter()
            .filter(|g| g.degree().finite() == Some(ai))
            .collect();
        if minimal.is_empty() {
            continue;
        }
        let hyperplane = AffineSubspace::new(n, &[hyperplane_form])?;
        let vanishes = |g: &AnfPolynomial| {
            let table = g.truth_table();
            hyperplane.points().all(|x| !table.get(x))
        };
        if basis.iter().all(|g| vanishes(g)) {
            return Ok(Corollary1Resolution::Divisible {
                ai,
                side,
                factor: hyperplane_form.complement().to_string(),
                witness: minimal[0].clone(),
            });
        }
    }
    Ok(Corollary1Resolution::Contradiction { ai })
}

/// `2 sum_{i=0}^{ai-2} C(n-1, i)`.
pub fn nl_bound_from_ai(n: usize, ai: usize) -> u64 {
    2 * binomial_prefix_sum(n as i64 - 1, ai as i64 - 2)
}

/// `sum_{i<=d} C(n,i) <= wt(f) <= sum_{i<=n-d-1} C(n,i)`, necessary for `AI(f) > d`.
pub fn weight_window(n: usize, d: usize) -> (u64, u64) {
    (
        binomial_prefix_sum(n as i64, d as i64),
        binomial_prefix_sum(n as i64, n as i64 - d as i64 - 1),
    )
}

pub fn weight_window_check(f: &BooleanFunction, d: usize) -> bool {
    let (lo, hi) = weight_window(f.n(), d);
    (lo..=hi).contains(&f.weight())
}

/// Window for `wt(f|_L)` when `AI(f) >= ai` and `L` has codimension `r`.
pub fn restricted_weight_window(n: usize, r: usize, ai: usize) -> (u64, u64) {
    let d = ai as i64 - 1;
    let m = n as i64 - r as i64;
    (
        binomial_prefix_sum(m, d - r as i64),
        binomial_prefix_sum(m, n as i64 - d - 1),
    )
}

pub fn restricted_weight_window_check(
    f: &BooleanFunction,
    subspace: &AffineSubspace,
    ai: usize,
) -> Result<bool> {
    if ai == 0 {
        return Err(Error::InvalidParameter("restricted window needs ai >= 1".into()));
    }
    let w = restricted_support_count(f, subspace)?;
    let (lo, hi) = restricted_weight_window(f.n(), subspace.codim(), ai);
    Ok((lo..=hi).contains(&w))
}

/// A nonzero `g` vanishing on every point of weight `<= k` has no monomial of
/// degree `<= k` (by `a_u = sum_{v <= u} g(v)`), hence degree `>= k + 1`.
/// Returns `k + 1` and the extremal `x_1 ... x_{k+1}`.
pub fn low_weight_vanishing_bound(n: usize, k: usize) -> Result<(usize, AnfPolynomial)> {
    if k >= n {
        return Err(Error::InvalidParameter(format!("need k < n, got k = {k}, n = {n}")));
    }
    let witness = AnfPolynomial::from_monomials(n, [((1u64 << (k + 1)) - 1) as u32])?;
    Ok((k + 1, witness))
}

fn coordinate_masks(n: usize, k: usize, symmetry: Symmetry) -> Result<Vec<u32>> {
    Ok(match symmetry {
        Symmetry::Symmetric => vec![((1u64 << k) - 1) as u32],
        Symmetry::Rotation => orbit_representatives_of_weight(n, k)?
            .into_iter()
            .map(|o| o.representative)
            .collect(),
        Symmetry::Generic => (0..(1u32 << n))
            .filter(|m| m.count_ones() as usize == k)
            .collect(),
    })
}

fn fixed_subspace(n: usize, mask: u32, value: bool) -> AffineSubspace {
    let fixed: Vec<(usize, bool)> = (0..n)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| (i + 1, value))
        .collect();
    AffineSubspace::fix_coordinates(n, &fixed).expect("coordinates in range")
}

/// Number of coordinate subsets the generic coverage certifier visits.
pub fn coverage_subset_count(n: usize) -> u64 {
    binomial(n as i64, (n / 2) as i64)
}

/// Fixes every `floor(n/2)`-subset `T` of coordinates to 0 (family `L0`) and
/// to 1 (family `L1`). `L0` covers all points of weight `<= ceil(n/2)` and
/// `L1` all points of weight `>= floor(n/2)`. If `f` has enough ones on every
/// `L0` member, its annihilators of degree below the certified level vanish
/// on the whole low-weight region and so have degree `> ceil(n/2)`, which is
/// impossible; the same holds for `1 + f` on `L1`.
pub fn coverage_certifier(
    f: &BooleanFunction,
    symmetry: Symmetry,
    max_subsets: u64,
) -> Result<AiCertificate> {
    let n = f.n();
    if n < 2 {
        return Err(Error::InvalidParameter("coverage needs n >= 2".into()));
    }
    match symmetry {
        Symmetry::Symmetric if SimplifiedValueVector::of_function(f).is_none() => {
            return Err(Error::NotSymmetric)
        }
        Symmetry::Rotation if !is_rotation_symmetric(f) => return Err(Error::NotRotationSymmetric),
        Symmetry::Generic if coverage_subset_count(n) > max_subsets => {
            return Err(Error::CostLimit {
                required: coverage_subset_count(n),
                budget: max_subsets,
            })
        }
        _ => {}
    }
    let k = n / 2;
    let t = ceil_half(n);
    let complement = f.complement();
    let masks = coordinate_masks(n, k, symmetry)?;
    let mut low: Option<(u64, u32)> = None;
    let mut high: Option<(u64, u32)> = None;
    for &mask in &masks {
        let w0 = restricted_support_count(f, &fixed_subspace(n, mask, false))?;
        let w1 = restricted_support_count(&complement, &fixed_subspace(n, mask, true))?;
        if low.is_none_or(|(w, _)| w0 < w) {
            low = Some((w0, mask));
        }
        if high.is_none_or(|(w, _)| w1 < w) {
            high = Some((w1, mask));
        }
    }
    let (low_w, low_mask) = low.expect("at least one subset");
    let (high_w, high_mask) = high.expect("at least one subset");
    let level = |w: u64| vanishing_degree(w, t).unwrap_or(t).min(t);
    let bound = level(low_w).min(level(high_w));

    let mut evidence = Evidence {
        symmetry: Some(symmetry),
        subsets_checked: Some(masks.len() as u64),
        ..Evidence::default()
    };
    if bound > 0 {
        for (side, mask, value) in [
            (Side::Function, low_mask, false),
            (Side::Complement, high_mask, true),
        ] {
            evidence.dichotomies.push(theorem3_dichotomy(
                f,
                &fixed_subspace(n, mask, value),
                side,
                bound - 1,
            )?);
        }
    }
    for d in 0..=t {
        let value = level_threshold(t, d);
        evidence.thresholds.push(Threshold {
            level: d,
            value,
            satisfied: low_w.min(high_w) >= value,
        });
    }
    evidence.notes.push(format!(
        "minimum restricted weights: f on x_T = 0: {low_w}, 1+f on x_T = 1: {high_w} (of {})",
        1u64 << t
    ));
    Ok(AiCertificate {
        method: Method::Coverage,
        bound,
        n,
        evidence,
    })
}

/// `U = min(sum_{v_i=1, i<=ceil(n/2)} C(ceil(n/2), i),
/// sum_{v_i=0, i>=floor(n/2)} C(ceil(n/2), i - floor(n/2)))`;
/// `U > 2^ceil(n/2) - 2^(ceil(n/2)-d)` gives `AI(f) >= d + 1`.
pub fn corollary4_bound(v: &SimplifiedValueVector) -> AiCertificate {
    let n = v.n();
    let t = ceil_half(n);
    let k = n / 2;
    let low_sum: u64 = (0..=t)
        .filter(|&i| v.get(i))
        .map(|i| binomial(t as i64, i as i64))
        .sum();
    let high_sum: u64 = (k..=n)
        .filter(|&i| !v.get(i))
        .map(|i| binomial(t as i64, (i - k) as i64))
        .sum();
    let u = low_sum.min(high_sum);
    let mut thresholds = Vec::with_capacity(t);
    let mut bound = 0;
    for d in 0..t {
        let value = level_threshold(t, d);
        let satisfied = u > value;
        if satisfied {
            bound = d + 1;
        }
        thresholds.push(Threshold {
            level: d,
            value,
            satisfied,
        });
    }
    AiCertificate {
        method: Method::Corollary4,
        bound,
        n,
        evidence: Evidence {
            u: Some(u),
            low_sum: Some(low_sum),
            high_sum: Some(high_sum),
            thresholds,
            ..Evidence::default()
        },
    }
}

/// `AI(f') > ceil(n/2) - ceil(log2 |H|)`, read as
/// `bound = ceil(n/2) - ceil(log2 |H|) + 1`, capped at `ceil(n/2)`.
///
/// When `|H|` is a power of two the counting step behind this bound can miss
/// by one point; the evidence flags it and the coverage certifier on the
/// concrete function is the one to trust.
pub fn corollary5_bound(n: usize, h_size: u64) -> Result<AiCertificate> {
    if n % 2 == 0 {
        return Err(Error::InvalidParameter(format!("orbit-swap bound needs odd n, got {n}")));
    }
    if h_size == 0 {
        return Err(Error::InvalidParameter("|H| must be positive".into()));
    }
    let t = ceil_half(n);
    let log2_h = ceil_log2(h_size);
    let bound = (t + 1).saturating_sub(log2_h as usize).min(t);
    let edge = h_size.is_power_of_two();
    let mut notes = Vec::new();
    if edge {
        notes.push(
            "|H| is a power of two: the closed form may overstate; use the coverage certificate of the concrete function".into(),
        );
    }
    Ok(AiCertificate {
        method: Method::Corollary5,
        bound,
        n,
        evidence: Evidence {
            h_size: Some(h_size),
            log2_h: Some(log2_h),
            power_of_two_edge: Some(edge),
            thresholds: vec![Threshold {
                level: log2_h as usize,
                value: (1u64 << t).saturating_sub(1u64 << log2_h.min(63)),
                satisfied: true,
            }],
            notes,
            ..Evidence::default()
        },
    })
}

/// Outcome of the non-maximality check for parity-tailed symmetric functions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Corollary3Check {
    /// `exact_ai(f) < ceil(n/2)`.
    pub nonmaximal: bool,
    pub exact_ai: usize,
    /// `d(f, x_1 + ... + x_n)`.
    pub distance_to_sum: u64,
    /// `d(f, x_1 + ... + x_n + 1)`.
    pub distance_to_sum_plus_one: u64,
    /// `wt(f)` on the even-weight and odd-weight hyperplanes.
    pub even_hyperplane_weight: u64,
    pub odd_hyperplane_weight: u64,
    /// Restricted window a function of maximal AI must respect on each hyperplane.
    pub window: (u64, u64),
    /// Whether the window argument alone already rules out maximal AI.
    pub proof_path_nonmaximal: bool,
}

pub fn corollary3_nonmax_check(
    f: &BooleanFunction,
    parity: TailParity,
    budget: Option<u64>,
) -> Result<Corollary3Check> {
    let n = f.n();
    let v = SimplifiedValueVector::of_function(f).ok_or(Error::NotSymmetric)?;
    let m = corollary3_threshold(n);
    if let Some(w) = (m..=n).find(|&w| v.get(w) != parity.admits(w)) {
        return Err(Error::PatternMismatch(format!(
            "value at weight {w} breaks the {parity:?} tail from weight {m}"
        )));
    }
    let t = ceil_half(n);
    let sum = AffineForm::all_ones(n, false);
    let distance_to_sum = distance_to_affine(f, &sum)?;
    let distance_to_sum_plus_one = distance_to_affine(f, &sum.complement())?;
    let even_plane = AffineSubspace::new(n, &[sum])?;
    let odd_plane = AffineSubspace::new(n, &[sum.complement()])?;
    let even_hyperplane_weight = restricted_support_count(f, &even_plane)?;
    let odd_hyperplane_weight = restricted_support_count(f, &odd_plane)?;
    debug_assert_eq!(
        distance_to_sum,
        even_hyperplane_weight + (1 << (n - 1)) - odd_hyperplane_weight
    );
    let window = restricted_weight_window(n, 1, t);
    let proof_path_nonmaximal = !restricted_weight_window_check(f, &even_plane, t)?
        || !restricted_weight_window_check(f, &odd_plane, t)?;
    let exact = exact_ai_with_budget(f, budget.unwrap_or(DEFAULT_WORK_BUDGET))?;
    Ok(Corollary3Check {
        nonmaximal: exact.ai < t,
        exact_ai: exact.ai,
        distance_to_sum,
        distance_to_sum_plus_one,
        even_hyperplane_weight,
        odd_hyperplane_weight,
        window,
        proof_path_nonmaximal,
    })
}

/// Smallest `e` such that no nonzero function of degree `< e` vanishes on
/// all points of weight `>= n - k`; mirror image of the low-weight bound.
pub fn high_weight_vanishing_bound(n: usize, k: usize) -> Result<usize> {
    low_weight_vanishing_bound(n, k).map(|(d, _)| d)
}
