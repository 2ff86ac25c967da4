//! Annihilators and exact algebraic immunity.
//!
//! A nonzero `g` annihilates `f` when `g f = 0`, i.e. `g` vanishes on the
//! support of `f`. Writing `g` in the monomial basis of degree at most `d`,
//! the annihilators of degree `<= d` are the kernel of the evaluation matrix
//! whose rows are the support points and whose columns are the monomials.

mod matrix;

use serde::Serialize;

pub use matrix::{Gf2Matrix, Kernel};

use crate::boolean::{AnfPolynomial, BooleanFunction, Degree};
use crate::error::{Error, Result};
use crate::math::{binomial_prefix_sum, ceil_half};
use matrix::{bit, words_for, ColumnBasis};

/// Which of `f` and `1 + f` an annihilator kills.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    #[serde(rename = "f")]
    Function,
    #[serde(rename = "1+f")]
    Complement,
}

impl Side {
    pub fn select(self, f: &BooleanFunction) -> BooleanFunction {
        match self {
            Side::Function => f.clone(),
            Side::Complement => f.complement(),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Side::Function => "f",
            Side::Complement => "1+f",
        }
    }
}

/// All masks of popcount `<= d`, ordered by (popcount, value).
pub fn monomial_basis(n: usize, d: usize) -> Result<Vec<u32>> {
    if d > n {
        return Err(Error::DegreeOutOfRange { degree: d, n });
    }
    let mut masks: Vec<u32> = (0..(1u32 << n))
        .filter(|u| u.count_ones() as usize <= d)
        .collect();
    masks.sort_by_key(|&u| (u.count_ones(), u));
    Ok(masks)
}

/// Masks of popcount exactly `d`, ascending.
fn monomials_of_degree(n: usize, d: usize) -> impl Iterator<Item = u32> {
    (0..(1u32 << n)).filter(move |u| u.count_ones() as usize == d)
}

/// Entry `(x, u)` is 1 iff the monomial `u` evaluates to 1 at `x`.
pub fn evaluation_matrix(points: &[u32], monomials: &[u32]) -> Gf2Matrix {
    let mut m = Gf2Matrix::zeros(points.len(), monomials.len());
    for (r, &x) in points.iter().enumerate() {
        for (c, &u) in monomials.iter().enumerate() {
            if u & x == u {
                m.set(r, c, true);
            }
        }
    }
    m
}

pub fn kernel_basis(m: &Gf2Matrix) -> Kernel {
    m.kernel_basis()
}

/// Column of the evaluation matrix for one monomial.
fn monomial_column(points: &[u32], u: u32) -> Vec<u64> {
    let mut col = vec![0u64; words_for(points.len())];
    for (r, &x) in points.iter().enumerate() {
        if x & u == u {
            col[r >> 6] |= 1 << (r & 63);
        }
    }
    col
}

fn polynomial_from_kernel(n: usize, monomials: &[u32], v: &[u64]) -> AnfPolynomial {
    let masks = (0..monomials.len()).filter(|&j| bit(v, j)).map(|j| monomials[j]);
    AnfPolynomial::from_monomials(n, masks).expect("basis masks are in range")
}

/// `true` iff `g f = 0` pointwise. The zero polynomial passes, but is never
/// accepted as a witness.
pub fn verify_annihilator(g: &AnfPolynomial, f: &BooleanFunction) -> Result<bool> {
    if g.n() != f.n() {
        return Err(Error::DimensionMismatch {
            expected: f.n(),
            found: g.n(),
        });
    }
    Ok(g.truth_table().and(f)?.is_zero())
}

/// A nonzero annihilator of `f` or of `1 + f`, checked at construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnnihilatorWitness {
    g: AnfPolynomial,
    side: Side,
    degree: usize,
}

impl AnnihilatorWitness {
    pub fn new(g: AnfPolynomial, side: Side, f: &BooleanFunction) -> Result<Self> {
        let Degree::Finite(degree) = g.degree() else {
            return Err(Error::InvalidParameter(
                "the zero polynomial is not an annihilator witness".into(),
            ));
        };
        if !verify_annihilator(&g, &side.select(f))? {
            return Err(Error::InvalidParameter(format!(
                "{g} does not annihilate {}",
                side.label()
            )));
        }
        Ok(Self { g, side, degree })
    }

    pub fn polynomial(&self) -> &AnfPolynomial {
        &self.g
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

/// Rank of the evaluation matrix of one side at one degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RankRecord {
    pub side: Side,
    pub degree: usize,
    /// Support size of the side.
    pub rows: usize,
    /// Number of monomials of degree `<= degree`.
    pub cols: usize,
    pub rank: usize,
}

impl RankRecord {
    pub fn full_rank(&self) -> bool {
        self.rank == self.cols
    }
}

/// Exact algebraic immunity with a minimal-degree witness. `evidence` holds
/// the full-rank records for both sides at every degree below `ai`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AiResult {
    pub ai: usize,
    pub witness: AnnihilatorWitness,
    pub evidence: Vec<RankRecord>,
}

/// Default work cap: dense elimination on a `2^15 x 2^12` matrix.
pub const DEFAULT_WORK_BUDGET: u64 = (1 << 15) * (1 << 12) * (1 << 12) / 64;

/// Word-operation estimate for eliminating a `rows x cols` matrix.
pub fn elimination_work(rows: usize, cols: usize) -> u64 {
    (rows as u64) * (cols as u64) * (cols as u64).div_ceil(64)
}

/// Degree-by-degree search for the lowest-degree annihilator of one side.
struct SideSearch {
    side: Side,
    n: usize,
    points: Vec<u32>,
    basis: ColumnBasis,
    monomials: Vec<u32>,
}

impl SideSearch {
    fn new(f: &BooleanFunction, side: Side, max_degree: usize) -> Self {
        let points = side.select(f).support();
        let cols = binomial_prefix_sum(f.n() as i64, max_degree as i64) as usize;
        Self {
            side,
            n: f.n(),
            basis: ColumnBasis::new(points.len(), cols),
            points,
            monomials: Vec::with_capacity(cols),
        }
    }

    /// Adds all monomials of degree `d`; stops at the first dependency and
    /// returns the corresponding annihilator.
    fn extend_to(&mut self, d: usize) -> Option<AnfPolynomial> {
        for u in monomials_of_degree(self.n, d) {
            let index = self.monomials.len();
            self.monomials.push(u);
            let col = monomial_column(&self.points, u);
            if let Some(combo) = self.basis.push(col, index) {
                return Some(polynomial_from_kernel(self.n, &self.monomials, &combo));
            }
        }
        None
    }

    fn record(&self, d: usize) -> RankRecord {
        RankRecord {
            side: self.side,
            degree: d,
            rows: self.points.len(),
            cols: self.monomials.len(),
            rank: self.basis.rank(),
        }
    }
}

fn check_budget(rows: usize, cols: usize, budget: Option<u64>) -> Result<()> {
    if let Some(budget) = budget {
        let required = elimination_work(rows, cols);
        if required > budget {
            return Err(Error::CostLimit { required, budget });
        }
    }
    Ok(())
}

/// Smallest `d <= d_max` admitting a nonzero annihilator of `side` of degree
/// `<= d`, with the witness.
pub fn min_annihilator_degree_of_side(
    f: &BooleanFunction,
    side: Side,
    d_max: usize,
    budget: Option<u64>,
) -> Result<Option<(usize, AnnihilatorWitness)>> {
    let d_max = d_max.min(f.n());
    let mut search = SideSearch::new(f, side, d_max);
    for d in 0..=d_max {
        let cols = binomial_prefix_sum(f.n() as i64, d as i64) as usize;
        check_budget(search.points.len(), cols, budget)?;
        if let Some(g) = search.extend_to(d) {
            let witness = AnnihilatorWitness::new(g, side, f)?;
            debug_assert_eq!(witness.degree(), d);
            return Ok(Some((d, witness)));
        }
    }
    Ok(None)
}

/// Smallest degree of a nonzero annihilator of `f` up to `d_max`.
pub fn min_annihilator_degree(
    f: &BooleanFunction,
    d_max: usize,
) -> Option<(usize, AnnihilatorWitness)> {
    min_annihilator_degree_of_side(f, Side::Function, d_max, None).expect("no budget")
}

/// Exact algebraic immunity, searching both sides up to `max_degree`
/// (inclusive) under an optional work budget. Returns `Ok(None)` when no
/// annihilator of degree `<= max_degree` exists on either side.
pub fn exact_ai_bounded(
    f: &BooleanFunction,
    max_degree: usize,
    budget: Option<u64>,
) -> Result<Option<AiResult>> {
    let n = f.n();
    let max_degree = max_degree.min(n);
    let mut searches = [
        SideSearch::new(f, Side::Function, max_degree),
        SideSearch::new(f, Side::Complement, max_degree),
    ];
    let mut evidence = Vec::new();
    for d in 0..=max_degree {
        let cols = binomial_prefix_sum(n as i64, d as i64) as usize;
        for s in &searches {
            check_budget(s.points.len(), cols, budget)?;
        }
        for s in &mut searches {
            if let Some(g) = s.extend_to(d) {
                let witness = AnnihilatorWitness::new(g, s.side, f)?;
                return Ok(Some(AiResult {
                    ai: d,
                    witness,
                    evidence,
                }));
            }
            evidence.push(s.record(d));
        }
    }
    Ok(None)
}

/// Exact algebraic immunity. Terminates with `ai <= ceil(n/2)`.
pub fn exact_ai(f: &BooleanFunction) -> AiResult {
    exact_ai_bounded(f, ceil_half(f.n()), None)
        .expect("no budget")
        .expect("every function has an annihilator of degree <= ceil(n/2) on some side")
}

/// Exact algebraic immunity under a work budget.
pub fn exact_ai_with_budget(f: &BooleanFunction, budget: u64) -> Result<AiResult> {
    Ok(exact_ai_bounded(f, ceil_half(f.n()), Some(budget))?
        .expect("every function has an annihilator of degree <= ceil(n/2) on some side"))
}

/// Dimension of `{g : deg g <= d, g f = 0}` (zero polynomial included).
pub fn annihilator_space_dimension(f: &BooleanFunction, d: usize) -> Result<usize> {
    let monomials = monomial_basis(f.n(), d)?;
    let m = evaluation_matrix(&f.support(), &monomials);
    Ok(monomials.len() - m.rank())
}

/// A basis of the annihilators of `side` of degree `<= d`.
pub fn annihilator_space_basis(
    f: &BooleanFunction,
    side: Side,
    d: usize,
) -> Result<Vec<AnfPolynomial>> {
    let monomials = monomial_basis(f.n(), d)?;
    let m = evaluation_matrix(&side.select(f).support(), &monomials);
    Ok(m
        .kernel_basis()
        .basis
        .iter()
        .map(|v| polynomial_from_kernel(f.n(), &monomials, v))
        .collect())
}
