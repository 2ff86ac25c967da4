use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::anf::{AnfPolynomial, Degree};
use super::function::{check_n, BooleanFunction};
use crate::error::{Error, Result};

#[inline]
fn parity(x: u32) -> bool {
    x.count_ones() & 1 == 1
}

/// `l(x) = parity(x & mask) + constant`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineForm {
    mask: u32,
    constant: bool,
}

impl AffineForm {
    pub fn new(mask: u32, constant: bool) -> Self {
        Self { mask, constant }
    }

    /// `x_1 + ... + x_n (+ 1)`.
    pub fn all_ones(n: usize, constant: bool) -> Self {
        Self::new(((1u64 << n) - 1) as u32, constant)
    }

    /// Reads a form from an ANF polynomial of degree at most one.
    pub fn from_anf(p: &AnfPolynomial) -> Result<Self> {
        match p.degree() {
            Degree::Finite(d) if d > 1 => Err(Error::InvalidParameter(format!(
                "affine form expected, expression has degree {d}"
            ))),
            _ => {
                let mut mask = 0;
                for u in p.monomials() {
                    mask |= u;
                }
                Ok(Self::new(mask, p.coefficient(0)))
            }
        }
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn constant(&self) -> bool {
        self.constant
    }

    pub fn is_degenerate(&self) -> bool {
        self.mask == 0
    }

    pub fn complement(&self) -> Self {
        Self::new(self.mask, !self.constant)
    }

    #[inline]
    pub fn eval(&self, x: u32) -> bool {
        parity(x & self.mask) ^ self.constant
    }

    pub fn truth_table(&self, n: usize) -> Result<BooleanFunction> {
        check_n(n)?;
        if u64::from(self.mask) >> n != 0 {
            return Err(Error::InvalidParameter(format!(
                "form mask {:#x} uses variables beyond n = {n}",
                self.mask
            )));
        }
        BooleanFunction::from_fn(n, |x| self.eval(x))
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = (0..32)
            .filter(|i| self.mask >> i & 1 == 1)
            .map(|i| format!("x{}", i + 1))
            .collect();
        if self.constant || terms.is_empty() {
            terms.push(if self.constant { "1" } else { "0" }.into());
        }
        f.write_str(&terms.join(" + "))
    }
}

/// One linear constraint `parity(x & mask) = value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub mask: u32,
    pub value: bool,
}

impl Constraint {
    fn pivot(&self) -> u32 {
        self.mask.trailing_zeros()
    }
}

/// Solution set of a consistent system of affine constraints over F_2^n,
/// kept in reduced row-echelon form with strictly increasing pivots (pivot =
/// lowest set coordinate of a row).
///
/// The restriction of a function to the subspace is indexed by the free
/// (non-pivot) coordinates in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineSubspace {
    n: usize,
    constraints: Vec<Constraint>,
    free: Vec<u32>,
}

impl AffineSubspace {
    /// The whole space F_2^n.
    pub fn full(n: usize) -> Result<Self> {
        Self::from_constraints(n, &[])
    }

    /// The subspace `{x : l(x) = 0 for every l in forms}`.
    pub fn new(n: usize, forms: &[AffineForm]) -> Result<Self> {
        if forms.iter().any(AffineForm::is_degenerate) {
            return Err(Error::DegenerateForm);
        }
        let rows: Vec<Constraint> = forms
            .iter()
            .map(|l| Constraint {
                mask: l.mask,
                value: l.constant,
            })
            .collect();
        Self::from_constraints(n, &rows)
    }

    /// Fixes coordinates: each pair is `(i, b)` meaning `x_i = b` (1-based).
    pub fn fix_coordinates(n: usize, fixed: &[(usize, bool)]) -> Result<Self> {
        let mut rows = Vec::with_capacity(fixed.len());
        for &(i, b) in fixed {
            if i == 0 || i > n {
                return Err(Error::InvalidParameter(format!(
                    "coordinate x{i} out of range for n = {n}"
                )));
            }
            rows.push(Constraint {
                mask: 1 << (i - 1),
                value: b,
            });
        }
        Self::from_constraints(n, &rows)
    }

    pub fn from_constraints(n: usize, constraints: &[Constraint]) -> Result<Self> {
        check_n(n)?;
        let mut rows: Vec<Constraint> = Vec::new();
        for c in constraints {
            if u64::from(c.mask) >> n != 0 {
                return Err(Error::InvalidParameter(format!(
                    "constraint mask {:#x} out of range for n = {n}",
                    c.mask
                )));
            }
            let mut r = *c;
            for row in &rows {
                if r.mask >> row.pivot() & 1 == 1 {
                    r.mask ^= row.mask;
                    r.value ^= row.value;
                }
            }
            if r.mask == 0 {
                if r.value {
                    return Err(Error::Inconsistent);
                }
                continue;
            }
            let p = r.pivot();
            for row in &mut rows {
                if row.mask >> p & 1 == 1 {
                    row.mask ^= r.mask;
                    row.value ^= r.value;
                }
            }
            let at = rows.partition_point(|row| row.pivot() < p);
            rows.insert(at, r);
        }
        let pivots: u32 = rows.iter().fold(0, |acc, r| acc | 1 << r.pivot());
        let free = (0..n as u32).filter(|i| pivots >> i & 1 == 0).collect();
        Ok(Self {
            n,
            constraints: rows,
            free,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn codim(&self) -> usize {
        self.constraints.len()
    }

    pub fn dim(&self) -> usize {
        self.n - self.constraints.len()
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Free coordinates (0-based), ascending.
    pub fn free_coordinates(&self) -> &[u32] {
        &self.free
    }

    pub fn contains(&self, x: u32) -> bool {
        self.constraints
            .iter()
            .all(|c| parity(x & c.mask) == c.value)
    }

    /// Maps a point of F_2^dim (free coordinates) to the point of L it names.
    #[inline]
    pub fn lift(&self, y: u32) -> u32 {
        let mut x = 0u32;
        for (k, &i) in self.free.iter().enumerate() {
            x |= (y >> k & 1) << i;
        }
        for c in &self.constraints {
            let p = c.pivot();
            if parity(x & c.mask) != c.value {
                x |= 1 << p;
            }
        }
        x
    }

    /// All `2^dim` points, ordered by their free-coordinate index.
    pub fn points(&self) -> impl Iterator<Item = u32> + '_ {
        (0..(1u32 << self.dim())).map(move |y| self.lift(y))
    }

    /// Indicator `prod (l_i + 1)` of the subspace as a function on F_2^n.
    pub fn indicator(&self) -> BooleanFunction {
        BooleanFunction::from_fn(self.n, |x| self.contains(x)).expect("n validated")
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = (0..32)
            .filter(|i| self.mask >> i & 1 == 1)
            .map(|i| format!("x{}", i + 1))
            .collect();
        write!(f, "{} = {}", terms.join(" + "), u8::from(self.value))
    }
}

impl Serialize for AffineSubspace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("AffineSubspace", 3)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("dim", &self.dim())?;
        let text: Vec<String> = self.constraints.iter().map(ToString::to_string).collect();
        s.serialize_field("constraints", &text)?;
        s.end()
    }
}

/// `f|_L` as a function of the free coordinates of `L`.
pub fn restrict(f: &BooleanFunction, subspace: &AffineSubspace) -> Result<BooleanFunction> {
    f.same_n_as(subspace.n())?;
    if subspace.dim() == 0 {
        return Err(Error::ZeroDimension);
    }
    BooleanFunction::from_fn(subspace.dim(), |y| f.get(subspace.lift(y)))
}

/// `|{x in L : f(x) = 1}|`, without building the restriction.
pub fn restricted_support_count(f: &BooleanFunction, subspace: &AffineSubspace) -> Result<u64> {
    f.same_n_as(subspace.n())?;
    Ok(subspace.points().filter(|&x| f.get(x)).count() as u64)
}

impl BooleanFunction {
    pub(crate) fn same_n_as(&self, n: usize) -> Result<()> {
        if self.n() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.n(),
            });
        }
        Ok(())
    }
}
