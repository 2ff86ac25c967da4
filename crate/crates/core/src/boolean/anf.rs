use std::fmt;

use serde::{Serialize, Serializer};

use super::function::BooleanFunction;
use crate::error::{Error, Result};

const LOW_HALF: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

/// In-place binary Möbius transform of a packed `2^n`-bit vector.
///
/// The transform is an involution and maps a truth table to its ANF
/// coefficients (and back).
pub fn moebius_in_place(words: &mut [u64], n: usize) {
    for (i, mask) in LOW_HALF.iter().enumerate().take(n.min(6)) {
        let shift = 1 << i;
        for w in words.iter_mut() {
            *w ^= (*w & mask) << shift;
        }
    }
    for i in 6..n {
        let half = 1 << (i - 6);
        for block in words.chunks_mut(half * 2) {
            let (lo, hi) = block.split_at_mut(half);
            for (h, l) in hi.iter_mut().zip(lo.iter()) {
                *h ^= *l;
            }
        }
    }
}

/// Algebraic degree, with a distinct marker for the zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    ZeroPolynomial,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::ZeroPolynomial => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::ZeroPolynomial => f.write_str("ZERO"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Degree::ZeroPolynomial => serializer.serialize_str("ZERO"),
            Degree::Finite(d) => serializer.serialize_u64(*d as u64),
        }
    }
}

/// ANF coefficients: bit `u` is the coefficient of the monomial `prod_{i in u} x_i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AnfPolynomial {
    coeffs: BooleanFunction,
}

impl AnfPolynomial {
    pub fn zero(n: usize) -> Result<Self> {
        Ok(Self {
            coeffs: BooleanFunction::zero(n)?,
        })
    }

    /// Sum of the given monomials; repeated masks cancel.
    pub fn from_monomials(n: usize, masks: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut p = Self::zero(n)?;
        for u in masks {
            if u as u64 >= 1 << n {
                return Err(Error::InvalidParameter(format!(
                    "monomial mask {u:#x} out of range for n = {n}"
                )));
            }
            let c = p.coeffs.get(u);
            p.coeffs.set(u, !c);
        }
        Ok(p)
    }

    pub fn from_function(f: &BooleanFunction) -> Self {
        let mut coeffs = f.clone();
        moebius_in_place(coeffs.words_mut(), f.n());
        Self { coeffs }
    }

    pub fn truth_table(&self) -> BooleanFunction {
        let mut table = self.coeffs.clone();
        moebius_in_place(table.words_mut(), self.n());
        table
    }

    pub fn n(&self) -> usize {
        self.coeffs.n()
    }

    pub fn coefficient(&self, mask: u32) -> bool {
        self.coeffs.get(mask)
    }

    /// Raw coefficient vector, same packing as a truth table.
    pub fn coefficients(&self) -> &BooleanFunction {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// Masks of the monomials present, ordered by (degree, mask).
    pub fn monomials(&self) -> Vec<u32> {
        let mut m = self.coeffs.support();
        m.sort_by_key(|&u| (u.count_ones(), u));
        m
    }

    pub fn degree(&self) -> Degree {
        self.coeffs
            .support()
            .into_iter()
            .map(|u| u.count_ones() as usize)
            .max()
            .map_or(Degree::ZeroPolynomial, Degree::Finite)
    }

    /// Parses `term (+ term)*` with `term := 1 | 0 | x<i> (* x<i>)*`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut p = Self::zero(n)?;
        let chars: Vec<(usize, char)> = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        if chars.is_empty() {
            return Err(Error::parse(0, "empty expression"));
        }
        let end = text.len();
        let mut pos = 0;
        loop {
            let (mask, constant_zero, next) = parse_term(&chars, pos, n, end)?;
            if !constant_zero {
                let c = p.coeffs.get(mask);
                p.coeffs.set(mask, !c);
            }
            pos = next;
            match chars.get(pos) {
                None => break,
                Some(&(_, '+')) => pos += 1,
                Some(&(at, c)) => return Err(Error::parse(at, format!("expected '+', found {c:?}"))),
            }
        }
        Ok(p)
    }
}

fn parse_term(
    chars: &[(usize, char)],
    mut pos: usize,
    n: usize,
    end: usize,
) -> Result<(u32, bool, usize)> {
    let at = |pos: usize| chars.get(pos).map_or(end, |&(p, _)| p);
    match chars.get(pos) {
        Some(&(_, '1')) => return Ok((0, false, pos + 1)),
        Some(&(_, '0')) => return Ok((0, true, pos + 1)),
        _ => {}
    }
    let mut mask = 0u32;
    loop {
        match chars.get(pos) {
            Some(&(_, 'x')) | Some(&(_, 'X')) => pos += 1,
            Some(&(p, c)) => return Err(Error::parse(p, format!("expected a term, found {c:?}"))),
            None => return Err(Error::parse(end, "expected a term")),
        }
        let start = pos;
        let mut index = 0usize;
        while let Some(&(_, c)) = chars.get(pos) {
            let Some(d) = c.to_digit(10) else { break };
            index = index.saturating_mul(10).saturating_add(d as usize);
            pos += 1;
        }
        if pos == start {
            return Err(Error::parse(at(pos), "expected a variable index"));
        }
        if index == 0 || index > n {
            return Err(Error::parse(
                at(start),
                format!("variable x{index} out of range 1..={n}"),
            ));
        }
        mask |= 1 << (index - 1);
        if let Some(&(_, '*')) = chars.get(pos) {
            pos += 1;
        } else {
            return Ok((mask, false, pos));
        }
    }
}

/// Formats one monomial as `1` or `x1*x3`.
pub fn format_monomial(mask: u32) -> String {
    if mask == 0 {
        return "1".into();
    }
    (0..32)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| format!("x{}", i + 1))
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for AnfPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.monomials();
        if terms.is_empty() {
            return f.write_str("0");
        }
        let text: Vec<String> = terms.into_iter().map(format_monomial).collect();
        f.write_str(&text.join(" + "))
    }
}

impl fmt::Debug for AnfPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AnfPolynomial(n={}, {})", self.n(), self)
    }
}

impl Serialize for AnfPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl BooleanFunction {
    pub fn anf(&self) -> AnfPolynomial {
        AnfPolynomial::from_function(self)
    }

    pub fn degree(&self) -> Degree {
        self.anf().degree()
    }
}
