use std::fmt;
use std::ops::{BitAnd, BitXor, Not};

use crate::error::{Error, Result};

/// Largest supported variable count.
pub const MAX_VARIABLES: usize = 24;

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARIABLES {
        return Err(Error::VariableCount(n));
    }
    Ok(())
}

pub(crate) fn word_count(n: usize) -> usize {
    if n <= 6 {
        1
    } else {
        1 << (n - 6)
    }
}

/// Mask of the valid bits in the last (only) word when n < 6.
pub(crate) fn tail_mask(n: usize) -> u64 {
    if n >= 6 {
        u64::MAX
    } else {
        (1u64 << (1 << n)) - 1
    }
}

/// A Boolean function on F_2^n stored as a bit-packed truth table.
///
/// Bit `idx(x)` of the table holds `f(x_1, ..., x_n)` where
/// `idx(x) = x_1 + 2 x_2 + ... + 2^(n-1) x_n`, so `x_1` is the least
/// significant bit of a point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: usize,
    words: Vec<u64>,
}

impl BooleanFunction {
    pub fn zero(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self {
            n,
            words: vec![0; word_count(n)],
        })
    }

    pub fn constant(n: usize, value: bool) -> Result<Self> {
        let f = Self::zero(n)?;
        Ok(if value { !f } else { f })
    }

    /// Builds the truth table by evaluating `rule` at every point.
    pub fn from_fn(n: usize, mut rule: impl FnMut(u32) -> bool) -> Result<Self> {
        let mut f = Self::zero(n)?;
        for x in 0..(1u32 << n) {
            if rule(x) {
                f.set(x, true);
            }
        }
        Ok(f)
    }

    /// Wraps raw table words; bits beyond `2^n` must be clear.
    pub fn from_words(n: usize, words: Vec<u64>) -> Result<Self> {
        check_n(n)?;
        if words.len() != word_count(n) {
            return Err(Error::InvalidParameter(format!(
                "expected {} table words for n = {n}, got {}",
                word_count(n),
                words.len()
            )));
        }
        if words[0] & !tail_mask(n) != 0 {
            return Err(Error::InvalidParameter(
                "truth table has bits set beyond 2^n".into(),
            ));
        }
        Ok(Self { n, words })
    }

    /// The coordinate function `x_i` (1-based).
    pub fn variable(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::InvalidParameter(format!(
                "variable x{i} out of range for n = {n}"
            )));
        }
        Self::from_fn(n, |x| x >> (i - 1) & 1 == 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of points, `2^n`.
    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    #[inline]
    pub fn get(&self, x: u32) -> bool {
        let x = x as usize;
        self.words[x >> 6] >> (x & 63) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, x: u32, value: bool) {
        let x = x as usize;
        let bit = 1u64 << (x & 63);
        if value {
            self.words[x >> 6] |= bit;
        } else {
            self.words[x >> 6] &= !bit;
        }
    }

    pub fn evaluate(&self, x: u64) -> Result<bool> {
        if x >= self.len() as u64 {
            return Err(Error::PointOutOfRange {
                point: x,
                n: self.n,
            });
        }
        Ok(self.get(x as u32))
    }

    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn is_balanced(&self) -> bool {
        self.weight() == 1 << (self.n - 1)
    }

    pub fn weight_and_balance(&self) -> (u64, bool) {
        let w = self.weight();
        (w, w == 1 << (self.n - 1))
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (!self.clone()).is_zero()
    }

    /// S_1(f), in increasing index order.
    pub fn support(&self) -> Vec<u32> {
        let mut points = Vec::with_capacity(self.weight() as usize);
        for (wi, &word) in self.words.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                points.push((wi as u32) << 6 | w.trailing_zeros());
                w &= w - 1;
            }
        }
        points
    }

    pub fn complement(&self) -> Self {
        !self.clone()
    }

    /// Pointwise product `g f`.
    pub fn and(&self, other: &Self) -> Result<Self> {
        self.same_n(other)?;
        Ok(self.clone() & other)
    }

    /// Pointwise sum `g + f`.
    pub fn xor(&self, other: &Self) -> Result<Self> {
        self.same_n(other)?;
        Ok(self.clone() ^ other)
    }

    /// Hamming distance `d(f, g) = wt(f + g)`.
    pub fn distance(&self, other: &Self) -> Result<u64> {
        self.same_n(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| u64::from((a ^ b).count_ones()))
            .sum())
    }

    pub(crate) fn same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    /// Big-endian hex of the table: the first digit holds bits `2^n-1 .. 2^n-4`.
    pub fn to_hex(&self) -> String {
        let digits = (self.len() / 4).max(1);
        let mut out = String::with_capacity(digits);
        for d in (0..digits).rev() {
            let bit = d * 4;
            let nibble = (self.words[bit >> 6] >> (bit & 63)) & 0xf;
            out.push(char::from_digit(nibble as u32, 16).unwrap().to_ascii_uppercase());
        }
        out
    }

    /// Parses the big-endian hex table format. When `n` is not given it is
    /// inferred from the digit count (a single digit is read as n = 2).
    pub fn from_hex(text: &str, n: Option<usize>) -> Result<Self> {
        let digits: Vec<(usize, u32)> = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(pos, c)| {
                c.to_digit(16)
                    .map(|v| (pos, v))
                    .ok_or_else(|| Error::parse(pos, format!("invalid hex digit {c:?}")))
            })
            .collect::<Result<_>>()?;
        if digits.is_empty() {
            return Err(Error::parse(0, "empty truth table"));
        }
        let n = match n {
            Some(n) => n,
            None => {
                let count = digits.len();
                if !count.is_power_of_two() {
                    return Err(Error::parse(
                        0,
                        format!("{count} hex digits is not a power of two"),
                    ));
                }
                count.trailing_zeros() as usize + 2
            }
        };
        check_n(n)?;
        let expected = (1usize << n).div_ceil(4);
        if digits.len() != expected {
            return Err(Error::parse(
                0,
                format!("expected {expected} hex digits for n = {n}, got {}", digits.len()),
            ));
        }
        let mut f = Self::zero(n)?;
        for (k, &(pos, value)) in digits.iter().enumerate() {
            let bit = (expected - 1 - k) * 4;
            let value = u64::from(value);
            if n == 1 && value > 3 {
                return Err(Error::parse(pos, "digit exceeds a 2-bit table"));
            }
            f.words[bit >> 6] |= value << (bit & 63);
        }
        Ok(f)
    }
}

impl Not for BooleanFunction {
    type Output = BooleanFunction;

    fn not(mut self) -> Self::Output {
        for w in &mut self.words {
            *w = !*w;
        }
        self.words[0] &= tail_mask(self.n);
        self
    }
}

impl BitAnd<&BooleanFunction> for BooleanFunction {
    type Output = BooleanFunction;

    fn bitand(mut self, rhs: &BooleanFunction) -> Self::Output {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a &= b;
        }
        self
    }
}

impl BitXor<&BooleanFunction> for BooleanFunction {
    type Output = BooleanFunction;

    fn bitxor(mut self, rhs: &BooleanFunction) -> Self::Output {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
        self
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(n={}, {})", self.n, self.to_hex())
    }
}

impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}
