use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::boolean::BooleanFunction;
use crate::error::{Error, Result};
use crate::math::{binomial, ceil_half, ceil_log2};

/// `v(f) = (v_0, ..., v_n)` with `f(x) = v_{wt(x)}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SimplifiedValueVector {
    n: usize,
    bits: u32,
}

impl SimplifiedValueVector {
    pub fn new(n: usize, values: &[bool]) -> Result<Self> {
        crate::boolean::BooleanFunction::zero(n)?;
        if values.len() != n + 1 {
            return Err(Error::InvalidParameter(format!(
                "value vector for n = {n} needs {} entries, got {}",
                n + 1,
                values.len()
            )));
        }
        let bits = values
            .iter()
            .enumerate()
            .fold(0u32, |acc, (i, &b)| acc | u32::from(b) << i);
        Ok(Self { n, bits })
    }

    /// Bit `i` of `mask` is `v_i`.
    pub fn from_mask(n: usize, mask: u32) -> Result<Self> {
        crate::boolean::BooleanFunction::zero(n)?;
        if u64::from(mask) >> (n + 1) != 0 {
            return Err(Error::InvalidParameter(format!(
                "mask {mask:#x} has entries beyond weight {n}"
            )));
        }
        Ok(Self { n, bits: mask })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u32 {
        self.bits
    }

    pub fn get(&self, weight: usize) -> bool {
        self.bits >> weight & 1 == 1
    }

    pub fn values(&self) -> Vec<bool> {
        (0..=self.n).map(|i| self.get(i)).collect()
    }

    /// Weight of the expanded function, `sum_{v_i = 1} C(n, i)`.
    pub fn weight(&self) -> u64 {
        (0..=self.n)
            .filter(|&i| self.get(i))
            .map(|i| binomial(self.n as i64, i as i64))
            .sum()
    }

    /// Positions where the two vectors differ.
    pub fn differences(&self, other: &Self) -> Vec<usize> {
        (0..=self.n.max(other.n))
            .filter(|&i| self.get(i) != other.get(i))
            .collect()
    }

    /// The value vector of `f` if `f` is symmetric.
    pub fn of_function(f: &BooleanFunction) -> Option<Self> {
        let n = f.n();
        let bits = (0..=n).fold(0u32, |acc, w| {
            acc | u32::from(f.get(((1u64 << w) - 1) as u32)) << w
        });
        let v = Self { n, bits };
        (0..f.len() as u32)
            .all(|x| f.get(x) == v.get(x.count_ones() as usize))
            .then_some(v)
    }
}

/// `f(x) = v_{wt(x)}`.
pub fn symmetric_expand(v: &SimplifiedValueVector) -> BooleanFunction {
    BooleanFunction::from_fn(v.n, |x| v.get(x.count_ones() as usize)).expect("n validated")
}

impl fmt::Display for SimplifiedValueVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..=self.n {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for SimplifiedValueVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplifiedValueVector({self})")
    }
}

impl FromStr for SimplifiedValueVector {
    type Err = Error;

    /// `v_0 ... v_n` as a 0/1 string; whitespace is ignored.
    fn from_str(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        for (pos, c) in text.char_indices() {
            match c {
                '0' => values.push(false),
                '1' => values.push(true),
                c if c.is_whitespace() => {}
                c => return Err(Error::parse(pos, format!("expected 0 or 1, found {c:?}"))),
            }
        }
        if values.len() < 2 {
            return Err(Error::parse(0, "value vector needs at least two entries"));
        }
        Self::new(values.len() - 1, &values)
    }
}

impl Serialize for SimplifiedValueVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Value vector of `sum_{k in K} sigma_k`, using `C(i, k) mod 2 = [k & i == k]`.
pub fn elementary_symmetric_sum(n: usize, ks: &BTreeSet<usize>) -> Result<SimplifiedValueVector> {
    if let Some(&k) = ks.iter().find(|&&k| k > n) {
        return Err(Error::InvalidParameter(format!("sigma_{k} exceeds n = {n}")));
    }
    let values: Vec<bool> = (0..=n)
        .map(|i| ks.iter().filter(|&&k| k & i == k).count() % 2 == 1)
        .collect();
    SimplifiedValueVector::new(n, &values)
}

/// `v_i = 1` iff `i < ceil(n/2)`, for odd `n`.
pub fn majority_vector(n: usize) -> Result<SimplifiedValueVector> {
    if n % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "majority vector is balanced only for odd n (got {n}); use the even-n rotation-symmetric variant"
        )));
    }
    let t = ceil_half(n);
    let values: Vec<bool> = (0..=n).map(|i| i < t).collect();
    SimplifiedValueVector::new(n, &values)
}

/// The weight sets of the second symmetric family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Example2Family {
    pub vector: SimplifiedValueVector,
    /// Weights where the function is 1.
    pub ones: BTreeSet<usize>,
    /// Weights where the function is 0 (weight 0 is added to neither set and
    /// takes the value 0).
    pub zeros: BTreeSet<usize>,
    /// Smallest positive `t` with `C(ceil(n/2), i) + 1 < 2^t`.
    pub t: u32,
    /// `ceil(n/2) - t + 1`.
    pub claimed_bound: usize,
}

/// `I = {1..floor(n/2), n-i} - {i}` set to 1, `J = {ceil(n/2)..n, i} - {n-i}` set to 0.
pub fn example2_vector(n: usize, i: usize) -> Result<Example2Family> {
    let half = n / 2;
    if i == 0 || i > half || i == n - i {
        return Err(Error::InvalidParameter(format!(
            "parameter i = {i} must satisfy 1 <= i <= {half} and i != n - i"
        )));
    }
    let mut ones: BTreeSet<usize> = (1..=half).collect();
    ones.insert(n - i);
    ones.remove(&i);
    let mut zeros: BTreeSet<usize> = (ceil_half(n)..=n).collect();
    zeros.insert(i);
    zeros.remove(&(n - i));
    let values: Vec<bool> = (0..=n).map(|w| ones.contains(&w)).collect();
    let vector = SimplifiedValueVector::new(n, &values)?;
    let c = binomial(ceil_half(n) as i64, i as i64);
    // smallest positive t with c + 1 < 2^t
    let t = (ceil_log2(c + 2)).max(1);
    let claimed_bound = (ceil_half(n) + 1).saturating_sub(t as usize);
    Ok(Example2Family {
        vector,
        ones,
        zeros,
        t,
        claimed_bound,
    })
}

/// Parity required on the tail of a non-maximal symmetric function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TailParity {
    OddWeights,
    EvenWeights,
}

impl TailParity {
    pub fn admits(self, weight: usize) -> bool {
        match self {
            TailParity::OddWeights => weight % 2 == 1,
            TailParity::EvenWeights => weight % 2 == 0,
        }
    }
}

/// First weight of the parity-constrained tail: `floor(n/2)` for odd `n`,
/// `n/2 - 1` for even `n`.
pub fn corollary3_threshold(n: usize) -> usize {
    if n % 2 == 1 {
        n / 2
    } else {
        (n / 2).saturating_sub(1)
    }
}

/// Symmetric function that is 1 exactly on the `parity` weights from the
/// threshold upward and follows `low_completion` below it.
pub fn corollary3_vector(
    n: usize,
    parity: TailParity,
    low_completion: &[bool],
) -> Result<SimplifiedValueVector> {
    let m = corollary3_threshold(n);
    if low_completion.len() != m {
        return Err(Error::InvalidParameter(format!(
            "low completion for n = {n} needs {m} bits, got {}",
            low_completion.len()
        )));
    }
    let values: Vec<bool> = (0..=n)
        .map(|w| if w < m { low_completion[w] } else { parity.admits(w) })
        .collect();
    SimplifiedValueVector::new(n, &values)
}
