//! Brute-force algebraic immunity for tiny `n`, by enumerating every nonzero
//! polynomial of bounded degree. Shares no code with the annihilator engine.

use crate::boolean::BooleanFunction;
use crate::error::{Error, Result};

/// Largest `n` the oracle accepts.
pub const ORACLE_MAX_N: usize = 4;

/// Truth tables (bit `x` = value at `x`) of all nonzero polynomials in `n`
/// variables, grouped by the degree bound they first satisfy.
#[derive(Debug, Clone)]
pub struct BruteForceOracle {
    n: usize,
    by_degree: Vec<Vec<u64>>,
}

fn evaluate(n: usize, monomials: &[u32]) -> u64 {
    let mut table = 0u64;
    for x in 0..(1u32 << n) {
        let value = monomials.iter().filter(|&&u| x & u == u).count() % 2;
        table |= (value as u64) << x;
    }
    table
}

impl BruteForceOracle {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > ORACLE_MAX_N {
            return Err(Error::InvalidParameter(format!(
                "brute-force oracle supports 1 <= n <= {ORACLE_MAX_N}, got {n}"
            )));
        }
        let mut by_degree = Vec::with_capacity(n + 1);
        for d in 0..=n {
            let allowed: Vec<u32> = (0..(1u32 << n))
                .filter(|u| u.count_ones() as usize <= d)
                .collect();
            let exact: Vec<u64> = (1u64..(1 << allowed.len()))
                .map(|choice| -> Vec<u32> {
                    allowed
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| choice >> i & 1 == 1)
                        .map(|(_, &u)| u)
                        .collect()
                })
                .filter(|chosen| chosen.iter().any(|u| u.count_ones() as usize == d))
                .map(|chosen| evaluate(n, &chosen))
                .collect();
            by_degree.push(exact);
        }
        Ok(Self { n, by_degree })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Smallest `d` such that some nonzero polynomial of degree `d` kills
    /// `f` or `1 + f` pointwise.
    pub fn algebraic_immunity(&self, f: &BooleanFunction) -> Result<usize> {
        if f.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: f.n(),
            });
        }
        let full = (1u64 << (1 << self.n)) - 1;
        let ones = f.words()[0] & full;
        let zeros = !ones & full;
        for (d, tables) in self.by_degree.iter().enumerate() {
            if tables.iter().any(|&g| g & ones == 0 || g & zeros == 0) {
                return Ok(d);
            }
        }
        unreachable!("the indicator of a single point kills one side")
    }
}
