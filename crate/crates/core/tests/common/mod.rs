//! Independent reference implementations used across the integration tests.
#![allow(dead_code)]

use algebraic_immunity::BooleanFunction;

/// Truth table of `f` as a plain bit vector, `x_1` the low bit of the index.
pub fn table(f: &BooleanFunction) -> Vec<bool> {
    (0..f.len() as u32).map(|x| f.get(x)).collect()
}

pub fn from_table(n: usize, bits: &[bool]) -> BooleanFunction {
    BooleanFunction::from_fn(n, |x| bits[x as usize]).unwrap()
}

/// Every nonzero polynomial of degree exactly `d` in `n <= 4` variables, as
/// 16-bit truth tables evaluated point by point from the monomial list.
pub struct AnfEnumeration {
    n: usize,
    exact_degree: Vec<Vec<u16>>,
}

impl AnfEnumeration {
    pub fn new(n: usize) -> Self {
        assert!((1..=4).contains(&n));
        let mut exact_degree = vec![Vec::new(); n + 1];
        let monomials: Vec<u32> = (0..(1u32 << n)).collect();
        for coeffs in 1u32..(1 << monomials.len()) {
            let chosen: Vec<u32> = monomials
                .iter()
                .copied()
                .filter(|&u| coeffs >> u & 1 == 1)
                .collect();
            let degree = chosen.iter().map(|u| u.count_ones() as usize).max().unwrap();
            let mut g = 0u16;
            for x in 0..(1u32 << n) {
                let mut value = false;
                for &u in &chosen {
                    if x & u == u {
                        value = !value;
                    }
                }
                if value {
                    g |= 1 << x;
                }
            }
            exact_degree[degree].push(g);
        }
        Self { n, exact_degree }
    }

    /// Smallest `d` with a nonzero `g` of degree `d` such that `g * f = 0`
    /// or `g * (1 + f) = 0`, the products taken pointwise on packed tables.
    pub fn algebraic_immunity(&self, f: &BooleanFunction) -> usize {
        assert_eq!(f.n(), self.n);
        let full = ((1u32 << (1 << self.n)) - 1) as u16;
        let ones = table(f)
            .iter()
            .enumerate()
            .fold(0u16, |acc, (x, &b)| acc | (u16::from(b) << x));
        let zeros = !ones & full;
        for (d, polys) in self.exact_degree.iter().enumerate() {
            if polys.iter().any(|&g| g & ones == 0 || g & zeros == 0) {
                return d;
            }
        }
        unreachable!()
    }
}

/// Minimum distance to the `2^(n+1)` affine functions, by direct comparison.
pub fn naive_nonlinearity(f: &BooleanFunction) -> u64 {
    let n = f.n();
    let bits = table(f);
    let mut best = u64::MAX;
    for a in 0..(1u32 << n) {
        for c in [false, true] {
            let d = (0..(1u32 << n))
                .filter(|&x| bits[x as usize] != (((a & x).count_ones() % 2 == 1) ^ c))
                .count() as u64;
            best = best.min(d);
        }
    }
    best
}

/// `r_f(a) = sum_x (-1)^(f(x) + f(x + a))`, directly.
pub fn naive_autocorrelation(f: &BooleanFunction) -> Vec<i64> {
    let bits = table(f);
    (0..bits.len())
        .map(|a| {
            (0..bits.len())
                .map(|x| if bits[x] == bits[x ^ a] { 1 } else { -1 })
                .sum()
        })
        .collect()
}

/// Cyclic orbits of `F_2^n` under `x -> rotate(x)`, computed from scratch.
pub fn orbits(n: usize) -> Vec<Vec<u32>> {
    let rot = |x: u32| ((x << 1) | (x >> (n - 1))) & ((1 << n) - 1);
    let mut seen = vec![false; 1 << n];
    let mut out = Vec::new();
    for x in 0..(1u32 << n) {
        if seen[x as usize] {
            continue;
        }
        let mut orbit = vec![x];
        seen[x as usize] = true;
        let mut y = rot(x);
        while y != x {
            seen[y as usize] = true;
            orbit.push(y);
            y = rot(y);
        }
        out.push(orbit);
    }
    out
}

/// The function that is 1 exactly on the orbits selected by `mask`.
pub fn rsbf_from_mask(n: usize, orbits: &[Vec<u32>], mask: u64) -> BooleanFunction {
    let mut bits = vec![false; 1 << n];
    for (k, orbit) in orbits.iter().enumerate() {
        if mask >> k & 1 == 1 {
            for &x in orbit {
                bits[x as usize] = true;
            }
        }
    }
    from_table(n, &bits)
}

pub fn binomial(m: u64, k: u64) -> u64 {
    if k > m {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (m - i) / (i + 1))
}
