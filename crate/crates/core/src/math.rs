//! Small exact integer helpers.

/// `C(m, i)`, zero outside `0 <= i <= m`.
pub fn binomial(m: i64, i: i64) -> u64 {
    if m < 0 || i < 0 || i > m {
        return 0;
    }
    let i = i.min(m - i) as u64;
    let m = m as u64;
    let mut acc: u128 = 1;
    for k in 0..i {
        acc = acc * u128::from(m - k) / u128::from(k + 1);
    }
    acc as u64
}

/// `sum_{i=0}^{top} C(m, i)`; empty (zero) when `top < 0`.
pub fn binomial_prefix_sum(m: i64, top: i64) -> u64 {
    (0..=top).map(|i| binomial(m, i)).sum()
}

/// `ceil(log2(x))` for `x >= 1`.
pub fn ceil_log2(x: u64) -> u32 {
    assert!(x >= 1, "log of zero");
    64 - (x - 1).leading_zeros()
}

/// `floor(log2(x))` for `x >= 1`.
pub fn floor_log2(x: u64) -> u32 {
    assert!(x >= 1, "log of zero");
    63 - x.leading_zeros()
}

pub fn ceil_half(n: usize) -> usize {
    n.div_ceil(2)
}
