use super::function::BooleanFunction;
use super::subspace::AffineForm;
use crate::error::Result;

fn walsh_hadamard_in_place<T>(values: &mut [T])
where
    T: Copy + std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
{
    let mut half = 1;
    while half < values.len() {
        for block in values.chunks_mut(half * 2) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        half <<= 1;
    }
}

/// `W_f(a) = sum_x (-1)^(f(x) + a.x)` for every `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: usize,
    values: Vec<i32>,
}

impl WalshSpectrum {
    pub fn of(f: &BooleanFunction) -> Self {
        let mut values: Vec<i32> = (0..f.len() as u32)
            .map(|x| if f.get(x) { -1 } else { 1 })
            .collect();
        walsh_hadamard_in_place(&mut values);
        Self { n: f.n(), values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn at(&self, a: u32) -> i32 {
        self.values[a as usize]
    }

    pub fn max_abs(&self) -> u32 {
        self.values.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0)
    }

    /// `2^(n-1) - max_a |W_f(a)| / 2`.
    pub fn nonlinearity(&self) -> u64 {
        (1u64 << (self.n - 1)) - u64::from(self.max_abs() / 2)
    }

    /// Sum of squares; equals `2^(2n)` for every Boolean function.
    pub fn parseval_sum(&self) -> u64 {
        self.values.iter().map(|&v| (i64::from(v) * i64::from(v)) as u64).sum()
    }
}

pub fn walsh_spectrum_and_nonlinearity(f: &BooleanFunction) -> (WalshSpectrum, u64) {
    let spectrum = WalshSpectrum::of(f);
    let nl = spectrum.nonlinearity();
    (spectrum, nl)
}

/// `d(f, l)` through the spectrum: `2^(n-1) - (-1)^c W_f(mask) / 2`.
pub fn distance_via_walsh(spectrum: &WalshSpectrum, l: &AffineForm) -> u64 {
    let w = i64::from(spectrum.at(l.mask()));
    let signed = if l.constant() { -w } else { w };
    ((1i64 << (spectrum.n() - 1)) - signed / 2) as u64
}

/// `d(f, l)` as the weight of `f + l`. Checks that the spectral route agrees.
pub fn distance_to_affine(f: &BooleanFunction, l: &AffineForm) -> Result<u64> {
    let direct = f.distance(&l.truth_table(f.n())?)?;
    debug_assert_eq!(direct, distance_via_walsh(&WalshSpectrum::of(f), l));
    Ok(direct)
}

/// Autocorrelation spectrum `r_f(a) = sum_x (-1)^(f(x) + f(x + a))` with its
/// absolute indicator and propagation-criterion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutocorrelationProfile {
    pub values: Vec<i64>,
    /// `max_{a != 0} |r_f(a)|`.
    pub delta: u64,
    /// Largest `k` with `r_f(a) = 0` for all `1 <= wt(a) <= k`.
    pub pc_order: usize,
}

pub fn autocorrelation_profile(f: &BooleanFunction) -> AutocorrelationProfile {
    let n = f.n();
    // r_f is the inverse transform of W_f^2.
    let spectrum = WalshSpectrum::of(f);
    let mut values: Vec<i64> = spectrum
        .values()
        .iter()
        .map(|&w| i64::from(w) * i64::from(w))
        .collect();
    walsh_hadamard_in_place(&mut values);
    for v in &mut values {
        *v >>= n;
    }
    let delta = values[1..].iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
    let mut lowest_bad_weight = n + 1;
    for (a, &r) in values.iter().enumerate().skip(1) {
        if r != 0 {
            lowest_bad_weight = lowest_bad_weight.min(a.count_ones() as usize);
        }
    }
    AutocorrelationProfile {
        values,
        delta,
        pc_order: lowest_bad_weight - 1,
    }
}
