//! Symmetric and rotation-symmetric function families.

mod orbits;
mod symmetric;

use std::collections::BTreeSet;

use serde::Serialize;

pub use orbits::{
    is_rotation_symmetric, nearest_balanced_even_variant, orbit_of, orbit_representatives,
    orbit_representatives_of_weight, rotate, rsbf_expand, CyclicOrbit, RsbfSpec,
};
pub use symmetric::{
    corollary3_threshold, corollary3_vector, elementary_symmetric_sum, example2_vector,
    majority_vector, symmetric_expand, Example2Family, SimplifiedValueVector, TailParity,
};

use crate::boolean::BooleanFunction;
use crate::bounds::{corollary5_bound, coverage_certifier, AiCertificate, Symmetry};
use crate::error::{Error, Result};
use crate::math::ceil_half;

/// Result of exchanging cyclic orbits between the zero set and the support
/// of the odd-`n` majority function.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitSwap {
    #[serde(skip)]
    pub function: BooleanFunction,
    /// Orbits moved from the zero set into the support.
    pub moved_to_support: Vec<CyclicOrbit>,
    /// Orbits moved from the support into the zero set.
    pub moved_to_zeros: Vec<CyclicOrbit>,
    pub h_size: u64,
    pub certificate: AiCertificate,
}

/// Starting from `f = majority`, sets `S_1(f') = S_1(f) + H - H'` where `H`
/// lies in the zero set (weight `>= ceil(n/2)`) and `H'` in the support
/// (weight `< ceil(n/2)`), both unions of orbits of equal total size.
pub fn orbit_swap_construction(
    n: usize,
    h: &[CyclicOrbit],
    h_prime: &[CyclicOrbit],
) -> Result<OrbitSwap> {
    let base = symmetric_expand(&majority_vector(n)?);
    let t = ceil_half(n);
    let normalize = |orbits: &[CyclicOrbit], into_support: bool| -> Result<Vec<CyclicOrbit>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::with_capacity(orbits.len());
        for o in orbits {
            let canonical = orbit_of(n, o.representative)?;
            if o.n != n || canonical != *o {
                return Err(Error::InvalidParameter(format!(
                    "{:#x} does not name an orbit of F_2^{n}",
                    o.representative
                )));
            }
            let in_zero_set = canonical.weight() >= t;
            if in_zero_set != into_support {
                return Err(Error::InvalidParameter(format!(
                    "orbit {:#x} (weight {}) is on the wrong side of the majority function",
                    o.representative,
                    o.weight()
                )));
            }
            if !seen.insert(canonical.representative) {
                return Err(Error::InvalidParameter(format!(
                    "orbit {:#x} listed twice",
                    o.representative
                )));
            }
            out.push(canonical);
        }
        Ok(out)
    };
    let h = normalize(h, true)?;
    let h_prime = normalize(h_prime, false)?;
    let size = |os: &[CyclicOrbit]| os.iter().map(|o| o.size as u64).sum::<u64>();
    let h_size = size(&h);
    if h_size != size(&h_prime) {
        return Err(Error::InvalidParameter(format!(
            "|H| = {h_size} differs from |H'| = {}",
            size(&h_prime)
        )));
    }
    let mut function = base;
    for o in &h {
        for x in o.members() {
            function.set(x, true);
        }
    }
    for o in &h_prime {
        for x in o.members() {
            function.set(x, false);
        }
    }
    let certificate = if h_size == 0 {
        coverage_certifier(&function, Symmetry::Symmetric, 1)?
    } else {
        corollary5_bound(n, h_size)?
    };
    Ok(OrbitSwap {
        function,
        moved_to_support: h,
        moved_to_zeros: h_prime,
        h_size,
        certificate,
    })
}
