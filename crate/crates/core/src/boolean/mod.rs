//! Boolean functions on F_2^n: truth tables, algebraic normal form,
//! Walsh and autocorrelation spectra, affine subspaces and restriction.

mod anf;
mod function;
mod spectrum;
mod subspace;

pub use anf::{format_monomial, moebius_in_place, AnfPolynomial, Degree};
pub use function::{BooleanFunction, MAX_VARIABLES};
pub use spectrum::{
    autocorrelation_profile, distance_to_affine, distance_via_walsh,
    walsh_spectrum_and_nonlinearity, AutocorrelationProfile, WalshSpectrum,
};
pub use subspace::{restrict, restricted_support_count, AffineForm, AffineSubspace, Constraint};

