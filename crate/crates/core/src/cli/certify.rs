use serde::Serialize;

use super::analyze::{coverage_subset_budget, natural_symmetry};
use super::Report;
use crate::boolean::{AffineForm, BooleanFunction};
use crate::bounds::{
    corollary1_analyze, corollary4_bound, corollary5_bound, coverage_certifier,
    theorem2_certificate, AiCertificate, Corollary1Analysis, Symmetry,
};
use crate::error::{Error, Result};
use crate::families::SimplifiedValueVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertifyRequest {
    Theorem2,
    Corollary1 { form: AffineForm },
    Corollary4,
    Corollary5 { h_size: u64 },
    /// Without a symmetry, the strongest one the function has is used.
    Coverage { symmetry: Option<Symmetry> },
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum CertifyReport {
    Certificate(AiCertificate),
    Corollary1(Corollary1Analysis),
}

impl CertifyReport {
    pub fn certificate(&self) -> &AiCertificate {
        match self {
            CertifyReport::Certificate(c) => c,
            CertifyReport::Corollary1(a) => &a.certificate,
        }
    }
}

impl Report for CertifyReport {}

pub fn cmd_certify(
    f: &BooleanFunction,
    request: &CertifyRequest,
    budget: u64,
) -> Result<CertifyReport> {
    let n = f.n();
    Ok(match request {
        CertifyRequest::Theorem2 => CertifyReport::Certificate(theorem2_certificate(f)),
        CertifyRequest::Corollary1 { form } => {
            if u64::from(form.mask()) >> n != 0 {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: 32 - form.mask().leading_zeros() as usize,
                });
            }
            CertifyReport::Corollary1(corollary1_analyze(f, form, Some(budget))?)
        }
        CertifyRequest::Corollary4 => {
            let v = SimplifiedValueVector::of_function(f).ok_or(Error::NotSymmetric)?;
            CertifyReport::Certificate(corollary4_bound(&v))
        }
        CertifyRequest::Corollary5 { h_size } => {
            CertifyReport::Certificate(corollary5_bound(n, *h_size)?)
        }
        CertifyRequest::Coverage { symmetry } => CertifyReport::Certificate(coverage_certifier(
            f,
            symmetry.unwrap_or_else(|| natural_symmetry(f)),
            coverage_subset_budget(n, budget),
        )?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::annihilator::DEFAULT_WORK_BUDGET;
    use crate::families::{orbit_of, orbit_swap_construction, symmetric_expand};

    #[test]
    fn example1_corollary4() {
        let v: SimplifiedValueVector = "0011111100000011".parse().unwrap();
        let r = cmd_certify(&symmetric_expand(&v), &CertifyRequest::Corollary4, DEFAULT_WORK_BUDGET)
            .unwrap();
        assert_eq!(r.certificate().bound, 5);
        assert_eq!(r.certificate().evidence.u, Some(246));
    }

    #[test]
    fn coverage_dominates_closed_form_on_swap() {
        let n = 9;
        let s = orbit_swap_construction(
            n,
            &[orbit_of(n, 0b11111).unwrap()],
            &[orbit_of(n, 0b1111).unwrap()],
        )
        .unwrap();
        let request = CertifyRequest::Coverage {
            symmetry: Some(Symmetry::Rotation),
        };
        let r = cmd_certify(&s.function, &request, DEFAULT_WORK_BUDGET).unwrap();
        assert!(r.certificate().bound >= s.certificate.bound);
    }

    #[test]
    fn preconditions() {
        let x1 = BooleanFunction::variable(5, 1).unwrap();
        assert_eq!(
            cmd_certify(&x1, &CertifyRequest::Corollary4, 1).unwrap_err(),
            Error::NotSymmetric
        );
        let tiny = CertifyRequest::Coverage {
            symmetry: Some(Symmetry::Generic),
        };
        assert!(matches!(cmd_certify(&x1, &tiny, 10), Err(Error::CostLimit { .. })));
        let form = CertifyRequest::Corollary1 {
            form: AffineForm::new(1 << 6, false),
        };
        assert!(matches!(cmd_certify(&x1, &form, 1 << 20), Err(Error::DimensionMismatch { .. })));
        let r = cmd_certify(&x1, &CertifyRequest::Theorem2, 1).unwrap();
        assert_eq!(r.certificate().bound, 0);
    }
}
