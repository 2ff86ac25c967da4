use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::json;

use super::{format_function, InputFormat, Report, Warning};
use crate::boolean::BooleanFunction;
use crate::bounds::{corollary3_nonmax_check, corollary4_bound, AiCertificate};
use crate::error::{Error, Result};
use crate::families::{
    elementary_symmetric_sum, example2_vector, majority_vector, nearest_balanced_even_variant,
    orbit_of, orbit_swap_construction, symmetric_expand, SimplifiedValueVector, TailParity,
};

/// Value vector printed for the `n = 15` sum of elementary symmetric
/// polynomials of degrees 2, 4, 6, 10, 12, 14.
pub const EXAMPLE1_VECTOR: &str = "0011111100000011";
const EXAMPLE1_DEGREES: [usize; 6] = [2, 4, 6, 10, 12, 14];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Majority { n: usize },
    SigmaSum { n: usize, degrees: BTreeSet<usize> },
    Example2 { n: usize, i: usize },
    Corollary3 { n: usize, parity: TailParity, low: Vec<bool> },
    OrbitSwap { n: usize, h: Vec<u32>, h_prime: Vec<u32> },
    EvenBalanced { n: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Majority { .. } => "majority",
            Family::SigmaSum { .. } => "sigma-sum",
            Family::Example2 { .. } => "example2",
            Family::Corollary3 { .. } => "corollary3",
            Family::OrbitSwap { .. } => "orbit-swap",
            Family::EvenBalanced { .. } => "even-balanced",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Construction {
    pub family: &'static str,
    pub n: usize,
    pub format: InputFormat,
    pub function: String,
    pub weight: u64,
    pub balanced: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_vector: Option<SimplifiedValueVector>,
    /// Family-specific construction data.
    pub record: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<AiCertificate>,
    pub warnings: Vec<Warning>,
    #[serde(skip)]
    pub truth_table: BooleanFunction,
}

impl Report for Construction {}

fn symmetric_parts(v: SimplifiedValueVector) -> (BooleanFunction, Option<SimplifiedValueVector>, Option<AiCertificate>) {
    let certificate = corollary4_bound(&v);
    (symmetric_expand(&v), Some(v), Some(certificate))
}

pub fn cmd_construct(family: &Family, format: InputFormat, budget: u64) -> Result<Construction> {
    let mut warnings = Vec::new();
    let (function, value_vector, certificate, record) = match family {
        Family::Majority { n } => {
            let (f, v, c) = symmetric_parts(majority_vector(*n)?);
            (f, v, c, json!({}))
        }
        Family::SigmaSum { n, degrees } => {
            let v = elementary_symmetric_sum(*n, degrees)?;
            if *n == 15 && degrees.iter().copied().eq(EXAMPLE1_DEGREES) {
                let printed: SimplifiedValueVector = EXAMPLE1_VECTOR.parse()?;
                let differing = v.differences(&printed);
                if !differing.is_empty() {
                    let u = |x: &SimplifiedValueVector| corollary4_bound(x).evidence.u;
                    warnings.push(
                        Warning::new(
                            "EXAMPLE1_VECTOR_DISCREPANCY",
                            "expanded value vector differs from the published one; both give the same U",
                        )
                        .with("computed_vector", v.to_string())
                        .with("published_vector", EXAMPLE1_VECTOR)
                        .with("differing_weights", &differing)
                        .with("computed_U", u(&v))
                        .with("published_U", u(&printed)),
                    );
                }
            }
            let (f, v, c) = symmetric_parts(v);
            (f, v, c, json!({ "degrees": degrees }))
        }
        Family::Example2 { n, i } => {
            let fam = example2_vector(*n, *i)?;
            let record = json!({
                "i": i,
                "ones": fam.ones,
                "zeros": fam.zeros,
                "t": fam.t,
                "claimed_bound": fam.claimed_bound,
            });
            let (f, v, c) = symmetric_parts(fam.vector);
            (f, v, c, record)
        }
        Family::Corollary3 { n, parity, low } => {
            let v = crate::families::corollary3_vector(*n, *parity, low)?;
            let f = symmetric_expand(&v);
            let record = match corollary3_nonmax_check(&f, *parity, Some(budget)) {
                Ok(check) => json!({ "parity": parity, "check": check }),
                Err(Error::CostLimit { required, budget }) => {
                    warnings.push(
                        Warning::new("COST_CAP", "non-maximality check skipped: work budget exceeded")
                            .with("required", required)
                            .with("budget", budget),
                    );
                    json!({ "parity": parity })
                }
                Err(e) => return Err(e),
            };
            (f, Some(v), None, record)
        }
        Family::OrbitSwap { n, h, h_prime } => {
            let orbits = |reps: &[u32]| -> Result<Vec<_>> {
                reps.iter().map(|&r| orbit_of(*n, r)).collect()
            };
            let swap = orbit_swap_construction(*n, &orbits(h)?, &orbits(h_prime)?)?;
            if swap.certificate.evidence.power_of_two_edge == Some(true) {
                warnings.push(
                    Warning::new(
                        "POWER_OF_TWO_EDGE",
                        "|H| is a power of two; the closed-form bound may overstate, certify coverage on the function",
                    )
                    .with("h_size", swap.h_size),
                );
            }
            let record = json!({
                "moved_to_support": swap.moved_to_support,
                "moved_to_zeros": swap.moved_to_zeros,
                "h_size": swap.h_size,
            });
            let v = SimplifiedValueVector::of_function(&swap.function);
            (swap.function, v, Some(swap.certificate), record)
        }
        Family::EvenBalanced { n } => {
            let (f, imbalance) = nearest_balanced_even_variant(*n)?;
            let v = SimplifiedValueVector::of_function(&f);
            (f, v, None, json!({ "imbalance": imbalance }))
        }
    };
    Ok(Construction {
        family: family.name(),
        n: function.n(),
        format,
        function: format_function(&function, format)?,
        weight: function.weight(),
        balanced: function.is_balanced(),
        value_vector,
        record,
        certificate,
        warnings,
        truth_table: function,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::annihilator::DEFAULT_WORK_BUDGET;

    fn build(family: Family) -> Construction {
        cmd_construct(&family, InputFormat::HexTable, DEFAULT_WORK_BUDGET).unwrap()
    }

    #[test]
    fn majority_seven() {
        let c = build(Family::Majority { n: 7 });
        assert_eq!(c.value_vector.unwrap().to_string(), "11110000");
        assert_eq!(c.certificate.unwrap().bound, 4);
        assert!(c.balanced);
    }

    #[test]
    fn sigma_sum_warning() {
        let c = build(Family::SigmaSum {
            n: 15,
            degrees: EXAMPLE1_DEGREES.into_iter().collect(),
        });
        assert_eq!(c.warnings.len(), 1);
        let w = &c.warnings[0];
        assert_eq!(w.code, "EXAMPLE1_VECTOR_DISCREPANCY");
        assert_eq!(w.details["differing_weights"], json!([14, 15]));
        assert_eq!(w.details["computed_U"], json!(246));
        assert_eq!(w.details["published_U"], json!(246));
        let quiet = build(Family::SigmaSum {
            n: 15,
            degrees: [2, 4].into_iter().collect(),
        });
        assert!(quiet.warnings.is_empty());
    }

    #[test]
    fn orbit_swap_records() {
        let c = build(Family::OrbitSwap {
            n: 9,
            h: vec![0b11111],
            h_prime: vec![0b1111],
        });
        assert!(c.balanced);
        assert_eq!(c.certificate.as_ref().unwrap().bound, 2);
        assert!(c.warnings.is_empty());
        let edge = build(Family::OrbitSwap {
            n: 7,
            h: vec![0b1111111],
            h_prime: vec![0],
        });
        assert_eq!(edge.warnings[0].code, "POWER_OF_TWO_EDGE");
    }

    #[test]
    fn other_families() {
        let c = build(Family::Example2 { n: 9, i: 2 });
        assert_eq!((c.record["t"].clone(), c.record["claimed_bound"].clone()), (json!(4), json!(2)));
        let c = build(Family::Corollary3 {
            n: 6,
            parity: TailParity::OddWeights,
            low: vec![true, false],
        });
        assert_eq!(c.record["check"]["nonmaximal"], json!(true));
        let c = build(Family::EvenBalanced { n: 6 });
        assert_eq!(c.record["imbalance"], json!(2));
        assert!(cmd_construct(&Family::Majority { n: 6 }, InputFormat::HexTable, 1).is_err());
        let anf = cmd_construct(&Family::Majority { n: 3 }, InputFormat::AnfExpr, 1).unwrap();
        assert_eq!(anf.function, "1 + x1*x2 + x1*x3 + x2*x3");
    }
}
