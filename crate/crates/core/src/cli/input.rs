use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::boolean::{AnfPolynomial, BooleanFunction, MAX_VARIABLES};
use crate::error::{Error, Result};
use crate::families::{rsbf_expand, symmetric_expand, RsbfSpec, SimplifiedValueVector};

/// Text encodings a function can be read from and written to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum InputFormat {
    HexTable,
    AnfExpr,
    ValueVector,
    OrbitFile,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionInput {
    pub format: InputFormat,
    pub payload: String,
    /// Required for `AnfExpr`; checked against the inferred value otherwise.
    pub n: Option<usize>,
}

impl FunctionInput {
    pub fn new(format: InputFormat, payload: impl Into<String>, n: Option<usize>) -> Self {
        Self {
            format,
            payload: payload.into(),
            n,
        }
    }
}

fn check_declared(declared: Option<usize>, found: usize) -> Result<()> {
    match declared {
        Some(expected) if expected != found => Err(Error::DimensionMismatch { expected, found }),
        _ => Ok(()),
    }
}

pub fn parse_function(input: &FunctionInput) -> Result<BooleanFunction> {
    let text = input.payload.as_str();
    match input.format {
        InputFormat::HexTable => BooleanFunction::from_hex(text, input.n),
        InputFormat::AnfExpr => {
            let n = input
                .n
                .ok_or_else(|| Error::InvalidParameter("ANF input needs the variable count".into()))?;
            Ok(AnfPolynomial::parse(text, n)?.truth_table())
        }
        InputFormat::ValueVector => {
            let v: SimplifiedValueVector = text.parse()?;
            check_declared(input.n, v.n())?;
            Ok(symmetric_expand(&v))
        }
        InputFormat::OrbitFile => {
            let spec = parse_orbit_file(text, input.n)?;
            Ok(rsbf_expand(&spec))
        }
    }
}

/// Canonical text of `f` in `format`. Value vectors need a symmetric function
/// and orbit files a rotation-symmetric one.
pub fn format_function(f: &BooleanFunction, format: InputFormat) -> Result<String> {
    match format {
        InputFormat::HexTable => Ok(f.to_hex()),
        InputFormat::AnfExpr => Ok(f.anf().to_string()),
        InputFormat::ValueVector => SimplifiedValueVector::of_function(f)
            .map(|v| v.to_string())
            .ok_or(Error::NotSymmetric),
        InputFormat::OrbitFile => {
            let spec = RsbfSpec::of_function(f)?;
            let mut out = String::new();
            for (rep, value) in spec.assignment() {
                writeln!(out, "{rep:x} {}", u8::from(*value)).expect("string write");
            }
            Ok(out)
        }
    }
}

/// Number of cyclic orbits on `F_2^n`, `(1/n) sum_{d | n} phi(d) 2^(n/d)`.
pub fn necklace_count(n: usize) -> u64 {
    let phi = |mut m: usize| {
        let mut result = m;
        let mut p = 2;
        while p * p <= m {
            if m % p == 0 {
                while m % p == 0 {
                    m /= p;
                }
                result -= result / p;
            }
            p += 1;
        }
        if m > 1 {
            result -= result / m;
        }
        result as u64
    };
    (1..=n)
        .filter(|d| n % d == 0)
        .map(|d| phi(d) << (n / d))
        .sum::<u64>()
        / n as u64
}

/// Lines `representative-hex value-bit`; blank lines and `#` comments are
/// skipped. Without `n`, the variable count is the one whose orbit count
/// equals the number of entries.
fn parse_orbit_file(text: &str, n: Option<usize>) -> Result<RsbfSpec> {
    let mut assignment = BTreeMap::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let content = line.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let mut fields = content.split_whitespace();
        let (rep, value) = match (fields.next(), fields.next(), fields.next()) {
            (Some(r), Some(v), None) => (r, v),
            _ => return Err(Error::parse(start, "expected `representative value`")),
        };
        let at = |field: &str| start + content.find(field).unwrap_or(0);
        let digits = rep.trim_start_matches("0x");
        let rep_value = u32::from_str_radix(digits, 16)
            .map_err(|_| Error::parse(at(rep), format!("invalid hex representative {rep:?}")))?;
        let bit = match value {
            "0" => false,
            "1" => true,
            _ => return Err(Error::parse(at(value), format!("expected 0 or 1, found {value:?}"))),
        };
        if assignment.insert(rep_value, bit).is_some() {
            return Err(Error::parse(at(rep), format!("orbit {rep_value:#x} assigned twice")));
        }
    }
    let n = match n {
        Some(n) => n,
        None => (1..=MAX_VARIABLES)
            .find(|&n| necklace_count(n) == assignment.len() as u64)
            .ok_or_else(|| {
                Error::IncompleteAssignment(format!(
                    "{} entries match no variable count's orbit number",
                    assignment.len()
                ))
            })?,
    };
    RsbfSpec::new(n, assignment)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::orbit_representatives;

    #[test]
    fn parse_examples() {
        let f = parse_function(&FunctionInput::new(InputFormat::HexTable, "8", Some(2))).unwrap();
        assert_eq!(f.support(), vec![3]);
        let f = parse_function(&FunctionInput::new(InputFormat::AnfExpr, "x1*x2 + 1", Some(2))).unwrap();
        assert_eq!(f.support(), vec![0, 1, 2]);
        let f = parse_function(&FunctionInput::new(InputFormat::ValueVector, "0011111100000011", None))
            .unwrap();
        assert_eq!((f.n(), f.weight()), (15, 16384));
    }

    #[test]
    fn parse_errors() {
        let anf = FunctionInput::new(InputFormat::AnfExpr, "x1", None);
        assert!(matches!(parse_function(&anf), Err(Error::InvalidParameter(_))));
        let v = FunctionInput::new(InputFormat::ValueVector, "0110", Some(4));
        assert_eq!(
            parse_function(&v),
            Err(Error::DimensionMismatch { expected: 4, found: 3 })
        );
        let h = FunctionInput::new(InputFormat::HexTable, "8G", None);
        assert!(matches!(parse_function(&h), Err(Error::Parse { position: 1, .. })));
        let o = FunctionInput::new(InputFormat::OrbitFile, "0 1\n1 2\n", None);
        assert!(matches!(parse_function(&o), Err(Error::Parse { position: 6, .. })));
        let o = FunctionInput::new(InputFormat::OrbitFile, "0 1\n1 0\n2 0\n7 0\n", None);
        assert!(matches!(parse_function(&o), Err(Error::IncompleteAssignment(_))));
    }

    #[test]
    fn necklace_counts_match_enumeration() {
        for n in 1..=12 {
            assert_eq!(necklace_count(n), orbit_representatives(n).unwrap().len() as u64);
        }
        assert_eq!(necklace_count(24), 699_252);
    }

    #[test]
    fn orbit_file_inference() {
        let text = "# n = 3\n0 0\n1 1\n3 0\n7 1\n";
        let f = parse_function(&FunctionInput::new(InputFormat::OrbitFile, text, None)).unwrap();
        assert_eq!(f.n(), 3);
        assert_eq!(f.weight(), 4);
        assert_eq!(format_function(&f, InputFormat::OrbitFile).unwrap(), "0 0\n1 1\n3 0\n7 1\n");
    }

    #[test]
    fn round_trips_are_canonical() {
        let cases = [
            (InputFormat::HexTable, "E8", Some(3)),
            (InputFormat::AnfExpr, "1 + x1 + x2*x3", Some(3)),
            (InputFormat::ValueVector, "0110", None),
            (InputFormat::OrbitFile, "0 1\n1 0\n3 1\n7 0\n", None),
        ];
        for (format, text, n) in cases {
            let f = parse_function(&FunctionInput::new(format, text, n)).unwrap();
            assert_eq!(format_function(&f, format).unwrap(), text);
        }
        let x1 = BooleanFunction::variable(3, 1).unwrap();
        assert_eq!(format_function(&x1, InputFormat::ValueVector), Err(Error::NotSymmetric));
        assert_eq!(format_function(&x1, InputFormat::OrbitFile), Err(Error::NotRotationSymmetric));
    }
}
