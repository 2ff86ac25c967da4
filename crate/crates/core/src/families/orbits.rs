use std::collections::BTreeMap;

use serde::Serialize;

use crate::boolean::BooleanFunction;
use crate::error::{Error, Result};

/// The cyclic shift `(x_1, ..., x_n) -> (x_n, x_1, ..., x_{n-1})` on a point
/// mask: coordinate `i` moves to `i + 1 mod n`.
#[inline]
pub fn rotate(x: u32, n: usize) -> u32 {
    let full = ((1u64 << n) - 1) as u32;
    ((x << 1) | (x >> (n - 1))) & full
}

fn is_min_rotation(x: u32, n: usize) -> bool {
    let mut y = x;
    for _ in 1..n {
        y = rotate(y, n);
        if y < x {
            return false;
        }
    }
    true
}

/// An orbit of the cyclic shift, named by its numerically smallest member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CyclicOrbit {
    pub n: usize,
    pub representative: u32,
    pub size: usize,
}

impl CyclicOrbit {
    pub fn members(&self) -> impl Iterator<Item = u32> {
        let (n, rep) = (self.n, self.representative);
        std::iter::successors(Some(rep), move |&x| Some(rotate(x, n))).take(self.size)
    }

    pub fn weight(&self) -> usize {
        self.representative.count_ones() as usize
    }
}

pub fn orbit_of(n: usize, mask: u32) -> Result<CyclicOrbit> {
    BooleanFunction::zero(n)?;
    if u64::from(mask) >> n != 0 {
        return Err(Error::PointOutOfRange {
            point: u64::from(mask),
            n,
        });
    }
    let mut representative = mask;
    let mut y = rotate(mask, n);
    let mut size = 1;
    while y != mask {
        representative = representative.min(y);
        y = rotate(y, n);
        size += 1;
    }
    Ok(CyclicOrbit {
        n,
        representative,
        size,
    })
}

/// All orbits of F_2^n, ordered by representative.
pub fn orbit_representatives(n: usize) -> Result<Vec<CyclicOrbit>> {
    BooleanFunction::zero(n)?;
    Ok((0..(1u32 << n))
        .filter(|&x| is_min_rotation(x, n))
        .map(|x| orbit_of(n, x).expect("in range"))
        .collect())
}

/// Orbits of the weight-`w` points only.
pub fn orbit_representatives_of_weight(n: usize, w: usize) -> Result<Vec<CyclicOrbit>> {
    Ok(orbit_representatives(n)?
        .into_iter()
        .filter(|o| o.weight() == w)
        .collect())
}

pub fn is_rotation_symmetric(f: &BooleanFunction) -> bool {
    let n = f.n();
    (0..f.len() as u32).all(|x| f.get(x) == f.get(rotate(x, n)))
}

/// Value of a rotation-symmetric function on every orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsbfSpec {
    n: usize,
    assignment: BTreeMap<u32, bool>,
}

impl RsbfSpec {
    /// Requires one entry per orbit, keyed by the orbit representative.
    pub fn new(n: usize, assignment: BTreeMap<u32, bool>) -> Result<Self> {
        let orbits = orbit_representatives(n)?;
        for (&rep, _) in &assignment {
            let o = orbit_of(n, rep)?;
            if o.representative != rep {
                return Err(Error::IncompleteAssignment(format!(
                    "{rep:#x} is not an orbit representative (use {:#x})",
                    o.representative
                )));
            }
        }
        if let Some(missing) = orbits.iter().find(|o| !assignment.contains_key(&o.representative)) {
            return Err(Error::IncompleteAssignment(format!(
                "orbit {:#x} has no value",
                missing.representative
            )));
        }
        Ok(Self { n, assignment })
    }

    /// Reads the orbit values off a rotation-symmetric function.
    pub fn of_function(f: &BooleanFunction) -> Result<Self> {
        if !is_rotation_symmetric(f) {
            return Err(Error::NotRotationSymmetric);
        }
        let assignment = orbit_representatives(f.n())?
            .into_iter()
            .map(|o| (o.representative, f.get(o.representative)))
            .collect();
        Ok(Self {
            n: f.n(),
            assignment,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn assignment(&self) -> &BTreeMap<u32, bool> {
        &self.assignment
    }
}

/// Expands an orbit assignment to its truth table.
pub fn rsbf_expand(spec: &RsbfSpec) -> BooleanFunction {
    let mut f = BooleanFunction::zero(spec.n).expect("n validated");
    for (&rep, &value) in &spec.assignment {
        if value {
            let orbit = orbit_of(spec.n, rep).expect("validated");
            for x in orbit.members() {
                f.set(x, true);
            }
        }
    }
    f
}

/// Even-`n` rotation-symmetric function: 1 below weight `n/2`, 0 above, and
/// weight-`n/2` orbits switched on greedily (smallest representative first)
/// while they fit under `2^(n-1)`. Returns `|wt - 2^(n-1)|` alongside.
pub fn nearest_balanced_even_variant(n: usize) -> Result<(BooleanFunction, u64)> {
    BooleanFunction::zero(n)?;
    if n % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "even variant needs even n, got {n}"
        )));
    }
    let half = n / 2;
    let mut f = BooleanFunction::from_fn(n, |x| (x.count_ones() as usize) < half)?;
    let target = 1u64 << (n - 1);
    let mut remaining = target - f.weight();
    for orbit in orbit_representatives_of_weight(n, half)? {
        if orbit.size as u64 <= remaining {
            for x in orbit.members() {
                f.set(x, true);
            }
            remaining -= orbit.size as u64;
        }
    }
    let imbalance = f.weight().abs_diff(target);
    Ok((f, imbalance))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::symmetric::{symmetric_expand, SimplifiedValueVector};

    fn mask(coords: &[u32]) -> u32 {
        coords.iter().fold(0, |acc, &i| acc | 1 << (i - 1))
    }

    #[test]
    fn rotation_matches_definition() {
        // (x1..x6) -> (x6, x1, ..., x5)
        let x = mask(&[1, 6]);
        assert_eq!(rotate(x, 6), mask(&[1, 2]));
    }

    #[test]
    fn orbit_sizes() {
        let o = orbit_of(6, mask(&[1, 3, 4, 6])).unwrap();
        assert_eq!(o.size, 3);
        assert_eq!(o.representative, mask(&[1, 2, 4, 5]));
        assert_eq!(orbit_of(6, 0b111111).unwrap().size, 1);
        assert_eq!(orbit_of(6, 1).unwrap().size, 6);
    }

    #[test]
    fn representatives_cover_space() {
        assert_eq!(orbit_representatives(6).unwrap().len(), 14);
        assert_eq!(orbit_representatives(1).unwrap().len(), 2);
        for n in 1..=10 {
            let orbits = orbit_representatives(n).unwrap();
            let mut seen = vec![false; 1 << n];
            for o in &orbits {
                assert_eq!(n % o.size, 0);
                let members: Vec<u32> = o.members().collect();
                assert_eq!(*members.iter().min().unwrap(), o.representative);
                for x in members {
                    assert!(!seen[x as usize]);
                    seen[x as usize] = true;
                }
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn weight_classes_split_into_orbits() {
        let n = 8;
        for w in 0..=n {
            let total: usize = orbit_representatives_of_weight(n, w)
                .unwrap()
                .iter()
                .map(|o| o.size)
                .sum();
            assert_eq!(total as u64, crate::math::binomial(n as i64, w as i64));
        }
    }

    #[test]
    fn rotation_symmetry_checks() {
        let v: SimplifiedValueVector = "0110100".parse().unwrap();
        assert!(is_rotation_symmetric(&symmetric_expand(&v)));
        assert!(!is_rotation_symmetric(&BooleanFunction::variable(3, 1).unwrap()));
    }

    #[test]
    fn spec_round_trip() {
        let n = 7;
        let orbits = orbit_representatives(n).unwrap();
        let assignment: BTreeMap<u32, bool> = orbits
            .iter()
            .enumerate()
            .map(|(i, o)| (o.representative, i % 3 == 1))
            .collect();
        let spec = RsbfSpec::new(n, assignment.clone()).unwrap();
        let f = rsbf_expand(&spec);
        assert!(is_rotation_symmetric(&f));
        assert_eq!(RsbfSpec::of_function(&f).unwrap(), spec);

        let mut partial = assignment.clone();
        partial.remove(&0);
        assert!(matches!(RsbfSpec::new(n, partial), Err(Error::IncompleteAssignment(_))));
        let mut bad = assignment;
        bad.insert(2, true);
        assert!(matches!(RsbfSpec::new(n, bad), Err(Error::IncompleteAssignment(_))));
    }

    #[test]
    fn even_variants() {
        let (f, imbalance) = nearest_balanced_even_variant(6).unwrap();
        assert!(is_rotation_symmetric(&f));
        assert_eq!(imbalance, 2);
        let (f, imbalance) = nearest_balanced_even_variant(8).unwrap();
        assert!(is_rotation_symmetric(&f));
        assert!(imbalance >= 1);
        assert_eq!(nearest_balanced_even_variant(2).unwrap().1, 1);
        assert!(nearest_balanced_even_variant(5).is_err());
    }

    #[test]
    fn even_imbalance_lower_bounds_by_subset_sum() {
        // best achievable balance over all subsets of middle-weight orbits
        for n in [2usize, 4, 6, 8] {
            let sizes: Vec<usize> = orbit_representatives_of_weight(n, n / 2)
                .unwrap()
                .iter()
                .map(|o| o.size)
                .collect();
            let need = crate::math::binomial(n as i64, (n / 2) as i64) as usize / 2;
            let mut reachable = vec![false; need * 2 + 1];
            reachable[0] = true;
            for &s in &sizes {
                for t in (s..reachable.len()).rev() {
                    reachable[t] |= reachable[t - s];
                }
            }
            let best = (0..reachable.len())
                .filter(|&t| reachable[t])
                .map(|t| t.abs_diff(need))
                .min()
                .unwrap();
            let (_, imbalance) = nearest_balanced_even_variant(n).unwrap();
            assert!(imbalance as usize >= best);
            if n == 6 {
                assert_eq!(best, 2);
            }
            if n == 8 {
                assert_eq!(best, 1);
            }
        }
    }
}
