mod common;

use proptest::prelude::*;

use algebraic_immunity::annihilator::{annihilator_space_dimension, exact_ai, Side};
use algebraic_immunity::boolean::{restricted_support_count, walsh_spectrum_and_nonlinearity};
use algebraic_immunity::bounds::{
    corollary1_analyze, corollary4_bound, corollary5_bound, coverage_certifier, nl_bound_from_ai,
    restricted_weight_window_check, weight_window_check, Corollary1Resolution, Symmetry,
};
use algebraic_immunity::cli::{format_function, parse_function, FunctionInput, InputFormat};
use algebraic_immunity::families::{
    is_rotation_symmetric, orbit_representatives, orbit_swap_construction, symmetric_expand,
    CyclicOrbit, RsbfSpec, SimplifiedValueVector,
};
use algebraic_immunity::{AffineForm, AffineSubspace, BooleanFunction};

fn random_function(n: usize, seed: &[u64]) -> BooleanFunction {
    let words = (1usize << n).div_ceil(64);
    let mut w: Vec<u64> = seed.iter().copied().cycle().take(words).collect();
    if n < 6 {
        w[0] &= (1u64 << (1 << n)) - 1;
    }
    BooleanFunction::from_words(n, w).unwrap()
}

fn function_strategy(max_n: usize) -> impl Strategy<Value = BooleanFunction> {
    (1..=max_n, prop::collection::vec(any::<u64>(), 16))
        .prop_map(|(n, seed)| random_function(n, &seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn restricted_counts_split_the_subspace(
        f in function_strategy(8),
        forms in prop::collection::vec((1u32..256, any::<bool>()), 0..4),
    ) {
        let n = f.n();
        let forms: Vec<AffineForm> = forms
            .into_iter()
            .map(|(m, c)| AffineForm::new(m & ((1 << n) - 1), c))
            .filter(|l| !l.is_degenerate())
            .collect();
        let subspace = AffineSubspace::new(n, &forms);
        prop_assume!(subspace.is_ok());
        let subspace = subspace.unwrap();
        let a = restricted_support_count(&f, &subspace).unwrap();
        let b = restricted_support_count(&f.complement(), &subspace).unwrap();
        prop_assert_eq!(a + b, 1u64 << subspace.dim());
        let direct = subspace.points().filter(|&x| f.get(x)).count() as u64;
        prop_assert_eq!(a, direct);
    }

    #[test]
    fn coverage_dominates_the_sum_certificate(n in 2usize..=12, mask in any::<u32>()) {
        let v = SimplifiedValueVector::from_mask(n, mask & ((1 << (n + 1)) - 1)).unwrap();
        let f = symmetric_expand(&v);
        let cov = coverage_certifier(&f, Symmetry::Symmetric, u64::MAX).unwrap();
        prop_assert!(cov.bound >= corollary4_bound(&v).bound);
    }

    #[test]
    fn value_vector_round_trip(n in 1usize..=14, mask in any::<u32>()) {
        let v = SimplifiedValueVector::from_mask(n, mask & ((1 << (n + 1)) - 1)).unwrap();
        let f = symmetric_expand(&v);
        prop_assert_eq!(SimplifiedValueVector::of_function(&f), Some(v.clone()));
        let text = format_function(&f, InputFormat::ValueVector).unwrap();
        let back = parse_function(&FunctionInput::new(InputFormat::ValueVector, text, None)).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn rsbf_closure(n in 2usize..=9, seed in any::<u64>()) {
        let orbits = common::orbits(n);
        let mask = seed & ((1u64 << orbits.len().min(63)) - 1);
        let f = common::rsbf_from_mask(n, &orbits, mask);
        prop_assert!(is_rotation_symmetric(&f));
        let spec = RsbfSpec::of_function(&f).unwrap();
        prop_assert_eq!(spec.assignment().len(), orbits.len());
        let text = format_function(&f, InputFormat::OrbitFile).unwrap();
        let back = parse_function(&FunctionInput::new(InputFormat::OrbitFile, text, None)).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn witness_is_sound(f in function_strategy(8)) {
        let r = exact_ai(&f);
        prop_assert!(r.ai <= f.n().div_ceil(2));
        if r.ai > 0 {
            let g = r.witness.polynomial().truth_table();
            let target = r.witness.side().select(&f);
            prop_assert!(g.and(&target).unwrap().is_zero());
            prop_assert!(!g.is_zero());
            prop_assert_eq!(r.witness.degree(), r.ai);
        } else {
            prop_assert!(f.is_constant());
        }
    }

    #[test]
    fn annihilator_dimension_is_monotone(f in function_strategy(7)) {
        let mut last = 0;
        for d in 0..=f.n() {
            let dim = annihilator_space_dimension(&f, d).unwrap();
            prop_assert!(dim >= last);
            last = dim;
        }
        prop_assert_eq!(last as u64, (1u64 << f.n()) - f.weight());
    }

    #[test]
    fn weight_window_holds(f in function_strategy(10)) {
        let ai = exact_ai(&f).ai;
        for d in 0..ai {
            prop_assert!(weight_window_check(&f, d));
        }
    }

    #[test]
    fn restricted_window_holds(
        f in function_strategy(9),
        forms in prop::collection::vec((1u32..512, any::<bool>()), 1..3),
    ) {
        let n = f.n();
        let ai = exact_ai(&f).ai;
        prop_assume!(ai >= 1);
        let forms: Vec<AffineForm> = forms
            .into_iter()
            .map(|(m, c)| AffineForm::new(m & ((1 << n) - 1), c))
            .filter(|l| !l.is_degenerate())
            .collect();
        let subspace = AffineSubspace::new(n, &forms);
        prop_assume!(subspace.is_ok());
        prop_assert!(restricted_weight_window_check(&f, &subspace.unwrap(), ai).unwrap());
    }

    #[test]
    fn nonlinearity_bound_holds(f in function_strategy(8)) {
        let ai = exact_ai(&f).ai;
        let (_, nl) = walsh_spectrum_and_nonlinearity(&f);
        prop_assert!(nl >= nl_bound_from_ai(f.n(), ai));
    }

    #[test]
    fn corollary1_never_contradicts(n in 2usize..=8, seed in prop::collection::vec(any::<u64>(), 4), mask in 1u32..256, c in any::<bool>()) {
        let mut f = random_function(n, &seed);
        let half = 1u64 << (n - 1);
        let mut x = 0u32;
        while f.weight() != half {
            let w = f.weight();
            if f.get(x) == (w > half) {
                f.set(x, w < half);
            }
            x += 1;
        }
        let l = AffineForm::new(mask & ((1 << n) - 1), c);
        prop_assume!(!l.is_degenerate());
        let analysis = corollary1_analyze(&f, &l, None).unwrap();
        let contradiction = matches!(analysis.resolution, Corollary1Resolution::Contradiction { .. });
        prop_assert!(!contradiction);
        if let Corollary1Resolution::Divisible { side, witness, .. } = &analysis.resolution {
            let factor = match side {
                Side::Function => l,
                Side::Complement => l.complement(),
            };
            let g = witness.truth_table();
            let zero_of_factor = factor.truth_table(n).unwrap().complement();
            prop_assert!(g.and(&zero_of_factor).unwrap().is_zero());
        }
    }
}

fn swap_strategy() -> impl Strategy<Value = (usize, Vec<CyclicOrbit>, Vec<CyclicOrbit>)> {
    (prop::sample::select(vec![5usize, 7, 9]), any::<u64>()).prop_map(|(n, seed)| {
        let t = n.div_ceil(2);
        let reps = orbit_representatives(n).unwrap();
        let mut heavy: Vec<CyclicOrbit> = reps.iter().copied().filter(|o| o.weight() >= t).collect();
        let mut light: Vec<CyclicOrbit> = reps.iter().copied().filter(|o| o.weight() < t).collect();
        let mut state = seed | 1;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut h = Vec::new();
        let mut hp = Vec::new();
        let picks = 1 + next() % 3;
        for _ in 0..picks {
            if heavy.is_empty() {
                break;
            }
            let o = heavy.swap_remove((next() % heavy.len() as u64) as usize);
            if let Some(k) = light.iter().position(|p| p.size == o.size) {
                hp.push(light.swap_remove(k));
                h.push(o);
            }
        }
        (n, h, hp)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn orbit_swaps_behave((n, h, hp) in swap_strategy()) {
        let s = orbit_swap_construction(n, &h, &hp).unwrap();
        prop_assert!(s.function.is_balanced());
        prop_assert!(is_rotation_symmetric(&s.function));
        let ai = exact_ai(&s.function).ai;
        let cov = coverage_certifier(&s.function, Symmetry::Rotation, u64::MAX).unwrap();
        prop_assert!(ai >= cov.bound);
        let size: u64 = h.iter().map(|o| o.size as u64).sum();
        prop_assert_eq!(s.h_size, size);
        if size > 0 && !size.is_power_of_two() {
            prop_assert!(ai >= corollary5_bound(n, size).unwrap().bound);
        }
    }
}
