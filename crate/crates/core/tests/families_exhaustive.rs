//! Exhaustive small-instance checks of the cycle and path characterisations.

use fuzzy_roman::connectivity::{is_strong_fuzzy_cycle, strong_profile};
use fuzzy_roman::families::{
    cycle_extremal_check, cycle_mus_sum_check, make_cycle, make_path, path_mus_sum_check,
    CycleProfile, FamilyError, PathProfile,
};
use fuzzy_roman::Rational;

const LEVELS: [&str; 3] = ["0.1", "0.2", "0.3"];

/// All weight vectors of length `len` over `LEVELS`.
fn weight_vectors(len: usize) -> Vec<Vec<Rational>> {
    let levels: Vec<Rational> = LEVELS.iter().map(|s| s.parse().unwrap()).collect();
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                levels.iter().map(move |l| {
                    let mut v = prefix.clone();
                    v.push(l.clone());
                    v
                })
            })
            .collect();
    }
    out
}

#[test]
fn cycle_extremal_equivalence() {
    let mut violations = Vec::new();
    let mut checked = 0;
    for n in [4usize, 5, 7, 8] {
        for mus in weight_vectors(n) {
            let g = make_cycle(&vec![Rational::one(); n], &mus).unwrap();
            if !is_strong_fuzzy_cycle(&g).unwrap() {
                continue;
            }
            let p = strong_profile(&g);
            let c = CycleProfile::new(&g, &p).unwrap();
            checked += 1;
            match cycle_extremal_check(&c, &p) {
                Ok(_) => {}
                Err(FamilyError::TheoremViolation(msg)) => violations.push(msg),
                Err(e) => panic!("{e}"),
            }
        }
    }
    assert!(checked > 0);
    assert!(violations.is_empty(), "{} violations, first: {:?}", violations.len(), violations.first());
}

#[test]
fn cycle_sum_equality_matches_valley() {
    for n in 3..=7 {
        for mus in weight_vectors(n) {
            let g = make_cycle(&vec![Rational::one(); n], &mus).unwrap();
            if !is_strong_fuzzy_cycle(&g).unwrap() {
                continue;
            }
            let p = strong_profile(&g);
            let c = CycleProfile::new(&g, &p).unwrap();
            let s = cycle_mus_sum_check(&c).unwrap_or_else(|e| panic!("{mus:?}: {e}"));
            assert!(s.bound_holds);
        }
    }
}

#[test]
fn path_sum_equality_matches_shape() {
    for n in 3..=8 {
        for mus in weight_vectors(n - 1) {
            let g = make_path(&vec![Rational::one(); n], &mus).unwrap();
            let p = strong_profile(&g);
            let pp = PathProfile::new(&g, &p).unwrap();
            let s = path_mus_sum_check(&pp).unwrap_or_else(|e| panic!("{mus:?}: {e}"));
            assert!(s.bound_holds);
        }
    }
}
