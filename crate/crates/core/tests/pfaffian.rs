use gorbetti_core::pfaffian::{
    codim3_experiment, default_profiles, maximal_pfaffians, pfaffian, random_alternating, AlternatingMatrix,
    DegreeProfile, TrialStatus,
};
use gorbetti_core::polyring::{Field, Polynomial, PrimeField};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Leibniz expansion over all permutations.
fn det<F: Field>(m: &AlternatingMatrix<F>) -> Polynomial<F> {
    fn perms(n: usize) -> Vec<(Vec<usize>, bool)> {
        if n == 0 {
            return vec![(Vec::new(), true)];
        }
        let mut out = Vec::new();
        for (p, even) in perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                // inserting at pos moves n-1 past (len - pos) elements
                let flips = p.len() - pos;
                out.push((q, even == (flips % 2 == 0)));
            }
        }
        out
    }
    let n = m.size();
    let mut acc = Polynomial::zero(m.field().clone(), m.nvars());
    for (p, even) in perms(n) {
        let mut term = Polynomial::constant(m.field().clone(), m.nvars(), m.field().one());
        for (i, &j) in p.iter().enumerate() {
            term = term.mul(m.entry(i, j)).unwrap();
        }
        acc = if even { acc.add(&term) } else { acc.sub(&term) }.unwrap();
    }
    acc
}

fn random_matrix(size: usize, seed: u64) -> AlternatingMatrix<PrimeField> {
    let f = PrimeField::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let upper = (0..size - 1)
        .map(|i| {
            (i + 1..size)
                .map(|_| {
                    // a random linear form in two variables, or zero
                    if rng.gen_bool(0.2) {
                        Polynomial::zero(f, 2)
                    } else {
                        let a = Polynomial::variable(f, 2, 0).scale(&f.random(&mut rng));
                        let b = Polynomial::variable(f, 2, 1).scale(&f.random(&mut rng));
                        a.add(&b).unwrap()
                    }
                })
                .collect()
        })
        .collect();
    AlternatingMatrix::from_upper(f, 2, upper).unwrap()
}

proptest! {
    #[test]
    fn pfaffian_squared_is_determinant(seed in any::<u64>(), half in 1usize..=2) {
        let m = random_matrix(2 * half, seed);
        let pf = pfaffian(&m).unwrap();
        prop_assert_eq!(pf.mul(&pf).unwrap(), det(&m));
    }

    #[test]
    fn maximal_pfaffians_have_profile_degrees(seed in any::<u64>(), idx in 0usize..11) {
        let profile = default_profiles().remove(idx);
        let m = random_alternating(&PrimeField::default(), &profile, seed);
        m.check_profile(&profile).unwrap();
        for (t, f) in maximal_pfaffians(&m).unwrap().iter().enumerate() {
            if !f.is_zero() {
                prop_assert_eq!(f.homogeneous_degree(), Some(profile.degrees()[t]));
            }
        }
    }
}

#[test]
fn six_by_six_square_is_determinant() {
    let m = random_matrix(6, 99);
    let pf = pfaffian(&m).unwrap();
    assert_eq!(pf.mul(&pf).unwrap(), det(&m));
}

#[test]
fn experiment_is_reproducible_and_clean() {
    let f = PrimeField::default();
    let profiles = default_profiles();
    let a = codim3_experiment(&f, 33, &profiles, 17).unwrap();
    let b = codim3_experiment(&f, 33, &profiles, 17).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.summary.violations, 0);
    for r in &a.trials {
        if r.status == TrialStatus::Ok {
            assert_eq!(r.structure_ok, Some(true), "trial {}", r.index);
        }
    }
}

#[test]
fn experiment_rejects_oversized_profiles() {
    let big = DegreeProfile::new(vec![7, 7, 7]).unwrap();
    assert!(codim3_experiment(&PrimeField::default(), 1, &[big], 0).is_err());
    assert!(codim3_experiment(&PrimeField::default(), 1, &[], 0).is_err());
}
