mod common;

use common::*;
use proptest::prelude::*;
use schur2d::moments::{
    associate_symmetric, associated_of_atomic, moments_of_atomic, Completeness, MomentSource,
    MomentTable,
};
use schur2d::{BivarRational, Monomial, Ring, Scalar};

fn binom(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, t| acc * (n - t) as i64 / (t + 1) as i64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn atomic_sequence_matches_its_moment_table(mu in measure(4), n in 1usize..=4) {
        let table = moments_of_atomic(&mu, 2 * n - 1, Completeness::Square);
        let direct = associated_of_atomic(&mu, n);
        let via_table = associate_symmetric(&table, n).unwrap();
        prop_assert_eq!(direct.entries(), via_table.entries());
    }

    #[test]
    fn linear_in_the_measure(a in measure(2), b in measure(2), n in 1usize..=3) {
        let Ok(sum) = a.union(&b) else { return Ok(()); };
        let (ea, eb, es) = (
            associated_of_atomic(&a, n),
            associated_of_atomic(&b, n),
            associated_of_atomic(&sum, n),
        );
        for k in 0..2 * n {
            prop_assert_eq!(es.entries()[k].clone(), ea.entries()[k].clone() + eb.entries()[k].clone());
        }
    }

    #[test]
    fn transpose_swaps_variables(t in table(3, Completeness::Square)) {
        let a = associate_symmetric(&t, 2).unwrap();
        let b = associate_symmetric(&t.transpose(), 2).unwrap();
        for (x, y) in a.entries().iter().zip(b.entries()) {
            prop_assert_eq!(x.swap_vars(), y.clone());
        }
    }

    /// The part of the double series with `max(i, j) = J` is `-s_J / (z zeta)^(J+1)`.
    #[test]
    fn binomial_regrouping(t in table(3, Completeness::Square)) {
        let a = associate_symmetric(&t, 2).unwrap();
        for big_j in 0..4 {
            let e: &BivarRational = &a.entries()[big_j];
            prop_assert!(e.is_polynomial());
            let mut terms = 0;
            for i in 0..=big_j {
                for j in 0..=big_j {
                    if i.max(j) != big_j {
                        continue;
                    }
                    let want = Scalar::int(binom(i + j, i)) * t.moment(i, j).unwrap();
                    let m = Monomial::new((big_j - i) as u32, (big_j - j) as u32);
                    prop_assert_eq!(e.numer().coeff(m.dz, m.dzeta), want.clone());
                    terms += usize::from(!want.is_zero());
                }
            }
            prop_assert_eq!(e.numer().num_terms(), terms);
        }
    }

    #[test]
    fn tables_roundtrip_through_json(t in table(3, Completeness::Triangular), mu in measure(3)) {
        let back: MomentTable = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        prop_assert_eq!(back, t);
        let back: schur2d::moments::AtomicMeasure =
            serde_json::from_str(&serde_json::to_string(&mu).unwrap()).unwrap();
        prop_assert_eq!(back, mu);
    }
}
