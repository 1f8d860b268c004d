mod common;

use common::*;
use proptest::prelude::*;
use schur2d::fractions::ContinuedFraction;
use schur2d::moments::{associate_symmetric, Completeness, Mode};
use schur2d::schur::{
    hessenberg_minors, jfraction, jfraction_seq, recursive_sequence_step, stream_atoms,
};
use schur2d::verify::{check_truncated_contract, det_oracle, schur_step_oracle, step_matrix};
use schur2d::{BivarRational, CoeffSeries, Field, MainVar, Ring, Scalar, XPoly};

fn bivar_seq(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<BivarRational>> {
    (nonzero_poly(2), prop::collection::vec(small_poly(2), len)).prop_map(|(h, rest)| {
        let mut v = vec![BivarRational::from_poly(h)];
        v.extend(rest.into_iter().map(BivarRational::from_poly));
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn recurrence_matches_cofactor_determinants(s in bivar_seq(2..=5)) {
        let step = recursive_sequence_step(&s).unwrap();
        let d = hessenberg_minors(&s, s.len() - 1);
        for (j, v) in step.iter().enumerate() {
            let det = det_oracle(&step_matrix(&s, j + 2));
            prop_assert_eq!(&d[j + 2], &det);
            let sign = if j % 2 == 0 { -BivarRational::one() } else { BivarRational::one() };
            prop_assert_eq!(v.clone(), sign * det.checked_div(&s[0].pow(j as u32 + 2)).unwrap());
        }
    }

    #[test]
    fn recurrence_matches_series_oracle(s in bivar_seq(2..=5)) {
        let step = recursive_sequence_step(&s).unwrap();
        let series = CoeffSeries::new(MainVar::ZZeta, s.iter().map(|v| -v.clone()).collect());
        let a0 = XPoly::linear(s[1].checked_div(&s[0]).unwrap());
        let f1 = schur_step_oracle(&series, &s[0], &a0).unwrap();
        let neg: Vec<BivarRational> = step.iter().map(|v| -v.clone()).collect();
        prop_assert_eq!(f1.coeffs(), &neg[..]);
    }

    /// Constant data reproduce the classical one-variable step.
    #[test]
    fn one_dimensional_specialization(
        s0 in small_rational().prop_filter("s0", |c| !c.is_zero()),
        s1 in small_rational(), s2 in small_rational(), s3 in small_rational()
    ) {
        let s = vec![s0.clone(), s1.clone(), s2.clone(), s3];
        let step = recursive_sequence_step(&s).unwrap();
        let want = (s0.clone() * s2 - s1.clone() * s1.clone()).checked_div(&(s0.clone() * s0.clone())).unwrap();
        prop_assert_eq!(step[0].clone(), want.clone());
        if !want.is_zero() {
            let atoms = jfraction_seq(&s).unwrap();
            prop_assert_eq!(atoms.atoms()[0].b.clone(), s0.clone());
            prop_assert_eq!(atoms.atoms()[0].c.clone(), s1.checked_div(&s0).unwrap());
            prop_assert_eq!(atoms.atoms()[1].b.clone(), want);
        }
    }

    #[test]
    fn streaming_is_prefix_stable(s in prop::collection::vec(small_rational(), 10)) {
        let Ok(full) = jfraction_seq(&s) else { return Ok(()); };
        for d in 1..=4 {
            let a = stream_atoms(|k| Ok(s[k].clone()), d).unwrap();
            prop_assert_eq!(&a, &full.prefix(d));
            prop_assert!(a.is_prefix_of(&full));
        }
    }

    #[test]
    fn series_contract_on_random_tables(t in table(3, Completeness::Square)) {
        let assoc = associate_symmetric(&t, 2).unwrap();
        let Ok(atoms) = jfraction(&assoc) else { return Ok(()); };
        let cf = ContinuedFraction::j(Mode::Sym, atoms.clone()).unwrap();
        prop_assert!(check_truncated_contract(&assoc, &cf, 2).unwrap().pass);
        // the shorter data give the same first atom
        let short = jfraction(&assoc.prefix(2)).unwrap();
        prop_assert!(short.is_prefix_of(&atoms));
    }

    #[test]
    fn scaling_covariance(
        t in table(3, Completeness::Square),
        lambda in small_rational().prop_filter("nonzero", |c| !c.is_zero())
    ) {
        let a = associate_symmetric(&t, 2).unwrap();
        let b = associate_symmetric(&t.scale(&lambda), 2).unwrap();
        let (Ok(x), Ok(y)) = (jfraction(&a), jfraction(&b)) else { return Ok(()); };
        for (p, q) in x.atoms().iter().zip(y.atoms()) {
            prop_assert_eq!(&p.c, &q.c);
        }
        prop_assert_eq!(
            y.atoms()[0].b.clone(),
            BivarRational::constant(lambda) * x.atoms()[0].b.clone()
        );
    }
}

#[test]
fn constant_sequence_has_scalar_atoms() {
    let s: Vec<Scalar> = [2, 1, 3, 1].iter().map(|&v| q(v)).collect();
    let atoms = jfraction_seq(&s).unwrap();
    assert_eq!(atoms.depth(), 2);
}
