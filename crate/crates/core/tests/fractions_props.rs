mod common;

use common::*;
use proptest::prelude::*;
use schur2d::fractions::{
    compose_mobius, convergents, convergents_j, parametrized_solution, ContinuedFraction,
    ConvergentPair,
};
use schur2d::moments::{associate_symmetric, Atom, AtomicMeasure, Completeness, Mode};
use schur2d::schur::{
    jfraction, regularity_report, sfraction, JAtom, JAtoms, RegularityKind, SAtom, SAtoms,
};
use schur2d::verify::{
    check_truncated_contract, ray_series_of_moments, ray_series_of_rational, MatchReport,
};
use schur2d::{BivarRational, Error, Field, MainVar, Ring, Scalar, SymPoly, XFraction, XPoly};

fn nonzero() -> impl Strategy<Value = Scalar> {
    small_rational().prop_filter("nonzero", |b| !b.is_zero())
}

fn j_atoms() -> impl Strategy<Value = JAtoms<Scalar>> {
    prop::collection::vec((small_rational(), nonzero()), 1..=5)
        .prop_map(|v| JAtoms::new(v.into_iter().map(|(c, b)| JAtom::new(c, b)).collect()))
}

fn s_atoms() -> impl Strategy<Value = SAtoms<Scalar>> {
    prop::collection::vec((nonzero(), nonzero()), 1..=4)
        .prop_map(|v| SAtoms::new(v.into_iter().map(|(m, l)| SAtom::new(m, l)).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn recurrence_equals_composition(a in j_atoms(), s in s_atoms()) {
        let zero = XFraction::constant(Scalar::zero());
        let cfs = [
            ContinuedFraction::j(Mode::NonSym, a).unwrap(),
            ContinuedFraction::s(Mode::NonSym, s).unwrap(),
        ];
        for cf in cfs {
            for n in 1..=cf.depth() {
                let pair = convergents(&cf, n).unwrap();
                match compose_mobius(&cf, n, &zero) {
                    Ok(w) => prop_assert!(pair.value().same_value(&w)),
                    Err(Error::DegenerateComposition { .. }) => {}
                    Err(e) => return Err(TestCaseError::fail(e.to_string())),
                }
            }
        }
    }

    #[test]
    fn successive_convergent_determinant(a in j_atoms()) {
        for n in 1..=a.depth() {
            let ConvergentPair { p, q, p_prev, q_prev, .. } = convergents_j(&a, n).unwrap();
            let prod = a.atoms()[..n].iter().fold(Scalar::one(), |acc, x| acc * x.b.clone());
            prop_assert_eq!(q_prev * p - q * p_prev, XPoly::constant(prod));
        }
    }

    /// The solution family and the nested maps agree at a symbolic tail.
    #[test]
    fn parametrized_solution_is_the_composition(a in j_atoms(), s in s_atoms()) {
        type R = SymPoly<Scalar>;
        let tail = XFraction {
            num: XPoly::constant(R::var(0)),
            den: XPoly::<R>::x() + XPoly::constant(R::var(1)),
        };
        let cfs = [
            ContinuedFraction::j(Mode::Sym, a.map(|v| R::constant(v.clone()))).unwrap(),
            ContinuedFraction::s(Mode::Sym, s.map(|v| R::constant(v.clone()))).unwrap(),
        ];
        for cf in cfs {
            let family = parametrized_solution(&cf, &tail).unwrap();
            let nested = compose_mobius(&cf, cf.depth(), &tail).unwrap();
            prop_assert!(family.same_value(&nested));
        }
    }

    #[test]
    fn s_and_j_values_agree(t in table(3, Completeness::Square)) {
        let assoc = associate_symmetric(&t, 2).unwrap();
        if !regularity_report(&assoc, RegularityKind::Plus, None).unwrap().regular {
            return Ok(());
        }
        let j = ContinuedFraction::j(Mode::Sym, jfraction(&assoc).unwrap()).unwrap();
        let s = ContinuedFraction::s(Mode::Sym, sfraction(&assoc).unwrap()).unwrap();
        for n in 1..=2 {
            let vj = convergents(&j, n).unwrap().value().substitute(MainVar::ZZeta).unwrap();
            let vs = convergents(&s, n).unwrap().value().substitute(MainVar::ZZeta).unwrap();
            prop_assert_eq!(vj, vs);
        }
        prop_assert!(check_truncated_contract(&assoc, &s, 2).unwrap().pass);
    }

    /// A single atom gives `F = -m / (z zeta - t zeta - tau z)` exactly.
    #[test]
    fn single_atom_closed_form(
        t in small_rational(), tau in small_rational(), m in nonzero(),
        z0 in nonzero(), w0 in nonzero(),
    ) {
        let mu = AtomicMeasure::new(vec![Atom::new(t.clone(), tau.clone(), m.clone())]).unwrap();
        let (z, w) = (BivarRational::z(), BivarRational::zeta());
        let den = z.clone() * w.clone()
            - BivarRational::constant(t) * w
            - BivarRational::constant(tau) * z;
        let f = BivarRational::constant(-m).checked_div(&den).unwrap();
        let expected = ray_series_of_moments(&mu, &z0, &w0, 6).unwrap();
        prop_assert_eq!(ray_series_of_rational(&f, &z0, &w0, 6).unwrap(), expected);
    }

    #[test]
    fn report_passes_exactly_when_all_coefficients_match(
        a in prop::collection::vec(-2i64..=2, 1..6),
        b in prop::collection::vec(-2i64..=2, 1..6),
    ) {
        let n = a.len().min(b.len());
        let a: Vec<Scalar> = a.into_iter().map(q).collect();
        let b: Vec<Scalar> = b.into_iter().map(q).collect();
        let rep = MatchReport::compare(&a, &b, n - 1).unwrap();
        prop_assert_eq!(rep.pass, rep.coefficients.iter().all(|c| c.equal));
        prop_assert_eq!(rep.pass, a[..n] == b[..n]);
    }
}
