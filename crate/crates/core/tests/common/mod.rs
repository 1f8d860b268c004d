#![allow(dead_code)]

use proptest::prelude::*;
use schur2d::moments::{Atom, AtomicMeasure, Completeness, MomentTable};
use schur2d::{BivarPoly, BivarRational, Monomial, Ring, Scalar};

pub fn q(n: i64) -> Scalar {
    Scalar::int(n)
}

pub fn small_rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| Scalar::ratio(n, d))
}

pub fn small_poly(max_deg: u32) -> impl Strategy<Value = BivarPoly> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, -3i64..=3), 0..4).prop_map(|ts| {
        BivarPoly::from_terms(
            ts.into_iter()
                .map(|(a, b, c)| (Monomial::new(a, b), Scalar::int(c))),
        )
    })
}

pub fn nonzero_poly(max_deg: u32) -> impl Strategy<Value = BivarPoly> {
    let coeff = prop_oneof![-3i64..=-1, 1i64..=3];
    prop::collection::vec((0..=max_deg, 0..=max_deg, coeff), 1..4)
        .prop_map(|ts| {
            BivarPoly::from_terms(
                ts.into_iter()
                    .map(|(a, b, c)| (Monomial::new(a, b), Scalar::int(c))),
            )
        })
        .prop_filter("nonzero", |p| !p.is_zero())
}

pub fn small_bivar() -> impl Strategy<Value = BivarRational> {
    (small_poly(2), nonzero_poly(1))
        .prop_map(|(n, d)| BivarRational::new(n, d).expect("nonzero denominator"))
}

pub fn table(order: usize, c: Completeness) -> impl Strategy<Value = MomentTable> {
    let cells = c.indices(order).count();
    prop::collection::vec(-4i64..=4, cells).prop_map(move |v| {
        let mut it = v.into_iter();
        MomentTable::from_fn(order, c, |_, _| Scalar::int(it.next().unwrap()))
    })
}

pub fn measure(max_atoms: usize) -> impl Strategy<Value = AtomicMeasure> {
    prop::collection::vec((-2i64..=2, -2i64..=2, 1i64..=3), 1..=max_atoms).prop_filter_map(
        "distinct points",
        |v| {
            AtomicMeasure::new(
                v.into_iter()
                    .map(|(t, tau, m)| Atom::new(q(t), q(tau), q(m)))
                    .collect(),
            )
            .ok()
        },
    )
}

pub fn nonzero_bivar() -> impl Strategy<Value = BivarRational> {
    (nonzero_poly(2), nonzero_poly(1))
        .prop_map(|(n, d)| BivarRational::new(n, d).expect("nonzero denominator"))
}
