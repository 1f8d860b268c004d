mod common;

use common::*;
use proptest::prelude::*;
use schur2d::fractions::{convergents, ContinuedFraction};
use schur2d::moments::{associate_symmetric, AssociatedSequence, Completeness, Mode};
use schur2d::schur::{jfraction, regularity_report, RegularityKind};
use schur2d::verify::check_truncated_contract;
use schur2d::{BivarRational, Scalar, XFraction, XPoly};
use serde::{de::DeserializeOwned, Serialize};

fn roundtrip<T>(x: &T) -> Result<(), TestCaseError>
where
    T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug,
{
    let text = serde_json::to_string(x).unwrap();
    let back: T =
        serde_json::from_str(&text).map_err(|e| TestCaseError::fail(format!("{e}: {text}")))?;
    prop_assert_eq!(&back, x);
    prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn scalars(re in small_rational(), im in small_rational()) {
        roundtrip(&re)?;
        roundtrip(&Scalar::complex(re, im))?;
    }

    #[test]
    fn rational_functions(x in small_bivar()) {
        roundtrip(&x)?;
        roundtrip(x.numer())?;
        roundtrip(&XFraction {
            num: XPoly::new(vec![x.clone()]),
            den: XPoly::new(vec![x.clone(), BivarRational::z()]),
        })?;
    }

    #[test]
    fn pipeline_artifacts(t in table(3, Completeness::Square)) {
        roundtrip(&t)?;
        let assoc = associate_symmetric(&t, 2).unwrap();
        roundtrip::<AssociatedSequence>(&assoc)?;
        roundtrip(&regularity_report(&assoc, RegularityKind::Plain, None).unwrap())?;
        let Ok(atoms) = jfraction(&assoc) else { return Ok(()); };
        roundtrip(&atoms)?;
        let cf = ContinuedFraction::j(Mode::Sym, atoms).unwrap();
        roundtrip(&cf)?;
        roundtrip(&convergents(&cf, 2).unwrap())?;
        roundtrip(&check_truncated_contract(&assoc, &cf, 2).unwrap())?;
    }
}
