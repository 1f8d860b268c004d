//! Independent oracles for the truncated contracts.

use serde::{Deserialize, Serialize};

use crate::algebra::{
    series_of_rational, BivarRational, CoeffSeries, Field, MainVar, Ring, Scalar, XPoly,
};
use crate::error::{Error, Result};
use crate::fractions::{convergents, ContinuedFraction, ConvergentPair, FractionKind};
use crate::moments::{
    associate_symmetric, associated_function_series, associated_of_atomic, binomial,
    moments_of_atomic, AssociatedSequence, AtomicMeasure, Completeness, Mode, MomentSource,
};
use crate::schur::{jfraction, sfraction};

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct CoeffVerdict<R> {
    pub j: usize,
    pub expected: R,
    pub actual: R,
    pub equal: bool,
}

/// Coefficientwise comparison of two truncated expansions.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct MatchReport<R> {
    /// Highest compared index.
    pub order: usize,
    #[serde(rename = "match")]
    pub coefficients: Vec<CoeffVerdict<R>>,
    pub pass: bool,
    pub first_failure: Option<usize>,
}

impl<R: Ring> MatchReport<R> {
    /// Compares `expected[0..=order]` with `actual[0..=order]`.
    pub fn compare(expected: &[R], actual: &[R], order: usize) -> Result<Self> {
        let needed = order + 1;
        for got in [expected.len(), actual.len()] {
            if got < needed {
                return Err(Error::InsufficientLength { needed, got });
            }
        }
        let coefficients: Vec<CoeffVerdict<R>> = (0..needed)
            .map(|j| CoeffVerdict {
                j,
                equal: expected[j] == actual[j],
                expected: expected[j].clone(),
                actual: actual[j].clone(),
            })
            .collect();
        let first_failure = coefficients.iter().find(|c| !c.equal).map(|c| c.j);
        Ok(MatchReport {
            order,
            pass: first_failure.is_none(),
            coefficients,
            first_failure,
        })
    }
}

/// Expansion of `Q/P` in `1/X` to order `order`.
pub fn expand_convergent<R: Ring>(
    pair: &ConvergentPair<R>,
    var: MainVar,
    order: usize,
) -> Result<CoeffSeries<R>> {
    series_of_rational(var, &pair.q, &pair.p, order)
}

/// Compares the depth-`n` convergent of `cf` with `-e_0, ..., -e_order`.
pub fn check_contract_through(
    assoc: &AssociatedSequence,
    cf: &ContinuedFraction<BivarRational>,
    n: usize,
    order: usize,
) -> Result<MatchReport<BivarRational>> {
    if assoc.len() <= order {
        return Err(Error::InsufficientLength {
            needed: order + 1,
            got: assoc.len(),
        });
    }
    let pair = convergents(cf, n)?;
    let actual = expand_convergent(&pair, assoc.main_var(), order)?;
    let expected = assoc.function_series();
    MatchReport::compare(expected.coeffs(), actual.coeffs(), order)
}

/// The truncated contract: agreement through order `2n - 1`.
pub fn check_truncated_contract(
    assoc: &AssociatedSequence,
    cf: &ContinuedFraction<BivarRational>,
    n: usize,
) -> Result<MatchReport<BivarRational>> {
    check_contract_through(assoc, cf, n, 2 * n - 1)
}

/// `F_1 = -b_0 / F - a_0` as a truncated series.
///
/// `F = sum c_j X^{-(j+1)}` with `c_0..c_N` known gives `F_1` to order
/// `N - 2`. The polynomial part of `-b_0/F` must be cancelled by `a_0`,
/// otherwise the result is not a series in `1/X`.
pub fn schur_step_oracle<R: Ring>(
    series: &CoeffSeries<R>,
    b0: &R,
    a0: &XPoly<R>,
) -> Result<CoeffSeries<R>> {
    let r = series.invert()?;
    let r = r.coeffs();
    // -b0/F = -b0 X (r_0 + r_1/X + r_2/X^2 + ...)
    let head = XPoly::new(vec![
        -(b0.clone() * r.get(1).cloned().unwrap_or_else(R::zero)),
        -(b0.clone() * r[0].clone()),
    ]);
    if !(head - a0.clone()).is_zero() {
        return Err(Error::NotStrictlyProper);
    }
    let coeffs = r
        .iter()
        .skip(2)
        .map(|rj| -(b0.clone() * rj.clone()))
        .collect();
    Ok(CoeffSeries::new(series.var(), coeffs))
}

/// Determinant by cofactor expansion along the first row.
pub fn det_oracle<R: Ring>(m: &[Vec<R>]) -> R {
    match m.len() {
        0 => R::one(),
        1 => m[0][0].clone(),
        n => {
            let mut acc = R::zero();
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<R>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != c)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][c].clone() * det_oracle(&minor);
                acc = if c % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

/// The `size x size` matrix with entry `(r, c)` equal to `s_{r-c+1}` on
/// and below the diagonal, `s_0` on the superdiagonal and zero above.
pub fn step_matrix<R: Ring>(seq: &[R], size: usize) -> Vec<Vec<R>> {
    (0..size)
        .map(|r| {
            (0..size)
                .map(|c| {
                    if c <= r {
                        seq[r - c + 1].clone()
                    } else if c == r + 1 {
                        seq[0].clone()
                    } else {
                        R::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// The Schur step evaluated naively:
/// `s_j' = (-1)^{j+1} det(step_matrix(s, j + 2)) / s_0^{j+2}`.
pub fn schur_step_by_determinants<K: Field>(seq: &[K]) -> Result<Vec<K>> {
    if seq.len() < 3 {
        return Err(Error::InsufficientLength {
            needed: 3,
            got: seq.len(),
        });
    }
    if seq[0].is_zero() {
        return Err(Error::LeadingMomentZero { depth: 1 });
    }
    (0..seq.len() - 2)
        .map(|j| {
            let d = det_oracle(&step_matrix(seq, j + 2));
            let v = d.checked_div(&seq[0].pow(j as u32 + 2))?;
            Ok(if j % 2 == 0 { -v } else { v })
        })
        .collect()
}

/// Measure to moments to sequence to fraction to convergent to series,
/// checked against the series of the measure through order `2n - 1`.
pub fn roundtrip_atomic(
    mu: &AtomicMeasure,
    n: usize,
    form: FractionKind,
) -> Result<MatchReport<BivarRational>> {
    let table = moments_of_atomic(mu, 2 * n - 1, Completeness::Square);
    let assoc = associate_symmetric(&table, n)?;
    let cf = match form {
        FractionKind::J => ContinuedFraction::j(Mode::Sym, jfraction(&assoc)?)?,
        FractionKind::S => ContinuedFraction::s(Mode::Sym, sfraction(&assoc)?)?,
    };
    let pair = convergents(&cf, n)?;
    let actual = expand_convergent(&pair, MainVar::ZZeta, 2 * n - 1)?;
    let direct = associated_of_atomic(mu, n).function_series();
    MatchReport::compare(direct.coeffs(), actual.coeffs(), 2 * n - 1)
}

/// Coefficients of `lambda^{-(m+1)}`, `m = 0..=window`, of the associated
/// function restricted to the ray `(lambda z0, lambda zeta0)`.
///
/// Index `m >= 1` collects the moments with `i + j = m - 1`:
/// `-sum C(m-1, i) s_{i,j} / (z0^{i+1} zeta0^{j+1})`; index 0 is zero.
pub fn ray_series_of_moments(
    src: &dyn MomentSource,
    z0: &Scalar,
    zeta0: &Scalar,
    window: usize,
) -> Result<Vec<Scalar>> {
    if z0.is_zero() || zeta0.is_zero() {
        return Err(Error::EvaluationPole);
    }
    let (iz, iw) = (z0.inv()?, zeta0.inv()?);
    let mut out = vec![Scalar::zero()];
    for m in 1..=window {
        let k = m - 1;
        let mut acc = Scalar::zero();
        for i in 0..=k {
            let j = k - i;
            let w = iz.pow(i as u32 + 1) * iw.pow(j as u32 + 1);
            acc = acc + binomial(k, i) * src.moment(i, j)? * w;
        }
        out.push(-acc);
    }
    Ok(out)
}

/// Coefficients of `lambda^{-(m+1)}`, `m = 0..=window`, of a rational
/// function restricted to the ray `(lambda z0, lambda zeta0)`.
pub fn ray_series_of_rational(
    f: &BivarRational,
    z0: &Scalar,
    zeta0: &Scalar,
    window: usize,
) -> Result<Vec<Scalar>> {
    let num = XPoly::new(f.numer().on_ray(z0, zeta0));
    let den = XPoly::new(f.denom().on_ray(z0, zeta0));
    if den.is_zero() {
        return Err(Error::EvaluationPole);
    }
    Ok(series_of_rational(MainVar::Z, &num, &den, window)?
        .coeffs()
        .to_vec())
}

/// Secondary diagnostic: compares the convergent and the moment data as
/// bivariate expansions along one ray, for the first `window` total degrees.
pub fn ray_diagnostic(
    src: &dyn MomentSource,
    cf: &ContinuedFraction<BivarRational>,
    n: usize,
    z0: &Scalar,
    zeta0: &Scalar,
    window: usize,
) -> Result<MatchReport<Scalar>> {
    let value = convergents(cf, n)?.value().substitute(cf.main_var())?;
    let actual = ray_series_of_rational(&value, z0, zeta0, window)?;
    let expected = ray_series_of_moments(src, z0, zeta0, window)?;
    MatchReport::compare(&expected, &actual, window)
}

/// The symmetric associated function of `src` through order `order`,
/// compared with a continued fraction's convergent.
pub fn check_source_contract(
    src: &dyn MomentSource,
    cf: &ContinuedFraction<BivarRational>,
    n: usize,
) -> Result<MatchReport<BivarRational>> {
    let order = 2 * n - 1;
    let expected = associated_function_series(src, order, cf.mode)?;
    let actual = expand_convergent(&convergents(cf, n)?, cf.main_var(), order)?;
    MatchReport::compare(expected.coeffs(), actual.coeffs(), order)
}
