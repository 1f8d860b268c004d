//! Hankel determinants and regularity reports.

use serde::{Deserialize, Serialize};

use crate::algebra::{BivarRational, Field, Ring, Scalar};
use crate::error::{Error, Result};
use crate::moments::AssociatedSequence;

/// Determinant over a field by elimination with nonzero pivots.
pub fn det_elimination<K: Field>(mut m: Vec<Vec<K>>) -> Result<K> {
    let n = m.len();
    let mut det = K::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Ok(K::zero());
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        let inv = pivot.inv()?;
        det = det * pivot;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone() * inv.clone();
            for c in col..n {
                let v = m[r][c].clone() - f.clone() * m[col][c].clone();
                m[r][c] = v;
            }
        }
    }
    Ok(det)
}

fn hankel<K: Field>(e: &[K], i: usize, offset: usize) -> Result<K> {
    let needed = 2 * i - 1 + offset;
    if i == 0 || e.len() < needed {
        return Err(Error::InsufficientLength {
            needed: needed.max(1),
            got: e.len(),
        });
    }
    let m = (0..i)
        .map(|r| (0..i).map(|c| e[r + c + offset].clone()).collect())
        .collect();
    det_elimination(m)
}

/// `D_i = det (e_{r+c})_{r,c<i}`; needs `e_0..e_{2i-2}`.
pub fn hankel_d<K: Field>(e: &[K], i: usize) -> Result<K> {
    hankel(e, i, 0)
}

/// `D_i^+ = det (e_{r+c+1})_{r,c<i}`; needs `e_1..e_{2i-1}`.
pub fn hankel_dplus<K: Field>(e: &[K], i: usize) -> Result<K> {
    hankel(e, i, 1)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum RegularityKind {
    #[serde(rename = "PLAIN")]
    Plain,
    #[serde(rename = "PLUS")]
    Plus,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct HankelEntry {
    pub i: usize,
    pub plus: bool,
    pub value: BivarRational,
    pub identically_zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_at_point: Option<Scalar>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct RegularityReport {
    pub kind: RegularityKind,
    pub entries: Vec<HankelEntry>,
    pub regular: bool,
    /// First Hankel index whose determinant vanishes identically.
    pub first_failure: Option<usize>,
}

/// Checks `D_i` (and `D_i^+` for [`RegularityKind::Plus`]) for every index
/// the sequence supports: `D_i` while `2i - 1 <= len`, `D_i^+` while
/// `2i <= len`.
pub fn regularity_report(
    assoc: &AssociatedSequence,
    kind: RegularityKind,
    point: Option<(&Scalar, &Scalar)>,
) -> Result<RegularityReport> {
    let e = assoc.entries();
    let mut entries = Vec::new();
    let eval = |v: &BivarRational| -> Result<Option<Scalar>> {
        point.map(|(z, w)| v.eval(z, w)).transpose()
    };
    for i in 1..=(e.len() + 1) / 2 {
        let value = hankel_d(e, i)?;
        entries.push(HankelEntry {
            i,
            plus: false,
            identically_zero: value.is_zero(),
            value_at_point: eval(&value)?,
            value,
        });
    }
    if kind == RegularityKind::Plus {
        for i in 1..=e.len() / 2 {
            let value = hankel_dplus(e, i)?;
            entries.push(HankelEntry {
                i,
                plus: true,
                identically_zero: value.is_zero(),
                value_at_point: eval(&value)?,
                value,
            });
        }
    }
    let first_failure = entries
        .iter()
        .filter(|h| h.identically_zero)
        .map(|h| h.i)
        .min();
    Ok(RegularityReport {
        kind,
        regular: first_failure.is_none(),
        entries,
        first_failure,
    })
}
