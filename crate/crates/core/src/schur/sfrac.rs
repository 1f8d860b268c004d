//! Stieltjes-like fractions
//! `F = 1/(-X m_1 + 1/(l_1 + 1/(-X m_2 + 1/(l_2 + ...))))`.
//!
//! Atoms are peeled off the series of `F` two coefficients at a time.

use serde::{Deserialize, Serialize};

use crate::algebra::{BivarRational, Field, PowerSeries, Ring};
use crate::error::{Error, Result};
use crate::moments::AssociatedSequence;

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct SAtom<R> {
    pub m: R,
    pub l: R,
}

impl<R> SAtom<R> {
    pub fn new(m: R, l: R) -> Self {
        SAtom { m, l }
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SAtoms<R> {
    atoms: Vec<SAtom<R>>,
}

impl<R: Ring> SAtoms<R> {
    pub fn new(atoms: Vec<SAtom<R>>) -> Self {
        SAtoms { atoms }
    }

    pub fn depth(&self) -> usize {
        self.atoms.len()
    }

    pub fn atoms(&self) -> &[SAtom<R>] {
        &self.atoms
    }

    pub fn prefix(&self, depth: usize) -> Self {
        SAtoms {
            atoms: self.atoms.iter().take(depth).cloned().collect(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SAtoms<S> {
        SAtoms {
            atoms: self
                .atoms
                .iter()
                .map(|a| SAtom::new(f(&a.m), f(&a.l)))
                .collect(),
        }
    }
}

/// S-fraction atoms of an even-length sequence `e` with `F = -sum e_j X^{-(j+1)}`.
///
/// With `F = w h(w)`, `w = 1/X`: `1/F = X/h = -X m + G` fixes `m = -(1/h)_0`,
/// then `1/G = l + F'` fixes `l = (1/G)_0`, and `F'` carries two fewer known
/// coefficients. In particular `m_1 = 1/e_0` and `l_1 = e_0^2/e_1`.
pub fn sfraction_seq<K: Field>(seq: &[K]) -> Result<SAtoms<K>> {
    if seq.len() % 2 == 1 {
        return Err(Error::OddLength { len: seq.len() });
    }
    if seq.is_empty() {
        return Err(Error::InsufficientLength { needed: 2, got: 0 });
    }
    let n = seq.len() / 2;
    let mut h: Vec<K> = seq.iter().map(|e| -e.clone()).collect();
    let mut atoms = Vec::with_capacity(n);
    for i in 1..=n {
        if h[0].is_zero() {
            return Err(Error::LeadingMomentZero { depth: i });
        }
        let r = PowerSeries::new(h).inverse()?.into_coeffs();
        let m = -r[0].clone();
        let g = &r[1..];
        if g[0].is_zero() {
            return Err(Error::PlusRegularityFailure { depth: i });
        }
        let inv_g = PowerSeries::new(g.to_vec()).inverse()?.into_coeffs();
        let l = inv_g[0].clone();
        atoms.push(SAtom::new(m, l));
        h = inv_g[1..].to_vec();
    }
    Ok(SAtoms::new(atoms))
}

pub fn sfraction(assoc: &AssociatedSequence) -> Result<SAtoms<BivarRational>> {
    sfraction_seq(assoc.entries())
}
