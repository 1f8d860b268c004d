//! J-fraction atoms `(a_j, b_j)` with `a_j = X - c_j`.

use serde::{Deserialize, Serialize};

use super::step::step_at;
use crate::algebra::{BivarRational, Field, Ring, XPoly};
use crate::error::{Error, Result};
use crate::moments::AssociatedSequence;

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct JAtom<R> {
    /// The shift `c_j = s_1^{(j)} / s_0^{(j)}`.
    pub c: R,
    /// The weight `b_j = s_0^{(j)}`.
    pub b: R,
}

impl<R: Ring> JAtom<R> {
    pub fn new(c: R, b: R) -> Self {
        JAtom { c, b }
    }

    /// `a_j = X - c_j`.
    pub fn a(&self) -> XPoly<R> {
        XPoly::linear(self.c.clone())
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct JAtoms<R> {
    atoms: Vec<JAtom<R>>,
}

impl<R: Ring> JAtoms<R> {
    pub fn new(atoms: Vec<JAtom<R>>) -> Self {
        JAtoms { atoms }
    }

    pub fn depth(&self) -> usize {
        self.atoms.len()
    }

    pub fn atoms(&self) -> &[JAtom<R>] {
        &self.atoms
    }

    pub fn get(&self, j: usize) -> Option<&JAtom<R>> {
        self.atoms.get(j)
    }

    pub fn prefix(&self, depth: usize) -> Self {
        JAtoms {
            atoms: self.atoms.iter().take(depth).cloned().collect(),
        }
    }

    pub fn is_prefix_of(&self, other: &Self) -> bool {
        self.depth() <= other.depth() && other.atoms[..self.depth()] == self.atoms[..]
    }

    pub(crate) fn push(&mut self, atom: JAtom<R>) {
        self.atoms.push(atom);
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> JAtoms<S> {
        JAtoms {
            atoms: self
                .atoms
                .iter()
                .map(|a| JAtom::new(f(&a.c), f(&a.b)))
                .collect(),
        }
    }
}

/// Result of a J-fraction run: the atoms and every intermediate sequence.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct SchurTrace<K> {
    pub atoms: JAtoms<K>,
    /// `levels[i]` is `s^{(i)}`, of length `2n - 2i`.
    pub levels: Vec<Vec<K>>,
}

pub(crate) fn atom_of_level<K: Field>(level: &[K], depth: usize) -> Result<JAtom<K>> {
    let s0 = &level[0];
    if s0.is_zero() {
        return Err(Error::LeadingMomentZero { depth });
    }
    Ok(JAtom::new(level[1].checked_div(s0)?, s0.clone()))
}

/// The J-fraction of an even-length sequence over a field, with its trace.
pub fn jfraction_trace<K: Field>(seq: &[K]) -> Result<SchurTrace<K>> {
    if seq.len() % 2 == 1 {
        return Err(Error::OddLength { len: seq.len() });
    }
    if seq.is_empty() {
        return Err(Error::InsufficientLength { needed: 2, got: 0 });
    }
    let n = seq.len() / 2;
    let mut atoms = JAtoms::new(Vec::with_capacity(n));
    let mut levels = vec![seq.to_vec()];
    for i in 0..n {
        let level = &levels[i];
        atoms.push(atom_of_level(level, i + 1)?);
        if i + 1 < n {
            let next = step_at(level, i + 1)?;
            levels.push(next);
        }
    }
    Ok(SchurTrace { atoms, levels })
}

/// J-fraction atoms of a coefficient sequence over a field.
pub fn jfraction_seq<K: Field>(seq: &[K]) -> Result<JAtoms<K>> {
    jfraction_trace(seq).map(|t| t.atoms)
}

/// J-fraction atoms of an associated sequence of length `2n`.
pub fn jfraction(assoc: &AssociatedSequence) -> Result<JAtoms<BivarRational>> {
    jfraction_seq(assoc.entries())
}
