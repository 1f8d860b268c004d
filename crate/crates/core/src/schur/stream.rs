//! Incremental Schur runs for the full problem.
//!
//! Each new pair `(e_{2d}, e_{2d+1})` extends every level by two entries and
//! yields exactly one new atom, so earlier atoms never change.

use super::jfrac::{atom_of_level, JAtom, JAtoms};
use super::step::next_minor;
use crate::algebra::Field;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
struct Level<K> {
    seq: Vec<K>,
    minors: Vec<K>,
    s0_pows: Vec<K>,
    inv_pows: Vec<K>,
}

impl<K: Field> Level<K> {
    fn new() -> Self {
        Level {
            seq: Vec::new(),
            minors: vec![K::one()],
            s0_pows: vec![K::one()],
            inv_pows: vec![K::one()],
        }
    }
}

/// State of an incremental J-fraction computation.
#[derive(Clone, Debug)]
pub struct SchurStream<K> {
    levels: Vec<Level<K>>,
    atoms: JAtoms<K>,
}

impl<K: Field> Default for SchurStream<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Field> SchurStream<K> {
    pub fn new() -> Self {
        SchurStream {
            levels: Vec::new(),
            atoms: JAtoms::new(Vec::new()),
        }
    }

    pub fn atoms(&self) -> &JAtoms<K> {
        &self.atoms
    }

    pub fn depth(&self) -> usize {
        self.atoms.depth()
    }

    /// Appends `value` to level `i`, cascading the new minor downwards.
    fn push(&mut self, i: usize, value: K) -> Result<()> {
        if self.levels.len() == i {
            self.levels.push(Level::new());
        }
        let lvl = &mut self.levels[i];
        lvl.seq.push(value);
        let m = lvl.seq.len() - 1;
        if m == 0 {
            return Ok(());
        }
        let s0 = lvl.seq[0].clone();
        let p = lvl.s0_pows[m - 1].clone() * s0.clone();
        lvl.s0_pows.push(p);
        let d = next_minor(&lvl.seq, &lvl.minors, &lvl.s0_pows, m);
        lvl.minors.push(d.clone());
        if m < 2 {
            return Ok(());
        }
        if s0.is_zero() {
            return Err(Error::LeadingMomentZero { depth: i + 1 });
        }
        while lvl.inv_pows.len() <= m {
            let next = lvl.inv_pows[lvl.inv_pows.len() - 1].clone() * s0.inv()?;
            lvl.inv_pows.push(next);
        }
        let v = d * lvl.inv_pows[m].clone();
        let v = if m % 2 == 1 { v } else { -v };
        self.push(i + 1, v)
    }

    /// Feeds `e_{2d}, e_{2d+1}` and returns atom `d`.
    pub fn push_pair(&mut self, even: K, odd: K) -> Result<&JAtom<K>> {
        let d = self.atoms.depth();
        self.push(0, even)?;
        self.push(0, odd)?;
        let atom = atom_of_level(&self.levels[d].seq, d + 1)?;
        self.atoms.push(atom);
        Ok(&self.atoms.atoms()[d])
    }
}

/// Atoms `0..depth` from a generator of the associated sequence.
pub fn stream_atoms<K: Field>(
    mut source: impl FnMut(usize) -> Result<K>,
    depth: usize,
) -> Result<JAtoms<K>> {
    let mut s = SchurStream::new();
    for d in 0..depth {
        let even = source(2 * d)?;
        let odd = source(2 * d + 1)?;
        s.push_pair(even, odd)?;
    }
    Ok(s.atoms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Scalar;
    use crate::schur::jfraction_seq;

    fn q(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::int(x)).collect()
    }

    #[test]
    fn matches_batch() {
        let s = q(&[2, -1, 3, 5, -4, 7, 1, 9]);
        for d in 1..=4 {
            let streamed = stream_atoms(|k| Ok(s[k].clone()), d).unwrap();
            assert_eq!(streamed, jfraction_seq(&s[..2 * d]).unwrap());
        }
    }

    #[test]
    fn prefix_property() {
        let s = q(&[1, 3, 2, 5, 4, 1, 1, 8, 3, 2]);
        let mut st = SchurStream::new();
        let mut prev = st.atoms().clone();
        for d in 0..5 {
            st.push_pair(s[2 * d].clone(), s[2 * d + 1].clone()).unwrap();
            assert!(prev.is_prefix_of(st.atoms()));
            assert_eq!(st.depth(), d + 1);
            prev = st.atoms().clone();
        }
    }

    #[test]
    fn zero_extended_table() {
        let s = q(&[1, 0, 0, 0]);
        let err = stream_atoms(|k| Ok(s[k].clone()), 2).unwrap_err();
        assert_eq!(err, Error::LeadingMomentZero { depth: 2 });
    }
}
