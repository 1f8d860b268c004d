//! Moment data and associated coefficient sequences.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::{BivarPoly, BivarRational, CoeffSeries, MainVar, Monomial, Ring, Scalar};
use crate::error::{Error, Result};

/// Which index set a [`MomentTable`] must cover.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Completeness {
    /// All `(i, j)` with `i + j <= L`.
    #[serde(rename = "TRIANGULAR")]
    Triangular,
    /// All `(i, j)` with `max(i, j) <= L`.
    #[serde(rename = "SQUARE")]
    Square,
}

impl Completeness {
    pub fn contains(self, order: usize, i: usize, j: usize) -> bool {
        match self {
            Completeness::Triangular => i + j <= order,
            Completeness::Square => i.max(j) <= order,
        }
    }

    /// The index set, row by row.
    pub fn indices(self, order: usize) -> impl Iterator<Item = (usize, usize)> {
        (0..=order)
            .flat_map(move |i| (0..=order).map(move |j| (i, j)))
            .filter(move |&(i, j)| self.contains(order, i, j))
    }
}

/// Symmetric (`X = z*zeta`) or nonsymmetric (`X = z`) treatment.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Mode {
    #[serde(rename = "NONSYM")]
    NonSym,
    #[serde(rename = "SYM")]
    Sym,
}

impl Mode {
    pub fn main_var(self) -> MainVar {
        match self {
            Mode::NonSym => MainVar::Z,
            Mode::Sym => MainVar::ZZeta,
        }
    }
}

/// Anything that can report the moment `s_{i,j}`.
pub trait MomentSource {
    fn moment(&self, i: usize, j: usize) -> Result<Scalar>;
    fn source_kind(&self) -> SourceKind;
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum SourceKind {
    #[serde(rename = "table")]
    Table,
    #[serde(rename = "measure")]
    Measure,
}

/// Moments `s_{i,j}` over a complete index set.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct MomentTable {
    #[serde(rename = "L")]
    order: usize,
    #[serde(rename = "mode")]
    completeness: Completeness,
    #[serde(serialize_with = "serialize_entries")]
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl MomentTable {
    /// Validates that exactly the index set of `completeness` is present.
    pub fn new(
        order: usize,
        completeness: Completeness,
        entries: BTreeMap<(usize, usize), Scalar>,
    ) -> Result<Self> {
        if let Some(&(i, j)) = entries
            .keys()
            .find(|&&(i, j)| !completeness.contains(order, i, j))
        {
            return Err(Error::InvalidTable(format!(
                "entry s[{i},{j}] lies outside the index set"
            )));
        }
        if let Some((i, j)) = completeness
            .indices(order)
            .find(|k| !entries.contains_key(k))
        {
            return Err(Error::IncompleteTable { i, j });
        }
        Ok(MomentTable {
            order,
            completeness,
            entries,
        })
    }

    pub fn from_fn(
        order: usize,
        completeness: Completeness,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let entries = completeness
            .indices(order)
            .map(|(i, j)| ((i, j), f(i, j)))
            .collect();
        MomentTable {
            order,
            completeness,
            entries,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn completeness(&self) -> Completeness {
        self.completeness
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Scalar> {
        self.entries.get(&(i, j))
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Scalar)> {
        self.entries.iter().map(|(&k, v)| (k, v))
    }

    /// `s_{i,j} -> s_{j,i}`; both index sets are symmetric.
    pub fn transpose(&self) -> Self {
        MomentTable {
            order: self.order,
            completeness: self.completeness,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), v)| ((j, i), v.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, lambda: &Scalar) -> Self {
        MomentTable {
            order: self.order,
            completeness: self.completeness,
            entries: self
                .entries
                .iter()
                .map(|(&k, v)| (k, v * lambda))
                .collect(),
        }
    }
}

impl MomentSource for MomentTable {
    fn moment(&self, i: usize, j: usize) -> Result<Scalar> {
        self.get(i, j).cloned().ok_or(Error::IncompleteTable { i, j })
    }

    fn source_kind(&self) -> SourceKind {
        SourceKind::Table
    }
}

#[derive(Serialize, Deserialize)]
struct EntryRepr {
    i: usize,
    j: usize,
    v: Scalar,
}

fn serialize_entries<S: serde::Serializer>(
    entries: &BTreeMap<(usize, usize), Scalar>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_seq(entries.iter().map(|(&(i, j), v)| EntryRepr {
        i,
        j,
        v: v.clone(),
    }))
}

#[derive(Deserialize)]
struct TableRepr {
    #[serde(rename = "L")]
    order: usize,
    #[serde(rename = "mode")]
    completeness: Completeness,
    entries: Vec<EntryRepr>,
}

impl<'de> Deserialize<'de> for MomentTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = TableRepr::deserialize(d)?;
        let mut map = BTreeMap::new();
        for e in r.entries {
            if map.insert((e.i, e.j), e.v).is_some() {
                return Err(D::Error::custom(format!("duplicate entry s[{},{}]", e.i, e.j)));
            }
        }
        MomentTable::new(r.order, r.completeness, map).map_err(D::Error::custom)
    }
}

/// A point mass `mass * delta_(t, tau)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Atom {
    pub t: Scalar,
    pub tau: Scalar,
    pub mass: Scalar,
}

impl Atom {
    pub fn new(t: Scalar, tau: Scalar, mass: Scalar) -> Self {
        Atom { t, tau, mass }
    }
}

/// A finite sum of point masses at pairwise distinct points of `C^2`.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct AtomicMeasure {
    atoms: Vec<Atom>,
}

impl AtomicMeasure {
    pub fn new(atoms: Vec<Atom>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidMeasure("no atoms".into()));
        }
        for (k, a) in atoms.iter().enumerate() {
            if a.mass.is_zero() {
                return Err(Error::InvalidMeasure(format!("atom {k} has zero mass")));
            }
            if atoms[..k].iter().any(|b| b.t == a.t && b.tau == a.tau) {
                return Err(Error::InvalidMeasure(format!(
                    "atom {k} repeats the point ({}, {})",
                    a.t, a.tau
                )));
            }
        }
        Ok(AtomicMeasure { atoms })
    }

    /// Sums the masses of atoms sharing a point and drops points whose mass
    /// cancels.
    pub fn merge_duplicates(atoms: Vec<Atom>) -> Result<Self> {
        let mut merged: Vec<Atom> = Vec::new();
        for a in atoms {
            match merged.iter_mut().find(|b| b.t == a.t && b.tau == a.tau) {
                Some(b) => b.mass = &b.mass + &a.mass,
                None => merged.push(a),
            }
        }
        merged.retain(|a| !a.mass.is_zero());
        AtomicMeasure::new(merged)
    }

    pub fn dirac(t: Scalar, tau: Scalar) -> Self {
        AtomicMeasure {
            atoms: vec![Atom::new(t, tau, Scalar::one())],
        }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// The sum of two measures with disjoint supports.
    pub fn union(&self, other: &AtomicMeasure) -> Result<Self> {
        let mut atoms = self.atoms.clone();
        atoms.extend(other.atoms.iter().cloned());
        AtomicMeasure::new(atoms)
    }

    pub fn is_real(&self) -> bool {
        self.atoms
            .iter()
            .all(|a| a.t.is_real() && a.tau.is_real() && a.mass.is_real())
    }
}

impl MomentSource for AtomicMeasure {
    fn moment(&self, i: usize, j: usize) -> Result<Scalar> {
        Ok(self.atoms.iter().fold(Scalar::zero(), |acc, a| {
            acc + a.mass.clone() * a.t.pow(i as u32) * a.tau.pow(j as u32)
        }))
    }

    fn source_kind(&self) -> SourceKind {
        SourceKind::Measure
    }
}

impl<'de> Deserialize<'de> for AtomicMeasure {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        struct Repr {
            atoms: Vec<Atom>,
        }
        AtomicMeasure::new(Repr::deserialize(d)?.atoms).map_err(D::Error::custom)
    }
}

/// `s_{i,j} = sum_k m_k t_k^i tau_k^j` over the index set of `completeness`.
pub fn moments_of_atomic(mu: &AtomicMeasure, order: usize, completeness: Completeness) -> MomentTable {
    // Power tables keep this at one multiplication per entry and atom.
    let pows = |x: &Scalar| {
        let mut v = vec![Scalar::one()];
        for k in 0..order {
            let next = &v[k] * x;
            v.push(next);
        }
        v
    };
    let tables: Vec<(Vec<Scalar>, Vec<Scalar>, &Scalar)> = mu
        .atoms
        .iter()
        .map(|a| (pows(&a.t), pows(&a.tau), &a.mass))
        .collect();
    MomentTable::from_fn(order, completeness, |i, j| {
        tables.iter().fold(Scalar::zero(), |acc, (tp, sp, m)| {
            acc + &(*m * &tp[i]) * &sp[j]
        })
    })
}

pub(crate) fn binomial(n: usize, k: usize) -> Scalar {
    let b = num_integer::binomial(BigInt::from(n), BigInt::from(k));
    Scalar::real(num_rational::BigRational::from_integer(b))
}

/// Coefficient sequences in the main variable, ready for the Schur engine.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct AssociatedSequence {
    mode: Mode,
    entries: Vec<BivarRational>,
    source: SourceKind,
}

impl AssociatedSequence {
    pub fn new(mode: Mode, entries: Vec<BivarRational>, source: SourceKind) -> Result<Self> {
        if mode == Mode::NonSym {
            if let Some(k) = entries.iter().position(BivarRational::depends_on_z) {
                return Err(Error::ModeMismatch(format!(
                    "nonsymmetric entry {k} depends on z"
                )));
            }
        }
        Ok(AssociatedSequence {
            mode,
            entries,
            source,
        })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn main_var(&self) -> MainVar {
        self.mode.main_var()
    }

    pub fn source(&self) -> SourceKind {
        self.source
    }

    pub fn entries(&self) -> &[BivarRational] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn prefix(&self, len: usize) -> Self {
        AssociatedSequence {
            mode: self.mode,
            entries: self.entries.iter().take(len).cloned().collect(),
            source: self.source,
        }
    }

    /// The associated function `F = -sum_j e_j X^{-(j+1)}` to order `len - 1`.
    pub fn function_series(&self) -> CoeffSeries<BivarRational> {
        CoeffSeries::new(
            self.main_var(),
            self.entries.iter().map(|e| -e.clone()).collect(),
        )
    }
}

/// `s_k(zeta) = sum_{j=0}^{N-k} C(j+k, j) s_{k,j} zeta^{-(j+1)}` for `k = 0..=N`.
fn nonsymmetric_entries(src: &dyn MomentSource, top: usize) -> Result<Vec<BivarRational>> {
    (0..=top)
        .map(|k| {
            // Over the common denominator zeta^{top-k+1}.
            let span = top - k;
            let mut num = Vec::with_capacity(span + 1);
            for j in 0..=span {
                let c = binomial(j + k, j) * src.moment(k, j)?;
                num.push((Monomial::new(0, (span - j) as u32), c));
            }
            let den = BivarPoly::monomial(Scalar::one(), 0, span as u32 + 1);
            BivarRational::new(BivarPoly::from_terms(num), den)
        })
        .collect()
}

/// `s_J = sum_{i<J} C(i+J, i) (s_{i,J} z^{J-i} + s_{J,i} zeta^{J-i}) + C(2J, J) s_{J,J}`.
fn symmetric_entry(src: &dyn MomentSource, big_j: usize) -> Result<BivarRational> {
    let mut terms = Vec::with_capacity(2 * big_j + 1);
    for i in 0..big_j {
        let c = binomial(i + big_j, i);
        let e = (big_j - i) as u32;
        terms.push((Monomial::new(e, 0), &c * &src.moment(i, big_j)?));
        terms.push((Monomial::new(0, e), &c * &src.moment(big_j, i)?));
    }
    terms.push((
        Monomial::new(0, 0),
        binomial(2 * big_j, big_j) * src.moment(big_j, big_j)?,
    ));
    Ok(BivarRational::from_poly(BivarPoly::from_terms(terms)))
}

/// The sequence `s_0(zeta), ..., s_{2n-1}(zeta)` with main variable `z`.
pub fn associate_nonsymmetric(table: &MomentTable, n: usize) -> Result<AssociatedSequence> {
    let entries = nonsymmetric_entries(table, 2 * n - 1)?;
    AssociatedSequence::new(Mode::NonSym, entries, SourceKind::Table)
}

/// The sequence `s_0, ..., s_{2n-1}` in `(z, zeta)` with main variable `z*zeta`.
pub fn associate_symmetric(table: &MomentTable, n: usize) -> Result<AssociatedSequence> {
    let entries = (0..2 * n)
        .map(|j| symmetric_entry(table, j))
        .collect::<Result<_>>()?;
    AssociatedSequence::new(Mode::Sym, entries, SourceKind::Table)
}

/// The symmetric associated sequence of a measure, from the atom data.
///
/// Each atom contributes
/// `m (sum_{i<k} C(i+k, i) t^i tau^k z^{k-i} + C(2k, k) t^k tau^k
///  + sum_{i<k} C(k+i, k) t^k tau^i zeta^{k-i})`.
pub fn associated_of_atomic(mu: &AtomicMeasure, n: usize) -> AssociatedSequence {
    let entries = (0..2 * n)
        .map(|k| {
            let mut poly = BivarPoly::zero();
            for a in mu.atoms() {
                let tk = a.t.pow(k as u32);
                let tauk = a.tau.pow(k as u32);
                let mut terms = Vec::with_capacity(2 * k + 1);
                for i in 0..k {
                    let c = binomial(i + k, i) * a.mass.clone();
                    let e = (k - i) as u32;
                    terms.push((Monomial::new(e, 0), &(&c * &a.t.pow(i as u32)) * &tauk));
                    terms.push((Monomial::new(0, e), &(&c * &tk) * &a.tau.pow(i as u32)));
                }
                terms.push((
                    Monomial::new(0, 0),
                    binomial(2 * k, k) * a.mass.clone() * tk.clone() * tauk.clone(),
                ));
                poly = poly + BivarPoly::from_terms(terms);
            }
            BivarRational::from_poly(poly)
        })
        .collect();
    AssociatedSequence {
        mode: Mode::Sym,
        entries,
        source: SourceKind::Measure,
    }
}

/// The associated function `F` as a series in `1/X` to order `order`.
///
/// Coefficients are `-s_k(zeta)` (nonsymmetric, moments with `i + j <= order`)
/// or `-s_j(z, zeta)` (symmetric, moments with `max(i, j) <= order`).
pub fn associated_function_series(
    src: &dyn MomentSource,
    order: usize,
    mode: Mode,
) -> Result<CoeffSeries<BivarRational>> {
    let entries = match mode {
        Mode::NonSym => nonsymmetric_entries(src, order)?,
        Mode::Sym => (0..=order)
            .map(|j| symmetric_entry(src, j))
            .collect::<Result<_>>()?,
    };
    Ok(CoeffSeries::new(
        mode.main_var(),
        entries.into_iter().map(|e| -e).collect(),
    ))
}
