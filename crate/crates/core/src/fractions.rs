//! Continued fractions, their convergents and Möbius compositions.
//!
//! J form: `F = -b_0/(a_0 - b_1/(a_1 - ...))` with maps
//! `T_j(w) = -b_j/(a_j + w)`, so `T_0(T_1(...T_{n-1}(0)))` is the `n`-th
//! convergent `Q_n/P_n`.
//!
//! S form: `F = 1/(-X m_1 + 1/(l_1 + 1/(-X m_2 + ...)))` with maps
//! `T+_{2i-1}(w) = 1/(-X m_i + w)` and `T+_{2i}(w) = 1/(l_i + w)`.

use serde::{Deserialize, Serialize};

use crate::algebra::{BivarRational, MainVar, Ring, Scalar, XFraction, XPoly};
use crate::error::{Error, Result};
use crate::moments::Mode;
use crate::schur::{JAtoms, SAtoms};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum FractionKind {
    J,
    S,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", content = "atoms")]
pub enum Atoms<R> {
    J(JAtoms<R>),
    S(SAtoms<R>),
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ContinuedFraction<R> {
    pub mode: Mode,
    #[serde(flatten)]
    pub atoms: Atoms<R>,
}

impl<R: Ring> ContinuedFraction<R> {
    pub fn j(mode: Mode, atoms: JAtoms<R>) -> Result<Self> {
        if atoms.depth() == 0 {
            return Err(Error::InsufficientLength { needed: 1, got: 0 });
        }
        Ok(ContinuedFraction {
            mode,
            atoms: Atoms::J(atoms),
        })
    }

    pub fn s(mode: Mode, atoms: SAtoms<R>) -> Result<Self> {
        if atoms.depth() == 0 {
            return Err(Error::InsufficientLength { needed: 1, got: 0 });
        }
        Ok(ContinuedFraction {
            mode,
            atoms: Atoms::S(atoms),
        })
    }

    pub fn kind(&self) -> FractionKind {
        match self.atoms {
            Atoms::J(_) => FractionKind::J,
            Atoms::S(_) => FractionKind::S,
        }
    }

    pub fn depth(&self) -> usize {
        match &self.atoms {
            Atoms::J(a) => a.depth(),
            Atoms::S(a) => a.depth(),
        }
    }

    pub fn main_var(&self) -> MainVar {
        self.mode.main_var()
    }

    pub fn prefix(&self, depth: usize) -> Self {
        let atoms = match &self.atoms {
            Atoms::J(a) => Atoms::J(a.prefix(depth)),
            Atoms::S(a) => Atoms::S(a.prefix(depth)),
        };
        ContinuedFraction {
            mode: self.mode,
            atoms,
        }
    }
}

/// Numerator and denominator of a convergent, with the previous pair.
///
/// For the J system `p, q` are `P_n, Q_n` and `p_prev, q_prev` are
/// `P_{n-1}, Q_{n-1}`; for the S system they are `P+_{2n}, Q+_{2n}` and
/// `P+_{2n-1}, Q+_{2n-1}`.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(bound(
    serialize = "R: Ring + Serialize",
    deserialize = "R: Ring + Deserialize<'de>"
))]
pub struct ConvergentPair<R> {
    pub n: usize,
    #[serde(rename = "P")]
    pub p: XPoly<R>,
    #[serde(rename = "Q")]
    pub q: XPoly<R>,
    #[serde(rename = "P_prev")]
    pub p_prev: XPoly<R>,
    #[serde(rename = "Q_prev")]
    pub q_prev: XPoly<R>,
}

impl<R: Ring> ConvergentPair<R> {
    /// `Q / P` as a fraction in `X`.
    pub fn value(&self) -> XFraction<R> {
        XFraction {
            num: self.q.clone(),
            den: self.p.clone(),
        }
    }
}

fn depth_check(requested: usize, available: usize) -> Result<()> {
    if requested > available {
        Err(Error::DepthExceeded {
            requested,
            available,
        })
    } else {
        Ok(())
    }
}

/// `y_{j+1} = a_j y_j - b_j y_{j-1}` from `(P_{-1}, P_0) = (0, 1)` and
/// `(Q_{-1}, Q_0) = (1, 0)`.
///
/// Then `Q_{n-1} P_n - Q_n P_{n-1} = b_0 b_1 ... b_{n-1}`.
pub fn convergents_j<R: Ring>(atoms: &JAtoms<R>, n: usize) -> Result<ConvergentPair<R>> {
    depth_check(n, atoms.depth())?;
    let (mut p_prev, mut p) = (XPoly::zero(), XPoly::one());
    let (mut q_prev, mut q) = (XPoly::one(), XPoly::zero());
    for atom in &atoms.atoms()[..n] {
        let a = atom.a();
        let b = XPoly::constant(atom.b.clone());
        let p_next = a.clone() * p.clone() - b.clone() * p_prev;
        let q_next = a * q.clone() - b * q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
    }
    Ok(ConvergentPair {
        n,
        p,
        q,
        p_prev,
        q_prev,
    })
}

/// `y_{2i-1} = y_{2i-3} - X m_i y_{2i-2}`, `y_{2i} = y_{2i-2} + l_i y_{2i-1}`
/// from `P+_{-1} = 0, P+_0 = 1, Q+_{-1} = 1, Q+_0 = 0`.
pub fn convergents_s<R: Ring>(atoms: &SAtoms<R>, n: usize) -> Result<ConvergentPair<R>> {
    depth_check(n, atoms.depth())?;
    let (mut p_odd, mut p_even) = (XPoly::zero(), XPoly::one());
    let (mut q_odd, mut q_even) = (XPoly::one(), XPoly::zero());
    for atom in &atoms.atoms()[..n] {
        let xm = XPoly::constant(atom.m.clone()).shift(1);
        let l = XPoly::constant(atom.l.clone());
        p_odd = p_odd - xm.clone() * p_even.clone();
        q_odd = q_odd - xm * q_even.clone();
        p_even = p_even + l.clone() * p_odd.clone();
        q_even = q_even + l * q_odd.clone();
    }
    Ok(ConvergentPair {
        n,
        p: p_even,
        q: q_even,
        p_prev: p_odd,
        q_prev: q_odd,
    })
}

pub fn convergents<R: Ring>(cf: &ContinuedFraction<R>, n: usize) -> Result<ConvergentPair<R>> {
    match &cf.atoms {
        Atoms::J(a) => convergents_j(a, n),
        Atoms::S(a) => convergents_s(a, n),
    }
}

/// `w -> num_c / (den_c + w)` applied projectively to `w = u/v`.
fn mobius<R: Ring>(
    num_c: &XPoly<R>,
    den_c: &XPoly<R>,
    w: XFraction<R>,
    level: usize,
) -> Result<XFraction<R>> {
    let den = den_c.clone() * w.den.clone() + w.num;
    if den.is_zero() {
        return Err(Error::DegenerateComposition { level });
    }
    Ok(XFraction {
        num: num_c.clone() * w.den,
        den,
    })
}

/// `T_0(T_1(...T_{n-1}(tail)))` for J atoms.
pub fn compose_mobius_j<R: Ring>(
    atoms: &JAtoms<R>,
    n: usize,
    tail: &XFraction<R>,
) -> Result<XFraction<R>> {
    depth_check(n, atoms.depth())?;
    let mut w = tail.clone();
    for j in (0..n).rev() {
        let atom = &atoms.atoms()[j];
        w = mobius(&XPoly::constant(-atom.b.clone()), &atom.a(), w, j)?;
    }
    Ok(w)
}

/// `T+_1(T+_2(...T+_{2n}(tail)))` for S atoms.
pub fn compose_mobius_s<R: Ring>(
    atoms: &SAtoms<R>,
    n: usize,
    tail: &XFraction<R>,
) -> Result<XFraction<R>> {
    depth_check(n, atoms.depth())?;
    let mut w = tail.clone();
    let one = XPoly::one();
    for i in (0..n).rev() {
        let atom = &atoms.atoms()[i];
        w = mobius(&one, &XPoly::constant(atom.l.clone()), w, 2 * i + 2)?;
        w = mobius(&one, &(-XPoly::constant(atom.m.clone()).shift(1)), w, 2 * i + 1)?;
    }
    Ok(w)
}

/// Nested evaluation of the first `n` atoms (pairs for S) at `tail`.
pub fn compose_mobius<R: Ring>(
    cf: &ContinuedFraction<R>,
    n: usize,
    tail: &XFraction<R>,
) -> Result<XFraction<R>> {
    match &cf.atoms {
        Atoms::J(a) => compose_mobius_j(a, n, tail),
        Atoms::S(a) => compose_mobius_s(a, n, tail),
    }
}

/// The solution family parametrized by `tail`, from the convergents.
///
/// J: `(Q_{n-1} tail + Q_n) / (P_{n-1} tail + P_n)`, the same as composing
/// all `n` maps at `tail`. S: `(Q+_{2n} + Q+_{2n-1} tail) / (P+_{2n} + P+_{2n-1} tail)`.
pub fn parametrized_solution<R: Ring>(
    cf: &ContinuedFraction<R>,
    tail: &XFraction<R>,
) -> Result<XFraction<R>> {
    let c = convergents(cf, cf.depth())?;
    let (u, v) = (tail.num.clone(), tail.den.clone());
    let num = c.q_prev * u.clone() + c.q * v.clone();
    let den = c.p_prev * u + c.p * v;
    if den.is_zero() {
        return Err(Error::DegenerateComposition { level: 0 });
    }
    Ok(XFraction { num, den })
}

/// `|a| >= |b| + 1`, decided exactly from squared moduli.
///
/// With `A = |a|^2`, `B = |b|^2` the bound is `A - B - 1 >= 2 sqrt(B)`, i.e.
/// `A - B - 1 >= 0` and `(A - B - 1)^2 >= 4 B`.
pub fn modulus_bound_holds(a: &Scalar, b: &Scalar) -> bool {
    let big_a = a.norm_sqr();
    let big_b = b.norm_sqr();
    let one = num_rational::BigRational::from_integer(1.into());
    let four = num_rational::BigRational::from_integer(4.into());
    let d = big_a - big_b.clone() - one;
    d >= num_rational::BigRational::from_integer(0.into()) && d.clone() * d >= four * big_b
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct AtomBound {
    pub n: usize,
    pub a: Scalar,
    pub b: Scalar,
    pub holds: bool,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub z: Scalar,
    pub zeta: Scalar,
    pub atoms: Vec<AtomBound>,
    /// The bound holds for every atom `n >= 1`.
    pub verdict: bool,
}

/// Evaluates `|a_n| >= |b_n| + 1` at `(z0, zeta0)` for every atom.
pub fn convergence_test(
    atoms: &JAtoms<BivarRational>,
    var: MainVar,
    z: &Scalar,
    zeta: &Scalar,
) -> Result<ConvergenceReport> {
    let x = var.at(z, zeta);
    let rows = atoms
        .atoms()
        .iter()
        .enumerate()
        .map(|(n, atom)| {
            let a = &x - &atom.c.eval(z, zeta)?;
            let b = atom.b.eval(z, zeta)?;
            Ok(AtomBound {
                n,
                holds: modulus_bound_holds(&a, &b),
                a,
                b,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConvergenceReport {
        z: z.clone(),
        zeta: zeta.clone(),
        verdict: rows.iter().skip(1).all(|r| r.holds),
        atoms: rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{series_of_rational, Field};
    use crate::schur::{JAtom, SAtom};

    fn q(n: i64) -> Scalar {
        Scalar::int(n)
    }

    fn j_atoms(v: &[(i64, i64)]) -> JAtoms<Scalar> {
        JAtoms::new(v.iter().map(|&(c, b)| JAtom::new(q(c), q(b))).collect())
    }

    #[test]
    fn first_convergent() {
        let a = j_atoms(&[(2, 1)]);
        let c = convergents_j(&a, 1).unwrap();
        assert_eq!(c.p, XPoly::linear(q(2)));
        assert_eq!(c.q, XPoly::constant(q(-1)));
        let s = series_of_rational(MainVar::ZZeta, &c.q, &c.p, 3).unwrap();
        assert_eq!(s.coeffs(), &[q(-1), q(-2), q(-4), q(-8)]);
    }

    #[test]
    fn second_convergent_unrolled() {
        let a = j_atoms(&[(2, 3), (-1, 5)]);
        let c = convergents_j(&a, 2).unwrap();
        let (a0, a1) = (XPoly::linear(q(2)), XPoly::linear(q(-1)));
        assert_eq!(c.p, a1.clone() * a0 - XPoly::constant(q(5)));
        assert_eq!(c.q, -(XPoly::constant(q(3)) * a1));
    }

    #[test]
    fn depth_exceeded() {
        assert_eq!(
            convergents_j(&j_atoms(&[(1, 1)]), 2),
            Err(Error::DepthExceeded { requested: 2, available: 1 })
        );
    }

    #[test]
    fn s_system_unrolled() {
        let atoms = SAtoms::new(vec![SAtom::new(q(1), Scalar::ratio(1, 2))]);
        let c = convergents_s(&atoms, 1).unwrap();
        assert_eq!(c.p_prev, -XPoly::x());
        assert_eq!(c.q_prev, XPoly::one());
        assert_eq!(c.p, XPoly::new(vec![q(1), Scalar::ratio(-1, 2)]));
        assert_eq!(c.q, XPoly::constant(Scalar::ratio(1, 2)));
        // same value as -1/(X - 2)
        let j = convergents_j(&j_atoms(&[(2, 1)]), 1).unwrap();
        assert!(c.value().same_value(&j.value()));
    }

    #[test]
    fn composition_matches_recurrence() {
        let a = j_atoms(&[(2, 3), (-1, 5), (4, -2)]);
        for n in 1..=3 {
            let c = convergents_j(&a, n).unwrap();
            let m = compose_mobius_j(&a, n, &XFraction::zero()).unwrap();
            assert!(m.same_value(&c.value()));
        }
    }

    #[test]
    fn one_atom_with_tail() {
        let a = j_atoms(&[(2, 3)]);
        let t = XFraction::new(XPoly::constant(q(1)), XPoly::x()).unwrap();
        let m = compose_mobius_j(&a, 1, &t).unwrap();
        // -3 / (X - 2 + 1/X) = -3X / (X^2 - 2X + 1)
        let expected = XFraction::new(
            XPoly::new(vec![q(0), q(-3)]),
            XPoly::new(vec![q(1), q(-2), q(1)]),
        )
        .unwrap();
        assert!(m.same_value(&expected));
        let cf = ContinuedFraction::j(Mode::Sym, a).unwrap();
        assert!(parametrized_solution(&cf, &t).unwrap().same_value(&m));
    }

    #[test]
    fn s_composition_with_tail() {
        let atoms = SAtoms::new(vec![SAtom::new(q(2), q(3))]);
        let tau = XFraction::new(XPoly::constant(q(1)), XPoly::linear(q(1))).unwrap();
        let m = compose_mobius_s(&atoms, 1, &tau).unwrap();
        // 1/(-2X + 1/(3 + tau))
        let inner = (XFraction::constant(q(3)) + tau.clone()).inv().unwrap();
        let expected = (XFraction::new(XPoly::new(vec![q(0), q(-2)]), XPoly::one()).unwrap() + inner)
            .inv()
            .unwrap();
        assert!(m.same_value(&expected));
        let cf = ContinuedFraction::s(Mode::Sym, atoms).unwrap();
        assert!(parametrized_solution(&cf, &tau).unwrap().same_value(&m));
        let plain = convergents_s(cf_atoms_s(&cf), 1).unwrap();
        assert!(compose_mobius(&cf, 1, &XFraction::zero()).unwrap().same_value(&plain.value()));
    }

    fn cf_atoms_s<R: Ring>(cf: &ContinuedFraction<R>) -> &SAtoms<R> {
        match &cf.atoms {
            Atoms::S(a) => a,
            Atoms::J(_) => panic!("expected S atoms"),
        }
    }

    #[test]
    fn degenerate_composition() {
        let a = j_atoms(&[(0, 1)]);
        // a_0 + tail = X + (-X) = 0
        let t = XFraction::new(-XPoly::x(), XPoly::one()).unwrap();
        assert_eq!(
            compose_mobius_j(&a, 1, &t),
            Err(Error::DegenerateComposition { level: 0 })
        );
    }

    #[test]
    fn determinant_identity() {
        let a = j_atoms(&[(2, 3), (-1, 5), (4, -2), (7, 11)]);
        for n in 1..=4 {
            let c = convergents_j(&a, n).unwrap();
            let lhs = c.q_prev.clone() * c.p.clone() - c.q.clone() * c.p_prev.clone();
            let prod = a.atoms()[..n].iter().fold(q(1), |acc, t| acc * t.b.clone());
            assert_eq!(lhs, XPoly::constant(prod));
        }
    }

    #[test]
    fn modulus_bounds() {
        assert!(modulus_bound_holds(&q(3), &q(1)));
        assert!(!modulus_bound_holds(&q(0), &q(1)));
        assert!(modulus_bound_holds(&q(2), &q(1)));
        // |3 + 4i| = 5 >= |4| + 1
        let a = Scalar::complex(q(3), q(4));
        assert!(modulus_bound_holds(&a, &q(4)));
        assert!(!modulus_bound_holds(&a, &Scalar::ratio(41, 10)));
    }

    #[test]
    fn convergence_report() {
        let atoms = JAtoms::new(vec![
            JAtom::new(BivarRational::from_i64(2), BivarRational::one()),
            JAtom::new(BivarRational::from_i64(2), BivarRational::one()),
        ]);
        let r = convergence_test(&atoms, MainVar::Z, &q(5), &q(0)).unwrap();
        assert!(r.atoms.iter().all(|a| a.holds));
        assert!(r.verdict);
        let r = convergence_test(&atoms, MainVar::Z, &q(2), &q(0)).unwrap();
        assert!(!r.verdict);
    }
}
