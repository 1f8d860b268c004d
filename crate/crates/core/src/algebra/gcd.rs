//! Bivariate gcd over `Q` / `Q(i)`.
//!
//! The inputs are viewed as polynomials in `z` whose coefficients live in the
//! Euclidean domain `K[zeta]`; the gcd is the gcd of the `z`-contents times
//! the primitive part of a primitive pseudo-remainder sequence.

use super::poly::{strip_monomial, BivarPoly, Monomial};
use super::ring::{Field, Ring};
use super::scalar::Scalar;

/// Dense univariate polynomial over [`Scalar`], lowest degree first, no
/// trailing zeros.
#[derive(Clone, PartialEq, Debug, Default)]
struct Uni(Vec<Scalar>);

impl Uni {
    fn trimmed(mut v: Vec<Scalar>) -> Uni {
        while v.last().is_some_and(Scalar::is_zero) {
            v.pop();
        }
        Uni(v)
    }

    fn one() -> Uni {
        Uni(vec![Scalar::one()])
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lc(&self) -> &Scalar {
        self.0.last().expect("nonzero polynomial")
    }

    fn scale(&self, c: &Scalar) -> Uni {
        Uni::trimmed(self.0.iter().map(|x| x * c).collect())
    }

    fn monic(&self) -> Uni {
        if self.is_zero() {
            return Uni::default();
        }
        self.scale(&self.lc().inv().expect("nonzero"))
    }

    fn mul(&self, rhs: &Uni) -> Uni {
        if self.is_zero() || rhs.is_zero() {
            return Uni::default();
        }
        let mut out = vec![Scalar::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Uni::trimmed(out)
    }

    fn sub(&self, rhs: &Uni) -> Uni {
        let n = self.0.len().max(rhs.0.len());
        let zero = Scalar::zero();
        Uni::trimmed(
            (0..n)
                .map(|k| self.0.get(k).unwrap_or(&zero) - rhs.0.get(k).unwrap_or(&zero))
                .collect(),
        )
    }

    /// Quotient and remainder over the field.
    fn divrem(&self, rhs: &Uni) -> (Uni, Uni) {
        let mut rem = self.0.clone();
        if rem.len() < rhs.0.len() {
            return (Uni::default(), self.clone());
        }
        let inv = rhs.lc().inv().expect("nonzero divisor");
        let dr = rhs.deg();
        let mut quot = vec![Scalar::zero(); rem.len() - dr];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dr] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(b * &c);
            }
            quot[k] = c;
        }
        rem.truncate(dr);
        (Uni::trimmed(quot), Uni::trimmed(rem))
    }

    fn exact_div(&self, rhs: &Uni) -> Uni {
        let (q, r) = self.divrem(rhs);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    fn gcd(&self, rhs: &Uni) -> Uni {
        if !self.is_zero() && !rhs.is_zero() && coprime_mod_p(self, rhs) {
            return Uni::one();
        }
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            if b.is_constant() {
                return Uni::one();
            }
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }
}

const P: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, P - 2)
}

/// Image in `F_p`, if the denominator is a unit there.
fn reduce_mod(c: &Scalar) -> Option<u64> {
    if !c.is_real() {
        return None;
    }
    let p = num_bigint::BigInt::from(P);
    let to_u64 = |n: &num_bigint::BigInt| -> u64 {
        let r = ((n % &p) + &p) % &p;
        r.iter_u64_digits().next().unwrap_or(0)
    };
    let den = to_u64(c.re().denom());
    if den == 0 {
        return None;
    }
    Some(mul_mod(to_u64(c.re().numer()), inv_mod(den)))
}

fn trim_mod(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Sufficient test for `gcd(a, b) = 1` over `Q`: with `lc(a)` a unit mod
/// `p`, a common factor of positive degree survives reduction mod `p`.
fn coprime_mod_p(a: &Uni, b: &Uni) -> bool {
    let Some(mut x) = a.0.iter().map(reduce_mod).collect::<Option<Vec<_>>>() else {
        return false;
    };
    let Some(mut y) = b.0.iter().map(reduce_mod).collect::<Option<Vec<_>>>() else {
        return false;
    };
    if x.last() == Some(&0) {
        return false;
    }
    trim_mod(&mut y);
    while !y.is_empty() {
        if y.len() == 1 {
            return true;
        }
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
            continue;
        }
        let inv = inv_mod(*y.last().unwrap());
        while x.len() >= y.len() {
            let c = mul_mod(*x.last().unwrap(), inv);
            let shift = x.len() - y.len();
            for (j, &yj) in y.iter().enumerate() {
                x[j + shift] = (x[j + shift] + P - mul_mod(c, yj)) % P;
            }
            trim_mod(&mut x);
        }
        std::mem::swap(&mut x, &mut y);
    }
    x.len() <= 1
}

/// Polynomial in the main variable with `Uni` coefficients.
type Rec = Vec<Uni>;

fn to_rec(p: &BivarPoly, swap: bool) -> Rec {
    let (dm, ds) = if swap {
        (p.deg_zeta(), p.deg_z())
    } else {
        (p.deg_z(), p.deg_zeta())
    };
    let mut rows = vec![vec![Scalar::zero(); ds as usize + 1]; dm as usize + 1];
    for (m, c) in p.terms() {
        let (a, b) = if swap { (m.dzeta, m.dz) } else { (m.dz, m.dzeta) };
        rows[a as usize][b as usize] = c.clone();
    }
    rows.into_iter().map(Uni::trimmed).collect()
}

fn from_rec(r: &Rec, swap: bool) -> BivarPoly {
    BivarPoly::from_terms(r.iter().enumerate().flat_map(|(a, u)| {
        u.0.iter().enumerate().map(move |(b, c)| {
            let m = if swap {
                Monomial::new(b as u32, a as u32)
            } else {
                Monomial::new(a as u32, b as u32)
            };
            (m, c.clone())
        })
    }))
}

fn trim_rec(mut r: Rec) -> Rec {
    while r.last().is_some_and(Uni::is_zero) {
        r.pop();
    }
    r
}

fn content(r: &Rec) -> Uni {
    let mut g = Uni::default();
    for c in r {
        if c.is_zero() {
            continue;
        }
        g = if g.is_zero() { c.monic() } else { g.gcd(c) };
        if g.is_constant() {
            return Uni::one();
        }
    }
    g
}

fn primitive(r: &Rec) -> (Uni, Rec) {
    let c = content(r);
    if c.is_constant() {
        return (Uni::one(), r.clone());
    }
    (c.clone(), r.iter().map(|u| u.exact_div(&c)).collect())
}

fn rec_scale(r: &Rec, c: &Uni) -> Rec {
    trim_rec(r.iter().map(|u| u.mul(c)).collect())
}

fn rec_exact_div(r: &Rec, c: &Uni) -> Rec {
    r.iter().map(|u| u.exact_div(c)).collect()
}

fn uni_pow(u: &Uni, k: usize) -> Uni {
    (0..k).fold(Uni::one(), |acc, _| acc.mul(u))
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`.
fn prem(a: &Rec, b: &Rec) -> Rec {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    let mut left = a.len() - b.len() + 1;
    while !r.is_empty() && r.len() - 1 >= db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Rec = r.iter().map(|u| u.mul(lb)).collect();
        for (j, bj) in b.iter().enumerate() {
            next[j + shift] = next[j + shift].sub(&bj.mul(&lr));
        }
        debug_assert!(next[dr].is_zero());
        r = trim_rec(next);
        left -= 1;
    }
    if left > 0 && !r.is_empty() {
        r = rec_scale(&r, &uni_pow(lb, left));
    }
    r
}

/// Subresultant remainder sequence; coefficient growth stays polynomial
/// and only exact divisions in the coefficient ring are needed.
fn rec_gcd(a: &Rec, b: &Rec) -> Rec {
    let (ca, pa) = primitive(a);
    let (cb, pb) = primitive(b);
    let c = ca.gcd(&cb);
    let (mut p, mut q) = if pa.len() >= pb.len() { (pa, pb) } else { (pb, pa) };
    let (mut g, mut h) = (Uni::one(), Uni::one());
    let g = loop {
        if q.len() == 1 {
            break vec![Uni::one()];
        }
        let delta = p.len() - q.len();
        let r = prem(&p, &q);
        if r.is_empty() {
            break q;
        }
        if r.len() == 1 {
            break vec![Uni::one()];
        }
        let next = rec_exact_div(&rec_exact_div(&r, &g), &uni_pow(&h, delta));
        p = std::mem::replace(&mut q, next);
        g = p[p.len() - 1].clone();
        h = if delta == 0 {
            h
        } else {
            uni_pow(&g, delta).exact_div(&uni_pow(&h, delta - 1))
        };
    };
    let (_, g) = primitive(&g);
    g.iter().map(|u| u.mul(&c)).collect()
}

impl Uni {
    fn eval(&self, x: &Scalar) -> Scalar {
        self.0
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
    }
}

/// Proves that `gcd(a, b)` does not involve the main variable of `a`, `b`.
///
/// If `lc(a)(c) != 0` then every common factor keeps its main-variable
/// degree under `secondary = c`, so a trivial gcd of the specializations
/// rules out any such factor.
fn free_of_main(a: &Rec, b: &Rec) -> bool {
    if a.len() <= 1 || b.len() <= 1 {
        return true;
    }
    for c in [0i64, 1, -1, 2, -2, 3] {
        let c = Scalar::int(c);
        if a[a.len() - 1].eval(&c).is_zero() {
            continue;
        }
        let sa = Uni::trimmed(a.iter().map(|u| u.eval(&c)).collect());
        let sb = Uni::trimmed(b.iter().map(|u| u.eval(&c)).collect());
        if sb.is_zero() {
            continue;
        }
        return sa.gcd(&sb).is_constant();
    }
    false
}

/// Newton interpolation through `(xs[k], ys[k])`.
fn interpolate(xs: &[Scalar], ys: &[Scalar]) -> Uni {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for k in (j..n).rev() {
            let d = &xs[k] - &xs[k - j];
            coef[k] = &(&coef[k] - &coef[k - 1]) * &d.inv().expect("distinct nodes");
        }
    }
    let mut out = Uni(vec![coef[n - 1].clone()]);
    for k in (0..n - 1).rev() {
        // out = out * (x - xs[k]) + coef[k]
        out = out.mul(&Uni(vec![-xs[k].clone(), Scalar::one()]));
        out = out.sub(&Uni(vec![-coef[k].clone()]));
    }
    Uni::trimmed(out.0)
}

/// Candidate gcd from univariate gcds at sample values of the secondary
/// variable, interpolated coefficientwise. The caller must verify it.
fn interpolated_gcd(a: &Rec, b: &Rec) -> Option<Rec> {
    let (ca, a) = primitive(a);
    let (cb, b) = primitive(b);
    let cont = ca.gcd(&cb);
    let (la, lb) = (&a[a.len() - 1], &b[b.len() - 1]);
    let gamma = la.gcd(lb);
    let sec_deg = |r: &Rec| r.iter().map(Uni::deg).max().unwrap_or(0);
    let need = gamma.deg() + sec_deg(&a).min(sec_deg(&b)) + 1;
    let (mut xs, mut images): (Vec<Scalar>, Vec<Uni>) = (Vec::new(), Vec::new());
    let mut best = usize::MAX;
    let mut c = 0i64;
    while xs.len() < need {
        if c > 4 * need as i64 + 20 {
            return None;
        }
        let x = Scalar::int(c);
        c = if c > 0 { -c } else { 1 - c };
        if la.eval(&x).is_zero() || lb.eval(&x).is_zero() {
            continue;
        }
        let sa = Uni::trimmed(a.iter().map(|u| u.eval(&x)).collect());
        let sb = Uni::trimmed(b.iter().map(|u| u.eval(&x)).collect());
        let g = sa.gcd(&sb);
        if g.is_constant() {
            return Some(vec![cont]);
        }
        match g.deg().cmp(&best) {
            std::cmp::Ordering::Greater => continue,
            std::cmp::Ordering::Less => {
                best = g.deg();
                xs.clear();
                images.clear();
            }
            std::cmp::Ordering::Equal => {}
        }
        images.push(g.scale(&gamma.eval(&x)));
        xs.push(x);
    }
    let h: Rec = (0..=best)
        .map(|j| {
            let ys: Vec<Scalar> = images.iter().map(|g| g.0[j].clone()).collect();
            interpolate(&xs, &ys)
        })
        .collect();
    Some(rec_scale(&primitive(&trim_rec(h)).1, &cont))
}

fn uni_to_poly(u: &Uni, swap: bool) -> BivarPoly {
    from_rec(&vec![u.clone()], swap)
}

pub(crate) fn gcd(a: &BivarPoly, b: &BivarPoly) -> BivarPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return BivarPoly::one();
    }
    let (ma, ra) = strip_monomial(a);
    let (mb, rb) = strip_monomial(b);
    let mono = Monomial::new(ma.dz.min(mb.dz), ma.dzeta.min(mb.dzeta));
    let core = reduced_gcd(&ra, &rb);
    BivarPoly::monomial(Scalar::one(), mono.dz, mono.dzeta) * core
}

/// Gcd of polynomials that have no monomial factor.
fn reduced_gcd(a: &BivarPoly, b: &BivarPoly) -> BivarPoly {
    if a.is_constant() || b.is_constant() {
        return BivarPoly::one();
    }
    if a.total_degree() >= b.total_degree() {
        if a.exact_div(b).is_some() {
            return b.monic();
        }
    } else if b.exact_div(a).is_some() {
        return a.monic();
    }
    // Main variable: the one in which both inputs actually occur, preferring
    // the smaller degree to keep the remainder sequence short.
    let both_z = a.deg_z() > 0 && b.deg_z() > 0;
    let both_zeta = a.deg_zeta() > 0 && b.deg_zeta() > 0;
    let swap = match (both_z, both_zeta) {
        (true, true) => a.deg_zeta().max(b.deg_zeta()) < a.deg_z().max(b.deg_z()),
        (true, false) => false,
        (false, true) => true,
        (false, false) => {
            // One input is a polynomial in z alone and the other in zeta
            // alone; any common factor would be constant.
            return BivarPoly::one();
        }
    };
    if a.deg_z() == 0 && b.deg_z() == 0 || a.deg_zeta() == 0 && b.deg_zeta() == 0 {
        // univariate in the same variable
        let swap = a.deg_z() == 0 && b.deg_z() == 0;
        let (ua, ub) = (to_rec(a, !swap), to_rec(b, !swap));
        return uni_to_poly(&ua[0].gcd(&ub[0]), !swap).monic();
    }
    let (za, zb) = (to_rec(a, false), to_rec(b, false));
    let (wa, wb) = (to_rec(a, true), to_rec(b, true));
    match (free_of_main(&za, &zb), free_of_main(&wa, &wb)) {
        (true, true) => BivarPoly::one(),
        // the gcd lives in K[zeta]: the gcd of the z-contents
        (true, false) => uni_to_poly(&content(&za).gcd(&content(&zb)), false).monic(),
        (false, true) => uni_to_poly(&content(&wa).gcd(&content(&wb)), true).monic(),
        (false, false) => {
            let (ra, rb) = if swap { (wa, wb) } else { (za, zb) };
            if let Some(g) = interpolated_gcd(&ra, &rb) {
                let g = from_rec(&g, swap);
                if a.exact_div(&g).is_some() && b.exact_div(&g).is_some() {
                    return g.monic();
                }
            }
            from_rec(&rec_gcd(&ra, &rb), swap).monic()
        }
    }
}
