//! One Schur step on a coefficient sequence.

use crate::algebra::{Field, Ring};
use crate::error::{Error, Result};

/// Minors `d_0..d_m` of the lower Hessenberg Toeplitz matrices `T_m` with
/// first column `(s_1, ..., s_m)` and superdiagonal `s_0`.
///
/// Expanding along the first column gives
/// `d_m = sum_{k=1}^m (-1)^{k-1} s_0^{k-1} s_k d_{m-k}`.
pub fn hessenberg_minors<K: Ring>(seq: &[K], upto: usize) -> Vec<K> {
    let s0_pows = powers(&seq[0], upto);
    let mut d = Vec::with_capacity(upto + 1);
    d.push(K::one());
    for m in 1..=upto {
        d.push(next_minor(seq, &d, &s0_pows, m));
    }
    d
}

pub(crate) fn powers<K: Ring>(x: &K, upto: usize) -> Vec<K> {
    let mut p = Vec::with_capacity(upto + 1);
    p.push(K::one());
    for k in 1..=upto {
        let next = p[k - 1].clone() * x.clone();
        p.push(next);
    }
    p
}

/// `d_m` from `d_0..d_{m-1}`; needs `seq[0..=m]` and `s_0^0..s_0^{m-1}`.
pub(crate) fn next_minor<K: Ring>(seq: &[K], d: &[K], s0_pows: &[K], m: usize) -> K {
    let mut acc = K::zero();
    for k in 1..=m {
        if seq[k].is_zero() || d[m - k].is_zero() {
            continue;
        }
        let term = s0_pows[k - 1].clone() * seq[k].clone() * d[m - k].clone();
        acc = if k % 2 == 1 { acc + term } else { acc - term };
    }
    acc
}

/// The next recursive sequence,
/// `s_j' = (-1)^{j+1} det(T_{j+2}) / s_0^{j+2}` for `j = 0..len-3`.
///
/// For `(s_0, s_1, s_2)` this is `(s_0 s_2 - s_1^2) / s_0^2`, the leading
/// coefficient left after peeling `-s_0 / (X - s_1/s_0 + F_1)` off
/// `F = -sum s_j X^{-(j+1)}`.
pub fn recursive_sequence_step<K: Field>(seq: &[K]) -> Result<Vec<K>> {
    step_at(seq, 1)
}

pub(crate) fn step_at<K: Field>(seq: &[K], depth: usize) -> Result<Vec<K>> {
    if seq.len() < 3 {
        return Err(Error::InsufficientLength {
            needed: 3,
            got: seq.len(),
        });
    }
    if seq[0].is_zero() {
        return Err(Error::LeadingMomentZero { depth });
    }
    let top = seq.len() - 1;
    let d = hessenberg_minors(seq, top);
    let inv = seq[0].inv()?;
    let inv_pows = powers(&inv, top);
    Ok((0..seq.len() - 2)
        .map(|j| {
            let v = d[j + 2].clone() * inv_pows[j + 2].clone();
            if j % 2 == 0 {
                -v
            } else {
                v
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Scalar;

    fn seq(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::int(x)).collect()
    }

    #[test]
    fn two_by_two() {
        assert_eq!(recursive_sequence_step(&seq(&[1, 0, 1])).unwrap(), seq(&[1]));
        assert_eq!(recursive_sequence_step(&seq(&[1, 2, 2])).unwrap(), seq(&[-2]));
    }

    #[test]
    fn vanishing_tail() {
        assert_eq!(
            recursive_sequence_step(&seq(&[1, 0, 0, 0, 0])).unwrap(),
            seq(&[0, 0, 0])
        );
    }

    #[test]
    fn classical_first_entry() {
        // (s0 s2 - s1^2) / s0^2
        let out = recursive_sequence_step(&seq(&[2, 3, 5])).unwrap();
        assert_eq!(out, vec![Scalar::ratio(1, 4)]);
    }

    #[test]
    fn errors() {
        assert_eq!(
            recursive_sequence_step(&seq(&[0, 1, 1])),
            Err(Error::LeadingMomentZero { depth: 1 })
        );
        assert_eq!(
            recursive_sequence_step(&seq(&[1, 1])),
            Err(Error::InsufficientLength { needed: 3, got: 2 })
        );
    }

    #[test]
    fn minors_of_small_matrices() {
        // T_2 = [[s1, s0], [s2, s1]], det = s1^2 - s0 s2
        let s = seq(&[2, 3, 5, 7]);
        let d = hessenberg_minors(&s, 3);
        assert_eq!(d[1], Scalar::int(3));
        assert_eq!(d[2], Scalar::int(9 - 10));
        // T_3 = [[3,2,0],[5,3,2],[7,5,3]]
        assert_eq!(d[3], Scalar::int(3 * (9 - 10) - 2 * (15 - 14)));
    }
}
