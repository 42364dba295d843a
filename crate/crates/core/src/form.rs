//! Rank, signature and parity of integral symmetric bilinear forms.
//!
//! The signature is computed by exact symmetric congruence diagonalization
//! over the rationals. A nonzero diagonal entry is used as a pivot when one
//! exists; otherwise a nonzero off-diagonal entry `s` at `(i, j)` spans a
//! hyperbolic block `[[0, s], [s, 0]]`, contributing rank 2 and signature 0.
//! Elimination is fraction-free; it first runs on checked `i128` and falls
//! back to arbitrary precision when an intermediate value would overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::int::{narrow, widen, Int};
use crate::matrix::IntMatrix;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FormInvariants {
    pub rank: usize,
    pub signature: i64,
    pub parity: Parity,
}

impl FormInvariants {
    pub fn positive(&self) -> usize {
        (self.rank as i64 + self.signature) as usize / 2
    }

    pub fn negative(&self) -> usize {
        (self.rank as i64 - self.signature) as usize / 2
    }
}

/// Invariants of a symmetric integer matrix.
///
/// Panics if `m` is not square and symmetric.
pub fn form_invariants(m: &IntMatrix) -> FormInvariants {
    assert!(m.is_symmetric(), "form_invariants needs a symmetric matrix");
    let n = m.rows();
    let parity = if (0..n).all(|i| m[(i, i)].is_even()) {
        Parity::Even
    } else {
        Parity::Odd
    };
    let rows = m.to_rows();
    let (pos, neg) = narrow(&rows)
        .and_then(inertia::<i128>)
        .unwrap_or_else(|| inertia::<BigInt>(rows).expect("arbitrary precision"));
    FormInvariants {
        rank: pos + neg,
        signature: pos as i64 - neg as i64,
        parity,
    }
}

/// Counts of positive and negative squares, by fraction-free elimination.
///
/// The working matrix is always `lambda S` for the current Schur complement
/// `S` and a scalar whose sign is tracked in `flipped`. Pivoting on a
/// diagonal entry `d` replaces it by `d A - b b^T = lambda d S'`; pivoting on
/// a hyperbolic pair with off-diagonal entry `s` by
/// `s A - (b c^T + c b^T) = lambda s S'`. Dividing by the content keeps the
/// entries small without changing signs.
fn inertia<T: Int>(mut a: Vec<Vec<T>>) -> Option<(usize, usize)> {
    let mut active: Vec<usize> = (0..a.len()).collect();
    let (mut pos, mut neg) = (0, 0);
    let mut flipped = false;
    while !active.is_empty() {
        if let Some(k) = active.iter().position(|&i| !a[i][i].is_nil()) {
            let p = active.remove(k);
            let d = a[p][p].clone();
            if d.is_neg() != flipped {
                neg += 1;
            } else {
                pos += 1;
            }
            for &i in &active {
                for &j in &active {
                    if j < i {
                        continue;
                    }
                    let t = d.mul(&a[i][j])?.sub(&a[i][p].mul(&a[p][j])?)?;
                    a[j][i] = t.clone();
                    a[i][j] = t;
                }
            }
            flipped ^= d.is_neg();
        } else {
            // all remaining diagonal entries vanish
            let pair = active.iter().enumerate().find_map(|(x, &i)| {
                active[x + 1..]
                    .iter()
                    .find(|&&j| !a[i][j].is_nil())
                    .map(|&j| (i, j))
            });
            let Some((p, q)) = pair else { break };
            pos += 1;
            neg += 1;
            active.retain(|&i| i != p && i != q);
            let s = a[p][q].clone();
            for &i in &active {
                for &j in &active {
                    if j < i {
                        continue;
                    }
                    let u = a[i][p].mul(&a[q][j])?;
                    let v = a[i][q].mul(&a[p][j])?;
                    let t = s.mul(&a[i][j])?.sub(&u.add(&v)?)?;
                    a[j][i] = t.clone();
                    a[i][j] = t;
                }
            }
            flipped ^= s.is_neg();
        }
        let mut g = T::nil();
        for &i in &active {
            for &j in &active {
                g = g.gcd(&a[i][j]);
            }
        }
        if !g.is_nil() && !g.is_unit() {
            for &i in &active {
                for &j in &active {
                    a[i][j] = a[i][j].div_exact(&g);
                }
            }
        }
    }
    Some((pos, neg))
}

/// `B^T M B` for a symmetric form `M` and a family of vectors `B` (as rows).
pub fn restrict(m: &IntMatrix, basis: &[Vec<BigInt>]) -> IntMatrix {
    let k = basis.len();
    let small = narrow(&m.to_rows()).zip(narrow(basis)).and_then(|(ms, bs)| {
        let n = ms.len();
        let mut out = vec![vec![0i128; k]; k];
        let images = bs
            .iter()
            .map(|v| {
                (0..n)
                    .map(|i| {
                        ms[i].iter().zip(v).try_fold(0i128, |acc, (x, y)| acc.checked_add(x.checked_mul(*y)?))
                    })
                    .collect::<Option<Vec<i128>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        for i in 0..k {
            for j in i..k {
                let x = bs[i]
                    .iter()
                    .zip(&images[j])
                    .try_fold(0i128, |acc, (x, y)| acc.checked_add(x.checked_mul(*y)?))?;
                out[i][j] = x;
                out[j][i] = x;
            }
        }
        Some(out)
    });
    if let Some(rows) = small {
        return IntMatrix::from_rows(widen(rows)).unwrap_or_else(|| IntMatrix::zeros(0, 0));
    }
    let images: Vec<Vec<BigInt>> = basis.iter().map(|v| m.mul_vec(v)).collect();
    let mut out = IntMatrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let x: BigInt = basis[i]
                .iter()
                .zip(&images[j])
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .map(|(a, b)| a * b)
                .sum();
            out[(j, i)] = x.clone();
            out[(i, j)] = x;
        }
    }
    out
}
