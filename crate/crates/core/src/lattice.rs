//! Integer lattice utilities: Hermite normal form, integer kernels and
//! integer solutions of small linear systems.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::int::{narrow, widen, Int};
use crate::matrix::IntMatrix;

/// Row-style Hermite normal form, pivoting only in the first `pivot_cols`
/// columns but applying every row operation to the full rows.
///
/// Pivots are positive and entries above a pivot lie in `[0, pivot)`.
/// Returns the rank (number of pivot rows), or `None` on overflow.
fn hnf_in_place<T: Int>(m: &mut [Vec<T>], pivot_cols: usize) -> Option<usize> {
    let rows = m.len();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows {
            break;
        }
        for i in r + 1..rows {
            if m[i][c].is_nil() {
                continue;
            }
            let (a, b) = (m[r][c].clone(), m[i][c].clone());
            let (g, x, y) = a.ext_gcd(&b);
            let (ag, bg) = (a.div_exact(&g), b.div_exact(&g));
            let (top, rest) = m.split_at_mut(i);
            let (pr, pi) = (&mut top[r], &mut rest[0]);
            for (u, v) in pr.iter_mut().zip(pi.iter_mut()) {
                let nu = x.mul(u)?.add(&y.mul(v)?)?;
                let nv = ag.mul(v)?.sub(&bg.mul(u)?)?;
                *u = nu;
                *v = nv;
            }
        }
        if m[r][c].is_nil() {
            continue;
        }
        if m[r][c].is_neg() {
            for u in m[r].iter_mut() {
                *u = u.neg()?;
            }
        }
        let p = m[r][c].clone();
        let (top, rest) = m.split_at_mut(r);
        let pr = &rest[0];
        for row in top.iter_mut() {
            let q = row[c].div_floor(&p);
            if q.is_nil() {
                continue;
            }
            for (u, v) in row.iter_mut().zip(pr) {
                *u = u.sub(&q.mul(v)?)?;
            }
        }
        r += 1;
    }
    Some(r)
}

/// Runs `f` on a fixed-width copy when the entries are small, falling back
/// to arbitrary precision on overflow.
fn with_fast_path<R>(
    rows: Vec<Vec<BigInt>>,
    small: impl FnOnce(Vec<Vec<i128>>) -> Option<R>,
    big: impl FnOnce(Vec<Vec<BigInt>>) -> R,
) -> R {
    if let Some(r) = narrow(&rows).and_then(small) {
        return r;
    }
    big(rows)
}

fn hnf_rows(rows: Vec<Vec<BigInt>>, pivot_cols: usize) -> (Vec<Vec<BigInt>>, usize) {
    with_fast_path(
        rows,
        |mut m| {
            let rank = hnf_in_place(&mut m, pivot_cols)?;
            Some((widen(m), rank))
        },
        |mut m| {
            let rank = hnf_in_place(&mut m, pivot_cols).expect("arbitrary precision");
            (m, rank)
        },
    )
}

/// Hermite normal form of the row lattice of `m`, zero rows dropped.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let (rows, rank) = hnf_rows(m.to_rows(), m.cols());
    IntMatrix::from_rows(rows.into_iter().take(rank).collect())
        .filter(|h| h.rows() > 0)
        .unwrap_or_else(|| IntMatrix::zeros(0, m.cols()))
}

/// A basis of `{x in Z^n : A x = 0}`, returned in Hermite normal form
/// (one basis vector per entry).
pub fn integer_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let (m, n) = (a.rows(), a.cols());
    let mut aug = vec![vec![BigInt::zero(); m + n]; n];
    for (i, row) in aug.iter_mut().enumerate() {
        for j in 0..m {
            row[j] = a[(j, i)].clone();
        }
        row[m + i] = BigInt::one();
    }
    let (aug, rank) = hnf_rows(aug, m);
    let basis: Vec<Vec<BigInt>> = aug[rank..].iter().map(|r| r[m..].to_vec()).collect();
    if basis.is_empty() {
        return basis;
    }
    let k = basis.len();
    let (h, _) = hnf_rows(basis, n);
    h.into_iter().take(k).collect()
}

/// Some integer solution of `A x = b`, if one exists.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let (m, n) = (a.rows(), a.cols());
    assert_eq!(b.len(), m);
    // kernel of [-b | A] in Z^(1+n); the first coordinate ranges over a
    // subgroup dZ, and the system is solvable iff d = 1
    let mut ext = IntMatrix::zeros(m, n + 1);
    for i in 0..m {
        ext[(i, 0)] = -&b[i];
        for j in 0..n {
            ext[(i, j + 1)] = a[(i, j)].clone();
        }
    }
    let kernel = integer_kernel(&ext);
    let first = kernel.first()?;
    if first[0].is_one() {
        Some(first[1..].to_vec())
    } else {
        None
    }
}

/// Solves `A x = b` over the rationals for square invertible `A`, returning
/// the solution only if it is integral.
pub fn solve_unimodular(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = a.rows();
    assert!(a.is_square() && b.len() == n);
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = a
                .row(i)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            row.push(BigRational::from_integer(b[i].clone()));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=n {
                    let t = &f * &m[c][j];
                    m[i][j] -= t;
                }
            }
        }
    }
    m.into_iter()
        .map(|row| {
            let x = &row[n];
            x.is_integer().then(|| x.to_integer())
        })
        .collect()
}
