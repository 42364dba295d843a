//! Random classes, symplectic matrices and circuits, for sampling tests.

use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;

use super::{normalize, Circuit, Diagram};
use crate::homology::{pairing_row, twist_matrix, HClass, SpMatrix};
use crate::lattice::{integer_kernel, solve_integer};
use crate::matrix::IntMatrix;
use crate::subst::{apply_blowup, apply_stabilization};

/// A primitive class with coefficients in `[-bound, bound]`.
pub fn random_class<R: Rng + ?Sized>(rng: &mut R, genus: usize, bound: i64) -> HClass {
    loop {
        let v: Vec<i64> = (0..2 * genus).map(|_| rng.gen_range(-bound..=bound)).collect();
        let x = HClass::from_i64(&v).expect("even length");
        if x.is_primitive() {
            return x;
        }
    }
}

fn combine<R: Rng + ?Sized>(rng: &mut R, base: Vec<BigInt>, kernel: &[Vec<BigInt>], bound: i64) -> HClass {
    let mut v = base;
    for k in kernel {
        let t = BigInt::from(rng.gen_range(-bound..=bound));
        for (x, y) in v.iter_mut().zip(k) {
            *x += &t * y;
        }
    }
    HClass::new(v).expect("even length")
}

/// Some `y` with `<x, y> = 1`, perturbed by small multiples of a basis of
/// `x^perp`.
pub fn random_dual<R: Rng + ?Sized>(rng: &mut R, x: &HClass, bound: i64) -> HClass {
    let a = IntMatrix::from_rows(vec![pairing_row(x)]).expect("one row");
    let y = solve_integer(&a, &[BigInt::one()]).expect("primitive classes have duals");
    combine(rng, y, &integer_kernel(&a), bound)
}

/// A product of `twists` random Dehn twists.
pub fn random_symplectic<R: Rng + ?Sized>(rng: &mut R, genus: usize, twists: usize) -> SpMatrix {
    let mut m = SpMatrix::identity(genus);
    for _ in 0..twists {
        let v = random_class(rng, genus, 1);
        let k = if rng.gen_bool(0.5) { 1 } else { -1 };
        m = &twist_matrix(&v, k).expect("primitive") * &m;
    }
    m
}

/// An open circuit of the given length.
pub fn random_open_circuit<R: Rng + ?Sized>(
    rng: &mut R,
    genus: usize,
    len: usize,
    bound: i64,
) -> Circuit {
    let mut curves = vec![random_class(rng, genus, bound)];
    while curves.len() < len {
        let y = random_dual(rng, curves.last().unwrap(), 1);
        curves.push(y);
    }
    normalize(curves, false).expect("consecutive duals")
}

/// A closed circuit of the given length (at least 2).
///
/// Tries to close a random open circuit by solving for its last class; if
/// that fails repeatedly it grows a short closed circuit by random
/// substitutions and moves it by a random symplectic matrix.
pub fn random_closed_circuit<R: Rng + ?Sized>(
    rng: &mut R,
    genus: usize,
    len: usize,
    bound: i64,
) -> Circuit {
    assert!(len >= 2);
    if len == 2 {
        let x = random_class(rng, genus, bound);
        let y = random_dual(rng, &x, 1);
        return normalize(vec![x, y], true).expect("dual pair");
    }
    for _ in 0..32 {
        let open = random_open_circuit(rng, genus, len - 1, bound);
        let (first, last) = (open.curve(0), open.curves().last().unwrap());
        let eps = if rng.gen_bool(0.5) { 1 } else { -1 };
        // <last, x> = 1 and <x, first> = eps
        let a = IntMatrix::from_rows(vec![
            pairing_row(last),
            pairing_row(first).into_iter().map(|t| -t).collect(),
        ])
        .expect("two rows");
        let Some(x) = solve_integer(&a, &[BigInt::one(), BigInt::from(eps)]) else {
            continue;
        };
        let x = combine(rng, x, &integer_kernel(&a), 1);
        if !x.is_primitive() {
            continue;
        }
        let mut curves = open.curves().to_vec();
        curves.push(x);
        if let Ok(c) = normalize(curves, true) {
            return c;
        }
    }
    grown_closed_circuit(rng, genus, len)
}

fn grown_closed_circuit<R: Rng + ?Sized>(rng: &mut R, genus: usize, len: usize) -> Circuit {
    let x = random_class(rng, genus, 1);
    let y = random_dual(rng, &x, 1);
    let mut d = Diagram::untwisted(normalize(vec![x, y], true).expect("dual pair"));
    while d.len() < len {
        let pos = rng.gen_range(0..d.len());
        d = if d.len() + 2 <= len && rng.gen_bool(0.5) {
            apply_stabilization(&d, pos, rng.gen_range(-2..=2))
        } else {
            apply_blowup(&d, pos, if rng.gen_bool(0.5) { 1 } else { -1 })
        }
        .expect("substitutions preserve the circuit axioms");
    }
    let m = random_symplectic(rng, genus, 4);
    let moved = d
        .circuit()
        .curves()
        .iter()
        .map(|x| m.apply(x).expect("same genus"))
        .collect();
    normalize(moved, true).expect("symplectic maps preserve circuits")
}
