//! First homology of a closed oriented genus-g surface.
//!
//! Classes are integer vectors `(n_a1, n_b1, ..., n_ag, n_bg)` in a symplectic
//! basis with `<a_i, b_i> = +1`. Mapping classes are represented by their
//! action on homology, an integer symplectic matrix acting on column vectors.
//! Dehn twists act by `x -> x + k<v, x>v`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// A first-homology class of the closed genus-g surface.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HClass {
    coeffs: Vec<BigInt>,
}

impl HClass {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.len() % 2 != 0 {
            return Err(Error::BadLength(coeffs.len()));
        }
        Ok(HClass { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(genus: usize) -> Self {
        assert!(genus > 0);
        HClass {
            coeffs: vec![BigInt::zero(); 2 * genus],
        }
    }

    /// The basis class `a_i` (0-based `i`).
    pub fn a(genus: usize, i: usize) -> Self {
        let mut x = Self::zero(genus);
        x.coeffs[2 * i] = BigInt::one();
        x
    }

    /// The basis class `b_i` (0-based `i`).
    pub fn b(genus: usize, i: usize) -> Self {
        let mut x = Self::zero(genus);
        x.coeffs[2 * i + 1] = BigInt::one();
        x
    }

    pub fn genus(&self) -> usize {
        self.coeffs.len() / 2
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn n_a(&self, i: usize) -> &BigInt {
        &self.coeffs[2 * i]
    }

    pub fn n_b(&self, i: usize) -> &BigInt {
        &self.coeffs[2 * i + 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_primitive(&self) -> bool {
        is_primitive(self)
    }

    pub fn scale(&self, k: &BigInt) -> HClass {
        HClass {
            coeffs: self.coeffs.iter().map(|x| x * k).collect(),
        }
    }

    /// `self + k * other`; both classes must share a genus.
    pub fn add_scaled(&self, k: &BigInt, other: &HClass) -> HClass {
        debug_assert_eq!(self.genus(), other.genus());
        if k.is_zero() {
            return self.clone();
        }
        HClass {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(x, y)| x + k * y)
                .collect(),
        }
    }

    /// Sign-normalized representative: first nonzero coefficient positive.
    pub fn unoriented(&self) -> HClass {
        match self.coeffs.iter().find(|x| !x.is_zero()) {
            Some(x) if x.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Equality of unoriented classes, `self = +-other`.
    pub fn eq_up_to_sign(&self, other: &HClass) -> bool {
        self == other || *self == -other
    }

    fn check_genus(&self, other: &HClass) -> Result<()> {
        if self.genus() != other.genus() {
            return Err(Error::GenusMismatch {
                expected: self.genus(),
                found: other.genus(),
            });
        }
        Ok(())
    }

    fn require_primitive(&self) -> Result<()> {
        if self.is_primitive() {
            Ok(())
        } else {
            Err(Error::NotPrimitive(self.to_string()))
        }
    }
}

impl fmt::Display for HClass {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Neg for &HClass {
    type Output = HClass;
    fn neg(self) -> HClass {
        HClass {
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }
}

impl Neg for HClass {
    type Output = HClass;
    fn neg(self) -> HClass {
        -&self
    }
}

impl Add for &HClass {
    type Output = HClass;
    fn add(self, rhs: &HClass) -> HClass {
        assert_eq!(self.genus(), rhs.genus(), "genus mismatch in class sum");
        HClass {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &HClass {
    type Output = HClass;
    fn sub(self, rhs: &HClass) -> HClass {
        assert_eq!(self.genus(), rhs.genus(), "genus mismatch in class difference");
        HClass {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(x, y)| x - y).collect(),
        }
    }
}

/// The algebraic intersection number `<x, y>`.
pub fn pairing(x: &HClass, y: &HClass) -> Result<BigInt> {
    x.check_genus(y)?;
    Ok(pair(x, y))
}

/// Unchecked pairing for callers that already know the genera agree.
pub(crate) fn pair(x: &HClass, y: &HClass) -> BigInt {
    debug_assert_eq!(x.genus(), y.genus());
    let mut s = BigInt::zero();
    for i in 0..x.genus() {
        s += x.n_a(i) * y.n_b(i) - x.n_b(i) * y.n_a(i);
    }
    s
}

/// Symmetric companion of the pairing, `sum_i n_ai(x) n_bi(y) + n_ai(y) n_bi(x)`.
/// Its parity always agrees with the parity of `<x, y>`.
pub fn symmetric_pairing(x: &HClass, y: &HClass) -> BigInt {
    debug_assert_eq!(x.genus(), y.genus());
    let mut s = BigInt::zero();
    for i in 0..x.genus() {
        s += x.n_a(i) * y.n_b(i) + y.n_a(i) * x.n_b(i);
    }
    s
}

pub fn is_primitive(x: &HClass) -> bool {
    x.coeffs
        .iter()
        .fold(BigInt::zero(), |g, c| g.gcd(c))
        .is_one()
}

/// The block-diagonal pairing matrix `J` with `x^T J y = <x, y>`.
pub fn pairing_matrix(genus: usize) -> IntMatrix {
    let mut j = IntMatrix::zeros(2 * genus, 2 * genus);
    for i in 0..genus {
        j[(2 * i, 2 * i + 1)] = BigInt::one();
        j[(2 * i + 1, 2 * i)] = -BigInt::one();
    }
    j
}

/// A `2g x 2g` integer matrix preserving the intersection pairing.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SpMatrix {
    genus: usize,
    m: IntMatrix,
}

impl SpMatrix {
    /// Wraps a matrix after checking `M^T J M = J`.
    pub fn new(m: IntMatrix) -> Result<Self> {
        if !m.is_square() || m.rows() == 0 || m.rows() % 2 != 0 {
            return Err(Error::BadSwitch(m.rows()));
        }
        let sp = SpMatrix {
            genus: m.rows() / 2,
            m,
        };
        if !sp.is_symplectic() {
            return Err(Error::BadSwitch(sp.m.rows()));
        }
        Ok(sp)
    }

    pub fn identity(genus: usize) -> Self {
        SpMatrix {
            genus,
            m: IntMatrix::identity(2 * genus),
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        self.m.is_identity()
    }

    pub fn is_symplectic(&self) -> bool {
        let j = pairing_matrix(self.genus);
        &(&self.m.transpose() * &j) * &self.m == j
    }

    pub fn apply(&self, x: &HClass) -> Result<HClass> {
        if x.genus() != self.genus {
            return Err(Error::GenusMismatch {
                expected: self.genus,
                found: x.genus(),
            });
        }
        Ok(HClass {
            coeffs: self.m.mul_vec(&x.coeffs),
        })
    }

    /// `self * rhs`, i.e. apply `rhs` first.
    pub fn compose(&self, rhs: &SpMatrix) -> Result<SpMatrix> {
        if self.genus != rhs.genus {
            return Err(Error::GenusMismatch {
                expected: self.genus,
                found: rhs.genus,
            });
        }
        Ok(SpMatrix {
            genus: self.genus,
            m: &self.m * &rhs.m,
        })
    }

    /// Exact inverse `-J M^T J`.
    pub fn inverse(&self) -> SpMatrix {
        let j = pairing_matrix(self.genus);
        SpMatrix {
            genus: self.genus,
            m: (&(&j * &self.m.transpose()) * &j).neg(),
        }
    }

    pub fn pow(&self, e: u32) -> SpMatrix {
        SpMatrix {
            genus: self.genus,
            m: self.m.pow(e),
        }
    }

    pub fn neg(&self) -> SpMatrix {
        SpMatrix {
            genus: self.genus,
            m: self.m.neg(),
        }
    }
}

impl Mul for &SpMatrix {
    type Output = SpMatrix;
    fn mul(self, rhs: &SpMatrix) -> SpMatrix {
        self.compose(rhs).expect("genus mismatch in symplectic product")
    }
}

impl fmt::Display for SpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        self.m.fmt(f)
    }
}

/// Matrix of the `k`-th power of the Dehn twist about a primitive class `v`.
pub fn twist_matrix(v: &HClass, k: i64) -> Result<SpMatrix> {
    v.require_primitive()?;
    let g = v.genus();
    let n = 2 * g;
    // x -> x + k <v,x> v, with <v,x> = w . x
    let w = pairing_row(v);
    let k = BigInt::from(k);
    let mut m = IntMatrix::identity(n);
    for r in 0..n {
        let kv = &k * &v.coeffs[r];
        if kv.is_zero() {
            continue;
        }
        for c in 0..n {
            if !w[c].is_zero() {
                m[(r, c)] += &kv * &w[c];
            }
        }
    }
    Ok(SpMatrix { genus: g, m })
}

/// Coefficients `w` with `<v, x> = w . x`.
pub(crate) fn pairing_row(v: &HClass) -> Vec<BigInt> {
    let mut w = vec![BigInt::zero(); v.coeffs.len()];
    for i in 0..v.genus() {
        w[2 * i] = -v.n_b(i);
        w[2 * i + 1] = v.n_a(i).clone();
    }
    w
}

/// The Picard-Lefschetz image `x + k<v, x>v` computed without a matrix.
pub fn twist_class(v: &HClass, k: i64, x: &HClass) -> Result<HClass> {
    v.require_primitive()?;
    v.check_genus(x)?;
    Ok(x.add_scaled(&(BigInt::from(k) * pair(v, x)), v))
}

/// `Delta_{a,b} = (T_a T_b)^3` for algebraically dual `a`, `b`.
pub fn delta_twist(a: &HClass, b: &HClass) -> Result<SpMatrix> {
    let p = pairing(a, b)?;
    if p.abs() != BigInt::one() {
        return Err(Error::NotDual {
            index: 0,
            next: 1,
            pairing: p,
        });
    }
    let ab = &twist_matrix(a, 1)? * &twist_matrix(b, 1)?;
    Ok(ab.pow(3))
}

/// A word in Dehn-twist powers, read as a composition: the last factor is
/// applied first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwistWord {
    genus: usize,
    factors: Vec<(HClass, i64)>,
}

impl TwistWord {
    pub fn empty(genus: usize) -> Self {
        TwistWord {
            genus,
            factors: Vec::new(),
        }
    }

    pub fn new(genus: usize, factors: Vec<(HClass, i64)>) -> Result<Self> {
        let mut w = Self::empty(genus);
        for (axis, e) in factors {
            w.push_left(axis, e)?;
        }
        Ok(w)
    }

    /// Appends a factor on the left, so it is applied after everything
    /// already in the word.
    pub fn push_left(&mut self, axis: HClass, exponent: i64) -> Result<()> {
        if axis.genus() != self.genus {
            return Err(Error::GenusMismatch {
                expected: self.genus,
                found: axis.genus(),
            });
        }
        axis.require_primitive()?;
        if exponent == 0 {
            return Err(Error::Invalid("twist exponent must be nonzero".into()));
        }
        self.factors.push((axis, exponent));
        Ok(())
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factors in written order, leftmost first.
    pub fn factors(&self) -> impl DoubleEndedIterator<Item = &(HClass, i64)> {
        self.factors.iter().rev()
    }

    /// Factors in application order, rightmost first.
    pub fn applied(&self) -> impl DoubleEndedIterator<Item = &(HClass, i64)> {
        self.factors.iter()
    }

    pub fn matrix(&self) -> SpMatrix {
        self.factors.iter().fold(SpMatrix::identity(self.genus), |acc, (v, k)| {
            &twist_matrix(v, *k).expect("axes are primitive") * &acc
        })
    }
}

/// Evaluates a twist word on a class, rightmost factor first.
pub fn apply_word(w: &TwistWord, x: &HClass) -> Result<HClass> {
    if w.genus != x.genus() {
        return Err(Error::GenusMismatch {
            expected: w.genus,
            found: x.genus(),
        });
    }
    w.factors
        .iter()
        .try_fold(x.clone(), |acc, (v, k)| twist_class(v, *k, &acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[i64]) -> HClass {
        HClass::from_i64(v).unwrap()
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing(&c(&[1, 0]), &c(&[0, 1])).unwrap(), BigInt::one());
        assert!(pairing(&c(&[1, 0, 0, 0]), &c(&[0, 0, 0, 1])).unwrap().is_zero());
        assert_eq!(pairing(&c(&[1, -1]), &c(&[0, 1])).unwrap(), BigInt::one());
    }

    #[test]
    fn pairing_genus_mismatch() {
        assert!(matches!(
            pairing(&c(&[1, 0]), &c(&[1, 0, 0, 0])),
            Err(Error::GenusMismatch { .. })
        ));
    }

    #[test]
    fn twist_examples() {
        let t = twist_matrix(&c(&[0, 1]), 1).unwrap();
        assert_eq!(t.apply(&c(&[1, 0])).unwrap(), c(&[1, -1]));
        assert!(twist_matrix(&c(&[1, 0]), 0).unwrap().is_identity());
        let t = twist_matrix(&c(&[1, 0]), 1).unwrap();
        assert_eq!(t.apply(&c(&[0, 1])).unwrap(), c(&[1, 1]));
    }

    #[test]
    fn twist_rejects_imprimitive_axis() {
        assert!(twist_matrix(&c(&[2, 0]), 1).is_err());
        assert!(twist_matrix(&c(&[0, 0]), 1).is_err());
    }

    #[test]
    fn twist_sign_invariant() {
        let v = c(&[2, 3, -1, 1]);
        assert_eq!(twist_matrix(&v, 3).unwrap(), twist_matrix(&-&v, 3).unwrap());
    }

    #[test]
    fn word_examples() {
        let a = c(&[1, 0]);
        let b = c(&[0, 1]);
        let w = TwistWord::new(1, vec![(a.clone(), 1)]).unwrap();
        assert_eq!(apply_word(&w, &b).unwrap(), c(&[1, 1]));
        assert_eq!(apply_word(&TwistWord::empty(1), &b).unwrap(), b);
        // written as T_{a-b} o T_{a+b}; a+b is applied first
        let mut w = TwistWord::empty(1);
        w.push_left(c(&[1, 1]), 1).unwrap();
        w.push_left(c(&[1, -1]), 1).unwrap();
        assert_eq!(apply_word(&w, &a).unwrap(), c(&[-1, 0]));
        assert_eq!(w.matrix().apply(&a).unwrap(), c(&[-1, 0]));
        assert_eq!(w.factors().next().unwrap().0, c(&[1, -1]));
    }

    #[test]
    fn delta_examples() {
        let d = delta_twist(&c(&[1, 0]), &c(&[0, 1])).unwrap();
        assert_eq!(d, SpMatrix::identity(1).neg());
        let (a1, b1, a2) = (HClass::a(2, 0), HClass::b(2, 0), HClass::a(2, 1));
        let d = delta_twist(&a1, &b1).unwrap();
        assert_eq!(d.apply(&a2).unwrap(), a2);
        assert_eq!(d.apply(&a1).unwrap(), -&a1);
        assert!(delta_twist(&a1, &a2).is_err());
    }

    #[test]
    fn primitivity() {
        assert!(!c(&[2, 4]).is_primitive());
        assert!(c(&[1, 0]).is_primitive());
        assert!(c(&[3, 5]).is_primitive());
        assert!(!c(&[0, 0]).is_primitive());
    }

    #[test]
    fn inverse_is_exact() {
        let t = &twist_matrix(&c(&[1, 2, 0, 1]), 2).unwrap()
            * &twist_matrix(&c(&[0, 1, 1, 1]), -3).unwrap();
        assert!((&t * &t.inverse()).is_identity());
    }

    #[test]
    fn new_rejects_non_symplectic() {
        let m = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 1]]).unwrap();
        assert!(SpMatrix::new(m).is_err());
    }
}
