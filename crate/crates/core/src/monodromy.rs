//! Homological shadow of the monodromy of a closed surface diagram.
//!
//! The lift `mu~ = tau_{l_c} ... tau_{l_1}` with `l_i = tau_{g_i}(g_{i+1})`
//! fixes `g_1` up to sign, so it acts on `g_1^perp / <g_1>`, which is the
//! first homology of the surface surgered along `g_1`. If the diagram's
//! monodromy is trivial this action is the identity; the converse is not
//! claimed.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::circuit::{ensure_valid, Circuit, Diagram};
use crate::error::{Error, Result};
use crate::homology::{pair, pairing_row, HClass, SpMatrix, TwistWord};
use crate::lattice::{integer_kernel, solve_integer, solve_unimodular};
use crate::matrix::IntMatrix;

fn require_closed(c: &Circuit) -> Result<()> {
    if !c.is_closed() {
        return Err(Error::OpenCircuit);
    }
    ensure_valid(&Diagram::untwisted(c.clone()))
}

/// The axes `l_i = g_(i+1) + <g_i, g_(i+1)> g_i`, cyclically.
fn axes(c: &Circuit) -> Vec<HClass> {
    let n = c.len();
    (0..n)
        .map(|i| {
            let (x, y) = (c.curve(i), c.curve((i + 1) % n));
            y.add_scaled(&pair(x, y), x)
        })
        .collect()
}

/// The lift as a word; `l_1` is applied first.
pub fn mu_tilde_word(c: &Circuit) -> Result<TwistWord> {
    require_closed(c)?;
    let mut w = TwistWord::empty(c.genus());
    for axis in axes(c) {
        w.push_left(axis, 1)?;
    }
    Ok(w)
}

pub fn mu_tilde_matrix(c: &Circuit) -> Result<SpMatrix> {
    Ok(mu_tilde_word(c)?.matrix())
}

pub fn mu_tilde_matrix_of(d: &Diagram) -> Result<SpMatrix> {
    if d.is_twisted() {
        return Err(Error::Twisted);
    }
    mu_tilde_matrix(d.circuit())
}

/// Further lifts obtained from braid relations of adjacent curves:
/// `tau_1^-c (tau_c tau_1) ... (tau_1 tau_2)` and
/// `tau_1^-2c (tau_c tau_1 tau_c) ... (tau_1 tau_2 tau_1)`, each also
/// without the power of `tau_1`, which acts trivially after surgery.
pub fn alternative_lifts(c: &Circuit) -> Result<Vec<TwistWord>> {
    require_closed(c)?;
    let n = c.len();
    let g = c.genus();
    let pairs: Vec<(HClass, HClass)> = (0..n)
        .map(|i| (c.curve(i).clone(), c.curve((i + 1) % n).clone()))
        .collect();
    let mut doubles = TwistWord::empty(g);
    let mut triples = TwistWord::empty(g);
    for (x, y) in &pairs {
        // written tau_x tau_y: tau_y is applied first
        doubles.push_left(y.clone(), 1)?;
        doubles.push_left(x.clone(), 1)?;
        triples.push_left(x.clone(), 1)?;
        triples.push_left(y.clone(), 1)?;
        triples.push_left(x.clone(), 1)?;
    }
    let first = c.curve(0).clone();
    let mut out = vec![doubles.clone(), triples.clone()];
    let mut d = doubles;
    d.push_left(first.clone(), -(n as i64))?;
    let mut t = triples;
    t.push_left(first, -2 * n as i64)?;
    out.push(d);
    out.push(t);
    Ok(out)
}

/// The action of a mapping class fixing `base` up to sign on
/// `base^perp / <base>`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SurgeredAction {
    pub base: HClass,
    pub quotient_rank: usize,
    /// Column `j` holds the coordinates of the image of `basis[j]`.
    pub matrix: IntMatrix,
    pub basis: Vec<HClass>,
}

impl SurgeredAction {
    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// Pairing matrix of the basis, which the action preserves.
    pub fn gram(&self) -> IntMatrix {
        gram(&self.basis)
    }
}

fn gram(basis: &[HClass]) -> IntMatrix {
    let k = basis.len();
    let mut m = IntMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            m[(i, j)] = pair(&basis[i], &basis[j]);
        }
    }
    m
}

/// A symplectic complement of `span(base, y)` for a dual `y`, whose basis
/// also represents `base^perp / <base>`.
struct Quotient {
    base: HClass,
    dual: HClass,
    basis: Vec<HClass>,
    gram: IntMatrix,
}

impl Quotient {
    fn new(base: &HClass) -> Result<Self> {
        if !base.is_primitive() {
            return Err(Error::NotPrimitive(base.to_string()));
        }
        let g = base.genus();
        let row = pairing_row(base);
        let a = IntMatrix::from_rows(vec![row.clone()]).expect("one row");
        let y = solve_integer(&a, &[BigInt::one()]).expect("primitive classes have duals");
        let dual = HClass::new(y)?;
        let system = IntMatrix::from_rows(vec![row, pairing_row(&dual)]).expect("two rows");
        let basis = integer_kernel(&system)
            .into_iter()
            .map(HClass::new)
            .collect::<Result<Vec<_>>>()?;
        debug_assert_eq!(basis.len(), 2 * g - 2);
        let gram = gram(&basis);
        Ok(Quotient {
            base: base.clone(),
            dual,
            basis,
            gram,
        })
    }

    /// Coordinates of the class of `x` in `base^perp / <base>`.
    fn coordinates(&self, x: &HClass) -> Result<Vec<BigInt>> {
        if !pair(&self.base, x).is_zero() {
            return Err(Error::InvariantViolation(format!(
                "{x} does not lie in the orthogonal complement of {}",
                self.base
            )));
        }
        let w = x.add_scaled(&-pair(x, &self.dual), &self.base);
        let rhs: Vec<BigInt> = self.basis.iter().map(|b| pair(b, &w)).collect();
        solve_unimodular(&self.gram, &rhs)
            .ok_or_else(|| Error::InvariantViolation("complement is not unimodular".into()))
    }
}

/// The action of `m` on `base^perp / <base>`. Requires `m base = +-base`.
pub fn quotient_action(base: &HClass, m: &SpMatrix) -> Result<SurgeredAction> {
    let image = m.apply(base)?;
    if !image.eq_up_to_sign(base) {
        return Err(Error::InvariantViolation(format!(
            "matrix does not fix {base} up to sign"
        )));
    }
    let q = Quotient::new(base)?;
    let k = q.basis.len();
    let mut columns = Vec::with_capacity(k);
    for b in &q.basis {
        columns.push(q.coordinates(&m.apply(b)?)?);
    }
    Ok(SurgeredAction {
        base: base.clone(),
        quotient_rank: k,
        matrix: IntMatrix::from_columns(k, &columns),
        basis: q.basis,
    })
}

pub fn surgered_action(c: &Circuit) -> Result<SurgeredAction> {
    quotient_action(c.curve(0), &mu_tilde_matrix(c)?)
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Verdict {
    HomologicallyTrivial,
    ObstructedOnHomology { witness: HClass },
}

impl Verdict {
    pub fn is_obstructed(&self) -> bool {
        matches!(self, Verdict::ObstructedOnHomology { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            Verdict::HomologicallyTrivial => f.write_str(
                "not obstructed on homology (necessary condition for trivial monodromy holds)",
            ),
            Verdict::ObstructedOnHomology { witness } => write!(
                f,
                "obstructed on homology: the surgered action moves {witness}, so the monodromy is not trivial"
            ),
        }
    }
}

pub fn verdict(c: &Circuit) -> Result<Verdict> {
    let action = surgered_action(c)?;
    for (j, b) in action.basis.iter().enumerate() {
        let moved = (0..action.quotient_rank).any(|i| {
            let want = if i == j { BigInt::one() } else { BigInt::zero() };
            action.matrix[(i, j)] != want
        });
        if moved {
            return Ok(Verdict::ObstructedOnHomology { witness: b.clone() });
        }
    }
    Ok(Verdict::HomologicallyTrivial)
}

/// Whether the surgered action preserves the induced pairing: `A^T G A = G`.
pub fn preserves_quotient_pairing(a: &SurgeredAction) -> bool {
    let g = a.gram();
    &(&a.matrix.transpose() * &g) * &a.matrix == g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::random::random_closed_circuit;
    use crate::homology::{apply_word, delta_twist, twist_matrix};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn h(v: &[i64]) -> HClass {
        HClass::from_i64(v).unwrap()
    }

    fn circ(raw: &[&[i64]]) -> Circuit {
        Circuit::from_i64(raw, true).unwrap()
    }

    #[test]
    fn word_examples() {
        let w = mu_tilde_word(&circ(&[&[1, 0], &[0, 1]])).unwrap();
        let axes: Vec<HClass> = w.factors().map(|(x, _)| x.clone()).collect();
        assert_eq!(axes, vec![h(&[1, -1]), h(&[1, 1])]);
        assert_eq!(apply_word(&w, &h(&[1, 0])).unwrap(), h(&[-1, 0]));

        let w = mu_tilde_word(&circ(&[&[1, 0], &[-1, 1], &[0, -1]])).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.applied().next().unwrap().0, h(&[0, 1]));
    }

    #[test]
    fn genus_two_block() {
        let c = circ(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let m = mu_tilde_matrix(&c).unwrap();
        assert_eq!(m.apply(&h(&[0, 0, 1, 0])).unwrap(), h(&[0, 0, 1, 0]));
        assert_eq!(m.apply(&h(&[0, 0, 0, 1])).unwrap(), h(&[0, 0, 0, 1]));
        let a = surgered_action(&c).unwrap();
        assert_eq!(a.quotient_rank, 2);
        assert!(a.is_identity());
        assert_eq!(a.basis, vec![h(&[0, 0, 1, 0]), h(&[0, 0, 0, 1])]);
        assert_eq!(verdict(&c).unwrap(), Verdict::HomologicallyTrivial);
    }

    #[test]
    fn genus_one_is_rank_zero() {
        let c = circ(&[&[1, 0], &[-1, 1], &[0, -1]]);
        let a = surgered_action(&c).unwrap();
        assert_eq!(a.quotient_rank, 0);
        assert_eq!(verdict(&c).unwrap(), Verdict::HomologicallyTrivial);
        assert!(verdict(&c).unwrap().to_string().contains("not obstructed on homology"));
    }

    #[test]
    fn kernel_laws() {
        let a = h(&[1, 0, 0, 0]);
        let x = h(&[0, 1, 1, 0]);
        assert!(quotient_action(&a, &twist_matrix(&a, 3).unwrap()).unwrap().is_identity());
        assert!(quotient_action(&a, &delta_twist(&a, &x).unwrap()).unwrap().is_identity());
        // a twist about a class meeting the complement is not in the kernel
        let t = twist_matrix(&h(&[0, 0, 1, 0]), 1).unwrap();
        assert!(!quotient_action(&a, &t).unwrap().is_identity());
    }

    #[test]
    fn alternative_lifts_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for len in 2..7 {
            let c = random_closed_circuit(&mut rng, 2, len, 2);
            let base = c.curve(0).clone();
            let reference = surgered_action(&c).unwrap();
            for w in alternative_lifts(&c).unwrap() {
                assert_eq!(quotient_action(&base, &w.matrix()).unwrap(), reference);
            }
        }
    }
}
