//! Handle data of the total space over the disk.
//!
//! The standard handle decomposition has one 0-handle, `2g` 1-handles for the
//! surface, a 0-framed 2-handle for the fiber and one 2-handle per fold arc,
//! attached along `g_i` at angle `theta_i`. Angles are represented by index
//! order only. For a closed circuit a last 2-handle along a meridian of the
//! fiber handle closes off a section.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::circuit::{ensure_valid, validate, Circuit, Diagram, Exactness};
use crate::error::{Error, Result};
use crate::form::{form_invariants, restrict, FormInvariants};
use crate::homology::{pair, symmetric_pairing, twist_class, HClass};
use crate::lattice::integer_kernel;
use crate::matrix::IntMatrix;

/// `fr(g) = sum_i n_ai(g) n_bi(g)`.
pub fn fiber_framing(g: &HClass) -> Result<BigInt> {
    if g.is_zero() {
        return Err(Error::NotPrimitive(g.to_string()));
    }
    Ok((0..g.genus()).map(|i| g.n_a(i) * g.n_b(i)).sum())
}

/// Linking number of the fold handles along `x` at position `i` and `y` at
/// position `j`.
pub fn linking(x: &HClass, i: usize, y: &HClass, j: usize) -> Result<BigInt> {
    if i == j {
        return Err(Error::SamePosition(i));
    }
    if x.genus() != y.genus() {
        return Err(Error::GenusMismatch {
            expected: x.genus(),
            found: y.genus(),
        });
    }
    let p = pair(x, y);
    let signed = if i > j { p } else { -p };
    let twice = signed + symmetric_pairing(x, y);
    debug_assert!(twice.is_even());
    Ok(twice / 2)
}

/// Framings on the diagonal, linking numbers off it, in angle order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinkingMatrix {
    matrix: IntMatrix,
}

impl LinkingMatrix {
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    pub fn invariants(&self) -> FormInvariants {
        form_invariants(&self.matrix)
    }
}

impl fmt::Display for LinkingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        self.matrix.fmt(f)
    }
}

fn require_valid(c: &Circuit) -> Result<()> {
    ensure_valid(&Diagram::untwisted(c.clone()))
}

/// Needs primitive, pairwise dual curves; the orientation convention is
/// not required, so sign changes of single curves can be compared.
pub fn linking_matrix(c: &Circuit) -> Result<LinkingMatrix> {
    if let Some(f) = validate(&Diagram::untwisted(c.clone())).failures.first() {
        return Err(Error::Invalid(f.to_string()));
    }
    let n = c.len();
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = fiber_framing(c.curve(i))?;
        for j in i + 1..n {
            let lk = linking(c.curve(i), i, c.curve(j), j)?;
            m[(j, i)] = lk.clone();
            m[(i, j)] = lk;
        }
    }
    Ok(LinkingMatrix { matrix: m })
}

/// The relations `sum x_i g_i = 0` among the fold curves, as an integer
/// basis; these are the fold-handle combinations that carry second homology.
pub fn homology_relations(c: &Circuit) -> Vec<Vec<BigInt>> {
    let columns: Vec<Vec<BigInt>> = c.curves().iter().map(|x| x.coeffs().to_vec()).collect();
    integer_kernel(&IntMatrix::from_columns(2 * c.genus(), &columns))
}

/// The linking matrix restricted to [`homology_relations`].
///
/// Its signature is the signature of the total space; the full linking
/// matrix also pairs handles that run over the 1-handles and depends on
/// the choice of symplectic basis.
pub fn intersection_form(c: &Circuit) -> Result<IntMatrix> {
    let l = linking_matrix(c)?;
    Ok(restrict(l.matrix(), &homology_relations(c)))
}

/// `(chi(Z), chi(X))`: `2 - 2g + c`, and `6 - 4g + c` for a closed circuit.
pub fn euler_characteristics(c: &Circuit) -> (i64, Option<i64>) {
    let (g, n) = (c.genus() as i64, c.len() as i64);
    (2 - 2 * g + n, c.is_closed().then_some(6 - 4 * g + n))
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FoldHandle {
    pub class: HClass,
    pub framing: BigInt,
    /// 0-based angle order.
    pub position: usize,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct KirbyData {
    pub genus: usize,
    /// Dotted circles `a1, b1, ..., ag, bg`.
    pub one_handles: Vec<String>,
    pub fiber_framing: i64,
    pub fold_handles: Vec<FoldHandle>,
    /// Framing of the meridian of the fiber handle closing off a section.
    pub last_handle: Option<i64>,
    pub linking: LinkingMatrix,
    pub exactness: Exactness,
}

impl KirbyData {
    /// Number of handles of each index 0, 1, 2.
    pub fn handle_counts(&self) -> [usize; 3] {
        let twos = 1 + self.fold_handles.len() + usize::from(self.last_handle.is_some());
        [1, self.one_handles.len(), twos]
    }
}

pub fn emit_kirby(c: &Circuit, section: Option<i64>) -> Result<KirbyData> {
    require_valid(c)?;
    if section.is_some() && !c.is_closed() {
        return Err(Error::OpenCircuit);
    }
    let g = c.genus();
    let one_handles = (1..=g).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect();
    let fold_handles = c
        .curves()
        .iter()
        .enumerate()
        .map(|(i, x)| {
            Ok(FoldHandle {
                class: x.clone(),
                framing: fiber_framing(x)?,
                position: i,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(KirbyData {
        genus: g,
        one_handles,
        fiber_framing: 0,
        fold_handles,
        last_handle: section,
        linking: linking_matrix(c)?,
        exactness: c.exactness(),
    })
}

impl fmt::Display for KirbyData {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        writeln!(f, "1-handles (dotted): {}", self.one_handles.join(" "))?;
        writeln!(f, "fiber 2-handle: framing {}", self.fiber_framing)?;
        for h in &self.fold_handles {
            writeln!(
                f,
                "fold 2-handle {}: class {}, framing {}",
                h.position + 1,
                h.class,
                h.framing
            )?;
        }
        if let Some(k) = self.last_handle {
            writeln!(f, "last 2-handle: {k}-framed meridian of the fiber handle")?;
        }
        write!(f, "linking matrix:\n{}", self.linking)
    }
}

/// Vanishing cycles of the broken Lefschetz fibration obtained by unsinking
/// all cusps: `l_i = tau_{g_i}(g_{i+1})` with framing -1 and the round cycle
/// `g_1` with framing 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BlfData {
    pub lefschetz_cycles: Vec<HClass>,
    pub round_cycle: HClass,
}

impl BlfData {
    pub const LEFSCHETZ_FRAMING: i64 = -1;
    pub const ROUND_FRAMING: i64 = 0;

    /// `l_i - <g_i, g_(i+1)> g_i`, the homology class left after sliding the
    /// Lefschetz handle off the fold handle along `g_i`. Equals `g_(i+1)`,
    /// and for `i = c` the round cycle.
    pub fn slid(&self, c: &Circuit) -> Vec<HClass> {
        let n = c.len();
        (0..n)
            .map(|i| {
                let (x, y) = (c.curve(i), c.curve((i + 1) % n));
                self.lefschetz_cycles[i].add_scaled(&-pair(x, y), x)
            })
            .collect()
    }
}

pub fn to_blf(c: &Circuit) -> Result<BlfData> {
    if !c.is_closed() {
        return Err(Error::OpenCircuit);
    }
    require_valid(c)?;
    let n = c.len();
    let lefschetz_cycles = (0..n)
        .map(|i| twist_class(c.curve(i), 1, c.curve((i + 1) % n)))
        .collect::<Result<Vec<_>>>()?;
    Ok(BlfData {
        lefschetz_cycles,
        round_cycle: c.curve(0).clone(),
    })
}

/// Sign of the unit `k` with `y = k xi - x` in an oriented triple, or
/// `None` if the middle class is not `+-(x + y)`.
pub fn blowup_sign(x: &HClass, xi: &HClass, y: &HClass) -> Option<i64> {
    let k = pair(x, y);
    if k.abs() == BigInt::one() && (x + y) == xi.scale(&k) {
        Some(if k.is_positive() { 1 } else { -1 })
    } else {
        None
    }
}

/// Fiber framing of the middle class of an oriented blow-up triple
/// `(x, xi, y)`, measured in a symplectic basis in which `x` is `a` and
/// `y` is `+-b`. This is the framing of the middle fold handle in the
/// standard picture of the pattern.
pub fn adapted_framing(x: &HClass, xi: &HClass, y: &HClass) -> Option<BigInt> {
    blowup_sign(x, xi, y).map(BigInt::from)
}
