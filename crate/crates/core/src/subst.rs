//! Blow-up, sum-stabilization and Hayano surgery substitutions.
//!
//! Positions are 0-based and cyclic. A pattern at position `i` starts at
//! `g_i`; when it runs past `g_c` the following classes are read in the frame
//! of `g_c`, i.e. `g_1` is replaced by `mu^-1 g_1` for a twisted diagram.
//!
//! In an oriented window `(x, xi, y)` with `<x, xi> = <xi, y> = 1` one has
//! `y = k xi - x` exactly when `xi` is determined by its neighbours, and then
//! `k = <x, y>`. A blow-up is `|k| = 1`; the inserted curve is
//! `tau_y^e(x)` with `e = -k`, and the summand is `CP2` for `k = 1`,
//! `-CP2` for `k = -1`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::circuit::{ensure_valid, switch, Diagram, Exactness};
use crate::error::{Error, Result};
use crate::genus1::SumForm;
use crate::homology::{pair, twist_class, HClass};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Summand {
    /// Complex projective plane.
    Cp2,
    /// Complex projective plane with the opposite orientation.
    Cp2Bar,
    /// The trivial sphere bundle `S2 x S2`.
    S2xS2,
    /// The twisted sphere bundle, diffeomorphic to `CP2 # -CP2`.
    Cp2SumCp2Bar,
}

impl Summand {
    /// The summand of the sphere bundle with Hopf-link framing `k`.
    pub fn sphere_bundle(k: &BigInt) -> Summand {
        if k.is_even() {
            Summand::S2xS2
        } else {
            Summand::Cp2SumCp2Bar
        }
    }

    pub fn delta(self) -> SumForm {
        let mut s = SumForm::default();
        match self {
            Summand::Cp2 => s.m = 1,
            Summand::Cp2Bar => s.n = 1,
            Summand::S2xS2 => s.l = 1,
            Summand::Cp2SumCp2Bar => {
                s.m = 1;
                s.n = 1;
            }
        }
        s
    }

    pub fn name(self) -> &'static str {
        match self {
            Summand::Cp2 => "CP2",
            Summand::Cp2Bar => "CP2-bar",
            Summand::S2xS2 => "S2xS2",
            Summand::Cp2SumCp2Bar => "CP2#CP2-bar",
        }
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum DetectionKind {
    /// `(x, tau_y^e(x), y)`.
    BlowUp { exponent: i8, summand: Summand },
    /// `(a, b, tau_b^k(a), b)`.
    Stabilization { k: BigInt, summand: Summand },
    /// `(c, tau_c^k(d), c)`, reported with `k = 0` and `d` the middle class.
    HayanoPattern { dual: HClass, k: BigInt },
}

impl DetectionKind {
    /// Number of curves the pattern spans.
    pub fn span(&self) -> usize {
        match self {
            DetectionKind::BlowUp { .. } | DetectionKind::HayanoPattern { .. } => 3,
            DetectionKind::Stabilization { .. } => 4,
        }
    }

    pub fn summand(&self) -> Option<Summand> {
        match self {
            DetectionKind::BlowUp { summand, .. } | DetectionKind::Stabilization { summand, .. } => {
                Some(*summand)
            }
            DetectionKind::HayanoPattern { .. } => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Detection {
    /// 0-based cyclic index of the pattern's first curve.
    pub position: usize,
    pub kind: DetectionKind,
    pub exactness: Exactness,
}

impl fmt::Display for Detection {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        let pos = self.position + 1;
        match &self.kind {
            DetectionKind::BlowUp { exponent, summand } => {
                write!(f, "blow-up at {pos} (exponent {exponent:+}, {summand})")
            }
            DetectionKind::Stabilization { k, summand } => {
                write!(f, "stabilization at {pos} (k = {k}, {summand})")
            }
            DetectionKind::HayanoPattern { dual, k } => {
                write!(f, "surgery pattern at {pos} (dual {dual}, k = {k})")
            }
        }
    }
}

/// `len` consecutive classes starting at `start`, read in the frame of the
/// first one, with orientations renormalized along the window.
fn window(d: &Diagram, start: usize, len: usize) -> Result<Vec<HClass>> {
    let curves = d.circuit().curves();
    let c = curves.len();
    let inverse = d.switch_matrix().map(|m| m.inverse());
    let mut out: Vec<HClass> = Vec::with_capacity(len);
    for t in 0..len {
        let idx = start + t;
        let mut x = curves[idx % c].clone();
        for _ in 0..idx / c {
            if let Some(mu_inv) = &inverse {
                x = mu_inv.apply(&x)?;
            }
        }
        if let Some(prev) = out.last() {
            if pair(prev, &x).is_negative() {
                x = -x;
            }
        }
        out.push(x);
    }
    Ok(out)
}

/// The class following `g_pos`, in the frame of `g_pos`.
fn successor(d: &Diagram, pos: usize) -> Result<HClass> {
    Ok(window(d, pos, 2)?.pop().unwrap())
}

fn require_closed_valid(d: &Diagram, pos: usize) -> Result<()> {
    if !d.is_closed() {
        return Err(Error::OpenCircuit);
    }
    ensure_valid(d)?;
    if pos >= d.len() {
        return Err(Error::InvalidPosition { pos, len: d.len() });
    }
    Ok(())
}

fn rebuild(d: &Diagram, curves: Vec<HClass>) -> Result<Diagram> {
    Diagram::normalize(curves, true, d.switch_matrix().cloned())
}

/// Inserts `new` right after `g_pos`.
fn insert_after(d: &Diagram, pos: usize, new: Vec<HClass>) -> Result<Diagram> {
    let mut curves = d.circuit().curves().to_vec();
    let at = pos + 1;
    curves.splice(at..at, new);
    rebuild(d, curves)
}

/// Inserts `tau_{g_pos+1}^e(g_pos)` between `g_pos` and its successor.
pub fn apply_blowup(d: &Diagram, pos: usize, e: i8) -> Result<Diagram> {
    require_closed_valid(d, pos)?;
    if e.abs() != 1 {
        return Err(Error::Invalid(format!("blow-up exponent must be +-1, got {e}")));
    }
    let a = d.circuit().curve(pos).clone();
    let b = successor(d, pos)?;
    let xi = twist_class(&b, e as i64, &a)?;
    insert_after(d, pos, vec![xi])
}

/// Replaces the pair `(a, b) = (g_pos, g_pos+1)` by `(a, b, tau_b^k(a), b)`.
pub fn apply_stabilization(d: &Diagram, pos: usize, k: i64) -> Result<Diagram> {
    require_closed_valid(d, pos)?;
    let c = d.len();
    let a = d.circuit().curve(pos).clone();
    if pos + 1 < c {
        let b = d.circuit().curve(pos + 1).clone();
        let xi = twist_class(&b, k, &a)?;
        insert_after(d, pos + 1, vec![xi, b])
    } else {
        // closing pair: work in the frame of g_1
        let a = match d.switch_matrix() {
            Some(mu) => mu.apply(&a)?,
            None => a,
        };
        let b = d.circuit().curve(0).clone();
        let xi = twist_class(&b, k, &a)?;
        insert_after(d, 0, vec![xi, b])
    }
}

/// Replaces `g_pos` by `(g_pos, tau_{g_pos}^k(dual), g_pos)`.
pub fn hayano_surgery(d: &Diagram, pos: usize, dual: &HClass, k: i64) -> Result<Diagram> {
    require_closed_valid(d, pos)?;
    let g = d.circuit().curve(pos).clone();
    if dual.genus() != g.genus() {
        return Err(Error::GenusMismatch {
            expected: g.genus(),
            found: dual.genus(),
        });
    }
    let p = pair(&g, dual);
    if p.abs() != BigInt::one() {
        return Err(Error::NotDual {
            index: pos,
            next: pos,
            pairing: p,
        });
    }
    let xi = twist_class(&g, k, dual)?;
    insert_after(d, pos, vec![xi, g])
}

/// Framing parity flag of a surgery substitution.
pub fn hayano_framing(k: i64) -> &'static str {
    if k % 2 == 0 {
        "fiber-framed surgery on dual"
    } else {
        "opposite framing"
    }
}

fn blowup_at(w: &[HClass]) -> Option<DetectionKind> {
    let (x, xi, y) = (&w[0], &w[1], &w[2]);
    let k = pair(x, y);
    if k.abs() != BigInt::one() || (x + y) != xi.scale(&k) {
        return None;
    }
    let (exponent, summand) = if k.is_positive() {
        (-1, Summand::Cp2)
    } else {
        (1, Summand::Cp2Bar)
    };
    Some(DetectionKind::BlowUp { exponent, summand })
}

fn stabilization_at(w: &[HClass]) -> Option<DetectionKind> {
    let (a, b, xi, b2) = (&w[0], &w[1], &w[2], &w[3]);
    if *b2 != -b {
        return None;
    }
    let k = pair(a, xi);
    if xi + a != b.scale(&k) {
        return None;
    }
    let summand = Summand::sphere_bundle(&k);
    Some(DetectionKind::Stabilization { k, summand })
}

fn hayano_at(w: &[HClass]) -> Option<DetectionKind> {
    if w[2] != -&w[0] {
        return None;
    }
    Some(DetectionKind::HayanoPattern {
        dual: w[1].clone(),
        k: BigInt::zero(),
    })
}

fn detect_at(d: &Diagram, pos: usize) -> Result<Vec<DetectionKind>> {
    let c = d.len();
    let mut out = Vec::new();
    if c >= 3 {
        let w = window(d, pos, 3)?;
        out.extend(blowup_at(&w));
        out.extend(hayano_at(&w));
    }
    if c >= 4 {
        let w = window(d, pos, 4)?;
        out.extend(stabilization_at(&w));
    }
    Ok(out)
}

/// All substitution patterns, in ascending position order.
pub fn detect(d: &Diagram) -> Result<Vec<Detection>> {
    if !d.is_closed() {
        return Err(Error::OpenCircuit);
    }
    ensure_valid(d)?;
    let exactness = d.circuit().exactness();
    let mut out = Vec::new();
    for pos in 0..d.len() {
        for kind in detect_at(d, pos)? {
            out.push(Detection {
                position: pos,
                kind,
                exactness,
            });
        }
    }
    Ok(out)
}

/// Removes a detected blow-up or stabilization, returning the smaller
/// diagram and the connected summand split off.
///
/// When the curves to remove wrap past the end of the circuit the diagram is
/// switched first so that the pattern starts at `g_1`.
pub fn contract(d: &Diagram, det: &Detection) -> Result<(Diagram, SumForm)> {
    let pos = det.position;
    require_closed_valid(d, pos)?;
    if !detect_at(d, pos)?.contains(&det.kind) {
        return Err(Error::StaleDetection(det.to_string()));
    }
    let summand = det.kind.summand().ok_or(Error::NotContractible(pos))?;
    let span = det.kind.span();
    let c = d.len();
    let (base, start) = if pos + span <= c {
        (d.clone(), pos)
    } else {
        (switch(d, -(pos as i64))?, 0)
    };
    let mut curves = base.circuit().curves().to_vec();
    match det.kind {
        DetectionKind::BlowUp { .. } => {
            curves.remove(start + 1);
        }
        _ => {
            curves.drain(start + 2..start + 4);
        }
    }
    Ok((rebuild(&base, curves)?, summand.delta()))
}
