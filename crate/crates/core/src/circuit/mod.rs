//! Surface diagrams as homological data.
//!
//! A circuit is a sequence of primitive classes in which consecutive entries
//! are dual. After normalization consecutive classes satisfy
//! `<g_i, g_{i+1}> = +1`; the closing sign `<g_c, g_1>` of a closed circuit is
//! kept as found. A diagram is a circuit together with an optional switch
//! matrix; when the switch is present the closing pair is `(mu g_c, g_1)`.
//!
//! On the torus homological duality is the same as geometric duality, so
//! genus-one checks are exact. For higher genus every check here is only a
//! necessary condition and results carry [`Exactness::HomologicalOnly`].

mod generate;
pub mod random;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::homology::{pair, HClass, SpMatrix};

pub use generate::{generate, generate_with, random_moves, Move};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Exactness {
    /// Homology determines isotopy classes (genus one).
    Exact,
    /// Checks are necessary conditions only (genus two and higher).
    HomologicalOnly,
}

impl Exactness {
    pub fn for_genus(genus: usize) -> Self {
        if genus == 1 {
            Exactness::Exact
        } else {
            Exactness::HomologicalOnly
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Circuit {
    genus: usize,
    curves: Vec<HClass>,
    closed: bool,
}

impl Circuit {
    /// Wraps classes without checking any circuit axiom beyond a common
    /// genus and the minimal length. Use [`validate`] to inspect the result.
    pub fn unchecked(curves: Vec<HClass>, closed: bool) -> Result<Self> {
        let min = if closed { 2 } else { 1 };
        if curves.len() < min {
            return Err(Error::TooShort {
                len: curves.len(),
                min,
            });
        }
        let genus = curves[0].genus();
        if let Some(bad) = curves.iter().find(|x| x.genus() != genus) {
            return Err(Error::GenusMismatch {
                expected: genus,
                found: bad.genus(),
            });
        }
        Ok(Circuit {
            genus,
            curves,
            closed,
        })
    }

    /// Orients a raw list of classes; see [`normalize`].
    pub fn normalize(raw: Vec<HClass>, closed: bool) -> Result<Self> {
        normalize(raw, closed)
    }

    pub fn from_i64(raw: &[&[i64]], closed: bool) -> Result<Self> {
        let curves = raw
            .iter()
            .map(|v| HClass::from_i64(v))
            .collect::<Result<Vec<_>>>()?;
        normalize(curves, closed)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn curves(&self) -> &[HClass] {
        &self.curves
    }

    pub fn curve(&self, i: usize) -> &HClass {
        &self.curves[i]
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn exactness(&self) -> Exactness {
        Exactness::for_genus(self.genus)
    }

    /// `<g_c, g_1>` for a closed circuit.
    pub fn closing_sign(&self) -> Option<BigInt> {
        self.closed
            .then(|| pair(self.curves.last().unwrap(), &self.curves[0]))
    }

    /// Representative with the global sign fixed so that `g_1` has a
    /// positive leading coefficient. Two normalized circuits describe the
    /// same unoriented diagram iff their canonical forms agree.
    pub fn canonical(&self) -> Circuit {
        let flip = self.curves[0] != self.curves[0].unoriented();
        if !flip {
            return self.clone();
        }
        Circuit {
            genus: self.genus,
            curves: self.curves.iter().map(|x| -x).collect(),
            closed: self.closed,
        }
    }

    pub(crate) fn with_curves(&self, curves: Vec<HClass>) -> Circuit {
        Circuit {
            genus: self.genus,
            curves,
            closed: self.closed,
        }
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        let parts: Vec<String> = self.curves.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))?;
        if self.closed {
            write!(f, " closed")?;
        }
        Ok(())
    }
}

/// Flips signs along the sequence so that `<g_i, g_{i+1}> = +1`, keeping the
/// sign of `g_1`.
fn orient(raw: Vec<HClass>) -> Result<Vec<HClass>> {
    let mut out: Vec<HClass> = Vec::with_capacity(raw.len());
    for (i, x) in raw.into_iter().enumerate() {
        if !x.is_primitive() {
            return Err(Error::CurveNotPrimitive { index: i });
        }
        if let Some(prev) = out.last() {
            let p = pair(prev, &x);
            if p.is_one() {
                out.push(x);
            } else if (-&p).is_one() {
                out.push(-x);
            } else {
                return Err(Error::NotDual {
                    index: i - 1,
                    next: i,
                    pairing: p,
                });
            }
        } else {
            out.push(x);
        }
    }
    Ok(out)
}

/// Normalizes the orientation convention of a raw circuit.
///
/// Errors when an entry is imprimitive, an adjacent pair is not dual, or a
/// closed circuit's last and first classes are not dual.
pub fn normalize(raw: Vec<HClass>, closed: bool) -> Result<Circuit> {
    let c = Circuit::unchecked(raw, closed)?;
    let curves = orient(c.curves)?;
    let out = Circuit { curves, ..c };
    if closed {
        let p = out.closing_sign().unwrap();
        if p.abs() != BigInt::one() {
            return Err(Error::NotClosed { pairing: p });
        }
    }
    Ok(out)
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Diagram {
    circuit: Circuit,
    switch: Option<SpMatrix>,
}

impl Diagram {
    pub fn untwisted(circuit: Circuit) -> Self {
        Diagram {
            circuit,
            switch: None,
        }
    }

    /// A twisted diagram; the circuit must be closed and share the switch's genus.
    pub fn twisted(circuit: Circuit, switch: SpMatrix) -> Result<Self> {
        if !circuit.closed {
            return Err(Error::OpenCircuit);
        }
        if switch.genus() != circuit.genus {
            return Err(Error::GenusMismatch {
                expected: circuit.genus,
                found: switch.genus(),
            });
        }
        Ok(Diagram {
            circuit,
            switch: Some(switch),
        })
    }

    /// Orients raw classes and checks the (possibly twisted) closing pair.
    pub fn normalize(raw: Vec<HClass>, closed: bool, switch: Option<SpMatrix>) -> Result<Self> {
        match switch {
            None => Ok(Diagram::untwisted(normalize(raw, closed)?)),
            Some(mu) => {
                let c = Circuit::unchecked(raw, closed)?;
                let curves = orient(c.curves)?;
                let d = Diagram::twisted(Circuit { curves, ..c }, mu)?;
                let p = d.closing_pairing().unwrap();
                if p.abs() != BigInt::one() {
                    return Err(Error::NotClosed { pairing: p });
                }
                Ok(d)
            }
        }
    }

    pub fn circuit(&self) -> &Circuit {
        &self.circuit
    }

    pub fn into_circuit(self) -> Circuit {
        self.circuit
    }

    pub fn switch_matrix(&self) -> Option<&SpMatrix> {
        self.switch.as_ref()
    }

    pub fn is_twisted(&self) -> bool {
        self.switch.is_some()
    }

    pub fn genus(&self) -> usize {
        self.circuit.genus
    }

    pub fn len(&self) -> usize {
        self.circuit.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuit.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.circuit.closed
    }

    /// `<mu g_c, g_1>` (with `mu = 1` when untwisted), for closed diagrams.
    pub fn closing_pairing(&self) -> Option<BigInt> {
        if !self.circuit.closed {
            return None;
        }
        let last = self.circuit.curves.last().unwrap();
        let first = &self.circuit.curves[0];
        Some(match &self.switch {
            None => pair(last, first),
            Some(mu) => pair(&mu.apply(last).ok()?, first),
        })
    }

    pub(crate) fn with_circuit(&self, circuit: Circuit) -> Diagram {
        Diagram {
            circuit,
            switch: self.switch.clone(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FailureKind {
    NotPrimitive,
    /// The pair starting at this index does not have pairing +-1.
    NotDual { pairing: BigInt },
    /// The closing pair does not have pairing +-1.
    ClosingNotDual { pairing: BigInt },
    SwitchNotSymplectic,
    SwitchGenus,
    SwitchOnOpenCircuit,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Failure {
    /// 0-based index of the curve (first curve of the pair for pair checks).
    pub index: usize,
    pub kind: FailureKind,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        let n = self.index + 1;
        match &self.kind {
            FailureKind::NotPrimitive => write!(f, "curve {n}: not primitive"),
            FailureKind::NotDual { pairing } => {
                write!(f, "curves {n} and {}: pairing {pairing}, expected +-1", n + 1)
            }
            FailureKind::ClosingNotDual { pairing } => {
                write!(f, "closing pair (curve {n}, curve 1): pairing {pairing}, expected +-1")
            }
            FailureKind::SwitchNotSymplectic => write!(f, "switch matrix is not symplectic"),
            FailureKind::SwitchGenus => write!(f, "switch matrix has the wrong size"),
            FailureKind::SwitchOnOpenCircuit => write!(f, "switch given on an open circuit"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValidationReport {
    pub ok: bool,
    pub exactness: Exactness,
    pub failures: Vec<Failure>,
    /// Whether the orientation convention `<g_i, g_{i+1}> = +1` holds.
    pub oriented: bool,
}

/// Checks primitivity, adjacent duality and the closing pair.
pub fn validate(d: &Diagram) -> ValidationReport {
    let c = &d.circuit;
    let mut failures = Vec::new();
    let mut oriented = true;
    for (i, x) in c.curves.iter().enumerate() {
        if !x.is_primitive() {
            failures.push(Failure {
                index: i,
                kind: FailureKind::NotPrimitive,
            });
        }
    }
    for (i, w) in c.curves.windows(2).enumerate() {
        let p = pair(&w[0], &w[1]);
        if p.abs() != BigInt::one() {
            failures.push(Failure {
                index: i,
                kind: FailureKind::NotDual { pairing: p },
            });
        } else if !p.is_one() {
            oriented = false;
        }
    }
    match &d.switch {
        Some(mu) if mu.genus() != c.genus => failures.push(Failure {
            index: 0,
            kind: FailureKind::SwitchGenus,
        }),
        Some(mu) if !mu.is_symplectic() => failures.push(Failure {
            index: 0,
            kind: FailureKind::SwitchNotSymplectic,
        }),
        Some(_) if !c.closed => failures.push(Failure {
            index: 0,
            kind: FailureKind::SwitchOnOpenCircuit,
        }),
        _ => {
            if let Some(p) = d.closing_pairing() {
                if p.abs() != BigInt::one() {
                    failures.push(Failure {
                        index: c.len() - 1,
                        kind: FailureKind::ClosingNotDual { pairing: p },
                    });
                }
            }
        }
    }
    ValidationReport {
        ok: failures.is_empty(),
        exactness: c.exactness(),
        failures,
        oriented,
    }
}

/// Errors unless the diagram is valid and oriented.
pub fn ensure_valid(d: &Diagram) -> Result<()> {
    let r = validate(d);
    if let Some(f) = r.failures.first() {
        return Err(Error::Invalid(f.to_string()));
    }
    if !r.oriented {
        return Err(Error::Invalid("orientation convention violated".into()));
    }
    Ok(())
}

/// Applies the switching move `k` times (its inverse for negative `k`):
/// `(g_1, ..., g_c) -> (mu g_c, g_1, ..., g_{c-1})`, then re-orients.
pub fn switch(d: &Diagram, k: i64) -> Result<Diagram> {
    if !d.is_closed() {
        return Err(Error::OpenCircuit);
    }
    ensure_valid(d)?;
    let c = d.len() as i64;
    let steps = match &d.switch {
        None => k.rem_euclid(c),
        Some(_) => k,
    };
    let mut curves = d.circuit.curves.clone();
    let inverse = d.switch.as_ref().map(SpMatrix::inverse);
    for _ in 0..steps.unsigned_abs() {
        if steps > 0 {
            let last = curves.pop().unwrap();
            let moved = match &d.switch {
                Some(mu) => mu.apply(&last)?,
                None => last,
            };
            curves.insert(0, moved);
        } else {
            let first = curves.remove(0);
            let moved = match &inverse {
                Some(mu_inv) => mu_inv.apply(&first)?,
                None => first,
            };
            curves.push(moved);
        }
    }
    Ok(d.with_circuit(d.circuit.with_curves(orient(curves)?)))
}

/// The double `(g_1, ..., g_l, g_{l-1}, ..., g_2)`, a closed circuit of
/// length `2l - 2`.
pub fn double(c: &Circuit) -> Result<Circuit> {
    if c.len() < 2 {
        return Err(Error::TooShort { len: c.len(), min: 2 });
    }
    let open = Circuit {
        closed: false,
        ..c.clone()
    };
    ensure_valid(&Diagram::untwisted(open))?;
    let l = c.len();
    let mut raw: Vec<HClass> = c.curves.clone();
    raw.extend(c.curves[1..l - 1].iter().rev().cloned());
    normalize(raw, true)
}

/// Equality of untwisted closed diagrams up to switching and orientation.
pub fn same_switching_orbit(a: &Diagram, b: &Diagram) -> Result<bool> {
    if a.is_twisted() || b.is_twisted() {
        return Err(Error::Twisted);
    }
    if a.len() != b.len() || a.genus() != b.genus() || a.is_closed() != b.is_closed() {
        return Ok(false);
    }
    if !a.is_closed() {
        return Ok(a.circuit.canonical() == b.circuit.canonical());
    }
    let target = b.circuit.canonical();
    for k in 0..a.len() as i64 {
        if switch(a, k)?.circuit.canonical() == target {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn h(v: &[i64]) -> HClass {
        HClass::from_i64(v).unwrap()
    }

    fn circ(raw: &[&[i64]], closed: bool) -> Circuit {
        Circuit::from_i64(raw, closed).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let c = circ(&[&[1, 0], &[1, -1], &[0, 1]], true);
        assert_eq!(c.curves(), &[h(&[1, 0]), h(&[-1, 1]), h(&[0, -1])]);
        assert_eq!(c.closing_sign(), Some(BigInt::one()));
        let c = circ(&[&[1, 0], &[0, 1]], true);
        assert_eq!(c.curves(), &[h(&[1, 0]), h(&[0, 1])]);
        assert!(matches!(
            Circuit::from_i64(&[&[1, 0], &[2, 4]], false),
            Err(Error::CurveNotPrimitive { index: 1 })
        ));
        assert!(matches!(
            Circuit::from_i64(&[&[1, 0], &[1, 0]], false),
            Err(Error::NotDual { index: 0, .. })
        ));
        assert!(matches!(
            Circuit::from_i64(&[&[1, 0], &[0, 1], &[-1, 2]], true),
            Err(Error::NotClosed { .. })
        ));
    }

    #[test]
    fn normalize_is_idempotent() {
        let c = circ(&[&[1, 0], &[1, -1], &[0, 1]], true);
        assert_eq!(normalize(c.curves().to_vec(), true).unwrap(), c);
    }

    #[test]
    fn validate_examples() {
        let d = Diagram::untwisted(circ(&[&[1, 0], &[0, 1]], true));
        let r = validate(&d);
        assert!(r.ok && r.oriented);
        assert_eq!(r.exactness, Exactness::Exact);

        let d = Diagram::untwisted(circ(&[&[1, 0, 0, 0], &[0, 1, 0, 0]], true));
        let r = validate(&d);
        assert!(r.ok);
        assert_eq!(r.exactness, Exactness::HomologicalOnly);

        let raw = Circuit::unchecked(vec![h(&[1, 0]), h(&[1, 0])], true).unwrap();
        let r = validate(&Diagram::untwisted(raw));
        assert!(!r.ok);
        assert_eq!(r.failures[0].index, 0);
        assert_eq!(
            r.failures[0].kind,
            FailureKind::NotDual {
                pairing: BigInt::zero()
            }
        );
        assert_eq!(r.failures[0].to_string(), "curves 1 and 2: pairing 0, expected +-1");
    }

    #[test]
    fn switch_examples() {
        let d = Diagram::untwisted(circ(&[&[1, 0], &[-1, 1], &[0, -1]], true));
        let s = switch(&d, 1).unwrap();
        assert_eq!(s.circuit().curves(), &[h(&[0, -1]), h(&[1, 0]), h(&[-1, 1])]);
        assert_eq!(switch(&d, 0).unwrap(), d);
        let back = switch(&s, -1).unwrap();
        assert_eq!(back.circuit().canonical(), d.circuit().canonical());
        assert_eq!(switch(&d, 3).unwrap(), d);
    }

    #[test]
    fn switch_requires_closed() {
        let d = Diagram::untwisted(circ(&[&[1, 0], &[0, 1]], false));
        assert_eq!(switch(&d, 1), Err(Error::OpenCircuit));
    }

    #[test]
    fn twisted_switch_applies_mu() {
        // mu = T_b, and (a, b) stays closed: <mu b, a> = <b, a> = -1
        let mu = crate::homology::twist_matrix(&h(&[0, 1]), 1).unwrap();
        let d = Diagram::normalize(vec![h(&[1, 0]), h(&[0, 1])], true, Some(mu.clone())).unwrap();
        let s = switch(&d, 1).unwrap();
        assert_eq!(s.circuit().curve(0), &h(&[0, 1]));
        let back = switch(&s, -1).unwrap();
        assert_eq!(back.circuit().canonical(), d.circuit().canonical());
        // two steps move a through mu
        let s2 = switch(&d, 2).unwrap();
        assert!(s2.circuit().curve(0).eq_up_to_sign(&mu.apply(&h(&[1, 0])).unwrap()));
    }

    #[test]
    fn double_examples() {
        let ab = circ(&[&[1, 0], &[0, 1]], false);
        let d = double(&ab).unwrap();
        assert_eq!(d.curves(), ab.curves());
        assert!(d.is_closed());

        let c = circ(&[&[1, 0], &[-1, 1], &[0, -1]], false);
        let d = double(&c).unwrap();
        assert_eq!(
            d.curves(),
            &[h(&[1, 0]), h(&[-1, 1]), h(&[0, -1]), h(&[1, -1])]
        );
        assert!(validate(&Diagram::untwisted(d)).ok);

        let one = Circuit::unchecked(vec![h(&[1, 0])], false).unwrap();
        assert!(matches!(double(&one), Err(Error::TooShort { .. })));
    }

    #[test]
    fn orbit_equality() {
        let d = Diagram::untwisted(circ(&[&[1, 0], &[-1, 1], &[0, -1]], true));
        let e = switch(&d, 2).unwrap();
        assert!(same_switching_orbit(&d, &e).unwrap());
        let f = Diagram::untwisted(circ(&[&[1, 0], &[0, 1], &[-1, 1]], true));
        assert!(!same_switching_orbit(&d, &f).unwrap());
    }
}
