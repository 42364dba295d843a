//! Classification of closed total spaces of genus-one diagrams.
//!
//! Every closed genus-one diagram of length at least three contains a
//! blow-up or a sum-stabilization configuration. Contracting them one at a
//! time reduces the circuit to `(a, b)`, whose total space is one of the two
//! sphere bundles over the sphere, depending on how the last piece is closed
//! off. Both closures are carried along and the resulting connected sums are
//! normalized with the classical relation `X # S2xS2 = X # CP2 # -CP2` for
//! non-spin `X`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::circuit::{ensure_valid, Circuit, Diagram};
use crate::error::{Error, Result};
use crate::handles::{euler_characteristics, intersection_form};
use crate::homology::pair;
use crate::form::form_invariants;
use crate::subst::{contract, detect, Detection, DetectionKind};

/// Which sphere bundle closes off the final length-two diagram.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub enum Closure {
    /// `S2 x S2`.
    Spin0,
    /// The twisted bundle `CP2 # -CP2`.
    NonSpin1,
    #[default]
    Unclosed,
}

/// `S_k # l(S2xS2) # m CP2 # n (-CP2)`, with the bundle `S_k` given by the
/// closure.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct SumForm {
    pub l: u64,
    pub m: u64,
    pub n: u64,
    pub closure: Closure,
}

impl SumForm {
    pub fn new(l: u64, m: u64, n: u64, closure: Closure) -> Self {
        SumForm { l, m, n, closure }
    }

    /// Adds the counts of `other`; the closure of `self` is kept.
    pub fn add(&self, other: &SumForm) -> SumForm {
        SumForm {
            l: self.l + other.l,
            m: self.m + other.m,
            n: self.n + other.n,
            closure: self.closure,
        }
    }

    pub fn with_closure(&self, closure: Closure) -> SumForm {
        SumForm { closure, ..*self }
    }

    /// Euler characteristic of the closed manifold (4 for the closure
    /// summand).
    pub fn euler(&self) -> u64 {
        4 + 2 * self.l + self.m + self.n
    }
}

/// Normal form of a closed genus-one total space.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum CanonicalForm {
    /// `t (S2 x S2)`.
    Spin { t: u64 },
    /// `m CP2 # n (-CP2)`.
    NonSpin { m: u64, n: u64 },
}

impl CanonicalForm {
    pub fn signature(&self) -> i64 {
        match *self {
            CanonicalForm::Spin { .. } => 0,
            CanonicalForm::NonSpin { m, n } => m as i64 - n as i64,
        }
    }

    pub fn euler(&self) -> u64 {
        match *self {
            CanonicalForm::Spin { t } => 2 + 2 * t,
            CanonicalForm::NonSpin { m, n } => 2 + m + n,
        }
    }
}

fn term(count: u64, name: &str) -> String {
    if count == 1 {
        name.to_string()
    } else {
        format!("{count}{name}")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match *self {
            CanonicalForm::Spin { t: 1 } => f.write_str("S²×S²"),
            CanonicalForm::Spin { t } => write!(f, "{t}(S²×S²)"),
            CanonicalForm::NonSpin { m, n } => {
                write!(f, "{} # {}", term(m, "ℂP²"), term(n, "ℂP²-bar"))
            }
        }
    }
}

/// Canonical connected-sum form of a closed sum.
pub fn normalize_sum(f: &SumForm) -> Result<CanonicalForm> {
    match f.closure {
        Closure::Unclosed => Err(Error::Invalid("sum form has no closure".into())),
        Closure::Spin0 if f.m == 0 && f.n == 0 => Ok(CanonicalForm::Spin { t: f.l + 1 }),
        _ => Ok(CanonicalForm::NonSpin {
            m: f.m + f.l + 1,
            n: f.n + f.l + 1,
        }),
    }
}

/// Both closures of an unclosed sum, normalized and deduplicated.
pub fn closed_forms(f: &SumForm) -> Vec<CanonicalForm> {
    let mut out = Vec::new();
    for closure in [Closure::Spin0, Closure::NonSpin1] {
        let form = normalize_sum(&f.with_closure(closure)).expect("closure is set");
        if !out.contains(&form) {
            out.push(form);
        }
    }
    out
}

fn require_genus_one(c: &Circuit) -> Result<()> {
    if c.genus() != 1 {
        return Err(Error::RequiresGenusOne(c.genus()));
    }
    Ok(())
}

/// The integers `k_i` with `g_i = k_i g_(i-1) - g_(i-2)`, for `i = 3..c`.
pub fn duality_coefficients(c: &Circuit) -> Result<Vec<BigInt>> {
    require_genus_one(c)?;
    ensure_valid(&Diagram::untwisted(Circuit::unchecked(c.curves().to_vec(), false)?))?;
    if c.len() < 3 {
        return Err(Error::TooShort { len: c.len(), min: 3 });
    }
    Ok(c
        .curves()
        .windows(3)
        .map(|w| pair(&w[0], &w[2]))
        .collect())
}

/// `s_i = k_i s_(i-1) - s_(i-2)` from `s_1 = 0`, `s_2 = 1`.
pub fn sigma_sequence(ks: &[BigInt]) -> Vec<BigInt> {
    let mut s = vec![BigInt::from(0), BigInt::one()];
    for k in ks {
        let n = s.len();
        let next = k * &s[n - 1] - &s[n - 2];
        s.push(next);
    }
    s
}

/// Closedness read off the duality coefficients: `|s_c| = 1`.
pub fn closed_by_recursion(c: &Circuit) -> Result<bool> {
    if c.len() == 2 {
        require_genus_one(c)?;
        return Ok(true);
    }
    let s = sigma_sequence(&duality_coefficients(c)?);
    Ok(s.last().unwrap().abs().is_one())
}

/// Order in which available contractions are taken.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Strategy {
    /// First blow-up in position order, else the first stabilization.
    #[default]
    PreferBlowUp,
    /// First stabilization, else the first blow-up.
    PreferStabilization,
    /// A uniformly random contractible detection at every step.
    Shuffled(u64),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceStep {
    pub step: usize,
    pub detection: Detection,
    pub delta: SumForm,
    pub length_after: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Classification {
    /// One form when the two closures agree after normalization, else two.
    pub forms: Vec<CanonicalForm>,
    /// Summands split off during the reduction, before closing.
    pub sum: SumForm,
    pub trace: Vec<TraceStep>,
    /// Signature of the intersection form of the input.
    pub signature: i64,
    pub euler: i64,
}

pub fn classify(d: &Diagram) -> Result<Classification> {
    classify_with(d, Strategy::default())
}

pub fn classify_with(d: &Diagram, strategy: Strategy) -> Result<Classification> {
    require_genus_one(d.circuit())?;
    if d.is_twisted() {
        return Err(Error::Twisted);
    }
    if !d.is_closed() {
        return Err(Error::OpenCircuit);
    }
    ensure_valid(d)?;
    let mut rng = match strategy {
        Strategy::Shuffled(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut cur = d.clone();
    let mut sum = SumForm::default();
    let mut trace = Vec::new();
    while cur.len() > 2 {
        let dets: Vec<Detection> = detect(&cur)?
            .into_iter()
            .filter(|x| x.kind.summand().is_some())
            .collect();
        let is_blowup = |x: &&Detection| matches!(x.kind, DetectionKind::BlowUp { .. });
        let chosen = match (strategy, rng.as_mut()) {
            (Strategy::Shuffled(_), Some(r)) => dets.choose(r),
            (Strategy::PreferStabilization, _) => dets
                .iter()
                .find(|x| !is_blowup(x))
                .or_else(|| dets.first()),
            _ => dets.iter().find(is_blowup).or_else(|| dets.first()),
        };
        let Some(det) = chosen.cloned() else {
            return Err(Error::InvariantViolation(format!(
                "closed genus-one circuit of length {} has no contractible pattern: {}",
                cur.len(),
                cur.circuit()
            )));
        };
        let (next, delta) = contract(&cur, &det)?;
        sum = sum.add(&delta);
        trace.push(TraceStep {
            step: trace.len() + 1,
            detection: det,
            delta,
            length_after: next.len(),
        });
        cur = next;
    }
    let forms = closed_forms(&sum);
    let signature = form_invariants(&intersection_form(d.circuit())?).signature;
    let (_, euler) = euler_characteristics(d.circuit());
    let euler = euler.expect("closed circuit");
    for form in &forms {
        if form.signature() != signature {
            return Err(Error::InvariantViolation(format!(
                "signature {signature} of the intersection form disagrees with {form}"
            )));
        }
    }
    if euler != sum.euler() as i64 {
        return Err(Error::InvariantViolation(format!(
            "Euler characteristic {euler} disagrees with the reduction ({})",
            sum.euler()
        )));
    }
    Ok(Classification {
        forms,
        sum,
        trace,
        signature,
        euler,
    })
}
