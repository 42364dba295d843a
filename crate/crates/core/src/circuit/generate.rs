//! Closed genus-one diagrams with a known total space.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Circuit, Diagram};
use crate::error::Result;
use crate::genus1::SumForm;
use crate::homology::HClass;
use crate::subst::{apply_blowup, apply_stabilization, Summand};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Move {
    BlowUp { pos: usize, e: i8 },
    Stabilization { pos: usize, k: i64 },
}

impl Move {
    /// Summand split off by undoing the move.
    pub fn summand(&self) -> Summand {
        match *self {
            Move::BlowUp { e, .. } if e > 0 => Summand::Cp2Bar,
            Move::BlowUp { .. } => Summand::Cp2,
            Move::Stabilization { k, .. } => Summand::sphere_bundle(&k.into()),
        }
    }

    pub fn growth(&self) -> usize {
        match self {
            Move::BlowUp { .. } => 1,
            Move::Stabilization { .. } => 2,
        }
    }
}

/// The moves drawn by [`generate`] for this seed.
pub fn random_moves(seed: u64, steps: usize) -> Vec<Move> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut len = 2;
    let mut out = Vec::with_capacity(steps);
    for _ in 0..steps {
        let pos = rng.gen_range(0..len);
        let m = if rng.gen_bool(0.5) {
            Move::BlowUp {
                pos,
                e: if rng.gen_bool(0.5) { 1 } else { -1 },
            }
        } else {
            Move::Stabilization {
                pos,
                k: rng.gen_range(-3..=3),
            }
        };
        len += m.growth();
        out.push(m);
    }
    out
}

/// Applies `moves` to the closed circuit `(a, b)` on the torus. Positions
/// are reduced modulo the current length.
pub fn generate_with(moves: &[Move]) -> Result<(Circuit, SumForm)> {
    let start = Circuit::normalize(
        vec![HClass::a(1, 0), HClass::b(1, 0)],
        true,
    )?;
    let mut d = Diagram::untwisted(start);
    let mut sum = SumForm::default();
    for m in moves {
        let len = d.len();
        d = match *m {
            Move::BlowUp { pos, e } => apply_blowup(&d, pos % len, e)?,
            Move::Stabilization { pos, k } => apply_stabilization(&d, pos % len, k)?,
        };
        sum = sum.add(&m.summand().delta());
    }
    Ok((d.into_circuit(), sum))
}

/// A seeded random closed genus-one circuit together with the connected
/// sum it was built from.
pub fn generate(seed: u64, steps: usize) -> (Circuit, SumForm) {
    generate_with(&random_moves(seed, steps)).expect("substitutions preserve the circuit axioms")
}
