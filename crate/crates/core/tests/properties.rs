use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sdcalc_core::circuit::random::{
    random_class, random_closed_circuit, random_dual, random_open_circuit, random_symplectic,
};
use sdcalc_core::circuit::{
    double, generate, generate_with, random_moves, same_switching_orbit, switch, validate, Move,
};
use sdcalc_core::form::form_invariants;
use sdcalc_core::genus1::{classify, classify_with, closed_by_recursion, closed_forms, Strategy};
use sdcalc_core::handles::{
    emit_kirby, euler_characteristics, fiber_framing, intersection_form, linking, linking_matrix,
    to_blf,
};
use sdcalc_core::homology::{apply_word, delta_twist, pairing, twist_class, twist_matrix};
use sdcalc_core::monodromy::{
    alternative_lifts, mu_tilde_matrix, mu_tilde_word, preserves_quotient_pairing, quotient_action,
    surgered_action, verdict,
};
use sdcalc_core::subst::{apply_blowup, apply_stabilization, contract, detect, hayano_surgery};
use sdcalc_core::{Circuit, Diagram, DetectionKind, HClass, IntMatrix, SpMatrix};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn ints(x: &HClass) -> Vec<BigInt> {
    x.coeffs().to_vec()
}

fn oracle_pair(x: &HClass, y: &HClass) -> BigInt {
    let (p, q) = (ints(x), ints(y));
    (0..p.len() / 2)
        .map(|i| &p[2 * i] * &q[2 * i + 1] - &p[2 * i + 1] * &q[2 * i])
        .sum()
}

fn oracle_twist(v: &HClass, k: i64, x: &HClass) -> HClass {
    let t = BigInt::from(k) * oracle_pair(v, x);
    HClass::new(ints(x).iter().zip(ints(v)).map(|(a, b)| a + &t * b).collect()).unwrap()
}

fn j(g: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(2 * g, 2 * g);
    for i in 0..g {
        m[(2 * i, 2 * i + 1)] = BigInt::one();
        m[(2 * i + 1, 2 * i)] = -BigInt::one();
    }
    m
}

fn preserves_pairing(m: &SpMatrix) -> bool {
    let a = m.matrix();
    let g = m.genus();
    &(&a.transpose() * &j(g)) * a == j(g)
}

fn mul(a: &SpMatrix, b: &SpMatrix) -> SpMatrix {
    a * b
}

fn closed(seed: u64, genus: usize, len: usize) -> Circuit {
    random_closed_circuit(&mut rng(seed), genus, len, 3)
}

/// A twisted diagram: `mu = tau_{g_1}^i tau_{g_c}^j` keeps the closing pair dual.
fn twisted(seed: u64, genus: usize, len: usize) -> Diagram {
    let mut r = rng(seed);
    let c = random_closed_circuit(&mut r, genus, len, 3);
    let last = c.curves().last().unwrap().clone();
    let i = r.gen_range(-2..=2);
    let j = r.gen_range(-2..=2);
    let mu = mul(&twist_matrix(c.curve(0), i).unwrap(), &twist_matrix(&last, j).unwrap());
    Diagram::twisted(c, mu).unwrap()
}

fn sig_rank(c: &Circuit) -> (i64, usize) {
    let f = form_invariants(&intersection_form(c).unwrap());
    (f.signature, f.rank)
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 128,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn pairing_matches_formula_and_is_antisymmetric(seed: u64, g in 1usize..=4) {
        let mut r = rng(seed);
        let (x, y) = (random_class(&mut r, g, 9), random_class(&mut r, g, 9));
        let p = pairing(&x, &y).unwrap();
        prop_assert_eq!(&p, &oracle_pair(&x, &y));
        prop_assert_eq!(&p, &-pairing(&y, &x).unwrap());
        let sym: BigInt = (0..g)
            .map(|i| x.n_a(i) * y.n_b(i) + y.n_a(i) * x.n_b(i))
            .sum();
        prop_assert_eq!((p.abs() % 2u32).is_zero(), (sym.abs() % 2u32).is_zero());
    }

    #[test]
    fn twists_follow_picard_lefschetz(seed: u64, g in 1usize..=4, k in -4i64..=4) {
        let mut r = rng(seed);
        let (v, x) = (random_class(&mut r, g, 5), random_class(&mut r, g, 5));
        let t = twist_matrix(&v, k).unwrap();
        prop_assert_eq!(t.apply(&x).unwrap(), oracle_twist(&v, k, &x));
        prop_assert_eq!(t.apply(&v).unwrap(), v.clone());
        prop_assert_eq!(&t, &twist_matrix(&-&v, k).unwrap());
        prop_assert!(mul(&t, &twist_matrix(&v, -k).unwrap()).is_identity());
        prop_assert!(preserves_pairing(&t));
        prop_assert_eq!(twist_class(&v, k, &x).unwrap(), oracle_twist(&v, k, &x));
    }

    #[test]
    fn constructed_matrices_are_symplectic(seed: u64, g in 1usize..=4, n in 0usize..8) {
        let mut r = rng(seed);
        let m = random_symplectic(&mut r, g, n);
        prop_assert!(preserves_pairing(&m));
        prop_assert!(m.is_symplectic());
        prop_assert!(mul(&m, &m.inverse()).is_identity());
        let a = random_class(&mut r, g, 4);
        let b = random_dual(&mut r, &a, 2);
        prop_assert!(preserves_pairing(&delta_twist(&a, &b).unwrap()));
    }

    #[test]
    fn braid_relation_for_dual_pairs(seed: u64, g in 1usize..=4) {
        let mut r = rng(seed);
        let a = random_class(&mut r, g, 5);
        let b = random_dual(&mut r, &a, 2);
        let (ta, tb) = (twist_matrix(&a, 1).unwrap(), twist_matrix(&b, 1).unwrap());
        prop_assert_eq!(mul(&mul(&ta, &tb), &ta), mul(&mul(&tb, &ta), &tb));
    }

    #[test]
    fn genus_one_twist_pair_has_order_six(seed: u64) {
        let mut r = rng(seed);
        let a = random_class(&mut r, 1, 20);
        let b = random_dual(&mut r, &a, 3);
        let p = mul(&twist_matrix(&a, 1).unwrap(), &twist_matrix(&b, 1).unwrap());
        prop_assert!(p.pow(6).is_identity());
        prop_assert!(!p.pow(3).is_identity());
    }

    #[test]
    fn delta_twist_is_minus_one_on_the_pair(seed: u64, g in 1usize..=4) {
        let mut r = rng(seed);
        let a = random_class(&mut r, g, 5);
        let b = random_dual(&mut r, &a, 2);
        let d = delta_twist(&a, &b).unwrap();
        let s = oracle_pair(&a, &b);
        let x = random_class(&mut r, g, 7);
        // x = x_par + x_perp with x_par = s (<x,b> a - <x,a> b)
        let par = a.scale(&(&s * oracle_pair(&x, &b))).add_scaled(&-(&s * oracle_pair(&x, &a)), &b);
        let expect = x.add_scaled(&BigInt::from(-2), &par);
        prop_assert_eq!(d.apply(&x).unwrap(), expect);
        prop_assert_eq!(d.apply(&a).unwrap(), -&a);
        prop_assert_eq!(d.apply(&b).unwrap(), -&b);
    }

    #[test]
    fn words_apply_rightmost_first(seed: u64, g in 1usize..=3, n in 0usize..6) {
        let mut r = rng(seed);
        let mut w = sdcalc_core::TwistWord::empty(g);
        let x = random_class(&mut r, g, 4);
        let mut expect = x.clone();
        for _ in 0..n {
            let v = random_class(&mut r, g, 2);
            let k = r.gen_range(1..=2);
            expect = oracle_twist(&v, k, &expect);
            w.push_left(v, k).unwrap();
        }
        prop_assert_eq!(apply_word(&w, &x).unwrap(), expect.clone());
        prop_assert_eq!(w.matrix().apply(&x).unwrap(), expect);
    }

    #[test]
    fn normalize_is_idempotent(seed: u64, g in 1usize..=3, len in 2usize..8) {
        let mut r = rng(seed);
        let c = random_closed_circuit(&mut r, g, len, 4);
        let flipped: Vec<HClass> = c
            .curves()
            .iter()
            .map(|x| if r.gen_bool(0.5) { -x } else { x.clone() })
            .collect();
        let once = Circuit::normalize(flipped, true).unwrap();
        prop_assert_eq!(&once.curve(0).unoriented(), &c.curve(0).unoriented());
        prop_assert_eq!(Circuit::normalize(once.curves().to_vec(), true).unwrap(), once.clone());
        for w in once.curves().windows(2) {
            prop_assert!(oracle_pair(&w[0], &w[1]).is_one());
        }
        for (x, y) in once.curves().iter().zip(c.curves()) {
            prop_assert!(x.eq_up_to_sign(y));
        }
    }

    #[test]
    fn doubles_are_valid(seed: u64, g in 1usize..=3, len in 2usize..8, open: bool) {
        let mut r = rng(seed);
        let c = if open {
            random_open_circuit(&mut r, g, len, 4)
        } else {
            random_closed_circuit(&mut r, g, len, 4)
        };
        let d = double(&c).unwrap();
        prop_assert_eq!(d.len(), 2 * len - 2);
        prop_assert!(validate(&Diagram::untwisted(d)).ok);
    }

    #[test]
    fn switching_laws_untwisted(seed: u64, g in 1usize..=3, len in 2usize..9, k in -12i64..=12) {
        let d = Diagram::untwisted(closed(seed, g, len));
        let s = switch(&d, k).unwrap();
        prop_assert_eq!(s.len(), d.len());
        prop_assert_eq!(s.genus(), d.genus());
        prop_assert!(validate(&s).ok);
        prop_assert_eq!(switch(&s, -k).unwrap().circuit().canonical(), d.circuit().canonical());
        prop_assert_eq!(switch(&d, len as i64).unwrap(), d.clone());
        prop_assert_eq!(switch(&d, 0).unwrap(), d.clone());
        let mut before: Vec<HClass> = d.circuit().curves().iter().map(HClass::unoriented).collect();
        let mut after: Vec<HClass> = s.circuit().curves().iter().map(HClass::unoriented).collect();
        before.sort_by_key(|x| format!("{x}"));
        after.sort_by_key(|x| format!("{x}"));
        prop_assert_eq!(before, after);
        prop_assert!(same_switching_orbit(&d, &s).unwrap());
    }

    #[test]
    fn switching_laws_twisted(seed: u64, g in 1usize..=3, len in 2usize..7, k in -5i64..=5) {
        let d = twisted(seed, g, len);
        let s = switch(&d, k).unwrap();
        prop_assert!(validate(&s).ok);
        prop_assert_eq!(s.switch_matrix(), d.switch_matrix());
        prop_assert!(s.circuit().curves().iter().all(HClass::is_primitive));
        let back = switch(&s, -k).unwrap();
        prop_assert_eq!(back.switch_matrix(), d.switch_matrix());
        prop_assert_eq!(back.circuit().canonical(), d.circuit().canonical());
    }

    #[test]
    fn generator_length_law(seed: u64, steps in 0usize..20) {
        let moves = random_moves(seed, steps);
        let (c, sum) = generate(seed, steps);
        let expect = 2 + moves.iter().map(Move::growth).sum::<usize>();
        prop_assert_eq!(c.len(), expect);
        prop_assert!(validate(&Diagram::untwisted(c.clone())).ok);
        prop_assert_eq!(euler_characteristics(&c).1, Some(sum.euler() as i64));
    }

    #[test]
    fn framing_and_linking_signs(seed: u64, g in 1usize..=4, i in 0usize..5, j in 0usize..5) {
        prop_assume!(i != j);
        let mut r = rng(seed);
        let (x, y) = (random_class(&mut r, g, 6), random_class(&mut r, g, 6));
        let fr: BigInt = (0..g).map(|t| x.n_a(t) * x.n_b(t)).sum();
        prop_assert_eq!(fiber_framing(&x).unwrap(), fr.clone());
        prop_assert_eq!(fiber_framing(&-&x).unwrap(), fr);
        let lk = linking(&x, i, &y, j).unwrap();
        prop_assert_eq!(&lk, &linking(&y, j, &x, i).unwrap());
        prop_assert_eq!(&-&lk, &linking(&-&x, i, &y, j).unwrap());
        let sgn = if i < j { -1 } else { 1 };
        let sym: BigInt = (0..g).map(|t| x.n_a(t) * y.n_b(t) + y.n_a(t) * x.n_b(t)).sum();
        prop_assert_eq!(lk * 2, BigInt::from(sgn) * oracle_pair(&x, &y) + sym);
    }

    #[test]
    fn linking_matrix_sign_flip_is_a_congruence(seed: u64, g in 1usize..=3, len in 2usize..8, flip in 0usize..8) {
        let c = closed(seed, g, len);
        let f = flip % len;
        let mut curves = c.curves().to_vec();
        curves[f] = -&curves[f];
        let flipped = Circuit::unchecked(curves, true).unwrap();
        let (m, n) = (linking_matrix(&c).unwrap(), linking_matrix(&flipped).unwrap());
        let mut dm = IntMatrix::identity(len);
        dm[(f, f)] = -BigInt::one();
        prop_assert_eq!(&(&dm * m.matrix()) * &dm, n.matrix().clone());
        prop_assert_eq!(m.invariants(), n.invariants());
        for i in 0..len {
            prop_assert_eq!(&m.matrix()[(i, i)], &fiber_framing(c.curve(i)).unwrap());
        }
    }

    #[test]
    fn form_invariants_are_congruence_invariant(seed: u64, n in 1usize..7) {
        let mut r = rng(seed);
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = BigInt::from(r.gen_range(-4i64..=4));
                m[(i, j)] = v.clone();
                m[(j, i)] = v;
            }
        }
        let mut p = IntMatrix::identity(n);
        for _ in 0..3 * n {
            let (i, j) = (r.gen_range(0..n), r.gen_range(0..n));
            if i != j {
                let mut e = IntMatrix::identity(n);
                e[(i, j)] = BigInt::from(r.gen_range(-2i64..=2));
                p = &p * &e;
            }
        }
        let q = &(&p.transpose() * &m) * &p;
        let (a, b) = (form_invariants(&m), form_invariants(&q));
        prop_assert_eq!(a.rank, b.rank);
        prop_assert_eq!(a.signature, b.signature);
        prop_assert!(a.signature.unsigned_abs() as usize <= a.rank);
    }

    #[test]
    fn intersection_form_is_switch_invariant(seed: u64, g in 1usize..=3, len in 2usize..9, k in 1i64..4) {
        let d = Diagram::untwisted(closed(seed, g, len));
        let s = switch(&d, k).unwrap();
        let (a, b) = (form_invariants(&intersection_form(d.circuit()).unwrap()), form_invariants(&intersection_form(s.circuit()).unwrap()));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn kirby_and_blf_laws(seed: u64, g in 1usize..=3, len in 2usize..8, section in proptest::option::of(-3i64..=3)) {
        let c = closed(seed, g, len);
        let k = emit_kirby(&c, section).unwrap();
        prop_assert_eq!(k.fold_handles.len(), len);
        prop_assert_eq!(k.last_handle, section);
        prop_assert_eq!(k.one_handles.len(), 2 * g);
        for h in &k.fold_handles {
            prop_assert_eq!(&h.framing, &fiber_framing(&h.class).unwrap());
        }
        let blf = to_blf(&c).unwrap();
        prop_assert_eq!(blf.lefschetz_cycles.len(), len);
        prop_assert_eq!(&blf.round_cycle, c.curve(0));
        for i in 0..len {
            let (x, y) = (c.curve(i), c.curve((i + 1) % len));
            prop_assert_eq!(&blf.lefschetz_cycles[i], &oracle_twist(x, 1, y));
        }
        // sliding lambda_i over the round cycle recovers g_(i+1) when i = 1
        let slid = blf.lefschetz_cycles[0].add_scaled(&-oracle_pair(c.curve(0), c.curve(1)), c.curve(0));
        prop_assert_eq!(&slid, c.curve(1));
    }

    #[test]
    fn blowup_round_trip(seed: u64, g in 1usize..=3, len in 2usize..8, pos in 0usize..8, up: bool) {
        let d = Diagram::untwisted(closed(seed, g, len));
        let pos = pos % len;
        let e: i8 = if up { 1 } else { -1 };
        let b = apply_blowup(&d, pos, e).unwrap();
        prop_assert_eq!(b.len(), len + 1);
        prop_assert!(validate(&b).ok);
        let det = detect(&b)
            .unwrap()
            .into_iter()
            .find(|x| x.position == pos && matches!(x.kind, DetectionKind::BlowUp { .. }));
        let det = det.expect("inserted blow-up is detected");
        let (back, delta) = contract(&b, &det).unwrap();
        prop_assert!(same_switching_orbit(&back, &d).unwrap());
        let m = Move::BlowUp { pos, e };
        prop_assert_eq!(delta, m.summand().delta());
        let (s0, r0) = sig_rank(d.circuit());
        let (s1, r1) = sig_rank(b.circuit());
        prop_assert_eq!(r1, r0 + 1);
        prop_assert_eq!(s1 - s0, -i64::from(e));
    }

    #[test]
    fn stabilization_round_trip(seed: u64, g in 1usize..=3, len in 2usize..8, pos in 0usize..8, k in -3i64..=3) {
        let d = Diagram::untwisted(closed(seed, g, len));
        let pos = pos % len;
        let s = apply_stabilization(&d, pos, k).unwrap();
        prop_assert_eq!(s.len(), len + 2);
        prop_assert!(validate(&s).ok);
        // at the closing pair the quadruple starts at the last curve
        let at = if pos + 1 == len { len + 1 } else { pos };
        let det = detect(&s)
            .unwrap()
            .into_iter()
            .find(|x| x.position == at && matches!(x.kind, DetectionKind::Stabilization { .. }));
        let det = det.expect("inserted stabilization is detected");
        let (back, delta) = contract(&s, &det).unwrap();
        prop_assert!(same_switching_orbit(&back, &d).unwrap());
        prop_assert_eq!(delta, Move::Stabilization { pos, k }.summand().delta());
        let (s0, r0) = sig_rank(d.circuit());
        let (s1, r1) = sig_rank(s.circuit());
        prop_assert_eq!(r1, r0 + 2);
        prop_assert_eq!(s1, s0);
    }

    #[test]
    fn hayano_surgery_is_valid(seed: u64, g in 1usize..=3, len in 2usize..7, pos in 0usize..7, k in -3i64..=3) {
        let mut r = rng(seed);
        let d = Diagram::untwisted(random_closed_circuit(&mut r, g, len, 3));
        let pos = pos % len;
        let dual = random_dual(&mut r, d.circuit().curve(pos), 2);
        let h = hayano_surgery(&d, pos, &dual, k).unwrap();
        prop_assert_eq!(h.len(), len + 2);
        prop_assert!(validate(&h).ok);
        let c = h.circuit();
        prop_assert!(c.curve(pos).eq_up_to_sign(c.curve(pos + 2)));
        prop_assert!(c.curve(pos + 1).eq_up_to_sign(&oracle_twist(d.circuit().curve(pos), k, &dual)));
    }

    #[test]
    fn substitutions_keep_the_surgered_action(seed: u64, g in 1usize..=3, len in 2usize..7, pos in 0usize..7, stab: bool, k in -3i64..=3) {
        let d = Diagram::untwisted(closed(seed, g, len));
        let pos = pos % len;
        let after = if stab {
            apply_stabilization(&d, pos, k).unwrap()
        } else {
            apply_blowup(&d, pos, if k >= 0 { 1 } else { -1 }).unwrap()
        };
        prop_assert_eq!(after.circuit().curve(0), d.circuit().curve(0));
        let (a, b) = (surgered_action(d.circuit()).unwrap(), surgered_action(after.circuit()).unwrap());
        prop_assert_eq!(&a.matrix, &b.matrix);
        prop_assert_eq!(verdict(d.circuit()).unwrap(), verdict(after.circuit()).unwrap());
    }

    #[test]
    fn closure_criteria_agree(seed: u64, len in 3usize..13) {
        let mut r = rng(seed);
        let c = random_open_circuit(&mut r, 1, len, 50);
        let direct = oracle_pair(c.curves().last().unwrap(), c.curve(0)).abs().is_one();
        prop_assert_eq!(closed_by_recursion(&c).unwrap(), direct);
    }

    #[test]
    fn classification_invariances(seed: u64, steps in 0usize..12, k in -6i64..=6, shuffle: u64) {
        let (c, sum) = generate(seed, steps);
        let d = Diagram::untwisted(c);
        let base = classify(&d).unwrap();
        prop_assert_eq!(&base.forms, &closed_forms(&sum));
        prop_assert!(base.trace.len() <= d.len());
        for w in base.trace.windows(2) {
            prop_assert!(w[1].length_after < w[0].length_after);
        }
        let switched = classify(&switch(&d, k).unwrap()).unwrap();
        prop_assert_eq!(&switched.forms, &base.forms);
        for s in [Strategy::PreferStabilization, Strategy::Shuffled(shuffle)] {
            prop_assert_eq!(&classify_with(&d, s).unwrap().forms, &base.forms);
        }
    }

    #[test]
    fn eigenvector_and_factor_laws(seed: u64, g in 1usize..=3, len in 2usize..9) {
        let c = closed(seed, g, len);
        let m = mu_tilde_matrix(&c).unwrap();
        let eps = oracle_pair(c.curves().last().unwrap(), c.curve(0));
        let sign = if len % 2 == 0 { eps } else { -eps };
        prop_assert_eq!(m.apply(c.curve(0)).unwrap(), c.curve(0).scale(&sign));
        let w = mu_tilde_word(&c).unwrap();
        prop_assert_eq!(w.len(), len);
        for (i, (axis, e)) in w.applied().enumerate() {
            prop_assert_eq!(*e, 1);
            let (x, y) = (c.curve(i), c.curve((i + 1) % len));
            prop_assert_eq!(axis, &oracle_twist(x, 1, y));
            // on the closing pair the sign of g_1 is eps, not +1
            let s = oracle_pair(x, y);
            prop_assert_eq!(oracle_twist(axis, 1, x), y.scale(&-s));
        }
    }

    #[test]
    fn kernel_laws(seed: u64, g in 1usize..=4, k in -3i64..=3) {
        let mut r = rng(seed);
        let a = random_class(&mut r, g, 4);
        let x = random_dual(&mut r, &a, 2);
        let t = quotient_action(&a, &twist_matrix(&a, k).unwrap()).unwrap();
        prop_assert!(t.is_identity());
        let dl = quotient_action(&a, &delta_twist(&a, &x).unwrap()).unwrap();
        prop_assert!(dl.is_identity());
        prop_assert_eq!(t.quotient_rank, 2 * g - 2);
        for b in &t.basis {
            prop_assert!(oracle_pair(&a, b).is_zero());
        }
    }

    #[test]
    fn surgered_action_preserves_pairing(seed: u64, g in 1usize..=3, len in 2usize..8) {
        let c = closed(seed, g, len);
        let a = surgered_action(&c).unwrap();
        prop_assert!(preserves_quotient_pairing(&a));
        prop_assert_eq!(a.quotient_rank, 2 * g - 2);
        for w in alternative_lifts(&c).unwrap() {
            let b = quotient_action(c.curve(0), &w.matrix()).unwrap();
            prop_assert_eq!(&b.matrix, &a.matrix);
        }
    }

    #[test]
    fn doubles_are_not_obstructed(seed: u64, g in 1usize..=3, len in 2usize..9) {
        let mut r = rng(seed);
        let c = random_open_circuit(&mut r, g, len, 3);
        prop_assert!(!verdict(&double(&c).unwrap()).unwrap().is_obstructed());
    }
}

#[test]
fn genus_two_obstruction_witness_exists() {
    let found = (0..200u64).find_map(|seed| {
        let c = closed(seed, 2, 4);
        match verdict(&c).unwrap() {
            v if v.is_obstructed() => Some((c, v)),
            _ => None,
        }
    });
    let (c, v) = found.expect("some genus-two circuit is obstructed");
    let a = surgered_action(&c).unwrap();
    assert!(!a.is_identity());
    assert!(v.to_string().contains("obstructed"));
}

#[test]
fn generator_moves_are_replayable() {
    for seed in 0..50 {
        let moves = random_moves(seed, 10);
        assert_eq!(generate_with(&moves).unwrap(), generate(seed, 10));
    }
}
