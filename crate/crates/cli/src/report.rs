//! JSON and text reports for every subcommand.

use num_bigint::BigInt;
use serde_json::{Map, Value};

use sdcalc_core::circuit::Move;
use sdcalc_core::form::Parity;
use sdcalc_core::genus1::{closed_forms, Classification};
use sdcalc_core::handles::{BlfData, KirbyData, LinkingMatrix};
use sdcalc_core::monodromy::{SurgeredAction, Verdict};
use sdcalc_core::{
    CanonicalForm, Detection, DetectionKind, Diagram, Exactness, FormInvariants, HClass, IntMatrix,
    SpMatrix, SumForm, TwistWord, ValidationReport,
};

use crate::file::{emit, int, int_row, to_json, DiagramFile, Format};

pub const HOMOLOGICAL_NOTICE: &str =
    "genus >= 2: homological shadow only; every result is a necessary condition, not a theorem";

pub const CLASSICAL_NOTE: &str =
    "normal forms use the classical relation X # S²×S² ≅ X # ℂP² # ℂP²-bar for non-spin X";

/// A finished report in both output formats.
pub struct Report {
    pub json: Value,
    pub text: String,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Sd => self.text.clone(),
        }
    }
}

fn exactness_name(e: Exactness) -> &'static str {
    match e {
        Exactness::Exact => "exact",
        Exactness::HomologicalOnly => "homological-only",
    }
}

struct Builder {
    json: Map<String, Value>,
    text: String,
}

impl Builder {
    fn new(command: &str, genus: usize) -> Self {
        let exactness = Exactness::for_genus(genus);
        let mut json = Map::new();
        json.insert("command".into(), command.into());
        json.insert("genus".into(), genus.into());
        json.insert("exactness".into(), exactness_name(exactness).into());
        let mut text = String::new();
        if exactness == Exactness::HomologicalOnly {
            json.insert("notice".into(), HOMOLOGICAL_NOTICE.into());
            text.push_str(&format!("NOTE: {HOMOLOGICAL_NOTICE}\n"));
        }
        Builder { json, text }
    }

    fn set(&mut self, key: &str, v: impl Into<Value>) {
        self.json.insert(key.into(), v.into());
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn finish(self) -> Report {
        Report {
            json: Value::Object(self.json),
            text: self.text,
        }
    }
}

fn class(x: &HClass) -> Value {
    int_row(x.coeffs())
}

fn matrix(m: &IntMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| int_row(m.row(i))).collect())
}

fn matrix_text(m: &IntMatrix, indent: &str) -> String {
    if m.rows() == 0 {
        return format!("{indent}(empty)\n");
    }
    let cells: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells
        .iter()
        .map(|r| {
            let r: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
            format!("{indent}[{}]\n", r.join(" "))
        })
        .collect()
}

fn invariants(f: &FormInvariants) -> Value {
    let mut m = Map::new();
    m.insert("rank".into(), f.rank.into());
    m.insert("signature".into(), f.signature.into());
    m.insert(
        "parity".into(),
        match f.parity {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
        .into(),
    );
    Value::Object(m)
}

fn invariants_text(f: &FormInvariants) -> String {
    let parity = match f.parity {
        Parity::Even => "even",
        Parity::Odd => "odd",
    };
    format!("rank {}, signature {}, {parity}", f.rank, f.signature)
}

fn sum_form(s: &SumForm) -> Value {
    let mut m = Map::new();
    m.insert("s2xs2".into(), s.l.into());
    m.insert("cp2".into(), s.m.into());
    m.insert("cp2bar".into(), s.n.into());
    Value::Object(m)
}

fn sum_text(s: &SumForm) -> String {
    let mut parts = Vec::new();
    for (count, name) in [(s.l, "S²×S²"), (s.m, "ℂP²"), (s.n, "ℂP²-bar")] {
        if count > 0 {
            parts.push(format!("{count} {name}"));
        }
    }
    if parts.is_empty() {
        "nothing".into()
    } else {
        parts.join(", ")
    }
}

fn canonical(f: &CanonicalForm) -> Value {
    let mut m = Map::new();
    m.insert("name".into(), f.to_string().into());
    match *f {
        CanonicalForm::Spin { t } => {
            m.insert("type".into(), "spin".into());
            m.insert("s2xs2".into(), t.into());
        }
        CanonicalForm::NonSpin { m: a, n } => {
            m.insert("type".into(), "non-spin".into());
            m.insert("cp2".into(), a.into());
            m.insert("cp2bar".into(), n.into());
        }
    }
    m.insert("signature".into(), f.signature().into());
    m.insert("euler".into(), f.euler().into());
    Value::Object(m)
}

pub fn detection(d: &Detection) -> Value {
    let mut m = Map::new();
    m.insert("position".into(), (d.position + 1).into());
    m.insert("exactness".into(), exactness_name(d.exactness).into());
    match &d.kind {
        DetectionKind::BlowUp { exponent, summand } => {
            m.insert("pattern".into(), "blow-up".into());
            m.insert("exponent".into(), (*exponent).into());
            m.insert("summand".into(), summand.name().into());
        }
        DetectionKind::Stabilization { k, summand } => {
            m.insert("pattern".into(), "stabilization".into());
            m.insert("k".into(), int(k));
            m.insert("summand".into(), summand.name().into());
        }
        DetectionKind::HayanoPattern { dual, k } => {
            m.insert("pattern".into(), "surgery".into());
            m.insert("dual".into(), class(dual));
            m.insert("k".into(), int(k));
        }
    }
    Value::Object(m)
}

fn diagram_block(b: &mut Builder, d: &Diagram) {
    let f = DiagramFile::from_diagram(d);
    b.set("diagram", to_json(&f));
    b.text.push_str(&emit(&f, Format::Sd));
}

pub fn validate(raw: &DiagramFile, r: &ValidationReport, extra: &[String]) -> Report {
    let mut b = Builder::new("validate", raw.genus);
    let ok = r.ok && extra.is_empty();
    b.set("ok", ok);
    b.set("oriented", r.oriented);
    b.set("closed", raw.closed);
    b.set("length", raw.curves.len());
    let mut failures: Vec<Value> = r
        .failures
        .iter()
        .map(|f| {
            let mut m = Map::new();
            m.insert("curve".into(), (f.index + 1).into());
            m.insert("message".into(), f.to_string().into());
            Value::Object(m)
        })
        .collect();
    for e in extra {
        let mut m = Map::new();
        m.insert("curve".into(), Value::Null);
        m.insert("message".into(), e.clone().into());
        failures.push(Value::Object(m));
    }
    b.set("failures", failures);
    if ok {
        b.line(format!(
            "valid {} circuit of length {} on the genus-{} surface ({})",
            if raw.closed { "closed" } else { "open" },
            raw.curves.len(),
            raw.genus,
            exactness_name(r.exactness)
        ));
        if !r.oriented {
            b.line("orientation convention not yet imposed; normalization flips signs only");
        }
    } else {
        b.line("invalid:");
        for f in &r.failures {
            b.line(format!("  {f}"));
        }
        for e in extra {
            b.line(format!("  {e}"));
        }
    }
    b.finish()
}

pub struct InfoData<'a> {
    pub diagram: &'a Diagram,
    pub framings: Vec<BigInt>,
    pub linking: &'a LinkingMatrix,
    pub linking_invariants: FormInvariants,
    pub form: &'a IntMatrix,
    pub form_invariants: FormInvariants,
    pub euler: (i64, Option<i64>),
}

pub fn info(i: &InfoData) -> Report {
    let d = i.diagram;
    let mut b = Builder::new("info", d.genus());
    b.set("length", d.len());
    b.set("closed", d.is_closed());
    b.set("twisted", d.is_twisted());
    b.set("closing_pairing", d.closing_pairing().as_ref().map_or(Value::Null, int));
    b.set("framings", int_row(&i.framings));
    b.set("linking_matrix", matrix(i.linking.matrix()));
    b.set("linking_invariants", invariants(&i.linking_invariants));
    b.set("intersection_form", matrix(i.form));
    b.set("intersection_invariants", invariants(&i.form_invariants));
    let status = if d.genus() == 1 { "verified for genus 1" } else { "conjectural" };
    let mut sig = Map::new();
    sig.insert("value".into(), i.form_invariants.signature.into());
    sig.insert("status".into(), status.into());
    b.set("signature", Value::Object(sig));
    let mut e = Map::new();
    e.insert("z".into(), i.euler.0.into());
    e.insert("x".into(), i.euler.1.map_or(Value::Null, Value::from));
    b.set("euler", Value::Object(e));

    b.line(format!(
        "{} {}circuit of length {}, genus {} ({})",
        if d.is_closed() { "closed" } else { "open" },
        if d.is_twisted() { "twisted " } else { "" },
        d.len(),
        d.genus(),
        exactness_name(Exactness::for_genus(d.genus()))
    ));
    if let Some(p) = d.closing_pairing() {
        b.line(format!("closing pairing: {p}"));
    }
    let fr: Vec<String> = i.framings.iter().map(ToString::to_string).collect();
    b.line(format!("fiber framings: ({})", fr.join(", ")));
    b.line("linking matrix:");
    b.text.push_str(&matrix_text(i.linking.matrix(), "  "));
    b.line(format!("  {}", invariants_text(&i.linking_invariants)));
    b.line("intersection form on the relations among the fold curves:");
    b.text.push_str(&matrix_text(i.form, "  "));
    b.line(format!("  {}", invariants_text(&i.form_invariants)));
    b.line(format!("signature: {} ({status})", i.form_invariants.signature));
    match i.euler.1 {
        Some(x) => b.line(format!("χ(Z) = {}, χ(X) = {x}", i.euler.0)),
        None => b.line(format!("χ(Z) = {}", i.euler.0)),
    }
    b.finish()
}

pub fn classify(d: &Diagram, c: &Classification) -> Report {
    let mut b = Builder::new("classify", d.genus());
    b.set("forms", c.forms.iter().map(canonical).collect::<Vec<_>>());
    b.set("sum", sum_form(&c.sum));
    b.set("signature", c.signature);
    b.set("euler", c.euler);
    b.set("note", CLASSICAL_NOTE);
    let trace: Vec<Value> = c
        .trace
        .iter()
        .map(|t| {
            let mut m = Map::new();
            m.insert("step".into(), t.step.into());
            m.insert("detection".into(), detection(&t.detection));
            m.insert("delta".into(), sum_form(&t.delta));
            m.insert("length_after".into(), t.length_after.into());
            Value::Object(m)
        })
        .collect();
    b.set("trace", trace);

    let names: Vec<String> = c.forms.iter().map(ToString::to_string).collect();
    if names.len() == 1 {
        b.line(format!("total space: {}", names[0]));
    } else {
        b.line(format!("total space: {} or {} (the two closures differ)", names[0], names[1]));
    }
    b.line(format!("signature {}, χ = {}", c.signature, c.euler));
    b.line(format!("split off before closing: {}", sum_text(&c.sum)));
    if c.trace.is_empty() {
        b.line("reduction: already of length 2");
    } else {
        b.line("reduction:");
        for t in &c.trace {
            b.line(format!(
                "  {}. {} -> length {}",
                t.step, t.detection, t.length_after
            ));
        }
    }
    b.line(format!("note: {CLASSICAL_NOTE}"));
    b.finish()
}

pub fn detect(d: &Diagram, dets: &[Detection]) -> Report {
    let mut b = Builder::new("detect", d.genus());
    b.set("detections", dets.iter().map(detection).collect::<Vec<_>>());
    if dets.is_empty() {
        b.line("no patterns found");
    }
    for det in dets {
        b.line(det.to_string());
    }
    b.finish()
}

/// A diagram-producing command; the text form is a loadable `.sd` file.
pub fn diagram(command: &str, d: &Diagram, notes: &[(String, Value)]) -> Report {
    let mut b = Builder::new(command, d.genus());
    for (k, v) in notes {
        let line = match v {
            Value::String(s) => format!("# {k}: {s}"),
            other => format!("# {k}: {other}"),
        };
        b.text.push_str(&line);
        b.text.push('\n');
        b.set(k, v.clone());
    }
    if b.text.starts_with("NOTE") {
        b.text = format!("# {}", b.text);
    }
    diagram_block(&mut b, d);
    b.finish()
}

fn word(w: &TwistWord) -> Value {
    w.factors()
        .map(|(axis, e)| {
            let mut m = Map::new();
            m.insert("axis".into(), class(axis));
            m.insert("exponent".into(), (*e).into());
            Value::Object(m)
        })
        .collect::<Vec<_>>()
        .into()
}

fn action(a: &SurgeredAction) -> Value {
    let mut m = Map::new();
    m.insert("base".into(), class(&a.base));
    m.insert("quotient_rank".into(), a.quotient_rank.into());
    m.insert("basis".into(), a.basis.iter().map(class).collect::<Vec<_>>().into());
    m.insert("matrix".into(), matrix(&a.matrix));
    Value::Object(m)
}

pub fn monodromy(d: &Diagram, w: &TwistWord, mu: &SpMatrix, a: &SurgeredAction, v: &Verdict) -> Report {
    let mut b = Builder::new("monodromy", d.genus());
    b.set("mu_tilde_word", word(w));
    b.set("mu_tilde", matrix(mu.matrix()));
    b.set("surgered_action", action(a));
    let mut vm = Map::new();
    match v {
        Verdict::HomologicallyTrivial => {
            vm.insert("status".into(), "not-obstructed".into());
        }
        Verdict::ObstructedOnHomology { witness } => {
            vm.insert("status".into(), "obstructed".into());
            vm.insert("witness".into(), class(witness));
        }
    }
    vm.insert("message".into(), v.to_string().into());
    b.set("verdict", Value::Object(vm));

    let axes: Vec<String> = w.factors().map(|(x, e)| format!("τ{x}^{e}")).collect();
    b.line(format!("μ̃ = {}", axes.join(" ∘ ")));
    b.text.push_str(&matrix_text(mu.matrix(), "  "));
    b.line(format!(
        "action on γ₁^⊥/⟨γ₁⟩ (γ₁ = {}, rank {}):",
        a.base, a.quotient_rank
    ));
    if !a.basis.is_empty() {
        let basis: Vec<String> = a.basis.iter().map(ToString::to_string).collect();
        b.line(format!("  basis {}", basis.join(", ")));
    }
    b.text.push_str(&matrix_text(&a.matrix, "  "));
    b.line(format!("verdict: {v}"));
    b.finish()
}

pub fn blf(d: &Diagram, data: &BlfData) -> Report {
    let mut b = Builder::new("blf", d.genus());
    let cycles: Vec<Value> = data
        .lefschetz_cycles
        .iter()
        .map(|x| {
            let mut m = Map::new();
            m.insert("class".into(), class(x));
            m.insert("framing".into(), BlfData::LEFSCHETZ_FRAMING.into());
            Value::Object(m)
        })
        .collect();
    b.set("lefschetz_cycles", cycles);
    let mut r = Map::new();
    r.insert("class".into(), class(&data.round_cycle));
    r.insert("framing".into(), BlfData::ROUND_FRAMING.into());
    b.set("round_cycle", Value::Object(r));
    b.line(format!("round cycle ρ = {} (framing {})", data.round_cycle, BlfData::ROUND_FRAMING));
    for (i, x) in data.lefschetz_cycles.iter().enumerate() {
        b.line(format!("λ{} = {x} (framing {})", i + 1, BlfData::LEFSCHETZ_FRAMING));
    }
    b.finish()
}

pub fn kirby(k: &KirbyData) -> Report {
    let mut b = Builder::new("kirby", k.genus);
    b.set("one_handles", k.one_handles.clone());
    let mut fiber = Map::new();
    fiber.insert("framing".into(), k.fiber_framing.into());
    b.set("fiber_handle", Value::Object(fiber));
    let folds: Vec<Value> = k
        .fold_handles
        .iter()
        .map(|h| {
            let mut m = Map::new();
            m.insert("class".into(), class(&h.class));
            m.insert("framing".into(), int(&h.framing));
            m.insert("position".into(), (h.position + 1).into());
            Value::Object(m)
        })
        .collect();
    b.set("fold_handles", folds);
    b.set(
        "last_handle",
        k.last_handle.map_or(Value::Null, |s| {
            let mut m = Map::new();
            m.insert("framing".into(), s.into());
            m.insert("attached".into(), "meridian of the fiber handle".into());
            Value::Object(m)
        }),
    );
    b.set("linking_matrix", matrix(k.linking.matrix()));
    b.set("handle_counts", k.handle_counts().to_vec());
    b.text.push_str(&k.to_string());
    if !b.text.ends_with('\n') {
        b.text.push('\n');
    }
    b.finish()
}

pub fn generate(seed: u64, steps: usize, d: &Diagram, moves: &[Move], sum: &SumForm) -> Report {
    let forms = closed_forms(sum);
    let mut b = Builder::new("generate", d.genus());
    b.set("seed", seed);
    b.set("steps", steps);
    let mv: Vec<Value> = moves
        .iter()
        .map(|m| {
            let mut o = Map::new();
            match *m {
                Move::BlowUp { pos, e } => {
                    o.insert("move".into(), "blow-up".into());
                    o.insert("position".into(), (pos + 1).into());
                    o.insert("exponent".into(), e.into());
                }
                Move::Stabilization { pos, k } => {
                    o.insert("move".into(), "stabilization".into());
                    o.insert("position".into(), (pos + 1).into());
                    o.insert("k".into(), k.into());
                }
            }
            o.insert("summand".into(), m.summand().name().into());
            Value::Object(o)
        })
        .collect();
    b.set("moves", mv);
    let mut exp = Map::new();
    exp.insert("sum".into(), sum_form(sum));
    exp.insert("forms".into(), forms.iter().map(canonical).collect::<Vec<_>>().into());
    b.set("expected", Value::Object(exp));
    b.line(format!("# generated with seed {seed}, {steps} steps"));
    b.line(format!("# split off: {}", sum_text(sum)));
    let names: Vec<String> = forms.iter().map(ToString::to_string).collect();
    b.line(format!("# expected classification: {}", names.join(" or ")));
    diagram_block(&mut b, d);
    b.finish()
}
