//! Command-line parsing and dispatch.

use std::ffi::OsString;
use std::fs;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::Value;

use sdcalc_core::circuit::{double, generate_with, random_moves, switch, validate};
use sdcalc_core::form::form_invariants;
use sdcalc_core::genus1::classify;
use sdcalc_core::handles::{
    emit_kirby, euler_characteristics, fiber_framing, intersection_form, linking_matrix, to_blf,
};
use sdcalc_core::monodromy::{mu_tilde_matrix_of, mu_tilde_word, surgered_action, verdict};
use sdcalc_core::subst::{apply_blowup, apply_stabilization, detect, hayano_framing, hayano_surgery};
use sdcalc_core::{Circuit, Diagram, Error, HClass};

use crate::file::{self, DiagramFile, Format, ParseError};
use crate::report::{self, Report};

#[derive(Parser, Debug)]
#[command(name = "sdcalc", version, about = "Surface diagram calculus on first homology")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Write the report here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Op {
    Blowup,
    Stab,
    Hayano,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the circuit axioms without normalizing.
    Validate { file: String },
    /// Framings, linking matrix, intersection form and Euler characteristics.
    Info { file: String },
    /// Classify the total space of a closed genus-1 diagram.
    Classify { file: String },
    /// List blow-up, stabilization and surgery patterns.
    Detect { file: String },
    /// Insert a substitution pattern at a 1-based position.
    Substitute {
        file: String,
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long)]
        pos: usize,
        /// Blow-up exponent, +1 or -1.
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        exp: i8,
        /// Twist power for stabilization and surgery.
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        k: i64,
        /// Dual class for surgery, comma separated, e.g. `--dual=0,1`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        dual: Option<Vec<BigInt>>,
    },
    /// Apply the switching move K times.
    Switch {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// The double of a circuit.
    Double { file: String },
    /// The lift of the monodromy, its action after surgery and the verdict.
    Monodromy { file: String },
    /// Vanishing cycles of the associated broken Lefschetz fibration.
    Blf { file: String },
    /// Handle data, optionally closing off a section of square K.
    Kirby {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        section: Option<i64>,
    },
    /// A random closed genus-1 diagram with known classification.
    Generate {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        steps: usize,
    },
}

/// A failed run: message for the error stream and exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        invalid(e.to_string())
    }
}

/// Errors raised by an operation on an already valid diagram are misuse.
fn precondition(e: Error) -> Failure {
    match e {
        Error::InvariantViolation(_) => invalid(e.to_string()),
        _ => usage(e.to_string()),
    }
}

fn read(path: &str) -> Result<DiagramFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?;
    let f = file::parse(&text, Format::detect(path, &text)).map_err(|e| invalid(format!("{path}: {e}")))?;
    Ok(f)
}

fn load(path: &str) -> Result<Diagram, Failure> {
    read(path)?
        .to_diagram()
        .map_err(|e| invalid(format!("{path}: {e}")))
}

fn untwisted(d: &Diagram) -> Result<&Circuit, Failure> {
    if d.is_twisted() {
        return Err(precondition(Error::Twisted));
    }
    Ok(d.circuit())
}

fn position(pos: usize, d: &Diagram) -> Result<usize, Failure> {
    if pos == 0 || pos > d.len() {
        return Err(usage(format!("--pos must be between 1 and {}", d.len())));
    }
    Ok(pos - 1)
}

fn execute(cmd: &Command) -> Result<(Report, i32), Failure> {
    let ok = |r: Report| Ok((r, 0));
    match cmd {
        Command::Validate { file } => {
            let raw = read(file)?;
            let circuit = Circuit::unchecked(raw.classes(), raw.closed).map_err(|e| invalid(e.to_string()))?;
            let mut extra = Vec::new();
            let d = match raw.switch_matrix() {
                None => Diagram::untwisted(circuit),
                Some(Ok(mu)) => Diagram::twisted(circuit.clone(), mu).unwrap_or_else(|e| {
                    extra.push(e.to_string());
                    Diagram::untwisted(circuit)
                }),
                Some(Err(e)) => {
                    extra.push(e.to_string());
                    Diagram::untwisted(circuit)
                }
            };
            let r = validate(&d);
            let code = if r.ok && extra.is_empty() { 0 } else { 1 };
            Ok((report::validate(&raw, &r, &extra), code))
        }
        Command::Info { file } => {
            let d = load(file)?;
            let c = d.circuit();
            let framings = c
                .curves()
                .iter()
                .map(fiber_framing)
                .collect::<Result<Vec<_>, _>>()
                .map_err(precondition)?;
            let l = linking_matrix(c).map_err(precondition)?;
            let q = intersection_form(c).map_err(precondition)?;
            ok(report::info(&report::InfoData {
                diagram: &d,
                framings,
                linking: &l,
                linking_invariants: l.invariants(),
                form: &q,
                form_invariants: form_invariants(&q),
                euler: euler_characteristics(c),
            }))
        }
        Command::Classify { file } => {
            let d = load(file)?;
            let c = classify(&d).map_err(precondition)?;
            ok(report::classify(&d, &c))
        }
        Command::Detect { file } => {
            let d = load(file)?;
            let dets = detect(&d).map_err(precondition)?;
            ok(report::detect(&d, &dets))
        }
        Command::Substitute {
            file,
            op,
            pos,
            exp,
            k,
            dual,
        } => {
            let d = load(file)?;
            let p = position(*pos, &d)?;
            let (out, notes) = match op {
                Op::Blowup => {
                    let out = apply_blowup(&d, p, *exp).map_err(precondition)?;
                    let summand = if *exp > 0 { "CP2-bar" } else { "CP2" };
                    (out, vec![("summand".to_string(), Value::from(summand))])
                }
                Op::Stab => {
                    let out = apply_stabilization(&d, p, *k).map_err(precondition)?;
                    let summand = if k % 2 == 0 { "S2xS2" } else { "CP2#CP2-bar" };
                    (out, vec![("summand".to_string(), Value::from(summand))])
                }
                Op::Hayano => {
                    let Some(v) = dual else {
                        return Err(usage("--op hayano needs --dual"));
                    };
                    let v = HClass::new(v.clone()).map_err(|e| usage(e.to_string()))?;
                    let out = hayano_surgery(&d, p, &v, *k).map_err(precondition)?;
                    (out, vec![("framing".to_string(), Value::from(hayano_framing(*k)))])
                }
            };
            ok(report::diagram("substitute", &out, &notes))
        }
        Command::Switch { file, k } => {
            let d = load(file)?;
            let out = switch(&d, *k).map_err(precondition)?;
            ok(report::diagram("switch", &out, &[]))
        }
        Command::Double { file } => {
            let d = load(file)?;
            let out = double(untwisted(&d)?).map_err(precondition)?;
            ok(report::diagram("double", &Diagram::untwisted(out), &[]))
        }
        Command::Monodromy { file } => {
            let d = load(file)?;
            let c = untwisted(&d)?;
            let w = mu_tilde_word(c).map_err(precondition)?;
            let mu = mu_tilde_matrix_of(&d).map_err(precondition)?;
            let a = surgered_action(c).map_err(precondition)?;
            let v = verdict(c).map_err(precondition)?;
            ok(report::monodromy(&d, &w, &mu, &a, &v))
        }
        Command::Blf { file } => {
            let d = load(file)?;
            let data = to_blf(untwisted(&d)?).map_err(precondition)?;
            ok(report::blf(&d, &data))
        }
        Command::Kirby { file, section } => {
            let d = load(file)?;
            let k = emit_kirby(d.circuit(), *section).map_err(precondition)?;
            ok(report::kirby(&k))
        }
        Command::Generate { seed, steps } => {
            let moves = random_moves(*seed, *steps);
            let (c, sum) = generate_with(&moves).map_err(precondition)?;
            ok(report::generate(*seed, *steps, &Diagram::untwisted(c), &moves, &sum))
        }
    }
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let format = match cli.format {
        OutputFormat::Json => Format::Json,
        OutputFormat::Text => Format::Sd,
    };
    let (report, code) = match execute(&cli.command) {
        Ok(r) => r,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            return f.code;
        }
    };
    let rendered = report.render(format);
    let written = match &cli.out {
        Some(path) => fs::write(path, rendered.as_bytes()).map_err(|e| format!("{path}: {e}")),
        None => stdout.write_all(rendered.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return 2;
    }
    code
}
