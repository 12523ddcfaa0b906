//! The `flawless` command line: subcommands wrapping the library pipeline
//! with deterministic text output and conventional exit codes — 0 for
//! success, 1 for a failed verification or mismatch, 2 for usage and
//! input errors.

use crate::analysis::{galligo_inequalities, is_flawless, verify_regular_sequence, AnalysisError};
use crate::arith::is_prime;
use crate::factor::factor_mod_p;
use crate::galois::certify_symmetric_galois;
use crate::groebner::{buchberger_reduced, homogenize_ideal};
use crate::hilbert::{h_vector, hilbert_numerator, lt_ideal, order_ideal, reduce_poincare};
use crate::parse::{parse_document, parse_unipoly, SourceDocument};
use crate::presets::{preset_by_name, reproduce, ReproOutcome, ReproPreset, PRESETS};
use crate::render::{
    render_certificate, render_cm, render_factor_list, render_flawless, render_hvector,
    render_ideal_block, render_monomial_list, render_order_ideal, render_ring, render_series,
    render_unipoly_p, render_upp,
};
use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "flawless",
    version,
    about = "Exact commutative algebra: factorization over F_p, symmetric Galois certificates, Gröbner bases over Q, Poincaré series, and h-vector diagnostics"
)]
struct Cli {
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Factor a one-variable polynomial over a prime field.
    Factor {
        /// Prime modulus.
        #[arg(long)]
        modulus: u64,
        /// Polynomial text, e.g. "X^18 - X - 1".
        #[arg(long)]
        poly: String,
        /// Seed for the randomized splitting (the output is seed-independent).
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Certify that a monic integer polynomial has full symmetric Galois group.
    GaloisCert {
        /// Polynomial text, e.g. "X^18 - X - 1".
        #[arg(long)]
        poly: String,
        /// Two witness primes "p1,p2"; their roles are assigned by shape.
        #[arg(long)]
        primes: Option<String>,
        /// Prime search bound used when witnesses must be found or extended.
        #[arg(long, default_value_t = crate::analysis::DEFAULT_PRIME_BOUND)]
        bound: u64,
    },
    /// Reduced Gröbner basis of the first ideal in a document.
    Groebner { file: PathBuf },
    /// Homogenize the first ideal by a new least variable.
    Homogenize {
        file: PathBuf,
        /// Name of the homogenizing variable.
        #[arg(long, default_value = "W")]
        var: String,
    },
    /// Poincaré series, h-vector, dimension, and multiplicity.
    Hseries { file: PathBuf },
    /// h-vector inequality diagnostics and the order ideal, if Artinian.
    Analyze { file: PathBuf },
    /// Verify that a comma-separated variable sequence is regular.
    VerifyCm {
        file: PathBuf,
        /// Sequence such as "W,T", checked left to right.
        #[arg(long)]
        sequence: String,
    },
    /// Re-derive a named construction and compare against pinned values.
    Reproduce {
        /// Preset name (hibi18, hibi22, hibi26, hibi30) or "all".
        preset: String,
    },
}

/// What one invocation produced; the caller decides how to emit it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

fn usage_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn read_document(path: &Path) -> Result<SourceDocument, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage_error(format!("cannot read {}: {}", path.display(), e)))?;
    parse_document(&text).map_err(|e| usage_error(format!("{}: {}", path.display(), e)))
}

fn run(cmd: Cmd) -> Result<(i32, String), Failure> {
    match cmd {
        Cmd::Factor {
            modulus,
            poly,
            seed,
        } => {
            if !is_prime(modulus) {
                return Err(usage_error("modulus must be prime"));
            }
            let f = parse_unipoly(&poly).map_err(|e| usage_error(format!("--poly: {}", e)))?;
            let fp = f
                .reduce_mod_p(modulus)
                .map_err(|e| usage_error(format!("--poly: {}", e)))?;
            if fp.is_zero() {
                return Err(usage_error("--poly: the polynomial is zero modulo p"));
            }
            let factors = factor_mod_p(&fp, seed);
            let mut out = format!("polynomial: {}\n", render_unipoly_p(&fp, "X"));
            out.push_str(&render_factor_list(&factors, "X"));
            Ok((0, out))
        }
        Cmd::GaloisCert {
            poly,
            primes,
            bound,
        } => {
            let f = parse_unipoly(&poly).map_err(|e| usage_error(format!("--poly: {}", e)))?;
            let pair = match primes {
                None => None,
                Some(s) => {
                    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
                    if parts.len() != 2 {
                        return Err(usage_error("--primes expects two primes like \"3,5\""));
                    }
                    let a: u64 = parts[0]
                        .parse()
                        .map_err(|_| usage_error(format!("--primes: bad prime '{}'", parts[0])))?;
                    let b: u64 = parts[1]
                        .parse()
                        .map_err(|_| usage_error(format!("--primes: bad prime '{}'", parts[1])))?;
                    Some((a, b))
                }
            };
            match certify_symmetric_galois(&f, pair, bound) {
                Ok(cert) => Ok((0, format!("verdict: certified\n{}", render_certificate(&cert)))),
                Err(e) => Ok((1, format!("verdict: not certified\nreason: {}\n", e))),
            }
        }
        Cmd::Groebner { file } => {
            let doc = read_document(&file)?;
            let (name, ideal) = doc.first_ideal();
            let gb = buchberger_reduced(ideal);
            Ok((
                0,
                format!(
                    "{}\n{}",
                    render_ring(&gb.ring),
                    render_ideal_block(name, &gb.ideal())
                ),
            ))
        }
        Cmd::Homogenize { file, var } => {
            let doc = read_document(&file)?;
            let (name, ideal) = doc.first_ideal();
            let gb = homogenize_ideal(ideal, &var).map_err(|e| usage_error(e.to_string()))?;
            Ok((
                0,
                format!(
                    "{}\n{}",
                    render_ring(&gb.ring),
                    render_ideal_block(name, &gb.ideal())
                ),
            ))
        }
        Cmd::Hseries { file } => {
            let doc = read_document(&file)?;
            let gb = buchberger_reduced(doc.first_ideal().1);
            let lt = lt_ideal(&gb);
            let series = reduce_poincare(&hilbert_numerator(&lt), gb.ring.nvars())
                .map_err(|e| usage_error(e.to_string()))?;
            let mut out = format!(
                "leading terms: {}\n",
                render_monomial_list(lt.gens(), &gb.ring)
            );
            out.push_str(&format!("poincare series: {}\n", render_series(&series)));
            out.push_str(&format!("h-vector: {}\n", render_hvector(&h_vector(&series))));
            out.push_str(&format!("dimension: {}\n", series.dimension()));
            out.push_str(&format!("multiplicity: {}\n", series.multiplicity()));
            Ok((0, out))
        }
        Cmd::Analyze { file } => {
            let doc = read_document(&file)?;
            let gb = buchberger_reduced(doc.first_ideal().1);
            let lt = lt_ideal(&gb);
            let series = reduce_poincare(&hilbert_numerator(&lt), gb.ring.nvars())
                .map_err(|e| usage_error(e.to_string()))?;
            let h = h_vector(&series);
            let mut out = format!("h-vector: {}\n", render_hvector(&h));
            out.push_str(&format!("dimension: {}\n", series.dimension()));
            out.push_str(&format!("multiplicity: {}\n", series.multiplicity()));
            out.push_str(&render_flawless(&is_flawless(&h)));
            out.push_str(&render_upp(&galligo_inequalities(&h)));
            match order_ideal(&lt) {
                Ok(oi) => {
                    out.push_str("order ideal:\n");
                    out.push_str(&render_order_ideal(&oi, &gb.ring));
                }
                Err(_) => out.push_str("order ideal: not artinian\n"),
            }
            Ok((0, out))
        }
        Cmd::VerifyCm { file, sequence } => {
            let doc = read_document(&file)?;
            let seq: Vec<&str> = sequence
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .collect();
            if seq.is_empty() {
                return Err(usage_error("--sequence expects comma-separated variable names"));
            }
            let cm = verify_regular_sequence(doc.first_ideal().1, &seq).map_err(|e| match e {
                AnalysisError::UnknownVariable(_) => usage_error(e.to_string()),
                other => usage_error(other.to_string()),
            })?;
            let mut out = render_cm(&cm);
            out.push_str("final ideal:\n");
            out.push_str(&render_ideal_block("A", &cm.final_ideal));
            Ok((if cm.verified { 0 } else { 1 }, out))
        }
        Cmd::Reproduce { preset } => {
            let targets: Vec<&'static ReproPreset> = if preset == "all" {
                PRESETS.iter().collect()
            } else {
                let names: Vec<&str> = PRESETS.iter().map(|p| p.name).collect();
                vec![preset_by_name(&preset).ok_or_else(|| {
                    usage_error(format!(
                        "unknown preset '{}' (expected one of {}, or all)",
                        preset,
                        names.join(", ")
                    ))
                })?]
            };
            // Presets are independent; rebuild them concurrently.
            let outcomes: Vec<Result<ReproOutcome, AnalysisError>> = std::thread::scope(|s| {
                let handles: Vec<_> = targets
                    .iter()
                    .map(|&p| s.spawn(move || reproduce(p)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("reproduction thread panicked"))
                    .collect()
            });
            let mut out = String::new();
            let mut all_ok = true;
            for oc in outcomes {
                let oc = oc.map_err(|e| usage_error(e.to_string()))?;
                out.push_str(&format!("preset: {}\n", oc.name));
                for c in &oc.checks {
                    if c.ok {
                        out.push_str(&format!("  check {}: ok\n", c.key));
                    } else {
                        all_ok = false;
                        out.push_str(&format!(
                            "  check {}: MISMATCH\n    expected: {}\n    actual: {}\n",
                            c.key, c.expected, c.actual
                        ));
                    }
                }
                out.push_str(&format!(
                    "  result: {}\n",
                    if oc.ok { "ok" } else { "mismatch" }
                ));
            }
            out.push_str(&format!(
                "result: {}\n",
                if all_ok { "ok" } else { "mismatch" }
            ));
            Ok((if all_ok { 0 } else { 1 }, out))
        }
    }
}

/// Parses argv (program name included) and runs the selected command.
pub fn cli_dispatch(argv: &[String]) -> CliOutcome {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CliOutcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                CliOutcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    match run(cli.cmd) {
        Ok((code, text)) => match cli.out {
            None => CliOutcome {
                code,
                stdout: text,
                stderr: String::new(),
            },
            Some(path) => match std::fs::write(&path, &text) {
                Ok(()) => CliOutcome {
                    code,
                    stdout: String::new(),
                    stderr: String::new(),
                },
                Err(e) => CliOutcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: format!("cannot write {}: {}\n", path.display(), e),
                },
            },
        },
        Err(f) => CliOutcome {
            code: f.code,
            stdout: String::new(),
            stderr: format!("{}\n", f.message),
        },
    }
}
