//! Command-line front end: kernel, fusion and idempotent construction,
//! verification suites, and reproduction of the worked example matrices.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::process::ExitCode;
use ybfuse::algebra::{e_q_tableau, e_tableau, nonstandard_scan_n3, ScanOutcome};
use ybfuse::emit;
use ybfuse::error::{Error, Result};
use ybfuse::exact::{format_rational, parse_rational, Rational};
use ybfuse::fusion::restrict_fused;
use ybfuse::kernels::{r_matrix, Convention, KernelKind, KernelSpec};
use ybfuse::report::Report;
use ybfuse::suites;

#[derive(Parser)]
#[command(
    name = "ybfuse",
    about = "Exact construction and verification of fused Yang-Baxter solutions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmitFormat {
    Json,
    Pretty,
}

#[derive(Args)]
struct KernelArgs {
    /// Kernel kind
    #[arg(long = "kind", value_parser = ["yang", "super-yang", "hecke", "super-hecke"])]
    kind: String,
    /// Even local dimension parameter
    #[arg(long = "N", default_value_t = 2)]
    n: usize,
    /// Odd local dimension parameter (graded kinds only)
    #[arg(long = "M", default_value_t = 0)]
    m: usize,
    /// Deformation parameter, a rational other than 0, 1, -1
    #[arg(long = "q", default_value = "2")]
    q: String,
}

impl KernelArgs {
    fn build(&self) -> Result<KernelSpec> {
        let kind = KernelKind::parse(&self.kind)?;
        let q = if kind.is_hecke() {
            Some(parse_rational(&self.q)?)
        } else {
            None
        };
        let m = if kind.is_super() { self.m } else { 0 };
        KernelSpec::new(kind, self.n, m, q)
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Output format; the YBFUSE_EMIT environment variable overrides the
    /// default, an explicit flag wins over both
    #[arg(long)]
    emit: Option<EmitFormat>,
    /// Write the emitted artifact to a file instead of standard output
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

impl OutputArgs {
    fn format(&self) -> EmitFormat {
        if let Some(f) = self.emit {
            return f;
        }
        match std::env::var("YBFUSE_EMIT").ok().as_deref() {
            Some("json") => EmitFormat::Json,
            Some("pretty") => EmitFormat::Pretty,
            _ => EmitFormat::Pretty,
        }
    }

    fn write(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Emit the base solution of a kernel as a matrix over rational functions
    Kernel {
        #[command(flatten)]
        kernel: KernelArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Emit the restricted fused operator for a pair of standard tableaux
    Fuse {
        /// Kernel kind
        #[arg(long = "kernel", value_parser = ["yang", "super-yang", "hecke", "super-hecke"])]
        kernel: String,
        #[arg(long = "N", default_value_t = 2)]
        n: usize,
        #[arg(long = "M", default_value_t = 0)]
        m: usize,
        #[arg(long = "q", default_value = "2")]
        q: String,
        /// First tableau as a JSON list of rows, e.g. '[[1,2]]'
        #[arg(long)]
        tableau: String,
        /// Second tableau
        #[arg(long)]
        tableau2: String,
        /// Optional basis file: JSON {"first": matrix, "second": matrix} in
        /// the rational matrix encoding, columns spanning each subspace
        #[arg(long)]
        basis: Option<std::path::PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Emit the primitive idempotent attached to a standard tableau
    Idempotent {
        /// Algebra: the symmetric group or its deformation
        #[arg(long, value_parser = ["sym", "hecke"])]
        group: String,
        /// Symbol count; must match the tableau size when given
        #[arg(long = "n")]
        n: Option<usize>,
        #[arg(long = "q", default_value = "2")]
        q: String,
        #[arg(long)]
        tableau: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Scan candidate evaluations of the three-letter fusion function
    Scan {
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// JSON file with a list of candidate pairs [["1/2","3"], ..]
        #[arg(long)]
        pairs: Option<std::path::PathBuf>,
        /// Seed for the bundled off-list sample when no file is given
        #[arg(long, default_value_t = suites::DEFAULT_SCAN_SEED)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a named verification suite
    Verify {
        /// One of: base-ybe, fused-ybe, ybe, unitarity, invariance,
        /// equivalence, schur-weyl, idempotents, nonstandard, orders
        suite: String,
        #[arg(long = "kind")]
        kind: Option<String>,
        #[arg(long = "N", default_value_t = 2)]
        n: usize,
        #[arg(long = "M", default_value_t = 0)]
        m: usize,
        #[arg(long = "q", default_value = "2")]
        q: String,
        /// Largest symbol size in sweeps
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        #[arg(long, default_value_t = suites::DEFAULT_SCAN_SEED)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Rebuild a worked example matrix and diff it against its reference
    Reproduce {
        /// One of: ex-fus1, ex-fus2, mat-Sn, ex-Sn-21a, ex-Ra, ex-Ra-s, mat-Hn
        id: String,
        #[arg(long = "q", default_value = "2")]
        q: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn kernel_of(kind: &str, n: usize, m: usize, q: &str) -> Result<KernelSpec> {
    KernelArgs {
        kind: kind.to_string(),
        n,
        m,
        q: q.to_string(),
    }
    .build()
}

fn spectral_var(k: &KernelSpec) -> &'static str {
    match k.convention() {
        Convention::Additive => "u",
        Convention::Multiplicative => "a",
    }
}

fn emit_report(report: &Report, output: &OutputArgs) -> Result<bool> {
    let text = match output.format() {
        EmitFormat::Json => format!("{}\n", serde_json::to_string_pretty(&report.to_json()).unwrap()),
        EmitFormat::Pretty => report.pretty(),
    };
    output.write(&text)?;
    Ok(report.passed())
}

fn run() -> Result<bool> {
    let cli = Cli::parse();
    match cli.command {
        Command::Kernel { kernel, output } => {
            let k = kernel.build()?;
            let m = r_matrix(&k);
            let text = match output.format() {
                EmitFormat::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&emit::ratfun_matrix_to_json(&m)).unwrap()
                ),
                EmitFormat::Pretty => emit::pretty_ratfun_matrix(&m, spectral_var(&k)),
            };
            output.write(&text)?;
            Ok(true)
        }
        Command::Fuse {
            kernel,
            n,
            m,
            q,
            tableau,
            tableau2,
            basis,
            output,
        } => {
            let k = kernel_of(&kernel, n, m, &q)?;
            let t = emit::tableau_from_json(&tableau)?;
            let t2 = emit::tableau_from_json(&tableau2)?;
            let restricted = match basis {
                None => restrict_fused(&k, &t, &t2, None)?,
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Error::Invalid(format!("cannot read basis file: {e}")))?;
                    let v: Value = serde_json::from_str(&text)
                        .map_err(|e| Error::Invalid(format!("basis file is not JSON: {e}")))?;
                    let b1 = emit::rational_matrix_from_json(
                        v.get("first")
                            .ok_or_else(|| Error::Invalid("missing \"first\" basis".into()))?,
                    )?;
                    let b2 = emit::rational_matrix_from_json(
                        v.get("second")
                            .ok_or_else(|| Error::Invalid("missing \"second\" basis".into()))?,
                    )?;
                    restrict_fused(&k, &t, &t2, Some((&b1, &b2)))?
                }
            };
            let text = match output.format() {
                EmitFormat::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&emit::ratfun_matrix_to_json(&restricted))
                        .unwrap()
                ),
                EmitFormat::Pretty => emit::pretty_ratfun_matrix(&restricted, spectral_var(&k)),
            };
            output.write(&text)?;
            Ok(true)
        }
        Command::Idempotent {
            group,
            n,
            q,
            tableau,
            output,
        } => {
            let t = emit::tableau_from_json(&tableau)?;
            if let Some(n) = n {
                if n != t.n() {
                    return Err(Error::SizeMismatch(format!(
                        "--n {} does not match the tableau size {}",
                        n,
                        t.n()
                    )));
                }
            }
            let coeffs: Vec<(String, String)> = match group.as_str() {
                "sym" => e_tableau(&t)?
                    .constant_coeffs()?
                    .iter()
                    .map(|(p, c)| (p.to_string(), format_rational(c)))
                    .collect(),
                "hecke" => {
                    let q = parse_rational(&q)?;
                    e_q_tableau(&t, &q)?
                        .constant_coeffs()?
                        .iter()
                        .map(|(p, c)| (p.to_string(), format_rational(c)))
                        .collect()
                }
                other => return Err(Error::Invalid(format!("unknown group {other:?}"))),
            };
            let text = match output.format() {
                EmitFormat::Json => {
                    let map: serde_json::Map<String, Value> = coeffs
                        .iter()
                        .map(|(p, c)| (p.clone(), Value::String(c.clone())))
                        .collect();
                    format!("{}\n", serde_json::to_string_pretty(&Value::Object(map)).unwrap())
                }
                EmitFormat::Pretty => {
                    let mut s = String::new();
                    for (p, c) in &coeffs {
                        s.push_str(&format!("{c}  {p}\n"));
                    }
                    s
                }
            };
            output.write(&text)?;
            Ok(true)
        }
        Command::Scan {
            n,
            pairs,
            seed,
            output,
        } => {
            if n != 3 {
                return Err(Error::Invalid("the scanner handles three letters".into()));
            }
            let candidates: Vec<(Rational, Rational)> = match pairs {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Error::Invalid(format!("cannot read pairs file: {e}")))?;
                    let v: Value = serde_json::from_str(&text)
                        .map_err(|e| Error::Invalid(format!("pairs file is not JSON: {e}")))?;
                    let arr = v
                        .as_array()
                        .ok_or_else(|| Error::Invalid("pairs file must hold a list".into()))?;
                    arr.iter()
                        .map(|p| {
                            let pair = p
                                .as_array()
                                .filter(|a| a.len() == 2)
                                .ok_or_else(|| Error::Invalid("each pair is a 2-list".into()))?;
                            Ok((
                                parse_rational(pair[0].as_str().ok_or_else(|| {
                                    Error::Invalid("pair entries are strings".into())
                                })?)?,
                                parse_rational(pair[1].as_str().ok_or_else(|| {
                                    Error::Invalid("pair entries are strings".into())
                                })?)?,
                            ))
                        })
                        .collect::<Result<_>>()?
                }
                None => {
                    let mut c = ybfuse::algebra::idempotent_pairs_n3();
                    c.extend(suites::sample_off_list_pairs(seed, 20));
                    c
                }
            };
            let outcomes = nonstandard_scan_n3(&candidates);
            let rows: Vec<Value> = candidates
                .iter()
                .zip(&outcomes)
                .map(|((c2, c3), o)| match o {
                    ScanOutcome::Singular => json!({
                        "candidate": [format_rational(c2), format_rational(c3)],
                        "singular": true,
                    }),
                    ScanOutcome::Analysed(r) => json!({
                        "candidate": [format_rational(c2), format_rational(c3)],
                        "singular": false,
                        "scale": r.scale.as_ref().map(format_rational),
                        "idempotent": r.is_idempotent_after_scaling,
                        "invertible": r.is_invertible,
                        "ideal_dim": r.left_ideal_dim,
                    }),
                })
                .collect();
            let text = match output.format() {
                EmitFormat::Json => {
                    format!("{}\n", serde_json::to_string_pretty(&Value::Array(rows)).unwrap())
                }
                EmitFormat::Pretty => {
                    let mut s = String::new();
                    for row in &rows {
                        s.push_str(&format!("{row}\n"));
                    }
                    s
                }
            };
            output.write(&text)?;
            Ok(true)
        }
        Command::Verify {
            suite,
            kind,
            n,
            m,
            q,
            max_n,
            seed,
            output,
        } => {
            let q_val = parse_rational(&q)?;
            let kernels = match &kind {
                Some(kind) => vec![kernel_of(kind, n, m, &q)?],
                None => suites::sweep_kernels(&q_val),
            };
            let report = match suite.as_str() {
                "base-ybe" => suites::suite_base_ybe(&kernels),
                "fused-ybe" => suites::suite_fused_ybe(&match kind {
                    Some(_) => kernels,
                    None => suites::benchmark_kernels(&q_val),
                })?,
                "ybe" => {
                    let mut r = suites::suite_base_ybe(&kernels);
                    r.merge(suites::suite_fused_ybe(&suites::benchmark_kernels(&q_val))?);
                    r
                }
                "unitarity" => suites::suite_unitarity(&kernels),
                "invariance" => {
                    let mut r = Report::new("invariance");
                    for k in &kernels {
                        r.merge(suites::suite_invariance(k)?);
                    }
                    r
                }
                "equivalence" => {
                    let mut r = Report::new("equivalence");
                    for k in &kernels {
                        r.merge(suites::suite_equivalence(k, max_n.unwrap_or(4))?);
                    }
                    r
                }
                "schur-weyl" => {
                    let mut r = Report::new("schur-weyl");
                    for k in &kernels {
                        r.merge(suites::suite_schur_weyl(k, max_n.unwrap_or(4)));
                    }
                    r
                }
                "idempotents" => {
                    let mut r = suites::suite_idempotents_sym(max_n.unwrap_or(5));
                    r.merge(suites::suite_idempotents_hecke(
                        max_n.unwrap_or(4).min(4),
                        &[q_val.clone(), ybfuse::exact::rat(3, 2)],
                    ));
                    r.merge(suites::suite_idempotent_orthogonality(
                        max_n.unwrap_or(4).min(4),
                    ));
                    r
                }
                "nonstandard" => suites::suite_nonstandard(seed, &q_val),
                "orders" => suites::suite_structural(&q_val)?,
                other => return Err(Error::Invalid(format!("unknown suite {other:?}"))),
            };
            emit_report(&report, &output)
        }
        Command::Reproduce { id, q, output } => {
            let q = parse_rational(&q)?;
            let rep = ybfuse::golden::reproduce(&id, &q)?;
            let var = if matches!(id.as_str(), "ex-Ra" | "ex-Ra-s" | "mat-Hn") {
                "a"
            } else {
                "u"
            };
            let text = match output.format() {
                EmitFormat::Json => {
                    let v = json!({
                        "id": rep.id,
                        "matches": rep.matches(),
                        "first_mismatch": rep.first_mismatch,
                        "computed": emit::ratfun_matrix_to_json(&rep.computed),
                    });
                    format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
                }
                EmitFormat::Pretty => {
                    let mut s = emit::pretty_ratfun_matrix(&rep.computed, var);
                    match rep.first_mismatch {
                        None => s.push_str("matches the reference transcription\n"),
                        Some((r, c)) => s.push_str(&format!(
                            "MISMATCH at ({r}, {c}): computed {}, reference {}\n",
                            rep.computed.at(r, c).display_with_var(var),
                            rep.golden.at(r, c).display_with_var(var)
                        )),
                    }
                    s
                }
            };
            output.write(&text)?;
            Ok(rep.matches())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
