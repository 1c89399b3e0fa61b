use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use multitwist::classify::{classify_verified, is_free};
use multitwist::config::{parse_document, ParsedConfig};
use multitwist::coxeter::{
    bicolored_coxeter_spectral_radius, coxeter_form, form_signature, howlett_element,
    main7_report, spectral_radius, to_rational, CoxeterSystem,
};
use multitwist::error::Error;
use multitwist::flatstruct::{euler_genus, flat_data};
use multitwist::fuchsian::{automorphism_class, triangle_signature, MultiTwistWord};
use multitwist::numthy::{
    is_salem, lehmer_polynomial, mahler_measure, mu_quintic, resultant, salem_report,
    BivariatePolynomial, IntPolynomial,
};
use multitwist::penner::{penner_dilatation, row_sum_check, validate_penner_word, ComponentWord};
use multitwist::spectral::{largest_real_root, DEFAULT_TOL};
use multitwist::sweep::{bipartite_multigraphs, coxeter_sweep, minimality_sweep, smith_sweep, trees};

const AFTER_HELP: &str = "\
Conventions:
  Words are read left to right: the matrix of \"A B^-2\" is the product
  T_A * T_B^-2 of the generator matrices [[1, mu], [0, 1]] and
  [[1, 0], [-mu, 1]] in the order written. Component words for `penner`
  use the same order, e.g. \"a1^2 b3^-1\".

  Surfaces are assumed orientable. Embedded configurations give every
  intersection point a sign; the cyclic orders and signs must close up to
  an oriented surface, otherwise the input is rejected.

Exit codes: 0 success, 2 invalid input, 3 internal inconsistency.";

#[derive(Parser)]
#[command(name = "multitwist", version, about = "Groups generated by two positive multi-twists", after_help = AFTER_HELP)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Opts {
    /// Numerical tolerance for eigenvalue iterations and root refinement.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Significant digits in numeric output.
    #[arg(long, global = true, default_value_t = 12)]
    digits: usize,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Family and spectral radius of every component, and freeness.
    Classify { config: PathBuf },
    /// Flat structure: heights, rectangles, girths; genus when embedded.
    Flat { config: PathBuf },
    /// Nielsen-Thurston type and dilatation of a word in A and B.
    Word { config: PathBuf, word: String },
    /// Triangle-group signature of a recessive configuration.
    Signature { config: PathBuf },
    /// Coxeter form, Howlett element and the homology identity.
    Coxeter { config: PathBuf },
    /// Dilatation of a component word from the bigon-track incidence matrix.
    Penner { config: PathBuf, word: String },
    /// Polynomial utilities.
    Poly {
        #[command(subcommand)]
        command: PolyCommand,
    },
    /// Exhaustive property sweeps over small bipartite multigraphs.
    Sweep {
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
        /// Bound on the total edge multiplicity.
        #[arg(long, default_value_t = 10)]
        max_total: u32,
        /// Trees up to this many vertices join the minimality sweep.
        #[arg(long, default_value_t = 10)]
        tree_vertices: usize,
        /// Random vertex orderings per graph in the Coxeter sweep.
        #[arg(long, default_value_t = 20)]
        orderings: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum PolyCommand {
    /// Mahler measure, e.g. `poly mahler "x^2 - 3x + 1"` or `"[1,-3,1]"`.
    Mahler { poly: String },
    /// Salem test and root census.
    Salem { poly: String },
    /// Eliminate y from x^2 + x(2 - y^2) + 1 and the Eh10 quintic in y^2.
    Resultant,
    /// Lehmer's polynomial, the Eh10 quintic and their largest roots.
    Lehmer,
}

enum Failure {
    Invalid(String),
    Inconsistent(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_validation() {
            Failure::Invalid(e.to_string())
        } else {
            Failure::Inconsistent(e.to_string())
        }
    }
}

type Outcome = Result<Value, Failure>;

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report serialises")
}

fn load(path: &Path) -> Result<ParsedConfig, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    Ok(parse_document(&text)?)
}

fn parse_poly(s: &str) -> Result<IntPolynomial, Failure> {
    if s.trim_start().starts_with('[') {
        let c: Vec<i64> =
            serde_json::from_str(s).map_err(|e| Failure::Invalid(format!("coefficient list: {e}")))?;
        Ok(IntPolynomial::from_i64(&c))
    } else {
        Ok(s.parse()?)
    }
}

fn classify(path: &Path, o: Opts) -> Outcome {
    let g = load(path)?.graph;
    let components: Vec<Value> = classify_verified(&g, o.tol)?
        .into_iter()
        .map(|c| {
            json!({
                "family": c.label.family.to_string(),
                "is_eh10": c.label.is_eh10,
                "mu": c.mu,
            })
        })
        .collect();
    Ok(json!({ "components": components, "free": is_free(&g) }))
}

fn flat(path: &Path, o: Opts) -> Outcome {
    let parsed = load(path)?;
    let mut v = to_value(&flat_data(&parsed.graph, o.tol)?);
    if let Some(e) = &parsed.embedding {
        v["genus"] = to_value(&euler_genus(e)?);
    }
    Ok(v)
}

fn word(path: &Path, w: &str) -> Outcome {
    let g = load(path)?.graph;
    let w: MultiTwistWord = w.parse()?;
    Ok(to_value(&automorphism_class(&w, &g)?))
}

fn signature(path: &Path) -> Outcome {
    Ok(to_value(&triangle_signature(&load(path)?.graph)?))
}

fn coxeter(path: &Path, o: Opts) -> Outcome {
    let g = load(path)?.graph;
    let form = form_signature(&to_rational(&coxeter_form(&g)?))?;
    let cs = CoxeterSystem::new(&g)?;
    let howlett = howlett_element(&cs)?;
    let bicolored = bicolored_coxeter_spectral_radius(&g, o.tol.max(1e-9))?;
    let main7 = main7_report(&g)?;
    if !main7.holds {
        return Err(Failure::Inconsistent(format!(
            "homology identity fails: {}",
            to_value(&main7)
        )));
    }
    Ok(json!({
        "form_signature": form,
        "howlett_spectral_radius": spectral_radius(&howlett),
        "bicolored": bicolored,
        "main7": main7,
    }))
}

fn penner(path: &Path, w: &str, o: Opts) -> Outcome {
    let parsed = load(path)?;
    let e = parsed
        .embedding
        .ok_or_else(|| Failure::Invalid("penner needs a configuration with an embedding".into()))?;
    let w: ComponentWord = w.parse()?;
    let membership = validate_penner_word(&w, e.graph());
    Ok(json!({
        "word": w.to_string(),
        "membership": membership,
        "dilatation": penner_dilatation(&w, &e, o.tol)?,
        "min_row_sum": row_sum_check(&w, &e)?,
    }))
}

fn poly(cmd: &PolyCommand, o: Opts) -> Outcome {
    Ok(match cmd {
        PolyCommand::Mahler { poly } => {
            let m = mahler_measure(&parse_poly(poly)?, o.tol.max(1e-8))?;
            json!({ "mahler_measure": m.value, "error": m.error })
        }
        PolyCommand::Salem { poly } => {
            let p = parse_poly(poly)?;
            let r = salem_report(&p, multitwist::numthy::SALEM_TOL);
            json!({
                "is_salem": r.is_salem,
                "reciprocal": r.reciprocal,
                "real_roots_above_one": r.real_roots_above_one,
                "roots_inside": r.inside,
                "roots_on_circle": r.on_circle,
                "roots_outside": r.outside,
            })
        }
        PolyCommand::Resultant => {
            let p = BivariatePolynomial::new(vec![
                IntPolynomial::from_i64(&[1, 2, 1]),
                IntPolynomial::zero(),
                IntPolynomial::from_i64(&[0, -1]),
            ]);
            let q = BivariatePolynomial::from_y(&mu_quintic().compose_square());
            let r = resultant(&p, &q);
            let lehmer = lehmer_polynomial();
            let cofactor = r.div_exact(&lehmer);
            json!({
                "resultant": r.to_string(),
                "divisible_by_lehmer": cofactor.is_some(),
                "cofactor": cofactor.map(|c| c.to_string()),
            })
        }
        PolyCommand::Lehmer => {
            let l = lehmer_polynomial();
            let q = mu_quintic();
            let root = largest_real_root(&l, 1e-15)?.value;
            let mu2 = largest_real_root(&q, 1e-15)?.value;
            json!({
                "lehmer_polynomial": l.to_string(),
                "lehmer_coefficients": l.to_i64_vec(),
                "lehmer_number": root,
                "is_salem": is_salem(&l, multitwist::numthy::SALEM_TOL),
                "mu_quintic": q.to_string(),
                "mu_squared": mu2,
                "mu": mu2.sqrt(),
            })
        }
    })
}

fn sweep(max_vertices: usize, max_total: u32, tree_vertices: usize, orderings: usize, seed: u64, o: Opts) -> Outcome {
    let graphs = bipartite_multigraphs(max_vertices, max_total);
    let smith = smith_sweep(&graphs, o.tol);
    let mut all = trees(tree_vertices);
    all.extend_from_slice(&graphs);
    let minimal = minimality_sweep(&all, o.tol)?;
    let cox = coxeter_sweep(&graphs, orderings, seed, o.tol.max(1e-9));
    let v = json!({ "smith": smith, "minimality": minimal, "coxeter": cox });
    if !smith.mismatches.is_empty() || !cox.failures.is_empty() || !minimal.at_min_all_eh10 {
        return Err(Failure::Inconsistent(format!("sweep failed: {v}")));
    }
    Ok(v)
}

/// Rounds every float to `digits` significant digits.
fn round_floats(v: &mut Value, digits: usize) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().unwrap();
            let r: f64 = format!("{:.*e}", digits.saturating_sub(1), x).parse().unwrap();
            if let Some(m) = serde_json::Number::from_f64(r) {
                *n = m;
            }
        }
        Value::Array(a) => a.iter_mut().for_each(|x| round_floats(x, digits)),
        Value::Object(m) => m.values_mut().for_each(|x| round_floats(x, digits)),
        _ => {}
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(x, indent + 1, out);
                    }
                    Value::Array(a) if a.iter().any(|y| y.is_object()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for (i, y) in a.iter().enumerate() {
                            out.push_str(&format!("{pad}  [{}]\n", i + 1));
                            render(y, indent + 2, out);
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(x))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let o = cli.opts;
    let result = match &cli.command {
        Command::Classify { config } => classify(config, o),
        Command::Flat { config } => flat(config, o),
        Command::Word { config, word: w } => word(config, w),
        Command::Signature { config } => signature(config),
        Command::Coxeter { config } => coxeter(config, o),
        Command::Penner { config, word: w } => penner(config, w, o),
        Command::Poly { command } => poly(command, o),
        Command::Sweep {
            max_vertices,
            max_total,
            tree_vertices,
            orderings,
            seed,
        } => sweep(*max_vertices, *max_total, *tree_vertices, *orderings, *seed, o),
    };
    match result {
        Ok(mut v) => {
            round_floats(&mut v, o.digits.max(1));
            if o.json {
                println!("{v}");
            } else {
                let mut out = String::new();
                render(&v, 0, &mut out);
                print!("{out}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Inconsistent(msg)) => {
            eprintln!("internal inconsistency: {msg}");
            ExitCode::from(3)
        }
    }
}
