//! Command-line front end: every subcommand maps to a [`Request`], executed by [`execute`]
//! into a JSON value. Batch files are JSON arrays of the same requests.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::applications::{
    concentration_bounds, multicopy_k0, multicopy_recover, mutual_catalysis_check, verify_concentration, CopyMode,
};
use crate::decomposition::normal_decompose;
use crate::error::{Error, Result};
use crate::general::{self, ConformalPartition, PartitionKind, Scheme};
use crate::number::{self, Rational};
use crate::order::{algorithm2, oracle_witness};
use crate::strict::{decide_strict, witness_strict, StrictVerdict};
use crate::uniformity::{entropy, indices};
use crate::vectors::{is_strictly_majorized, majorize, SchmidtVector};

/// State object: `{"dim": n, "coefficients": ["p/q" | "0.25" | 0.25, ...], "normalized": true}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateJson {
    pub dim: usize,
    pub coefficients: Vec<Value>,
    #[serde(default = "yes")]
    pub normalized: bool,
}

fn yes() -> bool {
    true
}

impl StateJson {
    pub fn to_vector(&self) -> Result<SchmidtVector> {
        if self.coefficients.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: self.coefficients.len() });
        }
        let coeffs =
            self.coefficients.iter().map(number::serde_rational::from_json).collect::<Result<Vec<Rational>>>()?;
        if self.normalized {
            SchmidtVector::normalized(coeffs)
        } else {
            SchmidtVector::new(coeffs)
        }
    }

    pub fn from_vector(v: &SchmidtVector) -> Self {
        StateJson {
            dim: v.dim(),
            coefficients: v.to_strings().into_iter().map(Value::String).collect(),
            normalized: v.is_normalized(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Closed-form decider if ψ ⊲ φ, otherwise the exact pair solver.
    #[default]
    Auto,
    Strict,
    General,
    Algorithm2,
    Oracle,
}

fn default_depth() -> u32 {
    20
}

fn one_copy() -> usize {
    1
}

/// One unit of work, as accepted in batch files.
#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Request {
    Majorize {
        x: StateJson,
        y: StateJson,
    },
    Indices {
        state: StateJson,
    },
    Entropy {
        state: StateJson,
    },
    Decompose {
        psi: StateJson,
        phi: StateJson,
    },
    Recover {
        psi: StateJson,
        phi: StateJson,
        chi: StateJson,
        #[serde(default)]
        method: Method,
        #[serde(default = "default_depth")]
        grid_depth: u32,
        #[serde(default)]
        partition: Option<Vec<usize>>,
        #[serde(default)]
        layout: Option<PartitionKind>,
    },
    ConstructAux {
        psi: StateJson,
        phi: StateJson,
        #[serde(default)]
        scheme: Scheme,
    },
    Concentrate {
        #[serde(with = "number::serde_rational")]
        a: Rational,
        #[serde(with = "number::serde_rational")]
        b: Rational,
        k: usize,
        #[serde(default)]
        chi: Option<StateJson>,
    },
    MutualCatalysis {
        psi: StateJson,
        phi: StateJson,
        alpha: StateJson,
        beta: StateJson,
    },
    MulticopyK0 {
        chi: StateJson,
        phi: StateJson,
    },
    MulticopyRecover {
        psi: StateJson,
        phi: StateJson,
        chi: StateJson,
        #[serde(default = "one_copy")]
        copies: usize,
        #[serde(default = "target_mode")]
        mode: CopyMode,
    },
    Selftest,
}

fn target_mode() -> CopyMode {
    CopyMode::Target
}

fn state(v: &SchmidtVector) -> Value {
    serde_json::to_value(StateJson::from_vector(v)).expect("serializable")
}

fn strings(v: &SchmidtVector) -> Value {
    Value::from(v.to_strings())
}

fn rational(r: &Rational) -> Value {
    Value::String(number::format(r))
}

fn witness_json(omega: &SchmidtVector, extra: Value) -> Value {
    let mut w = extra;
    w["omega"] = state(omega);
    w["entropy"] = json!(entropy(omega));
    w
}

fn entropy_gain(chi: &SchmidtVector, omega: Option<&SchmidtVector>) -> Value {
    omega.map_or(Value::Null, |o| json!(entropy(o) - entropy(chi)))
}

fn status(feasible: Option<bool>) -> &'static str {
    match feasible {
        Some(true) => "feasible",
        Some(false) => "infeasible",
        None => "inconclusive",
    }
}

fn strict_json(verdict: &StrictVerdict) -> Value {
    serde_json::to_value(verdict).expect("serializable")
}

pub fn execute(request: Request) -> Result<Value> {
    match request {
        Request::Majorize { x, y } => {
            let report = majorize(&x.to_vector()?, &y.to_vector()?)?;
            Ok(serde_json::to_value(report).expect("serializable"))
        }
        Request::Indices { state } => {
            let v = state.to_vector()?;
            let idx = indices(&v)?;
            let mut out = serde_json::to_value(idx).expect("serializable");
            out["entropy"] = json!(entropy(&v));
            out["compact"] = serde_json::to_value(v.compact()).expect("serializable");
            Ok(out)
        }
        Request::Entropy { state } => Ok(json!({ "entropy": entropy(&state.to_vector()?) })),
        Request::Decompose { psi, phi } => {
            let nd = normal_decompose(&psi.to_vector()?, &phi.to_vector()?)?;
            let blocks: Vec<Value> = nd
                .blocks
                .iter()
                .map(|b| json!({ "tag": b.tag, "start": b.start + 1, "x": strings(&b.x), "y": strings(&b.y) }))
                .collect();
            Ok(json!({
                "blocks": blocks,
                "I": nd.equal_set,
                "D": nd.strict_set,
                "I_grouped": nd.equal_grouped,
                "D_grouped": nd.strict_grouped,
            }))
        }
        Request::Recover { psi, phi, chi, method, grid_depth, partition, layout } => {
            let (psi, phi, chi) = (psi.to_vector()?, phi.to_vector()?, chi.to_vector()?);
            recover(&psi, &phi, &chi, method, grid_depth, partition, layout)
        }
        Request::ConstructAux { psi, phi, scheme } => {
            let (psi, phi) = (psi.to_vector()?, phi.to_vector()?);
            let c = general::construct_aux(&psi, &phi, scheme)?;
            let passed = general::check(&psi, &phi, &c.chi, &c.partition)?;
            let w = general::witness_general(&psi, &phi, &c.chi, &c.partition)?;
            let mut out = serde_json::to_value(&c).expect("serializable");
            out["chi"] = state(&c.chi);
            out["checker_passed"] = json!(passed);
            out["witness"] = witness_json(&w.omega, json!({ "transfers": w.transfers }));
            out["entropy_gain"] = entropy_gain(&c.chi, Some(&w.omega));
            Ok(out)
        }
        Request::Concentrate { a, b, k, chi } => {
            let bounds = concentration_bounds(&a, &b, k)?;
            let mut out = serde_json::to_value(&bounds).expect("serializable");
            if let Some(chi) = chi {
                let one = Rational::from_integer(1.into());
                let psi = SchmidtVector::new(vec![a.clone(), &one - &a])?;
                let phi = SchmidtVector::new(vec![b.clone(), &one - &b])?;
                out["verified"] = json!(verify_concentration(&psi, &phi, &chi.to_vector()?, k)?);
            }
            Ok(out)
        }
        Request::MutualCatalysis { psi, phi, alpha, beta } => {
            let r = mutual_catalysis_check(&psi.to_vector()?, &phi.to_vector()?, &alpha.to_vector()?, &beta.to_vector()?)?;
            Ok(serde_json::to_value(r).expect("serializable"))
        }
        Request::MulticopyK0 { chi, phi } => {
            let (chi, phi) = (chi.to_vector()?, phi.to_vector()?);
            let k0 = multicopy_k0(&chi, &phi)?;
            Ok(json!({
                "k0": k0,
                "L_u_chi": rational(&indices(&chi)?.big_l_u),
                "g_u_phi": rational(&indices(&phi)?.g_u),
            }))
        }
        Request::MulticopyRecover { psi, phi, chi, copies, mode } => {
            let (psi, phi, chi) = (psi.to_vector()?, phi.to_vector()?, chi.to_vector()?);
            let verdict = multicopy_recover(&psi, &phi, &chi, copies, mode)?;
            let mut out = strict_json(&verdict);
            out["copies"] = json!(copies);
            out["mode"] = json!(mode);
            out["status"] = json!(status(Some(verdict.feasible)));
            out["witness"] = Value::Null;
            if verdict.feasible {
                let (p, f, c) = match mode {
                    CopyMode::Target => (psi.tensor_power(copies)?, phi.tensor_power(copies)?, chi.clone()),
                    CopyMode::Auxiliary => (psi.clone(), phi.clone(), chi.tensor_power(copies)?),
                };
                let w = witness_strict(&p, &f, &c, &verdict)?;
                out["witness"] = witness_json(&w.omega, json!({ "i": w.i, "j": w.j, "epsilon": rational(&w.epsilon) }));
                out["entropy_gain"] = entropy_gain(&c, Some(&w.omega));
            }
            Ok(out)
        }
        Request::Selftest => {
            let results = crate::selftest::run();
            let passed = results.iter().filter(|r| r.passed).count();
            Ok(json!({ "passed": passed, "failed": results.len() - passed, "results": results }))
        }
    }
}

/// Upper bound on partitions tried when `recover --method general` has no `--partition`.
pub const PARTITION_SEARCH_LIMIT: usize = 10_000;

fn recover(
    psi: &SchmidtVector,
    phi: &SchmidtVector,
    chi: &SchmidtVector,
    method: Method,
    grid_depth: u32,
    partition: Option<Vec<usize>>,
    layout: Option<PartitionKind>,
) -> Result<Value> {
    let method = match method {
        Method::Auto if is_strictly_majorized(psi, phi) => Method::Strict,
        Method::Auto => Method::Algorithm2,
        m => m,
    };
    match method {
        Method::Strict => {
            if !is_strictly_majorized(psi, phi) {
                return Err(Error::NotStrict);
            }
            let verdict = decide_strict(phi, chi)?;
            let mut out = strict_json(&verdict);
            out["method"] = json!("strict");
            out["status"] = json!(status(Some(verdict.feasible)));
            out["witness"] = Value::Null;
            out["entropy_gain"] = Value::Null;
            if verdict.feasible {
                let w = witness_strict(psi, phi, chi, &verdict)?;
                out["witness"] = witness_json(&w.omega, json!({ "i": w.i, "j": w.j, "epsilon": rational(&w.epsilon) }));
                out["entropy_gain"] = entropy_gain(chi, Some(&w.omega));
            }
            Ok(out)
        }
        Method::Algorithm2 => {
            let v = algorithm2(psi, phi, chi)?;
            let witness = v.witness.as_ref().map(|w| {
                witness_json(&w.omega, json!({ "i": w.i, "j": w.j, "epsilon": rational(&w.epsilon) }))
            });
            Ok(json!({
                "feasible": v.feasible,
                "status": status(Some(v.feasible)),
                "method": "algorithm2",
                "pairs_examined": v.pairs_examined,
                "witness": witness,
                "entropy_gain": entropy_gain(chi, v.witness.as_ref().map(|w| &w.omega)),
            }))
        }
        Method::Oracle => {
            let w = oracle_witness(psi, phi, chi, grid_depth)?;
            let feasible = w.is_some();
            Ok(json!({
                "feasible": feasible,
                "status": status(Some(feasible)),
                "method": "oracle",
                "grid_depth": grid_depth,
                "witness": w.as_ref().map(|w| witness_json(&w.omega, json!({ "i": w.i, "j": w.j, "epsilon": rational(&w.epsilon) }))),
                "entropy_gain": entropy_gain(chi, w.as_ref().map(|w| &w.omega)),
            }))
        }
        Method::General => {
            let chosen = match partition {
                Some(dims) => {
                    let kind = match layout {
                        Some(k) => k,
                        None => {
                            let blocks = general::block_tags(psi, phi)?.len();
                            if dims.len() == blocks {
                                PartitionKind::PerBlock
                            } else {
                                PartitionKind::Grouped
                            }
                        }
                    };
                    let p = ConformalPartition { kind, block_dims: dims };
                    general::check(psi, phi, chi, &p)?.then_some(p)
                }
                None => general::find_partition(psi, phi, chi, PARTITION_SEARCH_LIMIT)?,
            };
            match chosen {
                Some(p) => {
                    let w = general::witness_general(psi, phi, chi, &p)?;
                    Ok(json!({
                        "feasible": true,
                        "status": "feasible",
                        "method": "general",
                        "partition": p,
                        "witness": witness_json(&w.omega, json!({ "transfers": w.transfers })),
                        "entropy_gain": entropy_gain(chi, Some(&w.omega)),
                    }))
                }
                None => Ok(json!({
                    "feasible": null,
                    "status": "inconclusive",
                    "method": "general",
                    "partition": null,
                    "witness": null,
                    "entropy_gain": null,
                })),
            }
        }
        Method::Auto => unreachable!("resolved above"),
    }
}

#[derive(Parser, Debug)]
#[command(name = "locc-recovery", version, about = "Exact partial entanglement recovery decisions")]
struct Cli {
    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Emit JSON (the default; accepted for scripts that pass it explicitly).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compare prefix sums: is X majorized by Y?
    Majorize { x: PathBuf, y: PathBuf },
    /// Uniformity indices, entropy and compact form of a state.
    Indices { state: PathBuf },
    /// Entropy of entanglement.
    Entropy { state: PathBuf },
    /// Normal decomposition of PSI ≺ PHI.
    Decompose { psi: PathBuf, phi: PathBuf },
    /// Can CHI recover entanglement lost in PSI → PHI?
    Recover {
        psi: PathBuf,
        phi: PathBuf,
        chi: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[arg(long, default_value_t = 20)]
        grid_depth: u32,
        /// Block dimensions for `--method general`, e.g. `1,2`.
        #[arg(long, value_delimiter = ',')]
        partition: Option<Vec<usize>>,
        #[arg(long, value_enum)]
        layout: Option<PartitionKind>,
    },
    /// Build an auxiliary state for a transformation with equality constraints.
    ConstructAux {
        psi: PathBuf,
        phi: PathBuf,
        #[arg(long, value_enum, default_value_t = Scheme::Auto)]
        scheme: Scheme,
    },
    /// Bounds for concentrating a k-level maximally entangled state.
    Concentrate {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        k: usize,
        /// Optional candidate auxiliary state to verify directly.
        #[arg(long)]
        chi: Option<PathBuf>,
    },
    /// Is PSI⊗ALPHA → PHI⊗BETA a non-trivial mutual catalysis?
    MutualCatalysis { psi: PathBuf, phi: PathBuf, alpha: PathBuf, beta: PathBuf },
    /// Copies of PHI needed before CHI passes the ratio test.
    MulticopyK0 { chi: PathBuf, phi: PathBuf },
    /// Strict decision on tensor powers of the target or of the auxiliary state.
    MulticopyRecover {
        psi: PathBuf,
        phi: PathBuf,
        chi: PathBuf,
        #[arg(long, default_value_t = 1)]
        copies: usize,
        #[arg(long, value_enum, default_value_t = CopyMode::Target)]
        mode: CopyMode,
    },
    /// Run the bundled worked examples.
    Selftest,
    /// Execute a JSON array of requests (use `-` for standard input).
    Batch { file: PathBuf },
}

fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn read_state(path: &Path) -> Result<StateJson> {
    serde_json::from_str(&read_text(path)?).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn to_request(command: Command) -> Result<Request> {
    Ok(match command {
        Command::Majorize { x, y } => Request::Majorize { x: read_state(&x)?, y: read_state(&y)? },
        Command::Indices { state } => Request::Indices { state: read_state(&state)? },
        Command::Entropy { state } => Request::Entropy { state: read_state(&state)? },
        Command::Decompose { psi, phi } => Request::Decompose { psi: read_state(&psi)?, phi: read_state(&phi)? },
        Command::Recover { psi, phi, chi, method, grid_depth, partition, layout } => Request::Recover {
            psi: read_state(&psi)?,
            phi: read_state(&phi)?,
            chi: read_state(&chi)?,
            method,
            grid_depth,
            partition,
            layout,
        },
        Command::ConstructAux { psi, phi, scheme } => {
            Request::ConstructAux { psi: read_state(&psi)?, phi: read_state(&phi)?, scheme }
        }
        Command::Concentrate { a, b, k, chi } => Request::Concentrate {
            a: number::parse(&a)?,
            b: number::parse(&b)?,
            k,
            chi: chi.map(|c| read_state(&c)).transpose()?,
        },
        Command::MutualCatalysis { psi, phi, alpha, beta } => Request::MutualCatalysis {
            psi: read_state(&psi)?,
            phi: read_state(&phi)?,
            alpha: read_state(&alpha)?,
            beta: read_state(&beta)?,
        },
        Command::MulticopyK0 { chi, phi } => Request::MulticopyK0 { chi: read_state(&chi)?, phi: read_state(&phi)? },
        Command::MulticopyRecover { psi, phi, chi, copies, mode } => Request::MulticopyRecover {
            psi: read_state(&psi)?,
            phi: read_state(&phi)?,
            chi: read_state(&chi)?,
            copies,
            mode,
        },
        Command::Selftest => Request::Selftest,
        Command::Batch { .. } => unreachable!("handled separately"),
    })
}

pub fn error_json(e: &Error) -> Value {
    json!({ "error": { "kind": e.kind(), "message": e.to_string() } })
}

/// Exit code for an error: 3 for internal contradictions, 2 for bad input.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_internal() {
        3
    } else {
        2
    }
}

/// Runs a JSON array of requests. Failed items carry an `error` object in place of a result;
/// the returned code is the most severe one among the items.
pub fn run_batch(text: &str) -> (Value, i32) {
    let items: Vec<Value> = match serde_json::from_str(text) {
        Ok(Value::Array(items)) => items,
        Ok(_) => return (error_json(&Error::Input("batch file must be a JSON array".into())), 2),
        Err(e) => return (error_json(&Error::Input(e.to_string())), 2),
    };
    let mut code = 0;
    let results = items
        .into_iter()
        .map(|item| {
            let outcome = serde_json::from_value::<Request>(item)
                .map_err(|e| Error::Input(e.to_string()))
                .and_then(execute);
            outcome.unwrap_or_else(|e| {
                code = code.max(exit_code(&e));
                error_json(&e)
            })
        })
        .collect();
    (Value::Array(results), code)
}

fn render(v: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(v).expect("serializable")
    } else {
        v.to_string()
    }
}

/// Parses `argv`, runs the command, prints JSON, and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(std::io::stdout(), "{e}");
                return 0;
            }
            eprintln!("{}", error_json(&Error::Input(e.to_string().trim().to_string())));
            return 2;
        }
    };
    let (output, code) = match cli.command {
        Command::Batch { file } => match read_text(&file) {
            Ok(text) => run_batch(&text),
            Err(e) => {
                eprintln!("{}", error_json(&e));
                return exit_code(&e);
            }
        },
        Command::Selftest => {
            let out = execute(Request::Selftest).expect("selftest never errors");
            let code = if out["failed"] == json!(0) { 0 } else { 3 };
            (out, code)
        }
        command => match to_request(command).and_then(execute) {
            Ok(v) => (v, 0),
            Err(e) => {
                eprintln!("{}", error_json(&e));
                return exit_code(&e);
            }
        },
    };
    let _ = writeln!(std::io::stdout(), "{}", render(&output, cli.pretty));
    code
}
