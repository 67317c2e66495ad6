//! quatmult: batch JSON interface to the multiplicity toolkit.
//!
//! One process, one computation. The payload comes from standard input or
//! --input, the result goes to standard output as a single JSON document
//! with a "convention" block, and the exit code separates success (0),
//! domain errors (1), and malformed input (2). Output is byte
//! deterministic for identical invocations.

use clap::{Parser, Subcommand};
use quatmult_core::congruence::predict;
use quatmult_core::error::Error;
use quatmult_core::irrep::list_irreps;
use quatmult_core::mult::{multiplicity_ds, multiplicity_extended, mu_for, weight_set};
use quatmult_core::params::FieldParams;
use quatmult_core::selftest::{run_all, CheckResult};
use quatmult_core::sym::{sigma_w_bar, sym_power};
use quatmult_core::types::{d_tau, sigma_gamma_reduction};
use quatmult_core::wire::{
    EllElemWire, GrothWire, HodgeWire, IrrepWire, MuWire, NewformWire, OutcomeWire,
    ProblemWire, RhoWire, SignChoice, SignOrDs, TypeDescWire,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use std::io::{Read, Write};

#[derive(Parser)]
#[command(
    name = "quatmult",
    version,
    about = "Exact representation theory and deformation multiplicities for quaternionic types"
)]
struct Cli {
    /// Residue characteristic of the base field
    #[arg(long, global = true)]
    p: Option<u32>,

    /// Inertia degree of the base field, so q = p^f
    #[arg(long, global = true, default_value_t = 1)]
    f: u32,

    /// Read the JSON payload from this file instead of standard input
    #[arg(long, global = true)]
    input: Option<std::path::PathBuf>,

    /// Print the subcommand's input and output shape instead of running
    #[arg(long, global = true)]
    schema: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// List the irreducible classes of Γ for the given field
    Irreps,
    /// Multiply two classes in the Grothendieck ring
    Tensor,
    /// Restrict a class to the quadratic extension torus
    Restrict,
    /// Semisimplified mod-p reduction of an inertial type extension
    ReduceType,
    /// Reduction of the symmetric power Sym^N of the standard lift
    Sym,
    /// Reduction of the algebraic weight Sym^n ⊗ det^m
    SigmaW,
    /// Multiplicity table and weight set of a residual class
    Mu,
    /// Hilbert-Samuel multiplicity of a deformation condition
    Multiplicity,
    /// Sign prediction for a newform of level Γ₀(p)
    Congruence,
    /// Run every invariant grid and report per-check results
    Selftest,
}

/// The conventions every numeric answer silently depends on.
#[derive(Serialize)]
struct Convention {
    uniformizer: &'static str,
    sign_plus: &'static str,
    two_dim_label: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    f: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<u32>,
}

impl Convention {
    fn for_params(params: &FieldParams) -> Convention {
        Convention {
            uniformizer: "the uniformizer is p itself",
            sign_plus: "+1 is the extension whose one-dimensional constituents are untwisted",
            two_dim_label: "r_a uses the smaller index in the Frobenius orbit {a, qa}",
            p: Some(params.p()),
            f: Some(params.f()),
            q: Some(params.q()),
        }
    }

    fn generic() -> Convention {
        Convention {
            uniformizer: "the uniformizer is p itself",
            sign_plus: "+1 is the extension whose one-dimensional constituents are untwisted",
            two_dim_label: "r_a uses the smaller index in the Frobenius orbit {a, qa}",
            p: None,
            f: None,
            q: None,
        }
    }
}

#[derive(Serialize)]
struct Doc<T: Serialize> {
    convention: Convention,
    #[serde(flatten)]
    body: T,
}

#[derive(Serialize)]
struct IrrepRow {
    #[serde(flatten)]
    label: IrrepWire,
    dim: i64,
    central_character: u32,
}

#[derive(Serialize)]
struct IrrepsBody {
    count: usize,
    irreps: Vec<IrrepRow>,
}

#[derive(Serialize)]
struct ElemBody {
    result: GrothWire,
    dim: i64,
}

#[derive(Serialize)]
struct RestrictBody {
    result: EllElemWire,
    dim: i64,
}

#[derive(Serialize)]
struct MuBody {
    table: MuWire,
    weights: Vec<IrrepWire>,
}

#[derive(Serialize)]
struct MultiplicityBody {
    e: u64,
    route: &'static str,
    d_tau: u32,
}

#[derive(Serialize)]
struct SelftestBody {
    passed: bool,
    checks: Vec<CheckResult>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorPayload {
    left: GrothWire,
    right: GrothWire,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ReduceTypePayload {
    tau: TypeDescWire,
    sign: SignOrDs,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SymPayload {
    #[serde(rename = "N")]
    n: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MultiplicityPayload {
    rho: RhoWire,
    tau: TypeDescWire,
    w: HodgeWire,
    sign: SignOrDs,
}

/// A failed run: the JSON error document plus the exit code.
struct Failure {
    code: i32,
    kind: String,
    message: String,
}

impl Failure {
    fn document(&self) -> String {
        #[derive(Serialize)]
        struct ErrorBody<'a> {
            kind: &'a str,
            message: &'a str,
        }
        #[derive(Serialize)]
        struct ErrorDoc<'a> {
            error: ErrorBody<'a>,
        }
        serde_json::to_string(&ErrorDoc {
            error: ErrorBody { kind: &self.kind, message: &self.message },
        })
        .expect("error document serializes")
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure { code: 1, kind: e.kind().into(), message: e.to_string() }
    }
}

fn malformed(message: impl Into<String>) -> Failure {
    Failure { code: 2, kind: "malformed_input".into(), message: message.into() }
}

struct Output {
    document: String,
    code: i32,
}

impl Output {
    fn ok(document: String) -> Output {
        Output { document, code: 0 }
    }
}

fn main() {
    let cli = Cli::parse();
    let (document, code) = match execute(&cli) {
        Ok(out) => (out.document, out.code),
        Err(failure) => (failure.document(), failure.code),
    };
    let stdout = std::io::stdout();
    let mut handle = stdout.lock();
    let _ = handle.write_all(document.as_bytes());
    let _ = handle.write_all(b"\n");
    let _ = handle.flush();
    std::process::exit(code);
}

fn need_params(cli: &Cli) -> Result<FieldParams, Failure> {
    let p = cli
        .p
        .ok_or_else(|| malformed("--p is required for this subcommand"))?;
    Ok(FieldParams::new(p, cli.f)?)
}

fn read_payload(cli: &Cli) -> Result<String, Failure> {
    match &cli.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| malformed(format!("cannot read {}: {e}", path.display()))),
        None => {
            let mut buffer = String::new();
            std::io::stdin()
                .read_to_string(&mut buffer)
                .map_err(|e| malformed(format!("cannot read standard input: {e}")))?;
            Ok(buffer)
        }
    }
}

fn parse_payload<T: DeserializeOwned>(cli: &Cli) -> Result<T, Failure> {
    let raw = read_payload(cli)?;
    serde_json::from_str(&raw).map_err(|e| malformed(format!("invalid JSON payload: {e}")))
}

fn render<T: Serialize>(convention: Convention, body: T) -> Output {
    Output::ok(
        serde_json::to_string(&Doc { convention, body }).expect("output serializes"),
    )
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    if cli.schema {
        return Ok(Output::ok(schema_for(cli.command)));
    }
    match cli.command {
        Command::Irreps => {
            let params = need_params(cli)?;
            let irreps = list_irreps(&params);
            let rows = irreps
                .iter()
                .map(|irrep| IrrepRow {
                    label: IrrepWire::from(irrep),
                    dim: irrep.dim(),
                    central_character: irrep.central_character(&params),
                })
                .collect::<Vec<_>>();
            Ok(render(
                Convention::for_params(&params),
                IrrepsBody { count: rows.len(), irreps: rows },
            ))
        }
        Command::Tensor => {
            let params = need_params(cli)?;
            let payload: TensorPayload = parse_payload(cli)?;
            let product = payload
                .left
                .to_elem(&params)?
                .tensor(&payload.right.to_elem(&params)?)?;
            let dim = product.dim();
            Ok(render(
                Convention::for_params(&params),
                ElemBody { result: GrothWire::from(&product), dim },
            ))
        }
        Command::Restrict => {
            let params = need_params(cli)?;
            let payload: GrothWire = parse_payload(cli)?;
            let restricted = payload.to_elem(&params)?.restrict_to_ell();
            let dim = restricted.dim();
            Ok(render(
                Convention::for_params(&params),
                RestrictBody { result: EllElemWire::from(&restricted), dim },
            ))
        }
        Command::ReduceType => {
            let params = need_params(cli)?;
            let payload: ReduceTypePayload = parse_payload(cli)?;
            let sign = match payload.sign.interpret()? {
                SignChoice::Extension(sign) => sign,
                SignChoice::DiscreteSeries => {
                    return Err(Error::DataInconsistency(
                        "reduce-type reduces one extension; the sign must be 1 or -1".into(),
                    )
                    .into())
                }
            };
            let desc = payload.tau.to_desc(&params)?;
            let reduced = sigma_gamma_reduction(&params, &desc, sign)?;
            let dim = reduced.dim();
            Ok(render(
                Convention::for_params(&params),
                ElemBody { result: GrothWire::from(&reduced), dim },
            ))
        }
        Command::Sym => {
            let params = need_params(cli)?;
            let payload: SymPayload = parse_payload(cli)?;
            let reduced = sym_power(&params, payload.n)?;
            let dim = reduced.dim();
            Ok(render(
                Convention::for_params(&params),
                ElemBody { result: GrothWire::from(&reduced), dim },
            ))
        }
        Command::SigmaW => {
            let params = need_params(cli)?;
            let payload: HodgeWire = parse_payload(cli)?;
            let reduced = sigma_w_bar(&params, &payload.to_weight())?;
            let dim = reduced.dim();
            Ok(render(
                Convention::for_params(&params),
                ElemBody { result: GrothWire::from(&reduced), dim },
            ))
        }
        Command::Mu => {
            let params = need_params(cli)?;
            let payload: RhoWire = parse_payload(cli)?;
            let rho = payload.to_class(&params)?;
            let table = mu_for(&params, &rho)?;
            let weights =
                weight_set(&params, &rho)?.iter().map(IrrepWire::from).collect();
            Ok(render(
                Convention::for_params(&params),
                MuBody { table: MuWire::from(&table), weights },
            ))
        }
        Command::Multiplicity => {
            let params = need_params(cli)?;
            let payload: MultiplicityPayload = parse_payload(cli)?;
            let problem = ProblemWire {
                rho: payload.rho,
                tau: payload.tau,
                w: payload.w,
            }
            .to_problem(&params)?;
            let defect = d_tau(&problem.tau)?;
            let (e, route) = match payload.sign.interpret()? {
                SignChoice::Extension(sign) => {
                    (multiplicity_extended(&params, &problem, sign)?, "extended")
                }
                SignChoice::DiscreteSeries => {
                    (multiplicity_ds(&params, &problem)?, "discrete_series")
                }
            };
            Ok(render(
                Convention::for_params(&params),
                MultiplicityBody { e, route, d_tau: defect },
            ))
        }
        Command::Congruence => {
            let payload: NewformWire = parse_payload(cli)?;
            if let Some(p) = cli.p {
                if p != payload.p {
                    return Err(Error::MismatchedParams { left: p, right: payload.p }.into());
                }
            }
            if cli.f != 1 {
                return Err(Error::DataInconsistency(
                    "newform predictions are defined over the prime field; --f must be 1"
                        .into(),
                )
                .into());
            }
            let data = payload.to_data()?;
            let outcome = predict(&data)?;
            let params = FieldParams::new(data.p, 1)?;
            Ok(render(Convention::for_params(&params), OutcomeWire::from(&outcome)))
        }
        Command::Selftest => {
            let checks = run_all();
            let passed = checks.iter().all(|c| c.passed);
            let body = SelftestBody { passed, checks };
            let document =
                serde_json::to_string(&Doc { convention: Convention::generic(), body })
                    .expect("output serializes");
            Ok(Output { document, code: if passed { 0 } else { 1 } })
        }
    }
}

const GROTH_SHAPE: &str = r#"{"q":"uint","terms":[{"kind":"delta|r","a":"int","xi":"bool, optional, delta only","coeff":"int"}]}"#;
const IRREP_SHAPE: &str = r#"{"kind":"delta|r","a":"uint","xi":"bool, optional, delta only"}"#;
const TAU_SHAPE: &str = r#"{"form":"scal|red|irr|char","n":"int, scal and irr","a":"int, red","alpha":"0|1, irr, default 0","level":"uint, irr, default 1"}"#;
const RHO_SHAPE: &str = r#"{"class":"tres_ramifie|peu_ramifie_nonzero|split|custom","n":"uint, built-in classes","table":"mu table, custom","twist_of_cyclotomic_extension":"bool, custom"}"#;
const MU_SHAPE: &str = r#"{"entries":[{"irrep":IRREP,"value":"uint"}]}"#;

fn schema_for(command: Command) -> String {
    let (name, input, output) = match command {
        Command::Irreps => (
            "irreps",
            "null".to_string(),
            format!(
                r#"{{"convention":"object","count":"uint","irreps":[{IRREP_SHAPE} with "dim" and "central_character"]}}"#
            ),
        ),
        Command::Tensor => (
            "tensor",
            format!(r#"{{"left":{GROTH_SHAPE},"right":{GROTH_SHAPE}}}"#),
            format!(r#"{{"convention":"object","result":{GROTH_SHAPE},"dim":"int"}}"#),
        ),
        Command::Restrict => (
            "restrict",
            GROTH_SHAPE.to_string(),
            r#"{"convention":"object","result":{"q":"uint","terms":[{"a":"uint","coeff":"int"}]},"dim":"int"}"#
                .to_string(),
        ),
        Command::ReduceType => (
            "reduce-type",
            format!(r#"{{"tau":{TAU_SHAPE},"sign":"1|-1"}}"#),
            format!(r#"{{"convention":"object","result":{GROTH_SHAPE},"dim":"uint"}}"#),
        ),
        Command::Sym => (
            "sym",
            r#"{"N":"uint"}"#.to_string(),
            format!(r#"{{"convention":"object","result":{GROTH_SHAPE},"dim":"uint"}}"#),
        ),
        Command::SigmaW => (
            "sigma-w",
            r#"{"n":"uint","m":"int"}"#.to_string(),
            format!(r#"{{"convention":"object","result":{GROTH_SHAPE},"dim":"uint"}}"#),
        ),
        Command::Mu => (
            "mu",
            RHO_SHAPE.to_string(),
            format!(
                r#"{{"convention":"object","table":{MU_SHAPE},"weights":[{IRREP_SHAPE}]}}"#
            ),
        ),
        Command::Multiplicity => (
            "multiplicity",
            format!(
                r#"{{"rho":{RHO_SHAPE},"tau":{TAU_SHAPE},"w":{{"n":"uint","m":"int"}},"sign":"1|-1|ds"}}"#
            ),
            r#"{"convention":"object","e":"uint","route":"extended|discrete_series","d_tau":"1|2"}"#
                .to_string(),
        ),
        Command::Congruence => (
            "congruence",
            format!(
                r#"{{"p":"uint","k":"uint","rho":{RHO_SHAPE},"x":"int","globally_irreducible":"bool","ap_sign":"1|-1, optional"}}"#
            ),
            r#"{"convention":"object","prediction":{"kind":"forced_sign|opposite_exists|inconclusive","sign":"1|-1, forced_sign","no_opposite":"true, forced_sign","reason":"string, inconclusive"},"relied_on":["string"]}"#
                .to_string(),
        ),
        Command::Selftest => (
            "selftest",
            "null".to_string(),
            r#"{"convention":"object","passed":"bool","checks":[{"name":"string","passed":"bool","detail":"string"}]}"#
                .to_string(),
        ),
    };
    #[derive(Serialize)]
    struct Schema<'a> {
        subcommand: &'a str,
        flags: &'a str,
        input: &'a str,
        output: &'a str,
    }
    serde_json::to_string(&Schema {
        subcommand: name,
        flags: "--p (required unless the payload carries p), --f (default 1), --input FILE, --schema",
        input: &input,
        output: &output,
    })
    .expect("schema serializes")
}
