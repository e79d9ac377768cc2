//! Command-line front end: loads algebras, cocycles and comodule algebras
//! from JSON or from the built-in families and prints one JSON report.

pub mod demo;
pub mod render;

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};
use thiserror::Error;

use hopfpi::cocycle::{sweedler_cleft, sweedler_cleft_generic, twist, CleftAlgebra, TwoCocycle};
use hopfpi::comod::ComoduleAlgebra;
use hopfpi::exact::{Field, Scalar};
use hopfpi::genbase::{generic_base_generators, sigma, t_inverse};
use hopfpi::hopf::{builtin, HopfAlgebra};
use hopfpi::ident::{
    is_identity_general, is_identity_twisted, minimal_identity_degree, GenericMap,
    IdentityVerdict, DEFAULT_ROW_CAP,
};
use hopfpi::io::{fraction_str, free_element_json, mixed_json, vector_json, CocycleFile, ComoduleFile, HopfFile};
use hopfpi::parse::{parse_expression, parse_scalar};
use hopfpi::report::Violation;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] hopfpi::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "hopfpi", version, about = "Polynomial identities of Hopf comodule algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Human-readable text instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Write the report here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms of a Hopf algebra, cocycle or comodule algebra.
    Verify(Source),
    /// Decide whether an element of the free algebra is an identity.
    CheckIdentity {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        expr: String,
        /// Use generic comodule maps even when a cocycle is known.
        #[arg(long)]
        general: bool,
    },
    /// Basis of the identities of a given degree.
    Kernel {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = DEFAULT_ROW_CAP)]
        cap: usize,
    },
    /// Smallest degree carrying a nonzero identity.
    MinimalDegree {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// The generic cocycle and its inverse as rational functions.
    Sigma(Source),
    /// Convolution inverse of the tautological map.
    Tinv(Source),
    /// Basis of the coinvariant subalgebra.
    Coinvariants(Source),
    /// Basis of the center.
    Center(Source),
    /// Replays the Sweedler computations for A_{a,b,c}.
    Demo(Params),
}

#[derive(Debug, Clone, Default, Args)]
pub struct Params {
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    /// Symbolic parameters a, b, c.
    #[arg(long, conflicts_with_all = ["a", "b", "c"])]
    pub generic: bool,
    /// Field for parameters and built-in algebras: rational, prime:p or
    /// cyclotomic:n.
    #[arg(long, default_value = "rational")]
    pub field: String,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Source {
    /// JSON file holding a Hopf algebra, a cocycle or a comodule algebra.
    pub file: Option<PathBuf>,
    /// trivial, sweedler, taft:N, group:G or dual:G with G one of zN, s3.
    #[arg(long, conflicts_with_all = ["file", "cleft"])]
    pub builtin: Option<String>,
    /// Cleft family; only `sweedler` (the algebras A_{a,b,c}).
    #[arg(long, conflicts_with = "file")]
    pub cleft: Option<String>,
    #[command(flatten)]
    pub params: Params,
}

/// What a [`Source`] resolves to.
#[derive(Debug, Clone)]
pub enum Loaded {
    Hopf(HopfAlgebra),
    Cocycle(TwoCocycle),
    Cleft(CleftAlgebra),
    Comodule(ComoduleAlgebra),
}

/// A finished command: the report and the process exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub code: i32,
}

impl Outcome {
    fn new(report: Value, ok: bool) -> Self {
        Self {
            report,
            code: if ok { 0 } else { 1 },
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl Params {
    pub fn field(&self) -> CliResult<Field> {
        self.field.parse().map_err(|_| usage(format!("unknown field `{}`", self.field)))
    }

    /// `(a, b, c)`, defaulting to `(1, 0, 0)`.
    pub fn values(&self) -> CliResult<(Scalar, Scalar, Scalar)> {
        if self.generic {
            return Ok((Scalar::var("a"), Scalar::var("b"), Scalar::var("c")));
        }
        let field = self.field()?;
        let get = |v: &Option<String>, default: &str| parse_scalar(v.as_deref().unwrap_or(default), &field);
        Ok((get(&self.a, "1")?, get(&self.b, "0")?, get(&self.c, "0")?))
    }
}

fn read_value(path: &Path) -> CliResult<Value> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn decode<T: serde::de::DeserializeOwned>(v: Value, path: &Path) -> CliResult<T> {
    serde_json::from_value(v).map_err(|e| usage(format!("{}: {e}", path.display())))
}

impl Source {
    pub fn load(&self) -> CliResult<Loaded> {
        if let Some(path) = &self.file {
            let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
            let v = read_value(path)?;
            return Ok(if v.get("alpha").is_some() {
                Loaded::Cocycle(decode::<CocycleFile>(v, path)?.to_cocycle(&base)?)
            } else if v.get("coaction").is_some() {
                Loaded::Comodule(decode::<ComoduleFile>(v, path)?.to_comodule(&base)?)
            } else {
                Loaded::Hopf(decode::<HopfFile>(v, path)?.to_hopf()?)
            });
        }
        if let Some(name) = &self.builtin {
            return Ok(Loaded::Hopf(builtin(name, &self.params.field()?)?));
        }
        match self.cleft.as_deref() {
            Some("sweedler") if self.params.generic => Ok(Loaded::Cleft(sweedler_cleft_generic())),
            Some("sweedler") => {
                let (a, b, c) = self.params.values()?;
                Ok(Loaded::Cleft(sweedler_cleft(&a, &b, &c)?))
            }
            Some(other) => Err(usage(format!("unknown cleft family `{other}`"))),
            None => Err(usage("give a file, --builtin or --cleft")),
        }
    }
}

impl Loaded {
    pub fn hopf(&self) -> &HopfAlgebra {
        match self {
            Loaded::Hopf(h) => h,
            Loaded::Cocycle(c) => c.host(),
            Loaded::Cleft(a) => a.host(),
            Loaded::Comodule(a) => &a.host,
        }
    }

    /// The twisted algebra; a bare Hopf algebra is twisted trivially.
    pub fn cleft(&self) -> CliResult<Option<CleftAlgebra>> {
        Ok(match self {
            Loaded::Hopf(h) => Some(twist(&TwoCocycle::trivial(Arc::new(h.clone())))?),
            Loaded::Cocycle(c) => Some(twist(c)?),
            Loaded::Cleft(a) => Some(a.clone()),
            Loaded::Comodule(_) => None,
        })
    }

    pub fn comodule(&self) -> CliResult<ComoduleAlgebra> {
        Ok(match self {
            Loaded::Comodule(a) => a.clone(),
            other => other.cleft()?.expect("not a comodule file").comod,
        })
    }

    fn cocycle(&self) -> CliResult<TwoCocycle> {
        match self {
            Loaded::Hopf(h) => Ok(TwoCocycle::trivial(Arc::new(h.clone()))),
            Loaded::Cocycle(c) => Ok(c.clone()),
            Loaded::Cleft(a) => match &a.provenance {
                hopfpi::cocycle::Provenance::Cocycle(c) => Ok(c.clone()),
                hopfpi::cocycle::Provenance::Presentation { .. } => {
                    Err(usage("A_{a,b,c} is given by a presentation; no cocycle table is known"))
                }
            },
            Loaded::Comodule(_) => Err(usage("sigma needs a cocycle, not a comodule algebra")),
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Loaded::Hopf(_) => "hopf",
            Loaded::Cocycle(_) => "cocycle",
            Loaded::Cleft(_) => "cleft",
            Loaded::Comodule(_) => "comodule",
        }
    }
}

fn violations_json(v: &[Violation]) -> Value {
    serde_json::to_value(v).expect("serializable")
}

pub fn verdict_json(v: &IdentityVerdict, alg_labels: &[String]) -> CliResult<Value> {
    let mut out = Map::new();
    out.insert("is_identity".into(), json!(v.is_identity));
    out.insert("image".into(), mixed_json(&v.image, alg_labels));
    match &v.witness {
        Some(w) => {
            let point: Map<String, Value> = w.iter().map(|(k, s)| (k.clone(), json!(s.to_string()))).collect();
            out.insert("witness".into(), Value::Object(point));
            let value = v.image.substitute(w)?;
            out.insert("value_at_witness".into(), mixed_json(&value, alg_labels));
        }
        None => {
            out.insert("witness".into(), Value::Null);
        }
    }
    if let Some(w) = &v.warning {
        out.insert("warning".into(), json!(w));
    }
    Ok(Value::Object(out))
}

fn basis_json(basis: &[hopfpi::sparse::SparseVec], labels: &[String]) -> Value {
    Value::Array(basis.iter().map(|v| vector_json(v, labels)).collect())
}

fn kernel_json(r: usize, basis: &[hopfpi::freealg::FreeElement], labels: &[String]) -> Value {
    json!({
        "degree": r,
        "dimension": basis.len(),
        "basis": basis.iter().map(|p| free_element_json(p, labels)).collect::<Vec<_>>(),
        "display": basis.iter().map(|p| p.display(labels).to_string()).collect::<Vec<_>>(),
    })
}

fn bilinear_json(form: &[Vec<Scalar>], labels: &[String]) -> Value {
    let mut out = Map::new();
    for (i, row) in form.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            if !s.is_zero() {
                out.insert(format!("{},{}", labels[i], labels[j]), json!(fraction_str(s)));
            }
        }
    }
    Value::Object(out)
}

pub fn execute(cmd: &Command) -> CliResult<Outcome> {
    match cmd {
        Command::Verify(src) => verify(&src.load()?),
        Command::CheckIdentity { source, expr, general } => {
            let loaded = source.load()?;
            let h = loaded.hopf();
            let p = parse_expression(expr, h)?;
            let cleft = if *general { None } else { loaded.cleft()? };
            let (verdict, labels) = match cleft {
                Some(a) => (is_identity_twisted(&p, &a)?, a.comod.alg.labels.clone()),
                None => {
                    let a = loaded.comodule()?;
                    (is_identity_general(&p, &a)?, a.alg.labels.clone())
                }
            };
            let mut report = verdict_json(&verdict, &labels)?;
            report["expression"] = json!(p.display(h.labels()).to_string());
            report["method"] = json!(if *general || matches!(loaded, Loaded::Comodule(_)) { "general" } else { "universal" });
            Ok(Outcome::new(report, verdict.is_identity))
        }
        Command::Kernel { source, degree, cap } => {
            let loaded = source.load()?;
            let basis = match loaded.cleft()? {
                Some(a) => GenericMap::universal(&a).kernel_of_degree(*degree, *cap)?,
                None => GenericMap::general(&loaded.comodule()?)?.kernel_of_degree(*degree, *cap)?,
            };
            Ok(Outcome::new(kernel_json(*degree, &basis, loaded.hopf().labels()), true))
        }
        Command::MinimalDegree { source, max_degree } => {
            let loaded = source.load()?;
            let a = loaded
                .cleft()?
                .ok_or_else(|| usage("minimal-degree needs a twisted algebra"))?;
            let labels = loaded.hopf().labels();
            let report = match minimal_identity_degree(&a, *max_degree)? {
                Some((r, basis)) => kernel_json(r, &basis, labels),
                None => json!({ "degree": null, "searched_up_to": max_degree }),
            };
            Ok(Outcome::new(report, true))
        }
        Command::Sigma(src) => {
            let loaded = src.load()?;
            let c = loaded.cocycle()?;
            let h = c.host();
            let table = sigma(&c)?;
            let labels = h.labels();
            let gens: Map<String, Value> = generic_base_generators(h, &table)
                .iter()
                .map(|(name, v)| (name.clone(), json!(fraction_str(v))))
                .collect();
            let report = json!({
                "variables": table.tinv.vars,
                "sigma": bilinear_json(&table.sigma, labels),
                "sigma_inverse": bilinear_json(&table.sigma_inv, labels),
                "generators": gens,
            });
            Ok(Outcome::new(report, true))
        }
        Command::Tinv(src) => {
            let loaded = src.load()?;
            let h = loaded.hopf();
            let ti = t_inverse(h)?;
            let values: Map<String, Value> = h
                .labels()
                .iter()
                .zip(&ti.values)
                .map(|(l, v)| (l.clone(), json!(fraction_str(v))))
                .collect();
            let report = json!({ "variables": ti.vars, "t_inverse": values });
            Ok(Outcome::new(report, true))
        }
        Command::Coinvariants(src) => {
            let a = src.load()?.comodule()?;
            let basis = a.coinvariants()?;
            Ok(Outcome::new(json!({ "dimension": basis.len(), "basis": basis_json(&basis, &a.alg.labels) }), true))
        }
        Command::Center(src) => {
            let a = src.load()?.comodule()?;
            let basis = a.center()?;
            Ok(Outcome::new(json!({ "dimension": basis.len(), "basis": basis_json(&basis, &a.alg.labels) }), true))
        }
        Command::Demo(params) => {
            let (a, b, c) = params.values()?;
            let report = demo::demo_sweedler(&a, &b, &c)?;
            let ok = report["ok"].as_bool().unwrap_or(false);
            Ok(Outcome::new(report, ok))
        }
    }
}

fn verify(loaded: &Loaded) -> CliResult<Outcome> {
    let report = match loaded {
        Loaded::Hopf(h) => h.verify()?,
        Loaded::Cocycle(c) => {
            let mut r = c.host().verify()?;
            r.extend(c.verify());
            r.extend(twist(c)?.comod.verify()?);
            r
        }
        Loaded::Cleft(a) => a.comod.verify()?,
        Loaded::Comodule(a) => {
            let mut r = a.host.verify()?;
            r.extend(a.verify()?);
            r
        }
    };
    let out = json!({
        "kind": loaded.kind(),
        "dimension": match loaded {
            Loaded::Comodule(a) => a.dim(),
            other => other.hopf().dim(),
        },
        "violations": violations_json(&report),
    });
    Ok(Outcome::new(out, report.is_empty()))
}

/// The text written for `cli`: JSON, or the plain rendering with `--pretty`.
pub fn format_report(report: &Value, pretty: bool) -> String {
    if pretty {
        render::render(report)
    } else {
        let mut s = serde_json::to_string(report).expect("serializable");
        s.push('\n');
        s
    }
}

/// Runs a parsed command line and returns the exit code. Errors go to
/// standard error as JSON and yield exit code 2.
pub fn run(cli: &Cli) -> i32 {
    let (text, code) = match execute(&cli.command) {
        Ok(o) => (format_report(&o.report, cli.pretty), o.code),
        Err(e) => {
            eprintln!("{}", json!({ "error": e.to_string() }));
            return 2;
        }
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("{}", json!({ "error": format!("{}: {e}", path.display()) }));
                return 2;
            }
        }
        None => print!("{text}"),
    }
    code
}
