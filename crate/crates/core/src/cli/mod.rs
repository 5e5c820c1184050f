//! Command-line front end. [`run`] parses arguments and returns the
//! exit code and the text to print, so it can be driven from tests.

mod reproduce;

use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::agc::{
    brute_min_distance, build_cl, designed_certificates, designed_distances, gkl_bound_cl, gkl_bound_comega,
    gkl_comega_value, AgcError, CertificateKind, CodeReport, DEFAULT_BRUTE_BUDGET,
};
use crate::curves::cache::{cache_dir_from_env, load_or_enumerate};
use crate::curves::{
    build_curve, enumerate_points, maximality_audit, quotient_project, verify_cover, verify_cover_with, AffinePoint,
    Budget, CurveError, CurveSpec, Family, PointSet,
};
use crate::numsg::{is_telescopic, NumericalSemigroup};
use crate::rrspace::{cab_parameters, rr_basis_for_shape, weierstrass_semigroup, WeierstrassData};

pub use reproduce::{reproduce, Check, ReproduceError, ReproduceReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAIL: i32 = 2;

/// Matrices with more entries than this get `k` from the semigroup count
/// instead of an explicit rank computation.
const RANK_LIMIT: u64 = 1 << 24;

#[derive(Parser, Debug)]
#[command(name = "hermq", version, about = "Maximal quotient curves of the Hermitian curve", disable_help_flag = true)]
struct Cli {
    #[arg(long, action = ArgAction::Help, global = true)]
    help: Option<bool>,
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Point-table cache directory (defaults to $HERMQ_CACHE_DIR)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Largest F_{q^2} to enumerate
    #[arg(long, global = true)]
    max_field: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a curve, count its points and audit maximality
    #[command(disable_help_flag = true)]
    Curve {
        #[command(flatten)]
        curve: CurveArgs,
        /// Write the point table as CSV
        #[arg(long)]
        points_out: Option<PathBuf>,
    },
    /// Numerical semigroup report, from generators or from a curve
    #[command(disable_help_flag = true)]
    Semigroup {
        generators: Vec<u64>,
        #[arg(long)]
        telescopic: bool,
        #[command(flatten)]
        curve: OptCurveArgs,
    },
    /// One-point code parameters and distance bounds
    #[command(disable_help_flag = true)]
    Code(CodeArgs),
    /// Re-run a worked example and compare every number
    #[command(disable_help_flag = true)]
    Reproduce { example: u32 },
    /// Check the quotient maps pointwise
    #[command(disable_help_flag = true)]
    Verify {
        #[command(flatten)]
        curve: CurveArgs,
        /// Perturb every image off the curve (negative control)
        #[arg(long)]
        inject_off_curve: bool,
    },
}

#[derive(Args, Debug, Clone)]
struct CurveArgs {
    #[arg(long)]
    family: Family,
    #[arg(short = 'p')]
    p: u32,
    #[arg(short = 'h')]
    h: u32,
    #[arg(short = 'd')]
    d: Option<u32>,
    /// Reject parameters outside p >= 5, d >= 5
    #[arg(long)]
    strict: bool,
}

#[derive(Args, Debug, Clone)]
struct OptCurveArgs {
    #[arg(long)]
    family: Option<Family>,
    #[arg(short = 'p', requires = "family")]
    p: Option<u32>,
    #[arg(short = 'h', requires = "family")]
    h: Option<u32>,
    #[arg(short = 'd', requires = "family")]
    d: Option<u32>,
    #[arg(long)]
    strict: bool,
}

#[derive(Args, Debug, Clone)]
struct CodeArgs {
    #[command(flatten)]
    curve: CurveArgs,
    #[arg(long, default_value_t = 0)]
    gamma: u64,
    /// Use the first n points in lexicographic order
    #[arg(long)]
    n: Option<usize>,
    /// Gap-run bound for C_L
    #[arg(long)]
    bounds: bool,
    /// Exact minimum distance by exhaustive search
    #[arg(long)]
    brute: bool,
    #[arg(long, default_value_t = DEFAULT_BRUTE_BUDGET)]
    brute_budget: u64,
    /// Gap-run bound for the dual code with gamma = alpha + beta - 1
    #[arg(long, requires_all = ["alpha", "beta"])]
    omega_bound: bool,
    #[arg(long)]
    alpha: Option<u64>,
    #[arg(long)]
    beta: Option<u64>,
    /// Run length; defaults to the longest gap run starting at alpha
    #[arg(long)]
    t: Option<u64>,
    /// Write the generator matrix as CSV
    #[arg(long)]
    matrix_out: Option<PathBuf>,
}

/// What a run produced: the exit code and the text for stdout/stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl ToString) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: msg.to_string(),
        }
    }
}

struct Ctx {
    format: Format,
    budget: Budget,
    cache_dir: Option<PathBuf>,
}

struct Produced {
    pass: bool,
    result: Value,
    spec: Option<CurveSpec>,
    parameters: Value,
    cache: Option<Value>,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome::usage(text),
            };
        }
    };
    let mut budget = Budget::default();
    if let Some(m) = cli.max_field {
        budget.max_field = m;
    }
    let ctx = Ctx {
        format: cli.format,
        budget,
        cache_dir: cli.cache_dir.or_else(cache_dir_from_env),
    };
    let started = Instant::now();
    let command_name = match &cli.command {
        Command::Curve { .. } => "curve",
        Command::Semigroup { .. } => "semigroup",
        Command::Code(_) => "code",
        Command::Reproduce { .. } => "reproduce",
        Command::Verify { .. } => "verify",
    };
    let produced = match cli.command {
        Command::Curve { curve, points_out } => cmd_curve(&ctx, &curve, points_out),
        Command::Semigroup {
            generators,
            telescopic,
            curve,
        } => cmd_semigroup(&generators, telescopic, &curve),
        Command::Code(args) => cmd_code(&ctx, &args),
        Command::Reproduce { example } => cmd_reproduce(&ctx, example),
        Command::Verify { curve, inject_off_curve } => cmd_verify(&ctx, &curve, inject_off_curve),
    };
    let produced = match produced {
        Ok(p) => p,
        Err(msg) => return Outcome::usage(msg),
    };
    let elapsed = started.elapsed();
    let doc = json!({
        "metadata": metadata(command_name, &produced, elapsed.as_secs_f64() * 1000.0),
        "result": produced.result,
    });
    Outcome {
        code: if produced.pass { EXIT_OK } else { EXIT_FAIL },
        stdout: render(&doc, ctx.format),
        stderr: String::new(),
    }
}

fn metadata(command: &str, produced: &Produced, elapsed_ms: f64) -> Value {
    let (field, omega, warnings) = match &produced.spec {
        Some(spec) => (
            serde_json::to_value(spec.field.descriptor()).expect("serializable"),
            spec.omega.map_or(Value::Null, |w| json!(spec.field.coeffs(w))),
            json!(spec.warnings),
        ),
        None => (Value::Null, Value::Null, json!([])),
    };
    let mut meta = json!({
        "tool": env!("CARGO_PKG_NAME"),
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "parameters": produced.parameters,
        "field": field,
        "omega": omega,
        "warnings": warnings,
        "timing": { "elapsed_ms": elapsed_ms },
    });
    if let Some(cache) = &produced.cache {
        meta["cache"] = cache.clone();
    }
    meta
}

/// Removes `metadata.timing`, the only field allowed to differ between runs.
pub fn strip_timing(doc: &mut Value) {
    if let Some(meta) = doc.get_mut("metadata").and_then(Value::as_object_mut) {
        meta.remove("timing");
    }
}

fn render(doc: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(doc).expect("serializable") + "\n",
        Format::Table | Format::Csv => {
            let mut rows = Vec::new();
            flatten("", doc, &mut rows);
            let mut out = String::new();
            if format == Format::Csv {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["key", "value"]).expect("in-memory");
                for (k, v) in &rows {
                    w.write_record([k, v]).expect("in-memory");
                }
                out = String::from_utf8(w.into_inner().expect("in-memory")).expect("utf8");
            } else {
                let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in &rows {
                    out.push_str(&format!("{k:<width$}  {v}\n"));
                }
            }
            out
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => map.iter().for_each(|(k, v)| flatten(&join(k), v, out)),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let text: Vec<String> = items.iter().map(scalar).collect();
            out.push((prefix.to_string(), text.join(" ")));
        }
        Value::Array(items) => items
            .iter()
            .enumerate()
            .for_each(|(i, v)| flatten(&join(&i.to_string()), v, out)),
        other => out.push((prefix.to_string(), scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn curve_parameters(c: &CurveArgs) -> Value {
    json!({ "family": c.family.name(), "p": c.p, "h": c.h, "d": c.d, "strict": c.strict })
}

fn build(c: &CurveArgs) -> Result<CurveSpec, String> {
    build_curve(c.family, c.p, c.h, c.d, c.strict).map_err(|e| e.to_string())
}

fn points_for(ctx: &Ctx, spec: &CurveSpec) -> Result<(PointSet, Option<Value>), String> {
    match &ctx.cache_dir {
        Some(dir) => {
            let (set, status) = load_or_enumerate(dir, spec, &ctx.budget).map_err(|e| e.to_string())?;
            Ok((set, Some(json!({ "dir": dir.display().to_string(), "status": status }))))
        }
        None => Ok((enumerate_points(spec, &ctx.budget).map_err(|e| e.to_string())?, None)),
    }
}

fn write_points_csv(path: &PathBuf, spec: &CurveSpec, points: &[AffinePoint]) -> Result<(), String> {
    let f = &*spec.field;
    let mut w = csv::Writer::from_path(path).map_err(|e| e.to_string())?;
    w.write_record(["x", "y"]).map_err(|e| e.to_string())?;
    for pt in points {
        w.write_record([f.format(pt.x), f.format(pt.y)]).map_err(|e| e.to_string())?;
    }
    w.flush().map_err(|e| e.to_string())
}

fn cmd_curve(ctx: &Ctx, c: &CurveArgs, points_out: Option<PathBuf>) -> Result<Produced, String> {
    let spec = build(c)?;
    let (set, cache) = points_for(ctx, &spec)?;
    let audit = match maximality_audit(&spec, &set) {
        Ok(a) => a,
        // a negative deficit falsifies maximality: report it as a failed run
        Err(e @ CurveError::NegativeDeficit { .. }) => {
            return Ok(Produced {
                pass: false,
                result: json!({ "curve": spec.descriptor(), "error": e.to_string() }),
                parameters: curve_parameters(c),
                spec: Some(spec),
                cache,
            })
        }
        Err(e) => return Err(e.to_string()),
    };
    if let Some(path) = &points_out {
        write_points_csv(path, &spec, &set.points)?;
    }
    let result = json!({
        "curve": spec.descriptor(),
        "genus": spec.genus(),
        "N": audit.expected_total,
        "audit": audit,
    });
    Ok(Produced {
        pass: audit.pass,
        result,
        parameters: curve_parameters(c),
        spec: Some(spec),
        cache,
    })
}

fn cmd_semigroup(gens: &[u64], telescopic: bool, c: &OptCurveArgs) -> Result<Produced, String> {
    if let Some(family) = c.family {
        let (Some(p), Some(h)) = (c.p, c.h) else {
            return Err("--family needs -p and -h".into());
        };
        let args = CurveArgs {
            family,
            p,
            h,
            d: c.d,
            strict: c.strict,
        };
        let spec = build(&args)?;
        let result = match weierstrass_semigroup(&spec).map_err(|e| e.to_string())? {
            WeierstrassData::Full { semigroup, note } => {
                let shape = cab_parameters(&spec).map_err(|e| e.to_string())?;
                json!({
                    "curve": spec.descriptor(),
                    "shape": shape,
                    "semigroup": semigroup.report(),
                    "genus_matches_curve": semigroup.genus() == spec.genus(),
                    "note": note,
                })
            }
            WeierstrassData::Partial(pm) => json!({ "curve": spec.descriptor(), "partial": pm }),
        };
        let pass = result.get("genus_matches_curve").and_then(Value::as_bool).unwrap_or(true);
        return Ok(Produced {
            pass,
            result,
            parameters: curve_parameters(&args),
            spec: Some(spec),
            cache: None,
        });
    }
    if gens.is_empty() {
        return Err("give generators or --family".into());
    }
    let s = NumericalSemigroup::from_generators(gens).map_err(|e| e.to_string())?;
    let mut result = json!({ "semigroup": s.report() });
    if telescopic {
        let report = is_telescopic(gens).map_err(|e| e.to_string())?;
        result["telescopic"] = to_value(&report);
        if let Some(l) = report.l_g {
            result["telescopic_matches"] = json!(l == s.frobenius() && report.g == Some(s.genus() as i64));
        }
    }
    Ok(Produced {
        pass: true,
        result,
        parameters: json!({ "generators": gens, "telescopic": telescopic }),
        spec: None,
        cache: None,
    })
}

fn refusal(kind: &str, e: &AgcError) -> Value {
    json!({ "kind": kind, "refused": e.to_string() })
}

fn cmd_code(ctx: &Ctx, a: &CodeArgs) -> Result<Produced, String> {
    let spec = build(&a.curve)?;
    let shape = cab_parameters(&spec).map_err(|e| e.to_string())?;
    let semigroup = NumericalSemigroup::from_generators(&[shape.a, shape.b]).map_err(|e| e.to_string())?;
    let (set, cache) = points_for(ctx, &spec)?;
    let mut points = set.points;
    if let Some(n) = a.n {
        if n > points.len() {
            return Err(format!("--n {n} exceeds the {} affine points", points.len()));
        }
        points.truncate(n);
    }
    let gamma = if a.omega_bound {
        a.alpha.unwrap() + a.beta.unwrap() - 1
    } else {
        a.gamma
    };
    let n = points.len() as u64;
    let basis_len = rr_basis_for_shape(&shape, gamma).len() as u64;

    let mut certificates = designed_certificates(n, gamma, spec.genus());
    let mut refused = Vec::new();
    let explicit = basis_len.saturating_mul(n) <= RANK_LIMIT || a.brute || a.matrix_out.is_some();
    let (k, k_method) = if explicit {
        let code = build_cl(&spec, gamma, Some(points), &ctx.budget).map_err(|e| e.to_string())?;
        if a.brute {
            match brute_min_distance(&code, a.brute_budget) {
                Ok(c) => certificates.push(c),
                Err(e) => refused.push(refusal("brute", &e)),
            }
        }
        if let Some(path) = &a.matrix_out {
            let text = code.generator_csv().map_err(|e| e.to_string())?;
            std::fs::write(path, text).map_err(|e| e.to_string())?;
        }
        (code.k as u64, "rank")
    } else {
        let k = if gamma < n { semigroup.nongaps_up_to(gamma) } else { basis_len.min(n) };
        (k, "semigroup-count")
    };
    let designed = designed_distances(n, gamma, spec.genus());
    if a.bounds {
        match gkl_bound_cl(&semigroup, gamma, n) {
            Ok(c) => certificates.push(c),
            Err(e) => refused.push(refusal("gkl_CL", &e)),
        }
    }
    let mut omega = Value::Null;
    if a.omega_bound {
        let (alpha, beta) = (a.alpha.unwrap(), a.beta.unwrap());
        let (t, t_source) = match a.t {
            Some(t) => (t, "given"),
            None if semigroup.is_gap(alpha) => {
                let mut t = 0;
                while semigroup.is_gap(alpha + t + 1) {
                    t += 1;
                }
                (t, "gap run from alpha")
            }
            None => (0, "alpha is a non-gap"),
        };
        match gkl_bound_comega(&semigroup, alpha, beta, t, spec.genus()) {
            Ok(c) => certificates.push(c),
            Err(e) => refused.push(refusal("gkl_COmega", &e)),
        }
        omega = json!({
            "alpha": alpha,
            "beta": beta,
            "t": t,
            "t_source": t_source,
            "two_g_minus_two": 2 * spec.genus() as i64 - 2,
            "formula_value_unverified": gkl_comega_value(alpha, beta, t, spec.genus()),
            "max_n": n,
        });
    }
    let report = CodeReport {
        n,
        k,
        gamma,
        designed_cl: designed.d_cl,
        designed_comega: designed.d_comega,
        certificates,
    };
    let brute = report
        .certificates
        .iter()
        .find(|c| c.kind == CertificateKind::Brute)
        .map(|c| c.value);
    // every issued bound must sit below an exact distance when one is known
    let consistent = brute.is_none_or(|d| {
        report
            .certificates
            .iter()
            .filter(|c| c.kind == CertificateKind::DesignedCl || c.kind == CertificateKind::GklCl)
            .all(|c| c.value <= d)
    });
    let result = json!({
        "curve": spec.descriptor(),
        "code": report,
        "k_method": k_method,
        "refused": refused,
        "omega_bound": omega,
        "bounds_consistent": consistent,
    });
    let mut parameters = curve_parameters(&a.curve);
    parameters["gamma"] = json!(gamma);
    parameters["n"] = json!(a.n);
    Ok(Produced {
        pass: consistent,
        result,
        parameters,
        spec: Some(spec),
        cache,
    })
}

fn cmd_reproduce(ctx: &Ctx, example: u32) -> Result<Produced, String> {
    let report = reproduce(example, &ctx.budget).map_err(|e| e.to_string())?;
    let spec = report.spec.clone();
    Ok(Produced {
        pass: report.all_pass(),
        result: to_value(&report),
        parameters: json!({ "example": example }),
        spec: Some(spec),
        cache: None,
    })
}

fn cmd_verify(ctx: &Ctx, c: &CurveArgs, inject: bool) -> Result<Produced, String> {
    let spec = build(c)?;
    let report = if inject {
        let f = Arc::clone(&spec.field);
        verify_cover_with(&spec, &ctx.budget, |pt| {
            quotient_project(&spec, pt).map(|img| AffinePoint::new(img.x, f.add(img.y, f.one())))
        })
    } else {
        verify_cover(&spec, &ctx.budget)
    }
    .map_err(|e| e.to_string())?;
    let mut parameters = curve_parameters(c);
    parameters["inject_off_curve"] = json!(inject);
    Ok(Produced {
        pass: report.pass,
        result: json!({ "curve": spec.descriptor(), "cover": report }),
        parameters,
        spec: Some(spec),
        cache: None,
    })
}
