//! Command-line front end.
//!
//! [`run`] parses arguments, dispatches to the library, and maps failures to
//! exit codes: 0 success, 2 invalid input or usage, 3 registry or schema
//! problems, 4 internal consistency failures.

mod args;

use std::ffi::OsString;
use std::fs::File;
use std::io::Write;

use clap::{CommandFactory, Parser};
use serde::Serialize;
use serde_json::json;

use crate::benchdata::{self, BenchError, Dataset, Format, LerModel};
use crate::recommender::{
    self, FiltrationTrace, RecommendError, RecommendOptions, Recommendation, Recommendations, Scenario,
};
use crate::registry::{self, CodeSpec, MaxDistance, Registry, RegistryError, RegistrySource};
use crate::stabverify::{self, builtin_code, Claim, CodeDefinition, StabilizerCode, VerifyError, BUILTIN_NAMES};

use args::{BenchCommand, ClaimKind, Cli, Command, ModelArgs, OutputFormat, RecommendArgs, VerifyArgs};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_REGISTRY: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
    /// Subcommand whose usage line should follow the message.
    usage_for: Option<&'static str>,
}

impl Failure {
    fn usage(message: impl ToString, subcommand: &'static str) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.to_string(),
            usage_for: Some(subcommand),
        }
    }

    fn input(message: impl ToString) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.to_string(),
            usage_for: None,
        }
    }

    fn registry(message: impl ToString) -> Self {
        Self {
            code: EXIT_REGISTRY,
            message: message.to_string(),
            usage_for: None,
        }
    }

    fn internal(message: impl ToString) -> Self {
        Self {
            code: EXIT_INTERNAL,
            message: message.to_string(),
            usage_for: None,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::internal(format!("write failed: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::internal(format!("serialization failed: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::internal(format!("csv output failed: {e}"))
    }
}

/// Lookup failures come from user-supplied ids or distances; everything else
/// means the registry itself is bad.
fn lookup_failure(e: RegistryError) -> Failure {
    match e {
        RegistryError::UnknownCode(_) | RegistryError::InadmissibleDistance { .. } => Failure::input(e),
        _ => Failure::registry(e),
    }
}

fn bench_failure(e: BenchError) -> Failure {
    match e {
        BenchError::Registry(r) => lookup_failure(r),
        BenchError::Unmappable { .. } => Failure::registry(e),
        BenchError::InvalidArgument(_) => Failure::input(e),
        BenchError::Io(_) | BenchError::Csv(_) | BenchError::Json(_) => Failure::internal(e),
    }
}

fn verify_failure(e: VerifyError) -> Failure {
    Failure::input(e)
}

/// Runs the tool on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(&cli, out, err) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            if let Some(name) = f.usage_for {
                let mut cmd = Cli::command();
                cmd.build();
                if let Some(sub) = cmd.find_subcommand_mut(name) {
                    let _ = writeln!(err, "\n{}", sub.render_usage());
                }
            }
            f.code
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match &cli.command {
        Command::ValidateRegistry { path } => return validate_registry(cli, path, out),
        Command::Verify(a) => return verify(cli, a, out),
        _ => {}
    }
    let registry = load_registry(cli)?;
    match &cli.command {
        Command::Recommend(a) => recommend(cli, &registry, a, out, err),
        Command::MaxDistance(a) => {
            let code = registry.require(&a.code).map_err(lookup_failure)?;
            let md = registry::max_distance(code, a.budget, a.qorig);
            match cli.format {
                OutputFormat::Text => writeln!(out, "{md}")?,
                OutputFormat::Json => write_json(
                    out,
                    &MaxDistanceJson {
                        code: &code.id,
                        budget: a.budget,
                        q_orig: a.qorig,
                        max_distance: md,
                    },
                )?,
                OutputFormat::Csv => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    w.write_record(["code", "budget", "q_orig", "max_distance"])?;
                    w.write_record([code.id.clone(), a.budget.to_string(), a.qorig.to_string(), md.to_string()])?;
                    w.flush()?;
                }
            }
            Ok(())
        }
        Command::ListCodes => list_codes(cli, &registry, out),
        Command::ShowCode { id } => {
            let code = registry.require(id).map_err(lookup_failure)?;
            match cli.format {
                OutputFormat::Text => show_code_text(code, out)?,
                OutputFormat::Json => write_json(out, code)?,
                OutputFormat::Csv => return Err(Failure::usage("show-code has no csv output", "show-code")),
            }
            Ok(())
        }
        Command::ExportBench(b) => export_bench(cli, &registry, b, out),
        Command::ValidateRegistry { .. } | Command::Verify(_) => unreachable!("handled above"),
    }
}

fn load_registry(cli: &Cli) -> Result<Registry, Failure> {
    match &cli.registry {
        None => Ok(Registry::builtin()),
        Some(path) => {
            let file = File::open(path).map_err(|e| Failure::registry(format!("{}: {e}", path.display())))?;
            Registry::load(RegistrySource::Reader(file)).map_err(|e| Failure::registry(format!("{}: {e}", path.display())))
        }
    }
}

fn write_json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Serialized name of a unit enum variant.
fn name_of<T: Serialize>(value: &T) -> String {
    match serde_json::to_value(value) {
        Ok(serde_json::Value::String(s)) => s,
        Ok(other) => other.to_string(),
        Err(_) => String::from("?"),
    }
}

#[derive(Serialize)]
struct RecommendJson<'a> {
    scenario: &'a Scenario,
    effective_error_rate: f64,
    recommendations: &'a [Recommendation],
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<&'a FiltrationTrace>,
}

#[derive(Serialize)]
struct MaxDistanceJson<'a> {
    code: &'a str,
    budget: u64,
    q_orig: u64,
    max_distance: MaxDistance,
}

fn recommend(
    cli: &Cli,
    registry: &Registry,
    a: &RecommendArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let scenario = Scenario {
        q_type: a.qtype,
        max_q_avail: a.max_qavail,
        q_orig: a.qorig,
        multi_q_gate: a.multi_qgate,
        err_type: a.err_type,
        dep_err: a.dep_err,
        gate_err: a.gate_err,
        read_err: a.read_err,
    };
    let mut options = match &a.weights {
        None => RecommendOptions::default(),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            RecommendOptions::from_json(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?
        }
    };
    options.top_n = a.top;
    let recs = recommender::recommend(&scenario, registry, &options).map_err(|e| match e {
        RecommendError::InvalidScenario(_) => Failure::usage(e, "recommend"),
        RecommendError::InvalidWeights(_) => Failure::input(e),
        RecommendError::Consistency { .. } => Failure::internal(e),
    })?;
    match cli.format {
        OutputFormat::Text => recommend_text(cli.debug, &recs, out)?,
        OutputFormat::Json => write_json(
            out,
            &RecommendJson {
                scenario: &recs.scenario,
                effective_error_rate: recs.effective_error_rate,
                recommendations: &recs.recommendations,
                trace: cli.debug.then_some(&recs.trace),
            },
        )?,
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["rank", "id", "max_distance", "score"])?;
            for (i, r) in recs.recommendations.iter().enumerate() {
                w.write_record([(i + 1).to_string(), r.id.clone(), r.max_distance.to_string(), r.score.to_string()])?;
            }
            w.flush()?;
            if cli.debug {
                write_trace(&recs, err)?;
            }
        }
    }
    if recs.recommendations.is_empty() && cli.format == OutputFormat::Text {
        writeln!(err, "no code fits this scenario")?;
    }
    Ok(())
}

fn recommend_text(debug: bool, recs: &Recommendations, out: &mut dyn Write) -> Result<(), Failure> {
    for r in &recs.recommendations {
        writeln!(out, "{} {}", r.id, r.max_distance)?;
    }
    if debug {
        writeln!(out, "# effective error rate {}", recs.effective_error_rate)?;
        for r in &recs.recommendations {
            writeln!(out, "# score {} {:.4}", r.id, r.score)?;
        }
        write_trace(recs, out)?;
    }
    Ok(())
}

fn write_trace(recs: &Recommendations, w: &mut dyn Write) -> Result<(), Failure> {
    for e in &recs.trace.entries {
        writeln!(w, "# {} {} {}: {}", e.stage, e.code, name_of(&e.verdict), e.reason)?;
    }
    Ok(())
}

fn list_codes(cli: &Cli, registry: &Registry, out: &mut dyn Write) -> Result<(), Failure> {
    match cli.format {
        OutputFormat::Json => {
            out.write_all(registry.to_json_string().as_bytes())?;
            writeln!(out)?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["id", "display_name", "overhead", "distance", "k", "threshold"])?;
            for c in registry.iter() {
                w.write_record([
                    c.id.clone(),
                    c.display_name.clone(),
                    c.overhead.to_string(),
                    c.distance_domain.to_string(),
                    c.logical_qubits_per_block.to_string(),
                    c.threshold.to_string(),
                ])?;
            }
            w.flush()?;
        }
        OutputFormat::Text => {
            let width = registry.iter().map(|c| c.id.len()).max().unwrap_or(0);
            for c in registry.iter() {
                writeln!(
                    out,
                    "{:width$}  {:<18}  {:<7}  k={:<3} p_th={}",
                    c.id,
                    c.overhead.to_string(),
                    c.distance_domain.to_string(),
                    c.logical_qubits_per_block,
                    c.threshold,
                )?;
            }
        }
    }
    Ok(())
}

fn show_code_text(c: &CodeSpec, out: &mut dyn Write) -> Result<(), Failure> {
    let realizations: Vec<String> = c.realizations.iter().map(ToString::to_string).collect();
    let rows = [
        ("id", c.id.clone()),
        ("name", c.display_name.clone()),
        ("overhead", c.overhead.to_string()),
        ("distance", c.distance_domain.to_string()),
        ("logical qubits", c.logical_qubits_per_block.to_string()),
        ("threshold", c.threshold.to_string()),
        ("protection", name_of(&c.protection)),
        ("decoders", c.decoders.join(", ")),
        ("transversal", name_of(&c.transversal)),
        ("scalable", if c.scalable { "yes" } else { "no" }.to_string()),
        ("realizations", if realizations.is_empty() { "none".into() } else { realizations.join(", ") }),
        ("complexity", c.complexity.label().to_string()),
    ];
    for (k, v) in rows {
        writeln!(out, "{k:<15} {v}")?;
    }
    Ok(())
}

fn validate_registry(cli: &Cli, path: &std::path::Path, out: &mut dyn Write) -> Result<(), Failure> {
    let result = File::open(path)
        .map_err(RegistryError::Io)
        .and_then(|f| Registry::load(RegistrySource::Reader(f)));
    match (result, cli.format) {
        (Ok(reg), OutputFormat::Json) => write_json(out, &json!({"valid": true, "codes": reg.len()})),
        (Ok(reg), _) => Ok(writeln!(out, "ok: {} codes", reg.len())?),
        (Err(e), OutputFormat::Json) => {
            write_json(out, &json!({"valid": false, "error": e.to_string()}))?;
            Err(Failure::registry(format!("{}: {e}", path.display())))
        }
        (Err(e), _) => Err(Failure::registry(format!("{}: {e}", path.display()))),
    }
}

fn load_stabilizer_code(a: &VerifyArgs) -> Result<StabilizerCode, Failure> {
    if let Some(path) = &a.code_file {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
        return CodeDefinition::from_json(&text)
            .and_then(|d| d.build())
            .map_err(|e| Failure::input(format!("{}: {e}", path.display())));
    }
    let name = a.code.as_deref().unwrap_or_default();
    builtin_code(name).ok_or_else(|| {
        Failure::usage(
            format!("unknown built-in code `{name}` (known: {})", BUILTIN_NAMES.join(", ")),
            "verify",
        )
    })
}

fn verify(cli: &Cli, a: &VerifyArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let code = load_stabilizer_code(a)?;
    let claim = match a.claim {
        ClaimKind::Distance => Claim::Distance {
            w_max: a.wmax.unwrap_or(code.num_qubits()),
        },
        ClaimKind::Correctable => Claim::Correctable { t: a.t },
    };
    let report = stabverify::verify(&code, claim, a.restrict, a.cap).map_err(verify_failure)?;
    match cli.format {
        OutputFormat::Text => {
            writeln!(out, "{}", report.result)?;
            if cli.debug {
                if let Some(w) = &report.witness {
                    writeln!(out, "# witness {w}")?;
                }
                writeln!(out, "# examined {}", report.examined)?;
            }
        }
        OutputFormat::Json => write_json(out, &report)?,
        OutputFormat::Csv => return Err(Failure::usage("verify has no csv output", "verify")),
    }
    Ok(())
}

fn model(registry: &Registry, m: &ModelArgs) -> Result<LerModel, Failure> {
    let p_th = match m.p_th {
        Some(p) => p,
        None => registry.require(&m.code).map_err(lookup_failure)?.threshold,
    };
    LerModel::new(m.a, p_th).map_err(bench_failure)
}

fn grid(model: &LerModel, m: &ModelArgs) -> Result<Vec<f64>, Failure> {
    benchdata::log_grid(m.p_min, m.p_max.unwrap_or(model.p_th), m.points).map_err(bench_failure)
}

fn export_bench(cli: &Cli, registry: &Registry, b: &BenchCommand, out: &mut dyn Write) -> Result<(), Failure> {
    // Plain text for benchmark data is CSV.
    let format = match cli.format {
        OutputFormat::Json => Format::Json,
        OutputFormat::Text | OutputFormat::Csv => Format::Csv,
    };
    let written = match b {
        BenchCommand::Overhead(o) => {
            let ids: Vec<&str> = o.codes.iter().map(String::as_str).collect();
            let series = benchdata::overhead_series(registry, &ids, o.d_min..=o.d_max).map_err(bench_failure)?;
            benchdata::export(Dataset::Curves(&series), format, &mut *out)
        }
        BenchCommand::Thresholds => {
            let t = benchdata::threshold_series(registry);
            benchdata::export(Dataset::Thresholds(&t), format, &mut *out)
        }
        BenchCommand::Radar => {
            let r = benchdata::radar_data(registry).map_err(bench_failure)?;
            benchdata::export(Dataset::Radar(&r), format, &mut *out)
        }
        BenchCommand::Ler(l) => {
            let m = model(registry, &l.model)?;
            let curves = benchdata::ler_curves(&m, &l.distances, &grid(&m, &l.model)?);
            benchdata::export(Dataset::Curves(&curves), format, &mut *out)
        }
        BenchCommand::RequiredDistance(r) => {
            let m = model(registry, &r.model)?;
            let curves = benchdata::required_distance_curves(&m, &r.targets, &grid(&m, &r.model)?, r.d_max)
                .map_err(bench_failure)?;
            benchdata::export(Dataset::Curves(&curves), format, &mut *out)
        }
    };
    written.map(|_| ()).map_err(bench_failure)
}
