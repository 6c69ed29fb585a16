use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use skeinlab::blocks::McgGen;
use skeinlab::category::{shipped, validate, Category, CategoryData};
use skeinlab::coend::Engine;
use skeinlab::ribbon::{Evaluator, Strand};
use skeinlab::Error;

mod render;

const DEFAULT_MAX_DIM: usize = 4096;

#[derive(Parser)]
#[command(name = "skeinlab", version, about = "Handlebody skein modules and conformal blocks, computed exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a category file against its axioms.
    Validate(Common),
    /// Canonical end, α, unimodularity, modified traces, integrals.
    Invariants(Common),
    /// Block space Hom(X₁⊗…⊗Xₙ⊗𝔸^g, α⁻¹).
    Blocks(SigArgs),
    /// Sew slot pairs by a coend and compare with the direct formula.
    Glue {
        #[command(flatten)]
        sig: SigArgs,
        /// 1-based slot positions to sew; repeat for several pairs.
        #[arg(long, num_args = 2, value_names = ["I", "J"], required = true)]
        sew: Vec<usize>,
    },
    /// Compute a block space by every available route.
    Compare(SigArgs),
    /// Evaluate a ribbon diagram.
    Eval {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        diagram: PathBuf,
        /// Sidecar file of coupon morphisms.
        #[arg(long)]
        morphisms: Option<PathBuf>,
    },
    /// Mapping-class action of a generator word on a block space.
    Actions {
        #[command(flatten)]
        sig: SigArgs,
        /// e.g. `braid(1),twist(2),meridian_twist(1)`
        #[arg(long)]
        word: String,
    },
}

#[derive(Args)]
struct Common {
    /// Category file, or the name of a shipped category.
    category: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct SigArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value_t = 0)]
    genus: usize,
    /// Comma-separated labels; `_` marks an unlabelled slot.
    #[arg(long, default_value = "")]
    labels: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let (code, kind) = match &e {
            Error::Io(_) => (1, "io"),
            Error::Schema(_) => (1, "schema"),
            Error::Axiom { .. } => (1, "axiom"),
            Error::Syntax { .. } => (1, "syntax"),
            Error::TypeMismatch { .. } => (1, "type_mismatch"),
            Error::UnknownCoupon(_) => (1, "unknown_coupon"),
            Error::DimensionCap { .. } => (1, "dimension_cap"),
            Error::UnknownObject(_) => (2, "unknown_object"),
            Error::Slot(_) => (2, "slot"),
            Error::Index(_) => (2, "index"),
            Error::UnsupportedForBackend { .. } => (2, "unsupported_for_backend"),
            _ => (1, "computation"),
        };
        Failure {
            code,
            kind,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        kind: "usage",
        message: message.into(),
    }
}

fn read_source(name: &str) -> Result<String, Failure> {
    let path = Path::new(name);
    if path.exists() {
        return std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{name}: {e}")).into());
    }
    match shipped::source(name) {
        Some(text) => Ok(text.to_string()),
        None => Err(Error::Io(format!("{name}: no such file or shipped category")).into()),
    }
}

fn max_dim() -> Result<usize, Failure> {
    match std::env::var("SKEINLAB_MAX_DIM") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| usage(format!("SKEINLAB_MAX_DIM must be a positive integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

fn load(name: &str) -> Result<Category, Failure> {
    let cap = max_dim()?;
    let cat = Category::from_json_str(&read_source(name)?)?;
    Ok(cat.with_max_dim(cap))
}

fn labels(text: &str) -> Vec<&str> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}

fn word_json(word: &[Strand]) -> Value {
    Value::Array(word.iter().map(|s| json!(s.to_string())).collect())
}

fn run(cli: Cli) -> Result<(Value, Format, u8), Failure> {
    match cli.command {
        Command::Validate(c) => {
            let data = CategoryData::from_json_str(&read_source(&c.category)?)?;
            let report = validate(&data);
            let code = if report.ok() { 0 } else { 1 };
            Ok((report.to_json(), c.format, code))
        }
        Command::Invariants(c) => {
            let e = Engine::new(load(&c.category)?);
            let report = serde_json::to_value(e.report()?).expect("report serializes");
            Ok((report, c.format, 0))
        }
        Command::Blocks(s) => {
            let e = Engine::new(load(&s.common.category)?);
            let sig = e.sig(s.genus, &labels(&s.labels))?;
            let b = e.blocks(&sig)?;
            let out = json!({
                "sig": sig.to_json(),
                "dim_direct": b.dim,
                "provenance": b.provenance,
                "warnings": b.warnings,
            });
            Ok((out, s.common.format, 0))
        }
        Command::Glue { sig: s, sew } => {
            let e = Engine::new(load(&s.common.category)?);
            let sig = e.sig(s.genus, &labels(&s.labels))?;
            let mut pairs = Vec::new();
            for p in sew.chunks(2) {
                if p[0] == 0 || p[1] == 0 {
                    return Err(usage("--sew positions are 1-based"));
                }
                pairs.push((p[0] - 1, p[1] - 1));
            }
            let r = e.glue_pairs(&sig, &pairs)?;
            let out = json!({
                "sig": sig.to_json(),
                "sewn": r.direct.sig.to_json(),
                "dim_glued": r.glued.dim,
                "dim_direct": r.direct.dim,
                "agree": r.glued.dim == r.direct.dim,
                "iso": r.iso.as_ref().map(|(m, _)| m.to_json()),
                "warnings": r.glued.warnings,
            });
            Ok((out, s.common.format, 0))
        }
        Command::Compare(s) => {
            let e = Engine::new(load(&s.common.category)?);
            let sig = e.sig(s.genus, &labels(&s.labels))?;
            let report = serde_json::to_value(e.compare(&sig)?).expect("report serializes");
            Ok((report, s.common.format, 0))
        }
        Command::Eval {
            common,
            diagram,
            morphisms,
        } => {
            let cat = load(&common.category)?;
            let mut ev = Evaluator::new(&cat)?;
            if let Some(path) = morphisms {
                let text = std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                let value: Value =
                    serde_json::from_str(&text).map_err(|e| Error::Schema(format!("{}: invalid JSON: {e}", path.display())))?;
                ev.add_sidecar(&value)?;
            }
            let text =
                std::fs::read_to_string(&diagram).map_err(|e| Error::Io(format!("{}: {e}", diagram.display())))?;
            let d = ev.parse(&text)?;
            let m = ev.evaluate(&d)?;
            let out = json!({
                "domain": word_json(&d.input),
                "codomain": word_json(&d.output),
                "layers": d.layers.len(),
                "matrix": m.matrix.to_json(),
            });
            Ok((out, common.format, 0))
        }
        Command::Actions { sig: s, word } => {
            let e = Engine::new(load(&s.common.category)?);
            let sig = e.sig(s.genus, &labels(&s.labels))?;
            let gens = McgGen::parse_word(&word)?;
            let a = e.mcg_action(&sig, &gens)?;
            let out = json!({
                "sig": a.source.to_json(),
                "target": a.target.to_json(),
                "word": gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "dim": a.matrix.cols(),
                "matrix": a.matrix.to_json(),
            });
            Ok((out, s.common.format, 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or_default();
            let f = usage(first.trim_start_matches("error: "));
            eprintln!("{}", json!({"error": f.kind, "message": f.message}));
            return ExitCode::from(f.code);
        }
    };
    match run(cli) {
        Ok((value, format, code)) => {
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&value).expect("json") + "\n",
                Format::Text => render::text(&value),
            };
            // A closed pipe (e.g. `| head`) is not an error.
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("{}", json!({"error": f.kind, "message": f.message}));
            ExitCode::from(f.code)
        }
    }
}
