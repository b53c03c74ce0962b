//! The `leibniz` command-line front end.
//!
//! Every run produces one [`RunReport`]; the text format is a rendering of
//! the same document.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use leibniz::a_algebra::{is_a_algebra, theorem_battery};
use leibniz::algebra::{frattini_ideal, EnumKind, Enumerator, DEFAULT_BUDGET};
use leibniz::cyclic::{classify_cyclic, CyclicSpec};
use leibniz::decomp::{best_nilradical, structure_report, triangular_decomposition, Analysis};
use leibniz::io::corpus::{self, CorpusLimits, Origin};
use leibniz::io::{AlgebraFile, AnyAlgebra};
use leibniz::field::ScalarLit;
use leibniz::report::{Clause, Report, SubspaceRecord};
use leibniz::series::{predicates, radical, series, upper_central_series, RadicalStatus, SeriesKind};
use leibniz::{with_algebra, AnyField, Error, Field, LeibnizAlgebra};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_UNSUPPORTED: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "leibniz", version, about = "Analyze Leibniz algebras given by structure constants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Field tag such as `q`, `gf2` or `gf3^2`. Reinterprets file tables.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Report file, or the target directory for `corpus`.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Verify the Leibniz identity on a table.
    Check(FileArg),
    /// Series, predicates, centre, Leibniz kernel and radicals.
    Analyze(FileArg),
    /// Triangular decomposition and structure statements.
    Decompose(FileArg),
    /// Decide whether every nilpotent subalgebra is abelian.
    #[command(name = "a-algebra")]
    AAlgebra(FileArg),
    /// Run every structure statement that applies.
    Battery(FileArg),
    /// Classify a cyclic Leibniz algebra.
    Cyclic(CyclicArgs),
    /// The Frattini ideal.
    Frattini(FileArg),
    /// Count subspaces, subalgebras and ideals.
    Enumerate(EnumerateArgs),
    /// Generate the fixture and corpus files.
    Corpus(CorpusArgs),
}

#[derive(Debug, Args)]
struct FileArg {
    path: PathBuf,
}

#[derive(Debug, Args)]
struct CyclicArgs {
    #[arg(long)]
    n: usize,
    /// Comma-separated alpha_2, ..., alpha_n. Extension field elements are
    /// written as coefficient lists, e.g. `[0,1]`.
    #[arg(long, allow_hyphen_values = true)]
    alphas: String,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    path: PathBuf,
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
    /// Include the bases of the enumerated subspaces.
    #[arg(long)]
    list: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Subspaces,
    Subalgebras,
    Ideals,
}

impl From<KindArg> for EnumKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Subspaces => EnumKind::Subspaces,
            KindArg::Subalgebras => EnumKind::Subalgebras,
            KindArg::Ideals => EnumKind::Ideals,
        }
    }
}

#[derive(Debug, Args)]
struct CorpusArgs {
    /// Largest cyclic dimension in the sweeps.
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    /// Skip quotients by ideals.
    #[arg(long)]
    no_quotients: bool,
    /// Only the named fixtures, without sweeps, sums or quotients.
    #[arg(long)]
    fixtures_only: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorRecord {
    pub kind: String,
    pub message: String,
}

/// The single document emitted per run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input_digest: String,
    pub seed: u64,
    pub budget: u64,
    pub results: Value,
    pub findings: Vec<Clause>,
    pub errors: Vec<ErrorRecord>,
    pub exit_status: i32,
}

/// Rendered output and process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

/// Exit code for an error raised by the library.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InfiniteFieldUnsupported | Error::UnsupportedFactorization(_) | Error::BudgetExceeded { .. } => {
            EXIT_UNSUPPORTED
        }
        Error::ParseError { .. }
        | Error::FieldParseError(_)
        | Error::InvalidField(_)
        | Error::ShapeMismatch(_)
        | Error::BadSpec(_)
        | Error::DimensionMismatch { .. } => EXIT_INPUT,
        _ => EXIT_FAILED,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DivisionByZero => "division-by-zero",
        Error::FieldMismatch => "field-mismatch",
        Error::InvalidField(_) => "invalid-field",
        Error::ZeroPolynomial => "zero-polynomial",
        Error::UnsupportedFactorization(_) => "unsupported-factorization",
        Error::ShapeMismatch(_) => "shape-mismatch",
        Error::NoSolution => "no-solution",
        Error::AmbientMismatch(..) => "ambient-mismatch",
        Error::DimensionMismatch { .. } => "dimension-mismatch",
        Error::NotLeibniz(_) => "not-leibniz",
        Error::NotAnIdeal => "not-an-ideal",
        Error::NotASubalgebra => "not-a-subalgebra",
        Error::InfiniteFieldUnsupported => "infinite-field-unsupported",
        Error::BudgetExceeded { .. } => "budget-exceeded",
        Error::NotSolvable => "not-solvable",
        Error::CartanSearchFailed(_) => "cartan-search-failed",
        Error::NotDecomposing => "not-decomposing",
        Error::DecompositionFailed(_) => "decomposition-failed",
        Error::BadSpec(_) => "bad-spec",
        Error::ParseError { .. } => "parse-error",
        Error::FieldParseError(_) => "field-parse-error",
    }
}

/// A failed run: exit code plus the error entry.
struct Failure {
    code: i32,
    error: ErrorRecord,
    results: Value,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code(&e),
            error: ErrorRecord {
                kind: error_kind(&e).into(),
                message: e.to_string(),
            },
            results: Value::Null,
        }
    }
}

fn input_failure(kind: &str, message: String) -> Failure {
    Failure {
        code: EXIT_INPUT,
        error: ErrorRecord {
            kind: kind.into(),
            message,
        },
        results: Value::Null,
    }
}

/// Successful computation: results, findings and exit code (which may still
/// be nonzero when a checked statement failed).
struct Done {
    results: Value,
    findings: Vec<Clause>,
    code: i32,
    errors: Vec<ErrorRecord>,
}

impl Done {
    fn ok(results: Value) -> Self {
        Done {
            results,
            findings: vec![],
            code: EXIT_OK,
            errors: vec![],
        }
    }

    /// Exit 1 when `report` contains a failed clause.
    fn from_report(results: Value, report: &Report) -> Self {
        let code = if report.all_passed() { EXIT_OK } else { EXIT_FAILED };
        let errors = report
            .failures()
            .map(|c| ErrorRecord {
                kind: "clause-failed".into(),
                message: format!("{}: {}", c.id, c.anchor),
            })
            .collect();
        Done {
            results,
            findings: report.findings().cloned().collect(),
            code,
            errors,
        }
    }
}

struct Ctx {
    seed: u64,
    budget: u64,
    field: Option<String>,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Parses arguments and runs one command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome { output: text, code: EXIT_OK };
            }
            let report = RunReport {
                command: String::new(),
                input_digest: String::new(),
                seed: 0,
                budget: DEFAULT_BUDGET,
                results: Value::Null,
                findings: vec![],
                errors: vec![ErrorRecord {
                    kind: "usage".into(),
                    message: text.trim_end().to_string(),
                }],
                exit_status: EXIT_INPUT,
            };
            return Outcome {
                output: render(&report, Format::Json),
                code: EXIT_INPUT,
            };
        }
    };
    let ctx = Ctx {
        seed: cli.seed,
        budget: cli.budget,
        field: cli.field.clone(),
    };
    let name = command_name(&cli.command);
    let (input_digest, result) = dispatch(&cli, &ctx);
    let report = match result {
        Ok(done) => RunReport {
            command: name.into(),
            input_digest,
            seed: ctx.seed,
            budget: ctx.budget,
            results: done.results,
            findings: done.findings,
            errors: done.errors,
            exit_status: done.code,
        },
        Err(f) => RunReport {
            command: name.into(),
            input_digest,
            seed: ctx.seed,
            budget: ctx.budget,
            results: f.results,
            findings: vec![],
            errors: vec![f.error],
            exit_status: f.code,
        },
    };
    let text = render(&report, cli.format);
    match (&cli.output, &cli.command) {
        (Some(path), c) if !matches!(c, Command::Corpus(_)) => match fs::write(path, &text) {
            Ok(()) => Outcome {
                output: String::new(),
                code: report.exit_status,
            },
            Err(e) => Outcome {
                output: format!("cannot write {}: {e}\n", path.display()),
                code: EXIT_INPUT,
            },
        },
        _ => Outcome {
            output: text,
            code: report.exit_status,
        },
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check(_) => "check",
        Command::Analyze(_) => "analyze",
        Command::Decompose(_) => "decompose",
        Command::AAlgebra(_) => "a-algebra",
        Command::Battery(_) => "battery",
        Command::Cyclic(_) => "cyclic",
        Command::Frattini(_) => "frattini",
        Command::Enumerate(_) => "enumerate",
        Command::Corpus(_) => "corpus",
    }
}

fn dispatch(cli: &Cli, ctx: &Ctx) -> (String, Result<Done, Failure>) {
    match &cli.command {
        Command::Check(a) => with_file(&a.path, |text| check(text, ctx)),
        Command::Analyze(a) => with_loaded(&a.path, ctx, |l| with_algebra!(l, l => analyze(l, ctx))),
        Command::Decompose(a) => with_loaded(&a.path, ctx, |l| with_algebra!(l, l => decompose(l, ctx))),
        Command::AAlgebra(a) => with_loaded(&a.path, ctx, |l| {
            with_algebra!(l, l => Ok(Done::ok(json!({ "verdict": is_a_algebra(l, ctx.budget, ctx.seed).record() }))))
        }),
        Command::Battery(a) => with_loaded(&a.path, ctx, |l| {
            with_algebra!(l, l => {
                let b = theorem_battery(l, ctx.budget, ctx.seed);
                let results = json!({ "verdict": b.verdict.record(), "report": b.report });
                Ok(Done::from_report(results, &b.report))
            })
        }),
        Command::Frattini(a) => with_loaded(&a.path, ctx, |l| {
            with_algebra!(l, l => {
                let phi = frattini_ideal(l, ctx.budget)?;
                Ok(Done::ok(json!({ "frattini": SubspaceRecord::new(&phi), "phi_free": phi.is_zero() })))
            })
        }),
        Command::Enumerate(a) => with_loaded(&a.path, ctx, |l| with_algebra!(l, l => enumerate(l, a, ctx))),
        Command::Cyclic(a) => {
            let field = ctx.field.clone().unwrap_or_else(|| "q".into());
            let canonical = format!("cyclic field={field} n={} alphas={}", a.n, a.alphas);
            (digest(canonical.as_bytes()), cyclic(&field, a, ctx))
        }
        Command::Corpus(a) => {
            let canonical = format!(
                "corpus max_n={} quotients={} fixtures_only={}",
                a.max_n, !a.no_quotients, a.fixtures_only
            );
            (digest(canonical.as_bytes()), corpus_cmd(a, cli.output.as_deref(), ctx))
        }
    }
}

fn read(path: &Path) -> Result<(String, String), Failure> {
    let bytes = fs::read(path).map_err(|e| input_failure("io", format!("cannot read {}: {e}", path.display())))?;
    let d = digest(&bytes);
    let text = String::from_utf8(bytes).map_err(|_| input_failure("io", format!("{} is not UTF-8", path.display())))?;
    Ok((d, text))
}

fn with_file(path: &Path, f: impl FnOnce(&str) -> Result<Done, Failure>) -> (String, Result<Done, Failure>) {
    match read(path) {
        Ok((d, text)) => (d, f(&text)),
        Err(e) => (String::new(), Err(e)),
    }
}

fn with_loaded(
    path: &Path,
    ctx: &Ctx,
    f: impl FnOnce(&AnyAlgebra) -> Result<Done, Error>,
) -> (String, Result<Done, Failure>) {
    with_file(path, |text| {
        let l = load(text, ctx.field.as_deref())?;
        f(&l).map_err(Failure::from)
    })
}

/// Parses a file, optionally moving the table to another field, and
/// verifies the Leibniz identity.
fn load(text: &str, field: Option<&str>) -> Result<AnyAlgebra, Error> {
    let file = AlgebraFile::parse(text)?;
    match field {
        None => file.build(),
        Some(tag) => {
            let raw = file.build_unchecked()?;
            let target = AnyField::parse_tag(tag)?;
            with_algebra!(&raw, l => match &target {
                AnyField::Rational(q) => l.reinterpret(q).map(AnyAlgebra::from),
                AnyField::Finite(g) => l.reinterpret(g).map(AnyAlgebra::from),
            })
        }
    }
}

fn check(text: &str, ctx: &Ctx) -> Result<Done, Failure> {
    let file = AlgebraFile::parse(text)?;
    let verdict = match &ctx.field {
        None => {
            let raw = file.build_unchecked()?;
            with_algebra!(&raw, l => l.verify_leibniz().map_err(|v| Error::NotLeibniz(Box::new(v))))
        }
        Some(_) => load(text, ctx.field.as_deref()).map(|_| ()),
    };
    let field = match &ctx.field {
        Some(tag) => AnyField::parse_tag(tag)?.descriptor(),
        None => file.field.clone(),
    };
    match verdict {
        Ok(()) => Ok(Done::ok(json!({ "leibniz": true, "field": field, "dim": file.dim }))),
        Err(Error::NotLeibniz(v)) => {
            let e = Error::NotLeibniz(v.clone());
            let mut f = Failure::from(e);
            f.results = json!({ "leibniz": false, "field": field, "dim": file.dim, "violation": *v });
            Err(f)
        }
        Err(e) => Err(e.into()),
    }
}

fn records<F: Field>(terms: &[leibniz::Subspace<F>]) -> Vec<SubspaceRecord> {
    terms.iter().map(SubspaceRecord::new).collect()
}

fn analyze<F: Field>(l: &LeibnizAlgebra<F>, ctx: &Ctx) -> Result<Done, Error> {
    let nil = best_nilradical(l, ctx.budget)?;
    let status = |s: RadicalStatus| to_value(&s);
    let rad = match radical(l, ctx.budget) {
        Ok(r) => json!({ "status": status(r.status), "subspace": SubspaceRecord::new(&r.subspace) }),
        Err(e) => json!({ "unavailable": e.to_string() }),
    };
    Ok(Done::ok(json!({
        "field": l.field().descriptor(),
        "dim": l.dim(),
        "predicates": predicates(l),
        "derived_series": records(&series(l, SeriesKind::Derived).terms),
        "lower_central_series": records(&series(l, SeriesKind::LowerCentral).terms),
        "upper_central_series": records(&upper_central_series(l)),
        "centre": SubspaceRecord::new(&l.centre()),
        "leib_kernel": SubspaceRecord::new(&l.leib_kernel()),
        "nilradical": { "status": status(nil.status), "subspace": SubspaceRecord::new(&nil.subspace) },
        "radical": rad,
    })))
}

fn decompose<F: Field>(l: &LeibnizAlgebra<F>, ctx: &Ctx) -> Result<Done, Error> {
    let d = triangular_decomposition(l, ctx.seed, ctx.budget)?;
    let verified = d.verify(l);
    let a = Analysis::new(l, ctx.budget, ctx.seed);
    let mut report = structure_report(&a);
    report.check(
        "triangular",
        "L = A_n ∔ ... ∔ A_0 with L^(i) = A_n ∔ ... ∔ A_i",
        verified.is_ok(),
        verified.as_ref().err().cloned().unwrap_or_default(),
        vec![],
    );
    let results = json!({
        "n": d.n(),
        "components": records(&d.components),
        "derived_markers": records(&d.derived_markers),
        "report": report,
    });
    Ok(Done::from_report(results, &report))
}

fn enumerate<F: Field>(l: &LeibnizAlgebra<F>, a: &EnumerateArgs, ctx: &Ctx) -> Result<Done, Error> {
    let en = Enumerator::new(l, ctx.budget)?;
    let kinds: Vec<EnumKind> = match a.kind {
        Some(k) => vec![k.into()],
        None => vec![EnumKind::Subspaces, EnumKind::Subalgebras, EnumKind::Ideals],
    };
    let mut counts = serde_json::Map::new();
    let mut lists = serde_json::Map::new();
    for k in kinds {
        let found = en.enumerate(k);
        let key = to_value(&k).as_str().expect("unit variant").to_string();
        counts.insert(key.clone(), json!(found.len()));
        if a.list {
            let recs: Vec<_> = found.iter().map(|h| SubspaceRecord::new(h)).collect();
            lists.insert(key, to_value(&recs));
        }
    }
    let mut results = json!({ "counts": counts });
    if a.list {
        results["subspaces"] = Value::Object(lists);
    }
    Ok(Done::ok(results))
}

/// Splits on commas outside brackets.
fn split_top(s: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    parts.push(cur);
    parts.into_iter().map(|p| p.trim().to_string()).collect()
}

fn alpha_literal(token: &str) -> Result<ScalarLit, Error> {
    if token.starts_with('[') {
        return serde_json::from_str::<Vec<u64>>(token)
            .map(ScalarLit::Coeffs)
            .map_err(|e| Error::FieldParseError(format!("'{token}': {e}")));
    }
    Ok(match token.parse::<i64>() {
        Ok(v) => ScalarLit::Int(v),
        Err(_) => ScalarLit::Text(token.to_string()),
    })
}

fn alpha_value<F: Field>(f: &F, lit: &ScalarLit) -> Result<F::Elem, Error> {
    match lit {
        ScalarLit::Int(v) if f.is_finite() => Ok(f.from_i64(*v)),
        ScalarLit::Text(t) if f.is_finite() => f.from_rational(&leibniz::Rationals::parse(t)?),
        other => f.from_literal(other),
    }
}

fn cyclic(field: &str, a: &CyclicArgs, ctx: &Ctx) -> Result<Done, Failure> {
    let lits = if a.alphas.trim().is_empty() {
        vec![]
    } else {
        split_top(&a.alphas).iter().map(|t| alpha_literal(t)).collect::<Result<Vec<_>, _>>()?
    };
    let done = match AnyField::parse_tag(field)? {
        AnyField::Rational(q) => cyclic_typed(&q, a.n, &lits, ctx),
        AnyField::Finite(g) => cyclic_typed(&g, a.n, &lits, ctx),
    }?;
    Ok(done)
}

fn cyclic_typed<F: Field>(f: &F, n: usize, lits: &[ScalarLit], ctx: &Ctx) -> Result<Done, Error> {
    let alphas = lits.iter().map(|t| alpha_value(f, t)).collect::<Result<Vec<_>, _>>()?;
    let spec = CyclicSpec::with_dim(f, n, alphas)?;
    let c = classify_cyclic(&spec, ctx.budget, ctx.seed)?;
    let factorization = c.factorization.as_ref().map(|fac| {
        fac.factors
            .iter()
            .map(|(p, m)| json!({ "factor": p.to_string(), "multiplicity": m }))
            .collect::<Vec<_>>()
    });
    let complement = c
        .complement
        .as_ref()
        .map(|b| b.iter().map(|x| f.to_literal(x)).collect::<Vec<_>>());
    let results = json!({
        "field": f.descriptor(),
        "n": spec.n(),
        "alphas": spec.alphas().iter().map(|x| f.to_literal(x)).collect::<Vec<_>>(),
        "polynomial": c.polynomial.to_string(),
        "is_a": c.is_a,
        "complement": complement,
        "factorization": factorization,
        "distinct_factors": c.distinct_factors,
        "monolithic": c.monolithic_claim,
        "phi_free": c.phi_free_claim,
        "report": c.report,
    });
    let mut done = Done::from_report(results, &c.report);
    if done.code == EXIT_OK && c.factorization.is_none() {
        let d = c.polynomial.degree().unwrap_or(0);
        let e = Error::UnsupportedFactorization(d);
        done.code = exit_code(&e);
        done.errors.push(ErrorRecord {
            kind: error_kind(&e).into(),
            message: e.to_string(),
        });
    }
    Ok(done)
}

fn origin_name(o: Origin) -> &'static str {
    match o {
        Origin::Fixture => "fixture",
        Origin::Cyclic => "cyclic",
        Origin::DirectSum => "direct-sum",
        Origin::Quotient => "quotient",
    }
}

fn corpus_cmd(a: &CorpusArgs, out: Option<&Path>, ctx: &Ctx) -> Result<Done, Failure> {
    let mut limits = CorpusLimits {
        max_cyclic_n: a.max_n,
        quotients: !a.no_quotients,
        budget: ctx.budget,
        ..CorpusLimits::default()
    };
    if a.fixtures_only {
        limits.cyclic_fields.clear();
        limits.sum_fields.clear();
        limits.quotients = false;
    }
    if let Some(tag) = &ctx.field {
        AnyField::parse_tag(tag)?;
        limits.fixture_fields = vec![tag.clone()];
        limits.cyclic_fields.retain(|t| t == tag);
        limits.sum_fields.retain(|t| t == tag);
    }
    let entries = corpus::generate(&limits)?;
    let mut listed = Vec::new();
    for e in &entries {
        let leibniz = with_algebra!(&e.algebra, l => l.verify_leibniz().is_ok());
        listed.push(json!({
            "name": e.name,
            "origin": origin_name(e.origin),
            "field": e.algebra.descriptor().tag(),
            "dim": e.algebra.dim(),
            "leibniz": leibniz,
        }));
    }
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| input_failure("io", format!("cannot create {}: {e}", dir.display())))?;
        for (name, file) in corpus::files(&entries) {
            let path = dir.join(&name);
            fs::write(&path, file.to_json())
                .map_err(|e| input_failure("io", format!("cannot write {}: {e}", path.display())))?;
        }
    }
    let all_ok = listed.iter().all(|v| v["leibniz"] == json!(true));
    let mut done = Done::ok(json!({
        "count": entries.len(),
        "written_to": out.map(|p| p.display().to_string()),
        "entries": listed,
    }));
    if !all_ok {
        done.code = EXIT_FAILED;
    }
    Ok(done)
}

fn render(report: &RunReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            text_value(&mut out, 0, &to_value(report));
            out
        }
    }
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object()) && items.len() <= 16 => {
            let parts: Option<Vec<String>> = items.iter().map(scalar_text).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        _ => None,
    }
}

fn text_value(out: &mut String, indent: usize, v: &Value) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                match scalar_text(item) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        text_value(out, indent + 1, item);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar_text(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        text_value(out, indent + 1, item);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar_text(other).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphas_split_outside_brackets() {
        assert_eq!(split_top("1,0"), vec!["1", "0"]);
        assert_eq!(split_top("[0,1], [1,1]"), vec!["[0,1]", "[1,1]"]);
        assert_eq!(alpha_literal("-3/2").unwrap(), ScalarLit::Text("-3/2".into()));
        assert_eq!(alpha_literal("[1,0]").unwrap(), ScalarLit::Coeffs(vec![1, 0]));
    }

    #[test]
    fn integer_alphas_reduce_into_prime_fields() {
        let g = leibniz::Gf::prime(3).unwrap();
        assert_eq!(alpha_value(&g, &ScalarLit::Int(-1)).unwrap(), g.from_i64(2));
        assert_eq!(alpha_value(&g, &ScalarLit::Text("1/2".into())).unwrap(), g.from_i64(2));
    }

    #[test]
    fn exit_codes_by_error_class() {
        assert_eq!(exit_code(&Error::InfiniteFieldUnsupported), EXIT_UNSUPPORTED);
        assert_eq!(exit_code(&Error::FieldParseError("x".into())), EXIT_INPUT);
        assert_eq!(exit_code(&Error::NotSolvable), EXIT_FAILED);
    }

    #[test]
    fn text_rendering_is_indented() {
        let mut out = String::new();
        text_value(&mut out, 0, &json!({ "a": { "b": [1, 2] }, "c": null }));
        assert_eq!(out, "a:\n  b: [1, 2]\nc: -\n");
    }
}
