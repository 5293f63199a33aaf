//! Command-line frontend for schubsing: argument parsing, rendering, the
//! result cache and replays of worked examples.

pub mod cache;
pub mod repro;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use schubsing::invariants::{
    self, is_factorial, is_gorenstein, non_factorial_locus, non_gorenstein_locus, singular_locus, InvariantReport,
    KLPolynomial, ReportOptions, SurveyOptions,
};
use schubsing::klideal::{kl_ideal, Cell, KLIdealSpec};
use schubsing::pattern::{classical_embeddings, interval_avoids, interval_embeddings, phi_image};
use schubsing::poly::{format_polynomial, TermOrder};
use schubsing::resolution::{betti_table, BettiTable};
use schubsing::{budget, Error, IntervalPattern, Permutation};

use cache::Cache;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_TIMEOUT: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

/// Environment variable naming the default cache directory.
pub const CACHE_ENV: &str = "SCHUBSING_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(name = "schubsing", version, about = "Singularity invariants of type A Schubert varieties")]
struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Neither read nor write the result cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Cache directory (default: $SCHUBSING_CACHE_DIR).
    #[arg(long, global = true, value_name = "PATH")]
    cache_dir: Option<PathBuf>,
    /// Read permutations with values 0..n-1.
    #[arg(long, global = true)]
    zero_indexed: bool,
    /// Omit timings so that output is reproducible byte for byte.
    #[arg(long, global = true)]
    stable: bool,
    /// Time limit in seconds for each Gröbner or resolution computation.
    #[arg(long, global = true, value_name = "N")]
    timeout_secs: Option<u64>,
    /// Also print the generators of the Kazhdan-Lusztig ideal.
    #[arg(long, global = true)]
    emit_ideal: bool,
    /// Also print the generic matrix Z^(x).
    #[arg(long, global = true)]
    emit_matrix: bool,
    /// Also print the graded Betti table.
    #[arg(long, global = true)]
    emit_betti: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Whether W interval-avoids [U,V]; exit 0 if it avoids, 1 if not.
    Avoid { w: String, u: String, v: String },
    /// Classical embeddings of V into W, with Φ(U) when --bottom is given.
    Embed {
        v: String,
        w: String,
        #[arg(long, value_name = "U")]
        bottom: Option<String>,
    },
    /// Maximal points of a locus of X_W.
    Locus { kind: LocusKind, w: String },
    /// Generators of the Kazhdan-Lusztig ideal I_{X,W}.
    Ideal { x: String, w: String },
    /// Reduced Gröbner basis of I_{X,W} under the graded-diagonal order.
    Gb { x: String, w: String },
    /// Graded Betti table of the coordinate ring of the slice.
    Betti { x: String, w: String },
    /// Cohen-Macaulay type of X_W at e_X.
    Cmtype { x: String, w: String },
    /// Multiplicity of X_W at e_X.
    Mult { x: String, w: String },
    /// Kazhdan-Lusztig polynomial P_{X,W}.
    Klpoly { x: String, w: String },
    /// All invariants of X_W at e_X.
    Report { x: String, w: String },
    /// Invariants over all pairs x ≤ w in S_N.
    Survey {
        n: usize,
        /// Optional invariants to add: cmtype, lci, klpoly (mult is always computed).
        #[arg(long, value_delimiter = ',', value_name = "LIST")]
        invariants: Vec<SurveyInvariant>,
        /// Restrict to these W (repeatable).
        #[arg(long = "target", value_name = "W")]
        targets: Vec<String>,
        /// Skip smooth points.
        #[arg(long)]
        singular_only: bool,
    },
    /// Replay a worked example; `list` shows the ids, `all` runs every one.
    Repro { id: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LocusKind {
    Sing,
    Gor,
    Fact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SurveyInvariant {
    Mult,
    Cmtype,
    Lci,
    Klpoly,
}

struct Ctx {
    json: bool,
    stable: bool,
    zero_indexed: bool,
    emit_ideal: bool,
    emit_matrix: bool,
    emit_betti: bool,
    timeout: Option<Duration>,
    cache: Option<Cache>,
}

enum Failure {
    Core(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let cache_dir = cli.cache_dir.clone().or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from));
    let cache = match (cli.no_cache, cache_dir) {
        (false, Some(dir)) => match Cache::open(&dir, schubsing::VERSION) {
            Ok(c) => Some(c),
            Err(e) => {
                let _ = writeln!(err, "warning: cache disabled ({}: {e})", dir.display());
                None
            }
        },
        _ => None,
    };
    let mut ctx = Ctx {
        json: cli.json,
        stable: cli.stable,
        zero_indexed: cli.zero_indexed,
        emit_ideal: cli.emit_ideal,
        emit_matrix: cli.emit_matrix,
        emit_betti: cli.emit_betti,
        timeout: cli.timeout_secs.map(Duration::from_secs),
        cache,
    };
    let mut buf = String::new();
    let result = dispatch(&mut ctx, cli.command, &mut buf);
    let write = out.write_all(buf.as_bytes()).and_then(|_| out.flush());
    match (result, write) {
        (Ok(code), Ok(())) => code,
        (Ok(_), Err(e)) | (Err(Failure::Io(e)), _) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INTERNAL
        }
        (Err(Failure::Core(e)), _) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// The exit code reported for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::InvalidPermutation(_) => EXIT_USAGE,
        Error::RankMismatch(..) | Error::NotBelow { .. } | Error::NotAnEmbedding { .. } | Error::Precondition(_) => {
            EXIT_PRECONDITION
        }
        Error::Timeout => EXIT_TIMEOUT,
        Error::Inconsistent(_) => EXIT_INTERNAL,
    }
}

impl Ctx {
    fn perm(&self, text: &str) -> schubsing::Result<Permutation> {
        Permutation::parse(text, self.zero_indexed)
    }

    fn pair(&self, x: &str, w: &str) -> schubsing::Result<(Permutation, Permutation)> {
        let (x, w) = (self.perm(x)?, self.perm(w)?);
        if x.n() != w.n() {
            return Err(Error::RankMismatch(x.n(), w.n()));
        }
        if !x.bruhat_le(&w) {
            return Err(Error::NotBelow { x: x.to_string(), w: w.to_string() });
        }
        Ok((x, w))
    }

    fn timed<T>(&self, f: impl FnOnce() -> schubsing::Result<T>) -> schubsing::Result<T> {
        budget::with_deadline(self.timeout, f)
    }

    /// Looks `invariant` up in the cache, computing and storing it on a miss.
    fn cached(
        &mut self,
        invariant: &str,
        x: &Permutation,
        w: &Permutation,
        compute: impl FnOnce() -> schubsing::Result<Value>,
    ) -> std::result::Result<Value, Failure> {
        let (xs, ws) = (x.to_string(), w.to_string());
        if let Some(v) = self.cache.as_ref().and_then(|c| c.get(invariant, &xs, &ws)) {
            return Ok(v.clone());
        }
        let value = self.timed(compute)?;
        if let Some(c) = self.cache.as_mut() {
            c.put(invariant, &xs, &ws, value.clone())?;
        }
        Ok(value)
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> schubsing::Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::Inconsistent(e.to_string()))
}

fn from_json<T: serde::de::DeserializeOwned>(v: &Value) -> std::result::Result<T, Failure> {
    serde_json::from_value(v.clone()).map_err(|e| Failure::Core(Error::Inconsistent(format!("cached value: {e}"))))
}

fn push_json(buf: &mut String, v: &Value) {
    buf.push_str(&serde_json::to_string_pretty(v).expect("JSON values serialize"));
    buf.push('\n');
}

fn dispatch(ctx: &mut Ctx, command: Command, buf: &mut String) -> Outcome {
    match command {
        Command::Avoid { w, u, v } => avoid(ctx, &w, &u, &v, buf),
        Command::Embed { v, w, bottom } => embed(ctx, &v, &w, bottom.as_deref(), buf),
        Command::Locus { kind, w } => locus(ctx, kind, &w, buf),
        Command::Ideal { x, w } => pair_command(ctx, PairQuery::Ideal, &x, &w, buf),
        Command::Gb { x, w } => pair_command(ctx, PairQuery::Gb, &x, &w, buf),
        Command::Betti { x, w } => pair_command(ctx, PairQuery::Betti, &x, &w, buf),
        Command::Cmtype { x, w } => pair_command(ctx, PairQuery::CmType, &x, &w, buf),
        Command::Mult { x, w } => pair_command(ctx, PairQuery::Mult, &x, &w, buf),
        Command::Klpoly { x, w } => pair_command(ctx, PairQuery::KlPoly, &x, &w, buf),
        Command::Report { x, w } => pair_command(ctx, PairQuery::Report, &x, &w, buf),
        Command::Survey { n, invariants, targets, singular_only } => {
            survey(ctx, n, &invariants, &targets, singular_only, buf)
        }
        Command::Repro { id } => repro_command(ctx, &id, buf),
    }
}

fn avoid(ctx: &mut Ctx, w: &str, u: &str, v: &str, buf: &mut String) -> Outcome {
    let (w, u, v) = (ctx.perm(w)?, ctx.perm(u)?, ctx.perm(v)?);
    let pat = IntervalPattern::new(u.clone(), v.clone())?;
    let embs = interval_embeddings(&pat, &w);
    let avoids = interval_avoids(&w, &pat);
    if ctx.json {
        let list: Vec<Value> =
            embs.iter().map(|(e, x)| json!({"embedding": e.indices(), "phi": x.to_string()})).collect();
        push_json(
            buf,
            &json!({"w": w.to_string(), "u": u.to_string(), "v": v.to_string(), "avoids": avoids, "embeddings": list}),
        );
    } else if avoids {
        writeln!(buf, "avoids").unwrap();
    } else {
        writeln!(buf, "contains").unwrap();
        for (e, x) in &embs {
            writeln!(buf, "{e} -> {x}").unwrap();
        }
    }
    Ok(if avoids { EXIT_OK } else { EXIT_FALSE })
}

fn embed(ctx: &mut Ctx, v: &str, w: &str, bottom: Option<&str>, buf: &mut String) -> Outcome {
    let (v, w) = (ctx.perm(v)?, ctx.perm(w)?);
    let u = bottom.map(|b| ctx.perm(b)).transpose()?;
    if let Some(u) = &u {
        IntervalPattern::new(u.clone(), v.clone())?;
    }
    let mut rows = Vec::new();
    for e in classical_embeddings(&v, &w) {
        let mut row = Map::new();
        row.insert("embedding".into(), json!(e.indices()));
        if let Some(u) = &u {
            let x = phi_image(u, &v, &w, &e)?;
            let gap = w.length() - x.length();
            row.insert("phi".into(), json!(x.to_string()));
            row.insert("length_gap".into(), json!(gap));
            row.insert("interval".into(), json!(gap == v.length() - u.length()));
        }
        rows.push(Value::Object(row));
    }
    if ctx.json {
        push_json(buf, &json!({"v": v.to_string(), "w": w.to_string(), "embeddings": rows}));
    } else {
        for (e, row) in classical_embeddings(&v, &w).iter().zip(&rows) {
            match row.get("phi") {
                Some(x) => writeln!(
                    buf,
                    "{e}  Φ(u) = {}  gap {}  {}",
                    x.as_str().unwrap(),
                    row["length_gap"],
                    if row["interval"] == json!(true) { "interval" } else { "not interval" }
                )
                .unwrap(),
                None => writeln!(buf, "{e}").unwrap(),
            }
        }
        if rows.is_empty() {
            writeln!(buf, "none").unwrap();
        }
    }
    Ok(EXIT_OK)
}

fn locus(ctx: &mut Ctx, kind: LocusKind, w: &str, buf: &mut String) -> Outcome {
    let w = ctx.perm(w)?;
    let (name, points, conjectural, holds) = match kind {
        LocusKind::Sing => ("singular", singular_locus(&w), false, invariants::is_smooth(&w)),
        LocusKind::Gor => {
            let l = non_gorenstein_locus(&w);
            ("non-gorenstein", l.points, l.conjectural, is_gorenstein(&w))
        }
        LocusKind::Fact => {
            let l = non_factorial_locus(&w);
            ("non-factorial", l.points, l.conjectural, is_factorial(&w))
        }
    };
    let property = match kind {
        LocusKind::Sing => "smooth",
        LocusKind::Gor => "gorenstein",
        LocusKind::Fact => "factorial",
    };
    if ctx.json {
        let pts: Vec<String> = points.iter().map(|p| p.to_string()).collect();
        push_json(
            buf,
            &json!({"w": w.to_string(), "locus": name, "points": pts, "conjectural": conjectural, property: holds}),
        );
    } else {
        for p in &points {
            writeln!(buf, "{p}").unwrap();
        }
        if conjectural {
            writeln!(buf, "(conjectural locus description)").unwrap();
        }
    }
    Ok(EXIT_OK)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum PairQuery {
    Ideal,
    Gb,
    Betti,
    CmType,
    Mult,
    KlPoly,
    Report,
}

fn matrix_rows(spec: &KLIdealSpec) -> Vec<Vec<String>> {
    let z = &spec.matrix;
    (1..=z.n())
        .map(|a| {
            (1..=z.n())
                .map(|b| match z.cell(a, b) {
                    Cell::Zero => "0".to_string(),
                    Cell::One => "1".to_string(),
                    Cell::Var(i, j) => schubsing::klideal::variable_name(i, j),
                })
                .collect()
        })
        .collect()
}

fn pair_command(ctx: &mut Ctx, query: PairQuery, x: &str, w: &str, buf: &mut String) -> Outcome {
    let (x, w) = ctx.pair(x, w)?;
    let spec = kl_ideal(&x, &w)?;
    let mut obj = Map::new();
    obj.insert("x".into(), json!(x.to_string()));
    obj.insert("w".into(), json!(w.to_string()));
    let mut text = String::new();

    let emit_ideal = ctx.emit_ideal || query == PairQuery::Ideal;
    let emit_betti = ctx.emit_betti || query == PairQuery::Betti;
    match query {
        PairQuery::Ideal | PairQuery::Betti => {}
        PairQuery::Gb => {
            let gb = ctx.timed(|| schubsing::poly::try_buchberger(&spec.generators, TermOrder::GradedDiagonal))?;
            let polys: Vec<String> = gb.generators().iter().map(|g| format_polynomial(g, &spec.ring)).collect();
            for p in &polys {
                writeln!(text, "{p}").unwrap();
            }
            obj.insert("gb".into(), json!(polys));
        }
        PairQuery::CmType => {
            let v = ctx.cached("cm_type", &x, &w, || Ok(json!(schubsing::resolution::cm_type(&spec)?)))?;
            writeln!(text, "{v}").unwrap();
            obj.insert("cm_type".into(), v);
        }
        PairQuery::Mult => {
            let v = ctx.cached("mult", &x, &w, || Ok(json!(invariants::multiplicity_at(&x, &w)?)))?;
            writeln!(text, "{v}").unwrap();
            obj.insert("mult".into(), v);
        }
        PairQuery::KlPoly => {
            let v = ctx.cached("kl_poly", &x, &w, || to_json(&invariants::kl_polynomial(&x, &w)?))?;
            let poly: KLPolynomial = from_json(&v)?;
            writeln!(text, "{poly}").unwrap();
            obj.insert("kl_poly".into(), v);
        }
        PairQuery::Report => {
            let v = ctx.cached("report", &x, &w, || to_json(&invariants::report(&x, &w, ReportOptions::all())?))?;
            let r: InvariantReport = from_json(&v)?;
            render_report(&r, &mut text);
            if let Value::Object(m) = v {
                obj.extend(m);
            }
        }
    }
    if ctx.emit_matrix {
        obj.insert("matrix".into(), json!(matrix_rows(&spec)));
    }
    if emit_ideal {
        let gens: Vec<String> = spec.generators.iter().map(|g| format_polynomial(g, &spec.ring)).collect();
        obj.insert("ideal".into(), json!(gens));
    }
    if emit_betti {
        let v = ctx.cached("betti", &x, &w, || to_json(&betti_table(&spec)?))?;
        obj.insert("betti".into(), v);
    }

    if ctx.json {
        push_json(buf, &Value::Object(obj));
        return Ok(EXIT_OK);
    }
    let sections = usize::from(ctx.emit_matrix)
        + usize::from(emit_ideal)
        + usize::from(emit_betti)
        + usize::from(!text.is_empty());
    let titled = sections > 1;
    if ctx.emit_matrix {
        if titled {
            writeln!(buf, "matrix:").unwrap();
        }
        write!(buf, "{}", spec.matrix).unwrap();
    }
    if emit_ideal {
        if titled {
            writeln!(buf, "ideal:").unwrap();
        }
        for g in obj["ideal"].as_array().unwrap() {
            writeln!(buf, "{}", g.as_str().unwrap()).unwrap();
        }
    }
    if emit_betti {
        if titled {
            writeln!(buf, "betti:").unwrap();
        }
        let table: BettiTable = from_json(&obj["betti"])?;
        write!(buf, "{table}").unwrap();
    }
    if !text.is_empty() {
        if titled {
            writeln!(
                buf,
                "{}:",
                match query {
                    PairQuery::Gb => "gb",
                    PairQuery::CmType => "cm_type",
                    PairQuery::Mult => "mult",
                    PairQuery::KlPoly => "kl_poly",
                    _ => "report",
                }
            )
            .unwrap();
        }
        buf.push_str(&text);
    }
    Ok(EXIT_OK)
}

fn render_report(r: &InvariantReport, buf: &mut String) {
    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".to_string());
    writeln!(buf, "x          {}", r.x).unwrap();
    writeln!(buf, "w          {}", r.w).unwrap();
    writeln!(buf, "smooth     {}", r.smooth).unwrap();
    writeln!(buf, "mult       {}", r.mult).unwrap();
    writeln!(buf, "gorenstein {}{}", r.gorenstein.value, if r.gorenstein.conjectural { " (conjectural)" } else { "" })
        .unwrap();
    writeln!(buf, "cm_type    {}", opt(r.cm_type.map(|c| c.to_string()))).unwrap();
    writeln!(buf, "lci        {}", opt(r.lci.map(|c| c.to_string()))).unwrap();
    writeln!(buf, "kl_poly    {}", opt(r.kl_poly.as_ref().map(|c| c.to_string()))).unwrap();
}

fn survey(
    ctx: &mut Ctx,
    n: usize,
    wanted: &[SurveyInvariant],
    targets: &[String],
    singular_only: bool,
    buf: &mut String,
) -> Outcome {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()).into());
    }
    let targets = if targets.is_empty() {
        None
    } else {
        Some(targets.iter().map(|t| ctx.perm(t)).collect::<schubsing::Result<Vec<_>>>()?)
    };
    let invariants = ReportOptions {
        cm_type: wanted.contains(&SurveyInvariant::Cmtype),
        lci: wanted.contains(&SurveyInvariant::Lci),
        kl_poly: wanted.contains(&SurveyInvariant::Klpoly),
    };
    let options = SurveyOptions { invariants, targets, singular_only, timeout: ctx.timeout };
    let start = Instant::now();
    let reports = invariants::survey(n, &options)?;
    if ctx.json {
        push_json(buf, &to_json(&reports)?);
        return Ok(EXIT_OK);
    }
    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".to_string());
    writeln!(buf, "w x smooth mult gorenstein cm_type lci kl_poly").unwrap();
    for r in &reports {
        writeln!(
            buf,
            "{} {} {} {} {} {} {} {}",
            r.w,
            r.x,
            r.smooth,
            r.mult,
            r.gorenstein.value,
            opt(r.cm_type.map(|c| c.to_string())),
            opt(r.lci.map(|c| c.to_string())),
            opt(r.kl_poly.as_ref().map(|c| format!("{c}").replace(' ', ""))),
        )
        .unwrap();
    }
    if !ctx.stable {
        writeln!(buf, "# {} pairs in {:.2?}", reports.len(), start.elapsed()).unwrap();
    }
    Ok(EXIT_OK)
}

fn repro_command(ctx: &mut Ctx, id: &str, buf: &mut String) -> Outcome {
    if id == "list" {
        for rid in repro::ids() {
            writeln!(buf, "{rid:<32} {}", repro::describe(rid).unwrap()).unwrap();
        }
        return Ok(EXIT_OK);
    }
    let ids: Vec<&str> = if id == "all" { repro::ids().collect() } else { vec![id] };
    let mut all_passed = true;
    let mut json_out = Vec::new();
    for rid in ids {
        let start = Instant::now();
        let checks = ctx.timed(|| repro::replay(rid))?;
        let passed = checks.iter().all(|c| c.passed);
        all_passed &= passed;
        if ctx.json {
            let list: Vec<Value> = checks
                .iter()
                .map(|c| json!({"check": c.description, "passed": c.passed, "detail": c.detail}))
                .collect();
            json_out.push(json!({"id": rid, "passed": passed, "checks": list}));
            continue;
        }
        writeln!(buf, "{rid}: {}", repro::describe(rid).unwrap()).unwrap();
        for c in &checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(buf, "  {mark} {}", c.description).unwrap();
            } else {
                writeln!(buf, "  {mark} {}: {}", c.description, c.detail).unwrap();
            }
        }
        if !ctx.stable {
            writeln!(buf, "  ({:.2?})", start.elapsed()).unwrap();
        }
    }
    if ctx.json {
        push_json(buf, &Value::Array(json_out));
    }
    Ok(if all_passed { EXIT_OK } else { EXIT_FALSE })
}
