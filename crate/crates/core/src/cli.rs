//! Command-line front end.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 domain error
//! (for instance a spherical key), 4 verification mismatch.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{bounds_report, BoundsOptions, Format};
use crate::catalog::{self, closed_form, first_difference, linear_series_of, CatalogKey, Kind};
use crate::grammar::{algebraic_system, strong_connectivity_check, system_coeffs, system_radius};
use crate::series::roots::rational_from_f64;
use crate::series::{series_expand, smallest_positive_root, Poly};
use crate::tessellation::{
    build_ball, geodesic_multiplicities, holly_counts, pair_sums, sphere_sizes, validate_structure,
};

/// Environment variable holding the default bracket width.
pub const TOL_ENV: &str = "HYPERGROWTH_TOL";

#[derive(Parser, Debug)]
#[command(name = "hypergrowth", version, about = "Growth series and random-walk bounds for tessellations X(l, m)")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<OutFormat>,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for independent computations; results do not depend on it.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=256))]
    threads: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Vertices,
    Geodesics,
    Pairs,
    Holly,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Vertices => Kind::Vertices,
            KindArg::Geodesics => Kind::Geodesics,
            KindArg::Pairs => Kind::Pairs,
            KindArg::Holly => Kind::Holly,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Source {
    Grammar,
    Oracle,
    Closed,
}

#[derive(Args, Debug, Clone, Copy)]
struct KeyArgs {
    /// Cells meeting at each vertex.
    #[arg(long, short = 'l')]
    l: u32,
    /// Sides of each cell.
    #[arg(long, short = 'm')]
    m: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rational growth series of a kind (or the equations of an algebraic one).
    Series {
        #[command(flatten)]
        key: KeyArgs,
        #[arg(long, value_enum, default_value = "vertices")]
        kind: KindArg,
    },
    /// Series coefficients up to degree n.
    Coeffs {
        #[command(flatten)]
        key: KeyArgs,
        #[arg(long, value_enum, default_value = "vertices")]
        kind: KindArg,
        #[arg(long, short = 'n', default_value_t = 10)]
        n: u32,
        /// Where the numbers come from: the grammar, brute force on a ball of
        /// radius n, or the printed closed form.
        #[arg(long, value_enum, default_value = "grammar")]
        source: Source,
    },
    /// Radius of convergence as a bracket.
    Radius {
        #[command(flatten)]
        key: KeyArgs,
        #[arg(long, value_enum, default_value = "vertices")]
        kind: KindArg,
        /// Bracket width (default from HYPERGROWTH_TOL, else 1e-12).
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Compare grammar series with brute-force counts on a ball.
    Verify {
        #[command(flatten)]
        key: KeyArgs,
        #[arg(long, default_value_t = 5)]
        depth: u32,
        /// Kinds to check (default: every kind defined for the key).
        #[arg(long, value_enum)]
        kind: Vec<KindArg>,
        /// Check the pair grammar restricted to the printed cells at the base
        /// point instead of the corrected one.
        #[arg(long)]
        printed: bool,
    },
    /// Cogrowth and spectral-radius bounds.
    Bounds {
        #[command(flatten)]
        key: KeyArgs,
        /// Ball radius for return probabilities.
        #[arg(long, default_value_t = 6)]
        depth: u32,
        /// Largest n of the p^(2n) lower bounds.
        #[arg(long, default_value_t = 6)]
        fekete: u32,
        /// Skip the holly-tree system.
        #[arg(long)]
        no_holly: bool,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Build a ball and report its structure checks, or export it.
    Ball {
        #[command(flatten)]
        key: KeyArgs,
        #[arg(long, default_value_t = 4)]
        depth: u32,
        /// Write the adjacency listing to this file (`-` for stdout).
        #[arg(long)]
        export: Option<String>,
    },
    /// Print grammars (every kind defined for the key unless --kind is given).
    DumpGrammar {
        #[command(flatten)]
        key: KeyArgs,
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
    },
    /// Print the errata report as markdown.
    Errata {
        /// Number of coefficients compared.
        #[arg(long, short = 'n', default_value_t = 10)]
        n: u32,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain(String),
    Io(std::io::Error),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(s) | CliError::Domain(s) => f.write_str(s),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

fn domain<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Domain(e.to_string())
}

/// Result of one command: its rendering and whether verification failed.
struct Output {
    body: String,
    mismatch: Option<String>,
}

impl Output {
    fn ok(body: String) -> Output {
        Output { body, mismatch: None }
    }
}

fn strs(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn poly_strs(p: &Poly) -> Vec<String> {
    strs(p.coeffs())
}

fn json_out<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("output serializes");
    s.push('\n');
    s
}

fn csv_out(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for r in rows {
        w.write_record(r).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
}

fn default_tol() -> Result<f64, CliError> {
    match std::env::var(TOL_ENV) {
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(t) if t > 0.0 && t < 1.0 => Ok(t),
            _ => Err(CliError::Usage(format!("{TOL_ENV}={s:?} is not a number in (0, 1)"))),
        },
        Err(_) => Ok(1e-12),
    }
}

fn check_tol(tol: Option<f64>) -> Result<f64, CliError> {
    match tol {
        Some(t) if !(t > 0.0 && t < 1.0) => Err(CliError::Usage(format!("--tol {t} must lie in (0, 1)"))),
        Some(t) => Ok(t),
        None => default_tol(),
    }
}

fn key(k: KeyArgs, kind: Kind) -> Result<CatalogKey, CliError> {
    CatalogKey::new(k.l, k.m, kind).map_err(domain)
}

/// Kinds defined for a key, in canonical order.
fn applicable_kinds(l: u32, m: u32) -> Vec<Kind> {
    Kind::ALL.into_iter().filter(|&k| CatalogKey::new(l, m, k).is_ok()).collect()
}

fn series_cmd(k: KeyArgs, kind: Kind, fmt: OutFormat) -> Result<Output, CliError> {
    let key = key(k, kind)?;
    if kind.is_algebraic() {
        let g = catalog::grammar(key).map_err(domain)?;
        let sys = algebraic_system(&g).map_err(domain)?.trimmed();
        let eqs: Vec<String> = sys.to_string().lines().map(str::to_string).collect();
        return Ok(Output::ok(match fmt {
            OutFormat::Json => json_out(&json!({
                "l": k.l, "m": k.m, "kind": kind, "algebraic": true,
                "axiom": sys.names[sys.axiom], "equations": eqs,
            })),
            OutFormat::Csv => csv_out(&["equation"], &eqs.into_iter().map(|e| vec![e]).collect::<Vec<_>>()),
            OutFormat::Text => sys.to_string(),
        }));
    }
    let f = linear_series_of(kind, k.l, k.m).map_err(domain)?;
    let closed = closed_form(kind, k.l, k.m).ok();
    let agrees = closed.as_ref().map(|c| *c == f);
    Ok(Output::ok(match fmt {
        OutFormat::Json => {
            let closed_json = match &closed {
                Some(c) => json!({
                    "numerator": poly_strs(c.numerator()),
                    "denominator": poly_strs(c.denominator()),
                    "as_printed": true,
                    "matches_grammar": agrees,
                }),
                None => Value::Null,
            };
            json_out(&json!({
                "l": k.l, "m": k.m, "kind": kind,
                "numerator": poly_strs(f.numerator()),
                "denominator": poly_strs(f.denominator()),
                "closed_form": closed_json,
            }))
        }
        OutFormat::Csv => {
            let mut rows = Vec::new();
            let mut push = |part: &str, p: &Poly| {
                for (i, c) in p.coeffs().iter().enumerate() {
                    rows.push(vec![part.to_string(), i.to_string(), c.to_string()]);
                }
            };
            push("numerator", f.numerator());
            push("denominator", f.denominator());
            if let Some(c) = &closed {
                push("closed_numerator", c.numerator());
                push("closed_denominator", c.denominator());
            }
            csv_out(&["part", "degree", "coefficient"], &rows)
        }
        OutFormat::Text => {
            let mut s = format!("{kind} X({}, {}): {f}\n", k.l, k.m);
            if let (Some(c), Some(a)) = (&closed, agrees) {
                let _ = writeln!(s, "closed form as printed: {c} ({})", if a { "matches" } else { "differs" });
            }
            s
        }
    }))
}

fn coefficients(k: KeyArgs, kind: Kind, n: u32, source: Source) -> Result<Vec<BigInt>, CliError> {
    let key = key(k, kind)?;
    let nu = n as usize;
    match source {
        Source::Grammar if kind.is_algebraic() => {
            let sys = algebraic_system(&*catalog::grammar(key).map_err(domain)?).map_err(domain)?;
            system_coeffs(&sys, nu).map_err(domain)
        }
        Source::Grammar => Ok(series_expand(&linear_series_of(kind, k.l, k.m).map_err(domain)?, nu)),
        Source::Closed => Ok(series_expand(&closed_form(kind, k.l, k.m).map_err(domain)?, nu)),
        Source::Oracle => {
            let ball = build_ball(k.l, k.m, n).map_err(domain)?;
            Ok(match kind {
                Kind::Vertices => sphere_sizes(&ball).into_iter().map(BigInt::from).collect(),
                Kind::Geodesics => geodesic_multiplicities(&ball).1,
                Kind::Pairs => pair_sums(&ball),
                Kind::Holly => holly_counts(&ball, n).map_err(domain)?,
            })
        }
    }
}

fn coeffs_cmd(k: KeyArgs, kind: Kind, n: u32, source: Source, fmt: OutFormat) -> Result<Output, CliError> {
    let c = coefficients(k, kind, n, source)?;
    let source_name = format!("{source:?}").to_lowercase();
    Ok(Output::ok(match fmt {
        OutFormat::Json => json_out(&json!({
            "l": k.l, "m": k.m, "kind": kind, "source": source_name, "coefficients": strs(&c),
        })),
        OutFormat::Csv => csv_out(
            &["n", "coefficient"],
            &c.iter().enumerate().map(|(i, x)| vec![i.to_string(), x.to_string()]).collect::<Vec<_>>(),
        ),
        OutFormat::Text => c.iter().enumerate().map(|(i, x)| format!("{i} {x}\n")).collect(),
    }))
}

fn radius_cmd(k: KeyArgs, kind: Kind, tol: f64, fmt: OutFormat) -> Result<Output, CliError> {
    let key = key(k, kind)?;
    let bracket = if kind.is_algebraic() {
        let sys = algebraic_system(&*catalog::grammar(key).map_err(domain)?).map_err(domain)?;
        system_radius(&sys, tol).map_err(domain)?.map(|r| (r.lo, r.hi))
    } else {
        let f = linear_series_of(kind, k.l, k.m).map_err(domain)?;
        smallest_positive_root(f.denominator(), &rational_from_f64(tol)).map(|r| (r.lo_f64(), r.hi_f64()))
    };
    let Some((lo, hi)) = bracket else {
        return Err(CliError::Domain(format!("{kind} series of X({}, {}) has no finite radius", k.l, k.m)));
    };
    // loops are counted by half-length, so cogrowth is rho^(-1/2)
    let alpha = matches!(kind, Kind::Pairs | Kind::Holly).then(|| (hi.powf(-0.5), lo.powf(-0.5)));
    Ok(Output::ok(match fmt {
        OutFormat::Json => json_out(&json!({
            "l": k.l, "m": k.m, "kind": kind,
            "radius": {"lo": lo, "hi": hi},
            "growth": {"lo": 1.0 / hi, "hi": 1.0 / lo},
            "alpha": alpha.map(|(a, b)| json!({"lo": a, "hi": b})),
        })),
        OutFormat::Csv => {
            let mut rows = vec![
                vec!["radius".to_string(), lo.to_string(), hi.to_string()],
                vec!["growth".to_string(), (1.0 / hi).to_string(), (1.0 / lo).to_string()],
            ];
            if let Some((a, b)) = alpha {
                rows.push(vec!["alpha".to_string(), a.to_string(), b.to_string()]);
            }
            csv_out(&["quantity", "lo", "hi"], &rows)
        }
        OutFormat::Text => {
            let mid = 0.5 * (lo + hi);
            let mut s = format!("radius {mid:.12} ∈ [{lo:.12}, {hi:.12}]\ngrowth {:.12}\n", 1.0 / mid);
            if let Some((a, b)) = alpha {
                let _ = writeln!(s, "alpha {:.6} ∈ [{a:.6}, {b:.6}]", 0.5 * (a + b));
            }
            s
        }
    }))
}

#[derive(Serialize)]
struct KindCheck {
    kind: Kind,
    agree: bool,
    grammar: Vec<String>,
    oracle: Vec<String>,
    first_difference: Option<usize>,
    closed_form_agrees: Option<bool>,
}

fn verify_cmd(k: KeyArgs, depth: u32, kinds: Vec<Kind>, printed: bool, fmt: OutFormat) -> Result<Output, CliError> {
    crate::tessellation::check_parameters(k.l, k.m).map_err(domain)?;
    let kinds = if kinds.is_empty() { applicable_kinds(k.l, k.m) } else { kinds };
    for &kind in &kinds {
        key(k, kind)?;
    }
    let ball = build_ball(k.l, k.m, depth).map_err(domain)?;
    let structure = validate_structure(&ball);
    let mut checks = Vec::new();
    for kind in kinds {
        let grammar = if printed && kind == Kind::Pairs {
            let g = catalog::pair_grammar_with(k.l, k.m, catalog::OriginCells::Printed).map_err(domain)?;
            series_expand(&crate::grammar::linear_series(&g).map_err(domain)?, depth as usize)
        } else {
            coefficients(k, kind, depth, Source::Grammar)?
        };
        let oracle = match kind {
            Kind::Vertices => sphere_sizes(&ball).into_iter().map(BigInt::from).collect(),
            Kind::Geodesics => geodesic_multiplicities(&ball).1,
            Kind::Pairs => pair_sums(&ball),
            Kind::Holly => holly_counts(&ball, depth).map_err(domain)?,
        };
        let closed_form_agrees = match kind {
            Kind::Vertices | Kind::Geodesics => {
                let c = closed_form(kind, k.l, k.m).map_err(domain)?;
                Some(series_expand(&c, depth as usize) == grammar)
            }
            _ => None,
        };
        let diff = first_difference(&grammar, &oracle).map(|d| d.0);
        checks.push(KindCheck {
            kind,
            agree: diff.is_none() && grammar.len() == oracle.len() && closed_form_agrees != Some(false),
            grammar: strs(&grammar),
            oracle: strs(&oracle),
            first_difference: diff,
            closed_form_agrees,
        });
    }
    let failed: Vec<String> = checks.iter().filter(|c| !c.agree).map(|c| c.kind.to_string()).collect();
    let mut mismatch = (!failed.is_empty()).then(|| format!("grammar and ball disagree for {}", failed.join(", ")));
    if !structure.passed() {
        mismatch = Some("ball structure checks failed".into());
    }
    let body = match fmt {
        OutFormat::Json => json_out(&json!({
            "l": k.l, "m": k.m, "depth": depth,
            "structure_passed": structure.passed(),
            "results": checks,
            "agree": mismatch.is_none(),
        })),
        OutFormat::Csv => csv_out(
            &["kind", "agree", "first_difference", "grammar", "oracle"],
            &checks
                .iter()
                .map(|c| {
                    vec![
                        c.kind.to_string(),
                        c.agree.to_string(),
                        c.first_difference.map(|d| d.to_string()).unwrap_or_default(),
                        c.grammar.join(" "),
                        c.oracle.join(" "),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
        OutFormat::Text => {
            let mut s = format!(
                "X({}, {}) depth {}: structure {}\n",
                k.l,
                k.m,
                depth,
                if structure.passed() { "ok" } else { "FAILED" }
            );
            for c in &checks {
                let _ =
                    writeln!(s, "{:<10} {} {}", c.kind, if c.agree { "ok" } else { "MISMATCH" }, c.grammar.join(" "));
            }
            s
        }
    };
    Ok(Output { body, mismatch })
}

fn ball_cmd(k: KeyArgs, depth: u32, export: Option<String>, fmt: OutFormat) -> Result<Output, CliError> {
    let ball = build_ball(k.l, k.m, depth).map_err(domain)?;
    if let Some(path) = export {
        let text = ball.export();
        if path == "-" {
            return Ok(Output::ok(text));
        }
        std::fs::write(&path, text).map_err(CliError::Io)?;
    }
    let report = validate_structure(&ball);
    let sizes = sphere_sizes(&ball);
    Ok(Output {
        body: match fmt {
            OutFormat::Json => json_out(&json!({
                "l": k.l, "m": k.m, "depth": depth,
                "vertices": ball.vertex_count(),
                "sphere_sizes": sizes,
                "checks": report,
            })),
            OutFormat::Csv => csv_out(
                &["n", "sphere_size"],
                &sizes.iter().enumerate().map(|(i, x)| vec![i.to_string(), x.to_string()]).collect::<Vec<_>>(),
            ),
            OutFormat::Text => {
                let mut s = format!("X({}, {}) ball of radius {}: {} vertices\n", k.l, k.m, depth, ball.vertex_count());
                let _ = writeln!(s, "spheres: {sizes:?}");
                let _ = writeln!(s, "{}", serde_json::to_string(&report).expect("report serializes"));
                s
            }
        },
        mismatch: (!report.passed()).then(|| "ball structure checks failed".into()),
    })
}

fn dump_cmd(k: KeyArgs, kind: Option<Kind>, fmt: OutFormat) -> Result<Output, CliError> {
    let kinds = match kind {
        Some(kind) => {
            key(k, kind)?;
            vec![kind]
        }
        None => {
            crate::tessellation::check_parameters(k.l, k.m).map_err(domain)?;
            applicable_kinds(k.l, k.m)
        }
    };
    let mut grammars = Vec::new();
    for kind in kinds {
        let g = catalog::grammar(key(k, kind)?).map_err(domain)?;
        grammars.push((kind, g));
    }
    Ok(Output::ok(match fmt {
        OutFormat::Json => {
            let mut map = serde_json::Map::new();
            for (kind, g) in &grammars {
                map.insert(
                    kind.to_string(),
                    json!({"connectivity": strong_connectivity_check(g), "grammar": g.as_ref()}),
                );
            }
            json_out(&json!({"l": k.l, "m": k.m, "grammars": map}))
        }
        OutFormat::Csv => {
            let mut rows = Vec::new();
            for (kind, g) in &grammars {
                for r in &g.rules {
                    let payload =
                        r.payload.as_ref().map(|p| serde_json::to_string(p).expect("payload")).unwrap_or_default();
                    rows.push(vec![kind.to_string(), r.head.clone(), r.degree.to_string(), r.body.join(" "), payload]);
                }
            }
            csv_out(&["kind", "head", "degree", "body", "payload"], &rows)
        }
        OutFormat::Text => {
            let mut s = String::new();
            for (kind, g) in &grammars {
                let _ = writeln!(s, "# {kind} X({}, {}), axiom {}\n{g}", k.l, k.m, g.axiom);
            }
            s
        }
    }))
}

fn dispatch(cli: Cli) -> Result<Output, CliError> {
    let fmt = match (cli.json, cli.format) {
        (true, Some(f)) if f != OutFormat::Json => {
            return Err(CliError::Usage("--json conflicts with --format other than json".into()))
        }
        (true, _) => OutFormat::Json,
        (false, Some(f)) => f,
        (false, None) => OutFormat::Text,
    };
    match cli.command {
        Command::Series { key, kind } => series_cmd(key, kind.into(), fmt),
        Command::Coeffs { key, kind, n, source } => {
            if source == Source::Closed && Kind::from(kind) == Kind::Holly {
                return Err(CliError::Usage("holly trees have no closed form; use --source grammar or oracle".into()));
            }
            coeffs_cmd(key, kind.into(), n, source, fmt)
        }
        Command::Radius { key, kind, tol } => {
            let tol = check_tol(tol)?;
            radius_cmd(key, kind.into(), tol, fmt)
        }
        Command::Verify { key, depth, kind, printed } => {
            verify_cmd(key, depth, kind.into_iter().map(Kind::from).collect(), printed, fmt)
        }
        Command::Bounds { key, depth, fekete, no_holly, tol } => {
            let opts = BoundsOptions {
                depth,
                fekete_max: fekete,
                tol: check_tol(tol)?,
                holly: !no_holly,
                threads: cli.threads as usize,
            };
            let r = bounds_report(key.l, key.m, &opts).map_err(domain)?;
            Ok(Output::ok(emit_report(&r, fmt.into())))
        }
        Command::Ball { key, depth, export } => ball_cmd(key, depth, export, fmt),
        Command::DumpGrammar { key, kind } => dump_cmd(key, kind.map(Kind::from), fmt),
        Command::Errata { n } => match fmt {
            OutFormat::Text => Ok(Output::ok(catalog::errata_markdown(n as usize).map_err(domain)?)),
            _ => Err(CliError::Usage("errata is only available as text (markdown)".into())),
        },
    }
}

/// Serialized bounds report; identical reports give identical bytes.
pub fn emit_report(report: &crate::bounds::BoundsReport, format: Format) -> String {
    report.render(format)
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Format {
        match f {
            OutFormat::Json => Format::Json,
            OutFormat::Csv => Format::Csv,
            OutFormat::Text => Format::Text,
        }
    }
}

/// Runs the command line `argv` (program name first), writing results to
/// `out` and diagnostics to `err`; returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli) {
        Ok(o) => {
            if let Err(e) = out.write_all(o.body.as_bytes()).and_then(|_| out.flush()) {
                let _ = writeln!(err, "error: {e}");
                return 1;
            }
            match o.mismatch {
                Some(msg) => {
                    let _ = writeln!(err, "verification failed: {msg}");
                    4
                }
                None => 0,
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
