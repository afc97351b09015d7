//! The `wbk` command line: argument parsing, command dispatch and report
//! rendering. [`run`] is the whole program minus process I/O.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use wbk_core::algebra::enumerate_group_homs;
use wbk_core::compose::{
    are_isomorphic, compose, decompose, enumerate_skew_brace_homs, random_spec,
};
use wbk_core::format::{load, serialize, LoadError, Structure};
use wbk_core::ideal::{
    additive_center, annihilator, enumerate_ideals_with, fix, ideal_tier, left_center, quotient,
    socle, EnumerationLimits,
};
use wbk_core::nilpotency::{
    annihilator_series, classify, gamma_series, right_series, socle_series, verify_sandwich,
    SeriesReport,
};
use wbk_core::solution::{
    check_braid, check_regularity, check_weak_inverses, period, solution_of, SolutionTable,
};
use wbk_core::{catalog, DualWeakBrace, ElementSet, SkewBrace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass | Status::Info => 0,
            Status::Fail => 1,
        }
    }

    fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub lines: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Value>,
}

impl Report {
    fn new(command: &str, status: Status) -> Self {
        Report {
            command: command.to_string(),
            status,
            lines: Vec::new(),
            witnesses: None,
        }
    }

    fn line(mut self, l: impl Into<String>) -> Self {
        self.lines.push(l.into());
        self
    }

    fn witnesses(mut self, w: Value) -> Self {
        self.witnesses = Some(w);
        self
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            OutputFormat::Text => {
                let mut s = String::new();
                for l in &self.lines {
                    writeln!(s, "{l}").unwrap();
                }
                let status = match self.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::Info => "info",
                };
                writeln!(s, "{}: {status}", self.command).unwrap();
                s
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesChoice {
    Right,
    Socle,
    Ann,
    Gamma,
}

#[derive(Debug, Parser)]
#[command(
    name = "wbk",
    version,
    about = "Finite dual weak braces, their solutions, ideals and series"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Args)]
pub struct Options {
    /// Structure file (JSON).
    #[arg(long, global = true, conflicts_with = "catalog")]
    pub input: Option<String>,
    /// Built-in catalog entry.
    #[arg(long, global = true)]
    pub catalog: Option<String>,
    /// Second structure for `homs` and `iso`: a path or `catalog:<name>`.
    #[arg(long, global = true)]
    pub other: Option<String>,
    /// Ideal as comma-separated indices, e.g. `0,2,4`.
    #[arg(long, global = true)]
    pub ideal: Option<String>,
    /// Chain of ideals separated by `;`, e.g. `0;0,2,4;0,1,2,3,4,5`.
    #[arg(long, global = true)]
    pub chain: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Enumeration bound: largest order for `ideals`, most maps listed by `homs`.
    #[arg(long, global = true)]
    pub limit: Option<usize>,
    /// Seed for randomized generation.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load and validate a structure.
    Validate,
    /// Compose a strong semilattice spec, or a random one from `--seed`.
    Compose,
    /// Split a dual weak brace into its strong semilattice spec.
    Decompose,
    /// Emit the solution r(a, b) = (λ_a(b), ρ_b(a)).
    Solve,
    /// Check the braid relation on every triple.
    Braid,
    /// Smallest p with r^{p+1} = r.
    Period,
    /// Weak-inverse and λ/ρ regularity identities.
    Regularity,
    /// Enumerate ideals with their tiers.
    Ideals,
    /// Socle.
    Soc,
    /// Fix(S).
    Fix,
    /// Zl(S) = Fix(S) ∩ additive center.
    Zl,
    /// Annihilator.
    Ann,
    /// Quotient by `--ideal`.
    Quotient,
    /// Homomorphisms into `--other`.
    Homs,
    /// Isomorphism test against `--other`.
    Iso,
    /// One of the series right, socle, ann, gamma.
    Series {
        #[arg(value_enum)]
        kind: SeriesChoice,
    },
    /// Check an annihilator series (default: the upper series) against Γ and Ann.
    Sandwich,
    /// Every series on the structure and its components.
    Classify,
}

impl Command {
    fn name(&self) -> String {
        match self {
            Command::Validate => "validate".into(),
            Command::Compose => "compose".into(),
            Command::Decompose => "decompose".into(),
            Command::Solve => "solve".into(),
            Command::Braid => "braid".into(),
            Command::Period => "period".into(),
            Command::Regularity => "regularity".into(),
            Command::Ideals => "ideals".into(),
            Command::Soc => "soc".into(),
            Command::Fix => "fix".into(),
            Command::Zl => "zl".into(),
            Command::Ann => "ann".into(),
            Command::Quotient => "quotient".into(),
            Command::Homs => "homs".into(),
            Command::Iso => "iso".into(),
            Command::Series { kind } => format!(
                "series {}",
                kind.to_possible_value().expect("named").get_name()
            ),
            Command::Sandwich => "sandwich".into(),
            Command::Classify => "classify".into(),
        }
    }
}

/// Exit code for usage and parse errors.
pub const USAGE_EXIT: i32 = 2;

/// Output of one invocation: text for stdout and stderr plus the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs `wbk` on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE_EXIT } else { 0 };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => Outcome {
            stdout: report.render(cli.opts.format),
            stderr: String::new(),
            code: report.status.exit_code(),
        },
        Err(CliError::Usage(msg)) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: USAGE_EXIT,
        },
        Err(CliError::Math(report)) => Outcome {
            stdout: report.render(cli.opts.format),
            stderr: String::new(),
            code: report.status.exit_code(),
        },
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments, unreadable or unparsable input.
    Usage(String),
    /// The input was read but failed validation; carries a failing report.
    Math(Report),
}

fn load_source(command: &str, source: &str) -> Result<Structure, CliError> {
    load(source).map_err(|e| match e {
        LoadError::Validation(v) => {
            CliError::Math(Report::new(command, Status::Fail).line(format!("invalid: {v}")))
        }
        other => CliError::Usage(other.to_string()),
    })
}

fn input(cli: &Cli, command: &str) -> Result<Structure, CliError> {
    match (&cli.opts.input, &cli.opts.catalog) {
        (Some(path), None) => load_source(command, path),
        (None, Some(name)) => load_source(command, &format!("catalog:{name}")),
        _ => Err(CliError::Usage(
            "exactly one of --input or --catalog is required".into(),
        )),
    }
}

fn brace_input(cli: &Cli, command: &str) -> Result<DualWeakBrace, CliError> {
    let s = input(cli, command)?;
    s.to_dual_weak_brace().ok_or_else(|| {
        CliError::Usage(format!(
            "{command} needs a brace-like structure, got {}",
            s.kind()
        ))
    })
}

fn solution_input(cli: &Cli, command: &str) -> Result<SolutionTable, CliError> {
    match input(cli, command)? {
        Structure::Solution(r) => Ok(r),
        other => other
            .to_dual_weak_brace()
            .map(|s| solution_of(&s))
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "{command} needs a solution or a brace, got {}",
                    other.kind()
                ))
            }),
    }
}

fn other_input(cli: &Cli, command: &str) -> Result<Structure, CliError> {
    let source = cli
        .opts
        .other
        .as_deref()
        .ok_or_else(|| CliError::Usage(format!("{command} needs --other")))?;
    load_source(command, source)
}

fn parse_set(text: &str, n: usize) -> Result<ElementSet, CliError> {
    let mut items = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let x: usize = part
            .parse()
            .map_err(|_| CliError::Usage(format!("bad element {part:?}")))?;
        if x >= n {
            return Err(CliError::Usage(format!(
                "element {x} out of range for order {n}"
            )));
        }
        items.push(x);
    }
    Ok(ElementSet::from_indices(n, items))
}

fn set_json(x: &ElementSet) -> Value {
    json!(x.to_vec())
}

/// `{0.0, 1.0}`: each element as `component.local`.
fn local_labels(s: &DualWeakBrace, x: &ElementSet) -> String {
    let d = decompose(s).expect("every dual weak brace decomposes");
    let parts: Vec<String> = x
        .iter()
        .map(|a| {
            let (alpha, i) = d.locate(a);
            format!("{alpha}.{i}")
        })
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn series_lines(r: &SeriesReport) -> Vec<String> {
    let mut out = vec![r.to_string()];
    out.extend(
        r.chain
            .iter()
            .enumerate()
            .map(|(k, t)| format!("  {k}: {t}")),
    );
    if let Some(ok) = r.quotient_agrees {
        out.push(format!(
            "quotient cross-check: {}",
            if ok { "agrees" } else { "DISAGREES" }
        ));
    }
    out
}

fn series_json(r: &SeriesReport) -> Value {
    json!({
        "kind": r.kind.name(),
        "chain": r.chain.iter().map(ElementSet::to_vec).collect::<Vec<_>>(),
        "terminated": r.terminated,
        "index": r.index,
        "quotient_agrees": r.quotient_agrees,
    })
}

fn subset_report(command: &str, s: &DualWeakBrace, x: ElementSet) -> Report {
    Report::new(command, Status::Info)
        .line(x.to_string())
        .line(format!("local: {}", local_labels(s, &x)))
        .witnesses(json!({ "set": set_json(&x) }))
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let name = cli.command.name();
    let cmd = name.as_str();
    let report = match &cli.command {
        Command::Validate => {
            let s = input(cli, cmd)?;
            let mut r = Report::new(cmd, Status::Pass).line(format!("valid {}", s.kind()));
            if let Some(b) = s.to_dual_weak_brace() {
                r = r.line(format!(
                    "order {}, {} idempotents",
                    b.order(),
                    b.idempotents().len()
                ));
            }
            r
        }
        Command::Compose => {
            let spec = match (&cli.opts.input, &cli.opts.catalog) {
                (None, None) => {
                    let pool: Vec<SkewBrace> = catalog::entries()
                        .iter()
                        .filter_map(|e| match &e.structure {
                            Structure::SkewBrace(b) if b.order() <= 6 => Some(b.clone()),
                            _ => None,
                        })
                        .collect();
                    random_spec(&pool, cli.opts.seed)
                }
                _ => match input(cli, cmd)? {
                    Structure::Spec(spec) => spec,
                    other => {
                        return Err(CliError::Usage(format!(
                            "compose needs a strong_semilattice, got {}",
                            other.kind()
                        )))
                    }
                },
            };
            let s = compose(&spec)
                .map_err(|e| CliError::Math(Report::new(cmd, Status::Fail).line(e.to_string())))?;
            Report::new(cmd, Status::Pass)
                .line(format!(
                    "order {}, {} components",
                    s.order(),
                    s.component_count()
                ))
                .line(serialize(&Structure::DualWeakBrace(s)))
        }
        Command::Decompose => {
            let s = brace_input(cli, cmd)?;
            let d = decompose(&s)
                .map_err(|e| CliError::Math(Report::new(cmd, Status::Fail).line(e.to_string())))?;
            let mut r = Report::new(cmd, Status::Info);
            for alpha in 0..d.spec.semilattice().size() {
                r = r.line(format!("component {alpha}: {:?}", d.members(alpha)));
            }
            r.line(serialize(&Structure::Spec(d.spec.clone())))
        }
        Command::Solve => {
            let s = brace_input(cli, cmd)?;
            Report::new(cmd, Status::Info).line(serialize(&Structure::Solution(solution_of(&s))))
        }
        Command::Braid => {
            let r = solution_input(cli, cmd)?;
            let rep = check_braid(&r);
            match rep.witness {
                None => {
                    Report::new(cmd, Status::Pass).line(format!("{} triples checked", rep.checked))
                }
                Some((a, b, c)) => Report::new(cmd, Status::Fail)
                    .line(format!("BRAID-FAIL {a} {b} {c}"))
                    .witnesses(json!({ "triple": [a, b, c] })),
            }
        }
        Command::Period => {
            let r = solution_input(cli, cmd)?;
            match period(&r) {
                Ok(p) => Report::new(cmd, Status::Pass)
                    .line(format!("period {p}"))
                    .witnesses(json!({ "period": p })),
                Err(e) => Report::new(cmd, Status::Fail).line(e.to_string()),
            }
        }
        Command::Regularity => {
            let s = brace_input(cli, cmd)?;
            let w = check_weak_inverses(&s);
            let g = check_regularity(&s);
            let mut r = Report::new(cmd, Status::of(w.holds() && g.holds()))
                .line(format!("r r^op r = r: {}", w.r_rop_r))
                .line(format!("r^op r r^op = r^op: {}", w.rop_r_rop))
                .line(format!("r r^op = r^op r: {}", w.commute));
            if let Some(inv) = w.inverse {
                r = r.line(format!("r r^op = id: {inv}"));
            }
            r = r
                .line(format!(
                    "bijective: {}, image size {}",
                    w.bijective, w.image_size
                ))
                .line(format!("λ bijective at {:?}", g.lambda_bijective))
                .line(format!("ρ bijective at {:?}", g.rho_bijective));
            for &(a, i) in &g.failures {
                r = r.line(format!(
                    "REGULARITY-FAIL {a} {}",
                    wbk_core::solution::REGULARITY_IDENTITIES[i]
                ));
            }
            r.witnesses(json!({ "failures": g.failures }))
        }
        Command::Ideals => {
            let s = brace_input(cli, cmd)?;
            let mut limits = EnumerationLimits::from_env();
            if let Some(l) = cli.opts.limit {
                limits.max_order = l;
            }
            let e = enumerate_ideals_with(&s, limits, None)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let mut r = Report::new(cmd, Status::Info).line(format!("mode: {}", e.mode.name()));
            // Left and strong left ideals are listed when every subset is examined.
            let mut listed: Vec<(ElementSet, &str)> = Vec::new();
            if s.order() <= limits.exhaustive_bound {
                let free: Vec<usize> = (0..s.order()).filter(|&a| !s.is_idempotent(a)).collect();
                for m in 0u64..1 << free.len() {
                    let x = ElementSet::from_indices(
                        s.order(),
                        s.idempotents().iter().chain(
                            free.iter()
                                .enumerate()
                                .filter(|(b, _)| m >> b & 1 == 1)
                                .map(|(_, &a)| a),
                        ),
                    );
                    if let Some(t) = ideal_tier(&s, &x) {
                        listed.push((x, t.tag()));
                    }
                }
            } else {
                listed.extend(e.ideals.iter().map(|x| (x.clone(), "I")));
            }
            listed.sort_by_key(|(x, _)| (x.len(), x.to_vec()));
            for (x, tag) in &listed {
                r = r.line(format!("{x} {tag}"));
            }
            let w: Vec<Value> = listed
                .iter()
                .map(|(x, t)| json!({ "set": set_json(x), "tier": t }))
                .collect();
            r.witnesses(Value::Array(w))
        }
        Command::Soc => {
            let s = brace_input(cli, cmd)?;
            subset_report(cmd, &s, socle(&s))
        }
        Command::Fix => {
            let s = brace_input(cli, cmd)?;
            subset_report(cmd, &s, fix(&s))
        }
        Command::Zl => {
            let s = brace_input(cli, cmd)?;
            debug_assert_eq!(left_center(&s), fix(&s).intersection(&additive_center(&s)));
            subset_report(cmd, &s, left_center(&s))
        }
        Command::Ann => {
            let s = brace_input(cli, cmd)?;
            subset_report(cmd, &s, annihilator(&s))
        }
        Command::Quotient => {
            let s = brace_input(cli, cmd)?;
            let text = cli
                .opts
                .ideal
                .as_deref()
                .ok_or_else(|| CliError::Usage("quotient needs --ideal".into()))?;
            let i = parse_set(text, s.order())?;
            match quotient(&s, &i) {
                Ok(q) => Report::new(cmd, Status::Pass)
                    .line(format!("|S/I| = {}", q.quotient.order()))
                    .line(format!("projection {:?}", q.projection))
                    .line(serialize(&Structure::DualWeakBrace(q.quotient.clone())))
                    .witnesses(json!({ "projection": q.projection, "class_rep": q.class_rep })),
                Err(e) => Report::new(cmd, Status::Fail).line(e.to_string()),
            }
        }
        Command::Homs => {
            let a = input(cli, cmd)?;
            let b = other_input(cli, cmd)?;
            let maps = match (&a, &b) {
                (Structure::Group(g), Structure::Group(h)) => enumerate_group_homs(g, h),
                (Structure::SkewBrace(x), Structure::SkewBrace(y)) => {
                    enumerate_skew_brace_homs(x, y)
                }
                _ => {
                    return Err(CliError::Usage(format!(
                        "homs needs two groups or two skew braces, got {} and {}",
                        a.kind(),
                        b.kind()
                    )))
                }
            };
            let shown = cli.opts.limit.unwrap_or(maps.len()).min(maps.len());
            let mut r =
                Report::new(cmd, Status::Info).line(format!("{} homomorphisms", maps.len()));
            for f in &maps[..shown] {
                r = r.line(format!("{f:?}"));
            }
            r.witnesses(json!(maps[..shown]))
        }
        Command::Iso => {
            let s = brace_input(cli, cmd)?;
            let t = other_input(cli, cmd)?
                .to_dual_weak_brace()
                .ok_or_else(|| CliError::Usage("iso needs brace-like structures".into()))?;
            match are_isomorphic(&s, &t) {
                Some(w) => Report::new(cmd, Status::Pass)
                    .line(format!("eta {:?}", w.eta))
                    .line(format!("map {:?}", w.element_map))
                    .witnesses(
                        json!({ "eta": w.eta, "thetas": w.thetas, "element_map": w.element_map }),
                    ),
                None => Report::new(cmd, Status::Fail).line("not isomorphic"),
            }
        }
        Command::Series { kind } => {
            let s = brace_input(cli, cmd)?;
            let rep = match kind {
                SeriesChoice::Right => right_series(&s),
                SeriesChoice::Socle => socle_series(&s),
                SeriesChoice::Ann => annihilator_series(&s),
                SeriesChoice::Gamma => {
                    let i = match cli.opts.ideal.as_deref() {
                        Some(t) => parse_set(t, s.order())?,
                        None => s.full_set(),
                    };
                    match gamma_series(&s, &i) {
                        Ok(r) => r,
                        Err(e) => return Ok(Report::new(cmd, Status::Fail).line(e.to_string())),
                    }
                }
            };
            let status = if rep.quotient_agrees == Some(false) {
                Status::Fail
            } else {
                Status::Info
            };
            let mut r = Report::new(cmd, status);
            r.lines = series_lines(&rep);
            r.witnesses(series_json(&rep))
        }
        Command::Sandwich => {
            let s = brace_input(cli, cmd)?;
            let chain = match cli.opts.chain.as_deref() {
                Some(text) => text
                    .split(';')
                    .map(|t| parse_set(t, s.order()))
                    .collect::<Result<Vec<_>, _>>()?,
                None => {
                    let ann = annihilator_series(&s);
                    if !ann.terminated {
                        return Ok(Report::new(cmd, Status::Fail)
                            .line("the upper annihilator series does not reach S; pass --chain"));
                    }
                    ann.chain
                }
            };
            match verify_sandwich(&s, &chain) {
                Ok(rep) => Report::new(cmd, Status::of(rep.passed()))
                    .line(format!("Γ_(k-j)(S) ⊆ I_j: {:?}", rep.gamma_inclusions))
                    .line(format!("I_j ⊆ Ann_j(S): {:?}", rep.ann_inclusions))
                    .line(format!(
                        "N/M ⊆ Ann(S/M) iff Γ(N) ⊆ M: {}",
                        rep.quotient_criterion
                    ))
                    .line(format!("Γ(M + N) = Γ(M) + Γ(N): {}", rep.gamma_sum)),
                Err(e) => Report::new(cmd, Status::Fail).line(e.to_string()),
            }
        }
        Command::Classify => {
            let s = brace_input(cli, cmd)?;
            let c = classify(&s);
            let mut r = Report::new(cmd, Status::of(c.passed()));
            for rep in [&c.right, &c.socle, &c.annihilator, &c.gamma] {
                r = r.line(rep.to_string());
            }
            let idx = |i: Option<usize>| i.map_or("-".to_string(), |k| k.to_string());
            for (alpha, comp) in c.components.iter().enumerate() {
                r = r.line(format!(
                    "component {alpha}: right {}, socle {}, ann {}",
                    idx(comp.right),
                    idx(comp.socle),
                    idx(comp.annihilator)
                ));
            }
            for (name, ok) in &c.checks {
                r = r.line(format!("{}: {name}", if *ok { "ok" } else { "FAILED" }));
            }
            r.witnesses(json!({
                "right": c.right.index,
                "socle": c.socle.index,
                "annihilator": c.annihilator.index,
                "gamma": c.gamma.index,
            }))
        }
    };
    Ok(report)
}
