use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use raddeg_core::ar::ar_quiver;
use raddeg_core::degrees::{
    degree, fixture_reports, path_composition_report, PathStep, PlacedMorphism, Side, Theorem, TheoremReport,
    Verdict,
};
use raddeg_core::fleet::{fleet, Fixture};
use raddeg_core::{Catalogue, RadicalTable, DEFAULT_CAP};

use crate::dot::ar_quiver_dot;
use crate::workspace::{self, Workspace};

#[derive(Debug, Parser)]
#[command(name = "raddeg", version, about = "Radical layers, degrees of irreducible morphisms and AR data")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Debug, clap::Args)]
pub struct Output {
    /// Also write the output to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Machine-readable output, one JSON record per line.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimensions of rad^n(X, Y) for all catalogue members.
    RadicalTable {
        workspace: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Irreducible arrows with valuations and the translate.
    ArQuiver {
        workspace: PathBuf,
        /// Graphviz output.
        #[arg(long)]
        dot: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Left or right degree of a named morphism.
    Degree {
        workspace: PathBuf,
        #[arg(long)]
        morphism: String,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
        #[command(flatten)]
        output: Output,
    },
    /// Run verifiers over a workspace catalogue or the built-in fixtures.
    Verify {
        workspace: Option<PathBuf>,
        /// A, B, C, degree-kernel, mono-epi, shift, kernel-iso, finite-type,
        /// kernel-comparison, or all; comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        theorem: Vec<String>,
        /// Use every built-in fixture instead of a workspace.
        #[arg(long)]
        all_fixtures: bool,
        /// Print only reports that are not verified, and per-fixture counts.
        #[arg(long)]
        summary: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Path composition report for named irreducible morphisms.
    ComposePath {
        workspace: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        path: Vec<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Print a built-in fixture as a workspace file.
    Fixture {
        /// Fixture name; omit to list the names.
        name: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Parse a workspace and print it in canonical form.
    Normalize {
        workspace: PathBuf,
        #[command(flatten)]
        output: Output,
    },
}

/// Text produced by a command and its exit code: 0 on success, 2 when a
/// report is a VIOLATION.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

/// Nilpotency cap from `RADDEG_CAP`, defaulting to 30.
pub fn cap_from_env() -> anyhow::Result<usize> {
    match std::env::var("RADDEG_CAP") {
        Ok(v) => v.trim().parse().with_context(|| format!("RADDEG_CAP must be a positive integer, got '{v}'")),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn load(path: &Path) -> anyhow::Result<Workspace> {
    workspace::parse_file(path).with_context(|| format!("cannot load {}", path.display()))
}

fn fixture_name(path: &Path) -> String {
    path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

fn require_catalogue(ws: &Workspace) -> anyhow::Result<&Catalogue> {
    ws.catalogue().ok_or_else(|| anyhow!("the workspace has no [catalogue] block"))
}

fn table(c: &Catalogue) -> anyhow::Result<RadicalTable> {
    Ok(RadicalTable::build(c, cap_from_env()?)?)
}

fn json_line(out: &mut String, v: &impl Serialize) {
    out.push_str(&serde_json::to_string(v).expect("serializable"));
    out.push('\n');
}

fn radical_table(path: &Path, json: bool) -> anyhow::Result<String> {
    let ws = load(path)?;
    let c = require_catalogue(&ws)?;
    let t = table(c)?;
    let n = t.nilpotency();
    let mut out = String::new();
    if json {
        let members: Vec<Value> = (0..t.len())
            .map(|i| json!({ "label": c.label(i), "dim": c.member(i).dim(), "kappa": t.residue_dim(i) }))
            .collect();
        json_line(&mut out, &json!({ "fixture": fixture_name(path), "bound": n, "members": members }));
    } else {
        writeln!(out, "radical table for {} over {}", fixture_name(path), ws.field).unwrap();
        for i in 0..t.len() {
            writeln!(out, "member {}: dim {}, residue dim {}", c.label(i), c.member(i).dim(), t.residue_dim(i)).unwrap();
        }
        writeln!(out, "nilpotency bound {n}").unwrap();
        writeln!(out, "dim rad^m(X, Y) for m = 0..{n}:").unwrap();
    }
    for i in 0..t.len() {
        for j in 0..t.len() {
            if t.hom(i, j).dim() == 0 {
                continue;
            }
            let dims: Vec<usize> = (0..=n).map(|m| t.power_dim(m, i, j)).collect();
            if json {
                json_line(&mut out, &json!({ "source": c.label(i), "target": c.label(j), "rad_dims": dims }));
            } else {
                let d: Vec<String> = dims.iter().map(usize::to_string).collect();
                writeln!(out, "  {} -> {}: {}", c.label(i), c.label(j), d.join(" ")).unwrap();
            }
        }
    }
    Ok(out)
}

fn ar_quiver_text(path: &Path, dot: bool, json: bool) -> anyhow::Result<String> {
    let ws = load(path)?;
    let t = table(require_catalogue(&ws)?)?;
    let q = ar_quiver(&t)?;
    if dot {
        return Ok(ar_quiver_dot(&q));
    }
    let mut out = String::new();
    let label = |i: &Option<usize>| i.map_or_else(|| "-".to_string(), |j| q.labels[j].clone());
    for (i, l) in q.labels.iter().enumerate() {
        if json {
            json_line(
                &mut out,
                &json!({ "member": l, "dim_vector": q.dim_vectors[i], "tau": q.tau[i].map(|j| &q.labels[j]), "tau_inverse": q.tau_inverse[i].map(|j| &q.labels[j]) }),
            );
        } else {
            let dv: Vec<String> = q.dim_vectors[i].iter().map(usize::to_string).collect();
            writeln!(out, "{l} ({}): tau {}, tau^-1 {}", dv.join(","), label(&q.tau[i]), label(&q.tau_inverse[i])).unwrap();
        }
    }
    for a in &q.arrows {
        if json {
            json_line(&mut out, &json!({ "arrow": [q.labels[a.source], q.labels[a.target]], "valuation": [a.a, a.b] }));
        } else {
            writeln!(out, "{} -> {} ({},{})", q.labels[a.source], q.labels[a.target], a.a, a.b).unwrap();
        }
    }
    Ok(out)
}

fn degree_text(path: &Path, name: &str, side: SideArg, json: bool) -> anyhow::Result<String> {
    let ws = load(path)?;
    let t = table(require_catalogue(&ws)?)?;
    let m = ws.morphism(name).ok_or_else(|| anyhow!("unknown morphism '{name}'"))?;
    let side = match side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    let placed = PlacedMorphism::new(&t, &m.morphism)?;
    let r = degree(&t, &placed, side)?;
    let mut out = String::new();
    if json {
        json_line(&mut out, &json!({ "name": name, "report": r }));
        return Ok(out);
    }
    writeln!(
        out,
        "{side} degree of {name} [{}]: {} (depth {}, bound {})",
        r.morphism, r.value, r.depth, r.bound
    )
    .unwrap();
    if let Some(w) = &r.witness {
        writeln!(
            out,
            "witness from {} at level {}, composite depth {}:",
            w.label, w.level, w.composite_depth
        )
        .unwrap();
        for row in &w.matrix {
            writeln!(out, "  [{}]", row.join(" ")).unwrap();
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct Record<'a> {
    theorem: &'a str,
    fixture: &'a str,
    clause: String,
    status: String,
    data: Value,
}

fn report_records(out: &mut String, r: &TheoremReport) {
    for (kind, list) in [("hypothesis", &r.hypotheses), ("conclusion", &r.conclusions)] {
        for c in list {
            let status = match c.holds {
                Some(true) => "pass",
                Some(false) => "fail",
                None => "open",
            };
            json_line(
                out,
                &Record {
                    theorem: &r.theorem,
                    fixture: &r.fixture,
                    clause: format!("{kind}: {}", c.clause),
                    status: status.into(),
                    data: json!({ "subject": r.subject, "binding": c.binding, "value": c.data }),
                },
            );
        }
    }
    json_line(
        out,
        &Record {
            theorem: &r.theorem,
            fixture: &r.fixture,
            clause: "verdict".into(),
            status: r.status.to_string(),
            data: json!({ "subject": r.subject, "notes": r.notes }),
        },
    );
}

/// 2 if any report is a VIOLATION, else 0.
pub fn exit_code(reports: &[TheoremReport]) -> i32 {
    if reports.iter().any(|r| r.status == Verdict::Violation) {
        2
    } else {
        0
    }
}

fn parse_theorems(names: &[String]) -> anyhow::Result<Vec<Theorem>> {
    let mut out = Vec::new();
    for n in names {
        if n.eq_ignore_ascii_case("all") {
            out.extend(Theorem::ALL);
        } else {
            out.push(n.parse::<Theorem>()?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn emit_reports(out: &mut String, reports: &[TheoremReport], json: bool, summary: bool) {
    for r in reports {
        if summary && r.status == Verdict::Verified {
            continue;
        }
        if json {
            report_records(out, r);
        } else {
            write!(out, "{r}").unwrap();
        }
    }
}

fn tally(reports: &[TheoremReport]) -> BTreeMap<Verdict, usize> {
    let mut counts = BTreeMap::new();
    for r in reports {
        *counts.entry(r.status).or_insert(0) += 1;
    }
    counts
}

fn tally_line(name: &str, counts: &BTreeMap<Verdict, usize>) -> String {
    let total: usize = counts.values().sum();
    let parts: Vec<String> = counts.iter().map(|(v, n)| format!("{n} {v}")).collect();
    format!("{name}: {total} reports ({})", parts.join(", "))
}

fn verify(
    path: Option<&Path>,
    theorems: &[String],
    all_fixtures: bool,
    summary: bool,
    json: bool,
) -> anyhow::Result<Outcome> {
    let theorems = parse_theorems(theorems)?;
    let mut fixtures: Vec<Fixture> = Vec::new();
    if let Some(p) = path {
        let ws = load(p)?;
        fixtures.push(Fixture { name: fixture_name(p), catalogue: require_catalogue(&ws)?.clone() });
    }
    if all_fixtures {
        fixtures.extend(fleet()?);
    }
    if fixtures.is_empty() {
        bail!("give a workspace file or --all-fixtures");
    }
    let cap = cap_from_env()?;
    let mut out = String::new();
    let mut all = BTreeMap::new();
    let mut code = 0;
    for fx in &fixtures {
        let t = RadicalTable::build(&fx.catalogue, cap)?;
        let reports = fixture_reports(&t, &fx.name, &theorems)?;
        emit_reports(&mut out, &reports, json, summary);
        code = code.max(exit_code(&reports));
        let counts = tally(&reports);
        if !json {
            writeln!(out, "{}", tally_line(&fx.name, &counts)).unwrap();
        }
        for (v, n) in counts {
            *all.entry(v).or_insert(0) += n;
        }
    }
    if !json && fixtures.len() > 1 {
        writeln!(out, "{}", tally_line("total", &all)).unwrap();
    }
    Ok(Outcome { text: out, code })
}

fn compose_path(path: &Path, names: &[String], json: bool) -> anyhow::Result<Outcome> {
    let ws = load(path)?;
    let c = require_catalogue(&ws)?;
    let t = table(c)?;
    let mut steps = Vec::new();
    for n in names {
        let m = ws.morphism(n).ok_or_else(|| anyhow!("unknown morphism '{n}'"))?;
        let member = |label: &str| {
            c.index_of(label).ok_or_else(|| anyhow!("morphism {n}: module {label} is not a catalogue member"))
        };
        let (i, j) = (member(&m.source)?, member(&m.target)?);
        steps.push(PathStep::new(i, j, t.member_coords(i, j, &m.morphism.matrix)?));
    }
    let r = path_composition_report(&t, &steps)?.for_fixture(fixture_name(path));
    let mut out = String::new();
    emit_reports(&mut out, std::slice::from_ref(&r), json, false);
    let code = exit_code(std::slice::from_ref(&r));
    Ok(Outcome { text: out, code })
}

fn fixture(name: Option<&str>) -> anyhow::Result<String> {
    let all = fleet()?;
    let Some(name) = name else {
        return Ok(all.iter().map(|f| format!("{}\n", f.name)).collect());
    };
    let fx = all.iter().find(|f| f.name == name).ok_or_else(|| anyhow!("unknown fixture '{name}'"))?;
    let t = table(&fx.catalogue)?;
    let ws = workspace::from_catalogue(&fx.catalogue, &t);
    Ok(format!("# {}\n{}", fx.name, workspace::emit(&ws)?))
}

/// Runs one command; errors map to exit code 1.
pub fn execute(cli: &Cli) -> anyhow::Result<Outcome> {
    let ok = |text: String| Outcome { text, code: 0 };
    match &cli.command {
        Command::RadicalTable { workspace, output } => radical_table(workspace, output.json).map(ok),
        Command::ArQuiver { workspace, dot, output } => ar_quiver_text(workspace, *dot, output.json).map(ok),
        Command::Degree { workspace, morphism, side, output } => {
            degree_text(workspace, morphism, *side, output.json).map(ok)
        }
        Command::Verify { workspace, theorem, all_fixtures, summary, output } => {
            verify(workspace.as_deref(), theorem, *all_fixtures, *summary, output.json)
        }
        Command::ComposePath { workspace, path, output } => compose_path(workspace, path, output.json),
        Command::Fixture { name, .. } => fixture(name.as_deref()).map(ok),
        Command::Normalize { workspace, .. } => Ok(ok(workspace::emit(&load(workspace)?)?)),
    }
}

impl Command {
    pub fn output(&self) -> Option<&Output> {
        match self {
            Command::RadicalTable { output, .. }
            | Command::ArQuiver { output, .. }
            | Command::Degree { output, .. }
            | Command::Verify { output, .. }
            | Command::ComposePath { output, .. }
            | Command::Fixture { output, .. }
            | Command::Normalize { output, .. } => Some(output),
        }
    }
}

/// Parses arguments, runs, prints, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if let Some(path) = cli.command.output().and_then(|o| o.out.as_ref()) {
                if let Err(e) = std::fs::write(path, &outcome.text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 1;
                }
            }
            outcome.code
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            1
        }
    }
}
