//! Command-line front end: parse monoid and M-set files, run the engine's
//! operations, and print deterministic text or JSON reports.
//!
//! Exit codes: 0 success, 1 a property violation or counterexample where
//! none was expected, 2 usage/parse/validation errors, 3 a resource guard
//! refused the computation.

pub mod files;

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wtop_core::lattice::{compose, enumerate_weak_topologies, TopologyClass};
use wtop_core::reflection::{in_c_j, is_separated, is_sheaf, sep_reflect_iterative,
    separated_reflection, sheafify_cj, sheafify_separated};
use wtop_core::topology::{
    central_element_topology, closed_topology, double_negation, open_topology,
    weak_ideal_topology,
};
use wtop_core::{Guard, LawConfig, Omega, SubMSet, WeakTopology};

use files::{mset_monoid_reference, parse_monoid_file, parse_mset_file, NamedMSet, NamedMonoid};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{}:{line}: {message}", path.as_deref().unwrap_or("<input>"))]
    Parse {
        path: Option<String>,
        line: usize,
        message: String,
    },
    #[error("{0}")]
    Usage(String),
    #[error("input exceeds --max-size: carrier has {size} points, limit {limit}")]
    InputSize { size: usize, limit: usize },
    #[error(transparent)]
    Core(#[from] wtop_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Usage(_) => 2,
            CliError::InputSize { .. } => 3,
            CliError::Core(err) => {
                if err.is_guard() {
                    3
                } else if matches!(err, wtop_core::Error::TheoremViolated(_)) {
                    1
                } else {
                    2
                }
            }
        }
    }

    fn with_path(self, path: &Path) -> CliError {
        match self {
            CliError::Parse { line, message, .. } => CliError::Parse {
                path: Some(path.display().to_string()),
                line,
                message,
            },
            other => other,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "wtop",
    version,
    about = "Weak Lawvere-Tierney topologies on finite M-sets"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Cap on |M| * |carrier| when an exponential object is needed.
    #[arg(long, global = true, value_name = "N")]
    guard_exp: Option<usize>,
    /// Refuse M-set inputs with more than this many points.
    #[arg(long, global = true, value_name = "N")]
    max_size: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the right ideals of a monoid.
    Ideals { monoid: PathBuf },
    /// Print the subobject classifier: its points and their action.
    Omega { monoid: PathBuf },
    /// Build a weak topology on the classifier and classify it.
    Topology {
        monoid: PathBuf,
        #[command(flatten)]
        selector: Selector,
        /// Also print the topology's table.
        #[arg(long)]
        show_table: bool,
    },
    /// Close a subobject of an M-set under a topology.
    Closure {
        mset: PathBuf,
        #[command(flatten)]
        selector: Selector,
        /// Subobject as comma-separated point names (empty for the empty one).
        #[arg(long, value_name = "CSV")]
        sub: String,
    },
    /// Report the separated/sheaf status of an M-set under a topology.
    Check {
        mset: PathBuf,
        #[command(flatten)]
        selector: Selector,
    },
    /// Enumerate all weak topologies on the classifier.
    Lattice {
        monoid: PathBuf,
        /// Compose two enumerated topologies: 'a,b' applies b first, then a.
        #[arg(long, value_name = "A,B")]
        compose: Option<String>,
    },
    /// Separated reflection of an M-set.
    Reflect {
        mset: PathBuf,
        #[command(flatten)]
        selector: Selector,
    },
    /// Sheafification of an M-set.
    Sheafify {
        mset: PathBuf,
        #[command(flatten)]
        selector: Selector,
    },
    /// Run the full law suite.
    Laws {
        /// Cap on monoid order for the enumerated laws.
        #[arg(long, value_name = "N", default_value_t = 4)]
        max_order: usize,
    },
}

/// Exactly one way of picking a weak topology.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Selector {
    /// Weak ideal topology: left ideal as comma-separated element names.
    #[arg(long, value_name = "CSV")]
    ideal: Option<String>,
    /// Topology of a central element, by name.
    #[arg(long, value_name = "NAME")]
    central: Option<String>,
    /// Open topology at a global point of the classifier (an ideal, CSV).
    #[arg(long, value_name = "CSV")]
    open: Option<String>,
    /// Closed topology at a global point of the classifier (an ideal, CSV).
    #[arg(long, value_name = "CSV")]
    closed: Option<String>,
    /// Double-negation topology.
    #[arg(long)]
    not_not: bool,
}

#[derive(Debug, Clone)]
pub struct SessionConfig {
    pub format: Format,
    pub guard: Guard,
    pub max_size: Option<usize>,
}

/// A finished command: text lines, JSON pieces, and an exit code.
struct Report {
    command: &'static str,
    monoid: Value,
    text: Vec<String>,
    result: Value,
    code: i32,
}

pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parse `argv` and run the selected command, capturing all output.
pub fn execute<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                Outcome {
                    stdout: rendered,
                    stderr: String::new(),
                    code: 0,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code: 2,
                }
            };
        }
    };
    let mut guard = Guard::default();
    if let Some(cells) = cli.guard_exp {
        guard.max_exponential_cells = cells;
    }
    let session = SessionConfig {
        format: cli.format,
        guard,
        max_size: cli.max_size,
    };
    match dispatch(&cli.command, &session) {
        Ok(report) => Outcome {
            code: report.code,
            stdout: render(report, session.format),
            stderr: String::new(),
        },
        Err(err) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code: err.exit_code(),
        },
    }
}

fn render(report: Report, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = report.text.join("\n");
            out.push('\n');
            out
        }
        Format::Json => {
            let value = json!({
                "command": report.command,
                "monoid": report.monoid,
                "result": report.result,
            });
            let mut out =
                serde_json::to_string_pretty(&value).expect("reports serialize");
            out.push('\n');
            out
        }
    }
}

fn dispatch(command: &Command, session: &SessionConfig) -> Result<Report, CliError> {
    match command {
        Command::Ideals { monoid } => cmd_ideals(monoid),
        Command::Omega { monoid } => cmd_omega(monoid),
        Command::Topology {
            monoid,
            selector,
            show_table,
        } => cmd_topology(monoid, selector, *show_table),
        Command::Closure {
            mset,
            selector,
            sub,
        } => cmd_closure(mset, selector, sub, session),
        Command::Check { mset, selector } => cmd_check(mset, selector, session),
        Command::Lattice { monoid, compose } => cmd_lattice(monoid, compose.as_deref(), session),
        Command::Reflect { mset, selector } => cmd_reflect(mset, selector, session),
        Command::Sheafify { mset, selector } => cmd_sheafify(mset, selector, session),
        Command::Laws { max_order } => cmd_laws(*max_order, session),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|err| CliError::Io {
        path: path.display().to_string(),
        message: err.to_string(),
    })
}

fn load_monoid(path: &Path) -> Result<NamedMonoid, CliError> {
    parse_monoid_file(&read_file(path)?).map_err(|err| err.with_path(path))
}

/// Load an M-set file, resolving its `monoid:` reference relative to the
/// file's own directory.
fn load_mset(path: &Path, session: &SessionConfig) -> Result<(NamedMonoid, NamedMSet), CliError> {
    let text = read_file(path)?;
    let reference = mset_monoid_reference(&text).map_err(|err| err.with_path(path))?;
    let monoid_path = path
        .parent()
        .map(|dir| dir.join(&reference))
        .unwrap_or_else(|| PathBuf::from(&reference));
    let named_monoid = load_monoid(&monoid_path)?;
    let named_mset = parse_mset_file(&text, &named_monoid).map_err(|err| err.with_path(path))?;
    if let Some(limit) = session.max_size {
        let size = named_mset.object.size();
        if size > limit {
            return Err(CliError::InputSize { size, limit });
        }
    }
    Ok((named_monoid, named_mset))
}

fn monoid_json(nm: &NamedMonoid) -> Value {
    json!({
        "elements": nm.names,
        "identity": nm.names[nm.monoid.identity()],
    })
}

fn ideal_json(nm: &NamedMonoid, omega: &Omega, index: usize) -> Value {
    Value::from(nm.set_names(omega.ideal(index)))
}

fn table_json(nm: &NamedMonoid, omega: &Omega, j: &WeakTopology) -> Value {
    Value::from(
        (0..omega.size())
            .map(|k| {
                json!({
                    "in": ideal_json(nm, omega, k),
                    "out": ideal_json(nm, omega, j.apply(k)),
                })
            })
            .collect::<Vec<Value>>(),
    )
}

fn table_text(nm: &NamedMonoid, omega: &Omega, j: &WeakTopology) -> Vec<String> {
    (0..omega.size())
        .map(|k| {
            format!(
                "  {} -> {}",
                nm.set_text(omega.ideal(k)),
                nm.set_text(omega.ideal(j.apply(k)))
            )
        })
        .collect()
}

fn points(n: usize) -> String {
    if n == 1 {
        "1 point".to_string()
    } else {
        format!("{n} points")
    }
}

fn yes_no(v: bool) -> &'static str {
    if v {
        "yes"
    } else {
        "no"
    }
}

/// Resolve a selector to a topology plus a description of what was chosen.
fn build_topology(
    selector: &Selector,
    nm: &NamedMonoid,
    omega: &Arc<Omega>,
) -> Result<(WeakTopology, String, Value), CliError> {
    if let Some(csv) = &selector.ideal {
        let set = nm.parse_subset(csv)?;
        if !nm.monoid.is_left_ideal(&set) {
            return Err(CliError::Usage(format!(
                "{} is not a left ideal of the monoid",
                nm.set_text(&set)
            )));
        }
        let j = weak_ideal_topology(omega, &set)?;
        let text = format!("ideal {}", nm.set_text(&set));
        let value = json!({"kind": "ideal", "members": nm.set_names(&set)});
        Ok((j, text, value))
    } else if let Some(name) = &selector.central {
        let index = nm
            .index_of(name)
            .ok_or_else(|| CliError::Usage(format!("unknown monoid element '{name}'")))?;
        if !nm.monoid.center().contains(index) {
            return Err(CliError::Usage(format!("element '{name}' is not central")));
        }
        let j = central_element_topology(omega, index)?;
        Ok((
            j,
            format!("central element {name}"),
            json!({"kind": "central", "element": name}),
        ))
    } else if let Some(csv) = &selector.open {
        let index = global_point(selector_set(nm, csv)?, nm, omega)?;
        let j = open_topology(omega, index)?;
        let text = format!("open at {}", nm.set_text(omega.ideal(index)));
        Ok((j, text, json!({"kind": "open", "at": nm.set_names(omega.ideal(index))})))
    } else if let Some(csv) = &selector.closed {
        let index = global_point(selector_set(nm, csv)?, nm, omega)?;
        let j = closed_topology(omega, index)?;
        let text = format!("closed at {}", nm.set_text(omega.ideal(index)));
        Ok((j, text, json!({"kind": "closed", "at": nm.set_names(omega.ideal(index))})))
    } else {
        debug_assert!(selector.not_not);
        Ok((
            double_negation(omega),
            "double negation".to_string(),
            json!({"kind": "not-not"}),
        ))
    }
}

fn selector_set(nm: &NamedMonoid, csv: &str) -> Result<wtop_core::ElemSet, CliError> {
    nm.parse_subset(csv)
}

/// Resolve an ideal to a global (action-fixed) point of the classifier.
fn global_point(
    set: wtop_core::ElemSet,
    nm: &NamedMonoid,
    omega: &Omega,
) -> Result<usize, CliError> {
    let index = omega
        .index_of(&set)
        .ok_or_else(|| CliError::Usage(format!("{} is not a right ideal", nm.set_text(&set))))?;
    if !omega.global_elements().contains(&index) {
        return Err(CliError::Usage(format!(
            "{} is not a global point of the classifier",
            nm.set_text(&set)
        )));
    }
    Ok(index)
}

fn cmd_ideals(path: &Path) -> Result<Report, CliError> {
    let nm = load_monoid(path)?;
    let omega = Omega::new(&nm.monoid);
    let mut text = vec![format!("right ideals: {}", omega.size())];
    let mut ideals = Vec::new();
    let mut two_sided = Vec::new();
    for (index, ideal) in omega.ideals().iter().enumerate() {
        let mut line = format!("  [{index}] {}", nm.set_text(ideal));
        if nm.monoid.is_two_sided_ideal(ideal) {
            line.push_str("  (two-sided)");
            two_sided.push(Value::from(nm.set_names(ideal)));
        }
        text.push(line);
        ideals.push(Value::from(nm.set_names(ideal)));
    }
    Ok(Report {
        command: "ideals",
        monoid: monoid_json(&nm),
        text,
        result: json!({"ideals": ideals, "two_sided": two_sided}),
        code: 0,
    })
}

fn cmd_omega(path: &Path) -> Result<Report, CliError> {
    let nm = load_monoid(path)?;
    let omega = Omega::new(&nm.monoid);
    let mut text = vec![format!("classifier points: {} right ideals", omega.size())];
    for (index, ideal) in omega.ideals().iter().enumerate() {
        text.push(format!("  [{index}] {}", nm.set_text(ideal)));
    }
    text.push(format!("action (columns: {}):", nm.names.join(" ")));
    let mut action = Vec::new();
    for k in 0..omega.size() {
        let images: Vec<usize> = (0..nm.monoid.order()).map(|m| omega.act(k, m)).collect();
        text.push(format!(
            "  [{k}] -> {}",
            images
                .iter()
                .map(|&i| format!("[{i}]"))
                .collect::<Vec<_>>()
                .join(" ")
        ));
        action.push(json!({
            "in": ideal_json(&nm, &omega, k),
            "out": images
                .iter()
                .map(|&i| ideal_json(&nm, &omega, i))
                .collect::<Vec<Value>>(),
        }));
    }
    let ideals: Vec<Value> = (0..omega.size()).map(|k| ideal_json(&nm, &omega, k)).collect();
    Ok(Report {
        command: "omega",
        monoid: monoid_json(&nm),
        text,
        result: json!({"ideals": ideals, "action": action}),
        code: 0,
    })
}

fn cmd_topology(path: &Path, selector: &Selector, show_table: bool) -> Result<Report, CliError> {
    let nm = load_monoid(path)?;
    let omega = Arc::new(Omega::new(&nm.monoid));
    let (j, selector_text, selector_value) = build_topology(selector, &nm, &omega)?;
    let mut text = vec![
        format!("selector: {selector_text}"),
        format!("productive: {}", yes_no(j.is_productive())),
        format!("idempotent: {}", yes_no(j.is_idempotent())),
    ];
    let mut result = json!({
        "selector": selector_value,
        "productive": j.is_productive(),
        "idempotent": j.is_idempotent(),
    });
    if show_table {
        text.push("table:".to_string());
        text.extend(table_text(&nm, &omega, &j));
        result["table"] = table_json(&nm, &omega, &j);
    }
    Ok(Report {
        command: "topology",
        monoid: monoid_json(&nm),
        text,
        result,
        code: 0,
    })
}

fn cmd_closure(
    path: &Path,
    selector: &Selector,
    sub_csv: &str,
    session: &SessionConfig,
) -> Result<Report, CliError> {
    let (nm, act) = load_mset(path, session)?;
    let omega = Arc::new(Omega::new(&nm.monoid));
    let (j, selector_text, selector_value) = build_topology(selector, &nm, &omega)?;
    let indices = act.parse_points(sub_csv)?;
    let sub = SubMSet::from_indices(&act.object, &indices)?;
    let closure = j.closure(&sub);
    let dense = j.is_dense(&sub);
    let closed = closure == sub;
    let text = vec![
        format!("object: {}", points(act.object.size())),
        format!("selector: {selector_text}"),
        format!("subobject: {}", act.set_text(&sub.indices())),
        format!("closure: {}", act.set_text(&closure.indices())),
        format!("dense: {}", yes_no(dense)),
        format!("closed: {}", yes_no(closed)),
    ];
    Ok(Report {
        command: "closure",
        monoid: monoid_json(&nm),
        text,
        result: json!({
            "selector": selector_value,
            "subobject": act.point_names(&sub.indices()),
            "closure": act.point_names(&closure.indices()),
            "dense": dense,
            "closed": closed,
        }),
        code: 0,
    })
}

fn cmd_check(path: &Path, selector: &Selector, session: &SessionConfig) -> Result<Report, CliError> {
    let (nm, act) = load_mset(path, session)?;
    let omega = Arc::new(Omega::new(&nm.monoid));
    let (j, selector_text, selector_value) = build_topology(selector, &nm, &omega)?;
    let separated = is_separated(&j, &act.object);
    let closed_diagonal_closure = in_c_j(&j, &act.object);
    let sheaf = match is_sheaf(&j, &act.object, &session.guard) {
        Ok(flag) => Some(flag),
        Err(wtop_core::Error::NotProductive) => None,
        Err(err) => return Err(err.into()),
    };
    let mut text = vec![
        format!("object: {}", points(act.object.size())),
        format!("selector: {selector_text}"),
        format!("productive: {}", yes_no(j.is_productive())),
        format!("separated: {}", yes_no(separated)),
        format!("closed diagonal closure: {}", yes_no(closed_diagonal_closure)),
    ];
    match sheaf {
        Some(flag) => text.push(format!("sheaf: {}", yes_no(flag))),
        None => text.push("sheaf: undecided (certified test needs a productive topology)".into()),
    }
    Ok(Report {
        command: "check",
        monoid: monoid_json(&nm),
        text,
        result: json!({
            "selector": selector_value,
            "productive": j.is_productive(),
            "separated": separated,
            "closed_diagonal_closure": closed_diagonal_closure,
            "sheaf": sheaf,
        }),
        code: 0,
    })
}

fn cmd_lattice(
    path: &Path,
    compose_arg: Option<&str>,
    session: &SessionConfig,
) -> Result<Report, CliError> {
    let nm = load_monoid(path)?;
    let omega = Arc::new(Omega::new(&nm.monoid));
    let all = enumerate_weak_topologies(&omega, TopologyClass::All, &session.guard)?;
    let mut text = vec![format!("weak topologies: {}", all.len())];
    let mut rows = Vec::new();
    for (index, j) in all.iter().enumerate() {
        let images = (0..omega.size())
            .map(|k| nm.set_text(omega.ideal(j.apply(k))))
            .collect::<Vec<_>>()
            .join(" ");
        let mut flags = Vec::new();
        if j.is_productive() {
            flags.push("productive");
        }
        if j.is_idempotent() {
            flags.push("idempotent");
        }
        let suffix = if flags.is_empty() {
            String::new()
        } else {
            format!("  ({})", flags.join(", "))
        };
        text.push(format!("  [{index}] {images}{suffix}"));
        rows.push(json!({
            "table": table_json(&nm, &omega, j),
            "productive": j.is_productive(),
            "idempotent": j.is_idempotent(),
        }));
    }
    let mut result = json!({"topologies": rows});
    if let Some(pair) = compose_arg {
        let (outer, inner) = parse_index_pair(pair, all.len())?;
        let composite = compose(&all[outer], &all[inner]);
        let position = all
            .iter()
            .position(|j| j == &composite)
            .expect("weak topologies are closed under composition");
        let images = (0..omega.size())
            .map(|k| nm.set_text(omega.ideal(composite.apply(k))))
            .collect::<Vec<_>>()
            .join(" ");
        text.push(format!(
            "compose [{outer}] after [{inner}]: {images}  (= [{position}])"
        ));
        result["compose"] = json!({
            "outer": outer,
            "inner": inner,
            "table": table_json(&nm, &omega, &composite),
            "index": position,
        });
    }
    Ok(Report {
        command: "lattice",
        monoid: monoid_json(&nm),
        text,
        result,
        code: 0,
    })
}

fn parse_index_pair(pair: &str, len: usize) -> Result<(usize, usize), CliError> {
    let parts: Vec<&str> = pair.split(',').map(str::trim).collect();
    let usage = || CliError::Usage(format!("--compose wants 'a,b' with indices below {len}"));
    if parts.len() != 2 {
        return Err(usage());
    }
    let a: usize = parts[0].parse().map_err(|_| usage())?;
    let b: usize = parts[1].parse().map_err(|_| usage())?;
    if a >= len || b >= len {
        return Err(usage());
    }
    Ok((a, b))
}

fn quotient_classes(unit: &wtop_core::MMap, source_size: usize, target_size: usize) -> Vec<Vec<usize>> {
    let mut classes = vec![Vec::new(); target_size];
    for x in 0..source_size {
        classes[unit.apply(x)].push(x);
    }
    classes
}

fn cmd_reflect(path: &Path, selector: &Selector, session: &SessionConfig) -> Result<Report, CliError> {
    let (nm, act) = load_mset(path, session)?;
    let omega = Arc::new(Omega::new(&nm.monoid));
    let (j, selector_text, selector_value) = build_topology(selector, &nm, &omega)?;
    let (method, (reflected, unit)) = if in_c_j(&j, &act.object) {
        ("one-step", separated_reflection(&j, &act.object)?)
    } else {
        ("iterated", sep_reflect_iterative(&j, &act.object)?)
    };
    let classes = quotient_classes(&unit, act.object.size(), reflected.size());
    let mut text = vec![
        format!("object: {}", points(act.object.size())),
        format!("selector: {selector_text}"),
        format!("separated quotient: {}", points(reflected.size())),
        format!("method: {method}"),
        "classes:".to_string(),
    ];
    for (q, class) in classes.iter().enumerate() {
        text.push(format!("  q{q} = {}", act.set_text(class)));
    }
    Ok(Report {
        command: "reflect",
        monoid: monoid_json(&nm),
        text,
        result: json!({
            "selector": selector_value,
            "size": reflected.size(),
            "method": method,
            "classes": classes
                .iter()
                .map(|class| Value::from(act.point_names(class)))
                .collect::<Vec<Value>>(),
        }),
        code: 0,
    })
}

fn cmd_sheafify(path: &Path, selector: &Selector, session: &SessionConfig) -> Result<Report, CliError> {
    let (nm, act) = load_mset(path, session)?;
    let omega = Arc::new(Omega::new(&nm.monoid));
    let (j, selector_text, selector_value) = build_topology(selector, &nm, &omega)?;
    let (method, (sheaf, unit)) = if is_separated(&j, &act.object) {
        ("separated", sheafify_separated(&j, &act.object, &session.guard)?)
    } else {
        ("reflect-then-embed", sheafify_cj(&j, &act.object, &session.guard)?)
    };
    let unit_rows: Vec<String> = (0..act.object.size())
        .map(|x| format!("  {} -> s{}", act.points[x], unit.apply(x)))
        .collect();
    let dense = j.is_dense(&unit.image());
    let mut text = vec![
        format!("object: {}", points(act.object.size())),
        format!("selector: {selector_text}"),
        format!("sheaf: {}", points(sheaf.size())),
        format!("method: {method}"),
        format!("unit image dense: {}", yes_no(dense)),
        "unit:".to_string(),
    ];
    text.extend(unit_rows);
    Ok(Report {
        command: "sheafify",
        monoid: monoid_json(&nm),
        text,
        result: json!({
            "selector": selector_value,
            "object_size": act.object.size(),
            "sheaf_size": sheaf.size(),
            "method": method,
            "unit_image_dense": dense,
            "unit": (0..act.object.size())
                .map(|x| json!({"from": act.points[x], "to": format!("s{}", unit.apply(x))}))
                .collect::<Vec<Value>>(),
        }),
        code: 0,
    })
}

fn cmd_laws(max_order: usize, session: &SessionConfig) -> Result<Report, CliError> {
    if max_order == 0 {
        return Err(CliError::Usage("--max-order must be positive".into()));
    }
    let config = LawConfig {
        max_order,
        guard: session.guard.clone(),
    };
    let reports = wtop_core::run_all(&config);
    let mut text = Vec::new();
    let mut laws = Vec::new();
    let mut failed = 0usize;
    for report in &reports {
        let verdict = if report.passed { "PASS" } else { "FAIL" };
        if !report.passed {
            failed += 1;
        }
        text.push(format!("{verdict} {}  {}", report.id, report.detail));
        laws.push(json!({
            "id": report.id,
            "passed": report.passed,
            "detail": report.detail,
        }));
    }
    let passed = reports.len() - failed;
    text.push(format!("passed {passed} of {}", reports.len()));
    Ok(Report {
        command: "laws",
        monoid: Value::Null,
        text,
        result: json!({"laws": laws, "passed": passed, "failed": failed}),
        code: if failed > 0 { 1 } else { 0 },
    })
}
