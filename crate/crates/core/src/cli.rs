//! Command-line front end. [`run`] takes the argument list and returns the
//! exit code with what would go to stdout and stderr, so the binary is a
//! thin wrapper and tests can call it directly.
//!
//! Exit codes: 0 on success, 1 when `--assert` is given and a checked
//! property fails, 2 on usage and input errors.

use crate::catalog::{self, CatalogEntry};
use crate::error::{Error, Result};
use crate::formula::{self, boolean_counterexample, holds_identity, Env, Formula, ImplicationSemantics};
use crate::logic::{
    check_metaproperties, classify, law_report, negation_axiom_report, random_negation, LogicStructure, Metaproperty,
    NegationMap, RandomNegation,
};
use crate::order::{find_forbidden_sublattice, property_scan, FiniteLattice, LatticeDoc, Pattern, DEFAULT_SEARCH_BUDGET};
use crate::quantum::{compatible_decomposition, effects_fixture, macneille_completion, Effect2, InvolutedPoset};
use crate::rational::Rational;
use crate::report::{PropertyReport, Verdict, Witness};
use crate::residuation::{build_tnorm_logic, implicative_report, tnorm_eval, tnorm_residuum, TNormKind};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Debug, Parser)]
#[command(name = "finlogic", version, about = "Finite lattices with negations: law checks and classification")]
struct Cli {
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
struct Source {
    /// Catalog entry, `NAME` or `NAME(k)`.
    #[arg(long, value_name = "NAME", conflicts_with = "file")]
    catalog: Option<String>,
    /// Lattice JSON file.
    #[arg(long, value_name = "PATH")]
    file: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List, show or export catalog entries.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Check lattice laws, negation axioms and logic laws.
    Check {
        #[command(flatten)]
        src: Source,
        /// Restrict to these properties (repeatable).
        #[arg(long = "property", value_name = "NAME")]
        properties: Vec<String>,
        /// Exit with 1 if a checked property fails.
        #[arg(long)]
        assert: bool,
        /// Node cap for the forbidden-sublattice searches.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Flags and hierarchy label of a structure with negation.
    Classify {
        #[command(flatten)]
        src: Source,
    },
    /// Relative pseudocomplements and the implicative law suite.
    Residuum {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        assert: bool,
    },
    /// Finite t-norm tables, or one pointwise value with --at.
    Tnorm {
        /// luk, goedel or product.
        kind: String,
        /// Values 0, 1/n, ..., 1.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Evaluate fusion and residuum at X and Y (rationals `p/q`).
        #[arg(long, num_args = 2, value_names = ["X", "Y"])]
        at: Option<Vec<String>>,
    },
    /// Evaluate a formula, check an identity, or test a classical tautology.
    Eval {
        #[command(flatten)]
        src: Source,
        formula: String,
        /// Check `FORMULA = RHS` for all assignments.
        #[arg(long)]
        rhs: Option<String>,
        /// Variable assignment `x=label` (repeatable).
        #[arg(long = "set", value_name = "VAR=LABEL")]
        set: Vec<String>,
        #[arg(long, value_enum)]
        semantics: Option<SemanticsArg>,
        #[arg(long)]
        assert: bool,
    },
    /// Compatible decomposition of two elements of an orthomodular logic.
    Decompose {
        #[command(flatten)]
        src: Source,
        x: String,
        y: String,
    },
    /// MacNeille completion of a poset with an involution.
    Macneille {
        #[command(flatten)]
        src: Source,
        /// Named effect fixture (`effects-abcd`).
        #[arg(long, conflicts_with_all = ["effects", "catalog", "file"])]
        fixture: Option<String>,
        /// JSON object mapping names to effects.
        #[arg(long, value_name = "PATH", conflicts_with_all = ["catalog", "file"])]
        effects: Option<String>,
    },
    /// Hasse diagram as DOT or by rank.
    Render {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        dot: bool,
    },
    /// Check every catalog entry against its known classification.
    Selftest {
        /// Also run the metaproperty sweep with this many random negations
        /// per lattice.
        #[arg(long, default_value_t = 0)]
        sweep: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
    Export { name: String },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SemanticsArg {
    Ortho,
    Residuated,
    Table,
}

struct Out {
    code: i32,
    text: String,
    json: Value,
}

impl Out {
    fn ok(text: String, json: Value) -> Self {
        Out { code: 0, text, json }
    }
}

/// Runs one command line (including the program name) and returns the exit
/// code, standard output and standard error.
pub fn run<I, S>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = argv.into_iter().map(Into::into).collect();
    let json_requested = args.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, e.to_string(), String::new()),
                _ if json_requested => (2, String::new(), error_json("usage", &e.to_string())),
                _ => (2, String::new(), e.to_string()),
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) if cli.json => (out.code, format!("{}\n", out.json), String::new()),
        Ok(out) => (out.code, out.text, String::new()),
        Err(e) if cli.json => (2, String::new(), error_json("error", &e.to_string())),
        Err(e) => (2, String::new(), format!("error: {e}\n")),
    }
}

fn error_json(kind: &str, msg: &str) -> String {
    format!("{}\n", json!({ "error": kind, "message": msg.trim() }))
}

fn dispatch(cli: &Cli) -> Result<Out> {
    match &cli.command {
        Command::Catalog { action } => catalog_cmd(action),
        Command::Check {
            src,
            properties,
            assert,
            budget,
        } => check_cmd(&load(src)?, properties, *assert, *budget),
        Command::Classify { src } => classify_cmd(&load(src)?),
        Command::Residuum { src, assert } => residuum_cmd(&load(src)?, *assert),
        Command::Tnorm { kind, n, at } => tnorm_cmd(kind, *n, at.as_deref()),
        Command::Eval {
            src,
            formula,
            rhs,
            set,
            semantics,
            assert,
        } => eval_cmd(src, formula, rhs.as_deref(), set, *semantics, *assert),
        Command::Decompose { src, x, y } => decompose_cmd(&load(src)?, x, y),
        Command::Macneille {
            src,
            fixture,
            effects,
        } => macneille_cmd(src, fixture.as_deref(), effects.as_deref()),
        Command::Render { src, dot } => render_cmd(&load(src)?, *dot),
        Command::Selftest { sweep, seed } => selftest_cmd(*sweep, *seed),
    }
}

fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::BadParams {
        name: path.into(),
        reason: e.to_string(),
    })
}

fn load(src: &Source) -> Result<CatalogEntry> {
    match (&src.catalog, &src.file) {
        (Some(name), None) => catalog::lookup(name),
        (None, Some(path)) => CatalogEntry::from_doc(path, &LatticeDoc::parse(&read_file(path)?)?),
        _ => Err(Error::BadParams {
            name: "source".into(),
            reason: "give exactly one of --catalog NAME or --file PATH".into(),
        }),
    }
}

fn need_logic(e: &CatalogEntry) -> Result<&LogicStructure> {
    e.structure.logic().ok_or_else(|| Error::BadParams {
        name: e.name.clone(),
        reason: "this command needs a negation".into(),
    })
}

fn catalog_cmd(action: &CatalogAction) -> Result<Out> {
    match action {
        CatalogAction::List => {
            let names = catalog::default_names();
            let mut text = String::new();
            let mut rows = Vec::new();
            for n in &names {
                let e = catalog::lookup(n)?;
                let label = e.class().map(|c| c.label.to_string()).unwrap_or_else(|| "lattice".into());
                let _ = writeln!(text, "{:<16} {:>4}  {}", e.name, e.structure.lattice().len(), label);
                rows.push(json!({ "name": e.name, "size": e.structure.lattice().len(), "label": label }));
            }
            Ok(Out::ok(text, Value::Array(rows)))
        }
        CatalogAction::Show { name } => {
            let e = catalog::lookup(name)?;
            let doc = e.to_doc();
            let class = e.class();
            let mut text = format!("{}\nelements: {}\n", e.name, doc.elements.join(" "));
            let covers: Vec<String> = doc.covers.iter().map(|(a, b)| format!("{a}<{b}")).collect();
            let _ = writeln!(text, "covers:   {}", covers.join(" "));
            if let Some(neg) = &doc.negation {
                let pairs: Vec<String> = doc.elements.iter().zip(neg).map(|(a, b)| format!("{a}->{b}")).collect();
                let _ = writeln!(text, "negation: {}", pairs.join(" "));
            }
            if let Some(c) = &class {
                let _ = writeln!(text, "label:    {}", c.label);
            }
            for t in &e.tables {
                text.push_str(&grid(&t.name, &t.carrier, &t.rows));
            }
            let js = json!({ "name": e.name, "lattice": doc, "class": class, "tables": e.tables });
            Ok(Out::ok(text, js))
        }
        CatalogAction::Export { name } => {
            let doc = catalog::lookup(name)?.to_doc();
            let text = format!("{}\n", doc.to_json());
            Ok(Out::ok(text, serde_json::to_value(&doc).expect("doc serializes")))
        }
    }
}

/// Aligned operation table with the operation name in the corner.
fn grid(op: &str, carrier: &[String], rows: &[Vec<String>]) -> String {
    let w = carrier
        .iter()
        .chain(rows.iter().flatten())
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(1)
        .max(op.chars().count());
    let mut out = format!("{op:>w$} |");
    for c in carrier {
        let _ = write!(out, " {c:>w$}");
    }
    out.push('\n');
    let _ = writeln!(out, "{}", "-".repeat(w + 2 + (w + 1) * carrier.len()));
    for (c, row) in carrier.iter().zip(rows) {
        let _ = write!(out, "{c:>w$} |");
        for v in row {
            let _ = write!(out, " {v:>w$}");
        }
        out.push('\n');
    }
    out.push('\n');
    out
}

fn sublattice_verdicts(l: &FiniteLattice, budget: u64) -> Result<PropertyReport> {
    let mut r = PropertyReport::new();
    for p in [Pattern::M5, Pattern::N5, Pattern::O6] {
        let name = format!("{}-free", p.to_string().to_lowercase());
        r.push(match find_forbidden_sublattice(l, p, budget)? {
            None => Verdict::pass(&name),
            Some(found) => Verdict::fail(
                &name,
                Witness {
                    elements: found.iter().map(|&i| l.name(i).to_string()).collect(),
                    identity: format!("sublattice isomorphic to {p}"),
                    lhs: String::new(),
                    rhs: String::new(),
                },
            ),
        });
    }
    Ok(r)
}

fn full_report(e: &CatalogEntry, budget: u64) -> Result<PropertyReport> {
    let mut r = property_scan(e.structure.lattice());
    if let Some(s) = e.structure.logic() {
        r.extend(negation_axiom_report(s));
        r.extend(law_report(s));
    }
    r.extend(sublattice_verdicts(e.structure.lattice(), budget)?);
    Ok(r)
}

fn check_cmd(e: &CatalogEntry, properties: &[String], assert: bool, budget: u64) -> Result<Out> {
    let all = full_report(e, budget)?;
    let report = if properties.is_empty() {
        all
    } else {
        let mut r = PropertyReport::new();
        for p in properties {
            let v = all.get(p).ok_or_else(|| Error::BadParams {
                name: p.clone(),
                reason: format!("unknown property; known: {}", all.iter().map(|v| v.property.as_str()).collect::<Vec<_>>().join(", ")),
            })?;
            r.push(v.clone());
        }
        r
    };
    let code = if assert && !report.all_hold() { 1 } else { 0 };
    let js = serde_json::to_value(&report).expect("report serializes");
    Ok(Out {
        code,
        text: format!("{}\n{report}", e.name),
        json: js,
    })
}

fn classify_cmd(e: &CatalogEntry) -> Result<Out> {
    let c = classify(need_logic(e)?);
    let mut text = format!("{}: {}\n", e.name, c.label);
    let flags = serde_json::to_value(c.flags).expect("flags serialize");
    if let Value::Object(m) = &flags {
        for (k, v) in m {
            let _ = writeln!(text, "  {k:<18} {v}");
        }
    }
    Ok(Out::ok(text, serde_json::to_value(&c).expect("class serializes")))
}

fn residuum_cmd(e: &CatalogEntry, assert: bool) -> Result<Out> {
    let l = e.structure.lattice();
    let (report, table) = implicative_report(l);
    let mut text = format!("{}\n{report}\n", e.name);
    let rows = table.as_ref().map(|t| t.label_rows());
    if let Some(rows) = &rows {
        text.push_str(&grid("->", l.names(), rows));
    }
    let code = if assert && !report.all_hold() { 1 } else { 0 };
    Ok(Out {
        code,
        text,
        json: json!({ "name": e.name, "report": report, "carrier": l.names(), "implication": rows }),
    })
}

fn tnorm_cmd(kind: &str, n: usize, at: Option<&[String]>) -> Result<Out> {
    let kind: TNormKind = kind.parse()?;
    if let Some(at) = at {
        let x: Rational = at[0].parse()?;
        let y: Rational = at[1].parse()?;
        let f = tnorm_eval(kind, x, y)?;
        let r = tnorm_residuum(kind, x, y)?;
        let text = format!("{kind}: {x} * {y} = {f}, {x} -> {y} = {r}\n");
        let js = json!({ "kind": kind.to_string(), "x": x, "y": y, "fusion": f, "residuum": r });
        return Ok(Out::ok(text, js));
    }
    let t = build_tnorm_logic(kind, n)?;
    let m = t.values.len();
    let s = &t.structure;
    let p = |i: usize| t.values[i].to_string();
    let fusion: Vec<Vec<String>> = (0..m).map(|a| (0..m).map(|b| p(t.fuse(a, b))).collect()).collect();
    let imp: Vec<Vec<String>> = (0..m).map(|a| (0..m).map(|b| p(t.residuum.get(a, b))).collect()).collect();
    let neg: Vec<String> = (0..m).map(|a| p(s.neg(a))).collect();
    let values: Vec<String> = (0..m).map(p).collect();
    let mut text = format!("{kind} on {} values\n\n", m);
    text.push_str(&grid("*", &values, &fusion));
    text.push_str(&grid("->", &values, &imp));
    let _ = writeln!(text, "negation");
    for (v, nv) in values.iter().zip(&neg) {
        let _ = writeln!(text, "  {v} -> {nv}");
    }
    let js = json!({ "kind": kind.to_string(), "values": values, "fusion": fusion, "implication": imp, "negation": neg });
    Ok(Out::ok(text, js))
}

fn semantics_for(e: &CatalogEntry, s: &LogicStructure, arg: Option<SemanticsArg>) -> Result<ImplicationSemantics> {
    match arg {
        None => ImplicationSemantics::default_for(s),
        Some(SemanticsArg::Ortho) => Ok(ImplicationSemantics::Ortho),
        Some(SemanticsArg::Residuated) => ImplicationSemantics::residuated(s),
        Some(SemanticsArg::Table) => {
            let t = e
                .table("implication")
                .ok_or_else(|| Error::SemanticsUnavailable(format!("{} has no implication table", e.name)))?;
            let n = t.carrier.len();
            let pos = |label: &str| s.lattice().index_of(label).ok_or_else(|| Error::UnknownLabel(label.into()));
            let mut flat = vec![0; n * n];
            for (a, ra) in t.carrier.iter().enumerate() {
                for (b, rb) in t.carrier.iter().enumerate() {
                    flat[pos(ra)? * n + pos(rb)?] = pos(t.get(a, b))?;
                }
            }
            ImplicationSemantics::table(s, flat)
        }
    }
}

fn eval_cmd(
    src: &Source,
    text: &str,
    rhs: Option<&str>,
    set: &[String],
    sem: Option<SemanticsArg>,
    assert: bool,
) -> Result<Out> {
    let f = formula::parse(text)?;
    if src.catalog.is_none() && src.file.is_none() {
        if rhs.is_some() || !set.is_empty() {
            return Err(Error::BadParams {
                name: "eval".into(),
                reason: "--rhs and --set need --catalog or --file".into(),
            });
        }
        let cex = boolean_counterexample(&f);
        let holds = cex.is_none();
        let mut out = format!("{f}: {}\n", if holds { "tautology" } else { "not a tautology" });
        if let Some(c) = &cex {
            let asg: Vec<String> = c.iter().map(|(v, b)| format!("{v}={}", *b as u8)).collect();
            let _ = writeln!(out, "  false at {}", asg.join(", "));
        }
        let cex_js = cex.map(|c| c.into_iter().collect::<BTreeMap<_, _>>());
        return Ok(Out {
            code: if assert && !holds { 1 } else { 0 },
            text: out,
            json: json!({ "formula": f.to_string(), "tautology": holds, "counterexample": cex_js }),
        });
    }
    let e = load(src)?;
    let s = need_logic(&e)?;
    let sem = semantics_for(&e, s, sem)?;
    if !set.is_empty() {
        let mut env = Env::new();
        for a in set {
            let (v, label) = a.split_once('=').ok_or_else(|| Error::BadParams {
                name: a.clone(),
                reason: "expected VAR=LABEL".into(),
            })?;
            let i = s.lattice().index_of(label.trim()).ok_or_else(|| Error::UnknownLabel(label.trim().into()))?;
            env.insert(v.trim().to_string(), i);
        }
        let v = formula::eval(&f, s, &sem, &env)?;
        let text = format!("{f} = {}\n", s.name(v));
        return Ok(Out::ok(text, json!({ "formula": f.to_string(), "semantics": sem.name(), "value": s.name(v) })));
    }
    let rhs = match rhs {
        Some(r) => formula::parse(r)?,
        None => Formula::Const(true),
    };
    let v = holds_identity(s, &sem, &f, &rhs)?;
    let code = if assert && !v.holds { 1 } else { 0 };
    Ok(Out {
        code,
        text: format!("{} [{}]\n{v}\n", e.name, sem.name()),
        json: serde_json::to_value(&v).expect("verdict serializes"),
    })
}

fn decompose_cmd(e: &CatalogEntry, x: &str, y: &str) -> Result<Out> {
    let s = need_logic(e)?;
    let idx = |l: &str| s.lattice().index_of(l).ok_or_else(|| Error::UnknownLabel(l.into()));
    let (xi, yi) = (idx(x)?, idx(y)?);
    match compatible_decomposition(s, xi, yi)? {
        None => Ok(Out::ok(
            format!("{x} and {y} are not compatible\n"),
            json!({ "x": x, "y": y, "compatible": false }),
        )),
        Some((u, v, w)) => {
            let (u, v, w) = (s.name(u), s.name(v), s.name(w));
            Ok(Out::ok(
                format!("{x} and {y} are compatible\n  u = {x}∧{y}' = {u}\n  v = {x}∧{y} = {v}\n  w = {x}'∧{y} = {w}\n"),
                json!({ "x": x, "y": y, "compatible": true, "u": u, "v": v, "w": w }),
            ))
        }
    }
}

fn macneille_cmd(src: &Source, fixture: Option<&str>, effects: Option<&str>) -> Result<Out> {
    let p = match (fixture, effects) {
        (Some("effects-abcd"), _) => InvolutedPoset::from_effects(&effects_fixture())?,
        (Some(other), _) => return Err(Error::UnknownName(other.into())),
        (None, Some(path)) => {
            let m: BTreeMap<String, Effect2> =
                serde_json::from_str(&read_file(path)?).map_err(|e| Error::Json(e.to_string()))?;
            InvolutedPoset::from_effects(&m.into_iter().collect::<Vec<_>>())?
        }
        (None, None) => InvolutedPoset::from_structure(need_logic(&load(src)?)?)?,
    };
    let s = macneille_completion(&p)?;
    let doc = LatticeDoc::from_lattice(s.lattice(), Some(&s.negation().table));
    let axioms = negation_axiom_report(&s);
    let class = classify(&s);
    let mut text = format!("{} elements, {} cuts\n{}\n", p.poset().len(), s.len(), doc.to_json());
    let _ = write!(text, "\n{axioms}\nlabel: {}\n", class.label);
    Ok(Out::ok(text, json!({ "lattice": doc, "negation_axioms": axioms, "class": class })))
}

/// DOT digraph of the cover relation, drawn bottom to top and grouped by
/// rank. With a negation each node is annotated `x / x′`.
pub fn render_dot(l: &FiniteLattice, neg: Option<&NegationMap>) -> String {
    let q = |s: &str| format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""));
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box, style=rounded];\n");
    for i in 0..l.len() {
        let label = match neg {
            Some(n) => format!("{} / {}", l.name(i), l.name(n.table[i])),
            None => l.name(i).to_string(),
        };
        let _ = writeln!(out, "  {} [label={}];", q(l.name(i)), q(&label));
    }
    let ranks = l.poset().ranks();
    let top = ranks.iter().copied().max().unwrap_or(0);
    for r in 0..=top {
        let members: Vec<String> = (0..l.len()).filter(|&i| ranks[i] == r).map(|i| q(l.name(i))).collect();
        let _ = writeln!(out, "  {{ rank=same; {}; }}", members.join("; "));
    }
    for (a, b) in l.covers() {
        let _ = writeln!(out, "  {} -> {};", q(l.name(a)), q(l.name(b)));
    }
    out.push_str("}\n");
    out
}

fn render_cmd(e: &CatalogEntry, dot: bool) -> Result<Out> {
    let l = e.structure.lattice();
    let neg = e.structure.logic().map(|s| s.negation());
    let d = render_dot(l, neg);
    let text = if dot {
        d.clone()
    } else {
        let ranks = l.poset().ranks();
        let top = ranks.iter().copied().max().unwrap_or(0);
        let mut t = String::new();
        for r in (0..=top).rev() {
            let row: Vec<&str> = (0..l.len()).filter(|&i| ranks[i] == r).map(|i| l.name(i)).collect();
            let _ = writeln!(t, "{r:>3}: {}", row.join("  "));
        }
        t
    };
    Ok(Out::ok(text, json!({ "name": e.name, "dot": d })))
}

/// Metaproperty violations over `per` random negations of each kind for
/// every catalog lattice; returns (tables checked, violations found).
pub fn metaproperty_sweep(per: usize, seed: u64) -> Result<(usize, Vec<String>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    let mut bad = Vec::new();
    for name in catalog::default_names() {
        let e = catalog::lookup(&name)?;
        let l = e.structure.lattice();
        for k in 0..per {
            let kind = RandomNegation::ALL[k % RandomNegation::ALL.len()];
            let s = LogicStructure::new(l.clone(), random_negation(l, kind, &mut rng))?;
            let o = check_metaproperties(&s);
            checked += 1;
            for (m, &v) in Metaproperty::ALL.iter().zip(&o.violated) {
                if v {
                    bad.push(format!("{name}: {} violated by {:?}", m.name(), s.negation().table));
                }
            }
        }
    }
    Ok((checked, bad))
}

fn selftest_cmd(sweep: usize, seed: u64) -> Result<Out> {
    let rows = catalog::selftest();
    let mut text = String::new();
    for r in &rows {
        let label = r.label.map(|l| l.to_string()).unwrap_or_else(|| "lattice".into());
        let _ = writeln!(text, "{} {:<16} {}", if r.pass { "pass" } else { "FAIL" }, r.name, label);
        for d in &r.diagnostics {
            let _ = writeln!(text, "       {d}");
        }
    }
    let mut ok = rows.iter().all(|r| r.pass);
    let mut sweep_js = Value::Null;
    if sweep > 0 {
        let (checked, bad) = metaproperty_sweep(sweep, seed)?;
        let _ = writeln!(text, "metaproperty sweep: {checked} negations, {} violations", bad.len());
        for b in &bad {
            let _ = writeln!(text, "       {b}");
        }
        ok &= bad.is_empty();
        sweep_js = json!({ "seed": seed, "checked": checked, "violations": bad });
    }
    Ok(Out {
        code: if ok { 0 } else { 1 },
        text,
        json: json!({ "entries": rows, "sweep": sweep_js, "pass": ok }),
    })
}
