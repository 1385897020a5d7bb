//! Named finite structures with their negations and the classification
//! each one is known to have.
//!
//! Names follow `NAME` or `NAME(k)`, case-insensitive. Parameterised names
//! fall back to a default `k` when it is omitted.

use crate::error::{Error, Result};
use crate::fuzzy::temperature_logic;
use crate::logic::{classify, law_report, negation_axiom_report, LogicClass, LogicLabel, LogicStructure};
use crate::order::{find_forbidden_sublattice, horizontal_sum, property_scan, FiniteLattice, LatticeDoc, Pattern, DEFAULT_SEARCH_BUDGET};
use crate::quantum::gf2_subspace_lattice;
use crate::rational::Rational;
use crate::report::Witness;
use crate::residuation::{build_tnorm_logic, TNormKind, TNormLogic};
use serde::Serialize;

/// A lattice alone, or a lattice with a negation.
#[derive(Debug, Clone)]
pub enum Structure {
    Lattice(FiniteLattice),
    Logic(LogicStructure),
}

impl Structure {
    pub fn lattice(&self) -> &FiniteLattice {
        match self {
            Structure::Lattice(l) => l,
            Structure::Logic(s) => s.lattice(),
        }
    }

    pub fn logic(&self) -> Option<&LogicStructure> {
        match self {
            Structure::Lattice(_) => None,
            Structure::Logic(s) => Some(s),
        }
    }

    pub fn negation(&self) -> Option<&[usize]> {
        self.logic().map(|s| s.negation().table.as_slice())
    }
}

/// A binary operation given as a table of labels over `carrier`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpTable {
    pub name: String,
    pub carrier: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl OpTable {
    fn from_fn(name: &str, carrier: &[String], f: impl Fn(usize, usize) -> usize) -> Self {
        let n = carrier.len();
        OpTable {
            name: name.into(),
            carrier: carrier.to_vec(),
            rows: (0..n)
                .map(|a| (0..n).map(|b| carrier[f(a, b)].clone()).collect())
                .collect(),
        }
    }

    fn from_rows<const N: usize>(name: &str, carrier: [&str; N], rows: [[&str; N]; N]) -> Self {
        OpTable {
            name: name.into(),
            carrier: carrier.iter().map(|s| s.to_string()).collect(),
            rows: rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect(),
        }
    }

    pub fn get(&self, a: usize, b: usize) -> &str {
        &self.rows[a][b]
    }

    fn index(&self, label: &str) -> usize {
        self.carrier.iter().position(|c| c == label).expect("table entry on the carrier")
    }

    /// Entry as an index into the carrier.
    pub fn at(&self, a: usize, b: usize) -> usize {
        self.index(&self.rows[a][b])
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    /// Canonical name, `LUK(2)` style for parameterised entries.
    pub name: String,
    pub param: Option<usize>,
    pub structure: Structure,
    /// Flag names (see [`crate::logic::LogicFlags::NAMES`]) or law names with the value
    /// the structure is known to have.
    pub expected: Vec<(&'static str, bool)>,
    pub expected_label: Option<LogicLabel>,
    pub tables: Vec<OpTable>,
}

impl CatalogEntry {
    fn logic(name: String, param: Option<usize>, s: LogicStructure) -> Self {
        CatalogEntry {
            name,
            param,
            structure: Structure::Logic(s),
            expected: vec![("fuzzy_negation", true)],
            expected_label: None,
            tables: Vec::new(),
        }
    }

    fn lattice(name: &str, l: FiniteLattice) -> Self {
        CatalogEntry {
            name: name.into(),
            param: None,
            structure: Structure::Lattice(l),
            expected: Vec::new(),
            expected_label: None,
            tables: Vec::new(),
        }
    }

    fn expect(mut self, flags: &[(&'static str, bool)]) -> Self {
        self.expected.extend_from_slice(flags);
        self
    }

    fn label(mut self, label: LogicLabel) -> Self {
        self.expected_label = Some(label);
        self
    }

    pub fn class(&self) -> Option<LogicClass> {
        self.structure.logic().map(classify)
    }

    pub fn table(&self, name: &str) -> Option<&OpTable> {
        self.tables.iter().find(|t| t.name == name)
    }

    /// An entry read from the lattice file format; expects nothing.
    pub fn from_doc(name: &str, doc: &LatticeDoc) -> Result<Self> {
        let (l, neg) = doc.build()?;
        let structure = match neg {
            Some(t) => Structure::Logic(LogicStructure::new(l, t)?),
            None => Structure::Lattice(l),
        };
        Ok(CatalogEntry {
            name: name.into(),
            param: None,
            structure,
            expected: Vec::new(),
            expected_label: None,
            tables: Vec::new(),
        })
    }

    pub fn to_doc(&self) -> LatticeDoc {
        LatticeDoc::from_lattice(self.structure.lattice(), self.structure.negation())
    }

    /// Value of a flag or law on this entry, with the witness when it fails.
    pub fn observe(&self, key: &str) -> Option<(bool, Option<Witness>)> {
        let lat = property_scan(self.structure.lattice());
        let from_lattice = |name: &str| lat.get(name).map(|v| (v.holds, v.witness.clone()));
        let Some(s) = self.structure.logic() else {
            return from_lattice(key);
        };
        let laws = law_report(s);
        let from_laws = |name: &str| laws.get(name).map(|v| (v.holds, v.witness.clone()));
        let law_name = match key {
            "non_contradictory" => "non-contradiction",
            "paraconsistent" => "paraconsistency",
            "tertium" => "tertium-non-datur",
            "conj_de_morgan" => "conjunctive-de-morgan",
            "orthomodular" | "involutive" => key,
            "fuzzy_negation" => {
                let ax = negation_axiom_report(s);
                let bad = ax.iter().find(|v| !v.holds).and_then(|v| v.witness.clone());
                return Some((ax.all_hold(), bad));
            }
            "distributive" => return from_lattice("distributive"),
            "boolean" | "intuitionistic" => return classify(s).flags.get(key).map(|b| (b, None)),
            other => return from_laws(other).or_else(|| from_lattice(other)),
        };
        from_laws(law_name)
    }
}

const DEFAULTS: [(&str, usize); 8] = [
    ("CUBE", 2),
    ("MO", 2),
    ("LUK", 2),
    ("GOEDEL", 2),
    ("RM", 3),
    ("LSTAR_GRID", 2),
    ("GF2", 2),
    ("", 0),
];

pub const NAMES: [&str; 20] = [
    "M5", "N5", "O6", "O6X", "L7", "F2", "CUBE", "MO", "BN4", "MO1", "LUK", "GOEDEL", "RM", "G6", "G8", "G14",
    "LSTAR_GRID", "REGISTER2", "GF2", "TEMPERATURE",
];

/// Splits `NAME` or `NAME(k)` into an upper-cased name and the parameter.
pub fn parse_name(text: &str) -> Result<(String, Option<usize>)> {
    let t = text.trim();
    let (name, param) = match t.split_once('(') {
        None => (t, None),
        Some((name, rest)) => {
            let inner = rest.strip_suffix(')').ok_or_else(|| Error::UnknownName(text.into()))?;
            let k: usize = inner.trim().parse().map_err(|_| Error::BadParams {
                name: name.to_uppercase(),
                reason: format!("'{inner}' is not a non-negative integer"),
            })?;
            (name.trim(), Some(k))
        }
    };
    let name = name.to_uppercase();
    if !NAMES.contains(&name.as_str()) {
        return Err(Error::UnknownName(text.into()));
    }
    Ok((name, param))
}

/// Builds an entry from a name such as `"mo(3)"`.
pub fn lookup(text: &str) -> Result<CatalogEntry> {
    let (name, param) = parse_name(text)?;
    build(&name, param)
}

fn range(name: &str, k: usize, lo: usize, hi: usize) -> Result<usize> {
    if k < lo || k > hi {
        return Err(Error::BadParams {
            name: name.into(),
            reason: format!("parameter {k} outside {lo}..={hi}"),
        });
    }
    Ok(k)
}

pub fn build(name: &str, param: Option<usize>) -> Result<CatalogEntry> {
    let name = name.to_uppercase();
    let default = DEFAULTS.iter().find(|(n, _)| *n == name).map(|&(_, k)| k);
    let k = match (param, default) {
        (Some(_), None) => {
            return Err(Error::BadParams {
                name,
                reason: "takes no parameter".into(),
            })
        }
        (Some(k), Some(_)) => k,
        (None, Some(k)) => k,
        (None, None) => 0,
    };
    let pname = format!("{name}({k})");
    use LogicLabel::*;
    let entry = match name.as_str() {
        "M5" => CatalogEntry::logic(name, None, LogicStructure::from_labels(m5(), &["1", "c", "0", "a", "0"])?)
            .expect(&[("non_contradictory", true), ("conj_de_morgan", false), ("involutive", false)])
            .label(Logic),
        "N5" => CatalogEntry::lattice("N5", n5()).expect(&[("distributive", false), ("modular", false)]),
        "O6" | "O6X" => CatalogEntry::logic(name, None, o6()?)
            .expect(&[
                ("non_contradictory", true),
                ("complemented", true),
                ("orthomodular", false),
                ("paraconsistent", false),
            ])
            .label(Logic),
        "L7" => CatalogEntry::lattice("L7", l7()).expect(&[("distributive", false), ("modular", false)]),
        "F2" => CatalogEntry::lattice("F2", f2()).expect(&[("distributive", true)]),
        "CUBE" => {
            let k = range(&name, k, 1, 6)?;
            CatalogEntry::logic(pname, Some(k), cube_logic(k as u32)).expect(&[("boolean", true)]).label(Boolean)
        }
        "MO" => {
            let k = range(&name, k, 1, 32)?;
            let e = CatalogEntry::logic(pname, Some(k), mo(k)?).expect(&[
                ("non_contradictory", true),
                ("orthomodular", true),
                ("distributive", k == 1),
            ]);
            e.label(if k == 1 { Boolean } else { Quantum })
        }
        "BN4" => {
            let s = LogicStructure::from_pairs(f2_belnap(), &[("t", "f"), ("b", "b"), ("n", "n")])?;
            let mut e = CatalogEntry::logic(name, None, s).expect(&[
                ("non_contradictory", false),
                ("tertium", false),
                ("involutive", true),
            ]);
            e.tables = vec![
                OpTable::from_rows("fusion", BN4_CARRIER, BN4_FUSION),
                OpTable::from_rows("implication", BN4_CARRIER, BN4_IMPLICATION),
            ];
            e
        }
        "MO1" => {
            let s = LogicStructure::from_pairs(f2_belnap(), &[("t", "f"), ("b", "n")])?;
            CatalogEntry::logic(name, None, s).expect(&[("boolean", true)]).label(Boolean)
        }
        "LUK" => {
            let k = range(&name, k, 1, 64)?;
            let t = build_tnorm_logic(TNormKind::Lukasiewicz, k)?;
            let e = tnorm_entry(pname, k, t).expect(&[
                ("involutive", true),
                ("distributive", true),
                ("non_contradictory", k == 1),
            ]);
            if k == 1 {
                e.label(Boolean)
            } else {
                e
            }
        }
        "GOEDEL" => {
            let k = range(&name, k, 1, 64)?;
            let t = build_tnorm_logic(TNormKind::Goedel, k)?;
            let e = tnorm_entry(pname, k, t).expect(&[("non_contradictory", true), ("distributive", true)]);
            e.label(if k == 1 { Boolean } else { Intuitionistic })
        }
        "RM" => {
            if k % 2 == 0 {
                return Err(Error::BadParams {
                    name,
                    reason: format!("{k} is even; RM takes 2n+1"),
                });
            }
            let k = range(&name, k, 3, 65)?;
            rm(k)?.expect(&[("involutive", true), ("tertium", false), ("conj_de_morgan", true)])
        }
        "G6" | "G8" | "G14" => {
            let s = match name.as_str() {
                "G6" => g6()?,
                "G8" => g8()?,
                _ => g14()?,
            };
            CatalogEntry::logic(name, None, s).expect(&[
                ("involutive", true),
                ("paraconsistent", true),
                ("orthomodular", false),
            ])
        }
        "LSTAR_GRID" => {
            let k = range(&name, k, 1, 12)?;
            CatalogEntry::logic(pname, Some(k), lstar_grid(k)?).expect(&[
                ("distributive", true),
                ("involutive", true),
                ("conj_de_morgan", true),
                ("disjunctive-de-morgan", true),
                ("non_contradictory", false),
                ("tertium", false),
            ])
        }
        "REGISTER2" => CatalogEntry::logic(name, None, register2()?).expect(&[("boolean", true)]).label(Boolean),
        "GF2" => {
            let s = gf2_subspace_lattice(k)?;
            let e = CatalogEntry::logic(pname, Some(k), s).expect(&[
                ("involutive", true),
                ("modular", true),
                ("non_contradictory", k == 1),
                ("distributive", k == 1),
            ]);
            if k == 1 {
                e.label(Boolean)
            } else {
                e
            }
        }
        "TEMPERATURE" => CatalogEntry::logic(name, None, temperature_logic()?.structure).expect(&[
            ("distributive", true),
            ("involutive", true),
            ("non_contradictory", false),
            ("orthomodular", false),
        ]),
        _ => return Err(Error::UnknownName(name)),
    };
    Ok(entry)
}

/// The entries checked by [`selftest`], in report order.
pub fn default_names() -> Vec<String> {
    let mut out: Vec<String> = ["M5", "N5", "O6", "O6X", "L7", "F2"].iter().map(|s| s.to_string()).collect();
    out.extend((1..=4).map(|k| format!("CUBE({k})")));
    out.extend((1..=5).map(|k| format!("MO({k})")));
    out.extend(["BN4", "MO1"].iter().map(|s| s.to_string()));
    out.extend((1..=4).map(|k| format!("LUK({k})")));
    out.extend((1..=6).map(|k| format!("GOEDEL({k})")));
    out.extend(["RM(3)", "RM(5)", "G6", "G8", "G14"].iter().map(|s| s.to_string()));
    out.extend((1..=3).map(|k| format!("LSTAR_GRID({k})")));
    out.push("REGISTER2".into());
    out.extend((1..=3).map(|k| format!("GF2({k})")));
    out.push("TEMPERATURE".into());
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct SelftestRow {
    pub name: String,
    pub pass: bool,
    pub label: Option<LogicLabel>,
    pub diagnostics: Vec<String>,
}

pub fn selftest() -> Vec<SelftestRow> {
    default_names().iter().map(|n| selftest_one(n)).collect()
}

pub fn selftest_one(name: &str) -> SelftestRow {
    let entry = match lookup(name) {
        Ok(e) => e,
        Err(e) => {
            return SelftestRow {
                name: name.into(),
                pass: false,
                label: None,
                diagnostics: vec![format!("build failed: {e}")],
            }
        }
    };
    let mut diag = Vec::new();
    for &(key, want) in &entry.expected {
        match entry.observe(key) {
            None => diag.push(format!("{key}: unknown property")),
            Some((got, w)) if got != want => {
                let w = w.map(|w| format!(" at {w}")).unwrap_or_default();
                diag.push(format!("{key}: expected {want}, got {got}{w}"));
            }
            _ => {}
        }
    }
    let class = entry.class();
    if let (Some(want), Some(c)) = (entry.expected_label, &class) {
        if c.label != want {
            diag.push(format!("label: expected '{want}', got '{}'", c.label));
        }
    }
    diag.extend(specific_checks(&entry));
    SelftestRow {
        name: entry.name,
        pass: diag.is_empty(),
        label: class.map(|c| c.label),
        diagnostics: diag,
    }
}

fn check(out: &mut Vec<String>, ok: bool, what: impl FnOnce() -> String) {
    if !ok {
        out.push(what());
    }
}

fn table_eq(out: &mut Vec<String>, entry: &CatalogEntry, name: &str, want: &OpTable) {
    match entry.table(name) {
        None => out.push(format!("{name}: table missing")),
        Some(t) => check(out, t.rows == want.rows && t.carrier == want.carrier, || {
            format!("{name}: {:?} differs from {:?}", t.rows, want.rows)
        }),
    }
}

fn witness_is(out: &mut Vec<String>, entry: &CatalogEntry, key: &str, labels: &[&str]) {
    let got = entry.observe(key).and_then(|(_, w)| w).map(|w| w.elements);
    check(out, got.as_deref() == Some(&labels.iter().map(|s| s.to_string()).collect::<Vec<_>>()[..]), || {
        format!("{key}: witness {got:?}, expected {labels:?}")
    });
}

/// Statements about single entries beyond their flags.
fn specific_checks(entry: &CatalogEntry) -> Vec<String> {
    let mut out = Vec::new();
    let base = entry.name.split('(').next().unwrap_or("").to_string();
    let Some(s) = entry.structure.logic() else {
        return out;
    };
    let l = s.lattice();
    let el = |x: &str| s.el(x);
    match base.as_str() {
        "M5" => {
            witness_is(&mut out, entry, "conjunctive-de-morgan", &["a", "b"]);
            let (a, b) = (el("a"), el("b"));
            check(&mut out, s.neg(l.meet(a, b)) == l.top() && l.join(s.neg(a), s.neg(b)) == el("c"), || {
                "(a∧b)′ = 1 and a′∨b′ = c expected".into()
            });
        }
        "O6" => witness_is(&mut out, entry, "orthomodular", &["x", "y"]),
        "O6X" => witness_is(&mut out, entry, "paraconsistency", &["x", "y"]),
        "G8" => {
            let (x, y) = (el("x"), el("y"));
            check(&mut out, l.lt(x, y) && l.join(x, l.meet(s.neg(x), y)) == x, || {
                "x∨(x′∧y) = x with x < y expected".into()
            });
        }
        "BN4" => {
            let b = el("b");
            check(&mut out, l.meet(b, s.neg(b)) == b && l.join(b, s.neg(b)) == b, || {
                "b∧b˜ = b and b∨b˜ = b expected".into()
            });
            out.extend(bn4_table_checks(entry));
        }
        "LUK" | "GOEDEL" => {
            let kind = if base == "LUK" { TNormKind::Lukasiewicz } else { TNormKind::Goedel };
            let fusion = entry.table("fusion").expect("t-norm entries carry fusion");
            if kind == TNormKind::Goedel {
                let all = (0..l.len()).all(|a| (0..l.len()).all(|b| fusion.at(a, b) == l.meet(a, b)));
                check(&mut out, all, || "Gödel fusion differs from meet".into());
            }
            if entry.param == Some(2) {
                let (fusion_rows, imp_rows) = if kind == TNormKind::Lukasiewicz {
                    (LUK3_FUSION, LUK3_IMPLICATION)
                } else {
                    (GOEDEL3_FUSION, GOEDEL3_IMPLICATION)
                };
                table_eq(&mut out, entry, "fusion", &OpTable::from_rows("fusion", CHAIN3, fusion_rows));
                table_eq(&mut out, entry, "implication", &OpTable::from_rows("implication", CHAIN3, imp_rows));
                let neg: Vec<&str> = (0..3).map(|x| s.name(s.neg(x))).collect();
                let want = if kind == TNormKind::Lukasiewicz { ["1", "1/2", "0"] } else { ["1", "0", "0"] };
                check(&mut out, neg == want, || format!("negation {neg:?}, expected {want:?}"));
            }
        }
        "RM" => {
            let fusion = entry.table("fusion").expect("RM carries fusion");
            let zero = el("0");
            let n = l.len();
            let mut ok = true;
            for a in 0..n {
                ok &= fusion.at(a, zero) == a && fusion.at(a, a) == a;
                for b in 0..n {
                    ok &= fusion.at(a, b) == fusion.at(b, a);
                    for c in 0..n {
                        ok &= fusion.at(fusion.at(a, b), c) == fusion.at(a, fusion.at(b, c));
                    }
                }
            }
            check(&mut out, ok, || "fusion is not a commutative idempotent monoid with unit 0".into());
            if entry.param == Some(3) {
                table_eq(&mut out, entry, "fusion", &OpTable::from_rows("fusion", RM3_CARRIER, RM3_FUSION));
                table_eq(&mut out, entry, "implication", &OpTable::from_rows("implication", RM3_CARRIER, RM3_IMPLICATION));
            }
        }
        "TEMPERATURE" => {
            check(&mut out, s.len() == 18, || format!("{} elements, expected 18", s.len()));
            let (a, b, c) = (el("a"), el("b"), el("c"));
            let bump = |x: usize| l.meet(x, s.neg(x));
            check(&mut out, bump(b) == l.join(bump(a), bump(c)), || "b∧b′ ≠ (a∧a′)∨(c∧c′)".into());
            match find_forbidden_sublattice(l, Pattern::O6, DEFAULT_SEARCH_BUDGET) {
                Ok(None) => {}
                Ok(Some(found)) => out.push(format!("unexpected O6 sublattice at {found:?}")),
                Err(e) => out.push(e.to_string()),
            }
        }
        _ => {}
    }
    out
}

/// The stored fusion is commutative and associative with unit `b`, and the
/// stored implication is its residuum.
fn bn4_table_checks(entry: &CatalogEntry) -> Vec<String> {
    let mut out = Vec::new();
    let (Some(fu), Some(im)) = (entry.table("fusion"), entry.table("implication")) else {
        return vec!["BN4 tables missing".into()];
    };
    let l = entry.structure.lattice();
    let pos = |t: &OpTable, i: usize| l.el(&t.carrier[i]);
    let idx = |x: usize| fu.index(l.name(x));
    let f = |x: usize, y: usize| pos(fu, fu.at(idx(x), idx(y)));
    let imp = |x: usize, y: usize| pos(im, im.at(idx(x), idx(y)));
    let n = l.len();
    let b = l.el("b");
    for x in 0..n {
        check(&mut out, f(b, x) == x, || format!("b is not a unit at {}", l.name(x)));
        for y in 0..n {
            check(&mut out, f(x, y) == f(y, x), || format!("fusion not commutative at {},{}", l.name(x), l.name(y)));
            for z in 0..n {
                check(&mut out, f(f(x, y), z) == f(x, f(y, z)), || "fusion not associative".into());
                check(&mut out, l.leq(f(x, z), y) == l.leq(z, imp(x, y)), || {
                    format!("residuation fails at {},{},{}", l.name(x), l.name(y), l.name(z))
                });
            }
        }
    }
    out.dedup();
    out
}

fn tnorm_entry(name: String, k: usize, t: TNormLogic) -> CatalogEntry {
    let carrier = t.structure.lattice().names().to_vec();
    let fusion = OpTable::from_fn("fusion", &carrier, |a, b| t.fuse(a, b));
    let implication = OpTable::from_fn("implication", &carrier, |a, b| t.residuum.get(a, b));
    let mut e = CatalogEntry::logic(name, Some(k), t.structure);
    e.tables = vec![fusion, implication];
    e
}

const CHAIN3: [&str; 3] = ["0", "1/2", "1"];
const LUK3_FUSION: [[&str; 3]; 3] = [["0", "0", "0"], ["0", "0", "1/2"], ["0", "1/2", "1"]];
const LUK3_IMPLICATION: [[&str; 3]; 3] = [["1", "1", "1"], ["1/2", "1", "1"], ["0", "1/2", "1"]];
const GOEDEL3_FUSION: [[&str; 3]; 3] = [["0", "0", "0"], ["0", "1/2", "1/2"], ["0", "1/2", "1"]];
const GOEDEL3_IMPLICATION: [[&str; 3]; 3] = [["1", "1", "1"], ["0", "1", "1"], ["0", "1/2", "1"]];
const RM3_CARRIER: [&str; 3] = ["-1", "0", "1"];
const RM3_FUSION: [[&str; 3]; 3] = [["-1", "-1", "-1"], ["-1", "0", "1"], ["-1", "1", "1"]];
const RM3_IMPLICATION: [[&str; 3]; 3] = [["1", "1", "1"], ["-1", "0", "1"], ["-1", "-1", "1"]];
const BN4_CARRIER: [&str; 4] = ["f", "n", "b", "t"];
const BN4_FUSION: [[&str; 4]; 4] = [
    ["f", "f", "f", "f"],
    ["f", "f", "n", "n"],
    ["f", "n", "b", "t"],
    ["f", "n", "t", "t"],
];
const BN4_IMPLICATION: [[&str; 4]; 4] = [
    ["t", "t", "t", "t"],
    ["n", "t", "n", "t"],
    ["f", "n", "b", "t"],
    ["f", "n", "f", "t"],
];

fn m5() -> FiniteLattice {
    FiniteLattice::from_covers(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
    )
    .expect("M5")
}

fn n5() -> FiniteLattice {
    FiniteLattice::from_covers(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
    )
    .expect("N5")
}

fn f2() -> FiniteLattice {
    FiniteLattice::from_covers(&["v", "x", "y", "u"], &[("v", "x"), ("v", "y"), ("x", "u"), ("y", "u")]).expect("F2")
}

fn f2_belnap() -> FiniteLattice {
    FiniteLattice::from_covers(&["f", "n", "b", "t"], &[("f", "n"), ("f", "b"), ("n", "t"), ("b", "t")]).expect("F2")
}

/// Chains `0 < x < y < 1` and `0 < y′ < x′ < 1`.
fn o6() -> Result<LogicStructure> {
    let l = FiniteLattice::from_covers(
        &["0", "x", "y", "y'", "x'", "1"],
        &[("0", "x"), ("x", "y"), ("y", "1"), ("0", "y'"), ("y'", "x'"), ("x'", "1")],
    )?;
    LogicStructure::from_pairs(l, &[("0", "1"), ("x", "x'"), ("y", "y'")])
}

/// O6 with an extra `z` below both `y` and `x′`.
fn l7() -> FiniteLattice {
    FiniteLattice::from_covers(
        &["0", "x", "y", "y'", "x'", "z", "1"],
        &[
            ("0", "x"),
            ("0", "y'"),
            ("0", "z"),
            ("x", "y"),
            ("z", "y"),
            ("z", "x'"),
            ("y'", "x'"),
            ("y", "1"),
            ("x'", "1"),
        ],
    )
    .expect("L7")
}

fn cube_logic(n: u32) -> LogicStructure {
    let size = 1usize << n;
    let names: Vec<String> = (0..size).map(|m| format!("{:0w$b}", m, w = n as usize)).collect();
    let l = FiniteLattice::from_fn(names, |i, j| i & j == i).expect("a Boolean lattice");
    LogicStructure::new(l, (0..size).map(|m| (size - 1) ^ m).collect()).expect("complement is a negation")
}

/// `n` four-element Boolean blocks `{0, pj+, pj-, 1}` pasted at their bounds.
fn mo(n: usize) -> Result<LogicStructure> {
    let blocks = (1..=n)
        .map(|j| {
            let (p, q) = (format!("p{j}+"), format!("p{j}-"));
            FiniteLattice::from_covers(
                &["0", p.as_str(), q.as_str(), "1"],
                &[("0", p.as_str()), ("0", q.as_str()), (p.as_str(), "1"), (q.as_str(), "1")],
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let l = horizontal_sum(&blocks)?;
    let labels: Vec<(String, String)> = (1..=n).map(|j| (format!("p{j}+"), format!("p{j}-"))).collect();
    let mut pairs: Vec<(&str, &str)> = vec![("0", "1")];
    pairs.extend(labels.iter().map(|(a, b)| (a.as_str(), b.as_str())));
    LogicStructure::from_pairs(l, &pairs)
}

fn rm(k: usize) -> Result<CatalogEntry> {
    let n = (k / 2) as i64;
    let values: Vec<i64> = (-n..=n).collect();
    let names: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    let l = FiniteLattice::from_fn(names.clone(), |i, j| i <= j)?;
    let idx = |v: i64| (v + n) as usize;
    let s = LogicStructure::new(l, values.iter().map(|&v| idx(-v)).collect())?;
    let fusion = OpTable::from_fn("fusion", &names, |i, j| {
        let (a, b) = (values[i], values[j]);
        idx(if a <= -b { a.min(b) } else { a.max(b) })
    });
    let implication = OpTable::from_fn("implication", &names, |i, j| {
        let (a, b) = (values[i], values[j]);
        idx(if a <= b { (-a).max(b) } else { (-a).min(b) })
    });
    let mut e = CatalogEntry::logic(format!("RM({k})"), Some(k), s);
    e.tables = vec![fusion, implication];
    Ok(e)
}

/// `0 < x < {y, y′} < x′ < 1`.
fn g6() -> Result<LogicStructure> {
    let l = FiniteLattice::from_covers(
        &["0", "x", "y", "y'", "x'", "1"],
        &[("0", "x"), ("x", "y"), ("x", "y'"), ("y", "x'"), ("y'", "x'"), ("x'", "1")],
    )?;
    LogicStructure::from_pairs(l, &[("0", "1"), ("x", "x'"), ("y", "y'")])
}

/// `0 < f < x < y < f′ < 1` and `f < y′ < x′ < f′`.
fn g8() -> Result<LogicStructure> {
    let l = FiniteLattice::from_covers(
        &["0", "f", "x", "y'", "y", "x'", "f'", "1"],
        &[
            ("0", "f"),
            ("f", "x"),
            ("x", "y"),
            ("y", "f'"),
            ("f", "y'"),
            ("y'", "x'"),
            ("x'", "f'"),
            ("f'", "1"),
        ],
    )?;
    LogicStructure::from_pairs(l, &[("0", "1"), ("f", "f'"), ("x", "x'"), ("y", "y'")])
}

/// `0 < f < {a..e} < {a′..e′} < f′ < 1`, where `p < q′` exactly when `p` and
/// `q` are neighbours on the cycle a-b-c-d-e-a.
fn g14() -> Result<LogicStructure> {
    let atoms = ["a", "b", "c", "d", "e"];
    let primed: Vec<String> = atoms.iter().map(|p| format!("{p}'")).collect();
    let mut names: Vec<String> = vec!["0".into(), "f".into()];
    names.extend(atoms.iter().map(|s| s.to_string()));
    names.extend(primed.iter().cloned());
    names.extend(["f'".to_string(), "1".to_string()]);
    let mut covers: Vec<(String, String)> = vec![("0".into(), "f".into()), ("f'".into(), "1".into())];
    for (i, p) in atoms.iter().enumerate() {
        covers.push(("f".into(), p.to_string()));
        covers.push((primed[i].clone(), "f'".into()));
        for d in [1, 4] {
            covers.push((p.to_string(), primed[(i + d) % 5].clone()));
        }
    }
    let l = FiniteLattice::from_covers(&names, &covers)?;
    let mut pairs: Vec<(&str, &str)> = vec![("0", "1"), ("f", "f'")];
    pairs.extend(atoms.iter().zip(&primed).map(|(a, b)| (*a, b.as_str())));
    LogicStructure::from_pairs(l, &pairs)
}

/// Grid points `(i/n, j/n)` with `i + j ≤ n`, ordered by `x₁ ≤ y₁` and
/// `x₂ ≥ y₂`, negated by swapping coordinates.
fn lstar_grid(n: usize) -> Result<LogicStructure> {
    let pts: Vec<(usize, usize)> = (0..=n).flat_map(|i| (0..=n - i).map(move |j| (i, j))).collect();
    let q = |k: usize| Rational::new(k as i64, n as i64).short();
    let names = pts.iter().map(|&(i, j)| format!("({},{})", q(i), q(j))).collect();
    let l = FiniteLattice::from_fn(names, |a, b| pts[a].0 <= pts[b].0 && pts[a].1 >= pts[b].1)?;
    let neg = pts
        .iter()
        .map(|&(i, j)| pts.iter().position(|&p| p == (j, i)).expect("grid is symmetric"))
        .collect();
    LogicStructure::new(l, neg)
}

/// The Boolean lattice on the four basis states `p00..p11` of two qubits,
/// with two-element joins named `u..z` and coatoms `pij′`.
fn register2() -> Result<LogicStructure> {
    let atoms = ["p00", "p01", "p10", "p11"];
    let pair = |m: usize| match m {
        0b0011 => "u",
        0b0101 => "v",
        0b1001 => "w",
        0b0110 => "x",
        0b1010 => "y",
        _ => "z",
    };
    let mut masks: Vec<usize> = (0..16).collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    let names: Vec<String> = masks
        .iter()
        .map(|&m| match m.count_ones() {
            0 => "0".into(),
            1 => atoms[m.trailing_zeros() as usize].into(),
            2 => pair(m).into(),
            3 => format!("{}'", atoms[(!m & 15).trailing_zeros() as usize]),
            _ => "1".into(),
        })
        .collect();
    let l = FiniteLattice::from_fn(names, |i, j| masks[i] & masks[j] == masks[i])?;
    let neg = masks
        .iter()
        .map(|&m| masks.iter().position(|&c| c == !m & 15).expect("complement present"))
        .collect();
    LogicStructure::new(l, neg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::isomorphism;

    #[test]
    fn names_parse() {
        assert_eq!(parse_name("mo(3)").unwrap(), ("MO".into(), Some(3)));
        assert_eq!(parse_name(" Bn4 ").unwrap(), ("BN4".into(), None));
        assert!(matches!(parse_name("XYZ"), Err(Error::UnknownName(_))));
        assert!(matches!(parse_name("MO(x)"), Err(Error::BadParams { .. })));
        assert!(matches!(parse_name("MO(3"), Err(Error::UnknownName(_))));
        assert!(matches!(lookup("LUK(0)"), Err(Error::BadParams { .. })));
        assert!(matches!(lookup("RM(4)"), Err(Error::BadParams { .. })));
        assert!(matches!(lookup("M5(2)"), Err(Error::BadParams { .. })));
        assert_eq!(lookup("cube").unwrap().name, "CUBE(2)");
    }

    #[test]
    fn every_default_entry_passes() {
        for row in selftest() {
            assert!(row.pass, "{}: {:?}", row.name, row.diagnostics);
        }
    }

    #[test]
    fn labels_of_interest() {
        let label = |n: &str| lookup(n).unwrap().class().unwrap().label;
        assert_eq!(label("BN4"), LogicLabel::Paraconsistent);
        assert_eq!(label("LUK(3)"), LogicLabel::Paraconsistent);
        assert_eq!(label("RM(3)"), LogicLabel::Paraconsistent);
        assert_eq!(label("G14"), LogicLabel::Paraconsistent);
        assert_eq!(label("O6X"), LogicLabel::Logic);
        assert_eq!(label("LSTAR_GRID(2)"), LogicLabel::Paraconsistent);
        assert_eq!(label("GF2(2)"), LogicLabel::Paraconsistent);
    }

    #[test]
    fn small_shapes() {
        assert!(isomorphism(lookup("MO(1)").unwrap().structure.lattice(), &f2()).is_some());
        assert!(isomorphism(lookup("REGISTER2").unwrap().structure.lattice(), cube_logic(4).lattice()).is_some());
        let r = lookup("REGISTER2").unwrap();
        let s = r.structure.logic().unwrap();
        assert_eq!(s.name(s.neg(s.el("u"))), "z");
        assert_eq!(s.name(s.neg(s.el("p01"))), "p01'");
        assert_eq!(lookup("LSTAR_GRID(2)").unwrap().structure.lattice().len(), 6);
        assert_eq!(lookup("G14").unwrap().structure.lattice().len(), 14);
        assert_eq!(lookup("MO(3)").unwrap().structure.lattice().len(), 8);
    }

    #[test]
    fn lstar_grid_endpoints() {
        let e = lookup("LSTAR_GRID(2)").unwrap();
        let l = e.structure.lattice();
        assert_eq!(l.name(l.bottom()), "(0,1)");
        assert_eq!(l.name(l.top()), "(1,0)");
    }

    #[test]
    fn temperature_orthomodular_failure() {
        let e = lookup("TEMPERATURE").unwrap();
        let s = e.structure.logic().unwrap();
        let l = s.lattice();
        let (a, b) = (s.el("a"), s.el("b"));
        // a ≼ b′ and the identity holds for this pair: a∨(a′∧b′) = b′
        let nanb = l.meet(s.neg(a), s.neg(b));
        assert!(l.lt(a, s.neg(b)));
        assert_eq!(l.join(a, nanb), s.neg(b));
        let w = e.observe("orthomodular").unwrap().1.unwrap();
        assert_eq!(w.elements, vec!["a", "1"]);
    }

    #[test]
    fn bn4_tables_are_rejected_when_corrupted() {
        let mut e = lookup("BN4").unwrap();
        e.tables[1].rows[1][1] = "n".into();
        assert!(!bn4_table_checks(&e).is_empty());
    }

    #[test]
    fn export_round_trips_through_the_file_format() {
        let e = lookup("G8").unwrap();
        let doc = LatticeDoc::parse(&e.to_doc().to_json()).unwrap();
        let (l, neg) = doc.build().unwrap();
        assert_eq!(&l, e.structure.lattice());
        assert_eq!(neg.as_deref(), e.structure.negation());
    }
}
