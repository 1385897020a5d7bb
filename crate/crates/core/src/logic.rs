//! Negations on finite lattices, the laws they may satisfy, and the label a
//! structure earns in the hierarchy of logics.

use crate::error::{Error, Result};
use crate::order::{property_scan, FiniteLattice};
use crate::report::{scan, Outcome, PropertyReport};
use rand::Rng;
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegationMap {
    pub table: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogicStructure {
    lattice: FiniteLattice,
    neg: NegationMap,
}

impl LogicStructure {
    pub fn new(lattice: FiniteLattice, table: Vec<usize>) -> Result<Self> {
        if table.len() != lattice.len() {
            return Err(Error::NegationLength {
                got: table.len(),
                want: lattice.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&t| t >= lattice.len()) {
            return Err(Error::UnknownLabel(format!("#{bad}")));
        }
        Ok(LogicStructure {
            lattice,
            neg: NegationMap { table },
        })
    }

    /// Negation given as labels, entry `i` being the negation of element `i`.
    pub fn from_labels<S: AsRef<str>>(lattice: FiniteLattice, labels: &[S]) -> Result<Self> {
        let table = labels
            .iter()
            .map(|s| {
                lattice
                    .index_of(s.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(s.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(lattice, table)
    }

    /// Negation given as (x, x′) label pairs; each pair is applied both ways.
    pub fn from_pairs(lattice: FiniteLattice, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut table: Vec<Option<usize>> = vec![None; lattice.len()];
        for &(a, b) in pairs {
            let ia = lattice.index_of(a).ok_or_else(|| Error::UnknownLabel(a.to_string()))?;
            let ib = lattice.index_of(b).ok_or_else(|| Error::UnknownLabel(b.to_string()))?;
            table[ia] = Some(ib);
            table[ib] = Some(ia);
        }
        let table = table
            .into_iter()
            .enumerate()
            .map(|(i, t)| t.ok_or_else(|| Error::UnknownLabel(format!("no negation for {}", lattice.name(i)))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(lattice, table)
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn negation(&self) -> &NegationMap {
        &self.neg
    }

    pub fn neg(&self, x: usize) -> usize {
        self.neg.table[x]
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn name(&self, x: usize) -> &str {
        self.lattice.name(x)
    }

    pub fn el(&self, label: &str) -> usize {
        self.lattice.el(label)
    }
}

/// A law of a lattice with negation, checked pointwise.
#[derive(Clone, Copy)]
pub struct LogicLaw {
    pub name: &'static str,
    pub arity: usize,
    pub check: fn(&LogicStructure, &[usize]) -> Outcome,
}

impl LogicLaw {
    pub fn eval(&self, s: &LogicStructure, t: &[usize]) -> Outcome {
        (self.check)(s, t)
    }
}

fn le(s: &LogicStructure, lhs: usize, rhs: usize) -> Outcome {
    if s.lattice.leq(lhs, rhs) {
        Outcome::Holds
    } else {
        Outcome::Fails { lhs, rhs }
    }
}

pub const WEAK_DOUBLE_NEGATION: LogicLaw = LogicLaw {
    name: "weak-double-negation",
    arity: 1,
    check: |s, t| le(s, t[0], s.neg(s.neg(t[0]))),
};

pub const ANTITONY: LogicLaw = LogicLaw {
    name: "antitony",
    arity: 2,
    check: |s, t| {
        let (x, y) = (t[0], t[1]);
        if s.lattice.leq(x, y) {
            le(s, s.neg(y), s.neg(x))
        } else {
            Outcome::Holds
        }
    },
};

pub const BOOLEAN_BOUNDARY: LogicLaw = LogicLaw {
    name: "boolean-boundary",
    arity: 1,
    check: |s, t| {
        let l = &s.lattice;
        let x = t[0];
        if x == l.bottom() {
            Outcome::eq(s.neg(x), l.top())
        } else if x == l.top() {
            Outcome::eq(s.neg(x), l.bottom())
        } else {
            Outcome::Holds
        }
    },
};

pub const NON_CONTRADICTION: LogicLaw = LogicLaw {
    name: "non-contradiction",
    arity: 1,
    check: |s, t| Outcome::eq(s.lattice.meet(t[0], s.neg(t[0])), s.lattice.bottom()),
};

pub const TERTIUM: LogicLaw = LogicLaw {
    name: "tertium-non-datur",
    arity: 1,
    check: |s, t| Outcome::eq(s.lattice.join(t[0], s.neg(t[0])), s.lattice.top()),
};

pub const INVOLUTIVE: LogicLaw = LogicLaw {
    name: "involutive",
    arity: 1,
    check: |s, t| Outcome::eq(s.neg(s.neg(t[0])), t[0]),
};

pub const DISJUNCTIVE_DE_MORGAN: LogicLaw = LogicLaw {
    name: "disjunctive-de-morgan",
    arity: 2,
    check: |s, t| {
        let l = &s.lattice;
        Outcome::eq(s.neg(l.join(t[0], t[1])), l.meet(s.neg(t[0]), s.neg(t[1])))
    },
};

pub const CONJUNCTIVE_DE_MORGAN: LogicLaw = LogicLaw {
    name: "conjunctive-de-morgan",
    arity: 2,
    check: |s, t| {
        let l = &s.lattice;
        Outcome::eq(s.neg(l.meet(t[0], t[1])), l.join(s.neg(t[0]), s.neg(t[1])))
    },
};

pub const CONJUNCTIVE_DE_MORGAN_INEQUALITY: LogicLaw = LogicLaw {
    name: "conjunctive-de-morgan-inequality",
    arity: 2,
    check: |s, t| {
        let l = &s.lattice;
        le(s, l.join(s.neg(t[0]), s.neg(t[1])), s.neg(l.meet(t[0], t[1])))
    },
};

pub const PARACONSISTENCY: LogicLaw = LogicLaw {
    name: "paraconsistency",
    arity: 2,
    check: |s, t| {
        let l = &s.lattice;
        let (x, y) = (t[0], t[1]);
        if l.leq(x, y) && l.meet(s.neg(x), y) == l.bottom() {
            Outcome::eq(x, y)
        } else {
            Outcome::Holds
        }
    },
};

pub const ORTHOMODULAR: LogicLaw = LogicLaw {
    name: "orthomodular",
    arity: 2,
    check: |s, t| {
        let l = &s.lattice;
        let (x, y) = (t[0], t[1]);
        if l.leq(x, y) {
            Outcome::eq(l.join(x, l.meet(s.neg(x), y)), y)
        } else {
            Outcome::Holds
        }
    },
};

pub const COMPLEMENTED: LogicLaw = LogicLaw {
    name: "complemented",
    arity: 1,
    check: |s, t| {
        let o = (NON_CONTRADICTION.check)(s, t);
        if o.holds() {
            (TERTIUM.check)(s, t)
        } else {
            o
        }
    },
};

pub fn negation_axioms() -> [LogicLaw; 3] {
    [WEAK_DOUBLE_NEGATION, ANTITONY, BOOLEAN_BOUNDARY]
}

pub fn logic_laws() -> [LogicLaw; 9] {
    [
        NON_CONTRADICTION,
        TERTIUM,
        INVOLUTIVE,
        DISJUNCTIVE_DE_MORGAN,
        CONJUNCTIVE_DE_MORGAN,
        CONJUNCTIVE_DE_MORGAN_INEQUALITY,
        PARACONSISTENCY,
        ORTHOMODULAR,
        COMPLEMENTED,
    ]
}

/// Looks a law up by its report name, across both groups.
pub fn law_by_name(name: &str) -> Option<LogicLaw> {
    negation_axioms()
        .into_iter()
        .chain(logic_laws())
        .find(|l| l.name == name)
}

fn run(s: &LogicStructure, laws: &[LogicLaw]) -> PropertyReport {
    let mut r = PropertyReport::new();
    for law in laws {
        r.push(scan(law.name, s.lattice.names(), law.arity, |t| law.eval(s, t)));
    }
    r
}

/// Weak double negation, antitony and the Boolean boundary condition. All
/// three hold exactly when the map is a fuzzy negation.
pub fn negation_axiom_report(s: &LogicStructure) -> PropertyReport {
    run(s, &negation_axioms())
}

pub fn law_report(s: &LogicStructure) -> PropertyReport {
    run(s, &logic_laws())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LogicFlags {
    pub fuzzy_negation: bool,
    pub non_contradictory: bool,
    pub paraconsistent: bool,
    pub orthomodular: bool,
    pub distributive: bool,
    pub involutive: bool,
    pub tertium: bool,
    pub conj_de_morgan: bool,
    pub boolean: bool,
    pub intuitionistic: bool,
}

impl LogicFlags {
    pub fn get(&self, name: &str) -> Option<bool> {
        Some(match name {
            "fuzzy_negation" => self.fuzzy_negation,
            "non_contradictory" => self.non_contradictory,
            "paraconsistent" => self.paraconsistent,
            "orthomodular" => self.orthomodular,
            "distributive" => self.distributive,
            "involutive" => self.involutive,
            "tertium" => self.tertium,
            "conj_de_morgan" => self.conj_de_morgan,
            "boolean" => self.boolean,
            "intuitionistic" => self.intuitionistic,
            _ => return None,
        })
    }

    pub const NAMES: [&'static str; 10] = [
        "fuzzy_negation",
        "non_contradictory",
        "paraconsistent",
        "orthomodular",
        "distributive",
        "involutive",
        "tertium",
        "conj_de_morgan",
        "boolean",
        "intuitionistic",
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LogicLabel {
    NotFuzzy,
    Fuzzy,
    Paraconsistent,
    Logic,
    ParaconsistentNonContradictory,
    Quantum,
    Distributive,
    Intuitionistic,
    Boolean,
}

impl LogicLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            LogicLabel::NotFuzzy => "not-a-fuzzy-logic",
            LogicLabel::Fuzzy => "fuzzy logic",
            LogicLabel::Paraconsistent => "paraconsistent logic",
            LogicLabel::Logic => "logic",
            LogicLabel::ParaconsistentNonContradictory => "paraconsistent logic (non-contradictory)",
            LogicLabel::Quantum => "quantum logic",
            LogicLabel::Distributive => "distributive logic",
            LogicLabel::Intuitionistic => "intuitionistic logic",
            LogicLabel::Boolean => "Boolean logic",
        }
    }
}

impl fmt::Display for LogicLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for LogicLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LogicClass {
    pub flags: LogicFlags,
    pub label: LogicLabel,
}

impl LogicFlags {
    /// The most specific hierarchy label the flags allow.
    pub fn label(&self) -> LogicLabel {
        if !self.fuzzy_negation {
            LogicLabel::NotFuzzy
        } else if self.boolean {
            LogicLabel::Boolean
        } else if self.intuitionistic {
            LogicLabel::Intuitionistic
        } else if self.non_contradictory && self.distributive {
            LogicLabel::Distributive
        } else if self.non_contradictory && self.orthomodular {
            LogicLabel::Quantum
        } else if self.non_contradictory && self.paraconsistent {
            LogicLabel::ParaconsistentNonContradictory
        } else if self.non_contradictory {
            LogicLabel::Logic
        } else if self.paraconsistent {
            LogicLabel::Paraconsistent
        } else {
            LogicLabel::Fuzzy
        }
    }
}

pub fn classify(s: &LogicStructure) -> LogicClass {
    let axioms = negation_axiom_report(s);
    let laws = law_report(s);
    let distributive = property_scan(s.lattice()).holds("distributive");
    let fuzzy = axioms.all_hold();
    let nc = laws.holds("non-contradiction");
    let involutive = laws.holds("involutive");
    let flags = LogicFlags {
        fuzzy_negation: fuzzy,
        non_contradictory: nc,
        paraconsistent: laws.holds("paraconsistency"),
        orthomodular: laws.holds("orthomodular"),
        distributive,
        involutive,
        tertium: laws.holds("tertium-non-datur"),
        conj_de_morgan: laws.holds("conjunctive-de-morgan"),
        boolean: fuzzy && distributive && laws.holds("complemented"),
        // with x ≼ x″ everywhere, some x < x″ is the failure of involution
        intuitionistic: fuzzy && distributive && nc && !involutive,
    };
    debug_assert!(!(fuzzy && nc && flags.orthomodular) || involutive);
    LogicClass {
        label: flags.label(),
        flags,
    }
}

/// The four implications between laws that hold for every structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Metaproperty {
    /// With x ≼ x″: antitony ⇔ disjunctive De Morgan.
    AntitonyIffDisjunctiveDeMorgan,
    /// Involutive fuzzy negation ⇒ conjunctive De Morgan.
    InvolutiveConjunctiveDeMorgan,
    /// Fuzzy, non-contradictory and involutive ⇒ tertium non datur.
    NonContradictoryInvolutiveTertium,
    /// Fuzzy negation ⇒ conjunctive De Morgan inequality.
    FuzzyConjunctiveInequality,
}

impl Metaproperty {
    pub const ALL: [Metaproperty; 4] = [
        Metaproperty::AntitonyIffDisjunctiveDeMorgan,
        Metaproperty::InvolutiveConjunctiveDeMorgan,
        Metaproperty::NonContradictoryInvolutiveTertium,
        Metaproperty::FuzzyConjunctiveInequality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metaproperty::AntitonyIffDisjunctiveDeMorgan => "antitony <=> disjunctive De Morgan (given x <= x'')",
            Metaproperty::InvolutiveConjunctiveDeMorgan => "involutive fuzzy negation => conjunctive De Morgan",
            Metaproperty::NonContradictoryInvolutiveTertium => "non-contradictory + involutive => tertium non datur",
            Metaproperty::FuzzyConjunctiveInequality => "fuzzy negation => conjunctive De Morgan inequality",
        }
    }
}

/// Outcome of checking the metaproperties on one structure: for each, whether
/// its premise held and whether it was violated.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MetaOutcome {
    pub premise: [bool; 4],
    pub violated: [bool; 4],
}

pub fn check_metaproperties(s: &LogicStructure) -> MetaOutcome {
    let holds = |law: LogicLaw| scan(law.name, s.lattice().names(), law.arity, |t| law.eval(s, t)).holds;
    let wdn = holds(WEAK_DOUBLE_NEGATION);
    let anti = holds(ANTITONY);
    let fuzzy = wdn && anti && holds(BOOLEAN_BOUNDARY);
    let inv = holds(INVOLUTIVE);
    let nc = holds(NON_CONTRADICTION);
    let mut out = MetaOutcome::default();

    out.premise[0] = wdn;
    out.violated[0] = wdn && anti != holds(DISJUNCTIVE_DE_MORGAN);
    out.premise[1] = fuzzy && inv;
    out.violated[1] = out.premise[1] && !holds(CONJUNCTIVE_DE_MORGAN);
    out.premise[2] = fuzzy && nc && inv;
    out.violated[2] = out.premise[2] && !holds(TERTIUM);
    out.premise[3] = fuzzy;
    out.violated[3] = fuzzy && !holds(CONJUNCTIVE_DE_MORGAN_INEQUALITY);
    out
}

/// How a random negation table is drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RandomNegation {
    /// Every entry uniform over the carrier.
    Uniform,
    /// Uniform, but 0′ = 1 and 1′ = 0.
    Bounded,
    /// x′ = ⋀{h(z) : z ≼ x} for a uniform h, which is always antitone.
    Antitone,
    /// A uniformly chosen antitone involution, when one exists; falls back to
    /// `Antitone` otherwise.
    Involution,
}

impl RandomNegation {
    pub const ALL: [RandomNegation; 4] = [
        RandomNegation::Uniform,
        RandomNegation::Bounded,
        RandomNegation::Antitone,
        RandomNegation::Involution,
    ];
}

pub fn random_negation<R: Rng>(l: &FiniteLattice, kind: RandomNegation, rng: &mut R) -> Vec<usize> {
    let n = l.len();
    match kind {
        RandomNegation::Uniform => (0..n).map(|_| rng.gen_range(0..n)).collect(),
        RandomNegation::Bounded => {
            let mut t: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
            t[l.bottom()] = l.top();
            t[l.top()] = l.bottom();
            t
        }
        RandomNegation::Antitone => {
            let h: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
            (0..n)
                .map(|x| l.meet_all((0..n).filter(|&z| l.leq(z, x)).map(|z| h[z])))
                .collect()
        }
        RandomNegation::Involution => {
            random_antitone_involution(l, rng).unwrap_or_else(|| random_negation(l, RandomNegation::Antitone, rng))
        }
    }
}

/// Randomized backtracking for an order-reversing involution. Gives up after
/// a bounded number of steps on lattices that have none.
fn random_antitone_involution<R: Rng>(l: &FiniteLattice, rng: &mut R) -> Option<Vec<usize>> {
    use rand::seq::SliceRandom;
    let n = l.len();
    let down: Vec<usize> = (0..n).map(|x| (0..n).filter(|&k| l.leq(k, x)).count()).collect();
    let up: Vec<usize> = (0..n).map(|x| (0..n).filter(|&k| l.leq(x, k)).count()).collect();
    let mut t = vec![usize::MAX; n];
    let mut steps = 0u32;

    fn go<R: Rng>(
        l: &FiniteLattice,
        t: &mut Vec<usize>,
        down: &[usize],
        up: &[usize],
        rng: &mut R,
        steps: &mut u32,
    ) -> bool {
        *steps += 1;
        if *steps > 20_000 {
            return false;
        }
        let n = l.len();
        let Some(x) = (0..n).find(|&x| t[x] == usize::MAX) else {
            return true;
        };
        let mut cands: Vec<usize> = (0..n)
            .filter(|&y| t[y] == usize::MAX && down[x] == up[y] && up[x] == down[y])
            .collect();
        cands.shuffle(rng);
        for y in cands {
            let ok = (0..n).filter(|&z| t[z] != usize::MAX).all(|z| {
                let zz = t[z];
                l.leq(x, z) == l.leq(zz, y)
                    && l.leq(z, x) == l.leq(y, zz)
                    && l.leq(y, z) == l.leq(zz, x)
                    && l.leq(z, y) == l.leq(x, zz)
            });
            if !ok {
                continue;
            }
            t[x] = y;
            t[y] = x;
            if go(l, t, down, up, rng, steps) {
                return true;
            }
            t[x] = usize::MAX;
            t[y] = usize::MAX;
        }
        false
    }

    go(l, &mut t, &down, &up, rng, &mut steps).then_some(t)
}
