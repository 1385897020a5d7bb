//! Propositional formulas: parsing, printing, evaluation on finite logics,
//! identity checking and distributive normal forms.
//!
//! Text grammar, loosest to tightest: `<->`, `->` (both right-associative),
//! `|`, `&`, prefix `~`. Atoms are identifiers, `0`, `1` and parenthesized
//! formulas.

use crate::error::{Error, Result};
use crate::logic::{negation_axiom_report, LogicStructure};
use crate::residuation::{residuum_table, ResiduumTable};
use crate::report::{Verdict, Witness};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(String),
    Const(bool),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(name: &str) -> Self {
        Formula::Var(name.to_string())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        Formula::Not(Box::new(self))
    }

    pub fn and(self, o: Formula) -> Self {
        Formula::And(Box::new(self), Box::new(o))
    }

    pub fn or(self, o: Formula) -> Self {
        Formula::Or(Box::new(self), Box::new(o))
    }

    pub fn imp(self, o: Formula) -> Self {
        Formula::Imp(Box::new(self), Box::new(o))
    }

    pub fn iff(self, o: Formula) -> Self {
        Formula::Iff(Box::new(self), Box::new(o))
    }

    /// Variables in alphabetical order.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(v) => {
                out.insert(v.clone());
            }
            Formula::Const(_) => {}
            Formula::Not(a) => a.collect_vars(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    fn prec(&self) -> u8 {
        match self {
            Formula::Iff(..) => 1,
            Formula::Imp(..) => 2,
            Formula::Or(..) => 3,
            Formula::And(..) => 4,
            Formula::Not(_) => 5,
            Formula::Var(_) | Formula::Const(_) => 6,
        }
    }

    fn write(&self, out: &mut String, spaced: bool) {
        let child = |f: &Formula, out: &mut String, paren: bool| {
            if paren {
                out.push('(');
            }
            f.write(out, spaced);
            if paren {
                out.push(')');
            }
        };
        match self {
            Formula::Var(v) => out.push_str(v),
            Formula::Const(b) => out.push(if *b { '1' } else { '0' }),
            Formula::Not(a) => {
                out.push('~');
                child(a, out, a.prec() < 5);
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                let p = self.prec();
                let (op, right_assoc) = match self {
                    Formula::And(..) => ("&", false),
                    Formula::Or(..) => ("|", false),
                    Formula::Imp(..) => ("->", true),
                    _ => ("<->", true),
                };
                let (pl, pr) = if right_assoc {
                    (a.prec() <= p, b.prec() < p)
                } else {
                    (a.prec() < p, b.prec() <= p)
                };
                child(a, out, pl);
                if spaced {
                    out.push(' ');
                    out.push_str(op);
                    out.push(' ');
                } else {
                    out.push_str(op);
                }
                child(b, out, pr);
            }
        }
    }

    /// Minimal parentheses, no spaces: `a&~a`.
    pub fn compact(&self) -> String {
        let mut s = String::new();
        self.write(&mut s, false);
        s
    }
}

/// Minimal parentheses with spaced binary operators: `a & ~a`.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write(&mut s, true);
        f.write_str(&s)
    }
}

impl FromStr for Formula {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Const(bool),
    Not,
    And,
    Or,
    Imp,
    Iff,
    LParen,
    RParen,
    End,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'~' => Tok::Not,
            b'&' => Tok::And,
            b'|' => Tok::Or,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0' => Tok::Const(false),
            b'1' => Tok::Const(true),
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Imp
            }
            b'<' if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') => {
                i += 2;
                Tok::Iff
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i + 1 < bytes.len() && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_') {
                    i += 1;
                }
                Tok::Ident(text[start..=i].to_string())
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(Error::SyntaxError {
                    pos: i,
                    msg: format!("unexpected character `{ch}`"),
                });
            }
        };
        i += 1;
        if let (Tok::Const(_), Some(n)) = (&tok, bytes.get(i)) {
            if n.is_ascii_alphanumeric() || *n == b'_' {
                return Err(Error::SyntaxError {
                    pos: start,
                    msg: "constants are the single digits 0 and 1".into(),
                });
            }
        }
        out.push((start, tok));
    }
    out.push((bytes.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::SyntaxError {
            pos: self.pos(),
            msg: msg.to_string(),
        })
    }

    fn iff(&mut self) -> Result<Formula> {
        let lhs = self.imp()?;
        if *self.peek() == Tok::Iff {
            self.bump();
            return Ok(lhs.iff(self.iff()?));
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Formula> {
        let lhs = self.or()?;
        if *self.peek() == Tok::Imp {
            self.bump();
            return Ok(lhs.imp(self.imp()?));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut f = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            f = f.or(self.and()?);
        }
        Ok(f)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut f = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            f = f.and(self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek() {
            Tok::Not => {
                self.bump();
                Ok(self.unary()?.not())
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula> {
        match self.peek().clone() {
            Tok::Ident(v) => {
                self.bump();
                Ok(Formula::Var(v))
            }
            Tok::Const(b) => {
                self.bump();
                Ok(Formula::Const(b))
            }
            Tok::LParen => {
                self.bump();
                let f = self.iff()?;
                if *self.peek() != Tok::RParen {
                    return self.err("expected `)`");
                }
                self.bump();
                Ok(f)
            }
            Tok::End => self.err("unexpected end of input"),
            _ => self.err("expected a variable, constant, `~` or `(`"),
        }
    }
}

pub fn parse(text: &str) -> Result<Formula> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let f = p.iff()?;
    if *p.peek() != Tok::End {
        return p.err("unexpected trailing input");
    }
    Ok(f)
}

/// How `->` is interpreted on a finite structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ImplicationSemantics {
    /// `x -> y := x′ ∨ y`.
    Ortho,
    /// Relative pseudocomplement of an implicative lattice.
    Residuated(ResiduumTable),
    /// Explicit row-major table over element indices.
    Table(Vec<usize>),
}

impl ImplicationSemantics {
    pub fn residuated(s: &LogicStructure) -> Result<Self> {
        residuum_table(s.lattice())
            .map(ImplicationSemantics::Residuated)
            .map_err(|(a, b)| {
                Error::SemanticsUnavailable(format!(
                    "{} -> {} has no relative pseudocomplement",
                    s.name(a),
                    s.name(b)
                ))
            })
    }

    pub fn table(s: &LogicStructure, table: Vec<usize>) -> Result<Self> {
        let n = s.len();
        if table.len() != n * n || table.iter().any(|&v| v >= n) {
            return Err(Error::SemanticsUnavailable(format!(
                "implication table needs {} entries below {}",
                n * n,
                n
            )));
        }
        Ok(ImplicationSemantics::Table(table))
    }

    /// Residuated when the lattice is implicative, else the ortho arrow when
    /// the negation is a fuzzy negation.
    pub fn default_for(s: &LogicStructure) -> Result<Self> {
        if let Ok(sem) = Self::residuated(s) {
            return Ok(sem);
        }
        if negation_axiom_report(s).all_hold() {
            return Ok(ImplicationSemantics::Ortho);
        }
        Err(Error::SemanticsUnavailable(
            "lattice is not implicative and the negation is not a fuzzy negation".into(),
        ))
    }

    pub fn name(&self) -> &'static str {
        match self {
            ImplicationSemantics::Ortho => "ortho",
            ImplicationSemantics::Residuated(_) => "residuated",
            ImplicationSemantics::Table(_) => "table",
        }
    }

    fn arrow(&self, s: &LogicStructure, x: usize, y: usize) -> usize {
        let l = s.lattice();
        match self {
            ImplicationSemantics::Ortho => l.join(s.neg(x), y),
            ImplicationSemantics::Residuated(t) => t.get(x, y),
            ImplicationSemantics::Table(t) => t[x * s.len() + y],
        }
    }
}

pub type Env = BTreeMap<String, usize>;

fn eval_inner(f: &Formula, s: &LogicStructure, sem: &ImplicationSemantics, env: &Env) -> Result<usize> {
    let l = s.lattice();
    Ok(match f {
        Formula::Var(v) => *env.get(v).ok_or_else(|| Error::UnboundVariable(v.clone()))?,
        Formula::Const(false) => l.bottom(),
        Formula::Const(true) => l.top(),
        Formula::Not(a) => s.neg(eval_inner(a, s, sem, env)?),
        Formula::And(a, b) => l.meet(eval_inner(a, s, sem, env)?, eval_inner(b, s, sem, env)?),
        Formula::Or(a, b) => l.join(eval_inner(a, s, sem, env)?, eval_inner(b, s, sem, env)?),
        Formula::Imp(a, b) => sem.arrow(s, eval_inner(a, s, sem, env)?, eval_inner(b, s, sem, env)?),
        Formula::Iff(a, b) => {
            let (x, y) = (eval_inner(a, s, sem, env)?, eval_inner(b, s, sem, env)?);
            l.meet(sem.arrow(s, x, y), sem.arrow(s, y, x))
        }
    })
}

pub fn eval(f: &Formula, s: &LogicStructure, sem: &ImplicationSemantics, env: &Env) -> Result<usize> {
    if let ImplicationSemantics::Table(t) = sem {
        if t.len() != s.len() * s.len() {
            return Err(Error::SemanticsUnavailable("table size does not match the carrier".into()));
        }
    }
    eval_inner(f, s, sem, env)
}

#[derive(Debug, Clone, Copy)]
enum Op {
    Var(usize),
    Bot,
    Top,
    Not,
    And,
    Or,
    Imp,
    Iff,
}

/// Postfix code for `f` with variables replaced by their slot in `vars`.
fn compile(f: &Formula, vars: &[String], code: &mut Vec<Op>) {
    match f {
        Formula::Var(v) => code.push(Op::Var(vars.iter().position(|w| w == v).expect("variable collected"))),
        Formula::Const(false) => code.push(Op::Bot),
        Formula::Const(true) => code.push(Op::Top),
        Formula::Not(a) => {
            compile(a, vars, code);
            code.push(Op::Not);
        }
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
            compile(a, vars, code);
            compile(b, vars, code);
            code.push(match f {
                Formula::And(..) => Op::And,
                Formula::Or(..) => Op::Or,
                Formula::Imp(..) => Op::Imp,
                _ => Op::Iff,
            });
        }
    }
}

fn run_code(code: &[Op], s: &LogicStructure, sem: &ImplicationSemantics, slots: &[usize], stack: &mut Vec<usize>) -> usize {
    let l = s.lattice();
    stack.clear();
    for op in code {
        let v = match *op {
            Op::Var(i) => slots[i],
            Op::Bot => l.bottom(),
            Op::Top => l.top(),
            Op::Not => {
                let a = stack.pop().expect("operand");
                s.neg(a)
            }
            _ => {
                let b = stack.pop().expect("operand");
                let a = stack.pop().expect("operand");
                match *op {
                    Op::And => l.meet(a, b),
                    Op::Or => l.join(a, b),
                    Op::Imp => sem.arrow(s, a, b),
                    _ => l.meet(sem.arrow(s, a, b), sem.arrow(s, b, a)),
                }
            }
        };
        stack.push(v);
    }
    stack.pop().expect("formula leaves one value")
}

/// Compares both sides under every assignment of carrier elements to the
/// variables, first variable (alphabetically) most significant. The witness
/// lists the assigned elements in variable order.
pub fn holds_identity(s: &LogicStructure, sem: &ImplicationSemantics, lhs: &Formula, rhs: &Formula) -> Result<Verdict> {
    if let ImplicationSemantics::Table(t) = sem {
        if t.len() != s.len() * s.len() {
            return Err(Error::SemanticsUnavailable("table size does not match the carrier".into()));
        }
    }
    let mut vars = lhs.variables();
    vars.extend(rhs.variables());
    let vars: Vec<String> = vars.into_iter().collect();
    let (mut lc, mut rc) = (Vec::new(), Vec::new());
    compile(lhs, &vars, &mut lc);
    compile(rhs, &vars, &mut rc);
    let property = format!("{lhs} = {rhs}");
    let n = s.len();
    let k = vars.len();
    let mut digits = vec![0usize; k];
    let mut stack = Vec::new();
    loop {
        let a = run_code(&lc, s, sem, &digits, &mut stack);
        let b = run_code(&rc, s, sem, &digits, &mut stack);
        if a != b {
            return Ok(Verdict::fail(
                &property,
                Witness {
                    elements: digits.iter().map(|&d| s.name(d).to_string()).collect(),
                    identity: property.clone(),
                    lhs: s.name(a).to_string(),
                    rhs: s.name(b).to_string(),
                },
            ));
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(Verdict::pass(&property));
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < n {
                break;
            }
            digits[pos] = 0;
        }
    }
}

fn classical(f: &Formula, env: &BTreeMap<String, bool>) -> bool {
    match f {
        Formula::Var(v) => env[v],
        Formula::Const(b) => *b,
        Formula::Not(a) => !classical(a, env),
        Formula::And(a, b) => classical(a, env) && classical(b, env),
        Formula::Or(a, b) => classical(a, env) || classical(b, env),
        Formula::Imp(a, b) => !classical(a, env) || classical(b, env),
        Formula::Iff(a, b) => classical(a, env) == classical(b, env),
    }
}

/// `None` when `f` is a classical tautology, otherwise the first falsifying
/// 0-1 assignment.
pub fn boolean_counterexample(f: &Formula) -> Option<Vec<(String, bool)>> {
    let vars: Vec<String> = f.variables().into_iter().collect();
    let k = vars.len();
    for bits in 0u64..(1u64 << k) {
        let env: BTreeMap<String, bool> = vars
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), bits >> (k - 1 - i) & 1 == 1))
            .collect();
        if !classical(f, &env) {
            return Some(vars.iter().map(|v| (v.clone(), env[v])).collect());
        }
    }
    None
}

pub fn boolean_tautology(f: &Formula) -> bool {
    boolean_counterexample(f).is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalFormMode {
    JoinOfMeets,
    MeetOfJoins,
}

pub type NormalForm = BTreeSet<BTreeSet<String>>;

fn drop_supersets(sets: NormalForm) -> NormalForm {
    sets.iter()
        .filter(|s| !sets.iter().any(|t| t != *s && t.is_subset(s)))
        .cloned()
        .collect()
}

/// Variable sets `S` with `f ≡ ⋁ ⋀ S` (or `⋀ ⋁ S`) in every distributive
/// lattice, reduced to an antichain.
pub fn normal_form(f: &Formula, mode: NormalFormMode) -> Result<NormalForm> {
    // the outer connective collects sets, the inner one distributes over it
    let outer_is_or = mode == NormalFormMode::JoinOfMeets;
    let nf = match f {
        Formula::Var(v) => BTreeSet::from([BTreeSet::from([v.clone()])]),
        Formula::And(a, b) | Formula::Or(a, b) => {
            let (x, y) = (normal_form(a, mode)?, normal_form(b, mode)?);
            let is_or = matches!(f, Formula::Or(..));
            if is_or == outer_is_or {
                x.union(&y).cloned().collect()
            } else {
                let mut out = BTreeSet::new();
                for s in &x {
                    for t in &y {
                        out.insert(s.union(t).cloned().collect());
                    }
                }
                out
            }
        }
        other => return Err(Error::UnsupportedConnective(other.compact())),
    };
    Ok(drop_supersets(nf))
}

/// Rebuilds a formula from a normal form, sets and variables in sorted
/// order.
pub fn expand(nf: &NormalForm, mode: NormalFormMode) -> Formula {
    type Bin = fn(Formula, Formula) -> Formula;
    let (inner, outer): (Bin, Bin) = match mode {
        NormalFormMode::JoinOfMeets => (Formula::and, Formula::or),
        NormalFormMode::MeetOfJoins => (Formula::or, Formula::and),
    };
    nf.iter()
        .map(|s| s.iter().map(|v| Formula::var(v)).reduce(inner).expect("nonempty set"))
        .reduce(outer)
        .expect("nonempty normal form")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::LogicStructure;
    use crate::order::tests::{chain, cube, m5};
    use proptest::prelude::*;

    fn p(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn grammar() {
        assert_eq!(p("~x | y"), Formula::var("x").not().or(Formula::var("y")));
        assert_eq!(
            p("x -> y -> z"),
            Formula::var("x").imp(Formula::var("y").imp(Formula::var("z")))
        );
        assert_eq!(p("a & b | c"), Formula::var("a").and(Formula::var("b")).or(Formula::var("c")));
        assert_eq!(
            p("x <-> y <-> z"),
            Formula::var("x").iff(Formula::var("y").iff(Formula::var("z")))
        );
        assert_eq!(p("~~0"), Formula::Const(false).not().not());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert!(matches!(parse("(x & y)'"), Err(Error::SyntaxError { pos: 7, .. })));
        assert!(matches!(parse("x &"), Err(Error::SyntaxError { pos: 3, .. })));
        assert!(matches!(parse("(x"), Err(Error::SyntaxError { pos: 2, .. })));
        assert!(matches!(parse("x - y"), Err(Error::SyntaxError { pos: 2, .. })));
        assert!(matches!(parse("10"), Err(Error::SyntaxError { pos: 0, .. })));
    }

    #[test]
    fn printer_uses_minimal_parentheses() {
        assert_eq!(p("(a & (~a))").compact(), "a&~a");
        assert_eq!(p("(x -> y) -> z").to_string(), "(x -> y) -> z");
        assert_eq!(p("x -> (y -> z)").to_string(), "x -> y -> z");
        assert_eq!(p("a | (b | c)").to_string(), "a | (b | c)");
        assert_eq!(p("~(a & b)").to_string(), "~(a & b)");
    }

    fn gen_formula() -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            prop::sample::select(vec!["x", "y", "z", "w"]).prop_map(Formula::var),
            any::<bool>().prop_map(Formula::Const),
        ];
        leaf.prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::not),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.and(b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.or(b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.imp(b)),
                (inner.clone(), inner).prop_map(|(a, b)| a.iff(b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(f in gen_formula()) {
            prop_assert_eq!(parse(&f.to_string()).unwrap(), f.clone());
            prop_assert_eq!(parse(&f.compact()).unwrap(), f);
        }
    }

    fn luk3() -> LogicStructure {
        LogicStructure::from_labels(chain(3), &["2", "1", "0"]).unwrap()
    }

    #[test]
    fn evaluation_examples() {
        let s = luk3();
        let env: Env = [("x".to_string(), 1)].into();
        assert_eq!(eval(&p("x | ~x"), &s, &ImplicationSemantics::Ortho, &env).unwrap(), 1);
        let g3 = LogicStructure::from_labels(chain(3), &["2", "0", "0"]).unwrap();
        let sem = ImplicationSemantics::residuated(&g3).unwrap();
        assert_eq!(eval(&p("x & ~x"), &g3, &sem, &env).unwrap(), 0);
        assert_eq!(eval(&p("x -> x"), &g3, &sem, &env).unwrap(), 2);
        assert_eq!(
            eval(&p("y"), &g3, &sem, &env).unwrap_err(),
            Error::UnboundVariable("y".into())
        );
    }

    #[test]
    fn default_semantics() {
        let m5s = LogicStructure::from_labels(m5(), &["1", "c", "0", "a", "0"]).unwrap();
        assert_eq!(ImplicationSemantics::default_for(&m5s).unwrap(), ImplicationSemantics::Ortho);
        let bad = LogicStructure::new(m5(), vec![0; 5]).unwrap();
        assert!(matches!(
            ImplicationSemantics::default_for(&bad),
            Err(Error::SemanticsUnavailable(_))
        ));
        assert!(matches!(
            ImplicationSemantics::default_for(&luk3()).unwrap(),
            ImplicationSemantics::Residuated(_)
        ));
    }

    #[test]
    fn de_morgan_on_m5() {
        let s = LogicStructure::from_labels(m5(), &["1", "c", "0", "a", "0"]).unwrap();
        let sem = ImplicationSemantics::Ortho;
        assert!(holds_identity(&s, &sem, &p("~(x|y)"), &p("~x & ~y")).unwrap().holds);
        let v = holds_identity(&s, &sem, &p("~(x&y)"), &p("~x | ~y")).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(w.elements, vec!["a", "b"]);
        assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("1", "c"));
        assert!(holds_identity(&s, &sem, &p("x"), &p("x")).unwrap().holds);
    }

    #[test]
    fn classical_checks() {
        assert!(boolean_tautology(&p("x | ~x")));
        assert!(boolean_tautology(&p("((x->y)->x)->x")));
        assert_eq!(
            boolean_counterexample(&p("x -> y")),
            Some(vec![("x".into(), true), ("y".into(), false)])
        );
    }

    fn sets(v: &[&[&str]]) -> NormalForm {
        v.iter().map(|s| s.iter().map(|x| x.to_string()).collect()).collect()
    }

    #[test]
    fn normal_forms() {
        use NormalFormMode::*;
        assert_eq!(normal_form(&p("x & (y | z)"), JoinOfMeets).unwrap(), sets(&[&["x", "y"], &["x", "z"]]));
        assert_eq!(normal_form(&p("x | x & y"), JoinOfMeets).unwrap(), sets(&[&["x"]]));
        assert_eq!(
            normal_form(&p("(x | y) & (x | z)"), MeetOfJoins).unwrap(),
            sets(&[&["x", "y"], &["x", "z"]])
        );
        assert!(matches!(
            normal_form(&p("x & ~y"), JoinOfMeets),
            Err(Error::UnsupportedConnective(_))
        ));
    }

    #[test]
    fn normal_form_expansion_is_equivalent_on_the_cube() {
        let l = cube(3);
        let s = LogicStructure::new(l, (0..8).map(|m| 7 - m).collect()).unwrap();
        for text in ["x & (y | z)", "(x | y) & (x | z) & w", "x | y & (z | x & w)"] {
            let f = p(text);
            for mode in [NormalFormMode::JoinOfMeets, NormalFormMode::MeetOfJoins] {
                let g = expand(&normal_form(&f, mode).unwrap(), mode);
                assert!(holds_identity(&s, &ImplicationSemantics::Ortho, &f, &g).unwrap().holds);
            }
        }
    }
}
