//! Axiom-by-axiom verdicts with counterexample witnesses.

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};
use std::fmt;

/// A counterexample to a named law: the elements at which it fails and the
/// two sides that came out different (or out of order, for inequalities).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub elements: Vec<String>,
    pub identity: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails at ({}): {} vs {}",
            self.identity,
            self.elements.join(", "),
            self.lhs,
            self.rhs
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub property: String,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn pass(property: &str) -> Self {
        Verdict {
            property: property.to_string(),
            holds: true,
            witness: None,
        }
    }

    pub fn fail(property: &str, witness: Witness) -> Self {
        Verdict {
            property: property.to_string(),
            holds: false,
            witness: Some(witness),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None if self.holds => write!(f, "{:<36} holds", self.property),
            None => write!(f, "{:<36} fails", self.property),
            Some(w) => write!(
                f,
                "{:<36} fails at ({}): {} != {}",
                self.property,
                w.elements.join(", "),
                w.lhs,
                w.rhs
            ),
        }
    }
}

struct LabelList<'a>(&'a [String]);

impl Serialize for LabelList<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for l in self.0 {
            seq.serialize_element(l)?;
        }
        seq.end()
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("property", &self.property)?;
        map.serialize_entry("holds", &self.holds)?;
        match &self.witness {
            Some(w) => map.serialize_entry("witness", &LabelList(&w.elements))?,
            None => map.serialize_entry("witness", &Option::<()>::None)?,
        }
        map.end()
    }
}

/// An ordered list of verdicts. Serializes as a JSON array of
/// `{"property", "holds", "witness"}` objects.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PropertyReport {
    pub verdicts: Vec<Verdict>,
}

impl PropertyReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, v: Verdict) {
        self.verdicts.push(v);
    }

    pub fn get(&self, property: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.property == property)
    }

    /// Panics if the property is not part of this report.
    pub fn holds(&self, property: &str) -> bool {
        self.get(property)
            .unwrap_or_else(|| panic!("no verdict for `{property}`"))
            .holds
    }

    pub fn witness(&self, property: &str) -> Option<&Witness> {
        self.get(property).and_then(|v| v.witness.as_ref())
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn extend(&mut self, other: PropertyReport) {
        self.verdicts.extend(other.verdicts);
    }

    pub fn iter(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter()
    }
}

impl Serialize for PropertyReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.verdicts.serialize(s)
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.verdicts {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Result of checking one law at one tuple of elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails { lhs: usize, rhs: usize },
}

impl Outcome {
    pub fn eq(lhs: usize, rhs: usize) -> Self {
        if lhs == rhs {
            Outcome::Holds
        } else {
            Outcome::Fails { lhs, rhs }
        }
    }

    pub fn holds(self) -> bool {
        matches!(self, Outcome::Holds)
    }
}

/// Visits all `arity`-tuples over `0..n` in lexicographic order and returns
/// the first one where `check` fails.
pub(crate) fn first_failure<F>(n: usize, arity: usize, mut check: F) -> Option<(Vec<usize>, usize, usize)>
where
    F: FnMut(&[usize]) -> Outcome,
{
    if n == 0 && arity > 0 {
        return None;
    }
    let mut t = vec![0usize; arity];
    loop {
        if let Outcome::Fails { lhs, rhs } = check(&t) {
            return Some((t, lhs, rhs));
        }
        // odometer increment, last position fastest
        let mut pos = arity;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            t[pos] += 1;
            if t[pos] < n {
                break;
            }
            t[pos] = 0;
        }
    }
}

/// Runs `check` over all tuples and turns the first failure into a verdict
/// with labelled witness.
pub(crate) fn scan<F>(property: &str, labels: &[String], arity: usize, check: F) -> Verdict
where
    F: FnMut(&[usize]) -> Outcome,
{
    match first_failure(labels.len(), arity, check) {
        None => Verdict::pass(property),
        Some((t, lhs, rhs)) => Verdict::fail(
            property,
            Witness {
                elements: t.iter().map(|&i| labels[i].clone()).collect(),
                identity: property.to_string(),
                lhs: labels[lhs].clone(),
                rhs: labels[rhs].clone(),
            },
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_is_lexicographic() {
        let hit = first_failure(4, 2, |t| {
            if t[0] + t[1] == 3 {
                Outcome::Fails { lhs: t[0], rhs: t[1] }
            } else {
                Outcome::Holds
            }
        });
        assert_eq!(hit, Some((vec![0, 3], 0, 3)));
    }

    #[test]
    fn nullary_check_runs_once() {
        let mut calls = 0;
        assert!(first_failure(5, 0, |_| {
            calls += 1;
            Outcome::Holds
        })
        .is_none());
        assert_eq!(calls, 1);
    }

    #[test]
    fn verdict_json_shape() {
        let v = Verdict::fail(
            "conjunctive-de-morgan",
            Witness {
                elements: vec!["a".into(), "b".into()],
                identity: "conjunctive-de-morgan".into(),
                lhs: "1".into(),
                rhs: "c".into(),
            },
        );
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(
            json,
            r#"{"property":"conjunctive-de-morgan","holds":false,"witness":["a","b"]}"#
        );
        let ok = serde_json::to_string(&Verdict::pass("involutive")).unwrap();
        assert_eq!(ok, r#"{"property":"involutive","holds":true,"witness":null}"#);
    }
}
