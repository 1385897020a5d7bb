//! The lattice file format: `{"elements": [..], "covers": [[lo, hi], ..],
//! "negation": [..]}` with `negation` optional.

use super::FiniteLattice;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeDoc {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub negation: Option<Vec<String>>,
}

impl LatticeDoc {
    pub fn from_lattice(l: &FiniteLattice, negation: Option<&[usize]>) -> Self {
        LatticeDoc {
            elements: l.names().to_vec(),
            covers: l
                .covers()
                .into_iter()
                .map(|(a, b)| (l.name(a).to_string(), l.name(b).to_string()))
                .collect(),
            negation: negation.map(|t| t.iter().map(|&i| l.name(i).to_string()).collect()),
        }
    }

    /// Builds the lattice and, if present, the negation table (unchecked
    /// beyond label lookup).
    pub fn build(&self) -> Result<(FiniteLattice, Option<Vec<usize>>)> {
        let mut seen = HashSet::new();
        for (a, b) in &self.covers {
            if !seen.insert((a.as_str(), b.as_str())) {
                return Err(Error::DuplicateCover(a.clone(), b.clone()));
            }
        }
        let l = FiniteLattice::from_covers(&self.elements, &self.covers)?;
        let neg = match &self.negation {
            None => None,
            Some(labels) => {
                if labels.len() != l.len() {
                    return Err(Error::NegationLength {
                        got: labels.len(),
                        want: l.len(),
                    });
                }
                Some(
                    labels
                        .iter()
                        .map(|s| l.index_of(s).ok_or_else(|| Error::UnknownLabel(s.clone())))
                        .collect::<Result<Vec<_>>>()?,
                )
            }
        };
        Ok((l, neg))
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain strings serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::tests::m5;

    #[test]
    fn m5_file() {
        let text = r#"{"elements": ["0","a","b","c","1"],
            "covers": [["0","a"],["0","b"],["0","c"],["a","1"],["b","1"],["c","1"]],
            "negation": ["1","c","0","a","0"]}"#;
        let (l, neg) = LatticeDoc::parse(text).unwrap().build().unwrap();
        assert_eq!(l, m5());
        assert_eq!(neg.unwrap(), vec![4, 3, 0, 1, 0]);
        let back = LatticeDoc::from_lattice(&l, None);
        assert_eq!(back.covers.len(), 6);
        assert_eq!(LatticeDoc::parse(&back.to_json()).unwrap(), back);
    }

    #[test]
    fn rejects_bad_documents() {
        let dup = r#"{"elements":["0","1"],"covers":[["0","1"],["0","1"]]}"#;
        assert_eq!(
            LatticeDoc::parse(dup).unwrap().build().unwrap_err(),
            Error::DuplicateCover("0".into(), "1".into())
        );
        let unknown = r#"{"elements":["0","1"],"covers":[["0","2"]]}"#;
        assert_eq!(
            LatticeDoc::parse(unknown).unwrap().build().unwrap_err(),
            Error::UnknownLabel("2".into())
        );
        let neg = r#"{"elements":["0","1"],"covers":[["0","1"]],"negation":["1","x"]}"#;
        assert_eq!(LatticeDoc::parse(neg).unwrap().build().unwrap_err(), Error::UnknownLabel("x".into()));
        assert!(matches!(LatticeDoc::parse("{\"elements\":[]}"), Err(Error::Json(_))));
    }
}
