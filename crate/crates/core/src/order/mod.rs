//! Finite posets and lattices stored as dense tables.
//!
//! Elements are identified by position. Labels are carried along for
//! printing and never consulted by the algorithms.

mod combine;
mod embed;
mod json;
mod scan;

pub use combine::{direct_product, dual, generated_sublattice, horizontal_sum};
pub use json::LatticeDoc;
pub use embed::{find_forbidden_sublattice, isomorphism, Pattern, DEFAULT_SEARCH_BUDGET};
pub use scan::{lattice_laws, property_scan, LatticeLaw};

use crate::error::{Error, Result};
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    names: Vec<String>,
    leq: Vec<bool>,
}

fn check_labels(names: &[String]) -> Result<HashMap<&str, usize>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, n) in names.iter().enumerate() {
        if index.insert(n.as_str(), i).is_some() {
            return Err(Error::DuplicateLabel(n.clone()));
        }
    }
    Ok(index)
}

impl FinitePoset {
    /// Builds the reflexive-transitive closure of a cover relation given by
    /// labels.
    pub fn from_covers<S: AsRef<str>>(names: &[S], covers: &[(S, S)]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let index = check_labels(&names)?;
        let look = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::UnknownLabel(s.to_string()))
        };
        let mut edges = Vec::with_capacity(covers.len());
        for (lo, hi) in covers {
            edges.push((look(lo.as_ref())?, look(hi.as_ref())?));
        }
        Self::from_cover_indices(names, &edges)
    }

    pub fn from_cover_indices(names: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        check_labels(&names)?;
        let n = names.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(lo, hi) in covers {
            if lo == hi {
                return Err(Error::CycleDetected(names[lo].clone(), names[hi].clone()));
            }
            leq[lo * n + hi] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if leq[i * n + j] && leq[j * n + i] {
                    return Err(Error::CycleDetected(names[i].clone(), names[j].clone()));
                }
            }
        }
        Ok(FinitePoset { names, leq })
    }

    /// Takes an explicit relation (row-major, `leq[i * n + j]` for i ≼ j) and
    /// verifies reflexivity, antisymmetry and transitivity.
    pub fn from_relation(names: Vec<String>, leq: Vec<bool>) -> Result<Self> {
        check_labels(&names)?;
        let n = names.len();
        if leq.len() != n * n {
            return Err(Error::NotAPartialOrder(format!(
                "relation has {} entries for {} elements",
                leq.len(),
                n
            )));
        }
        for i in 0..n {
            if !leq[i * n + i] {
                return Err(Error::NotAPartialOrder(format!("{} is not ≼ itself", names[i])));
            }
            for j in 0..n {
                if i != j && leq[i * n + j] && leq[j * n + i] {
                    return Err(Error::CycleDetected(names[i].clone(), names[j].clone()));
                }
                if !leq[i * n + j] {
                    continue;
                }
                for k in 0..n {
                    if leq[j * n + k] && !leq[i * n + k] {
                        return Err(Error::NotAPartialOrder(format!(
                            "{} ≼ {} ≼ {} but not {} ≼ {}",
                            names[i], names[j], names[k], names[i], names[k]
                        )));
                    }
                }
            }
        }
        Ok(FinitePoset { names, leq })
    }

    /// Builds a poset from an order predicate on `0..names.len()`.
    pub fn from_fn(names: Vec<String>, f: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = names.len();
        let leq = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self::from_relation(names, leq)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.names.iter().position(|n| n == label)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn relation(&self) -> &[bool] {
        &self.leq
    }

    /// Covering pairs (lower, upper) in lexicographic order: the transitive
    /// reduction of the order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Length of the longest chain from a minimal element up to `i`.
    pub fn ranks(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (0..n).filter(|&k| self.leq(k, i)).count());
        let mut rank = vec![0usize; n];
        for &j in &order {
            for &i in &order {
                if self.lt(i, j) {
                    rank[j] = rank[j].max(rank[i] + 1);
                }
            }
        }
        rank
    }

    pub fn with_names(&self, names: Vec<String>) -> Result<Self> {
        assert_eq!(names.len(), self.len());
        check_labels(&names)?;
        Ok(FinitePoset {
            names,
            leq: self.leq.clone(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    poset: FinitePoset,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Fills the meet and join tables, failing on the lexicographically first
    /// pair that lacks an infimum or supremum.
    pub fn from_poset(poset: FinitePoset) -> Result<Self> {
        let n = poset.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let down: Vec<usize> = (0..n).map(|i| (0..n).filter(|&k| poset.leq(k, i)).count()).collect();
        let up: Vec<usize> = (0..n).map(|i| (0..n).filter(|&k| poset.leq(i, k)).count()).collect();
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in x..n {
                let m = Self::extremal_bound(&poset, &down, x, y, true);
                let j = Self::extremal_bound(&poset, &up, x, y, false);
                let (m, j) = match (m, j) {
                    (Some(m), Some(j)) => (m, j),
                    (None, _) => {
                        return Err(Error::NotALattice {
                            x: poset.name(x).to_string(),
                            y: poset.name(y).to_string(),
                            missing: "meet",
                        })
                    }
                    (_, None) => {
                        return Err(Error::NotALattice {
                            x: poset.name(x).to_string(),
                            y: poset.name(y).to_string(),
                            missing: "join",
                        })
                    }
                };
                meet[x * n + y] = m;
                meet[y * n + x] = m;
                join[x * n + y] = j;
                join[y * n + x] = j;
            }
        }
        let bottom = (0..n).find(|&b| (0..n).all(|x| poset.leq(b, x)));
        let top = (0..n).find(|&t| (0..n).all(|x| poset.leq(x, t)));
        // pairwise meets and joins exist, so the whole finite set has bounds
        let (bottom, top) = (bottom.expect("finite lattice has a bottom"), top.expect("finite lattice has a top"));
        Ok(FiniteLattice {
            poset,
            meet,
            join,
            bottom,
            top,
        })
    }

    /// Greatest lower bound (`lower = true`) or least upper bound of {x, y}.
    /// The candidate is the bound with the largest down-set (resp. up-set);
    /// it is the answer iff every other bound lies on the right side of it.
    fn extremal_bound(p: &FinitePoset, count: &[usize], x: usize, y: usize, lower: bool) -> Option<usize> {
        let n = p.len();
        let is_bound = |k: usize| {
            if lower {
                p.leq(k, x) && p.leq(k, y)
            } else {
                p.leq(x, k) && p.leq(y, k)
            }
        };
        let best = (0..n).filter(|&k| is_bound(k)).max_by_key(|&k| (count[k], usize::MAX - k))?;
        let ok = (0..n)
            .filter(|&k| is_bound(k))
            .all(|k| if lower { p.leq(k, best) } else { p.leq(best, k) });
        ok.then_some(best)
    }

    pub fn from_covers<S: AsRef<str>>(names: &[S], covers: &[(S, S)]) -> Result<Self> {
        Self::from_poset(FinitePoset::from_covers(names, covers)?)
    }

    /// Builds a lattice from an order predicate.
    pub fn from_fn(names: Vec<String>, f: impl Fn(usize, usize) -> bool) -> Result<Self> {
        Self::from_poset(FinitePoset::from_fn(names, f)?)
    }

    pub(crate) fn from_parts(poset: FinitePoset, meet: Vec<usize>, join: Vec<usize>, bottom: usize, top: usize) -> Self {
        FiniteLattice {
            poset,
            meet,
            join,
            bottom,
            top,
        }
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn names(&self) -> &[String] {
        self.poset.names()
    }

    pub fn name(&self, i: usize) -> &str {
        self.poset.name(i)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.poset.index_of(label)
    }

    /// Like `index_of` but panics with the label on a miss; for fixtures.
    pub fn el(&self, label: &str) -> usize {
        self.index_of(label)
            .unwrap_or_else(|| panic!("no element `{label}`"))
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.poset.leq(x, y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.poset.lt(x, y)
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y]
    }

    pub fn meet_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.top, |a, b| self.meet(a, b))
    }

    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bottom, |a, b| self.join(a, b))
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn meet_table(&self) -> &[usize] {
        &self.meet
    }

    pub fn join_table(&self) -> &[usize] {
        &self.join
    }

    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.poset.covers()
    }

    pub fn atoms(&self) -> Vec<usize> {
        let (n, b) = (self.len(), self.bottom);
        (0..n)
            .filter(|&a| self.lt(b, a) && !(0..n).any(|k| self.lt(b, k) && self.lt(k, a)))
            .collect()
    }

    pub fn relabel(&self, names: Vec<String>) -> Result<Self> {
        Ok(FiniteLattice {
            poset: self.poset.with_names(names)?,
            ..self.clone()
        })
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn m5() -> FiniteLattice {
        FiniteLattice::from_covers(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        )
        .unwrap()
    }

    pub fn n5() -> FiniteLattice {
        FiniteLattice::from_covers(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
        )
        .unwrap()
    }

    pub fn chain(k: usize) -> FiniteLattice {
        let names: Vec<String> = (0..k).map(|i| i.to_string()).collect();
        FiniteLattice::from_fn(names, |i, j| i <= j).unwrap()
    }

    pub fn cube(n: u32) -> FiniteLattice {
        let names: Vec<String> = (0..1usize << n).map(|m| format!("{:0w$b}", m, w = n as usize)).collect();
        FiniteLattice::from_fn(names, |i, j| i & j == i).unwrap()
    }

    fn p6() -> FinitePoset {
        FinitePoset::from_covers(
            &["0", "a", "b", "c", "d", "1"],
            &[
                ("0", "a"),
                ("0", "b"),
                ("a", "c"),
                ("b", "c"),
                ("a", "d"),
                ("b", "d"),
                ("c", "1"),
                ("d", "1"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn m5_meets_and_joins() {
        let l = m5();
        let (a, b) = (l.el("a"), l.el("b"));
        assert_eq!(l.meet(a, b), l.bottom());
        assert_eq!(l.join(a, b), l.top());
        assert_eq!(l.name(l.bottom()), "0");
        assert_eq!(l.covers().len(), 6);
    }

    #[test]
    fn singleton_is_reflexive_only() {
        let p = FinitePoset::from_covers::<&str>(&["x"], &[]).unwrap();
        assert_eq!(p.relation(), &[true]);
        let l = FiniteLattice::from_poset(p).unwrap();
        assert_eq!(l.bottom(), l.top());
    }

    #[test]
    fn p6_is_a_poset_but_not_a_lattice() {
        let err = FiniteLattice::from_poset(p6()).unwrap_err();
        assert_eq!(
            err,
            Error::NotALattice {
                x: "a".into(),
                y: "b".into(),
                missing: "join"
            }
        );
    }

    #[test]
    fn chain_meet_is_min() {
        let l = chain(3);
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(l.meet(x, y), x.min(y));
                assert_eq!(l.join(x, y), x.max(y));
            }
        }
    }

    #[test]
    fn cycles_and_duplicates_rejected() {
        let e = FinitePoset::from_covers(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]).unwrap_err();
        assert!(matches!(e, Error::CycleDetected(..)));
        let e = FinitePoset::from_covers::<&str>(&["a", "a"], &[]).unwrap_err();
        assert_eq!(e, Error::DuplicateLabel("a".into()));
        let e = FinitePoset::from_covers(&["a"], &[("a", "z")]).unwrap_err();
        assert_eq!(e, Error::UnknownLabel("z".into()));
    }

    #[test]
    fn covers_drop_transitive_edges() {
        let p = FinitePoset::from_covers(&["0", "m", "1"], &[("0", "m"), ("m", "1"), ("0", "1")]).unwrap();
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(p.ranks(), vec![0, 1, 2]);
    }

    #[test]
    fn from_relation_rejects_intransitive() {
        let names = vec!["a".to_string(), "b".into(), "c".into()];
        let rel = vec![true, true, false, false, true, true, false, false, true];
        assert!(matches!(
            FinitePoset::from_relation(names, rel),
            Err(Error::NotAPartialOrder(_))
        ));
    }

    #[test]
    fn bounds_via_brute_force() {
        // independent greatest-lower-bound scan on N5
        let l = n5();
        let n = l.len();
        for x in 0..n {
            for y in 0..n {
                let lower: Vec<usize> = (0..n).filter(|&k| l.leq(k, x) && l.leq(k, y)).collect();
                let glb: Vec<usize> = lower
                    .iter()
                    .copied()
                    .filter(|&g| lower.iter().all(|&k| l.leq(k, g)))
                    .collect();
                assert_eq!(glb, vec![l.meet(x, y)]);
            }
        }
    }
}
