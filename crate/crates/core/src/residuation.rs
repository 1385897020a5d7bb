//! Relative pseudocomplements on finite lattices and the three basic t-norms
//! on exact rationals.

use crate::error::{Error, Result};
use crate::logic::LogicStructure;
use crate::order::{property_scan, FiniteLattice};
use crate::rational::Rational;
use crate::report::{scan, Outcome, PropertyReport, Verdict, Witness};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// `a → b` as the greatest `x` with `a ∧ x ≼ b`, or `None` when the set of
/// such `x` has no greatest element.
pub fn relative_pseudocomplement(l: &FiniteLattice, a: usize, b: usize) -> Option<usize> {
    let n = l.len();
    let cands = (0..n).filter(|&x| l.leq(l.meet(a, x), b));
    let sup = l.join_all(cands);
    l.leq(l.meet(a, sup), b).then_some(sup)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResiduumTable {
    pub carrier: Vec<String>,
    /// Row-major: `arrow[a * n + b]` is `a → b`.
    pub arrow: Vec<usize>,
}

impl ResiduumTable {
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.arrow[a * self.carrier.len() + b]
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    /// Rows of labels, for printing and JSON.
    pub fn label_rows(&self) -> Vec<Vec<String>> {
        let n = self.len();
        (0..n)
            .map(|a| (0..n).map(|b| self.carrier[self.get(a, b)].clone()).collect())
            .collect()
    }
}

/// The full arrow table if every pair has a relative pseudocomplement,
/// otherwise the first pair that lacks one.
pub fn residuum_table(l: &FiniteLattice) -> std::result::Result<ResiduumTable, (usize, usize)> {
    let n = l.len();
    let mut arrow = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            arrow.push(relative_pseudocomplement(l, a, b).ok_or((a, b))?);
        }
    }
    Ok(ResiduumTable {
        carrier: l.names().to_vec(),
        arrow,
    })
}

fn le(l: &FiniteLattice, lhs: usize, rhs: usize) -> Outcome {
    if l.leq(lhs, rhs) {
        Outcome::Holds
    } else {
        Outcome::Fails { lhs, rhs }
    }
}

fn then(a: Outcome, b: impl FnOnce() -> Outcome) -> Outcome {
    if a.holds() {
        b()
    } else {
        a
    }
}

/// Checks implicativity and, when it holds, the identities of implicative
/// lattices exhaustively.
pub fn implicative_report(l: &FiniteLattice) -> (PropertyReport, Option<ResiduumTable>) {
    let mut r = PropertyReport::new();
    let t = match residuum_table(l) {
        Ok(t) => t,
        Err((a, b)) => {
            let sup = l.join_all((0..l.len()).filter(|&x| l.leq(l.meet(a, x), b)));
            r.push(Verdict::fail(
                "implicative",
                Witness {
                    elements: vec![l.name(a).into(), l.name(b).into()],
                    identity: "implicative".into(),
                    lhs: l.name(l.meet(a, sup)).into(),
                    rhs: l.name(b).into(),
                },
            ));
            return (r, None);
        }
    };
    r.push(Verdict::pass("implicative"));
    let imp = |a: usize, b: usize| t.get(a, b);
    let (zero, one) = (l.bottom(), l.top());
    let not = |a: usize| imp(a, zero);
    let names = l.names();

    r.push(scan("modus-ponens", names, 2, |x| le(l, l.meet(x[0], imp(x[0], x[1])), x[1])));
    r.push(scan("residuation", names, 3, |x| {
        let (a, b, c) = (x[0], x[1], x[2]);
        if l.leq(l.meet(a, c), b) == l.leq(c, imp(a, b)) {
            Outcome::Holds
        } else {
            Outcome::Fails {
                lhs: l.meet(a, c),
                rhs: b,
            }
        }
    }));
    r.push(scan("qi-1", names, 2, |x| le(l, x[1], imp(x[0], x[1]))));
    r.push(scan("qi-2", names, 3, |x| {
        let (a, b, c) = (x[0], x[1], x[2]);
        let lhs = imp(a, imp(b, c));
        then(Outcome::eq(lhs, imp(l.meet(a, b), c)), || Outcome::eq(lhs, imp(b, imp(a, c))))
    }));
    r.push(scan("qi-3", names, 3, |x| {
        let (a, b, c) = (x[0], x[1], x[2]);
        le(l, imp(a, imp(b, c)), imp(imp(a, b), imp(a, c)))
    }));
    r.push(scan("qi-4", names, 3, |x| {
        let (a, b, c) = (x[0], x[1], x[2]);
        Outcome::eq(imp(a, l.meet(b, c)), l.meet(imp(a, b), imp(a, c)))
    }));
    r.push(scan("qi-5", names, 1, |x| Outcome::eq(x[0], imp(one, x[0]))));
    r.push(scan("qi-6", names, 2, |x| {
        let (a, b) = (x[0], x[1]);
        if l.leq(a, b) == (imp(a, b) == one) {
            Outcome::Holds
        } else {
            Outcome::Fails { lhs: a, rhs: b }
        }
    }));
    r.push(scan("qi-7", names, 2, |x| {
        let (a, b) = (x[0], x[1]);
        then(le(l, l.join(not(a), b), imp(a, b)), || {
            le(l, l.meet(l.join(not(a), a), imp(a, b)), l.join(not(a), b))
        })
    }));
    r.push(scan("contraction", names, 2, |x| {
        Outcome::eq(imp(x[0], imp(x[0], x[1])), imp(x[0], x[1]))
    }));
    r.push(scan("join-antitone", names, 3, |x| {
        let (a, b, c) = (x[0], x[1], x[2]);
        Outcome::eq(imp(l.join(a, b), c), l.meet(imp(a, c), imp(b, c)))
    }));
    let mut dist = property_scan(l).get("distributive").cloned().expect("scan reports distributivity");
    dist.property = "distributive".into();
    r.push(dist);
    (r, Some(t))
}

/// The pseudocomplement negation `a ↦ a → 0` of an implicative lattice.
pub fn pseudocomplement_structure(l: &FiniteLattice) -> Result<LogicStructure> {
    let t = residuum_table(l).map_err(|(a, b)| Error::NotImplicative(format!("({}, {})", l.name(a), l.name(b))))?;
    let table = (0..l.len()).map(|a| t.get(a, l.bottom())).collect();
    LogicStructure::new(l.clone(), table)
}

fn require_implicative(l: &FiniteLattice) -> Result<ResiduumTable> {
    residuum_table(l).map_err(|(a, b)| Error::NotImplicative(format!("({}, {})", l.name(a), l.name(b))))
}

/// Stability, tertium non datur, Peirce's law and `1 = a ∨ (a → b)`, plus
/// an `agreement` entry that holds when the four verdicts coincide.
pub fn boolean_equivalence_report(l: &FiniteLattice) -> Result<PropertyReport> {
    let t = require_implicative(l)?;
    let imp = |a: usize, b: usize| t.get(a, b);
    let (zero, one) = (l.bottom(), l.top());
    let not = |a: usize| imp(a, zero);
    let names = l.names();
    let mut r = PropertyReport::new();
    r.push(scan("stability", names, 1, |x| Outcome::eq(x[0], not(not(x[0])))));
    r.push(scan("tertium", names, 1, |x| Outcome::eq(one, l.join(x[0], not(x[0])))));
    r.push(scan("peirce", names, 2, |x| Outcome::eq(x[0], imp(imp(x[0], x[1]), x[0]))));
    r.push(scan("a-or-a-implies-b", names, 2, |x| {
        Outcome::eq(one, l.join(x[0], imp(x[0], x[1])))
    }));
    let first = r.verdicts[0].holds;
    if r.verdicts.iter().all(|v| v.holds == first) {
        r.push(Verdict::pass("agreement"));
    } else {
        r.push(Verdict {
            property: "agreement".into(),
            holds: false,
            witness: None,
        });
    }
    Ok(r)
}

/// For every `y`, the fixed points of `x ↦ x → y`.
pub fn curry_scan(l: &FiniteLattice) -> Result<Vec<(usize, Vec<usize>)>> {
    let t = require_implicative(l)?;
    let n = l.len();
    Ok((0..n)
        .map(|y| (y, (0..n).filter(|&x| t.get(x, y) == x).collect()))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TNormKind {
    Lukasiewicz,
    Goedel,
    Product,
}

impl TNormKind {
    pub const ALL: [TNormKind; 3] = [TNormKind::Lukasiewicz, TNormKind::Goedel, TNormKind::Product];
}

impl fmt::Display for TNormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TNormKind::Lukasiewicz => "lukasiewicz",
            TNormKind::Goedel => "goedel",
            TNormKind::Product => "product",
        })
    }
}

impl FromStr for TNormKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "l" | "luk" | "lukasiewicz" => Ok(TNormKind::Lukasiewicz),
            "g" | "goedel" | "godel" | "gödel" => Ok(TNormKind::Goedel),
            "p" | "prod" | "product" => Ok(TNormKind::Product),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

fn unit(x: Rational) -> Result<Rational> {
    if x.in_unit_interval() {
        Ok(x)
    } else {
        Err(Error::OutOfRange(x.to_string()))
    }
}

pub fn tnorm_eval(kind: TNormKind, x: Rational, y: Rational) -> Result<Rational> {
    let (x, y) = (unit(x)?, unit(y)?);
    Ok(match kind {
        TNormKind::Lukasiewicz => (x + y - Rational::one()).max(Rational::zero()),
        TNormKind::Goedel => x.min(y),
        TNormKind::Product => x * y,
    })
}

/// Closed-form residuum `x → y = sup{z : x * z ≤ y}`.
pub fn tnorm_residuum(kind: TNormKind, x: Rational, y: Rational) -> Result<Rational> {
    let (x, y) = (unit(x)?, unit(y)?);
    Ok(match kind {
        TNormKind::Lukasiewicz => (Rational::one() - x + y).min(Rational::one()),
        TNormKind::Goedel if x <= y => Rational::one(),
        TNormKind::Goedel => y,
        TNormKind::Product if x <= y => Rational::one(),
        TNormKind::Product => y / x,
    })
}

/// Denominator of the grid the residuum oracle searches for `(x, y)`.
pub fn oracle_grid(x: Rational, y: Rational) -> i64 {
    Rational::lcm_denom(Rational::lcm_denom(x.denom(), y.denom()), 48)
}

/// `max{k/d : x * (k/d) ≤ y}` over the grid `d = lcm(den x, den y, 48)`,
/// using only the t-norm itself.
///
/// The admissible grid points form an initial segment because t-norms are
/// monotone, so the boundary is found by bisection.
pub fn residuum_grid_sup(kind: TNormKind, x: Rational, y: Rational) -> Result<Rational> {
    let d = oracle_grid(x, y);
    let ok = |k: i64| -> Result<bool> { Ok(tnorm_eval(kind, x, Rational::new(k, d))? <= y) };
    // z = 0 always qualifies: x * 0 = 0 ≤ y
    let (mut lo, mut hi) = (0i64, d);
    if ok(hi)? {
        return Ok(Rational::one());
    }
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if ok(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Rational::new(lo, d))
}

/// A finite t-norm logic on `{0, 1/n, …, 1}`.
#[derive(Debug, Clone)]
pub struct TNormLogic {
    pub kind: TNormKind,
    pub values: Vec<Rational>,
    pub structure: LogicStructure,
    /// Row-major fusion table over element indices.
    pub fusion: Vec<usize>,
    pub residuum: ResiduumTable,
}

impl TNormLogic {
    pub fn fuse(&self, a: usize, b: usize) -> usize {
        self.fusion[a * self.values.len() + b]
    }

    pub fn fusion_rows(&self) -> Vec<Vec<String>> {
        let n = self.values.len();
        (0..n)
            .map(|a| (0..n).map(|b| self.structure.name(self.fuse(a, b)).to_string()).collect())
            .collect()
    }
}

pub fn chain_of_values(n: usize) -> (FiniteLattice, Vec<Rational>) {
    let values: Vec<Rational> = (0..=n).map(|k| Rational::new(k as i64, n as i64)).collect();
    let names = values.iter().map(|v| v.short()).collect();
    let l = FiniteLattice::from_fn(names, |i, j| i <= j).expect("a chain is a lattice");
    (l, values)
}

pub fn build_tnorm_logic(kind: TNormKind, n: usize) -> Result<TNormLogic> {
    if kind == TNormKind::Product {
        return Err(Error::ProductNotClosed);
    }
    if n == 0 {
        return Err(Error::BadParams {
            name: kind.to_string(),
            reason: "n must be at least 1".into(),
        });
    }
    let (l, values) = chain_of_values(n);
    let m = values.len();
    let index = |v: Rational| -> Result<usize> {
        values
            .iter()
            .position(|&w| w == v)
            .ok_or_else(|| Error::OutOfRange(format!("{v} is not on the grid")))
    };
    let mut fusion = Vec::with_capacity(m * m);
    let mut arrow = Vec::with_capacity(m * m);
    for &a in &values {
        for &b in &values {
            fusion.push(index(tnorm_eval(kind, a, b)?)?);
            arrow.push(index(tnorm_residuum(kind, a, b)?)?);
        }
    }
    let residuum = ResiduumTable {
        carrier: l.names().to_vec(),
        arrow,
    };
    let neg = (0..m).map(|a| residuum.get(a, 0)).collect();
    let structure = LogicStructure::new(l, neg)?;
    Ok(TNormLogic {
        kind,
        values,
        structure,
        fusion,
        residuum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::tests::{chain, cube, m5};
    use proptest::prelude::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn goedel_three_arrow() {
        let l = chain(3);
        assert_eq!(relative_pseudocomplement(&l, 1, 0), Some(0));
        assert_eq!(relative_pseudocomplement(&l, 1, 2), Some(2));
    }

    #[test]
    fn m5_a_to_zero_is_missing() {
        let l = m5();
        assert_eq!(relative_pseudocomplement(&l, l.el("a"), l.bottom()), None);
        let (rep, table) = implicative_report(&l);
        assert!(table.is_none());
        assert_eq!(rep.witness("implicative").unwrap().elements, vec!["a", "0"]);
    }

    #[test]
    fn cube_arrow_is_material() {
        let l = cube(3);
        let (rep, t) = implicative_report(&l);
        assert!(rep.all_hold(), "{rep}");
        let t = t.unwrap();
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(t.get(a, b), (7 - a) | b);
            }
        }
        assert!(boolean_equivalence_report(&l).unwrap().all_hold());
    }

    #[test]
    fn goedel_three_fails_all_four() {
        let r = boolean_equivalence_report(&chain(3)).unwrap();
        for p in ["stability", "tertium", "peirce", "a-or-a-implies-b"] {
            assert!(!r.holds(p), "{p}");
        }
        assert!(r.holds("agreement"));
        assert_eq!(r.witness("stability").unwrap().elements, vec!["1"]);
    }

    #[test]
    fn curry_fixed_points() {
        for l in [chain(3), cube(2)] {
            for (y, fixed) in curry_scan(&l).unwrap() {
                if y == l.top() {
                    assert_eq!(fixed, vec![l.top()]);
                } else {
                    assert!(fixed.is_empty());
                }
            }
        }
        assert!(matches!(curry_scan(&m5()), Err(Error::NotImplicative(_))));
    }

    #[test]
    fn tnorm_examples() {
        use TNormKind::*;
        assert_eq!(tnorm_eval(Lukasiewicz, r(1, 2), r(1, 2)).unwrap(), r(0, 1));
        assert_eq!(tnorm_eval(Product, r(1, 3), r(1, 2)).unwrap(), r(1, 6));
        assert_eq!(tnorm_residuum(Lukasiewicz, r(1, 2), r(0, 1)).unwrap(), r(1, 2));
        assert_eq!(tnorm_residuum(Product, r(3, 4), r(1, 2)).unwrap(), r(2, 3));
        assert_eq!(residuum_grid_sup(Product, r(3, 4), r(1, 2)).unwrap(), r(2, 3));
        assert!(matches!(tnorm_eval(Goedel, r(3, 2), r(0, 1)), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn derived_negations() {
        use TNormKind::*;
        for k in 0..=12 {
            let x = r(k, 12);
            assert_eq!(tnorm_residuum(Lukasiewicz, x, Rational::zero()).unwrap(), Rational::one() - x);
            let delta = if x.is_zero() { Rational::one() } else { Rational::zero() };
            assert_eq!(tnorm_residuum(Goedel, x, Rational::zero()).unwrap(), delta);
        }
    }

    #[test]
    fn bisection_matches_linear_scan() {
        for kind in TNormKind::ALL {
            for (p, q) in [(1, 3), (5, 7), (2, 5), (1, 1), (0, 1)] {
                for (s, t) in [(1, 4), (3, 5), (0, 1), (6, 7)] {
                    let (x, y) = (r(p, q), r(s, t));
                    let d = oracle_grid(x, y);
                    let linear = (0..=d)
                        .map(|k| r(k, d))
                        .filter(|&z| tnorm_eval(kind, x, z).unwrap() <= y)
                        .max()
                        .unwrap();
                    assert_eq!(residuum_grid_sup(kind, x, y).unwrap(), linear);
                }
            }
        }
    }

    #[test]
    fn luk_two_is_boolean() {
        let t = build_tnorm_logic(TNormKind::Lukasiewicz, 1).unwrap();
        assert_eq!(crate::logic::classify(&t.structure).label, crate::logic::LogicLabel::Boolean);
        assert_eq!(build_tnorm_logic(TNormKind::Product, 3).unwrap_err(), Error::ProductNotClosed);
    }

    #[test]
    fn luk_three_fusion() {
        let t = build_tnorm_logic(TNormKind::Lukasiewicz, 2).unwrap();
        assert_eq!(
            t.fusion_rows(),
            vec![vec!["0", "0", "0"], vec!["0", "0", "1/2"], vec!["0", "1/2", "1"]]
        );
        assert_eq!(
            t.residuum.label_rows(),
            vec![vec!["1", "1", "1"], vec!["1/2", "1", "1"], vec!["0", "1/2", "1"]]
        );
    }

    fn unit_rational() -> impl Strategy<Value = Rational> {
        (1i64..=24).prop_flat_map(|d| (0..=d).prop_map(move |k| Rational::new(k, d)))
    }

    proptest! {
        #[test]
        fn tnorm_axioms(x in unit_rational(), y in unit_rational(), z in unit_rational()) {
            for kind in TNormKind::ALL {
                let t = |a, b| tnorm_eval(kind, a, b).unwrap();
                prop_assert_eq!(t(x, y), t(y, x));
                prop_assert_eq!(t(x, t(y, z)), t(t(x, y), z));
                prop_assert_eq!(t(Rational::one(), x), x);
                if y <= z {
                    prop_assert!(t(x, y) <= t(x, z));
                }
            }
        }

        #[test]
        fn residuation_law(x in unit_rational(), y in unit_rational(), z in unit_rational()) {
            for kind in TNormKind::ALL {
                let imp = tnorm_residuum(kind, x, y).unwrap();
                prop_assert_eq!(tnorm_eval(kind, x, z).unwrap() <= y, z <= imp);
            }
        }
    }
}
