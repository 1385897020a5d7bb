//! Compatibility in orthomodular logics, subspace lattices over GF(2),
//! the order of 2×2 effects and the MacNeille completion of posets with an
//! involution.

use crate::error::{Error, Result};
use crate::logic::{law_report, negation_axiom_report, LogicStructure};
use crate::order::{FiniteLattice, FinitePoset};
use crate::rational::Rational;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

fn require_quantum(s: &LogicStructure) -> Result<()> {
    if let Some(v) = negation_axiom_report(s).iter().find(|v| !v.holds) {
        return Err(Error::NotOrthomodular(format!("{} fails", v.property)));
    }
    let laws = law_report(s);
    for p in ["non-contradiction", "orthomodular"] {
        if let Some(w) = laws.witness(p) {
            return Err(Error::NotOrthomodular(w.to_string()));
        }
    }
    Ok(())
}

/// `x = (x∧y) ∨ (x∧y′)` and `y = (y∧x) ∨ (y∧x′)`.
pub fn is_compatible(s: &LogicStructure, x: usize, y: usize) -> Result<bool> {
    require_quantum(s)?;
    Ok(compatible_unchecked(s, x, y))
}

fn compatible_unchecked(s: &LogicStructure, x: usize, y: usize) -> bool {
    let l = s.lattice();
    x == l.join(l.meet(x, y), l.meet(x, s.neg(y))) && y == l.join(l.meet(y, x), l.meet(y, s.neg(x)))
}

/// `(u, v, w) = (x∧y′, x∧y, x′∧y)` when `x` and `y` are compatible.
pub fn compatible_decomposition(s: &LogicStructure, x: usize, y: usize) -> Result<Option<(usize, usize, usize)>> {
    require_quantum(s)?;
    if !compatible_unchecked(s, x, y) {
        return Ok(None);
    }
    let l = s.lattice();
    Ok(Some((l.meet(x, s.neg(y)), l.meet(x, y), l.meet(s.neg(x), y))))
}

/// `x ∧ y = 0`, `x ≼ y′` and `y ≼ x′`.
pub fn orthogonal(s: &LogicStructure, x: usize, y: usize) -> bool {
    let l = s.lattice();
    l.meet(x, y) == l.bottom() && l.leq(x, s.neg(y)) && l.leq(y, s.neg(x))
}

/// A subspace of GF(2)ⁿ; vectors are bit patterns, most significant bit
/// first in labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GF2Subspace {
    pub n: u32,
    /// Reduced row echelon basis, leading bits descending.
    pub basis: Vec<u32>,
    /// Membership bitmask over all 2ⁿ vectors.
    pub members: u32,
}

fn dot(a: u32, b: u32) -> bool {
    (a & b).count_ones() % 2 == 1
}

impl GF2Subspace {
    fn from_members(n: u32, members: u32) -> Self {
        let mut rows: Vec<u32> = (1..1u32 << n).filter(|&v| members >> v & 1 == 1).collect();
        // Gaussian elimination on the member list
        let mut basis: Vec<u32> = Vec::new();
        for bit in (0..n).rev() {
            let Some(pos) = rows.iter().position(|&r| r >> bit & 1 == 1 && r < 1 << (bit + 1)) else {
                continue;
            };
            let pivot = rows[pos];
            for b in basis.iter_mut() {
                if *b >> bit & 1 == 1 {
                    *b ^= pivot;
                }
            }
            basis.push(pivot);
            rows = rows.into_iter().map(|r| if r >> bit & 1 == 1 { r ^ pivot } else { r }).collect();
        }
        GF2Subspace { n, basis, members }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.members >> v & 1 == 1
    }

    pub fn orthogonal_complement(&self) -> Self {
        let members = (0..1u32 << self.n)
            .filter(|&w| (0..1u32 << self.n).all(|v| !self.contains(v) || !dot(v, w)))
            .fold(0u32, |m, w| m | 1 << w);
        Self::from_members(self.n, members)
    }

    pub fn label(&self) -> String {
        if self.basis.is_empty() {
            return "0".into();
        }
        if self.dim() == self.n as usize {
            return "1".into();
        }
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|b| format!("{:0w$b}", b, w = self.n as usize))
            .collect();
        format!("<{}>", rows.join(","))
    }
}

fn span_with(n: u32, members: u32, v: u32) -> u32 {
    let mut out = members;
    for u in 0..1u32 << n {
        if members >> u & 1 == 1 {
            out |= 1 << (u ^ v);
        }
    }
    out
}

/// All subspaces of GF(2)ⁿ ordered by dimension then by label, with
/// inclusion as order and orthogonal complement as negation.
pub fn gf2_subspaces(n: usize) -> Result<Vec<GF2Subspace>> {
    if !(1..=4).contains(&n) {
        return Err(Error::DimensionTooLarge(n));
    }
    let n = n as u32;
    let mut seen: BTreeSet<u32> = BTreeSet::from([1u32]);
    let mut frontier = vec![1u32];
    while let Some(m) = frontier.pop() {
        for v in 1..1u32 << n {
            if m >> v & 1 == 0 {
                let s = span_with(n, m, v);
                if seen.insert(s) {
                    frontier.push(s);
                }
            }
        }
    }
    let mut subs: Vec<GF2Subspace> = seen.into_iter().map(|m| GF2Subspace::from_members(n, m)).collect();
    subs.sort_by_key(|s| (s.dim(), s.label()));
    Ok(subs)
}

pub fn gf2_subspace_lattice(n: usize) -> Result<LogicStructure> {
    let subs = gf2_subspaces(n)?;
    let names = subs.iter().map(|s| s.label()).collect();
    let l = FiniteLattice::from_fn(names, |i, j| subs[i].members & !subs[j].members == 0)?;
    let neg = subs
        .iter()
        .map(|s| {
            let c = s.orthogonal_complement();
            subs.iter().position(|t| t.members == c.members).expect("complement is a subspace")
        })
        .collect();
    LogicStructure::new(l, neg)
}

/// A real symmetric 2×2 matrix `[[a11, a12], [a12, a22]]` with
/// `0 ⪯ A ⪯ I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Effect2 {
    pub a11: Rational,
    pub a12: Rational,
    pub a22: Rational,
}

fn psd(a11: Rational, a12: Rational, a22: Rational) -> bool {
    a11 + a22 >= Rational::zero() && a11 * a22 - a12 * a12 >= Rational::zero()
}

impl Effect2 {
    pub fn new(a11: Rational, a12: Rational, a22: Rational) -> Result<Self> {
        let e = Effect2 { a11, a12, a22 };
        e.validate()?;
        Ok(e)
    }

    pub fn validate(&self) -> Result<()> {
        if !psd(self.a11, self.a12, self.a22) {
            return Err(Error::InvalidEffect(format!("{self:?} is not positive semidefinite")));
        }
        let c = self.complement_raw();
        if !psd(c.a11, c.a12, c.a22) {
            return Err(Error::InvalidEffect(format!("I - {self:?} is not positive semidefinite")));
        }
        Ok(())
    }

    pub fn diag(a: Rational, b: Rational) -> Self {
        Effect2 {
            a11: a,
            a12: Rational::zero(),
            a22: b,
        }
    }

    fn complement_raw(&self) -> Self {
        Effect2 {
            a11: Rational::one() - self.a11,
            a12: -self.a12,
            a22: Rational::one() - self.a22,
        }
    }
}

/// `B - A` positive semidefinite.
pub fn effect_leq(a: &Effect2, b: &Effect2) -> bool {
    psd(b.a11 - a.a11, b.a12 - a.a12, b.a22 - a.a22)
}

/// `I - A`.
pub fn effect_negation(a: &Effect2) -> Effect2 {
    a.complement_raw()
}

/// The four example effects `A = ½I`, `B = diag(¾, ¼)`, `C = diag(½, ¼)`,
/// `D = [[7/16, 1/8], [1/8, 3/16]]`.
pub fn effects_abcd() -> [(&'static str, Effect2); 4] {
    let r = Rational::new;
    [
        ("A", Effect2::diag(r(1, 2), r(1, 2))),
        ("B", Effect2::diag(r(3, 4), r(1, 4))),
        ("C", Effect2::diag(r(1, 2), r(1, 4))),
        (
            "D",
            Effect2 {
                a11: r(7, 16),
                a12: r(1, 8),
                a22: r(3, 16),
            },
        ),
    ]
}

/// The example effects with O, I and the negations needed to make the set
/// closed under `I - (·)`. `A` is its own negation, so there are nine.
pub fn effects_fixture() -> Vec<(String, Effect2)> {
    let mut out = vec![("O".to_string(), Effect2::diag(Rational::zero(), Rational::zero()))];
    let abcd = effects_abcd();
    for (n, e) in &abcd {
        out.push((n.to_string(), *e));
    }
    for (n, e) in &abcd[1..] {
        out.push((format!("{n}'"), effect_negation(e)));
    }
    out.push(("I".into(), Effect2::diag(Rational::one(), Rational::one())));
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutedPoset {
    poset: FinitePoset,
    inv: Vec<usize>,
}

impl InvolutedPoset {
    pub fn new(poset: FinitePoset, inv: Vec<usize>) -> Result<Self> {
        let n = poset.len();
        if inv.len() != n || inv.iter().any(|&i| i >= n) {
            return Err(Error::InvolutionViolated("involution table does not match the carrier".into()));
        }
        for x in 0..n {
            if inv[inv[x]] != x {
                return Err(Error::InvolutionViolated(format!("{}'' != {}", poset.name(x), poset.name(x))));
            }
            for y in 0..n {
                if poset.leq(x, y) && !poset.leq(inv[y], inv[x]) {
                    return Err(Error::InvolutionViolated(format!(
                        "{} <= {} but not {}' <= {}'",
                        poset.name(x),
                        poset.name(y),
                        poset.name(y),
                        poset.name(x)
                    )));
                }
            }
        }
        Ok(InvolutedPoset { poset, inv })
    }

    pub fn from_structure(s: &LogicStructure) -> Result<Self> {
        Self::new(s.lattice().poset().clone(), s.negation().table.clone())
    }

    /// Effects ordered by `effect_leq` with `I - (·)`; fails when the set is
    /// not closed under the negation.
    pub fn from_effects(effects: &[(String, Effect2)]) -> Result<Self> {
        for (n, e) in effects {
            e.validate().map_err(|err| Error::InvalidEffect(format!("{n}: {err}")))?;
        }
        let names = effects.iter().map(|(n, _)| n.clone()).collect();
        let poset = FinitePoset::from_fn(names, |i, j| effect_leq(&effects[i].1, &effects[j].1))?;
        let inv = effects
            .iter()
            .map(|(n, e)| {
                let c = effect_negation(e);
                effects
                    .iter()
                    .position(|(_, f)| *f == c)
                    .ok_or_else(|| Error::InvolutionViolated(format!("I - {n} is not in the set")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(poset, inv)
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }
}

pub const MACNEILLE_CAP: usize = 20;

/// Completion by lower cuts `X = l(u(X))`, ordered by inclusion. Every cut
/// is an intersection of principal down-sets, so the cuts are generated by
/// closing those under intersection. The negation is
/// `X′ = {a : a ≼ b′ for all b ∈ X}`.
///
/// A principal cut keeps the label of its generator; any other cut is
/// labelled by its maximal elements joined with `|`.
pub fn macneille_completion(p: &InvolutedPoset) -> Result<LogicStructure> {
    let q = &p.poset;
    let n = q.len();
    if n > MACNEILLE_CAP {
        return Err(Error::BadParams {
            name: "macneille".into(),
            reason: format!("{n} elements, at most {MACNEILLE_CAP} supported"),
        });
    }
    if n == 0 {
        return Err(Error::Empty);
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let down = |x: usize| (0..n).filter(|&k| q.leq(k, x)).fold(0u32, |m, k| m | 1 << k);
    let mut cuts: BTreeSet<u32> = BTreeSet::from([full]);
    let principal: Vec<u32> = (0..n).map(down).collect();
    for &d in &principal {
        cuts.insert(d);
    }
    loop {
        let list: Vec<u32> = cuts.iter().copied().collect();
        let mut grew = false;
        for (i, &a) in list.iter().enumerate() {
            for &b in &list[i + 1..] {
                grew |= cuts.insert(a & b);
            }
        }
        if !grew {
            break;
        }
    }
    // bottom-up: by size, then by mask
    let mut cuts: Vec<u32> = cuts.into_iter().collect();
    cuts.sort_by_key(|&c| (c.count_ones(), c));

    let label = |c: u32| -> String {
        if let Some(x) = (0..n).find(|&x| principal[x] == c) {
            return q.name(x).to_string();
        }
        if c == 0 {
            return "{}".into();
        }
        let members: Vec<usize> = (0..n).filter(|&k| c >> k & 1 == 1).collect();
        let maximal: Vec<&str> = members
            .iter()
            .filter(|&&a| !members.iter().any(|&b| q.lt(a, b)))
            .map(|&a| q.name(a))
            .collect();
        maximal.join("|")
    };
    let names: Vec<String> = cuts.iter().map(|&c| label(c)).collect();
    let lattice = FiniteLattice::from_fn(names, |i, j| cuts[i] & !cuts[j] == 0)?;
    let neg = cuts
        .iter()
        .map(|&c| {
            let image = (0..n)
                .filter(|&b| c >> b & 1 == 1)
                .fold(full, |m, b| m & principal[p.inv(b)]);
            cuts.iter().position(|&d| d == image).expect("negation of a cut is a cut")
        })
        .collect();
    LogicStructure::new(lattice, neg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{classify, LogicLabel};
    use crate::order::tests::cube;
    use crate::order::{isomorphism, property_scan, Pattern};

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    fn cube3() -> LogicStructure {
        LogicStructure::new(cube(3), (0..8).map(|m| 7 - m).collect()).unwrap()
    }

    #[test]
    fn cube_pairs_decompose_into_atoms() {
        let s = cube3();
        // x = atoms {0, 1}, y = atoms {1, 2}
        let (u, v, w) = compatible_decomposition(&s, 0b011, 0b110).unwrap().unwrap();
        assert_eq!((u, v, w), (0b001, 0b010, 0b100));
        assert_eq!(compatible_decomposition(&s, 0b001, 0b100).unwrap(), Some((0b001, 0, 0b100)));
    }

    #[test]
    fn non_orthomodular_is_rejected() {
        let m5 = LogicStructure::from_labels(crate::order::tests::m5(), &["1", "c", "0", "a", "0"]).unwrap();
        assert!(matches!(is_compatible(&m5, 1, 2), Err(Error::NotOrthomodular(_))));
    }

    #[test]
    fn gf2_sizes_and_shapes() {
        let sizes: Vec<usize> = (1..=4).map(|n| gf2_subspaces(n).unwrap().len()).collect();
        assert_eq!(sizes, vec![2, 5, 16, 67]);
        assert_eq!(gf2_subspaces(5).unwrap_err(), Error::DimensionTooLarge(5));
        assert_eq!(gf2_subspaces(0).unwrap_err(), Error::DimensionTooLarge(0));

        let two = gf2_subspace_lattice(2).unwrap();
        assert!(isomorphism(two.lattice(), &Pattern::M5.lattice()).is_some());
        let diag = two.el("<11>");
        assert_eq!(two.neg(diag), diag);
        let w = law_report(&two).witness("non-contradiction").cloned().unwrap();
        assert_eq!(w.elements, vec!["<11>"]);
        assert_eq!(classify(&gf2_subspace_lattice(1).unwrap()).label, LogicLabel::Boolean);
    }

    #[test]
    fn gf2_three_is_modular() {
        let s = gf2_subspace_lattice(3).unwrap();
        let r = property_scan(s.lattice());
        assert!(r.holds("modular") && !r.holds("distributive"));
        assert!(negation_axiom_report(&s).all_hold());
        assert_eq!(s.lattice().names()[1..4], ["<001>", "<010>", "<011>"]);
    }

    #[test]
    fn rref_labels() {
        let s = GF2Subspace::from_members(3, span_with(3, span_with(3, 1, 0b110), 0b011));
        assert_eq!(s.basis, vec![0b101, 0b011]);
        assert_eq!(s.label(), "<101,011>");
    }

    #[test]
    fn effect_examples() {
        let [(_, a), (_, b), (_, c), (_, d)] = effects_abcd();
        assert!(effect_leq(&c, &a) && effect_leq(&c, &b) && effect_leq(&d, &a) && effect_leq(&d, &b));
        assert!(!effect_leq(&c, &d) && !effect_leq(&d, &c));
        assert!(!effect_leq(&a, &b) && !effect_leq(&b, &a));
        assert!(effect_leq(&a, &a));
        assert_eq!(effect_negation(&a), a);
        assert_eq!(effect_negation(&b), Effect2::diag(r(1, 4), r(3, 4)));
        let zero = Effect2::diag(r(0, 1), r(0, 1));
        assert_eq!(effect_negation(&zero), Effect2::diag(r(1, 1), r(1, 1)));
        assert!(Effect2::new(r(1, 1), r(1, 2), r(0, 1)).is_err());
    }

    #[test]
    fn effect_json() {
        let [(_, _), (_, _), (_, _), (_, d)] = effects_abcd();
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(s, r#"{"a11":"7/16","a12":"1/8","a22":"3/16"}"#);
    }

    #[test]
    fn effect_fixture_is_not_a_lattice() {
        let p = InvolutedPoset::from_effects(&effects_fixture()).unwrap();
        assert_eq!(p.poset().len(), 9);
        let e = FiniteLattice::from_poset(p.poset().clone()).unwrap_err();
        assert!(matches!(e, Error::NotALattice { .. }));
    }

    #[test]
    fn eight_effects_are_not_closed() {
        let eight: Vec<(String, Effect2)> = effects_fixture().into_iter().filter(|(n, _)| n != "B'").collect();
        assert!(matches!(
            InvolutedPoset::from_effects(&eight),
            Err(Error::InvolutionViolated(_))
        ));
    }

    #[test]
    fn completion_of_the_effects() {
        let p = InvolutedPoset::from_effects(&effects_fixture()).unwrap();
        let s = macneille_completion(&p).unwrap();
        assert!(negation_axiom_report(&s).all_hold());
        // C and D get a least upper bound of their own
        let cd = s.el("C|D");
        let (a, b) = (s.el("A"), s.el("B"));
        assert!(s.lattice().lt(cd, a) && s.lattice().lt(cd, b));
        assert_eq!(s.lattice().join(s.el("C"), s.el("D")), cd);
    }

    #[test]
    fn completion_of_a_lattice_is_itself() {
        let c = cube3();
        let s = macneille_completion(&InvolutedPoset::from_structure(&c).unwrap()).unwrap();
        let f = isomorphism(s.lattice(), c.lattice()).unwrap();
        for x in 0..s.len() {
            assert_eq!(f[s.neg(x)], c.neg(f[x]));
        }
        let two = LogicStructure::new(crate::order::tests::chain(2), vec![1, 0]).unwrap();
        let s2 = macneille_completion(&InvolutedPoset::from_structure(&two).unwrap()).unwrap();
        assert_eq!(s2.len(), 2);
    }
}
