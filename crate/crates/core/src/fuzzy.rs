//! Exact piecewise-linear membership functions and the finite logics they
//! generate under pointwise min, max and `1 - f`.

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::logic::LogicStructure;
use crate::order::FiniteLattice;
use crate::rational::Rational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashMap;

pub const DEFAULT_CLOSURE_BUDGET: usize = 4096;

/// A function on ℚ that is linear between consecutive breakpoints and
/// constant beyond the outermost ones.
///
/// Always kept canonical: strictly increasing x, no breakpoint on the segment
/// through its neighbours, no end point repeating its neighbour's value. A
/// constant function is the single point `(0, c)`. Equal functions are thus
/// structurally equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiecewiseLinear {
    pts: Vec<(Rational, Rational)>,
}

impl PiecewiseLinear {
    pub fn new(points: Vec<(Rational, Rational)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Json("a piecewise-linear function needs a breakpoint".into()));
        }
        for w in points.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::Json(format!("breakpoints not increasing at x = {}", w[1].0)));
            }
        }
        if let Some((_, y)) = points.iter().find(|(_, y)| !y.in_unit_interval()) {
            return Err(Error::OutOfRange(y.to_string()));
        }
        Ok(Self::canonical(points))
    }

    /// Convenience for fixtures: integer x, y given as `(num, den)`.
    pub fn from_ints(points: &[(i64, (i64, i64))]) -> Self {
        Self::new(points.iter().map(|&(x, (p, q))| (Rational::int(x), Rational::new(p, q))).collect())
            .expect("valid fixture")
    }

    pub fn constant(c: Rational) -> Self {
        PiecewiseLinear {
            pts: vec![(Rational::zero(), c)],
        }
    }

    pub fn points(&self) -> &[(Rational, Rational)] {
        &self.pts
    }

    pub fn is_constant(&self) -> bool {
        self.pts.len() == 1
    }

    fn canonical(mut pts: Vec<(Rational, Rational)>) -> Self {
        // drop interior points collinear with their neighbours
        let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(pts.len());
        for p in pts.drain(..) {
            while out.len() >= 2 {
                let (a, b) = (out[out.len() - 2], out[out.len() - 1]);
                if (b.1 - a.1) * (p.0 - b.0) == (p.1 - b.1) * (b.0 - a.0) {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push(p);
        }
        // flat tails are implied by the constant extension
        while out.len() >= 2 && out[0].1 == out[1].1 {
            out.remove(0);
        }
        while out.len() >= 2 && out[out.len() - 1].1 == out[out.len() - 2].1 {
            out.pop();
        }
        if out.len() == 1 {
            out[0].0 = Rational::zero();
        }
        PiecewiseLinear { pts: out }
    }

    pub fn eval(&self, x: Rational) -> Rational {
        let p = &self.pts;
        if x <= p[0].0 {
            return p[0].1;
        }
        if x >= p[p.len() - 1].0 {
            return p[p.len() - 1].1;
        }
        let i = p.partition_point(|q| q.0 <= x);
        let (a, b) = (p[i - 1], p[i]);
        a.1 + (b.1 - a.1) * (x - a.0) / (b.0 - a.0)
    }

    fn merged_xs(&self, other: &Self) -> Vec<Rational> {
        let mut xs: Vec<Rational> = self.pts.iter().chain(&other.pts).map(|p| p.0).collect();
        xs.sort_unstable();
        xs.dedup();
        xs
    }

    fn pointwise(&self, other: &Self, pick_min: bool) -> Self {
        let xs = self.merged_xs(other);
        let mut pts = Vec::with_capacity(xs.len() * 2);
        let pick = |a: Rational, b: Rational| if pick_min { a.min(b) } else { a.max(b) };
        for (i, &x) in xs.iter().enumerate() {
            if i > 0 {
                // both are linear on [xs[i-1], x]; insert a strict crossing
                let a = xs[i - 1];
                let d0 = self.eval(a) - other.eval(a);
                let d1 = self.eval(x) - other.eval(x);
                if (d0 > Rational::zero() && d1 < Rational::zero()) || (d0 < Rational::zero() && d1 > Rational::zero()) {
                    let c = a + (x - a) * d0 / (d0 - d1);
                    pts.push((c, self.eval(c)));
                }
            }
            pts.push((x, pick(self.eval(x), other.eval(x))));
        }
        Self::canonical(pts)
    }

    pub fn min(&self, other: &Self) -> Self {
        self.pointwise(other, true)
    }

    pub fn max(&self, other: &Self) -> Self {
        self.pointwise(other, false)
    }

    /// `1 - f`.
    pub fn luk_neg(&self) -> Self {
        Self::canonical(self.pts.iter().map(|&(x, y)| (x, Rational::one() - y)).collect())
    }

    /// Pointwise `self ≤ other`, decided at the merged breakpoints.
    pub fn leq(&self, other: &Self) -> bool {
        self.merged_xs(other).into_iter().all(|x| self.eval(x) <= other.eval(x))
    }
}

impl Serialize for PiecewiseLinear {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.pts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PiecewiseLinear {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pts = Vec::<(Rational, Rational)>::deserialize(d)?;
        PiecewiseLinear::new(pts).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PwlOp {
    Min,
    Max,
    LukNeg,
}

pub fn pwl_combine(op: PwlOp, f: &PiecewiseLinear, g: Option<&PiecewiseLinear>) -> Result<PiecewiseLinear> {
    let need = || Error::Json("binary operation needs a second function".into());
    Ok(match op {
        PwlOp::Min => f.min(g.ok_or_else(need)?),
        PwlOp::Max => f.max(g.ok_or_else(need)?),
        PwlOp::LukNeg => f.luk_neg(),
    })
}

pub fn pwl_leq(f: &PiecewiseLinear, g: &PiecewiseLinear) -> bool {
    f.leq(g)
}

/// The closure of some functions under min, max and `1 - f`, with its
/// lattice and negation.
#[derive(Debug, Clone)]
pub struct FunctionLogic {
    pub elements: Vec<PiecewiseLinear>,
    pub formulas: Vec<Formula>,
    pub structure: LogicStructure,
}

impl FunctionLogic {
    pub fn index_of(&self, f: &PiecewiseLinear) -> Option<usize> {
        self.elements.iter().position(|g| g == f)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Breadth-first closure. Generators come first, then the constants 0 and 1
/// if they are new. Element `i` is combined, in order, with `1 - f` and then
/// with min and max against every `j ≤ i` (labelled `j&i`, `j|i`); new functions are appended and
/// labelled by the expression that first produced them.
pub fn closure_lattice(generators: &[(&str, PiecewiseLinear)], budget: usize) -> Result<FunctionLogic> {
    if generators.is_empty() {
        return Err(Error::Empty);
    }
    let mut elements: Vec<PiecewiseLinear> = Vec::new();
    let mut formulas: Vec<Formula> = Vec::new();
    let mut seen: HashMap<PiecewiseLinear, usize> = HashMap::new();
    let mut add = |f: PiecewiseLinear, label: Formula, elements: &mut Vec<PiecewiseLinear>, formulas: &mut Vec<Formula>| -> Result<()> {
        if seen.contains_key(&f) {
            return Ok(());
        }
        if elements.len() >= budget {
            return Err(Error::ClosureBudgetExceeded(budget));
        }
        seen.insert(f.clone(), elements.len());
        elements.push(f);
        formulas.push(label);
        Ok(())
    };
    for (name, g) in generators {
        if let Some((_, y)) = g.points().iter().find(|(_, y)| !y.in_unit_interval()) {
            return Err(Error::OutOfRange(y.to_string()));
        }
        add(g.clone(), Formula::var(name), &mut elements, &mut formulas)?;
    }
    add(PiecewiseLinear::constant(Rational::zero()), Formula::Const(false), &mut elements, &mut formulas)?;
    add(PiecewiseLinear::constant(Rational::one()), Formula::Const(true), &mut elements, &mut formulas)?;

    let mut i = 0;
    while i < elements.len() {
        let f = elements[i].clone();
        let fl = formulas[i].clone();
        add(f.luk_neg(), fl.clone().not(), &mut elements, &mut formulas)?;
        for j in 0..=i {
            let g = elements[j].clone();
            let gl = formulas[j].clone();
            add(g.min(&f), gl.clone().and(fl.clone()), &mut elements, &mut formulas)?;
            add(g.max(&f), gl.or(fl.clone()), &mut elements, &mut formulas)?;
        }
        i += 1;
    }

    let names: Vec<String> = formulas.iter().map(|f| f.compact()).collect();
    let lattice = FiniteLattice::from_fn(names, |a, b| elements[a].leq(&elements[b]))?;
    let neg = elements
        .iter()
        .map(|f| seen[&f.luk_neg()])
        .collect();
    let structure = LogicStructure::new(lattice, neg)?;
    Ok(FunctionLogic {
        elements,
        formulas,
        structure,
    })
}

/// The three temperature predicates: `a` falls from 1 at 5 to 0 at 15, `b`
/// rises from 5 to 15 and falls from 25 to 35, `c` rises from 25 to 35.
pub fn temperature_generators() -> (PiecewiseLinear, PiecewiseLinear, PiecewiseLinear) {
    let a = PiecewiseLinear::from_ints(&[(5, (1, 1)), (15, (0, 1))]);
    let b = PiecewiseLinear::from_ints(&[(5, (0, 1)), (15, (1, 1)), (25, (1, 1)), (35, (0, 1))]);
    let c = PiecewiseLinear::from_ints(&[(25, (0, 1)), (35, (1, 1))]);
    (a, b, c)
}

pub fn temperature_logic() -> Result<FunctionLogic> {
    let (a, b, c) = temperature_generators();
    closure_lattice(&[("a", a), ("b", b), ("c", c)], DEFAULT_CLOSURE_BUDGET)
}
