use super::FiniteLattice;
use crate::report::{scan, Outcome, PropertyReport, Verdict};

/// A lattice law checked pointwise. Inequalities report `lhs ≰ rhs` on
/// failure; conditional laws hold vacuously when the premise is false.
#[derive(Clone, Copy)]
pub struct LatticeLaw {
    pub name: &'static str,
    pub arity: usize,
    pub check: fn(&FiniteLattice, &[usize]) -> Outcome,
}

impl LatticeLaw {
    pub fn eval(&self, l: &FiniteLattice, t: &[usize]) -> Outcome {
        (self.check)(l, t)
    }
}

fn le(l: &FiniteLattice, lhs: usize, rhs: usize) -> Outcome {
    if l.leq(lhs, rhs) {
        Outcome::Holds
    } else {
        Outcome::Fails { lhs, rhs }
    }
}

fn both(a: Outcome, b: impl FnOnce() -> Outcome) -> Outcome {
    if a.holds() {
        b()
    } else {
        a
    }
}

pub fn lattice_laws() -> Vec<LatticeLaw> {
    vec![
        LatticeLaw {
            name: "idempotent",
            arity: 1,
            check: |l, t| both(Outcome::eq(l.meet(t[0], t[0]), t[0]), || Outcome::eq(l.join(t[0], t[0]), t[0])),
        },
        LatticeLaw {
            name: "commutative",
            arity: 2,
            check: |l, t| {
                let (x, y) = (t[0], t[1]);
                both(Outcome::eq(l.meet(x, y), l.meet(y, x)), || Outcome::eq(l.join(x, y), l.join(y, x)))
            },
        },
        LatticeLaw {
            name: "associative",
            arity: 3,
            check: |l, t| {
                let (x, y, z) = (t[0], t[1], t[2]);
                both(Outcome::eq(l.meet(x, l.meet(y, z)), l.meet(l.meet(x, y), z)), || {
                    Outcome::eq(l.join(x, l.join(y, z)), l.join(l.join(x, y), z))
                })
            },
        },
        LatticeLaw {
            name: "absorption",
            arity: 2,
            check: |l, t| {
                let (x, y) = (t[0], t[1]);
                both(Outcome::eq(l.meet(x, l.join(x, y)), x), || Outcome::eq(l.join(x, l.meet(x, y)), x))
            },
        },
        LatticeLaw {
            name: "consistency",
            arity: 2,
            check: |l, t| {
                let (x, y) = (t[0], t[1]);
                let (m, j) = (l.meet(x, y), l.join(x, y));
                if l.leq(x, y) != (m == x) {
                    Outcome::Fails { lhs: m, rhs: x }
                } else if (m == x) != (j == y) {
                    Outcome::Fails { lhs: j, rhs: y }
                } else {
                    Outcome::Holds
                }
            },
        },
        LatticeLaw {
            name: "distributive",
            arity: 3,
            check: |l, t| {
                let (x, y, z) = (t[0], t[1], t[2]);
                Outcome::eq(l.meet(x, l.join(y, z)), l.join(l.meet(x, y), l.meet(x, z)))
            },
        },
        LatticeLaw {
            name: "modular",
            arity: 3,
            check: |l, t| {
                let (x, y, z) = (t[0], t[1], t[2]);
                if !l.leq(x, z) {
                    return Outcome::Holds;
                }
                Outcome::eq(l.join(x, l.meet(y, z)), l.meet(l.join(x, y), z))
            },
        },
        LatticeLaw {
            name: "cancellation",
            arity: 3,
            check: |l, t| {
                let (a, x, y) = (t[0], t[1], t[2]);
                if l.meet(a, x) == l.meet(a, y) && l.join(a, x) == l.join(a, y) {
                    Outcome::eq(x, y)
                } else {
                    Outcome::Holds
                }
            },
        },
        LatticeLaw {
            name: "distributive-inequality",
            arity: 3,
            check: |l, t| {
                let (x, y, z) = (t[0], t[1], t[2]);
                le(l, l.join(l.meet(x, y), l.meet(x, z)), l.meet(x, l.join(y, z)))
            },
        },
        LatticeLaw {
            name: "dual-distributive-inequality",
            arity: 3,
            check: |l, t| {
                let (x, y, z) = (t[0], t[1], t[2]);
                le(l, l.join(x, l.meet(y, z)), l.meet(l.join(x, y), l.join(x, z)))
            },
        },
        LatticeLaw {
            name: "modular-inequality",
            arity: 3,
            check: |l, t| {
                let (x, y, z) = (t[0], t[1], t[2]);
                if !l.leq(x, z) {
                    return Outcome::Holds;
                }
                le(l, l.join(x, l.meet(y, z)), l.meet(l.join(x, y), z))
            },
        },
    ]
}

/// Exhaustive scan of the lattice laws, plus completeness entries that hold
/// for every finite lattice.
pub fn property_scan(l: &FiniteLattice) -> PropertyReport {
    let mut r = PropertyReport::new();
    for law in lattice_laws() {
        r.push(scan(law.name, l.names(), law.arity, |t| law.eval(l, t)));
    }
    r.push(Verdict::pass("complete"));
    r.push(Verdict::pass("sigma-complete"));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::dual;
    use crate::order::tests::{cube, m5, n5};

    #[test]
    fn m5_is_modular_not_distributive() {
        let r = property_scan(&m5());
        assert!(r.holds("modular"));
        let w = r.witness("distributive").unwrap();
        assert_eq!(w.elements, vec!["a", "b", "c"]);
        assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("a", "0"));
        assert!(!r.holds("cancellation"));
    }

    #[test]
    fn n5_is_not_modular() {
        let r = property_scan(&n5());
        assert!(!r.holds("modular"));
        assert!(!r.holds("distributive"));
    }

    #[test]
    fn cube_is_distributive() {
        let r = property_scan(&cube(3));
        assert!(r.all_hold());
    }

    #[test]
    fn witnesses_reproduce() {
        for l in [m5(), n5(), dual(&n5())] {
            let r = property_scan(&l);
            for law in lattice_laws() {
                if let Some(w) = r.witness(law.name) {
                    let t: Vec<usize> = w.elements.iter().map(|e| l.el(e)).collect();
                    match law.eval(&l, &t) {
                        Outcome::Fails { lhs, rhs } => {
                            assert_eq!(l.name(lhs), w.lhs);
                            assert_eq!(l.name(rhs), w.rhs);
                        }
                        Outcome::Holds => panic!("{} witness does not fail", law.name),
                    }
                }
            }
        }
    }
}
