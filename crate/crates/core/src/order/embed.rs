use super::FiniteLattice;
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Node cap for the sublattice search.
pub const DEFAULT_SEARCH_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    M5,
    N5,
    O6,
}

impl Pattern {
    pub fn lattice(self) -> FiniteLattice {
        let built = match self {
            Pattern::M5 => FiniteLattice::from_covers(
                &["0", "a", "b", "c", "1"],
                &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
            ),
            Pattern::N5 => FiniteLattice::from_covers(
                &["0", "a", "b", "c", "1"],
                &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
            ),
            Pattern::O6 => FiniteLattice::from_covers(
                &["0", "x", "y", "y'", "x'", "1"],
                &[("0", "x"), ("x", "y"), ("y", "1"), ("0", "y'"), ("y'", "x'"), ("x'", "1")],
            ),
        };
        built.expect("pattern lattices are well formed")
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pattern::M5 => "M5",
            Pattern::N5 => "N5",
            Pattern::O6 => "O6",
        })
    }
}

impl FromStr for Pattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "M5" => Ok(Pattern::M5),
            "N5" => Ok(Pattern::N5),
            "O6" => Ok(Pattern::O6),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// Searches for an injective map from the pattern into `l` preserving meets
/// and joins. The result lists, for each pattern element in its own order,
/// the image in `l`.
///
/// Inner pattern elements are placed first; an element that is the meet or
/// join of two placed ones is forced rather than enumerated. Every tentative
/// placement counts against `budget`.
pub fn find_forbidden_sublattice(l: &FiniteLattice, pattern: Pattern, budget: u64) -> Result<Option<Vec<usize>>> {
    let p = pattern.lattice();
    let k = p.len();
    let mut order: Vec<usize> = (0..k).filter(|&e| e != p.bottom() && e != p.top()).collect();
    order.push(p.bottom());
    order.push(p.top());

    // forced[i] = some (a, b, meet?) with a, b placed before step i
    let mut forced: Vec<Option<(usize, usize, bool)>> = vec![None; k];
    for (i, &e) in order.iter().enumerate() {
        'find: for (ia, &a) in order[..i].iter().enumerate() {
            for &b in &order[ia + 1..i] {
                if p.meet(a, b) == e {
                    forced[i] = Some((a, b, true));
                    break 'find;
                }
                if p.join(a, b) == e {
                    forced[i] = Some((a, b, false));
                    break 'find;
                }
            }
        }
    }

    let mut search = Search {
        l,
        p: &p,
        order: &order,
        forced: &forced,
        image: vec![usize::MAX; k],
        used: vec![false; l.len()],
        nodes: 0,
        budget,
    };
    match search.step(0) {
        Ok(true) => Ok(Some(search.image)),
        Ok(false) => Ok(None),
        Err(e) => Err(e),
    }
}

struct Search<'a> {
    l: &'a FiniteLattice,
    p: &'a FiniteLattice,
    order: &'a [usize],
    forced: &'a [Option<(usize, usize, bool)>],
    image: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn step(&mut self, i: usize) -> Result<bool> {
        if i == self.order.len() {
            return Ok(true);
        }
        let e = self.order[i];
        let candidates: Vec<usize> = match self.forced[i] {
            Some((a, b, is_meet)) => {
                let (fa, fb) = (self.image[a], self.image[b]);
                vec![if is_meet { self.l.meet(fa, fb) } else { self.l.join(fa, fb) }]
            }
            None => (0..self.l.len()).collect(),
        };
        for c in candidates {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchBudgetExceeded(self.budget));
            }
            if self.used[c] || !self.consistent(i, e, c) {
                continue;
            }
            self.image[e] = c;
            self.used[c] = true;
            if self.step(i + 1)? {
                return Ok(true);
            }
            self.used[c] = false;
            self.image[e] = usize::MAX;
        }
        Ok(false)
    }

    /// Placing `e ↦ c` keeps order, meets and joins among placed elements.
    fn consistent(&self, i: usize, e: usize, c: usize) -> bool {
        let (l, p) = (self.l, self.p);
        let img = |x: usize| if x == e { c } else { self.image[x] };
        for &q in &self.order[..i] {
            let fq = self.image[q];
            if p.leq(e, q) != l.leq(c, fq) || p.leq(q, e) != l.leq(fq, c) {
                return false;
            }
            for (m, lm) in [(p.meet(e, q), l.meet(c, fq)), (p.join(e, q), l.join(c, fq))] {
                let fm = img(m);
                if fm != usize::MAX && fm != lm {
                    return false;
                }
            }
        }
        // pairs already placed whose meet or join is e
        for (ia, &a) in self.order[..i].iter().enumerate() {
            for &b in &self.order[ia + 1..i] {
                let (fa, fb) = (self.image[a], self.image[b]);
                if p.meet(a, b) == e && l.meet(fa, fb) != c {
                    return false;
                }
                if p.join(a, b) == e && l.join(fa, fb) != c {
                    return false;
                }
            }
        }
        true
    }
}

/// Order isomorphism from `a` onto `b`, as `map[x in a] = y in b`.
pub fn isomorphism(a: &FiniteLattice, b: &FiniteLattice) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() {
        return None;
    }
    let down = |l: &FiniteLattice, x: usize| (0..n).filter(|&k| l.leq(k, x)).count();
    let up = |l: &FiniteLattice, x: usize| (0..n).filter(|&k| l.leq(x, k)).count();
    let sig_a: Vec<(usize, usize)> = (0..n).map(|x| (down(a, x), up(a, x))).collect();
    let sig_b: Vec<(usize, usize)> = (0..n).map(|x| (down(b, x), up(b, x))).collect();
    let mut sa = sig_a.clone();
    let mut sb = sig_b.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| sig_a[x]);

    fn go(
        i: usize,
        order: &[usize],
        a: &FiniteLattice,
        b: &FiniteLattice,
        sig_a: &[(usize, usize)],
        sig_b: &[(usize, usize)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let x = order[i];
        for y in 0..b.len() {
            if used[y] || sig_a[x] != sig_b[y] {
                continue;
            }
            let fits = order[..i]
                .iter()
                .all(|&q| a.leq(x, q) == b.leq(y, map[q]) && a.leq(q, x) == b.leq(map[q], y));
            if !fits {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if go(i + 1, order, a, b, sig_a, sig_b, map, used) {
                return true;
            }
            used[y] = false;
        }
        false
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    go(0, &order, a, b, &sig_a, &sig_b, &mut map, &mut used).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::tests::{chain, cube, m5, n5};

    fn is_embedding(l: &FiniteLattice, p: &FiniteLattice, f: &[usize]) -> bool {
        let k = p.len();
        let mut seen = f.to_vec();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == k
            && (0..k).all(|x| {
                (0..k).all(|y| f[p.meet(x, y)] == l.meet(f[x], f[y]) && f[p.join(x, y)] == l.join(f[x], f[y]))
            })
    }

    #[test]
    fn pattern_finds_itself() {
        for pat in [Pattern::M5, Pattern::N5, Pattern::O6] {
            let l = pat.lattice();
            let f = find_forbidden_sublattice(&l, pat, DEFAULT_SEARCH_BUDGET).unwrap().unwrap();
            assert!(is_embedding(&l, &l, &f), "{pat}");
        }
    }

    #[test]
    fn cube_has_no_m5() {
        let c = cube(3);
        assert_eq!(find_forbidden_sublattice(&c, Pattern::M5, DEFAULT_SEARCH_BUDGET).unwrap(), None);
        assert_eq!(find_forbidden_sublattice(&c, Pattern::N5, DEFAULT_SEARCH_BUDGET).unwrap(), None);
    }

    #[test]
    fn m5_contains_no_n5_and_vice_versa() {
        assert_eq!(find_forbidden_sublattice(&m5(), Pattern::N5, 1000).unwrap(), None);
        assert_eq!(find_forbidden_sublattice(&n5(), Pattern::M5, 1000).unwrap(), None);
    }

    #[test]
    fn n5_inside_a_product() {
        // N5 × 2 contains N5 at either end
        let l = crate::order::direct_product(&n5(), &chain(2));
        let f = find_forbidden_sublattice(&l, Pattern::N5, DEFAULT_SEARCH_BUDGET).unwrap().unwrap();
        assert!(is_embedding(&l, &Pattern::N5.lattice(), &f));
    }

    #[test]
    fn budget_is_enforced() {
        let c = cube(3);
        assert_eq!(
            find_forbidden_sublattice(&c, Pattern::M5, 10),
            Err(Error::SearchBudgetExceeded(10))
        );
    }

    #[test]
    fn subset_oracle_agrees_on_small_lattices() {
        // brute force over all 5-subsets that form an M5 or N5 sublattice
        fn brute(l: &FiniteLattice, p: &FiniteLattice) -> bool {
            let n = l.len();
            let k = p.len();
            let mut idx: Vec<usize> = (0..k).collect();
            loop {
                let sub = &idx;
                let closed = sub.iter().all(|&x| {
                    sub.iter()
                        .all(|&y| sub.contains(&l.meet(x, y)) && sub.contains(&l.join(x, y)))
                });
                if closed {
                    let names: Vec<String> = sub.iter().map(|&i| l.name(i).to_string()).collect();
                    let s = FiniteLattice::from_fn(names, |i, j| l.leq(sub[i], sub[j])).unwrap();
                    if isomorphism(&s, p).is_some() {
                        return true;
                    }
                }
                let mut i = k;
                loop {
                    if i == 0 {
                        return false;
                    }
                    i -= 1;
                    if idx[i] < n - k + i {
                        idx[i] += 1;
                        for j in i + 1..k {
                            idx[j] = idx[j - 1] + 1;
                        }
                        break;
                    }
                }
            }
        }
        let samples = [
            m5(),
            n5(),
            cube(3),
            crate::order::direct_product(&m5(), &chain(2)),
            crate::order::direct_product(&n5(), &chain(2)),
        ];
        for l in &samples {
            for pat in [Pattern::M5, Pattern::N5] {
                let fast = find_forbidden_sublattice(l, pat, DEFAULT_SEARCH_BUDGET).unwrap().is_some();
                assert_eq!(fast, brute(l, &pat.lattice()), "{pat}");
            }
        }
    }

    #[test]
    fn isomorphism_respects_order() {
        assert!(isomorphism(&m5(), &n5()).is_none());
        let f = isomorphism(&cube(2), &crate::order::direct_product(&chain(2), &chain(2))).unwrap();
        assert_eq!(f.len(), 4);
    }
}
