use super::{FiniteLattice, FinitePoset};
use crate::error::{Error, Result};
use std::collections::HashSet;

/// Reverses the order; meet and join tables trade places.
pub fn dual(l: &FiniteLattice) -> FiniteLattice {
    let n = l.len();
    let rel = l.poset().relation();
    let leq: Vec<bool> = (0..n * n).map(|k| rel[(k % n) * n + k / n]).collect();
    let poset = FinitePoset {
        names: l.names().to_vec(),
        leq,
    };
    FiniteLattice::from_parts(poset, l.join_table().to_vec(), l.meet_table().to_vec(), l.top(), l.bottom())
}

/// Componentwise order. Element `(i, j)` sits at position `i * |b| + j` and
/// is labelled `(x,y)`.
pub fn direct_product(a: &FiniteLattice, b: &FiniteLattice) -> FiniteLattice {
    let (na, nb) = (a.len(), b.len());
    let n = na * nb;
    let names: Vec<String> = (0..n)
        .map(|k| format!("({},{})", a.name(k / nb), b.name(k % nb)))
        .collect();
    let pair = |k: usize| (k / nb, k % nb);
    let mut leq = vec![false; n * n];
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for x in 0..n {
        let (xa, xb) = pair(x);
        for y in 0..n {
            let (ya, yb) = pair(y);
            leq[x * n + y] = a.leq(xa, ya) && b.leq(xb, yb);
            meet[x * n + y] = a.meet(xa, ya) * nb + b.meet(xb, yb);
            join[x * n + y] = a.join(xa, ya) * nb + b.join(xb, yb);
        }
    }
    let poset = FinitePoset { names, leq };
    FiniteLattice::from_parts(
        poset,
        meet,
        join,
        a.bottom() * nb + b.bottom(),
        a.top() * nb + b.top(),
    )
}

/// Glues the blocks along a shared bottom and top. Elements of different
/// blocks are incomparable, so their meet is 0 and their join is 1.
///
/// Result layout: the shared bottom, then each block's inner elements in
/// block order, then the shared top. A label that was already taken gets the
/// suffix `_k` with `k` the 1-based block number.
pub fn horizontal_sum(blocks: &[FiniteLattice]) -> Result<FiniteLattice> {
    let first = blocks.first().ok_or(Error::EmptyBlockList)?;
    for (i, b) in blocks.iter().enumerate() {
        if b.bottom() == b.top() {
            return Err(Error::DegenerateBlock(i));
        }
    }
    if blocks.len() == 1 {
        return Ok(first.clone());
    }
    let mut names = vec![first.name(first.bottom()).to_string()];
    let mut owner = vec![(usize::MAX, usize::MAX)];
    let mut used: HashSet<String> = names.iter().cloned().collect();
    let top_name = first.name(first.top()).to_string();
    used.insert(top_name.clone());
    for (bi, b) in blocks.iter().enumerate() {
        for e in 0..b.len() {
            if e == b.bottom() || e == b.top() {
                continue;
            }
            let mut label = b.name(e).to_string();
            if used.contains(&label) {
                label = format!("{}_{}", label, bi + 1);
            }
            used.insert(label.clone());
            names.push(label);
            owner.push((bi, e));
        }
    }
    names.push(top_name);
    owner.push((usize::MAX, usize::MAX));
    let n = names.len();
    FiniteLattice::from_fn(names, |x, y| {
        if x == 0 || y == n - 1 {
            return true;
        }
        if y == 0 || x == n - 1 {
            return x == y;
        }
        let ((bx, ex), (by, ey)) = (owner[x], owner[y]);
        bx == by && blocks[bx].leq(ex, ey)
    })
}

/// Smallest subset containing `xs` and closed under meet and join, as
/// sorted element indices.
pub fn generated_sublattice(l: &FiniteLattice, xs: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; l.len()];
    let mut members: Vec<usize> = Vec::new();
    for &x in xs {
        if !inside[x] {
            inside[x] = true;
            members.push(x);
        }
    }
    let mut i = 0;
    while i < members.len() {
        let x = members[i];
        for j in 0..=i {
            let y = members[j];
            for z in [l.meet(x, y), l.join(x, y)] {
                if !inside[z] {
                    inside[z] = true;
                    members.push(z);
                }
            }
        }
        i += 1;
    }
    members.sort_unstable();
    members
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::tests::{chain, cube, m5, n5};
    use crate::order::{isomorphism, property_scan};

    #[test]
    fn dual_is_an_involution() {
        let l = m5();
        assert_eq!(dual(&dual(&l)), l);
    }

    #[test]
    fn dual_n5_is_n5() {
        assert!(isomorphism(&dual(&n5()), &n5()).is_some());
    }

    #[test]
    fn dual_swaps_tables() {
        let l = cube(3);
        assert_eq!(dual(&l).meet_table(), l.join_table());
    }

    #[test]
    fn two_by_two_is_the_square() {
        let sq = direct_product(&chain(2), &chain(2));
        assert_eq!(sq.len(), 4);
        assert!(isomorphism(&sq, &cube(2)).is_some());
        let four = direct_product(&sq, &sq);
        assert_eq!(four.len(), 16);
        assert!(isomorphism(&four, &cube(4)).is_some());
    }

    #[test]
    fn product_with_singleton() {
        let l = n5();
        assert!(isomorphism(&direct_product(&l, &chain(1)), &l).is_some());
    }

    #[test]
    fn product_tables_agree_with_recomputation() {
        let p = direct_product(&n5(), &chain(3));
        let again = FiniteLattice::from_poset(p.poset().clone()).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn sum_of_squares_is_mo() {
        let sq = cube(2);
        let mo2 = horizontal_sum(&[sq.clone(), sq.clone()]).unwrap();
        assert_eq!(mo2.len(), 6);
        assert_eq!(mo2.atoms().len(), 4);
        // p1 ∨ (p2 ∧ p2') = p1 but (p1 ∨ p2) ∧ (p1 ∨ p2') = 1
        let (p1, p2, p2n) = (1, 3, 4);
        assert_eq!(mo2.join(p1, mo2.meet(p2, p2n)), p1);
        assert_eq!(mo2.meet(mo2.join(p1, p2), mo2.join(p1, p2n)), mo2.top());
        assert!(!property_scan(&mo2).holds("distributive"));
        assert_eq!(horizontal_sum(std::slice::from_ref(&sq)).unwrap(), sq);
        assert_eq!(horizontal_sum(&[]).unwrap_err(), Error::EmptyBlockList);
        assert_eq!(horizontal_sum(&[sq, chain(1)]).unwrap_err(), Error::DegenerateBlock(1));
    }

    #[test]
    fn generated_sublattices() {
        let l = m5();
        assert_eq!(generated_sublattice(&l, &[l.el("a"), l.el("b")]).len(), 4);
        assert_eq!(generated_sublattice(&l, &[2]), vec![2]);
        let c = cube(3);
        assert_eq!(generated_sublattice(&c, &[1, 2, 4]).len(), 8);
    }
}
