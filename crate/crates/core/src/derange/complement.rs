//! Search for a complement of a normal subgroup.

use std::collections::{HashMap, HashSet};

use crate::permgrp::{Perm, PermGroup, MAX_QUOTIENT_INDEX};

/// Largest group order for which the search is attempted.
pub const COMPLEMENT_ORDER_LIMIT: u64 = 100_000;
/// Closure steps allowed before the search gives up.
const WORK_BUDGET: u64 = 20_000_000;

#[derive(Clone, Debug)]
pub enum Complement {
    /// A subgroup `K` with `K ∩ N = 1` and `KN = G`.
    Split(PermGroup),
    NonSplit,
    /// Group too large or search budget exhausted.
    NotChecked,
}

/// Decides whether `g` splits over the normal subgroup `n`.
///
/// Picks elements whose images generate `G/N`, then searches lifts from the
/// corresponding cosets of `N` whose orders match the images. The first lift is
/// taken up to conjugation by `N`. A choice of lifts is a complement exactly
/// when the generated subgroup has order `|G:N|`.
pub fn complement_search(g: &PermGroup, n: &PermGroup) -> Complement {
    if g.order() > COMPLEMENT_ORDER_LIMIT as u128 {
        return Complement::NotChecked;
    }
    let index = g.order() / n.order();
    if index == 1 {
        return Complement::Split(PermGroup::trivial(g.degree()));
    }
    if index > MAX_QUOTIENT_INDEX as u128 {
        return Complement::NotChecked;
    }
    let Ok(action) = g.coset_action(n, MAX_QUOTIENT_INDEX) else {
        return Complement::NotChecked;
    };

    // Generators of G whose images generate the quotient, with the prefix orders.
    let mut chosen: Vec<(Perm, Perm)> = Vec::new();
    let mut prefix_orders = Vec::new();
    let mut current = PermGroup::trivial(action.degree());
    for x in g.generators() {
        let img = action.map(x);
        if current.contains(&img) {
            continue;
        }
        let mut gens = current.generators().to_vec();
        gens.push(img.clone());
        current = PermGroup::new(action.degree(), gens).unwrap();
        prefix_orders.push(current.order() as u64);
        chosen.push((x.clone(), img));
        if current.order() == index {
            break;
        }
    }

    let Ok(n_elems) = n.enumerate_elements(COMPLEMENT_ORDER_LIMIT) else {
        return Complement::NotChecked;
    };
    let candidates: Vec<Vec<Perm>> = chosen
        .iter()
        .map(|(x, img)| {
            let target = img.order();
            n_elems.iter().map(|m| x.mul(m)).filter(|y| y.order() == target).collect()
        })
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return Complement::NonSplit;
    }
    let first = conjugacy_representatives(&candidates[0], n);

    let mut search = Search { candidates: &candidates, prefix_orders: &prefix_orders, work: 0, exhausted: false };
    for k in first {
        let mut picked = vec![k];
        if let Some(found) = search.extend(&mut picked) {
            return Complement::Split(PermGroup::new(g.degree(), found).unwrap());
        }
        if search.exhausted {
            return Complement::NotChecked;
        }
    }
    Complement::NonSplit
}

struct Search<'a> {
    candidates: &'a [Vec<Perm>],
    prefix_orders: &'a [u64],
    work: u64,
    exhausted: bool,
}

impl Search<'_> {
    fn extend(&mut self, picked: &mut Vec<Perm>) -> Option<Vec<Perm>> {
        let level = picked.len() - 1;
        let target = self.prefix_orders[level];
        match bounded_closure(picked, target) {
            (Some(order), steps) if order == target => self.work += steps,
            (_, steps) => {
                self.work += steps;
                return None;
            }
        }
        if self.work > WORK_BUDGET {
            self.exhausted = true;
            return None;
        }
        if picked.len() == self.candidates.len() {
            return Some(picked.clone());
        }
        for c in &self.candidates[picked.len()] {
            picked.push(c.clone());
            let found = self.extend(picked);
            picked.pop();
            if found.is_some() || self.exhausted {
                return found;
            }
        }
        None
    }
}

/// Order of `<gens>` if it is at most `bail`, and the number of products formed.
fn bounded_closure(gens: &[Perm], bail: u64) -> (Option<u64>, u64) {
    let id = Perm::identity(gens[0].degree());
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut elements = vec![id];
    let mut steps = 0;
    let mut k = 0;
    while k < elements.len() {
        for g in gens {
            steps += 1;
            let y = elements[k].mul(g);
            if seen.insert(y.clone()) {
                if seen.len() as u64 > bail {
                    return (None, steps);
                }
                elements.push(y);
            }
        }
        k += 1;
    }
    (Some(elements.len() as u64), steps)
}

/// One element from each `N`-conjugacy class in `items` (a union of classes).
fn conjugacy_representatives(items: &[Perm], n: &PermGroup) -> Vec<Perm> {
    let index: HashMap<&Perm, usize> = items.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut parent: Vec<usize> = (0..items.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, p) in items.iter().enumerate() {
        for s in n.generators() {
            if let Some(&j) = index.get(&p.conjugate_by(s)) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    (0..items.len()).filter(|&i| find(&mut parent, i) == i).map(|i| items[i].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::standard;

    #[test]
    fn split_and_nonsplit() {
        // S3 = C3 : C2
        let s3 = standard::symmetric(3);
        let a3 = standard::alternating(3);
        match complement_search(&s3, &a3) {
            Complement::Split(k) => {
                assert_eq!(k.order(), 2);
                assert!(k.generators().iter().all(|x| !a3.contains(x)));
            }
            other => panic!("expected split, got {other:?}"),
        }
        // C4 regular over its subgroup of order 2 does not split
        let c4 = standard::cyclic(4);
        let c2 = PermGroup::new(4, vec![c4.generators()[0].pow(2)]).unwrap();
        assert!(matches!(complement_search(&c4, &c2), Complement::NonSplit));
        // Q8 over its centre does not split
        let q8 = crate::matgrp::named::quaternion(&crate::gf::FieldSpec::new(3, 1).unwrap())
            .unwrap()
            .vector_action()
            .unwrap();
        let z = q8.normal_closure(&[q8.generators()[0].pow(2)]);
        assert_eq!(z.order(), 2);
        assert!(matches!(complement_search(&q8, &z), Complement::NonSplit));
        // D8 over its rotation subgroup of order 4 splits
        let d8 = standard::dihedral(4);
        let rot = standard::cyclic(4);
        assert!(matches!(complement_search(&d8, &rot), Complement::Split(_)));
    }
}
