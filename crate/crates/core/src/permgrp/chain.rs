//! Deterministic Schreier–Sims: a stabilizer chain with explicit transversals.
//!
//! Generators are added one at a time (Knuth's incremental formulation).
//! Adding `g` at level `i` records it as a strong generator, extends the
//! level-`i` orbit, and pushes every new Schreier generator into level `i+1`.
//! The same routine supports later additions, which is how normal closures
//! and derangement subgroups grow.

use super::perm::Perm;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub point: u32,
    /// Strong generators first introduced at this level.
    pub gens: Vec<Perm>,
    /// Orbit of `point`, in discovery order.
    pub orbit: Vec<u32>,
    /// `slot[x]` indexes `reps` for `x` in the orbit, `NONE` otherwise.
    slot: Vec<u32>,
    /// `reps[k]` maps `point` to `orbit[k]`; `inv_reps[k]` is its inverse.
    reps: Vec<Perm>,
    inv_reps: Vec<Perm>,
}

impl Level {
    fn new(n: usize, point: u32) -> Level {
        let mut slot = vec![NONE; n];
        slot[point as usize] = 0;
        Level {
            point,
            gens: Vec::new(),
            orbit: vec![point],
            slot,
            reps: vec![Perm::identity(n)],
            inv_reps: vec![Perm::identity(n)],
        }
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        self.slot[x as usize] != NONE
    }

    pub fn rep(&self, x: u32) -> Option<&Perm> {
        match self.slot[x as usize] {
            NONE => None,
            k => Some(&self.reps[k as usize]),
        }
    }

    pub fn inv_rep(&self, x: u32) -> Option<&Perm> {
        match self.slot[x as usize] {
            NONE => None,
            k => Some(&self.inv_reps[k as usize]),
        }
    }

    fn push_point(&mut self, x: u32, rep: Perm) {
        self.slot[x as usize] = self.reps.len() as u32;
        self.orbit.push(x);
        self.inv_reps.push(rep.inverse());
        self.reps.push(rep);
    }

    pub fn reps(&self) -> &[Perm] {
        &self.reps
    }
}

#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    prefix: Vec<u32>,
    pub(crate) levels: Vec<Level>,
}

impl StabChain {
    /// Chain for `<gens>` whose base starts with `prefix` (in order); further
    /// base points are the smallest point moved by the generator that needs them.
    pub fn new(degree: usize, prefix: &[u32], gens: &[Perm]) -> StabChain {
        let mut chain = StabChain {
            degree,
            prefix: prefix.to_vec(),
            levels: prefix.iter().map(|&p| Level::new(degree, p)).collect(),
        };
        for g in gens {
            chain.add_generator(g.clone());
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Adds `g` to the group; returns false if it was already a member.
    pub fn add_generator(&mut self, g: Perm) -> bool {
        if self.contains(&g) {
            return false;
        }
        self.extend(0, g);
        true
    }

    fn extend(&mut self, mut i: usize, g: Perm) {
        if self.contains_from(i, &g) {
            return;
        }
        // Skip levels whose orbit is trivial and whose point g fixes: g
        // contributes nothing there but the Schreier generator g itself.
        loop {
            if i == self.levels.len() {
                let point = if i < self.prefix.len() {
                    self.prefix[i]
                } else {
                    g.smallest_moved_point().expect("non-identity element")
                };
                self.levels.push(Level::new(self.degree, point));
            }
            let lvl = &self.levels[i];
            if lvl.orbit.len() == 1 && g.apply(lvl.point) == lvl.point {
                i += 1;
            } else {
                break;
            }
        }

        self.levels[i].gens.push(g.clone());

        // New generator against the existing orbit.
        let old_len = self.levels[i].orbit.len();
        for k in 0..old_len {
            let beta = self.levels[i].orbit[k];
            let gamma = g.apply(beta);
            let u_beta = self.levels[i].reps[k].clone();
            if self.levels[i].contains(gamma) {
                let sg = u_beta.mul(&g).mul(self.levels[i].inv_rep(gamma).unwrap());
                if !sg.is_identity() {
                    self.extend(i + 1, sg);
                }
            } else {
                self.levels[i].push_point(gamma, u_beta.mul(&g));
            }
        }

        // Every generator against each newly discovered point.
        let mut k = old_len;
        while k < self.levels[i].orbit.len() {
            let delta = self.levels[i].orbit[k];
            let u_delta = self.levels[i].reps[k].clone();
            let gens: Vec<Perm> = self.levels[i..].iter().flat_map(|l| l.gens.iter().cloned()).collect();
            for s in &gens {
                let gamma = s.apply(delta);
                if self.levels[i].contains(gamma) {
                    let sg = u_delta.mul(s).mul(self.levels[i].inv_rep(gamma).unwrap());
                    if !sg.is_identity() {
                        self.extend(i + 1, sg);
                    }
                } else {
                    self.levels[i].push_point(gamma, u_delta.mul(s));
                }
            }
            k += 1;
        }
    }

    /// Sifts `g` through levels `i..`; returns the residue and the level at
    /// which sifting stopped (`levels.len()` if it went all the way).
    fn sift_from(&self, i: usize, g: &Perm) -> (Perm, usize) {
        let mut h = g.clone();
        let mut scratch = Perm::identity(self.degree);
        for (j, lvl) in self.levels.iter().enumerate().skip(i) {
            let beta = h.apply(lvl.point);
            if beta == lvl.point {
                continue;
            }
            match lvl.inv_rep(beta) {
                Some(inv) => {
                    h.mul_into(inv, &mut scratch);
                    std::mem::swap(&mut h, &mut scratch);
                }
                None => return (h, j),
            }
        }
        (h, self.levels.len())
    }

    fn contains_from(&self, i: usize, g: &Perm) -> bool {
        let (h, j) = self.sift_from(i, g);
        j == self.levels.len() && h.is_identity()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.contains_from(0, g)
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    /// Base points of the non-trivial levels.
    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().filter(|l| l.orbit.len() > 1).map(|l| l.point).collect()
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        self.levels.iter().flat_map(|l| l.gens.iter().cloned()).collect()
    }

    /// Strong generators of the stabilizer of the first `i` base levels.
    pub fn generators_from(&self, i: usize) -> Vec<Perm> {
        self.levels.iter().skip(i).flat_map(|l| l.gens.iter().cloned()).collect()
    }

    pub(crate) fn nontrivial_levels(&self) -> Vec<&Level> {
        self.levels.iter().filter(|l| l.orbit.len() > 1).collect()
    }

    /// Visits every element once, as `u_{k-1} * ... * u_1 * u_0` with `u_j`
    /// from the level-`j` transversal, the last level varying slowest.
    pub fn for_each_element<F: FnMut(&Perm)>(&self, mut visit: F) {
        let levels = self.nontrivial_levels();
        let id = Perm::identity(self.degree);
        if levels.is_empty() {
            visit(&id);
            return;
        }
        // partial[j] = u_{k-1} * ... * u_j
        let k = levels.len();
        let mut partial: Vec<Perm> = vec![id.clone(); k + 1];
        let mut idx = vec![0usize; k];
        // depth runs from k-1 down to 0
        let mut depth = k - 1;
        loop {
            if idx[depth] < levels[depth].reps().len() {
                let (lo, hi) = partial.split_at_mut(depth + 1);
                hi[0].mul_into(&levels[depth].reps()[idx[depth]], &mut lo[depth]);
                idx[depth] += 1;
                if depth == 0 {
                    visit(&partial[0]);
                } else {
                    depth -= 1;
                    idx[depth] = 0;
                }
            } else {
                depth += 1;
                if depth == k {
                    break;
                }
            }
        }
    }

    /// Lexicographically least image table in the right coset `S * g`, where
    /// `S` is this chain's group. Requires the base to list its points in
    /// increasing order, as chains built with prefix `0..n` do.
    pub fn canonical_right_coset_rep(&self, g: &Perm) -> Perm {
        let mut cur = g.clone();
        for lvl in self.levels.iter().filter(|l| l.orbit.len() > 1) {
            let mut best = lvl.point;
            let mut best_val = cur.apply(lvl.point);
            for &gamma in &lvl.orbit {
                let v = cur.apply(gamma);
                if v < best_val {
                    best_val = v;
                    best = gamma;
                }
            }
            if best != lvl.point {
                cur = lvl.rep(best).unwrap().mul(&cur);
            }
        }
        cur
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn closure(gens: &[Perm], n: usize) -> HashSet<Perm> {
        let mut seen = HashSet::new();
        let id = Perm::identity(n);
        seen.insert(id.clone());
        let mut queue = vec![id];
        while let Some(x) = queue.pop() {
            for g in gens {
                let y = x.mul(g);
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        seen
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=7u32 {
            let t = Perm::from_cycles(n as usize, &[&[0, 1]]).unwrap();
            let c = Perm::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap();
            let chain = StabChain::new(n as usize, &[], &[t, c]);
            assert_eq!(chain.order(), (1..=n as u128).product::<u128>());
        }
    }

    #[test]
    fn enumeration_matches_closure_and_membership() {
        let a = Perm::from_cycles(6, &[&[0, 1, 2], &[3, 4, 5]]).unwrap();
        let b = Perm::from_cycles(6, &[&[0, 3], &[1, 4], &[2, 5]]).unwrap();
        let c = Perm::from_cycles(6, &[&[0, 1]]).unwrap();
        let gens = [a, b, c];
        let chain = StabChain::new(6, &[], &gens);
        let oracle = closure(&gens, 6);
        assert_eq!(chain.order() as usize, oracle.len());
        let mut seen = HashSet::new();
        chain.for_each_element(|g| {
            assert!(oracle.contains(g));
            assert!(seen.insert(g.clone()));
        });
        assert_eq!(seen.len(), oracle.len());
        // sifting accepts exactly the group out of all 720 permutations
        let all = closure(&[Perm::from_cycles(6, &[&[0, 1]]).unwrap(), Perm::from_images(vec![1, 2, 3, 4, 5, 0]).unwrap()], 6);
        assert_eq!(all.len(), 720);
        let accepted = all.iter().filter(|g| chain.contains(g)).count();
        assert_eq!(accepted, oracle.len());
    }

    #[test]
    fn prefixed_chain_and_canonical_reps() {
        let t = Perm::from_cycles(4, &[&[0, 1]]).unwrap();
        let c = Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let chain = StabChain::new(4, &[2], &[t.clone(), c.clone()]);
        assert_eq!(chain.levels[0].point, 2);
        assert_eq!(chain.order(), 24);
        // stabilizer of 2 has order 6
        let stab = StabChain::new(4, &[], &chain.generators_from(1));
        assert_eq!(stab.order(), 6);

        // canonical reps of cosets of <(0 1)> in S4: 12 distinct
        let sub = StabChain::new(4, &[0, 1, 2, 3], &[t.clone()]);
        let full = StabChain::new(4, &[], &[t, c]);
        let mut reps = HashSet::new();
        full.for_each_element(|g| {
            reps.insert(sub.canonical_right_coset_rep(g));
        });
        assert_eq!(reps.len(), 12);
    }

    #[test]
    fn incremental_generators_and_trivial_group() {
        let mut chain = StabChain::new(5, &[], &[]);
        assert_eq!(chain.order(), 1);
        let mut count = 0;
        chain.for_each_element(|g| {
            assert!(g.is_identity());
            count += 1;
        });
        assert_eq!(count, 1);
        assert!(chain.add_generator(Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap()));
        assert!(!chain.add_generator(Perm::from_cycles(5, &[&[0, 2, 4, 1, 3]]).unwrap()));
        assert_eq!(chain.order(), 5);
        assert!(chain.add_generator(Perm::from_cycles(5, &[&[1, 2, 4, 3]]).unwrap()));
        assert_eq!(chain.order(), 20);
        assert_eq!(chain.base(), vec![0, 1]);
    }
}
