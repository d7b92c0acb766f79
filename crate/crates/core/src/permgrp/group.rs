use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_rational::Ratio;

use super::chain::StabChain;
use super::perm::Perm;
use crate::error::{Error, Result};

/// Default cap on the order of any group whose elements get enumerated.
pub const DEFAULT_MAX_ORDER: u64 = 2_000_000;
/// Default cap on permutation degrees and coset-action indices.
pub const DEFAULT_MAX_DEGREE: u64 = 100_000;
/// Cap on the index of a quotient realized as a permutation group.
pub const MAX_QUOTIENT_INDEX: u64 = 10_000;

/// A permutation group given by generators, with a lazily built stabilizer chain.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: OnceLock<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermGroup { degree: self.degree, generators: self.generators.clone(), chain }
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

/// A partition of the points into blocks of imprimitivity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    pub block_size: usize,
    pub block_count: usize,
    /// Block index of each point; blocks are numbered by their smallest point.
    pub assignment: Vec<u32>,
}

impl BlockSystem {
    fn from_labels(labels: &[usize]) -> BlockSystem {
        let mut renumber = HashMap::new();
        let assignment: Vec<u32> = labels
            .iter()
            .map(|l| {
                let next = renumber.len() as u32;
                *renumber.entry(*l).or_insert(next)
            })
            .collect();
        let block_count = renumber.len();
        BlockSystem { block_size: labels.len() / block_count, block_count, assignment }
    }

    /// True if every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &BlockSystem) -> bool {
        let mut image = vec![u32::MAX; self.block_count];
        self.assignment.iter().zip(&other.assignment).all(|(&a, &b)| {
            let slot = &mut image[a as usize];
            if *slot == u32::MAX {
                *slot = b;
            }
            *slot == b
        })
    }

    pub fn blocks(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.block_count];
        for (x, &b) in self.assignment.iter().enumerate() {
            out[b as usize].push(x as u32);
        }
        out
    }
}

/// The permutation image of a group acting on right cosets of a subgroup.
pub struct CosetAction {
    pub image: PermGroup,
    /// Canonical representative of each coset; coset `k` is point `k`.
    pub representatives: Vec<Perm>,
    /// Order of the kernel (the core of the subgroup).
    pub kernel_order: u128,
    sub_chain: StabChain,
    index_of: HashMap<Vec<u32>, u32>,
}

impl CosetAction {
    /// Image of an element of the acting group.
    pub fn map(&self, g: &Perm) -> Perm {
        let images = self
            .representatives
            .iter()
            .map(|r| {
                let c = self.sub_chain.canonical_right_coset_rep(&r.mul(g));
                self.index_of[c.images()]
            })
            .collect();
        Perm::from_images_unchecked(images)
    }

    pub fn degree(&self) -> usize {
        self.representatives.len()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if two distinct classes were merged.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<PermGroup> {
        if degree == 0 {
            return Err(Error::ConstraintViolated("degree must be at least 1".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        Ok(PermGroup { degree, generators, chain: OnceLock::new() })
    }

    /// Builds from a non-empty generator list, taking the degree from the first one.
    pub fn from_generators(generators: Vec<Perm>) -> Result<PermGroup> {
        let degree = generators
            .first()
            .map(|g| g.degree())
            .ok_or_else(|| Error::ConstraintViolated("at least one generator required".into()))?;
        PermGroup::new(degree, generators)
    }

    pub(crate) fn with_chain(degree: usize, generators: Vec<Perm>, chain: StabChain) -> PermGroup {
        let lock = OnceLock::new();
        let _ = lock.set(chain);
        PermGroup { degree, generators, chain: lock }
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::with_chain(degree, Vec::new(), StabChain::new(degree, &[], &[]))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| StabChain::new(self.degree, &[], &self.generators))
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain().contains(g)
    }

    pub fn base(&self) -> Vec<u32> {
        self.chain().base()
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// Same element set (given both are subgroups of a common group).
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && self
                .generators
                .iter()
                .all(|n| other.generators.iter().all(|g| self.contains(&n.conjugate_by(g))))
    }

    /// Orbits as sorted point lists, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        orbits_of(self.degree, &self.generators)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 1 || self.orbits().len() == 1
    }

    fn require_transitive(&self) -> Result<()> {
        if self.is_transitive() {
            Ok(())
        } else {
            Err(Error::NotTransitive)
        }
    }

    /// The finest block system in which `a` and `b` share a block.
    pub fn block_system_containing(&self, a: u32, b: u32) -> BlockSystem {
        let mut uf = UnionFind::new(self.degree);
        uf.union(a as usize, b as usize);
        let mut queue = vec![(a, b)];
        while let Some((x, y)) = queue.pop() {
            for g in &self.generators {
                let (gx, gy) = (g.apply(x), g.apply(y));
                if uf.union(gx as usize, gy as usize) {
                    queue.push((gx, gy));
                }
            }
        }
        let labels: Vec<usize> = (0..self.degree).map(|x| uf.find(x)).collect();
        BlockSystem::from_labels(&labels)
    }

    /// All minimal non-trivial block systems, from the pairs `{0, b}`.
    pub fn block_systems(&self) -> Result<Vec<BlockSystem>> {
        self.require_transitive()?;
        let mut systems: Vec<BlockSystem> = Vec::new();
        for b in 1..self.degree as u32 {
            let sys = self.block_system_containing(0, b);
            if sys.block_count > 1 && !systems.contains(&sys) {
                systems.push(sys);
            }
        }
        let minimal = systems
            .iter()
            .filter(|a| !systems.iter().any(|b| b != *a && b.refines(a)))
            .cloned()
            .collect();
        Ok(minimal)
    }

    pub fn is_primitive(&self) -> Result<bool> {
        Ok(self.block_systems()?.is_empty())
    }

    /// Point stabilizer of `alpha`.
    pub fn stabilizer(&self, alpha: u32) -> PermGroup {
        let chain = StabChain::new(self.degree, &[alpha], &self.generators);
        let gens = chain.generators_from(1);
        PermGroup::new(self.degree, gens).expect("same degree")
    }

    /// Number of orbits of the stabilizer of point 0.
    pub fn rank(&self) -> Result<u64> {
        self.require_transitive()?;
        Ok(self.stabilizer(0).orbits().len() as u64)
    }

    pub fn for_each_element<F: FnMut(&Perm)>(&self, cap: u64, visit: F) -> Result<()> {
        if self.order() > cap as u128 {
            return Err(Error::CapExceeded { what: "group order", cap });
        }
        self.chain().for_each_element(visit);
        Ok(())
    }

    pub fn enumerate_elements(&self, cap: u64) -> Result<Vec<Perm>> {
        let mut out = Vec::with_capacity(self.order().min(cap as u128) as usize);
        self.for_each_element(cap, |g| out.push(g.clone()))?;
        Ok(out)
    }

    /// Action on the right cosets of `sub`.
    pub fn coset_action(&self, sub: &PermGroup, max_index: u64) -> Result<CosetAction> {
        if !sub.is_subgroup_of(self) {
            return Err(Error::NotSubgroup);
        }
        let index = self.order() / sub.order();
        if index > max_index as u128 {
            return Err(Error::IndexTooLarge { index: index.min(u64::MAX as u128) as u64, cap: max_index });
        }
        let all_points: Vec<u32> = (0..self.degree as u32).collect();
        let sub_chain = StabChain::new(self.degree, &all_points, &sub.generators);

        let start = sub_chain.canonical_right_coset_rep(&self.identity());
        let mut index_of: HashMap<Vec<u32>, u32> = HashMap::new();
        index_of.insert(start.images().to_vec(), 0);
        let mut reps = vec![start];
        let mut images: Vec<Vec<u32>> = vec![Vec::new(); self.generators.len()];
        let mut k = 0;
        while k < reps.len() {
            for (j, g) in self.generators.iter().enumerate() {
                let c = sub_chain.canonical_right_coset_rep(&reps[k].mul(g));
                let next = index_of.len() as u32;
                let target = *index_of.entry(c.images().to_vec()).or_insert_with(|| {
                    reps.push(c.clone());
                    next
                });
                images[j].push(target);
            }
            k += 1;
        }
        if reps.len() as u128 != index {
            return Err(Error::Internal(format!("coset enumeration found {} cosets, expected {}", reps.len(), index)));
        }
        let gens: Vec<Perm> = images.into_iter().map(Perm::from_images_unchecked).collect();
        let image = PermGroup::new(reps.len(), gens)?;
        let kernel_order = self.order() / image.order();
        Ok(CosetAction { image, representatives: reps, kernel_order, sub_chain, index_of })
    }

    /// `{g in G : sub^g = sub}`, by scanning every element of `G`.
    pub fn normalizer(&self, sub: &PermGroup, cap: u64) -> Result<PermGroup> {
        let mut builder = SubgroupBuilder::new(self.degree);
        self.for_each_element(cap, |g| {
            if !builder.contains(g) && sub.generators.iter().all(|s| sub.contains(&s.conjugate_by(g))) {
                builder.add(g.clone());
            }
        })?;
        Ok(builder.finish())
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Perm]) -> PermGroup {
        let mut builder = SubgroupBuilder::new(self.degree);
        let mut pending: Vec<Perm> = seeds.to_vec();
        while let Some(x) = pending.pop() {
            if builder.add(x.clone()) {
                for g in &self.generators {
                    pending.push(x.conjugate_by(g));
                }
            }
        }
        // Conjugates of later generators were queued when they were added, so
        // closure under all generator pairs holds once the queue drains.
        builder.finish()
    }

    /// `G/N` realized by the action on cosets of `N`.
    pub fn quotient(&self, normal: &PermGroup) -> Result<PermGroup> {
        if !normal.is_subgroup_of(self) {
            return Err(Error::NotSubgroup);
        }
        if !normal.is_normal_in(self) {
            return Err(Error::NotNormal);
        }
        Ok(self.coset_action(normal, MAX_QUOTIENT_INDEX)?.image)
    }

    /// Exact average of the fixed-point counts over the coset `t G`.
    pub fn coset_average_fixed_points(&self, t: &Perm, cap: u64) -> Result<Ratio<u64>> {
        if t.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: t.degree() });
        }
        let mut total: u64 = 0;
        self.for_each_element(cap, |g| {
            total += t.images().iter().enumerate().filter(|&(x, &y)| g.apply(y) == x as u32).count() as u64;
        })?;
        Ok(Ratio::new(total, self.order() as u64))
    }
}

/// Incrementally generated subgroup.
pub struct SubgroupBuilder {
    degree: usize,
    generators: Vec<Perm>,
    chain: StabChain,
}

impl SubgroupBuilder {
    pub fn new(degree: usize) -> Self {
        SubgroupBuilder { degree, generators: Vec::new(), chain: StabChain::new(degree, &[], &[]) }
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain.contains(g)
    }

    /// Adds `g` unless it is already a member; returns whether the group grew.
    pub fn add(&mut self, g: Perm) -> bool {
        if self.chain.contains(&g) {
            return false;
        }
        self.chain.add_generator(g.clone());
        self.generators.push(g);
        true
    }

    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn finish(self) -> PermGroup {
        PermGroup::with_chain(self.degree, self.generators, self.chain)
    }
}

pub fn orbits_of(degree: usize, gens: &[Perm]) -> Vec<Vec<u32>> {
    let mut uf = UnionFind::new(degree);
    for g in gens {
        for x in 0..degree {
            uf.union(x, g.apply(x as u32) as usize);
        }
    }
    let mut by_root: HashMap<usize, Vec<u32>> = HashMap::new();
    for x in 0..degree {
        by_root.entry(uf.find(x)).or_default().push(x as u32);
    }
    let mut out: Vec<Vec<u32>> = by_root.into_values().collect();
    out.sort();
    out
}
