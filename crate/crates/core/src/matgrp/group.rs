use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::matrix::{row_reduce, FFMatrix};
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::permgrp::{Perm, PermGroup};

/// Default cap on matrix-group enumeration.
pub const DEFAULT_MATRIX_CAP: u64 = 2_000_000;
/// Cap on `d * (q^d - 1) / (q - 1)` for the spinning irreducibility test.
pub const SPIN_WORKLOAD_CAP: u64 = 1_000_000;
/// Largest vector space on which R(H)-orbits are computed explicitly.
pub const ORBIT_VECTOR_CAP: u64 = 2_000_000;

struct Enumeration {
    elements: Vec<FFMatrix>,
    index: HashMap<Vec<u32>, u32>,
}

/// A subgroup of `GL(d, q)` given by generators; elements are enumerated on demand.
pub struct MatrixGroup {
    field: Arc<FieldSpec>,
    dim: usize,
    generators: Vec<FFMatrix>,
    enumeration: OnceLock<Enumeration>,
}

impl fmt::Debug for MatrixGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MatrixGroup")
            .field("field", &self.field)
            .field("dim", &self.dim)
            .field("generators", &self.generators)
            .finish()
    }
}

impl Clone for MatrixGroup {
    fn clone(&self) -> Self {
        MatrixGroup::new(&self.field, self.dim, self.generators.clone()).expect("already validated")
    }
}

/// Outcome of the `|H:R(H)| <= q^d - 1` check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RBoundCheck {
    pub index: u64,
    pub bound: u64,
    pub within_bound: bool,
    /// Cosets of R(H) other than R(H) itself fix no R(H)-orbit on nonzero vectors.
    pub semiregular: bool,
}

impl RBoundCheck {
    pub fn holds(&self) -> bool {
        self.within_bound && self.semiregular
    }
}

/// Result of the spinning irreducibility test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irreducibility {
    pub irreducible: bool,
    /// Row-reduced basis of a proper nonzero invariant subspace, when reducible.
    pub witness: Option<Vec<Vec<u32>>>,
}

/// `R(H)` with its index and the realization of `H/R(H)` as a permutation group.
pub struct RSubgroup {
    pub subgroup: MatrixGroup,
    pub index: u64,
    pub normal: bool,
}

impl MatrixGroup {
    pub fn new(field: &Arc<FieldSpec>, dim: usize, generators: Vec<FFMatrix>) -> Result<MatrixGroup> {
        if dim == 0 {
            return Err(Error::ConstraintViolated("dimension must be positive".into()));
        }
        for g in &generators {
            if **g.field() != **field {
                return Err(Error::FieldMismatch);
            }
            if g.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: g.dim() });
            }
            if !g.is_invertible() {
                return Err(Error::Singular);
            }
        }
        Ok(MatrixGroup { field: Arc::clone(field), dim, generators, enumeration: OnceLock::new() })
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[FFMatrix] {
        &self.generators
    }

    pub fn identity(&self) -> FFMatrix {
        FFMatrix::identity(&self.field, self.dim)
    }

    /// Breadth-first closure: identity, then generators in order, then products
    /// in discovery order.
    pub fn enumerate(&self, cap: u64) -> Result<&[FFMatrix]> {
        if let Some(e) = self.enumeration.get() {
            if e.elements.len() as u64 > cap {
                return Err(Error::CapExceeded { what: "matrix group order", cap });
            }
            return Ok(&e.elements);
        }
        let e = closure(&self.field, self.dim, &self.generators, cap)?;
        let _ = self.enumeration.set(e);
        Ok(&self.enumeration.get().unwrap().elements)
    }

    pub fn order(&self, cap: u64) -> Result<u64> {
        Ok(self.enumerate(cap)?.len() as u64)
    }

    /// Membership against the enumerated element set.
    pub fn contains(&self, m: &FFMatrix, cap: u64) -> Result<bool> {
        self.enumerate(cap)?;
        Ok(self.enumeration.get().unwrap().index.contains_key(m.entries()))
    }

    fn position(&self, m: &FFMatrix) -> Option<u32> {
        self.enumeration.get().and_then(|e| e.index.get(m.entries()).copied())
    }

    /// Element orders as a histogram `{order: count}`.
    pub fn order_histogram(&self, cap: u64) -> Result<BTreeMap<u64, u64>> {
        let elems = self.enumerate(cap)?;
        let limit = elems.len() as u64;
        let mut hist = BTreeMap::new();
        for m in elems {
            let o = m.order(limit).expect("element order divides group order");
            *hist.entry(o).or_insert(0) += 1;
        }
        Ok(hist)
    }

    /// `λ` values with `λI` in the group.
    pub fn scalars(&self, cap: u64) -> Result<Vec<u32>> {
        let mut s: Vec<u32> = self.enumerate(cap)?.iter().filter_map(|m| m.as_scalar()).collect();
        s.sort_unstable();
        Ok(s)
    }

    /// Subgroup generated by the elements having eigenvalue 1.
    pub fn r_subgroup(&self, cap: u64) -> Result<RSubgroup> {
        let elems = self.enumerate(cap)?;
        let mut gens: Vec<FFMatrix> = Vec::new();
        let mut sub = closure(&self.field, self.dim, &gens, cap)?;
        for h in elems {
            if !sub.index.contains_key(h.entries()) && h.has_eigenvalue_one() {
                gens.push(h.clone());
                sub = closure(&self.field, self.dim, &gens, cap)?;
            }
        }
        let normal = gens.iter().all(|r| {
            self.generators.iter().all(|g| {
                let conj = g.inverse().unwrap().mul(r).mul(g);
                sub.index.contains_key(conj.entries())
            })
        });
        let index = elems.len() as u64 / sub.elements.len() as u64;
        let group = MatrixGroup { field: Arc::clone(&self.field), dim: self.dim, generators: gens, enumeration: OnceLock::new() };
        let _ = group.enumeration.set(sub);
        Ok(RSubgroup { subgroup: group, index, normal })
    }

    /// `H/N` as a permutation group on the right cosets of the normal subgroup `N`.
    pub fn quotient(&self, normal: &MatrixGroup, cap: u64) -> Result<PermGroup> {
        let elems = self.enumerate(cap)?;
        let sub = normal.enumerate(cap)?;
        let mut coset_of = vec![u32::MAX; elems.len()];
        let mut reps: Vec<usize> = Vec::new();
        for (i, h) in elems.iter().enumerate() {
            if coset_of[i] != u32::MAX {
                continue;
            }
            let label = reps.len() as u32;
            reps.push(i);
            for r in sub {
                let k = self.position(&r.mul(h)).ok_or(Error::NotSubgroup)?;
                coset_of[k as usize] = label;
            }
        }
        let gens: Vec<Perm> = self
            .generators
            .iter()
            .map(|g| {
                let images = reps.iter().map(|&i| coset_of[self.position(&elems[i].mul(g)).unwrap() as usize]).collect();
                Perm::from_images(images).map_err(|_| Error::NotNormal)
            })
            .collect::<Result<_>>()?;
        PermGroup::new(reps.len().max(1), gens)
    }

    /// `|H:R(H)| <= q^d - 1`, together with semiregularity of `H/R(H)` on the
    /// R(H)-orbits of nonzero vectors.
    pub fn r_index_bound_check(&self, cap: u64) -> Result<RBoundCheck> {
        let r = self.r_subgroup(cap)?;
        let q = self.field.order() as u64;
        let bound = q.pow(self.dim as u32) - 1;
        let semiregular = if r.index == 1 {
            true
        } else if bound < ORBIT_VECTOR_CAP {
            self.cosets_semiregular_on_orbits(&r.subgroup, cap)?
        } else {
            // Equivalent criterion: no element outside R(H) fixes a nonzero vector.
            let elems = self.enumerate(cap)?;
            elems
                .iter()
                .filter(|h| !r.subgroup.contains(h, cap).unwrap_or(true))
                .all(|h| !h.has_eigenvalue_one())
        };
        Ok(RBoundCheck { index: r.index, bound, within_bound: r.index <= bound, semiregular })
    }

    fn cosets_semiregular_on_orbits(&self, r: &MatrixGroup, cap: u64) -> Result<bool> {
        let space = VectorSpace::new(&self.field, self.dim);
        let n = space.size as usize;
        // union-find over vector indices, merged along R's generators
        let mut parent: Vec<u32> = (0..n as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for g in r.generators() {
            let perm = space.action(g);
            for x in 1..n as u32 {
                let (a, b) = (find(&mut parent, x), find(&mut parent, perm[x as usize]));
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
        let label: Vec<u32> = (0..n as u32).map(|x| find(&mut parent, x)).collect();
        let orbit_reps: Vec<u32> = (1..n as u32).filter(|&x| label[x as usize] == x).collect();

        // One representative per non-trivial coset of R.
        let elems = self.enumerate(cap)?;
        let sub = r.enumerate(cap)?;
        let mut seen = vec![false; elems.len()];
        for (i, h) in elems.iter().enumerate() {
            if seen[i] {
                continue;
            }
            for s in sub {
                seen[self.position(&s.mul(h)).ok_or(Error::NotSubgroup)? as usize] = true;
            }
            if r.contains(h, cap)? {
                continue;
            }
            for &v in &orbit_reps {
                let w = space.apply(h, v);
                if label[w as usize] == label[v as usize] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The linear action on all `q^d` vectors, vector `v` numbered `sum v_i q^i`.
    pub fn vector_action(&self) -> Result<PermGroup> {
        let space = VectorSpace::new(&self.field, self.dim);
        if space.size > crate::permgrp::DEFAULT_MAX_DEGREE {
            return Err(Error::DegreeTooLarge { degree: space.size, cap: crate::permgrp::DEFAULT_MAX_DEGREE });
        }
        let gens = self.generators.iter().map(|g| Perm::from_images(space.action(g))).collect::<Result<_>>()?;
        PermGroup::new(space.size as usize, gens)
    }

    /// True iff every nonzero vector spins up to the whole space.
    pub fn is_irreducible(&self) -> Result<Irreducibility> {
        let q = self.field.order() as u64;
        let d = self.dim;
        let lines = (q.pow(d as u32) - 1) / (q - 1);
        let workload = d as u64 * lines;
        if workload > SPIN_WORKLOAD_CAP {
            return Err(Error::CapExceeded { what: "spinning workload", cap: SPIN_WORKLOAD_CAP });
        }
        // Representatives of 1-spaces: first nonzero coordinate equal to 1.
        let mut v = vec![0u32; d];
        for lead in 0..d {
            let tail = d - lead - 1;
            for t in 0..q.pow(tail as u32) {
                v.iter_mut().for_each(|c| *c = 0);
                v[lead] = 1;
                let mut rem = t;
                for c in v.iter_mut().skip(lead + 1) {
                    *c = (rem % q) as u32;
                    rem /= q;
                }
                let span = self.spin(&v);
                if span.len() < d {
                    return Ok(Irreducibility { irreducible: false, witness: Some(span) });
                }
            }
        }
        Ok(Irreducibility { irreducible: true, witness: None })
    }

    /// Row-reduced basis of the smallest invariant subspace containing `v`.
    pub fn spin(&self, v: &[u32]) -> Vec<Vec<u32>> {
        let f = &*self.field;
        let d = self.dim;
        let mut basis: Vec<Vec<u32>> = Vec::new();
        let mut queue: Vec<Vec<u32>> = vec![v.to_vec()];
        while let Some(w) = queue.pop() {
            let mut trial = basis.clone();
            trial.push(w.clone());
            if row_reduce(f, &mut trial) > basis.len() {
                trial.truncate(basis.len() + 1);
                basis = trial;
                if basis.len() == d {
                    return basis;
                }
                for g in &self.generators {
                    queue.push(g.apply(&w));
                }
            }
        }
        basis
    }

    /// Central product realized as `<x ⊗ I, I ⊗ y>` on the tensor product.
    pub fn central_product(x: &MatrixGroup, y: &MatrixGroup, cap: u64) -> Result<MatrixGroup> {
        if *x.field != *y.field {
            return Err(Error::FieldMismatch);
        }
        let ix = x.identity();
        let iy = y.identity();
        let mut gens = Vec::new();
        for g in x.generators() {
            gens.push(g.kronecker(&iy)?);
        }
        for g in y.generators() {
            gens.push(ix.kronecker(g)?);
        }
        let h = MatrixGroup::new(&x.field, x.dim * y.dim, gens)?;
        let sx = x.scalars(cap)?;
        let sy = y.scalars(cap)?;
        let shared = sx.iter().filter(|l| sy.contains(l)).count() as u64;
        let expected = x.order(cap)? * y.order(cap)? / shared;
        let order = h.order(cap)?;
        if order != expected {
            return Err(Error::Internal(format!("central product has order {order}, expected {expected}")));
        }
        Ok(h)
    }
}

fn closure(field: &Arc<FieldSpec>, dim: usize, gens: &[FFMatrix], cap: u64) -> Result<Enumeration> {
    let id = FFMatrix::identity(field, dim);
    let mut index = HashMap::new();
    index.insert(id.entries().to_vec(), 0u32);
    let mut elements = vec![id];
    let mut k = 0;
    while k < elements.len() {
        for g in gens {
            let y = elements[k].mul(g);
            if !index.contains_key(y.entries()) {
                if elements.len() as u64 >= cap {
                    return Err(Error::CapExceeded { what: "matrix group order", cap });
                }
                index.insert(y.entries().to_vec(), elements.len() as u32);
                elements.push(y);
            }
        }
        k += 1;
    }
    Ok(Enumeration { elements, index })
}

/// `GF(q)^d` with vectors encoded as integers `sum v_i q^i`.
pub struct VectorSpace {
    pub field: Arc<FieldSpec>,
    pub dim: usize,
    pub size: u64,
}

impl VectorSpace {
    pub fn new(field: &Arc<FieldSpec>, dim: usize) -> VectorSpace {
        VectorSpace { field: Arc::clone(field), dim, size: (field.order() as u64).pow(dim as u32) }
    }

    pub fn decode(&self, mut x: u32) -> Vec<u32> {
        let q = self.field.order();
        (0..self.dim)
            .map(|_| {
                let c = x % q;
                x /= q;
                c
            })
            .collect()
    }

    pub fn encode(&self, v: &[u32]) -> u32 {
        let q = self.field.order();
        v.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    pub fn apply(&self, m: &FFMatrix, x: u32) -> u32 {
        self.encode(&m.apply(&self.decode(x)))
    }

    /// The permutation of all vectors induced by `m`.
    pub fn action(&self, m: &FFMatrix) -> Vec<u32> {
        (0..self.size as u32).map(|x| self.apply(m, x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgrp::named;

    fn gf(p: u64) -> Arc<FieldSpec> {
        FieldSpec::new(p, 1).unwrap()
    }

    fn m(f: &Arc<FieldSpec>, rows: &[&[u32]]) -> FFMatrix {
        FFMatrix::from_rows(f, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        let f5 = gf(5);
        let triv = MatrixGroup::new(&f5, 2, vec![FFMatrix::identity(&f5, 2)]).unwrap();
        assert_eq!(triv.order(100).unwrap(), 1);
        let q8 = MatrixGroup::new(&f5, 2, vec![m(&f5, &[&[0, 4], &[1, 0]]), m(&f5, &[&[2, 0], &[0, 3]])]).unwrap();
        assert_eq!(q8.order(100).unwrap(), 8);
        // independent brute-force histogram
        let mut hist = BTreeMap::new();
        for e in q8.enumerate(100).unwrap() {
            let mut k = 1;
            let mut x = e.clone();
            while !x.is_identity() {
                x = x.mul(e);
                k += 1;
            }
            *hist.entry(k).or_insert(0u64) += 1;
        }
        assert_eq!(hist, BTreeMap::from([(1, 1), (2, 1), (4, 6)]));
        assert_eq!(q8.order_histogram(100).unwrap(), hist);
        // deterministic order: identity, then generators
        let e = q8.enumerate(100).unwrap();
        assert!(e[0].is_identity());
        assert_eq!(e[1], q8.generators()[0]);
        assert_eq!(e[2], q8.generators()[1]);

        let gl23 = named::general_linear(&gf(3), 2);
        assert_eq!(gl23.order(1000).unwrap(), (9 - 1) * (9 - 3));
        assert!(matches!(gl23.order(10), Err(Error::CapExceeded { .. })));
        assert!(matches!(
            MatrixGroup::new(&f5, 2, vec![m(&f5, &[&[1, 2], &[2, 4]])]),
            Err(Error::Singular)
        ));
    }

    #[test]
    fn r_subgroup_examples() {
        let f5 = gf(5);
        let scal = named::scalars(&f5, 2);
        let r = scal.r_subgroup(1000).unwrap();
        assert_eq!(r.subgroup.order(1000).unwrap(), 1);
        assert_eq!(r.index, 4);
        assert!(r.normal);
        let chk = scal.r_index_bound_check(1000).unwrap();
        assert_eq!(chk, RBoundCheck { index: 4, bound: 24, within_bound: true, semiregular: true });

        let gl23 = named::general_linear(&gf(3), 2);
        let r = gl23.r_subgroup(1000).unwrap();
        assert_eq!(r.index, 1);
        assert!(gl23.r_index_bound_check(1000).unwrap().holds());
    }

    #[test]
    fn semiregularity_detects_fixed_orbit() {
        // Treat a non-R subgroup as "R": <diag(1,4)> inside <diag(1,2)> over GF(5).
        // diag(1,2) maps the orbit of (1,0) to itself, so the check must fail.
        let f5 = gf(5);
        let h = MatrixGroup::new(&f5, 2, vec![FFMatrix::diagonal(&f5, &[1, 2])]).unwrap();
        let fake = MatrixGroup::new(&f5, 2, vec![FFMatrix::diagonal(&f5, &[1, 4])]).unwrap();
        assert!(!h.cosets_semiregular_on_orbits(&fake, 1000).unwrap());
    }

    #[test]
    fn trivial_r_iff_semiregular() {
        // R(H) = 1 exactly when H is semiregular on nonzero vectors.
        let f5 = gf(5);
        let f3 = gf(3);
        let groups = vec![
            named::scalars(&f5, 2),
            named::general_linear(&f3, 2),
            MatrixGroup::new(&f5, 2, vec![m(&f5, &[&[0, 4], &[1, 0]]), m(&f5, &[&[2, 0], &[0, 3]])]).unwrap(),
            MatrixGroup::new(&f5, 2, vec![FFMatrix::diagonal(&f5, &[2, 3])]).unwrap(),
            named::quaternion(&f3).unwrap(),
        ];
        for h in groups {
            let r = h.r_subgroup(10_000).unwrap();
            let space = VectorSpace::new(h.field(), h.dim());
            let semiregular = h
                .enumerate(10_000)
                .unwrap()
                .iter()
                .filter(|g| !g.is_identity())
                .all(|g| (1..space.size as u32).all(|x| space.apply(g, x) != x));
            assert_eq!(r.subgroup.order(10_000).unwrap() == 1, semiregular, "{:?}", h);
        }
    }

    #[test]
    fn reducible_r_has_invariant_subspace() {
        // Non-trivial reducible R(H): the spinning test finds a witness.
        let f5 = gf(5);
        let h = MatrixGroup::new(&f5, 2, vec![FFMatrix::diagonal(&f5, &[1, 2]), FFMatrix::diagonal(&f5, &[4, 1])]).unwrap();
        let r = h.r_subgroup(1000).unwrap();
        assert!(r.subgroup.order(1000).unwrap() > 1);
        let irr = r.subgroup.is_irreducible().unwrap();
        assert!(!irr.irreducible);
        let w = irr.witness.unwrap();
        assert!(!w.is_empty() && w.len() < 2);
    }

    #[test]
    fn irreducibility_examples() {
        let f5 = gf(5);
        let torus = MatrixGroup::new(&f5, 2, vec![FFMatrix::diagonal(&f5, &[2, 3])]).unwrap();
        let irr = torus.is_irreducible().unwrap();
        assert!(!irr.irreducible);
        assert_eq!(irr.witness, Some(vec![vec![1, 0]]));
        let dihedral = named::dihedral_split_torus(&f5).unwrap();
        assert!(dihedral.is_irreducible().unwrap().irreducible);
    }

    #[test]
    fn central_product_examples() {
        let f5 = gf(5);
        let minus = MatrixGroup::new(&f5, 2, vec![FFMatrix::scalar(&f5, 2, 4)]).unwrap();
        let cp = MatrixGroup::central_product(&minus, &minus, 1000).unwrap();
        assert_eq!(cp.order(1000).unwrap(), 2);
        assert_eq!(cp.dim(), 4);
    }

    #[test]
    fn quotient_by_r_subgroup() {
        let f5 = gf(5);
        let scal = named::scalars(&f5, 2);
        let r = scal.r_subgroup(100).unwrap();
        let q = scal.quotient(&r.subgroup, 100).unwrap();
        assert_eq!(q.order(), 4);
    }
}
