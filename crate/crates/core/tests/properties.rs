use std::collections::HashSet;
use std::sync::Arc;

use proptest::prelude::*;

use dgroup::derange::{analyze, identify_quotient, AnalysisOptions, AnalysisReport};
use dgroup::gf::FieldSpec;
use dgroup::matgrp::FFMatrix;
use dgroup::permgrp::{standard, Perm, PermGroup};

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
}

/// A transitive group: an `n`-cycle plus up to two random permutations.
fn transitive_group() -> impl Strategy<Value = PermGroup> {
    (3usize..=7).prop_flat_map(|n| {
        prop::collection::vec(perm(n), 0..=2).prop_map(move |mut gens| {
            gens.push(Perm::from_images((0..n as u32).map(|x| (x + 1) % n as u32).collect()).unwrap());
            PermGroup::new(n, gens).unwrap()
        })
    })
}

fn closure_count(g: &PermGroup) -> usize {
    let id = Perm::identity(g.degree());
    let mut seen = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for s in g.generators() {
            let y = x.mul(s);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.len()
}

fn small_field() -> impl Strategy<Value = Arc<FieldSpec>> {
    prop::sample::select(vec![(2u64, 1u32), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3)])
        .prop_map(|(p, f)| FieldSpec::new(p, f).unwrap())
}

fn matrix(field: Arc<FieldSpec>, d: usize) -> impl Strategy<Value = FFMatrix> {
    let q = field.order();
    prop::collection::vec(0..q, d * d).prop_map(move |e| {
        let rows: Vec<Vec<u32>> = e.chunks(d).map(|r| r.to_vec()).collect();
        FFMatrix::from_rows(&field, &rows).unwrap()
    })
}

fn vectors(field: &FieldSpec, d: usize) -> Vec<Vec<u32>> {
    let q = field.order();
    (0..q.pow(d as u32))
        .map(|mut x| {
            (0..d)
                .map(|_| {
                    let c = x % q;
                    x /= q;
                    c
                })
                .collect()
        })
        .collect()
}

/// Eigenvalues in the base field, by brute force over all vectors.
fn eigenvalues(m: &FFMatrix) -> HashSet<u32> {
    let f = m.field();
    let mut out = HashSet::new();
    for v in vectors(f, m.dim()).into_iter().filter(|v| v.iter().any(|&c| c != 0)) {
        let w = m.apply(&v);
        for lambda in 0..f.order() {
            if v.iter().zip(&w).all(|(&a, &b)| f.mul(lambda, a) == b) {
                out.insert(lambda);
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permutation_group_axioms(a in perm(6), b in perm(6), c in perm(6)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inverse()).is_identity());
        prop_assert!(a.pow(a.order()).is_identity());
        prop_assert_eq!(a.conjugate_by(&b), b.inverse().mul(&a).mul(&b));
    }

    #[test]
    fn chain_order_matches_closure(g in transitive_group()) {
        prop_assert_eq!(g.order(), closure_count(&g) as u128);
        let s = g.stabilizer(0);
        prop_assert_eq!(s.order() * g.degree() as u128, g.order());
    }

    #[test]
    fn derangement_subgroup_invariants(g in transitive_group()) {
        let a = analyze(&g, &AnalysisOptions::default()).unwrap();
        let r = &a.report;
        prop_assert!(r.checks.all(), "{:?}", r.checks);
        prop_assert!(a.d.group.is_normal_in(&g));
        prop_assert!(a.d.group.is_transitive());
        prop_assert_eq!((r.degree - 1) % r.index, 0);
        prop_assert!(r.derangements as u128 * r.degree as u128 >= g.order());
        let mut outside_ok = true;
        g.for_each_element(1_000_000, |x| outside_ok &= a.d.group.contains(x) || x.fixed_point_count() == 1).unwrap();
        prop_assert!(outside_ok);
    }

    #[test]
    fn reports_round_trip_through_json(g in transitive_group()) {
        let r = analyze(&g, &AnalysisOptions::default()).unwrap().report;
        let back: AnalysisReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn field_operations(k in small_field(), a in 0u32..64, b in 0u32..64, c in 0u32..64) {
        let q = k.order();
        let (a, b, c) = (a % q, b % q, c % q);
        prop_assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
        prop_assert_eq!(k.sub(k.add(a, b), b), a);
        prop_assert_eq!(k.pow(a, q as u64), a);
        if a != 0 {
            prop_assert_eq!(k.mul(a, k.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn eigenvalue_one_matches_fixed_vectors(
        (k, m) in small_field().prop_flat_map(|k| (Just(k.clone()), matrix(k, 2)))
    ) {
        let fixed = vectors(&k, 2).into_iter().any(|v| v.iter().any(|&c| c != 0) && m.apply(&v) == v);
        prop_assert_eq!(m.has_eigenvalue_one(), fixed);
    }

    #[test]
    fn determinant_is_multiplicative(
        (k, a, b) in small_field().prop_flat_map(|k| (Just(k.clone()), matrix(k.clone(), 3), matrix(k, 3)))
    ) {
        prop_assert_eq!(a.mul(&b).determinant(), k.mul(a.determinant(), b.determinant()));
        prop_assert!(a.mul(&b).rank() <= a.rank().min(b.rank()));
    }

    #[test]
    fn kronecker_eigenvalues_multiply(
        (k, a, b) in prop::sample::select(vec![(3u64, 1u32), (5, 1), (2, 2)])
            .prop_map(|(p, f)| FieldSpec::new(p, f).unwrap())
            .prop_flat_map(|k| (Just(k.clone()), matrix(k.clone(), 2), matrix(k, 2)))
    ) {
        let ab = a.kronecker(&b).unwrap();
        let spectrum = eigenvalues(&ab);
        for &x in &eigenvalues(&a) {
            for &y in &eigenvalues(&b) {
                prop_assert!(spectrum.contains(&k.mul(x, y)));
            }
        }
        let (da, db) = (a.determinant(), b.determinant());
        prop_assert_eq!(ab.determinant(), k.mul(k.pow(da, 2), k.pow(db, 2)));
    }
}

fn catalog_groups() -> Vec<PermGroup> {
    vec![
        standard::symmetric(3),
        standard::alternating(4),
        standard::dihedral(4),
        standard::dihedral(6),
        standard::alternating(5),
        PermGroup::new(4, vec![Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(), Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap()])
            .unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn quotient_label_survives_rerepresentation(which in 0usize..6, pick in 0usize..120) {
        let g = &catalog_groups()[which];
        let (fp, name) = identify_quotient(g).unwrap();
        prop_assert_ne!(name.as_str(), "unrecognized");
        let elems = g.enumerate_elements(1000).unwrap();
        let x = &elems[pick % elems.len()];
        let h = PermGroup::new(g.degree(), vec![x.clone()]).unwrap();
        for sub in [PermGroup::trivial(g.degree()), h] {
            let action = g.coset_action(&sub, 1000).unwrap();
            if action.kernel_order == 1 {
                let (fp2, name2) = identify_quotient(&action.image).unwrap();
                prop_assert_eq!(&name2, &name);
                prop_assert_eq!(&fp2, &fp);
            }
        }
    }
}
