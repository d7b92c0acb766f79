use dgroup::derange::derangement_subgroup;
use dgroup::families::{direct_product_action, pgammal_28};
use dgroup::permgrp::{standard, Perm, PermGroup};
use dgroup::suite::{corpus, run_corpus, CorpusOptions};

const CAP: u64 = 2_000_000;

fn d_of(g: &PermGroup) -> PermGroup {
    derangement_subgroup(g, CAP).unwrap().group
}

fn is_prime_order(x: &Perm) -> bool {
    let k = x.order();
    k > 1 && (2..k).take_while(|d| d * d <= k).all(|d| k % d != 0)
}

/// Every minimal normal subgroup `M` is the normal closure of any of its
/// prime-order elements. If `M` is not inside `D`, some prime-order `x ∈ M \ D`
/// has `ncl(x) = M` meeting the normal subgroup `D` trivially.
#[test]
fn socle_lies_in_derangement_subgroup() {
    let mut tested = 0;
    for e in corpus() {
        let g = &e.group;
        if g.order() > 2_000 || !g.is_primitive().unwrap() {
            continue;
        }
        tested += 1;
        let d = d_of(g);
        for x in g.enumerate_elements(CAP).unwrap() {
            if !is_prime_order(&x) || d.contains(&x) {
                continue;
            }
            let m = g.normal_closure(&[x]);
            let mut gens = m.generators().to_vec();
            gens.extend_from_slice(d.generators());
            let joined = PermGroup::new(g.degree(), gens).unwrap();
            assert!(
                joined.order() < m.order() * d.order(),
                "{}: a normal subgroup outside D(G) meets it trivially",
                e.name
            );
        }
    }
    assert!(tested >= 20, "only {tested} primitive groups checked");
}

fn centralizer_fixes_point(g: &PermGroup, s: &Perm) -> bool {
    let c: Vec<Perm> = g.enumerate_elements(CAP).unwrap().into_iter().filter(|x| x.mul(s) == s.mul(x)).collect();
    (0..g.degree() as u32).any(|a| c.iter().all(|x| x.apply(a) == a))
}

#[test]
fn coprime_centralizer_forces_derangements_into_n() {
    // C7 : C3 on 7 points
    let shift = Perm::from_images((0..7).map(|x| (x + 1) % 7).collect()).unwrap();
    let sigma = Perm::from_images((0..7).map(|x| (2 * x) % 7).collect()).unwrap();
    let g = PermGroup::new(7, vec![shift.clone(), sigma.clone()]).unwrap();
    let n = PermGroup::new(7, vec![shift]).unwrap();
    assert!(centralizer_fixes_point(&g, &sigma));
    assert!(d_of(&g).is_subgroup_of(&n));

    // PGammaL(2,8) on 28 points, N = PGL(2,8) its derived subgroup
    let g = pgammal_28().unwrap();
    let gens = g.generators();
    let commutators: Vec<Perm> =
        gens.iter().flat_map(|a| gens.iter().map(move |b| a.inverse().mul(&b.inverse()).mul(a).mul(b))).collect();
    let n = g.normal_closure(&commutators);
    assert_eq!(n.order(), 504);
    let sigma = g
        .enumerate_elements(CAP)
        .unwrap()
        .into_iter()
        .find(|x| x.order() == 3 && !n.contains(x) && centralizer_fixes_point(&g, x))
        .expect("an order-3 outer element with centralizer in a point stabilizer");
    assert!(!n.contains(&sigma));
    assert!(d_of(&g).is_subgroup_of(&n));
}

#[test]
fn regular_nonabelian_minimal_normal_gives_whole_group() {
    let a5 = standard::alternating(5);
    let elems = a5.enumerate_elements(CAP).unwrap();
    let index = |p: &Perm| elems.iter().position(|q| q == p).unwrap() as u32;
    let act = |f: &dyn Fn(&Perm) -> Perm| Perm::from_images(elems.iter().map(|x| index(&f(x))).collect()).unwrap();
    let right: Vec<Perm> = a5.generators().iter().map(|a| act(&|x: &Perm| x.mul(a))).collect();
    let left: Vec<Perm> = a5.generators().iter().map(|a| act(&|x: &Perm| a.inverse().mul(x))).collect();
    let t = Perm::from_cycles(5, &[&[0, 1]]).unwrap();
    let twist = act(&|x: &Perm| x.conjugate_by(&t));

    // A5 regular, extended by an outer automorphism
    let mut gens = right.clone();
    gens.push(twist);
    let g = PermGroup::new(60, gens).unwrap();
    assert_eq!(g.order(), 120);
    assert!(d_of(&g).same_group(&g));

    // A5 x A5 with both factors regular
    let g = PermGroup::new(60, [right, left].concat()).unwrap();
    assert_eq!(g.order(), 3600);
    assert!(d_of(&g).same_group(&g));
}

#[test]
fn direct_products_are_generated_by_derangements() {
    let pairs = [
        (standard::cyclic(3), standard::symmetric(3)),
        (standard::symmetric(3), standard::symmetric(3)),
        (standard::alternating(4), standard::cyclic(5)),
        (standard::affine_line(5), standard::dihedral(4)),
    ];
    for (a, b) in pairs {
        let g = direct_product_action(&a, &b).unwrap();
        assert_eq!(g.order(), a.order() * b.order());
        assert!(d_of(&g).same_group(&g));
    }
}

#[test]
fn fixed_points_average_to_one() {
    for e in corpus() {
        let mut total: i64 = 0;
        e.group.for_each_element(CAP, |g| total += g.fixed_point_count() as i64 - 1).unwrap();
        assert_eq!(total, 0, "{}", e.name);
    }
}

#[test]
fn split_complements_fix_a_point() {
    let results = run_corpus(&corpus(), &CorpusOptions { max_order: CAP, inject_fault: false });
    let outcomes: Vec<bool> = results.iter().filter_map(|r| r.checks.complement_fixes_point).collect();
    assert!(outcomes.iter().all(|&b| b));
    assert!(outcomes.len() >= 5, "only {} split groups with a regular normal subgroup", outcomes.len());
}
