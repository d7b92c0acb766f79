//! The generated corpus of transitive groups.

use crate::families::{
    affine_group, direct_product_action, frobenius_complement_example, pgammal_28, pgl2, semilinear_example,
    unit_multiplier, wreath_product_action, wreath_product_imprimitive,
};
use crate::gf::FieldSpec;
use crate::matgrp::{named, FFMatrix, MatrixGroup, VectorSpace};
use crate::permgrp::{standard, Perm, PermGroup};

pub struct CorpusEntry {
    pub name: String,
    pub group: PermGroup,
    /// The group is known to have a regular normal subgroup.
    pub regular_normal: bool,
}

fn entry(name: impl Into<String>, group: PermGroup, regular_normal: bool) -> CorpusEntry {
    CorpusEntry { name: name.into(), group, regular_normal }
}

fn field(p: u64, f: u32) -> std::sync::Arc<FieldSpec> {
    FieldSpec::new(p, f).expect("valid field")
}

fn affine(name: &str, h: &MatrixGroup) -> CorpusEntry {
    entry(name, affine_group(h).expect("small affine group"), true)
}

/// `PSL(2,7) ≅ GL(3,2)` on the 7 nonzero vectors of `GF(2)^3`.
pub fn gl32_on_nonzero_vectors() -> PermGroup {
    let f2 = field(2, 1);
    let gl = named::general_linear(&f2, 3);
    let space = VectorSpace::new(&f2, 3);
    let gens = gl
        .generators()
        .iter()
        .map(|m| Perm::from_images(space.action(m)[1..].iter().map(|&x| x - 1).collect()).unwrap())
        .collect();
    PermGroup::new(7, gens).unwrap()
}

/// `V : GF(q)*` on `GF(q)^2`, the imprimitive Frobenius group of order `q^2 (q - 1)`.
pub fn scalar_affine(q: u64) -> PermGroup {
    let (p, f) = crate::util::prime_power(q).expect("prime power");
    affine_group(&named::scalars(&field(p, f), 2)).expect("small affine group")
}

/// Roughly sixty transitive groups of degree at most 125.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in [2, 3, 4, 5, 6, 7, 8, 9, 12] {
        out.push(entry(format!("C{n}"), standard::cyclic(n), true));
    }
    for n in [3, 4, 5, 6, 7, 8, 10, 12] {
        out.push(entry(format!("D{} on {n}", 2 * n), standard::dihedral(n), true));
    }
    for n in 2..=8 {
        out.push(entry(format!("S{n}"), standard::symmetric(n), n <= 4));
    }
    for n in 3..=8 {
        out.push(entry(format!("A{n}"), standard::alternating(n), n <= 4));
    }
    for p in [5, 7, 11, 13] {
        out.push(entry(format!("AGL(1,{p})"), standard::affine_line(p), true));
    }
    for (p, f) in [(2u64, 2u32), (2, 3), (3, 2), (2, 4)] {
        let q = p.pow(f);
        out.push(affine(&format!("AGL(1,{q})"), &named::general_linear(&field(p, f), 1)));
    }
    out.push(entry("V:GF(3)* on 9", scalar_affine(3), true));
    out.push(entry("V:GF(4)* on 16", scalar_affine(4), true));
    out.push(entry("V:GF(5)* on 25", scalar_affine(5), true));
    out.push(affine("AGL(2,2)", &named::general_linear(&field(2, 1), 2)));
    out.push(affine("AGL(2,3)", &named::general_linear(&field(3, 1), 2)));
    out.push(affine("AGL(3,2)", &named::general_linear(&field(2, 1), 3)));
    out.push(affine("V:Q8 on 9", &named::quaternion(&field(3, 1)).unwrap()));
    out.push(affine("V:SL(2,3) on 9", &named::sl2_3(&field(3, 1)).unwrap()));
    out.push(affine("V:D8 on 9", &named::dihedral(&field(3, 1), 8).unwrap()));
    out.push(affine("V:D8 on 25", &named::dihedral(&field(5, 1), 8).unwrap()));
    out.push(affine("V:Q8 on 25", &named::quaternion(&field(5, 1)).unwrap()));
    out.push(affine("V:D12 on 25", &named::dihedral(&field(5, 1), 12).unwrap()));
    let f5 = field(5, 1);
    let torus = MatrixGroup::new(&f5, 2, vec![FFMatrix::diagonal(&f5, &[2, 3])]).unwrap();
    out.push(affine("V:C4 torus on 25", &torus));
    for q in [3, 4, 5] {
        out.push(entry(format!("semilinear q={q}"), semilinear_example(q).unwrap(), true));
    }
    for (p, f) in [(2u64, 2u32), (5, 1), (7, 1), (2, 3), (3, 2)] {
        let q = p.pow(f);
        out.push(entry(format!("PGL(2,{q})"), pgl2(&field(p, f)).unwrap(), false));
    }
    out.push(entry("PSL(2,7) on 7", gl32_on_nonzero_vectors(), false));
    out.push(entry("PΓL(2,8) on 28", pgammal_28().unwrap(), false));
    out.push(entry("S2 wr C2 product", wreath_product_action(&standard::symmetric(2), 2).unwrap(), true));
    out.push(entry("C3 wr C2 product", wreath_product_action(&standard::cyclic(3), 2).unwrap(), true));
    out.push(entry("S3 wr C2 product", wreath_product_action(&standard::symmetric(3), 2).unwrap(), true));
    out.push(entry("S3 wr C3 product", wreath_product_action(&standard::symmetric(3), 3).unwrap(), true));
    out.push(entry("S4 wr C2 product", wreath_product_action(&standard::symmetric(4), 2).unwrap(), true));
    out.push(entry("AGL(1,5) wr C2 product", wreath_product_action(&standard::affine_line(5), 2).unwrap(), true));
    out.push(entry("S3 wr C2", wreath_product_imprimitive(&standard::symmetric(3), &standard::cyclic(2)).unwrap(), false));
    out.push(entry("C2 wr C3", wreath_product_imprimitive(&standard::cyclic(2), &standard::cyclic(3)).unwrap(), false));
    out.push(entry("S3 wr S3", wreath_product_imprimitive(&standard::symmetric(3), &standard::symmetric(3)).unwrap(), false));
    out.push(entry("AGL(1,5) wr C2", wreath_product_imprimitive(&standard::affine_line(5), &standard::cyclic(2)).unwrap(), false));
    out.push(entry("C3 x S3", direct_product_action(&standard::cyclic(3), &standard::symmetric(3)).unwrap(), true));
    out.push(entry("S3 x S3", direct_product_action(&standard::symmetric(3), &standard::symmetric(3)).unwrap(), true));
    out.push(entry("A4 x C5", direct_product_action(&standard::alternating(4), &standard::cyclic(5)).unwrap(), true));
    out.push(entry("AGL(1,5) x AGL(1,7)", direct_product_action(&standard::affine_line(5), &standard::affine_line(7)).unwrap(), true));
    for (m, h, q) in [(5u64, 4u64, 3u64), (7, 3, 2), (5, 2, 3), (3, 2, 3)] {
        let hg = unit_multiplier(m, h).unwrap();
        out.push(entry(
            format!("C{m}^{q}:(C{h}xC{q})"),
            frobenius_complement_example(m, &hg, q).unwrap(),
            true,
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_transitive_and_bounded() {
        let c = corpus();
        assert!(c.len() >= 60, "{} groups", c.len());
        let mut names = std::collections::HashSet::new();
        for e in &c {
            assert!(names.insert(e.name.clone()), "duplicate {}", e.name);
            assert!(e.group.is_transitive(), "{}", e.name);
            assert!(e.group.degree() <= 125, "{}", e.name);
            assert!(e.group.order() <= 2_000_000, "{}", e.name);
        }
        assert_eq!(gl32_on_nonzero_vectors().order(), 168);
    }
}
