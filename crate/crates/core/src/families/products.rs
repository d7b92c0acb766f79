use crate::error::{Error, Result};
use crate::permgrp::{Perm, PermGroup};
use crate::util::{gcd, is_prime};

/// Largest point set built by the product constructions.
pub const PRODUCT_DEGREE_CAP: u64 = 100_000;

fn power_degree(m: usize, k: u32) -> Result<usize> {
    let n = (m as u64).saturating_pow(k);
    if n > PRODUCT_DEGREE_CAP {
        return Err(Error::DegreeTooLarge { degree: n, cap: PRODUCT_DEGREE_CAP });
    }
    Ok(n as usize)
}

/// Point `sum x_i m^i` of `Δ^k` for `Δ = {0..m}`.
fn coords(mut x: usize, m: usize, k: usize) -> Vec<usize> {
    (0..k)
        .map(|_| {
            let c = x % m;
            x /= m;
            c
        })
        .collect()
}

fn point(c: &[usize], m: usize) -> u32 {
    c.iter().rev().fold(0, |acc, &x| acc * m + x) as u32
}

/// Permutation of `Δ^k` applying `f` to the coordinate vector.
fn product_perm(m: usize, k: usize, n: usize, f: impl Fn(&mut Vec<usize>)) -> Perm {
    let images = (0..n)
        .map(|x| {
            let mut c = coords(x, m, k);
            f(&mut c);
            point(&c, m)
        })
        .collect();
    Perm::from_images(images).expect("coordinatewise bijection")
}

/// The cyclic shift of coordinates `(x_0, ..., x_{k-1}) -> (x_{k-1}, x_0, ...)`.
fn coordinate_cycle(m: usize, k: usize, n: usize) -> Perm {
    product_perm(m, k, n, |c| c.rotate_right(1))
}

/// `H wr C_k` in product action on `Δ^k`.
pub fn wreath_product_action(h: &PermGroup, k: u32) -> Result<PermGroup> {
    let m = h.degree();
    let n = power_degree(m, k)?;
    let k = k as usize;
    let mut gens: Vec<Perm> = h
        .generators()
        .iter()
        .map(|g| product_perm(m, k, n, |c| c[0] = g.apply(c[0] as u32) as usize))
        .collect();
    if k > 1 {
        gens.push(coordinate_cycle(m, k, n));
    }
    PermGroup::new(n, gens)
}

/// `H wr K` in imprimitive action on `Δ × {0..k}`, point `(x, i)` numbered `x + m i`.
pub fn wreath_product_imprimitive(h: &PermGroup, top: &PermGroup) -> Result<PermGroup> {
    let (m, k) = (h.degree(), top.degree());
    let n = m * k;
    if n as u64 > PRODUCT_DEGREE_CAP {
        return Err(Error::DegreeTooLarge { degree: n as u64, cap: PRODUCT_DEGREE_CAP });
    }
    let mut gens = Vec::new();
    for g in h.generators() {
        let images = (0..n).map(|x| if x < m { g.apply(x as u32) } else { x as u32 }).collect();
        gens.push(Perm::from_images(images)?);
    }
    for t in top.generators() {
        let images = (0..n).map(|x| (x % m + m * t.apply((x / m) as u32) as usize) as u32).collect();
        gens.push(Perm::from_images(images)?);
    }
    PermGroup::new(n, gens)
}

/// `G1 × G2` acting on `Ω1 × Ω2`, point `(a, b)` numbered `a + n1 b`.
pub fn direct_product_action(g1: &PermGroup, g2: &PermGroup) -> Result<PermGroup> {
    let (n1, n2) = (g1.degree(), g2.degree());
    let n = n1 * n2;
    if n as u64 > PRODUCT_DEGREE_CAP {
        return Err(Error::DegreeTooLarge { degree: n as u64, cap: PRODUCT_DEGREE_CAP });
    }
    let mut gens = Vec::new();
    for g in g1.generators() {
        gens.push(Perm::from_images((0..n).map(|x| (g.apply((x % n1) as u32) as usize + n1 * (x / n1)) as u32).collect())?);
    }
    for g in g2.generators() {
        gens.push(Perm::from_images((0..n).map(|x| (x % n1 + n1 * g.apply((x / n1) as u32) as usize) as u32).collect())?);
    }
    PermGroup::new(n, gens)
}

/// `N^q : (H × C_q)` on `Z_m^q` in product action.
///
/// `N = Z_m` acts by translation, `H` is a group of automorphisms of `Z_m`
/// given as permutations of `{0..m}`, acting diagonally, and `C_q` cycles the
/// coordinates.
pub fn frobenius_complement_example(m: u64, h: &PermGroup, q: u64) -> Result<PermGroup> {
    let mut violated = Vec::new();
    if m < 2 {
        violated.push(format!("N must be nontrivial (order {m})"));
    }
    if h.degree() as u64 != m {
        violated.push(format!("H must act on {m} points, found degree {}", h.degree()));
    }
    if !is_prime(q) {
        violated.push(format!("q = {q} must be prime"));
    }
    let h_order = h.order() as u64;
    if gcd(q, h_order) != 1 {
        violated.push(format!("gcd(q, |H|) = gcd({q}, {h_order}) must be 1"));
    }
    if violated.is_empty() {
        let mm = m as u32;
        for g in h.generators() {
            let unit = g.apply(1);
            if (0..mm).any(|x| g.apply(x) != ((x as u64 * unit as u64) % m) as u32) {
                violated.push("H must act on Z_m by automorphisms".into());
                break;
            }
        }
    }
    if violated.is_empty() {
        let mut fpf = true;
        h.for_each_element(crate::permgrp::DEFAULT_MAX_ORDER, |g| {
            if !g.is_identity() && g.fixed_point_count() != 1 {
                fpf = false;
            }
        })?;
        if !fpf {
            violated.push("H must act fixed-point-freely on N \\ {0}".into());
        }
    }
    if violated.is_empty() && m.saturating_pow(u32::try_from(q).unwrap_or(u32::MAX)) > PRODUCT_DEGREE_CAP {
        violated.push(format!("m^q = {m}^{q} exceeds {PRODUCT_DEGREE_CAP}"));
    }
    if !violated.is_empty() {
        return Err(Error::ConstraintViolated(violated.join("; ")));
    }
    let (m, k) = (m as usize, q as usize);
    let n = power_degree(m, q as u32)?;
    let mut gens = vec![product_perm(m, k, n, |c| c[0] = (c[0] + 1) % m)];
    for g in h.generators() {
        gens.push(product_perm(m, k, n, |c| c.iter_mut().for_each(|x| *x = g.apply(*x as u32) as usize)));
    }
    gens.push(coordinate_cycle(m, k, n));
    let group = PermGroup::new(n, gens)?;
    let expected = (n as u128) * h_order as u128 * q as u128;
    if group.order() != expected {
        return Err(Error::Internal(format!("order {} differs from expected {expected}", group.order())));
    }
    Ok(group)
}

/// Multiplication by the first unit of the given order modulo `m`, as a permutation of `Z_m`.
pub fn unit_multiplier(m: u64, order: u64) -> Result<PermGroup> {
    let unit = (1..m)
        .filter(|&u| gcd(u, m) == 1)
        .find(|&u| {
            let mut x = u % m;
            let mut k = 1;
            while x != 1 % m {
                x = x * u % m;
                k += 1;
            }
            k == order
        })
        .ok_or_else(|| Error::ConstraintViolated(format!("no unit of order {order} modulo {m}")))?;
    let images = (0..m).map(|x| (x * unit % m) as u32).collect();
    PermGroup::new(m as usize, vec![Perm::from_images(images)?])
}
