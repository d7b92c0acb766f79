//! Standard small permutation groups.

use super::group::PermGroup;
use super::perm::Perm;
use crate::util::is_prime;

fn shift(n: usize) -> Perm {
    Perm::from_images_unchecked((0..n as u32).map(|i| (i + 1) % n as u32).collect())
}

pub fn symmetric(n: usize) -> PermGroup {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Perm::from_cycles(n, &[&[0, 1]]).unwrap());
    }
    if n >= 3 {
        gens.push(shift(n));
    }
    PermGroup::new(n, gens).unwrap()
}

pub fn alternating(n: usize) -> PermGroup {
    let gens = (2..n as u32).map(|k| Perm::from_cycles(n, &[&[0, 1, k]]).unwrap()).collect();
    PermGroup::new(n, gens).unwrap()
}

/// Regular cyclic group of order `n`.
pub fn cyclic(n: usize) -> PermGroup {
    PermGroup::new(n, vec![shift(n)]).unwrap()
}

/// Dihedral group of order `2n` on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> PermGroup {
    let reflection = Perm::from_images_unchecked((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect());
    PermGroup::new(n, vec![shift(n), reflection]).unwrap()
}

/// `AGL(1, p)` on `Z/p` for a prime `p`.
pub fn affine_line(p: usize) -> PermGroup {
    assert!(is_prime(p as u64), "affine_line needs a prime");
    let w = (1..p as u64).find(|&w| (1..p as u64 - 1).all(|k| mod_pow(w, k, p as u64) != 1)).unwrap_or(1);
    let scale = Perm::from_images_unchecked((0..p as u64).map(|x| ((x * w) % p as u64) as u32).collect());
    PermGroup::new(p, vec![shift(p), scale]).unwrap()
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_orders() {
        assert_eq!(symmetric(1).order(), 1);
        assert_eq!(symmetric(2).order(), 2);
        assert_eq!(symmetric(5).order(), 120);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(alternating(3).order(), 3);
        assert_eq!(cyclic(7).order(), 7);
        assert_eq!(dihedral(6).order(), 12);
        assert_eq!(affine_line(7).order(), 42);
    }
}
