//! `GF(q^2)` as a 2-dimensional space over `GF(q)` in the basis `{1, t}`.

use std::sync::Arc;

use super::matrix::FFMatrix;
use crate::error::{Error, Result};
use crate::gf::{FFElement, FieldSpec};

/// Element `a0 + a1 t` of the quadratic extension, coordinates encoded over the base field.
pub type QElem = [u32; 2];

/// `GF(q)[t] / (t^2 + c1 t + c0)` for the lexicographically least irreducible
/// `(c0, c1)`, constant term compared first.
#[derive(Clone, Debug)]
pub struct QuadraticExtension {
    base: Arc<FieldSpec>,
    c0: u32,
    c1: u32,
}

impl QuadraticExtension {
    pub fn new(base: &Arc<FieldSpec>) -> QuadraticExtension {
        let f = &**base;
        let q = f.order();
        // (c0, c1) irreducible iff t^2 + c1 t + c0 has no root in GF(q)
        for c0 in 1..q {
            for c1 in 0..q {
                let has_root = (0..q).any(|x| f.add(f.add(f.mul(x, x), f.mul(c1, x)), c0) == 0);
                if !has_root {
                    return QuadraticExtension { base: Arc::clone(base), c0, c1 };
                }
            }
        }
        unreachable!("every finite field has an irreducible quadratic")
    }

    pub fn base(&self) -> &Arc<FieldSpec> {
        &self.base
    }

    /// `(c0, c1)` of the modulus `t^2 + c1 t + c0`.
    pub fn modulus(&self) -> (u32, u32) {
        (self.c0, self.c1)
    }

    /// Number of elements, `q^2`.
    pub fn order(&self) -> u64 {
        let q = self.base.order() as u64;
        q * q
    }

    pub fn one(&self) -> QElem {
        [1, 0]
    }

    pub fn t(&self) -> QElem {
        [0, 1]
    }

    pub fn mul(&self, a: QElem, b: QElem) -> QElem {
        let f = &*self.base;
        let hi = f.mul(a[1], b[1]);
        let lo = f.mul(a[0], b[0]);
        let mid = f.add(f.mul(a[0], b[1]), f.mul(a[1], b[0]));
        // t^2 = -c1 t - c0
        [f.sub(lo, f.mul(hi, self.c0)), f.sub(mid, f.mul(hi, self.c1))]
    }

    pub fn pow(&self, mut a: QElem, mut e: u64) -> QElem {
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order; `None` for zero.
    pub fn order_of(&self, a: QElem) -> Option<u64> {
        if a == [0, 0] {
            return None;
        }
        let n = self.order() - 1;
        let mut ord = n;
        for (p, _) in crate::util::factorize(n) {
            while ord % p == 0 && self.pow(a, ord / p) == self.one() {
                ord /= p;
            }
        }
        Some(ord)
    }

    /// First element, in encoding order `a0 + a1 q`, of multiplicative order `q^2 - 1`.
    pub fn primitive_element(&self) -> QElem {
        let n = self.order() - 1;
        self.elements().find(|&a| self.order_of(a) == Some(n)).unwrap()
    }

    /// `w^((q^2-1)/m)` for the primitive element `w`.
    pub fn element_of_order(&self, m: u64) -> Result<QElem> {
        let n = self.order() - 1;
        if m == 0 || n % m != 0 {
            return Err(Error::ConstraintViolated(format!("{m} does not divide {n}")));
        }
        Ok(self.pow(self.primitive_element(), n / m))
    }

    fn elements(&self) -> impl Iterator<Item = QElem> + '_ {
        let q = self.base.order();
        (1..q * q).map(move |e| [e % q, e / q])
    }

    /// Matrix of `v -> w v` in the basis `{1, t}`.
    pub fn mult_rep(&self, w: QElem) -> FFMatrix {
        let f = &*self.base;
        let row1 = [f.neg(f.mul(w[1], self.c0)), f.sub(w[0], f.mul(w[1], self.c1))];
        FFMatrix::from_entries(&self.base, 2, vec![w[0], w[1], row1[0], row1[1]])
    }

    /// Matrix of the Frobenius map `v -> v^q`.
    pub fn frobenius(&self) -> FFMatrix {
        let tq = self.pow(self.t(), self.base.order() as u64);
        FFMatrix::from_entries(&self.base, 2, vec![1, 0, tq[0], tq[1]])
    }

    /// Coordinates of an element of `GF(p^2)` built by [`FieldSpec`], when the base is `GF(p)`.
    ///
    /// Both constructions pick the same least modulus, so the coordinates are the
    /// polynomial coefficients.
    pub fn from_field_element(&self, x: &FFElement) -> Result<QElem> {
        let spec = x.spec();
        if !self.base.is_prime_field()
            || spec.characteristic() != self.base.characteristic()
            || spec.degree() != 2
        {
            return Err(Error::FieldMismatch);
        }
        let c = x.coeffs();
        Ok([c.first().copied().unwrap_or(0), c.get(1).copied().unwrap_or(0)])
    }
}

/// The pair `(mult_rep, frobenius)` embedding `GF(q^2)* ⋊ Gal` into `GL(2, q)`.
pub fn gf2_embedding(base: &Arc<FieldSpec>) -> (QuadraticExtension, FFMatrix) {
    let ext = QuadraticExtension::new(base);
    let frob = ext.frobenius();
    (ext, frob)
}
