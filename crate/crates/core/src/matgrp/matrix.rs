use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{FFElement, FieldSpec};

/// A square matrix over `GF(q)`, entries stored as field encodings, row-major.
///
/// Matrices act on row vectors from the right: `v -> v * M`.
#[derive(Clone)]
pub struct FFMatrix {
    field: Arc<FieldSpec>,
    dim: usize,
    entries: Vec<u32>,
}

impl PartialEq for FFMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.entries == other.entries && *self.field == *other.field
    }
}

impl Eq for FFMatrix {}

impl Hash for FFMatrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.dim.hash(state);
        self.entries.hash(state);
    }
}

impl fmt::Debug for FFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

impl FFMatrix {
    pub fn identity(field: &Arc<FieldSpec>, dim: usize) -> FFMatrix {
        FFMatrix::scalar(field, dim, 1)
    }

    pub fn scalar(field: &Arc<FieldSpec>, dim: usize, lambda: u32) -> FFMatrix {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = lambda;
        }
        FFMatrix { field: Arc::clone(field), dim, entries }
    }

    pub fn diagonal(field: &Arc<FieldSpec>, diag: &[u32]) -> FFMatrix {
        let dim = diag.len();
        let mut entries = vec![0; dim * dim];
        for (i, &d) in diag.iter().enumerate() {
            entries[i * dim + i] = d;
        }
        FFMatrix { field: Arc::clone(field), dim, entries }
    }

    pub fn from_rows(field: &Arc<FieldSpec>, rows: &[Vec<u32>]) -> Result<FFMatrix> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
            }
            for &e in row {
                if e >= field.order() {
                    return Err(Error::ConstraintViolated(format!("entry {e} is not a field element encoding")));
                }
                entries.push(e);
            }
        }
        Ok(FFMatrix { field: Arc::clone(field), dim, entries })
    }

    pub(crate) fn from_entries(field: &Arc<FieldSpec>, dim: usize, entries: Vec<u32>) -> FFMatrix {
        debug_assert_eq!(entries.len(), dim * dim);
        FFMatrix { field: Arc::clone(field), dim, entries }
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.dim + j]
    }

    pub fn element(&self, i: usize, j: usize) -> FFElement {
        self.field.elem(self.get(i, j))
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    /// Matrix product; both operands must share field and dimension.
    pub fn mul(&self, other: &FFMatrix) -> FFMatrix {
        debug_assert!(*self.field == *other.field && self.dim == other.dim);
        let d = self.dim;
        let f = &*self.field;
        let mut out = vec![0u32; d * d];
        if f.is_prime_field() {
            let p = f.characteristic() as u64;
            for i in 0..d {
                for j in 0..d {
                    let mut acc = 0u64;
                    for k in 0..d {
                        acc += self.entries[i * d + k] as u64 * other.entries[k * d + j] as u64;
                    }
                    out[i * d + j] = (acc % p) as u32;
                }
            }
        } else {
            for i in 0..d {
                for j in 0..d {
                    let mut acc = 0;
                    for k in 0..d {
                        acc = f.add(acc, f.mul(self.entries[i * d + k], other.entries[k * d + j]));
                    }
                    out[i * d + j] = acc;
                }
            }
        }
        FFMatrix { field: Arc::clone(&self.field), dim: d, entries: out }
    }

    pub fn try_mul(&self, other: &FFMatrix) -> Result<FFMatrix> {
        if *self.field != *other.field {
            return Err(Error::FieldMismatch);
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(self.mul(other))
    }

    pub fn is_identity(&self) -> bool {
        let d = self.dim;
        self.entries.iter().enumerate().all(|(k, &e)| e == u32::from(k / d == k % d))
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let d = self.dim;
        let f = &*self.field;
        (0..d)
            .map(|j| (0..d).fold(0, |acc, i| f.add(acc, f.mul(v[i], self.entries[i * d + j]))))
            .collect()
    }

    pub fn sub_identity(&self) -> FFMatrix {
        let mut m = self.clone();
        for i in 0..self.dim {
            let k = i * self.dim + i;
            m.entries[k] = self.field.sub(m.entries[k], 1);
        }
        m
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows();
        row_reduce(&self.field, &mut rows)
    }

    pub fn determinant(&self) -> u32 {
        let f = &*self.field;
        let d = self.dim;
        let mut a = self.rows();
        let mut det = 1;
        for col in 0..d {
            let Some(piv) = (col..d).find(|&r| a[r][col] != 0) else {
                return 0;
            };
            if piv != col {
                a.swap(piv, col);
                det = f.neg(det);
            }
            det = f.mul(det, a[col][col]);
            let inv = f.inv(a[col][col]).unwrap();
            for r in col + 1..d {
                if a[r][col] != 0 {
                    let factor = f.mul(a[r][col], inv);
                    for c in col..d {
                        let t = f.mul(factor, a[col][c]);
                        a[r][c] = f.sub(a[r][c], t);
                    }
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.determinant() != 0
    }

    pub fn inverse(&self) -> Result<FFMatrix> {
        let f = &*self.field;
        let d = self.dim;
        let mut a: Vec<Vec<u32>> = self
            .rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut r)| {
                r.extend((0..d).map(|j| u32::from(i == j)));
                r
            })
            .collect();
        for col in 0..d {
            let piv = (col..d).find(|&r| a[r][col] != 0).ok_or(Error::Singular)?;
            a.swap(piv, col);
            let inv = f.inv(a[col][col]).unwrap();
            for c in 0..2 * d {
                a[col][c] = f.mul(a[col][c], inv);
            }
            for r in 0..d {
                if r != col && a[r][col] != 0 {
                    let factor = a[r][col];
                    for c in 0..2 * d {
                        let t = f.mul(factor, a[col][c]);
                        a[r][c] = f.sub(a[r][c], t);
                    }
                }
            }
        }
        let entries = a.into_iter().flat_map(|r| r[d..].to_vec()).collect();
        Ok(FFMatrix { field: Arc::clone(&self.field), dim: d, entries })
    }

    pub fn pow(&self, mut e: u64) -> FFMatrix {
        let mut base = self.clone();
        let mut acc = FFMatrix::identity(&self.field, self.dim);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order, searched up to `limit`.
    pub fn order(&self, limit: u64) -> Option<u64> {
        let mut x = self.clone();
        for k in 1..=limit {
            if x.is_identity() {
                return Some(k);
            }
            x = x.mul(self);
        }
        None
    }

    /// True iff `M - I` is singular, i.e. `M` fixes a nonzero vector.
    pub fn has_eigenvalue_one(&self) -> bool {
        self.sub_identity().rank() < self.dim
    }

    /// Scalar `lambda` if this is `lambda * I`.
    pub fn as_scalar(&self) -> Option<u32> {
        let d = self.dim;
        let lambda = self.entries[0];
        self.entries
            .iter()
            .enumerate()
            .all(|(k, &e)| if k / d == k % d { e == lambda } else { e == 0 })
            .then_some(lambda)
    }

    /// Kronecker product `A ⊗ B`, acting on the tensor product of the two spaces.
    pub fn kronecker(&self, other: &FFMatrix) -> Result<FFMatrix> {
        if *self.field != *other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &*self.field;
        let (da, db) = (self.dim, other.dim);
        let d = da * db;
        let mut entries = vec![0u32; d * d];
        for i in 0..da {
            for j in 0..da {
                let a = self.get(i, j);
                for k in 0..db {
                    for l in 0..db {
                        entries[(i * db + k) * d + (j * db + l)] = f.mul(a, other.get(k, l));
                    }
                }
            }
        }
        Ok(FFMatrix { field: Arc::clone(&self.field), dim: d, entries })
    }
}

/// Reduced row echelon form in place; returns the rank. Zero rows sink to the bottom.
pub(crate) fn row_reduce(field: &FieldSpec, rows: &mut [Vec<u32>]) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..nrows).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(piv, rank);
        let inv = field.inv(rows[rank][col]).unwrap();
        for c in col..ncols {
            rows[rank][c] = field.mul(rows[rank][c], inv);
        }
        for r in 0..nrows {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in col..ncols {
                    let t = field.mul(factor, rows[rank][c]);
                    rows[r][c] = field.sub(rows[r][c], t);
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Arc<FieldSpec> {
        FieldSpec::new(p, 1).unwrap()
    }

    #[test]
    fn eigenvalue_one_examples() {
        let f5 = gf(5);
        assert!(FFMatrix::identity(&f5, 2).has_eigenvalue_one());
        assert!(!FFMatrix::scalar(&f5, 2, 2).has_eigenvalue_one());
        let swap = FFMatrix::from_rows(&f5, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(swap.has_eigenvalue_one());
        assert_eq!(swap.apply(&[1, 1]), vec![1, 1]);
    }

    #[test]
    fn kronecker_examples() {
        let f5 = gf(5);
        let i2 = FFMatrix::identity(&f5, 2);
        assert_eq!(i2.kronecker(&i2).unwrap(), FFMatrix::identity(&f5, 4));
        let a = FFMatrix::scalar(&f5, 2, 2);
        let b = FFMatrix::scalar(&f5, 2, 3);
        assert_eq!(a.kronecker(&b).unwrap(), FFMatrix::identity(&f5, 4));
        let d = FFMatrix::diagonal(&f5, &[2, 3]);
        let swap = FFMatrix::from_rows(&f5, &[vec![0, 1], vec![1, 0]]).unwrap();
        let expected = FFMatrix::from_rows(
            &f5,
            &[vec![0, 2, 0, 0], vec![2, 0, 0, 0], vec![0, 0, 0, 3], vec![0, 0, 3, 0]],
        )
        .unwrap();
        assert_eq!(d.kronecker(&swap).unwrap(), expected);
        let f7 = gf(7);
        assert_eq!(i2.kronecker(&FFMatrix::identity(&f7, 2)).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn kronecker_spectral_product() {
        // x has eigenvalue lambda, y has eigenvalue lambda^-1: x ⊗ y fixes a vector.
        let f7 = gf(7);
        for lambda in 1..7u32 {
            let inv = f7.inv(lambda).unwrap();
            for other in 1..7u32 {
                let x = FFMatrix::diagonal(&f7, &[lambda, other]);
                let y = FFMatrix::diagonal(&f7, &[inv, 3]);
                assert!(x.kronecker(&y).unwrap().has_eigenvalue_one());
            }
        }
    }

    #[test]
    fn inverse_determinant_rank() {
        let f = FieldSpec::new(2, 3).unwrap();
        let m = FFMatrix::from_rows(&f, &[vec![3, 1], vec![5, 7]]).unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());
        let sing = FFMatrix::from_rows(&f, &[vec![3, 1], vec![f.mul(3, 2), 2]]).unwrap();
        assert_eq!(sing.determinant(), 0);
        assert_eq!(sing.rank(), 1);
        assert_eq!(sing.inverse().unwrap_err(), Error::Singular);
    }
}
