//! Matrices and matrix groups over `GF(q)`.

mod embedding;
mod group;
mod matrix;
pub mod io;
pub mod named;

pub use embedding::{gf2_embedding, QElem, QuadraticExtension};
pub use group::{
    Irreducibility, MatrixGroup, RBoundCheck, RSubgroup, VectorSpace, DEFAULT_MATRIX_CAP, ORBIT_VECTOR_CAP,
    SPIN_WORKLOAD_CAP,
};
pub use matrix::FFMatrix;
