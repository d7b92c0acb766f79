//! Permutation groups: permutations, stabilizer chains, orbits, blocks,
//! ranks, coset actions, normalizers and quotients.

mod chain;
mod group;
mod perm;
pub mod io;
pub mod standard;

pub use chain::StabChain;
pub use group::{
    orbits_of, BlockSystem, CosetAction, PermGroup, SubgroupBuilder, DEFAULT_MAX_DEGREE, DEFAULT_MAX_ORDER,
    MAX_QUOTIENT_INDEX,
};
pub use perm::Perm;
