//! Exact permutation-group computations on path sets.

mod action;
mod chain;
mod classify;

use thiserror::Error;

use crate::perm::PermError;

pub use action::{block_system_joining, is_transitive, is_two_transitive, minimal_block_system, orbits};
pub use chain::StrongGeneratingChain;
pub use classify::{
    classify_group, group_order, schreier_sims, signed_perm_image, weyl_d_order, Classification, GroupTag, SignedImage,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("action is not transitive")]
    NotTransitive,
    #[error("bad blocks: {0}")]
    BadBlocks(String),
}

impl From<PermError> for GroupError {
    fn from(e: PermError) -> Self {
        match e {
            PermError::DegreeMismatch(a, b) => GroupError::DegreeMismatch(a, b),
            PermError::NotBijection(n) => GroupError::BadBlocks(format!("not a bijection on {n} points")),
        }
    }
}

#[cfg(test)]
pub(crate) mod test_oracle {
    use std::collections::HashSet;

    use crate::perm::Permutation;

    /// Size of the closure of `gens` under composition, by exhaustive search.
    pub fn closure_size(gens: &[Permutation], degree: usize) -> usize {
        let id: Vec<u32> = (0..degree as u32).collect();
        let mut seen: HashSet<Vec<u32>> = HashSet::from([id.clone()]);
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y: Vec<u32> = x.iter().map(|&p| g.apply(p)).collect();
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen.len()
    }
}
