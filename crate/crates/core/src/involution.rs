//! Combinatorial involutions acting on maximal paths.
//!
//! `σ_i` (for `1 <= i <= n-1`) looks at the 2-interval `[t_{i-1}, t_{i+1}]`
//! around the level-`i` vertex of a path. In a rhombus the level-`i` vertex is
//! replaced by the other middle vertex; in a chain the path is fixed. With this
//! indexing, on Young intervals `σ_i` swaps the labels `i` and `i+1`.

use thiserror::Error;

use crate::graph::GradedGraph;
use crate::paths::PathTable;
use crate::perm::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvolutionError {
    #[error("involution index {i} out of range 1..={max}")]
    IndexOutOfRange { i: usize, max: usize },
    #[error("2-interval [{0}, {1}] has more than two middle vertices")]
    NotDiamond(String, String),
}

pub fn sigma(g: &GradedGraph, pt: &PathTable, i: usize) -> Result<Permutation, InvolutionError> {
    let n = g.n();
    if i == 0 || i >= n {
        return Err(InvolutionError::IndexOutOfRange {
            i,
            max: n.saturating_sub(1),
        });
    }
    let mut images = Vec::with_capacity(pt.len());
    let mut scratch = Vec::new();
    for (idx, path) in pt.paths().iter().enumerate() {
        let (v, mid, w) = (path[i - 1], path[i], path[i + 1]);
        let mids = g.interval_mids(v, w);
        let image = match mids.as_slice() {
            [_] => idx,
            [a, b] => {
                let other = if *a == mid { *b } else { *a };
                scratch.clear();
                scratch.extend_from_slice(path);
                scratch[i] = other;
                pt.index_of(&scratch).expect("swapped path stays maximal in a diamond")
            }
            _ => return Err(InvolutionError::NotDiamond(g.id(v).to_string(), g.id(w).to_string())),
        };
        images.push(image as u32);
    }
    Ok(Permutation::from_images_unchecked(images))
}

/// `[σ_1, …, σ_{n-1}]`; empty when `n < 2`.
pub fn all_generators(g: &GradedGraph, pt: &PathTable) -> Result<Vec<Permutation>, InvolutionError> {
    (1..g.n()).map(|i| sigma(g, pt, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{boolean_lattice, pascal_interval, young_interval};
    use crate::graph::TwoIntervalKind;
    use crate::limits::Limits;
    use crate::paths::path_to_tableau;
    use crate::young::{partitions, YoungDiagram};

    fn young(s: &str) -> (GradedGraph, PathTable) {
        let g = young_interval(
            &YoungDiagram::parse(s).unwrap(),
            &YoungDiagram::empty(),
            &Limits::default(),
        )
        .unwrap();
        let pt = PathTable::enumerate(&g, &Limits::default()).unwrap();
        (g, pt)
    }

    #[test]
    fn sigma_examples() {
        let (g, pt) = young("2,2");
        let s2 = sigma(&g, &pt, 2).unwrap();
        assert_eq!(s2.images(), &[1, 0]);
        assert!(sigma(&g, &pt, 1).unwrap().is_identity());

        let b = boolean_lattice(3, &Limits::default()).unwrap();
        let bt = PathTable::enumerate(&b, &Limits::default()).unwrap();
        assert!(sigma(&b, &bt, 1).unwrap().fixed_points().is_empty());
        assert_eq!(
            sigma(&b, &bt, 3).unwrap_err(),
            InvolutionError::IndexOutOfRange { i: 3, max: 2 }
        );
        assert!(sigma(&b, &bt, 0).is_err());
    }

    #[test]
    fn generator_lists() {
        let b = boolean_lattice(4, &Limits::default()).unwrap();
        let bt = PathTable::enumerate(&b, &Limits::default()).unwrap();
        let gens = all_generators(&b, &bt).unwrap();
        assert_eq!(gens.len(), 3);
        assert!(gens.iter().all(|p| p.degree() == 24));

        let (g, pt) = young("3,1,1");
        let gens = all_generators(&g, &pt).unwrap();
        assert_eq!(gens.len(), 4);
        assert_eq!(pt.len(), 6);
        assert!(gens[0].is_identity());

        let chain = pascal_interval(&[5, 0], &Limits::default()).unwrap();
        let ct = PathTable::enumerate(&chain, &Limits::default()).unwrap();
        assert!(all_generators(&chain, &ct)
            .unwrap()
            .iter()
            .all(Permutation::is_identity));
    }

    #[test]
    fn fixed_points_are_chain_paths() {
        let (g, pt) = young("3,2");
        let s2 = sigma(&g, &pt, 2).unwrap();
        for (idx, path) in pt.paths().iter().enumerate() {
            let t = path_to_tableau(&g, path).unwrap();
            let (r2, c2) = t.position(2).unwrap();
            let (r3, c3) = t.position(3).unwrap();
            let aligned = r2 == r3 || c2 == c3;
            assert_eq!(s2.fixed_points().contains(&(idx as u32)), aligned);
            let kind = g.classify_two_interval(g.id(path[1]), g.id(path[3])).unwrap();
            assert_eq!(aligned, matches!(kind, TwoIntervalKind::Chain(_)));
        }
    }

    #[test]
    fn involution_and_far_commutation() {
        for n in 2..=6 {
            for lambda in partitions(n) {
                let (g, pt) = young(&lambda.id());
                let gens = all_generators(&g, &pt).unwrap();
                for (a, x) in gens.iter().enumerate() {
                    assert!(x.then(x).is_identity());
                    for y in gens.iter().skip(a + 2) {
                        assert_eq!(x.then(y), y.then(x));
                    }
                }
            }
        }
    }
}
