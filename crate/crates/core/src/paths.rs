//! Maximal paths of a graded graph and their correspondence with standard tableaux.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::{GradedGraph, VertexIx};
use crate::limits::Limits;
use crate::young::{StandardTableau, YoungDiagram};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("graph has {count} maximal paths, budget is {budget}")]
    SizeLimit { count: String, budget: usize },
    #[error("not a path of a Young interval from the empty diagram: {0}")]
    NotYoungPath(String),
}

/// One vertex per level, from the minimum to the maximum.
pub type MaximalPath = Vec<VertexIx>;

/// The maximal paths of a graph in lexicographic order of their id sequences.
#[derive(Debug, Clone)]
pub struct PathTable {
    paths: Vec<MaximalPath>,
    index: HashMap<MaximalPath, usize>,
}

impl PathTable {
    pub fn enumerate(g: &GradedGraph, limits: &Limits) -> Result<Self, PathError> {
        let count = count_paths(g);
        if count > BigUint::from(limits.paths) {
            return Err(PathError::SizeLimit {
                count: count.to_string(),
                budget: limits.paths,
            });
        }
        let mut paths = Vec::with_capacity(count.to_usize().unwrap_or(0));
        // Adjacency lists are in id order, so depth-first order is lexicographic.
        let mut stack = vec![g.min()];
        fn walk(g: &GradedGraph, stack: &mut Vec<VertexIx>, out: &mut Vec<MaximalPath>) {
            let v = *stack.last().expect("nonempty");
            if v == g.max() {
                out.push(stack.clone());
                return;
            }
            for &w in g.up(v) {
                stack.push(w);
                walk(g, stack, out);
                stack.pop();
            }
        }
        walk(g, &mut stack, &mut paths);
        let index = paths.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        Ok(PathTable { paths, index })
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn path(&self, i: usize) -> &[VertexIx] {
        &self.paths[i]
    }

    pub fn paths(&self) -> &[MaximalPath] {
        &self.paths
    }

    pub fn index_of(&self, path: &[VertexIx]) -> Option<usize> {
        self.index.get(path).copied()
    }

    pub fn path_ids<'g>(&self, g: &'g GradedGraph, i: usize) -> Vec<&'g str> {
        self.paths[i].iter().map(|&v| g.id(v)).collect()
    }
}

/// Number of maximal paths, by summing in-neighbour counts level by level.
pub fn count_paths(g: &GradedGraph) -> BigUint {
    let mut ways = vec![BigUint::zero(); g.vertex_count()];
    ways[g.min()] = 1u32.into();
    for k in 1..=g.n() {
        for &v in g.level(k) {
            let mut acc = BigUint::zero();
            for &u in g.down(v) {
                acc += &ways[u];
            }
            ways[v] = acc;
        }
    }
    std::mem::take(&mut ways[g.max()])
}

fn diagram_at(g: &GradedGraph, v: VertexIx) -> Result<YoungDiagram, PathError> {
    YoungDiagram::parse(g.id(v)).map_err(|e| PathError::NotYoungPath(e.to_string()))
}

/// Places label `k` in the cell added between levels `k-1` and `k`.
pub fn path_to_tableau(g: &GradedGraph, path: &[VertexIx]) -> Result<StandardTableau, PathError> {
    let shapes = path.iter().map(|&v| diagram_at(g, v)).collect::<Result<Vec<_>, _>>()?;
    if shapes.first().is_none_or(|s| s.n() != 0) {
        return Err(PathError::NotYoungPath("path does not start at ∅".into()));
    }
    let last = shapes.last().expect("nonempty");
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); last.rows()];
    for (k, pair) in shapes.windows(2).enumerate() {
        let (a, b) = (&pair[0], &pair[1]);
        let grown: Vec<usize> = (0..b.rows()).filter(|&r| b.part(r) != a.part(r)).collect();
        match grown.as_slice() {
            [r] if b.part(*r) == a.part(*r) + 1 && b.n() == a.n() + 1 => rows[*r].push(k as u32 + 1),
            _ => {
                return Err(PathError::NotYoungPath(format!(
                    "{} -> {} is not a single-cell step",
                    a.id(),
                    b.id()
                )))
            }
        }
    }
    StandardTableau::new(rows).map_err(|e| PathError::NotYoungPath(e.to_string()))
}

/// Inverse of [`path_to_tableau`]: the chain of shapes filled by labels `1..=k`.
pub fn tableau_to_path(g: &GradedGraph, t: &StandardTableau) -> Result<MaximalPath, PathError> {
    let n = t.shape().n() as u32;
    let mut parts = vec![0u32; t.shape().rows()];
    let mut out = Vec::with_capacity(n as usize + 1);
    let lookup = |parts: &[u32]| {
        let shape = YoungDiagram::new(parts.iter().copied().filter(|&p| p > 0).collect())
            .map_err(|e| PathError::NotYoungPath(e.to_string()))?;
        g.index_of(&shape.id())
            .ok_or_else(|| PathError::NotYoungPath(format!("shape {} not in graph", shape.id())))
    };
    out.push(lookup(&parts)?);
    for k in 1..=n {
        let (r, _) = t.position(k).expect("standard tableau holds every label");
        parts[r] += 1;
        out.push(lookup(&parts)?);
    }
    Ok(out)
}
