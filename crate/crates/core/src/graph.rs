//! Finite graded graphs with a unique minimum and maximum.
//!
//! Vertices are addressed by canonical string ids. Internally every vertex
//! also has a dense index (`VertexIx`) which is what the path and involution
//! code works with; ids only matter at the boundaries (JSON, DOT, reports).

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Dense vertex index, valid for the graph that produced it.
pub type VertexIx = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("level {level} must contain exactly one vertex, found {found}")]
    MultipleExtremes { level: usize, found: usize },
    #[error("vertex {0:?} lies on no maximal path")]
    DanglingVertex(String),
    #[error("bad edge {0:?} -> {1:?}: {2}")]
    BadEdge(String, String, &'static str),
    #[error("duplicate vertex id {0:?}")]
    DuplicateId(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("levels of {0:?} and {1:?} do not differ by 2")]
    LevelMismatch(String, String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("{0:?} is not contained in {1:?}")]
    NotContained(String, String),
    #[error("poset cover relation has a cycle through {0:?}")]
    CyclicPoset(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    ParseError {
        line: usize,
        column: usize,
        message: String,
    },
}

/// The shape of a 2-interval `[v, w]`: the level-(k+1) vertices adjacent to both.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum TwoIntervalKind {
    Empty,
    Chain(String),
    Rhombus(String, String),
    Violation(Vec<String>),
}

/// A finite Z+-graded graph with one vertex on level 0 and one on level `n`.
///
/// Levels are stored with ids sorted lexicographically, so two graphs built
/// from the same vertex and edge sets compare equal regardless of input order.
#[derive(Debug, Clone)]
pub struct GradedGraph {
    ids: Vec<String>,
    level_of: Vec<usize>,
    levels: Vec<Vec<VertexIx>>,
    up: Vec<Vec<VertexIx>>,
    down: Vec<Vec<VertexIx>>,
    by_id: HashMap<String, VertexIx>,
}

impl PartialEq for GradedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.levels_as_ids() == other.levels_as_ids() && self.edge_set() == other.edge_set()
    }
}

impl Eq for GradedGraph {}

impl GradedGraph {
    /// Validates and builds a graph from id lists per level and `(lower, upper)` edges.
    pub fn build<S: AsRef<str>>(levels: &[Vec<S>], edges: &[(S, S)]) -> Result<Self, GraphError> {
        if levels.is_empty() {
            return Err(GraphError::MultipleExtremes { level: 0, found: 0 });
        }
        let top = levels.len() - 1;
        for &l in &[0, top] {
            if levels[l].len() != 1 {
                return Err(GraphError::MultipleExtremes {
                    level: l,
                    found: levels[l].len(),
                });
            }
        }

        let mut sorted: Vec<Vec<String>> = levels
            .iter()
            .map(|lvl| lvl.iter().map(|s| s.as_ref().to_string()).collect())
            .collect();
        for lvl in &mut sorted {
            lvl.sort();
        }

        let mut ids = Vec::new();
        let mut level_of = Vec::new();
        let mut ix_levels = Vec::with_capacity(sorted.len());
        let mut by_id = HashMap::new();
        for (k, lvl) in sorted.into_iter().enumerate() {
            let mut ixs = Vec::with_capacity(lvl.len());
            for id in lvl {
                if by_id.contains_key(&id) {
                    return Err(GraphError::DuplicateId(id));
                }
                let ix = ids.len();
                by_id.insert(id.clone(), ix);
                ids.push(id);
                level_of.push(k);
                ixs.push(ix);
            }
            ix_levels.push(ixs);
        }

        let mut up: Vec<BTreeSet<VertexIx>> = vec![BTreeSet::new(); ids.len()];
        let mut down: Vec<BTreeSet<VertexIx>> = vec![BTreeSet::new(); ids.len()];
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let lookup = |s: &str| {
                by_id
                    .get(s)
                    .copied()
                    .ok_or_else(|| GraphError::BadEdge(a.into(), b.into(), "unknown endpoint"))
            };
            let (ia, ib) = (lookup(a)?, lookup(b)?);
            if level_of[ib] != level_of[ia] + 1 {
                return Err(GraphError::BadEdge(
                    a.into(),
                    b.into(),
                    "endpoints are not on consecutive levels",
                ));
            }
            up[ia].insert(ib);
            down[ib].insert(ia);
        }
        // Ids sort the same way as indices within a level, so BTreeSet order is id order.
        let up: Vec<Vec<VertexIx>> = up.into_iter().map(|s| s.into_iter().collect()).collect();
        let down: Vec<Vec<VertexIx>> = down.into_iter().map(|s| s.into_iter().collect()).collect();

        let g = GradedGraph {
            ids,
            level_of,
            levels: ix_levels,
            up,
            down,
            by_id,
        };
        g.check_no_dead_ends()?;
        Ok(g)
    }

    fn check_no_dead_ends(&self) -> Result<(), GraphError> {
        let n = self.ids.len();
        let mut from_min = vec![false; n];
        from_min[self.min()] = true;
        for lvl in &self.levels {
            for &v in lvl {
                if from_min[v] {
                    for &w in &self.up[v] {
                        from_min[w] = true;
                    }
                }
            }
        }
        let mut to_max = vec![false; n];
        to_max[self.max()] = true;
        for lvl in self.levels.iter().rev() {
            for &v in lvl {
                if to_max[v] {
                    for &u in &self.down[v] {
                        to_max[u] = true;
                    }
                }
            }
        }
        for lvl in &self.levels {
            for &v in lvl {
                if !(from_min[v] && to_max[v]) {
                    return Err(GraphError::DanglingVertex(self.ids[v].clone()));
                }
            }
        }
        Ok(())
    }

    /// Index of the top level.
    pub fn n(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn min(&self) -> VertexIx {
        self.levels[0][0]
    }

    pub fn max(&self) -> VertexIx {
        self.levels[self.n()][0]
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    pub fn id(&self, v: VertexIx) -> &str {
        &self.ids[v]
    }

    pub fn index_of(&self, id: &str) -> Option<VertexIx> {
        self.by_id.get(id).copied()
    }

    pub fn level_of(&self, v: VertexIx) -> usize {
        self.level_of[v]
    }

    pub fn level(&self, k: usize) -> &[VertexIx] {
        &self.levels[k]
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// Upper covers of `v`, in id order.
    pub fn up(&self, v: VertexIx) -> &[VertexIx] {
        &self.up[v]
    }

    /// Lower covers of `v`, in id order.
    pub fn down(&self, v: VertexIx) -> &[VertexIx] {
        &self.down[v]
    }

    pub fn levels_as_ids(&self) -> Vec<Vec<String>> {
        self.levels
            .iter()
            .map(|l| l.iter().map(|&v| self.ids[v].clone()).collect())
            .collect()
    }

    pub fn edge_set(&self) -> BTreeSet<(String, String)> {
        let mut out = BTreeSet::new();
        for (v, ups) in self.up.iter().enumerate() {
            for &w in ups {
                out.insert((self.ids[v].clone(), self.ids[w].clone()));
            }
        }
        out
    }

    /// Common neighbours of `v` (level k) and `w` (level k+2), in id order.
    pub fn interval_mids(&self, v: VertexIx, w: VertexIx) -> Vec<VertexIx> {
        let (a, b) = (&self.up[v], &self.down[w]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    pub fn classify_two_interval(&self, v: &str, w: &str) -> Result<TwoIntervalKind, GraphError> {
        let iv = self.index_of(v).ok_or_else(|| GraphError::UnknownVertex(v.into()))?;
        let iw = self.index_of(w).ok_or_else(|| GraphError::UnknownVertex(w.into()))?;
        if self.level_of[iw] != self.level_of[iv] + 2 {
            return Err(GraphError::LevelMismatch(v.into(), w.into()));
        }
        Ok(self.kind_of(iv, iw))
    }

    pub(crate) fn kind_of(&self, v: VertexIx, w: VertexIx) -> TwoIntervalKind {
        let mids = self.interval_mids(v, w);
        let name = |x: VertexIx| self.ids[x].clone();
        match mids.as_slice() {
            [] => TwoIntervalKind::Empty,
            [a] => TwoIntervalKind::Chain(name(*a)),
            [a, b] => TwoIntervalKind::Rhombus(name(*a), name(*b)),
            many => TwoIntervalKind::Violation(many.iter().map(|&x| name(x)).collect()),
        }
    }

    /// All nonempty 2-intervals with three or more middle vertices.
    ///
    /// Ordered by level of `v`, then by the ids of `v` and `w`. An empty
    /// result means the graph is diamond-shaped.
    pub fn validate_diamond(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for lvl in self.levels.iter() {
            for &v in lvl {
                let mut counts: HashMap<VertexIx, usize> = HashMap::new();
                for &u in &self.up[v] {
                    for &w in &self.up[u] {
                        *counts.entry(w).or_default() += 1;
                    }
                }
                let mut bad: Vec<VertexIx> = counts.into_iter().filter(|&(_, c)| c >= 3).map(|(w, _)| w).collect();
                bad.sort_unstable();
                out.extend(bad.into_iter().map(|w| (self.ids[v].clone(), self.ids[w].clone())));
            }
        }
        out
    }

    pub fn is_diamond(&self) -> bool {
        self.validate_diamond().is_empty()
    }

    pub fn to_json(&self) -> String {
        let doc = GraphDoc {
            n: self.n(),
            levels: self.levels_as_ids(),
            edges: self.edge_set().into_iter().map(|(a, b)| [a, b]).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("graph document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let doc: GraphDoc = serde_json::from_str(text).map_err(|e| GraphError::ParseError {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        if doc.levels.len() != doc.n + 1 {
            return Err(GraphError::ParseError {
                line: 0,
                column: 0,
                message: format!("\"n\" is {} but {} levels were given", doc.n, doc.levels.len()),
            });
        }
        let edges: Vec<(String, String)> = doc.edges.into_iter().map(|[a, b]| (a, b)).collect();
        Self::build(&doc.levels, &edges)
    }

    /// Graphviz rendering with one `rank=same` group per level.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph G {\n  rankdir=BT;\n");
        for (k, lvl) in self.levels.iter().enumerate() {
            let _ = writeln!(s, "  {{ rank=same; // level {k}");
            for &v in lvl {
                let _ = writeln!(s, "    {};", dot_quote(&self.ids[v]));
            }
            s.push_str("  }\n");
        }
        for (a, b) in self.edge_set() {
            let _ = writeln!(s, "  {} -> {};", dot_quote(&a), dot_quote(&b));
        }
        s.push_str("}\n");
        s
    }
}

fn dot_quote(id: &str) -> String {
    format!("\"{}\"", id.replace('\\', "\\\\").replace('"', "\\\""))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    n: usize,
    levels: Vec<Vec<String>>,
    edges: Vec<[String; 2]>,
}
