//! The Young-diagram survey: group orders for every partition up to a size,
//! checked against the expected-order rules.

use std::io::Write;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::families::young_interval;
use crate::graph::GradedGraph;
use crate::group::{classify_group, weyl_d_order, Classification};
use crate::involution::all_generators;
use crate::limits::Limits;
use crate::paths::{count_paths, PathTable};
use crate::perm::Permutation;
use crate::young::{factorial, hook_length_dim, partitions, YoungDiagram};

/// Diagrams whose group has index 2 in the full symmetric group.
pub const ALTERNATING_LIST: [&[u32]; 3] = [&[4, 2, 2], &[6, 3], &[4, 4, 1]];
/// Diagrams whose group has the order of the Weyl group `D_{dim/2}`.
pub const WEYL_D_LIST: [&[u32]; 4] = [&[3, 2, 1], &[4, 2, 1, 1], &[3, 3, 2], &[3, 3, 3]];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExpectedRule {
    Hook,
    AltList,
    DList,
    FullSym,
}

impl ExpectedRule {
    pub fn for_diagram(lambda: &YoungDiagram) -> Self {
        if lambda.is_hook() {
            ExpectedRule::Hook
        } else if ALTERNATING_LIST.contains(&lambda.parts()) {
            ExpectedRule::AltList
        } else if WEYL_D_LIST.contains(&lambda.parts()) {
            ExpectedRule::DList
        } else {
            ExpectedRule::FullSym
        }
    }

    /// Predicted group order for a diagram with `n` cells and `dim` tableaux.
    pub fn predicted_order(self, n: usize, dim: usize) -> BigUint {
        match self {
            ExpectedRule::Hook => factorial(n.saturating_sub(1) as u64),
            ExpectedRule::AltList => factorial(dim as u64) >> 1,
            ExpectedRule::DList => weyl_d_order(dim / 2),
            ExpectedRule::FullSym => factorial(dim as u64),
        }
    }
}

/// The group generated by the involutions of the Young interval below `lambda`.
pub struct YoungGroup {
    pub graph: GradedGraph,
    pub paths: PathTable,
    pub generators: Vec<Permutation>,
}

impl YoungGroup {
    pub fn new(lambda: &YoungDiagram, limits: &Limits) -> Result<Self, Error> {
        let graph = young_interval(lambda, &YoungDiagram::empty(), limits)?;
        let paths = PathTable::enumerate(&graph, limits)?;
        let generators = all_generators(&graph, &paths)?;
        Ok(YoungGroup {
            graph,
            paths,
            generators,
        })
    }

    pub fn degree(&self) -> usize {
        self.paths.len()
    }
}

#[derive(Debug, Clone)]
pub struct SurveyRow {
    pub lambda: YoungDiagram,
    pub dim: usize,
    pub is_hook: bool,
    pub is_symmetric: bool,
    pub rule: ExpectedRule,
    pub predicted_order: BigUint,
    pub classification: Classification,
    pub matches: bool,
}

impl SurveyRow {
    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    pub fn order(&self) -> &BigUint {
        &self.classification.order
    }
}

/// Why a row disagrees with its rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mismatch {
    /// A single row or column: one tableau, so the group is trivial.
    SingleTableau,
    /// The transpose of a listed diagram; transposing tableaux carries one
    /// action onto the other, so both groups have the same order.
    TransposeOf(YoungDiagram),
    Unexplained,
}

impl SurveyRow {
    pub fn mismatch(&self) -> Option<Mismatch> {
        if self.matches {
            return None;
        }
        if self.dim == 1 {
            return Some(Mismatch::SingleTableau);
        }
        let t = self.lambda.conjugate();
        let listed = ALTERNATING_LIST.contains(&t.parts()) || WEYL_D_LIST.contains(&t.parts());
        if listed && &ExpectedRule::for_diagram(&t).predicted_order(t.n(), self.dim) == self.order() {
            return Some(Mismatch::TransposeOf(t));
        }
        Some(Mismatch::Unexplained)
    }
}

pub fn survey_row(lambda: &YoungDiagram, limits: &Limits) -> Result<SurveyRow, Error> {
    let dim_hook = hook_length_dim(lambda);
    let group = YoungGroup::new(lambda, limits)?;
    let dim_dp = count_paths(&group.graph);
    if dim_dp != dim_hook || dim_dp != BigUint::from(group.degree()) {
        return Err(Error::Internal(format!(
            "dimension disagreement for {lambda}: hook {dim_hook}, dp {dim_dp}, enumerated {}",
            group.degree()
        )));
    }
    let dim = group.degree();
    let classification = classify_group(&group.generators, dim)?;
    let rule = ExpectedRule::for_diagram(lambda);
    let predicted_order = rule.predicted_order(lambda.n(), dim);
    Ok(SurveyRow {
        lambda: lambda.clone(),
        dim,
        is_hook: lambda.is_hook(),
        is_symmetric: lambda.is_symmetric(),
        rule,
        matches: classification.order == predicted_order,
        predicted_order,
        classification,
    })
}

/// One row per partition of each `n` in `1..=n_max`, `n` ascending and
/// partitions in reverse-lexicographic order. With `jobs > 1` rows are
/// computed on a thread pool; the output order is unaffected.
pub fn survey(n_max: u32, limits: &Limits, jobs: usize) -> Result<Vec<SurveyRow>, Error> {
    let diagrams: Vec<YoungDiagram> = (1..=n_max).flat_map(partitions).collect();
    if jobs <= 1 {
        return diagrams.iter().map(|l| survey_row(l, limits)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    pool.install(|| diagrams.par_iter().map(|l| survey_row(l, limits)).collect())
}

pub const CSV_HEADER: [&str; 12] = [
    "n",
    "lambda",
    "dim",
    "is_hook",
    "is_symmetric",
    "rule",
    "predicted_order",
    "order",
    "tag",
    "transitive",
    "two_transitive",
    "match",
];

pub fn write_csv<W: Write>(rows: &[SurveyRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([
            r.n().to_string(),
            r.lambda.id(),
            r.dim.to_string(),
            r.is_hook.to_string(),
            r.is_symmetric.to_string(),
            format!("{:?}", r.rule),
            r.predicted_order.to_string(),
            r.order().to_string(),
            r.classification.label(),
            r.classification.transitive.to_string(),
            r.classification.two_transitive.to_string(),
            r.matches.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
