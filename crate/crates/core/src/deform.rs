//! Young's orthogonal form and its angle-parametrized deformations.
//!
//! Every generator is block diagonal in the tableau basis: a 1×1 block `±1` on
//! each tableau fixed by `σ_k` and a 2×2 reflection
//! `[[c, s], [s, -c]]` on each pair `(t, t′)` swapped by `σ_k`, where `t` is
//! the earlier path. Young's values are `c = 1/d`, `s = √(1 − 1/d²)` with `d`
//! the signed axial distance of `k, k+1` in `t`; the combinatorial involution
//! is the case `c = 0`, `s = 1`.

use std::collections::{BTreeMap, HashMap};
use std::f64::consts::FRAC_PI_2;
use std::io::Write;

use nalgebra::DMatrix;
use serde::Serialize;
use thiserror::Error;

use crate::graph::GradedGraph;
use crate::involution::{all_generators, InvolutionError};
use crate::paths::{path_to_tableau, PathTable};
use crate::perm::Permutation;
use crate::young::StandardTableau;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DeformError {
    #[error("axial distance {0} is below 2")]
    Domain(u32),
    #[error("no angle for k = {k} on the pair starting at path {path}")]
    MissingParam { k: u32, path: usize },
    #[error("matrix size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("generator {index} is not orthogonal (residual {residual:e})")]
    NotOrthogonal { index: usize, residual: f64 },
    #[error("label {k} out of range 1..={max}")]
    IndexOutOfRange { k: u32, max: u32 },
    #[error("not a Young interval from the empty diagram: {0}")]
    NotYoung(String),
}

// `Error` derives `Eq`; the only float payload is a diagnostic residual.
impl Eq for DeformError {}

/// `arctan √(r² − 1)`, the angle with `cos α = 1/r`.
pub fn young_angle(r: u32) -> Result<f64, DeformError> {
    if r < 2 {
        return Err(DeformError::Domain(r));
    }
    let r = r as f64;
    Ok((r * r - 1.0).sqrt().atan())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AxialData {
    pub tableau: usize,
    pub k: u32,
    /// `content(k+1) − content(k)`.
    pub d: i64,
    pub r: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Young,
    Combinatorial,
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ChainSign {
    Plus,
    Minus,
}

impl ChainSign {
    fn value(self) -> f64 {
        match self {
            ChainSign::Plus => 1.0,
            ChainSign::Minus => -1.0,
        }
    }

    /// Young's rule: `+1` when `k, k+1` share a row, `−1` when they share a column.
    fn young(d: i64) -> Self {
        if d > 0 {
            ChainSign::Plus
        } else {
            ChainSign::Minus
        }
    }
}

/// Parameters of a deformation.
///
/// Custom angles are keyed by `(k, index of the earlier path of the pair)`.
/// A custom angle `α` is placed as the reflection `[[cos α, sin α], [sin α, −cos α]]`
/// in the basis that lists the tableau with positive `d` first, so custom mode
/// at `α = young_angle(r)` reproduces Young's form. Chain signs default to
/// Young's rule in custom mode.
#[derive(Debug, Clone, PartialEq)]
pub struct DeformationParams {
    pub mode: Mode,
    pub angles: BTreeMap<(u32, usize), f64>,
    pub default_angle: Option<f64>,
    pub chain_signs: BTreeMap<(u32, usize), ChainSign>,
}

impl DeformationParams {
    pub fn young() -> Self {
        Self::with_mode(Mode::Young)
    }

    pub fn combinatorial() -> Self {
        Self::with_mode(Mode::Combinatorial)
    }

    /// Custom mode with the same angle on every rhombus pair.
    pub fn custom_uniform(alpha: f64) -> Self {
        DeformationParams {
            default_angle: Some(alpha),
            ..Self::with_mode(Mode::Custom)
        }
    }

    fn with_mode(mode: Mode) -> Self {
        DeformationParams {
            mode,
            angles: BTreeMap::new(),
            default_angle: None,
            chain_signs: BTreeMap::new(),
        }
    }
}

/// Standard tableaux of a Young interval, in path order, with the involutions.
#[derive(Debug, Clone)]
pub struct YoungBasis {
    tableaux: Vec<StandardTableau>,
    sigmas: Vec<Permutation>,
}

impl YoungBasis {
    pub fn new(g: &GradedGraph, pt: &PathTable) -> Result<Self, DeformError> {
        let tableaux = pt
            .paths()
            .iter()
            .map(|p| path_to_tableau(g, p))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| DeformError::NotYoung(e.to_string()))?;
        let sigmas = all_generators(g, pt).map_err(|e: InvolutionError| DeformError::NotYoung(e.to_string()))?;
        Ok(YoungBasis { tableaux, sigmas })
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    /// Number of cells.
    pub fn n(&self) -> u32 {
        self.sigmas.len() as u32 + 1
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    pub fn sigma(&self, k: u32) -> Result<&Permutation, DeformError> {
        self.check_k(k)?;
        Ok(&self.sigmas[k as usize - 1])
    }

    pub fn axial(&self, tableau: usize, k: u32) -> Result<AxialData, DeformError> {
        self.check_k(k)?;
        let d = self.tableaux[tableau].axial_distance(k);
        Ok(AxialData {
            tableau,
            k,
            d,
            r: d.unsigned_abs() as u32,
        })
    }

    fn check_k(&self, k: u32) -> Result<(), DeformError> {
        let max = self.sigmas.len() as u32;
        if k == 0 || k > max {
            return Err(DeformError::IndexOutOfRange { k, max });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeformedGenerator {
    pub k: u32,
    pub matrix: DMatrix<f64>,
}

/// The `(cos, sin)` entries of the rhombus block on `(t, t′)`, `t` earlier.
fn rhombus_block(k: u32, t: usize, d: i64, params: &DeformationParams) -> Result<(f64, f64), DeformError> {
    let r = d.unsigned_abs() as u32;
    let orient = d.signum() as f64;
    match params.mode {
        Mode::Combinatorial => Ok((0.0, 1.0)),
        Mode::Young => {
            let inv = 1.0 / d as f64;
            Ok((inv, (1.0 - inv * inv).sqrt()))
        }
        Mode::Custom => {
            let alpha = params
                .angles
                .get(&(k, t))
                .copied()
                .or(params.default_angle)
                .ok_or(DeformError::MissingParam { k, path: t })?;
            debug_assert!(r >= 2);
            if alpha == FRAC_PI_2 {
                return Ok((0.0, 1.0));
            }
            Ok((orient * alpha.cos(), alpha.sin()))
        }
    }
}

pub fn deformed_generator(
    basis: &YoungBasis,
    k: u32,
    params: &DeformationParams,
) -> Result<DeformedGenerator, DeformError> {
    let sigma = basis.sigma(k)?;
    let dim = basis.dim();
    let mut m = DMatrix::zeros(dim, dim);
    for t in 0..dim {
        let partner = sigma.apply(t as u32) as usize;
        let ax = basis.axial(t, k)?;
        if partner == t {
            if ax.r != 1 {
                return Err(DeformError::NotYoung(format!(
                    "fixed tableau {t} has axial distance {}",
                    ax.d
                )));
            }
            let sign = match params.mode {
                Mode::Combinatorial => ChainSign::Plus,
                Mode::Young => ChainSign::young(ax.d),
                Mode::Custom => params
                    .chain_signs
                    .get(&(k, t))
                    .copied()
                    .unwrap_or(ChainSign::young(ax.d)),
            };
            m[(t, t)] = sign.value();
        } else if t < partner {
            if ax.r < 2 {
                return Err(DeformError::NotYoung(format!(
                    "swapped tableau {t} has axial distance {}",
                    ax.d
                )));
            }
            let (c, s) = rhombus_block(k, t, ax.d, params)?;
            m[(t, t)] = c;
            m[(t, partner)] = s;
            m[(partner, t)] = s;
            // `0.0 - c` rather than `-c`: no negative zero in the swap block.
            m[(partner, partner)] = 0.0 - c;
        }
    }
    Ok(DeformedGenerator { k, matrix: m })
}

/// Generators for `k = 1..n−1`.
pub fn deformed_generators(
    basis: &YoungBasis,
    params: &DeformationParams,
) -> Result<Vec<DeformedGenerator>, DeformError> {
    (1..basis.n()).map(|k| deformed_generator(basis, k, params)).collect()
}

/// Largest absolute entry.
pub fn max_norm(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0, |acc, x| acc.max(x.abs()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Involution,
    Commutation,
    Braid,
    Orthogonality,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelationResidual {
    pub relation: Relation,
    /// For commutation and braid relations, the smaller of the two labels.
    pub k: u32,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelationReport {
    pub entries: Vec<RelationResidual>,
    pub max_residual: f64,
    pub tol: f64,
    pub passed: bool,
}

impl RelationReport {
    pub fn max_for(&self, relation: Relation) -> f64 {
        self.entries
            .iter()
            .filter(|e| e.relation == relation)
            .fold(0.0, |acc, e| acc.max(e.residual))
    }
}

/// Residuals of the Coxeter relations of the symmetric group and of
/// orthogonality, one entry per relation and label.
pub fn check_relations(gens: &[DeformedGenerator], tol: f64) -> Result<RelationReport, DeformError> {
    let dim = gens.first().map_or(0, |g| g.matrix.nrows());
    for g in gens {
        for found in [g.matrix.nrows(), g.matrix.ncols()] {
            if found != dim {
                return Err(DeformError::SizeMismatch { expected: dim, found });
            }
        }
    }
    let id = DMatrix::<f64>::identity(dim, dim);
    let mut entries = Vec::new();
    for (a, g) in gens.iter().enumerate() {
        let m = &g.matrix;
        entries.push(RelationResidual {
            relation: Relation::Involution,
            k: g.k,
            residual: max_norm(&(m * m - &id)),
        });
        entries.push(RelationResidual {
            relation: Relation::Orthogonality,
            k: g.k,
            residual: max_norm(&(m.transpose() * m - &id)),
        });
        let far = gens
            .iter()
            .filter(|h| h.k.abs_diff(g.k) >= 2 && h.k > g.k)
            .map(|h| max_norm(&(m * &h.matrix - &h.matrix * m)))
            .fold(None, |acc: Option<f64>, x| Some(acc.map_or(x, |a| a.max(x))));
        if let Some(residual) = far {
            entries.push(RelationResidual {
                relation: Relation::Commutation,
                k: g.k,
                residual,
            });
        }
        if let Some(h) = gens.get(a + 1).filter(|h| h.k == g.k + 1) {
            let n = &h.matrix;
            entries.push(RelationResidual {
                relation: Relation::Braid,
                k: g.k,
                residual: max_norm(&(m * n * m - n * m * n)),
            });
        }
    }
    let max_residual = entries.iter().fold(0.0f64, |acc, e| acc.max(e.residual));
    Ok(RelationReport {
        entries,
        max_residual,
        tol,
        passed: max_residual < tol,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ProbeOutcome {
    Finite(usize),
    /// More than the allowed number of elements; not a proof of infiniteness.
    ExceededBound,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeOptions {
    /// Decimal places kept in the hash key.
    pub digits: i32,
    /// Max-norm below which two matrices with the same key are equal.
    pub eq_tol: f64,
    /// Max-norm of `MᵀM − I` accepted as orthogonal.
    pub orth_tol: f64,
}

impl Default for ProbeOptions {
    fn default() -> Self {
        ProbeOptions {
            digits: 9,
            eq_tol: 1e-8,
            orth_tol: 1e-9,
        }
    }
}

/// Breadth-first closure of the matrix group generated by `gens`.
pub fn closure_probe(
    gens: &[DMatrix<f64>],
    max_elements: usize,
    opts: &ProbeOptions,
) -> Result<ProbeOutcome, DeformError> {
    let dim = gens.first().map_or(0, |g| g.nrows());
    for (index, g) in gens.iter().enumerate() {
        if g.nrows() != dim || g.ncols() != dim {
            return Err(DeformError::SizeMismatch {
                expected: dim,
                found: g.nrows().max(g.ncols()),
            });
        }
        let residual = max_norm(&(g.transpose() * g - DMatrix::identity(dim, dim)));
        if residual > opts.orth_tol {
            return Err(DeformError::NotOrthogonal { index, residual });
        }
    }
    let scale = 10f64.powi(opts.digits);
    let key = |m: &DMatrix<f64>| -> Vec<i64> { m.iter().map(|x| (x * scale).round() as i64).collect() };

    let mut elements = vec![DMatrix::<f64>::identity(dim, dim)];
    let mut buckets: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
    buckets.insert(key(&elements[0]), vec![0]);
    let mut next = 0;
    while next < elements.len() {
        for g in gens {
            let prod = &elements[next] * g;
            let bucket = buckets.entry(key(&prod)).or_default();
            if bucket.iter().any(|&i| max_norm(&(&elements[i] - &prod)) < opts.eq_tol) {
                continue;
            }
            if elements.len() == max_elements {
                return Ok(ProbeOutcome::ExceededBound);
            }
            bucket.push(elements.len());
            elements.push(prod);
        }
        next += 1;
    }
    Ok(ProbeOutcome::Finite(elements.len()))
}

/// The rhombus block at a given (possibly non-integer) signed distance.
pub fn young_block(d: f64) -> [[f64; 2]; 2] {
    let c = 1.0 / d;
    let s = (1.0 - c * c).sqrt();
    [[c, s], [s, -c]]
}

/// Both endpoints of the deformation: combinatorial-mode matrices equal the
/// permutation matrices of the involutions, and Young's blocks tend to the swap
/// block as the distance grows.
pub fn combinatorial_limit_check(basis: &YoungBasis, tol: f64) -> bool {
    let comb = DeformationParams::combinatorial();
    let dim = basis.dim();
    for k in 1..basis.n() {
        let (Ok(g), Ok(sigma)) = (deformed_generator(basis, k, &comb), basis.sigma(k)) else {
            return false;
        };
        let mut perm = DMatrix::<f64>::zeros(dim, dim);
        for t in 0..dim {
            perm[(t, sigma.apply(t as u32) as usize)] = 1.0;
        }
        if max_norm(&(&g.matrix - perm)) > tol {
            return false;
        }
        for t in 0..dim {
            if sigma.apply(t as u32) as usize <= t {
                continue;
            }
            let Ok(ax) = basis.axial(t, k) else {
                return false;
            };
            if !block_tends_to_swap(ax.d as f64, tol) {
                return false;
            }
        }
    }
    true
}

fn block_tends_to_swap(d: f64, tol: f64) -> bool {
    let dist = |b: [[f64; 2]; 2]| {
        let swap = [[0.0, 1.0], [1.0, 0.0]];
        (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .fold(0.0f64, |acc, (i, j)| acc.max((b[i][j] - swap[i][j]).abs()))
    };
    let mut prev = f64::INFINITY;
    let mut scale = 1.0;
    for _ in 0..40 {
        let e = dist(young_block(d * scale));
        if e > prev {
            return false;
        }
        prev = e;
        scale *= 4.0;
    }
    prev <= tol
}

/// Row-major CSV with 17 significant digits per entry.
pub fn write_matrix_csv<W: Write>(m: &DMatrix<f64>, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for i in 0..m.nrows() {
        w.write_record((0..m.ncols()).map(|j| format!("{:.16e}", m[(i, j)])))?;
    }
    w.flush()?;
    Ok(())
}
