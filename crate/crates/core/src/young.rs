//! Young diagrams, standard tableaux and the hook-length formula.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("invalid part {0:?}")]
    BadToken(String),
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotPartition(Vec<u32>),
    #[error("not a standard tableau: {0}")]
    NotStandard(String),
}

/// A partition, stored as its nonzero parts in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct YoungDiagram {
    parts: Vec<u32>,
}

/// Id used for the empty diagram in graph vertex ids.
pub const EMPTY_ID: &str = "∅";

impl YoungDiagram {
    pub fn new(parts: Vec<u32>) -> Result<Self, DiagramError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(DiagramError::NotPartition(parts));
        }
        Ok(YoungDiagram { parts })
    }

    pub fn empty() -> Self {
        YoungDiagram::default()
    }

    /// Parses comma-separated parts such as `"4,2,2"`. The empty string and `∅` give the empty diagram.
    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        let text = text.trim();
        if text.is_empty() || text == EMPTY_ID {
            return Ok(Self::empty());
        }
        let parts = text
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| DiagramError::BadToken(tok.trim().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Canonical vertex id: comma-joined parts, or `∅`.
    pub fn id(&self) -> String {
        if self.parts.is_empty() {
            EMPTY_ID.to_string()
        } else {
            self.parts.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        }
    }

    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count() as u32)
            .collect();
        YoungDiagram { parts }
    }

    /// `(n-k, 1^k)`, including the one-row diagram.
    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.conjugate()
    }

    /// Cellwise containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Self) -> bool {
        self.parts.len() <= other.parts.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    pub fn part(&self, row: usize) -> u32 {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// Rows where a cell can be added, staying inside `bound` if given.
    pub fn addable_rows(&self, bound: Option<&YoungDiagram>) -> Vec<usize> {
        (0..=self.parts.len())
            .filter(|&r| {
                let len = self.part(r);
                let fits_above = r == 0 || self.part(r - 1) > len;
                let fits_bound = bound.is_none_or(|b| b.part(r) > len);
                fits_above && fits_bound
            })
            .collect()
    }

    pub fn with_cell_in_row(&self, row: usize) -> Self {
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        YoungDiagram { parts }
    }

    pub fn hook_length(&self, row: usize, col: usize) -> u32 {
        let arm = self.parts[row] - col as u32 - 1;
        let leg = self.parts[row + 1..].iter().filter(|&&p| p as usize > col).count() as u32;
        arm + leg + 1
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.id())
    }
}

/// Content of a cell: column minus row.
pub fn content(row: usize, col: usize) -> i64 {
    col as i64 - row as i64
}

/// Number of standard tableaux of shape `lambda` by the hook-length formula.
pub fn hook_length_dim(lambda: &YoungDiagram) -> BigUint {
    let mut num = factorial(lambda.n() as u64);
    let mut den = BigUint::one();
    for (r, &p) in lambda.parts.iter().enumerate() {
        for c in 0..p as usize {
            den *= lambda.hook_length(r, c);
        }
    }
    num /= den;
    num
}

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// All partitions of `n` in reverse-lexicographic order: `(n)`, `(n-1,1)`, …, `(1^n)`.
pub fn partitions(n: u32) -> Vec<YoungDiagram> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
        if rest == 0 {
            out.push(YoungDiagram { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A standard Young tableau, stored as rows of labels `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: YoungDiagram,
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, DiagramError> {
        let shape = YoungDiagram::new(rows.iter().map(|r| r.len() as u32).collect())?;
        let n = shape.n();
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for &x in row {
                if x == 0 || x as usize > n || std::mem::replace(&mut seen[x as usize], true) {
                    return Err(DiagramError::NotStandard(format!("label {x} out of range or repeated")));
                }
            }
        }
        for (r, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(DiagramError::NotStandard(format!("row {r} not increasing")));
            }
            if r > 0 && row.iter().zip(&rows[r - 1]).any(|(below, above)| below <= above) {
                return Err(DiagramError::NotStandard(format!("column broken at row {r}")));
            }
        }
        Ok(StandardTableau { shape, rows })
    }

    pub fn shape(&self) -> &YoungDiagram {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// `(row, col)` of `label`.
    pub fn position(&self, label: u32) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().position(|&x| x == label).map(|c| (r, c)))
    }

    /// Signed axial distance `content(k+1) - content(k)`.
    pub fn axial_distance(&self, k: u32) -> i64 {
        let (r0, c0) = self.position(k).expect("label present");
        let (r1, c1) = self.position(k + 1).expect("label present");
        content(r1, c1) - content(r0, c0)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "[{}]", cells.join(","))?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(s: &str) -> YoungDiagram {
        YoungDiagram::parse(s).unwrap()
    }

    #[test]
    fn hook_length_examples() {
        assert_eq!(hook_length_dim(&yd("3,2,1")), 16u32.into());
        assert_eq!(hook_length_dim(&yd("4,2,2")), 56u32.into());
        assert_eq!(hook_length_dim(&yd("6,3")), 48u32.into());
        assert_eq!(hook_length_dim(&yd("4,2,1,1")), 90u32.into());
        assert_eq!(hook_length_dim(&yd("7")), 1u32.into());
        assert_eq!(hook_length_dim(&YoungDiagram::empty()), 1u32.into());
    }

    #[test]
    fn partition_counts_and_order() {
        let counts: Vec<usize> = (1..=9).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30]);
        let p4: Vec<String> = partitions(4).iter().map(YoungDiagram::id).collect();
        assert_eq!(p4, vec!["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
    }

    #[test]
    fn parse_rejects_bad_tokens() {
        assert_eq!(
            YoungDiagram::parse("4;2;2").unwrap_err(),
            DiagramError::BadToken("4;2;2".into())
        );
        assert!(matches!(YoungDiagram::parse("2,3"), Err(DiagramError::NotPartition(_))));
    }

    #[test]
    fn shape_predicates() {
        assert!(yd("5,1,1").is_hook());
        assert!(!yd("2,2").is_hook());
        assert!(yd("3,2,1").is_symmetric());
        assert!(yd("4,2,1,1").is_symmetric());
        assert!(!yd("5,2,1,1").is_symmetric());
        assert_eq!(yd("4,2,1").conjugate(), yd("3,2,1,1"));
        assert!(yd("2,1").is_contained_in(&yd("3,1,1")));
        assert!(!yd("1,1,1").is_contained_in(&yd("3,2")));
    }

    #[test]
    fn tableau_validation_and_axial_distance() {
        let t = StandardTableau::new(vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(t.to_string(), "[[1,2],[3]]");
        assert_eq!(t.axial_distance(2), -2);
        assert_eq!(t.axial_distance(1), 1);
        let u = StandardTableau::new(vec![vec![1, 3], vec![2]]).unwrap();
        assert_eq!(u.axial_distance(1), -1);
        assert_eq!(u.axial_distance(2), 2);
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2, 4], vec![5]]).is_ok());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![2]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 4], vec![2, 3]]).is_err());
    }
}
