//! Constructors for the graph families: Boolean lattices, Pascal intervals,
//! (skew) Young intervals and lattices of order ideals.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::graph::{GradedGraph, GraphError};
use crate::limits::Limits;
use crate::young::{YoungDiagram, EMPTY_ID};

fn set_id(elems: impl IntoIterator<Item = String>) -> String {
    let v: Vec<String> = elems.into_iter().collect();
    if v.is_empty() {
        EMPTY_ID.to_string()
    } else {
        v.join(",")
    }
}

fn from_leveled(levels: BTreeMap<usize, Vec<String>>, edges: Vec<(String, String)>) -> Result<GradedGraph, GraphError> {
    let levels: Vec<Vec<String>> = levels.into_values().collect();
    GradedGraph::build(&levels, &edges)
}

/// Hasse diagram of the subsets of `{1..n}`.
pub fn boolean_lattice(n: u32, limits: &Limits) -> Result<GradedGraph, GraphError> {
    if n >= usize::BITS - 1 || (1usize << n) > limits.vertices {
        return Err(GraphError::SizeLimit(format!(
            "boolean lattice of rank {n} exceeds {} vertices",
            limits.vertices
        )));
    }
    let name = |mask: usize| set_id((0..n).filter(|b| mask >> b & 1 == 1).map(|b| (b + 1).to_string()));
    let mut levels: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    let mut edges = Vec::new();
    for mask in 0..(1usize << n) {
        levels.entry(mask.count_ones() as usize).or_default().push(name(mask));
        for b in 0..n {
            if mask >> b & 1 == 0 {
                edges.push((name(mask), name(mask | 1 << b)));
            }
        }
    }
    from_leveled(levels, edges)
}

/// The interval below `target` in the `d`-dimensional Pascal graph, `d = target.len()`.
pub fn pascal_interval(target: &[u32], limits: &Limits) -> Result<GradedGraph, GraphError> {
    if target.len() < 2 {
        return Err(GraphError::SizeLimit("pascal interval needs dimension d >= 2".into()));
    }
    let total = target
        .iter()
        .try_fold(1usize, |acc, &m| acc.checked_mul(m as usize + 1))
        .filter(|&t| t <= limits.vertices);
    if total.is_none() {
        return Err(GraphError::SizeLimit(format!(
            "pascal interval below {target:?} exceeds {} vertices",
            limits.vertices
        )));
    }
    let name = |t: &[u32]| t.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    let mut levels: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    let mut edges = Vec::new();
    let mut cur = vec![0u32; target.len()];
    loop {
        let grade = cur.iter().map(|&x| x as usize).sum();
        levels.entry(grade).or_default().push(name(&cur));
        for i in 0..cur.len() {
            if cur[i] < target[i] {
                let mut next = cur.clone();
                next[i] += 1;
                edges.push((name(&cur), name(&next)));
            }
        }
        // odometer increment
        let mut i = 0;
        while i < cur.len() && cur[i] == target[i] {
            cur[i] = 0;
            i += 1;
        }
        if i == cur.len() {
            break;
        }
        cur[i] += 1;
    }
    from_leveled(levels, edges)
}

/// The interval `[mu, lambda]` of the Young lattice; `mu` is the bottom vertex (level 0).
pub fn young_interval(lambda: &YoungDiagram, mu: &YoungDiagram, limits: &Limits) -> Result<GradedGraph, GraphError> {
    if !mu.is_contained_in(lambda) {
        return Err(GraphError::NotContained(mu.id(), lambda.id()));
    }
    let base = mu.n();
    let mut levels: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    let mut edges = Vec::new();
    let mut seen: BTreeSet<YoungDiagram> = BTreeSet::new();
    let mut queue = VecDeque::from([mu.clone()]);
    seen.insert(mu.clone());
    while let Some(nu) = queue.pop_front() {
        levels.entry(nu.n() - base).or_default().push(nu.id());
        for r in nu.addable_rows(Some(lambda)) {
            let next = nu.with_cell_in_row(r);
            edges.push((nu.id(), next.id()));
            if seen.insert(next.clone()) {
                if seen.len() > limits.vertices {
                    return Err(GraphError::SizeLimit(format!(
                        "young interval exceeds {} vertices",
                        limits.vertices
                    )));
                }
                queue.push_back(next);
            }
        }
    }
    from_leveled(levels, edges)
}

/// A finite poset given by its cover relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    elements: Vec<String>,
    covers: BTreeSet<(usize, usize)>,
}

impl FinitePoset {
    /// Builds a poset from order relations `lower < upper`.
    ///
    /// The relations may be redundant; only their transitive reduction is kept.
    pub fn new<S: AsRef<str>>(elements: &[S], relations: &[(S, S)]) -> Result<Self, GraphError> {
        let elements: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        let mut ix = HashMap::new();
        for (i, e) in elements.iter().enumerate() {
            if ix.insert(e.clone(), i).is_some() {
                return Err(GraphError::DuplicateId(e.clone()));
            }
        }
        let m = elements.len();
        let mut less = vec![vec![false; m]; m];
        for (a, b) in relations {
            let get = |s: &str| ix.get(s).copied().ok_or_else(|| GraphError::UnknownVertex(s.into()));
            let (a, b) = (get(a.as_ref())?, get(b.as_ref())?);
            less[a][b] = true;
        }
        // Warshall closure
        for k in 0..m {
            for i in 0..m {
                if less[i][k] {
                    let via = less[k].clone();
                    for (cell, &step) in less[i].iter_mut().zip(&via) {
                        *cell |= step;
                    }
                }
            }
        }
        if let Some(i) = (0..m).find(|&i| less[i][i]) {
            return Err(GraphError::CyclicPoset(elements[i].clone()));
        }
        let mut covers = BTreeSet::new();
        for i in 0..m {
            for j in 0..m {
                if less[i][j] && !(0..m).any(|k| less[i][k] && less[k][j]) {
                    covers.insert((i, j));
                }
            }
        }
        Ok(FinitePoset { elements, covers })
    }

    pub fn antichain(m: usize) -> Self {
        let elements: Vec<String> = (1..=m).map(|i| i.to_string()).collect();
        FinitePoset::new(&elements, &[]).expect("antichain is a poset")
    }

    pub fn chain(m: usize) -> Self {
        let elements: Vec<String> = (1..=m).map(|i| i.to_string()).collect();
        let rel: Vec<(String, String)> = elements.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
        FinitePoset::new(&elements, &rel).expect("chain is a poset")
    }

    /// Parses `"a<c,b<c"` style relation lists; bare names add isolated elements.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut elements: Vec<String> = Vec::new();
        let mut rel = Vec::new();
        let add = |e: &str, elements: &mut Vec<String>| -> Result<String, GraphError> {
            let e = e.trim();
            if e.is_empty() || e.contains(|c: char| c.is_whitespace() || c == ';') {
                return Err(GraphError::ParseError {
                    line: 1,
                    column: 0,
                    message: format!("bad poset token {e:?}"),
                });
            }
            if !elements.iter().any(|x| x == e) {
                elements.push(e.to_string());
            }
            Ok(e.to_string())
        };
        for tok in text.split(',').filter(|t| !t.trim().is_empty()) {
            let chain: Vec<&str> = tok.split('<').collect();
            let names = chain
                .iter()
                .map(|e| add(e, &mut elements))
                .collect::<Result<Vec<_>, _>>()?;
            for w in names.windows(2) {
                rel.push((w[0].clone(), w[1].clone()));
            }
        }
        FinitePoset::new(&elements, &rel)
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn covers(&self) -> Vec<(String, String)> {
        self.covers
            .iter()
            .map(|&(a, b)| (self.elements[a].clone(), self.elements[b].clone()))
            .collect()
    }
}

/// Hasse diagram of the lattice of order ideals of `p`, graded by ideal size.
pub fn ideal_lattice(p: &FinitePoset, limits: &Limits) -> Result<GradedGraph, GraphError> {
    let m = p.elements.len();
    if m > limits.poset_elements.min(63) {
        return Err(GraphError::SizeLimit(format!(
            "poset has {m} elements, budget is {}",
            limits.poset_elements
        )));
    }
    let mut below = vec![0u64; m];
    for &(a, b) in &p.covers {
        below[b] |= 1 << a;
    }
    // numeric ids sort numerically so antichain ideals match boolean_lattice ids
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| {
        let e = &p.elements[i];
        (e.parse::<u64>().map_or((1, 0), |v| (0, v)), e.clone())
    });
    let name = |mask: u64| {
        set_id(
            order
                .iter()
                .filter(|&&i| mask >> i & 1 == 1)
                .map(|&i| p.elements[i].clone()),
        )
    };

    let mut levels: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    let mut edges = Vec::new();
    let mut seen = BTreeSet::from([0u64]);
    let mut queue = VecDeque::from([0u64]);
    while let Some(ideal) = queue.pop_front() {
        levels.entry(ideal.count_ones() as usize).or_default().push(name(ideal));
        for (x, &under) in below.iter().enumerate().take(m) {
            if ideal >> x & 1 == 0 && under & !ideal == 0 {
                let next = ideal | 1 << x;
                edges.push((name(ideal), name(next)));
                if seen.insert(next) {
                    if seen.len() > limits.vertices {
                        return Err(GraphError::SizeLimit(format!(
                            "ideal lattice exceeds {} vertices",
                            limits.vertices
                        )));
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    from_leveled(levels, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn boolean_level_sizes() {
        assert_eq!(boolean_lattice(3, &lim()).unwrap().level_sizes(), vec![1, 3, 3, 1]);
        let b1 = boolean_lattice(1, &lim()).unwrap();
        assert_eq!(b1.edge_count(), 1);
        let tiny = Limits { vertices: 8, ..lim() };
        assert!(boolean_lattice(3, &tiny).is_ok());
        assert!(matches!(boolean_lattice(4, &tiny), Err(GraphError::SizeLimit(_))));
    }

    #[test]
    fn pascal_chain_when_one_coordinate() {
        let g = pascal_interval(&[4, 0], &lim()).unwrap();
        assert_eq!(g.level_sizes(), vec![1; 5]);
        assert_eq!(
            pascal_interval(&[2, 1], &lim()).unwrap().level_sizes(),
            vec![1, 2, 2, 1]
        );
    }

    #[test]
    fn young_interval_shapes() {
        let yd = |s| YoungDiagram::parse(s).unwrap();
        let g = young_interval(&yd("2,2"), &YoungDiagram::empty(), &lim()).unwrap();
        assert_eq!(g.level_sizes(), vec![1, 1, 2, 1, 1]);
        let skew = young_interval(&yd("2,2"), &yd("1"), &lim()).unwrap();
        assert_eq!(skew.n(), 3);
        assert_eq!(skew.id(skew.min()), "1");
        assert_eq!(
            young_interval(&yd("2"), &yd("1,1"), &lim()).unwrap_err(),
            GraphError::NotContained("1,1".into(), "2".into())
        );
    }

    #[test]
    fn ideals_of_v_poset() {
        let p = FinitePoset::parse("a<c,b<c").unwrap();
        let g = ideal_lattice(&p, &lim()).unwrap();
        let ids: Vec<String> = g.levels_as_ids().concat();
        assert_eq!(ids, vec!["∅", "a", "b", "a,b", "a,b,c"]);
    }

    #[test]
    fn poset_reduction_and_cycles() {
        let p = FinitePoset::new(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert_eq!(p.covers().len(), 2);
        let e = FinitePoset::new(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(e, GraphError::CyclicPoset(_)));
        assert!(FinitePoset::parse("a<b;c").is_err());
    }

    #[test]
    fn antichain_ideals_match_boolean_lattice() {
        for m in [1, 2, 3, 5, 11] {
            let a = ideal_lattice(&FinitePoset::antichain(m), &lim()).unwrap();
            let b = boolean_lattice(m as u32, &lim()).unwrap();
            assert_eq!(a, b);
        }
        let c = ideal_lattice(&FinitePoset::chain(4), &lim()).unwrap();
        assert_eq!(c.level_sizes(), vec![1; 5]);
    }
}
