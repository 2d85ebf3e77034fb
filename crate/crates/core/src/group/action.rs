//! Orbits, multiple transitivity and block systems of a generated action.

use std::collections::VecDeque;

use crate::perm::Permutation;

use super::GroupError;

/// Orbits of `⟨gens⟩` on `0..degree`, each sorted, ordered by smallest point.
pub fn orbits(gens: &[Permutation], degree: usize) -> Vec<Vec<u32>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for start in 0..degree {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start as u32];
        let mut queue = VecDeque::from([start as u32]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = g.apply(x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    orbit.push(y);
                    queue.push_back(y);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

pub fn is_transitive(gens: &[Permutation], degree: usize) -> bool {
    degree >= 1 && orbits(gens, degree).len() == 1
}

/// Transitivity on ordered pairs of distinct points, by breadth-first search.
pub fn is_two_transitive(gens: &[Permutation], degree: usize) -> bool {
    if degree < 2 || !is_transitive(gens, degree) {
        return false;
    }
    let n = degree;
    let mut seen = vec![false; n * n];
    let mut queue = VecDeque::from([(0u32, 1u32)]);
    seen[1] = true;
    let mut reached = 1usize;
    while let Some((a, b)) = queue.pop_front() {
        for g in gens {
            let (x, y) = (g.apply(a), g.apply(b));
            let key = x as usize * n + y as usize;
            if !seen[key] {
                seen[key] = true;
                reached += 1;
                queue.push_back((x, y));
            }
        }
    }
    reached == n * (n - 1)
}

struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    /// Returns the surviving root if the classes were distinct.
    fn union(&mut self, a: u32, b: u32) -> Option<(u32, u32)> {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        Some((ra, rb))
    }
}

/// The finest block system in which `0` and `j` share a block.
///
/// Classic union-find refinement: whenever two classes merge, their
/// representatives' images under every generator must merge as well.
pub fn block_system_joining(gens: &[Permutation], degree: usize, j: u32) -> Vec<Vec<u32>> {
    let mut uf = UnionFind::new(degree);
    let mut queue = VecDeque::new();
    if let Some(pair) = uf.union(0, j) {
        queue.push_back(pair);
    }
    while let Some((a, b)) = queue.pop_front() {
        for g in gens {
            if let Some(pair) = uf.union(g.apply(a), g.apply(b)) {
                queue.push_back(pair);
            }
        }
    }
    let mut classes: Vec<Vec<u32>> = vec![Vec::new(); degree];
    for x in 0..degree as u32 {
        let r = uf.find(x);
        classes[r as usize].push(x);
    }
    let mut blocks: Vec<Vec<u32>> = classes.into_iter().filter(|c| !c.is_empty()).collect();
    blocks.sort_by_key(|b| b[0]);
    blocks
}

/// A nontrivial block system with the smallest possible block size, or `None`
/// when the action is primitive.
pub fn minimal_block_system(gens: &[Permutation], degree: usize) -> Result<Option<Vec<Vec<u32>>>, GroupError> {
    if !is_transitive(gens, degree) {
        return Err(GroupError::NotTransitive);
    }
    if degree < 3 || is_two_transitive(gens, degree) {
        return Ok(None);
    }
    let mut best: Option<Vec<Vec<u32>>> = None;
    for j in 1..degree as u32 {
        let blocks = block_system_joining(gens, degree, j);
        let size = blocks[0].len();
        if size < degree && best.as_ref().is_none_or(|b| size < b[0].len()) {
            let minimal = size == 2;
            best = Some(blocks);
            if minimal {
                break;
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, c).unwrap()
    }

    fn klein() -> Vec<Permutation> {
        vec![cyc(4, &[&[0, 1], &[2, 3]]), cyc(4, &[&[0, 2], &[1, 3]])]
    }

    #[test]
    fn s3_is_two_transitive() {
        let gens = [cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])];
        assert!(is_transitive(&gens, 3));
        assert!(is_two_transitive(&gens, 3));
    }

    #[test]
    fn klein_group_has_blocks() {
        let k = klein();
        assert!(is_transitive(&k, 4));
        assert!(!is_two_transitive(&k, 4));
        let blocks = minimal_block_system(&k, 4).unwrap().unwrap();
        assert!(blocks.iter().all(|b| b.len() == 2));
    }

    #[test]
    fn s4_is_primitive() {
        let gens = [cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])];
        assert_eq!(minimal_block_system(&gens, 4).unwrap(), None);
    }

    #[test]
    fn intransitive_has_no_block_query() {
        let gens = [cyc(4, &[&[0, 1]])];
        assert_eq!(orbits(&gens, 4), vec![vec![0, 1], vec![2], vec![3]]);
        assert!(matches!(minimal_block_system(&gens, 4), Err(GroupError::NotTransitive)));
    }

    #[test]
    fn cyclic_group_prefers_smallest_blocks() {
        // C_6 has block systems of size 2 and 3; the minimal one has size 2.
        let gens = [cyc(6, &[&[0, 1, 2, 3, 4, 5]])];
        let blocks = minimal_block_system(&gens, 6).unwrap().unwrap();
        assert_eq!(blocks, vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
        // C_9 only has blocks of size 3
        let gens = [cyc(9, &[&[0, 1, 2, 3, 4, 5, 6, 7, 8]])];
        let blocks = minimal_block_system(&gens, 9).unwrap().unwrap();
        assert_eq!(blocks[0], vec![0, 3, 6]);
    }
}
