//! Reference values computed without the library's own algorithms.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigUint;

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * k)
}

/// Order of the Weyl group `D_k`: `2^{k−1} · k!`.
pub fn weyl_d(k: u64) -> BigUint {
    (BigUint::from(1u32) << (k - 1)) * factorial(k)
}

/// Number of standard tableaux, by removing the cell holding the largest label.
pub fn syt_count(parts: &[u32]) -> BigUint {
    fn go(parts: Vec<u32>, memo: &mut HashMap<Vec<u32>, BigUint>) -> BigUint {
        if parts.is_empty() {
            return BigUint::from(1u32);
        }
        if let Some(v) = memo.get(&parts) {
            return v.clone();
        }
        let mut total = BigUint::from(0u32);
        for r in 0..parts.len() {
            let is_corner = r + 1 == parts.len() || parts[r + 1] < parts[r];
            if is_corner {
                let mut smaller = parts.clone();
                smaller[r] -= 1;
                if smaller[r] == 0 {
                    smaller.pop();
                }
                total += go(smaller, memo);
            }
        }
        memo.insert(parts, total.clone());
        total
    }
    go(parts.to_vec(), &mut HashMap::new())
}

/// All partitions of `n` as part lists.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
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

pub fn is_hook(parts: &[u32]) -> bool {
    parts.iter().skip(1).all(|&p| p == 1)
}

pub fn id(parts: &[u32]) -> String {
    parts.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// Size of the group generated by permutations in one-line notation, by
/// closing the identity under right multiplication.
pub fn closure_size(gens: &[Vec<u32>], degree: usize) -> usize {
    let id: Vec<u32> = (0..degree as u32).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q: Vec<u32> = p.iter().map(|&x| g[x as usize]).collect();
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen.len()
}

/// The expected order of each Young diagram's group, as the published table
/// states it.
pub fn table_prediction(parts: &[u32], dim: u64) -> BigUint {
    let n: u32 = parts.iter().sum();
    let alt: [&[u32]; 3] = [&[4, 2, 2], &[6, 3], &[4, 4, 1]];
    let weyl: [&[u32]; 4] = [&[3, 2, 1], &[4, 2, 1, 1], &[3, 3, 2], &[3, 3, 3]];
    if is_hook(parts) {
        factorial(n as u64 - 1)
    } else if alt.contains(&parts) {
        factorial(dim) / 2u32
    } else if weyl.contains(&parts) {
        weyl_d(dim / 2)
    } else {
        factorial(dim)
    }
}

/// The transposed diagram.
pub fn transpose(parts: &[u32]) -> Vec<u32> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width)
        .map(|c| parts.iter().filter(|&&p| p >= c).count() as u32)
        .collect()
}
