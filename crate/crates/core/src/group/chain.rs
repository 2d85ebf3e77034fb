//! Deterministic Schreier–Sims.
//!
//! Every Schreier generator of a level is sifted through the levels below
//! it, and a nontrivial residue becomes a new strong generator. Which (orbit point, generator) pairs have already been
//! sifted is remembered per level, so adding a generator only triggers the
//! new checks it makes necessary.
//!
//! The product of the current fundamental orbit lengths never exceeds the
//! group order. When the caller supplies an upper bound and the product
//! reaches it, every level is already complete and the construction stops.

use num_bigint::BigUint;
use num_traits::One;

use crate::perm::{PermError, Permutation};

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
struct Level {
    base_point: u32,
    /// Indices into the strong generator pool; all fix the earlier base points.
    gens: Vec<usize>,
    orbit: Vec<u32>,
    /// point -> index into `reps`, or NONE.
    slot: Vec<u32>,
    /// `reps[s]` maps the base point to `orbit[s]`.
    reps: Vec<Permutation>,
    reps_inv: Vec<Permutation>,
    /// Per orbit position, how many of `gens` have been checked.
    checked: Vec<usize>,
}

impl Level {
    fn new(base_point: u32, degree: usize) -> Self {
        let mut slot = vec![NONE; degree];
        slot[base_point as usize] = 0;
        Level {
            base_point,
            gens: Vec::new(),
            orbit: vec![base_point],
            slot,
            reps: vec![Permutation::identity(degree)],
            reps_inv: vec![Permutation::identity(degree)],
            checked: vec![0],
        }
    }

    /// Extends the orbit after `gens` grew; existing transversal elements are kept.
    fn extend_orbit(&mut self, pool: &[Permutation]) {
        let mut pos = 0;
        while pos < self.orbit.len() {
            let beta = self.orbit[pos];
            let u = self.slot[beta as usize] as usize;
            for &gi in &self.gens {
                let x = &pool[gi];
                let gamma = x.apply(beta);
                if self.slot[gamma as usize] == NONE {
                    let rep = self.reps[u].then(x);
                    self.slot[gamma as usize] = self.reps.len() as u32;
                    self.reps_inv.push(rep.inverse());
                    self.reps.push(rep);
                    self.orbit.push(gamma);
                    self.checked.push(0);
                }
            }
            pos += 1;
        }
    }

    fn add_generator(&mut self, gi: usize, pool: &[Permutation]) {
        self.gens.push(gi);
        self.extend_orbit(pool);
    }
}

/// A base and strong generating set with explicit transversals.
#[derive(Debug, Clone)]
pub struct StrongGeneratingChain {
    degree: usize,
    pool: Vec<Permutation>,
    levels: Vec<Level>,
}

impl StrongGeneratingChain {
    /// Runs Schreier–Sims to completion.
    pub fn new(gens: &[Permutation], degree: usize) -> Result<Self, PermError> {
        Self::with_bound(gens, degree, None)
    }

    /// Like [`new`](Self::new), but stops once the order reaches `bound`.
    ///
    /// `bound` must be a proven upper bound for the order of the generated
    /// group; the result is then still an exact chain.
    pub fn with_bound(gens: &[Permutation], degree: usize, bound: Option<&BigUint>) -> Result<Self, PermError> {
        for g in gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch(g.degree(), degree));
            }
        }
        let mut pool: Vec<Permutation> = Vec::new();
        for g in gens {
            if !g.is_identity() && !pool.contains(g) {
                pool.push(g.clone());
            }
        }
        let mut chain = StrongGeneratingChain {
            degree,
            pool: Vec::new(),
            levels: Vec::new(),
        };
        let mut base: Vec<u32> = Vec::new();
        for g in &pool {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.smallest_moved_point().expect("non-identity"));
            }
        }
        chain.levels = base.iter().map(|&b| Level::new(b, degree)).collect();
        for g in pool {
            chain.push_generator(g, None);
        }
        chain.complete(bound);
        Ok(chain)
    }

    /// Adds `g` to the pool and to every level whose earlier base points it fixes.
    /// If it fixes the whole base, a new level is created first.
    fn push_generator(&mut self, g: Permutation, upto: Option<usize>) -> usize {
        let depth = upto.unwrap_or_else(|| {
            self.levels
                .iter()
                .take_while(|l| g.apply(l.base_point) == l.base_point)
                .count()
        });
        if depth == self.levels.len() {
            let b = g.smallest_moved_point().expect("residue is non-identity");
            self.levels.push(Level::new(b, self.degree));
        }
        let gi = self.pool.len();
        self.pool.push(g);
        for l in 0..=depth {
            self.levels[l].add_generator(gi, &self.pool);
        }
        depth
    }

    /// Checks every (orbit point, generator) pair of every level, scanning the
    /// levels top-down and repeating until a full pass adds nothing.
    ///
    /// Any scan order yields a complete chain once no pair is left unchecked:
    /// transversal elements are never replaced, so a pair checked earlier
    /// still names the same Schreier generator, and a residue sifted to the
    /// identity lies in the subgroup generated below it. Working top-down
    /// fills the large upper orbits first, which reaches a known order bound
    /// after few sifts.
    fn complete(&mut self, bound: Option<&BigUint>) {
        let reached = |c: &Self| bound.is_some_and(|b| &c.order() == b);
        if reached(self) {
            return;
        }
        loop {
            let mut changed = false;
            let mut lvl = 0;
            while lvl < self.levels.len() {
                let mut pos = 0;
                while pos < self.levels[lvl].orbit.len() {
                    while self.levels[lvl].checked[pos] < self.levels[lvl].gens.len() {
                        let level = &self.levels[lvl];
                        let gi = level.gens[level.checked[pos]];
                        let beta = level.orbit[pos];
                        let x = &self.pool[gi];
                        let gamma = x.apply(beta);
                        let u_beta = &level.reps[level.slot[beta as usize] as usize];
                        let u_gamma_inv = &level.reps_inv[level.slot[gamma as usize] as usize];
                        let schreier = u_beta.then(x).then(u_gamma_inv);
                        self.levels[lvl].checked[pos] += 1;
                        if schreier.is_identity() {
                            continue;
                        }
                        let (residue, depth) = self.sift_from(schreier, lvl + 1);
                        if residue.is_identity() {
                            continue;
                        }
                        self.push_generator(residue, Some(depth));
                        changed = true;
                        if reached(self) {
                            return;
                        }
                    }
                    pos += 1;
                }
                lvl += 1;
            }
            if !changed {
                return;
            }
        }
    }

    /// Sifts `h` through levels `start..`; returns the residue and the level where
    /// sifting stopped (`levels.len()` if it passed every level).
    fn sift_from(&self, mut h: Permutation, start: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let beta = h.apply(level.base_point);
            let s = level.slot[beta as usize];
            if s == NONE {
                return (h, l);
            }
            if s != 0 {
                h = h.then(&level.reps_inv[s as usize]);
            }
        }
        (h, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.pool
    }

    /// Fundamental orbit of base point `level`.
    pub fn orbit(&self, level: usize) -> &[u32] {
        &self.levels[level].orbit
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::one(), |acc, l| acc * l.orbit.len())
    }

    /// Membership test by sifting.
    pub fn contains(&self, p: &Permutation) -> Result<bool, PermError> {
        if p.degree() != self.degree {
            return Err(PermError::DegreeMismatch(p.degree(), self.degree));
        }
        let (residue, _) = self.sift_from(p.clone(), 0);
        Ok(residue.is_identity())
    }
}
