//! Deterministic Schreier–Sims.
//!
//! Base points are always the smallest point moved by the element that
//! forces a new level, so the chain depends only on the generator list.

use std::collections::HashSet;

use num_bigint::BigUint;

use crate::perm::Permutation;

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    /// Strong generators fixing every earlier base point.
    gens: Vec<Permutation>,
    /// Points of the basic orbit in discovery order.
    orbit: Vec<usize>,
    /// `reps[b]` maps `base` to `b`.
    reps: Vec<Option<Permutation>>,
    inv_reps: Vec<Option<Permutation>>,
    /// Schreier generators already sifted, as (orbit point, generator index).
    tested: HashSet<(usize, usize)>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut reps = vec![None; degree];
        let mut inv_reps = vec![None; degree];
        reps[base] = Some(Permutation::identity(degree));
        inv_reps[base] = Some(Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            reps,
            inv_reps,
            tested: HashSet::new(),
        }
    }

    fn add_generator(&mut self, g: Permutation) {
        self.gens.push(g);
        // Re-close the orbit; new points get representatives u_b · s.
        let mut i = 0;
        while i < self.orbit.len() {
            let b = self.orbit[i];
            for s in &self.gens {
                let c = s.apply(b);
                if self.reps[c].is_none() {
                    let rep = self.reps[b].as_ref().unwrap().then(s);
                    self.inv_reps[c] = Some(rep.inverse());
                    self.reps[c] = Some(rep);
                    self.orbit.push(c);
                }
            }
            i += 1;
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

enum Sift {
    Member,
    /// Residue and the level at which it left the chain.
    Dropped(Permutation, usize),
}

impl StabilizerChain {
    pub(crate) fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        for g in generators {
            if let Sift::Dropped(h, j) = chain.sift(g.clone(), 0) {
                chain.insert(h, 0, j);
            }
        }
        chain.complete();
        chain
    }

    /// Adds `h` as a strong generator on levels `from..=to`, creating level
    /// `to` when it does not exist yet.
    fn insert(&mut self, h: Permutation, from: usize, to: usize) {
        if to == self.levels.len() {
            let base = h
                .first_moved()
                .expect("only nonidentity residues are inserted");
            self.levels.push(Level::new(base, self.degree));
        }
        for level in &mut self.levels[from..=to] {
            level.add_generator(h.clone());
        }
    }

    fn sift(&self, mut g: Permutation, from: usize) -> Sift {
        for (j, level) in self.levels.iter().enumerate().skip(from) {
            let b = g.apply(level.base);
            match &level.inv_reps[b] {
                Some(inv) => g = g.then(inv),
                None => return Sift::Dropped(g, j),
            }
        }
        if g.is_identity() {
            Sift::Member
        } else {
            Sift::Dropped(g, self.levels.len())
        }
    }

    fn complete(&mut self) {
        let mut i = self.levels.len();
        'outer: while i > 0 {
            let level_index = i - 1;
            let level = &self.levels[level_index];
            let mut pending = Vec::new();
            for &b in &level.orbit {
                for (k, _) in level.gens.iter().enumerate() {
                    if !level.tested.contains(&(b, k)) {
                        pending.push((b, k));
                    }
                }
            }
            for (b, k) in pending {
                let level = &mut self.levels[level_index];
                level.tested.insert((b, k));
                let s = &level.gens[k];
                let c = s.apply(b);
                let schreier = level.reps[b]
                    .as_ref()
                    .unwrap()
                    .then(s)
                    .then(level.inv_reps[c].as_ref().unwrap());
                if schreier.is_identity() {
                    continue;
                }
                if let Sift::Dropped(h, j) = self.sift(schreier, level_index + 1) {
                    self.insert(h, level_index + 1, j);
                    i = j + 1;
                    continue 'outer;
                }
            }
            i -= 1;
        }
    }

    pub(crate) fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| {
            acc * BigUint::from(l.orbit.len())
        })
    }

    pub(crate) fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && matches!(self.sift(g.clone(), 0), Sift::Member)
    }

    pub(crate) fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub(crate) fn strong_generators(&self) -> &[Permutation] {
        self.levels.first().map_or(&[], |l| &l.gens)
    }

    /// Every element, in no particular order.
    pub(crate) fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for h in &out {
                for &b in &level.orbit {
                    next.push(h.then(level.reps[b].as_ref().unwrap()));
                }
            }
            out = next;
        }
        out
    }
}
