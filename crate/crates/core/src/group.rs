//! Permutation groups backed by a deterministic Schreier–Sims stabilizer chain.
//!
//! Besides order and membership, the chain gives every element a rank in
//! `0..order` (mixed radix over the transversals), which the rest of the
//! crate uses as a dense element index in place of hashing.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Groups larger than this are never enumerated element by element.
pub const ENUMERATION_CAP: u64 = 1_000_000;

const NOT_IN_ORBIT: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Level {
    base: u32,
    gens: Vec<Permutation>,
    orbit: Vec<u32>,
    /// Orbit position of each point, or `NOT_IN_ORBIT`.
    position: Vec<u32>,
    /// `transversal[k]` maps the base point to `orbit[k]`.
    transversal: Vec<Permutation>,
    transversal_inv: Vec<Permutation>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut position = alloc::vec![NOT_IN_ORBIT; degree];
        position[base] = 0;
        Level {
            base: base as u32,
            gens: Vec::new(),
            orbit: alloc::vec![base as u32],
            position,
            transversal: alloc::vec![Permutation::identity(degree)],
            transversal_inv: alloc::vec![Permutation::identity(degree)],
        }
    }
}

#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
    order: u64,
}

impl PermGroup {
    /// Builds the group generated by `generators` acting on `degree` points.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameter("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut group = PermGroup {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
            order: 1,
        };
        for g in generators {
            group.push_generator(g)?;
        }
        Ok(group)
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
            order: 1,
        }
    }

    /// Adds a generator (kept even if redundant) and extends the chain.
    pub fn push_generator(&mut self, g: Permutation) -> Result<()> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: g.degree(),
            });
        }
        self.generators.push(g.clone());
        let (residue, _) = self.sift(&g, 0);
        if !residue.is_identity() {
            self.add_strong_generator(0, residue);
            self.order = self.compute_order()?;
        }
        Ok(())
    }

    /// Adds `g` as a generator only when it is not already a member. Returns whether it grew.
    pub fn extend(&mut self, g: &Permutation) -> Result<bool> {
        if self.contains(g) {
            return Ok(false);
        }
        self.push_generator(g.clone())?;
        Ok(true)
    }

    /// The subgroup generated by `gens`, after checking membership of each.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<PermGroup> {
        for g in &gens {
            if g.degree() != self.degree {
                return Err(Error::DegreeMismatch {
                    expected: self.degree,
                    found: g.degree(),
                });
            }
            if !self.contains(g) {
                return Err(Error::NotMember);
            }
        }
        PermGroup::new(self.degree, gens)
    }

    fn compute_order(&self) -> Result<u64> {
        self.levels.iter().try_fold(1u64, |acc, l| {
            acc.checked_mul(l.orbit.len() as u64).ok_or(Error::OrderOverflow)
        })
    }

    fn add_strong_generator(&mut self, i: usize, g: Permutation) {
        if i == self.levels.len() {
            let b = g
                .first_moved_point()
                .expect("sift residue is not the identity");
            self.levels.push(Level::new(b, self.degree));
        }
        let level = &mut self.levels[i];
        level.gens.push(g);
        let new_gen = level.gens.len() - 1;
        let old_len = level.orbit.len();

        // Extend the orbit under all generators.
        let mut k = 0;
        while k < level.orbit.len() {
            let pt = level.orbit[k] as usize;
            let from = if k < old_len { new_gen } else { 0 };
            for s in from..level.gens.len() {
                let img = level.gens[s].image(pt);
                if level.position[img] == NOT_IN_ORBIT {
                    let u = level.transversal[k].mul(&level.gens[s]);
                    level.position[img] = level.orbit.len() as u32;
                    level.orbit.push(img as u32);
                    level.transversal_inv.push(u.inverse());
                    level.transversal.push(u);
                }
            }
            k += 1;
        }

        // Schreier generators: (old points, new generator) and (new points, every generator).
        let mut pairs = Vec::new();
        for k in 0..old_len {
            pairs.push((k, new_gen));
        }
        for k in old_len..level.orbit.len() {
            for s in 0..level.gens.len() {
                pairs.push((k, s));
            }
        }
        for (k, s) in pairs {
            let schreier = {
                let level = &self.levels[i];
                let u = &level.transversal[k];
                let s = &level.gens[s];
                let img = s.image(level.orbit[k] as usize);
                let pos = level.position[img] as usize;
                u.mul(s).mul(&level.transversal_inv[pos])
            };
            if schreier.is_identity() {
                continue;
            }
            let (residue, _) = self.sift(&schreier, i + 1);
            if !residue.is_identity() {
                self.add_strong_generator(i + 1, residue);
            }
        }
    }

    /// Strips `g` through the chain from level `from`; returns the residue and the level reached.
    fn sift(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for i in from..self.levels.len() {
            let level = &self.levels[i];
            let img = h.image(level.base as usize);
            let pos = level.position[img];
            if pos == NOT_IN_ORBIT {
                return (h, i);
            }
            h = h.mul(&level.transversal_inv[pos as usize]);
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g, 0).0.is_identity()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base as usize).collect()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn check_cap(&self) -> Result<()> {
        if self.order > ENUMERATION_CAP {
            return Err(Error::CapExceeded {
                order: self.order,
                cap: ENUMERATION_CAP,
            });
        }
        Ok(())
    }

    /// Dense index of a member in `0..order`, `None` for non-members.
    pub fn rank(&self, g: &Permutation) -> Option<u64> {
        if g.degree() != self.degree {
            return None;
        }
        let mut h = g.clone();
        let mut r = 0u64;
        for level in &self.levels {
            let img = h.image(level.base as usize);
            let pos = level.position[img];
            if pos == NOT_IN_ORBIT {
                return None;
            }
            r = r * level.orbit.len() as u64 + pos as u64;
            h = h.mul(&level.transversal_inv[pos as usize]);
        }
        h.is_identity().then_some(r)
    }

    /// Inverse of [`PermGroup::rank`].
    pub fn unrank(&self, mut r: u64) -> Permutation {
        assert!(r < self.order, "rank out of range");
        let mut positions = alloc::vec![0usize; self.levels.len()];
        for (i, level) in self.levels.iter().enumerate().rev() {
            let n = level.orbit.len() as u64;
            positions[i] = (r % n) as usize;
            r /= n;
        }
        // g = u_k ... u_1 u_0 (right action)
        let mut g = Permutation::identity(self.degree);
        for (i, level) in self.levels.iter().enumerate().rev() {
            g = g.mul(&level.transversal[positions[i]]);
        }
        g
    }

    /// All elements in rank order.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        self.check_cap()?;
        Ok((0..self.order).map(|r| self.unrank(r)).collect())
    }

    /// Members of `self` satisfying `keep`, as a subgroup. The caller guarantees the kept set is a subgroup.
    pub fn filter_subgroup<F: FnMut(&Permutation) -> bool>(&self, mut keep: F) -> Result<PermGroup> {
        self.check_cap()?;
        let mut sub = PermGroup::trivial(self.degree);
        for r in 0..self.order {
            let g = self.unrank(r);
            if keep(&g) {
                sub.extend(&g)?;
            }
        }
        Ok(sub)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// Equality as sets of permutations.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order == other.order && self.is_subgroup_of(other)
    }

    /// Normalized by every generator of `ambient`.
    pub fn is_normalized_by(&self, ambient: &PermGroup) -> bool {
        ambient
            .generators
            .iter()
            .all(|s| self.generators.iter().all(|h| self.contains(&h.conjugate(s))))
    }

    pub fn is_normal_in(&self, ambient: &PermGroup) -> bool {
        self.is_subgroup_of(ambient) && self.is_normalized_by(ambient)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].commutes_with(&g[j])))
    }

    /// Breadth-first closure of the generators, independent of the chain.
    pub fn enumerate_by_closure(&self) -> Result<Vec<Permutation>> {
        self.check_cap()?;
        let mut seen = alloc::collections::BTreeSet::new();
        let id = self.identity();
        seen.insert(id.clone());
        let mut queue = alloc::vec![id];
        let mut k = 0;
        while k < queue.len() {
            let x = queue[k].clone();
            for s in &self.generators {
                let y = x.mul(s);
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
            k += 1;
        }
        Ok(queue)
    }
}
