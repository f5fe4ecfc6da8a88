//! Conjugacy classes by orbit closure over the enumerated element set.

use alloc::vec::Vec;

use crate::arith;
use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::Permutation;

const UNSET: u32 = u32::MAX;

/// Conjugacy classes of a group under the enumeration cap.
///
/// Classes are sorted by their representative, which is the lexicographically
/// least image array in the class; the identity class is therefore index 0.
#[derive(Clone, Debug)]
pub struct ClassData {
    group: PermGroup,
    reps: Vec<Permutation>,
    sizes: Vec<u64>,
    rep_orders: Vec<u64>,
    exponent: u64,
    /// Class index of every element, by rank.
    class_of: Vec<u32>,
    /// Conjugation tree: `parent[r] = (rank, generator)` with `x = s^-1 * parent * s`.
    parent: Vec<(u32, u32)>,
    /// `power_map[i][j]` = class of `reps[i]^j` for `j` in `0..order(reps[i])`.
    power_map: Vec<Vec<u32>>,
}

impl ClassData {
    pub fn new(group: &PermGroup) -> Result<Self> {
        group.check_cap()?;
        let n = group.order() as usize;
        let gens = group.generators();
        let mut class_of = alloc::vec![UNSET; n];
        let mut parent = alloc::vec![(UNSET, UNSET); n];
        let mut raw_reps: Vec<Permutation> = Vec::new();
        let mut raw_sizes: Vec<u64> = Vec::new();

        let mut orbit: Vec<(u32, Permutation)> = Vec::new();
        for start in 0..n {
            if class_of[start] != UNSET {
                continue;
            }
            let label = raw_reps.len() as u32;
            // First pass: the class as a set, to find its least member.
            let x = group.unrank(start as u64);
            orbit.clear();
            class_of[start] = label;
            orbit.push((start as u32, x));
            let mut k = 0;
            while k < orbit.len() {
                let y = orbit[k].1.clone();
                for s in gens {
                    let z = y.conjugate(s);
                    let rz = group.rank(&z).expect("conjugate stays in the group") as usize;
                    if class_of[rz] == UNSET {
                        class_of[rz] = label;
                        orbit.push((rz as u32, z));
                    }
                }
                k += 1;
            }
            let (rep_rank, rep) = orbit
                .iter()
                .min_by(|a, b| a.1.cmp(&b.1))
                .cloned()
                .expect("orbit is nonempty");
            // Second pass: conjugation tree rooted at the representative.
            parent[rep_rank as usize] = (rep_rank, UNSET);
            let mut queue = alloc::vec![rep.clone()];
            let mut k = 0;
            while k < queue.len() {
                let y = queue[k].clone();
                let ry = group.rank(&y).unwrap() as u32;
                for (si, s) in gens.iter().enumerate() {
                    let z = y.conjugate(s);
                    let rz = group.rank(&z).unwrap() as usize;
                    if parent[rz].0 == UNSET {
                        parent[rz] = (ry, si as u32);
                        queue.push(z);
                    }
                }
                k += 1;
            }
            raw_sizes.push(orbit.len() as u64);
            raw_reps.push(rep);
        }

        // Canonical order: by representative.
        let mut order: Vec<usize> = (0..raw_reps.len()).collect();
        order.sort_by(|&a, &b| raw_reps[a].cmp(&raw_reps[b]));
        let mut relabel = alloc::vec![0u32; order.len()];
        for (new, &old) in order.iter().enumerate() {
            relabel[old] = new as u32;
        }
        for c in class_of.iter_mut() {
            *c = relabel[*c as usize];
        }
        let reps: Vec<Permutation> = order.iter().map(|&i| raw_reps[i].clone()).collect();
        let sizes: Vec<u64> = order.iter().map(|&i| raw_sizes[i]).collect();
        let rep_orders: Vec<u64> = reps.iter().map(|r| r.order()).collect();
        let exponent = rep_orders.iter().fold(1, |a, &b| arith::lcm(a, b));

        let power_map = reps
            .iter()
            .zip(&rep_orders)
            .map(|(x, &o)| {
                let mut row = Vec::with_capacity(o as usize);
                let mut y = group.identity();
                for _ in 0..o {
                    row.push(class_of[group.rank(&y).unwrap() as usize]);
                    y = y.mul(x);
                }
                row
            })
            .collect();

        Ok(ClassData {
            group: group.clone(),
            reps,
            sizes,
            rep_orders,
            exponent,
            class_of,
            parent,
            power_map,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn group_order(&self) -> u64 {
        self.group.order()
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn rep_orders(&self) -> &[u64] {
        &self.rep_orders
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn centralizer_order(&self, class: usize) -> u64 {
        self.group.order() / self.sizes[class]
    }

    /// Class index of a member of the group.
    pub fn class_of(&self, g: &Permutation) -> Option<usize> {
        self.group.rank(g).map(|r| self.class_of[r as usize] as usize)
    }

    pub fn class_of_rank(&self, rank: u64) -> usize {
        self.class_of[rank as usize] as usize
    }

    /// Class of `reps[class]^j`; `j` may be negative or exceed the element order.
    pub fn power(&self, class: usize, j: i64) -> usize {
        let o = self.rep_orders[class] as i64;
        self.power_map[class][j.rem_euclid(o) as usize] as usize
    }

    pub fn inverse_class(&self, class: usize) -> usize {
        self.power(class, -1)
    }

    /// Ranks of the members of a class.
    pub fn members(&self, class: usize) -> impl Iterator<Item = u64> + '_ {
        self.class_of
            .iter()
            .enumerate()
            .filter(move |(_, &c)| c as usize == class)
            .map(|(r, _)| r as u64)
    }

    /// A `t` with `t^-1 * reps[class_of(x)] * t == x`, read off the stored conjugation tree.
    pub fn conjugator(&self, x: &Permutation) -> Option<Permutation> {
        let mut r = self.group.rank(x)? as usize;
        let gens = self.group.generators();
        let mut path = Vec::new();
        loop {
            let (p, s) = self.parent[r];
            if s == UNSET {
                break;
            }
            path.push(s as usize);
            r = p as usize;
        }
        let mut t = self.group.identity();
        for &s in path.iter().rev() {
            t = t.mul(&gens[s]);
        }
        Some(t)
    }

    /// Conjugate in the group: same class.
    pub fn are_conjugate(&self, x: &Permutation, y: &Permutation) -> bool {
        match (self.class_of(x), self.class_of(y)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    /// Classes whose members all lie in `sub` (a normal subgroup is a union of classes).
    pub fn classes_in(&self, sub: &PermGroup) -> Vec<usize> {
        (0..self.len()).filter(|&c| sub.contains(&self.reps[c])).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn sorted(mut v: Vec<u64>) -> Vec<u64> {
        v.sort();
        v
    }

    /// Brute-force classes: partition by explicit conjugation over all elements.
    fn brute_force_sizes(g: &PermGroup) -> Vec<u64> {
        let els = g.enumerate_by_closure().unwrap();
        let mut done = alloc::collections::BTreeSet::new();
        let mut sizes = Vec::new();
        for x in &els {
            if done.contains(x) {
                continue;
            }
            let class: alloc::collections::BTreeSet<Permutation> =
                els.iter().map(|t| x.conjugate(t)).collect();
            sizes.push(class.len() as u64);
            done.extend(class);
        }
        sorted(sizes)
    }

    #[test]
    fn s3_classes() {
        let g = PermGroup::new(3, vec![cyc(3, &[&[1, 2]]), cyc(3, &[&[1, 2, 3]])]).unwrap();
        let cd = ClassData::new(&g).unwrap();
        assert_eq!(sorted(cd.sizes().to_vec()), brute_force_sizes(&g));
        assert_eq!(sorted(cd.sizes().to_vec()), vec![1, 2, 3]);
        assert!(cd.reps()[0].is_identity());
        // reps are lexicographically least in their class
        for (c, rep) in cd.reps().iter().enumerate() {
            for r in cd.members(c) {
                assert!(*rep <= g.unrank(r));
            }
        }
    }

    #[test]
    fn trivial_classes() {
        let g = PermGroup::trivial(1);
        let cd = ClassData::new(&g).unwrap();
        assert_eq!(cd.sizes(), &[1]);
        assert_eq!(cd.exponent(), 1);
    }

    #[test]
    fn quaternion_regular() {
        // Q8 = {±1, ±i, ±j, ±k} by right multiplication; points 1..8 = 1,i,j,k,-1,-i,-j,-k.
        let i = Permutation::from_one_based(&[2, 5, 8, 3, 6, 1, 4, 7]).unwrap();
        let j = Permutation::from_one_based(&[3, 4, 5, 6, 7, 8, 1, 2]).unwrap();
        let g = PermGroup::new(8, vec![i, j]).unwrap();
        assert_eq!(g.order(), 8);
        let cd = ClassData::new(&g).unwrap();
        assert_eq!(sorted(cd.sizes().to_vec()), vec![1, 1, 2, 2, 2]);
        assert_eq!(sorted(cd.sizes().to_vec()), brute_force_sizes(&g));
    }

    #[test]
    fn class_invariants_s5() {
        let g = PermGroup::new(5, vec![cyc(5, &[&[1, 2, 3, 4, 5]]), cyc(5, &[&[1, 2]])]).unwrap();
        let cd = ClassData::new(&g).unwrap();
        assert_eq!(cd.sizes().iter().sum::<u64>(), 120);
        for c in 0..cd.len() {
            let x = &cd.reps()[c];
            let cent = g.filter_subgroup(|y| y.commutes_with(x)).unwrap();
            assert_eq!(cd.sizes()[c], 120 / cent.order());
            assert_eq!(cd.power(c, 1), c);
            assert_eq!(cd.power(c, cd.rep_orders()[c] as i64), 0);
        }
        assert_eq!(cd.exponent(), 60);
        for r in 0..120 {
            let x = g.unrank(r);
            let t = cd.conjugator(&x).unwrap();
            let rep = &cd.reps()[cd.class_of(&x).unwrap()];
            assert_eq!(rep.conjugate(&t), x);
        }
    }
}
