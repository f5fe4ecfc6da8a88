//! Subgroup constructions inside a fixed ambient group: normal closures,
//! commutator subgroups, centralizers, intersections and coset-action quotients.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Smallest normal subgroup of `g` containing `elements`.
pub fn normal_closure(g: &PermGroup, elements: &[Permutation]) -> Result<PermGroup> {
    for x in elements {
        if !g.contains(x) {
            return Err(Error::NotMember);
        }
    }
    let mut h = PermGroup::trivial(g.degree());
    for x in elements {
        h.extend(x)?;
    }
    close_under_conjugation(g, h)
}

fn close_under_conjugation(g: &PermGroup, mut h: PermGroup) -> Result<PermGroup> {
    // Conjugates of every generator of h (including ones added on the way).
    let mut k = 0;
    while k < h.generators().len() {
        let x = h.generators()[k].clone();
        for s in g.generators() {
            let y = x.conjugate(s);
            h.extend(&y)?;
        }
        k += 1;
    }
    Ok(h)
}

/// Normal closure of a subgroup's generators.
pub fn normal_closure_of(g: &PermGroup, sub: &PermGroup) -> Result<PermGroup> {
    normal_closure(g, sub.generators())
}

/// `[A, B]` for subgroups normalized by `g`: normal closure of generator commutators.
pub fn commutator_subgroup(g: &PermGroup, a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let mut comms = Vec::new();
    for x in a.generators() {
        for y in b.generators() {
            let c = Permutation::commutator(x, y);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    normal_closure(g, &comms)
}

pub fn derived_subgroup(g: &PermGroup) -> Result<PermGroup> {
    commutator_subgroup(g, g, g)
}

/// `G, G', G'', ...` down to the perfect residuum (inclusive).
pub fn derived_series(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let mut series = alloc::vec![g.clone()];
    loop {
        let last = series.last().unwrap();
        let next = derived_subgroup(last)?;
        if next.order() == last.order() {
            return Ok(series);
        }
        series.push(next);
    }
}

pub fn center(g: &PermGroup) -> Result<PermGroup> {
    let gens = g.generators().to_vec();
    g.filter_subgroup(|x| gens.iter().all(|s| x.commutes_with(s)))
}

pub fn centralizer(g: &PermGroup, x: &Permutation) -> Result<PermGroup> {
    if !g.contains(x) {
        return Err(Error::NotMember);
    }
    g.filter_subgroup(|y| y.commutes_with(x))
}

/// Centralizer in `g` of a subgroup.
pub fn centralizer_of(g: &PermGroup, sub: &PermGroup) -> Result<PermGroup> {
    let gens = sub.generators().to_vec();
    g.filter_subgroup(|y| gens.iter().all(|s| y.commutes_with(s)))
}

/// Normalizer in `g` of a subgroup.
pub fn normalizer(g: &PermGroup, sub: &PermGroup) -> Result<PermGroup> {
    g.filter_subgroup(|y| sub.generators().iter().all(|h| sub.contains(&h.conjugate(y))))
}

pub fn intersection(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let (small, large) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    small.filter_subgroup(|x| large.contains(x))
}

/// Subgroup generated by two subgroups of the same degree.
pub fn join(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let mut j = a.clone();
    for x in b.generators() {
        j.extend(x)?;
    }
    Ok(j)
}

/// The natural map from `G` onto the action on right cosets of a normal subgroup.
#[derive(Clone, Debug)]
pub struct Epimorphism {
    source: PermGroup,
    kind: EpiKind,
}

#[derive(Clone, Debug)]
enum EpiKind {
    /// Quotient by the trivial subgroup: the image is the source group itself.
    Identity,
    Cosets {
        /// Coset index of each element, by rank in the source.
        label: Vec<u32>,
        /// A representative of each coset.
        reps: Vec<Permutation>,
        degree: usize,
    },
}

impl Epimorphism {
    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    /// Image of a member of the source group.
    pub fn image(&self, g: &Permutation) -> Result<Permutation> {
        if !self.source.contains(g) {
            return Err(Error::NotMember);
        }
        Ok(match &self.kind {
            EpiKind::Identity => g.clone(),
            EpiKind::Cosets { label, reps, degree } => {
                let imgs: Vec<u32> = (0..*degree)
                    .map(|c| {
                        let r = self.source.rank(&reps[c].mul(g)).unwrap();
                        label[r as usize]
                    })
                    .collect();
                Permutation::from_images_unchecked(imgs)
            }
        })
    }

    /// Some preimage of an element of the quotient.
    pub fn lift(&self, q: &Permutation) -> Permutation {
        match &self.kind {
            EpiKind::Identity => q.clone(),
            // The coset N*1 is point 0; q sends it to the coset N*g.
            EpiKind::Cosets { reps, .. } => reps[q.image(0)].clone(),
        }
    }

    /// Full preimage of a subgroup of the quotient, given the kernel.
    pub fn preimage(&self, kernel: &PermGroup, sub: &PermGroup) -> Result<PermGroup> {
        let mut h = kernel.clone();
        for q in sub.generators() {
            h.extend(&self.lift(q))?;
        }
        Ok(h)
    }
}

/// `G/N` as the action of `G` on the right cosets of `N`, with the natural epimorphism.
pub fn quotient(g: &PermGroup, n: &PermGroup) -> Result<(PermGroup, Epimorphism)> {
    if !n.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    if !n.is_normalized_by(g) {
        return Err(Error::NotNormal);
    }
    if n.is_trivial() {
        let epi = Epimorphism {
            source: g.clone(),
            kind: EpiKind::Identity,
        };
        return Ok((g.clone(), epi));
    }
    g.check_cap()?;
    let index = (g.order() / n.order()) as usize;
    let n_elements = n.elements()?;
    let mut label = alloc::vec![u32::MAX; g.order() as usize];
    let mut reps = Vec::with_capacity(index);
    for r in 0..g.order() {
        if label[r as usize] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        let x = g.unrank(r);
        for m in &n_elements {
            let rr = g.rank(&m.mul(&x)).expect("coset member lies in G");
            label[rr as usize] = c;
        }
        reps.push(x);
    }
    debug_assert_eq!(reps.len(), index);
    let epi = Epimorphism {
        source: g.clone(),
        kind: EpiKind::Cosets {
            label,
            reps,
            degree: index,
        },
    };
    let gens: Vec<Permutation> = g
        .generators()
        .iter()
        .map(|s| epi.image(s))
        .collect::<Result<_>>()?;
    let q = PermGroup::new(index, gens)?;
    Ok((q, epi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn s4() -> PermGroup {
        PermGroup::new(4, vec![cyc(4, &[&[1, 2]]), cyc(4, &[&[1, 2, 3, 4]])]).unwrap()
    }

    fn v4() -> Vec<Permutation> {
        vec![cyc(4, &[&[1, 2], &[3, 4]]), cyc(4, &[&[1, 3], &[2, 4]])]
    }

    #[test]
    fn normal_closures_in_s4() {
        let g = s4();
        let a4 = normal_closure(&g, &[cyc(4, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(a4.order(), 12);
        assert!(a4.is_normal_in(&g));
        assert_eq!(normal_closure(&g, &[g.identity()]).unwrap().order(), 1);
        assert_eq!(normal_closure(&g, &[cyc(4, &[&[1, 2]])]).unwrap().order(), 24);
        let outside = cyc(4, &[&[1, 2]]);
        let a4_err = normal_closure(&a4, &[outside]).unwrap_err();
        assert_eq!(a4_err, Error::NotMember);
    }

    #[test]
    fn derived_series_of_s4() {
        let orders: Vec<u64> = derived_series(&s4()).unwrap().iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
    }

    #[test]
    fn centers_and_centralizers() {
        let g = s4();
        assert_eq!(center(&g).unwrap().order(), 1);
        let c4 = PermGroup::new(4, vec![cyc(4, &[&[1, 2, 3, 4]])]).unwrap();
        assert_eq!(center(&c4).unwrap().order(), 4);
        let x = cyc(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(centralizer(&g, &x).unwrap().order(), 8);
        let a4 = normal_closure(&g, &[cyc(4, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(centralizer(&a4, &cyc(4, &[&[1, 2]])).unwrap_err(), Error::NotMember);
    }

    #[test]
    fn quotient_s4_by_v4() {
        let g = s4();
        let n = g.subgroup(v4()).unwrap();
        let (q, epi) = quotient(&g, &n).unwrap();
        assert_eq!(q.order(), 6);
        assert!(!q.is_abelian());
        assert_eq!(q.order() * n.order(), g.order());
        // homomorphism on generator pairs, kernel = N
        let els = g.elements().unwrap();
        for a in &els {
            for b in g.generators() {
                let lhs = epi.image(&a.mul(b)).unwrap();
                let rhs = epi.image(a).unwrap().mul(&epi.image(b).unwrap());
                assert_eq!(lhs, rhs);
            }
            assert_eq!(epi.image(a).unwrap().is_identity(), n.contains(a));
        }
    }

    #[test]
    fn quotient_edge_cases() {
        let g = s4();
        let (q, _) = quotient(&g, &g).unwrap();
        assert_eq!(q.order(), 1);
        let (q, epi) = quotient(&g, &PermGroup::trivial(4)).unwrap();
        assert_eq!(q.order(), 24);
        assert_eq!(epi.image(&g.generators()[0]).unwrap(), g.generators()[0]);
        let h = g.subgroup(vec![cyc(4, &[&[1, 2]])]).unwrap();
        assert_eq!(quotient(&g, &h).unwrap_err(), Error::NotNormal);
        let other = PermGroup::new(4, vec![cyc(4, &[&[1, 2]])]).unwrap();
        let a4 = normal_closure(&g, &[cyc(4, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(quotient(&a4, &other).unwrap_err(), Error::NotSubgroup);
    }

    #[test]
    fn preimage_round_trip() {
        let g = s4();
        let n = g.subgroup(v4()).unwrap();
        let (q, epi) = quotient(&g, &n).unwrap();
        let q_derived = derived_subgroup(&q).unwrap();
        assert_eq!(q_derived.order(), 3);
        assert_eq!(epi.preimage(&n, &q_derived).unwrap().order(), 12);
    }
}
