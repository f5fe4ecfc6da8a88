//! Characteristic subgroups and structural predicates.
//!
//! All routines enumerate elements and therefore require the group to be
//! under [`ENUMERATION_CAP`](crate::ENUMERATION_CAP).

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::arith;
use crate::classes::ClassData;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::ops;
use crate::perm::Permutation;

fn check_prime(p: u64) -> Result<()> {
    if arith::is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// A Sylow `p`-subgroup.
///
/// Starts from a `p`-element of maximal order and repeatedly adjoins an
/// element of the normalizer whose `p`-th power already lies in the current
/// subgroup, scanning elements in rank order.
pub fn sylow_subgroup(g: &PermGroup, p: u64) -> Result<PermGroup> {
    check_prime(p)?;
    let target = arith::p_part(g.order(), p);
    let mut sylow = PermGroup::trivial(g.degree());
    if target == 1 {
        return Ok(sylow);
    }
    g.check_cap()?;
    let mut best: Option<(u64, Permutation)> = None;
    for r in 0..g.order() {
        let x = g.unrank(r);
        let o = x.order();
        let op = arith::p_part(o, p);
        if op > best.as_ref().map_or(1, |b| b.0) {
            best = Some((op, x.pow((o / op) as i64)));
            if op == target {
                break;
            }
        }
    }
    let (_, start) = best.expect("p divides |G|, so G has an element of order p");
    sylow.extend(&start)?;
    while sylow.order() < target {
        let mut found = None;
        for r in 0..g.order() {
            let x = g.unrank(r);
            if sylow.contains(&x) || !sylow.contains(&x.pow(p as i64)) {
                continue;
            }
            if sylow
                .generators()
                .iter()
                .all(|h| sylow.contains(&h.conjugate(&x)))
            {
                found = Some(x);
                break;
            }
        }
        let x = found.ok_or_else(|| {
            Error::InvariantViolation(alloc::format!(
                "no p-element normalizes a non-Sylow p-subgroup of order {}",
                sylow.order()
            ))
        })?;
        sylow.extend(&x)?;
    }
    if sylow.order() != target {
        return Err(Error::InvariantViolation("Sylow order mismatch".into()));
    }
    Ok(sylow)
}

/// `O^{p'}(G)`: the normal closure of a Sylow `p`-subgroup.
pub fn p_residual(g: &PermGroup, p: u64) -> Result<PermGroup> {
    let sylow = sylow_subgroup(g, p)?;
    let n = ops::normal_closure_of(g, &sylow)?;
    if (g.order() / n.order()) % p == 0 {
        return Err(Error::InvariantViolation("O^{p'} has index divisible by p".into()));
    }
    Ok(n)
}

/// `O_p(G)`: the core of a Sylow `p`-subgroup.
pub fn p_core(g: &PermGroup, p: u64) -> Result<PermGroup> {
    let mut core = sylow_subgroup(g, p)?;
    loop {
        let mut changed = false;
        for s in g.generators() {
            let s_inv = s.inverse();
            let c = core.clone();
            // x in C^s  <=>  s x s^-1 in C
            let next = core.filter_subgroup(|x| c.contains(&x.conjugate(&s_inv)))?;
            if next.order() < core.order() {
                core = next;
                changed = true;
            }
        }
        if !changed {
            return Ok(core);
        }
    }
}

/// `O_{p'}(G)`: pick the first minimal normal `p'`-subgroup, recurse in the quotient, pull back.
pub fn p_prime_core(g: &PermGroup, p: u64) -> Result<PermGroup> {
    check_prime(p)?;
    if g.is_trivial() {
        return Ok(g.clone());
    }
    let minimal = minimal_normal_subgroups(g)?;
    let Some(m) = minimal.into_iter().find(|m| m.order() % p != 0) else {
        return Ok(PermGroup::trivial(g.degree()));
    };
    let (q, epi) = ops::quotient(g, &m)?;
    let upstairs = p_prime_core(&q, p)?;
    epi.preimage(&m, &upstairs)
}

/// The Fitting subgroup: the product of `O_q(G)` over the primes dividing `|G|`.
pub fn fitting_subgroup(g: &PermGroup) -> Result<PermGroup> {
    let mut f = PermGroup::trivial(g.degree());
    for q in arith::prime_divisors(g.order()) {
        f = ops::join(&f, &p_core(g, q)?)?;
    }
    Ok(f)
}

/// Inclusion-minimal normal closures of prime-order class representatives.
pub fn minimal_normal_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    if g.is_trivial() {
        return Ok(Vec::new());
    }
    let classes = ClassData::new(g)?;
    minimal_normal_subgroups_with(g, &classes)
}

pub fn minimal_normal_subgroups_with(g: &PermGroup, classes: &ClassData) -> Result<Vec<PermGroup>> {
    let mut candidates: Vec<PermGroup> = Vec::new();
    for (rep, &o) in classes.reps().iter().zip(classes.rep_orders()) {
        if !arith::is_prime(o) {
            continue;
        }
        let n = ops::normal_closure(g, core::slice::from_ref(rep))?;
        if !candidates.iter().any(|c| c.same_group(&n)) {
            candidates.push(n);
        }
    }
    let minimal = candidates
        .iter()
        .filter(|n| {
            !candidates
                .iter()
                .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
        })
        .cloned()
        .collect();
    Ok(minimal)
}

/// `V` is a minimal normal subgroup of `g`.
pub fn is_minimal_normal(g: &PermGroup, v: &PermGroup) -> Result<bool> {
    if v.is_trivial() || !v.is_normal_in(g) {
        return Ok(false);
    }
    for r in 1..v.order() {
        let x = v.unrank(r);
        if ops::normal_closure(g, core::slice::from_ref(&x))?.order() != v.order() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_simple(g: &PermGroup) -> Result<bool> {
    if g.is_trivial() {
        return Ok(false);
    }
    if g.is_abelian() {
        return Ok(arith::is_prime(g.order()));
    }
    let classes = ClassData::new(g)?;
    is_simple_with(g, &classes)
}

pub fn is_simple_with(g: &PermGroup, classes: &ClassData) -> Result<bool> {
    if g.is_trivial() {
        return Ok(false);
    }
    for (rep, &o) in classes.reps().iter().zip(classes.rep_orders()) {
        if !arith::is_prime(o) {
            continue;
        }
        if ops::normal_closure(g, core::slice::from_ref(rep))?.order() != g.order() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_nonabelian_simple(g: &PermGroup) -> Result<bool> {
    Ok(!g.is_abelian() && is_simple(g)?)
}

pub fn is_solvable(g: &PermGroup) -> Result<bool> {
    Ok(ops::derived_series(g)?.last().unwrap().is_trivial())
}

pub fn is_perfect(g: &PermGroup) -> Result<bool> {
    Ok(ops::derived_subgroup(g)?.order() == g.order())
}

/// Perfect, and simple modulo the center.
pub fn is_quasisimple(g: &PermGroup) -> Result<bool> {
    if g.is_trivial() || !is_perfect(g)? {
        return Ok(false);
    }
    let z = ops::center(g)?;
    let (q, _) = ops::quotient(g, &z)?;
    is_simple(&q)
}

pub fn is_p_group(h: &PermGroup, p: u64) -> bool {
    arith::p_part(h.order(), p) == h.order()
}

pub fn is_elementary_abelian(h: &PermGroup, p: u64) -> bool {
    is_p_group(h, p)
        && h.is_abelian()
        && h.generators().iter().all(|x| x.pow(p as i64).is_identity())
}

pub fn is_cyclic(h: &PermGroup) -> Result<bool> {
    if h.order() == 1 {
        return Ok(true);
    }
    if !h.is_abelian() {
        return Ok(false);
    }
    // An abelian group is cyclic iff each Sylow subgroup is; an element of order |q-part| per prime.
    h.check_cap()?;
    let mut remaining: BTreeSet<u64> = arith::prime_divisors(h.order()).into_iter().collect();
    for r in 0..h.order() {
        let o = h.unrank(r).order();
        remaining.retain(|&q| arith::p_part(o, q) != arith::p_part(h.order(), q));
        if remaining.is_empty() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Sorted set of element orders.
pub fn element_order_spectrum(classes: &ClassData) -> BTreeSet<u64> {
    classes.rep_orders().iter().copied().collect()
}

/// `H` is a T.I. subgroup of `G`: every conjugate equals `H` or meets it trivially.
pub fn is_ti_subgroup(g: &PermGroup, h: &PermGroup) -> Result<bool> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    if h.order() == 1 || h.order() == g.order() {
        return Ok(true);
    }
    g.check_cap()?;
    let key = |sub: &[Permutation]| -> Vec<u64> {
        let mut ranks: Vec<u64> = sub.iter().map(|x| g.rank(x).unwrap()).collect();
        ranks.sort_unstable();
        ranks
    };
    let base_elems = h.elements()?;
    let base_key = key(&base_elems);
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    seen.insert(base_key.clone());
    let mut queue = alloc::vec![base_elems];
    let mut k = 0;
    while k < queue.len() {
        for s in g.generators() {
            let conj: Vec<Permutation> = queue[k].iter().map(|x| x.conjugate(s)).collect();
            let ck = key(&conj);
            if seen.insert(ck.clone()) {
                let shared = sorted_intersection_len(&ck, &base_key);
                if shared != 1 && shared != base_key.len() {
                    return Ok(false);
                }
                queue.push(conj);
            }
        }
        k += 1;
    }
    Ok(true)
}

fn sorted_intersection_len(a: &[u64], b: &[u64]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// `G` is a Frobenius group with kernel `K`: `C_G(x) <= K` for every `1 != x in K`.
///
/// Errors (rather than answering false) unless `K` is normal with `1 < K < G`.
pub fn is_frobenius_with_kernel(g: &PermGroup, k: &PermGroup) -> Result<bool> {
    if !k.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    if !k.is_normalized_by(g) {
        return Err(Error::NotNormal);
    }
    if k.is_trivial() || k.order() == g.order() {
        return Err(Error::Precondition("Frobenius kernel must satisfy 1 < K < G".into()));
    }
    let classes = ClassData::new(g)?;
    let k_elems = k.elements()?;
    for c in classes.classes_in(k) {
        let x = &classes.reps()[c];
        if x.is_identity() {
            continue;
        }
        let in_k = k_elems.iter().filter(|y| y.commutes_with(x)).count() as u64;
        if in_k != classes.centralizer_order(c) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Orbits of `G` acting by conjugation on the nonidentity elements of a normal subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSummary {
    /// Sizes of the orbits on `V \ {1}`, ascending.
    pub nonidentity_sizes: Vec<u64>,
    /// One representative per orbit, in the same order.
    pub representatives: Vec<Permutation>,
}

impl OrbitSummary {
    pub fn is_transitive(&self) -> bool {
        self.nonidentity_sizes.len() == 1
    }

    /// Orbit sizes on all of `V`, the identity orbit included.
    pub fn sizes_with_identity(&self) -> Vec<u64> {
        let mut v = alloc::vec![1];
        v.extend(self.nonidentity_sizes.iter().copied());
        v.sort_unstable();
        v
    }
}

pub fn acts_transitively_on_nonidentity(g: &PermGroup, v: &PermGroup) -> Result<OrbitSummary> {
    if !v.is_normal_in(g) {
        return Err(Error::NotNormal);
    }
    v.check_cap()?;
    let n = v.order() as usize;
    let mut seen = alloc::vec![false; n];
    seen[0] = true;
    let mut orbits: Vec<(u64, Permutation)> = Vec::new();
    for start in 1..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let rep = v.unrank(start as u64);
        let mut queue = alloc::vec![rep.clone()];
        let mut k = 0;
        while k < queue.len() {
            for s in g.generators() {
                let y = queue[k].conjugate(s);
                let r = v.rank(&y).expect("V is normal") as usize;
                if !seen[r] {
                    seen[r] = true;
                    queue.push(y);
                }
            }
            k += 1;
        }
        orbits.push((queue.len() as u64, rep));
    }
    orbits.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    Ok(OrbitSummary {
        nonidentity_sizes: orbits.iter().map(|o| o.0).collect(),
        representatives: orbits.into_iter().map(|o| o.1).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors as c;
    use alloc::vec;

    #[test]
    fn sylow_examples() {
        let s4 = c::symmetric(4).unwrap();
        let p = sylow_subgroup(&s4, 2).unwrap();
        assert_eq!(p.order(), 8);
        assert!(p.is_subgroup_of(&s4));
        assert_eq!(sylow_subgroup(&s4, 5).unwrap().order(), 1);
        let m11 = c::mathieu11().unwrap();
        let p3 = sylow_subgroup(&m11, 3).unwrap();
        assert_eq!(p3.order(), 9);
        assert!(is_elementary_abelian(&p3, 3));
        assert_eq!(sylow_subgroup(&s4, 4).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn residuals() {
        let s3 = c::symmetric(3).unwrap();
        assert_eq!(p_residual(&s3, 2).unwrap().order(), 6);
        let s4 = c::symmetric(4).unwrap();
        assert_eq!(p_residual(&s4, 3).unwrap().order(), 12);
        assert_eq!(p_residual(&s4, 7).unwrap().order(), 1);
    }

    #[test]
    fn cores() {
        let s4 = c::symmetric(4).unwrap();
        assert_eq!(p_prime_core(&s4, 2).unwrap().order(), 1);
        let o2 = p_core(&s4, 2).unwrap();
        assert_eq!(o2.order(), 4);
        assert!(o2.is_normal_in(&s4));
        let sl29 = c::sl2(9).unwrap();
        let o = p_prime_core(&sl29, 3).unwrap();
        assert_eq!(o.order(), 2);
        assert!(o.same_group(&ops::center(&sl29).unwrap()));
        let q8 = c::quaternion8().unwrap();
        assert_eq!(p_prime_core(&q8, 2).unwrap().order(), 1);
        assert_eq!(fitting_subgroup(&s4).unwrap().order(), 4);
    }

    #[test]
    fn minimal_normals() {
        let s4 = c::symmetric(4).unwrap();
        let m = minimal_normal_subgroups(&s4).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 4);
        let a5 = c::alternating(5).unwrap();
        let m = minimal_normal_subgroups(&a5).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 60);
        let c6 = c::cyclic(6).unwrap();
        let mut orders: Vec<u64> = minimal_normal_subgroups(&c6).unwrap().iter().map(|m| m.order()).collect();
        orders.sort();
        assert_eq!(orders, vec![2, 3]);
    }

    #[test]
    fn simplicity_and_friends() {
        assert!(is_simple(&c::alternating(5).unwrap()).unwrap());
        assert!(!is_simple(&c::cyclic(6).unwrap()).unwrap());
        assert!(is_simple(&c::cyclic(5).unwrap()).unwrap());
        assert!(!is_simple(&c::symmetric(5).unwrap()).unwrap());
        assert!(is_quasisimple(&c::sl2(9).unwrap()).unwrap());
        assert!(!is_quasisimple(&c::symmetric(4).unwrap()).unwrap());
        assert!(is_solvable(&c::symmetric(4).unwrap()).unwrap());
        assert!(!is_solvable(&c::alternating(5).unwrap()).unwrap());
    }

    #[test]
    fn ti_examples() {
        let a4 = c::alternating(4).unwrap();
        assert!(is_ti_subgroup(&a4, &sylow_subgroup(&a4, 3).unwrap()).unwrap());
        assert!(is_ti_subgroup(&a4, &a4).unwrap());
        let s4 = c::symmetric(4).unwrap();
        assert!(!is_ti_subgroup(&s4, &sylow_subgroup(&s4, 2).unwrap()).unwrap());
    }

    #[test]
    fn frobenius_examples() {
        let a4 = c::alternating(4).unwrap();
        let v = p_core(&a4, 2).unwrap();
        assert!(is_frobenius_with_kernel(&a4, &v).unwrap());
        let s4 = c::symmetric(4).unwrap();
        let v = p_core(&s4, 2).unwrap();
        assert!(!is_frobenius_with_kernel(&s4, &v).unwrap());
        assert!(matches!(is_frobenius_with_kernel(&s4, &s4), Err(Error::Precondition(_))));
    }

    #[test]
    fn transitivity_on_translations() {
        let g = c::asl2(4).unwrap();
        let v = p_core(&g, 2).unwrap();
        assert_eq!(v.order(), 16);
        let orbits = acts_transitively_on_nonidentity(&g, &v).unwrap();
        assert!(orbits.is_transitive());
        assert_eq!(orbits.nonidentity_sizes, vec![15]);
        // a central subgroup of order > 2: every orbit is a singleton
        let c6 = c::cyclic(6).unwrap();
        let c3 = sylow_subgroup(&c6, 3).unwrap();
        let o = acts_transitively_on_nonidentity(&c6, &c3).unwrap();
        assert!(!o.is_transitive());
        assert_eq!(o.sizes_with_identity(), vec![1, 1, 1]);
    }
}
