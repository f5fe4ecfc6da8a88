//! Direct and structural decisions for the `H_p` and `H_p*` properties.
//!
//! `G` is `H_p` when no irreducible character has `p` dividing both its
//! degree and its codegree, and `H_p*` when every irreducible character has
//! `p'`-degree or `p`-defect zero. The structural side evaluates the case list
//! of the classification on `N = O^{p'}(G)` and reports every case that holds.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::arith;
use crate::chartab::{self, CharacterTable};
use crate::classes::ClassData;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::ops;
use crate::recognize::{recognize_named, NamedGroup};
use crate::structure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseA {
    A1,
    A2,
    A3,
    A4,
    A5a,
    A5b,
    A5c,
    A6a,
    A6b,
    A6c,
    A7a,
    A7b,
    A7c,
}

impl CaseA {
    pub const ALL: [CaseA; 13] = [
        CaseA::A1,
        CaseA::A2,
        CaseA::A3,
        CaseA::A4,
        CaseA::A5a,
        CaseA::A5b,
        CaseA::A5c,
        CaseA::A6a,
        CaseA::A6b,
        CaseA::A6c,
        CaseA::A7a,
        CaseA::A7b,
        CaseA::A7c,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CaseA::A1 => "1",
            CaseA::A2 => "2",
            CaseA::A3 => "3",
            CaseA::A4 => "4",
            CaseA::A5a => "5a",
            CaseA::A5b => "5b",
            CaseA::A5c => "5c",
            CaseA::A6a => "6a",
            CaseA::A6b => "6b",
            CaseA::A6c => "6c",
            CaseA::A7a => "7a",
            CaseA::A7b => "7b",
            CaseA::A7c => "7c",
        }
    }

    pub fn from_label(s: &str) -> Option<CaseA> {
        CaseA::ALL.into_iter().find(|c| c.label() == s)
    }
}

impl fmt::Display for CaseA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseC {
    C1,
    C2,
    C3a,
    C3b,
    C3c,
    C4,
    C5,
    C6,
}

impl CaseC {
    pub const ALL: [CaseC; 8] = [
        CaseC::C1,
        CaseC::C2,
        CaseC::C3a,
        CaseC::C3b,
        CaseC::C3c,
        CaseC::C4,
        CaseC::C5,
        CaseC::C6,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CaseC::C1 => "1",
            CaseC::C2 => "2",
            CaseC::C3a => "3a",
            CaseC::C3b => "3b",
            CaseC::C3c => "3c",
            CaseC::C4 => "4",
            CaseC::C5 => "5",
            CaseC::C6 => "6",
        }
    }

    pub fn from_label(s: &str) -> Option<CaseC> {
        CaseC::ALL.into_iter().find(|c| c.label() == s)
    }
}

impl fmt::Display for CaseC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A character violating a direct test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CharWitness {
    pub index: usize,
    pub degree: u64,
    pub codegree: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DirectVerdict {
    pub holds: bool,
    /// The least violating character when `holds` is false.
    pub witness: Option<CharWitness>,
}

fn first_violation(table: &CharacterTable, bad: impl Fn(u64, u64) -> bool) -> DirectVerdict {
    let witness = (0..table.len())
        .find(|&i| bad(table.degrees()[i], table.codegrees()[i]))
        .map(|index| CharWitness {
            index,
            degree: table.degrees()[index],
            codegree: table.codegrees()[index],
        });
    DirectVerdict {
        holds: witness.is_none(),
        witness,
    }
}

/// `p` divides no `gcd(chi(1), cod(chi))`.
pub fn is_hp_direct(table: &CharacterTable, p: u64) -> DirectVerdict {
    first_violation(table, |d, c| arith::gcd(d, c) % p == 0)
}

/// Every character has `p'`-degree or `p`-defect zero.
pub fn is_hp_star_direct(table: &CharacterTable, p: u64) -> DirectVerdict {
    let full = arith::p_part(table.group_order(), p);
    first_violation(table, |d, _| d % p == 0 && arith::p_part(d, p) != full)
}

/// `gcd(chi(1), cod(chi))` over the nonlinear characters, ascending.
pub fn gcd_set(table: &CharacterTable) -> Vec<u64> {
    let mut v: Vec<u64> = (0..table.len())
        .filter(|&i| table.degrees()[i] > 1)
        .map(|i| arith::gcd(table.degrees()[i], table.codegrees()[i]))
        .collect();
    v.sort_unstable();
    v
}

pub fn has_abelian_ti_sylow(g: &PermGroup, p: u64) -> Result<bool> {
    let s = structure::sylow_subgroup(g, p)?;
    Ok(s.is_abelian() && structure::is_ti_subgroup(g, &s)?)
}

/// Structural verdict: matching case labels with parameters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StructuralVerdict {
    pub cases_a: BTreeSet<CaseA>,
    pub cases_c: BTreeSet<CaseC>,
    /// Subgroup orders and case parameters, e.g. `N`, `P`, `4.m`, `5b.q`.
    pub params: BTreeMap<String, u64>,
    pub notes: Vec<String>,
}

/// Note attached whenever case 4 matches.
pub const CASE4_NOTE: &str = "case 4 evaluated with V = O_p(N), |V| = p^(pm) and |K/V| = (p^(pm)-1)/(p^m-1)";

fn prime_power_of(q: u64, p: u64) -> Option<u32> {
    arith::exact_log(q, p).filter(|_| q > 1)
}

/// Case 4: `V = O_p(N)` elementary abelian of order `p^(pm)`, `K/V = F(N/V)` cyclic of
/// order `(p^(pm)-1)/(p^m-1)`, `K` Frobenius with kernel `V`, `N/V` Frobenius with kernel `K/V`, `|N/K| = p`.
fn case4(n: &PermGroup, p: u64, v: &PermGroup) -> Result<Option<u32>> {
    if v.is_trivial() || !structure::is_elementary_abelian(v, p) {
        return Ok(None);
    }
    let k_exp = arith::exact_log(v.order(), p).unwrap();
    if k_exp % p as u32 != 0 {
        return Ok(None);
    }
    let m = k_exp / p as u32;
    let (quot, epi) = ops::quotient(n, v)?;
    let fit = structure::fitting_subgroup(&quot)?;
    let k = epi.preimage(v, &fit)?;
    let pm = p.pow(m);
    let want = (v.order() - 1) / (pm - 1);
    if k.order() / v.order() != want || n.order() / k.order() != p {
        return Ok(None);
    }
    if !structure::is_cyclic(&fit)? {
        return Ok(None);
    }
    // 1 < V < K and 1 < K/V < N/V hold by the order checks above
    if !structure::is_frobenius_with_kernel(&k, v)? || !structure::is_frobenius_with_kernel(&quot, &fit)? {
        return Ok(None);
    }
    Ok(Some(m))
}

/// Evaluates every case of both classifications on `(G, p)`.
pub fn structural_classify(g: &PermGroup, p: u64) -> Result<StructuralVerdict> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut out = StructuralVerdict::default();
    let sylow_g = structure::sylow_subgroup(g, p)?;
    if sylow_g.is_abelian() && sylow_g.is_normal_in(g) {
        out.cases_a.insert(CaseA::A1);
        out.cases_c.insert(CaseC::C1);
    }
    let n = structure::p_residual(g, p)?;
    out.params.insert("N".into(), n.order());
    out.params.insert("P".into(), sylow_g.order());
    if n.is_trivial() {
        return Ok(out);
    }
    let pn = structure::sylow_subgroup(&n, p)?;
    let p_normal = pn.is_normal_in(&n);
    let p_cyclic = structure::is_cyclic(&pn)?;
    let p_ti = structure::is_ti_subgroup(&n, &pn)?;
    let names = recognize_named(&n)?;
    let q_power = |q: u64| prime_power_of(q, p);

    // (2): N = N' : P with P cyclic and T.I.; a normal P forces N = P, which is case (1)
    if !p_normal && p_cyclic && p_ti {
        let nd = ops::derived_subgroup(&n)?;
        if ops::intersection(&nd, &pn)?.is_trivial() && nd.order() * pn.order() == n.order() {
            out.cases_a.insert(CaseA::A2);
            out.cases_c.insert(CaseC::C2);
            out.params.insert("2.N'".into(), nd.order());
        }
    }

    if p == 3 && names.contains(&NamedGroup::Asl2_3) {
        out.cases_a.insert(CaseA::A3);
    }

    let v = structure::p_core(&n, p)?;
    out.params.insert("O_p(N)".into(), v.order());
    if let Some(m) = case4(&n, p, &v)? {
        out.cases_a.insert(CaseA::A4);
        out.params.insert("4.m".into(), m as u64);
        out.notes.push(CASE4_NOTE.into());
    }

    if !n.is_abelian() && structure::is_simple(&n)? {
        if p > 2 && p_cyclic {
            out.cases_a.insert(CaseA::A5a);
            out.cases_c.insert(CaseC::C3a);
        }
        for name in &names {
            if let NamedGroup::Psl2(q) = *name {
                if let Some(f) = q_power(q).filter(|&f| f >= 2) {
                    out.cases_a.insert(CaseA::A5b);
                    out.cases_c.insert(CaseC::C3b);
                    out.params.insert("5b.q".into(), q);
                    out.params.insert("5b.f".into(), f as u64);
                }
            }
        }
        let listed = names.iter().any(|name| {
            matches!(
                (*name, p),
                (NamedGroup::Psl3_4, 3) | (NamedGroup::M11, 3) | (NamedGroup::TitsPrime, 5)
            )
        });
        if listed {
            out.cases_a.insert(CaseA::A5c);
            out.cases_c.insert(CaseC::C3c);
        }
    }

    if p > 2 {
        let o = structure::p_prime_core(&n, p)?;
        out.params.insert("O_p'(N)".into(), o.order());
        let (quot, _) = ops::quotient(&n, &o)?;
        let quot_simple = !quot.is_abelian() && structure::is_simple(&quot)?;
        let sl2_f = names.iter().find_map(|name| match *name {
            NamedGroup::Sl2(q) => q_power(q).filter(|&f| f >= 2).map(|f| (q, f)),
            _ => None,
        });
        let central_psl3_4 = p == 3
            && quot_simple
            && structure::is_perfect(&n)?
            && o.is_subgroup_of(&ops::center(&n)?)
            && recognize_named(&quot)?.contains(&NamedGroup::Psl3_4);
        if quot_simple && p_cyclic && p_ti {
            out.cases_c.insert(CaseC::C4);
        }
        if let Some((q, f)) = sl2_f {
            out.cases_c.insert(CaseC::C5);
            out.params.insert("sl2.q".into(), q);
            out.params.insert("sl2.f".into(), f as u64);
        }
        if central_psl3_4 {
            out.cases_c.insert(CaseC::C6);
        }
        if !o.is_trivial() && quot_simple {
            if p_cyclic && p_ti {
                out.cases_a.insert(CaseA::A6a);
            }
            if sl2_f.is_some() {
                out.cases_a.insert(CaseA::A6b);
            }
            if central_psl3_4 {
                out.cases_a.insert(CaseA::A6c);
            }
        }
    }

    // (7): V = O_p(N) is self-centralizing in N
    if !v.is_trivial() && ops::centralizer_of(&n, &v)?.same_group(&v) {
        let (quot, _) = ops::quotient(&n, &v)?;
        let quot_names = recognize_named(&quot)?;
        let orbits = structure::acts_transitively_on_nonidentity(&n, &v)?;
        let minimal = structure::is_minimal_normal(&n, &v)?;
        for name in &quot_names {
            if let NamedGroup::Sl2(q) = *name {
                if q >= 4 && q_power(q).is_some() && v.order() == q * q && orbits.is_transitive() {
                    out.cases_a.insert(CaseA::A7a);
                    out.params.insert("7a.q".into(), q);
                }
            }
        }
        if p == 3 && quot_names.contains(&NamedGroup::Sl2(13)) && v.order() == 729 && minimal && orbits.is_transitive() {
            out.cases_a.insert(CaseA::A7b);
        }
        if p == 3
            && quot_names.contains(&NamedGroup::Sl2(5))
            && v.order() == 81
            && minimal
            && orbits.sizes_with_identity() == [1, 40, 40]
        {
            out.cases_a.insert(CaseA::A7c);
        }
    }
    Ok(out)
}

pub fn hp_cases(g: &PermGroup, p: u64) -> Result<BTreeSet<CaseA>> {
    Ok(structural_classify(g, p)?.cases_a)
}

pub fn hp_star_cases(g: &PermGroup, p: u64) -> Result<BTreeSet<CaseC>> {
    Ok(structural_classify(g, p)?.cases_c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub group_id: String,
    pub p: u64,
    pub direct_hp: DirectVerdict,
    pub direct_hp_star: DirectVerdict,
    pub abelian_ti_sylow: bool,
    pub structural: StructuralVerdict,
    pub gcd_set: Vec<u64>,
}

impl ClassificationReport {
    /// The biconditionals and implications every report must satisfy.
    pub fn violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        let hp = self.direct_hp.holds;
        let star = self.direct_hp_star.holds;
        let a = !self.structural.cases_a.is_empty();
        let c = !self.structural.cases_c.is_empty();
        if hp != a {
            v.push(format!("direct H_p = {hp} but structural cases {:?}", self.structural.cases_a));
        }
        if star != self.abelian_ti_sylow || star != c {
            v.push(format!(
                "direct H_p* = {star}, abelian T.I. Sylow = {}, H_p* cases {:?}",
                self.abelian_ti_sylow, self.structural.cases_c
            ));
        }
        if star && !hp {
            v.push("H_p* holds but H_p fails".into());
        }
        let coprime = self.gcd_set.iter().all(|&x| x % self.p != 0);
        if coprime != hp {
            v.push(format!("gcd set {:?} disagrees with direct H_p = {hp}", self.gcd_set));
        }
        v
    }

    pub fn check(&self) -> Result<()> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvariantViolation(format!("{} p={}: {}", self.group_id, self.p, v.join("; "))))
        }
    }
}

/// Builds the report from a precomputed table without asserting the invariants.
pub fn classify(group_id: &str, g: &PermGroup, table: &CharacterTable, p: u64) -> Result<ClassificationReport> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(ClassificationReport {
        group_id: group_id.into(),
        p,
        direct_hp: is_hp_direct(table, p),
        direct_hp_star: is_hp_star_direct(table, p),
        abelian_ti_sylow: has_abelian_ti_sylow(g, p)?,
        structural: structural_classify(g, p)?,
        gcd_set: gcd_set(table),
    })
}

/// Computes both sides and fails with the full report on any disagreement.
pub fn cross_check(group_id: &str, g: &PermGroup, p: u64) -> Result<ClassificationReport> {
    let table = chartab::dixon_schneider(&ClassData::new(g)?)?;
    let report = classify(group_id, g, &table, p)?;
    report.check()?;
    Ok(report)
}

/// Outcome of the hereditary checks on an `H_p` group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HereditaryOutcome {
    /// Orders of the normal subgroups whose quotients were tested.
    pub quotients: Vec<u64>,
    pub failures: Vec<String>,
}

impl HereditaryOutcome {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks, for a direct-`H_p` group, that quotients by the normal closures of
/// class representatives are `H_p`, that `O_p(G)` and `O_p(O^{p'}(G))` are
/// abelian, and that `[O_{p'}(G), O^{p'}(G)] = 1` whenever `O_p(G) > 1`.
pub fn hereditary_checks(g: &PermGroup, classes: &ClassData, p: u64) -> Result<HereditaryOutcome> {
    let mut out = HereditaryOutcome::default();
    let mut normals: Vec<PermGroup> = Vec::new();
    for rep in classes.reps().iter().skip(1) {
        let n = ops::normal_closure(g, core::slice::from_ref(rep))?;
        if !normals.iter().any(|m| m.same_group(&n)) {
            normals.push(n);
        }
    }
    normals.sort_by_key(|n| n.order());
    for n in &normals {
        let (q, _) = ops::quotient(g, n)?;
        let table = chartab::dixon_schneider(&ClassData::new(&q)?)?;
        if !is_hp_direct(&table, p).holds {
            out.failures.push(format!("quotient by a normal subgroup of order {} is not H_p", n.order()));
        }
        out.quotients.push(n.order());
    }
    let op = structure::p_core(g, p)?;
    if !op.is_abelian() {
        out.failures.push(format!("O_p(G) of order {} is nonabelian", op.order()));
    }
    let residual = structure::p_residual(g, p)?;
    let op_n = structure::p_core(&residual, p)?;
    if !op_n.is_abelian() {
        out.failures.push(format!("O_p(O^p'(G)) of order {} is nonabelian", op_n.order()));
    }
    if !op.is_trivial() {
        let opp = structure::p_prime_core(g, p)?;
        let comm = ops::commutator_subgroup(g, &opp, &residual)?;
        if !comm.is_trivial() {
            out.failures.push(format!("[O_p'(G), O^p'(G)] has order {}", comm.order()));
        }
    }
    Ok(out)
}

/// For a case-(2) match with `N'` nonsolvable, whether the Sylow `p`-subgroup of `N` has order `p`.
/// `None` when the premise does not apply.
pub fn nonsolvable_case2_sylow_is_prime(g: &PermGroup, p: u64, verdict: &StructuralVerdict) -> Result<Option<bool>> {
    if !verdict.cases_a.contains(&CaseA::A2) {
        return Ok(None);
    }
    let n = structure::p_residual(g, p)?;
    if structure::is_solvable(&ops::derived_subgroup(&n)?)? {
        return Ok(None);
    }
    Ok(Some(structure::sylow_subgroup(&n, p)?.order() == p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors as c;
    use alloc::vec;

    fn cases(g: &PermGroup, p: u64) -> Vec<&'static str> {
        hp_cases(g, p).unwrap().into_iter().map(CaseA::label).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(cases(&c::symmetric(4).unwrap(), 2), vec!["4"]);
        assert_eq!(cases(&c::symmetric(4).unwrap(), 3), vec!["2"]);
        assert_eq!(cases(&c::cyclic(5).unwrap(), 5), vec!["1"]);
        assert_eq!(cases(&c::trivial(), 2), vec!["1"]);
        assert!(cases(&c::quaternion8().unwrap(), 2).is_empty());
        assert_eq!(cases(&c::alternating(5).unwrap(), 2), vec!["5b"]);
    }

    #[test]
    fn direct_examples() {
        let s4 = c::symmetric(4).unwrap();
        let r = cross_check("S4", &s4, 2).unwrap();
        assert!(r.direct_hp.holds);
        assert!(!r.direct_hp_star.holds);
        let q8 = c::quaternion8().unwrap();
        let r = cross_check("Q8", &q8, 2).unwrap();
        let w = r.direct_hp.witness.unwrap();
        assert_eq!((w.degree, w.codegree), (2, 4));
        assert!(r.structural.cases_a.is_empty());
    }

    #[test]
    fn hp_star_case_examples() {
        assert_eq!(
            hp_star_cases(&c::sl2(9).unwrap(), 3).unwrap().into_iter().collect::<Vec<_>>(),
            vec![CaseC::C5]
        );
        assert!(hp_star_cases(&c::sl2(5).unwrap(), 5).unwrap().contains(&CaseC::C4));
        assert!(has_abelian_ti_sylow(&c::alternating(5).unwrap(), 5).unwrap());
        assert!(!has_abelian_ti_sylow(&c::symmetric(4).unwrap(), 2).unwrap());
    }

    #[test]
    fn hereditary_s4() {
        let s4 = c::symmetric(4).unwrap();
        let out = hereditary_checks(&s4, &ClassData::new(&s4).unwrap(), 2).unwrap();
        assert!(out.holds(), "{:?}", out.failures);
        assert!(out.quotients.contains(&4));
    }

    #[test]
    fn labels_round_trip() {
        for c in CaseA::ALL {
            assert_eq!(CaseA::from_label(c.label()), Some(c));
        }
        for c in CaseC::ALL {
            assert_eq!(CaseC::from_label(c.label()), Some(c));
        }
    }
}
