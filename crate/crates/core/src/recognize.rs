//! Invariant fingerprints and recognition of the named groups the
//! classifier refers to.
//!
//! Recognition is not isomorphism testing. Each rule below is sound only for
//! the orders it is applied to:
//!
//! * a simple group of order `q(q^2-1)/gcd(2,q-1)` is `PSL_2(q)` (the only
//!   coincidence of simple orders below the cap is 20160, split by the
//!   element-order spectrum);
//! * a quasisimple group with center of order 2 and order `q(q^2-1)`, `q` odd,
//!   is `SL_2(q)` (the double cover of `PSL_2(q)` is unique);
//! * the simple group of order 7920 is `M_11`;
//! * order 17971200 is taken to be the Tits group without further checks.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::arith;
use crate::classes::ClassData;
use crate::error::Result;
use crate::group::PermGroup;
use crate::ops;
use crate::structure;

pub const TITS_ORDER: u64 = 17_971_200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NamedGroup {
    Sl2(u64),
    Psl2(u64),
    Asl2_3,
    Psl3_4,
    M11,
    TitsPrime,
}

impl fmt::Display for NamedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGroup::Sl2(q) => write!(f, "SL_2({q})"),
            NamedGroup::Psl2(q) => write!(f, "PSL_2({q})"),
            NamedGroup::Asl2_3 => write!(f, "ASL_2(3)"),
            NamedGroup::Psl3_4 => write!(f, "PSL_3(4)"),
            NamedGroup::M11 => write!(f, "M_11"),
            NamedGroup::TitsPrime => write!(f, "2F4(2)'"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub order: u64,
    pub class_size_multiset: Vec<u64>,
    pub element_order_spectrum: BTreeSet<u64>,
    pub is_perfect: bool,
    pub center_order: u64,
    /// Derived length when solvable, otherwise the order of the perfect residuum.
    pub derived_length_or_bottom: u64,
}

pub fn fingerprint(g: &PermGroup) -> Result<Fingerprint> {
    let classes = ClassData::new(g)?;
    let mut sizes = classes.sizes().to_vec();
    sizes.sort_unstable();
    let series = ops::derived_series(g)?;
    let bottom = series.last().unwrap();
    Ok(Fingerprint {
        order: g.order(),
        class_size_multiset: sizes,
        element_order_spectrum: structure::element_order_spectrum(&classes),
        is_perfect: series.len() == 1 && !g.is_trivial(),
        center_order: ops::center(g)?.order(),
        derived_length_or_bottom: if bottom.is_trivial() {
            series.len() as u64 - 1
        } else {
            bottom.order()
        },
    })
}

/// Prime powers `q >= 4` with `|PSL_2(q)| = order`.
fn psl2_parameters(order: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 4u64;
    loop {
        let full = match q.checked_mul(q * q - 1) {
            Some(x) => x,
            None => break,
        };
        if full / 2 > order {
            break;
        }
        if arith::prime_power(q).is_some() && full / arith::gcd(2, q - 1) == order {
            out.push(q);
        }
        q += 1;
    }
    out
}

/// Odd prime powers `q` with `q(q^2-1) = order`.
fn sl2_odd_parameter(order: u64) -> Option<u64> {
    let mut q = 3u64;
    while q * (q * q - 1) <= order {
        if q * (q * q - 1) == order && arith::prime_power(q).is_some() {
            return Some(q);
        }
        q += 2;
    }
    None
}

/// Every name the group matches; empty means "other".
pub fn recognize_named(g: &PermGroup) -> Result<Vec<NamedGroup>> {
    let mut out = Vec::new();
    let n = g.order();
    if n == TITS_ORDER {
        out.push(NamedGroup::TitsPrime);
        return Ok(out);
    }
    if n < 24 || n > crate::ENUMERATION_CAP || g.is_abelian() {
        return Ok(out);
    }
    let classes = ClassData::new(g)?;
    if structure::is_simple_with(g, &classes)? {
        for q in psl2_parameters(n) {
            out.push(NamedGroup::Psl2(q));
            if q % 2 == 0 {
                out.push(NamedGroup::Sl2(q));
            }
        }
        if n == 20160 && !classes.rep_orders().contains(&15) {
            out.push(NamedGroup::Psl3_4);
        }
        if n == 7920 {
            out.push(NamedGroup::M11);
        }
    } else if n == 24 {
        let involutions: u64 = classes
            .rep_orders()
            .iter()
            .zip(classes.sizes())
            .filter(|(&o, _)| o == 2)
            .map(|(_, &s)| s)
            .sum();
        if involutions == 1 && ops::derived_subgroup(g)?.order() == 8 {
            out.push(NamedGroup::Sl2(3));
        }
    } else if n == 216 {
        let v = structure::p_core(g, 3)?;
        if v.order() == 9
            && structure::is_elementary_abelian(&v, 3)
            && structure::acts_transitively_on_nonidentity(g, &v)?.is_transitive()
        {
            let (q, _) = ops::quotient(g, &v)?;
            if recognize_named(&q)?.contains(&NamedGroup::Sl2(3)) {
                out.push(NamedGroup::Asl2_3);
            }
        }
    } else if let Some(q) = sl2_odd_parameter(n) {
        let z = ops::center(g)?;
        if z.order() == 2 && structure::is_quasisimple(g)? {
            out.push(NamedGroup::Sl2(q));
        }
    }
    out.sort_unstable();
    Ok(out)
}
