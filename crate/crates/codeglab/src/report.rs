//! JSON reports.
//!
//! One object per `(group, p)`:
//!
//! | field | type |
//! |---|---|
//! | `group` | string id |
//! | `p` | integer |
//! | `direct_hp`, `direct_hp_star` | bool, read off the character table |
//! | `ti` | bool, abelian T.I. Sylow `p`-subgroup |
//! | `cases_a`, `cases_c` | sorted case labels |
//! | `witnesses` | violating characters, case parameters and notes |
//! | `gcd_set` | `gcd(chi(1), cod(chi))` over nonlinear characters, ascending |
//! | `timings` | `null` unless timings were requested |
//!
//! Corpus runs add `status` (`"pass"` or `"fail"`) and `problems`.

use std::collections::BTreeMap;

use codeglab_core::classify::{CharWitness, ClassificationReport};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub index: usize,
    pub degree: u64,
    pub codegree: u64,
}

impl From<CharWitness> for Witness {
    fn from(w: CharWitness) -> Self {
        Witness {
            index: w.index,
            degree: w.degree,
            codegree: w.codegree,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub hp: Option<Witness>,
    pub hp_star: Option<Witness>,
    pub params: BTreeMap<String, u64>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timings {
    pub table_ms: f64,
    pub classify_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub group: String,
    pub p: u64,
    pub direct_hp: bool,
    pub direct_hp_star: bool,
    pub ti: bool,
    pub cases_a: Vec<String>,
    pub cases_c: Vec<String>,
    pub witnesses: Witnesses,
    pub gcd_set: Vec<u64>,
    pub timings: Option<Timings>,
}

impl Report {
    pub fn new(r: &ClassificationReport, timings: Option<Timings>) -> Report {
        Report {
            group: r.group_id.clone(),
            p: r.p,
            direct_hp: r.direct_hp.holds,
            direct_hp_star: r.direct_hp_star.holds,
            ti: r.abelian_ti_sylow,
            cases_a: r.structural.cases_a.iter().map(|c| c.label().to_string()).collect(),
            cases_c: r.structural.cases_c.iter().map(|c| c.label().to_string()).collect(),
            witnesses: Witnesses {
                hp: r.direct_hp.witness.map(Witness::from),
                hp_star: r.direct_hp_star.witness.map(Witness::from),
                params: r.structural.params.clone().into_iter().collect(),
                notes: r.structural.notes.clone(),
            },
            gcd_set: r.gcd_set.clone(),
            timings,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorpusRecord {
    #[serde(flatten)]
    pub report: Report,
    pub status: &'static str,
    pub problems: Vec<String>,
}

/// Sorts by `(group, p)` and renders pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(items: &mut [T], key: impl Fn(&T) -> (String, u64)) -> String {
    items.sort_by_key(|x| key(x));
    let mut s = serde_json::to_string_pretty(items).expect("reports serialize");
    s.push('\n');
    s
}
