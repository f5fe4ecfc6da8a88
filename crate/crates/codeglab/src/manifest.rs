//! Corpus manifests (TOML).
//!
//! ```toml
//! [[group]]
//! id = "S4"
//! builtin = "symmetric:4"
//!
//! [[group.check]]
//! p = 2
//! direct_hp = true
//! cases_a = ["4"]
//! ```
//!
//! `file = "path.pgr"` replaces `builtin` for external data; relative paths
//! are resolved against the manifest's directory. `direct_hp_star` and
//! `cases_c` are optional expectations.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use codeglab_core::arith;
use codeglab_core::classify::{CaseA, CaseC};
use codeglab_core::PermGroup;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::source;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(default)]
    pub group: Vec<Entry>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub id: String,
    pub builtin: Option<String>,
    pub file: Option<PathBuf>,
    #[serde(default)]
    pub check: Vec<Check>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Check {
    pub p: u64,
    pub direct_hp: bool,
    pub direct_hp_star: Option<bool>,
    #[serde(default)]
    pub cases_a: Vec<String>,
    pub cases_c: Option<Vec<String>>,
}

impl Check {
    pub fn expected_cases_a(&self) -> BTreeSet<CaseA> {
        self.cases_a.iter().filter_map(|s| CaseA::from_label(s)).collect()
    }

    pub fn expected_cases_c(&self) -> Option<BTreeSet<CaseC>> {
        self.cases_c
            .as_ref()
            .map(|v| v.iter().filter_map(|s| CaseC::from_label(s)).collect())
    }
}

impl Entry {
    pub fn primes(&self) -> Vec<u64> {
        self.check.iter().map(|c| c.p).collect()
    }

    pub fn build(&self) -> Result<PermGroup> {
        match (&self.builtin, &self.file) {
            (Some(spec), None) => source::builtin(spec),
            (None, Some(path)) => source::group_from_file(path),
            _ => unreachable!("validated on load"),
        }
    }
}

impl Manifest {
    pub fn parse(text: &str, base: &Path) -> Result<Manifest> {
        let mut m: Manifest = toml::from_str(text).map_err(|e| Error::Manifest(e.message().to_string()))?;
        for entry in &mut m.group {
            if let Some(f) = &entry.file {
                if f.is_relative() {
                    entry.file = Some(base.join(f));
                }
            }
        }
        m.validate()?;
        Ok(m)
    }

    pub fn load(path: &Path) -> Result<Manifest> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Manifest::parse(&text, path.parent().unwrap_or(Path::new(".")))
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Manifest(msg));
        if self.group.is_empty() {
            return bad("empty corpus".into());
        }
        let mut ids = BTreeSet::new();
        for e in &self.group {
            if !ids.insert(e.id.as_str()) {
                return bad(format!("duplicate id {:?}", e.id));
            }
            if e.builtin.is_some() == e.file.is_some() {
                return bad(format!("{}: exactly one of builtin and file is required", e.id));
            }
            if e.check.is_empty() {
                return bad(format!("{}: no checks", e.id));
            }
            let mut primes = BTreeSet::new();
            for c in &e.check {
                if !arith::is_prime(c.p) {
                    return bad(format!("{}: prime expected, got {}", e.id, c.p));
                }
                if !primes.insert(c.p) {
                    return bad(format!("{}: prime {} listed twice", e.id, c.p));
                }
                if let Some(l) = c.cases_a.iter().find(|l| CaseA::from_label(l).is_none()) {
                    return bad(format!("{}: unknown case label {l:?}", e.id));
                }
                if let Some(l) = c.cases_c.iter().flatten().find(|l| CaseC::from_label(l).is_none()) {
                    return bad(format!("{}: unknown H_p* case label {l:?}", e.id));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ONE: &str = "[[group]]\nid = \"S3\"\nbuiltin = \"symmetric:3\"\n[[group.check]]\np = 2\ndirect_hp = true\ncases_a = [\"2\"]\n";

    fn parse(t: &str) -> Result<Manifest> {
        Manifest::parse(t, Path::new("/base"))
    }

    #[test]
    fn round_trip() {
        let m = parse(ONE).unwrap();
        assert_eq!(m.group[0].primes(), vec![2]);
        assert_eq!(m.group[0].check[0].expected_cases_a(), [CaseA::A2].into_iter().collect());
        let f = parse("[[group]]\nid = \"x\"\nfile = \"d/x.pgr\"\n[[group.check]]\np = 3\ndirect_hp = false\n").unwrap();
        assert_eq!(f.group[0].file.as_deref(), Some(Path::new("/base/d/x.pgr")));
    }

    #[test]
    fn rejects() {
        let msg = |t: &str| parse(t).unwrap_err().to_string();
        assert!(msg("").contains("empty corpus"));
        assert!(msg(&ONE.replace("p = 2", "p = 4")).contains("prime expected"));
        assert!(msg(&ONE.replace("[\"2\"]", "[\"9\"]")).contains("unknown case"));
        assert!(msg(&format!("{ONE}{ONE}")).contains("duplicate id"));
        assert!(msg(&ONE.replace("builtin", "bultin")).contains("unknown field"));
    }
}
