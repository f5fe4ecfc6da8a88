//! Group sources: builtin constructors named as `name:params`, and `.pgr` files.

use std::path::Path;

use codeglab_core::{constructors as c, PermGroup};

use crate::error::{Error, Result};
use crate::pgr::PgrFile;

/// The shipped `PSL_3(4)` generators on 21 points.
pub const PSL3_4_DATA: &str = include_str!("../data/psl3_4.pgr");

pub const BUILTIN_NAMES: &[&str] = &[
    "trivial",
    "symmetric:n",
    "alternating:n",
    "cyclic:n",
    "dihedral:2n",
    "quaternion8",
    "cyclic_wreath:n",
    "sl2:q",
    "psl2:q",
    "psigmal2:q",
    "gl2_3",
    "asl2:q",
    "gamma_family:p,m",
    "mathieu11",
    "psl3_4",
];

fn usage(msg: String) -> Error {
    Error::Usage(msg)
}

fn params(spec: &str, raw: Option<&str>, want: usize) -> Result<Vec<u64>> {
    let raw = raw.unwrap_or("");
    let vals: Vec<u64> = if raw.is_empty() {
        Vec::new()
    } else {
        raw.split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| usage(format!("builtin {spec}: bad parameter {t:?}"))))
            .collect::<Result<_>>()?
    };
    if vals.len() != want {
        return Err(usage(format!("builtin {spec}: expected {want} parameter(s), got {}", vals.len())));
    }
    Ok(vals)
}

/// Builds a builtin group from `name` or `name:a,b`.
pub fn builtin(spec: &str) -> Result<PermGroup> {
    let (name, raw) = match spec.split_once(':') {
        Some((n, r)) => (n, Some(r)),
        None => (spec, None),
    };
    let one = |raw| -> Result<u64> { Ok(params(spec, raw, 1)?[0]) };
    let small = |x: u64| -> Result<usize> { usize::try_from(x).map_err(|_| usage(format!("builtin {spec}: parameter too large"))) };
    let g = match name {
        "trivial" => {
            params(spec, raw, 0)?;
            c::trivial()
        }
        "symmetric" => c::symmetric(small(one(raw)?)?)?,
        "alternating" => c::alternating(small(one(raw)?)?)?,
        "cyclic" => c::cyclic(small(one(raw)?)?)?,
        "dihedral" => c::dihedral(small(one(raw)?)?)?,
        "cyclic_wreath" => c::cyclic_wreath(small(one(raw)?)?)?,
        "quaternion8" => {
            params(spec, raw, 0)?;
            c::quaternion8()?
        }
        "sl2" => c::sl2(one(raw)?)?,
        "psl2" => c::psl2(one(raw)?)?,
        "psigmal2" => c::psigmal2(one(raw)?)?,
        "asl2" => c::asl2(one(raw)?)?,
        "gl2_3" => {
            params(spec, raw, 0)?;
            c::gl2_3()?
        }
        "gamma_family" => {
            let v = params(spec, raw, 2)?;
            let m = u32::try_from(v[1]).map_err(|_| usage(format!("builtin {spec}: m too large")))?;
            c::gamma_family(v[0], m)?
        }
        "mathieu11" => {
            params(spec, raw, 0)?;
            c::mathieu11()?
        }
        "psl3_4" => {
            params(spec, raw, 0)?;
            psl3_4_from_data()?
        }
        _ => {
            return Err(usage(format!(
                "unknown builtin {name:?}; known: {}",
                BUILTIN_NAMES.join(" ")
            )))
        }
    };
    Ok(g)
}

/// `PSL_3(4)` from the shipped data file, validated before use.
pub fn psl3_4_from_data() -> Result<PermGroup> {
    let g = PgrFile::parse(PSL3_4_DATA)
        .and_then(|f| f.build())
        .map_err(|source| Error::Pgr {
            path: "data/psl3_4.pgr".into(),
            source,
        })?;
    c::validate_psl3_4(&g)?;
    Ok(g)
}

pub fn read_pgr(path: &Path) -> Result<PgrFile> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    PgrFile::parse(&text).map_err(|source| Error::Pgr {
        path: path.to_path_buf(),
        source,
    })
}

pub fn group_from_file(path: &Path) -> Result<PermGroup> {
    read_pgr(path)?.build().map_err(|source| Error::Pgr {
        path: path.to_path_buf(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_specs() {
        assert_eq!(builtin("symmetric:4").unwrap().order(), 24);
        assert_eq!(builtin("gamma_family:3,1").unwrap().order(), 1053);
        assert_eq!(builtin("trivial").unwrap().order(), 1);
        assert_eq!(builtin("dihedral:8").unwrap().order(), 8);
        assert!(matches!(builtin("symmetric"), Err(Error::Usage(_))));
        assert!(matches!(builtin("symmetric:x"), Err(Error::Usage(_))));
        assert!(matches!(builtin("nope:3"), Err(Error::Usage(_))));
        assert!(matches!(builtin("sl2:6"), Err(Error::Core(_))));
    }
}
