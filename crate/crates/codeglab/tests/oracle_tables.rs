//! Dixon-Schneider tables against the brute-force oracle.

mod support;

use codeglab::source::builtin;
use codeglab_core::{chartab, ClassData};
use support::oracle;

fn check(spec: &str) {
    let g = builtin(spec).unwrap();
    let (cl, tables) = oracle::brute_force_tables(&g);
    assert_eq!(tables.len(), 1, "{spec}: brute force found {} tables", tables.len());
    let classes = ClassData::new(&g).unwrap();
    let table = chartab::dixon_schneider(&classes).unwrap();
    let lib = oracle::library_rows(&cl, &classes, &table);
    let brute = &tables[0];
    let degrees = |rows: &[oracle::Row]| rows.iter().map(|r| r.degree).collect::<Vec<_>>();
    assert_eq!(degrees(&lib), degrees(brute), "{spec}: degrees");
    assert_eq!(oracle::column_multisets(&lib), oracle::column_multisets(brute), "{spec}: columns");
    assert_eq!(&lib, brute, "{spec}: rows");
}

#[test]
fn corpus_groups_up_to_order_24() {
    for spec in ["trivial", "cyclic:6", "symmetric:3", "symmetric:4", "sl2:3", "quaternion8", "dihedral:8"] {
        check(spec);
    }
}

#[test]
fn other_small_groups() {
    for spec in ["cyclic:7", "dihedral:10", "dihedral:12", "alternating:4", "gamma_family:2,1", "cyclic:12"] {
        check(spec);
    }
}

#[test]
fn cyclotomic_by_division() {
    assert_eq!(oracle::cyclotomic(1), vec![-1, 1]);
    assert_eq!(oracle::cyclotomic(8), vec![1, 0, 0, 0, 1]);
    assert_eq!(oracle::cyclotomic(12), vec![1, 0, -1, 0, 1]);
    assert_eq!(
        oracle::cyclotomic(12),
        codeglab_core::cyclotomic::cyclotomic_polynomial(12).iter().map(|&c| c as i64).collect::<Vec<_>>()
    );
}
