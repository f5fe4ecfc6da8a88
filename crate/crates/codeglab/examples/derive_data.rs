//! Regenerates the shipped generator files from their derivations:
//!
//! * `psl3_4.pgr`: elementary transvections of `SL_3(4)` acting on the 21
//!   points of the projective plane over `F_4`;
//! * `sl2_5_f3_4.pgr`: `F_9^2 : SL_2(5)` on 81 vectors, with `SL_2(5)` found
//!   by the lexicographic search inside `SL_2(9)`.
//!
//! Run with `cargo run -p codeglab --example derive_data -- crates/codeglab/data`.

use std::path::PathBuf;

use codeglab::pgr::PgrFile;
use codeglab_core::constructors as c;

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "data".into()));
    for (name, file) in [("psl3_4.pgr", psl3_4()), ("sl2_5_f3_4.pgr", sl2_5_f3_4())] {
        let path = dir.join(name);
        std::fs::write(&path, file.serialize()).expect("write data file");
        println!("{}", path.display());
    }
}

fn psl3_4() -> PgrFile {
    let g = c::psl3_4().unwrap();
    let mut f = PgrFile::new(g.degree(), g.generators().to_vec());
    f.order = Some(20160);
    f.simple = Some(true);
    f
}

fn sl2_5_f3_4() -> PgrFile {
    let g = c::sl2_5_on_f3_4().unwrap();
    let mut f = PgrFile::new(g.degree(), g.generators().to_vec());
    f.order = Some(9720);
    f.simple = Some(false);
    f
}
