//! The files under `presentations/` are the rendered corpus and parse back to
//! the builders. Set `DCAT_BLESS=1` to rewrite them.

use std::path::PathBuf;

use dcat_core::presentations::corpus::presentations;
use dcat_core::presentations::{parse_document, render};

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../presentations")
}

#[test]
fn bundled_files_match_the_corpus() {
    let bless = std::env::var_os("DCAT_BLESS").is_some();
    for (name, p) in presentations() {
        let path = dir().join(format!("{name}.dcat"));
        let text = render(&name, &p);
        if bless {
            std::fs::write(&path, &text).unwrap();
        }
        let on_disk = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(on_disk, text, "{name}");
        let doc = parse_document(&on_disk).unwrap();
        assert_eq!(doc.get(&name), Some(&p), "{name}");
    }
}
