//! The bundled example corpus.

use std::sync::OnceLock;

use serde::Deserialize;

/// One bundled file with its declared check command and expected exit code.
#[derive(Debug, Clone)]
pub struct Entry {
    pub name: String,
    pub kind: String,
    pub description: String,
    /// Arguments after the program name; file arguments are bundled names.
    pub check: Vec<String>,
    pub expect_exit: i32,
    pub text: &'static str,
}

#[derive(Deserialize)]
struct IndexEntry {
    name: String,
    kind: String,
    description: String,
    check: Vec<String>,
    expect_exit: i32,
}

const INDEX: &str = include_str!("../../../corpus/index.json");

const FILES: &[(&str, &str)] = &[
    ("abelian-1.json", include_str!("../../../corpus/abelian-1.json")),
    ("abelian-2.json", include_str!("../../../corpus/abelian-2.json")),
    ("abelian-3.json", include_str!("../../../corpus/abelian-3.json")),
    ("dim2-pair.json", include_str!("../../../corpus/dim2-pair.json")),
    ("lie-dim2.json", include_str!("../../../corpus/lie-dim2.json")),
    ("cross-product-3.json", include_str!("../../../corpus/cross-product-3.json")),
    ("lts-cross-product-3.json", include_str!("../../../corpus/lts-cross-product-3.json")),
    ("lifted-compatible-lie.json", include_str!("../../../corpus/lifted-compatible-lie.json")),
    ("self-compatible-dim2.json", include_str!("../../../corpus/self-compatible-dim2.json")),
    ("self-compatible-sum-4.json", include_str!("../../../corpus/self-compatible-sum-4.json")),
    ("cross-product-pair-3.json", include_str!("../../../corpus/cross-product-pair-3.json")),
    ("rep-adjoint-lie-dim2.json", include_str!("../../../corpus/rep-adjoint-lie-dim2.json")),
    ("rep-adjoint-cross-product-3.json", include_str!("../../../corpus/rep-adjoint-cross-product-3.json")),
    ("rep-zero-lie-dim2.json", include_str!("../../../corpus/rep-zero-lie-dim2.json")),
    ("rep-adjoint-lifted.json", include_str!("../../../corpus/rep-adjoint-lifted.json")),
    ("rb-lie-dim2-sec2.json", include_str!("../../../corpus/rb-lie-dim2-sec2.json")),
    ("pre-lya-lie-dim2-sec2.json", include_str!("../../../corpus/pre-lya-lie-dim2-sec2.json")),
    ("rb-lifted-sec2.json", include_str!("../../../corpus/rb-lifted-sec2.json")),
    ("compat-pre-lya-lifted-sec2.json", include_str!("../../../corpus/compat-pre-lya-lifted-sec2.json")),
    ("rb-lie-dim2-sec6.json", include_str!("../../../corpus/rb-lie-dim2-sec6.json")),
    ("pre-lya-lie-dim2-sec6.json", include_str!("../../../corpus/pre-lya-lie-dim2-sec6.json")),
    ("rb-lifted-sec6.json", include_str!("../../../corpus/rb-lifted-sec6.json")),
    ("compat-pre-lya-lifted-sec6.json", include_str!("../../../corpus/compat-pre-lya-lifted-sec6.json")),
    ("generator-scaling-lifted.json", include_str!("../../../corpus/generator-scaling-lifted.json")),
    ("generator-coboundary-lifted.json", include_str!("../../../corpus/generator-coboundary-lifted.json")),
];

pub fn entries() -> &'static [Entry] {
    static ENTRIES: OnceLock<Vec<Entry>> = OnceLock::new();
    ENTRIES.get_or_init(|| {
        let index: Vec<IndexEntry> = serde_json::from_str(INDEX).expect("bundled index parses");
        index
            .into_iter()
            .map(|e| {
                let text = FILES
                    .iter()
                    .find(|(n, _)| *n == e.name)
                    .map(|(_, t)| *t)
                    .unwrap_or_else(|| panic!("index names unbundled file {}", e.name));
                Entry {
                    name: e.name,
                    kind: e.kind,
                    description: e.description,
                    check: e.check,
                    expect_exit: e.expect_exit,
                    text,
                }
            })
            .collect()
    })
}

pub fn get(name: &str) -> Option<&'static Entry> {
    entries().iter().find(|e| e.name == name)
}

/// The declared check command with bundled file names rewritten to `corpus:` paths.
pub fn check_argv(e: &Entry) -> Vec<String> {
    e.check
        .iter()
        .map(|a| if get(a).is_some() { format!("corpus:{a}") } else { a.clone() })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_and_files_agree() {
        assert_eq!(entries().len(), FILES.len());
        for (n, _) in FILES {
            assert!(get(n).is_some(), "{n} missing from index");
        }
    }
}
