//! Regenerates the bundled example corpus.
//!
//! Usage: `cargo run -p lya-core --example gen_corpus -- <corpus-dir>`

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};

use lya_core::cohom::{delta_c, CompatCochainTuple, DeformationGenerator};
use lya_core::compat::{compat_adjoint, compat_direct_sum, CompatibleLy};
use lya_core::exact::{q, vector::unit};
use lya_core::io;
use lya_core::lya::{from_lie, BilinearMap, LinearMap, LyAlgebra, TrilinearMap};
use lya_core::rb::{induce_compat_pre_lya, induce_pre_lya, search_rb, RbConvention, RbTarget, DEFAULT_GRID_CAP};
use lya_core::rep::{adjoint, Representation};

struct Writer {
    dir: PathBuf,
    index: Vec<Value>,
}

impl Writer {
    fn put(&mut self, name: &str, kind: &str, description: &str, rendered: String, extra: Option<(&str, Value)>, check: &[&str], expect_exit: i32) {
        let mut v: Map<String, Value> = serde_json::from_str(&rendered).unwrap();
        let mut out = Map::new();
        out.insert("description".into(), json!(description));
        if let Some((k, x)) = extra {
            out.insert(k.into(), x);
        }
        out.append(&mut v);
        let mut text = serde_json::to_string_pretty(&Value::Object(out)).unwrap();
        text.push('\n');
        fs::write(self.dir.join(name), text).unwrap();
        self.index.push(json!({
            "name": name,
            "kind": kind,
            "description": description,
            "check": check,
            "expect_exit": expect_exit,
        }));
    }
}

fn bil(d: usize, e: &[(usize, usize, usize, i64)]) -> BilinearMap {
    BilinearMap::from_entries(d, e.iter().map(|&(i, j, k, v)| (i, j, k, q(v)))).unwrap()
}

fn tri(d: usize, e: &[(usize, usize, usize, usize, i64)]) -> TrilinearMap {
    TrilinearMap::from_entries(d, e.iter().map(|&(i, j, k, l, v)| (i, j, k, l, q(v)))).unwrap()
}

/// `[x,y,z]_i = [[x,y]_j, z]_i` on both structures.
fn lift(b1: &BilinearMap, b2: &BilinearMap) -> CompatibleLy {
    let d = b1.dim();
    let mk = |bi: &BilinearMap, bj: &BilinearMap| {
        let om = TrilinearMap::from_fn(d, |i, j, k| bi.apply(bj.basis(i, j), &unit(d, k)));
        LyAlgebra::new(bi.clone(), om).unwrap()
    };
    CompatibleLy::new(mk(b1, b2), mk(b2, b1)).unwrap()
}

fn pick_nonzero(found: &[LinearMap]) -> LinearMap {
    found.iter().rev().find(|m| !m.is_zero()).cloned().expect("a nonzero solution")
}

fn main() {
    let dir: PathBuf = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| Path::new("corpus").to_path_buf());
    fs::create_dir_all(&dir).unwrap();
    let mut w = Writer { dir: dir.clone(), index: Vec::new() };

    for d in 1..=3 {
        w.put(
            &format!("abelian-{d}.json"),
            "algebra",
            &format!("Abelian algebra of dimension {d}: both brackets vanish."),
            io::render_algebra(&LyAlgebra::abelian(d)),
            None,
            &["check", "lya", &format!("abelian-{d}.json")],
            0,
        );
    }

    let dim2 = CompatibleLy::new(
        LyAlgebra::new(bil(2, &[(0, 1, 0, 1)]), tri(2, &[(0, 1, 1, 0, 1)])).unwrap(),
        LyAlgebra::new(bil(2, &[(0, 1, 1, 1)]), tri(2, &[(0, 1, 1, 1, 1)])).unwrap(),
    )
    .unwrap();
    w.put(
        "dim2-pair.json",
        "compatible",
        "Pair with [e1,e2]_1=e1, [e1,e2,e2]_1=e1, [e1,e2]_2=e2, [e1,e2,e2]_2=e2. Expected to fail: the second structure violates LY4 at (0,1,0,1,1) and the pair violates CY3.",
        io::render_compatible(&dim2),
        None,
        &["check", "compatible", "dim2-pair.json"],
        1,
    );

    let lie2 = from_lie(&bil(2, &[(0, 1, 0, 1)])).unwrap();
    w.put(
        "lie-dim2.json",
        "algebra",
        "Nonabelian two-dimensional Lie algebra [e1,e2]=e1 with [x,y,z]=[[x,y],z].",
        io::render_algebra(&lie2),
        None,
        &["check", "lya", "lie-dim2.json"],
        0,
    );

    let so3_bracket = bil(3, &[(0, 1, 2, 1), (1, 2, 0, 1), (0, 2, 1, -1)]);
    let so3 = from_lie(&so3_bracket).unwrap();
    w.put(
        "cross-product-3.json",
        "algebra",
        "Cross product on R^3 with [x,y,z]=[[x,y],z].",
        io::render_algebra(&so3),
        None,
        &["check", "lya", "cross-product-3.json"],
        0,
    );

    let lts = LyAlgebra::new(BilinearMap::zero(3), so3.omega().clone()).unwrap();
    w.put(
        "lts-cross-product-3.json",
        "algebra",
        "Lie triple system [x,y,z]=(x×y)×z with zero bilinear bracket.",
        io::render_algebra(&lts),
        None,
        &["check", "lya", "lts-cross-product-3.json"],
        0,
    );

    // Compatible Lie pair on the Heisenberg basis: [e1,e2]_1=e3, [e1,e3]_2=e3.
    let h1 = bil(3, &[(0, 1, 2, 1)]);
    let h2 = bil(3, &[(0, 2, 2, 1)]);
    let lifted = lift(&h1, &h2);
    let lie_pair = json!({
        "recipe": "[x,y,z]_i = [[x,y]_j, z]_i for {i,j} = {1,2}",
        "lie1": {"bilinear": [{"i": 0, "j": 1, "k": 2, "v": "1"}]},
        "lie2": {"bilinear": [{"i": 0, "j": 2, "k": 2, "v": "1"}]},
    });
    w.put(
        "lifted-compatible-lie.json",
        "compatible",
        "Compatible Lie pair [e1,e2]_1=e3, [e1,e3]_2=e3 lifted to a compatible LYA pair by [x,y,z]_i=[[x,y]_j,z]_i.",
        io::render_compatible(&lifted),
        Some(("generated_from", lie_pair)),
        &["check", "compatible", "lifted-compatible-lie.json"],
        0,
    );

    let self2 = CompatibleLy::new(lie2.clone(), lie2.clone()).unwrap();
    w.put(
        "self-compatible-dim2.json",
        "compatible",
        "The nonabelian two-dimensional LYA paired with itself.",
        io::render_compatible(&self2),
        None,
        &["check", "compatible", "self-compatible-dim2.json"],
        0,
    );

    let sum4 = compat_direct_sum(&self2, &self2).unwrap();
    w.put(
        "self-compatible-sum-4.json",
        "compatible",
        "Direct sum of two copies of self-compatible-dim2.",
        io::render_compatible(&sum4),
        None,
        &["check", "compatible", "self-compatible-sum-4.json"],
        0,
    );

    let so3_pair = lift(&so3_bracket, &so3_bracket.scale(&q(2)));
    w.put(
        "cross-product-pair-3.json",
        "compatible",
        "Cross product and twice the cross product, lifted by [x,y,z]_i=[[x,y]_j,z]_i.",
        io::render_compatible(&so3_pair),
        Some(("generated_from", json!({"recipe": "[x,y,z]_i = [[x,y]_j, z]_i", "lie2": "2 * lie1"}))),
        &["check", "compatible", "cross-product-pair-3.json"],
        0,
    );

    w.put(
        "rep-adjoint-lie-dim2.json",
        "representation",
        "Adjoint representation of lie-dim2.",
        io::render_representation(&lie2, &adjoint(&lie2).unwrap()),
        None,
        &["check", "rep", "rep-adjoint-lie-dim2.json"],
        0,
    );
    w.put(
        "rep-adjoint-cross-product-3.json",
        "representation",
        "Adjoint representation of cross-product-3.",
        io::render_representation(&so3, &adjoint(&so3).unwrap()),
        None,
        &["check", "rep", "rep-adjoint-cross-product-3.json"],
        0,
    );
    w.put(
        "rep-zero-lie-dim2.json",
        "representation",
        "Zero representation of lie-dim2 on a two-dimensional space.",
        io::render_representation(&lie2, &Representation::zero(2, 2)),
        None,
        &["check", "rep", "rep-zero-lie-dim2.json"],
        0,
    );
    w.put(
        "rep-adjoint-lifted.json",
        "compat-representation",
        "Adjoint representations of both structures of lifted-compatible-lie.",
        io::render_compat_representation(&lifted, &compat_adjoint(&lifted).unwrap()),
        None,
        &["check", "rep", "rep-adjoint-lifted.json"],
        0,
    );

    let grid = [q(-1), q(0), q(1)];
    for conv in RbConvention::ALL {
        let tok = conv.token();
        let found = search_rb(RbTarget::Single(&lie2), conv, &grid, DEFAULT_GRID_CAP).unwrap();
        let r = pick_nonzero(&found);
        let name = format!("rb-lie-dim2-{tok}.json");
        w.put(
            &name,
            "matrix",
            &format!("Rota-Baxter operator on lie-dim2 under --convention {tok}, found by search-rb over entries -1,0,1."),
            io::render_matrix(r.matrix()),
            None,
            &["check", "rb", "lie-dim2.json", &name, "--convention", tok],
            0,
        );
        let ind = induce_pre_lya(&lie2, &r, conv).unwrap();
        let pname = format!("pre-lya-lie-dim2-{tok}.json");
        w.put(
            &pname,
            "pre-lya",
            &format!("Pre-LYA induced on lie-dim2 by {name}."),
            io::render_pre_lya(&ind.pre),
            None,
            &["check", "pre-lya", &pname],
            0,
        );

        let found = search_rb(RbTarget::Compatible(&lifted), conv, &grid, DEFAULT_GRID_CAP).unwrap();
        let r = pick_nonzero(&found);
        let name = format!("rb-lifted-{tok}.json");
        w.put(
            &name,
            "matrix",
            &format!("Rota-Baxter operator for both structures of lifted-compatible-lie under --convention {tok}."),
            io::render_matrix(r.matrix()),
            None,
            &["check", "rb", "lifted-compatible-lie.json", &name, "--convention", tok],
            0,
        );
        let cp = induce_compat_pre_lya(&lifted, &r, conv).unwrap();
        let pname = format!("compat-pre-lya-lifted-{tok}.json");
        w.put(
            &pname,
            "compat-pre-lya",
            &format!("Compatible pre-LYA induced on lifted-compatible-lie by {name}."),
            io::render_compat_pre_lya(&cp),
            None,
            &["check", "compat-pre-lya", &pname],
            0,
        );
    }

    let scaling = DeformationGenerator::from_compatible(&lifted);
    w.put(
        "generator-scaling-lifted.json",
        "generator",
        "Generator (pi_1, omega_1, pi_2, omega_2) of lifted-compatible-lie itself; every deformed pair is compatible.",
        io::render_generator(&scaling),
        None,
        &["deform-verify", "lifted-compatible-lie.json", "generator-scaling-lifted.json"],
        0,
    );
    let f = LinearMap::from_images(3, &[vec![q(0), q(1), q(0)], vec![q(0), q(0), q(0)], vec![q(1), q(0), q(-1)]]);
    let cob = delta_c(&CompatCochainTuple::from_map(&f), &lifted).unwrap();
    w.put(
        "generator-coboundary-lifted.json",
        "generator",
        "Generator delta_c(f) for a fixed linear map f on lifted-compatible-lie.",
        io::render_generator(&DeformationGenerator::from_tuple(&cob).unwrap()),
        None,
        &["deform-verify", "lifted-compatible-lie.json", "generator-coboundary-lifted.json"],
        0,
    );

    let mut text = serde_json::to_string_pretty(&Value::Array(w.index)).unwrap();
    text.push('\n');
    fs::write(dir.join("index.json"), text).unwrap();
}
