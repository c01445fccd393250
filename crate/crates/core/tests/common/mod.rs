#![allow(dead_code)]

use std::path::PathBuf;

use lya_core::compat::{CompatRepresentation, CompatibleLy};
use lya_core::exact::{q, Rational};
use lya_core::io;
use lya_core::lya::{BilinearMap, LyAlgebra, TrilinearMap};
use lya_core::rep::Representation;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn corpus_of_kind(kind: &str) -> Vec<(String, String)> {
    let index: Value = serde_json::from_str(&std::fs::read_to_string(corpus_dir().join("index.json")).unwrap()).unwrap();
    index
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["kind"] == kind)
        .map(|e| {
            let name = e["name"].as_str().unwrap().to_string();
            let text = std::fs::read_to_string(corpus_dir().join(&name)).unwrap();
            (name, text)
        })
        .collect()
}

pub fn corpus_algebras() -> Vec<(String, LyAlgebra)> {
    corpus_of_kind("algebra").into_iter().map(|(n, t)| (n, io::parse_algebra(&t).unwrap())).collect()
}

pub fn corpus_pairs() -> Vec<(String, CompatibleLy)> {
    corpus_of_kind("compatible").into_iter().map(|(n, t)| (n, io::parse_compatible(&t).unwrap())).collect()
}

pub fn corpus_representations() -> Vec<(String, LyAlgebra, Representation)> {
    corpus_of_kind("representation")
        .into_iter()
        .map(|(n, t)| {
            let (a, r) = io::parse_representation(&t).unwrap();
            (n, a, r)
        })
        .collect()
}

pub fn corpus_compat_representations() -> Vec<(String, CompatibleLy, CompatRepresentation)> {
    corpus_of_kind("compat-representation")
        .into_iter()
        .map(|(n, t)| {
            let (c, r) = io::parse_compat_representation(&t).unwrap();
            (n, c, r)
        })
        .collect()
}

/// Every LYA in the corpus, including both components of each pair.
pub fn all_corpus_lyas() -> Vec<(String, LyAlgebra)> {
    let mut out = corpus_algebras();
    for (n, c) in corpus_pairs() {
        out.push((format!("{n}[1]"), c.first().clone()));
        out.push((format!("{n}[2]"), c.second().clone()));
    }
    out
}

pub fn small_entry(rng: &mut impl Rng) -> Rational {
    q(rng.gen_range(-2..=2))
}

/// Random structure with each upper entry nonzero with probability `p`.
pub fn random_structure(rng: &mut impl Rng, d: usize, p: f64) -> (BilinearMap, TrilinearMap) {
    let mut be = Vec::new();
    let mut te = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            for k in 0..d {
                if rng.gen_bool(p) {
                    be.push((i, j, k, small_entry(rng)));
                }
                for l in 0..d {
                    if rng.gen_bool(p) {
                        te.push((i, j, k, l, small_entry(rng)));
                    }
                }
            }
        }
    }
    (BilinearMap::from_entries(d, be).unwrap(), TrilinearMap::from_entries(d, te).unwrap())
}

pub fn random_algebra(rng: &mut impl Rng, d: usize, p: f64) -> LyAlgebra {
    let (b, t) = random_structure(rng, d, p);
    LyAlgebra::new(b, t).unwrap()
}

/// Naive evaluation over raw tables.
pub struct Naive<'a> {
    pub d: usize,
    pub pi: &'a BilinearMap,
    pub om: &'a TrilinearMap,
}

impl<'a> Naive<'a> {
    pub fn new(a: &'a LyAlgebra) -> Self {
        Naive { d: a.dim(), pi: a.pi(), om: a.omega() }
    }

    pub fn br(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.d];
        for i in 0..self.d {
            for j in 0..self.d {
                if x[i].is_zero() || y[j].is_zero() {
                    continue;
                }
                for k in 0..self.d {
                    out[k] += x[i].clone() * y[j].clone() * self.pi.get(i, j, k).clone();
                }
            }
        }
        out
    }

    pub fn tr(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.d];
        for i in 0..self.d {
            for j in 0..self.d {
                for k in 0..self.d {
                    if x[i].is_zero() || y[j].is_zero() || z[k].is_zero() {
                        continue;
                    }
                    let c = x[i].clone() * y[j].clone() * z[k].clone();
                    for l in 0..self.d {
                        out[l] += c.clone() * self.om.get(i, j, k, l).clone();
                    }
                }
            }
        }
        out
    }

    pub fn e(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.d];
        v[i] = Rational::one();
        v
    }
}

pub fn vadd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn vsub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn vzero(a: &[Rational]) -> bool {
    a.iter().all(Rational::is_zero)
}

/// The four axioms evaluated directly on basis tuples.
/// Which of LY1-LY4 hold, evaluated on every basis tuple.
pub fn naive_lya_axioms(a: &LyAlgebra) -> [bool; 4] {
    let mut ok = [true; 4];
    let n = Naive::new(a);
    let d = n.d;
    let e: Vec<Vec<Rational>> = (0..d).map(|i| n.e(i)).collect();
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let (ex, ey, ez) = (&e[x], &e[y], &e[z]);
                let mut r = n.br(&n.br(ex, ey), ez);
                r = vadd(&r, &n.br(&n.br(ey, ez), ex));
                r = vadd(&r, &n.br(&n.br(ez, ex), ey));
                r = vadd(&r, &n.tr(ex, ey, ez));
                r = vadd(&r, &n.tr(ey, ez, ex));
                r = vadd(&r, &n.tr(ez, ex, ey));
                if !vzero(&r) {
                    ok[0] = false;
                }
                for w in 0..d {
                    let ew = &e[w];
                    let mut r2 = n.tr(&n.br(ex, ey), ez, ew);
                    r2 = vadd(&r2, &n.tr(&n.br(ey, ez), ex, ew));
                    r2 = vadd(&r2, &n.tr(&n.br(ez, ex), ey, ew));
                    if !vzero(&r2) {
                        ok[1] = false;
                    }
                    let mut r3 = n.tr(ex, ey, &n.br(ez, ew));
                    r3 = vsub(&r3, &n.br(&n.tr(ex, ey, ez), ew));
                    r3 = vsub(&r3, &n.br(ez, &n.tr(ex, ey, ew)));
                    if !vzero(&r3) {
                        ok[2] = false;
                    }
                    for t in 0..d {
                        let et = &e[t];
                        let mut r4 = n.tr(ex, ey, &n.tr(ez, ew, et));
                        r4 = vsub(&r4, &n.tr(&n.tr(ex, ey, ez), ew, et));
                        r4 = vsub(&r4, &n.tr(ez, &n.tr(ex, ey, ew), et));
                        r4 = vsub(&r4, &n.tr(ez, ew, &n.tr(ex, ey, et)));
                        if !vzero(&r4) {
                            ok[3] = false;
                        }
                    }
                }
            }
        }
    }
    ok
}

pub fn naive_is_lya(a: &LyAlgebra) -> bool {
    naive_lya_axioms(a).iter().all(|&b| b)
}

pub fn sum_algebra(a: &LyAlgebra, b: &LyAlgebra, k1: &Rational, k2: &Rational) -> LyAlgebra {
    LyAlgebra::new(a.pi().scale(k1).add(&b.pi().scale(k2)), a.omega().scale(k1).add(&b.omega().scale(k2))).unwrap()
}

/// The axioms are quadratic, so the mixed identities vanish exactly when
/// both structures and their sum are LYAs.
pub fn naive_is_compatible(c: &CompatibleLy) -> bool {
    naive_is_lya(c.first())
        && naive_is_lya(c.second())
        && naive_is_lya(&sum_algebra(c.first(), c.second(), &q(1), &q(1)))
}
