#![allow(dead_code)]

use knotforge::codec::parse_gauss;
use knotforge::diagram::KnotDiagram;
use knotforge::fixtures::{load_fixtures, Fixture};
use knotforge::graph::MultiGraph;

pub fn fixtures() -> Vec<Fixture> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    load_fixtures(&dir).expect("bundled corpus loads")
}

pub fn corpus() -> Vec<(String, bool, KnotDiagram)> {
    fixtures()
        .into_iter()
        .map(|f| {
            let d = KnotDiagram::from_gauss(&f.code).expect("corpus codes are realizable");
            (f.name, f.prime, d)
        })
        .collect()
}

pub fn diagram(code: &str) -> KnotDiagram {
    KnotDiagram::from_gauss(&parse_gauss(code).unwrap()).unwrap()
}

pub const TREFOIL: &str = "O1+ U2+ O3+ U1+ O2+ U3+";
pub const FIGURE_EIGHT: &str = "O1+ U2- O3- U1+ O4+ U3- O2- U4+";

fn sorted_edges(g: &MultiGraph, perm: &[usize]) -> Vec<(usize, usize)> {
    let mut e: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (perm[u], perm[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    e.sort_unstable();
    e
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism by trying every vertex permutation; fine up to 8 vertices.
pub fn brute_isomorphic(a: &MultiGraph, b: &MultiGraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    assert!(a.vertex_count() <= 8, "brute force oracle is for small graphs");
    let target = sorted_edges(b, &(0..b.vertex_count()).collect::<Vec<_>>());
    permutations(a.vertex_count()).iter().any(|p| sorted_edges(a, p) == target)
}
