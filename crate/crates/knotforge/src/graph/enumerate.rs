//! Connected cubic multigraphs up to isomorphism, grown from the two
//! two-vertex graphs by edge insertion.
//!
//! Every connected cubic multigraph on `n + 2` vertices arises from one on
//! `n` vertices by one of two insertions:
//!
//! * subdivide edges `e` and `f` (possibly `e == f`) and join the two new
//!   vertices;
//! * subdivide `e` and hang a new vertex carrying a loop off the midpoint.
//!
//! Conversely a graph with a loop whose neighbour has no loop undoes the
//! second insertion, and a loopless graph has a non-bridge edge that undoes
//! the first.

use std::collections::BTreeMap;

use super::{are_isomorphic, GraphError, MultiGraph, PlaneGraph};

pub const MAX_ENUMERATION_VERTICES: usize = 10;

type Key = (usize, Vec<(usize, Vec<usize>)>);

fn invariant(g: &MultiGraph) -> Key {
    let m = g.multiplicities();
    let mut per_vertex: Vec<(usize, Vec<usize>)> = (0..g.vertex_count())
        .map(|v| {
            let mut nb: Vec<usize> =
                (0..g.vertex_count()).filter(|&w| w != v && m[v][w] > 0).map(|w| m[v][w]).collect();
            nb.sort_unstable();
            (m[v][v], nb)
        })
        .collect();
    per_vertex.sort();
    let triangles = (0..g.vertex_count())
        .flat_map(|a| (a + 1..g.vertex_count()).map(move |b| (a, b)))
        .map(|(a, b)| (b + 1..g.vertex_count()).filter(|&c| m[a][b] > 0 && m[b][c] > 0 && m[a][c] > 0).count())
        .sum();
    (triangles, per_vertex)
}

fn insertions(g: &MultiGraph) -> Vec<MultiGraph> {
    let mut out = Vec::new();
    let e_count = g.edge_count();
    let rest = |skip: &[usize]| -> MultiGraph {
        let keep: Vec<usize> = (0..e_count).filter(|e| !skip.contains(e)).collect();
        g.edge_subgraph(&keep)
    };
    for e in 0..e_count {
        for f in e..e_count {
            let mut h = rest(&[e, f]);
            let x = h.add_vertex();
            let y = h.add_vertex();
            let (a, b) = g.edge(e);
            if e == f {
                h.add_edge(a, x);
                h.add_edge(x, y);
                h.add_edge(x, y);
                h.add_edge(y, b);
            } else {
                let (c, d) = g.edge(f);
                h.add_edge(a, x);
                h.add_edge(x, b);
                h.add_edge(c, y);
                h.add_edge(y, d);
                h.add_edge(x, y);
            }
            out.push(h);
        }
        let mut h = rest(&[e]);
        let x = h.add_vertex();
        let y = h.add_vertex();
        let (a, b) = g.edge(e);
        h.add_edge(a, x);
        h.add_edge(x, b);
        h.add_edge(x, y);
        h.add_edge(y, y);
        out.push(h);
    }
    out
}

fn dedup(candidates: Vec<MultiGraph>) -> Vec<MultiGraph> {
    let mut buckets: BTreeMap<Key, Vec<usize>> = BTreeMap::new();
    let mut kept: Vec<MultiGraph> = Vec::new();
    for g in candidates {
        let key = invariant(&g);
        let bucket = buckets.entry(key).or_default();
        if bucket.iter().any(|&i| are_isomorphic(&kept[i], &g)) {
            continue;
        }
        bucket.push(kept.len());
        kept.push(g);
    }
    kept
}

/// All connected cubic multigraphs (loops allowed) on exactly `n` vertices,
/// one representative per isomorphism class.
pub fn cubic_multigraphs(n: usize) -> Vec<MultiGraph> {
    if n == 0 || n % 2 == 1 {
        return Vec::new();
    }
    let mut level = vec![MultiGraph::dipole(3), MultiGraph::new(2, vec![(0, 0), (0, 1), (1, 1)]).expect("dumbbell")];
    let mut size = 2;
    while size < n {
        level = dedup(level.iter().flat_map(insertions).collect());
        size += 2;
    }
    level
}

/// A spherical rotation system for a graph of maximum degree three, if one
/// exists. Each vertex of degree three has two cyclic orders; all
/// combinations are tried.
pub fn planar_embedding(g: &MultiGraph) -> Option<PlaneGraph> {
    let inc = g.incidence();
    let flexible: Vec<usize> = (0..g.vertex_count()).filter(|&v| inc[v].len() == 3).collect();
    assert!(inc.iter().all(|r| r.len() <= 3), "embedding search needs max degree 3");
    for mask in 0u64..(1u64 << flexible.len()) {
        let mut rot = inc.clone();
        for (bit, &v) in flexible.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                rot[v].swap(1, 2);
            }
        }
        let p = PlaneGraph::new(g.clone(), rot).expect("incidence lists are a rotation system");
        if p.is_spherical() {
            return Some(p);
        }
    }
    None
}

/// Connected planar cubic multigraphs on at most `v_max` vertices, up to
/// isomorphism, each with one spherical embedding. Odd sizes contribute
/// nothing.
pub fn enumerate_trivalent_planar(v_max: usize) -> Result<Vec<PlaneGraph>, GraphError> {
    if v_max > MAX_ENUMERATION_VERTICES {
        return Err(GraphError::TooLarge { requested: v_max, limit: MAX_ENUMERATION_VERTICES });
    }
    let mut out = Vec::new();
    let mut level: Vec<MultiGraph> = Vec::new();
    for n in (2..=v_max).step_by(2) {
        level = if n == 2 { cubic_multigraphs(2) } else { dedup(level.iter().flat_map(insertions).collect()) };
        out.extend(level.iter().filter_map(planar_embedding));
    }
    Ok(out)
}
