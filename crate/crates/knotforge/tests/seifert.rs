mod common;

use std::collections::VecDeque;

use common::{corpus, diagram, FIGURE_EIGHT, TREFOIL};
use knotforge::codec::SignedGaussCode;
use knotforge::diagram::{CornerKind, KnotDiagram};
use knotforge::graph::{are_isomorphic, blocks_and_cut_vertices, twin};
use knotforge::seifert::{
    canonical_genus, classify_circles, flat_root_face, is_flat, plane_seifert_graph, seifert_graph, splice_all,
    CircleType, SeifertDecomposition,
};
use proptest::prelude::*;

/// Face adjacency: across an arc (cost 1 unless the arc is skipped) and
/// across the corners a splice merges (cost 0).
fn face_steps(d: &KnotDiagram, f: usize) -> Vec<(usize, Option<usize>)> {
    let mut out = Vec::new();
    for &h in &d.faces()[f] {
        out.push((d.face_of_dart(twin(h)), Some(h / 2)));
    }
    for c in 0..d.crossing_count() {
        let a = d.corner(c, CornerKind::A).face;
        let cc = d.corner(c, CornerKind::C).face;
        if a == f {
            out.push((cc, None));
        }
        if cc == f {
            out.push((a, None));
        }
    }
    out
}

/// Fewest arcs crossed to reach each face.
fn face_depths(d: &KnotDiagram, root: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; d.face_count()];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(f) = queue.pop_front() {
        for (g, arc) in face_steps(d, f) {
            let w = usize::from(arc.is_some());
            if dist[f] + w < dist[g] {
                dist[g] = dist[f] + w;
                if w == 0 {
                    queue.push_front(g);
                } else {
                    queue.push_back(g);
                }
            }
        }
    }
    dist
}

fn oracle_heights(d: &KnotDiagram, dec: &SeifertDecomposition, root: usize) -> Vec<usize> {
    let depth = face_depths(d, root);
    dec.circles
        .iter()
        .map(|circle| {
            circle
                .iter()
                .flat_map(|&a| [d.face_of_dart(2 * a), d.face_of_dart(2 * a + 1)])
                .map(|f| depth[f])
                .min()
                .unwrap()
        })
        .collect()
}

/// Faces reachable from `start` without crossing an arc of the circle.
fn side(d: &KnotDiagram, circle: &[usize], start: usize) -> Vec<bool> {
    let mut seen = vec![false; d.face_count()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(f) = stack.pop() {
        for (g, arc) in face_steps(d, f) {
            if arc.is_some_and(|a| circle.contains(&a)) || seen[g] {
                continue;
            }
            seen[g] = true;
            stack.push(g);
        }
    }
    seen
}

fn oracle_types(d: &KnotDiagram, dec: &SeifertDecomposition) -> Vec<CircleType> {
    dec.circles
        .iter()
        .map(|circle| {
            let here = side(d, circle, d.face_of_dart(2 * circle[0]));
            let hosts: Vec<bool> = (0..d.crossing_count()).map(|c| here[d.corner(c, CornerKind::A).face]).collect();
            if hosts.iter().any(|&h| h) && hosts.iter().any(|&h| !h) {
                CircleType::II
            } else {
                CircleType::I
            }
        })
        .collect()
}

#[test]
fn heights_match_face_search() {
    for (name, _, d) in corpus() {
        let dec = splice_all(&d);
        for root in 0..d.face_count() {
            let got = classify_circles(&dec, &d, root).heights.unwrap();
            assert_eq!(got, oracle_heights(&d, &dec, root), "{name} root {root}");
        }
    }
}

#[test]
fn types_match_face_search() {
    for (name, _, d) in corpus() {
        let dec = splice_all(&d);
        assert_eq!(classify_circles(&dec, &d, 0).types.unwrap(), oracle_types(&d, &dec), "{name}");
    }
}

/// Genera of the knots from published tables; alternating diagrams
/// realize them.
#[test]
fn genus_matches_knot_tables() {
    let table = [
        ("3_1", 1),
        ("4_1", 1),
        ("5_1", 2),
        ("5_2", 1),
        ("6_1", 1),
        ("6_2", 2),
        ("6_3", 2),
        ("7_1", 3),
        ("7_2", 1),
        ("7_3", 2),
        ("7_4", 1),
        ("7_5", 2),
        ("7_6", 2),
        ("7_7", 2),
    ];
    let all = corpus();
    for (name, genus) in table {
        let d = &all.iter().find(|(n, _, _)| n == name).unwrap().2;
        assert_eq!(canonical_genus(d), Ok(genus), "{name}");
    }
}

#[test]
fn seifert_graphs_are_bipartite_and_connected() {
    for (name, _, d) in corpus() {
        let g = seifert_graph(&d);
        assert!(g.is_bipartite() && g.is_connected(), "{name}");
        assert_eq!(g.edge_count(), d.crossing_count());
    }
}

#[test]
fn non_flat_has_cut_vertex() {
    for (name, _, d) in corpus() {
        if !is_flat(&d) {
            let b = blocks_and_cut_vertices(&seifert_graph(&d)).unwrap();
            assert!(!b.cut_vertices.is_empty(), "{name}");
        }
    }
}

#[test]
fn flat_iff_block_on_prime_reduced() {
    for (name, prime, d) in corpus() {
        if prime && d.is_reduced() {
            let block = blocks_and_cut_vertices(&seifert_graph(&d)).unwrap().is_block();
            assert_eq!(is_flat(&d), block, "{name}");
        }
    }
}

#[test]
fn flat_diagram_with_cut_vertex() {
    let (_, _, d) = corpus().into_iter().find(|(n, _, _)| n == "trefoil_kink").unwrap();
    assert!(is_flat(&d));
    assert!(!d.is_reduced());
    assert!(!blocks_and_cut_vertices(&seifert_graph(&d)).unwrap().cut_vertices.is_empty());
}

#[test]
fn flat_root_puts_every_circle_at_height_zero() {
    for (name, _, d) in corpus() {
        match flat_root_face(&d) {
            Some(f) => {
                assert!(is_flat(&d), "{name}");
                assert!(oracle_heights(&d, &splice_all(&d), f).iter().all(|&h| h == 0));
            }
            None => assert!(!is_flat(&d), "{name}"),
        }
    }
}

#[test]
fn plane_seifert_graph_is_spherical() {
    for (name, _, d) in corpus() {
        match plane_seifert_graph(&d) {
            Some(p) => {
                assert!(p.is_spherical(), "{name}");
                assert!(are_isomorphic(p.graph(), &seifert_graph(&d)));
            }
            None => assert!(!is_flat(&d), "{name}"),
        }
    }
}

#[test]
fn small_examples() {
    assert_eq!(splice_all(&diagram(TREFOIL)).circle_count(), 2);
    assert_eq!(splice_all(&diagram(FIGURE_EIGHT)).circle_count(), 3);
    assert!(is_flat(&diagram(TREFOIL)));
    assert!(!is_flat(&diagram(FIGURE_EIGHT)));
}

proptest! {
    #[test]
    fn rotation_and_mirror_keep_circles(index in 0usize..75, k in 0usize..40) {
        let all = corpus();
        let (_, _, d) = &all[index % all.len()];
        let mut e = d.code().entries().to_vec();
        let k = k % e.len();
        e.rotate_left(k);
        let r = KnotDiagram::from_gauss(&SignedGaussCode::new(e).unwrap()).unwrap();
        prop_assert_eq!(splice_all(&r).circle_count(), splice_all(d).circle_count());
        prop_assert_eq!(is_flat(&r), is_flat(d));
        prop_assert!(are_isomorphic(&seifert_graph(&r), &seifert_graph(d)));
        prop_assert!(are_isomorphic(&seifert_graph(&d.mirror()), &seifert_graph(d)));
    }
}
