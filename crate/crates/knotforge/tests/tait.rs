mod common;

use common::{brute_isomorphic, corpus, diagram, TREFOIL};
use knotforge::graph::{are_isomorphic, plane_isomorphic, MultiGraph};
use knotforge::seifert::{seifert_graph, splice_all};
use knotforge::tait::{build_phi, checkerboard, checkerboard_from, phi_dual, phi_is_eulerian, phi_star, tait_graphs};

#[test]
fn tait_graphs_are_plane_duals() {
    for (name, _, d) in corpus() {
        let pair = tait_graphs(&d, &checkerboard(&d));
        let n = d.crossing_count();
        assert_eq!(pair.t.plane.edge_count(), n);
        assert_eq!(pair.t_star.plane.edge_count(), n);
        assert_eq!(pair.t.plane.vertex_count() + pair.t_star.plane.vertex_count(), n + 2, "{name}");
        let dual = pair.t.plane.dual().unwrap();
        let ok = plane_isomorphic(&dual, &pair.t_star.plane) || plane_isomorphic(&dual.mirror(), &pair.t_star.plane);
        assert!(ok, "{name}");
    }
}

#[test]
fn classes_are_complementary() {
    for (name, _, d) in corpus() {
        let pair = tait_graphs(&d, &checkerboard(&d));
        for c in 0..d.crossing_count() {
            assert_eq!(pair.t.classes[c].other(), pair.t_star.classes[c], "{name}");
        }
    }
}

#[test]
fn swapping_colours_swaps_graphs() {
    for (name, _, d) in corpus() {
        let col = checkerboard(&d);
        let a = tait_graphs(&d, &col);
        let b = tait_graphs(&d, &col.swapped());
        assert!(are_isomorphic(a.t.plane.graph(), b.t_star.plane.graph()), "{name}");
        assert_eq!(a.t.classes, b.t_star.classes);
    }
}

#[test]
fn colouring_from_any_face_is_proper() {
    let d = diagram(TREFOIL);
    for f in 0..d.face_count() {
        let col = checkerboard_from(&d, f);
        assert!(col.is_proper(&d));
        assert!(!col.is_black(f));
    }
}

#[test]
fn phi_is_eulerian_everywhere() {
    for (name, _, d) in corpus() {
        let pair = tait_graphs(&d, &checkerboard(&d));
        assert!(phi_is_eulerian(&build_phi(&d, &pair)), "{name}");
    }
}

#[test]
fn phi_dual_is_the_seifert_graph() {
    for (name, _, d) in corpus() {
        let star = phi_star(&d);
        let s = seifert_graph(&d);
        assert_eq!(star.vertex_count(), splice_all(&d).circle_count(), "{name}");
        let same = if s.vertex_count() <= 8 { brute_isomorphic(&star, &s) } else { are_isomorphic(&star, &s) };
        assert!(same, "{name}");
    }
}

#[test]
fn phi_dual_of_the_trefoil() {
    let d = diagram(TREFOIL);
    let pair = tait_graphs(&d, &checkerboard(&d));
    let phi = build_phi(&d, &pair);
    assert!(are_isomorphic(&phi_dual(&phi, 3), &MultiGraph::dipole(3)));
}
