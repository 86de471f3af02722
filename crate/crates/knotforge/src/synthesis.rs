//! Seifert's algorithm run backwards: oriented plane graphs to knot
//! diagrams, and flat knots from trivalent graphs with a bieulerian path.

use thiserror::Error;

use crate::codec::{GaussEntry, Sign, SignedGaussCode, Strand};
use crate::diagram::{DiagramError, KnotDiagram};
use crate::graph::{twin, MultiGraph, PlaneGraph};
use crate::wicks::is_bieulerian;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthesisError {
    #[error("graph must be connected with at least one edge")]
    Degenerate,
    #[error("{0} orientations given for {1} vertices")]
    OrientationCount(usize, usize),
    #[error("the construction gives a link with {0} components")]
    MultiComponent(usize),
    #[error("graph is not trivalent")]
    NotTrivalent,
    #[error("path is not bieulerian")]
    NotBieulerian,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Anticlockwise,
}

impl Orientation {
    pub fn other(self) -> Orientation {
        match self {
            Orientation::Clockwise => Orientation::Anticlockwise,
            Orientation::Anticlockwise => Orientation::Clockwise,
        }
    }
}

/// Subdivide every edge whose ends carry the same orientation; the new
/// degree-two vertex takes the opposite one. Edge `e` of the input keeps id
/// `e` (from its `a` end to the new vertex).
pub fn subdivide_same_orientation(g: &PlaneGraph, orient: &[Orientation]) -> (PlaneGraph, Vec<Orientation>) {
    let mut rotation: Vec<Vec<usize>> = g.rotations().to_vec();
    let mut orient = orient.to_vec();
    let mut edges: Vec<(usize, usize)> = g.graph().edges().to_vec();
    let mut vertex_count = g.vertex_count();
    for e in 0..g.edge_count() {
        let (u, v) = edges[e];
        if orient[u] != orient[v] {
            continue;
        }
        let x = vertex_count;
        vertex_count += 1;
        let f = edges.len();
        edges[e] = (u, x);
        edges.push((x, v));
        orient.push(orient[u].other());
        let slot = rotation[v].iter().position(|&d| d == 2 * e + 1).expect("dart sits at its vertex");
        rotation[v][slot] = 2 * f + 1;
        rotation.push(vec![2 * e + 1, 2 * f]);
    }
    let graph = MultiGraph::new(vertex_count, edges).expect("new vertices are counted");
    (PlaneGraph::new(graph, rotation).expect("subdivision keeps a rotation system"), orient)
}

/// The inverse of Seifert's algorithm. Edges of the (subdivided) graph
/// become crossings. The knot turns left at anticlockwise vertices and right
/// at clockwise ones; the strand running from the anticlockwise end of an
/// edge to its clockwise end goes over, which makes every crossing negative.
pub fn graph_to_link(g: &PlaneGraph, orient: &[Orientation]) -> Result<KnotDiagram, SynthesisError> {
    if orient.len() != g.vertex_count() {
        return Err(SynthesisError::OrientationCount(orient.len(), g.vertex_count()));
    }
    if g.edge_count() == 0 || !g.graph().is_connected() {
        return Err(SynthesisError::Degenerate);
    }
    let (q, orient) = subdivide_same_orientation(g, orient);
    let step = |d: usize| {
        let t = twin(d);
        match orient[q.dart_vertex(t)] {
            Orientation::Anticlockwise => q.succ(t),
            Orientation::Clockwise => q.pred(t),
        }
    };
    let darts = 2 * q.edge_count();
    let mut seen = vec![false; darts];
    let mut walk = Vec::new();
    let mut components = 0;
    for start in 0..darts {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            if components == 1 {
                walk.push(d);
            }
            d = step(d);
        }
    }
    if components > 1 {
        return Err(SynthesisError::MultiComponent(components));
    }
    let first_over = walk.iter().position(|&d| orient[q.dart_vertex(d)] == Orientation::Anticlockwise).unwrap_or(0);
    walk.rotate_left(first_over);
    let entries = walk
        .iter()
        .map(|&d| {
            let from_anticlockwise = orient[q.dart_vertex(d)] == Orientation::Anticlockwise;
            GaussEntry {
                label: (d / 2) as u32 + 1,
                strand: if from_anticlockwise { Strand::Over } else { Strand::Under },
                sign: Sign::Minus,
            }
        })
        .collect();
    let code = SignedGaussCode::new(entries).map_err(|e| SynthesisError::Inconsistent(e.to_string()))?;
    Ok(KnotDiagram::from_gauss(&code)?)
}

/// Orientation of each vertex from the turn the path takes on first
/// arriving there.
pub fn path_orientations(g: &PlaneGraph, path: &[usize]) -> Result<Vec<Orientation>, SynthesisError> {
    let mut orient: Vec<Option<Orientation>> = vec![None; g.vertex_count()];
    for k in 0..path.len() {
        let arrive = twin(path[k]);
        let next = path[(k + 1) % path.len()];
        let y = g.dart_vertex(arrive);
        let turn = if next == g.succ(arrive) {
            Orientation::Anticlockwise
        } else if next == g.pred(arrive) {
            Orientation::Clockwise
        } else {
            return Err(SynthesisError::Inconsistent(format!("path skips a neighbour at vertex {y}")));
        };
        match orient[y] {
            None => orient[y] = Some(turn),
            Some(o) if o != turn => {
                return Err(SynthesisError::Inconsistent(format!("path turns both ways at vertex {y}")));
            }
            Some(_) => {}
        }
    }
    orient.into_iter().map(|o| o.ok_or_else(|| SynthesisError::Inconsistent("vertex never visited".into()))).collect()
}

/// The flat knot of a trivalent plane graph with a bieulerian path.
pub fn trivalent_to_flat_knot(g: &PlaneGraph, path: &[usize]) -> Result<KnotDiagram, SynthesisError> {
    if (0..g.vertex_count()).any(|v| g.rotation(v).len() != 3) {
        return Err(SynthesisError::NotTrivalent);
    }
    if !is_bieulerian(g.graph(), path) {
        return Err(SynthesisError::NotBieulerian);
    }
    let orient = path_orientations(g, path)?;
    match graph_to_link(g, &orient) {
        Err(SynthesisError::MultiComponent(k)) => {
            Err(SynthesisError::Inconsistent(format!("bieulerian path produced {k} components")))
        }
        other => other,
    }
}

/// Number of edges of `g` whose ends share an orientation.
pub fn subdivision_count(g: &PlaneGraph, orient: &[Orientation]) -> usize {
    g.graph().edges().iter().filter(|&&(u, v)| orient[u] == orient[v]).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;
    use crate::seifert::{canonical_genus, is_flat, seifert_graph};
    use crate::wicks::find_bieulerian;
    use Orientation::*;

    fn theta() -> PlaneGraph {
        PlaneGraph::new(MultiGraph::dipole(3), vec![vec![0, 2, 4], vec![1, 5, 3]]).unwrap()
    }

    #[test]
    fn theta_gives_trefoil() {
        let d = graph_to_link(&theta(), &[Anticlockwise, Clockwise]).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert!(is_flat(&d) && d.is_alternating());
        assert_eq!(canonical_genus(&d), Ok(1));
        assert!(are_isomorphic(&seifert_graph(&d), &MultiGraph::dipole(3)));
    }

    #[test]
    fn single_edge_gives_kink() {
        let k2 = PlaneGraph::with_incidence_order(MultiGraph::dipole(1)).unwrap();
        let d = graph_to_link(&k2, &[Anticlockwise, Clockwise]).unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert!(are_isomorphic(&seifert_graph(&d), &MultiGraph::dipole(1)));
    }

    #[test]
    fn equal_orientations_subdivide() {
        let g = theta();
        let (q, _) = subdivide_same_orientation(&g, &[Clockwise, Clockwise]);
        assert_eq!(q.edge_count(), 6);
        match graph_to_link(&g, &[Clockwise, Clockwise]) {
            Ok(d) => assert!(are_isomorphic(&seifert_graph(&d), q.graph())),
            Err(SynthesisError::MultiComponent(k)) => assert!(k >= 2),
            Err(e) => panic!("{e}"),
        }
    }

    #[test]
    fn theta_path() {
        let g = theta();
        let p = find_bieulerian(g.graph()).unwrap();
        let d = trivalent_to_flat_knot(&g, &p).unwrap();
        assert!(is_flat(&d) && d.is_alternating());
        assert_eq!(canonical_genus(&d), Ok(1));
    }

    #[test]
    fn k4_has_no_path() {
        let k4 = MultiGraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(find_bieulerian(&k4).is_none());
    }
}
