//! Checkerboard colourings, the two Tait graphs, c- and d-edges, and the
//! graph Φ whose dual is the Seifert graph.

use std::collections::VecDeque;

use petgraph::unionfind::UnionFind;

use crate::diagram::{CornerKind, KnotDiagram};
use crate::graph::{twin, MultiGraph, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub black: Vec<bool>,
}

impl Coloring {
    pub fn is_black(&self, face: usize) -> bool {
        self.black[face]
    }

    pub fn swapped(&self) -> Coloring {
        Coloring { black: self.black.iter().map(|b| !b).collect() }
    }

    /// Faces across every arc differ.
    pub fn is_proper(&self, d: &KnotDiagram) -> bool {
        (0..d.len()).all(|arc| self.black[d.face_of_dart(2 * arc)] != self.black[d.face_of_dart(2 * arc + 1)])
    }
}

/// Proper two-colouring with `white_face` white.
pub fn checkerboard_from(d: &KnotDiagram, white_face: usize) -> Coloring {
    let f = d.face_count();
    let mut color: Vec<Option<bool>> = vec![None; f];
    let mut adj = vec![Vec::new(); f];
    for arc in 0..d.len() {
        let (x, y) = (d.face_of_dart(2 * arc), d.face_of_dart(2 * arc + 1));
        adj[x].push(y);
        adj[y].push(x);
    }
    color[white_face] = Some(false);
    let mut queue = VecDeque::from([white_face]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if color[y].is_none() {
                color[y] = Some(!color[x].unwrap());
                queue.push_back(y);
            }
        }
    }
    Coloring { black: color.into_iter().map(|c| c.expect("face map is connected")).collect() }
}

/// The face holding dart 0 is white.
pub fn checkerboard(d: &KnotDiagram) -> Coloring {
    checkerboard_from(d, d.face_of_dart(0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    /// Contracted by the splice: the merged corners lie in this graph's faces.
    C,
    /// Deleted by the splice.
    D,
}

impl EdgeClass {
    pub fn other(self) -> EdgeClass {
        match self {
            EdgeClass::C => EdgeClass::D,
            EdgeClass::D => EdgeClass::C,
        }
    }
}

#[derive(Debug, Clone)]
pub struct TaitGraph {
    /// Edge `c` is crossing `c`.
    pub plane: PlaneGraph,
    /// Diagram face of every vertex.
    pub faces: Vec<usize>,
    pub classes: Vec<EdgeClass>,
}

#[derive(Debug, Clone)]
pub struct TaitPair {
    /// Graph on the black faces.
    pub t: TaitGraph,
    /// Graph on the white faces.
    pub t_star: TaitGraph,
}

/// Class of each crossing as an edge of the graph on faces of colour
/// `black`: c when the corners merged by the splice have that colour.
pub fn classify_cd_edges(d: &KnotDiagram, col: &Coloring, black: bool) -> Vec<EdgeClass> {
    (0..d.crossing_count())
        .map(|c| if col.is_black(d.corner(c, CornerKind::A).face) == black { EdgeClass::C } else { EdgeClass::D })
        .collect()
}

fn tait_graph(d: &KnotDiagram, col: &Coloring, black: bool) -> TaitGraph {
    let faces: Vec<usize> = (0..d.face_count()).filter(|&f| col.is_black(f) == black).collect();
    let mut vertex_of = vec![usize::MAX; d.face_count()];
    for (i, &f) in faces.iter().enumerate() {
        vertex_of[f] = i;
    }
    let n = d.crossing_count();
    // the two corners of each crossing in faces of this colour, lower slot first
    let slots: Vec<[usize; 2]> = (0..n)
        .map(|c| {
            let s: Vec<usize> = d.corners(c).iter().filter(|k| col.is_black(k.face) == black).map(|k| k.slot).collect();
            assert_eq!(s.len(), 2, "a proper colouring alternates around a crossing");
            [s[0], s[1]]
        })
        .collect();
    let edges = (0..n)
        .map(|c| {
            let corners = d.corners(c);
            (vertex_of[corners[slots[c][0]].face], vertex_of[corners[slots[c][1]].face])
        })
        .collect();
    let rotation = faces
        .iter()
        .map(|&f| {
            d.faces()[f]
                .iter()
                .map(|&h| {
                    let c = d.map().dart_vertex(h);
                    let k = (d.map().rotation(c).iter().position(|&x| x == h).unwrap() + 3) % 4;
                    if k == slots[c][0] {
                        2 * c
                    } else {
                        debug_assert_eq!(k, slots[c][1]);
                        2 * c + 1
                    }
                })
                .collect()
        })
        .collect();
    let g = MultiGraph::new(faces.len(), edges).expect("face ids are mapped");
    let plane = PlaneGraph::new(g, rotation).expect("every corner of a face is met once along it");
    TaitGraph { plane, faces, classes: classify_cd_edges(d, col, black) }
}

pub fn tait_graphs(d: &KnotDiagram, col: &Coloring) -> TaitPair {
    TaitPair { t: tait_graph(d, col, true), t_star: tait_graph(d, col, false) }
}

/// One connected component of C or C'.
#[derive(Debug, Clone)]
pub struct PhiComponent {
    /// Whether the component lies in the black graph T.
    pub black: bool,
    pub plane: PlaneGraph,
    /// Diagram face of each vertex.
    pub faces: Vec<usize>,
    /// Crossing of each edge.
    pub crossings: Vec<usize>,
    /// Facial walks of the component on its own.
    pub component_faces: Vec<Vec<usize>>,
    pub face_of_dart: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct PhiGraph {
    pub components: Vec<PhiComponent>,
    /// `host[k][j]`: the face of component `k` that contains component `j`
    /// (`usize::MAX` on the diagonal).
    pub host: Vec<Vec<usize>>,
}

/// Regions left when the listed crossings are cut along their A and C
/// corners: labels per diagram dart. Darts stand for the sides of arcs.
fn sector_labels(d: &KnotDiagram, cut: &[bool]) -> Vec<usize> {
    let mut uf = UnionFind::<usize>::new(2 * d.len());
    for h in 0..2 * d.len() {
        uf.union(h, twin(h));
    }
    for c in 0..d.crossing_count() {
        let rot = d.map().rotation(c);
        for corner in d.corners(c) {
            if cut[c] && corner.kind.merged_by_splice() {
                continue;
            }
            uf.union(rot[corner.slot], rot[(corner.slot + 1) % 4]);
        }
    }
    uf.into_labeling()
}

/// The diagram dart leaving the corner where `dart` of `comp` sits. For a
/// c-edge the corners in its own faces are the merged ones; the `a` end
/// holds the lower rotation slot.
fn sector_after(d: &KnotDiagram, comp: &PhiComponent, dart: usize) -> usize {
    let c = comp.crossings[dart / 2];
    let rot = d.map().rotation(c);
    let merged: Vec<usize> = d.corners(c).iter().filter(|k| k.kind.merged_by_splice()).map(|k| k.slot).collect();
    rot[(merged[dart % 2] + 1) % 4]
}

/// Split T and T* into their c-edge subgraphs, trace each component, and
/// locate every component inside the faces of the others.
pub fn build_phi(d: &KnotDiagram, pair: &TaitPair) -> PhiGraph {
    let mut components = Vec::new();
    for (black, tait) in [(true, &pair.t), (false, &pair.t_star)] {
        let keep: Vec<usize> = (0..d.crossing_count()).filter(|&c| tait.classes[c] == EdgeClass::C).collect();
        let sub = tait.plane.edge_subgraph(&keep);
        for (plane, vmap, emap) in sub.split_components() {
            let component_faces = plane.trace_faces();
            let (face_of_dart, _) = plane.face_of_dart();
            components.push(PhiComponent {
                black,
                faces: vmap.iter().map(|&v| tait.faces[v]).collect(),
                crossings: emap.iter().map(|&e| keep[e]).collect(),
                plane,
                component_faces,
                face_of_dart,
            });
        }
    }
    let k = components.len();
    let mut host = vec![vec![usize::MAX; k]; k];
    for i in 0..k {
        let comp = &components[i];
        let mut cut = vec![false; d.crossing_count()];
        for &c in &comp.crossings {
            cut[c] = true;
        }
        let labels = sector_labels(d, &cut);
        // label of every face of the component, read off its walks
        let face_label: Vec<usize> = comp
            .component_faces
            .iter()
            .map(|walk| {
                let ls: Vec<usize> = walk.iter().map(|&x| labels[sector_after(d, comp, twin(x))]).collect();
                assert!(ls.iter().all(|&l| l == ls[0]), "a traced face is one region");
                ls[0]
            })
            .collect();
        for j in 0..k {
            if j == i {
                continue;
            }
            let probe = d.faces()[components[j].faces[0]][0];
            host[i][j] =
                face_label.iter().position(|&l| l == labels[probe]).expect("every other component lies in some face");
        }
    }
    PhiGraph { components, host }
}

/// Dual of the (possibly non-cellular) sphere embedding of Φ: one vertex
/// per complementary region, one edge per crossing.
///
/// Regions are assembled from the faces traced on each component: face `f`
/// of component `a` and face `g` of component `b` bound the same region
/// when `b` sits in `f`, `a` sits in `g`, and no third component has `a`
/// and `b` in different faces.
pub fn phi_dual(phi: &PhiGraph, crossing_count: usize) -> MultiGraph {
    let k = phi.components.len();
    let offset: Vec<usize> = phi
        .components
        .iter()
        .scan(0, |acc, c| {
            let o = *acc;
            *acc += c.component_faces.len();
            Some(o)
        })
        .collect();
    let total = offset.last().map_or(0, |&o| o + phi.components[k - 1].component_faces.len());
    let mut uf = UnionFind::<usize>::new(total);
    for a in 0..k {
        for b in a + 1..k {
            let separated = (0..k).any(|m| m != a && m != b && phi.host[m][a] != phi.host[m][b]);
            if !separated {
                uf.union(offset[a] + phi.host[a][b], offset[b] + phi.host[b][a]);
            }
        }
    }
    let labels = uf.into_labeling();
    let mut ids = vec![usize::MAX; total];
    let mut count = 0;
    for &l in &labels {
        if ids[l] == usize::MAX {
            ids[l] = count;
            count += 1;
        }
    }
    let mut edges = vec![(0, 0); crossing_count];
    for (a, comp) in phi.components.iter().enumerate() {
        for (e, &c) in comp.crossings.iter().enumerate() {
            let region = |dart: usize| ids[labels[offset[a] + comp.face_of_dart[dart]]];
            edges[c] = (region(2 * e), region(2 * e + 1));
        }
    }
    MultiGraph::new(count, edges).expect("region ids are in range")
}

/// Check on Φ: every component has only even degrees.
pub fn phi_is_eulerian(phi: &PhiGraph) -> bool {
    phi.components.iter().all(|c| c.plane.graph().degrees().iter().all(|deg| deg % 2 == 0))
}

/// Convenience: Φ* straight from a diagram.
pub fn phi_star(d: &KnotDiagram) -> MultiGraph {
    let pair = tait_graphs(d, &checkerboard(d));
    phi_dual(&build_phi(d, &pair), d.crossing_count())
}
