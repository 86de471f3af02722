use super::{dart_edge, twin, GraphError, MultiGraph};

/// A multigraph together with a rotation system: for every vertex, the
/// cyclic order of the darts attached to it. Faces are the orbits of
/// `d -> succ(twin(d))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    graph: MultiGraph,
    rotation: Vec<Vec<usize>>,
    succ: Vec<usize>,
    pred: Vec<usize>,
}

impl PlaneGraph {
    pub fn new(graph: MultiGraph, rotation: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        if rotation.len() != graph.vertex_count() {
            return Err(GraphError::Rotation(format!(
                "{} rotations for {} vertices",
                rotation.len(),
                graph.vertex_count()
            )));
        }
        let darts = 2 * graph.edge_count();
        let mut seen = vec![false; darts];
        let mut succ = vec![usize::MAX; darts];
        let mut pred = vec![usize::MAX; darts];
        for (v, rot) in rotation.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d >= darts {
                    return Err(GraphError::Rotation(format!("dart {d} does not exist")));
                }
                if seen[d] {
                    return Err(GraphError::Rotation(format!("dart {d} listed twice")));
                }
                if graph.dart_vertex(d) != v {
                    return Err(GraphError::Rotation(format!("dart {d} listed at vertex {v}")));
                }
                seen[d] = true;
                let next = rot[(i + 1) % rot.len()];
                succ[d] = next;
                pred[next] = d;
            }
        }
        if let Some(d) = seen.iter().position(|s| !s) {
            return Err(GraphError::Rotation(format!("dart {d} missing from rotations")));
        }
        Ok(Self { graph, rotation, succ, pred })
    }

    /// Plane graph with the rotation at each vertex given by dart order.
    /// Only meaningful when every vertex has degree at most three, where every
    /// cyclic order is one of two.
    pub fn with_incidence_order(graph: MultiGraph) -> Result<Self, GraphError> {
        let rot = graph.incidence();
        Self::new(graph, rot)
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn into_graph(self) -> MultiGraph {
        self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn dart_vertex(&self, d: usize) -> usize {
        self.graph.dart_vertex(d)
    }

    /// Next dart counterclockwise around the same vertex.
    pub fn succ(&self, d: usize) -> usize {
        self.succ[d]
    }

    pub fn pred(&self, d: usize) -> usize {
        self.pred[d]
    }

    /// Next dart along the face to the left of `d`.
    pub fn face_step(&self, d: usize) -> usize {
        self.succ[twin(d)]
    }

    /// Facial walks, each starting at its smallest dart, listed by that dart.
    pub fn trace_faces(&self) -> Vec<Vec<usize>> {
        let darts = 2 * self.graph.edge_count();
        let mut seen = vec![false; darts];
        let mut faces = Vec::new();
        for start in 0..darts {
            if seen[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                walk.push(d);
                d = self.face_step(d);
            }
            faces.push(walk);
        }
        faces
    }

    /// Face index of every dart, following the numbering of [`trace_faces`].
    ///
    /// [`trace_faces`]: PlaneGraph::trace_faces
    pub fn face_of_dart(&self) -> (Vec<usize>, usize) {
        let faces = self.trace_faces();
        let mut of = vec![0; 2 * self.graph.edge_count()];
        for (f, walk) in faces.iter().enumerate() {
            for &d in walk {
                of[d] = f;
            }
        }
        (of, faces.len())
    }

    /// Number of faces, counting one face for every isolated vertex.
    pub fn face_count(&self) -> usize {
        let isolated = self.rotation.iter().filter(|r| r.is_empty()).count();
        self.trace_faces().len() + isolated
    }

    /// Euler characteristic `V - E + F` of every connected component.
    pub fn component_euler(&self) -> Vec<i64> {
        let (comp, count) = self.graph.components();
        let mut chi = vec![0i64; count];
        for v in 0..self.vertex_count() {
            chi[comp[v]] += 1;
            if self.rotation[v].is_empty() {
                chi[comp[v]] += 1;
            }
        }
        for &(u, _) in self.graph.edges() {
            chi[comp[u]] -= 1;
        }
        for walk in self.trace_faces() {
            chi[comp[self.dart_vertex(walk[0])]] += 1;
        }
        chi
    }

    /// Every component embeds in the sphere.
    pub fn is_spherical(&self) -> bool {
        self.component_euler().iter().all(|&c| c == 2)
    }

    /// Genus of a connected embedding.
    pub fn genus(&self) -> Option<usize> {
        let chi = self.component_euler();
        match chi.as_slice() {
            [c] if (2 - c) % 2 == 0 && *c <= 2 => Some(((2 - c) / 2) as usize),
            _ => None,
        }
    }

    /// The same graph with every rotation reversed.
    pub fn mirror(&self) -> PlaneGraph {
        let rot = self.rotation.iter().map(|r| r.iter().rev().copied().collect()).collect();
        PlaneGraph::new(self.graph.clone(), rot).expect("reversed rotations stay valid")
    }

    /// Geometric dual: one vertex per face, dual edge `e*` crossing `e`.
    /// Dart `d` of the dual sits at the face of dart `d`, so taking the dual
    /// twice returns the original rotation system exactly.
    pub fn dual(&self) -> Result<PlaneGraph, GraphError> {
        if !self.graph.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if self.graph.edge_count() == 0 {
            return PlaneGraph::new(MultiGraph::empty(1), vec![Vec::new()]);
        }
        let faces = self.trace_faces();
        let (of, count) = self.face_of_dart();
        let edges = (0..self.graph.edge_count()).map(|e| (of[2 * e], of[2 * e + 1])).collect();
        let graph = MultiGraph::new(count, edges)?;
        PlaneGraph::new(graph, faces)
    }

    /// Medial graph: one vertex per edge, one edge per corner. The medial
    /// edge numbered `d` follows the corner between dart `d` and `succ(d)`.
    pub fn medial(&self) -> Result<PlaneGraph, GraphError> {
        if !self.graph.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if self.graph.edge_count() == 0 {
            return Err(GraphError::Edgeless);
        }
        let darts = 2 * self.graph.edge_count();
        let edges = (0..darts).map(|d| (dart_edge(d), dart_edge(self.succ[d]))).collect();
        let graph = MultiGraph::new(self.graph.edge_count(), edges)?;
        let rotation = (0..self.graph.edge_count())
            .map(|e| {
                let (h0, h1) = (2 * e, 2 * e + 1);
                vec![2 * self.pred[h1] + 1, 2 * h0, 2 * self.pred[h0] + 1, 2 * h1]
            })
            .collect();
        PlaneGraph::new(graph, rotation)
    }

    /// Restrict to a subset of edges, keeping all vertices and the inherited
    /// cyclic orders. New edge `i` is old edge `keep[i]`.
    pub fn edge_subgraph(&self, keep: &[usize]) -> PlaneGraph {
        let mut new_dart = vec![usize::MAX; 2 * self.graph.edge_count()];
        for (i, &e) in keep.iter().enumerate() {
            new_dart[2 * e] = 2 * i;
            new_dart[2 * e + 1] = 2 * i + 1;
        }
        let rot = self
            .rotation
            .iter()
            .map(|r| r.iter().filter_map(|&d| Some(new_dart[d]).filter(|&x| x != usize::MAX)).collect())
            .collect();
        PlaneGraph::new(self.graph.edge_subgraph(keep), rot).expect("restriction keeps rotations valid")
    }

    /// Connected components that contain at least one edge, each with its
    /// vertex map and edge map back into `self`.
    pub fn split_components(&self) -> Vec<(PlaneGraph, Vec<usize>, Vec<usize>)> {
        let (comp, count) = self.graph.components();
        let mut out = Vec::new();
        for c in 0..count {
            let vertices: Vec<usize> = (0..self.vertex_count()).filter(|&v| comp[v] == c).collect();
            let edges: Vec<usize> = (0..self.edge_count()).filter(|&e| comp[self.graph.edge(e).0] == c).collect();
            if edges.is_empty() {
                continue;
            }
            let mut vid = vec![usize::MAX; self.vertex_count()];
            for (i, &v) in vertices.iter().enumerate() {
                vid[v] = i;
            }
            let mut did = vec![usize::MAX; 2 * self.edge_count()];
            for (i, &e) in edges.iter().enumerate() {
                did[2 * e] = 2 * i;
                did[2 * e + 1] = 2 * i + 1;
            }
            let g = MultiGraph::new(
                vertices.len(),
                edges
                    .iter()
                    .map(|&e| {
                        let (a, b) = self.graph.edge(e);
                        (vid[a], vid[b])
                    })
                    .collect(),
            )
            .expect("component edges stay inside the component");
            let rot = vertices.iter().map(|&v| self.rotation[v].iter().map(|&d| did[d]).collect()).collect();
            out.push((PlaneGraph::new(g, rot).expect("component rotations valid"), vertices, edges));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, plane_isomorphic};

    pub(crate) fn theta() -> PlaneGraph {
        // vertex 0 sees edges 0,1,2 counterclockwise, vertex 1 sees 0,2,1
        PlaneGraph::new(MultiGraph::dipole(3), vec![vec![0, 2, 4], vec![1, 5, 3]]).unwrap()
    }

    fn triangle() -> PlaneGraph {
        let g = MultiGraph::cycle(3);
        // edge i = (i, i+1): vertex v holds dart 2v (edge v, a end) and dart 2(v-1)+1
        let rot = (0..3).map(|v| vec![2 * v, 2 * ((v + 2) % 3) + 1]).collect();
        PlaneGraph::new(g, rot).unwrap()
    }

    pub(crate) fn prism() -> PlaneGraph {
        // outer triangle 0,1,2 and inner triangle 3,4,5 with spokes i -- i+3
        let edges = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)];
        let g = MultiGraph::new(6, edges).unwrap();
        // counterclockwise with the outer triangle drawn counterclockwise
        let rot = vec![
            vec![0, 12, 5],  // 0: to 1, to 3, to 2
            vec![2, 14, 1],  // 1: to 2, to 4, to 0
            vec![4, 16, 3],  // 2: to 0, to 5, to 1
            vec![13, 6, 11], // 3: to 0, to 4, to 5
            vec![15, 8, 7],  // 4: to 1, to 5, to 3
            vec![17, 10, 9], // 5: to 2, to 3, to 4
        ];
        PlaneGraph::new(g, rot).unwrap()
    }

    #[test]
    fn loop_has_two_faces() {
        let g = PlaneGraph::new(MultiGraph::cycle(1), vec![vec![0, 1]]).unwrap();
        assert_eq!(g.face_count(), 2);
        assert!(g.is_spherical());
    }

    #[test]
    fn theta_has_three_faces() {
        let t = theta();
        assert_eq!(t.face_count(), 3);
        assert!(t.is_spherical());
        // aligned rotations at both ends would put it on the torus
        let torus = PlaneGraph::new(MultiGraph::dipole(3), vec![vec![0, 2, 4], vec![1, 3, 5]]).unwrap();
        assert_eq!(torus.face_count(), 1);
        assert_eq!(torus.genus(), Some(1));
    }

    #[test]
    fn prism_faces() {
        let p = prism();
        assert_eq!(p.face_count(), 5);
        assert!(p.is_spherical());
    }

    #[test]
    fn every_dart_on_one_face() {
        let p = prism();
        let mut all: Vec<usize> = p.trace_faces().concat();
        all.sort();
        assert_eq!(all, (0..18).collect::<Vec<_>>());
    }

    #[test]
    fn dual_of_triangle_is_dipole() {
        let d = triangle().dual().unwrap();
        assert!(are_isomorphic(d.graph(), &MultiGraph::dipole(3)));
        assert!(d.is_spherical());
    }

    #[test]
    fn dual_of_loop() {
        let g = PlaneGraph::new(MultiGraph::cycle(1), vec![vec![0, 1]]).unwrap();
        let d = g.dual().unwrap();
        assert_eq!(d.vertex_count(), 2);
        assert_eq!(d.edge_count(), 1);
        assert_ne!(d.graph().edge(0).0, d.graph().edge(0).1);
        assert_eq!(d.dual().unwrap(), g);
    }

    #[test]
    fn dual_is_involution() {
        for g in [theta(), triangle(), prism()] {
            let dd = g.dual().unwrap().dual().unwrap();
            assert!(plane_isomorphic(&dd, &g));
        }
    }

    #[test]
    fn dual_rejects_disconnected() {
        let g = PlaneGraph::new(MultiGraph::empty(2), vec![vec![], vec![]]).unwrap();
        assert_eq!(g.dual(), Err(GraphError::Disconnected));
    }

    #[test]
    fn medial_shapes() {
        let m = theta().medial().unwrap();
        assert_eq!(m.vertex_count(), 3);
        assert!(m.graph().degrees().iter().all(|&d| d == 4));
        assert!(m.is_spherical());
        assert_eq!(m.face_count(), 2 + 3);

        let lp = PlaneGraph::new(MultiGraph::cycle(1), vec![vec![0, 1]]).unwrap();
        let m = lp.medial().unwrap();
        assert_eq!(m.vertex_count(), 1);
        assert_eq!(m.graph().loop_count(), 2);
        assert!(m.is_spherical());

        let m = triangle().medial().unwrap();
        assert_eq!(m.vertex_count(), 3);
        assert!(m.graph().degrees().iter().all(|&d| d == 4));
        assert!(m.is_spherical());

        let m = prism().medial().unwrap();
        assert_eq!(m.vertex_count(), 9);
        assert_eq!(m.face_count(), 6 + 5);
    }

    #[test]
    fn medial_rejects_edgeless() {
        let g = PlaneGraph::new(MultiGraph::empty(1), vec![vec![]]).unwrap();
        assert_eq!(g.medial(), Err(GraphError::Edgeless));
    }

    #[test]
    fn bad_rotation_rejected() {
        assert!(PlaneGraph::new(MultiGraph::dipole(2), vec![vec![0, 2], vec![1]]).is_err());
        assert!(PlaneGraph::new(MultiGraph::dipole(2), vec![vec![0, 1], vec![2, 3]]).is_err());
    }
}
