//! Multigraphs, plane graphs given by rotation systems, and the graph
//! algorithms the knot constructions lean on.
//!
//! Edges are numbered `0..edge_count()`. Every edge `e` has two ends, called
//! darts: dart `2e` sits at the first endpoint (the `a` end) and dart `2e + 1`
//! at the second endpoint (the `b` end). The twin of a dart is `d ^ 1`.

mod connectivity;
mod enumerate;
mod iso;
mod plane;

pub use connectivity::{blocks_and_cut_vertices, edge_connectivity, is_three_connected, Blocks};
pub use enumerate::{cubic_multigraphs, enumerate_trivalent_planar, planar_embedding, MAX_ENUMERATION_VERTICES};
pub use iso::{are_isomorphic, find_isomorphism, plane_isomorphic};
pub use plane::PlaneGraph;

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {edge} references vertex {vertex}, but the graph has {count} vertices")]
    MissingVertex { edge: usize, vertex: usize, count: usize },
    #[error("invalid rotation system: {0}")]
    Rotation(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    Edgeless,
    #[error("enumeration limited to {limit} vertices, {requested} requested")]
    TooLarge { requested: usize, limit: usize },
}

/// Index of the edge a dart belongs to.
#[inline]
pub fn dart_edge(dart: usize) -> usize {
    dart / 2
}

/// The other end of the same edge.
#[inline]
pub fn twin(dart: usize) -> usize {
    dart ^ 1
}

/// Undirected multigraph. Loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        for (i, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::MissingVertex { edge: i, vertex: w, count: vertex_count });
                }
            }
        }
        Ok(Self { vertex_count, edges })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self { vertex_count, edges: Vec::new() }
    }

    /// `k` parallel edges between two vertices.
    pub fn dipole(k: usize) -> Self {
        Self { vertex_count: 2, edges: vec![(0, 1); k] }
    }

    /// Cycle on `k` vertices (`k = 1` is a loop, `k = 2` a double edge).
    pub fn cycle(k: usize) -> Self {
        Self { vertex_count: k, edges: (0..k).map(|i| (i, (i + 1) % k)).collect() }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn add_vertex(&mut self) -> usize {
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> usize {
        assert!(u < self.vertex_count && v < self.vertex_count);
        self.edges.push((u, v));
        self.edges.len() - 1
    }

    /// Vertex a dart is attached to.
    pub fn dart_vertex(&self, dart: usize) -> usize {
        let (u, v) = self.edges[dart_edge(dart)];
        if dart % 2 == 0 {
            u
        } else {
            v
        }
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Darts attached to each vertex, in dart order.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for d in 0..2 * self.edges.len() {
            inc[self.dart_vertex(d)].push(d);
        }
        inc
    }

    /// Multiplicity matrix; the diagonal holds loop counts.
    pub fn multiplicities(&self) -> Vec<Vec<usize>> {
        let mut m = vec![vec![0; self.vertex_count]; self.vertex_count];
        for &(a, b) in &self.edges {
            m[a][b] += 1;
            if a != b {
                m[b][a] += 1;
            }
        }
        m
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(a, b)| a == b).count()
    }

    /// Component index per vertex, and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let inc = self.incidence();
        let mut comp = vec![usize::MAX; self.vertex_count];
        let mut count = 0;
        for start in 0..self.vertex_count {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &d in &inc[x] {
                    let y = self.dart_vertex(twin(d));
                    if comp[y] == usize::MAX {
                        comp[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }

    /// Two-colouring of the vertices if one exists. A loop rules it out.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let inc = self.incidence();
        let mut side: Vec<Option<bool>> = vec![None; self.vertex_count];
        for start in 0..self.vertex_count {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                let sx = side[x].unwrap();
                for &d in &inc[x] {
                    let y = self.dart_vertex(twin(d));
                    match side[y] {
                        None => {
                            side[y] = Some(!sx);
                            queue.push_back(y);
                        }
                        Some(sy) if sy == sx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Keep only the listed edges (renumbered in the given order); vertices
    /// are unchanged.
    pub fn edge_subgraph(&self, keep: &[usize]) -> MultiGraph {
        MultiGraph { vertex_count: self.vertex_count, edges: keep.iter().map(|&e| self.edges[e]).collect() }
    }

    /// Replace every maximal path through degree-2 vertices by a single edge.
    /// A component that is a bare cycle of degree-2 vertices keeps one vertex
    /// with a loop.
    pub fn suppress_degree_two(&self) -> MultiGraph {
        let deg = self.degrees();
        let inc = self.incidence();
        let keep: Vec<bool> = (0..self.vertex_count).map(|v| deg[v] != 2).collect();
        let mut new_id = vec![usize::MAX; self.vertex_count];
        let mut count = 0;
        for v in 0..self.vertex_count {
            if keep[v] {
                new_id[v] = count;
                count += 1;
            }
        }
        let mut used = vec![false; 2 * self.edges.len()];
        let mut edges = Vec::new();
        let walk = |start: usize, used: &mut Vec<bool>| -> usize {
            // follow from dart `start` until reaching a kept vertex
            let mut d = start;
            loop {
                used[d] = true;
                used[twin(d)] = true;
                let y = self.dart_vertex(twin(d));
                if keep[y] {
                    return y;
                }
                // y has degree 2: continue through its other dart
                d = inc[y].iter().copied().find(|&x| x != twin(d)).unwrap();
            }
        };
        for v in 0..self.vertex_count {
            if !keep[v] {
                continue;
            }
            for &d in &inc[v] {
                if used[d] {
                    continue;
                }
                let end = walk(d, &mut used);
                edges.push((new_id[v], new_id[end]));
            }
        }
        // cycles made only of degree-2 vertices
        for v in 0..self.vertex_count {
            if keep[v] || inc[v].iter().all(|&d| used[d]) {
                continue;
            }
            let id = count;
            count += 1;
            let mut d = inc[v][0];
            loop {
                used[d] = true;
                used[twin(d)] = true;
                let y = self.dart_vertex(twin(d));
                match inc[y].iter().copied().find(|&x| !used[x]) {
                    Some(next) => d = next,
                    None => break,
                }
            }
            edges.push((id, id));
        }
        MultiGraph { vertex_count: count, edges }
    }
}
