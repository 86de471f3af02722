//! Seifert circles, their nesting, flatness and the Seifert graph.

use petgraph::unionfind::UnionFind;
use thiserror::Error;

use crate::diagram::{CornerKind, KnotDiagram};
use crate::graph::{MultiGraph, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeifertError {
    #[error("n - s + 1 = {0} is odd")]
    Parity(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CircleType {
    /// Some side of the circle holds no crossing.
    I,
    II,
}

#[derive(Debug, Clone)]
pub struct SeifertDecomposition {
    /// Arcs of every circle in knot order.
    pub circles: Vec<Vec<usize>>,
    pub circle_of_arc: Vec<usize>,
    /// Per crossing, the circle through its over-in arc and the circle
    /// through its under-in arc.
    pub crossing_links: Vec<(usize, usize)>,
    pub types: Option<Vec<CircleType>>,
    pub heights: Option<Vec<usize>>,
}

impl SeifertDecomposition {
    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }
}

/// Splice every crossing along the orientation. An arc reaching the over
/// strand of a crossing continues on the arc leaving its under strand, and
/// the other way round.
pub fn splice_all(d: &KnotDiagram) -> SeifertDecomposition {
    let len = d.len();
    let next_arc = |arc: usize| {
        let p = (arc + 1) % len;
        let c = d.crossing_at(p);
        if p == d.over_position(c) {
            d.under_position(c)
        } else {
            d.over_position(c)
        }
    };
    let mut circle_of_arc = vec![usize::MAX; len];
    let mut circles = Vec::new();
    for start in 0..len {
        if circle_of_arc[start] != usize::MAX {
            continue;
        }
        let mut circle = Vec::new();
        let mut a = start;
        while circle_of_arc[a] == usize::MAX {
            circle_of_arc[a] = circles.len();
            circle.push(a);
            a = next_arc(a);
        }
        circles.push(circle);
    }
    let incoming = |p: usize| (p + len - 1) % len;
    let crossing_links = (0..d.crossing_count())
        .map(|c| (circle_of_arc[incoming(d.over_position(c))], circle_of_arc[incoming(d.under_position(c))]))
        .collect();
    SeifertDecomposition { circles, circle_of_arc, crossing_links, types: None, heights: None }
}

/// The sphere split along all circles: `s + 1` regions, each a union of
/// diagram faces glued across the merged corners of the splices.
pub struct RegionTree {
    pub region_of_face: Vec<usize>,
    pub region_count: usize,
    /// The two regions beside each circle.
    pub sides: Vec<(usize, usize)>,
    /// Region holding the ribbon of each crossing.
    pub host: Vec<usize>,
}

pub fn region_tree(d: &KnotDiagram, dec: &SeifertDecomposition) -> RegionTree {
    let f = d.face_count();
    let mut uf = UnionFind::<usize>::new(f);
    for c in 0..d.crossing_count() {
        uf.union(d.corner(c, CornerKind::A).face, d.corner(c, CornerKind::C).face);
    }
    let labels = uf.into_labeling();
    let mut ids = vec![usize::MAX; f];
    let mut region_of_face = vec![0; f];
    let mut count = 0;
    for face in 0..f {
        let root = labels[face];
        if ids[root] == usize::MAX {
            ids[root] = count;
            count += 1;
        }
        region_of_face[face] = ids[root];
    }
    let sides = dec
        .circles
        .iter()
        .map(|circle| {
            let arc = circle[0];
            (region_of_face[d.face_of_dart(2 * arc)], region_of_face[d.face_of_dart(2 * arc + 1)])
        })
        .collect();
    let host = (0..d.crossing_count()).map(|c| region_of_face[d.corner(c, CornerKind::A).face]).collect();
    RegionTree { region_of_face, region_count: count, sides, host }
}

impl RegionTree {
    /// Regions reachable from `start` without crossing circle `cut`.
    fn side_of(&self, start: usize, cut: usize) -> Vec<bool> {
        let mut seen = vec![false; self.region_count];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(r) = stack.pop() {
            for (k, &(x, y)) in self.sides.iter().enumerate() {
                if k == cut {
                    continue;
                }
                for (p, q) in [(x, y), (y, x)] {
                    if p == r && !seen[q] {
                        seen[q] = true;
                        stack.push(q);
                    }
                }
            }
        }
        seen
    }

    /// Distance in circles from `root` to every region.
    fn depths(&self, root: usize) -> Vec<usize> {
        let mut depth = vec![usize::MAX; self.region_count];
        depth[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(r) = queue.pop_front() {
            for &(x, y) in &self.sides {
                for (p, q) in [(x, y), (y, x)] {
                    if p == r && depth[q] == usize::MAX {
                        depth[q] = depth[r] + 1;
                        queue.push_back(q);
                    }
                }
            }
        }
        depth
    }
}

/// Fill in circle types (decided on the sphere) and heights measured with
/// `root_face` as the unbounded face.
pub fn classify_circles(dec: &SeifertDecomposition, d: &KnotDiagram, root_face: usize) -> SeifertDecomposition {
    let tree = region_tree(d, dec);
    let types = (0..dec.circle_count())
        .map(|k| {
            let side = tree.side_of(tree.sides[k].0, k);
            let hosted_here = tree.host.iter().any(|&r| side[r]);
            let hosted_there = tree.host.iter().any(|&r| !side[r]);
            if hosted_here && hosted_there {
                CircleType::II
            } else {
                CircleType::I
            }
        })
        .collect();
    let depth = tree.depths(tree.region_of_face[root_face]);
    let heights = tree.sides.iter().map(|&(x, y)| depth[x].min(depth[y])).collect();
    SeifertDecomposition { types: Some(types), heights: Some(heights), ..dec.clone() }
}

pub fn is_flat(d: &KnotDiagram) -> bool {
    let dec = classify_circles(&splice_all(d), d, 0);
    dec.types.unwrap().iter().all(|&t| t == CircleType::I)
}

/// A face which, sent to infinity, puts every circle at height 0.
pub fn flat_root_face(d: &KnotDiagram) -> Option<usize> {
    let dec = splice_all(d);
    (0..d.face_count()).find(|&f| classify_circles(&dec, d, f).heights.unwrap().iter().all(|&h| h == 0))
}

/// Vertices are circles, one edge per crossing (edge `c` for crossing `c`,
/// `a` end on the circle through its over-in arc).
pub fn seifert_graph(d: &KnotDiagram) -> MultiGraph {
    let dec = splice_all(d);
    MultiGraph::new(dec.circle_count(), dec.crossing_links).expect("circle ids are in range")
}

/// The Seifert graph embedded through the crossing-free discs of a flat
/// diagram: the rotation at each circle is the order of crossings around its
/// empty side. `None` if the diagram is not flat.
pub fn plane_seifert_graph(d: &KnotDiagram) -> Option<PlaneGraph> {
    let dec = classify_circles(&splice_all(d), d, 0);
    let tree = region_tree(d, &dec);
    let types = dec.types.as_ref().unwrap();
    if types.contains(&CircleType::II) {
        return None;
    }
    let mut rotation = vec![Vec::new(); dec.circle_count()];
    for (k, rot) in rotation.iter_mut().enumerate() {
        let (x, y) = tree.sides[k];
        let empty = if tree.host.contains(&x) { y } else { x };
        let faces: Vec<usize> = (0..d.face_count()).filter(|&f| tree.region_of_face[f] == empty).collect();
        debug_assert_eq!(faces.len(), 1, "a crossing-free side is a single face");
        for &h in &d.faces()[faces[0]] {
            let c = d.map().dart_vertex(h);
            let corner =
                d.corners(c).into_iter().find(|corner| d.map().rotation(c)[(corner.slot + 1) % 4] == h).unwrap();
            let dart = match corner.kind {
                CornerKind::B => 2 * c,
                CornerKind::D => 2 * c + 1,
                _ => unreachable!("an empty disc only meets split-off corners"),
            };
            rot.push(dart);
        }
    }
    let g = MultiGraph::new(dec.circle_count(), dec.crossing_links).expect("circle ids are in range");
    Some(PlaneGraph::new(g, rotation).expect("each crossing is met once from each of its circles"))
}

/// `(n - s + 1) / 2`.
pub fn canonical_genus(d: &KnotDiagram) -> Result<usize, SeifertError> {
    let twice = d.crossing_count() as i64 - splice_all(d).circle_count() as i64 + 1;
    if twice % 2 != 0 || twice < 0 {
        return Err(SeifertError::Parity(twice));
    }
    Ok(twice as usize / 2)
}
