use std::collections::BTreeMap;

use super::{twin, MultiGraph, PlaneGraph};

/// Colour refinement: start from (degree, loops) and split by the multiset
/// of (neighbour colour, multiplicity) until stable. Colours are comparable
/// across graphs because they are computed jointly.
fn refine(graphs: [&MultiGraph; 2]) -> [Vec<usize>; 2] {
    let mult = [graphs[0].multiplicities(), graphs[1].multiplicities()];
    let mut colors: [Vec<usize>; 2] = [0, 1].map(|i| {
        let g = graphs[i];
        let deg = g.degrees();
        (0..g.vertex_count()).map(|v| deg[v] * 1000 + mult[i][v][v]).collect()
    });
    loop {
        let mut signatures: BTreeMap<(usize, Vec<(usize, usize)>), usize> = BTreeMap::new();
        let sigs: [Vec<(usize, Vec<(usize, usize)>)>; 2] = [0, 1].map(|i| {
            let n = graphs[i].vertex_count();
            (0..n)
                .map(|v| {
                    let mut nb: Vec<(usize, usize)> = (0..n)
                        .filter(|&w| w != v && mult[i][v][w] > 0)
                        .map(|w| (colors[i][w], mult[i][v][w]))
                        .collect();
                    nb.sort_unstable();
                    (colors[i][v], nb)
                })
                .collect()
        });
        for s in sigs.iter().flatten() {
            let next = signatures.len();
            signatures.entry(s.clone()).or_insert(next);
        }
        let before = colors[0].iter().chain(&colors[1]).collect::<std::collections::BTreeSet<_>>().len();
        let new: [Vec<usize>; 2] = [0, 1].map(|i| sigs[i].iter().map(|s| signatures[s]).collect());
        if signatures.len() == before {
            return new;
        }
        colors = new;
    }
}

/// A vertex bijection `a -> b` preserving all edge multiplicities, loops
/// included, if one exists.
pub fn find_isomorphism(a: &MultiGraph, b: &MultiGraph) -> Option<Vec<usize>> {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    let [ca, cb] = refine([a, b]);
    let mut hist_a = ca.clone();
    let mut hist_b = cb.clone();
    hist_a.sort_unstable();
    hist_b.sort_unstable();
    if hist_a != hist_b {
        return None;
    }
    let ma = a.multiplicities();
    let mb = b.multiplicities();

    // map vertices of `a` in an order that keeps each new vertex adjacent to
    // an earlier one where possible, rarest colours first
    let mut count = BTreeMap::new();
    for &c in &ca {
        *count.entry(c).or_insert(0usize) += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&w| ma[v][w] > 0).count();
                (links, usize::MAX - count[&ca[v]], usize::MAX - v)
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        k: usize,
        order: &[usize],
        ca: &[usize],
        cb: &[usize],
        ma: &[Vec<usize>],
        mb: &[Vec<usize>],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        for w in 0..cb.len() {
            if used[w] || cb[w] != ca[v] || ma[v][v] != mb[w][w] {
                continue;
            }
            let consistent = order[..k].iter().all(|&x| ma[v][x] == mb[w][map[x]]);
            if !consistent {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if extend(k + 1, order, ca, cb, ma, mb, map, used) {
                return true;
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
        false
    }
    if extend(0, &order, &ca, &cb, &ma, &mb, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// Isomorphism of unlabelled undirected multigraphs.
pub fn are_isomorphic(a: &MultiGraph, b: &MultiGraph) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Isomorphism of plane graphs: a dart bijection commuting with twin and
/// with the rotation. Orientation-preserving only; compare against
/// `b.mirror()` as well to allow reflections.
pub fn plane_isomorphic(a: &PlaneGraph, b: &PlaneGraph) -> bool {
    let darts = 2 * a.edge_count();
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    if darts == 0 {
        return true;
    }
    if !a.graph().is_connected() {
        return false;
    }
    'start: for target in 0..darts {
        let mut map = vec![usize::MAX; darts];
        let mut inv = vec![usize::MAX; darts];
        let mut stack = vec![(0usize, target)];
        while let Some((x, y)) = stack.pop() {
            if map[x] != usize::MAX || inv[y] != usize::MAX {
                if map[x] != y {
                    continue 'start;
                }
                continue;
            }
            map[x] = y;
            inv[y] = x;
            stack.push((twin(x), twin(y)));
            stack.push((a.succ(x), b.succ(y)));
        }
        if map.iter().all(|&m| m != usize::MAX) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(g: &MultiGraph, perm: &[usize]) -> MultiGraph {
        let edges = g.edges().iter().rev().map(|&(u, v)| (perm[v], perm[u])).collect();
        MultiGraph::new(g.vertex_count(), edges).unwrap()
    }

    #[test]
    fn dipole_vs_triangle() {
        assert!(!are_isomorphic(&MultiGraph::dipole(3), &MultiGraph::cycle(3)));
        assert!(are_isomorphic(&MultiGraph::dipole(3), &relabel(&MultiGraph::dipole(3), &[1, 0])));
    }

    #[test]
    fn multiplicity_matters() {
        // path with a double edge on the left vs on the right is the same graph;
        // double+single vs triple edge is not
        let a = MultiGraph::new(3, vec![(0, 1), (0, 1), (1, 2)]).unwrap();
        let b = MultiGraph::new(3, vec![(2, 1), (1, 0), (1, 0)]).unwrap();
        let c = MultiGraph::new(3, vec![(0, 1), (1, 2), (1, 2)]).unwrap();
        assert!(are_isomorphic(&a, &b));
        assert!(are_isomorphic(&a, &c));
        let d = MultiGraph::new(3, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        assert!(!are_isomorphic(&a, &d));
    }

    #[test]
    fn loops_matter() {
        let a = MultiGraph::new(2, vec![(0, 0), (0, 1), (1, 1)]).unwrap();
        let b = MultiGraph::new(2, vec![(0, 0), (0, 1), (0, 0)]).unwrap();
        assert!(!are_isomorphic(&a, &b));
        assert!(are_isomorphic(&a, &relabel(&a, &[1, 0])));
    }

    #[test]
    fn regular_graphs_need_backtracking() {
        // prism vs K_{3,3}: both cubic on six vertices
        let prism =
            MultiGraph::new(6, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        let k33 = MultiGraph::new(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect()).unwrap();
        assert!(!are_isomorphic(&prism, &k33));
        let perm = [4, 2, 0, 5, 3, 1];
        let p2 = relabel(&prism, &perm);
        let map = find_isomorphism(&prism, &p2).unwrap();
        let m1 = prism.multiplicities();
        let m2 = p2.multiplicities();
        for u in 0..6 {
            for v in 0..6 {
                assert_eq!(m1[u][v], m2[map[u]][map[v]]);
            }
        }
    }
}
