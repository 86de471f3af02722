use std::collections::{BTreeSet, VecDeque};

use super::{dart_edge, twin, GraphError, MultiGraph};

/// Block decomposition of a connected multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Blocks {
    /// Edge ids of every block. A loop forms a block on its own.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: BTreeSet<usize>,
}

impl Blocks {
    /// The whole graph is a single block without cut vertices.
    pub fn is_block(&self) -> bool {
        self.blocks.len() <= 1 && self.cut_vertices.is_empty()
    }
}

pub fn blocks_and_cut_vertices(g: &MultiGraph) -> Result<Blocks, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.vertex_count();
    let inc = g.incidence();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut blocks = Vec::new();
    let mut cut = BTreeSet::new();
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut time = 0;

    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if u == v {
            blocks.push(vec![e]);
        }
    }

    if n == 0 {
        return Ok(Blocks { blocks, cut_vertices: cut });
    }
    // iterative DFS: (vertex, edge used to enter, next incidence index)
    let root = 0;
    disc[root] = time;
    low[root] = time;
    time += 1;
    let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
    let mut root_children = 0;
    while let Some(&mut (x, in_edge, ref mut idx)) = stack.last_mut() {
        if *idx < inc[x].len() {
            let d = inc[x][*idx];
            *idx += 1;
            let e = dart_edge(d);
            let y = g.dart_vertex(twin(d));
            if e == in_edge || x == y {
                continue;
            }
            if disc[y] == usize::MAX {
                edge_stack.push(e);
                disc[y] = time;
                low[y] = time;
                time += 1;
                if x == root {
                    root_children += 1;
                }
                stack.push((y, e, 0));
            } else if disc[y] < disc[x] {
                edge_stack.push(e);
                low[x] = low[x].min(disc[y]);
            }
        } else {
            stack.pop();
            if let Some(&(parent, _, _)) = stack.last() {
                low[parent] = low[parent].min(low[x]);
                if low[x] >= disc[parent] {
                    if parent != root {
                        cut.insert(parent);
                    }
                    let mut block = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        block.push(e);
                        if e == in_edge {
                            break;
                        }
                    }
                    block.sort_unstable();
                    blocks.push(block);
                }
            }
        }
    }
    if root_children > 1 {
        cut.insert(root);
    }
    // a loop attached to a vertex with other edges makes no cut vertex, but
    // the loop is still its own block
    blocks.sort();
    Ok(Blocks { blocks, cut_vertices: cut })
}

/// Maximum number of edge-disjoint paths between two vertices (loops ignored).
fn max_flow(g: &MultiGraph, s: usize, t: usize) -> usize {
    let n = g.vertex_count();
    let mut cap = vec![vec![0i64; n]; n];
    for &(u, v) in g.edges() {
        if u != v {
            cap[u][v] += 1;
            cap[v][u] += 1;
        }
    }
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; n];
        prev[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for y in 0..n {
                if prev[y] == usize::MAX && cap[x][y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[t] == usize::MAX {
            return flow;
        }
        let mut y = t;
        while y != s {
            let x = prev[y];
            cap[x][y] -= 1;
            cap[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
}

/// Global edge connectivity; `None` for graphs with fewer than two vertices.
pub fn edge_connectivity(g: &MultiGraph) -> Option<usize> {
    if g.vertex_count() < 2 {
        return None;
    }
    Some((1..g.vertex_count()).map(|t| max_flow(g, 0, t)).min().unwrap())
}

fn connected_without(g: &MultiGraph, removed: &[usize]) -> bool {
    let n = g.vertex_count();
    let inc = g.incidence();
    let start = match (0..n).find(|v| !removed.contains(v)) {
        Some(v) => v,
        None => return true,
    };
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut count = 1;
    while let Some(x) = queue.pop_front() {
        for &d in &inc[x] {
            let y = g.dart_vertex(twin(d));
            if !seen[y] && !removed.contains(&y) {
                seen[y] = true;
                count += 1;
                queue.push_back(y);
            }
        }
    }
    count == n - removed.len()
}

/// Three-connectivity for multigraphs: edge connectivity at least three and
/// no separating set of at most two vertices. On three or fewer vertices the
/// edge connectivity alone decides, so the theta graph counts as
/// three-connected.
pub fn is_three_connected(g: &MultiGraph) -> bool {
    let n = g.vertex_count();
    if n < 2 || !g.is_connected() {
        return false;
    }
    if edge_connectivity(g).unwrap_or(0) < 3 {
        return false;
    }
    if n <= 3 {
        return true;
    }
    for x in 0..n {
        if !connected_without(g, &[x]) {
            return false;
        }
        for y in x + 1..n {
            if !connected_without(g, &[x, y]) {
                return false;
            }
        }
    }
    true
}
