//! Partition of a (2,2)-tight graph into two edge-disjoint spanning trees
//! by matroid-union augmentation: an unplaced edge is pushed into a forest,
//! evicting a cycle edge into the other forest, breadth-first until a free
//! slot is found.

use super::pebble::is_tight;
use crate::graph::{EdgeId, PlaneGraph};
use std::collections::VecDeque;

pub fn spanning_tree_decomposition(g: &PlaneGraph) -> Option<(Vec<EdgeId>, Vec<EdgeId>)> {
    if !is_tight(g, 2) {
        return None;
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut color: Vec<Option<usize>> = vec![None; m];

    for e in 0..m {
        place(g, n, &mut color, e);
    }
    let t1: Vec<EdgeId> = (0..m).filter(|&e| color[e] == Some(0)).collect();
    let t2: Vec<EdgeId> = (0..m).filter(|&e| color[e] == Some(1)).collect();
    debug_assert_eq!(t1.len(), n - 1);
    debug_assert_eq!(t2.len(), n - 1);
    Some((t1, t2))
}

/// Path between the endpoints of `e` in the given forest, as edge ids;
/// `None` when the endpoints are in different components.
fn forest_path(g: &PlaneGraph, n: usize, forest: &[EdgeId], e: EdgeId) -> Option<Vec<EdgeId>> {
    let (s, t) = g.endpoints(e);
    if s == t {
        return Some(vec![]);
    }
    let mut adj: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); n];
    for &f in forest {
        let (a, b) = g.endpoints(f);
        adj[a].push((b, f));
        adj[b].push((a, f));
    }
    let mut parent: Vec<Option<(usize, EdgeId)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[s] = true;
    let mut queue = VecDeque::new();
    queue.push_back(s);
    while let Some(v) = queue.pop_front() {
        for &(w, f) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some((v, f));
                if w == t {
                    let mut path = Vec::new();
                    let mut x = t;
                    while let Some((p, pe)) = parent[x] {
                        path.push(pe);
                        x = p;
                    }
                    return Some(path);
                }
                queue.push_back(w);
            }
        }
    }
    None
}

pub(super) fn place(g: &PlaneGraph, n: usize, color: &mut [Option<usize>], e: EdgeId) {
    let m = color.len();
    // BFS state: try to put `edge` into `forest`.
    let mut visited = vec![[false; 2]; m];
    let mut parent: Vec<Option<(EdgeId, usize)>> = vec![None; 2 * m];
    let key = |edge: EdgeId, forest: usize| 2 * edge + forest;
    let mut queue = VecDeque::new();
    for forest in 0..2 {
        visited[e][forest] = true;
        queue.push_back((e, forest));
    }
    while let Some((edge, forest)) = queue.pop_front() {
        let members: Vec<EdgeId> = (0..m)
            .filter(|&x| x != edge && color[x] == Some(forest))
            .collect();
        match forest_path(g, n, &members, edge) {
            None => {
                // free slot: apply the eviction chain
                let mut cur = (edge, forest);
                loop {
                    color[cur.0] = Some(cur.1);
                    match parent[key(cur.0, cur.1)] {
                        Some(prev) => cur = prev,
                        None => break,
                    }
                }
                return;
            }
            Some(cycle) => {
                for x in cycle {
                    let other = 1 - forest;
                    if !visited[x][other] {
                        visited[x][other] = true;
                        parent[key(x, other)] = Some((edge, forest));
                        queue.push_back((x, other));
                    }
                }
            }
        }
    }
    unreachable!("every edge of a (2,2)-tight graph is placeable");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn check_partition(g: &PlaneGraph, t1: &[EdgeId], t2: &[EdgeId]) {
        let n = g.vertex_count();
        assert_eq!(t1.len() + t2.len(), g.edge_count());
        for part in [t1, t2] {
            assert_eq!(part.len(), n - 1);
            assert!(forest_path_free(g, n, part));
        }
    }

    fn forest_path_free(g: &PlaneGraph, n: usize, part: &[EdgeId]) -> bool {
        // acyclic and spanning: n-1 edges and connected
        let mut adj = vec![Vec::new(); n];
        for &e in part {
            let (a, b) = g.endpoints(e);
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut cnt = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    cnt += 1;
                    stack.push(w);
                }
            }
        }
        cnt == n
    }

    #[test]
    fn k4_decomposes() {
        let g = fixtures::k4();
        let (t1, t2) = spanning_tree_decomposition(&g).unwrap();
        check_partition(&g, &t1, &t2);
    }

    #[test]
    fn doubled_triangle_is_refused() {
        let mut g = fixtures::triangle();
        for e in 0..3 {
            g = g.double_edge(e, 2 * e).unwrap().graph;
        }
        assert!(spanning_tree_decomposition(&g).is_none());
    }

    #[test]
    fn non_tight_refused() {
        assert!(spanning_tree_decomposition(&fixtures::triangle()).is_none());
        assert!(spanning_tree_decomposition(&fixtures::octahedron()).is_none());
    }

    #[test]
    fn double_edge_pair_decomposes() {
        // two vertices, two parallel edges: each a spanning tree
        let g = fixtures::parallel_edges(2);
        let (t1, t2) = spanning_tree_decomposition(&g).unwrap();
        check_partition(&g, &t1, &t2);
    }
}
