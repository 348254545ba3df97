//! Orientation characterizations of (2,k)-tight graphs via the pebble game.

use super::pebble::{is_sparse, is_tight, PebbleGame};
use crate::graph::PlaneGraph;

/// Per-edge direction: `true` means the edge leaves its first endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    pub source_is_u: Vec<bool>,
}

impl Orientation {
    pub fn source(&self, g: &PlaneGraph, e: usize) -> usize {
        let (u, v) = g.endpoints(e);
        if self.source_is_u[e] {
            u
        } else {
            v
        }
    }

    pub fn target(&self, g: &PlaneGraph, e: usize) -> usize {
        let (u, v) = g.endpoints(e);
        if self.source_is_u[e] {
            v
        } else {
            u
        }
    }

    /// Out-degree per vertex; a loop counts once at its vertex.
    pub fn out_degrees(&self, g: &PlaneGraph) -> Vec<usize> {
        let mut out = vec![0; g.vertex_count()];
        for e in 0..g.edge_count() {
            out[self.source(g, e)] += 1;
        }
        out
    }
}

/// Orientation of a graph augmented with loops at a root vertex.
#[derive(Debug, Clone)]
pub struct RootedOrientation {
    pub orientation: Orientation,
    pub root: usize,
    pub loops_at_root: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrientationVariant {
    /// Out-degree exactly 2 everywhere: exists iff (2,0)-tight.
    Exact2,
    /// Out-degree at most 2: exists iff (2,0)-sparse.
    AtMost2,
    /// One loop at the root; every vertex reaches the root: iff (2,1)-tight.
    Rooted1(usize),
    /// Two loops at the root; two edge-disjoint paths to the root from
    /// every vertex: iff (2,2)-tight.
    Rooted2(usize),
}

fn orientation_from_game(g: &PlaneGraph, game: &PebbleGame) -> Orientation {
    let source_is_u = (0..g.edge_count())
        .map(|e| game.edge_source(e).unwrap() == g.endpoints(e).0)
        .collect();
    Orientation { source_is_u }
}

pub fn two_orientation(g: &PlaneGraph, variant: OrientationVariant) -> Option<RootedOrientation> {
    match variant {
        OrientationVariant::Exact2 => {
            if !is_tight(g, 0) {
                return None;
            }
            let mut game = PebbleGame::new(g.vertex_count(), g.edge_count(), 0);
            let rejected = game.play(g.edges());
            assert!(rejected.is_empty());
            let o = orientation_from_game(g, &game);
            debug_assert!(o.out_degrees(g).iter().all(|&d| d == 2));
            Some(RootedOrientation { orientation: o, root: 0, loops_at_root: 0 })
        }
        OrientationVariant::AtMost2 => {
            if !is_sparse(g, 0) {
                return None;
            }
            let mut game = PebbleGame::new(g.vertex_count(), g.edge_count(), 0);
            let rejected = game.play(g.edges());
            assert!(rejected.is_empty());
            let o = orientation_from_game(g, &game);
            debug_assert!(o.out_degrees(g).iter().all(|&d| d <= 2));
            Some(RootedOrientation { orientation: o, root: 0, loops_at_root: 0 })
        }
        OrientationVariant::Rooted1(v) => {
            if !is_tight(g, 1) {
                return None;
            }
            let mut game = PebbleGame::new(g.vertex_count(), g.edge_count(), 1);
            let rejected = game.play(g.edges());
            assert!(rejected.is_empty());
            let ok = game.gather(v, v, 1);
            assert!(ok, "the final pebble must be movable to any root");
            let o = orientation_from_game(g, &game);
            assert!(all_reach(g, &o, v), "every vertex must reach the root");
            Some(RootedOrientation { orientation: o, root: v, loops_at_root: 1 })
        }
        OrientationVariant::Rooted2(v) => {
            if !is_tight(g, 2) {
                return None;
            }
            let mut game = PebbleGame::new(g.vertex_count(), g.edge_count(), 2);
            let rejected = game.play(g.edges());
            assert!(rejected.is_empty());
            let ok = game.gather(v, v, 2);
            assert!(ok, "both pebbles must be movable to any root");
            let o = orientation_from_game(g, &game);
            for u in 0..g.vertex_count() {
                if u != v {
                    assert!(
                        edge_disjoint_paths(g, &o, u, v) >= 2,
                        "vertex {} needs two edge-disjoint paths to the root",
                        u
                    );
                }
            }
            Some(RootedOrientation { orientation: o, root: v, loops_at_root: 2 })
        }
    }
}

/// Every vertex has a directed path to `root`.
pub fn all_reach(g: &PlaneGraph, o: &Orientation, root: usize) -> bool {
    // reverse reachability from the root
    let n = g.vertex_count();
    let mut radj = vec![Vec::new(); n];
    for e in 0..g.edge_count() {
        radj[o.target(g, e)].push(o.source(g, e));
    }
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        for &w in &radj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Maximum number of edge-disjoint directed paths from `s` to `t` (capped
/// at 2, which is all the callers need).
pub fn edge_disjoint_paths(g: &PlaneGraph, o: &Orientation, s: usize, t: usize) -> usize {
    let m = g.edge_count();
    let mut used_forward = vec![false; m];
    let mut used_backward = vec![false; m];
    let mut flow = 0;
    for _ in 0..2 {
        // BFS over the residual graph
        let n = g.vertex_count();
        let mut parent: Vec<Option<(usize, usize, bool)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(s);
        'bfs: while let Some(v) = queue.pop_front() {
            for e in 0..m {
                let (a, b) = (o.source(g, e), o.target(g, e));
                if a == b {
                    continue;
                }
                // forward residual
                if a == v && !used_forward[e] && !seen[b] {
                    seen[b] = true;
                    parent[b] = Some((v, e, true));
                    if b == t {
                        break 'bfs;
                    }
                    queue.push_back(b);
                }
                // backward residual (cancel used flow)
                if b == v && used_forward[e] && !used_backward[e] && !seen[a] {
                    seen[a] = true;
                    parent[a] = Some((v, e, false));
                    if a == t {
                        break 'bfs;
                    }
                    queue.push_back(a);
                }
            }
        }
        if !seen[t] {
            break;
        }
        let mut v = t;
        while v != s {
            let (p, e, fwd) = parent[v].unwrap();
            if fwd {
                used_forward[e] = true;
            } else {
                used_forward[e] = false;
                used_backward[e] = false;
            }
            v = p;
        }
        flow += 1;
    }
    flow
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn octahedron_exact2() {
        let g = fixtures::octahedron();
        let r = two_orientation(&g, OrientationVariant::Exact2).unwrap();
        assert!(r.orientation.out_degrees(&g).iter().all(|&d| d == 2));
    }

    #[test]
    fn tree_has_no_exact2() {
        let g = fixtures::path(4);
        assert!(two_orientation(&g, OrientationVariant::Exact2).is_none());
    }

    #[test]
    fn sparse_graphs_get_atmost2() {
        for g in [fixtures::path(5), fixtures::k4(), fixtures::cycle(6)] {
            let r = two_orientation(&g, OrientationVariant::AtMost2).unwrap();
            assert!(r.orientation.out_degrees(&g).iter().all(|&d| d <= 2));
        }
    }

    #[test]
    fn rooted1_on_21_tight() {
        // triple edge between two vertices is (2,1)-tight
        let g = fixtures::parallel_edges(3);
        for v in 0..2 {
            let r = two_orientation(&g, OrientationVariant::Rooted1(v)).unwrap();
            assert_eq!(r.loops_at_root, 1);
            assert!(all_reach(&g, &r.orientation, v));
        }
    }

    #[test]
    fn rooted2_on_k4_every_root() {
        let g = fixtures::k4();
        for v in 0..4 {
            let r = two_orientation(&g, OrientationVariant::Rooted2(v)).unwrap();
            assert_eq!(r.loops_at_root, 2);
            for u in 0..4 {
                if u != v {
                    assert!(edge_disjoint_paths(&g, &r.orientation, u, v) >= 2);
                }
            }
        }
    }

    #[test]
    fn rooted_refuses_wrong_class() {
        assert!(two_orientation(&fixtures::k4(), OrientationVariant::Rooted1(0)).is_none());
        assert!(two_orientation(&fixtures::triangle(), OrientationVariant::Rooted2(0)).is_none());
    }
}
