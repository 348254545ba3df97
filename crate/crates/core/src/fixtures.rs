//! Named plane-graph fixtures and small generators used across the crate.

use crate::error::{Error, Result};
use crate::graph::{Dart, PlaneGraph, VertexId};

/// Isolated vertex.
pub fn single_vertex() -> PlaneGraph {
    PlaneGraph::new(1, vec![], vec![vec![]], 0).unwrap()
}

/// Triangle with vertices 0,1,2 placed counterclockwise; outer face is the
/// clockwise walk.
pub fn triangle() -> PlaneGraph {
    // e0=(0,1) e1=(1,2) e2=(2,0)
    PlaneGraph::new(
        3,
        vec![(0, 1), (1, 2), (2, 0)],
        vec![vec![0, 5], vec![2, 1], vec![4, 3]],
        1,
    )
    .unwrap()
}

/// Cycle on `n >= 3` vertices, convex counterclockwise placement.
pub fn cycle(n: usize) -> PlaneGraph {
    assert!(n >= 3);
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let rot: Vec<Vec<Dart>> = (0..n)
        .map(|i| {
            let prev = (i + n - 1) % n;
            vec![2 * i, 2 * prev + 1]
        })
        .collect();
    PlaneGraph::new(n, edges, rot, 1).unwrap()
}

/// Path on `n >= 2` vertices.
pub fn path(n: usize) -> PlaneGraph {
    assert!(n >= 2);
    let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    let mut rot: Vec<Vec<Dart>> = Vec::with_capacity(n);
    rot.push(vec![0]);
    for i in 1..n - 1 {
        rot.push(vec![2 * (i - 1) + 1, 2 * i]);
    }
    rot.push(vec![2 * (n - 2) + 1]);
    PlaneGraph::new(n, edges, rot, 0).unwrap()
}

/// Star `K_{1,k}` with the hub at vertex 0.
pub fn star(k: usize) -> PlaneGraph {
    assert!(k >= 1);
    let edges: Vec<(usize, usize)> = (0..k).map(|i| (0, i + 1)).collect();
    let mut rot: Vec<Vec<Dart>> = vec![(0..k).map(|i| 2 * i).collect()];
    for i in 0..k {
        rot.push(vec![2 * i + 1]);
    }
    PlaneGraph::new(k + 1, edges, rot, 0).unwrap()
}

/// Two vertices joined by `m >= 1` nested parallel edges.
pub fn parallel_edges(m: usize) -> PlaneGraph {
    assert!(m >= 1);
    let edges: Vec<(usize, usize)> = (0..m).map(|_| (0, 1)).collect();
    let rot0: Vec<Dart> = (0..m).rev().map(|e| 2 * e).collect();
    let rot1: Vec<Dart> = (0..m).map(|e| 2 * e + 1).collect();
    PlaneGraph::new(2, edges, vec![rot0, rot1], 0).unwrap()
}

/// Plane K4: outer triangle 0,1,2 with vertex 3 inside.
pub fn k4() -> PlaneGraph {
    // e0=(0,1) e1=(1,2) e2=(2,0) e3=(0,3) e4=(1,3) e5=(2,3)
    PlaneGraph::new(
        4,
        vec![(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)],
        vec![
            vec![0, 6, 5],
            vec![2, 8, 1],
            vec![4, 10, 3],
            vec![11, 7, 9],
        ],
        1,
    )
    .unwrap()
}

/// Plane cube graph: outer square 0..3, inner square 4..7, spokes i-(i+4).
pub fn cube() -> PlaneGraph {
    let edges = vec![
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 0),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 4),
        (0, 4),
        (1, 5),
        (2, 6),
        (3, 7),
    ];
    let rot = vec![
        vec![0, 16, 7],
        vec![2, 18, 1],
        vec![4, 20, 3],
        vec![5, 6, 22],
        vec![8, 15, 17],
        vec![10, 9, 19],
        vec![21, 12, 11],
        vec![13, 23, 14],
    ];
    PlaneGraph::new(8, edges, rot, 1).unwrap()
}

/// Plane octahedron: outer triangle 0,1,2, inner triangle 3,4,5 with
/// 3 opposite 0, 4 opposite 1, 5 opposite 2.
pub fn octahedron() -> PlaneGraph {
    let edges = vec![
        (0, 1),
        (1, 2),
        (2, 0),
        (3, 4),
        (4, 5),
        (5, 3),
        (0, 4),
        (0, 5),
        (1, 3),
        (1, 5),
        (2, 3),
        (2, 4),
    ];
    let rot = vec![
        vec![0, 14, 12, 5],
        vec![2, 16, 18, 1],
        vec![4, 22, 20, 3],
        vec![6, 11, 17, 21],
        vec![13, 8, 7, 23],
        vec![9, 15, 19, 10],
    ];
    PlaneGraph::new(6, edges, rot, 1).unwrap()
}

/// Each edge of the cycle doubled: a 4-regular plane multigraph where all
/// inner copies run on the disk side.
pub fn doubled_cycle(n: usize) -> PlaneGraph {
    let mut g = cycle(n);
    for e in 0..n {
        g = g.double_edge(e, 2 * e).unwrap().graph;
    }
    g
}

fn find_corner(g: &PlaneGraph, face: usize, v: VertexId) -> Option<usize> {
    g.faces()[face]
        .boundary
        .iter()
        .position(|&d| g.tail(d) == v)
}

/// Face id whose walk visits both vertices (smallest id first).
pub fn face_with(g: &PlaneGraph, u: VertexId, v: VertexId) -> Option<(usize, usize, usize)> {
    for f in g.faces() {
        let iu = f.boundary.iter().position(|&d| g.tail(d) == u);
        let iv = f.boundary.iter().position(|&d| g.tail(d) == v);
        if let (Some(i), Some(j)) = (iu, iv) {
            if i != j {
                return Some((f.id, i, j));
            }
        }
    }
    None
}

/// Insert a degree-2 vertex whose edges land in the face corners that
/// immediately follow darts `da` and `db` in their rotations. Both corners
/// must lie on the same face.
fn attach_at_gaps(g: &PlaneGraph, da: Dart, db: Dart) -> PlaneGraph {
    let f = g.face_of(da);
    assert_eq!(f, g.face_of(db), "gap darts on different faces");
    let b = &g.faces()[f].boundary;
    let i = b.iter().position(|&d| d == da).unwrap();
    let j = b.iter().position(|&d| d == db).unwrap();
    g.insert_vertex2(f, i, j).unwrap().graph
}

/// A plane Laman graph with no good 2^- -orientation.
///
/// Core: K4 minus an edge on vertices 0..4 (five core edges, so in any
/// 2^- -orientation some core vertex emits two of them); every gap between
/// two core edges in a core vertex's rotation is plugged by an attached
/// degree-2 vertex, so that vertex's two outgoing edges are never
/// consecutive.
pub fn good_orientation_counterexample() -> PlaneGraph {
    let t = triangle();
    // Vertex 3 inside the triangle, adjacent to 0 and 1: core = K4 - (2,3).
    // Core darts afterwards: 0-1: 0/1, 1-2: 2/3, 2-0: 4/5, 3-0: 6/7, 3-1: 8/9.
    let g = attach_at_gaps(&t, 0, 2); // 3
    // Region (3,0,1): plug the gap after dart 0 (at 0) and after 6 (at 3),
    // then the gap after 9 (at 1) paired with the new vertex's corner.
    let g = attach_at_gaps(&g, 0, 6); // 4; edges (4,0)=e5, (4,3)=e6
    let g = attach_at_gaps(&g, 9, 10); // 5; anchors at 1 and 4
    // Region (3,1,2,0): gaps after 7 (at 0), 8 (at 3), then 2 (at 1), 4 (at 2).
    let g = attach_at_gaps(&g, 7, 8); // 6
    let g = attach_at_gaps(&g, 2, 4); // 7
    // Outer face: gaps after 5 (at 0), 3 (at 2), then 1 (at 1) with vertex 8.
    let g = attach_at_gaps(&g, 5, 3); // 8; edges (8,0)=e13, (8,2)=e14
    attach_at_gaps(&g, 1, 28) // 9; anchors at 1 and 8
}

/// The plane (2,0)-tight multigraph that admits no contact representation:
/// a doubled edge (u,v) with one tight component outside and one inside,
/// each hooked to the doubled pair by a single edge.
pub fn cca_counterexample() -> PlaneGraph {
    let g = parallel_edges(2); // u=0, v=1
    // pendant a1=2 on u in the outer face, then b1=3 on a1, then make
    // (a1,b1) a quadruple edge: a (2,0)-tight blob outside.
    let outer = g.outer_face().id;
    let cu = find_corner(&g, outer, 0).unwrap();
    let g = g.insert_pendant(outer, cu).unwrap().graph; // 2
    let f = g
        .faces()
        .iter()
        .find(|f| find_corner(&g, f.id, 2).is_some())
        .unwrap()
        .id;
    let c2 = find_corner(&g, f, 2).unwrap();
    let g = g.insert_pendant(f, c2).unwrap().graph; // 3, edge e=(3,2)
    let e_blob = g.edge_count() - 1;
    let g = g.double_edge(e_blob, 2 * e_blob).unwrap().graph;
    let g = g.double_edge(e_blob, 2 * e_blob).unwrap().graph;
    let g = g.double_edge(e_blob, 2 * e_blob).unwrap().graph;
    // inside lens of the original doubled pair: pendant a2=4 on v, then
    // b2=5, quadrupled.
    let lens = g
        .faces()
        .iter()
        .find(|f| {
            f.len() == 2 && f.boundary.iter().all(|&d| crate::graph::dart_edge(d) < 2)
                && !f.is_outer
        })
        .unwrap()
        .id;
    let cv = find_corner(&g, lens, 1).unwrap();
    let g = g.insert_pendant(lens, cv).unwrap().graph; // 4
    let f = g
        .faces()
        .iter()
        .find(|f| find_corner(&g, f.id, 4).is_some())
        .unwrap()
        .id;
    let c4 = find_corner(&g, f, 4).unwrap();
    let g = g.insert_pendant(f, c4).unwrap().graph; // 5
    let e_blob2 = g.edge_count() - 1;
    let g = g.double_edge(e_blob2, 2 * e_blob2).unwrap().graph;
    let g = g.double_edge(e_blob2, 2 * e_blob2).unwrap().graph;
    g.double_edge(e_blob2, 2 * e_blob2).unwrap().graph
}

/// A plane (2,k)-tight graph (k in {0,1}) whose dual contains two vertices
/// joined by `5 - ell` parallel edges, so the dual is not (2,ell)-sparse for
/// ell <= 3. Built from a cycle of order `2(5-ell)` with every other edge
/// replaced by the smallest gluable tight gadget, which amounts to tripling
/// it (and, for k=1, removing one copy in a single gadget).
pub fn dual_counterexample(k: usize, ell: i32) -> Result<PlaneGraph> {
    if k > 1 {
        return Err(Error::Unsupported(format!("k = {} out of range", k)));
    }
    if ell > 4 {
        return Err(Error::Unsupported(format!("ell = {} out of range (need ell <= 4)", ell)));
    }
    let t = (5 - ell) as usize;
    let mut g = if t == 1 { parallel_edges(2) } else { cycle(2 * t) };
    let doubled: Vec<usize> = if t == 1 {
        vec![0]
    } else {
        (0..2 * t).step_by(2).collect()
    };
    let mut first_extra = None;
    for e in doubled {
        let s1 = g.double_edge(e, 2 * e)?;
        if first_extra.is_none() {
            first_extra = Some(s1.new_edges[0]);
        }
        g = s1.graph;
        g = g.double_edge(e, 2 * e)?.graph;
    }
    if k == 1 {
        g = g.delete_edge(first_extra.unwrap())?.graph;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_validate() {
        for g in [
            single_vertex(),
            triangle(),
            cycle(5),
            path(5),
            star(3),
            parallel_edges(3),
            k4(),
            cube(),
            octahedron(),
            doubled_cycle(4),
            good_orientation_counterexample(),
            cca_counterexample(),
        ] {
            let total: usize = g.faces().iter().map(|f| f.len()).sum();
            assert_eq!(total, 2 * g.edge_count());
        }
    }

    #[test]
    fn octahedron_shape() {
        let g = octahedron();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.faces().len(), 8);
        assert!(g.faces().iter().all(|f| f.len() == 3));
        assert!((0..6).all(|v| g.degree(v) == 4));
    }

    #[test]
    fn counterexample_counts() {
        let g = good_orientation_counterexample();
        assert_eq!(g.edge_count(), 2 * g.vertex_count() - 3);
        assert!(g.is_simple());
    }

    #[test]
    fn cca_counterexample_counts() {
        let g = cca_counterexample();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 12);
    }

    #[test]
    fn dual_counterexample_multiplicity() {
        for ell in -2..=3 {
            let t = (5 - ell) as usize;
            for k in [0usize, 1] {
                let g = dual_counterexample(k, ell).unwrap();
                let d = g.dual().unwrap();
                let mut best = 0;
                for a in 0..d.vertex_count() {
                    for b in a + 1..d.vertex_count() {
                        best = best.max(d.multiplicity(a, b));
                    }
                }
                assert_eq!(best, t, "k={} ell={}", k, ell);
            }
        }
    }
}
