//! Augmentation of plane (2,k)-sparse graphs to plane (2,k)-tight
//! supergraphs on the same vertex set, new edges inserted inside faces.

use super::pebble::{is_sparse, PebbleGame};
use super::trees::spanning_tree_decomposition;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, PlaneGraph};

/// Augment to a (2,k)-tight plane supergraph. For k = 0 the simple-graph
/// procedure requires a simple input with at least 6 vertices; set
/// `allow_multi` to fall back to edge doubling instead.
pub fn augment_to_tight(g: &PlaneGraph, k: i32) -> Result<PlaneGraph> {
    augment_to_tight_with(g, k, false)
}

pub fn augment_to_tight_with(g: &PlaneGraph, k: i32, allow_multi: bool) -> Result<PlaneGraph> {
    if !(0..=4).contains(&k) {
        return Err(Error::Unsupported(format!("augmentation for k = {}", k)));
    }
    if !is_sparse(g, k) {
        return Err(Error::NotSparse { k });
    }
    let target = 2 * g.vertex_count() as i64 - k as i64;
    if g.edge_count() as i64 == target {
        return Ok(g.clone());
    }
    match k {
        0 => {
            if allow_multi || !g.is_simple() || g.vertex_count() < 6 {
                augment_k0_multi(g)
            } else {
                augment_k0_simple(g)
            }
        }
        1 => augment_k1(g),
        2 => augment_k2(g),
        3 => augment_k3(g),
        4 => augment_k4(g),
        _ => unreachable!(),
    }
}

/// All (face, corner i, corner j) chord candidates in deterministic order.
fn chord_candidates(g: &PlaneGraph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for f in g.faces() {
        let len = f.boundary.len();
        for i in 0..len {
            for j in i + 1..len {
                out.push((f.id, i, j));
            }
        }
    }
    out
}

fn corner_vertices(g: &PlaneGraph, f: usize, i: usize, j: usize) -> (usize, usize) {
    let b = &g.faces()[f].boundary;
    (g.tail(b[i]), g.tail(b[j]))
}

/// Greedy pebble-checked face-chord insertion for k in {0, 3}.
fn augment_by_chords(g: &PlaneGraph, k: usize, simple_only: bool) -> Result<PlaneGraph> {
    let mut cur = g.clone();
    let target = 2 * cur.vertex_count() - k;
    while cur.edge_count() < target {
        let mut game = PebbleGame::new(cur.vertex_count(), cur.edge_count() + 1, k);
        let rejected = game.play(cur.edges());
        assert!(rejected.is_empty());
        let mut inserted = false;
        'scan: for (f, i, j) in chord_candidates(&cur) {
            let (u, v) = corner_vertices(&cur, f, i, j);
            if u == v {
                continue;
            }
            if simple_only && cur.has_edge(u, v) {
                continue;
            }
            let mut trial = game.clone();
            if trial.insert_edge(cur.edge_count(), u, v) {
                cur = cur.insert_chord(f, i, j)?.graph;
                inserted = true;
                break 'scan;
            }
        }
        if !inserted {
            return Err(Error::Stall(format!(
                "no admissible face chord at {} of {} edges (k={})",
                cur.edge_count(),
                target,
                k
            )));
        }
    }
    Ok(cur)
}

fn augment_k0_simple(g: &PlaneGraph) -> Result<PlaneGraph> {
    augment_by_chords(g, 0, true)
}

/// Repeatedly double an edge at a vertex of out-degree < 2 in a
/// 2^- -orientation.
fn augment_k0_multi(g: &PlaneGraph) -> Result<PlaneGraph> {
    let mut cur = g.clone();
    let target = 2 * cur.vertex_count();
    while cur.edge_count() < target {
        let mut game = PebbleGame::new(cur.vertex_count(), cur.edge_count(), 0);
        let rejected = game.play(cur.edges());
        assert!(rejected.is_empty());
        let v = (0..cur.vertex_count())
            .find(|&v| game.out_degree(v) < 2)
            .expect("deficit vertex exists while not tight");
        let d = *cur
            .rotation(v)
            .first()
            .ok_or_else(|| Error::Stall("isolated vertex cannot be made (2,0)-tight simply".into()))?;
        let e = d >> 1;
        cur = cur.double_edge(e, d)?.graph;
    }
    Ok(cur)
}

/// Double pebble-feasible edges until (2,1)-tight.
fn augment_k1(g: &PlaneGraph) -> Result<PlaneGraph> {
    let mut cur = g.clone();
    let target = 2 * cur.vertex_count() - 1;
    while cur.edge_count() < target {
        let mut game = PebbleGame::new(cur.vertex_count(), cur.edge_count() + 1, 1);
        let rejected = game.play(cur.edges());
        assert!(rejected.is_empty());
        let mut placed = None;
        for e in 0..cur.edge_count() {
            if cur.is_loop(e) {
                continue;
            }
            let (u, v) = cur.endpoints(e);
            let mut trial = game.clone();
            if trial.insert_edge(cur.edge_count(), u, v) {
                placed = Some(e);
                break;
            }
        }
        match placed {
            Some(e) => {
                cur = cur.double_edge(e, 2 * e)?.graph;
            }
            None => {
                return Err(Error::Stall("no doublable edge found for k = 1".into()));
            }
        }
    }
    Ok(cur)
}

/// Merge forest components across faces until both forests are spanning
/// trees.
fn augment_k2(g: &PlaneGraph) -> Result<PlaneGraph> {
    let mut cur = g.clone();
    let target = 2 * cur.vertex_count() - 2;
    while cur.edge_count() < target {
        let forests = two_forest_partition(&cur);
        let comp = |forest: &[EdgeId]| -> Vec<usize> {
            let mut dsu: Vec<usize> = (0..cur.vertex_count()).collect();
            fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
                if dsu[x] != x {
                    let r = find(dsu, dsu[x]);
                    dsu[x] = r;
                }
                dsu[x]
            }
            for &e in forest {
                let (a, b) = cur.endpoints(e);
                let (ra, rb) = (find(&mut dsu, a), find(&mut dsu, b));
                if ra != rb {
                    dsu[ra] = rb;
                }
            }
            (0..cur.vertex_count()).map(|v| find(&mut dsu, v)).collect()
        };
        let comps = [comp(&forests.0), comp(&forests.1)];
        let mut chosen = None;
        // prefer chords that keep the graph simple
        for simple_only in [true, false] {
            for (f, i, j) in chord_candidates(&cur) {
                let (u, v) = corner_vertices(&cur, f, i, j);
                if u == v {
                    continue;
                }
                if simple_only && cur.has_edge(u, v) {
                    continue;
                }
                if !simple_only && cur.multiplicity(u, v) >= 2 {
                    continue;
                }
                if comps[0][u] != comps[0][v] || comps[1][u] != comps[1][v] {
                    chosen = Some((f, i, j));
                    break;
                }
            }
            if chosen.is_some() {
                break;
            }
        }
        match chosen {
            Some((f, i, j)) => {
                cur = cur.insert_chord(f, i, j)?.graph;
            }
            None => return Err(Error::Stall("no forest-merging face chord found".into())),
        }
    }
    debug_assert!(spanning_tree_decomposition(&cur).is_some());
    Ok(cur)
}

/// Partition the edges of a (2,2)-sparse graph into two forests (matroid
/// union, same machinery as the tight decomposition but without the
/// spanning requirement).
fn two_forest_partition(g: &PlaneGraph) -> (Vec<EdgeId>, Vec<EdgeId>) {
    // A sparse graph extends to a tight one, so greedy placement with
    // evictions succeeds on all edges.
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut color: Vec<Option<usize>> = vec![None; m];
    for e in 0..m {
        super::trees::place(g, n, &mut color, e);
    }
    (
        (0..m).filter(|&e| color[e] == Some(0)).collect(),
        (0..m).filter(|&e| color[e] == Some(1)).collect(),
    )
}

fn augment_k3(g: &PlaneGraph) -> Result<PlaneGraph> {
    augment_by_chords(g, 3, true)
}

fn augment_k4(g: &PlaneGraph) -> Result<PlaneGraph> {
    let colors = g.bipartition().ok_or(Error::NotBipartite)?;
    let mut cur = g.clone();
    let mut colors = colors;
    let target = (2 * cur.vertex_count()).saturating_sub(4);
    if cur.edge_count() > target {
        return Err(Error::Stall("graph too small to quadrangulate".into()));
    }
    while cur.edge_count() < target {
        let mut chosen = None;
        'scan: for f in cur.faces() {
            if f.boundary.len() < 6 {
                continue;
            }
            for i in 0..f.boundary.len() {
                for j in i + 1..f.boundary.len() {
                    let u = cur.tail(f.boundary[i]);
                    let v = cur.tail(f.boundary[j]);
                    if u == v || colors[u] == colors[v] || cur.has_edge(u, v) {
                        continue;
                    }
                    chosen = Some((f.id, i, j));
                    break 'scan;
                }
            }
        }
        match chosen {
            Some((f, i, j)) => {
                cur = cur.insert_chord(f, i, j)?.graph;
                colors = cur.bipartition().expect("chords preserve bipartiteness");
            }
            None => {
                return Err(Error::Stall("no properly colored diagonal available".into()));
            }
        }
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::super::pebble::is_tight;
    use super::*;
    use crate::fixtures;

    #[test]
    fn p3_augments_to_22_tight() {
        let g = fixtures::path(3);
        let t = augment_to_tight(&g, 2).unwrap();
        assert_eq!(t.edge_count(), 4);
        assert!(is_tight(&t, 2));
        // the input survives as a subgraph with its edge ids
        for e in 0..g.edge_count() {
            assert_eq!(g.endpoints(e), t.endpoints(e));
        }
    }

    #[test]
    fn c6_augments_to_quadrangulation() {
        let g = fixtures::cycle(6);
        let t = augment_to_tight(&g, 4).unwrap();
        assert_eq!(t.edge_count(), 8);
        assert!(is_tight(&t, 4));
        assert!(t.faces().iter().all(|f| f.len() == 4));
    }

    #[test]
    fn c5_with_k4_is_rejected() {
        let g = fixtures::cycle(5);
        assert!(matches!(augment_to_tight(&g, 4), Err(Error::NotBipartite)));
    }

    #[test]
    fn idempotent_on_tight_inputs() {
        let g = fixtures::k4();
        let t = augment_to_tight(&g, 2).unwrap();
        assert_eq!(t.edge_count(), g.edge_count());
    }

    #[test]
    fn k1_augmentation_doubles() {
        let g = fixtures::cycle(4);
        let t = augment_to_tight(&g, 1).unwrap();
        assert!(is_tight(&t, 1));
    }

    #[test]
    fn k0_multi_augmentation() {
        let g = fixtures::path(3);
        let t = augment_to_tight_with(&g, 0, true).unwrap();
        assert!(is_tight(&t, 0));
    }

    #[test]
    fn k0_simple_augmentation() {
        let g = fixtures::cycle(7);
        let t = augment_to_tight(&g, 0).unwrap();
        assert!(is_tight(&t, 0));
        assert!(t.is_simple());
    }

    #[test]
    fn k3_augmentation() {
        let g = fixtures::path(5);
        let t = augment_to_tight(&g, 3).unwrap();
        assert!(is_tight(&t, 3));
        assert!(t.is_simple());
    }

    #[test]
    fn not_sparse_rejected() {
        let mut g = fixtures::triangle();
        for e in 0..3 {
            g = g.double_edge(e, 2 * e).unwrap().graph;
        }
        assert!(matches!(augment_to_tight(&g, 2), Err(Error::NotSparse { k: 2 })));
    }
}
