//! Seeded random generators: move sequences per class, plane-graph growth
//! with degree/sparsity caps, and quadrangulation growth.

use super::apply::apply_move;
use super::classes::class_member;
use super::types::{Base, GraphClass, Move, MoveSequence};
use crate::graph::PlaneGraph;
use crate::sparsity::is_sparse;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy)]
pub struct GrowthConfig {
    pub target_vertices: usize,
    pub max_degree: Option<usize>,
    /// keep the graph (2,k)-sparse while growing
    pub sparse_k: Option<i32>,
    /// chance of adding a chord rather than a degree-2 vertex
    pub chord_bias: f64,
}

fn pick<R: Rng>(rng: &mut R, n: usize) -> usize {
    rng.random_range(0..n)
}

/// Random valid move sequence of the class, generated by rejection
/// sampling over move parameters (each intermediate stays in class).
pub fn random_sequence(class: GraphClass, len: usize, rng: &mut ChaCha8Rng) -> MoveSequence {
    let base = match class {
        GraphClass::Laman => Base::Triangle,
        GraphClass::CoLaman => Base::ThreeParallelEdges,
        GraphClass::Tight22 => Base::IsolatedVertex,
        GraphClass::LamanPlusOne => Base::K4,
    };
    let mut seq = MoveSequence { base, moves: Vec::new() };
    let mut g = base.graph();
    for step in 0..len {
        let mut placed = false;
        for _attempt in 0..60 {
            let candidate = match class {
                GraphClass::Laman => random_laman_move(&g, rng),
                GraphClass::CoLaman => random_colaman_move(&g, rng),
                GraphClass::Tight22 => {
                    if step == 0 {
                        Some(Move::V4 { u: 0, f0: 0, f1: 0, f2: 0, c0: None, c1: None, c2: None })
                    } else {
                        random_tight22_move(&g, rng)
                    }
                }
                GraphClass::LamanPlusOne => random_e3_move(&g, rng),
            };
            let Some(m) = candidate else { continue };
            let Ok(out) = apply_move(&g, &m) else { continue };
            if !class_member(&out.graph, class) {
                continue;
            }
            g = out.graph;
            seq.moves.push(m);
            placed = true;
            break;
        }
        assert!(placed, "random {} move generation stalled", class.name());
    }
    seq
}

fn random_h1(g: &PlaneGraph, rng: &mut ChaCha8Rng) -> Option<Move> {
    let f = pick(rng, g.faces().len());
    let b = &g.faces()[f].boundary;
    if b.len() < 2 {
        return None;
    }
    let i = pick(rng, b.len());
    let j = pick(rng, b.len());
    let (u, v) = (g.tail(b[i]), g.tail(b[j]));
    if u == v {
        return None;
    }
    Some(Move::H1 { f, u, v, cu: Some(i), cv: Some(j) })
}

fn random_h2(g: &PlaneGraph, rng: &mut ChaCha8Rng) -> Option<Move> {
    let f = pick(rng, g.faces().len());
    let b = &g.faces()[f].boundary;
    if b.len() < 3 {
        return None;
    }
    let d = b[pick(rng, b.len())];
    let e = crate::graph::dart_edge(d);
    if g.face_of(crate::graph::twin(d)) == f {
        return None;
    }
    let (u, v) = (g.tail(d), g.head(d));
    let k = pick(rng, b.len());
    let w = g.tail(b[k]);
    if w == u || w == v {
        return None;
    }
    Some(Move::H2 { f, e, w, cw: Some(k) })
}

fn random_laman_move(g: &PlaneGraph, rng: &mut ChaCha8Rng) -> Option<Move> {
    if rng.random_bool(0.6) {
        random_h1(g, rng)
    } else {
        random_h2(g, rng)
    }
}

fn random_e3_move(g: &PlaneGraph, rng: &mut ChaCha8Rng) -> Option<Move> {
    if g.edge_count() == 0 {
        return None;
    }
    let e = pick(rng, g.edge_count());
    if g.is_loop(e) {
        return None;
    }
    let (a, b) = g.endpoints(e);
    let v = if rng.random_bool(0.5) { a } else { b };
    let gap = pick(rng, g.degree(v));
    let f = g.face_of(g.rotation(v)[gap]);
    Some(Move::E3 { e, v, f, c: Some(gap) })
}

fn random_v4(g: &PlaneGraph, rng: &mut ChaCha8Rng) -> Option<Move> {
    let u = pick(rng, g.vertex_count());
    let deg = g.degree(u);
    if deg == 0 {
        return Some(Move::V4 { u, f0: 0, f1: 0, f2: 0, c0: None, c1: None, c2: None });
    }
    let mut ps = [pick(rng, deg), pick(rng, deg), pick(rng, deg)];
    ps.sort_unstable();
    let faces =
        [g.face_of(g.rotation(u)[ps[0]]), g.face_of(g.rotation(u)[ps[1]]), g.face_of(g.rotation(u)[ps[2]])];
    Some(Move::V4 {
        u,
        f0: faces[0],
        f1: faces[1],
        f2: faces[2],
        c0: Some(ps[0]),
        c1: Some(ps[1]),
        c2: Some(ps[2]),
    })
}

fn random_tight22_move(g: &PlaneGraph, rng: &mut ChaCha8Rng) -> Option<Move> {
    if rng.random_bool(0.65) {
        random_e3_move(g, rng)
    } else {
        random_v4(g, rng)
    }
}

fn random_v22(g: &PlaneGraph, rng: &mut ChaCha8Rng) -> Option<Move> {
    let u = pick(rng, g.vertex_count());
    let deg = g.degree(u);
    if deg == 0 {
        return None;
    }
    let mut ps = [pick(rng, deg), pick(rng, deg)];
    ps.sort_unstable();
    let faces = [g.face_of(g.rotation(u)[ps[0]]), g.face_of(g.rotation(u)[ps[1]])];
    Some(Move::V22 { u, f0: faces[0], f1: faces[1], c0: Some(ps[0]), c1: Some(ps[1]) })
}

fn random_colaman_move(g: &PlaneGraph, rng: &mut ChaCha8Rng) -> Option<Move> {
    if rng.random_bool(0.5) {
        random_e3_move(g, rng)
    } else {
        random_v22(g, rng)
    }
}

/// Random connected simple plane graph grown from a triangle by degree-2
/// vertex insertions and face chords, honoring the config's caps.
pub fn random_plane_graph(cfg: &GrowthConfig, rng: &mut ChaCha8Rng) -> PlaneGraph {
    let mut g = crate::fixtures::triangle();
    let cap = |g: &PlaneGraph, v: usize| -> bool {
        cfg.max_degree.map_or(true, |d| g.degree(v) < d)
    };
    let mut stalls = 0;
    while g.vertex_count() < cfg.target_vertices && stalls < 400 {
        let chord = rng.random_bool(cfg.chord_bias);
        let f = pick(rng, g.faces().len());
        let b = g.faces()[f].boundary.clone();
        if b.len() < 2 {
            stalls += 1;
            continue;
        }
        let i = pick(rng, b.len());
        let j = pick(rng, b.len());
        let (u, v) = (g.tail(b[i]), g.tail(b[j]));
        if u == v || !cap(&g, u) || !cap(&g, v) {
            stalls += 1;
            continue;
        }
        let trial = if chord {
            if g.has_edge(u, v) {
                stalls += 1;
                continue;
            }
            g.insert_chord(f, i, j)
        } else {
            g.insert_vertex2(f, i, j)
        };
        let Ok(s) = trial else {
            stalls += 1;
            continue;
        };
        if let Some(k) = cfg.sparse_k {
            if !is_sparse(&s.graph, k) {
                stalls += 1;
                continue;
            }
        }
        g = s.graph;
    }
    g
}

/// Random plane quadrangulation: grow from a 4-cycle by inserting degree-2
/// vertices across opposite corners of a quadrilateral face.
pub fn random_quadrangulation(extra_vertices: usize, rng: &mut ChaCha8Rng) -> PlaneGraph {
    let mut g = crate::fixtures::cycle(4);
    for _ in 0..extra_vertices {
        let f = pick(rng, g.faces().len());
        let i = pick(rng, 4);
        let s = g.insert_vertex2(f, i, (i + 2) % 4).unwrap();
        g = s.graph;
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sparsity::is_tight;
    use rand::SeedableRng;

    #[test]
    fn random_sequences_stay_in_class() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for class in [GraphClass::Laman, GraphClass::Tight22, GraphClass::CoLaman] {
            for len in [1, 4, 8] {
                let seq = random_sequence(class, len, &mut rng);
                let g = seq.replay().unwrap();
                assert!(class_member(&g, class), "{} len {}", class.name(), len);
            }
        }
    }

    #[test]
    fn quadrangulations_are_24_tight() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for extra in [0, 3, 7] {
            let g = random_quadrangulation(extra, &mut rng);
            assert!(is_tight(&g, 4));
            assert!(g.faces().iter().all(|f| f.len() == 4));
        }
    }

    #[test]
    fn growth_respects_degree_cap() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let cfg = GrowthConfig {
            target_vertices: 12,
            max_degree: Some(4),
            sparse_k: None,
            chord_bias: 0.4,
        };
        for _ in 0..5 {
            let g = random_plane_graph(&cfg, &mut rng);
            assert!(g.max_degree() <= 4);
            assert!(g.is_simple());
        }
    }

    #[test]
    fn growth_can_keep_20_sparse() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let cfg = GrowthConfig {
            target_vertices: 10,
            max_degree: None,
            sparse_k: Some(0),
            chord_bias: 0.5,
        };
        for _ in 0..5 {
            let g = random_plane_graph(&cfg, &mut rng);
            assert!(is_sparse(&g, 0));
        }
    }
}
