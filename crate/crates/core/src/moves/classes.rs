//! Class-membership predicates for the generated graph classes.

use super::types::GraphClass;
use crate::graph::PlaneGraph;
use crate::sparsity::{is_tight, PebbleGame};

/// co-Laman: |E| = 2|V| - 1 and every proper subset W has at most
/// 2|W| - 2 induced edges. Checked with the (2,2)-pebble game: exactly one
/// edge is rejected and its blocking set is the whole vertex set.
pub fn is_co_laman(g: &PlaneGraph) -> bool {
    let n = g.vertex_count();
    if g.edge_count() != 2 * n - 1 {
        return false;
    }
    let mut game = PebbleGame::new(n, g.edge_count(), 2);
    let rejected = game.play(g.edges());
    if rejected.len() != 1 {
        return false;
    }
    let (u, v) = g.endpoints(rejected[0]);
    game.gather(u, v, 3);
    let have = game.pebbles(u) + if u == v { 0 } else { game.pebbles(v) };
    if have != 2 {
        return false;
    }
    game.reach(&if u == v { vec![u] } else { vec![u, v] }).len() == n
}

/// An edge whose removal leaves a (2,3)-tight graph, with both endpoints of
/// degree at least 2.
pub fn laman_plus_one_witness(g: &PlaneGraph) -> Option<usize> {
    if g.edge_count() != 2 * g.vertex_count() - 2 || !g.is_simple() {
        return None;
    }
    (0..g.edge_count()).find(|&e| {
        let (u, v) = g.endpoints(e);
        g.degree(u) >= 2
            && g.degree(v) >= 2
            && g.delete_edge(e).map(|s| is_tight(&s.graph, 3)).unwrap_or(false)
    })
}

pub fn class_member(g: &PlaneGraph, class: GraphClass) -> bool {
    match class {
        GraphClass::Laman => g.is_simple() && is_tight(g, 3),
        GraphClass::CoLaman => is_co_laman(g),
        GraphClass::Tight22 => g.is_simple() && is_tight(g, 2),
        GraphClass::LamanPlusOne => laman_plus_one_witness(g).is_some(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn three_parallel_edges_is_co_laman() {
        assert!(is_co_laman(&fixtures::parallel_edges(3)));
    }

    #[test]
    fn triple_plus_isolated_path_is_not() {
        assert!(!is_co_laman(&fixtures::cycle(4)));
        assert!(!is_co_laman(&fixtures::parallel_edges(2)));
    }

    #[test]
    fn k4_is_laman_plus_one() {
        let g = fixtures::k4();
        assert!(laman_plus_one_witness(&g).is_some());
        assert!(class_member(&g, GraphClass::Tight22));
    }

    #[test]
    fn dual_of_laman_is_co_laman() {
        let g = fixtures::good_orientation_counterexample();
        assert!(class_member(&g, GraphClass::Laman));
        let d = g.dual().unwrap();
        assert!(is_co_laman(&d));
    }
}
