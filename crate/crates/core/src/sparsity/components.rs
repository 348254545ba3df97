//! Inclusion-maximal (2,k)-tight vertex sets via pebble-game closures.
//!
//! After playing the full game on a sparse graph, the minimal tight set
//! containing a seed set W (if any) is the forward-reachable closure of W
//! once all gatherable pebbles have been pulled into W: the closure has no
//! outgoing arcs, so it is tight exactly when it holds k pebbles.

use super::pebble::{is_sparse, is_tight_edges, PebbleGame};
use crate::error::{Error, Result};
use crate::graph::PlaneGraph;
use std::collections::BTreeSet;

fn played_game(g: &PlaneGraph, k: usize) -> PebbleGame {
    let mut game = PebbleGame::new(g.vertex_count(), g.edge_count(), k);
    let rejected = game.play(g.edges());
    assert!(rejected.is_empty(), "caller must ensure sparsity");
    game
}

/// Minimal tight superset of the seed, or `None` when no tight set
/// contains it.
fn closure(base: &PebbleGame, seed: &[usize], k: usize) -> Option<Vec<usize>> {
    let mut game = base.clone();
    game.gather_into_set(seed, k + 1);
    let reach = game.reach(seed);
    let pebbles: usize = reach.iter().map(|&v| game.pebbles(v) as usize).sum();
    if pebbles == k {
        Some(reach)
    } else {
        None
    }
}

/// Induced subgraph tightness over a vertex subset.
pub fn is_tight_subset(g: &PlaneGraph, set: &[usize], k: i32) -> bool {
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in set.iter().enumerate() {
        index[v] = i;
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
        .map(|&(a, b)| (index[a], index[b]))
        .collect();
    is_tight_edges(set.len(), &edges, k)
}

/// All inclusion-maximal vertex sets inducing (2,k)-tight subgraphs,
/// k in 0..=3. Sets are sorted; the list is sorted and duplicate-free.
pub fn tight_components(g: &PlaneGraph, k: i32) -> Result<Vec<Vec<usize>>> {
    if !(0..=3).contains(&k) {
        return Err(Error::Unsupported(format!(
            "tight components for k = {} are not provided",
            k
        )));
    }
    if !is_sparse(g, k) {
        return Err(Error::NotSparse { k });
    }
    let ku = k as usize;
    let n = g.vertex_count();
    let base = played_game(g, ku);

    let mut seeds: Vec<Vec<usize>> = Vec::new();
    if k == 2 {
        // single vertices are (2,2)-tight
        for v in 0..n {
            seeds.push(vec![v]);
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            seeds.push(vec![u, v]);
        }
    }

    let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
    for seed in seeds {
        let Some(mut s) = closure(&base, &seed, ku) else { continue };
        s.sort_unstable();
        // grow to a maximal tight superset
        loop {
            let mut grown = false;
            for x in 0..n {
                if s.binary_search(&x).is_ok() {
                    continue;
                }
                let mut trial = s.clone();
                trial.push(x);
                if let Some(mut bigger) = closure(&base, &trial, ku) {
                    bigger.sort_unstable();
                    s = bigger;
                    grown = true;
                    break;
                }
            }
            if !grown {
                break;
            }
        }
        out.insert(s);
    }
    // keep inclusion-maximal sets only
    let all: Vec<Vec<usize>> = out.into_iter().collect();
    let mut keep = vec![true; all.len()];
    for i in 0..all.len() {
        for j in 0..all.len() {
            if i != j && keep[i] && is_subset(&all[i], &all[j]) && all[i] != all[j] {
                keep[i] = false;
            }
        }
    }
    Ok(all
        .into_iter()
        .zip(keep)
        .filter_map(|(s, k)| if k { Some(s) } else { None })
        .collect())
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::PlaneGraph;

    #[test]
    fn laman_graph_is_its_own_component() {
        let g = fixtures::good_orientation_counterexample();
        let comps = tight_components(&g, 3).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), g.vertex_count());
    }

    #[test]
    fn two_triangles_joined_by_edge() {
        // triangles {0,1,2} and {3,4,5}, bridge 2-3
        let edges = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)];
        let rot = vec![
            vec![0, 5],
            vec![2, 1],
            vec![4, 12, 3],
            vec![6, 11, 13],
            vec![8, 7],
            vec![10, 9],
        ];
        let g = PlaneGraph::new(6, edges, rot, 1).unwrap();
        let comps = tight_components(&g, 3).unwrap();
        // the bridge pair {2,3} induces a single edge, which is itself
        // (2,3)-tight and maximal
        assert_eq!(comps, vec![vec![0, 1, 2], vec![2, 3], vec![3, 4, 5]]);
    }

    #[test]
    fn brute_force_agreement_small() {
        // compare against subset enumeration on a couple of small graphs
        for (g, k) in [
            (fixtures::cycle(5), 3),
            (fixtures::path(5), 2),
            (fixtures::k4(), 2),
            (fixtures::octahedron(), 0),
            (fixtures::cycle(4), 1),
        ] {
            let n = g.vertex_count();
            let comps = tight_components(&g, k).unwrap();
            // oracle: all maximal tight subsets by enumeration
            let mut tight_sets: Vec<Vec<usize>> = Vec::new();
            for mask in 1u32..(1 << n) {
                let set: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
                if is_tight_subset(&g, &set, k) {
                    tight_sets.push(set);
                }
            }
            let maximal: Vec<Vec<usize>> = tight_sets
                .iter()
                .filter(|s| {
                    !tight_sets
                        .iter()
                        .any(|t| t.len() > s.len() && s.iter().all(|x| t.contains(x)))
                })
                .cloned()
                .collect();
            let mut expect = maximal;
            expect.sort();
            expect.dedup();
            assert_eq!(comps, expect, "k={}", k);
        }
    }
}
