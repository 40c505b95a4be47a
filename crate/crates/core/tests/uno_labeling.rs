//! Uno labelings against a SAT encoding that knows nothing about gadgets
//! or stars.

use geography::graph::{DirectedGraph, DirectedPosition, Graph, GraphBuilder};
use geography::reductions::{gg_to_ug, label_for_uno, ReductionError};
use rand::{Rng, SeedableRng};
use varisat::{ExtendFormula, Lit, Solver, Var};

/// Decides whether cards `(color, rank)` exist such that cross-side pairs
/// are adjacent iff they share a color or a rank. Encoded as two equivalence
/// relations over vertex pairs and handed to a SAT solver.
fn labeling_exists(g: &Graph, side: &[u8]) -> bool {
    let n = g.vertex_count();
    let pair = |u: usize, v: usize| {
        let (u, v) = (u.min(v), u.max(v));
        u * n + v
    };
    let color = |u: usize, v: usize| Var::from_index(2 * pair(u, v)).positive();
    let rank = |u: usize, v: usize| Var::from_index(2 * pair(u, v) + 1).positive();
    let mut solver = Solver::new();
    for u in 0..n {
        for v in u + 1..n {
            solver.add_clause(&[!color(u, v), !rank(u, v)]);
            if side[u] != side[v] {
                if g.has_edge(u, v) {
                    solver.add_clause(&[color(u, v), rank(u, v)]);
                } else {
                    solver.add_clause(&[!color(u, v)]);
                    solver.add_clause(&[!rank(u, v)]);
                }
            }
            for w in v + 1..n {
                for rel in [&color as &dyn Fn(usize, usize) -> Lit, &rank] {
                    let (uv, vw, uw) = (rel(u, v), rel(v, w), rel(u, w));
                    solver.add_clause(&[!uv, !vw, uw]);
                    solver.add_clause(&[!uv, !uw, vw]);
                    solver.add_clause(&[!vw, !uw, uv]);
                }
            }
        }
    }
    solver.solve().expect("solver failure")
}

fn subdivided_image(n: usize, arcs: &[(usize, usize)]) -> Option<(Graph, Vec<u8>)> {
    let dp = DirectedPosition::new(DirectedGraph::from_arcs(n, arcs.iter().copied()).unwrap(), 0).unwrap();
    let (p, map) = gg_to_ug(&dp);
    let mut b = GraphBuilder::with_vertices(p.vertex_count());
    for (u, v) in p.graph().edges() {
        let hit = map.arcs.iter().any(|a| {
            let e = (u.min(v), u.max(v));
            e == (a.b.min(a.f), a.b.max(a.f)) || e == (a.f.min(a.d), a.f.max(a.d))
        });
        if !hit {
            b.add_edge(u, v);
        }
    }
    for a in &map.arcs {
        let s1 = b.add_vertex();
        let s2 = b.add_vertex();
        b.add_edge(a.b, s1);
        b.add_edge(s1, a.f);
        b.add_edge(a.f, s2);
        b.add_edge(s2, a.d);
    }
    let g = b.build().unwrap();
    let side = g.bipartition()?;
    Some((g, side))
}

#[test]
fn sat_oracle_agrees_on_small_inputs() {
    let cases: &[(usize, &[(usize, usize)])] = &[
        (2, &[(0, 1)]),
        (2, &[(0, 1), (1, 0)]),
        (3, &[(0, 1), (1, 2)]),
        (3, &[(0, 1), (2, 1)]),
        (3, &[(0, 1), (1, 0), (1, 2)]),
        (4, &[(0, 1), (1, 2), (2, 3), (3, 0)]),
        (3, &[(0, 1), (1, 0), (1, 2), (2, 1)]),
    ];
    for &(n, arcs) in cases {
        let (g, side) = subdivided_image(n, arcs).unwrap();
        let sat = labeling_exists(&g, &side);
        let dp = DirectedPosition::new(DirectedGraph::from_arcs(n, arcs.iter().copied()).unwrap(), 0).unwrap();
        let (p, map) = gg_to_ug(&dp);
        let ours = label_for_uno(&p, &map);
        assert_eq!(sat, ours.is_ok(), "{arcs:?}");
        if let Err(e) = ours {
            assert!(matches!(e, ReductionError::LabelingConflict(_)));
        }
    }
}

#[test]
fn sat_oracle_agrees_on_random_digraphs() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x7e57);
    for _ in 0..60 {
        let n = rng.gen_range(2..=4);
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v && rng.gen_bool(0.35) {
                    arcs.push((u, v));
                }
            }
        }
        let dp = DirectedPosition::new(DirectedGraph::from_arcs(n, arcs.iter().copied()).unwrap(), 0).unwrap();
        let (p, map) = gg_to_ug(&dp);
        let ours = label_for_uno(&p, &map);
        let Some((g, side)) = subdivided_image(n, &arcs) else {
            assert!(matches!(ours, Err(ReductionError::NotBipartite)), "{arcs:?}");
            continue;
        };
        assert_eq!(labeling_exists(&g, &side), ours.is_ok(), "{arcs:?}");
        if let Ok(l) = ours {
            assert!(l.check().is_ok());
        }
    }
}
