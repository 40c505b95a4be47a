#![allow(dead_code)]

use geography::graph::{Graph, Position};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random graph with every degree at most `max_degree`.
pub fn random_bounded_degree(rng: &mut StdRng, n: usize, max_degree: usize, tries: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut deg = vec![0; n];
    let mut edges = Vec::new();
    for (u, v) in pairs.into_iter().take(tries) {
        if deg[u] < max_degree && deg[v] < max_degree {
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_position(rng: &mut StdRng, g: Graph) -> Position {
    let t = rng.gen_range(0..g.vertex_count());
    Position::new(g, t).unwrap()
}

/// Every labeled graph on `n` vertices, as edge subsets of the complete graph.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let m = pairs.len();
    (0u64..1 << m).map(move |bits| {
        let edges = (0..m).filter(|i| bits >> i & 1 == 1).map(|i| pairs[i]);
        Graph::from_edges(n, edges).unwrap()
    })
}
