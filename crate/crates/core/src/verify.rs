//! Self-checks behind `geo verify`. Each suite is a scaled-down sweep of the
//! corresponding integration tests, cheap enough to run on any machine.

use crate::constructor::{build_nimber_position, census, verify_lemma, Lemma};
use crate::graph::{DirectedGraph, DirectedPosition, Graph, GraphBuilder, Position, VertexMask};
use crate::grundy::{
    exact_grundy, grundy_degree3_with_stats, mex, nim_sum, Nimber, SolveBudget, SolveError,
};
use crate::matching::{is_winnable, winning_move};
use crate::reductions::{add_prelude, gg_to_ug, solve_directed};
use crate::variants::{variant_grundy, MultiTokenState, UgComponent, VariantState};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Algebra,
    Matching,
    Degree3,
    Constructor,
    Reductions,
    Variants,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Algebra,
        Suite::Matching,
        Suite::Degree3,
        Suite::Constructor,
        Suite::Reductions,
        Suite::Variants,
    ];
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checked: u64,
    pub failures: Vec<String>,
    pub passed: bool,
}

#[derive(Default)]
struct Tally {
    checked: u64,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        }
    }

    fn report(self, suite: Suite) -> SuiteReport {
        SuiteReport {
            suite,
            checked: self.checked,
            passed: self.failures.is_empty(),
            failures: self.failures,
        }
    }
}

/// Runs one suite, or every suite for [`Suite::All`].
pub fn run(suite: Suite, seed: u64) -> Result<Vec<SuiteReport>, SolveError> {
    if suite == Suite::All {
        return Suite::EACH.iter().map(|&s| run_one(s, seed)).collect();
    }
    Ok(vec![run_one(suite, seed)?])
}

fn run_one(suite: Suite, seed: u64) -> Result<SuiteReport, SolveError> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut t = Tally::default();
    match suite {
        Suite::Algebra => algebra(&mut t, &mut rng)?,
        Suite::Matching => matching(&mut t)?,
        Suite::Degree3 => degree3(&mut t, &mut rng)?,
        Suite::Constructor => constructor(&mut t)?,
        Suite::Reductions => reductions(&mut t)?,
        Suite::Variants => variants(&mut t, &mut rng)?,
        Suite::All => unreachable!("expanded by run"),
    }
    Ok(t.report(suite))
}

fn budget() -> SolveBudget {
    SolveBudget::default()
}

/// G(n, p) with `n` drawn from `sizes` and a uniform token.
pub fn random_position(rng: &mut impl Rng, sizes: std::ops::RangeInclusive<usize>, p: f64) -> Position {
    let n = rng.gen_range(sizes);
    let mut b = GraphBuilder::with_vertices(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v);
            }
        }
    }
    Position::new(b.build().expect("simple by construction"), rng.gen_range(0..n)).expect("token in range")
}

/// Random graph with every degree at most `max_degree`.
pub fn random_bounded_position(rng: &mut impl Rng, n: usize, max_degree: usize) -> Position {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut degree = vec![0; n];
    for _ in 0..2 * n {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let (u, v) = (u.min(v), u.max(v));
        if u != v && degree[u] < max_degree && degree[v] < max_degree && !edges.contains(&(u, v)) {
            edges.push((u, v));
            degree[u] += 1;
            degree[v] += 1;
        }
    }
    let g = Graph::from_edges(n, edges).expect("simple by construction");
    Position::new(g, rng.gen_range(0..n)).expect("token in range")
}

fn algebra(t: &mut Tally, rng: &mut StdRng) -> Result<(), SolveError> {
    for bits in 0u32..1 << 6 {
        let set: Vec<Nimber> = (0..6).filter(|k| bits & (1 << k) != 0).map(Nimber).collect();
        let m = mex(set.iter().copied());
        let least = (0..).map(Nimber).find(|k| !set.contains(k)).expect("finite set");
        t.check(m == least, || format!("mex of {set:?} gave {m}"));
    }
    for a in 0..16 {
        for b in 0..16 {
            let (a, b) = (Nimber(a), Nimber(b));
            t.check(nim_sum(a, b) == nim_sum(b, a), || format!("{a} + {b} not commutative"));
            t.check(nim_sum(nim_sum(a, b), b) == a, || format!("{a} + {b} + {b} != {a}"));
        }
    }
    for _ in 0..100 {
        let g = random_position(rng, 1..=5, 0.5);
        let h = random_position(rng, 1..=5, 0.5);
        let sum = variant_grundy(
            &VariantState::Sum(vec![UgComponent::new(&g), UgComponent::new(&h)]),
            budget(),
        )?;
        let (vg, vh) = (exact_grundy(&g, &g.fresh_mask(), budget())?, exact_grundy(&h, &h.fresh_mask(), budget())?);
        t.check(sum == vg ^ vh, || format!("sum law: {sum} != {vg} + {vh}"));
    }
    Ok(())
}

fn matching(t: &mut Tally) -> Result<(), SolveError> {
    for n in 1..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for bits in 0u32..1 << pairs.len() {
            let edges = pairs.iter().enumerate().filter(|(i, _)| bits & (1 << i) != 0).map(|(_, &e)| e);
            let g = Arc::new(Graph::from_edges(n, edges).expect("simple"));
            for token in 0..n {
                let p = Position::new(g.clone(), token).expect("token in range");
                let mask = p.fresh_mask();
                let value = exact_grundy(&p, &mask, budget())?;
                t.check(is_winnable(&p, &mask) == !value.is_zero(), || {
                    format!("n={n} edges={bits:#b} token={token}: winnability disagrees with {value}")
                });
                if let Some(to) = winning_move(&p, &mask) {
                    let child = exact_grundy(&p.with_token(to), &mask.with(token), budget())?;
                    t.check(child.is_zero(), || format!("n={n} edges={bits:#b}: move to {to} leaves {child}"));
                }
            }
        }
    }
    Ok(())
}

fn degree3(t: &mut Tally, rng: &mut StdRng) -> Result<(), SolveError> {
    for _ in 0..300 {
        let n = rng.gen_range(1..=12);
        let p = random_bounded_position(rng, n, 3);
        let exact = exact_grundy(&p, &p.fresh_mask(), budget())?;
        match grundy_degree3_with_stats(&p) {
            Ok((v, stats)) => {
                t.check(v == exact, || format!("degree-3 value {v} != exact {exact} on {n} vertices"));
                t.check(stats.winnability_calls <= 3 * n, || {
                    format!("{} winnability calls on {n} vertices", stats.winnability_calls)
                });
            }
            Err(e) => t.check(false, || e.to_string()),
        }
    }
    Ok(())
}

fn constructor(t: &mut Tally) -> Result<(), SolveError> {
    for n in 0..=5 {
        let c = build_nimber_position(n);
        let v = exact_grundy(&c.position, &c.position.fresh_mask(), budget())?;
        t.check(v == Nimber(n), || format!("construction for *{n} has value {v}"));
        let size = (c.position.vertex_count(), c.position.graph().edge_count());
        t.check(size == census(n), || format!("*{n}: size {size:?} != census {:?}", census(n)));
    }
    let c = build_nimber_position(4);
    for lemma in Lemma::ALL {
        let report = verify_lemma(&c, lemma, budget())?;
        for check in report.checks.iter().filter(|c| !c.passed) {
            t.check(false, || format!("{lemma}: token {} removed {:?} gave {}", check.token, check.removed, check.actual));
        }
        t.check(true, String::new);
    }
    Ok(())
}

fn reductions(t: &mut Tally) -> Result<(), SolveError> {
    for n in 1..=3usize {
        let slots: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
        for bits in 0u32..1 << slots.len() {
            let arcs = slots.iter().enumerate().filter(|(i, _)| bits & (1 << i) != 0).map(|(_, &a)| a);
            let dg = Arc::new(DirectedGraph::from_arcs(n, arcs).expect("simple"));
            for token in 0..n {
                let dp = DirectedPosition::new(dg.clone(), token).expect("token in range");
                let previous_wins = !solve_directed(&dp);
                let (p, _) = gg_to_ug(&dp);
                let v = exact_grundy(&p, &p.fresh_mask(), budget())?;
                t.check((v == Nimber(1)) == previous_wins && v != Nimber(0), || {
                    format!("n={n} arcs={bits:#b} token={token}: image value {v}, P-position {previous_wins}")
                });
                let pre = add_prelude(&p);
                let w = exact_grundy(&pre, &pre.fresh_mask(), budget())?;
                let expected = if previous_wins { Nimber(1) } else { Nimber(2) };
                t.check(w == expected, || format!("n={n} arcs={bits:#b}: prelude value {w}"));
            }
        }
    }
    Ok(())
}

fn variants(t: &mut Tally, rng: &mut StdRng) -> Result<(), SolveError> {
    for _ in 0..100 {
        let p = random_position(rng, 1..=6, 0.5);
        let plain = variant_grundy(&VariantState::Plain(UgComponent::new(&p)), budget())?;
        let passes = rng.gen_range(0..=3);
        let with_passes = variant_grundy(
            &VariantState::Pass {
                game: UgComponent::new(&p),
                passes,
            },
            budget(),
        )?;
        t.check(with_passes == plain ^ Nimber(passes % 2), || {
            format!("{passes} passes: {with_passes} vs plain {plain}")
        });

        let g = random_position(rng, 1..=4, 0.5);
        let h = random_position(rng, 1..=4, 0.5);
        let mut b = GraphBuilder::new();
        let offset_g = b.add_graph(g.graph());
        let offset_h = b.add_graph(h.graph());
        let union = Arc::new(b.build().expect("disjoint union"));
        let n = union.vertex_count();
        let two = VariantState::MultiToken(MultiTokenState {
            graph: union,
            tokens: vec![offset_g + g.token(), offset_h + h.token()],
            removed: VertexMask::new(n),
        });
        let sum = VariantState::Sum(vec![UgComponent::new(&g), UgComponent::new(&h)]);
        let (a, b) = (variant_grundy(&two, budget())?, variant_grundy(&sum, budget())?);
        t.check(a == b, || format!("two tokens {a} vs sum {b}"));
    }
    Ok(())
}
