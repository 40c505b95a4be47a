//! Acceptance suite: one verdict line per criterion.
//!
//! Runs with `harness = false`, so the lines are printed in order and never
//! captured. The process fails if any criterion fails, except where noted on
//! criterion 7.

mod common;

use common::{all_labeled_graphs, random_bounded_degree, random_graph, rng};
use geography::constructor::{build_nimber_position, verify_lemma, Lemma};
use geography::graph::{DirectedGraph, DirectedPosition, Graph, Position, VertexMask};
use geography::grundy::{exact_grundy, grundy_degree3_with_stats, ug_solver, Nimber, SolveBudget, UgState};
use geography::matching::{is_winnable, winning_move};
use geography::reductions::{
    add_prelude, build_separation_instance, gg_to_ug, label_for_uno, playability_graph, shift_nimber_chain,
    uno_from_labeling, DirectedSolver, UnoLabeling,
};
use geography::variants::{swap_uno_to_ug, variant_grundy, Card, SwapUnoState, UgComponent, VariantState};
use rand::Rng;
use rayon::prelude::*;
use std::collections::HashSet;
use std::io::Write;
use std::sync::Arc;
use std::time::{Duration, Instant};

// Pinned tolerances.
const C1_EXHAUSTIVE_MAX_N: usize = 6;
const C1_RANDOM_GRAPHS: usize = 10_000;
const C1_RANDOM_MAX_N: usize = 12;
const C1_LIMIT: Duration = Duration::from_secs(300);
const C2_GRAPHS: usize = 1_000;
const C2_MAX_N: usize = 14;
const C2_CALLS_PER_VERTEX: usize = 3;
const C2_LIMIT: Duration = Duration::from_secs(300);
const C3_VALUES: [u32; 6] = [0, 1, 2, 3, 4, 5];
const C3_LEMMA_SIZES: [u32; 2] = [4, 5];
const C3_CENSUS_MAX_N: u32 = 40;
const C3_LIMIT: Duration = Duration::from_secs(600);
const C4_MAX_VERTICES: usize = 5;
const C4_MAX_ARCS: usize = 5;
const C4_LIMIT: Duration = Duration::from_secs(600);
const C5_INSTANCES: usize = 1_000;
const C5_MAX_COMPONENT: usize = 8;
const C5_MAX_PASSES: u32 = 4;
const C5_LIMIT: Duration = Duration::from_secs(300);
const C6_MAX_TARGET: u32 = 5;
const C7_UNO_DEALS: usize = 2_000;
const C7_MAX_HAND: usize = 4;

struct Verdict {
    passed: bool,
    detail: String,
}

fn report(id: &str, title: &str, started: Instant, limit: Option<Duration>, v: Verdict) -> bool {
    let elapsed = started.elapsed();
    let in_time = limit.is_none_or(|l| elapsed <= l);
    let passed = v.passed && in_time;
    let limit = limit.map_or(String::new(), |l| format!(" (limit {}s)", l.as_secs()));
    let line = format!(
        "criterion {id}: {} {title}: {} [{:.1}s{limit}]\n",
        if passed { "PASS" } else { "FAIL" },
        v.detail,
        elapsed.as_secs_f64(),
    );
    let mut out = std::io::stdout().lock();
    out.write_all(line.as_bytes()).unwrap();
    out.flush().unwrap();
    passed
}

fn exact(p: &Position, mask: &VertexMask) -> Nimber {
    exact_grundy(p, mask, SolveBudget::default()).expect("within budget")
}

fn value(p: &Position) -> Nimber {
    exact(p, &p.fresh_mask())
}

fn matching_oracle(p: &Position) -> (u64, Vec<String>) {
    let mask = p.fresh_mask();
    let v = exact(p, &mask);
    let mut bad = Vec::new();
    if is_winnable(p, &mask) != !v.is_zero() {
        bad.push(format!("winnability vs {v} on {:?} token {}", p.graph().edges().collect::<Vec<_>>(), p.token()));
    }
    match winning_move(p, &mask) {
        Some(to) => {
            let child = exact(&p.with_token(to), &mask.with(p.token()));
            if !child.is_zero() || v.is_zero() {
                bad.push(format!("winning move {to} leaves {child}"));
            }
        }
        None if !v.is_zero() => bad.push("no winning move on a winnable position".into()),
        None => {}
    }
    (1, bad)
}

fn criterion_1() -> Verdict {
    let exhaustive: Vec<Graph> = (1..=C1_EXHAUSTIVE_MAX_N)
        .flat_map(all_labeled_graphs)
        .filter(Graph::is_connected)
        .collect();
    let (checked, bad) = exhaustive
        .par_iter()
        .flat_map_iter(|g| {
            let g = Arc::new(g.clone());
            (0..g.vertex_count()).map(move |t| matching_oracle(&Position::new(g.clone(), t).unwrap()))
        })
        .chain((0..C1_RANDOM_GRAPHS).into_par_iter().map(|i| {
            let mut r = rng(0xC1 + i as u64);
            let n = r.gen_range(1..=C1_RANDOM_MAX_N);
            let p = r.gen_range(0.1..0.7);
            let g = random_graph(&mut r, n, p);
            let t = r.gen_range(0..n);
            matching_oracle(&Position::new(g, t).unwrap())
        }))
        .reduce(|| (0, Vec::new()), |a, b| (a.0 + b.0, [a.1, b.1].concat()));
    Verdict {
        passed: bad.is_empty(),
        detail: format!(
            "{checked} positions ({} connected graphs n<={C1_EXHAUSTIVE_MAX_N} x all tokens, {C1_RANDOM_GRAPHS} random n<={C1_RANDOM_MAX_N}), {} mismatches{}",
            exhaustive.len(),
            bad.len(),
            bad.first().map_or(String::new(), |b| format!("; first: {b}"))
        ),
    }
}

fn criterion_2() -> Verdict {
    let results: Vec<(usize, usize, bool)> = (0..C2_GRAPHS)
        .into_par_iter()
        .map(|i| {
            let mut r = rng(0xC2 + i as u64);
            let n = r.gen_range(1..=C2_MAX_N);
            let g = random_bounded_degree(&mut r, n, 3, 3 * n);
            let p = Position::new(g, r.gen_range(0..n)).unwrap();
            let (v, stats) = grundy_degree3_with_stats(&p).expect("max degree 3");
            (n, stats.winnability_calls, v == value(&p))
        })
        .collect();
    let mismatches = results.iter().filter(|r| !r.2).count();
    let over = results.iter().filter(|r| r.1 > C2_CALLS_PER_VERTEX * r.0).count();
    let worst = results
        .iter()
        .filter(|r| r.0 > 0)
        .map(|r| r.1 as f64 / r.0 as f64)
        .fold(0.0, f64::max);
    Verdict {
        passed: mismatches == 0 && over == 0,
        detail: format!(
            "{C2_GRAPHS} graphs n<={C2_MAX_N}, {mismatches} mismatches, {over} over {C2_CALLS_PER_VERTEX}n calls, worst {worst:.2} calls/vertex"
        ),
    }
}

/// Vertex and edge counts of the polynomial construction, written out
/// independently of the library.
fn census_formula(n: u32) -> (usize, usize) {
    if n <= 3 {
        return (1 << n, (1 << n) - 1);
    }
    let k = (n - 4) as usize;
    let pairs = k * (k + 1) / 2;
    (16 + 20 * k + 10 * pairs, 15 + 19 * k + 13 * pairs)
}

fn criterion_3() -> Verdict {
    let mut problems = Vec::new();
    for n in C3_VALUES {
        let c = build_nimber_position(n);
        let v = value(&c.position);
        if v != Nimber(n) {
            problems.push(format!("*{n} built as {v}"));
        }
    }
    let mut lemma_checks = 0;
    for n in C3_LEMMA_SIZES {
        let c = build_nimber_position(n);
        for lemma in Lemma::ALL {
            let r = verify_lemma(&c, lemma, SolveBudget::default()).expect("within budget");
            lemma_checks += r.checks.len();
            if !r.passed() {
                problems.push(format!("{lemma} fails at n={n}"));
            }
        }
    }
    let sizes: Vec<(usize, usize)> = (0..=C3_CENSUS_MAX_N)
        .map(|n| {
            let p = build_nimber_position(n).position;
            (p.vertex_count(), p.graph().edge_count())
        })
        .collect();
    for (n, &s) in sizes.iter().enumerate() {
        if s != census_formula(n as u32) {
            problems.push(format!("n={n}: size {s:?} vs census {:?}", census_formula(n as u32)));
        }
    }
    // quadratic growth: constant second differences from n = 4 on
    let second: HashSet<(i64, i64)> = sizes[4..]
        .windows(3)
        .map(|w| {
            let d = |i: usize, j: usize, f: fn(&(usize, usize)) -> usize| f(&w[j]) as i64 - f(&w[i]) as i64;
            (
                d(1, 2, |s| s.0) - d(0, 1, |s| s.0),
                d(1, 2, |s| s.1) - d(0, 1, |s| s.1),
            )
        })
        .collect();
    if second.len() != 1 {
        problems.push(format!("second differences not constant: {second:?}"));
    }
    Verdict {
        passed: problems.is_empty(),
        detail: format!(
            "values *0..*5 exact, {lemma_checks} lemma checks at n=4,5, census n<={C3_CENSUS_MAX_N} with second differences {second:?}{}",
            if problems.is_empty() { String::new() } else { format!("; problems: {problems:?}") }
        ),
    }
}

/// Every labeled directed graph with at most the given vertices and arcs.
fn directed_instances() -> Vec<Arc<DirectedGraph>> {
    let mut out = Vec::new();
    for n in 1..=C4_MAX_VERTICES {
        let slots: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        let mut chosen = Vec::new();
        subsets(&slots, 0, C4_MAX_ARCS, &mut chosen, &mut |arcs| {
            out.push(Arc::new(DirectedGraph::from_arcs(n, arcs.iter().copied()).unwrap()));
        });
    }
    out
}

fn subsets<F: FnMut(&[(usize, usize)])>(
    slots: &[(usize, usize)],
    from: usize,
    left: usize,
    chosen: &mut Vec<(usize, usize)>,
    emit: &mut F,
) {
    emit(chosen);
    if left == 0 {
        return;
    }
    for i in from..slots.len() {
        chosen.push(slots[i]);
        subsets(slots, i + 1, left - 1, chosen, emit);
        chosen.pop();
    }
}

#[derive(Default)]
struct GadgetTally {
    positions: u64,
    p_positions: u64,
    theorem: Vec<String>,
    wrong_way_checks: u64,
    wrong_way: Vec<String>,
    right_way_checks: u64,
    right_way: Vec<String>,
    prelude: Vec<String>,
}

impl GadgetTally {
    fn merge(mut self, o: GadgetTally) -> GadgetTally {
        self.positions += o.positions;
        self.p_positions += o.p_positions;
        self.wrong_way_checks += o.wrong_way_checks;
        self.right_way_checks += o.right_way_checks;
        for (a, b) in [
            (&mut self.theorem, o.theorem),
            (&mut self.wrong_way, o.wrong_way),
            (&mut self.right_way, o.right_way),
            (&mut self.prelude, o.prelude),
        ] {
            a.extend(b.into_iter().take(5usize.saturating_sub(a.len())));
        }
        self
    }
}

fn check_gadgets(dg: &Arc<DirectedGraph>) -> GadgetTally {
    let mut t = GadgetTally::default();
    let arcs: Vec<(usize, usize)> = dg.arcs().collect();
    let n = dg.vertex_count();
    let mut gg = DirectedSolver::new(dg);
    let (image, map) = gg_to_ug(&DirectedPosition::new(dg.clone(), 0).unwrap());
    let mut solver = ug_solver(image.graph(), SolveBudget::default());
    let fresh = image.fresh_mask();
    let mut val = |removed: &[usize], token: usize| {
        let mut mask = fresh.clone();
        for &v in removed {
            mask.insert(v);
        }
        solver.grundy(&UgState { removed: mask, token }).expect("within budget")
    };
    for token in 0..n {
        t.positions += 1;
        let p_position = !gg.mover_wins(&VertexMask::new(n), token);
        t.p_positions += p_position as u64;
        let v = val(&[], token);
        if (v == Nimber(1)) != p_position || v == Nimber(0) {
            t.theorem.push(format!("arcs {arcs:?} token {token}: image {v}, P={p_position}"));
        }
        let pre = add_prelude(&image.with_token(token));
        let w = value(&pre);
        let expected = if v == Nimber(1) { Nimber(1) } else { Nimber(2) };
        if w != expected {
            t.prelude.push(format!("arcs {arcs:?} token {token}: prelude {w} from {v}"));
        }
    }
    for g in &map.arcs {
        for removed in [vec![g.y], vec![g.x, g.y]] {
            t.wrong_way_checks += 1;
            let v = val(&removed, g.d);
            if v != Nimber(2) && v != Nimber(3) {
                t.wrong_way.push(format!("arcs {arcs:?}, gadget {}->{}: removed {removed:?} gives {v}", g.x, g.y));
            }
        }
        t.right_way_checks += 1;
        let into = val(&[g.x], g.a) == Nimber(1);
        let out = val(&[g.x, g.a, g.b, g.c, g.d], g.y) == Nimber(1);
        if into != out {
            t.right_way.push(format!("arcs {arcs:?}, gadget {}->{}: entry * {into}, exit * {out}", g.x, g.y));
        }
    }
    t
}

fn criterion_4(instances: &[Arc<DirectedGraph>]) -> Verdict {
    let t = instances
        .par_iter()
        .map(check_gadgets)
        .reduce(GadgetTally::default, GadgetTally::merge);
    let failures: Vec<&String> = t.theorem.iter().chain(&t.wrong_way).chain(&t.right_way).chain(&t.prelude).collect();
    Verdict {
        passed: failures.is_empty(),
        detail: format!(
            "{} directed positions ({} graphs, <={C4_MAX_VERTICES} vertices, <={C4_MAX_ARCS} arcs, {} P-positions): theorem {} bad, wrong way {} checks {} bad, right way {} checks {} bad, prelude {} bad{}",
            t.positions,
            instances.len(),
            t.p_positions,
            t.theorem.len(),
            t.wrong_way_checks,
            t.wrong_way.len(),
            t.right_way_checks,
            t.right_way.len(),
            t.prelude.len(),
            failures.first().map_or(String::new(), |f| format!("; first: {f}"))
        ),
    }
}

fn criterion_5() -> Verdict {
    let sum_bad = (0..C5_INSTANCES)
        .into_par_iter()
        .filter(|&i| {
            let mut r = rng(0x5A + i as u64);
            let parts: Vec<Position> = (0..2)
                .map(|_| {
                    let n = r.gen_range(1..=C5_MAX_COMPONENT);
                    let g = random_graph(&mut r, n, 0.4);
                    Position::new(g, r.gen_range(0..n)).unwrap()
                })
                .collect();
            let whole = VariantState::Sum(parts.iter().map(UgComponent::new).collect());
            let expected = parts.iter().fold(Nimber(0), |acc, p| acc ^ value(p));
            variant_grundy(&whole, SolveBudget::default()).unwrap() != expected
        })
        .count();
    let pass_bad = (0..C5_INSTANCES)
        .into_par_iter()
        .filter(|&i| {
            let mut r = rng(0x5B + i as u64);
            let n = r.gen_range(1..=C5_MAX_COMPONENT);
            let g = random_graph(&mut r, n, 0.4);
            let p = Position::new(g, r.gen_range(0..n)).unwrap();
            let k = r.gen_range(0..=C5_MAX_PASSES);
            let plain = variant_grundy(&VariantState::Plain(UgComponent::new(&p)), SolveBudget::default()).unwrap();
            let passing = VariantState::Pass {
                game: UgComponent::new(&p),
                passes: k,
            };
            variant_grundy(&passing, SolveBudget::default()).unwrap() != plain ^ Nimber(k % 2)
        })
        .count();
    Verdict {
        passed: sum_bad == 0 && pass_bad == 0,
        detail: format!(
            "sum law {C5_INSTANCES} instances {sum_bad} violations, pass parity {C5_INSTANCES} instances (k<={C5_MAX_PASSES}) {pass_bad} violations"
        ),
    }
}

fn path(n: usize, token: usize) -> Position {
    Position::new(Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap(), token).unwrap()
}

fn criterion_6() -> Verdict {
    // seeds of value * and *2 from unrelated families
    let star_seeds = vec![
        path(2, 0),
        path(3, 1),
        build_nimber_position(1).position,
        gg_to_ug(&DirectedPosition::new(DirectedGraph::from_arcs(1, []).unwrap(), 0).unwrap()).0,
    ];
    let star2_seeds = vec![
        path(4, 1),
        Position::new(Graph::from_edges(4, [(0, 1), (0, 2), (2, 3)]).unwrap(), 0).unwrap(),
        build_nimber_position(2).position,
        gg_to_ug(&DirectedPosition::new(DirectedGraph::from_arcs(2, [(0, 1)]).unwrap(), 0).unwrap()).0,
    ];
    let mut problems = Vec::new();
    let mut checks = 0;
    let mut seeds_ok = true;
    for (expected, seeds) in [(1, &star_seeds), (2, &star2_seeds)] {
        for s in seeds.iter() {
            if value(s) != Nimber(expected) {
                seeds_ok = false;
                problems.push(format!("seed meant to be *{expected} has value {}", value(s)));
            }
        }
    }
    // chain: *(k-1), *k at k = 2 become *(to-1), *to
    for to in 2..=C6_MAX_TARGET {
        for (seed_value, seeds) in [(1, &star_seeds), (2, &star2_seeds)] {
            for s in seeds.iter() {
                checks += 1;
                let out = value(&shift_nimber_chain(s, 2, to).unwrap());
                if out != Nimber(to - 2 + seed_value) {
                    problems.push(format!("chain 2->{to} on *{seed_value}: {out}"));
                }
            }
        }
    }
    // separation at every k reachable through the chain
    for k in 2..C6_MAX_TARGET {
        for target in k + 1..=C6_MAX_TARGET {
            for (seed_value, seeds) in [(1, &star_seeds), (2, &star2_seeds)] {
                for s in seeds.iter() {
                    checks += 1;
                    let lifted = shift_nimber_chain(s, 2, k).unwrap();
                    let out = value(&build_separation_instance(&lifted, k, target).unwrap());
                    let expected = if seed_value == 2 { target } else { k };
                    if out != Nimber(expected) {
                        problems.push(format!("separate k={k} p={target} on *{}: {out}", k - 2 + seed_value));
                    }
                }
            }
        }
    }
    Verdict {
        passed: seeds_ok && problems.is_empty(),
        detail: format!(
            "{checks} chain/separation outputs on {} seeds, targets up to *{C6_MAX_TARGET}, {} wrong{}",
            star_seeds.len() + star2_seeds.len(),
            problems.len(),
            problems.first().map_or(String::new(), |p| format!("; first: {p}"))
        ),
    }
}

/// Whether the labeling can exist at all: the underlying graph is bipartite
/// and no weak component has more arcs than vertices.
fn labelable(dg: &DirectedGraph) -> bool {
    if dg.underlying().bipartition().is_none() {
        return false;
    }
    let n = dg.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while p[r] != r {
            r = p[r];
        }
        p[v] = r;
        r
    }
    for (u, v) in dg.arcs() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    let mut vertices = vec![0usize; n];
    let mut arcs = vec![0usize; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        vertices[r] += 1;
    }
    for (u, _) in dg.arcs() {
        let r = find(&mut parent, u);
        arcs[r] += 1;
    }
    (0..n).all(|r| arcs[r] <= vertices[r])
}

/// Checks the labeling and that the dealt game's playability graph is the
/// labeled board, using the dealing order as the isomorphism witness.
fn round_trips(l: &UnoLabeling) -> bool {
    if l.check().is_err() {
        return false;
    }
    let deal = uno_from_labeling(l);
    let pg = playability_graph(&deal);
    let h = &l.board;
    let t = h.token();
    let n = h.vertex_count();
    if pg.vertex_count() != n || pg.token() != 0 {
        return false;
    }
    let mut image = vec![usize::MAX; n];
    image[t] = 0;
    let mut next = 1;
    for v in (0..n).filter(|&v| l.side[v] != l.side[t]) {
        image[v] = next;
        next += 1;
    }
    for v in (0..n).filter(|&v| v != t && l.side[v] == l.side[t]) {
        image[v] = next;
        next += 1;
    }
    pg.graph().edge_count() == h.graph().edge_count()
        && h.graph().edges().all(|(u, v)| pg.graph().has_edge(image[u], image[v]))
}

fn random_hand(r: &mut impl Rng) -> Vec<Card> {
    let mut hand: Vec<Card> = Vec::new();
    for _ in 0..r.gen_range(0..=C7_MAX_HAND) {
        let c = Card {
            color: r.gen_range(0..3),
            rank: r.gen_range(0..3),
        };
        if !hand.contains(&c) {
            hand.push(c);
        }
    }
    hand
}

fn criterion_7(instances: &[Arc<DirectedGraph>]) -> (Verdict, bool) {
    let per_graph: Vec<(u64, u64, u64, u64)> = instances
        .par_iter()
        .map(|dg| {
            let predicted = labelable(dg);
            let (image, map) = gg_to_ug(&DirectedPosition::new(dg.clone(), 0).unwrap());
            let (mut ok, mut unlabelable, mut unexplained, mut broken) = (0, 0, 0, 0);
            for token in 0..dg.vertex_count() {
                match label_for_uno(&image.with_token(token), &map) {
                    Ok(l) if !round_trips(&l) => broken += 1,
                    Ok(_) if predicted => ok += 1,
                    Err(_) if !predicted => unlabelable += 1,
                    _ => unexplained += 1,
                }
            }
            (ok, unlabelable, unexplained, broken)
        })
        .collect();
    let total = per_graph.iter().fold((0, 0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2, a.3 + b.3));
    let (ok, unlabelable, unexplained, broken) = total;

    let uno_bad = (0..C7_UNO_DEALS)
        .into_par_iter()
        .filter(|&i| {
            let mut r = rng(0x70 + i as u64);
            let deal = SwapUnoState {
                hands: [random_hand(&mut r), random_hand(&mut r)],
                top: r.gen_bool(0.5).then(|| Card {
                    color: r.gen_range(0..3),
                    rank: r.gen_range(0..3),
                }),
                swap_used: r.gen_bool(0.25),
            };
            let direct = variant_grundy(&VariantState::SwapUno(deal.clone()), SolveBudget::default()).unwrap();
            direct != variant_grundy(&swap_uno_to_ug(&deal), SolveBudget::default()).unwrap()
        })
        .count();

    let literal = unlabelable == 0 && unexplained == 0 && broken == 0 && uno_bad == 0;
    let explained = unexplained == 0 && broken == 0 && uno_bad == 0;
    let verdict = Verdict {
        passed: literal,
        detail: format!(
            "{} reduction images: {ok} labeled and round-tripped, {unlabelable} provably unlabelable (odd cycle, or a component with more arcs than vertices), {unexplained} unexplained failures, {broken} broken labelings; Swap Uno direct vs sum-with-* on {C7_UNO_DEALS} deals (hands<={C7_MAX_HAND}): {uno_bad} mismatches",
            ok + unlabelable + unexplained + broken
        ),
    };
    (verdict, explained)
}

fn main() {
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let wanted = |id: &str| filter.is_empty() || filter.iter().any(|f| f == id);
    let mut all_ok = true;

    if wanted("1") {
        let s = Instant::now();
        all_ok &= report("1", "matching-oracle equivalence", s, Some(C1_LIMIT), criterion_1());
    }
    if wanted("2") {
        let s = Instant::now();
        all_ok &= report("2", "degree-3 algorithm", s, Some(C2_LIMIT), criterion_2());
    }
    if wanted("3") {
        let s = Instant::now();
        all_ok &= report("3", "nimber constructor", s, Some(C3_LIMIT), criterion_3());
    }
    let instances = if wanted("4") || wanted("7") { directed_instances() } else { Vec::new() };
    if wanted("4") {
        let s = Instant::now();
        all_ok &= report("4", "gadget lemmas and reduction theorem", s, Some(C4_LIMIT), criterion_4(&instances));
    }
    if wanted("5") {
        let s = Instant::now();
        all_ok &= report("5", "sum law and pass parity", s, Some(C5_LIMIT), criterion_5());
    }
    if wanted("6") {
        let s = Instant::now();
        all_ok &= report("6", "chain and separation", s, None, criterion_6());
    }
    if wanted("7") {
        let s = Instant::now();
        let (verdict, explained) = criterion_7(&instances);
        report("7", "Uno labeling and Swap Uno", s, None, verdict);
        // The literal criterion cannot hold on every image (see README). The
        // run still fails on anything outside the proven-impossible class.
        let line = format!(
            "criterion 7 (labelable instances only): {}\n",
            if explained { "PASS" } else { "FAIL" }
        );
        std::io::stdout().write_all(line.as_bytes()).unwrap();
        all_ok &= explained;
    }
    if !all_ok {
        std::process::exit(1);
    }
}
