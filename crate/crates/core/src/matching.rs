//! Maximum-cardinality matching in general graphs and the matching-based
//! winnability test for Undirected Geography.
//!
//! The matcher is Edmonds' blossom algorithm in the O(V^3) formulation: one
//! alternating-tree search per exposed vertex, each search O(V^2) with
//! blossom contraction through a base array. `is_winnable` runs one full
//! matching plus one augmentation pass, so it is O(V^3) as well.

use crate::graph::{Graph, Position, VertexMask};
use std::collections::VecDeque;

const NONE: usize = usize::MAX;

/// A matching on the live part of a board.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<usize>,
}

impl Matching {
    pub fn mate(&self, v: usize) -> Option<usize> {
        match self.mate[v] {
            NONE => None,
            m => Some(m),
        }
    }

    /// Number of matched pairs.
    pub fn size(&self) -> usize {
        self.mate.iter().filter(|&&m| m != NONE).count() / 2
    }

    /// Matched pairs `(u, v)` with `u < v`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.mate
            .iter()
            .enumerate()
            .filter(|&(u, &m)| m != NONE && u < m)
            .map(|(u, &m)| (u, m))
    }

    /// Checks symmetry, that pairs are live edges, and that no vertex repeats.
    pub fn is_valid_for(&self, g: &Graph, mask: &VertexMask) -> bool {
        if self.mate.len() != g.vertex_count() {
            return false;
        }
        self.mate.iter().enumerate().all(|(u, &m)| {
            m == NONE
                || (m < self.mate.len()
                    && self.mate[m] == u
                    && g.has_edge(u, m)
                    && !mask.contains(u)
                    && !mask.contains(m))
        })
    }
}

/// Maximum matching of the subgraph induced by the vertices not in `mask`.
pub fn maximum_matching(g: &Graph, mask: &VertexMask) -> Matching {
    let mut mate = vec![NONE; g.vertex_count()];
    greedy(g, mask, &mut mate);
    Blossom::new(g, mask).augment_all(&mut mate);
    Matching { mate }
}

/// True iff the player to move at `(p, mask)` can force a win.
///
/// The token is winnable exactly when it lies in every maximum matching of
/// the live board, i.e. when deleting it shrinks the maximum matching.
/// A token without live neighbors is a loss.
pub fn is_winnable(p: &Position, mask: &VertexMask) -> bool {
    winning_partner(p.graph(), mask, p.token()).is_some()
}

/// A move to a losing position for the opponent, if one exists: the token's
/// partner in a maximum matching that covers it.
pub fn winning_move(p: &Position, mask: &VertexMask) -> Option<usize> {
    winning_partner(p.graph(), mask, p.token())
}

pub(crate) fn winning_partner(g: &Graph, mask: &VertexMask, s: usize) -> Option<usize> {
    debug_assert!(!mask.contains(s));
    g.live_neighbors(s, mask).next()?;
    let m = maximum_matching(g, mask);
    let partner = m.mate(s)?;
    let full = m.size();
    // M minus (s, partner) is a matching of G - s of size |M| - 1; the
    // maximum of G - s is |M| - 1 or |M|, so one more pass decides it.
    let mut mate = m.mate;
    mate[s] = NONE;
    mate[partner] = NONE;
    let without = mask.with(s);
    Blossom::new(g, &without).augment_all(&mut mate);
    let reduced = mate.iter().filter(|&&x| x != NONE).count() / 2;
    debug_assert!(reduced + 1 >= full && reduced <= full);
    (reduced < full).then_some(partner)
}

fn greedy(g: &Graph, mask: &VertexMask, mate: &mut [usize]) {
    for u in 0..g.vertex_count() {
        if mask.contains(u) || mate[u] != NONE {
            continue;
        }
        if let Some(v) = g.live_neighbors(u, mask).find(|&v| mate[v] == NONE) {
            mate[u] = v;
            mate[v] = u;
        }
    }
}

struct Blossom<'a> {
    g: &'a Graph,
    mask: &'a VertexMask,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph, mask: &'a VertexMask) -> Self {
        let n = g.vertex_count();
        Blossom {
            g,
            mask,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    /// Augments `mate` to a maximum matching. A vertex with no augmenting
    /// path now never gains one later, so one search per vertex suffices.
    fn augment_all(&mut self, mate: &mut [usize]) {
        for root in 0..self.g.vertex_count() {
            if self.mask.contains(root) || mate[root] != NONE {
                continue;
            }
            if let Some(end) = self.find_path(root, mate) {
                let mut v = end;
                while v != NONE {
                    let pv = self.parent[v];
                    let next = mate[pv];
                    mate[v] = pv;
                    mate[pv] = v;
                    v = next;
                }
            }
        }
    }

    fn find_path(&mut self, root: usize, mate: &[usize]) -> Option<usize> {
        let n = self.g.vertex_count();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.mask.contains(to) || self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && self.parent[mate[to]] != NONE) {
                    let cur = self.lca(v, to, root, mate);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to, mate);
                    self.mark_path(to, cur, v, mate);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    self.used[mate[to]] = true;
                    self.queue.push_back(mate[to]);
                }
            }
        }
        None
    }

    fn lca(&self, a: usize, b: usize, root: usize, mate: &[usize]) -> usize {
        let mut seen = vec![false; self.g.vertex_count()];
        let mut a = a;
        loop {
            a = self.base[a];
            seen[a] = true;
            if a == root || mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        let mut b = b;
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, mate: &[usize]) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }
}
