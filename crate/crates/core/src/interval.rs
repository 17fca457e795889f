//! Interval graph recognition and exact interval vertex deletion.
//!
//! Recognition is chordality plus a consecutive-ones test on the clique
//! matrix. Deletion is a bounded search tree that branches on a minimal
//! obstruction: a shortest hole when the graph is not chordal, otherwise a
//! minimal non-interval induced subgraph found by greedy vertex removal.
//! Every solution must hit any obstruction, so the search is exact.

use fixedbitset::FixedBitSet;

use crate::cop::cop_order;
use crate::error::{Error, Result};
use crate::graph::{clique_bits_from_peo, is_chordal, Graph};
use crate::matrix::BinaryMatrix;
use crate::sets::{CliqueSet, VertexSet};

/// True iff `g` is an interval graph.
pub fn is_interval(g: &Graph) -> bool {
    match clique_matrix(g) {
        Some(m) => cop_order(&m).is_some(),
        None => false,
    }
}

/// The vertex-by-maximal-clique incidence matrix of a chordal graph (row
/// labels are vertex labels), or `None` for non-chordal graphs.
pub fn clique_matrix(g: &Graph) -> Option<BinaryMatrix> {
    let peo = is_chordal(g)?;
    let order: Vec<usize> = peo
        .iter()
        .map(|&v| g.index_of(v).expect("peo lists vertices"))
        .collect();
    let cliques = clique_bits_from_peo(g, &order);
    Some(incidence(g, &cliques))
}

/// Incidence matrix of `cliques` (index bitsets over `g`), one row per vertex.
pub(crate) fn incidence(g: &Graph, cliques: &[FixedBitSet]) -> BinaryMatrix {
    let k = cliques.len();
    let rows = (0..g.vertex_count())
        .map(|v| {
            let mut row = FixedBitSet::with_capacity(k);
            for (c, clique) in cliques.iter().enumerate() {
                if clique.contains(v) {
                    row.insert(c);
                }
            }
            (g.label(v), row)
        })
        .collect();
    BinaryMatrix::from_labeled_rows(k, rows).expect("vertex labels are distinct")
}

/// Clique matrix with columns in the order of the given cliques.
pub fn clique_matrix_of(g: &Graph, cliques: &[CliqueSet]) -> Result<BinaryMatrix> {
    let bits = cliques
        .iter()
        .map(|q| {
            let mut b = FixedBitSet::with_capacity(g.vertex_count());
            for v in q.iter() {
                b.insert(g.index_of(v).ok_or(Error::UnknownVertex(v))?);
            }
            Ok(b)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(incidence(g, &bits))
}

/// Exact interval vertex deletion solver.
#[derive(Debug, Clone, Copy)]
pub struct IntervalDeletion {
    /// Search-tree nodes allowed per budget level before falling back to
    /// exhaustive subset enumeration.
    pub node_budget: usize,
}

impl Default for IntervalDeletion {
    fn default() -> Self {
        IntervalDeletion {
            node_budget: 50_000,
        }
    }
}

enum Search {
    Found(Vec<usize>),
    Infeasible,
    OutOfBudget,
}

impl IntervalDeletion {
    /// A minimum-size set of at most `d` vertices whose removal leaves an
    /// interval graph, or `None`. Negative budgets are infeasible.
    pub fn solve(&self, g: &Graph, d: i64) -> Option<VertexSet> {
        self.solve_protected(g, d, &VertexSet::new())
    }

    /// As [`solve`](Self::solve), but vertices in `protected` may not be
    /// deleted.
    pub fn solve_protected(&self, g: &Graph, d: i64, protected: &VertexSet) -> Option<VertexSet> {
        if d < 0 {
            return None;
        }
        let all: Vec<usize> = (0..g.vertex_count()).collect();
        let deletable: Vec<bool> = (0..g.vertex_count())
            .map(|i| !protected.contains(g.label(i)))
            .collect();
        for k in 0..=d as usize {
            if k > g.vertex_count() {
                break;
            }
            let mut nodes = 0;
            let found = match self.branch(g, &all, &deletable, k, &mut nodes) {
                Search::Found(x) => Some(x),
                Search::Infeasible => None,
                Search::OutOfBudget => exhaustive(g, &all, &deletable, k),
            };
            if let Some(x) = found {
                let set: VertexSet = x.into_iter().map(|i| g.label(i)).collect();
                return Some(
                    minimalize_solution(g, &set).expect("solution leaves an interval graph"),
                );
            }
        }
        None
    }

    /// Searches for a deletion of size at most `k` inside `alive`.
    fn branch(
        &self,
        g: &Graph,
        alive: &[usize],
        deletable: &[bool],
        k: usize,
        nodes: &mut usize,
    ) -> Search {
        *nodes += 1;
        if *nodes > self.node_budget {
            return Search::OutOfBudget;
        }
        let sub = g.induced_by_indices(alive);
        let Some(obstruction) = find_obstruction(&sub) else {
            return Search::Found(Vec::new());
        };
        if k == 0 {
            return Search::Infeasible;
        }
        let mut out_of_budget = false;
        for v in obstruction.into_iter().map(|local| alive[local]) {
            if !deletable[v] {
                continue;
            }
            let rest: Vec<usize> = alive.iter().copied().filter(|&u| u != v).collect();
            match self.branch(g, &rest, deletable, k - 1, nodes) {
                Search::Found(mut x) => {
                    x.push(v);
                    x.sort_unstable();
                    return Search::Found(x);
                }
                Search::Infeasible => {}
                Search::OutOfBudget => {
                    out_of_budget = true;
                    break;
                }
            }
        }
        if out_of_budget {
            Search::OutOfBudget
        } else {
            Search::Infeasible
        }
    }
}

/// Lexicographically first `k`-subset of the deletable vertices of `alive`
/// whose removal leaves an interval graph.
fn exhaustive(g: &Graph, alive: &[usize], deletable: &[bool], k: usize) -> Option<Vec<usize>> {
    let candidates: Vec<usize> = alive.iter().copied().filter(|&v| deletable[v]).collect();
    let n = candidates.len();
    if k > n {
        return None;
    }
    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        let removed: Vec<usize> = pick.iter().map(|&i| candidates[i]).collect();
        let rest: Vec<usize> = alive
            .iter()
            .copied()
            .filter(|v| !removed.contains(v))
            .collect();
        if is_interval(&g.induced_by_indices(&rest)) {
            return Some(removed);
        }
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if pick[i] < n - k + i {
                break;
            }
        }
        pick[i] += 1;
        for j in i + 1..k {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

/// Storage indices of a minimal obstruction of `g`, ascending, or `None`
/// if `g` is an interval graph.
fn find_obstruction(g: &Graph) -> Option<Vec<usize>> {
    if is_chordal(g).is_none() {
        return Some(shortest_hole(g).expect("non-chordal graphs have a hole"));
    }
    if is_interval(g) {
        return None;
    }
    // Drop vertices from the top label down while the rest stays
    // non-interval; what remains is a minimal non-interval subgraph.
    let mut keep: Vec<usize> = (0..g.vertex_count()).collect();
    for v in (0..g.vertex_count()).rev() {
        let trial: Vec<usize> = keep.iter().copied().filter(|&u| u != v).collect();
        if !is_interval(&g.induced_by_indices(&trial)) {
            keep = trial;
        }
    }
    Some(keep)
}

/// A shortest induced cycle of length at least four, as ascending indices.
pub(crate) fn shortest_hole(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut best: Option<Vec<usize>> = None;
    for v in 0..n {
        let nbrs: Vec<usize> = g.adjacency(v).ones().collect();
        for (x, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[x + 1..] {
                if g.adjacency(a).contains(b) {
                    continue;
                }
                // Path a..b whose interior avoids v and its neighbourhood.
                let mut blocked = g.adjacency(v).clone();
                blocked.insert(v);
                blocked.set(a, false);
                blocked.set(b, false);
                if let Some(path) = bfs_path(g, a, b, &blocked) {
                    if best.as_ref().is_none_or(|h| path.len() + 1 < h.len()) {
                        let mut hole = path;
                        hole.push(v);
                        best = Some(hole);
                    }
                }
            }
        }
    }
    best.map(|mut h| {
        h.sort_unstable();
        h
    })
}

fn bfs_path(g: &Graph, from: usize, to: usize, blocked: &FixedBitSet) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut prev = vec![usize::MAX; n];
    prev[from] = from;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            return Some(path);
        }
        for w in g.adjacency(u).ones() {
            if prev[w] == usize::MAX && !blocked.contains(w) {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Exact interval vertex deletion with the default node budget.
pub fn interval_deletion(g: &Graph, d: i64) -> Option<VertexSet> {
    IntervalDeletion::default().solve(g, d)
}

/// Shrinks a deletion set to an inclusion-minimal one. Candidates are tried
/// from the largest label down, so smaller labels are kept on ties.
pub fn minimalize_solution(g: &Graph, deleted: &VertexSet) -> Result<VertexSet> {
    if let Some(v) = deleted.iter().find(|&v| !g.contains(v)) {
        return Err(Error::UnknownVertex(v));
    }
    if !is_interval(&g.remove_vertices(deleted)) {
        return Err(Error::Contract(
            "removing the given vertices does not leave an interval graph".into(),
        ));
    }
    let mut current = deleted.clone();
    for v in deleted.iter().rev() {
        current.remove(v);
        if !is_interval(&g.remove_vertices(&current)) {
            current.insert(v);
        }
    }
    Ok(current)
}
