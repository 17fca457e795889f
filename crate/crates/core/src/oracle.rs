//! Brute-force reference implementations.
//!
//! Nothing here calls the production recognizers or solvers; the oracles
//! share only the matrix and graph types. Interval graphs are recognised
//! straight from the definition used here: some linear order of the
//! maximal cliques makes each vertex's cliques consecutive.
//!
//! Every oracle has a size guard and refuses larger inputs with
//! [`Error::Refused`].

use fixedbitset::FixedBitSet;
use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cop::ColumnPermutation;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::{delete_rows, BinaryMatrix};
use crate::sets::{CliqueSet, RowSet, VertexSet};

pub const MAX_BRUTE_COP_COLUMNS: usize = 9;
pub const MAX_BRUTE_COSR_SUBSETS: u64 = 200_000;
pub const MAX_BRUTE_CLIQUE_VERTICES: usize = 16;

/// First column order (in lexicographic order of permutations) under which
/// every row's ones are consecutive.
pub fn brute_cop(m: &BinaryMatrix) -> Result<Option<ColumnPermutation>> {
    let n = m.col_count();
    if n > MAX_BRUTE_COP_COLUMNS {
        return Err(Error::Refused(format!(
            "{n} columns exceeds the permutation guard of {MAX_BRUTE_COP_COLUMNS}"
        )));
    }
    let rows: Vec<&FixedBitSet> = m.rows().map(|(_, r)| r).collect();
    Ok(first_consecutive_order(&rows, n)
        .map(|order| ColumnPermutation::new(order, n).expect("search yields a permutation")))
}

/// Depth-first search over permutations in lexicographic order. A prefix is
/// abandoned as soon as some row's run of ones has closed while ones of
/// that row remain unplaced, which never skips a valid permutation.
fn first_consecutive_order(rows: &[&FixedBitSet], n: usize) -> Option<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Run {
        NotStarted,
        Open,
        Closed,
    }

    fn go(
        rows: &[&FixedBitSet],
        n: usize,
        order: &mut Vec<usize>,
        used: &mut [bool],
        runs: &mut Vec<Run>,
        remaining: &mut Vec<usize>,
    ) -> bool {
        if order.len() == n {
            return true;
        }
        for c in 0..n {
            if used[c] {
                continue;
            }
            let saved_runs = runs.clone();
            let saved_remaining = remaining.clone();
            let mut ok = true;
            for (i, row) in rows.iter().enumerate() {
                if row.contains(c) {
                    if runs[i] == Run::Closed {
                        ok = false;
                        break;
                    }
                    runs[i] = Run::Open;
                    remaining[i] -= 1;
                } else if runs[i] == Run::Open {
                    if remaining[i] > 0 {
                        ok = false;
                        break;
                    }
                    runs[i] = Run::Closed;
                }
            }
            if ok {
                used[c] = true;
                order.push(c + 1);
                if go(rows, n, order, used, runs, remaining) {
                    return true;
                }
                order.pop();
                used[c] = false;
            }
            *runs = saved_runs;
            *remaining = saved_remaining;
        }
        false
    }

    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut runs = vec![Run::NotStarted; rows.len()];
    let mut remaining: Vec<usize> = rows.iter().map(|r| r.count_ones(..)).collect();
    go(rows, n, &mut order, &mut used, &mut runs, &mut remaining).then_some(order)
}

fn has_cop(m: &BinaryMatrix) -> bool {
    let rows: Vec<&FixedBitSet> = m.rows().map(|(_, r)| r).collect();
    first_consecutive_order(&rows, m.col_count()).is_some()
}

fn binomial_prefix_sum(m: usize, d: usize) -> u64 {
    let mut total: u64 = 0;
    let mut term: u64 = 1;
    for k in 0..=d.min(m) {
        total = total.saturating_add(term);
        term = term.saturating_mul((m - k) as u64) / (k as u64 + 1);
    }
    total
}

/// Calls `visit` on every `k`-subset of `0..n` in lexicographic order until
/// it returns `true`.
fn for_each_subset(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    if k > n {
        return false;
    }
    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        if visit(&pick) {
            return true;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return false;
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

fn cosr_guard(m: &BinaryMatrix, d: usize) -> Result<()> {
    if m.col_count() > MAX_BRUTE_COP_COLUMNS {
        return Err(Error::Refused(format!(
            "{} columns exceeds the permutation guard of {MAX_BRUTE_COP_COLUMNS}",
            m.col_count()
        )));
    }
    let subsets = binomial_prefix_sum(m.row_count(), d);
    if subsets > MAX_BRUTE_COSR_SUBSETS {
        return Err(Error::Refused(format!(
            "{subsets} candidate deletion sets exceeds {MAX_BRUTE_COSR_SUBSETS}"
        )));
    }
    Ok(())
}

/// Smallest row set of size at most `d` whose deletion yields COP,
/// lexicographically first among equal sizes.
pub fn brute_cosr(m: &BinaryMatrix, d: i64) -> Result<Option<RowSet>> {
    if d < 0 {
        return Ok(None);
    }
    let d = d as usize;
    cosr_guard(m, d)?;
    let labels = m.row_labels().to_vec();
    for k in 0..=d.min(labels.len()) {
        let mut found = None;
        for_each_subset(labels.len(), k, |pick| {
            let rows: RowSet = pick.iter().map(|&i| labels[i]).collect();
            let rest = delete_rows(m, &rows).expect("labels come from the matrix");
            if has_cop(&rest) {
                found = Some(rows);
                true
            } else {
                false
            }
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Every minimum-size deletion set, provided the minimum is at most `d`.
pub fn brute_minimum_deletions(m: &BinaryMatrix, d: i64) -> Result<Vec<RowSet>> {
    if d < 0 {
        return Ok(Vec::new());
    }
    let d = d as usize;
    cosr_guard(m, d)?;
    let labels = m.row_labels().to_vec();
    for k in 0..=d.min(labels.len()) {
        let mut all = Vec::new();
        for_each_subset(labels.len(), k, |pick| {
            let rows: RowSet = pick.iter().map(|&i| labels[i]).collect();
            if has_cop(&delete_rows(m, &rows).expect("labels come from the matrix")) {
                all.push(rows);
            }
            false
        });
        if !all.is_empty() {
            return Ok(all);
        }
    }
    Ok(Vec::new())
}

/// All maximal cliques, by growing cliques one vertex at a time in
/// ascending order and keeping those with no common neighbour outside.
pub fn brute_maximal_cliques(g: &Graph) -> Result<Vec<CliqueSet>> {
    let n = g.vertex_count();
    if n > MAX_BRUTE_CLIQUE_VERTICES {
        return Err(Error::Refused(format!(
            "{n} vertices exceeds the clique guard of {MAX_BRUTE_CLIQUE_VERTICES}"
        )));
    }
    let labels = g.labels();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(clique) = stack.pop() {
        let start = clique.last().map_or(0, |&v| v + 1);
        for v in start..n {
            if clique.iter().all(|&u| g.has_edge(labels[u], labels[v])) {
                let mut next = clique.clone();
                next.push(v);
                stack.push(next);
            }
        }
        if clique.is_empty() {
            continue;
        }
        let extendable = (0..n).any(|w| {
            !clique.contains(&w) && clique.iter().all(|&u| g.has_edge(labels[u], labels[w]))
        });
        if !extendable {
            out.push(clique.iter().map(|&i| labels[i]).collect::<CliqueSet>());
        }
    }
    // Isolated vertices are already handled above; the empty graph has none.
    out.sort();
    Ok(out)
}

/// Interval test from the definition: the maximal cliques admit a linear
/// order in which every vertex's cliques are consecutive.
pub fn brute_is_interval(g: &Graph) -> Result<bool> {
    let cliques = brute_maximal_cliques(g)?;
    let k = cliques.len();
    let rows: Vec<FixedBitSet> = g
        .labels()
        .iter()
        .map(|&v| {
            let mut row = FixedBitSet::with_capacity(k);
            for (c, q) in cliques.iter().enumerate() {
                if q.contains(v) {
                    row.insert(c);
                }
            }
            row
        })
        .collect();
    let refs: Vec<&FixedBitSet> = rows.iter().collect();
    Ok(first_consecutive_order(&refs, k).is_some())
}

/// Smallest vertex set of size at most `d` whose removal leaves an interval
/// graph, lexicographically first among equal sizes.
pub fn brute_interval_deletion(g: &Graph, d: i64) -> Result<Option<VertexSet>> {
    let n = g.vertex_count();
    if n > MAX_BRUTE_CLIQUE_VERTICES || (n > 12 && d > 3) {
        return Err(Error::Refused(format!(
            "interval deletion oracle needs n <= 12 or d <= 3 (and n <= {MAX_BRUTE_CLIQUE_VERTICES}); got n = {n}, d = {d}"
        )));
    }
    if d < 0 {
        return Ok(None);
    }
    let labels = g.labels().to_vec();
    for k in 0..=(d as usize).min(n) {
        let mut found = None;
        let mut failure = None;
        for_each_subset(n, k, |pick| {
            let removed: VertexSet = pick.iter().map(|&i| labels[i]).collect();
            match brute_is_interval(&g.remove_vertices(&removed)) {
                Ok(true) => {
                    found = Some(removed);
                    true
                }
                Ok(false) => false,
                Err(e) => {
                    failure = Some(e);
                    true
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Uniform `[0, 1)` double from the top 53 bits of one 64-bit draw.
fn unit(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn check_density(density: f64) -> Result<()> {
    if (0.0..=1.0).contains(&density) {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "density {density} is outside [0, 1]"
        )))
    }
}

/// Deterministic random matrix. The generator is ChaCha8 seeded with
/// `seed_from_u64(seed)`; cells are drawn row-major, one `u64` per cell,
/// and a cell is 1 when the top 53 bits scaled to `[0, 1)` fall below
/// `density`.
pub fn random_instance(seed: u64, m: usize, n: usize, density: f64) -> Result<BinaryMatrix> {
    check_density(density)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<Vec<u8>> = (0..m)
        .map(|_| (0..n).map(|_| u8::from(unit(&mut rng) < density)).collect())
        .collect();
    BinaryMatrix::from_dense(n, &rows)
}

/// Deterministic G(n, p) graph on `1..=n`, pairs drawn in lexicographic
/// order with the same cell rule as [`random_instance`].
pub fn random_graph(seed: u64, n: usize, p: f64) -> Result<Graph> {
    check_density(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::with_vertices(1..=n);
    for u in 1..=n {
        for v in u + 1..=n {
            if unit(&mut rng) < p {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Intersection graph of `n` random integer intervals inside `[0, span)`.
pub fn random_interval_graph(seed: u64, n: usize, span: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = span.max(1);
    let intervals: Vec<(u64, u64)> = (0..n)
        .map(|_| {
            let a = rng.next_u64() % span;
            let b = rng.next_u64() % span;
            (a.min(b), a.max(b))
        })
        .collect();
    let mut g = Graph::with_vertices(1..=n);
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = (intervals[u], intervals[v]);
            if a.0 <= b.1 && b.0 <= a.1 {
                g.add_edge(u + 1, v + 1).expect("vertices exist");
            }
        }
    }
    g
}

/// Random bipartite graph with sides `1..=left` and `left+1..=left+right`.
pub fn random_bipartite(seed: u64, left: usize, right: usize, p: f64) -> Result<Graph> {
    check_density(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::with_vertices(1..=left + right);
    for u in 1..=left {
        for v in left + 1..=left + right {
            if unit(&mut rng) < p {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}
