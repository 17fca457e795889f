//! The recursive row-deletion algorithm and the convex bipartite deletion
//! reduction built on it.
//!
//! Each call first checks the consecutive ones property, then the budget,
//! then applies the first applicable branching rule:
//!
//! 1. three pairwise intersecting rows violating the Helly or union
//!    condition (3-way branch),
//! 2. an induced 4-cycle in the derived graph restricted to two columns
//!    (4-way branch),
//! 3. a maximal clique of the derived graph realised by no column, via an
//!    inclusion-minimal uncovered subset of it (3-way branch).
//!
//! When no rule applies, every maximal clique of the derived graph is some
//! column's vertex set, so the matrix with an identity block on top is the
//! clique matrix of its derived graph and the remaining budget is spent by
//! interval vertex deletion on that graph, with the identity-block vertices
//! marked undeletable. Without that restriction the leaf can answer YES
//! wrongly: an identity vertex is simplicial, yet deleting it alone may make
//! the graph interval while no single row deletion gives the property.

use std::fmt;

use crate::cop::{cop_order, verify_cop, ColumnPermutation};
use crate::error::{Error, Result};
use crate::graph::{
    derived_graph, find_c4, find_helly_violation, find_uncovered_clique, parse_graph_with_sides,
    Graph, HellyKind,
};
use crate::interval::IntervalDeletion;
use crate::matrix::{augment, delete_rows, set_system, BinaryMatrix};
use crate::sets::{RowSet, VertexSet};

/// A node of the search tree.
#[derive(Debug, Clone)]
pub struct CosrInstance {
    pub matrix: BinaryMatrix,
    /// Rows deleted so far, labelled as in the original input.
    pub accumulated: RowSet,
    /// Remaining budget; goes to -1 below the last affordable deletion.
    pub budget: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    Helly(HellyKind),
    /// Induced 4-cycle inside the pair subgraph of these two columns.
    InducedC4 {
        columns: (usize, usize),
    },
    UncoveredClique,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Recursive calls, including leaves and pruned calls.
    pub calls: usize,
    /// Calls at which a branching rule fired.
    pub branch_nodes: usize,
    /// Interval-deletion leaf calls.
    pub leaves: usize,
    pub rule1: usize,
    pub rule2: usize,
    pub rule3: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    /// Deleted rows when the answer is YES.
    pub solution: Option<RowSet>,
    /// Column order for the surviving matrix when the answer is YES.
    pub certificate: Option<ColumnPermutation>,
    pub stats: SolveStats,
}

impl SolveReport {
    pub fn is_yes(&self) -> bool {
        self.solution.is_some()
    }

    /// `YES`/`NO`, then for YES the sorted deleted rows and the certificate.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Statistics as `# key: value` lines.
    pub fn stats_text(&self) -> String {
        let s = &self.stats;
        format!(
            "# calls: {}\n# branch_nodes: {}\n# leaves: {}\n# rule1: {}\n# rule2: {}\n# rule3: {}\n",
            s.calls, s.branch_nodes, s.leaves, s.rule1, s.rule2, s.rule3
        )
    }
}

impl fmt::Display for SolveReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.solution, &self.certificate) {
            (Some(rows), Some(order)) => write!(f, "YES\n{rows}\n{order}\n"),
            _ => writeln!(f, "NO"),
        }
    }
}

/// Parses the text written by [`SolveReport::to_text`]. Statistics lines
/// (`# ...`) are ignored. Returns the deleted rows and certificate, or
/// `None` for a NO report.
pub fn parse_report(text: &str, n: usize) -> Result<Option<(RowSet, ColumnPermutation)>> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.starts_with('#'))
        .collect();
    match lines.first() {
        Some((_, "NO")) => return Ok(None),
        Some((_, "YES")) => {}
        Some((line, other)) => {
            return Err(Error::parse(
                *line,
                format!("expected YES or NO, got '{other}'"),
            ))
        }
        None => return Err(Error::parse(1, "empty report")),
    }
    let numbers = |idx: usize| -> Result<Vec<usize>> {
        let (line, text) = lines
            .get(idx)
            .copied()
            .ok_or_else(|| Error::parse(idx + 1, "report is truncated"))?;
        text.split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::parse(line, format!("invalid label '{t}'")))
            })
            .collect()
    };
    let rows: RowSet = numbers(1)?.into_iter().collect();
    let order = ColumnPermutation::new(numbers(2)?, n)?;
    Ok(Some((rows, order)))
}

/// Callbacks fired during a solve, for instrumentation and testing.
pub trait SolveObserver {
    fn on_branch(&mut self, _event: &BranchEvent<'_>) {}
    fn on_leaf(&mut self, _event: &LeafEvent<'_>) {}
}

impl SolveObserver for () {}

pub struct BranchEvent<'a> {
    pub instance: &'a CosrInstance,
    pub rule: Rule,
    /// Rows branched on, in exploration order.
    pub rows: &'a [usize],
}

pub struct LeafEvent<'a> {
    pub instance: &'a CosrInstance,
    pub augmented: &'a BinaryMatrix,
    /// Derived graph of `augmented`.
    pub graph: &'a Graph,
    /// The interval-deletion answer for the remaining budget.
    pub deletion: Option<&'a VertexSet>,
}

/// The row-deletion solver with a pluggable leaf interval-deletion solver.
#[derive(Debug, Clone, Copy, Default)]
pub struct CosrSolver {
    pub interval: IntervalDeletion,
}

impl CosrSolver {
    pub fn solve(&self, m: &BinaryMatrix, d: i64) -> Result<SolveReport> {
        self.solve_observed(m, d, &mut ())
    }

    pub fn solve_observed(
        &self,
        m: &BinaryMatrix,
        d: i64,
        observer: &mut dyn SolveObserver,
    ) -> Result<SolveReport> {
        if d < 0 {
            return Err(Error::Domain(format!(
                "budget must be non-negative, got {d}"
            )));
        }
        let mut stats = SolveStats::default();
        // All-zero rows never affect the property; dropping them keeps every
        // maximal clique of the derived graph inside some column.
        let zero_rows: RowSet = m
            .rows()
            .filter(|(_, r)| r.count_ones(..) == 0)
            .map(|(label, _)| label)
            .collect();
        let root = CosrInstance {
            matrix: delete_rows(m, &zero_rows)?,
            accumulated: RowSet::new(),
            budget: d,
        };
        let solution = self.recurse(&root, &mut stats, observer)?;
        let certificate = match &solution {
            Some(rows) => {
                let rest = delete_rows(m, rows)?;
                let order = cop_order(&rest).ok_or_else(|| {
                    Error::Contract(format!("deleting rows {{{rows}}} does not yield COP"))
                })?;
                debug_assert!(verify_cop(&rest, &order)?);
                Some(order)
            }
            None => None,
        };
        Ok(SolveReport {
            solution,
            certificate,
            stats,
        })
    }

    fn recurse(
        &self,
        inst: &CosrInstance,
        stats: &mut SolveStats,
        observer: &mut dyn SolveObserver,
    ) -> Result<Option<RowSet>> {
        stats.calls += 1;
        let m = &inst.matrix;
        if inst.budget >= 0 && cop_order(m).is_some() {
            return Ok(Some(inst.accumulated.clone()));
        }
        if inst.budget < 0 {
            return Ok(None);
        }

        if let Some(v) = find_helly_violation(&set_system(m)) {
            stats.rule1 += 1;
            return self.branch(inst, Rule::Helly(v.kind), &v.rows, stats, observer);
        }

        let g = derived_graph(m);
        if let Some((columns, cycle)) = find_pair_c4(m, &g) {
            stats.rule2 += 1;
            let mut rows = cycle.to_vec();
            rows.sort_unstable();
            return self.branch(inst, Rule::InducedC4 { columns }, &rows, stats, observer);
        }

        if let Some(u) = find_uncovered_clique(m)? {
            stats.rule3 += 1;
            let rows: Vec<usize> = u.minimal.iter().take(3).collect();
            return self.branch(inst, Rule::UncoveredClique, &rows, stats, observer);
        }

        stats.leaves += 1;
        let augmented = augment(m);
        let leaf_graph = derived_graph(&augmented);
        // Identity-row vertices are undeletable: removing real rows keeps the
        // augmented matrix the clique matrix of its derived graph, which is
        // what makes the two problems equivalent at this point.
        let protected: VertexSet = augmented
            .identity_rows()
            .map(|ids| ids.iter().copied().collect())
            .unwrap_or_default();
        let deletion = self
            .interval
            .solve_protected(&leaf_graph, inst.budget, &protected);
        observer.on_leaf(&LeafEvent {
            instance: inst,
            augmented: &augmented,
            graph: &leaf_graph,
            deletion: deletion.as_ref(),
        });
        let Some(deletion) = deletion else {
            return Ok(None);
        };
        let mut out = inst.accumulated.clone();
        for v in deletion.iter() {
            let row = leaf_graph
                .origin(v)
                .expect("derived graphs record row origins");
            if augmented.is_identity_row(row) {
                return Err(Error::Contract(format!(
                    "leaf interval deletion removed identity row {row}"
                )));
            }
            out.insert(row);
        }
        Ok(Some(out))
    }

    fn branch(
        &self,
        inst: &CosrInstance,
        rule: Rule,
        rows: &[usize],
        stats: &mut SolveStats,
        observer: &mut dyn SolveObserver,
    ) -> Result<Option<RowSet>> {
        stats.branch_nodes += 1;
        observer.on_branch(&BranchEvent {
            instance: inst,
            rule,
            rows,
        });
        for &r in rows {
            let mut accumulated = inst.accumulated.clone();
            accumulated.insert(r);
            let child = CosrInstance {
                matrix: delete_rows(&inst.matrix, &RowSet::from([r]))?,
                accumulated,
                budget: inst.budget - 1,
            };
            if let Some(found) = self.recurse(&child, stats, observer)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

/// First column pair (lexicographic) whose pair subgraph has an induced C4.
pub fn find_pair_c4(m: &BinaryMatrix, g: &Graph) -> Option<((usize, usize), [usize; 4])> {
    let n = m.col_count();
    let verts: Vec<VertexSet> = (1..=n)
        .map(|c| crate::graph::vert(m, c).expect("column in range"))
        .collect();
    for ci in 0..n {
        for cj in ci + 1..n {
            let keep = verts[ci].union(&verts[cj]);
            if keep.len() < 4 {
                continue;
            }
            if let Some(cycle) = find_c4(&g.induced_subgraph(&keep)) {
                return Some(((ci + 1, cj + 1), cycle));
            }
        }
    }
    None
}

/// Decides whether at most `d` rows can be deleted to reach the consecutive
/// ones property.
pub fn cos_r(m: &BinaryMatrix, d: i64) -> Result<SolveReport> {
    CosrSolver::default().solve(m, d)
}

/// A bipartite graph on `1..=n` whose vertices `1..=left` form one side
/// and `left+1..=n` the other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    pub graph: Graph,
    pub left: usize,
}

impl BipartiteGraph {
    pub fn new(graph: Graph, left: usize) -> Result<Self> {
        if left > graph.vertex_count() {
            return Err(Error::Domain(format!(
                "side size {left} exceeds {} vertices",
                graph.vertex_count()
            )));
        }
        Ok(BipartiteGraph { graph, left })
    }

    pub fn right(&self) -> usize {
        self.graph.vertex_count() - self.left
    }

    fn is_left(&self, v: usize) -> bool {
        v <= self.left
    }
}

/// Parses a graph file carrying a `sides k` line: vertices `1..=k` are the
/// row side. Edges inside one side are rejected with their line number.
pub fn parse_bipartite(text: &str) -> Result<BipartiteGraph> {
    let parsed = parse_graph_with_sides(text, true)?;
    let left = parsed.sides.expect("parser requires a sides line");
    let b = BipartiteGraph::new(parsed.graph, left)?;
    if let Some(((u, v), line)) = parsed
        .edge_lines
        .iter()
        .find(|((u, v), _)| b.is_left(*u) == b.is_left(*v))
    {
        return Err(Error::parse(
            *line,
            format!("edge {u} {v} lies inside one side"),
        ));
    }
    Ok(b)
}

/// The `|V1| x |V2|` matrix with a 1 where `x_i y_j` is an edge.
pub fn half_adjacency(b: &BipartiteGraph) -> Result<BinaryMatrix> {
    let mut rows: Vec<Vec<u8>> = vec![vec![0; b.right()]; b.left];
    for (u, v) in b.graph.edges() {
        if b.is_left(u) == b.is_left(v) {
            return Err(Error::Domain(format!("edge {u} {v} lies inside one side")));
        }
        rows[u - 1][v - b.left - 1] = 1;
    }
    BinaryMatrix::from_dense(b.right(), &rows)
}

/// Deletes at most `d` row-side vertices so the graph becomes convex
/// bipartite. The solution is reported as row-side vertex labels.
pub fn convex_bipartite_deletion(b: &BipartiteGraph, d: i64) -> Result<SolveReport> {
    let m = half_adjacency(b)?;
    let mut report = cos_r(&m, d)?;
    // Row i of the half adjacency matrix is the row-side vertex labelled i.
    let row_side: Vec<usize> = (1..=b.left).collect();
    report.solution = report
        .solution
        .map(|rows| rows.iter().map(|r| row_side[r - 1]).collect());
    Ok(report)
}
