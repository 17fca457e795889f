//! Simple undirected graphs, derived graphs of matrices, and the structural
//! detectors used by the branching rules.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::matrix::{BinaryMatrix, SetSystem};
use crate::sets::{CliqueSet, VertexSet};

/// A simple undirected graph on arbitrary positive labels.
///
/// Vertices are stored in ascending label order and adjacency is kept as
/// one bitset per vertex over storage indices, so index order and label
/// order coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<usize>,
    adj: Vec<FixedBitSet>,
    /// Source row label of each vertex, for graphs derived from a matrix.
    origin: Option<Vec<usize>>,
}

impl Graph {
    /// An edgeless graph on the given labels (deduplicated and sorted).
    pub fn with_vertices(labels: impl IntoIterator<Item = usize>) -> Self {
        let mut labels: Vec<usize> = labels.into_iter().collect();
        labels.sort_unstable();
        labels.dedup();
        let n = labels.len();
        Graph {
            labels,
            adj: vec![FixedBitSet::with_capacity(n); n],
            origin: None,
        }
    }

    /// Graph on `1..=n` with the given edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::with_vertices(1..=n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let a = self.index_of(u).ok_or(Error::UnknownVertex(u))?;
        let b = self.index_of(v).ok_or(Error::UnknownVertex(v))?;
        if a == b {
            return Err(Error::Domain(format!("self-loop on vertex {u}")));
        }
        self.adj[a].insert(b);
        self.adj[b].insert(a);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn vertices(&self) -> VertexSet {
        self.labels.iter().copied().collect()
    }

    pub fn index_of(&self, label: usize) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn label(&self, index: usize) -> usize {
        self.labels[index]
    }

    pub fn contains(&self, label: usize) -> bool {
        self.index_of(label).is_some()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(a), Some(b)) => self.adj[a].contains(b),
            _ => false,
        }
    }

    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        let i = self.index_of(v).ok_or(Error::UnknownVertex(v))?;
        Ok(self.adj[i].ones().map(|j| self.labels[j]).collect())
    }

    /// Edges as label pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, a) in self.adj.iter().enumerate() {
            for j in a.ones().filter(|&j| j > i) {
                out.push((self.labels[i], self.labels[j]));
            }
        }
        out
    }

    pub(crate) fn adjacency(&self, index: usize) -> &FixedBitSet {
        &self.adj[index]
    }

    pub fn origin(&self, v: usize) -> Option<usize> {
        let i = self.index_of(v)?;
        self.origin.as_ref().map(|o| o[i])
    }

    /// `G[keep]`; labels outside the graph are ignored.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Graph {
        let idx: Vec<usize> = keep.iter().filter_map(|v| self.index_of(v)).collect();
        self.induced_by_indices(&idx)
    }

    /// `G \ removed`.
    pub fn remove_vertices(&self, removed: &VertexSet) -> Graph {
        let idx: Vec<usize> = (0..self.labels.len())
            .filter(|&i| !removed.contains(self.labels[i]))
            .collect();
        self.induced_by_indices(&idx)
    }

    /// Induced subgraph on ascending storage indices.
    pub(crate) fn induced_by_indices(&self, idx: &[usize]) -> Graph {
        let k = idx.len();
        let mut adj = vec![FixedBitSet::with_capacity(k); k];
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate().skip(a + 1) {
                if self.adj[i].contains(j) {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
            }
        }
        Graph {
            labels: idx.iter().map(|&i| self.labels[i]).collect(),
            adj,
            origin: self
                .origin
                .as_ref()
                .map(|o| idx.iter().map(|&i| o[i]).collect()),
        }
    }

    /// Graph file text: header `n m`, then one `u v` line per edge.
    /// Only meaningful for graphs labelled `1..=n`.
    pub fn to_text(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.vertex_count(), edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Parses the graph file format: `#` comments, header `n m`, then `m` edge
/// lines `u v` over vertices `1..=n`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let parsed = parse_graph_with_sides(text, false)?;
    debug_assert!(parsed.sides.is_none());
    Ok(parsed.graph)
}

pub(crate) struct ParsedGraph {
    pub graph: Graph,
    /// The `sides k` value, if the file had one.
    pub sides: Option<usize>,
    /// Each edge with the 1-based line it was read from.
    pub edge_lines: Vec<((usize, usize), usize)>,
}

/// Shared parser for plain and bipartite graph files. With `allow_sides`,
/// one `sides k` line may appear among the edge lines (and is required).
pub(crate) fn parse_graph_with_sides(text: &str, allow_sides: bool) -> Result<ParsedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header \"n m\""))?;
    let (n, m) = crate::matrix::parse_header(header_line, header)?;

    let mut g = Graph::with_vertices(1..=n);
    let mut sides = None;
    let mut edge_lines = Vec::new();
    for (line_no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.first() == Some(&"sides") {
            if !allow_sides {
                return Err(Error::parse(line_no, "unexpected \"sides\" line"));
            }
            if sides.is_some() {
                return Err(Error::parse(line_no, "duplicate \"sides\" line"));
            }
            let k = match fields.as_slice() {
                [_, k] => k.parse::<usize>().ok().filter(|&k| k <= n),
                _ => None,
            }
            .ok_or_else(|| Error::parse(line_no, format!("expected \"sides k\" with k <= {n}")))?;
            sides = Some(k);
            continue;
        }
        if edge_lines.len() == m {
            return Err(Error::parse(
                line_no,
                format!("unexpected content after {m} edges"),
            ));
        }
        let (u, v) = match fields.as_slice() {
            [a, b] => (a.parse::<usize>(), b.parse::<usize>()),
            _ => return Err(Error::parse(line_no, "edge line must be \"u v\"")),
        };
        let (u, v) = match (u, v) {
            (Ok(u), Ok(v)) => (u, v),
            _ => return Err(Error::parse(line_no, "edge endpoints must be integers")),
        };
        if u == 0 || v == 0 || u > n || v > n {
            return Err(Error::parse(
                line_no,
                format!("endpoint out of range 1..={n}"),
            ));
        }
        if u == v {
            return Err(Error::parse(line_no, "self-loop"));
        }
        if g.has_edge(u, v) {
            return Err(Error::parse(line_no, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v)?;
        edge_lines.push(((u, v), line_no));
    }
    if edge_lines.len() < m {
        return Err(Error::parse(
            text.lines().count() + 1,
            format!("expected {m} edges, found {}", edge_lines.len()),
        ));
    }
    if allow_sides && sides.is_none() {
        return Err(Error::parse(
            text.lines().count() + 1,
            "missing \"sides k\" line",
        ));
    }
    Ok(ParsedGraph {
        graph: g,
        sides,
        edge_lines,
    })
}

/// `G(M)`: one vertex per row (labelled by the row label), adjacent iff the
/// rows share a column.
pub fn derived_graph(m: &BinaryMatrix) -> Graph {
    let mut g = Graph::with_vertices(m.row_labels().iter().copied());
    let rows: Vec<(usize, &FixedBitSet)> = m.rows().collect();
    for (a, (la, ra)) in rows.iter().enumerate() {
        for (lb, rb) in &rows[a + 1..] {
            if !ra.is_disjoint(rb) {
                g.add_edge(*la, *lb).expect("row labels are vertices");
            }
        }
    }
    g.origin = Some(g.labels.clone());
    g
}

/// `vert(c)`: the derived-graph vertices whose rows have a 1 in column `c`.
pub fn vert(m: &BinaryMatrix, col: usize) -> Result<VertexSet> {
    m.check_column(col)?;
    Ok(m.column_support_indices(col)
        .map(|i| m.row_labels()[i])
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HellyKind {
    /// The three sets have empty common intersection.
    H1,
    /// No set is contained in the union of the other two.
    H2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HellyViolation {
    pub rows: [usize; 3],
    pub kind: HellyKind,
}

/// First pairwise-intersecting triple of rows (in row order) whose sets
/// have empty common intersection or where none lies in the union of the
/// other two.
pub fn find_helly_violation(sets: &SetSystem) -> Option<HellyViolation> {
    let s = sets.sets();
    let k = s.len();
    for a in 0..k {
        for b in a + 1..k {
            if s[a].1.is_disjoint(&s[b].1) {
                continue;
            }
            let mut ab = s[a].1.clone();
            ab.intersect_with(&s[b].1);
            for c in b + 1..k {
                if s[a].1.is_disjoint(&s[c].1) || s[b].1.is_disjoint(&s[c].1) {
                    continue;
                }
                let rows = [s[a].0, s[b].0, s[c].0];
                if ab.is_disjoint(&s[c].1) {
                    return Some(HellyViolation {
                        rows,
                        kind: HellyKind::H1,
                    });
                }
                let inside = |x: usize, y: usize, z: usize| {
                    let mut u = s[y].1.clone();
                    u.union_with(&s[z].1);
                    s[x].1.is_subset(&u)
                };
                if !inside(a, b, c) && !inside(b, a, c) && !inside(c, a, b) {
                    return Some(HellyViolation {
                        rows,
                        kind: HellyKind::H2,
                    });
                }
            }
        }
    }
    None
}

/// `G(M)[vert(c_i) ∪ vert(c_j)]` for two distinct columns.
pub fn pair_subgraph(m: &BinaryMatrix, ci: usize, cj: usize) -> Result<Graph> {
    m.check_column(ci)?;
    m.check_column(cj)?;
    if ci == cj {
        return Err(Error::Domain(format!(
            "column pair needs two columns, got {ci} twice"
        )));
    }
    let keep = vert(m, ci)?.union(&vert(m, cj)?);
    Ok(derived_graph(m).induced_subgraph(&keep))
}

/// An induced 4-cycle in cyclic order: the first non-adjacent pair `(a, c)`
/// (lexicographically) with two non-adjacent common neighbours `b < d`.
pub fn find_c4(g: &Graph) -> Option<[usize; 4]> {
    let n = g.vertex_count();
    for a in 0..n {
        for c in a + 1..n {
            if g.adj[a].contains(c) {
                continue;
            }
            let mut common = g.adj[a].clone();
            common.intersect_with(&g.adj[c]);
            let common: Vec<usize> = common.ones().collect();
            for (x, &b) in common.iter().enumerate() {
                if let Some(&d) = common[x + 1..].iter().find(|&&d| !g.adj[b].contains(d)) {
                    return Some([g.labels[a], g.labels[b], g.labels[c], g.labels[d]]);
                }
            }
        }
    }
    None
}

/// Maximum cardinality search; returns a verified perfect elimination
/// ordering (as labels) or `None` if the graph is not chordal.
pub fn is_chordal(g: &Graph) -> Option<Vec<usize>> {
    let order = mcs_peo(g);
    peo_is_valid(g, &order).then(|| order.iter().map(|&i| g.labels[i]).collect())
}

/// Reverse of the MCS visit order, as storage indices. Ties go to the
/// smallest index.
fn mcs_peo(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unnumbered vertex remains");
        numbered[v] = true;
        visit.push(v);
        for w in g.adj[v].ones() {
            if !numbered[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

/// For each vertex, its later neighbours minus the earliest of them must be
/// adjacent to that earliest one.
fn peo_is_valid(g: &Graph, order: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut pos = vec![usize::MAX; n];
    for (p, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = p;
    }
    if order.len() != n {
        return false;
    }
    for &v in order {
        let later: Vec<usize> = g.adj[v].ones().filter(|&w| pos[w] > pos[v]).collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if later
            .iter()
            .any(|&w| w != parent && !g.adj[parent].contains(w))
        {
            return false;
        }
    }
    true
}

/// All maximal cliques of a chordal graph from its perfect elimination
/// ordering, sorted.
pub fn maximal_cliques_chordal(g: &Graph, peo: &[usize]) -> Result<Vec<CliqueSet>> {
    let order = peo
        .iter()
        .map(|&v| g.index_of(v).ok_or(Error::UnknownVertex(v)))
        .collect::<Result<Vec<usize>>>()?;
    if !peo_is_valid(g, &order) {
        return Err(Error::Contract("not a perfect elimination ordering".into()));
    }
    let cliques = clique_bits_from_peo(g, &order);
    let mut out: Vec<CliqueSet> = cliques
        .iter()
        .map(|c| c.ones().map(|i| g.labels[i]).collect())
        .collect();
    out.sort();
    Ok(out)
}

/// Maximal cliques as index bitsets; `order` must be a valid PEO.
pub(crate) fn clique_bits_from_peo(g: &Graph, order: &[usize]) -> Vec<FixedBitSet> {
    let n = g.vertex_count();
    let mut pos = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    let candidates: Vec<FixedBitSet> = order
        .iter()
        .map(|&v| {
            let mut c: FixedBitSet = g.adj[v].ones().filter(|&w| pos[w] > pos[v]).collect();
            c.grow(n);
            c.insert(v);
            c
        })
        .collect();
    candidates
        .iter()
        .enumerate()
        .filter(|(i, c)| {
            !candidates
                .iter()
                .enumerate()
                .any(|(j, d)| j != *i && c.is_subset(d) && c != &d)
        })
        .map(|(_, c)| c.clone())
        .collect()
}

/// A maximal clique of `G(M)` equal to no column's `vert`, with an
/// inclusion-minimal subset that no column's `vert` contains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UncoveredClique {
    pub clique: CliqueSet,
    pub minimal: CliqueSet,
}

/// Scans column pairs for a maximal clique of `G(M)` that no column
/// realises. Requires every pair subgraph to be chordal.
pub fn find_uncovered_clique(m: &BinaryMatrix) -> Result<Option<UncoveredClique>> {
    let n = m.col_count();
    let g = derived_graph(m);
    // Storage indices of g coincide with sorted row labels, not with matrix
    // storage order, so build column vertex sets through labels.
    let col_verts: Vec<FixedBitSet> = (1..=n)
        .map(|c| {
            let mut bits = FixedBitSet::with_capacity(g.vertex_count());
            for i in m.column_support_indices(c) {
                bits.insert(g.index_of(m.row_labels()[i]).expect("row is a vertex"));
            }
            bits
        })
        .collect();
    let covered = |set: &FixedBitSet| col_verts.iter().any(|v| set.is_subset(v));

    for ci in 0..n {
        for cj in ci + 1..n {
            let mut keep = col_verts[ci].clone();
            keep.union_with(&col_verts[cj]);
            let idx: Vec<usize> = keep.ones().collect();
            if idx.is_empty() {
                continue;
            }
            let sub = g.induced_by_indices(&idx);
            let peo = mcs_peo(&sub);
            if !peo_is_valid(&sub, &peo) {
                return Err(Error::Contract(format!(
                    "pair subgraph of columns {} and {} is not chordal",
                    ci + 1,
                    cj + 1
                )));
            }
            for local in clique_bits_from_peo(&sub, &peo) {
                let mut q = FixedBitSet::with_capacity(g.vertex_count());
                q.extend(local.ones().map(|a| idx[a]));
                if !is_maximal_in(&g, &q) || col_verts.contains(&q) {
                    continue;
                }
                let minimal = minimise_uncovered(&q, covered);
                let to_labels =
                    |b: &FixedBitSet| -> CliqueSet { b.ones().map(|i| g.labels[i]).collect() };
                if minimal.count_ones(..) < 3 {
                    return Err(Error::Contract(format!(
                        "uncovered subset {{{}}} has fewer than three vertices",
                        to_labels(&minimal)
                    )));
                }
                // Each punctured set is covered, and by pairwise distinct
                // columns since no column covers all of `minimal`.
                let mut cover_cols = Vec::new();
                for v in minimal.ones() {
                    let mut punctured = minimal.clone();
                    punctured.set(v, false);
                    let col = col_verts.iter().position(|c| punctured.is_subset(c));
                    if col.is_none() || cover_cols.contains(&col) {
                        return Err(Error::Contract(format!(
                            "uncovered subset {{{}}} is not minimal",
                            to_labels(&minimal)
                        )));
                    }
                    cover_cols.push(col);
                }
                return Ok(Some(UncoveredClique {
                    clique: to_labels(&q),
                    minimal: to_labels(&minimal),
                }));
            }
        }
    }
    Ok(None)
}

/// True iff no vertex outside the clique is adjacent to all of it.
fn is_maximal_in(g: &Graph, clique: &FixedBitSet) -> bool {
    let mut common = FixedBitSet::with_capacity(g.vertex_count());
    common.insert_range(..);
    for v in clique.ones() {
        common.intersect_with(&g.adj[v]);
    }
    common.difference_with(clique);
    common.count_ones(..) == 0
}

/// Greedy single pass in ascending order: drop a vertex whenever the rest
/// stays uncovered. Uncoveredness is upward closed, so one pass suffices.
fn minimise_uncovered(q: &FixedBitSet, covered: impl Fn(&FixedBitSet) -> bool) -> FixedBitSet {
    let mut current = q.clone();
    for v in q.ones() {
        current.set(v, false);
        if covered(&current) {
            current.insert(v);
        }
    }
    current
}

/// True iff the neighbourhood of `v` is a clique.
pub fn is_simplicial(g: &Graph, v: usize) -> Result<bool> {
    let i = g.index_of(v).ok_or(Error::UnknownVertex(v))?;
    let nbrs: Vec<usize> = g.adj[i].ones().collect();
    Ok(nbrs
        .iter()
        .enumerate()
        .all(|(x, &a)| nbrs[x + 1..].iter().all(|&b| g.adj[a].contains(b))))
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::matrix::fixtures::{m1, m2, m_h4};
    use crate::matrix::set_system;

    fn mat(n: usize, rows: &[&[usize]]) -> BinaryMatrix {
        BinaryMatrix::from_row_sets(n, rows).unwrap()
    }

    #[test]
    fn derived_graph_examples() {
        assert_eq!(derived_graph(&BinaryMatrix::identity(3)).edge_count(), 0);
        let g = derived_graph(&m1());
        assert_eq!(g.edges(), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(g.origin(2), Some(2));
        // column 1 = {r1, r2}, column 2 = {r2, r3}
        let p = mat(2, &[&[1], &[1, 2], &[2]]);
        assert_eq!(derived_graph(&p).edges(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn vert_examples() {
        assert_eq!(vert(&BinaryMatrix::identity(3), 1).unwrap(), [1].into());
        assert_eq!(vert(&m1(), 6).unwrap(), [2, 3].into());
        assert!(vert(&BinaryMatrix::zeros(2, 2), 2).unwrap().is_empty());
        assert_eq!(vert(&m1(), 0).unwrap_err(), Error::UnknownColumn(0));
    }

    #[test]
    fn helly_examples() {
        assert_eq!(
            find_helly_violation(&set_system(&m1())),
            Some(HellyViolation {
                rows: [1, 2, 3],
                kind: HellyKind::H1
            })
        );
        assert_eq!(
            find_helly_violation(&set_system(&m2())),
            Some(HellyViolation {
                rows: [1, 2, 3],
                kind: HellyKind::H2
            })
        );
        assert_eq!(
            find_helly_violation(&set_system(&BinaryMatrix::identity(3))),
            None
        );
    }

    #[test]
    fn pair_subgraph_examples() {
        let g = pair_subgraph(&BinaryMatrix::identity(2), 1, 2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 0));
        let g = pair_subgraph(&m1(), 1, 6).unwrap();
        assert_eq!(g.labels(), &[1, 2, 3]);
        assert_eq!(g.edge_count(), 3);
        let same = mat(2, &[&[1, 2], &[1, 2], &[1, 2]]);
        assert_eq!(pair_subgraph(&same, 1, 2).unwrap().edge_count(), 3);
        assert!(pair_subgraph(&same, 1, 1).is_err());
        assert!(pair_subgraph(&same, 1, 3).is_err());
    }

    #[test]
    fn c4_examples() {
        assert_eq!(find_c4(&cycle(4)), Some([1, 2, 3, 4]));
        assert_eq!(find_c4(&complete(4)), None);
        let mut chorded = cycle(4);
        chorded.add_edge(1, 3).unwrap();
        assert_eq!(find_c4(&chorded), None);
        assert_eq!(find_c4(&cycle(5)), None);
    }

    #[test]
    fn chordality_examples() {
        assert!(is_chordal(&complete(3)).is_some());
        assert!(is_chordal(&cycle(4)).is_none());
        assert!(is_chordal(&cycle(6)).is_none());
        let tree = spider();
        let peo = is_chordal(&tree).unwrap();
        assert_eq!(peo.len(), 7);
        // The first eliminated vertex of a tree is a leaf.
        assert_eq!(tree.neighbors(peo[0]).unwrap().len(), 1);
    }

    #[test]
    fn cliques_examples() {
        let p = path(3);
        let peo = is_chordal(&p).unwrap();
        assert_eq!(
            maximal_cliques_chordal(&p, &peo).unwrap(),
            vec![[1, 2].into(), [2, 3].into()]
        );
        let k = complete(4);
        let peo = is_chordal(&k).unwrap();
        assert_eq!(
            maximal_cliques_chordal(&k, &peo).unwrap(),
            vec![[1, 2, 3, 4].into()]
        );
        let tp = Graph::from_edges(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        let peo = is_chordal(&tp).unwrap();
        assert_eq!(
            maximal_cliques_chordal(&tp, &peo).unwrap(),
            vec![[1, 2, 3].into(), [3, 4].into()]
        );
    }

    #[test]
    fn cliques_reject_bad_peo() {
        let p = path(3);
        assert!(matches!(
            maximal_cliques_chordal(&p, &[2, 1, 3]),
            Err(Error::Contract(_))
        ));
        assert!(maximal_cliques_chordal(&p, &[1, 2]).is_err());
        assert_eq!(
            maximal_cliques_chordal(&p, &[1, 2, 9]).unwrap_err(),
            Error::UnknownVertex(9)
        );
    }

    #[test]
    fn uncovered_clique_examples() {
        assert_eq!(
            find_uncovered_clique(&mat(1, &[&[1], &[1], &[1]])).unwrap(),
            None
        );
        assert_eq!(
            find_uncovered_clique(&BinaryMatrix::identity(3)).unwrap(),
            None
        );
        let u = find_uncovered_clique(&m_h4()).unwrap().unwrap();
        assert_eq!(u.clique, [1, 2, 3, 4].into());
        assert_eq!(u.minimal, [1, 2, 3, 4].into());
    }

    #[test]
    fn uncovered_clique_on_triangle_of_pairs() {
        // Columns {1,2},{2,3},{1,3}: the triangle is realised by no column and
        // is already minimal.
        let m = mat(3, &[&[1, 3], &[1, 2], &[2, 3]]);
        let u = find_uncovered_clique(&m).unwrap().unwrap();
        assert_eq!(u.clique, [1, 2, 3].into());
        assert_eq!(u.minimal, [1, 2, 3].into());
    }

    #[test]
    fn uncovered_clique_needs_chordal_pairs() {
        // Columns 1 and 2 hold r1r2 and r3r4; columns 3 and 4 close the C4.
        let m = mat(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        assert_eq!(
            find_c4(&pair_subgraph(&m, 1, 2).unwrap()),
            Some([1, 2, 4, 3])
        );
        assert!(matches!(find_uncovered_clique(&m), Err(Error::Contract(_))));
    }

    #[test]
    fn simplicial_examples() {
        let p = path(4);
        assert!(is_simplicial(&p, 1).unwrap());
        assert!(!is_simplicial(&p, 2).unwrap());
        assert!(is_simplicial(&complete(4), 3).unwrap());
        assert_eq!(is_simplicial(&p, 7).unwrap_err(), Error::UnknownVertex(7));
    }

    #[test]
    fn graph_file_round_trip_and_errors() {
        let g = parse_graph("# c\n4 3\n1 2\n2 3\n3 4\n").unwrap();
        assert_eq!(g, path(4));
        assert_eq!(parse_graph(&g.to_text()).unwrap(), g);
        assert!(matches!(
            parse_graph("3 1\n1 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("3 1\n1 4\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("3 2\n1 2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("3 1\n1 2\n2 3\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("3 1\nsides 1\n1 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
