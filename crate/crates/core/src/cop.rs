//! Consecutive-ones recognition with a column-order certificate, and
//! interval assignments for set systems.
//!
//! Recognition works on overlap components. Two rows overlap when they
//! intersect and neither contains the other. Within a connected overlap
//! component the arrangement of the union is forced up to reversal, so
//! rows are placed one at a time (each overlapping an already placed row)
//! into an ordered partition of the union's columns. Across components the
//! unions form a laminar family, and a component nested in another always
//! falls inside a single class of the outer partition. The final order is
//! read off that containment tree.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::matrix::{BinaryMatrix, SetSystem};

/// A column order: every label of `1..=n` exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColumnPermutation {
    order: Vec<usize>,
}

impl ColumnPermutation {
    /// Validates that `order` is a permutation of `1..=n`.
    pub fn new(order: Vec<usize>, n: usize) -> Result<Self> {
        if order.len() != n {
            return Err(Error::Domain(format!(
                "permutation has {} entries, expected {n}",
                order.len()
            )));
        }
        let mut seen = vec![false; n];
        for &c in &order {
            if c == 0 || c > n || seen[c - 1] {
                return Err(Error::Domain(format!(
                    "{order:?} is not a permutation of 1..={n}"
                )));
            }
            seen[c - 1] = true;
        }
        Ok(ColumnPermutation { order })
    }

    pub fn identity(n: usize) -> Self {
        ColumnPermutation {
            order: (1..=n).collect(),
        }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `positions()[c - 1]` is the 1-based position of column `c`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (p, &c) in self.order.iter().enumerate() {
            pos[c - 1] = p + 1;
        }
        pos
    }
}

impl fmt::Display for ColumnPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.order.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// An integer interval `[lo, hi]` per row; `None` for all-zero rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalAssignment {
    n: usize,
    intervals: Vec<(usize, Option<(usize, usize)>)>,
}

impl IntervalAssignment {
    /// Validates `1 <= lo <= hi <= n` for every present interval.
    pub fn new(n: usize, intervals: Vec<(usize, Option<(usize, usize)>)>) -> Result<Self> {
        for (label, iv) in &intervals {
            if let Some((lo, hi)) = *iv {
                if lo == 0 || lo > hi || hi > n {
                    return Err(Error::Domain(format!(
                        "interval [{lo}, {hi}] for row {label} is not within [1, {n}]"
                    )));
                }
            }
        }
        Ok(IntervalAssignment { n, intervals })
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn intervals(&self) -> &[(usize, Option<(usize, usize)>)] {
        &self.intervals
    }

    pub fn get(&self, label: usize) -> Option<(usize, usize)> {
        self.intervals
            .iter()
            .find(|(l, _)| *l == label)
            .and_then(|(_, iv)| *iv)
    }
}

/// True iff every row's 1-entries are contiguous under `order`.
pub fn verify_cop(m: &BinaryMatrix, order: &ColumnPermutation) -> Result<bool> {
    if order.len() != m.col_count() {
        return Err(Error::Domain(format!(
            "permutation has {} columns, matrix has {}",
            order.len(),
            m.col_count()
        )));
    }
    let pos = order.positions();
    Ok(m.rows()
        .all(|(_, row)| span(row, &pos).is_none_or(|(lo, hi, k)| hi - lo + 1 == k)))
}

/// `(min position, max position, number of ones)` of a row under `pos`.
fn span(row: &FixedBitSet, pos: &[usize]) -> Option<(usize, usize, usize)> {
    let mut it = row.ones().map(|j| pos[j]);
    let first = it.next()?;
    let (lo, hi, k) = it.fold((first, first, 1), |(lo, hi, k), p| {
        (lo.min(p), hi.max(p), k + 1)
    });
    Some((lo, hi, k))
}

pub fn interval_assignment(
    m: &BinaryMatrix,
    order: &ColumnPermutation,
) -> Result<IntervalAssignment> {
    if !verify_cop(m, order)? {
        return Err(Error::Contract(format!(
            "column order {order} does not make the ones consecutive"
        )));
    }
    let pos = order.positions();
    let intervals = m
        .rows()
        .map(|(label, row)| (label, span(row, &pos).map(|(lo, hi, _)| (lo, hi))))
        .collect();
    IntervalAssignment::new(m.col_count(), intervals)
}

/// Checks `|S_i ∩ S_j| = |I_i ∩ I_j|` for every pair of rows.
pub fn is_icpia(sets: &SetSystem, intervals: &IntervalAssignment) -> Result<bool> {
    let labels = check_coverage(sets, intervals)?;
    for (a, &la) in labels.iter().enumerate() {
        for &lb in &labels[a + 1..] {
            if !intersections_match(sets, intervals, &[la, lb])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks that the common intersection of the given rows' sets has the same
/// cardinality as the common intersection of their intervals.
pub fn intersections_match(
    sets: &SetSystem,
    intervals: &IntervalAssignment,
    rows: &[usize],
) -> Result<bool> {
    let mut common: Option<FixedBitSet> = None;
    let mut lo = 1usize;
    let mut hi = intervals.universe();
    let mut interval_empty = false;
    for &r in rows {
        let s = sets.get(r).ok_or(Error::UnknownRow(r))?;
        common = Some(match common {
            None => s.clone(),
            Some(mut acc) => {
                acc.intersect_with(s);
                acc
            }
        });
        match intervals.get(r) {
            Some((a, b)) => {
                lo = lo.max(a);
                hi = hi.min(b);
            }
            None => interval_empty = true,
        }
    }
    let set_card = common.map_or(0, |c| c.count_ones(..));
    let interval_card = if interval_empty || lo > hi {
        0
    } else {
        hi - lo + 1
    };
    Ok(set_card == interval_card)
}

fn check_coverage(sets: &SetSystem, intervals: &IntervalAssignment) -> Result<Vec<usize>> {
    let mut labels = Vec::with_capacity(sets.len());
    for (label, s) in sets.sets() {
        if s.count_ones(..) > 0 && intervals.get(*label).is_none() {
            return Err(Error::Domain(format!(
                "no interval for nonempty row {label}"
            )));
        }
        labels.push(*label);
    }
    Ok(labels)
}

/// Returns a column order under which every row's ones are consecutive, or
/// `None` if the matrix does not have the consecutive ones property.
pub fn cop_order(m: &BinaryMatrix) -> Option<ColumnPermutation> {
    let n = m.col_count();
    // Rows with at most one 1 never constrain the order; duplicates add nothing.
    let mut rows: Vec<&FixedBitSet> = Vec::new();
    for (_, row) in m.rows() {
        if row.count_ones(..) >= 2 && !rows.contains(&row) {
            rows.push(row);
        }
    }

    let components = overlap_components(&rows);
    let mut nodes: Vec<Node> = Vec::with_capacity(components.len());
    for comp in &components {
        let classes = refine_component(&rows, comp, n)?;
        let mut union = FixedBitSet::with_capacity(n);
        for c in &classes {
            union.union_with(c);
        }
        nodes.push(Node {
            size: union.count_ones(..),
            union,
            single_row: comp.len() == 1,
            classes,
        });
    }

    let order = assemble(&nodes, n);
    let perm = ColumnPermutation { order };
    assert!(
        verify_cop(m, &perm).unwrap_or(false),
        "consecutive-ones certificate failed self-verification"
    );
    Some(perm)
}

struct Node {
    union: FixedBitSet,
    size: usize,
    single_row: bool,
    classes: Vec<FixedBitSet>,
}

fn overlaps(a: &FixedBitSet, b: &FixedBitSet) -> bool {
    !a.is_disjoint(b) && !a.is_subset(b) && !b.is_subset(a)
}

/// Connected components of the overlap graph, each listed in BFS order from
/// its lowest row, so every row after the first overlaps an earlier one.
fn overlap_components(rows: &[&FixedBitSet]) -> Vec<Vec<usize>> {
    let k = rows.len();
    let mut seen = vec![false; k];
    let mut components = Vec::new();
    for start in 0..k {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut head = 0;
        while head < comp.len() {
            let a = comp[head];
            head += 1;
            for b in 0..k {
                if !seen[b] && overlaps(rows[a], rows[b]) {
                    seen[b] = true;
                    comp.push(b);
                }
            }
        }
        components.push(comp);
    }
    components
}

/// Places the component's rows into an ordered partition of their union.
/// Fails when some row cannot be made consecutive.
fn refine_component(rows: &[&FixedBitSet], comp: &[usize], n: usize) -> Option<Vec<FixedBitSet>> {
    let mut classes: Vec<FixedBitSet> = vec![rows[comp[0]].clone()];
    let mut union = rows[comp[0]].clone();
    for &r in &comp[1..] {
        let row = rows[r];
        let mut fresh = row.clone();
        fresh.difference_with(&union);

        let hit: Vec<bool> = classes.iter().map(|c| !c.is_disjoint(row)).collect();
        let full: Vec<bool> = classes.iter().map(|c| c.is_subset(row)).collect();
        let first = hit.iter().position(|&h| h)?;
        let last = hit.iter().rposition(|&h| h)?;
        if (first + 1..last).any(|k| !full[k]) {
            return None;
        }

        if fresh.count_ones(..) == 0 {
            if first == last {
                // Cannot happen for a row that overlaps a placed row.
                return None;
            }
            split(&mut classes, last, row, false);
            split(&mut classes, first, row, true);
        } else {
            let right = last == classes.len() - 1 && (first + 1..=last).all(|k| full[k]);
            let left = first == 0 && (first..last).all(|k| full[k]);
            if right {
                split(&mut classes, first, row, true);
                classes.push(fresh.clone());
            } else if left {
                split(&mut classes, last, row, false);
                classes.insert(0, fresh.clone());
            } else {
                return None;
            }
            union.union_with(&fresh);
        }
    }
    debug_assert!(classes.iter().all(|c| c.len() == n));
    Some(classes)
}

/// Splits class `k` by `row`. With `inside_last` the part inside `row` goes
/// after the part outside it, otherwise before. No-op if `row` covers it.
fn split(classes: &mut Vec<FixedBitSet>, k: usize, row: &FixedBitSet, inside_last: bool) {
    let mut inside = classes[k].clone();
    inside.intersect_with(row);
    let mut outside = classes[k].clone();
    outside.difference_with(row);
    if outside.count_ones(..) == 0 {
        return;
    }
    let (a, b) = if inside_last {
        (outside, inside)
    } else {
        (inside, outside)
    };
    classes[k] = a;
    classes.insert(k + 1, b);
}

/// Builds the containment tree of component unions and reads off the order.
fn assemble(nodes: &[Node], n: usize) -> Vec<usize> {
    // `parent[a]` is the tightest component whose union strictly contains
    // `a`'s, or equals it when the container is a single row.
    let contains = |outer: usize, inner: usize| -> bool {
        let (o, i) = (&nodes[outer], &nodes[inner]);
        if !i.union.is_subset(&o.union) {
            return false;
        }
        i.size < o.size || (o.single_row && !i.single_row)
    };
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); nodes.len() + 1];
    let root = nodes.len();
    for a in 0..nodes.len() {
        let parent = (0..nodes.len())
            .filter(|&b| b != a && contains(b, a))
            .min_by_key(|&b| (nodes[b].size, nodes[b].single_row, b))
            .unwrap_or(root);
        children[parent].push(a);
    }

    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let root_classes = vec![all];
    let mut order = Vec::with_capacity(n);
    emit(nodes, &children, root, &root_classes, &mut order);
    order
}

fn emit(
    nodes: &[Node],
    children: &[Vec<usize>],
    node: usize,
    classes: &[FixedBitSet],
    order: &mut Vec<usize>,
) {
    for class in classes {
        let mut inner: Vec<usize> = children[node]
            .iter()
            .copied()
            .filter(|&c| nodes[c].union.is_subset(class))
            .collect();
        inner.sort_by_key(|&c| nodes[c].union.minimum());
        let mut covered = FixedBitSet::with_capacity(class.len());
        for c in inner {
            emit(nodes, children, c, &nodes[c].classes, order);
            covered.union_with(&nodes[c].union);
        }
        order.extend(class.difference(&covered).map(|j| j + 1));
    }
}
