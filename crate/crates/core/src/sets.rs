//! Label sets used as deletion solutions and clique members.
//!
//! All labels are 1-based and iterate in ascending order, which is what
//! makes tie-breaking deterministic throughout the crate.

use std::collections::BTreeSet;
use std::fmt;

macro_rules! label_set {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(BTreeSet<usize>);

        impl $name {
            pub fn new() -> Self {
                Self(BTreeSet::new())
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn contains(&self, label: usize) -> bool {
                self.0.contains(&label)
            }

            pub fn insert(&mut self, label: usize) -> bool {
                self.0.insert(label)
            }

            pub fn remove(&mut self, label: usize) -> bool {
                self.0.remove(&label)
            }

            pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
                self.0.iter().copied()
            }

            pub fn is_subset(&self, other: &Self) -> bool {
                self.0.is_subset(&other.0)
            }

            pub fn is_disjoint(&self, other: &Self) -> bool {
                self.0.is_disjoint(&other.0)
            }

            pub fn union(&self, other: &Self) -> Self {
                Self(self.0.union(&other.0).copied().collect())
            }

            pub fn difference(&self, other: &Self) -> Self {
                Self(self.0.difference(&other.0).copied().collect())
            }

            pub fn to_vec(&self) -> Vec<usize> {
                self.iter().collect()
            }
        }

        impl FromIterator<usize> for $name {
            fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
                Self(iter.into_iter().collect())
            }
        }

        impl<const N: usize> From<[usize; N]> for $name {
            fn from(labels: [usize; N]) -> Self {
                labels.into_iter().collect()
            }
        }

        impl IntoIterator for $name {
            type Item = usize;
            type IntoIter = std::collections::btree_set::IntoIter<usize>;

            fn into_iter(self) -> Self::IntoIter {
                self.0.into_iter()
            }
        }

        /// Space-separated ascending labels; empty set prints nothing.
        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for (i, label) in self.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{label}")?;
                }
                Ok(())
            }
        }
    };
}

label_set!(
    /// A set of matrix row labels, e.g. a deletion solution.
    RowSet
);

label_set!(
    /// A set of graph vertex labels.
    VertexSet
);

label_set!(
    /// Members of a clique of some graph. Pairwise adjacency is checked by
    /// the producer, not by this type.
    CliqueSet
);
