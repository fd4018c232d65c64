//! Groupings of labeled graphs into disjoint classes.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::Result;
use crate::graph::{labeled_graph_count, CanonicalTable, EdgeCode, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PartitionKind {
    Isomorphism,
    Concurrence,
    LcOrbit,
    LcOrbitModIsomorphism,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Class {
    pub representative: Graph,
    /// Member codes, ascending.
    pub members: Vec<EdgeCode>,
}

impl Class {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, code: EdgeCode) -> bool {
        self.members.binary_search(&code).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    kind: PartitionKind,
    classes: Vec<Class>,
}

impl Partition {
    /// Groups codes by an arbitrary class label. Classes come out ordered by
    /// their smallest member, which also becomes the representative.
    pub fn from_labels(n: usize, kind: PartitionKind, labels: &[usize]) -> Self {
        let mut slot = vec![usize::MAX; labels.iter().copied().max().map_or(0, |m| m + 1)];
        let mut classes: Vec<Class> = Vec::new();
        for (code, &label) in labels.iter().enumerate() {
            let code = code as EdgeCode;
            if slot[label] == usize::MAX {
                slot[label] = classes.len();
                classes.push(Class {
                    representative: Graph::from_code_unchecked(n, code),
                    members: Vec::new(),
                });
            }
            classes[slot[label]].members.push(code);
        }
        Self { n, kind, classes }
    }

    pub(crate) fn from_classes(n: usize, kind: PartitionKind, classes: Vec<Class>) -> Self {
        Self { n, kind, classes }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> PartitionKind {
        self.kind
    }

    pub fn classes(&self) -> &[Class] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class index of every code in the universe.
    pub fn class_index(&self) -> Vec<usize> {
        let size = self.classes.iter().map(Class::len).sum();
        let mut index = vec![usize::MAX; size];
        for (k, class) in self.classes.iter().enumerate() {
            for &m in &class.members {
                if let Some(slot) = index.get_mut(m as usize) {
                    *slot = k;
                }
            }
        }
        index
    }

    pub fn class_of(&self, code: EdgeCode) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(code))
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Class::len).collect()
    }

    /// Number of distinct isomorphism types within each class.
    pub fn representative_counts(&self, table: &CanonicalTable) -> Vec<usize> {
        self.classes
            .iter()
            .map(|c| table.representatives_of(&c.members).len())
            .collect()
    }

    /// Checks disjointness, exact coverage of all labeled graphs on `n`
    /// vertices, and that each representative belongs to its class.
    pub fn covers_all_labeled_graphs(&self) -> bool {
        let Ok(total) = labeled_graph_count(self.n) else {
            return false;
        };
        let mut seen = vec![false; total];
        for class in &self.classes {
            if !class.contains(class.representative.code()) {
                return false;
            }
            for &m in &class.members {
                match seen.get_mut(m as usize) {
                    Some(s) if !*s => *s = true,
                    _ => return false,
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Connected components of the graph on labeled codes whose edges are given
/// by `moves`. Each component is found by breadth-first search from its
/// smallest code.
pub(crate) fn closure_partition<F>(n: usize, kind: PartitionKind, mut moves: F) -> Result<Partition>
where
    F: FnMut(EdgeCode, &mut Vec<EdgeCode>),
{
    let total = labeled_graph_count(n)?;
    let mut label = vec![usize::MAX; total];
    let mut classes = Vec::new();
    let mut queue = VecDeque::new();
    let mut next = Vec::new();
    for seed in 0..total {
        if label[seed] != usize::MAX {
            continue;
        }
        let k = classes.len();
        let mut members = vec![seed as EdgeCode];
        label[seed] = k;
        queue.push_back(seed as EdgeCode);
        while let Some(code) = queue.pop_front() {
            next.clear();
            moves(code, &mut next);
            for &t in &next {
                if label[t as usize] == usize::MAX {
                    label[t as usize] = k;
                    members.push(t);
                    queue.push_back(t);
                }
            }
        }
        members.sort_unstable();
        classes.push(Class {
            representative: Graph::from_code_unchecked(n, seed as EdgeCode),
            members,
        });
    }
    Ok(Partition::from_classes(n, kind, classes))
}

/// Labeled graphs on `n` vertices grouped by isomorphism type. Each class is
/// represented by its canonical form.
pub fn isomorphism_classes(n: usize) -> Result<Partition> {
    let table = CanonicalTable::new(n)?;
    Ok(isomorphism_classes_from(&table))
}

pub fn isomorphism_classes_from(table: &CanonicalTable) -> Partition {
    let labels: Vec<usize> = (0..labeled_graph_count(table.n()).unwrap_or(0))
        .map(|c| table.canonical(c as EdgeCode) as usize)
        .collect();
    Partition::from_labels(table.n(), PartitionKind::Isomorphism, &labels)
}
