//! Local complementation, its local Clifford realization, and LC orbits.
//!
//! `τ_a` toggles every edge between two neighbors of `a`. On states it is
//! realized by `exp(-iπ/4 X_a) · Π_{b ∈ N(a)} exp(iπ/4 Z_b)`, so graphs in
//! one orbit describe locally equivalent states and must share every
//! local-unitary invariant, concurrence included.

use std::f64::consts::FRAC_PI_4;

use serde::Serialize;

use crate::concurrence::{
    check_classify_range, classify_with_table, ConcurrenceClassification, ConcurrenceValue,
};
use crate::dense::{gates, DenseState, Matrix2};
use crate::error::{Error, Result};
use crate::graph::{pair_count, pair_index, CanonicalTable, EdgeCode, Graph};
use crate::partition::{closure_partition, Partition, PartitionKind};
use crate::state::build_state_phase;

/// `τ_a(g)`.
pub fn local_complement(g: &Graph, a: usize) -> Result<Graph> {
    g.check_vertex(a)?;
    Ok(Graph::from_code_unchecked(g.n(), lc_code(g, a)))
}

fn lc_code(g: &Graph, a: usize) -> EdgeCode {
    let nbrs = g.neighbors(a);
    let mut code = g.code();
    for (k, &b) in nbrs.iter().enumerate() {
        for &c in &nbrs[k + 1..] {
            code ^= 1 << pair_index(b, c);
        }
    }
    code
}

/// The local Clifford unitary that maps `|G⟩` to `|τ_a(G)⟩` up to phase.
#[derive(Debug, Clone)]
pub struct LcUnitary {
    vertex: usize,
    neighbors: Vec<usize>,
}

impl LcUnitary {
    pub fn new(g: &Graph, a: usize) -> Result<Self> {
        g.check_vertex(a)?;
        Ok(Self {
            vertex: a,
            neighbors: g.neighbors(a),
        })
    }

    pub fn vertex(&self) -> usize {
        self.vertex
    }

    pub fn neighbors(&self) -> &[usize] {
        &self.neighbors
    }

    /// `(qubit, matrix)` pairs; they act on distinct qubits and commute.
    pub fn factors(&self) -> Vec<(usize, Matrix2)> {
        let x_part = gates::exp_i_pauli(-FRAC_PI_4, &gates::pauli_x());
        let z_part = gates::exp_i_pauli(FRAC_PI_4, &gates::pauli_z());
        std::iter::once((self.vertex, x_part))
            .chain(self.neighbors.iter().map(|&b| (b, z_part)))
            .collect()
    }

    pub fn apply(&self, s: &DenseState) -> Result<DenseState> {
        self.factors().iter().try_fold(s.clone(), |acc, (q, u)| {
            acc.apply_single_qubit_unitary(*q, u)
        })
    }
}

/// `U_a |G⟩` computed on the dense state vector.
pub fn lc_unitary_apply(g: &Graph, a: usize) -> Result<DenseState> {
    LcUnitary::new(g, a)?.apply(&build_state_phase(g).to_dense())
}

/// Partition of labeled graphs under local complementation, optionally also
/// closed under vertex relabeling.
pub fn lc_partition(n: usize, quotient_by_isomorphism: bool) -> Result<Partition> {
    let kind = if quotient_by_isomorphism {
        PartitionKind::LcOrbitModIsomorphism
    } else {
        PartitionKind::LcOrbit
    };
    // Adjacent transpositions generate every relabeling.
    let swaps: Vec<Vec<u8>> = if quotient_by_isomorphism {
        (1..n)
            .map(|v| {
                (0..pair_count(n))
                    .map(|k| {
                        let (i, j) = crate::graph::pair_of_index(k);
                        let f = |x: usize| match x {
                            x if x == v => v - 1,
                            x if x == v - 1 => v,
                            x => x,
                        };
                        pair_index(f(i), f(j)) as u8
                    })
                    .collect()
            })
            .collect()
    } else {
        Vec::new()
    };
    closure_partition(n, kind, |code, out| {
        let g = Graph::from_code_unchecked(n, code);
        out.extend((0..n).map(|a| lc_code(&g, a)));
        for map in &swaps {
            out.push(
                (0..map.len())
                    .filter(|&k| code >> k & 1 == 1)
                    .fold(0, |acc, k| acc | 1 << map[k]),
            );
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Merge {
    pub concurrence_class: usize,
    pub lc_classes: Vec<usize>,
}

/// How LC classes sit inside concurrence classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefinementTable {
    pub n: usize,
    /// Concurrence class index (0-based, ascending value) of each LC class.
    pub lc_to_concurrence: Vec<usize>,
    pub concurrence_class_count: usize,
    /// Concurrence classes that absorb more than one LC class.
    pub merges: Vec<Merge>,
}

impl RefinementTable {
    pub fn lc_class_count(&self) -> usize {
        self.lc_to_concurrence.len()
    }

    /// Whether LC classes and concurrence classes coincide.
    pub fn is_bijective(&self) -> bool {
        self.merges.is_empty() && self.lc_class_count() == self.concurrence_class_count
    }
}

#[derive(Debug, Clone)]
pub struct OrbitReport {
    pub partition: Partition,
    /// The single concurrence shared by every member of each orbit.
    pub concurrence: Vec<ConcurrenceValue>,
    /// Number of isomorphism types inside each orbit.
    pub representative_counts: Vec<usize>,
    pub refinement: RefinementTable,
}

/// LC orbits of all labeled graphs on `n` vertices (`3 ≤ n ≤ 6`) together
/// with their concurrence. Fails with [`Error::RefinementViolation`] if an
/// orbit contains two different concurrence values.
pub fn lc_orbits(n: usize, quotient_by_isomorphism: bool) -> Result<OrbitReport> {
    check_classify_range(n)?;
    let table = CanonicalTable::new(n)?;
    let classification = classify_with_table(&table)?;
    let partition = lc_partition(n, quotient_by_isomorphism)?;
    let refinement = refine(&partition, &classification)?;
    let concurrence = refinement
        .lc_to_concurrence
        .iter()
        .map(|&k| classification.classes()[k].value)
        .collect();
    let representative_counts = partition.representative_counts(&table);
    Ok(OrbitReport {
        partition,
        concurrence,
        representative_counts,
        refinement,
    })
}

/// Maps each class of `lc` onto the concurrence class containing it.
pub fn refine(
    lc: &Partition,
    classification: &ConcurrenceClassification,
) -> Result<RefinementTable> {
    let index = classification.partition().class_index();
    let mut lc_to_concurrence = Vec::with_capacity(lc.len());
    for (k, class) in lc.classes().iter().enumerate() {
        let mut targets: Vec<usize> = class.members.iter().map(|&m| index[m as usize]).collect();
        targets.sort_unstable();
        targets.dedup();
        if targets.len() != 1 {
            return Err(Error::RefinementViolation {
                lc_class: k,
                values: targets.len(),
            });
        }
        lc_to_concurrence.push(targets[0]);
    }
    let merges = (0..classification.len())
        .filter_map(|c| {
            let lc_classes: Vec<usize> = lc_to_concurrence
                .iter()
                .enumerate()
                .filter(|&(_, &t)| t == c)
                .map(|(k, _)| k)
                .collect();
            (lc_classes.len() > 1).then_some(Merge {
                concurrence_class: c,
                lc_classes,
            })
        })
        .collect();
    Ok(RefinementTable {
        n: lc.n(),
        lc_to_concurrence,
        concurrence_class_count: classification.len(),
        merges,
    })
}

/// LC classes (up to relabeling) against concurrence classes.
pub fn refinement_check(n: usize) -> Result<RefinementTable> {
    Ok(lc_orbits(n, true)?.refinement)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::states_equal_up_to_global_phase;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn triangle_to_path() {
        let tri = Graph::complete(3).unwrap();
        assert_eq!(local_complement(&tri, 0).unwrap(), g(3, &[(0, 1), (0, 2)]));
    }

    #[test]
    fn isolated_vertex_is_fixed() {
        let graph = g(4, &[(0, 1), (1, 2)]);
        assert_eq!(local_complement(&graph, 3).unwrap(), graph);
    }

    #[test]
    fn star_center_completes() {
        let star = Graph::star(5, 0).unwrap();
        assert_eq!(
            local_complement(&star, 0).unwrap(),
            Graph::complete(5).unwrap()
        );
    }

    #[test]
    fn out_of_range_vertex() {
        let graph = Graph::empty(3).unwrap();
        assert!(local_complement(&graph, 3).is_err());
        assert!(lc_unitary_apply(&graph, 5).is_err());
    }

    #[test]
    fn unitary_examples() {
        let plus = build_state_phase(&Graph::empty(3).unwrap()).to_dense();
        for a in 0..3 {
            let out = lc_unitary_apply(&Graph::empty(3).unwrap(), a).unwrap();
            assert!(states_equal_up_to_global_phase(&out, &plus).unwrap());
        }
        let edge = g(3, &[(0, 2)]);
        let out = lc_unitary_apply(&edge, 1).unwrap();
        assert!(
            states_equal_up_to_global_phase(&out, &build_state_phase(&edge).to_dense()).unwrap()
        );

        let tri = Graph::complete(3).unwrap();
        let out = lc_unitary_apply(&tri, 0).unwrap();
        let path = build_state_phase(&g(3, &[(0, 1), (0, 2)])).to_dense();
        assert!(states_equal_up_to_global_phase(&out, &path).unwrap());
    }

    #[test]
    fn factors_are_unitary() {
        let u = LcUnitary::new(&Graph::star(4, 1).unwrap(), 1).unwrap();
        assert_eq!(u.neighbors(), &[0, 2, 3]);
        let factors = u.factors();
        assert_eq!(factors.len(), 4);
        for (_, m) in factors {
            assert!(crate::dense::unitarity_deviation(&m) < 1e-12);
        }
    }

    #[test]
    fn orbit_counts() {
        for (n, expected) in [(3, 3), (4, 6), (5, 11)] {
            let report = lc_orbits(n, true).unwrap();
            assert_eq!(report.partition.len(), expected, "n = {n}");
            assert!(report.partition.covers_all_labeled_graphs());
            assert_eq!(
                report.representative_counts.iter().sum::<usize>(),
                [0, 0, 0, 4, 11, 34][n]
            );
        }
    }

    #[test]
    fn unquotiented_orbits_refine_quotiented() {
        let fine = lc_partition(4, false).unwrap();
        let coarse = lc_partition(4, true).unwrap();
        assert!(fine.covers_all_labeled_graphs());
        assert!(fine.len() >= coarse.len());
        let coarse_index = coarse.class_index();
        for class in fine.classes() {
            let k = coarse_index[class.members[0] as usize];
            assert!(class.members.iter().all(|&m| coarse_index[m as usize] == k));
        }
    }

    #[test]
    fn refinement_merges() {
        assert!(refinement_check(3).unwrap().is_bijective());
        let four = refinement_check(4).unwrap();
        assert_eq!(four.lc_class_count(), 6);
        assert_eq!(four.concurrence_class_count, 5);
        assert_eq!(four.merges.len(), 1);
        assert_eq!(four.merges[0].lc_classes.len(), 2);
    }
}
