//! Self-check suites run by the `verify` command.

use rayon::prelude::*;
use serde::Serialize;

use crate::concurrence::{check_classify_range, classify_with_table, verify_complement_relations};
use crate::dense::states_equal_up_to_global_phase;
use crate::error::Result;
use crate::graph::{enumerate_labeled_graphs, CanonicalTable, Graph};
use crate::lc::{lc_partition, lc_unitary_apply, local_complement, refine};
use crate::state::{build_state_cz, build_state_phase};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn suite(name: &'static str, failures: usize, checked: usize, what: &str) -> SuiteResult {
    SuiteResult {
        name,
        passed: failures == 0,
        detail: format!("{} of {checked} {what} failed", failures),
    }
}

/// Runs every suite for graphs on `n` vertices (`3 ≤ n ≤ 6`).
pub fn run_suites(n: usize) -> Result<Vec<SuiteResult>> {
    check_classify_range(n)?;
    let graphs: Vec<Graph> = enumerate_labeled_graphs(n)?.collect();
    let mut results = Vec::new();

    let failures = graphs
        .par_iter()
        .filter(|g| build_state_phase(g) != build_state_cz(g))
        .count();
    results.push(suite("dual construction", failures, graphs.len(), "graphs"));

    let failures = graphs
        .par_iter()
        .filter(|g| !verify_complement_relations(&build_state_phase(g)))
        .count();
    results.push(suite(
        "complement relations",
        failures,
        graphs.len(),
        "graph states",
    ));

    let pairs: Vec<(Graph, usize)> = graphs
        .iter()
        .flat_map(|&g| (0..n).map(move |a| (g, a)))
        .collect();
    let failures = pairs
        .par_iter()
        .filter(|&&(g, a)| {
            let lhs = lc_unitary_apply(&g, a);
            let rhs = local_complement(&g, a).map(|t| build_state_phase(&t).to_dense());
            match (lhs, rhs) {
                (Ok(l), Ok(r)) => !states_equal_up_to_global_phase(&l, &r).unwrap_or(false),
                _ => true,
            }
        })
        .count();
    results.push(suite(
        "lc unitary consistency",
        failures,
        pairs.len(),
        "(graph, vertex) pairs",
    ));

    let table = CanonicalTable::new(n)?;
    let classification = classify_with_table(&table)?;
    let index = classification.partition().class_index();
    let failures = graphs
        .iter()
        .filter(|g| index[g.code() as usize] != index[table.canonical(g.code()) as usize])
        .count();
    results.push(suite(
        "isomorphism invariance",
        failures,
        graphs.len(),
        "graphs",
    ));

    let refinement = match refine(&lc_partition(n, true)?, &classification) {
        Ok(t) => SuiteResult {
            name: "refinement",
            passed: true,
            detail: format!(
                "{} lc classes into {} concurrence classes, {} shared value(s)",
                t.lc_class_count(),
                t.concurrence_class_count,
                t.merges.len()
            ),
        },
        Err(e) => SuiteResult {
            name: "refinement",
            passed: false,
            detail: e.to_string(),
        },
    };
    results.push(refinement);
    Ok(results)
}
