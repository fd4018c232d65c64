use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex count {0} outside supported range {min}..={max}", min = crate::MIN_VERTICES, max = crate::MAX_VERTICES)]
    VertexCount(usize),
    #[error("classification needs {min}..={max} vertices, got {0}", min = crate::concurrence::MIN_CLASSIFY_VERTICES, max = crate::MAX_VERTICES)]
    ClassifyRange(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid permutation: {0}")]
    Permutation(String),
    #[error("edge code {code} does not fit {n} vertices")]
    EdgeCode { code: u64, n: usize },
    #[error("cannot parse graph {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("invalid subsystem {subset:?} for {n} qubits: {reason}")]
    Subsystem {
        subset: Vec<usize>,
        n: usize,
        reason: &'static str,
    },
    #[error("matrix is not unitary (deviation {0:.3e})")]
    NotUnitary(f64),
    #[error("qubit count mismatch: {0} vs {1}")]
    QubitMismatch(usize, usize),
    #[error("negative concurrence radicand {0}; state engine is inconsistent")]
    NegativeRadicand(String),
    #[error("local-complementation class {lc_class} spans {values} concurrence values")]
    RefinementViolation { lc_class: usize, values: usize },
}
