//! Graph states on up to six qubits: exact construction, generalized
//! concurrence, and classification of all labeled graphs by isomorphism,
//! concurrence value and local-complementation orbit.
//!
//! ```
//! use graphcord_core::{graph_concurrence, Graph};
//!
//! let g: Graph = "n=3;edges=1-3".parse().unwrap();
//! let c = graph_concurrence(&g).unwrap();
//! assert_eq!(c.fixed4(), "1.0000");
//! ```

pub mod concurrence;
pub mod dense;
pub mod error;
pub mod graph;
pub mod lc;
pub mod partition;
pub mod state;
pub mod verify;

pub use concurrence::{
    classify_by_concurrence, generalized_concurrence, graph_concurrence, purity_spectrum,
    verify_complement_relations, ClassRow, ConcurrenceClassification, ConcurrenceValue,
    PuritySpectrum,
};
pub use dense::{apply_single_qubit_unitary, states_equal_up_to_global_phase, DenseState, Matrix2};
pub use error::{Error, Result};
pub use graph::{
    canonical_form, enumerate_labeled_graphs, permute, CanonicalTable, EdgeCode, Graph,
    Permutation, MAX_VERTICES, MIN_VERTICES,
};
pub use lc::{
    lc_orbits, lc_partition, lc_unitary_apply, local_complement, refinement_check, LcUnitary,
    OrbitReport, RefinementTable,
};
pub use partition::{isomorphism_classes, Class, Partition, PartitionKind};
pub use state::{
    build_state_cz, build_state_phase, purity, GraphState, Rational, ReducedDensityMatrix,
};
