//! Generalized concurrence of pure multi-qubit states:
//!
//! `C = 2^(1 - n/2) · sqrt(2^n - 2 - Σ_α Tr ρ_α²)`
//!
//! where `α` runs over every nonempty proper subset of the qubits. The sum
//! of purities is exact, so the radicand is an exact rational and all
//! classification is done on radicands; the float is presentation only.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{labeled_graph_count, CanonicalTable, EdgeCode, Graph, MAX_VERTICES};
use crate::partition::{Class, Partition, PartitionKind};
use crate::state::{build_state_phase, GraphState, Rational};

pub const MIN_CLASSIFY_VERTICES: usize = 3;

pub(crate) fn check_classify_range(n: usize) -> Result<()> {
    if (MIN_CLASSIFY_VERTICES..=MAX_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(Error::ClassifyRange(n))
    }
}

/// Qubits of a subset encoded as a bitmask (bit `q` for qubit `q`).
pub type SubsetMask = u32;

pub fn subset_qubits(mask: SubsetMask) -> Vec<usize> {
    (0..32).filter(|q| mask >> q & 1 == 1).collect()
}

/// Purity of every nonempty proper subsystem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuritySpectrum {
    n: usize,
    values: BTreeMap<SubsetMask, Rational>,
}

impl PuritySpectrum {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, qubits: &[usize]) -> Option<Rational> {
        let mask = qubits.iter().fold(0, |m, &q| m | 1 << q);
        self.values.get(&mask).copied()
    }

    pub fn get_mask(&self, mask: SubsetMask) -> Option<Rational> {
        self.values.get(&mask).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (SubsetMask, Rational)> + '_ {
        self.values.iter().map(|(&m, &v)| (m, v))
    }

    pub fn sum(&self) -> Rational {
        self.values.values().copied().sum()
    }

    /// `Tr ρ_α² = Tr ρ_ᾱ²` for every subset.
    pub fn is_complement_symmetric(&self) -> bool {
        let full: SubsetMask = (1 << self.n) - 1;
        self.values
            .iter()
            .all(|(&m, v)| self.values.get(&(full ^ m)) == Some(v))
    }
}

pub fn purity_spectrum(s: &GraphState) -> PuritySpectrum {
    let n = s.n();
    let values = (1..(1 as SubsetMask) << n)
        .filter(|&m| m != (1 << n) - 1)
        .map(|m| {
            let rho = s
                .reduced_density_matrix(&subset_qubits(m))
                .expect("nonempty proper subsets are valid");
            (m, rho.purity())
        })
        .collect();
    PuritySpectrum { n, values }
}

/// Exact concurrence: `2^(1 - n/2) · sqrt(radicand)`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConcurrenceValue {
    n: usize,
    #[serde(serialize_with = "ser_rational")]
    radicand: Rational,
    value: f64,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

impl ConcurrenceValue {
    pub fn from_radicand(n: usize, radicand: Rational) -> Result<Self> {
        if radicand < Rational::from_integer(0) {
            return Err(Error::NegativeRadicand(radicand.to_string()));
        }
        let r = *radicand.numer() as f64 / *radicand.denom() as f64;
        let value = 2f64.powf(1.0 - n as f64 / 2.0) * r.sqrt();
        Ok(Self { n, radicand, value })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `2^n - 2 - Σ_α Tr ρ_α²`.
    pub fn radicand(&self) -> Rational {
        self.radicand
    }

    /// The prefactor is `2^(e/2)` with `e` returned here (`e = 2 - n`).
    pub fn prefactor_half_exponent(&self) -> i32 {
        2 - self.n as i32
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    /// Value rounded half-to-even to 4 decimals, as printed in tables.
    pub fn rounded4(&self) -> f64 {
        round_half_even(self.value, 4)
    }

    pub fn fixed4(&self) -> String {
        format!("{:.4}", self.rounded4())
    }

    /// Exact square `C² = 2^(2-n) · radicand`.
    pub fn squared(&self) -> Rational {
        let e = 2 - self.n as i32;
        if e >= 0 {
            self.radicand * Rational::from_integer(1 << e)
        } else {
            self.radicand / Rational::from_integer(1 << -e)
        }
    }
}

impl PartialEq for ConcurrenceValue {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.radicand == other.radicand
    }
}

impl Eq for ConcurrenceValue {}

impl Hash for ConcurrenceValue {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.radicand.hash(state);
    }
}

impl PartialOrd for ConcurrenceValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ConcurrenceValue {
    /// At equal `n` this is the order of the values themselves.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.radicand).cmp(&(other.n, other.radicand))
    }
}

impl fmt::Display for ConcurrenceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fixed4())
    }
}

pub fn round_half_even(x: f64, decimals: i32) -> f64 {
    let scale = 10f64.powi(decimals);
    let scaled = x * scale;
    let floor = scaled.floor();
    let diff = scaled - floor;
    let round_up = diff > 0.5 || (diff == 0.5 && floor % 2.0 != 0.0);
    let rounded = if round_up { floor + 1.0 } else { floor };
    rounded / scale
}

pub fn concurrence_from_spectrum(spectrum: &PuritySpectrum) -> Result<ConcurrenceValue> {
    let n = spectrum.n();
    let total = Rational::from_integer((1i64 << n) - 2);
    ConcurrenceValue::from_radicand(n, total - spectrum.sum())
}

pub fn generalized_concurrence(s: &GraphState) -> Result<ConcurrenceValue> {
    concurrence_from_spectrum(&purity_spectrum(s))
}

pub fn graph_concurrence(g: &Graph) -> Result<ConcurrenceValue> {
    generalized_concurrence(&build_state_phase(g))
}

/// Self-test: every subsystem has the same purity as its complement.
pub fn verify_complement_relations(s: &GraphState) -> bool {
    purity_spectrum(s).is_complement_symmetric()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcurrenceClass {
    pub value: ConcurrenceValue,
    /// Labeled member codes, ascending.
    pub members: Vec<EdgeCode>,
    /// Canonical codes of the isomorphism types in this class, ascending.
    pub representatives: Vec<EdgeCode>,
}

/// All labeled graphs on `n` vertices grouped by exact concurrence,
/// ordered by ascending value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcurrenceClassification {
    n: usize,
    classes: Vec<ConcurrenceClass>,
}

/// One row of the classification export.
#[derive(Debug, Clone, PartialEq, Serialize, serde::Deserialize)]
pub struct ClassRow {
    pub n: usize,
    pub class_index: usize,
    pub concurrence_float: f64,
    pub radicand_num: i64,
    pub radicand_den: i64,
    pub representative_code: EdgeCode,
    pub labeled_count: usize,
    pub representative_count: usize,
}

impl ClassRow {
    pub const HEADER: [&'static str; 8] = [
        "n",
        "class_index",
        "concurrence_float",
        "radicand_num",
        "radicand_den",
        "representative_code",
        "labeled_count",
        "representative_count",
    ];

    /// Fields as CSV cells, the float fixed to 4 decimals.
    pub fn to_record(&self) -> [String; 8] {
        [
            self.n.to_string(),
            self.class_index.to_string(),
            format!("{:.4}", self.concurrence_float),
            self.radicand_num.to_string(),
            self.radicand_den.to_string(),
            self.representative_code.to_string(),
            self.labeled_count.to_string(),
            self.representative_count.to_string(),
        ]
    }
}

impl ConcurrenceClassification {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[ConcurrenceClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn values(&self) -> Vec<ConcurrenceValue> {
        self.classes.iter().map(|c| c.value).collect()
    }

    pub fn representative_sizes(&self) -> Vec<usize> {
        self.classes
            .iter()
            .map(|c| c.representatives.len())
            .collect()
    }

    pub fn labeled_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.members.len()).collect()
    }

    /// Class index of the class holding `value`, if any.
    pub fn position(&self, value: &ConcurrenceValue) -> Option<usize> {
        self.classes.binary_search_by(|c| c.value.cmp(value)).ok()
    }

    pub fn partition(&self) -> Partition {
        let classes = self
            .classes
            .iter()
            .map(|c| Class {
                representative: Graph::from_code_unchecked(self.n, c.members[0]),
                members: c.members.clone(),
            })
            .collect();
        Partition::from_classes(self.n, PartitionKind::Concurrence, classes)
    }

    pub fn rows(&self) -> Vec<ClassRow> {
        self.classes
            .iter()
            .enumerate()
            .map(|(k, c)| ClassRow {
                n: self.n,
                class_index: k + 1,
                concurrence_float: c.value.rounded4(),
                radicand_num: *c.value.radicand().numer(),
                radicand_den: *c.value.radicand().denom(),
                representative_code: c.representatives[0],
                labeled_count: c.members.len(),
                representative_count: c.representatives.len(),
            })
            .collect()
    }
}

/// Computes the concurrence of every labeled graph on `n` vertices
/// (`3 ≤ n ≤ 6`) and groups them by exact radicand.
pub fn classify_by_concurrence(n: usize) -> Result<ConcurrenceClassification> {
    check_classify_range(n)?;
    let table = CanonicalTable::new(n)?;
    classify_with_table(&table)
}

pub fn classify_with_table(table: &CanonicalTable) -> Result<ConcurrenceClassification> {
    let n = table.n();
    check_classify_range(n)?;
    let count = labeled_graph_count(n)?;
    let values: Vec<ConcurrenceValue> = (0..count)
        .into_par_iter()
        .map(|code| graph_concurrence(&Graph::from_code_unchecked(n, code as EdgeCode)))
        .collect::<Result<_>>()?;

    let mut groups: BTreeMap<ConcurrenceValue, Vec<EdgeCode>> = BTreeMap::new();
    for (code, v) in values.into_iter().enumerate() {
        groups.entry(v).or_default().push(code as EdgeCode);
    }
    let classes = groups
        .into_iter()
        .map(|(value, members)| ConcurrenceClass {
            value,
            representatives: table.representatives_of(&members),
            members,
        })
        .collect();
    Ok(ConcurrenceClassification { n, classes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(num: i64, den: i64) -> Rational {
        Rational::new(num, den)
    }

    #[test]
    fn worked_single_edge_spectrum() {
        let s = build_state_phase(&"n=3;edges=1-3".parse().unwrap());
        let spec = purity_spectrum(&s);
        assert_eq!(spec.len(), 6);
        assert_eq!(spec.get(&[0]), Some(r(1, 2)));
        assert_eq!(spec.get(&[1]), Some(r(1, 1)));
        assert_eq!(spec.get(&[2]), Some(r(1, 2)));
        assert_eq!(spec.get(&[1, 2]), spec.get(&[0]));
        assert_eq!(spec.get(&[0, 2]), spec.get(&[1]));
        assert_eq!(spec.sum(), r(4, 1));
        let c = generalized_concurrence(&s).unwrap();
        assert_eq!(c.radicand(), r(2, 1));
        assert_eq!(c.squared(), r(1, 1));
        assert_eq!(c.fixed4(), "1.0000");
    }

    #[test]
    fn empty_graphs_have_zero_concurrence() {
        for n in 1..=6 {
            let c = graph_concurrence(&Graph::empty(n).unwrap()).unwrap();
            assert_eq!(c.radicand(), r(0, 1), "n = {n}");
            assert_eq!(c.value(), 0.0);
        }
        let spec = purity_spectrum(&GraphState::plus(4).unwrap());
        assert_eq!(spec.len(), 14);
        assert!(spec.iter().all(|(_, v)| v == r(1, 1)));
    }

    #[test]
    fn three_vertex_ghz_value() {
        let six_over_two = 6f64.sqrt() / 2.0;
        for g in [Graph::complete(3).unwrap(), Graph::path(3).unwrap()] {
            let c = graph_concurrence(&g).unwrap();
            assert_eq!(c.squared(), r(3, 2));
            assert!((c.value() - six_over_two).abs() < 1e-12);
            assert_eq!(c.fixed4(), "1.2247");
        }
    }

    #[test]
    fn two_qubit_degenerate_case() {
        let c = graph_concurrence(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(c.radicand(), r(1, 1));
        assert_eq!(c.value(), 1.0);
    }

    #[test]
    fn negative_radicand_is_an_error() {
        assert!(matches!(
            ConcurrenceValue::from_radicand(3, r(-1, 2)),
            Err(Error::NegativeRadicand(_))
        ));
    }

    #[test]
    fn rounding_is_half_even() {
        assert_eq!(round_half_even(0.125, 2), 0.12);
        assert_eq!(round_half_even(0.375, 2), 0.38);
        assert_eq!(round_half_even(1.5, 4), 1.5);
        assert_eq!(round_half_even(1.224744871, 4), 1.2247);
    }

    #[test]
    fn classify_range() {
        assert!(classify_by_concurrence(2).is_err());
        assert!(classify_by_concurrence(7).is_err());
    }

    #[test]
    fn three_vertex_classification() {
        let c = classify_by_concurrence(3).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.representative_sizes(), vec![1, 1, 2]);
        assert_eq!(c.labeled_sizes(), vec![1, 3, 4]);
        assert!(c.partition().covers_all_labeled_graphs());
        let rows = c.rows();
        assert_eq!(rows[2].to_record()[2], "1.2247");
        assert_eq!(rows[0].class_index, 1);
    }
}
