//! Exact graph states and their reduced density matrices.
//!
//! Every graph state has amplitudes `±2^(-n/2)`, so it is stored as a sign
//! vector. Basis labels are read with qubit 0 as the most significant bit:
//! label `0b100` on three qubits is `|100⟩`, i.e. qubit 0 in `|1⟩`.
//!
//! Reduced density matrices of graph states have entries in `2^(-n) Z`; they
//! are stored as integer numerators over that fixed denominator, so traces
//! and purities come out as exact rationals.

use std::fmt::Write as _;

use num_rational::Ratio;

use crate::dense::DenseState;
use crate::error::{Error, Result};
use crate::graph::{check_vertex_count, Graph};

/// Exact rational used for purities and radicands.
pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphState {
    n: usize,
    signs: Vec<i8>,
}

/// Bit of qubit `q` inside a basis label on `n` qubits.
#[inline]
pub(crate) fn qubit_bit(n: usize, q: usize) -> usize {
    1 << (n - 1 - q)
}

impl GraphState {
    /// `|+⟩^⊗n`: every sign `+1`.
    pub fn plus(n: usize) -> Result<Self> {
        check_vertex_count(n)?;
        Ok(Self {
            n,
            signs: vec![1; 1 << n],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn dim(&self) -> usize {
        self.signs.len()
    }

    /// Common magnitude `2^(-n/2)` of every amplitude.
    pub fn amplitude_scale(&self) -> f64 {
        (self.dim() as f64).sqrt().recip()
    }

    pub fn amplitude(&self, label: usize) -> f64 {
        f64::from(self.signs[label]) * self.amplitude_scale()
    }

    /// Controlled-Z between qubits `i` and `j`: flips every label with both set.
    pub fn apply_cz(&mut self, i: usize, j: usize) -> Result<()> {
        for q in [i, j] {
            if q >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: q,
                    n: self.n,
                });
            }
        }
        if i == j {
            return Err(Error::VertexOutOfRange {
                vertex: j,
                n: self.n,
            });
        }
        let mask = qubit_bit(self.n, i) | qubit_bit(self.n, j);
        for (label, s) in self.signs.iter_mut().enumerate() {
            if label & mask == mask {
                *s = -*s;
            }
        }
        Ok(())
    }

    pub fn to_dense(&self) -> DenseState {
        let scale = self.amplitude_scale();
        DenseState::from_real(self.n, self.signs.iter().map(|&s| f64::from(s) * scale))
    }

    /// One line per basis label: `|b1..bn> +1`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (label, &s) in self.signs.iter().enumerate() {
            let _ = writeln!(out, "|{}> {:+}", basis_bits(self.n, label), s);
        }
        out
    }

    /// Reduced state on the 0-based qubits in `subset` (sorted, distinct,
    /// nonempty and not all qubits).
    pub fn reduced_density_matrix(&self, subset: &[usize]) -> Result<ReducedDensityMatrix> {
        let n = self.n;
        let bad = |reason| Error::Subsystem {
            subset: subset.to_vec(),
            n,
            reason,
        };
        if subset.is_empty() {
            return Err(bad("subset is empty"));
        }
        if subset.windows(2).any(|w| w[0] >= w[1]) {
            return Err(bad("subset must be sorted without duplicates"));
        }
        if subset.iter().any(|&q| q >= n) {
            return Err(bad("qubit out of range"));
        }
        if subset.len() == n {
            return Err(bad("subset is the whole system"));
        }

        let rest: Vec<usize> = (0..n).filter(|q| !subset.contains(q)).collect();
        let kept = spread_labels(n, subset);
        let traced = spread_labels(n, &rest);
        let dim = kept.len();
        let mut numerators = vec![0i64; dim * dim];
        for x in 0..dim {
            for y in x..dim {
                let v: i64 = traced
                    .iter()
                    .map(|&z| i64::from(self.signs[kept[x] | z] * self.signs[kept[y] | z]))
                    .sum();
                numerators[x * dim + y] = v;
                numerators[y * dim + x] = v;
            }
        }
        Ok(ReducedDensityMatrix {
            subset: subset.to_vec(),
            total_qubits: n,
            dim,
            numerators,
        })
    }
}

/// Builds `|G⟩` from the phase formula: the sign of label `μ` is `-1` raised
/// to the number of edges with both endpoints set in `μ`.
pub fn build_state_phase(g: &Graph) -> GraphState {
    let n = g.n();
    let edge_masks: Vec<usize> = g
        .edges()
        .map(|(i, j)| qubit_bit(n, i) | qubit_bit(n, j))
        .collect();
    let signs = (0..1usize << n)
        .map(|label| {
            let inside = edge_masks.iter().filter(|&&m| label & m == m).count();
            if inside % 2 == 0 {
                1
            } else {
                -1
            }
        })
        .collect();
    GraphState { n, signs }
}

/// Builds `|G⟩` by applying one controlled-Z per edge to `|+⟩^⊗n`.
pub fn build_state_cz(g: &Graph) -> GraphState {
    let mut state = GraphState {
        n: g.n(),
        signs: vec![1; 1 << g.n()],
    };
    for (i, j) in g.edges() {
        state
            .apply_cz(i, j)
            .expect("graph edges are valid qubit pairs");
    }
    state
}

/// Basis label bits of every assignment to `qubits`, enumerated in the
/// order of the sub-register (first listed qubit most significant).
fn spread_labels(n: usize, qubits: &[usize]) -> Vec<usize> {
    let k = qubits.len();
    (0..1usize << k)
        .map(|local| {
            qubits
                .iter()
                .enumerate()
                .filter(|&(pos, _)| local >> (k - 1 - pos) & 1 == 1)
                .fold(0, |acc, (_, &q)| acc | qubit_bit(n, q))
        })
        .collect()
}

pub(crate) fn basis_bits(n: usize, label: usize) -> String {
    (0..n)
        .map(|q| {
            if label & qubit_bit(n, q) != 0 {
                '1'
            } else {
                '0'
            }
        })
        .collect()
}

/// Exact reduced density matrix `Tr_complement |G⟩⟨G|` of a graph state.
///
/// Entry `(x, y)` equals `numerator(x, y) / 2^total_qubits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedDensityMatrix {
    subset: Vec<usize>,
    total_qubits: usize,
    dim: usize,
    numerators: Vec<i64>,
}

impl ReducedDensityMatrix {
    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn denominator(&self) -> i64 {
        1 << self.total_qubits
    }

    pub fn numerator(&self, row: usize, col: usize) -> i64 {
        self.numerators[row * self.dim + col]
    }

    pub fn entry(&self, row: usize, col: usize) -> Rational {
        Rational::new(self.numerator(row, col), self.denominator())
    }

    pub fn trace(&self) -> Rational {
        let sum = (0..self.dim).map(|k| self.numerator(k, k)).sum();
        Rational::new(sum, self.denominator())
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|r| (0..r).all(|c| self.numerator(r, c) == self.numerator(c, r)))
    }

    /// Exact `Tr(ρ²)`.
    pub fn purity(&self) -> Rational {
        let d = self.dim;
        let sum: i64 = (0..d)
            .flat_map(|r| (0..d).map(move |c| (r, c)))
            .map(|(r, c)| self.numerator(r, c) * self.numerator(c, r))
            .sum();
        Rational::new(sum, self.denominator() * self.denominator())
    }

    /// Rank one on exact entries: every 2×2 minor vanishes.
    pub fn is_rank_one(&self) -> bool {
        let d = self.dim;
        let m = |r, c| self.numerator(r, c);
        (0..d).all(|r1| {
            (r1 + 1..d).all(|r2| {
                (0..d)
                    .all(|c1| (c1 + 1..d).all(|c2| m(r1, c1) * m(r2, c2) == m(r1, c2) * m(r2, c1)))
            })
        })
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        let den = self.denominator() as f64;
        (0..self.dim)
            .map(|r| {
                (0..self.dim)
                    .map(|c| self.numerator(r, c) as f64 / den)
                    .collect()
            })
            .collect()
    }
}

/// Free-function form of [`ReducedDensityMatrix::purity`].
pub fn purity(r: &ReducedDensityMatrix) -> Rational {
    r.purity()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn signs_of(s: &GraphState) -> Vec<i8> {
        s.signs().to_vec()
    }

    fn edge13() -> Graph {
        "n=3;edges=1-3".parse().unwrap()
    }

    #[test]
    fn phase_construction_examples() {
        let empty = build_state_phase(&Graph::empty(3).unwrap());
        assert_eq!(signs_of(&empty), vec![1; 8]);
        assert_eq!(
            signs_of(&build_state_phase(&edge13())),
            vec![1, 1, 1, 1, 1, -1, 1, -1]
        );
        assert_eq!(
            signs_of(&build_state_phase(&Graph::empty(1).unwrap())),
            vec![1, 1]
        );
    }

    #[test]
    fn cz_construction_examples() {
        assert_eq!(build_state_cz(&edge13()), build_state_phase(&edge13()));
        for n in 1..=4 {
            assert_eq!(
                build_state_cz(&Graph::empty(n).unwrap()),
                GraphState::plus(n).unwrap()
            );
        }
        let tri = build_state_cz(&Graph::complete(3).unwrap());
        assert_eq!(signs_of(&tri), vec![1, 1, 1, -1, 1, -1, -1, -1]);
    }

    #[test]
    fn cz_rejects_bad_qubits() {
        let mut s = GraphState::plus(3).unwrap();
        assert!(s.apply_cz(0, 3).is_err());
        assert!(s.apply_cz(1, 1).is_err());
    }

    #[test]
    fn worked_reduced_matrices() {
        let s = build_state_phase(&edge13());
        let half = Rational::new(1, 2);
        let rho2 = s.reduced_density_matrix(&[1]).unwrap();
        for r in 0..2 {
            for c in 0..2 {
                assert_eq!(rho2.entry(r, c), half);
            }
        }
        for q in [0, 2] {
            let rho = s.reduced_density_matrix(&[q]).unwrap();
            assert_eq!(rho.entry(0, 0), half);
            assert_eq!(rho.entry(1, 1), half);
            assert_eq!(rho.entry(0, 1), Rational::from_integer(0));
            assert_eq!(rho.purity(), half);
        }
        assert_eq!(rho2.purity(), Rational::from_integer(1));
        assert!(rho2.is_rank_one());
    }

    #[test]
    fn product_state_marginals() {
        let s = GraphState::plus(4).unwrap();
        for q in 0..4 {
            let rho = s.reduced_density_matrix(&[q]).unwrap();
            assert!((0..2).all(|r| (0..2).all(|c| rho.entry(r, c) == Rational::new(1, 2))));
        }
    }

    #[test]
    fn maximally_mixed_purity() {
        let bell = build_state_phase(&Graph::complete(2).unwrap());
        let rho = bell.reduced_density_matrix(&[0]).unwrap();
        assert_eq!(purity(&rho), Rational::new(1, 2));
        assert!(!rho.is_rank_one());
    }

    #[test]
    fn subset_validation() {
        let s = GraphState::plus(3).unwrap();
        assert!(s.reduced_density_matrix(&[]).is_err());
        assert!(s.reduced_density_matrix(&[0, 1, 2]).is_err());
        assert!(s.reduced_density_matrix(&[1, 0]).is_err());
        assert!(s.reduced_density_matrix(&[1, 1]).is_err());
        assert!(s.reduced_density_matrix(&[3]).is_err());
    }

    #[test]
    fn dump_format() {
        let dump = build_state_phase(&edge13()).dump();
        let lines: Vec<_> = dump.lines().collect();
        assert_eq!(lines.len(), 8);
        assert_eq!(lines[0], "|000> +1");
        assert_eq!(lines[5], "|101> -1");
    }

    #[test]
    fn multi_qubit_subset_ordering() {
        // Edge {1,2} on three qubits, keep qubits {0,1}: qubit 0 is in |+⟩,
        // so the matrix is |+⟩⟨+| ⊗ ρ_1 with ρ_1 = I/2.
        let s = build_state_phase(&Graph::from_edges(3, &[(1, 2)]).unwrap());
        let rho = s.reduced_density_matrix(&[0, 1]).unwrap();
        let expect = [[1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1]];
        for r in 0..4 {
            for c in 0..4 {
                assert_eq!(rho.entry(r, c), Rational::new(expect[r][c], 4));
            }
        }
        assert_eq!(rho.trace(), Rational::from_integer(1));
    }
}
