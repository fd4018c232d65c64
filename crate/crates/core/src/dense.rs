//! Floating complex state vectors, used only to check local-complementation
//! unitaries against the graph rule.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::state::{basis_bits, qubit_bit};

pub type Matrix2 = [[Complex64; 2]; 2];

const UNITARY_TOL: f64 = 1e-12;
const PHASE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct DenseState {
    n: usize,
    amplitudes: Vec<Complex64>,
}

impl DenseState {
    pub fn new(n: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != 1 << n {
            return Err(Error::QubitMismatch(
                n,
                amplitudes.len().trailing_zeros() as usize,
            ));
        }
        Ok(Self { n, amplitudes })
    }

    pub(crate) fn from_real(n: usize, amps: impl Iterator<Item = f64>) -> Self {
        Self {
            n,
            amplitudes: amps.map(|a| Complex64::new(a, 0.0)).collect(),
        }
    }

    /// Computational basis state `|label⟩`.
    pub fn basis(n: usize, label: usize) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n];
        amplitudes[label] = Complex64::new(1.0, 0.0);
        Self { n, amplitudes }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(Complex64::norm_sqr).sum()
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        Self {
            n: self.n,
            amplitudes: self.amplitudes.iter().map(|a| a * c).collect(),
        }
    }

    /// Applies `u` to qubit `q`, leaving the rest untouched.
    pub fn apply_single_qubit_unitary(&self, q: usize, u: &Matrix2) -> Result<Self> {
        if q >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: q,
                n: self.n,
            });
        }
        let dev = unitarity_deviation(u);
        if dev > UNITARY_TOL {
            return Err(Error::NotUnitary(dev));
        }
        let bit = qubit_bit(self.n, q);
        let mut out = self.amplitudes.clone();
        for lo in (0..out.len()).filter(|l| l & bit == 0) {
            let hi = lo | bit;
            let (a0, a1) = (self.amplitudes[lo], self.amplitudes[hi]);
            out[lo] = u[0][0] * a0 + u[0][1] * a1;
            out[hi] = u[1][0] * a0 + u[1][1] * a1;
        }
        Ok(Self {
            n: self.n,
            amplitudes: out,
        })
    }

    /// One line per basis label: `|b1..bn> re,im` with 12 significant digits.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (label, a) in self.amplitudes.iter().enumerate() {
            let _ = writeln!(
                out,
                "|{}> {},{}",
                basis_bits(self.n, label),
                significant(a.re, 12),
                significant(a.im, 12)
            );
        }
        out
    }
}

/// Free-function form of [`DenseState::apply_single_qubit_unitary`].
pub fn apply_single_qubit_unitary(s: &DenseState, q: usize, u: &Matrix2) -> Result<DenseState> {
    s.apply_single_qubit_unitary(q, u)
}

/// Largest entry of `|u†u - I|`.
pub fn unitarity_deviation(u: &Matrix2) -> f64 {
    let mut worst: f64 = 0.0;
    for r in 0..2 {
        for c in 0..2 {
            let dot: Complex64 = (0..2).map(|k| u[k][r].conj() * u[k][c]).sum();
            let target = if r == c { 1.0 } else { 0.0 };
            worst = worst.max((dot - target).norm());
        }
    }
    worst
}

/// The unit `c` with `a ≈ c·b`, if one exists. `c` is read off the largest
/// amplitude of `b` (lowest label on ties) and then checked elementwise.
pub fn global_phase(a: &DenseState, b: &DenseState) -> Result<Option<Complex64>> {
    if a.n != b.n {
        return Err(Error::QubitMismatch(a.n, b.n));
    }
    let mut pivot = 0;
    for (k, amp) in b.amplitudes.iter().enumerate() {
        if amp.norm() > b.amplitudes[pivot].norm() + PHASE_TOL {
            pivot = k;
        }
    }
    let reference = b.amplitudes[pivot];
    if reference.norm() <= PHASE_TOL {
        let both_zero = a.amplitudes.iter().all(|x| x.norm() <= PHASE_TOL);
        return Ok(both_zero.then_some(Complex64::new(1.0, 0.0)));
    }
    let c = a.amplitudes[pivot] / reference;
    if (c.norm() - 1.0).abs() > PHASE_TOL {
        return Ok(None);
    }
    let matches = a
        .amplitudes
        .iter()
        .zip(&b.amplitudes)
        .all(|(x, y)| (x - c * y).norm() <= PHASE_TOL);
    Ok(matches.then_some(c))
}

pub fn states_equal_up_to_global_phase(a: &DenseState, b: &DenseState) -> Result<bool> {
    Ok(global_phase(a, b)?.is_some())
}

pub mod gates {
    use super::Matrix2;
    use num_complex::Complex64;

    const ZERO: Complex64 = Complex64::new(0.0, 0.0);
    const ONE: Complex64 = Complex64::new(1.0, 0.0);
    const I: Complex64 = Complex64::new(0.0, 1.0);

    pub fn identity() -> Matrix2 {
        [[ONE, ZERO], [ZERO, ONE]]
    }

    pub fn pauli_x() -> Matrix2 {
        [[ZERO, ONE], [ONE, ZERO]]
    }

    pub fn pauli_y() -> Matrix2 {
        [[ZERO, -I], [I, ZERO]]
    }

    pub fn pauli_z() -> Matrix2 {
        [[ONE, ZERO], [ZERO, -ONE]]
    }

    /// `exp(iθP) = cos θ·I + i sin θ·P` for a Pauli matrix `P`.
    pub fn exp_i_pauli(theta: f64, pauli: &Matrix2) -> Matrix2 {
        let (s, c) = theta.sin_cos();
        let id = identity();
        let mut out = [[ZERO; 2]; 2];
        for r in 0..2 {
            for col in 0..2 {
                out[r][col] = id[r][col] * c + I * s * pauli[r][col];
            }
        }
        out
    }

    pub fn mul(a: &Matrix2, b: &Matrix2) -> Matrix2 {
        let mut out = [[ZERO; 2]; 2];
        for r in 0..2 {
            for c in 0..2 {
                out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        out
    }
}

/// Formats `x` with `digits` significant digits in plain decimal notation.
pub(crate) fn significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() {
            "0".into()
        } else {
            x.to_string()
        };
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}
