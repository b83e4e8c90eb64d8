//! Fixed-size complex linear algebra for two-player strategy states.
//!
//! All two-player objects use the basis order `OO, OT, TO, TT`; the index of
//! a basis vector is `2 * alice + bob` with `O = 0` and `T = 1`.

use std::fmt;

use nalgebra::Matrix4;
use num_complex::Complex64;
use serde::Serialize;

use crate::{Error, Result};

/// Allowed deviation of the squared norm from one.
pub const NORM_TOL: f64 = 1e-12;
/// Allowed Hermiticity defect and trace deviation of a density matrix.
pub const DENSITY_TOL: f64 = 1e-12;
/// Smallest eigenvalue accepted as non-negative.
pub const PSD_TOL: f64 = 1e-10;
/// Default threshold on the reshaped determinant for product states.
pub const FACTORIZABLE_TOL: f64 = 1e-10;
/// Largest imaginary part tolerated in a real-valued expectation.
pub const IMAG_RESIDUE_TOL: f64 = 1e-12;

pub const OO: usize = 0;
pub const OT: usize = 1;
pub const TO: usize = 2;
pub const TT: usize = 3;

pub const BASIS_LABELS: [&str; 4] = ["OO", "OT", "TO", "TT"];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

fn check_norm(amps: &[Complex64]) -> Result<()> {
    let norm_sqr: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
    if !norm_sqr.is_finite() || (norm_sqr - 1.0).abs() >= NORM_TOL {
        return Err(Error::Normalization { norm_sqr });
    }
    Ok(())
}

/// One player's strategy: amplitudes on `|O⟩` and `|T⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SingleStrategy {
    amps: [Complex64; 2],
}

impl SingleStrategy {
    pub fn new(o: Complex64, t: Complex64) -> Result<Self> {
        let amps = [o, t];
        check_norm(&amps)?;
        Ok(Self { amps })
    }

    pub fn from_real(o: f64, t: f64) -> Result<Self> {
        Self::new(Complex64::new(o, 0.0), Complex64::new(t, 0.0))
    }

    /// The pure strategy `|O⟩`.
    pub fn o() -> Self {
        Self {
            amps: [Complex64::new(1.0, 0.0), ZERO],
        }
    }

    /// The pure strategy `|T⟩`.
    pub fn t() -> Self {
        Self {
            amps: [ZERO, Complex64::new(1.0, 0.0)],
        }
    }

    pub fn amplitudes(&self) -> [Complex64; 2] {
        self.amps
    }
}

/// A normalized vector in the four-dimensional two-player strategy space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StrategyState {
    amps: [Complex64; 4],
}

impl StrategyState {
    pub fn new(amps: [Complex64; 4]) -> Result<Self> {
        check_norm(&amps)?;
        Ok(Self { amps })
    }

    pub fn from_real(amps: [f64; 4]) -> Result<Self> {
        Self::new(amps.map(|a| Complex64::new(a, 0.0)))
    }

    /// The basis state with index `index` (see [`OO`], [`OT`], [`TO`], [`TT`]).
    pub fn basis(index: usize) -> Self {
        assert!(index < 4, "basis index out of range: {index}");
        let mut amps = [ZERO; 4];
        amps[index] = Complex64::new(1.0, 0.0);
        Self { amps }
    }

    /// `(|OO⟩ + |TT⟩)/√2`.
    pub fn entangled_bos() -> Self {
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self {
            amps: [h, ZERO, ZERO, h],
        }
    }

    pub fn amplitudes(&self) -> [Complex64; 4] {
        self.amps
    }

    /// Exchanges the two tensor factors (`|st⟩ → |ts⟩`).
    pub fn swap_players(&self) -> Self {
        let [a, b, c, d] = self.amps;
        Self { amps: [a, c, b, d] }
    }

    /// Magnitude of the determinant of the amplitudes reshaped to 2×2.
    /// Zero exactly for product states; 1/2 for maximally entangled ones.
    pub fn entanglement_determinant(&self) -> f64 {
        let [a00, a01, a10, a11] = self.amps;
        (a00 * a11 - a01 * a10).norm()
    }
}

pub fn tensor_product(u: &SingleStrategy, v: &SingleStrategy) -> StrategyState {
    let mut amps = [ZERO; 4];
    for i in 0..2 {
        for j in 0..2 {
            amps[2 * i + j] = u.amps[i] * v.amps[j];
        }
    }
    StrategyState { amps }
}

pub fn is_factorizable(state: &StrategyState, tol: f64) -> bool {
    state.entanglement_determinant() < tol
}

/// A local operation available to one player.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Tactic {
    Identity,
    /// The bit flip σx, exchanging `O` and `T` for its owner.
    Flip,
}

impl Tactic {
    pub const ALL: [Tactic; 2] = [Tactic::Identity, Tactic::Flip];

    fn symbol(self) -> char {
        match self {
            Tactic::Identity => 'I',
            Tactic::Flip => 'X',
        }
    }
}

impl fmt::Display for Tactic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Basis permutation induced by `alice ⊗ bob`; an involution.
fn tactic_permutation(alice: Tactic, bob: Tactic) -> impl Fn(usize) -> usize {
    let mask = match alice {
        Tactic::Identity => 0,
        Tactic::Flip => 2,
    } | match bob {
        Tactic::Identity => 0,
        Tactic::Flip => 1,
    };
    move |i| i ^ mask
}

/// A 4×4 Hermitian, positive semidefinite, unit-trace matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensityMatrix {
    entries: [[Complex64; 4]; 4],
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn from_entries(entries: [[Complex64; 4]; 4]) -> Result<Self> {
        let rho = Self { entries };
        rho.validate()?;
        Ok(rho)
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn from_entries_unchecked(entries: [[Complex64; 4]; 4]) -> Self {
        Self { entries }
    }

    /// The projector `|ψ⟩⟨ψ|`.
    pub fn from_state(state: &StrategyState) -> Self {
        let mut entries = [[ZERO; 4]; 4];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = state.amps[i] * state.amps[j].conj();
            }
        }
        Self { entries }
    }

    pub fn entries(&self) -> &[[Complex64; 4]; 4] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i][j]
    }

    pub fn diagonal(&self) -> [f64; 4] {
        std::array::from_fn(|k| self.entries[k][k].re)
    }

    pub fn trace(&self) -> Complex64 {
        (0..4).map(|k| self.entries[k][k]).sum()
    }

    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((self.entries[i][j] - self.entries[j][i].conj()).norm());
            }
        }
        worst
    }

    /// Smallest eigenvalue of the Hermitian part.
    pub fn min_eigenvalue(&self) -> f64 {
        let m = Matrix4::from_fn(|i, j| {
            // Hermitian part, so the symmetric solver sees a consistent matrix.
            (self.entries[i][j] + self.entries[j][i].conj()) * 0.5
        });
        m.symmetric_eigenvalues().min()
    }

    pub fn validate(&self) -> Result<()> {
        if self
            .entries
            .iter()
            .flatten()
            .any(|e| !e.re.is_finite() || !e.im.is_finite())
        {
            return Err(Error::InvalidDensity("non-finite entry".into()));
        }
        let defect = self.hermiticity_defect();
        if defect >= DENSITY_TOL {
            return Err(Error::InvalidDensity(format!(
                "not Hermitian (defect {defect:e})"
            )));
        }
        let tr = self.trace();
        if (tr.re - 1.0).abs() >= DENSITY_TOL || tr.im.abs() >= DENSITY_TOL {
            return Err(Error::InvalidDensity(format!("trace {tr} is not 1")));
        }
        let min_eig = self.min_eigenvalue();
        if min_eig < -PSD_TOL {
            return Err(Error::InvalidDensity(format!(
                "not positive semidefinite (eigenvalue {min_eig:e})"
            )));
        }
        Ok(())
    }

    /// `(A ⊗ B) ρ (A ⊗ B)†` for `A, B ∈ {I, σx}`. Both operators are real
    /// permutation matrices, so this is an exact relabeling of entries.
    pub fn conjugate_by_tactics(&self, alice: Tactic, bob: Tactic) -> Self {
        let perm = tactic_permutation(alice, bob);
        let mut entries = [[ZERO; 4]; 4];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = self.entries[perm(i)][perm(j)];
            }
        }
        Self { entries }
    }

    /// Exchanges the two tensor factors.
    pub fn swap_players(&self) -> Self {
        let perm = |i: usize| match i {
            OT => TO,
            TO => OT,
            k => k,
        };
        let mut entries = [[ZERO; 4]; 4];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = self.entries[perm(i)][perm(j)];
            }
        }
        Self { entries }
    }

    /// `λ·self + (1−λ)·other`.
    pub fn mix(&self, other: &DensityMatrix, lambda: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Error::Parameter(format!(
                "mixing weight {lambda} outside [0, 1]"
            )));
        }
        Ok(weighted_sum(&[(lambda, *self), (1.0 - lambda, *other)]))
    }
}

/// Sum of weighted density matrices. Zero weights are skipped so that a
/// single unit weight reproduces its term bit for bit.
pub(crate) fn weighted_sum(terms: &[(f64, DensityMatrix)]) -> DensityMatrix {
    let mut acc: Option<[[Complex64; 4]; 4]> = None;
    for &(w, ref rho) in terms {
        if w == 0.0 {
            continue;
        }
        let scaled = rho.entries.map(|row| row.map(|e| e * w));
        acc = Some(match acc {
            None => scaled,
            Some(mut a) => {
                for i in 0..4 {
                    for j in 0..4 {
                        a[i][j] += scaled[i][j];
                    }
                }
                a
            }
        });
    }
    DensityMatrix::from_entries_unchecked(acc.unwrap_or([[ZERO; 4]; 4]))
}

impl fmt::Display for DensityMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row
                .iter()
                .map(|e| {
                    if e.im == 0.0 {
                        format!("{:>8.4}", e.re)
                    } else {
                        format!("{:.4}{:+.4}i", e.re, e.im)
                    }
                })
                .collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// A real diagonal operator in the `OO, OT, TO, TT` basis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiagonalOperator(pub [f64; 4]);

impl DiagonalOperator {
    pub fn diag(&self) -> [f64; 4] {
        self.0
    }
}

/// `tr(P ρ)`; fails if the result carries an imaginary part of 1e-12 or more.
pub fn expectation(op: &DiagonalOperator, rho: &DensityMatrix) -> Result<f64> {
    let value: Complex64 = (0..4).map(|k| rho.entries[k][k] * op.0[k]).sum();
    if value.im.abs() >= IMAG_RESIDUE_TOL || !value.im.is_finite() {
        return Err(Error::NumericIntegrity {
            residue: value.im.abs(),
        });
    }
    Ok(value.re)
}

pub fn frobenius_distance(a: &DensityMatrix, b: &DensityMatrix) -> f64 {
    a.entries
        .iter()
        .flatten()
        .zip(b.entries.iter().flatten())
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt()
}
