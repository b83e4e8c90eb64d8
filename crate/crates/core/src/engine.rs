//! The tactic-mixture evolution and expected payoffs.
//!
//! Alice applies the identity with probability `p` and the flip otherwise;
//! Bob does the same with `q`. The final state is the explicit four-branch
//! mixture
//!
//! ```text
//! ρ_fin = pq·ρ_II + p(1−q)·ρ_IX + (1−p)q·ρ_XI + (1−p)(1−q)·ρ_XX
//! ```
//!
//! where `ρ_AB = (A⊗B) ρ_in (A⊗B)†`. Every payoff is therefore bilinear in
//! `(p, q)`, which the equilibrium layer relies on.

use serde::Serialize;

use crate::game::{GamePayoffs, Player};
use crate::qstate::{expectation, weighted_sum, DensityMatrix, Tactic};
use crate::{Error, Result};

const PROB_TOL: f64 = 1e-12;

/// Identity probabilities `(p, q)` for Alice and Bob.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TacticsProfile {
    p: f64,
    q: f64,
}

impl TacticsProfile {
    /// Accepts values up to 1e-12 outside `[0, 1]` and clamps them.
    pub fn new(p: f64, q: f64) -> Result<Self> {
        let check = |name: &str, x: f64| -> Result<f64> {
            if !(-PROB_TOL..=1.0 + PROB_TOL).contains(&x) {
                return Err(Error::Parameter(format!(
                    "{name} = {x} is not a probability"
                )));
            }
            Ok(x.clamp(0.0, 1.0))
        };
        Ok(Self {
            p: check("p", p)?,
            q: check("q", q)?,
        })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// Branch weights in the order II, IX, XI, XX.
    pub fn branches(&self) -> [(Tactic, Tactic, f64); 4] {
        let (p, q) = (self.p, self.q);
        [
            (Tactic::Identity, Tactic::Identity, p * q),
            (Tactic::Identity, Tactic::Flip, p * (1.0 - q)),
            (Tactic::Flip, Tactic::Identity, (1.0 - p) * q),
            (Tactic::Flip, Tactic::Flip, (1.0 - p) * (1.0 - q)),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PayoffPair {
    pub alice: f64,
    pub bob: f64,
}

impl PayoffPair {
    pub fn get(&self, player: Player) -> f64 {
        match player {
            Player::Alice => self.alice,
            Player::Bob => self.bob,
        }
    }

    pub fn swapped(&self) -> Self {
        Self {
            alice: self.bob,
            bob: self.alice,
        }
    }
}

pub fn final_state(rho_in: &DensityMatrix, tactics: TacticsProfile) -> DensityMatrix {
    let terms = tactics
        .branches()
        .map(|(a, b, w)| (w, rho_in.conjugate_by_tactics(a, b)));
    weighted_sum(&terms)
}

pub fn expected_payoffs(
    game: &GamePayoffs,
    rho_in: &DensityMatrix,
    tactics: TacticsProfile,
) -> Result<PayoffPair> {
    let rho = final_state(rho_in, tactics);
    Ok(PayoffPair {
        alice: expectation(&game.payoff_operator(Player::Alice), &rho)?,
        bob: expectation(&game.payoff_operator(Player::Bob), &rho)?,
    })
}

/// `payoff(p, q) = c0 + c1·p + c2·q + c3·p·q`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BilinearCoefficients {
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl BilinearCoefficients {
    /// Fits the form through the payoff at the four corners of the unit square.
    pub fn from_corners(f00: f64, f10: f64, f01: f64, f11: f64) -> Self {
        Self {
            c0: f00,
            c1: f10 - f00,
            c2: f01 - f00,
            c3: f11 - f10 - f01 + f00,
        }
    }

    pub fn eval(&self, p: f64, q: f64) -> f64 {
        self.c0 + self.c1 * p + self.c2 * q + self.c3 * p * q
    }

    /// `∂/∂p` as `(intercept, coefficient of q)`.
    pub fn slope_in_p(&self) -> (f64, f64) {
        (self.c1, self.c3)
    }

    /// `∂/∂q` as `(intercept, coefficient of p)`.
    pub fn slope_in_q(&self) -> (f64, f64) {
        (self.c2, self.c3)
    }
}

pub fn bilinear_coefficients(
    game: &GamePayoffs,
    rho_in: &DensityMatrix,
    player: Player,
) -> Result<BilinearCoefficients> {
    let op = game.payoff_operator(player);
    let corner = |p: f64, q: f64| -> Result<f64> {
        expectation(&op, &final_state(rho_in, TacticsProfile { p, q }))
    };
    Ok(BilinearCoefficients::from_corners(
        corner(0.0, 0.0)?,
        corner(1.0, 0.0)?,
        corner(0.0, 1.0)?,
        corner(1.0, 1.0)?,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SurfaceCell {
    pub p: f64,
    pub q: f64,
    pub payoffs: PayoffPair,
}

/// `k / (resolution − 1)` for `k = 0..resolution`; both endpoints exact.
pub fn grid_values(resolution: usize) -> Result<Vec<f64>> {
    if resolution < 2 {
        return Err(Error::Parameter(format!(
            "grid resolution must be at least 2, got {resolution}"
        )));
    }
    let last = (resolution - 1) as f64;
    Ok((0..resolution).map(|k| k as f64 / last).collect())
}

/// Payoffs on a `resolution × resolution` grid, `p` outer and `q` inner,
/// both ascending.
pub fn payoff_surface(
    game: &GamePayoffs,
    rho_in: &DensityMatrix,
    resolution: usize,
) -> Result<Vec<SurfaceCell>> {
    let values = grid_values(resolution)?;
    let mut cells = Vec::with_capacity(resolution * resolution);
    for &p in &values {
        for &q in &values {
            let payoffs = expected_payoffs(game, rho_in, TacticsProfile { p, q })?;
            cells.push(SurfaceCell { p, q, payoffs });
        }
    }
    Ok(cells)
}
