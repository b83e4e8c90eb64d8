//! Quantized static 2×2 games of complete information.
//!
//! Each player's pure strategies span a two-dimensional Hilbert space with
//! basis labels `O` and `T`; the pair of strategies lives in the four
//! dimensional product space with basis order `OO, OT, TO, TT` (Alice owns
//! the left factor). A game starts from a compound strategy state, each
//! player applies the identity with probability `p` (Alice) or `q` (Bob) and
//! the bit flip otherwise, and the payoffs are read off the resulting
//! density matrix.
//!
//! With a factorizable starting state the classical mixed-strategy game is
//! reproduced exactly. With the entangled state `(|OO⟩ + |TT⟩)/√2` the two
//! pure Battle-of-the-Sexes equilibria lead to the same final state, which
//! is what [`equilibrium::classify_dilemma`] detects.
//!
//! ```
//! use qgame::prelude::*;
//!
//! let game = GamePayoffs::battle_of_sexes(BoSParameters::new(5.0, 3.0, 1.0)?);
//! let rho = DensityMatrix::from_state(&StrategyState::entangled_bos());
//! let pay = expected_payoffs(&game, &rho, TacticsProfile::new(0.0, 0.0)?)?;
//! assert!((pay.alice - 4.0).abs() < 1e-12 && (pay.bob - 4.0).abs() < 1e-12);
//! # Ok::<(), qgame::Error>(())
//! ```

pub mod cli;
pub mod engine;
pub mod equilibrium;
mod error;
pub mod game;
pub mod qstate;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::engine::{
        bilinear_coefficients, expected_payoffs, final_state, payoff_surface, BilinearCoefficients,
        PayoffPair, SurfaceCell, TacticsProfile,
    };
    pub use crate::equilibrium::{
        analyze, classical_mixed_payoff, classical_nash_equilibria, classify_dilemma,
        quantum_nash_equilibria, verify_equilibrium_grid, Continuum, DilemmaStatus, DilemmaVerdict,
        EquilibriumKind, EquilibriumPoint, EquilibriumReport,
    };
    pub use crate::game::{BoSParameters, GamePayoffs, Player};
    pub use crate::qstate::{
        expectation, frobenius_distance, is_factorizable, tensor_product, DensityMatrix,
        DiagonalOperator, SingleStrategy, StrategyState, Tactic,
    };
    pub use crate::{Error, Result};
}
