//! Payoff tables for 2×2 static games.

use serde::Serialize;

use crate::qstate::{DiagonalOperator, OO, OT, TO, TT};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Player {
    Alice,
    Bob,
}

/// Battle of the Sexes parameters, `alpha > beta > gamma`.
///
/// The coordinated outcomes pay `(alpha, beta)` and `(beta, alpha)`; both
/// miscoordinated outcomes pay `gamma` to each player.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoSParameters {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl BoSParameters {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        if !(alpha.is_finite() && beta.is_finite() && gamma.is_finite()) {
            return Err(Error::Parameter(
                "Battle of the Sexes parameters must be finite".into(),
            ));
        }
        if !(alpha > beta && beta > gamma) {
            return Err(Error::Parameter(format!(
                "Battle of the Sexes needs alpha > beta > gamma, got ({alpha}, {beta}, {gamma})"
            )));
        }
        Ok(Self { alpha, beta, gamma })
    }
}

impl Default for BoSParameters {
    fn default() -> Self {
        Self {
            alpha: 5.0,
            beta: 3.0,
            gamma: 1.0,
        }
    }
}

/// Per-player payoffs over the outcomes `OO, OT, TO, TT`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GamePayoffs {
    alice: [f64; 4],
    bob: [f64; 4],
    labels: [String; 2],
}

impl GamePayoffs {
    pub fn new(alice: [f64; 4], bob: [f64; 4]) -> Result<Self> {
        if alice.iter().chain(&bob).any(|x| !x.is_finite()) {
            return Err(Error::Parameter("payoffs must be finite".into()));
        }
        Ok(Self {
            alice,
            bob,
            labels: ["Alice".to_string(), "Bob".to_string()],
        })
    }

    pub fn with_labels(mut self, alice: impl Into<String>, bob: impl Into<String>) -> Self {
        self.labels = [alice.into(), bob.into()];
        self
    }

    pub fn battle_of_sexes(params: BoSParameters) -> Self {
        let BoSParameters { alpha, beta, gamma } = params;
        Self {
            alice: [alpha, gamma, gamma, beta],
            bob: [beta, gamma, gamma, alpha],
            labels: ["Alice".to_string(), "Bob".to_string()],
        }
    }

    /// Every outcome pays `value` to both players.
    pub fn constant(value: f64) -> Result<Self> {
        Self::new([value; 4], [value; 4])
    }

    pub fn zero() -> Self {
        Self::constant(0.0).expect("zero is finite")
    }

    pub fn table(&self, player: Player) -> [f64; 4] {
        match player {
            Player::Alice => self.alice,
            Player::Bob => self.bob,
        }
    }

    pub fn alice(&self) -> [f64; 4] {
        self.alice
    }

    pub fn bob(&self) -> [f64; 4] {
        self.bob
    }

    pub fn labels(&self) -> &[String; 2] {
        &self.labels
    }

    pub fn payoff_operator(&self, player: Player) -> DiagonalOperator {
        DiagonalOperator(self.table(player))
    }

    /// Exchanges roles and seats: `a'[st] = b[ts]`, `b'[st] = a[ts]`.
    pub fn swap_players(&self) -> Self {
        let seat = |t: [f64; 4]| [t[OO], t[TO], t[OT], t[TT]];
        Self {
            alice: seat(self.bob),
            bob: seat(self.alice),
            labels: [self.labels[1].clone(), self.labels[0].clone()],
        }
    }

    /// Renames `O ↔ T` for both players: `a'[st] = a[s̄t̄]`.
    pub fn relabel_strategies(&self) -> Self {
        let flip = |t: [f64; 4]| [t[TT], t[TO], t[OT], t[OO]];
        Self {
            alice: flip(self.alice),
            bob: flip(self.bob),
            labels: self.labels.clone(),
        }
    }

    /// Applies `x → scale·x + shift` to one player's table.
    pub fn affine_transform(&self, player: Player, scale: f64, shift: f64) -> Result<Self> {
        let mut out = self.clone();
        let table = match player {
            Player::Alice => &mut out.alice,
            Player::Bob => &mut out.bob,
        };
        for x in table.iter_mut() {
            *x = scale * *x + shift;
        }
        if table.iter().any(|x| !x.is_finite()) {
            return Err(Error::Parameter(
                "transformed payoffs must be finite".into(),
            ));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bos(a: f64, b: f64, c: f64) -> GamePayoffs {
        GamePayoffs::battle_of_sexes(BoSParameters::new(a, b, c).unwrap())
    }

    #[test]
    fn battle_of_sexes_tables() {
        let g = bos(5.0, 3.0, 1.0);
        assert_eq!(g.alice(), [5.0, 1.0, 1.0, 3.0]);
        assert_eq!(g.bob(), [3.0, 1.0, 1.0, 5.0]);
        let g = bos(3.0, 2.0, 1.0);
        assert_eq!(g.alice(), [3.0, 1.0, 1.0, 2.0]);
        assert_eq!(g.bob(), [2.0, 1.0, 1.0, 3.0]);
        assert_eq!(
            GamePayoffs::battle_of_sexes(BoSParameters::default()),
            bos(5.0, 3.0, 1.0)
        );
    }

    #[test]
    fn parameter_ordering_is_enforced() {
        assert!(matches!(
            BoSParameters::new(1.0, 2.0, 3.0),
            Err(Error::Parameter(_))
        ));
        assert!(BoSParameters::new(3.0, 3.0, 1.0).is_err());
        assert!(BoSParameters::new(3.0, 1.0, 1.0).is_err());
        assert!(BoSParameters::new(f64::INFINITY, 1.0, 0.0).is_err());
        assert!(GamePayoffs::new([f64::NAN, 0.0, 0.0, 0.0], [0.0; 4]).is_err());
    }

    #[test]
    fn payoff_operators() {
        let g = bos(5.0, 3.0, 1.0);
        assert_eq!(
            g.payoff_operator(Player::Alice).diag(),
            [5.0, 1.0, 1.0, 3.0]
        );
        assert_eq!(g.payoff_operator(Player::Bob).diag(), [3.0, 1.0, 1.0, 5.0]);
        let z = GamePayoffs::zero();
        assert_eq!(z.payoff_operator(Player::Alice).diag(), [0.0; 4]);
        assert_eq!(z.payoff_operator(Player::Bob).diag(), [0.0; 4]);
    }

    #[test]
    fn swap_examples() {
        // Battle of the Sexes maps onto itself once the strategy names are
        // exchanged as well as the seats.
        let g = bos(5.0, 3.0, 1.0);
        let s = g.swap_players();
        assert_eq!(s.alice(), [3.0, 1.0, 1.0, 5.0]);
        assert_eq!(s.bob(), [5.0, 1.0, 1.0, 3.0]);
        assert_eq!(s.relabel_strategies().alice(), g.alice());
        assert_eq!(s.relabel_strategies().bob(), g.bob());

        let g = GamePayoffs::new([1.0, 2.0, 3.0, 4.0], [5.0, 6.0, 7.0, 8.0]).unwrap();
        let s = g.swap_players();
        assert_eq!(s.alice(), [5.0, 7.0, 6.0, 8.0]);
        assert_eq!(s.bob(), [1.0, 3.0, 2.0, 4.0]);
        assert_eq!(s.swap_players(), g);
    }

    #[test]
    fn labels_follow_the_swap() {
        let g = GamePayoffs::zero().with_labels("Ann", "Ben");
        assert_eq!(
            g.swap_players().labels(),
            &["Ben".to_string(), "Ann".to_string()]
        );
    }

    proptest! {
        #[test]
        fn swap_is_an_involution(
            a in proptest::array::uniform4(-1e6f64..1e6),
            b in proptest::array::uniform4(-1e6f64..1e6),
        ) {
            let g = GamePayoffs::new(a, b).unwrap();
            prop_assert_eq!(g.swap_players().swap_players(), g.clone());
            prop_assert_eq!(g.payoff_operator(Player::Alice).diag(), a);
            prop_assert_eq!(g.payoff_operator(Player::Bob).diag(), b);
        }

        #[test]
        fn battle_of_sexes_is_symmetric_up_to_relabeling(
            gamma in -100.0f64..100.0, d1 in 0.01f64..50.0, d2 in 0.01f64..50.0,
        ) {
            let beta = gamma + d1;
            let alpha = beta + d2;
            prop_assume!(alpha > beta && beta > gamma);
            let g = bos(alpha, beta, gamma);
            let s = g.swap_players().relabel_strategies();
            prop_assert_eq!(s.alice(), g.alice());
            prop_assert_eq!(s.bob(), g.bob());
        }
    }
}
