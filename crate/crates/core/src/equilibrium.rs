//! Nash equilibria of the tactic game and the coordination-dilemma verdict.
//!
//! Both payoffs are bilinear in `(p, q)`, so each player's payoff is linear
//! in their own probability with a slope that is linear in the opponent's.
//! The equilibrium set is the intersection of the two best-response graphs,
//! and each graph is a union of at most three axis-aligned pieces of the
//! unit square: own probability 1 where the slope is positive, 0 where it is
//! negative, and the full range on the line where it vanishes. Intersecting
//! the pieces pairwise yields every isolated equilibrium and every continuum
//! exactly, without any grid search.
//!
//! [`verify_equilibrium_grid`] is the brute-force counterpart: it evaluates
//! payoffs through the density-matrix route and checks every unilateral grid
//! deviation.

use std::fmt;

use serde::Serialize;

use crate::engine::{
    bilinear_coefficients, expected_payoffs, final_state, grid_values, PayoffPair, TacticsProfile,
};
use crate::game::{GamePayoffs, Player};
use crate::qstate::{frobenius_distance, DensityMatrix, OO, OT, TO, TT};
use crate::{Error, Result};

/// Slopes below this magnitude count as indifference.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Equilibria closer than this in `(p, q)` (L∞) are merged.
pub const DEDUP_TOL: f64 = 1e-6;
/// Grid used by [`classify_dilemma`] to check that its input is verified.
pub const CONTRACT_RESOLUTION: usize = 101;

/// Whose payoff is flat along a continuum of equilibria.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Indifference {
    Alice,
    Bob,
    Both,
}

impl Indifference {
    fn from_flags(alice: bool, bob: bool) -> Option<Self> {
        match (alice, bob) {
            (true, true) => Some(Self::Both),
            (true, false) => Some(Self::Alice),
            (false, true) => Some(Self::Bob),
            (false, false) => None,
        }
    }
}

/// An axis-aligned segment (or the whole square) of equilibria.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Continuum {
    pub p: (f64, f64),
    pub q: (f64, f64),
    /// Player(s) whose slope vanishes along the set.
    pub indifferent: Indifference,
}

impl Continuum {
    /// L∞ distance from `(p, q)` to the set.
    pub fn distance(&self, p: f64, q: f64) -> f64 {
        let gap = |x: f64, (lo, hi): (f64, f64)| (lo - x).max(x - hi).max(0.0);
        gap(p, self.p).max(gap(q, self.q))
    }

    /// Endpoints and midpoint of the set, enough to check a segment whose
    /// payoffs are bilinear.
    pub fn sample_points(&self) -> [(f64, f64); 3] {
        [
            (self.p.0, self.q.0),
            (0.5 * (self.p.0 + self.p.1), 0.5 * (self.q.0 + self.q.1)),
            (self.p.1, self.q.1),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum EquilibriumKind {
    /// Both players use a pure tactic.
    Corner,
    /// At least one player mixes; isolated point.
    Interior,
    /// A continuum of equilibria; the point fields hold its lower corner.
    EdgeDegenerate(Continuum),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EquilibriumPoint {
    pub p_star: f64,
    pub q_star: f64,
    pub payoffs: PayoffPair,
    pub kind: EquilibriumKind,
}

impl EquilibriumPoint {
    pub fn continuum(&self) -> Option<&Continuum> {
        match &self.kind {
            EquilibriumKind::EdgeDegenerate(c) => Some(c),
            _ => None,
        }
    }

    /// L∞ distance from `(p, q)` to this point or continuum.
    pub fn distance(&self, p: f64, q: f64) -> f64 {
        match self.continuum() {
            Some(c) => c.distance(p, q),
            None => (self.p_star - p).abs().max((self.q_star - q).abs()),
        }
    }

    fn check_points(&self) -> Vec<(f64, f64)> {
        match self.continuum() {
            Some(c) => c.sample_points().to_vec(),
            None => vec![(self.p_star, self.q_star)],
        }
    }
}

impl fmt::Display for EquilibriumPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            EquilibriumKind::EdgeDegenerate(c) => write!(
                f,
                "continuum p in [{}, {}], q in [{}, {}] ({:?} indifferent)",
                c.p.0, c.p.1, c.q.0, c.q.1, c.indifferent
            ),
            kind => write!(
                f,
                "(p*, q*) = ({}, {}) payoffs ({}, {}) {:?}",
                self.p_star, self.q_star, self.payoffs.alice, self.payoffs.bob, kind
            ),
        }
    }
}

/// The classical payoff of independent mixed strategies, read off the table.
pub fn classical_mixed_payoff(game: &GamePayoffs, p: f64, q: f64) -> Result<PayoffPair> {
    for (name, x) in [("p", p), ("q", q)] {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::Parameter(format!(
                "{name} = {x} is not a probability"
            )));
        }
    }
    let weights = [p * q, p * (1.0 - q), (1.0 - p) * q, (1.0 - p) * (1.0 - q)];
    let dot = |t: [f64; 4]| weights.iter().zip(t).map(|(w, x)| w * x).sum::<f64>();
    Ok(PayoffPair {
        alice: dot(game.alice()),
        bob: dot(game.bob()),
    })
}

/// `k0 + k1·y`: one player's payoff slope in their own probability as a
/// function of the opponent's probability `y`.
#[derive(Debug, Clone, Copy)]
struct Slope {
    k0: f64,
    k1: f64,
}

impl Slope {
    fn at(&self, y: f64) -> f64 {
        self.k0 + self.k1 * y
    }
}

/// Closed interval `[lo, hi]` in both coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Region {
    p: (f64, f64),
    q: (f64, f64),
    alice_flat: bool,
    bob_flat: bool,
}

impl Region {
    fn intersect(&self, other: &Region) -> Option<Region> {
        let p = (self.p.0.max(other.p.0), self.p.1.min(other.p.1));
        let q = (self.q.0.max(other.q.0), self.q.1.min(other.q.1));
        (p.0 <= p.1 && q.0 <= q.1).then_some(Region {
            p,
            q,
            alice_flat: self.alice_flat || other.alice_flat,
            bob_flat: self.bob_flat || other.bob_flat,
        })
    }

    fn is_point(&self) -> bool {
        self.p.0 == self.p.1 && self.q.0 == self.q.1
    }
}

type Piece = ((f64, f64), (f64, f64), bool);

/// Pieces of one player's best-response graph as `(own, opponent, flat)`
/// ranges.
fn best_response_pieces(slope: Slope, tol: f64) -> Vec<Piece> {
    let s0 = slope.at(0.0);
    let s1 = slope.at(1.0);
    let z0 = s0.abs() < tol;
    let z1 = s1.abs() < tol;
    if z0 && z1 {
        return vec![((0.0, 1.0), (0.0, 1.0), true)];
    }
    let mut pieces = Vec::with_capacity(3);
    let root = if z0 {
        Some(0.0)
    } else if z1 {
        Some(1.0)
    } else if (s0 < 0.0) != (s1 < 0.0) {
        Some(s0 / (s0 - s1))
    } else {
        None
    };
    match root {
        Some(r) if r > 0.0 && r < 1.0 => {
            let (pos, neg) = if s0 > 0.0 {
                ((0.0, r), (r, 1.0))
            } else {
                ((r, 1.0), (0.0, r))
            };
            pieces.push(((1.0, 1.0), pos, false));
            pieces.push(((0.0, 0.0), neg, false));
        }
        _ => {
            // No sign change inside the open interval.
            let sign = if z0 { s1 } else { s0 };
            let own = if sign > 0.0 { 1.0 } else { 0.0 };
            pieces.push(((own, own), (0.0, 1.0), false));
        }
    }
    if let Some(r) = root {
        pieces.push(((0.0, 1.0), (r, r), true));
    }
    pieces
}

/// Equilibria of the bilinear game with the given slopes. `payoffs` maps a
/// profile to the payoff pair reported with each point.
fn bilinear_equilibria(
    alice: Slope,
    bob: Slope,
    tol: f64,
    payoffs: impl Fn(f64, f64) -> Result<PayoffPair>,
) -> Result<Vec<EquilibriumPoint>> {
    let alice_regions = best_response_pieces(alice, tol)
        .into_iter()
        .map(|(own, opp, flat)| Region {
            p: own,
            q: opp,
            alice_flat: flat,
            bob_flat: false,
        });
    let bob_regions: Vec<Region> = best_response_pieces(bob, tol)
        .into_iter()
        .map(|(own, opp, flat)| Region {
            p: opp,
            q: own,
            alice_flat: false,
            bob_flat: flat,
        })
        .collect();

    let mut points: Vec<Region> = Vec::new();
    let mut continua: Vec<Region> = Vec::new();
    for a in alice_regions {
        for b in &bob_regions {
            if let Some(r) = a.intersect(b) {
                if r.is_point() {
                    points.push(r);
                } else {
                    continua.push(r);
                }
            }
        }
    }

    let contains = |outer: &Region, inner: &Region| {
        outer.p.0 - DEDUP_TOL <= inner.p.0
            && inner.p.1 <= outer.p.1 + DEDUP_TOL
            && outer.q.0 - DEDUP_TOL <= inner.q.0
            && inner.q.1 <= outer.q.1 + DEDUP_TOL
    };
    let mut kept_continua: Vec<Region> = Vec::new();
    for (i, c) in continua.iter().enumerate() {
        let covered = continua
            .iter()
            .enumerate()
            .any(|(j, other)| j != i && contains(other, c) && (!contains(c, other) || j < i));
        if !covered {
            kept_continua.push(*c);
        }
    }
    let mut kept_points: Vec<Region> = Vec::new();
    for pt in points {
        let dup = kept_continua
            .iter()
            .chain(&kept_points)
            .any(|o| contains(o, &pt));
        if !dup {
            kept_points.push(pt);
        }
    }

    let mut out = Vec::with_capacity(kept_points.len() + kept_continua.len());
    for r in kept_points {
        let (p, q) = (r.p.0, r.q.0);
        let corner = (p == 0.0 || p == 1.0) && (q == 0.0 || q == 1.0);
        out.push(EquilibriumPoint {
            p_star: p,
            q_star: q,
            payoffs: payoffs(p, q)?,
            kind: if corner {
                EquilibriumKind::Corner
            } else {
                EquilibriumKind::Interior
            },
        });
    }
    for r in kept_continua {
        let indifferent = Indifference::from_flags(r.alice_flat, r.bob_flat)
            .expect("a continuum needs a flat payoff for some player");
        out.push(EquilibriumPoint {
            p_star: r.p.0,
            q_star: r.q.0,
            payoffs: payoffs(r.p.0, r.q.0)?,
            kind: EquilibriumKind::EdgeDegenerate(Continuum {
                p: r.p,
                q: r.q,
                indifferent,
            }),
        });
    }
    sort_equilibria(&mut out);
    Ok(out)
}

fn sort_equilibria(eqs: &mut [EquilibriumPoint]) {
    eqs.sort_by(|a, b| {
        a.continuum()
            .is_some()
            .cmp(&b.continuum().is_some())
            .then(a.p_star.total_cmp(&b.p_star))
            .then(a.q_star.total_cmp(&b.q_star))
    });
}

/// Equilibria of the classical mixed-strategy game.
///
/// Pure equilibria come from the best-response table and the mixed one from
/// the indifference conditions. When a player is indifferent at a boundary
/// or everywhere, the equilibrium set may contain continua and the general
/// best-response intersection is used instead.
pub fn classical_nash_equilibria(game: &GamePayoffs, tol: f64) -> Result<Vec<EquilibriumPoint>> {
    let a = game.alice();
    let b = game.bob();
    let alice_den = a[OO] - a[TO] - a[OT] + a[TT];
    let bob_den = b[OO] - b[OT] - b[TO] + b[TT];
    let alice = Slope {
        k0: a[OT] - a[TT],
        k1: alice_den,
    };
    let bob = Slope {
        k0: b[TO] - b[TT],
        k1: bob_den,
    };
    let boundary_tie = [alice.at(0.0), alice.at(1.0), bob.at(0.0), bob.at(1.0)]
        .iter()
        .any(|s| s.abs() < tol);
    if boundary_tie {
        return bilinear_equilibria(alice, bob, tol, |p, q| classical_mixed_payoff(game, p, q));
    }

    let mut out = Vec::new();
    for (p, q) in [(0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (1.0, 1.0)] {
        // index = 2·alice + bob with O = 0, so p = 1 (identity) selects O
        let row = |pp: f64| if pp == 1.0 { 0 } else { 2 };
        let col = |qq: f64| if qq == 1.0 { 0 } else { 1 };
        let alice_ok = a[row(p) + col(q)] > a[row(1.0 - p) + col(q)];
        let bob_ok = b[row(p) + col(q)] > b[row(p) + col(1.0 - q)];
        if alice_ok && bob_ok {
            out.push(EquilibriumPoint {
                p_star: p,
                q_star: q,
                payoffs: classical_mixed_payoff(game, p, q)?,
                kind: EquilibriumKind::Corner,
            });
        }
    }
    if alice_den.abs() >= tol && bob_den.abs() >= tol {
        let q = (a[TT] - a[OT]) / alice_den;
        let p = (b[TT] - b[TO]) / bob_den;
        if p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0 {
            out.push(EquilibriumPoint {
                p_star: p,
                q_star: q,
                payoffs: classical_mixed_payoff(game, p, q)?,
                kind: EquilibriumKind::Interior,
            });
        }
    }
    sort_equilibria(&mut out);
    Ok(out)
}

/// Equilibria of the tactic game started from `rho_in`, from the exact
/// bilinear form of the payoffs.
pub fn quantum_nash_equilibria(
    game: &GamePayoffs,
    rho_in: &DensityMatrix,
    tol: f64,
) -> Result<Vec<EquilibriumPoint>> {
    let ca = bilinear_coefficients(game, rho_in, Player::Alice)?;
    let cb = bilinear_coefficients(game, rho_in, Player::Bob)?;
    let (k0, k1) = ca.slope_in_p();
    let alice = Slope { k0, k1 };
    let (k0, k1) = cb.slope_in_q();
    let bob = Slope { k0, k1 };
    bilinear_equilibria(alice, bob, tol, |p, q| {
        expected_payoffs(game, rho_in, TacticsProfile::new(p, q)?)
    })
}

/// True iff no unilateral move to a grid value improves the mover's payoff
/// by more than `tol`.
pub fn verify_equilibrium_grid(
    game: &GamePayoffs,
    rho_in: &DensityMatrix,
    point: (f64, f64),
    resolution: usize,
    tol: f64,
) -> Result<bool> {
    let (p, q) = point;
    let base = expected_payoffs(game, rho_in, TacticsProfile::new(p, q)?)?;
    for x in grid_values(resolution)? {
        let alice_dev = expected_payoffs(game, rho_in, TacticsProfile::new(x, q)?)?;
        if alice_dev.alice > base.alice + tol {
            return Ok(false);
        }
        let bob_dev = expected_payoffs(game, rho_in, TacticsProfile::new(p, x)?)?;
        if bob_dev.bob > base.bob + tol {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DilemmaStatus {
    NoDilemma,
    ClassicalDilemma,
    ResolvedByCoincidence,
    Degenerate,
}

impl fmt::Display for DilemmaStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::NoDilemma => "no-dilemma",
            Self::ClassicalDilemma => "classical-dilemma",
            Self::ResolvedByCoincidence => "resolved-by-coincidence",
            Self::Degenerate => "degenerate",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DilemmaVerdict {
    pub status: DilemmaStatus,
    /// Index pairs into the equilibrium list with equal or mirrored payoffs.
    pub equally_attractive: Vec<(usize, usize)>,
    /// Largest Frobenius distance between final states of the flagged pairs.
    pub coincidence_distance: Option<f64>,
}

impl DilemmaVerdict {
    fn plain(status: DilemmaStatus) -> Self {
        Self {
            status,
            equally_attractive: Vec::new(),
            coincidence_distance: None,
        }
    }
}

/// Classifies a verified equilibrium list.
///
/// - a continuum of equilibria is `Degenerate`;
/// - a single equilibrium, or a single Pareto-maximal one, is `NoDilemma`;
/// - among the Pareto-maximal equilibria, pairs whose payoffs are equal or
///   mirrored are "equally attractive". If their final states all coincide
///   the selection is immaterial (`ResolvedByCoincidence`); otherwise, or
///   when the maximal equilibria disagree without mirroring, the players
///   face a `ClassicalDilemma`.
pub fn classify_dilemma(
    game: &GamePayoffs,
    rho_in: &DensityMatrix,
    eqs: &[EquilibriumPoint],
    tol: f64,
) -> Result<DilemmaVerdict> {
    if eqs.is_empty() {
        return Err(Error::Contract("empty equilibrium list".into()));
    }
    for (i, eq) in eqs.iter().enumerate() {
        for pt in eq.check_points() {
            if !verify_equilibrium_grid(game, rho_in, pt, CONTRACT_RESOLUTION, tol)? {
                return Err(Error::Contract(format!(
                    "entry {i} at ({}, {}) is not an equilibrium",
                    pt.0, pt.1
                )));
            }
        }
    }

    if eqs.iter().any(|e| e.continuum().is_some()) {
        return Ok(DilemmaVerdict::plain(DilemmaStatus::Degenerate));
    }
    if eqs.len() == 1 {
        return Ok(DilemmaVerdict::plain(DilemmaStatus::NoDilemma));
    }

    let dominates = |x: &PayoffPair, y: &PayoffPair| {
        x.alice >= y.alice - tol
            && x.bob >= y.bob - tol
            && (x.alice > y.alice + tol || x.bob > y.bob + tol)
    };
    let maximal: Vec<usize> = (0..eqs.len())
        .filter(|&i| !eqs.iter().any(|o| dominates(&o.payoffs, &eqs[i].payoffs)))
        .collect();
    if maximal.len() == 1 {
        return Ok(DilemmaVerdict::plain(DilemmaStatus::NoDilemma));
    }

    let close = |x: f64, y: f64| (x - y).abs() < tol;
    let mut pairs = Vec::new();
    for (k, &i) in maximal.iter().enumerate() {
        for &j in &maximal[k + 1..] {
            let (x, y) = (eqs[i].payoffs, eqs[j].payoffs);
            let same = close(x.alice, y.alice) && close(x.bob, y.bob);
            let mirrored = close(x.alice, y.bob) && close(x.bob, y.alice);
            if same || mirrored {
                pairs.push((i, j));
            }
        }
    }
    if pairs.is_empty() {
        return Ok(DilemmaVerdict::plain(DilemmaStatus::ClassicalDilemma));
    }

    let final_of = |e: &EquilibriumPoint| -> Result<DensityMatrix> {
        Ok(final_state(
            rho_in,
            TacticsProfile::new(e.p_star, e.q_star)?,
        ))
    };
    let mut distance = 0.0f64;
    for &(i, j) in &pairs {
        distance = distance.max(frobenius_distance(&final_of(&eqs[i])?, &final_of(&eqs[j])?));
    }
    let status = if distance < tol {
        DilemmaStatus::ResolvedByCoincidence
    } else {
        DilemmaStatus::ClassicalDilemma
    };
    Ok(DilemmaVerdict {
        status,
        equally_attractive: pairs,
        coincidence_distance: Some(distance),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquilibriumReport {
    pub game: GamePayoffs,
    pub initial_state: DensityMatrix,
    pub equilibria: Vec<EquilibriumPoint>,
    pub verdict: DilemmaVerdict,
}

/// Equilibria of the tactic game plus their dilemma verdict.
pub fn analyze(game: &GamePayoffs, rho_in: &DensityMatrix, tol: f64) -> Result<EquilibriumReport> {
    let equilibria = quantum_nash_equilibria(game, rho_in, tol)?;
    let verdict = classify_dilemma(game, rho_in, &equilibria, tol)?;
    Ok(EquilibriumReport {
        game: game.clone(),
        initial_state: *rho_in,
        equilibria,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::BoSParameters;
    use crate::qstate::StrategyState;

    fn bos() -> GamePayoffs {
        GamePayoffs::battle_of_sexes(BoSParameters::new(5.0, 3.0, 1.0).unwrap())
    }

    fn entangled() -> DensityMatrix {
        DensityMatrix::from_state(&StrategyState::entangled_bos())
    }

    fn oo() -> DensityMatrix {
        DensityMatrix::from_state(&StrategyState::basis(OO))
    }

    fn profiles(eqs: &[EquilibriumPoint]) -> Vec<(f64, f64)> {
        eqs.iter().map(|e| (e.p_star, e.q_star)).collect()
    }

    fn assert_points(eqs: &[EquilibriumPoint], want: &[(f64, f64, f64, f64)]) {
        assert_eq!(eqs.len(), want.len(), "{eqs:#?}");
        for (e, &(p, q, a, b)) in eqs.iter().zip(want) {
            assert!(
                (e.p_star - p).abs() < 1e-9 && (e.q_star - q).abs() < 1e-9,
                "{e:?}"
            );
            assert!(
                (e.payoffs.alice - a).abs() < 1e-9 && (e.payoffs.bob - b).abs() < 1e-9,
                "{e:?}"
            );
        }
    }

    #[test]
    fn classical_payoff_examples() {
        let g = bos();
        assert_eq!(
            classical_mixed_payoff(&g, 1.0, 1.0).unwrap(),
            PayoffPair {
                alice: 5.0,
                bob: 3.0
            }
        );
        assert_eq!(
            classical_mixed_payoff(&g, 0.0, 0.0).unwrap(),
            PayoffPair {
                alice: 3.0,
                bob: 5.0
            }
        );
        let mixed = classical_mixed_payoff(&g, 2.0 / 3.0, 1.0 / 3.0).unwrap();
        assert!((mixed.alice - 7.0 / 3.0).abs() < 1e-12 && (mixed.bob - 7.0 / 3.0).abs() < 1e-12);
        assert!(matches!(
            classical_mixed_payoff(&g, 1.5, 0.0),
            Err(Error::Parameter(_))
        ));
        assert!(classical_mixed_payoff(&g, 0.5, -0.01).is_err());
    }

    #[test]
    fn classical_bos_equilibria() {
        let eqs = classical_nash_equilibria(&bos(), DEFAULT_TOL).unwrap();
        assert_points(
            &eqs,
            &[
                (0.0, 0.0, 3.0, 5.0),
                (2.0 / 3.0, 1.0 / 3.0, 7.0 / 3.0, 7.0 / 3.0),
                (1.0, 1.0, 5.0, 3.0),
            ],
        );
        assert_eq!(eqs[1].kind, EquilibriumKind::Interior);
        assert_eq!(eqs[0].kind, EquilibriumKind::Corner);
    }

    #[test]
    fn dominance_game_has_a_unique_equilibrium() {
        let g = GamePayoffs::new([3.0, 2.0, 1.0, 0.0], [3.0, 2.0, 1.0, 0.0]).unwrap();
        let eqs = classical_nash_equilibria(&g, DEFAULT_TOL).unwrap();
        assert_points(&eqs, &[(1.0, 1.0, 3.0, 3.0)]);
        let quantum = quantum_nash_equilibria(&g, &oo(), DEFAULT_TOL).unwrap();
        assert_eq!(profiles(&quantum), profiles(&eqs));
        let v = classify_dilemma(&g, &oo(), &quantum, DEFAULT_TOL).unwrap();
        assert_eq!(v.status, DilemmaStatus::NoDilemma);
    }

    #[test]
    fn constant_game_is_degenerate() {
        let g = GamePayoffs::constant(2.0).unwrap();
        for eqs in [
            classical_nash_equilibria(&g, DEFAULT_TOL).unwrap(),
            quantum_nash_equilibria(&g, &entangled(), DEFAULT_TOL).unwrap(),
        ] {
            assert_eq!(eqs.len(), 1);
            let c = eqs[0].continuum().expect("continuum");
            assert_eq!((c.p, c.q), ((0.0, 1.0), (0.0, 1.0)));
            assert_eq!(c.indifferent, Indifference::Both);
        }
        let eqs = quantum_nash_equilibria(&GamePayoffs::zero(), &oo(), DEFAULT_TOL).unwrap();
        let v = classify_dilemma(&GamePayoffs::zero(), &oo(), &eqs, DEFAULT_TOL).unwrap();
        assert_eq!(v.status, DilemmaStatus::Degenerate);
    }

    #[test]
    fn one_sided_indifference_yields_segments() {
        // Alice's payoff is constant; Bob wants q = 1 iff p > 1/2.
        let g = GamePayoffs::new([1.0; 4], [1.0, 0.0, 0.0, 1.0]).unwrap();
        let eqs = quantum_nash_equilibria(&g, &oo(), DEFAULT_TOL).unwrap();
        let segments: Vec<_> = eqs.iter().filter_map(|e| e.continuum().copied()).collect();
        assert_eq!(segments.len(), 3, "{eqs:#?}");
        for c in &segments {
            // only on p = 1/2 is Bob indifferent too
            let want = if c.p == (0.5, 0.5) {
                Indifference::Both
            } else {
                Indifference::Alice
            };
            assert_eq!(c.indifferent, want, "{c:?}");
        }
        for (p, q) in [(0.0, 0.0), (0.25, 0.0), (0.5, 0.3), (0.75, 1.0), (1.0, 1.0)] {
            assert!(eqs.iter().any(|e| e.distance(p, q) < 1e-12), "({p}, {q})");
            assert!(verify_equilibrium_grid(&g, &oo(), (p, q), 101, 1e-9).unwrap());
        }
        assert!(!verify_equilibrium_grid(&g, &oo(), (0.25, 1.0), 101, 1e-9).unwrap());
        let classical = classical_nash_equilibria(&g, DEFAULT_TOL).unwrap();
        assert_eq!(profiles(&classical), profiles(&eqs));
    }

    #[test]
    fn entangled_bos_equilibria() {
        let eqs = quantum_nash_equilibria(&bos(), &entangled(), DEFAULT_TOL).unwrap();
        assert_points(
            &eqs,
            &[
                (0.0, 0.0, 4.0, 4.0),
                (0.5, 0.5, 2.5, 2.5),
                (1.0, 1.0, 4.0, 4.0),
            ],
        );
    }

    #[test]
    fn factorizable_bos_matches_classical() {
        let quantum = quantum_nash_equilibria(&bos(), &oo(), DEFAULT_TOL).unwrap();
        let classical = classical_nash_equilibria(&bos(), DEFAULT_TOL).unwrap();
        assert_eq!(quantum.len(), classical.len());
        for (a, b) in quantum.iter().zip(&classical) {
            assert!(a.distance(b.p_star, b.q_star) < 1e-12);
            assert_eq!(a.kind, b.kind);
        }
    }

    #[test]
    fn grid_verifier_examples() {
        let g = bos();
        let ent = entangled();
        assert!(verify_equilibrium_grid(&g, &ent, (1.0, 1.0), 1001, 1e-9).unwrap());
        assert!(!verify_equilibrium_grid(&g, &ent, (1.0, 0.0), 1001, 1e-9).unwrap());
        // Alice gains 4 − 1 = 3 by moving to p = 0
        let here = expected_payoffs(&g, &ent, TacticsProfile::new(1.0, 0.0).unwrap()).unwrap();
        let there = expected_payoffs(&g, &ent, TacticsProfile::new(0.0, 0.0).unwrap()).unwrap();
        assert!((there.alice - here.alice - 3.0).abs() < 1e-12);
        let flat = GamePayoffs::constant(-1.0).unwrap();
        assert!(verify_equilibrium_grid(&flat, &ent, (0.3, 0.9), 11, 1e-9).unwrap());
    }

    #[test]
    fn verdicts() {
        let g = bos();
        let eqs = quantum_nash_equilibria(&g, &oo(), DEFAULT_TOL).unwrap();
        let v = classify_dilemma(&g, &oo(), &eqs, DEFAULT_TOL).unwrap();
        assert_eq!(v.status, DilemmaStatus::ClassicalDilemma);
        assert_eq!(v.equally_attractive, vec![(0, 2)]);
        assert!((v.coincidence_distance.unwrap() - 2f64.sqrt()).abs() < 1e-12);

        let eqs = quantum_nash_equilibria(&g, &entangled(), DEFAULT_TOL).unwrap();
        let v = classify_dilemma(&g, &entangled(), &eqs, DEFAULT_TOL).unwrap();
        assert_eq!(v.status, DilemmaStatus::ResolvedByCoincidence);
        assert_eq!(v.equally_attractive, vec![(0, 2)]);
        assert_eq!(v.coincidence_distance, Some(0.0));
    }

    #[test]
    fn classify_rejects_unverified_input() {
        let bogus = EquilibriumPoint {
            p_star: 1.0,
            q_star: 0.0,
            payoffs: PayoffPair {
                alice: 1.0,
                bob: 1.0,
            },
            kind: EquilibriumKind::Corner,
        };
        assert!(matches!(
            classify_dilemma(&bos(), &entangled(), &[bogus], DEFAULT_TOL),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            classify_dilemma(&bos(), &entangled(), &[], DEFAULT_TOL),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn unmirrored_disagreement_is_still_a_dilemma() {
        // coordination game with equilibria paying (5, 3) and (3, 6)
        let g = GamePayoffs::new([5.0, 0.0, 0.0, 3.0], [3.0, 0.0, 0.0, 6.0]).unwrap();
        let eqs = quantum_nash_equilibria(&g, &oo(), DEFAULT_TOL).unwrap();
        assert_eq!(eqs.len(), 3);
        let v = classify_dilemma(&g, &oo(), &eqs, DEFAULT_TOL).unwrap();
        assert_eq!(v.status, DilemmaStatus::ClassicalDilemma);
        assert!(v.equally_attractive.is_empty());
        assert_eq!(v.coincidence_distance, None);
    }

    #[test]
    fn pareto_dominant_equilibrium_means_no_dilemma() {
        // stag hunt: (4, 4) dominates (2, 2)
        let g = GamePayoffs::new([4.0, 0.0, 3.0, 2.0], [4.0, 3.0, 0.0, 2.0]).unwrap();
        let report = analyze(&g, &oo(), DEFAULT_TOL).unwrap();
        assert_eq!(report.equilibria.len(), 3);
        assert_eq!(report.verdict.status, DilemmaStatus::NoDilemma);
    }
}
