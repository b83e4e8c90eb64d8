use std::fmt::Write as _;

use super::config::RunConfig;
use super::{format_sig, CSV_DIGITS, REPORT_DIGITS};
use crate::engine::{expected_payoffs, final_state, payoff_surface, PayoffPair, TacticsProfile};
use crate::equilibrium::{
    analyze, classical_nash_equilibria, EquilibriumKind, EquilibriumPoint, EquilibriumReport,
    DEFAULT_TOL,
};
use crate::game::{BoSParameters, GamePayoffs};
use crate::qstate::{frobenius_distance, DensityMatrix, StrategyState, OO};
use crate::{Error, Result};

/// Process exit status for a failed command.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NumericIntegrity { .. } => 3,
        _ => 2,
    }
}

fn num(x: f64) -> String {
    format_sig(x, REPORT_DIGITS)
}

fn pair(p: PayoffPair) -> String {
    format!("alice={} bob={}", num(p.alice), num(p.bob))
}

pub fn cmd_payoff(config: &RunConfig, p: f64, q: f64) -> Result<String> {
    let game = config.game_payoffs()?;
    let rho = config.initial_density()?;
    let tactics = TacticsProfile::new(p, q)?;
    let payoffs = expected_payoffs(&game, &rho, tactics)?;

    let mut out = String::new();
    let _ = writeln!(out, "state: {}", config.state_descriptor());
    let _ = writeln!(
        out,
        "tactics: p={} q={}",
        num(tactics.p()),
        num(tactics.q())
    );
    let branches: Vec<String> = tactics
        .branches()
        .iter()
        .map(|(a, b, w)| format!("{a}{b}={}", num(*w)))
        .collect();
    let _ = writeln!(out, "branches: {}", branches.join(" "));
    let _ = writeln!(out, "{}", pair(payoffs));
    Ok(out)
}

/// Payoff grid as CSV, `p` outer and `q` inner.
pub fn cmd_sweep(config: &RunConfig) -> Result<String> {
    let game = config.game_payoffs()?;
    let rho = config.initial_density()?;
    let cells = payoff_surface(&game, &rho, config.sweep_resolution)?;
    let mut out = String::from("p,q,payoff_a,payoff_b\n");
    for c in cells {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            format_sig(c.p, CSV_DIGITS),
            format_sig(c.q, CSV_DIGITS),
            format_sig(c.payoffs.alice, CSV_DIGITS),
            format_sig(c.payoffs.bob, CSV_DIGITS)
        );
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct EquilibriaOutput {
    pub text: String,
    pub report: EquilibriumReport,
}

fn describe(i: usize, e: &EquilibriumPoint) -> String {
    match &e.kind {
        EquilibriumKind::EdgeDegenerate(c) => format!(
            "[{i}] continuum p in [{}, {}] q in [{}, {}] indifferent={:?}",
            num(c.p.0),
            num(c.p.1),
            num(c.q.0),
            num(c.q.1),
            c.indifferent
        ),
        kind => format!(
            "[{i}] p*={} q*={} {} kind={}",
            num(e.p_star),
            num(e.q_star),
            pair(e.payoffs),
            match kind {
                EquilibriumKind::Corner => "corner",
                _ => "interior",
            }
        ),
    }
}

fn report_text(report: &EquilibriumReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "equilibria: {}", report.equilibria.len());
    for (i, e) in report.equilibria.iter().enumerate() {
        let _ = writeln!(out, "  {}", describe(i, e));
    }
    let v = &report.verdict;
    let _ = writeln!(out, "verdict: {}", v.status);
    let pairs: Vec<String> = v
        .equally_attractive
        .iter()
        .map(|(i, j)| format!("({i}, {j})"))
        .collect();
    let _ = writeln!(
        out,
        "equally-attractive: {}",
        if pairs.is_empty() {
            "none".to_string()
        } else {
            pairs.join(" ")
        }
    );
    let _ = writeln!(
        out,
        "coincidence-distance: {}",
        v.coincidence_distance.map_or("n/a".to_string(), num)
    );
    out
}

pub fn cmd_equilibria(config: &RunConfig) -> Result<EquilibriaOutput> {
    let game = config.game_payoffs()?;
    let rho = config.initial_density()?;
    let report = analyze(&game, &rho, config.tolerance)?;
    let text = format!(
        "state: {}\n{}",
        config.state_descriptor(),
        report_text(&report)
    );
    Ok(EquilibriaOutput { text, report })
}

/// Walks the (5, 3, 1) Battle of the Sexes through the classical and the
/// entangled analyses.
pub fn cmd_demo_bos() -> Result<String> {
    let params = BoSParameters::default();
    let game = GamePayoffs::battle_of_sexes(params);
    let classical_rho = DensityMatrix::from_state(&StrategyState::basis(OO));
    let entangled_rho = DensityMatrix::from_state(&StrategyState::entangled_bos());
    let mut out = String::new();

    let _ = writeln!(
        out,
        "Battle of the Sexes with (alpha, beta, gamma) = ({}, {}, {})",
        params.alpha, params.beta, params.gamma
    );
    let a = game.alice();
    let b = game.bob();
    let _ = writeln!(out, "outcome  alice  bob");
    for (k, label) in crate::qstate::BASIS_LABELS.iter().enumerate() {
        let _ = writeln!(out, "{label:>7}  {:>5}  {:>3}", a[k], b[k]);
    }

    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "== Classical play: initial state |OO>, factorizable =="
    );
    let table_eqs = classical_nash_equilibria(&game, DEFAULT_TOL)?;
    let classical = analyze(&game, &classical_rho, DEFAULT_TOL)?;
    out.push_str(&report_text(&classical));
    let same = table_eqs.len() == classical.equilibria.len()
        && table_eqs
            .iter()
            .zip(&classical.equilibria)
            .all(|(x, y)| y.distance(x.p_star, x.q_star) < DEFAULT_TOL);
    let _ = writeln!(
        out,
        "matches the classical table analysis: {}",
        if same { "yes" } else { "no" }
    );
    let pure: Vec<&EquilibriumPoint> = classical
        .equilibria
        .iter()
        .filter(|e| e.kind == EquilibriumKind::Corner)
        .collect();
    if let Some(mixed) = classical
        .equilibria
        .iter()
        .find(|e| e.kind == EquilibriumKind::Interior)
    {
        let below = pure
            .iter()
            .all(|e| mixed.payoffs.alice < e.payoffs.alice && mixed.payoffs.bob < e.payoffs.bob);
        let _ = writeln!(
            out,
            "mixed equilibrium pays {} and is below both pure equilibria for each player: {}",
            pair(mixed.payoffs),
            if below { "yes" } else { "no" }
        );
    }

    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "== Entangled play: initial state (|OO> + |TT>)/sqrt(2) =="
    );
    let entangled = analyze(&game, &entangled_rho, DEFAULT_TOL)?;
    out.push_str(&report_text(&entangled));
    let untouched = final_state(&entangled_rho, TacticsProfile::new(1.0, 1.0)?);
    let both_flip = final_state(&entangled_rho, TacticsProfile::new(0.0, 0.0)?);
    let _ = writeln!(
        out,
        "final state, both flip (0, 0) vs both leave (1, 1): frobenius distance {}",
        num(frobenius_distance(&both_flip, &untouched))
    );
    let _ = writeln!(
        out,
        "distance of either final state from the initial state: {}",
        num(frobenius_distance(&both_flip, &entangled_rho)
            .max(frobenius_distance(&untouched, &entangled_rho)))
    );
    for (p, q) in [(0.0, 1.0), (1.0, 0.0)] {
        let mismatch = expected_payoffs(&game, &entangled_rho, TacticsProfile::new(p, q)?)?;
        let _ = writeln!(
            out,
            "mismatch risk at (p, q) = ({p}, {q}): {}",
            pair(mismatch)
        );
    }

    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "summary: classical {}, entangled {}",
        classical.verdict.status, entangled.verdict.status
    );
    Ok(out)
}
