//! Run configuration files.
//!
//! One `key = values` entry per line, `#` starts a comment, values are
//! separated by whitespace. Complex amplitudes are written `re`, `re+imi`,
//! `re-imi` or `imi`.
//!
//! ```text
//! game.bos = 5 3 1              # or game.alice / game.bob with 4 payoffs each
//! game.labels = Alice Bob
//! state = entangled-bos         # or state.raw (4 amplitudes),
//!                               # or state.alice + state.bob (2 each)
//! tactics = 0.5 0.5
//! sweep.resolution = 101
//! tolerance = 1e-9
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use num_complex::Complex64;

use crate::equilibrium::DEFAULT_TOL;
use crate::game::{BoSParameters, GamePayoffs};
use crate::qstate::{tensor_product, DensityMatrix, SingleStrategy, StrategyState};
use crate::{Error, Result};

pub const DEFAULT_SWEEP_RESOLUTION: usize = 101;

/// Squared-norm deviation that is renormalized without a warning.
const SILENT_RENORM_TOL: f64 = 1e-9;
/// Below this norm a state cannot be renormalized.
const MIN_NORM: f64 = 1e-6;
/// Squared-norm deviation accepted as is by the core constructors.
const EXACT_NORM_TOL: f64 = 1e-12;

const KEYS: &[&str] = &[
    "game.bos",
    "game.alice",
    "game.bob",
    "game.labels",
    "state",
    "state.raw",
    "state.alice",
    "state.bob",
    "tactics",
    "sweep.resolution",
    "tolerance",
];

#[derive(Debug, Clone, PartialEq)]
pub enum GameSpec {
    Bos(BoSParameters),
    Tables { alice: [f64; 4], bob: [f64; 4] },
}

#[derive(Debug, Clone, PartialEq)]
pub enum StateSpec {
    EntangledBos,
    Factorizable {
        alice: [Complex64; 2],
        bob: [Complex64; 2],
    },
    Raw([Complex64; 4]),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub game: GameSpec,
    pub labels: Option<[String; 2]>,
    pub state: StateSpec,
    pub tactics: Option<(f64, f64)>,
    pub sweep_resolution: usize,
    pub tolerance: f64,
}

impl RunConfig {
    pub fn new(game: GameSpec, state: StateSpec) -> Self {
        Self {
            game,
            labels: None,
            state,
            tactics: None,
            sweep_resolution: DEFAULT_SWEEP_RESOLUTION,
            tolerance: DEFAULT_TOL,
        }
    }

    pub fn game_payoffs(&self) -> Result<GamePayoffs> {
        let game = match &self.game {
            GameSpec::Bos(params) => GamePayoffs::battle_of_sexes(*params),
            GameSpec::Tables { alice, bob } => GamePayoffs::new(*alice, *bob)?,
        };
        Ok(match &self.labels {
            Some([a, b]) => game.with_labels(a.clone(), b.clone()),
            None => game,
        })
    }

    pub fn initial_state(&self) -> Result<StrategyState> {
        match &self.state {
            StateSpec::EntangledBos => Ok(StrategyState::entangled_bos()),
            StateSpec::Factorizable { alice, bob } => Ok(tensor_product(
                &SingleStrategy::new(alice[0], alice[1])?,
                &SingleStrategy::new(bob[0], bob[1])?,
            )),
            StateSpec::Raw(amps) => StrategyState::new(*amps),
        }
    }

    pub fn initial_density(&self) -> Result<DensityMatrix> {
        Ok(DensityMatrix::from_state(&self.initial_state()?))
    }

    pub fn state_descriptor(&self) -> String {
        match &self.state {
            StateSpec::EntangledBos => "entangled-bos".to_string(),
            StateSpec::Factorizable { alice, bob } => format!(
                "factorizable alice=({}) bob=({})",
                render_amplitudes(alice),
                render_amplitudes(bob)
            ),
            StateSpec::Raw(amps) => format!("raw ({})", render_amplitudes(amps)),
        }
    }
}

fn render_complex(c: Complex64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else if c.re == 0.0 {
        format!("{}i", c.im)
    } else {
        format!("{}{:+}i", c.re, c.im)
    }
}

fn render_amplitudes(amps: &[Complex64]) -> String {
    amps.iter()
        .map(|&c| render_complex(c))
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_reals(xs: &[f64]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Writes a configuration that [`parse_config`] reads back unchanged.
pub fn render_config(config: &RunConfig) -> String {
    let mut out = String::new();
    match &config.game {
        GameSpec::Bos(p) => {
            let _ = writeln!(
                out,
                "game.bos = {}",
                render_reals(&[p.alpha, p.beta, p.gamma])
            );
        }
        GameSpec::Tables { alice, bob } => {
            let _ = writeln!(out, "game.alice = {}", render_reals(alice));
            let _ = writeln!(out, "game.bob = {}", render_reals(bob));
        }
    }
    if let Some([a, b]) = &config.labels {
        let _ = writeln!(out, "game.labels = {a} {b}");
    }
    match &config.state {
        StateSpec::EntangledBos => out.push_str("state = entangled-bos\n"),
        StateSpec::Factorizable { alice, bob } => {
            let _ = writeln!(out, "state.alice = {}", render_amplitudes(alice));
            let _ = writeln!(out, "state.bob = {}", render_amplitudes(bob));
        }
        StateSpec::Raw(amps) => {
            let _ = writeln!(out, "state.raw = {}", render_amplitudes(amps));
        }
    }
    if let Some((p, q)) = config.tactics {
        let _ = writeln!(out, "tactics = {p} {q}");
    }
    let _ = writeln!(out, "sweep.resolution = {}", config.sweep_resolution);
    let _ = writeln!(out, "tolerance = {}", config.tolerance);
    out
}

struct Entry<'a> {
    line: usize,
    key: &'a str,
    values: Vec<&'a str>,
}

impl Entry<'_> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            key: self.key.to_string(),
            message: message.into(),
        }
    }

    fn arity(&self, n: usize) -> Result<()> {
        if self.values.len() != n {
            return Err(self.err(format!("expected {n} values, found {}", self.values.len())));
        }
        Ok(())
    }

    fn reals<const N: usize>(&self) -> Result<[f64; N]> {
        self.arity(N)?;
        let mut out = [0.0; N];
        for (slot, tok) in out.iter_mut().zip(&self.values) {
            *slot = parse_real(tok).ok_or_else(|| self.err(format!("malformed number `{tok}`")))?;
        }
        Ok(out)
    }

    fn complexes<const N: usize>(&self) -> Result<[Complex64; N]> {
        self.arity(N)?;
        let mut out = [Complex64::new(0.0, 0.0); N];
        for (slot, tok) in out.iter_mut().zip(&self.values) {
            *slot = parse_complex(tok)
                .ok_or_else(|| self.err(format!("malformed complex number `{tok}`")))?;
        }
        Ok(out)
    }
}

fn parse_real(tok: &str) -> Option<f64> {
    tok.parse::<f64>().ok().filter(|x| x.is_finite())
}

fn parse_complex(tok: &str) -> Option<Complex64> {
    let Some(body) = tok.strip_suffix('i') else {
        return parse_real(tok).map(|re| Complex64::new(re, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imag = |s: &str| match s {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        s => parse_real(s),
    };
    match split {
        Some(k) => Some(Complex64::new(parse_real(&body[..k])?, imag(&body[k..])?)),
        None => Some(Complex64::new(0.0, imag(body)?)),
    }
}

/// Brings amplitudes to unit norm, recording a warning when the input was
/// off by more than rounding in a config file.
fn normalize<const N: usize>(
    entry: &Entry,
    amps: [Complex64; N],
    warnings: &mut Vec<String>,
) -> Result<[Complex64; N]> {
    let norm_sqr: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
    let norm = norm_sqr.sqrt();
    if norm < MIN_NORM {
        return Err(entry.err(format!("state cannot be normalized (norm {norm:e})")));
    }
    let deviation = (norm_sqr - 1.0).abs();
    if deviation < EXACT_NORM_TOL {
        return Ok(amps);
    }
    if deviation > SILENT_RENORM_TOL {
        warnings.push(format!(
            "line {}: `{}` has squared norm {norm_sqr}; renormalized",
            entry.line, entry.key
        ));
    }
    Ok(amps.map(|a| a / norm))
}

pub fn parse_config(text: &str) -> Result<RunConfig> {
    parse_config_with_warnings(text).map(|(config, _)| config)
}

/// Parses a configuration and returns it with any renormalization warnings.
pub fn parse_config_with_warnings(text: &str) -> Result<(RunConfig, Vec<String>)> {
    let mut entries: HashMap<&str, Entry> = HashMap::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, value)) = content.split_once('=') else {
            return Err(Error::Parse {
                line,
                key: content.to_string(),
                message: "expected `key = values`".into(),
            });
        };
        let key = key.trim();
        let entry = Entry {
            line,
            key,
            values: value.split_whitespace().collect(),
        };
        if !KEYS.contains(&key) {
            return Err(entry.err("unknown key"));
        }
        if let Some(prev) = entries.get(key) {
            return Err(entry.err(format!("duplicate key (first set on line {})", prev.line)));
        }
        entries.insert(key, entry);
    }
    let missing = |key: &str, what: &str| Error::Parse {
        line: last_line,
        key: key.to_string(),
        message: format!("missing required {what}"),
    };

    let mut warnings = Vec::new();

    let game = match (
        entries.get("game.bos"),
        entries.get("game.alice"),
        entries.get("game.bob"),
    ) {
        (Some(e), None, None) => {
            let [a, b, c] = e.reals::<3>()?;
            GameSpec::Bos(BoSParameters::new(a, b, c).map_err(|err| e.err(err.to_string()))?)
        }
        (None, Some(a), Some(b)) => GameSpec::Tables {
            alice: a.reals::<4>()?,
            bob: b.reals::<4>()?,
        },
        (Some(e), _, _) => return Err(e.err("conflicts with game.alice / game.bob")),
        (None, Some(e), None) => return Err(e.err("game.bob is missing")),
        (None, None, Some(e)) => return Err(e.err("game.alice is missing")),
        (None, None, None) => return Err(missing("game", "game section")),
    };

    let labels = match entries.get("game.labels") {
        Some(e) => {
            e.arity(2)?;
            Some([e.values[0].to_string(), e.values[1].to_string()])
        }
        None => None,
    };

    let state = match (
        entries.get("state"),
        entries.get("state.raw"),
        entries.get("state.alice"),
        entries.get("state.bob"),
    ) {
        (Some(e), None, None, None) => {
            e.arity(1)?;
            match e.values[0] {
                "entangled-bos" => StateSpec::EntangledBos,
                other => return Err(e.err(format!("unknown named state `{other}`"))),
            }
        }
        (None, Some(e), None, None) => {
            StateSpec::Raw(normalize(e, e.complexes::<4>()?, &mut warnings)?)
        }
        (None, None, Some(a), Some(b)) => StateSpec::Factorizable {
            alice: normalize(a, a.complexes::<2>()?, &mut warnings)?,
            bob: normalize(b, b.complexes::<2>()?, &mut warnings)?,
        },
        (None, None, Some(e), None) => return Err(e.err("state.bob is missing")),
        (None, None, None, Some(e)) => return Err(e.err("state.alice is missing")),
        (None, None, None, None) => return Err(missing("state", "state section")),
        _ => {
            let e = ["state", "state.raw", "state.alice", "state.bob"]
                .iter()
                .filter_map(|k| entries.get(k))
                .max_by_key(|e| e.line)
                .expect("at least two state keys");
            return Err(e.err("more than one state form given"));
        }
    };

    let tactics = match entries.get("tactics") {
        Some(e) => {
            let [p, q] = e.reals::<2>()?;
            if !(0.0..=1.0).contains(&p) || !(0.0..=1.0).contains(&q) {
                return Err(e.err("probabilities must lie in [0, 1]"));
            }
            Some((p, q))
        }
        None => None,
    };

    let sweep_resolution = match entries.get("sweep.resolution") {
        Some(e) => {
            e.arity(1)?;
            let n: usize = e.values[0]
                .parse()
                .map_err(|_| e.err(format!("malformed integer `{}`", e.values[0])))?;
            if n < 2 {
                return Err(e.err("resolution must be at least 2"));
            }
            n
        }
        None => DEFAULT_SWEEP_RESOLUTION,
    };

    let tolerance = match entries.get("tolerance") {
        Some(e) => {
            let [t] = e.reals::<1>()?;
            if t <= 0.0 {
                return Err(e.err("tolerance must be positive"));
            }
            t
        }
        None => DEFAULT_TOL,
    };

    let config = RunConfig {
        game,
        labels,
        state,
        tactics,
        sweep_resolution,
        tolerance,
    };
    // surface constructor failures with the offending key
    config.initial_state().map_err(|err| Error::Parse {
        line: last_line,
        key: "state".into(),
        message: err.to_string(),
    })?;
    Ok((config, warnings))
}
