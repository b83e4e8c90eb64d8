//! Command-line front end: configuration files and the report commands.

mod commands;
mod config;

pub use commands::{
    cmd_demo_bos, cmd_equilibria, cmd_payoff, cmd_sweep, exit_code, EquilibriaOutput,
};
pub use config::{
    parse_config, parse_config_with_warnings, render_config, GameSpec, RunConfig, StateSpec,
    DEFAULT_SWEEP_RESOLUTION,
};

/// Digits used for text reports.
pub const REPORT_DIGITS: usize = 12;
/// Digits used in CSV output; enough to read every `f64` back exactly.
pub const CSV_DIGITS: usize = 17;

/// Formats `value` with `digits` significant digits, in positional notation
/// for moderate magnitudes and scientific notation otherwise.
pub fn format_sig(value: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if !value.is_finite() {
        return value.to_string();
    }
    let value = if value == 0.0 { 0.0 } else { value };
    let sci = format!("{:.*e}", digits - 1, value);
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .expect("scientific formatting always carries an exponent");
    if (-5..digits as i32).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        format!("{value:.decimals$}")
    } else {
        sci
    }
}
