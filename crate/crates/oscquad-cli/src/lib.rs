//! Library half of the `oscquad` command-line tool: the function-spec
//! mini-language, output encoding, deterministic RNG, and the verification
//! suites shared between `oscquad verify` and the acceptance tests.

pub mod output;
pub mod rng;
pub mod spec;
pub mod verify;

/// Default oracle tolerance, overridable through `OSCQUAD_TOL`.
pub fn oracle_tolerance() -> f64 {
    std::env::var("OSCQUAD_TOL")
        .ok()
        .and_then(|v| v.parse::<f64>().ok())
        .filter(|t| *t >= 1e-14 && *t < 1.0)
        .unwrap_or(oscquad_core::DEFAULT_TOL)
}
