use thiserror::Error;

/// Errors surfaced by optimizer runs, map handling, and the experiment
/// harness.
///
/// Contract violations (wrong vector lengths, out-of-range iteration
/// indices, empty populations) are programming bugs and panic instead of
/// returning a variant.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid user-supplied configuration (bounds, budgets, parameters).
    #[error("configuration error: {0}")]
    Config(String),

    /// The objective returned a non-finite value; the run aborts.
    #[error("evaluation error: objective returned {value} at position {position:?}")]
    Evaluation { value: f64, position: Vec<f64> },

    /// Malformed map file, experiment config, or report data.
    #[error("parse error: {0}")]
    Parse(String),

    /// The map generator never produced a connected map.
    #[error("map generation failed: no feasible map after {attempts} attempts")]
    MapGeneration { attempts: u32 },

    /// No obstacle-free route exists between start and goal.
    #[error("infeasible map: no free route between start and goal")]
    InfeasibleMap,

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Diagnostic category used for CLI exit codes.
    pub fn category(&self) -> &'static str {
        match self {
            Error::Config(_)
            | Error::Parse(_)
            | Error::MapGeneration { .. }
            | Error::InfeasibleMap => "config",
            Error::Evaluation { .. } => "evaluation",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
