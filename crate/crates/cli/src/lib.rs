//! Library side of the `bchkit` command: serialization, the randomized
//! verification suite and benchmarking.

pub mod bench;
pub mod output;
pub mod verify;

use bchkit_core::bch::BchError;
use bchkit_core::series::SeriesError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Bch(#[from] BchError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("parse error: {0}")]
    Parse(String),
}
