pub mod center;
pub mod cli;
pub mod cm;
pub mod daha;
pub mod error;
pub mod laurent;
pub mod macdonald;
pub mod matrix;
pub mod params;
pub mod qgroup;
pub mod ratfunc;
pub mod report;
pub mod scalar;
pub mod torus;
pub mod weight;

pub use error::{Error, Result};
