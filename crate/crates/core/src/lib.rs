//! Software reliability growth modelling for cumulative defect-count data.
//!
//! The crate fits the Goel-Okumoto NHPP model `m(t) = a(1 - exp(-b t))` to a
//! defect dataset by minimizing the sum of squared errors over the dataset's
//! daily timeline, using either a deterministic profiled least-squares scan
//! ([`baseline::oracle_fit`]) or one of seven swarm optimizers
//! ([`swarm::optimize`]). Laplace and arithmetic-average trend tests decide
//! whether a dataset exhibits reliability growth before fitting
//! ([`trend::trend_report`]), and k-fold cross-validation
//! ([`validation::cross_validate`]) measures fit stability.

pub mod baseline;
pub mod dataset;
pub mod error;
pub mod fit;
pub mod model;
pub mod swarm;
pub mod trend;
pub mod validation;

pub use error::{Error, Result};
