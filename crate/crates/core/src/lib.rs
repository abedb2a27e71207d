//! Single-node retail analytics engine.
//!
//! The crate is organized around an immutable columnar table ([`table::ColumnTable`])
//! that every stage consumes and produces:
//!
//! - [`ingest`] loads, profiles and cleans CSV datasets;
//! - [`fixture`] generates deterministic synthetic datasets for desk-scale runs;
//! - [`calendar`] turns date columns into nine calendar features;
//! - [`tree`] is a from-scratch variance-reduction regression tree;
//! - [`forecast`] trains one tree per search-trend keyword and evaluates RMSE;
//! - [`basket`] denormalizes order data and computes basket aggregations;
//! - [`panel`] covers spending, retail and review panel analytics;
//! - [`report`] is the shared group-by result carrier with CSV/JSON/plot output.

pub mod basket;
pub mod cache;
pub mod calendar;
pub mod date;
pub mod error;
pub mod fixture;
pub mod forecast;
pub mod ingest;
pub mod panel;
pub mod report;
pub mod table;
pub mod tree;

pub use date::Date;
pub use error::{Error, Result};
pub use report::{Cell, Report};
pub use table::{Column, ColumnTable, DType, Value};
