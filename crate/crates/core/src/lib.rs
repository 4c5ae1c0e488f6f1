//! Exact finite mathematical structures with executable laws.
//!
//! Every construction here works on explicit finite data: symbol sets,
//! total maps, relation matrices, composition tables. Checks never assume a
//! law holds; they evaluate it on every instance and record the outcome in a
//! [`LawReport`](report::LawReport).

pub mod catalogue;
pub mod category;
pub mod error;
pub mod group;
pub mod numbers;
pub mod order;
pub mod report;
pub mod sets;
pub mod settools;
pub mod top;

pub use error::{Error, Result};
pub use report::LawReport;
pub use sets::{FinMap, FinSet, Mask, Symbol};
