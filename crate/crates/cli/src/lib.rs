//! Catalog, report emitters and command line plumbing on top of the
//! `etale-core` classification kernel.

#![allow(clippy::needless_range_loop)]
#![allow(clippy::manual_is_multiple_of)]

pub mod catalog;
pub mod report;
pub mod rings;
pub mod schema;

pub use catalog::{Catalog, CatalogError, DEFAULT_BOUND};
