//! Checks shared by the integration tests and the acceptance suite. Each
//! one panics on failure.

#![allow(dead_code)]

pub mod golden;
pub mod props;
pub mod protocol;
pub mod stats;
