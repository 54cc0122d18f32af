//! Command-line front end and text formats for `zigzag-core`.
//!
//! The binary lives in `main.rs`; everything it does is reachable through
//! [`app::run`] so that it can be driven in-process by tests.

pub mod app;
pub mod format;
pub mod input;
pub mod verify;
