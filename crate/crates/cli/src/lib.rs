//! Support code for the `sghom` command: the claim suite behind
//! `verify-paper` and its report format.

pub mod report;
pub mod verify;
