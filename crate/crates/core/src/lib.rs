//! Computational algebra for finite gyrogroups and right gyrogroups.
//!
//! The pipeline: validate a gyrogroup Cayley table ([`gyro`]), build its
//! group completion `M(G)` with the canonical map `ν` ([`ggc`]), study
//! gyrogroup actions through `M(G)` ([`action`]), count the invariant
//! function space ([`lgyr`]), and work with right gyrogroups and their
//! actions ([`right`]). [`group`] holds the finite-group engine underneath.

#![allow(clippy::needless_range_loop)]

pub mod action;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod ggc;
pub mod group;
pub mod gyro;
pub mod io;
pub mod lgyr;
pub mod report;
pub mod right;

pub use error::{Error, ParseError, Result};
pub use group::{FiniteGroup, GroupHom, Partition, Perm};
pub use ggc::{complete, GgcResult, PairElem};
pub use gyro::Gyrogroup;
pub use report::AxiomReport;
