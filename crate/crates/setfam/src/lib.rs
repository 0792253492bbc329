//! Construction, transformation, and analysis of k-uniform intersecting set
//! families at desk scale.
//!
//! The crate covers five capability areas:
//!
//! * **Families and degrees** — [`KSet`] (bitset k-subsets of `[n]`, n ≤ 62,
//!   colex-ordered), [`SetFamily`], sorted degree profiles, traces, subset
//!   degrees, and m-degrees ([`family`], [`kset`]).
//! * **Shifting** — the ij-compression calculus: single shifts, the
//!   `l`-shifted predicate, and a renaming fixpoint driver with a proven
//!   termination guard ([`shifting`]).
//! * **Shadows** — shadow/upper shadow, colex segments, and the
//!   Kruskal–Katona lower bound with an expansion-bound checker
//!   ([`shadow`]).
//! * **Named constructions** — stars, Hilton–Milner and related families,
//!   the small 2-designs, and the extremal examples with surprising degree
//!   profiles ([`constructions`]).
//! * **Verification and search** — machine-readable bound verdicts for the
//!   degree theorems, and exhaustive enumeration of maximal intersecting
//!   families as maximal cliques ([`verifiers`], [`search`]).
//!
//! Start with the runnable examples, one per capability:
//!
//! ```text
//! cargo run --example construct_families
//! cargo run --example degree_profiles
//! cargo run --example shift_to_fixpoint
//! cargo run --example shadows_and_kk
//! cargo run --example verify_bounds
//! cargo run --example search_maximal
//! ```
//!
//! The `setfam` binary wraps the same capabilities as subcommands
//! (`construct`, `degrees`, `shift`, `shadow`, `verify`, `identity-check`,
//! `search`) over a shared text format; see [`io`] for the format.
//!
//! Everything is exact integer arithmetic: binomials come from a
//! compile-time Pascal table ([`binom`]), comparisons are evaluated in
//! `u128`, and floating point appears only in one hypothesis gate that is
//! flagged, never silently applied.

pub mod binom;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod family;
pub mod io;
pub mod kset;
pub mod search;
pub mod shadow;
pub mod shifting;
pub mod verifiers;

pub use error::{Error, Result};
pub use family::{DegreeProfile, SetFamily, TraceFamily};
pub use kset::KSet;
pub use shifting::ShiftReport;
pub use verifiers::BoundVerdict;
