//! Exact decision procedures for partial entanglement recovery.
//!
//! A bipartite pure state is represented by its sorted Schmidt-coefficient vector
//! ([`SchmidtVector`]). A deterministic LOCC transformation ψ → φ is possible exactly when
//! ψ ≺ φ (majorization). Such a transformation usually loses entanglement; an auxiliary
//! state χ *recovers* some of it when
//!
//! ```text
//! ψ⊗χ ≺ φ⊗ω,   ω ≺ χ,   ω ≠ χ
//! ```
//!
//! for some ω strictly more entangled than χ.
//!
//! All decisions use exact rational arithmetic; floating point only appears in entropies
//! and distances, which are reported but never decided on.
//!
//! # Map
//!
//! | module | what it answers |
//! |---|---|
//! | [`vectors`] | prefix sums, tensor products, `≺`, `⊲`, `⊏` |
//! | [`uniformity`] | `l_u`, `L_u`, `g_u`, entropy |
//! | [`decomposition`] | Equal/Strict block structure of ψ ≺ φ |
//! | [`strict`] | closed-form decision when ψ ⊲ φ, with witnesses |
//! | [`general`] | sufficient conditions and explicit χ when ψ ≺ φ has equalities |
//! | [`order`] | the exact single-transfer solver for arbitrary ψ ≺ φ, and a grid oracle |
//! | [`applications`] | concentration, mutual catalysis, multiple copies |
//! | [`cli`] | JSON front end used by the `locc-recovery` binary |
//!
//! ```
//! use locc_recovery::{order::algorithm2, SchmidtVector};
//!
//! let v = |s: &[&str]| SchmidtVector::parse(s, s.len(), true).unwrap();
//! let psi = v(&["0.33", "0.32", "0.3", "0.05"]);
//! let phi = v(&["0.46", "0.46", "0.08", "0"]);
//! let chi = v(&["0.6", "0.3", "0.1", "0"]);
//! let verdict = algorithm2(&psi, &phi, &chi).unwrap();
//! assert!(verdict.feasible);
//! ```

pub mod applications;
pub mod cli;
pub mod decomposition;
pub mod error;
pub mod general;
pub mod number;
pub mod order;
pub mod selftest;
pub mod strict;
pub mod uniformity;
pub mod vectors;
pub mod witness;

pub use error::{Error, Result};
pub use number::Rational;
pub use vectors::{majorize, CompactForm, MajorizationReport, SchmidtVector};
