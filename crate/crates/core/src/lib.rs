//! Exact character theory for finite groups and the eigenvalue-containment
//! relation between representations.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure function
//! of immutable inputs; file formats, the command line and thread pools live in
//! the `repcontain` companion crate.
//!
//! * [`exact`]: rationals, cyclotomic numbers `Q(ζ_N)`, finite fields `F_q`.
//! * [`groups`]: enumerated permutation and matrix groups, conjugacy classes, power maps.
//! * [`chartab`]: irreducible character tables (Dixon–Schneider and closed-form `GL₂(F_q)`).
//! * [`lambda`]: Adams operations, symmetric and exterior powers, eigenvalue multisets.
//! * [`preceq`]: the eigenvalue-containment relation `V₁ ≼ V₂` and exhaustive search.
//! * [`gl2ring`]: the formal representation ring of `GL₂(ℂ)` with abelian twists.
//! * [`satake`]: floating-point Satake tuples and tolerance-based multiset containment.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod chartab;
pub mod exact;
pub mod gl2ring;
pub mod groups;
pub mod lambda;
pub mod preceq;
pub mod satake;
