//! Exact computation with Archimedean l-groups with strong unit presented as
//! groups of continuous functions `G <= C(K)`.
//!
//! Three models of `K` are provided:
//!
//! - [`alphan::AlphaN`], the one-point compactification `αℕ`, with sequences
//!   that are eventually polynomial in `1/x` on each residue class;
//! - [`halfline::HalfLine`], the interval `[0, +∞]`, with piecewise-linear
//!   functions that are constant near `+∞`;
//! - [`finite::Finite`], a finite discrete space.
//!
//! Every model implements [`space::Space`]: l-group operations, an exact
//! algebra of subsets (closure and interior included), the cozero-set map, a
//! dominance oracle for `|f| <= n|g|`, and a way to realise an open set as a
//! cozero-set. On top of that, [`predicates`] decides principal ideals,
//! polars, zero-set kernels and the related regularity properties, and
//! [`terms`] presents groups by generators and checks class membership.

pub mod alphan;
pub mod finite;
pub mod halfline;
pub mod io;
pub mod predicates;
pub mod rat;
pub mod space;
pub mod terms;

pub use rat::Rat;
pub use space::{Certificate, Dominance, ModelError, Space};
