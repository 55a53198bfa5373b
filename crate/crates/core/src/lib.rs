//! Exact arithmetic with grossone (①) and element counting for sets described
//! by finitely many gross-integer intervals.
//!
//! The crate is organised bottom-up:
//!
//! * [`gnum`]: canonical gross-numbers `Σ cᵢ·①^pᵢ` with exact rational
//!   coefficients and exponents, their arithmetic, ordering and numeral syntax.
//! * [`sets`]: normalized unions of gross-integer intervals.
//! * [`measure`]: explicit measurements, i.e. piecewise-shift bijections from
//!   `[1..μ]` onto a set, and the constructions built on them.
//! * [`numeral_system`]: expressibility predicates with their greatest finite
//!   and least infinite numerals.
//! * [`derived`]: numbers known only through `g(x) ≤ κ < g(x+1)`.
//! * [`geometry`]: reflections of semi-infinite strips.
//! * [`expr`]: the textual expression languages used by the `gross` CLI.
//! * [`batch`]: batch checks that run on rayon when the `parallel` feature is on.

pub mod batch;
pub mod derived;
mod error;
pub mod expr;
pub mod geometry;
pub mod gnum;
pub mod measure;
pub mod numeral_system;
pub mod sets;

pub use derived::{DefinedNumeral, MonotoneFn};
pub use error::Error;
pub use gnum::{GrossNumber, NumberClass, Rational, Sign};
pub use measure::{AffinePiece, Measurement};
pub use numeral_system::NumeralSystem;
pub use sets::{GrossInterval, IntervalSet};
