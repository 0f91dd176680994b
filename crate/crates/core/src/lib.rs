//! Quadratic words over free groups and small finite groups.
//!
//! The crate covers free-group word arithmetic ([`words`]), quadratic words
//! ([`quadratic`]), their surface graphs ([`surface`]), Wicks forms
//! ([`wicks`]), the extension construction ([`extension`]), group backends
//! ([`oracle`]) and the genus, commutator and square procedures
//! ([`detect`]).

pub mod detect;
pub mod extension;
pub mod halfint;
pub mod oracle;
pub mod quadratic;
pub mod surface;
pub mod wicks;
pub mod words;

pub use halfint::HalfInt;
pub use quadratic::{QuadraticTuple, QuadraticWord};
pub use words::{CyclicWord, Letter, Symbol, Word};
