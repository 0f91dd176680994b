//! Group backends.
//!
//! A [`GroupOracle`] answers word problems for a group `H` generated by a
//! finite alphabet `X`: equality, geodesic representatives, balls, bounded
//! conjugacy and the hyperbolicity constant `δ` with the derived constants
//! `M`, `K(n)` and `l(n)`.

mod finite;
mod free;

pub use finite::{FiniteGroup, FiniteGroupError};
pub use free::FreeGroup;

use num_rational::Rational64;
use serde::Serialize;
use thiserror::Error;

use crate::halfint::HalfInt;
use crate::wicks::max_length;
use crate::words::{Symbol, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("symbol {symbol} is not a generator of {group}")]
    UnknownGenerator { symbol: Symbol, group: String },
}

/// The constants attached to genus `n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Constants {
    #[serde(serialize_with = "ser_ratio")]
    pub delta: Rational64,
    /// `|B_H(⌊4δ⌋)|`.
    pub m: usize,
    /// `K(n)`.
    pub k: usize,
    /// `δ(log₂ K(n) + 1)`; zero when `δ = 0`.
    pub l: f64,
}

fn ser_ratio<S: serde::Serializer>(r: &Rational64, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(r)
}

fn fl(x: f64) -> usize {
    // guard against 4.999999 style rounding on exact values
    (x + 1e-9).floor().max(0.0) as usize
}

impl Constants {
    pub fn new(delta: Rational64, m: usize, n: HalfInt) -> Constants {
        let k = max_length(n);
        let d = *delta.numer() as f64 / *delta.denom() as f64;
        let l = if d == 0.0 || k == 0 { 0.0 } else { d * ((k as f64).log2() + 1.0) };
        Constants { delta, m, k, l }
    }

    fn delta_f(&self) -> f64 {
        *self.delta.numer() as f64 / *self.delta.denom() as f64
    }

    /// `12l + M + 4`: the bound on form letters and labels.
    pub fn form_bound(&self) -> usize {
        fl(12.0 * self.l + self.m as f64 + 4.0)
    }

    /// `|h|/2 + 6l + 3M/2 + 2δ + 7/2`.
    pub fn conjugator_bound_form1(&self, h_len: usize) -> usize {
        fl(h_len as f64 / 2.0 + 6.0 * self.l + 1.5 * self.m as f64 + 2.0 * self.delta_f() + 3.5)
    }

    /// `|h|/2 + 2δ`.
    pub fn conjugator_bound_short(&self, h_len: usize) -> usize {
        fl(h_len as f64 / 2.0 + 2.0 * self.delta_f())
    }

    /// `|h|/2 + 12l + 3M/2 + 2δ + 7/2`.
    pub fn conjugator_bound_square(&self, h_len: usize) -> usize {
        fl(h_len as f64 / 2.0 + 12.0 * self.l + 1.5 * self.m as f64 + 2.0 * self.delta_f() + 3.5)
    }

    /// `5l + M + 4`.
    pub fn square_xi_bound(&self) -> usize {
        fl(5.0 * self.l + self.m as f64 + 4.0)
    }

    /// `12(12l + M + 4)`.
    pub fn xi_total_bound(&self) -> usize {
        12 * self.form_bound()
    }

    /// `2K(n)(12l + M + 4)`.
    pub fn extension_length_bound(&self) -> usize {
        2 * self.k * self.form_bound()
    }

    /// `½(|u| + |v|) + M + 1`.
    pub fn conjugacy_witness_bound(&self, u_len: usize, v_len: usize) -> usize {
        fl((u_len + v_len) as f64 / 2.0 + self.m as f64 + 1.0)
    }
}

/// A group given by generators with solvable word and conjugacy problems.
pub trait GroupOracle: Send + Sync {
    /// Human-readable name, e.g. `free:a,b`.
    fn name(&self) -> String;

    fn generators(&self) -> &[Symbol];

    /// The shortlex-least geodesic word equal to `w`.
    fn minimal_word(&self, w: &Word) -> Word;

    fn minimal_length(&self, w: &Word) -> usize {
        self.minimal_word(w).len()
    }

    fn are_equal(&self, u: &Word, v: &Word) -> bool {
        self.minimal_word(&u.concat(&v.inverse())).is_empty()
    }

    fn is_trivial(&self, w: &Word) -> bool {
        self.minimal_word(w).is_empty()
    }

    /// One geodesic representative per element of length at most `k`,
    /// in shortlex order.
    fn ball(&self, k: usize) -> Vec<Word>;

    /// Size of `ball(k)` without materialising it.
    fn ball_size(&self, k: usize) -> usize;

    /// A shortest `w` with `u = w v w⁻¹`, searched within the conjugator
    /// bound `½(|u|+|v|) + M + 1`.
    fn are_conjugate(&self, u: &Word, v: &Word) -> Option<Word>;

    /// A word that depends only on the conjugacy class of `w`, when the
    /// backend has one cheaply.
    fn conjugacy_key(&self, _w: &Word) -> Option<Word> {
        None
    }

    fn delta(&self) -> Rational64;

    fn constants(&self, n: HalfInt) -> Constants {
        let d = self.delta();
        let r = (d * 4).floor().to_integer().max(0) as usize;
        Constants::new(d, self.ball_size(r), n)
    }

    fn is_free(&self) -> bool {
        false
    }

    /// Group order, if finite.
    fn order(&self) -> Option<usize> {
        None
    }

    /// Direct access to a finite backend's multiplication table.
    fn as_finite(&self) -> Option<&FiniteGroup> {
        None
    }

    fn check_word(&self, w: &Word) -> Result<(), OracleError> {
        for l in w.letters() {
            if !self.generators().contains(&l.symbol()) {
                return Err(OracleError::UnknownGenerator {
                    symbol: l.symbol(),
                    group: self.name(),
                });
            }
        }
        Ok(())
    }
}
