//! Genus computation and commutator/square detection.
//!
//! Free-group questions are decided exactly by matching Wicks forms against
//! cyclic cores. Questions over a general [`GroupOracle`] use bounded
//! searches; when a budget cuts a search short the answer is
//! [`Verdict::Indeterminate`] or [`Search::Indeterminate`], never a false
//! negative.

mod brute;
mod certificate;
mod forms;
mod matching;

pub use brute::{brute_force_genus, genus_tuple, BruteForce};
pub use certificate::{search_genus, verify_certificate, CertificateReport, Check, GenusCertificate};
pub use forms::{is_commutator_oracle, is_square_oracle, CommutatorWitness, SquareWitness};
pub use matching::{
    commutator_forms, genus_minus_free, genus_plus_free, is_commutator_free, is_two_squares_free,
    match_wicks, match_wicks_full, two_square_forms, CancellationFreeLabelling, WicksMatch,
};

use serde::{Deserialize, Serialize};

/// A three-valued answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    True,
    False,
    Indeterminate,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn is_true(self) -> bool {
        self == Verdict::True
    }

    /// Conjunction: false dominates, then indeterminate.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::False, _) | (_, Verdict::False) => Verdict::False,
            (Verdict::True, Verdict::True) => Verdict::True,
            _ => Verdict::Indeterminate,
        }
    }
}

/// Result of a bounded search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Search<T> {
    Found(T),
    NotFound,
    Indeterminate,
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }

    pub fn verdict(&self) -> Verdict {
        match self {
            Search::Found(_) => Verdict::True,
            Search::NotFound => Verdict::False,
            Search::Indeterminate => Verdict::Indeterminate,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Search<U> {
        match self {
            Search::Found(t) => Search::Found(f(t)),
            Search::NotFound => Search::NotFound,
            Search::Indeterminate => Search::Indeterminate,
        }
    }
}

/// Caps for searches over infinite groups. Finite backends ignore the
/// radius caps (their balls saturate) and are limited by `max_steps` only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest ball radius enumerated for free variables.
    pub max_ball: usize,
    /// Largest conjugator length tried.
    pub max_len: usize,
    /// Total number of candidate evaluations.
    pub max_steps: u64,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            max_ball: 3,
            max_len: 12,
            max_steps: 20_000_000,
        }
    }
}

/// Step counter shared by the searches.
pub(crate) struct Meter {
    left: u64,
    pub exhausted: bool,
}

impl Meter {
    pub fn new(budget: &Budget) -> Meter {
        Meter {
            left: budget.max_steps,
            exhausted: false,
        }
    }

    /// Consumes one step; false once the budget is gone.
    pub fn tick(&mut self) -> bool {
        if self.left == 0 {
            self.exhausted = true;
            return false;
        }
        self.left -= 1;
        true
    }
}
