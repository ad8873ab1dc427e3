//! Finite state spaces, events, and probability vectors.
//!
//! Events are bitmasks over at most 64 states; the event algebra is the
//! full power set. A [`Belief`] is a normalized, nonnegative weight vector.
//! The two update rules are Bayesian conditioning and the conservative rule
//! that mixes the prior with its Bayesian posterior:
//!
//! ```text
//! mu_A = delta * mu + (1 - delta) * B(mu, A)
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::{EPS_SUM, MAX_STATES};

/// Ordered, distinct state labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateSpace {
    labels: Vec<String>,
}

impl StateSpace {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() < 2 {
            return Err(Error::TooFewStates(labels.len()));
        }
        if labels.len() > MAX_STATES {
            return Err(Error::TooManyStates(labels.len()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateState(l.clone()));
            }
        }
        Ok(Self { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownState(label.to_string()))
    }

    /// Builds an event from state labels.
    pub fn event<I, S>(&self, labels: I) -> Result<Event>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut idx = Vec::new();
        for l in labels {
            idx.push(self.index_of(l.as_ref())?);
        }
        Event::from_indices(self.len(), idx)
    }

    pub fn full(&self) -> Event {
        Event::full(self.len())
    }
}

/// A subset of a finite state space, stored as a bitmask.
///
/// Ordering is by `(dimension, mask)` so event maps iterate deterministically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Event {
    dim: usize,
    mask: u64,
}

fn full_mask(dim: usize) -> u64 {
    if dim == 64 {
        u64::MAX
    } else {
        (1u64 << dim) - 1
    }
}

impl Event {
    pub fn from_indices<I: IntoIterator<Item = usize>>(dim: usize, indices: I) -> Result<Self> {
        if dim > MAX_STATES {
            return Err(Error::TooManyStates(dim));
        }
        let mut mask = 0u64;
        for i in indices {
            if i >= dim {
                return Err(Error::StateOutOfRange { index: i, len: dim });
            }
            mask |= 1 << i;
        }
        Ok(Self { dim, mask })
    }

    pub fn from_mask(dim: usize, mask: u64) -> Result<Self> {
        if dim > MAX_STATES {
            return Err(Error::TooManyStates(dim));
        }
        if mask & !full_mask(dim) != 0 {
            return Err(Error::StateOutOfRange {
                index: 63 - mask.leading_zeros() as usize,
                len: dim,
            });
        }
        Ok(Self { dim, mask })
    }

    pub fn full(dim: usize) -> Self {
        Self {
            dim,
            mask: full_mask(dim),
        }
    }

    pub fn empty(dim: usize) -> Self {
        Self { dim, mask: 0 }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    #[inline]
    pub fn contains(&self, state: usize) -> bool {
        state < self.dim && self.mask & (1 << state) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_full(&self) -> bool {
        self.mask == full_mask(self.dim)
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.dim).filter(move |&i| self.contains(i))
    }

    pub fn complement(&self) -> Self {
        Self {
            dim: self.dim,
            mask: !self.mask & full_mask(self.dim),
        }
    }

    pub fn union(&self, other: &Event) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            dim: self.dim,
            mask: self.mask | other.mask,
        })
    }

    pub fn intersection(&self, other: &Event) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            dim: self.dim,
            mask: self.mask & other.mask,
        })
    }

    pub fn is_disjoint(&self, other: &Event) -> bool {
        self.mask & other.mask == 0
    }

    pub fn check_dim(&self, other: &Event) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        Ok(())
    }

    /// Every event of a `dim`-state space, in mask order (empty set first).
    pub fn power_set(dim: usize) -> impl Iterator<Item = Event> {
        assert!(dim <= 20, "power set enumeration is limited to 20 states");
        (0..(1u64 << dim)).map(move |mask| Event { dim, mask })
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.members().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// A probability vector over a finite state space.
#[derive(Debug, Clone, PartialEq)]
pub struct Belief {
    probs: Vec<f64>,
}

impl Belief {
    /// Validates nonnegativity and unit sum (within `EPS_SUM`), then
    /// rescales so the stored weights sum to one.
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        let sum = Self::check_weights(&probs)?;
        if (sum - 1.0).abs() > EPS_SUM {
            return Err(Error::NotNormalized(sum));
        }
        Ok(Self::rescaled(probs, sum))
    }

    /// Normalizes arbitrary nonnegative weights with positive total.
    pub fn from_weights(weights: Vec<f64>) -> Result<Self> {
        let sum = Self::check_weights(&weights)?;
        if sum <= 0.0 {
            return Err(Error::NotNormalized(sum));
        }
        Ok(Self::rescaled(weights, sum))
    }

    pub fn uniform(dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::TooFewStates(dim));
        }
        Ok(Self {
            probs: vec![1.0 / dim as f64; dim],
        })
    }

    /// Point mass on `state`.
    pub fn degenerate(dim: usize, state: usize) -> Result<Self> {
        if state >= dim {
            return Err(Error::StateOutOfRange {
                index: state,
                len: dim,
            });
        }
        let mut probs = vec![0.0; dim];
        probs[state] = 1.0;
        Ok(Self { probs })
    }

    fn check_weights(w: &[f64]) -> Result<f64> {
        if w.len() < 2 {
            return Err(Error::TooFewStates(w.len()));
        }
        if w.len() > MAX_STATES {
            return Err(Error::TooManyStates(w.len()));
        }
        for (index, &value) in w.iter().enumerate() {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::InvalidWeight { index, value });
            }
        }
        Ok(w.iter().sum())
    }

    fn rescaled(mut probs: Vec<f64>, sum: f64) -> Self {
        if sum != 1.0 {
            probs.iter_mut().for_each(|p| *p /= sum);
        }
        Self { probs }
    }

    pub fn dim(&self) -> usize {
        self.probs.len()
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn get(&self, state: usize) -> f64 {
        self.probs[state]
    }

    fn check_event(&self, a: &Event) -> Result<()> {
        if a.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: a.dim(),
            });
        }
        Ok(())
    }

    /// Probability of an event.
    pub fn event_prob(&self, a: &Event) -> Result<f64> {
        self.check_event(a)?;
        Ok(a.members().map(|s| self.probs[s]).sum())
    }

    /// Conditions on `a`. Fails with [`Error::NullEvent`] when `a` has zero mass.
    pub fn bayes_update(&self, a: &Event) -> Result<Belief> {
        let pa = self.event_prob(a)?;
        if pa <= 0.0 {
            return Err(Error::NullEvent(*a));
        }
        let probs = self
            .probs
            .iter()
            .enumerate()
            .map(|(s, &p)| if a.contains(s) { p / pa } else { 0.0 })
            .collect();
        Ok(Belief::rescaled_checked(probs))
    }

    /// `delta * self + (1 - delta) * bayes_update(self, a)`.
    pub fn conservative_update(&self, a: &Event, delta: f64) -> Result<Belief> {
        check_unit(delta)?;
        let posterior = self.bayes_update(a)?;
        self.mix(&posterior, delta)
    }

    /// `w * self + (1 - w) * other`.
    pub fn mix(&self, other: &Belief, w: f64) -> Result<Belief> {
        check_unit(w)?;
        if other.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        let probs = self
            .probs
            .iter()
            .zip(&other.probs)
            .map(|(p, q)| w * p + (1.0 - w) * q)
            .collect();
        Ok(Belief::rescaled_checked(probs))
    }

    // Outputs of update and mixing are nonnegative by construction and sum
    // to one up to rounding; renormalize only when rounding drifted.
    fn rescaled_checked(probs: Vec<f64>) -> Self {
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > EPS_SUM {
            Self::rescaled(probs, sum)
        } else {
            Self { probs }
        }
    }

    /// Largest coordinatewise difference.
    pub fn max_abs_diff(&self, other: &Belief) -> f64 {
        self.probs
            .iter()
            .zip(&other.probs)
            .map(|(p, q)| (p - q).abs())
            .fold(0.0, f64::max)
    }

    /// Total-variation distance.
    pub fn total_variation(&self, other: &Belief) -> f64 {
        0.5 * self
            .probs
            .iter()
            .zip(&other.probs)
            .map(|(p, q)| (p - q).abs())
            .sum::<f64>()
    }

    pub fn approx_eq(&self, other: &Belief, tol: f64) -> bool {
        self.dim() == other.dim() && self.max_abs_diff(other) <= tol
    }
}

pub(crate) fn check_unit(w: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&w) {
        return Err(Error::WeightOutOfRange(w));
    }
    Ok(())
}

pub fn event_prob(mu: &Belief, a: &Event) -> Result<f64> {
    mu.event_prob(a)
}

pub fn bayes_update(mu: &Belief, a: &Event) -> Result<Belief> {
    mu.bayes_update(a)
}

pub fn conservative_update(mu: &Belief, a: &Event, delta: f64) -> Result<Belief> {
    mu.conservative_update(a, delta)
}

pub fn mix_beliefs(p: &Belief, q: &Belief, w: f64) -> Result<Belief> {
    p.mix(q, w)
}
