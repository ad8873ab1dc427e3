//! Acts, utilities, and the conditional preferences of a conservative
//! expected-utility agent.

use std::collections::BTreeMap;

use crate::belief::{check_unit, Belief, Event};
use crate::error::{Error, Result};
use crate::EPS_CMP;

/// Shape of a utility function before the affine rescaling in [`Utility`].
#[derive(Debug, Clone, PartialEq)]
pub enum UtilityKind {
    Linear,
    /// Increasing interpolation through `(outcome, utility)` knots.
    PiecewiseLinear {
        knots: Vec<(f64, f64)>,
    },
    /// `z^exponent` on a nonnegative domain.
    Power {
        exponent: f64,
    },
}

/// A strictly increasing utility on the outcome interval `[lo, hi]`,
/// evaluated as `scale * base(x) + shift`.
#[derive(Debug, Clone, PartialEq)]
pub struct Utility {
    kind: UtilityKind,
    lo: f64,
    hi: f64,
    scale: f64,
    shift: f64,
}

impl Utility {
    pub fn linear(lo: f64, hi: f64) -> Result<Self> {
        Self::check_interval(lo, hi)?;
        Ok(Self {
            kind: UtilityKind::Linear,
            lo,
            hi,
            scale: 1.0,
            shift: 0.0,
        })
    }

    pub fn power(exponent: f64, lo: f64, hi: f64) -> Result<Self> {
        Self::check_interval(lo, hi)?;
        if !(exponent.is_finite() && exponent > 0.0) {
            return Err(Error::InvalidUtility(format!(
                "power exponent must be positive, got {exponent}"
            )));
        }
        if lo < 0.0 {
            return Err(Error::InvalidUtility(
                "power utility needs a nonnegative domain".into(),
            ));
        }
        Ok(Self {
            kind: UtilityKind::Power { exponent },
            lo,
            hi,
            scale: 1.0,
            shift: 0.0,
        })
    }

    /// The domain is the span of the knots.
    pub fn piecewise_linear(knots: Vec<(f64, f64)>) -> Result<Self> {
        if knots.len() < 2 {
            return Err(Error::InvalidUtility(
                "piecewise-linear utility needs at least two knots".into(),
            ));
        }
        for w in knots.windows(2) {
            let ((x0, y0), (x1, y1)) = (w[0], w[1]);
            if !(x0.is_finite() && x1.is_finite() && y0.is_finite() && y1.is_finite()) {
                return Err(Error::InvalidUtility("knots must be finite".into()));
            }
            if x1 <= x0 || y1 <= y0 {
                return Err(Error::InvalidUtility(
                    "knots must be strictly increasing in outcome and utility".into(),
                ));
            }
        }
        let lo = knots[0].0;
        let hi = knots[knots.len() - 1].0;
        Ok(Self {
            kind: UtilityKind::PiecewiseLinear { knots },
            lo,
            hi,
            scale: 1.0,
            shift: 0.0,
        })
    }

    fn check_interval(lo: f64, hi: f64) -> Result<()> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidUtility(format!(
                "outcome interval [{lo}, {hi}] must be finite and nondegenerate"
            )));
        }
        Ok(())
    }

    /// `a * self + b`, for `a > 0`.
    pub fn affine(&self, a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && a > 0.0 && b.is_finite()) {
            return Err(Error::InvalidUtility(format!(
                "affine transform needs a > 0, got a = {a}, b = {b}"
            )));
        }
        Ok(Self {
            scale: a * self.scale,
            shift: a * self.shift + b,
            ..self.clone()
        })
    }

    pub fn kind(&self) -> &UtilityKind {
        &self.kind
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    /// `(u(lo), u(hi))`.
    pub fn range(&self) -> (f64, f64) {
        (self.eval(self.lo), self.eval(self.hi))
    }

    pub fn check_outcome(&self, x: f64) -> Result<()> {
        if !(x >= self.lo && x <= self.hi) {
            return Err(Error::OutcomeOutOfDomain {
                value: x,
                lo: self.lo,
                hi: self.hi,
            });
        }
        Ok(())
    }

    fn base(&self, x: f64) -> f64 {
        match &self.kind {
            UtilityKind::Linear => x,
            UtilityKind::Power { exponent } => x.max(0.0).powf(*exponent),
            UtilityKind::PiecewiseLinear { knots } => interpolate(knots, x, false),
        }
    }

    fn base_inverse(&self, v: f64) -> f64 {
        match &self.kind {
            UtilityKind::Linear => v,
            UtilityKind::Power { exponent } => v.max(0.0).powf(1.0 / exponent),
            UtilityKind::PiecewiseLinear { knots } => interpolate(knots, v, true),
        }
    }

    /// Utility of an outcome. Outcomes outside the domain are extrapolated
    /// from the nearest piece; callers validate with [`Utility::check_outcome`].
    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        self.scale * self.base(x) + self.shift
    }

    /// The outcome with utility `v`. Values within `EPS_CMP` of the range
    /// snap to the domain endpoints.
    pub fn inverse(&self, v: f64) -> Result<f64> {
        let (ulo, uhi) = self.range();
        if !v.is_finite() || v < ulo - EPS_CMP || v > uhi + EPS_CMP {
            return Err(Error::Range {
                value: v,
                lo: ulo,
                hi: uhi,
            });
        }
        let v = v.clamp(ulo, uhi);
        let x = self.base_inverse((v - self.shift) / self.scale);
        Ok(x.clamp(self.lo, self.hi))
    }

    /// Whether `other` is a positive affine transformation of `self`,
    /// checked on an evenly spaced probe grid over a shared domain.
    pub fn affine_equivalent(&self, other: &Utility) -> bool {
        let tol = 1e-9;
        if (self.lo - other.lo).abs() > tol || (self.hi - other.hi).abs() > tol {
            return false;
        }
        let (a_lo, a_hi) = self.range();
        let (b_lo, b_hi) = other.range();
        let a = (b_hi - b_lo) / (a_hi - a_lo);
        let b = b_lo - a * a_lo;
        let span = (b_hi - b_lo).abs().max(1.0);
        (0..=PROBES).all(|k| {
            let x = self.lo + (self.hi - self.lo) * k as f64 / PROBES as f64;
            (other.eval(x) - (a * self.eval(x) + b)).abs() <= tol * span
        })
    }
}

const PROBES: usize = 20;

fn interpolate(knots: &[(f64, f64)], t: f64, inverse: bool) -> f64 {
    let pick = |k: &(f64, f64)| if inverse { (k.1, k.0) } else { *k };
    let n = knots.len();
    let seg = knots
        .windows(2)
        .position(|w| t <= pick(&w[1]).0)
        .unwrap_or(n - 2);
    let (x0, y0) = pick(&knots[seg]);
    let (x1, y1) = pick(&knots[seg + 1]);
    y0 + (y1 - y0) * (t - x0) / (x1 - x0)
}

/// An outcome per state.
#[derive(Debug, Clone, PartialEq, PartialOrd)]
pub struct Act {
    outcomes: Vec<f64>,
}

impl Act {
    pub fn new(outcomes: Vec<f64>) -> Self {
        Self { outcomes }
    }

    pub fn constant(x: f64, dim: usize) -> Self {
        Self {
            outcomes: vec![x; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.outcomes.len()
    }

    pub fn outcomes(&self) -> &[f64] {
        &self.outcomes
    }

    pub fn get(&self, state: usize) -> f64 {
        self.outcomes[state]
    }

    /// Returns the outcome if every state pays the same.
    pub fn as_constant(&self) -> Option<f64> {
        let first = *self.outcomes.first()?;
        self.outcomes.iter().all(|&x| x == first).then_some(first)
    }

    pub fn check(&self, dim: usize, u: &Utility) -> Result<()> {
        if self.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: self.dim(),
            });
        }
        self.outcomes.iter().try_for_each(|&x| u.check_outcome(x))
    }

    /// `self` on `a`, `other` off `a`.
    pub fn splice(&self, a: &Event, other: &Act) -> Result<Act> {
        if self.dim() != a.dim() || other.dim() != a.dim() {
            return Err(Error::DimensionMismatch {
                expected: a.dim(),
                got: if self.dim() != a.dim() {
                    self.dim()
                } else {
                    other.dim()
                },
            });
        }
        let outcomes = (0..self.dim())
            .map(|s| {
                if a.contains(s) {
                    self.outcomes[s]
                } else {
                    other.outcomes[s]
                }
            })
            .collect();
        Ok(Act { outcomes })
    }

    /// Statewise `w * self + (1 - w) * other`.
    pub fn mix(&self, other: &Act, w: f64) -> Result<Act> {
        check_unit(w)?;
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        let outcomes = self
            .outcomes
            .iter()
            .zip(&other.outcomes)
            .map(|(x, y)| w * x + (1.0 - w) * y)
            .collect();
        Ok(Act { outcomes })
    }

    pub fn weakly_dominates(&self, other: &Act) -> bool {
        self.dim() == other.dim()
            && self
                .outcomes
                .iter()
                .zip(&other.outcomes)
                .all(|(x, y)| x >= y)
    }

    pub fn agrees_on(&self, other: &Act, a: &Event) -> bool {
        a.members().all(|s| self.outcomes[s] == other.outcomes[s])
    }
}

pub fn splice(f: &Act, a: &Event, g: &Act) -> Result<Act> {
    f.splice(a, g)
}

pub fn expected_utility(f: &Act, mu: &Belief, u: &Utility) -> Result<f64> {
    if f.dim() != mu.dim() {
        return Err(Error::DimensionMismatch {
            expected: mu.dim(),
            got: f.dim(),
        });
    }
    Ok(eu(f.outcomes(), mu.probs(), u))
}

#[inline]
pub(crate) fn eu(outcomes: &[f64], probs: &[f64], u: &Utility) -> f64 {
    outcomes
        .iter()
        .zip(probs)
        .map(|(&x, &p)| p * u.eval(x))
        .sum()
}

/// Result of a three-way preference comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Comparison {
    /// The first act is strictly preferred.
    First,
    /// The second act is strictly preferred.
    Second,
    Indifferent,
}

impl Comparison {
    /// Compares two values with the `EPS_CMP` indifference band.
    pub fn of(a: f64, b: f64) -> Self {
        if a > b + EPS_CMP {
            Comparison::First
        } else if b > a + EPS_CMP {
            Comparison::Second
        } else {
            Comparison::Indifferent
        }
    }

    pub fn first_weakly(self) -> bool {
        self != Comparison::Second
    }
}

/// How an event relates to the prior when conditioning.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conditioning {
    /// Zero prior mass: the posterior is the prior.
    Null,
    /// Complement has zero mass: posterior equals prior, delta not identified.
    Certain,
    /// Both the event and its complement carry mass.
    Identified,
}

/// Utility, prior, and per-event conservatism weights.
///
/// Weights are only stored for non-null events. A default weight, when set,
/// applies to every non-null event without an explicit entry.
#[derive(Debug, Clone, PartialEq)]
pub struct ConservativeSeuModel {
    utility: Utility,
    prior: Belief,
    deltas: BTreeMap<Event, f64>,
    default_delta: Option<f64>,
}

impl ConservativeSeuModel {
    pub fn new<I>(utility: Utility, prior: Belief, deltas: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Event, f64)>,
    {
        let mut map = BTreeMap::new();
        for (a, d) in deltas {
            if a.dim() != prior.dim() {
                return Err(Error::DimensionMismatch {
                    expected: prior.dim(),
                    got: a.dim(),
                });
            }
            check_unit(d)?;
            if prior.event_prob(&a)? <= 0.0 {
                return Err(Error::NullEvent(a));
            }
            map.insert(a, d);
        }
        Ok(Self {
            utility,
            prior,
            deltas: map,
            default_delta: None,
        })
    }

    /// Same weight on every non-null event.
    pub fn constant(utility: Utility, prior: Belief, delta: f64) -> Result<Self> {
        Self::new(utility, prior, [])?.with_default_delta(delta)
    }

    pub fn with_default_delta(mut self, delta: f64) -> Result<Self> {
        check_unit(delta)?;
        self.default_delta = Some(delta);
        Ok(self)
    }

    pub fn utility(&self) -> &Utility {
        &self.utility
    }

    pub fn prior(&self) -> &Belief {
        &self.prior
    }

    pub fn dim(&self) -> usize {
        self.prior.dim()
    }

    pub fn stored_deltas(&self) -> &BTreeMap<Event, f64> {
        &self.deltas
    }

    pub fn default_delta(&self) -> Option<f64> {
        self.default_delta
    }

    pub fn conditioning(&self, a: &Event) -> Result<Conditioning> {
        let pa = self.prior.event_prob(a)?;
        Ok(if pa <= 0.0 {
            Conditioning::Null
        } else if self.prior.event_prob(&a.complement())? <= 0.0 {
            Conditioning::Certain
        } else {
            Conditioning::Identified
        })
    }

    pub fn is_identified(&self, a: &Event) -> bool {
        matches!(self.conditioning(a), Ok(Conditioning::Identified))
    }

    /// Conservatism weight for a non-null event.
    pub fn delta(&self, a: &Event) -> Result<f64> {
        if self.conditioning(a)? == Conditioning::Null {
            return Err(Error::NullEvent(*a));
        }
        self.deltas
            .get(a)
            .copied()
            .or(self.default_delta)
            .ok_or(Error::MissingDelta(*a))
    }

    /// Non-null events with a weight, in event order.
    pub fn events(&self) -> Vec<Event> {
        match self.default_delta {
            Some(_) => Event::power_set(self.dim())
                .filter(|a| !a.is_empty() && self.prior.event_prob(a).unwrap_or(0.0) > 0.0)
                .collect(),
            None => self.deltas.keys().copied().collect(),
        }
    }

    /// Non-null events whose weight is pinned down by behavior.
    pub fn identified_events(&self) -> Vec<Event> {
        self.events()
            .into_iter()
            .filter(|a| self.is_identified(a))
            .collect()
    }

    /// Conditional belief after `a`. Null events leave the prior in place,
    /// as do events whose complement is null.
    pub fn posterior(&self, a: &Event) -> Result<Belief> {
        match self.conditioning(a)? {
            Conditioning::Null | Conditioning::Certain => Ok(self.prior.clone()),
            Conditioning::Identified => self.prior.conservative_update(a, self.delta(a)?),
        }
    }

    /// Expected utility of `f` conditional on `a`.
    pub fn value(&self, f: &Act, a: &Event) -> Result<f64> {
        f.check(self.dim(), &self.utility)?;
        let post = self.posterior(a)?;
        Ok(eu(f.outcomes(), post.probs(), &self.utility))
    }

    pub fn prefers(&self, f: &Act, g: &Act, a: &Event) -> Result<Comparison> {
        Ok(Comparison::of(self.value(f, a)?, self.value(g, a)?))
    }

    pub fn certainty_equivalent(&self, f: &Act, a: &Event) -> Result<f64> {
        self.utility.inverse(self.value(f, a)?)
    }
}

/// A family of conditional expected-utility preferences sharing one utility:
/// `f` is weakly preferred to `g` after `a` when its expected utility under
/// `posterior(a)` is at least that of `g`, up to `EPS_CMP`.
pub trait ConditionalSeu {
    fn utility(&self) -> &Utility;

    fn prior(&self) -> &Belief;

    /// Belief held after `a`; null events return the prior.
    fn posterior(&self, a: &Event) -> Result<Belief>;

    /// Non-null conditioning events the family is defined on.
    fn events(&self) -> Vec<Event>;

    fn dim(&self) -> usize {
        self.prior().dim()
    }

    fn weakly_prefers(&self, f: &Act, g: &Act, a: &Event) -> Result<bool> {
        let post = self.posterior(a)?;
        let u = self.utility();
        Ok(eu(f.outcomes(), post.probs(), u) >= eu(g.outcomes(), post.probs(), u) - EPS_CMP)
    }
}

impl ConditionalSeu for ConservativeSeuModel {
    fn utility(&self) -> &Utility {
        &self.utility
    }

    fn prior(&self) -> &Belief {
        &self.prior
    }

    fn posterior(&self, a: &Event) -> Result<Belief> {
        ConservativeSeuModel::posterior(self, a)
    }

    fn events(&self) -> Vec<Event> {
        ConservativeSeuModel::events(self)
    }
}

/// Conditional expected-utility preferences with arbitrary stored posteriors.
///
/// Used to probe the axiom audits with updating rules that are not
/// conservative, e.g. posteriors that overshoot Bayes' rule.
#[derive(Debug, Clone, PartialEq)]
pub struct ExplicitSeuModel {
    utility: Utility,
    prior: Belief,
    posteriors: BTreeMap<Event, Belief>,
}

impl ExplicitSeuModel {
    pub fn new<I>(utility: Utility, prior: Belief, posteriors: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Event, Belief)>,
    {
        let mut map = BTreeMap::new();
        for (a, p) in posteriors {
            if p.dim() != prior.dim() {
                return Err(Error::DimensionMismatch {
                    expected: prior.dim(),
                    got: p.dim(),
                });
            }
            if prior.event_prob(&a)? <= 0.0 {
                return Err(Error::NullEvent(a));
            }
            map.insert(a, p);
        }
        Ok(Self {
            utility,
            prior,
            posteriors: map,
        })
    }
}

impl ConditionalSeu for ExplicitSeuModel {
    fn utility(&self) -> &Utility {
        &self.utility
    }

    fn prior(&self) -> &Belief {
        &self.prior
    }

    fn posterior(&self, a: &Event) -> Result<Belief> {
        if a.is_full() || self.prior.event_prob(a)? <= 0.0 {
            return Ok(self.prior.clone());
        }
        self.posteriors
            .get(a)
            .cloned()
            .ok_or(Error::MissingDelta(*a))
    }

    fn events(&self) -> Vec<Event> {
        self.posteriors.keys().copied().collect()
    }
}

pub fn prefers(model: &ConservativeSeuModel, f: &Act, g: &Act, a: &Event) -> Result<Comparison> {
    model.prefers(f, g, a)
}

pub fn certainty_equivalent(model: &ConservativeSeuModel, f: &Act, a: &Event) -> Result<f64> {
    model.certainty_equivalent(f, a)
}
