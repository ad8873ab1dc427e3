//! Recovering conservatism weights from beliefs and choices, and ordering
//! agents by how conservative they are.

use crate::acts::{Act, Conditioning, ConservativeSeuModel, Utility};
use crate::belief::{Belief, Event};
use crate::error::{Error, Result};
use crate::{EPS_CMP, EPS_FIT, EPS_SUM};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EstimateFlag {
    /// Data consistent with the conservative rule.
    Fit,
    /// Posterior lies farther than `EPS_FIT` from the prior-to-Bayes segment.
    OffSegment,
    /// Implied weight left `[0, 1]` by more than `EPS_FIT` and was clamped.
    OutOfRange,
    /// Prior and Bayesian posterior coincide, so any weight fits.
    Unidentified,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeltaEstimate {
    pub event: Event,
    /// `None` when the weight is not identified.
    pub value: Option<f64>,
    /// Distance between the data and the closest point the rule can produce.
    pub residual: f64,
    pub identified: bool,
    pub flag: EstimateFlag,
}

/// Projects `posterior` onto the segment from `B(prior, a)` to `prior`.
/// The weight on the prior is the estimate; the Euclidean distance to the
/// segment is the residual.
pub fn recover_delta(prior: &Belief, posterior: &Belief, a: &Event) -> Result<DeltaEstimate> {
    if posterior.dim() != prior.dim() {
        return Err(Error::DimensionMismatch {
            expected: prior.dim(),
            got: posterior.dim(),
        });
    }
    let bayes = prior.bayes_update(a)?;
    let dir: Vec<f64> = prior
        .probs()
        .iter()
        .zip(bayes.probs())
        .map(|(m, b)| m - b)
        .collect();
    let off: Vec<f64> = posterior
        .probs()
        .iter()
        .zip(bayes.probs())
        .map(|(p, b)| p - b)
        .collect();
    let norm2: f64 = dir.iter().map(|d| d * d).sum();
    if norm2.sqrt() <= EPS_SUM {
        return Ok(DeltaEstimate {
            event: *a,
            value: None,
            residual: euclid(posterior.probs(), prior.probs()),
            identified: false,
            flag: EstimateFlag::Unidentified,
        });
    }
    let t = dir.iter().zip(&off).map(|(d, o)| d * o).sum::<f64>() / norm2;
    let t = t.clamp(0.0, 1.0);
    let residual = off
        .iter()
        .zip(&dir)
        .map(|(o, d)| (o - t * d).powi(2))
        .sum::<f64>()
        .sqrt();
    Ok(DeltaEstimate {
        event: *a,
        value: Some(t),
        residual,
        identified: true,
        flag: if residual > EPS_FIT {
            EstimateFlag::OffSegment
        } else {
            EstimateFlag::Fit
        },
    })
}

fn euclid(p: &[f64], q: &[f64]) -> f64 {
    p.iter()
        .zip(q)
        .map(|(a, b)| (a - b).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Inverts the conditional value of the bet `xAy`.
///
/// The conservative posterior puts `1 - delta * (1 - mu(A))` on `A`, so the
/// bet's certainty equivalent `ce` satisfies
/// `u(ce) = u(x) - delta * (1 - mu(A)) * (u(x) - u(y))`.
pub fn recover_delta_from_ce(
    prior: &Belief,
    a: &Event,
    u: &Utility,
    x: f64,
    y: f64,
    ce: f64,
) -> Result<DeltaEstimate> {
    let pa = prior.event_prob(a)?;
    if pa <= 0.0 || 1.0 - pa <= EPS_SUM {
        return Err(Error::Domain(format!(
            "bet event must have probability strictly between 0 and 1, got {pa}"
        )));
    }
    for v in [x, y, ce] {
        u.check_outcome(v)?;
    }
    let (ux, uy, uce) = (u.eval(x), u.eval(y), u.eval(ce));
    if ux - uy <= EPS_CMP {
        return Err(Error::Domain(format!(
            "bet needs u(x) > u(y), got {ux} and {uy}"
        )));
    }
    let raw = (ux - uce) / ((ux - uy) * (1.0 - pa));
    let value = raw.clamp(0.0, 1.0);
    let residual = (raw - value).abs();
    Ok(DeltaEstimate {
        event: *a,
        value: Some(value),
        residual,
        identified: true,
        flag: if residual > EPS_FIT {
            EstimateFlag::OutOfRange
        } else {
            EstimateFlag::Fit
        },
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum ConstantDelta {
    /// Every identified event carries this weight.
    Constant(f64),
    /// Two identified events whose weights differ by more than `EPS_CMP`.
    Varies { first: Event, second: Event },
    /// No identified events.
    Vacuous,
}

/// Checks whether one weight serves every identified event.
pub fn is_constant_delta(model: &ConservativeSeuModel) -> Result<ConstantDelta> {
    let events = model.identified_events();
    let Some(first) = events.first() else {
        return Ok(ConstantDelta::Vacuous);
    };
    let base = model.delta(first)?;
    for e in &events[1..] {
        if (model.delta(e)? - base).abs() > EPS_CMP {
            return Ok(ConstantDelta::Varies {
                first: *first,
                second: *e,
            });
        }
    }
    Ok(ConstantDelta::Constant(base))
}

/// First pair of identified events `(a, b)` with `mu(a) >= mu(b)` but
/// `delta(a) > delta(b)`, or `None` when the weight never rises with the
/// prior probability of the event.
pub fn decreasing_in_prior_witness(model: &ConservativeSeuModel) -> Result<Option<(Event, Event)>> {
    let events = model.identified_events();
    let mut rows = Vec::with_capacity(events.len());
    for e in &events {
        rows.push((*e, model.prior().event_prob(e)?, model.delta(e)?));
    }
    for &(a, pa, da) in &rows {
        for &(b, pb, db) in &rows {
            if pa >= pb - EPS_CMP && da > db + EPS_CMP {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConservatismOrder {
    FirstMore,
    SecondMore,
    Equal,
    /// Each agent is more conservative on some event.
    Incomparable,
}

/// The matched bets used to compare two agents on one event.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchedBets {
    pub event: Event,
    pub x: f64,
    pub y1: f64,
    pub y2: f64,
    /// Conditional certainty equivalents of `xAy1` for the first agent and
    /// `xAy2` for the second.
    pub ce1: f64,
    pub ce2: f64,
    pub order: ConservatismOrder,
}

/// Compares two agents on `a` through bets with matched ex-ante values.
///
/// The high payoff `x` is the top of the outcome interval. The agent with
/// the larger prior on `a` gets the bottom of the interval as its low
/// payoff; the other agent's low payoff solves the ex-ante matching
/// equation, which keeps it inside the interval. The agent whose
/// conditional certainty equivalent is lower is the more conservative one.
pub fn matched_bets(
    m1: &ConservativeSeuModel,
    m2: &ConservativeSeuModel,
    a: &Event,
) -> Result<MatchedBets> {
    let (u1, u2) = (m1.utility(), m2.utility());
    if !u1.affine_equivalent(u2) {
        return Err(Error::IncompatibleTastes);
    }
    for m in [m1, m2] {
        if m.conditioning(a)? != Conditioning::Identified {
            return Err(Error::Domain(format!(
                "event {a} and its complement must both be non-null for each agent"
            )));
        }
    }
    let dim = m1.dim();
    let (lo, x) = u1.domain();
    let s = Event::full(dim);
    let p1 = m1.prior().event_prob(a)?;
    let p2 = m2.prior().event_prob(a)?;

    // Low payoff for `other` so that its ex-ante value of xAy matches `anchor`'s.
    let solve = |anchor: &ConservativeSeuModel,
                 other: &ConservativeSeuModel,
                 p_other: f64|
     -> Result<f64> {
        let bet = Act::constant(x, dim).splice(a, &Act::constant(lo, dim))?;
        let ce = anchor.certainty_equivalent(&bet, &s)?;
        let u = other.utility();
        let target = (u.eval(ce) - u.eval(x) * p_other) / (1.0 - p_other);
        let y = u.inverse(target).map_err(|_| {
            Error::Domain(format!(
                "no matching low payoff for event {a} in the outcome interval"
            ))
        })?;
        if u.eval(y) >= u.eval(x) - EPS_CMP {
            return Err(Error::Domain(format!("matched bet on {a} has no stake")));
        }
        Ok(y)
    };
    let (y1, y2) = if p1 >= p2 {
        (lo, solve(m1, m2, p2)?)
    } else {
        (solve(m2, m1, p1)?, lo)
    };

    let bet1 = Act::constant(x, dim).splice(a, &Act::constant(y1, dim))?;
    let bet2 = Act::constant(x, dim).splice(a, &Act::constant(y2, dim))?;
    let ce1 = m1.certainty_equivalent(&bet1, a)?;
    let ce2 = m2.certainty_equivalent(&bet2, a)?;

    // Both bets lose u(x) - u(ex-ante CE) per unit of weight on the prior,
    // so the gap in conditional values divided by that stake is the gap in
    // weights.
    let ex_ante = m1.certainty_equivalent(&bet1, &s)?;
    let stake = u1.eval(x) - u1.eval(ex_ante);
    let gap = (u1.eval(ce2) - u1.eval(ce1)) / stake;
    let order = if gap > EPS_CMP {
        ConservatismOrder::FirstMore
    } else if gap < -EPS_CMP {
        ConservatismOrder::SecondMore
    } else {
        ConservatismOrder::Equal
    };
    Ok(MatchedBets {
        event: *a,
        x,
        y1,
        y2,
        ce1,
        ce2,
        order,
    })
}

pub fn compare_conservatism(
    m1: &ConservativeSeuModel,
    m2: &ConservativeSeuModel,
    a: &Event,
) -> Result<ConservatismOrder> {
    Ok(matched_bets(m1, m2, a)?.order)
}

/// Compares on every event identified for both agents.
pub fn compare_conservatism_all(
    m1: &ConservativeSeuModel,
    m2: &ConservativeSeuModel,
) -> Result<(ConservatismOrder, Vec<MatchedBets>)> {
    let mut rows = Vec::new();
    for a in m1.identified_events() {
        if m2.is_identified(&a) && m2.delta(&a).is_ok() {
            rows.push(matched_bets(m1, m2, &a)?);
        }
    }
    let first = rows.iter().any(|r| r.order == ConservatismOrder::FirstMore);
    let second = rows
        .iter()
        .any(|r| r.order == ConservatismOrder::SecondMore);
    let order = match (first, second) {
        (true, true) => ConservatismOrder::Incomparable,
        (true, false) => ConservatismOrder::FirstMore,
        (false, true) => ConservatismOrder::SecondMore,
        (false, false) => ConservatismOrder::Equal,
    };
    Ok((order, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table1() -> Belief {
        Belief::new(vec![0.5, 0.125, 0.125, 0.25]).unwrap()
    }

    fn r() -> Event {
        Event::from_indices(4, [0, 1]).unwrap()
    }

    fn b() -> Event {
        r().complement()
    }

    fn linear() -> Utility {
        Utility::linear(0.0, 1.0).unwrap()
    }

    #[test]
    fn recover_delta_endpoints() {
        let mu = table1();
        let est = recover_delta(&mu, &mu, &r()).unwrap();
        assert_eq!(est.value, Some(1.0));
        assert!(est.residual < 1e-15);
        let bayes = mu.bayes_update(&r()).unwrap();
        let est = recover_delta(&mu, &bayes, &r()).unwrap();
        assert_eq!(est.value, Some(0.0));
        assert!(est.residual < 1e-15);
        assert_eq!(est.flag, EstimateFlag::Fit);
    }

    #[test]
    fn recover_delta_half() {
        let post = Belief::new(vec![0.65, 0.1625, 0.0625, 0.125]).unwrap();
        let est = recover_delta(&table1(), &post, &r()).unwrap();
        assert!((est.value.unwrap() - 0.5).abs() < 1e-12);
        assert!(est.residual < 1e-12);
    }

    #[test]
    fn recover_delta_off_segment() {
        let post = Belief::new(vec![0.25, 0.25, 0.25, 0.25]).unwrap();
        let est = recover_delta(&table1(), &post, &r()).unwrap();
        assert_eq!(est.flag, EstimateFlag::OffSegment);
        assert!(est.residual > 0.1);
    }

    #[test]
    fn recover_delta_unidentified_when_complement_null() {
        let mu = Belief::new(vec![0.5, 0.5, 0.0]).unwrap();
        let a = Event::from_indices(3, [0, 1]).unwrap();
        let est = recover_delta(&mu, &mu, &a).unwrap();
        assert!(!est.identified);
        assert_eq!(est.value, None);
        assert_eq!(est.flag, EstimateFlag::Unidentified);
        let null = Event::from_indices(3, [2]).unwrap();
        assert_eq!(recover_delta(&mu, &mu, &null), Err(Error::NullEvent(null)));
    }

    #[test]
    fn ce_inversion() {
        let mu = table1();
        let est = recover_delta_from_ce(&mu, &r(), &linear(), 1.0, 0.0, 1.0).unwrap();
        assert_eq!(est.value, Some(0.0));

        let ce = 1.0 - 3.0 / 8.0 * 0.4;
        let est = recover_delta_from_ce(&mu, &r(), &linear(), 1.0, 0.0, ce).unwrap();
        assert!((est.value.unwrap() - 0.4).abs() < 1e-12);
        assert_eq!(est.flag, EstimateFlag::Fit);

        // below the ex-ante value 5/8: implied weight above 1
        let est = recover_delta_from_ce(&mu, &r(), &linear(), 1.0, 0.0, 5.0 / 8.0 - 1e-5).unwrap();
        assert_eq!(est.flag, EstimateFlag::OutOfRange);
        assert_eq!(est.value, Some(1.0));
    }

    #[test]
    fn ce_inversion_domain_errors() {
        let mu = table1();
        let u = linear();
        assert!(matches!(
            recover_delta_from_ce(&mu, &Event::full(4), &u, 1.0, 0.0, 0.9),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            recover_delta_from_ce(&mu, &r(), &u, 0.5, 0.5, 0.5),
            Err(Error::Domain(_))
        ));
        let degenerate = Belief::new(vec![0.0, 0.0, 0.5, 0.5]).unwrap();
        assert!(recover_delta_from_ce(&degenerate, &r(), &u, 1.0, 0.0, 0.5).is_err());
    }

    #[test]
    fn constant_delta_checks() {
        let m = ConservativeSeuModel::constant(linear(), table1(), 0.3).unwrap();
        assert_eq!(is_constant_delta(&m).unwrap(), ConstantDelta::Constant(0.3));

        let m = ConservativeSeuModel::new(linear(), table1(), [(r(), 0.2), (b(), 0.8)]).unwrap();
        assert_eq!(
            is_constant_delta(&m).unwrap(),
            ConstantDelta::Varies {
                first: r(),
                second: b()
            }
        );

        let m = ConservativeSeuModel::new(linear(), table1(), [(r(), 0.2), (Event::full(4), 0.9)])
            .unwrap();
        assert_eq!(is_constant_delta(&m).unwrap(), ConstantDelta::Constant(0.2));

        let m = ConservativeSeuModel::new(linear(), table1(), []).unwrap();
        assert_eq!(is_constant_delta(&m).unwrap(), ConstantDelta::Vacuous);
    }

    #[test]
    fn comparative_conservatism_examples() {
        let m1 = ConservativeSeuModel::constant(linear(), table1(), 0.4).unwrap();
        let m2 = ConservativeSeuModel::constant(linear(), table1(), 0.4).unwrap();
        assert_eq!(
            compare_conservatism(&m1, &m2, &r()).unwrap(),
            ConservatismOrder::Equal
        );

        let m1 = ConservativeSeuModel::constant(linear(), table1(), 0.8).unwrap();
        let m2 = ConservativeSeuModel::constant(linear(), table1(), 0.3).unwrap();
        assert_eq!(
            compare_conservatism(&m1, &m2, &r()).unwrap(),
            ConservatismOrder::FirstMore
        );
        assert_eq!(
            compare_conservatism(&m2, &m1, &r()).unwrap(),
            ConservatismOrder::SecondMore
        );
    }

    #[test]
    fn comparative_conservatism_different_priors() {
        let a = Event::from_indices(2, [0]).unwrap();
        let m1 =
            ConservativeSeuModel::constant(linear(), Belief::new(vec![0.7, 0.3]).unwrap(), 0.5)
                .unwrap();
        let m2 =
            ConservativeSeuModel::constant(linear(), Belief::new(vec![0.5, 0.5]).unwrap(), 0.5)
                .unwrap();
        let bets = matched_bets(&m1, &m2, &a).unwrap();
        assert_eq!(bets.order, ConservatismOrder::Equal);
        assert!((bets.y1 - bets.y2).abs() > 0.1);
        // ex-ante values agree: 0.7 * 1 + 0.3 * 0 = 0.5 * 1 + 0.5 * y2
        assert!((bets.y2 - 0.4).abs() < 1e-12);

        let bets = matched_bets(&m2, &m1, &a).unwrap();
        assert_eq!(bets.order, ConservatismOrder::Equal);
        assert!((bets.y1 - 0.4).abs() < 1e-12);
        assert_eq!(bets.y2, 0.0);
    }

    #[test]
    fn comparative_conservatism_errors() {
        let m1 = ConservativeSeuModel::constant(linear(), table1(), 0.4).unwrap();
        let m2 =
            ConservativeSeuModel::constant(Utility::power(0.5, 0.0, 1.0).unwrap(), table1(), 0.4)
                .unwrap();
        assert_eq!(
            compare_conservatism(&m1, &m2, &r()),
            Err(Error::IncompatibleTastes)
        );
        assert!(matches!(
            compare_conservatism(&m1, &m1, &Event::full(4)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn compare_all_events() {
        let m1 = ConservativeSeuModel::new(linear(), table1(), [(r(), 0.8), (b(), 0.2)]).unwrap();
        let m2 = ConservativeSeuModel::new(linear(), table1(), [(r(), 0.5), (b(), 0.5)]).unwrap();
        let (order, rows) = compare_conservatism_all(&m1, &m2).unwrap();
        assert_eq!(order, ConservatismOrder::Incomparable);
        assert_eq!(rows.len(), 2);
        let m3 = ConservativeSeuModel::new(linear(), table1(), [(r(), 0.1), (b(), 0.1)]).unwrap();
        assert_eq!(
            compare_conservatism_all(&m2, &m3).unwrap().0,
            ConservatismOrder::FirstMore
        );
    }
}
