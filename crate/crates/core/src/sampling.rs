//! Seeded random models for property tests and audits.
//!
//! Priors and weights are drawn on coarse rational grids so that distinct
//! expected utilities stay far apart relative to `EPS_CMP`, and equal ones
//! compare equal.

use std::collections::BTreeMap;

use rand::Rng;

use crate::acts::{ConservativeSeuModel, Utility};
use crate::belief::{Belief, Event};
use crate::error::Result;
use crate::lp::convex_fit;
use crate::multiprior::BeliefSet;

/// Largest integer weight a state can receive.
pub const PRIOR_WEIGHT_MAX: u32 = 20;
/// Conservatism weights are multiples of `1 / DELTA_STEPS`.
pub const DELTA_STEPS: u32 = 20;

/// How conservatism weights vary across events.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaShape {
    /// One weight for every event.
    Constant,
    /// Independent weights; at least two identified events differ.
    Free,
    /// Weakly decreasing in the prior probability of the event.
    DecreasingInPrior,
}

/// Integer state weights in `1..=PRIOR_WEIGHT_MAX`.
pub fn random_weights<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Vec<u32> {
    (0..dim)
        .map(|_| rng.gen_range(1..=PRIOR_WEIGHT_MAX))
        .collect()
}

/// A prior with full support.
pub fn random_prior<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Result<Belief> {
    belief_from(&random_weights(rng, dim))
}

fn belief_from(weights: &[u32]) -> Result<Belief> {
    Belief::from_weights(weights.iter().map(|&w| f64::from(w)).collect())
}

pub fn random_delta<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    f64::from(rng.gen_range(0..=DELTA_STEPS)) / f64::from(DELTA_STEPS)
}

/// Nonempty proper subsets of the state space.
pub fn proper_events(dim: usize) -> impl Iterator<Item = Event> {
    Event::power_set(dim).filter(|e| !e.is_empty() && !e.is_full())
}

/// A model with a full-support prior and a weight on every proper event.
pub fn random_model<R: Rng + ?Sized>(
    rng: &mut R,
    utility: &Utility,
    dim: usize,
    shape: DeltaShape,
) -> Result<ConservativeSeuModel> {
    let weights = random_weights(rng, dim);
    let prior = belief_from(&weights)?;
    let events: Vec<Event> = proper_events(dim).collect();
    let deltas: Vec<f64> = match shape {
        DeltaShape::Constant => {
            let d = random_delta(rng);
            vec![d; events.len()]
        }
        DeltaShape::Free => loop {
            let ds: Vec<f64> = events.iter().map(|_| random_delta(rng)).collect();
            if ds.iter().any(|&d| d != ds[0]) {
                break ds;
            }
        },
        DeltaShape::DecreasingInPrior => {
            // mass of an event as an integer, so equal probabilities tie exactly
            let mass = |e: &Event| e.members().map(|s| weights[s]).sum::<u32>();
            let mut levels: Vec<u32> = events.iter().map(mass).collect();
            levels.sort_unstable();
            levels.dedup();
            let mut ds: Vec<f64> = levels.iter().map(|_| random_delta(rng)).collect();
            ds.sort_by(|a, b| b.total_cmp(a));
            let table: BTreeMap<u32, f64> = levels.into_iter().zip(ds).collect();
            events.iter().map(|e| table[&mass(e)]).collect()
        }
    };
    ConservativeSeuModel::new(utility.clone(), prior, events.into_iter().zip(deltas))
}

/// Hull of `1..=max_extremes` full-support priors, canonicalized.
pub fn random_belief_set<R: Rng + ?Sized>(
    rng: &mut R,
    dim: usize,
    max_extremes: usize,
) -> Result<BeliefSet> {
    let k = rng.gen_range(1..=max_extremes.max(1));
    let pts = (0..k)
        .map(|_| random_prior(rng, dim))
        .collect::<Result<Vec<_>>>()?;
    BeliefSet::canonical(pts)
}

/// A belief at max-norm distance (hence total variation) at least `gap`
/// from `outer`, made by moving mass between two states of a vertex of
/// `priors`.
///
/// Only full-support prior vertices are moved, and at least a tenth of the
/// donor state's mass stays put. Pushing a conditional vertex toward a
/// corner of the simplex gives points that only steep acts can separate
/// from `outer`, and coarse audit grids do not contain such acts. Among the
/// candidate moves, the smallest one that reaches `gap` wins.
pub fn inflate_outside(priors: &BeliefSet, outer: &BeliefSet, gap: f64) -> Result<Option<Belief>> {
    let pts: Vec<&[f64]> = outer.extremes().iter().map(Belief::probs).collect();
    let distance = |p: &[f64]| convex_fit(&pts, p).map(|f| f.slack);
    let dim = outer.dim();
    let mut best: Option<(f64, Vec<f64>)> = None;
    for v in priors.extremes() {
        for s in 0..dim {
            for t in (0..dim).filter(|&t| t != s) {
                let moved = |step: f64| {
                    let mut p = v.probs().to_vec();
                    p[s] += step;
                    p[t] -= step;
                    p
                };
                let reach = 0.9 * v.get(t);
                if distance(&moved(reach))? < gap {
                    continue;
                }
                // distance to a convex set grows along a ray leaving it
                let (mut lo, mut hi) = (0.0, reach);
                for _ in 0..50 {
                    let mid = 0.5 * (lo + hi);
                    if distance(&moved(mid))? >= gap {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                if best.as_ref().is_none_or(|(step, _)| hi < *step) {
                    best = Some((hi, moved(hi)));
                }
            }
        }
    }
    best.map(|(_, p)| Belief::new(p)).transpose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn shapes_hold() {
        let u = Utility::linear(0.0, 1.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let m = random_model(&mut rng, &u, 4, DeltaShape::DecreasingInPrior).unwrap();
            let evs = m.identified_events();
            assert_eq!(evs.len(), 14);
            for a in &evs {
                for b in &evs {
                    let (pa, pb) = (
                        m.prior().event_prob(a).unwrap(),
                        m.prior().event_prob(b).unwrap(),
                    );
                    if pa >= pb - 1e-12 {
                        assert!(m.delta(a).unwrap() <= m.delta(b).unwrap());
                    }
                }
            }
            let m = random_model(&mut rng, &u, 4, DeltaShape::Constant).unwrap();
            let d0 = m.delta(&evs[0]).unwrap();
            assert!(evs.iter().all(|a| m.delta(a).unwrap() == d0));
        }
    }

    #[test]
    fn seeded_draws_repeat() {
        let draw = || {
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            random_belief_set(&mut rng, 4, 4).unwrap()
        };
        assert_eq!(draw(), draw());
    }
}
