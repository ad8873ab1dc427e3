//! Sets of priors, unanimity preferences, and conservative updating of
//! belief sets.
//!
//! A [`BeliefSet`] is a polytope in the probability simplex, stored by its
//! vertices. Expected utility is linear in the belief, so every min, max,
//! or "for all members" test over the set reduces to its vertices.
//! Redundant vertices are removed with a convex-combination feasibility
//! check from [`crate::lp`].

use std::collections::BTreeMap;

use crate::acts::{eu, Act, Utility};
use crate::audit::{
    ActGrid, AuditReport, Auditor, Axiom, Relation, Statement, Violation, WeakPreference,
};
use crate::belief::{check_unit, Belief, Event};
use crate::error::{Error, Result};
use crate::lp::convex_fit;
use crate::{EPS_CMP, EPS_FIT};

/// Convex hull of finitely many beliefs.
#[derive(Debug, Clone, PartialEq)]
pub struct BeliefSet {
    extremes: Vec<Belief>,
}

impl BeliefSet {
    /// Drops near-duplicates (within `EPS_CMP`); keeps other redundant points.
    pub fn new(points: Vec<Belief>) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyBeliefSet)?;
        let dim = first.dim();
        let mut extremes: Vec<Belief> = Vec::with_capacity(points.len());
        for p in points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.dim(),
                });
            }
            if !extremes.iter().any(|q| q.max_abs_diff(&p) <= EPS_CMP) {
                extremes.push(p);
            }
        }
        Ok(Self { extremes })
    }

    pub fn singleton(mu: Belief) -> Self {
        Self { extremes: vec![mu] }
    }

    /// Removes every point that is a convex combination of the others.
    pub fn canonical(points: Vec<Belief>) -> Result<Self> {
        let mut set = Self::new(points)?;
        let mut i = 0;
        while i < set.extremes.len() && set.extremes.len() > 1 {
            let others: Vec<&[f64]> = set
                .extremes
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, b)| b.probs())
                .collect();
            if convex_fit(&others, set.extremes[i].probs())?.slack <= EPS_FIT {
                set.extremes.remove(i);
            } else {
                i += 1;
            }
        }
        Ok(set)
    }

    pub fn extremes(&self) -> &[Belief] {
        &self.extremes
    }

    pub fn len(&self) -> usize {
        self.extremes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extremes.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.extremes[0].dim()
    }

    /// Whether `mu` is a convex combination of the vertices, up to `EPS_FIT`.
    pub fn contains_belief(&self, mu: &Belief) -> Result<bool> {
        if mu.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: mu.dim(),
            });
        }
        let pts: Vec<&[f64]> = self.extremes.iter().map(Belief::probs).collect();
        Ok(convex_fit(&pts, mu.probs())?.slack <= EPS_FIT)
    }

    /// Lowest and highest probability of `a` across the set.
    pub fn prob_range(&self, a: &Event) -> Result<(f64, f64)> {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for mu in &self.extremes {
            let p = mu.event_prob(a)?;
            lo = lo.min(p);
            hi = hi.max(p);
        }
        Ok((lo, hi))
    }

    /// Lowest and highest expected utility of `f` across the set.
    pub fn eu_range(&self, f: &Act, u: &Utility) -> Result<(f64, f64)> {
        if f.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: f.dim(),
            });
        }
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for mu in &self.extremes {
            let v = eu(f.outcomes(), mu.probs(), u);
            lo = lo.min(v);
            hi = hi.max(v);
        }
        Ok((lo, hi))
    }
}

/// `f` is weakly preferred to `g` by every belief in the set.
pub fn unanimity_prefers(m: &BeliefSet, u: &Utility, f: &Act, g: &Act) -> Result<bool> {
    for act in [f, g] {
        if act.dim() != m.dim() {
            return Err(Error::DimensionMismatch {
                expected: m.dim(),
                got: act.dim(),
            });
        }
    }
    Ok(m.extremes
        .iter()
        .all(|mu| eu(f.outcomes(), mu.probs(), u) >= eu(g.outcomes(), mu.probs(), u) - EPS_CMP))
}

/// Every belief in the set gives `a` positive probability.
pub fn unambiguously_nonnull(m: &BeliefSet, a: &Event) -> Result<bool> {
    Ok(m.prob_range(a)?.0 > 0.0)
}

fn require_nonnull(m: &BeliefSet, a: &Event) -> Result<()> {
    if !unambiguously_nonnull(m, a)? {
        return Err(Error::AmbiguouslyNull(*a));
    }
    Ok(())
}

/// Prior-by-prior Bayesian update.
///
/// Conditioning is a linear-fractional map with positive denominator on the
/// set, so it sends segments to segments and the image of the polytope is
/// the hull of the vertex images.
pub fn set_bayes_update(m: &BeliefSet, a: &Event) -> Result<BeliefSet> {
    require_nonnull(m, a)?;
    let images = m
        .extremes
        .iter()
        .map(|mu| mu.bayes_update(a))
        .collect::<Result<Vec<_>>>()?;
    BeliefSet::canonical(images)
}

/// `conv(M ∪ B(M, A))`, the largest posterior set a conservative
/// multi-prior agent may hold.
pub fn hull_mix(m: &BeliefSet, a: &Event) -> Result<BeliefSet> {
    let bayes = set_bayes_update(m, a)?;
    let mut pts = m.extremes.clone();
    pts.extend(bayes.extremes);
    BeliefSet::canonical(pts)
}

/// `delta * M + (1 - delta) * B(M, A)` as a Minkowski combination.
pub fn minkowski_mix(m: &BeliefSet, a: &Event, delta: f64) -> Result<BeliefSet> {
    check_unit(delta)?;
    let bayes = set_bayes_update(m, a)?;
    let mut pts = Vec::with_capacity(m.len() * bayes.len());
    for mu in &m.extremes {
        for b in &bayes.extremes {
            pts.push(mu.mix(b, delta)?);
        }
    }
    BeliefSet::canonical(pts)
}

/// Conservative posteriors of one prior for every weight in `[w_lo, w_hi]`.
pub fn weight_segment(mu: &Belief, a: &Event, w_lo: f64, w_hi: f64) -> Result<BeliefSet> {
    check_unit(w_lo)?;
    check_unit(w_hi)?;
    if w_lo > w_hi {
        return Err(Error::Domain(format!(
            "weight interval [{w_lo}, {w_hi}] is empty"
        )));
    }
    BeliefSet::new(vec![
        mu.conservative_update(a, w_lo)?,
        mu.conservative_update(a, w_hi)?,
    ])
}

/// Whether every vertex of `inner` lies in `outer`.
pub fn contains(outer: &BeliefSet, inner: &BeliefSet) -> Result<bool> {
    for mu in &inner.extremes {
        if !outer.contains_belief(mu)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `alpha * min EU + (1 - alpha) * max EU` over the set: `alpha = 1` is
/// maxmin, `alpha = 0` is maxmax.
pub fn alpha_meu_value(m: &BeliefSet, u: &Utility, f: &Act, alpha: f64) -> Result<f64> {
    check_unit(alpha)?;
    let (lo, hi) = m.eu_range(f, u)?;
    Ok(alpha * lo + (1.0 - alpha) * hi)
}

/// Which end of the expected-utility range the ambiguity parameter weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaLabel {
    /// `alpha` weights the worst case, as in [`alpha_meu_value`].
    Pessimism,
    /// `alpha` weights the best case, so `alpha = 0` is maxmin.
    Optimism,
}

pub fn alpha_meu_value_labeled(
    m: &BeliefSet,
    u: &Utility,
    f: &Act,
    alpha: f64,
    label: AlphaLabel,
) -> Result<f64> {
    match label {
        AlphaLabel::Pessimism => alpha_meu_value(m, u, f, alpha),
        AlphaLabel::Optimism => {
            check_unit(alpha)?;
            alpha_meu_value(m, u, f, 1.0 - alpha)
        }
    }
}

/// How a multi-prior agent forms posterior sets.
#[derive(Debug, Clone, PartialEq)]
pub enum PosteriorRule {
    /// The outer bound `conv(M ∪ B(M, A))`.
    HullMix,
    /// One weight per event, mixing the prior set with its Bayesian image.
    MinkowskiMix {
        deltas: BTreeMap<Event, f64>,
        default: Option<f64>,
    },
    /// A single prior and an interval of weights per event.
    WeightSegment {
        weights: BTreeMap<Event, (f64, f64)>,
        default: Option<(f64, f64)>,
    },
    /// Stored posterior sets.
    Explicit(BTreeMap<Event, BeliefSet>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct MultiPriorModel {
    utility: Utility,
    priors: BeliefSet,
    rule: PosteriorRule,
}

impl MultiPriorModel {
    pub fn new(utility: Utility, priors: BeliefSet, rule: PosteriorRule) -> Result<Self> {
        let dim = priors.dim();
        let check_event = |a: &Event| -> Result<()> {
            if a.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: a.dim(),
                });
            }
            Ok(())
        };
        match &rule {
            PosteriorRule::HullMix => {}
            PosteriorRule::MinkowskiMix { deltas, default } => {
                for (a, &d) in deltas {
                    check_event(a)?;
                    check_unit(d)?;
                }
                if let Some(d) = default {
                    check_unit(*d)?;
                }
            }
            PosteriorRule::WeightSegment { weights, default } => {
                if priors.len() != 1 {
                    return Err(Error::InvalidRule(
                        "weight segments need a single prior".into(),
                    ));
                }
                for (a, &(lo, hi)) in weights
                    .iter()
                    .map(|(a, w)| (Some(a), w))
                    .chain(default.iter().map(|w| (None, w)))
                {
                    if let Some(a) = a {
                        check_event(a)?;
                    }
                    check_unit(lo)?;
                    check_unit(hi)?;
                    if lo > hi {
                        return Err(Error::InvalidRule(format!(
                            "weight interval [{lo}, {hi}] is empty"
                        )));
                    }
                }
            }
            PosteriorRule::Explicit(sets) => {
                for (a, s) in sets {
                    check_event(a)?;
                    if s.dim() != dim {
                        return Err(Error::DimensionMismatch {
                            expected: dim,
                            got: s.dim(),
                        });
                    }
                }
            }
        }
        Ok(Self {
            utility,
            priors,
            rule,
        })
    }

    pub fn utility(&self) -> &Utility {
        &self.utility
    }

    pub fn priors(&self) -> &BeliefSet {
        &self.priors
    }

    pub fn rule(&self) -> &PosteriorRule {
        &self.rule
    }

    /// Posterior set after `a`; the sure event returns the prior set.
    pub fn posterior_set(&self, a: &Event) -> Result<BeliefSet> {
        if a.is_full() {
            return Ok(self.priors.clone());
        }
        require_nonnull(&self.priors, a)?;
        match &self.rule {
            PosteriorRule::HullMix => hull_mix(&self.priors, a),
            PosteriorRule::MinkowskiMix { deltas, default } => {
                let d = deltas
                    .get(a)
                    .copied()
                    .or(*default)
                    .ok_or(Error::MissingDelta(*a))?;
                minkowski_mix(&self.priors, a, d)
            }
            PosteriorRule::WeightSegment { weights, default } => {
                let (lo, hi) = weights
                    .get(a)
                    .copied()
                    .or(*default)
                    .ok_or(Error::MissingDelta(*a))?;
                weight_segment(&self.priors.extremes[0], a, lo, hi)
            }
            PosteriorRule::Explicit(sets) => sets.get(a).cloned().ok_or(Error::MissingDelta(*a)),
        }
    }
}

impl WeakPreference for MultiPriorModel {
    fn weakly(&self, f: &Act, g: &Act, a: &Event) -> Result<bool> {
        unanimity_prefers(&self.posterior_set(a)?, &self.utility, f, g)
    }
}

impl Auditor {
    /// Dynamic conservatism for unanimity preferences: `f >=* g` and
    /// `fAg >=* g` imply `f >=*_A g`, strictly when both premises are strict.
    pub fn unambiguous_conservatism(
        &self,
        model: &MultiPriorModel,
        a: &Event,
    ) -> Result<AuditReport> {
        let dim = model.priors.dim();
        if self.grid().dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: self.grid().dim(),
            });
        }
        self.grid().check_utility(&model.utility)?;
        require_nonnull(&model.priors, a)?;
        let post = model.posterior_set(a)?;
        let u = &model.utility;
        let acts = self.acts();
        let table = |probs: Vec<Vec<f64>>| -> Vec<Vec<f64>> {
            acts.iter()
                .map(|f| probs.iter().map(|p| eu(f.outcomes(), p, u)).collect())
                .collect()
        };
        let priors: Vec<Vec<f64>> = model
            .priors
            .extremes
            .iter()
            .map(|b| b.probs().to_vec())
            .collect();
        let inside: Vec<Vec<f64>> = priors
            .iter()
            .map(|p| {
                p.iter()
                    .enumerate()
                    .map(|(s, &x)| if a.contains(s) { x } else { 0.0 })
                    .collect()
            })
            .collect();
        let posts: Vec<Vec<f64>> = post.extremes.iter().map(|b| b.probs().to_vec()).collect();
        let (ex_ante, spliced, cond) = (table(priors), table(inside), table(posts));

        // (all >= -eps, some > eps) of row i minus row j
        let compare = |t: &Vec<Vec<f64>>, i: usize, j: usize| -> (bool, bool, bool) {
            let mut weak = true;
            let mut some_strict = false;
            let mut reverse_weak = true;
            for (x, y) in t[i].iter().zip(&t[j]) {
                let d = x - y;
                weak &= d >= -EPS_CMP;
                some_strict |= d > EPS_CMP;
                reverse_weak &= -d >= -EPS_CMP;
            }
            (weak, weak && !reverse_weak && some_strict, reverse_weak)
        };
        const WEAK: u8 = 0;
        const STRICT: u8 = 1;
        let hits = self.ordered_pairs(|i, j| {
            let (w0, s0, _) = compare(&ex_ante, i, j);
            let (w1, s1, _) = compare(&spliced, i, j);
            if !(w0 && w1) {
                return None;
            }
            let (wc, sc, _) = compare(&cond, i, j);
            if !wc {
                Some(WEAK)
            } else if s0 && s1 && !sc {
                Some(STRICT)
            } else {
                None
            }
        });
        let n = acts.len() as u64;
        let s = Event::full(dim);
        Ok(self.finish(
            Axiom::UnambiguousConservatism,
            n * n,
            hits,
            |&(i, j, kind)| {
                let (f, g) = (&acts[i], &acts[j]);
                let fag = f.splice(a, g).expect("grid acts share the event dimension");
                let statements = if kind == WEAK {
                    vec![
                        Statement::new(f, Relation::Weak, g, s),
                        Statement::new(&fag, Relation::Weak, g, s),
                        Statement::new(f, Relation::NotWeak, g, *a),
                    ]
                } else {
                    vec![
                        Statement::new(f, Relation::Strict, g, s),
                        Statement::new(&fag, Relation::Strict, g, s),
                        Statement::new(g, Relation::Weak, f, *a),
                    ]
                };
                Violation {
                    axiom: Axiom::UnambiguousConservatism,
                    events: vec![("A", *a)],
                    statements,
                    witness: vec![("f", f.clone()), ("g", g.clone()), ("fAg", fag)],
                }
            },
        ))
    }
}

pub fn audit_wuc(model: &MultiPriorModel, a: &Event, grid: &ActGrid) -> Result<Vec<Violation>> {
    Ok(Auditor::new(grid.clone())
        .unambiguous_conservatism(model, a)?
        .violations)
}

#[cfg(test)]
mod tests {
    use super::*;

    // states: (R,r), (B,r), (R,b), (B,b)
    fn table2() -> BeliefSet {
        BeliefSet::new(vec![
            Belief::new(vec![0.4, 0.1, 0.2, 0.3]).unwrap(),
            Belief::new(vec![0.3, 0.2, 0.3, 0.2]).unwrap(),
        ])
        .unwrap()
    }

    fn r() -> Event {
        Event::from_indices(4, [0, 1]).unwrap()
    }

    fn big_r() -> Event {
        Event::from_indices(4, [0, 2]).unwrap()
    }

    fn linear() -> Utility {
        Utility::linear(0.0, 1.0).unwrap()
    }

    fn bet() -> Act {
        Act::new(vec![1.0, 0.0, 1.0, 0.0])
    }

    fn r_marginals(set: &BeliefSet) -> Vec<f64> {
        let mut v: Vec<f64> = set
            .extremes()
            .iter()
            .map(|b| b.event_prob(&big_r()).unwrap())
            .collect();
        v.sort_by(f64::total_cmp);
        v
    }

    #[test]
    fn unanimity_examples() {
        let u = linear();
        let f = Act::new(vec![0.5, 0.6, 0.7, 0.8]);
        let g = Act::new(vec![0.5, 0.5, 0.5, 0.5]);
        assert!(unanimity_prefers(&table2(), &u, &f, &g).unwrap());
        assert!(unanimity_prefers(&table2(), &u, &bet(), &Act::constant(0.59, 4)).unwrap());
        assert!(!unanimity_prefers(&table2(), &u, &bet(), &Act::constant(0.61, 4)).unwrap());
    }

    #[test]
    fn nonnull_examples() {
        assert!(unambiguously_nonnull(&table2(), &Event::full(4)).unwrap());
        assert!(unambiguously_nonnull(&table2(), &r()).unwrap());
        let m = BeliefSet::new(vec![
            Belief::new(vec![0.5, 0.5, 0.0]).unwrap(),
            Belief::new(vec![0.2, 0.3, 0.5]).unwrap(),
        ])
        .unwrap();
        let a = Event::from_indices(3, [2]).unwrap();
        assert!(!unambiguously_nonnull(&m, &a).unwrap());
        assert_eq!(set_bayes_update(&m, &a), Err(Error::AmbiguouslyNull(a)));
        assert_eq!(hull_mix(&m, &a), Err(Error::AmbiguouslyNull(a)));
        assert_eq!(minkowski_mix(&m, &a, 0.5), Err(Error::AmbiguouslyNull(a)));
    }

    #[test]
    fn set_bayes_update_examples() {
        let mu = Belief::new(vec![0.5, 0.125, 0.125, 0.25]).unwrap();
        let single = set_bayes_update(&BeliefSet::singleton(mu.clone()), &r()).unwrap();
        assert_eq!(single.extremes(), &[mu.bayes_update(&r()).unwrap()]);

        let post = set_bayes_update(&table2(), &r()).unwrap();
        let m = r_marginals(&post);
        assert!((m[0] - 0.6).abs() < 1e-12 && (m[1] - 0.8).abs() < 1e-12);

        let same = set_bayes_update(&table2(), &Event::full(4)).unwrap();
        assert!(contains(&same, &table2()).unwrap() && contains(&table2(), &same).unwrap());
    }

    #[test]
    fn hull_mix_examples() {
        let mu = Belief::new(vec![0.5, 0.125, 0.125, 0.25]).unwrap();
        let single = BeliefSet::singleton(mu.clone());
        assert_eq!(hull_mix(&single, &Event::full(4)).unwrap(), single);

        let seg = hull_mix(&single, &r()).unwrap();
        assert_eq!(seg.len(), 2);
        let m = r_marginals(&seg);
        assert!((m[0] - 0.625).abs() < 1e-12 && (m[1] - 0.8).abs() < 1e-12);

        let h = hull_mix(&table2(), &r()).unwrap();
        assert_eq!(h.len(), 4);
    }

    #[test]
    fn minkowski_examples() {
        let m = table2();
        let at0 = minkowski_mix(&m, &r(), 0.0).unwrap();
        let bayes = set_bayes_update(&m, &r()).unwrap();
        assert!(contains(&at0, &bayes).unwrap() && contains(&bayes, &at0).unwrap());
        let at1 = minkowski_mix(&m, &r(), 1.0).unwrap();
        assert!(contains(&at1, &m).unwrap() && contains(&m, &at1).unwrap());

        for k in 0..=10 {
            let d = k as f64 / 10.0;
            let set = minkowski_mix(&m, &r(), d).unwrap();
            let (lo, hi) = set.prob_range(&big_r()).unwrap();
            assert!((hi - (4.0 - d) / 5.0).abs() < 1e-12, "d = {d}");
            assert!((lo - 0.6).abs() < 1e-12);
        }
        assert!(minkowski_mix(&m, &r(), 1.2).is_err());
    }

    #[test]
    fn weight_segment_examples() {
        let mu = Belief::new(vec![0.5, 0.125, 0.125, 0.25]).unwrap();
        let s = weight_segment(&mu, &r(), 0.0, 0.0).unwrap();
        assert_eq!(s.extremes(), &[mu.bayes_update(&r()).unwrap()]);
        let s = weight_segment(&mu, &r(), 0.0, 1.0).unwrap();
        let m = r_marginals(&s);
        assert!((m[0] - 0.625).abs() < 1e-12 && (m[1] - 0.8).abs() < 1e-12);
        let s = weight_segment(&mu, &r(), 0.25, 0.75).unwrap();
        let m = r_marginals(&s);
        assert!((m[0] - 0.66875).abs() < 1e-12 && (m[1] - 0.75625).abs() < 1e-12);
        assert!(weight_segment(&mu, &r(), 0.8, 0.2).is_err());
        let null = Event::empty(4);
        assert_eq!(
            weight_segment(&mu, &null, 0.0, 1.0),
            Err(Error::NullEvent(null))
        );
    }

    #[test]
    fn containment_examples() {
        let m = table2();
        assert!(contains(&m, &m).unwrap());
        let h = hull_mix(&m, &r()).unwrap();
        for k in 0..=4 {
            let mk = minkowski_mix(&m, &r(), k as f64 / 4.0).unwrap();
            assert!(contains(&h, &mk).unwrap());
        }
        // marginal on R of 0.9 is beyond every generator's 0.8
        let outside = BeliefSet::singleton(Belief::new(vec![0.9, 0.1, 0.0, 0.0]).unwrap());
        assert!(!contains(&h, &outside).unwrap());
    }

    #[test]
    fn canonical_drops_interior_points() {
        let a = Belief::new(vec![1.0, 0.0, 0.0]).unwrap();
        let b = Belief::new(vec![0.0, 1.0, 0.0]).unwrap();
        let mid = a.mix(&b, 0.3).unwrap();
        let set = BeliefSet::canonical(vec![a.clone(), mid, b.clone()]).unwrap();
        assert_eq!(set.extremes(), &[a.clone(), b]);
        assert_eq!(BeliefSet::new(vec![]), Err(Error::EmptyBeliefSet));
        let dup = BeliefSet::new(vec![a.clone(), a]).unwrap();
        assert_eq!(dup.len(), 1);
    }

    #[test]
    fn alpha_meu_examples() {
        let u = linear();
        let b = Event::from_indices(4, [2, 3]).unwrap();
        let at0 = minkowski_mix(&table2(), &r(), 0.0).unwrap();
        assert!((alpha_meu_value(&at0, &u, &bet(), 1.0).unwrap() - 0.6).abs() < 1e-12);
        assert!((alpha_meu_value(&at0, &u, &bet(), 0.0).unwrap() - 0.8).abs() < 1e-12);
        let half_b = minkowski_mix(&table2(), &b, 0.5).unwrap();
        assert!((alpha_meu_value(&half_b, &u, &bet(), 1.0).unwrap() - 0.5).abs() < 1e-12);
        assert!(
            (alpha_meu_value_labeled(&half_b, &u, &bet(), 0.0, AlphaLabel::Optimism).unwrap()
                - 0.5)
                .abs()
                < 1e-12
        );
        assert!(alpha_meu_value(&at0, &u, &bet(), 1.5).is_err());
    }

    #[test]
    fn model_rules() {
        let mut deltas = BTreeMap::new();
        deltas.insert(r(), 0.5);
        let model = MultiPriorModel::new(
            linear(),
            table2(),
            PosteriorRule::MinkowskiMix {
                deltas,
                default: None,
            },
        )
        .unwrap();
        let post = model.posterior_set(&r()).unwrap();
        let (lo, hi) = post.prob_range(&big_r()).unwrap();
        assert!((lo - 0.6).abs() < 1e-12 && (hi - 0.7).abs() < 1e-12);
        assert_eq!(model.posterior_set(&Event::full(4)).unwrap(), table2());
        let b = r().complement();
        assert_eq!(model.posterior_set(&b), Err(Error::MissingDelta(b)));

        let seg = PosteriorRule::WeightSegment {
            weights: BTreeMap::new(),
            default: Some((0.0, 1.0)),
        };
        assert!(matches!(
            MultiPriorModel::new(linear(), table2(), seg),
            Err(Error::InvalidRule(_))
        ));
    }
}
