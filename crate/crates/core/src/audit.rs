//! Brute-force axiom audits over finite act grids.
//!
//! Each audit enumerates acts from an [`ActGrid`] and reports every witness
//! against an axiom as a [`Violation`]: a list of preference statements that
//! all hold under the audited preferences and jointly contradict the axiom.
//! Premises use the `EPS_CMP` band; a conclusion only counts as failed when
//! it misses by more than `EPS_CMP`.
//!
//! Violations are ordered by the grid position of their witness acts, so
//! reports do not depend on how the pair enumeration is scheduled.

use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::acts::{eu, Act, Comparison, ConditionalSeu, Utility};
use crate::belief::{Belief, Event};
use crate::error::{Error, Result};
use crate::EPS_CMP;

/// Grids with at most this many acts are enumerated exhaustively.
pub const DEFAULT_CAP: usize = 625;

/// All acts taking values in `levels`, or a seeded subsample when there
/// are more than `cap` of them.
#[derive(Debug, Clone, PartialEq)]
pub struct ActGrid {
    levels: Vec<f64>,
    dim: usize,
    cap: Option<usize>,
    seed: u64,
}

/// How much of the grid an enumeration covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Coverage {
    pub enumerated: u64,
    /// `None` when `levels^dim` overflows.
    pub total: Option<u64>,
}

impl Coverage {
    pub fn is_exhaustive(&self) -> bool {
        self.total == Some(self.enumerated)
    }
}

impl ActGrid {
    /// Levels must be finite and strictly ascending.
    pub fn new(levels: Vec<f64>, dim: usize) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::InvalidGrid("no levels".into()));
        }
        if levels.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidGrid("levels must be finite".into()));
        }
        if levels.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidGrid(
                "levels must be strictly ascending".into(),
            ));
        }
        if dim == 0 {
            return Err(Error::InvalidGrid("dimension must be positive".into()));
        }
        Ok(Self {
            levels,
            dim,
            cap: Some(DEFAULT_CAP),
            seed: 0,
        })
    }

    /// `n` evenly spaced levels spanning the utility's domain.
    pub fn spanning(u: &Utility, n: usize, dim: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGrid("need at least two levels".into()));
        }
        let (lo, hi) = u.domain();
        let levels = (0..n)
            .map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
            .collect();
        Self::new(levels, dim)
    }

    /// `None` enumerates everything regardless of size.
    pub fn with_cap(mut self, cap: Option<usize>, seed: u64) -> Self {
        self.cap = cap;
        self.seed = seed;
        self
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn cap(&self) -> Option<usize> {
        self.cap
    }

    pub fn total(&self) -> Option<u64> {
        (self.levels.len() as u64).checked_pow(self.dim as u32)
    }

    pub fn check_utility(&self, u: &Utility) -> Result<()> {
        self.levels.iter().try_for_each(|&x| u.check_outcome(x))
    }

    fn indices(&self) -> Vec<u64> {
        match (self.total(), self.cap) {
            (Some(total), None) => (0..total).collect(),
            (Some(total), Some(cap)) if total <= cap as u64 => (0..total).collect(),
            (total, cap) => {
                let cap = cap.unwrap_or(DEFAULT_CAP);
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                let mut seen = HashSet::with_capacity(cap);
                let bound = total.unwrap_or(u64::MAX);
                while seen.len() < cap {
                    seen.insert(rng.gen_range(0..bound));
                }
                let mut picked: Vec<u64> = seen.into_iter().collect();
                picked.sort_unstable();
                picked
            }
        }
    }

    // State 0 is the most significant digit, so index order is
    // lexicographic order of outcome vectors.
    fn decode(&self, mut index: u64) -> Act {
        let base = self.levels.len() as u64;
        let mut out = vec![0.0; self.dim];
        for slot in out.iter_mut().rev() {
            *slot = self.levels[(index % base) as usize];
            index /= base;
        }
        Act::new(out)
    }

    /// The enumerated acts in lexicographic order.
    pub fn acts(&self) -> Vec<Act> {
        self.indices().into_iter().map(|i| self.decode(i)).collect()
    }

    pub fn coverage(&self) -> Coverage {
        Coverage {
            enumerated: self.indices().len() as u64,
            total: self.total(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    DynamicConsistency,
    Consequentialism,
    DynamicConservatism,
    WeakConsequentialism,
    ConfirmationBias,
    UnambiguousConservatism,
}

impl Axiom {
    pub const ALL: [Axiom; 6] = [
        Axiom::DynamicConsistency,
        Axiom::Consequentialism,
        Axiom::DynamicConservatism,
        Axiom::WeakConsequentialism,
        Axiom::ConfirmationBias,
        Axiom::UnambiguousConservatism,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Axiom::DynamicConsistency => "dc",
            Axiom::Consequentialism => "c",
            Axiom::DynamicConservatism => "dom-c",
            Axiom::WeakConsequentialism => "wc",
            Axiom::ConfirmationBias => "gcb",
            Axiom::UnambiguousConservatism => "wuc",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|a| a.id() == id)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `left` weakly preferred to `right`.
    Weak,
    /// `left` strictly preferred to `right`.
    Strict,
    Indifferent,
    /// `left` is not weakly preferred to `right`.
    NotWeak,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Weak => ">=",
            Relation::Strict => ">",
            Relation::Indifferent => "~",
            Relation::NotWeak => "!>=",
        }
    }
}

/// Something a conditional preference family evaluates to true or false.
pub trait WeakPreference {
    /// Whether `f` is weakly preferred to `g` after `a`.
    fn weakly(&self, f: &Act, g: &Act, a: &Event) -> Result<bool>;
}

impl<T: ConditionalSeu> WeakPreference for T {
    fn weakly(&self, f: &Act, g: &Act, a: &Event) -> Result<bool> {
        self.weakly_prefers(f, g, a)
    }
}

/// `left <relation> right` conditional on `given`.
#[derive(Debug, Clone, PartialEq)]
pub struct Statement {
    pub left: Act,
    pub right: Act,
    pub given: Event,
    pub relation: Relation,
}

impl Statement {
    pub fn new(left: &Act, relation: Relation, right: &Act, given: Event) -> Self {
        Self {
            left: left.clone(),
            right: right.clone(),
            given,
            relation,
        }
    }

    pub fn holds<P: WeakPreference + ?Sized>(&self, prefs: &P) -> Result<bool> {
        let lr = prefs.weakly(&self.left, &self.right, &self.given)?;
        Ok(match self.relation {
            Relation::Weak => lr,
            Relation::NotWeak => !lr,
            Relation::Strict => lr && !prefs.weakly(&self.right, &self.left, &self.given)?,
            Relation::Indifferent => lr && prefs.weakly(&self.right, &self.left, &self.given)?,
        })
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}|{} {}",
            fmt_act(&self.left),
            self.relation.symbol(),
            self.given,
            fmt_act(&self.right)
        )
    }
}

pub fn fmt_act(a: &Act) -> String {
    let parts: Vec<String> = a.outcomes().iter().map(|x| format!("{x}")).collect();
    format!("[{}]", parts.join(","))
}

/// A witness against an axiom.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub axiom: Axiom,
    pub events: Vec<(&'static str, Event)>,
    pub witness: Vec<(&'static str, Act)>,
    pub statements: Vec<Statement>,
}

impl Violation {
    /// Re-evaluates every statement; true when the conflict reproduces.
    pub fn replay<P: WeakPreference + ?Sized>(&self, prefs: &P) -> Result<bool> {
        for s in &self.statements {
            if !s.holds(prefs)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Outcome of one audit run.
#[derive(Debug, Clone, PartialEq)]
pub struct AuditReport {
    pub axiom: Axiom,
    pub coverage: Coverage,
    /// Number of act tuples examined.
    pub checked: u64,
    /// Number of violations found, including any not materialized.
    pub found: u64,
    pub violations: Vec<Violation>,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.found == 0
    }
}

/// Runs audits on one grid, optionally materializing only the first
/// `limit` violations.
#[derive(Debug, Clone)]
pub struct Auditor {
    grid: ActGrid,
    acts: Vec<Act>,
    limit: Option<usize>,
}

// Per-act expected utilities for one conditioning event.
struct Profile {
    prior: Vec<f64>,
    inside: Vec<f64>,
    post: Vec<f64>,
}

impl Auditor {
    pub fn new(grid: ActGrid) -> Self {
        let acts = grid.acts();
        Self {
            grid,
            acts,
            limit: None,
        }
    }

    pub fn with_limit(mut self, limit: Option<usize>) -> Self {
        self.limit = limit;
        self
    }

    pub fn grid(&self) -> &ActGrid {
        &self.grid
    }

    pub fn acts(&self) -> &[Act] {
        &self.acts
    }

    pub(crate) fn check<M: ConditionalSeu + ?Sized>(&self, model: &M) -> Result<()> {
        if self.grid.dim() != model.dim() {
            return Err(Error::DimensionMismatch {
                expected: model.dim(),
                got: self.grid.dim(),
            });
        }
        self.grid.check_utility(model.utility())
    }

    fn profile<M: ConditionalSeu + ?Sized>(&self, model: &M, a: &Event) -> Result<Profile> {
        let prior = model.prior();
        if prior.event_prob(a)? <= 0.0 {
            return Err(Error::NullEvent(*a));
        }
        let post = model.posterior(a)?;
        let u = model.utility();
        let inside_probs: Vec<f64> = prior
            .probs()
            .iter()
            .enumerate()
            .map(|(s, &p)| if a.contains(s) { p } else { 0.0 })
            .collect();
        let eval = |probs: &[f64]| -> Vec<f64> {
            self.acts
                .iter()
                .map(|f| eu(f.outcomes(), probs, u))
                .collect()
        };
        Ok(Profile {
            prior: eval(prior.probs()),
            inside: eval(&inside_probs),
            post: eval(post.probs()),
        })
    }

    pub(crate) fn finish<T, F>(
        &self,
        axiom: Axiom,
        checked: u64,
        mut hits: Vec<T>,
        build: F,
    ) -> AuditReport
    where
        T: Ord,
        F: Fn(&T) -> Violation,
    {
        hits.sort_unstable();
        let found = hits.len() as u64;
        let take = self.limit.unwrap_or(usize::MAX).min(hits.len());
        AuditReport {
            axiom,
            coverage: self.grid.coverage(),
            checked,
            found,
            violations: hits[..take].iter().map(build).collect(),
        }
    }

    pub(crate) fn ordered_pairs<F>(&self, test: F) -> Vec<(usize, usize, u8)>
    where
        F: Fn(usize, usize) -> Option<u8> + Sync,
    {
        let n = self.acts.len();
        (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let test = &test;
                (0..n).filter_map(move |j| test(i, j).map(|k| (i, j, k)))
            })
            .collect()
    }

    /// Dynamic consistency: `fAg >= g` must imply `f >=_A g`.
    pub fn dynamic_consistency<M>(&self, model: &M, a: &Event) -> Result<AuditReport>
    where
        M: ConditionalSeu + ?Sized + Sync,
    {
        self.check(model)?;
        let p = self.profile(model, a)?;
        let hits = self.ordered_pairs(|i, j| {
            let spliced_ok = p.inside[i] - p.inside[j] >= -EPS_CMP;
            (spliced_ok && p.post[j] > p.post[i] + EPS_CMP).then_some(0)
        });
        let n = self.acts.len() as u64;
        let s = Event::full(a.dim());
        Ok(
            self.finish(Axiom::DynamicConsistency, n * n, hits, |&(i, j, _)| {
                let (f, g) = (&self.acts[i], &self.acts[j]);
                let fag = f.splice(a, g).expect("grid acts share the event dimension");
                Violation {
                    axiom: Axiom::DynamicConsistency,
                    events: vec![("A", *a)],
                    statements: vec![
                        Statement::new(&fag, Relation::Weak, g, s),
                        Statement::new(g, Relation::Strict, f, *a),
                    ],
                    witness: vec![("f", f.clone()), ("g", g.clone()), ("fAg", fag)],
                }
            }),
        )
    }

    /// Consequentialism: acts that agree on `A` must be indifferent after `A`.
    pub fn consequentialism<M>(&self, model: &M, a: &Event) -> Result<AuditReport>
    where
        M: ConditionalSeu + ?Sized + Sync,
    {
        self.check(model)?;
        let p = self.profile(model, a)?;
        let mut checked = 0u64;
        let mut hits = Vec::new();
        // group acts by their restriction to A
        let mut groups: std::collections::BTreeMap<Vec<u64>, Vec<usize>> = Default::default();
        for (i, f) in self.acts.iter().enumerate() {
            let key = a.members().map(|s| f.get(s).to_bits()).collect();
            groups.entry(key).or_default().push(i);
        }
        for members in groups.values() {
            for &i in members {
                for &j in members {
                    if i == j {
                        continue;
                    }
                    checked += 1;
                    if p.post[i] > p.post[j] + EPS_CMP {
                        hits.push((i, j));
                    }
                }
            }
        }
        Ok(
            self.finish(Axiom::Consequentialism, checked, hits, |&(i, j)| {
                let (f, g) = (&self.acts[i], &self.acts[j]);
                Violation {
                    axiom: Axiom::Consequentialism,
                    events: vec![("A", *a)],
                    statements: vec![Statement::new(f, Relation::Strict, g, *a)],
                    witness: vec![("f", f.clone()), ("g", g.clone())],
                }
            }),
        )
    }

    /// Dynamic conservatism: `f >= g` and `fAg >= g` imply `f >=_A g`, and
    /// strict premises imply a strict conclusion.
    pub fn dynamic_conservatism<M>(&self, model: &M, a: &Event) -> Result<AuditReport>
    where
        M: ConditionalSeu + ?Sized + Sync,
    {
        self.check(model)?;
        let p = self.profile(model, a)?;
        const WEAK: u8 = 0;
        const STRICT: u8 = 1;
        let hits = self.ordered_pairs(|i, j| {
            let ex_ante = p.prior[i] - p.prior[j];
            let spliced = p.inside[i] - p.inside[j];
            let cond = p.post[i] - p.post[j];
            if ex_ante >= -EPS_CMP && spliced >= -EPS_CMP && cond < -EPS_CMP {
                Some(WEAK)
            } else if ex_ante > EPS_CMP && spliced > EPS_CMP && cond <= EPS_CMP {
                Some(STRICT)
            } else {
                None
            }
        });
        let n = self.acts.len() as u64;
        let s = Event::full(a.dim());
        Ok(
            self.finish(Axiom::DynamicConservatism, n * n, hits, |&(i, j, kind)| {
                let (f, g) = (&self.acts[i], &self.acts[j]);
                let fag = f.splice(a, g).expect("grid acts share the event dimension");
                let statements = if kind == WEAK {
                    vec![
                        Statement::new(f, Relation::Weak, g, s),
                        Statement::new(&fag, Relation::Weak, g, s),
                        Statement::new(g, Relation::Strict, f, *a),
                    ]
                } else {
                    vec![
                        Statement::new(f, Relation::Strict, g, s),
                        Statement::new(&fag, Relation::Strict, g, s),
                        Statement::new(g, Relation::Weak, f, *a),
                    ]
                };
                Violation {
                    axiom: Axiom::DynamicConservatism,
                    events: vec![("A", *a)],
                    statements,
                    witness: vec![("f", f.clone()), ("g", g.clone()), ("fAg", fag)],
                }
            }),
        )
    }

    // Bets `xCy`: grid values on C, one grid level off C.
    fn bets_on(&self, c: &Event) -> Vec<Act> {
        let levels = self.grid.levels();
        let k = c.len() as u32;
        let on_c = ActGrid::new(levels.to_vec(), c.len())
            .expect("grid levels already validated")
            .with_cap(None, 0);
        let mut out = Vec::with_capacity(levels.len().pow(k) * levels.len());
        for inner in on_c.acts() {
            for &y in levels {
                let mut x = vec![y; self.grid.dim()];
                for (slot, s) in c.members().enumerate() {
                    x[s] = inner.get(slot);
                }
                out.push(Act::new(x));
            }
        }
        out
    }

    // (A, B, C) with A, B, C non-null, C disjoint from A and B, and A != B.
    fn triples<M: ConditionalSeu + ?Sized>(
        &self,
        model: &M,
        ordered: bool,
    ) -> Vec<(Event, Event, Event)> {
        let events = model.events();
        let prior = model.prior();
        let nonnull = |e: &Event| prior.event_prob(e).map(|p| p > 0.0).unwrap_or(false);
        let mut out = Vec::new();
        for (ia, a) in events.iter().enumerate() {
            for (ib, b) in events.iter().enumerate() {
                if ia == ib || (!ordered && ib < ia) {
                    continue;
                }
                let ab = a.union(b).expect("model events share a dimension");
                let free = ab.complement();
                for c in Event::power_set(a.dim()) {
                    if c.is_empty() || c.mask() & !free.mask() != 0 || !nonnull(&c) {
                        continue;
                    }
                    out.push((*a, *b, c));
                }
            }
        }
        out
    }

    /// Weak consequentialism: for `C` disjoint from `A` and `B`,
    /// `fCy >=_A z` iff `fCy >=_B z`.
    ///
    /// `f` ranges over grid values on `C`, `y` and `z` over constants. A
    /// failure for some constant `z` exists exactly when the two conditional
    /// values of `fCy` differ; the reported `z` is the certainty equivalent
    /// of the larger one.
    pub fn weak_consequentialism<M>(&self, model: &M) -> Result<AuditReport>
    where
        M: ConditionalSeu + ?Sized + Sync,
    {
        self.check(model)?;
        let u = model.utility();
        let mut checked = 0u64;
        let mut hits = Vec::new();
        for (a, b, c) in self.triples(model, false) {
            let pa = model.posterior(&a)?;
            let pb = model.posterior(&b)?;
            for bet in self.bets_on(&c) {
                checked += 1;
                let va = eu(bet.outcomes(), pa.probs(), u);
                let vb = eu(bet.outcomes(), pb.probs(), u);
                if (va - vb).abs() > EPS_CMP {
                    let (hi_ev, lo_ev, hi_v) = if va > vb { (a, b, va) } else { (b, a, vb) };
                    hits.push(BetHit {
                        events: (a, b, c),
                        bet,
                        high: hi_ev,
                        low: lo_ev,
                        z: u.inverse(hi_v)?,
                        extra: None,
                    });
                }
            }
        }
        let dim = model.dim();
        Ok(
            self.finish(Axiom::WeakConsequentialism, checked, hits, |h| {
                let z = Act::constant(h.z, dim);
                Violation {
                    axiom: Axiom::WeakConsequentialism,
                    events: vec![("A", h.events.0), ("B", h.events.1), ("C", h.events.2)],
                    statements: vec![
                        Statement::new(&h.bet, Relation::Weak, &z, h.high),
                        Statement::new(&z, Relation::Strict, &h.bet, h.low),
                    ],
                    witness: vec![("fCy", h.bet.clone()), ("z", z.clone())],
                }
            }),
        )
    }

    /// Generalized confirmation bias: for `A` at least as likely as `B`,
    /// `x > y`, and `C` disjoint from both, `xCy >=_A z` implies
    /// `xCy >=_B z`. Bets on `C` look no better after the likelier event.
    ///
    /// As with [`Auditor::weak_consequentialism`], `z` is the certainty
    /// equivalent that separates the two conditional values.
    pub fn confirmation_bias<M>(&self, model: &M) -> Result<AuditReport>
    where
        M: ConditionalSeu + ?Sized + Sync,
    {
        self.check(model)?;
        let u = model.utility();
        let prior = model.prior();
        let levels = self.grid.levels();
        let dim = model.dim();
        let mut checked = 0u64;
        let mut hits = Vec::new();
        for (a, b, c) in self.triples(model, true) {
            if likelihood_of(prior, &a, &b)? == Comparison::Second {
                continue;
            }
            let pa = model.posterior(&a)?;
            let pb = model.posterior(&b)?;
            for (iy, &y) in levels.iter().enumerate() {
                for &x in &levels[iy + 1..] {
                    checked += 1;
                    let bet = Act::constant(x, dim).splice(&c, &Act::constant(y, dim))?;
                    let va = eu(bet.outcomes(), pa.probs(), u);
                    let vb = eu(bet.outcomes(), pb.probs(), u);
                    if va > vb + EPS_CMP {
                        hits.push(BetHit {
                            events: (a, b, c),
                            bet,
                            high: a,
                            low: b,
                            z: u.inverse(va)?,
                            extra: Some((x.to_bits(), y.to_bits())),
                        });
                    }
                }
            }
        }
        Ok(self.finish(Axiom::ConfirmationBias, checked, hits, |h| {
            let (x, y) = h.extra.expect("confirmation-bias hits carry x and y");
            let (x, y) = (
                Act::constant(f64::from_bits(x), dim),
                Act::constant(f64::from_bits(y), dim),
            );
            let z = Act::constant(h.z, dim);
            let (a, b, _) = h.events;
            let xay = x.splice(&a, &y).expect("same dimension");
            let xby = x.splice(&b, &y).expect("same dimension");
            let s = Event::full(dim);
            Violation {
                axiom: Axiom::ConfirmationBias,
                events: vec![("A", a), ("B", b), ("C", h.events.2)],
                statements: vec![
                    Statement::new(&x, Relation::Strict, &y, s),
                    Statement::new(&xay, Relation::Weak, &xby, s),
                    Statement::new(&h.bet, Relation::Weak, &z, a),
                    Statement::new(&z, Relation::Strict, &h.bet, b),
                ],
                witness: vec![("x", x), ("y", y), ("xCy", h.bet.clone()), ("z", z)],
            }
        }))
    }
}

#[derive(Debug, Clone, PartialEq)]
struct BetHit {
    events: (Event, Event, Event),
    bet: Act,
    high: Event,
    low: Event,
    z: f64,
    extra: Option<(u64, u64)>,
}

impl Eq for BetHit {}

impl PartialOrd for BetHit {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BetHit {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.events.cmp(&other.events).then_with(|| {
            self.bet
                .outcomes()
                .iter()
                .zip(other.bet.outcomes())
                .map(|(x, y)| x.total_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    }
}

fn likelihood_of(prior: &Belief, a: &Event, b: &Event) -> Result<Comparison> {
    Ok(Comparison::of(prior.event_prob(a)?, prior.event_prob(b)?))
}

/// Compares the prior probabilities of two events; `First` means `a` is
/// more likely. Under expected utility this agrees with the betting
/// definition: `a` is at least as likely as `b` when `xAy >= xBy` for
/// every `x > y`.
pub fn likelihood_order<M: ConditionalSeu + ?Sized>(
    model: &M,
    a: &Event,
    b: &Event,
) -> Result<Comparison> {
    likelihood_of(model.prior(), a, b)
}

pub fn audit_dc<M>(model: &M, a: &Event, grid: &ActGrid) -> Result<Vec<Violation>>
where
    M: ConditionalSeu + ?Sized + Sync,
{
    Ok(Auditor::new(grid.clone())
        .dynamic_consistency(model, a)?
        .violations)
}

pub fn audit_consequentialism<M>(model: &M, a: &Event, grid: &ActGrid) -> Result<Vec<Violation>>
where
    M: ConditionalSeu + ?Sized + Sync,
{
    Ok(Auditor::new(grid.clone())
        .consequentialism(model, a)?
        .violations)
}

pub fn audit_dom_c<M>(model: &M, a: &Event, grid: &ActGrid) -> Result<Vec<Violation>>
where
    M: ConditionalSeu + ?Sized + Sync,
{
    Ok(Auditor::new(grid.clone())
        .dynamic_conservatism(model, a)?
        .violations)
}

pub fn audit_wc<M>(model: &M, grid: &ActGrid) -> Result<Vec<Violation>>
where
    M: ConditionalSeu + ?Sized + Sync,
{
    Ok(Auditor::new(grid.clone())
        .weak_consequentialism(model)?
        .violations)
}

pub fn audit_gcb<M>(model: &M, grid: &ActGrid) -> Result<Vec<Violation>>
where
    M: ConditionalSeu + ?Sized + Sync,
{
    Ok(Auditor::new(grid.clone())
        .confirmation_bias(model)?
        .violations)
}
