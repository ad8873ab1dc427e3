//! Scenario files: a JSON description of states, tastes, beliefs, and the
//! named events and acts that commands refer to.
//!
//! ```json
//! {
//!   "states": ["Rr", "Br", "Rb", "Bb"],
//!   "outcomes": [0, 1],
//!   "utility": {"kind": "linear"},
//!   "prior": [0.5, 0.125, 0.125, 0.25],
//!   "delta": {"r": 0.5, "*": 0.25},
//!   "events": {"r": ["Rr", "Br"]},
//!   "acts": {"bet_R": [1, 0, 1, 0]},
//!   "grid": {"levels": [0, 0.25, 0.5, 0.75, 1], "cap": 625, "seed": 0}
//! }
//! ```
//!
//! Either `prior` (one belief) or `priors` (vertices of a belief set) is
//! required. `delta` maps event names to conservatism weights and
//! `weights` maps them to `[lo, hi]` weight intervals; the key `*` sets a
//! default for every other event. `rule` picks how a set of priors is
//! updated: `hull`, `minkowski`, or `segment`.

use std::collections::BTreeMap;

use conservative::audit::ActGrid;
use conservative::multiprior::{BeliefSet, MultiPriorModel, PosteriorRule};
use conservative::{Act, Belief, ConservativeSeuModel, Event, StateSpace, Utility};
use serde::{Deserialize, Serialize};

/// Key that sets the default entry of `delta` and `weights`.
pub const DEFAULT_KEY: &str = "*";

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum ScenarioError {
    #[error("malformed scenario at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid scenario field `{path}`: {message}")]
    Validation { path: String, message: String },
}

fn invalid(path: impl Into<String>, message: impl ToString) -> ScenarioError {
    ScenarioError::Validation {
        path: path.into(),
        message: message.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum UtilitySpec {
    #[default]
    Linear,
    Power {
        exponent: f64,
    },
    Piecewise {
        knots: Vec<[f64; 2]>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<f64>>,
    /// Evenly spaced levels across the outcome interval, when `levels` is absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleName {
    Hull,
    Minkowski,
    Segment,
}

/// The file as written, before names are resolved.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub states: Vec<String>,
    pub outcomes: [f64; 2],
    #[serde(default)]
    pub utility: UtilitySpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prior: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub priors: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub delta: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub weights: BTreeMap<String, [f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rule: Option<RuleName>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub events: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub acts: BTreeMap<String, Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridSpec>,
}

/// A validated scenario with every name resolved.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub space: StateSpace,
    pub utility: Utility,
    pub priors: BeliefSet,
    /// Set when the file gives a single `prior`.
    pub prior: Option<Belief>,
    pub deltas: BTreeMap<Event, f64>,
    pub default_delta: Option<f64>,
    pub weights: BTreeMap<Event, (f64, f64)>,
    pub default_weights: Option<(f64, f64)>,
    pub rule: Option<RuleName>,
    pub events: BTreeMap<String, Event>,
    pub acts: BTreeMap<String, Act>,
    pub grid: Option<ActGrid>,
    file: ScenarioFile,
}

pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let file: ScenarioFile = serde_json::from_str(text).map_err(|e| ScenarioError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Scenario::from_file(file)
}

impl Scenario {
    pub fn from_file(file: ScenarioFile) -> Result<Self, ScenarioError> {
        let space =
            StateSpace::new(file.states.iter().cloned()).map_err(|e| invalid("states", e))?;
        let dim = space.len();

        let [lo, hi] = file.outcomes;
        let utility = match &file.utility {
            UtilitySpec::Linear => Utility::linear(lo, hi),
            UtilitySpec::Power { exponent } => Utility::power(*exponent, lo, hi),
            UtilitySpec::Piecewise { knots } => {
                let u = Utility::piecewise_linear(knots.iter().map(|k| (k[0], k[1])).collect())
                    .map_err(|e| invalid("utility.knots", e))?;
                if u.domain() != (lo, hi) {
                    return Err(invalid(
                        "utility.knots",
                        format!("knots span {:?} but outcomes are [{lo}, {hi}]", u.domain()),
                    ));
                }
                Ok(u)
            }
        }
        .map_err(|e| invalid("utility", e))?;

        let belief = |path: String, probs: &[f64]| -> Result<Belief, ScenarioError> {
            if probs.len() != dim {
                return Err(invalid(
                    path,
                    format!("expected {dim} probabilities, got {}", probs.len()),
                ));
            }
            Belief::new(probs.to_vec()).map_err(|e| invalid(path, e))
        };
        let (prior, priors) = match (&file.prior, &file.priors) {
            (Some(p), None) => {
                let mu = belief("prior".into(), p)?;
                (Some(mu.clone()), BeliefSet::singleton(mu))
            }
            (None, Some(ps)) => {
                if ps.is_empty() {
                    return Err(invalid("priors", "needs at least one belief"));
                }
                let pts = ps
                    .iter()
                    .enumerate()
                    .map(|(i, p)| belief(format!("priors[{i}]"), p))
                    .collect::<Result<Vec<_>, _>>()?;
                (
                    None,
                    BeliefSet::canonical(pts).map_err(|e| invalid("priors", e))?,
                )
            }
            (Some(_), Some(_)) => {
                return Err(invalid(
                    "prior",
                    "give either `prior` or `priors`, not both",
                ))
            }
            (None, None) => return Err(invalid("prior", "missing; give `prior` or `priors`")),
        };

        let mut events = BTreeMap::new();
        for (name, labels) in &file.events {
            let path = format!("events.{name}");
            if name == DEFAULT_KEY || name.contains(',') || name.is_empty() {
                return Err(invalid(
                    path,
                    "event names must be nonempty and may not contain `,` or be `*`",
                ));
            }
            let ev = space
                .event(labels.iter().map(String::as_str))
                .map_err(|e| invalid(path, e))?;
            events.insert(name.clone(), ev);
        }

        let mut acts = BTreeMap::new();
        for (name, outcomes) in &file.acts {
            let path = format!("acts.{name}");
            let act = Act::new(outcomes.clone());
            act.check(dim, &utility).map_err(|e| invalid(path, e))?;
            acts.insert(name.clone(), act);
        }

        let resolve = |section: &str, name: &str| -> Result<Event, ScenarioError> {
            events
                .get(name)
                .copied()
                .ok_or_else(|| invalid(format!("{section}.{name}"), "no event with this name"))
        };
        let unit = |path: String, v: f64| -> Result<f64, ScenarioError> {
            if (0.0..=1.0).contains(&v) {
                Ok(v)
            } else {
                Err(invalid(path, format!("{v} is outside [0, 1]")))
            }
        };

        let mut deltas = BTreeMap::new();
        let mut default_delta = None;
        for (name, &d) in &file.delta {
            let path = format!("delta.{name}");
            let d = unit(path.clone(), d)?;
            if name == DEFAULT_KEY {
                default_delta = Some(d);
                continue;
            }
            let ev = resolve("delta", name)?;
            let (min_p, _) = priors.prob_range(&ev).map_err(|e| invalid(&path, e))?;
            if min_p <= 0.0 {
                return Err(invalid(
                    path,
                    "weights may only be given for non-null events",
                ));
            }
            deltas.insert(ev, d);
        }

        let mut weights = BTreeMap::new();
        let mut default_weights = None;
        for (name, &[w_lo, w_hi]) in &file.weights {
            let path = format!("weights.{name}");
            unit(path.clone(), w_lo)?;
            unit(path.clone(), w_hi)?;
            if w_lo > w_hi {
                return Err(invalid(path, format!("interval [{w_lo}, {w_hi}] is empty")));
            }
            if name == DEFAULT_KEY {
                default_weights = Some((w_lo, w_hi));
            } else {
                weights.insert(resolve("weights", name)?, (w_lo, w_hi));
            }
        }

        if file.rule == Some(RuleName::Segment) && prior.is_none() {
            return Err(invalid("rule", "`segment` needs a single `prior`"));
        }

        let grid = match &file.grid {
            None => None,
            Some(spec) => {
                let levels = match (&spec.levels, spec.count) {
                    (Some(l), None) => l.clone(),
                    (None, Some(n)) => spanning(lo, hi, n).map_err(|m| invalid("grid.count", m))?,
                    (None, None) => return Err(invalid("grid", "give `levels` or `count`")),
                    (Some(_), Some(_)) => {
                        return Err(invalid("grid", "give `levels` or `count`, not both"))
                    }
                };
                let g = ActGrid::new(levels, dim).map_err(|e| invalid("grid.levels", e))?;
                g.check_utility(&utility)
                    .map_err(|e| invalid("grid.levels", e))?;
                Some(g.with_cap(
                    spec.cap.or(Some(conservative::audit::DEFAULT_CAP)),
                    spec.seed.unwrap_or(0),
                ))
            }
        };

        Ok(Self {
            space,
            utility,
            priors,
            prior,
            deltas,
            default_delta,
            weights,
            default_weights,
            rule: file.rule,
            events,
            acts,
            grid,
            file,
        })
    }

    pub fn file(&self) -> &ScenarioFile {
        &self.file
    }

    /// Pretty-printed JSON that parses back to an equal scenario.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.file).expect("scenario files serialize");
        s.push('\n');
        s
    }

    pub fn dim(&self) -> usize {
        self.space.len()
    }

    /// A named event, or a comma-separated list of state labels.
    pub fn event(&self, text: &str) -> Option<Event> {
        if let Some(e) = self.events.get(text) {
            return Some(*e);
        }
        self.space.event(text.split(',').map(str::trim)).ok()
    }

    /// Display name for an event: its scenario name if it has one.
    pub fn event_name(&self, ev: &Event) -> String {
        self.events
            .iter()
            .find(|(_, e)| *e == ev)
            .map(|(n, _)| n.clone())
            .unwrap_or_else(|| {
                if ev.is_full() {
                    return "S".to_string();
                }
                let labels: Vec<&str> = ev
                    .members()
                    .map(|i| self.space.labels()[i].as_str())
                    .collect();
                format!("{{{}}}", labels.join(","))
            })
    }

    /// The single-prior model, when the scenario has one prior.
    pub fn single_model(&self) -> Result<ConservativeSeuModel, String> {
        let prior = self
            .prior
            .clone()
            .ok_or("the scenario holds a set of priors; this command needs a single `prior`")?;
        let m = ConservativeSeuModel::new(
            self.utility.clone(),
            prior,
            self.deltas.iter().map(|(e, d)| (*e, *d)),
        )
        .map_err(|e| e.to_string())?;
        match self.default_delta {
            Some(d) => m.with_default_delta(d).map_err(|e| e.to_string()),
            None => Ok(m),
        }
    }

    /// The multiple-prior model. A single prior with `delta` becomes a
    /// one-point set updated by the Minkowski rule.
    pub fn multi_model(&self) -> Result<MultiPriorModel, String> {
        let rule = match self.rule {
            Some(r) => r,
            None if !self.weights.is_empty() || self.default_weights.is_some() => RuleName::Segment,
            None if !self.deltas.is_empty() || self.default_delta.is_some() => RuleName::Minkowski,
            None => RuleName::Hull,
        };
        let rule = match rule {
            RuleName::Hull => PosteriorRule::HullMix,
            RuleName::Minkowski => PosteriorRule::MinkowskiMix {
                deltas: self.deltas.clone(),
                default: self.default_delta,
            },
            RuleName::Segment => PosteriorRule::WeightSegment {
                weights: self.weights.clone(),
                default: self.default_weights,
            },
        };
        MultiPriorModel::new(self.utility.clone(), self.priors.clone(), rule)
            .map_err(|e| e.to_string())
    }
}

/// `n` evenly spaced levels from `lo` to `hi`.
pub fn spanning(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>, String> {
    if n < 2 {
        return Err(format!("need at least 2 levels, got {n}"));
    }
    Ok((0..n)
        .map(|k| {
            if k + 1 == n {
                hi
            } else {
                lo + (hi - lo) * k as f64 / (n - 1) as f64
            }
        })
        .collect())
}

pub const EXAMPLE1: &str = include_str!("../scenarios/example1.scn");
pub const EXAMPLE3: &str = include_str!("../scenarios/example3.scn");

/// Scenarios shipped with the binary, by file name.
pub fn bundled(name: &str) -> Option<&'static str> {
    match name.trim_end_matches(".scn") {
        "example1" => Some(EXAMPLE1),
        "example3" => Some(EXAMPLE3),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_scenarios_parse() {
        let s = parse_scenario(EXAMPLE1).unwrap();
        let r_payoff = s.event("R").unwrap();
        assert_eq!(
            s.prior.as_ref().unwrap().event_prob(&r_payoff).unwrap(),
            0.625
        );
        let s3 = parse_scenario(EXAMPLE3).unwrap();
        assert_eq!(s3.priors.len(), 2);
    }

    #[test]
    fn validation_names_the_field() {
        let bad = EXAMPLE1.replace("\"r\": 0.5", "\"r\": 1.2");
        match parse_scenario(&bad) {
            Err(ScenarioError::Validation { path, .. }) => assert_eq!(path, "delta.r"),
            other => panic!("{other:?}"),
        }
        let empty = r#"{"states": [], "outcomes": [0, 1], "prior": []}"#;
        assert!(
            matches!(parse_scenario(empty), Err(ScenarioError::Validation { path, .. }) if path == "states")
        );
        assert!(matches!(
            parse_scenario("{\"states\": [}"),
            Err(ScenarioError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn spanning_hits_both_ends() {
        assert_eq!(
            spanning(0.0, 1.0, 5).unwrap(),
            vec![0.0, 0.25, 0.5, 0.75, 1.0]
        );
        assert!(spanning(0.0, 1.0, 1).is_err());
    }
}
