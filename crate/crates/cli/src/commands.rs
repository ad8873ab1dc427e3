//! Subcommand parsing and dispatch.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use conservative::audit::{ActGrid, AuditReport, Auditor, Axiom, Violation};
use conservative::identification::{
    matched_bets, recover_delta, recover_delta_from_ce, ConservatismOrder, DeltaEstimate,
};
use conservative::multiprior::{
    alpha_meu_value, alpha_meu_value_labeled, hull_mix, minkowski_mix, set_bayes_update,
    weight_segment, AlphaLabel, BeliefSet,
};
use conservative::{Act, Belief, Conditioning, ConservativeSeuModel, Event};

use crate::render::{self, num, Table};
use crate::scenario::{self, parse_scenario, Scenario};

/// What a command printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain { op: &'static str, message: String },
}

type CmdResult = Result<Report, Failure>;

/// Rendered output plus whether every reproduced value matched.
struct Report {
    text: String,
    ok: bool,
}

impl From<String> for Report {
    fn from(text: String) -> Self {
        Self { text, ok: true }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn domain<E: ToString>(op: &'static str) -> impl Fn(E) -> Failure {
    move |e| Failure::Domain {
        op,
        message: e.to_string(),
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "conserv",
    version,
    about = "Conservative belief updating: updates, axiom audits, identification, belief sets"
)]
struct Cli {
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for subsampling act grids larger than their cap.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Prior, Bayesian, and conservative posteriors after one event.
    Update(UpdateArgs),
    /// Search an act grid for violations of an axiom.
    Audit(AuditArgs),
    /// Recover conservatism weights from posteriors or certainty equivalents.
    Elicit(ElicitArgs),
    /// Order two agents by conservatism, event by event.
    Compare(CompareArgs),
    /// Vertices of updated belief sets.
    Sets(SetsArgs),
    /// Alpha-maxmin value and certainty equivalent of an act.
    Value(ValueArgs),
    /// Recompute a worked example and check it against known values.
    Reproduce(ReproduceArgs),
    /// Validate a scenario and print it in normalized form.
    Scenario(ScenarioArgs),
}

#[derive(Args, Debug)]
struct UpdateArgs {
    /// Scenario file, or the name of a bundled scenario.
    #[arg(long)]
    scenario: String,
    /// Event name, or comma-separated state labels.
    #[arg(long)]
    event: String,
    /// Weight on the prior; defaults to the scenario's value for the event.
    #[arg(long)]
    delta: Option<f64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AxiomArg {
    Dc,
    C,
    DomC,
    Wc,
    Gcb,
    Wuc,
}

impl AxiomArg {
    fn axiom(self) -> Axiom {
        let id = match self {
            AxiomArg::Dc => "dc",
            AxiomArg::C => "c",
            AxiomArg::DomC => "dom-c",
            AxiomArg::Wc => "wc",
            AxiomArg::Gcb => "gcb",
            AxiomArg::Wuc => "wuc",
        };
        Axiom::from_id(id).expect("every axiom argument has an id")
    }
}

#[derive(Args, Debug)]
struct AuditArgs {
    #[arg(long, value_enum)]
    axiom: AxiomArg,
    #[arg(long)]
    scenario: String,
    /// Conditioning events; defaults to every named event with a weight.
    #[arg(long)]
    event: Vec<String>,
    /// Evenly spaced outcome levels, overriding the scenario grid.
    #[arg(long)]
    levels: Option<usize>,
    /// Largest number of acts to enumerate before subsampling.
    #[arg(long)]
    cap: Option<usize>,
    /// Violations to print per event; the count covers all of them.
    #[arg(long, default_value_t = 20)]
    limit: usize,
}

#[derive(Args, Debug)]
struct ElicitArgs {
    #[arg(long)]
    scenario: String,
    #[arg(long, requires = "posterior")]
    event: Option<String>,
    /// Observed posterior, comma-separated, one probability per state.
    #[arg(long, conflicts_with = "ce_file")]
    posterior: Option<String>,
    /// Tab-separated rows `event x y ce`, one bet per row.
    #[arg(long)]
    ce_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CompareArgs {
    #[arg(long)]
    first: String,
    #[arg(long)]
    second: String,
    /// Events to compare; defaults to named events identified for both.
    #[arg(long)]
    event: Vec<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SetOp {
    Bayes,
    Hull,
    Minkowski,
    Segment,
}

#[derive(Args, Debug)]
struct SetsArgs {
    #[arg(long, value_enum)]
    op: SetOp,
    #[arg(long)]
    scenario: String,
    #[arg(long)]
    event: String,
    /// Weight for `minkowski`; defaults to the scenario's value.
    #[arg(long)]
    delta: Option<f64>,
    /// `lo,hi` weight interval for `segment`; defaults to the scenario's.
    #[arg(long)]
    weights: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Convention {
    /// `alpha` weights the worst case.
    Worst,
    /// `alpha` weights the best case.
    Best,
}

#[derive(Args, Debug)]
struct ValueArgs {
    #[arg(long)]
    scenario: String,
    /// Act name, or comma-separated outcomes.
    #[arg(long)]
    act: String,
    /// Conditioning event; the prior set when omitted.
    #[arg(long)]
    event: Option<String>,
    #[arg(long)]
    alpha: f64,
    #[arg(long, value_enum, default_value_t = Convention::Worst)]
    convention: Convention,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Example {
    Example1,
    Example3,
    Table3,
}

#[derive(Args, Debug)]
struct ReproduceArgs {
    #[arg(value_enum)]
    example: Example,
}

#[derive(Args, Debug)]
struct ScenarioArgs {
    #[arg(long)]
    scenario: String,
}

/// Parses `argv` (program name first) and runs one command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Update(a) => update(a),
        Command::Audit(a) => audit(a, cli.seed),
        Command::Elicit(a) => elicit(a),
        Command::Compare(a) => compare(a),
        Command::Sets(a) => sets(a),
        Command::Value(a) => value(a),
        Command::Reproduce(a) => reproduce(a),
        Command::Scenario(a) => load(&a.scenario).map(|s| s.to_json().into()),
    };
    match result {
        Ok(report) => {
            let code = if report.ok { EXIT_OK } else { EXIT_DOMAIN };
            match &cli.out {
                None => Outcome {
                    code,
                    stdout: report.text,
                    stderr: String::new(),
                },
                Some(path) => match std::fs::write(path, &report.text) {
                    Ok(()) => Outcome {
                        code,
                        stdout: String::new(),
                        stderr: format!("wrote {}\n", path.display()),
                    },
                    Err(e) => Outcome {
                        code: EXIT_DOMAIN,
                        stdout: String::new(),
                        stderr: format!("error: output: cannot write {}: {e}\n", path.display()),
                    },
                },
            }
        }
        Err(Failure::Usage(msg)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Domain { op, message }) => Outcome {
            code: EXIT_DOMAIN,
            stdout: String::new(),
            stderr: format!("error: {op}: {message}\n"),
        },
    }
}

/// Reads a scenario from disk, falling back to the bundled ones by name.
fn load(path: &str) -> Result<Scenario, Failure> {
    let text = if Path::new(path).exists() {
        std::fs::read_to_string(path).map_err(|e| Failure::Domain {
            op: "scenario",
            message: format!("cannot read {path}: {e}"),
        })?
    } else {
        let name = Path::new(path)
            .file_name()
            .and_then(|n| n.to_str())
            .unwrap_or(path);
        scenario::bundled(name)
            .ok_or_else(|| Failure::Domain {
                op: "scenario",
                message: format!("no such file: {path}"),
            })?
            .to_string()
    };
    parse_scenario(&text).map_err(domain("scenario"))
}

fn event(s: &Scenario, text: &str) -> Result<Event, Failure> {
    s.event(text).ok_or_else(|| {
        usage(format!(
            "unknown event `{text}`: not a named event or a list of state labels"
        ))
    })
}

fn numbers(text: &str, what: &str) -> Result<Vec<f64>, Failure> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| usage(format!("{what}: `{p}` is not a number")))
        })
        .collect()
}

fn single(s: &Scenario, op: &'static str) -> Result<ConservativeSeuModel, Failure> {
    s.single_model().map_err(domain(op))
}

fn update(a: &UpdateArgs) -> CmdResult {
    let s = load(&a.scenario)?;
    let ev = event(&s, &a.event)?;
    let mut model = single(&s, "update")?;
    if let Some(d) = a.delta {
        model = ConservativeSeuModel::new(s.utility.clone(), model.prior().clone(), [(ev, d)])
            .map_err(domain("update"))?;
    }
    let prior = model.prior().clone();
    let status = model.conditioning(&ev).map_err(domain("update"))?;
    let (bayes, delta, note) = match status {
        Conditioning::Null => (None, None, "null event: beliefs unchanged"),
        Conditioning::Certain => (
            Some(prior.clone()),
            model.delta(&ev).ok(),
            "complement is null: weight not identified",
        ),
        Conditioning::Identified => (
            Some(prior.bayes_update(&ev).map_err(domain("update"))?),
            Some(model.delta(&ev).map_err(domain("update"))?),
            "identified",
        ),
    };
    let post = model.posterior(&ev).map_err(domain("update"))?;
    let delta_text = delta.map_or("-".to_string(), num);

    let cell = |b: &Option<Belief>, f: &dyn Fn(&Belief) -> f64| {
        b.as_ref().map_or("-".to_string(), |b| num(f(b)))
    };
    let mut states = Table::new(["state", "prior", "bayes", "posterior"]).comment(format!(
        "update event={} delta={delta_text} ({note})",
        s.event_name(&ev)
    ));
    for (i, label) in s.space.labels().iter().enumerate() {
        states.row([
            label.clone(),
            num(prior.get(i)),
            cell(&bayes, &|b| b.get(i)),
            num(post.get(i)),
        ]);
    }
    let mut events = Table::new(["event", "prior", "bayes", "posterior"]);
    for (name, e) in &s.events {
        let p = |b: &Belief| {
            b.event_prob(e)
                .expect("scenario events match the state space")
        };
        events.row([
            name.clone(),
            num(p(&prior)),
            cell(&bayes, &p),
            num(p(&post)),
        ]);
    }
    Ok(format!("{}\n{}", states.render(), events.render()).into())
}

fn audit(a: &AuditArgs, seed: Option<u64>) -> CmdResult {
    let s = load(&a.scenario)?;
    let axiom = a.axiom.axiom();
    let mut grid = match (a.levels, &s.grid) {
        (Some(n), _) => {
            let (lo, hi) = s.utility.domain();
            let levels = scenario::spanning(lo, hi, n).map_err(usage)?;
            ActGrid::new(levels, s.dim()).map_err(domain("audit"))?
        }
        (None, Some(g)) => g.clone(),
        (None, None) => ActGrid::spanning(&s.utility, 5, s.dim()).map_err(domain("audit"))?,
    };
    let cap = a.cap.map_or(grid.cap(), Some);
    let seed = seed.unwrap_or(grid.seed());
    grid = grid.with_cap(cap, seed);
    let auditor = Auditor::new(grid).with_limit(Some(a.limit));
    let cov = auditor.grid().coverage();
    let levels: Vec<String> = auditor.grid().levels().iter().map(|&x| num(x)).collect();

    let sampled = if cov.is_exhaustive() {
        String::new()
    } else {
        format!(", sampled with seed {}", auditor.grid().seed())
    };
    let mut header = vec![format!(
        "audit {} grid levels [{}], {} of {} acts{sampled}",
        axiom.id(),
        levels.join(","),
        cov.enumerated,
        cov.total.map_or("many".to_string(), |t| t.to_string())
    )];
    let mut reports: Vec<(Option<Event>, AuditReport)> = Vec::new();
    match axiom {
        Axiom::WeakConsequentialism | Axiom::ConfirmationBias => {
            let m = single(&s, "audit")?;
            let r = if axiom == Axiom::WeakConsequentialism {
                auditor.weak_consequentialism(&m)
            } else {
                auditor.confirmation_bias(&m)
            }
            .map_err(domain("audit"))?;
            reports.push((None, r));
        }
        Axiom::UnambiguousConservatism => {
            let m = s.multi_model().map_err(domain("audit"))?;
            for ev in audit_events(&s, &a.event, |e| m.posterior_set(e).is_ok())? {
                let r = auditor
                    .unambiguous_conservatism(&m, &ev)
                    .map_err(domain("audit"))?;
                reports.push((Some(ev), r));
            }
        }
        _ => {
            let m = single(&s, "audit")?;
            for ev in audit_events(&s, &a.event, |e| m.delta(e).is_ok())? {
                let r = match axiom {
                    Axiom::DynamicConsistency => auditor.dynamic_consistency(&m, &ev),
                    Axiom::Consequentialism => auditor.consequentialism(&m, &ev),
                    _ => auditor.dynamic_conservatism(&m, &ev),
                }
                .map_err(domain("audit"))?;
                reports.push((Some(ev), r));
            }
        }
    }

    let mut table = Table::new(["axiom", "events", "witness", "statements"]);
    let mut total = 0u64;
    for (ev, r) in &reports {
        let scope = ev.map_or("all event triples".to_string(), |e| {
            format!("event {}", s.event_name(&e))
        });
        header.push(format!("{scope}: {} checked, {} found", r.checked, r.found));
        total += r.found;
        for v in &r.violations {
            table.row(violation_cells(&s, v));
        }
    }
    let mut t = table;
    for h in header {
        t = t.comment(h);
    }
    Ok(format!("{}{total} violations\n", t.render()).into())
}

/// Explicit events, or every named event `usable` accepts.
fn audit_events(
    s: &Scenario,
    given: &[String],
    usable: impl Fn(&Event) -> bool,
) -> Result<Vec<Event>, Failure> {
    if !given.is_empty() {
        return given.iter().map(|e| event(s, e)).collect();
    }
    let evs: Vec<Event> = s.events.values().copied().filter(|e| usable(e)).collect();
    if evs.is_empty() {
        return Err(usage("no named event can be audited; pass --event"));
    }
    Ok(evs)
}

fn violation_cells(s: &Scenario, v: &Violation) -> Vec<String> {
    let events: Vec<String> = v
        .events
        .iter()
        .map(|(k, e)| format!("{k}={}", s.event_name(e)))
        .collect();
    let witness: Vec<String> = v
        .witness
        .iter()
        .map(|(k, a)| format!("{k}={}", render::act(a)))
        .collect();
    let statements: Vec<String> = v
        .statements
        .iter()
        .map(|st| {
            format!(
                "{} {}|{} {}",
                render::act(&st.left),
                st.relation.symbol(),
                s.event_name(&st.given),
                render::act(&st.right)
            )
        })
        .collect();
    vec![
        v.axiom.id().to_string(),
        events.join(" "),
        witness.join(" "),
        statements.join("; "),
    ]
}

fn estimate_row(s: &Scenario, e: &DeltaEstimate) -> Vec<String> {
    vec![
        s.event_name(&e.event),
        e.value.map_or("-".to_string(), num),
        num(e.residual),
        e.identified.to_string(),
        format!("{:?}", e.flag).to_lowercase(),
    ]
}

fn elicit(a: &ElicitArgs) -> CmdResult {
    let s = load(&a.scenario)?;
    let prior = s.prior.clone().ok_or_else(|| Failure::Domain {
        op: "elicit",
        message: "the scenario holds a set of priors; elicitation needs a single `prior`".into(),
    })?;
    let mut t = Table::new(["event", "delta", "residual", "identified", "flag"]);
    match (&a.posterior, &a.ce_file, &a.event) {
        (Some(p), None, Some(e)) => {
            let ev = event(&s, e)?;
            let post = Belief::new(numbers(p, "--posterior")?).map_err(domain("elicit"))?;
            let est = recover_delta(&prior, &post, &ev).map_err(domain("elicit"))?;
            t.row(estimate_row(&s, &est));
        }
        (None, Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Domain {
                op: "elicit",
                message: format!("cannot read {}: {e}", path.display()),
            })?;
            let mut header_seen = false;
            for (n, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let cells: Vec<&str> = line.split('\t').map(str::trim).collect();
                if !header_seen && cells.first() == Some(&"event") {
                    header_seen = true;
                    continue;
                }
                let bad = |m: String| Failure::Domain {
                    op: "elicit",
                    message: format!("{} line {}: {m}", path.display(), n + 1),
                };
                let [e, x, y, ce] = cells[..] else {
                    return Err(bad(format!(
                        "expected 4 tab-separated fields, got {}",
                        cells.len()
                    )));
                };
                let ev = s
                    .event(e)
                    .ok_or_else(|| bad(format!("unknown event `{e}`")))?;
                let parse = |v: &str| {
                    v.parse::<f64>()
                        .map_err(|_| bad(format!("`{v}` is not a number")))
                };
                let est = recover_delta_from_ce(
                    &prior,
                    &ev,
                    &s.utility,
                    parse(x)?,
                    parse(y)?,
                    parse(ce)?,
                )
                .map_err(|err| bad(err.to_string()))?;
                t.row(estimate_row(&s, &est));
            }
        }
        _ => return Err(usage("give either --event with --posterior, or --ce-file")),
    }
    Ok(t.render().into())
}

fn order_name(o: ConservatismOrder) -> &'static str {
    match o {
        ConservatismOrder::FirstMore => "first-more",
        ConservatismOrder::SecondMore => "second-more",
        ConservatismOrder::Equal => "equal",
        ConservatismOrder::Incomparable => "incomparable",
    }
}

fn compare(a: &CompareArgs) -> CmdResult {
    let s1 = load(&a.first)?;
    let s2 = load(&a.second)?;
    if s1.space != s2.space {
        return Err(Failure::Domain {
            op: "compare",
            message: "the two scenarios use different state spaces".into(),
        });
    }
    let m1 = single(&s1, "compare")?;
    let m2 = single(&s2, "compare")?;
    let events: Vec<Event> = if a.event.is_empty() {
        s1.events
            .values()
            .copied()
            .filter(|e| {
                m1.is_identified(e)
                    && m2.is_identified(e)
                    && m1.delta(e).is_ok()
                    && m2.delta(e).is_ok()
            })
            .collect()
    } else {
        a.event
            .iter()
            .map(|e| event(&s1, e))
            .collect::<Result<_, _>>()?
    };
    let mut t = Table::new([
        "event", "delta1", "delta2", "x", "y1", "y2", "ce1", "ce2", "order",
    ]);
    let (mut first, mut second) = (false, false);
    for ev in &events {
        let b = matched_bets(&m1, &m2, ev).map_err(domain("compare"))?;
        first |= b.order == ConservatismOrder::FirstMore;
        second |= b.order == ConservatismOrder::SecondMore;
        let d = |m: &ConservativeSeuModel| m.delta(ev).map(num).unwrap_or_else(|_| "-".into());
        t.row([
            s1.event_name(ev),
            d(&m1),
            d(&m2),
            num(b.x),
            num(b.y1),
            num(b.y2),
            num(b.ce1),
            num(b.ce2),
            order_name(b.order).to_string(),
        ]);
    }
    let overall = match (first, second) {
        (true, true) => ConservatismOrder::Incomparable,
        (true, false) => ConservatismOrder::FirstMore,
        (false, true) => ConservatismOrder::SecondMore,
        (false, false) => ConservatismOrder::Equal,
    };
    Ok(format!("{}overall\t{}\n", t.render(), order_name(overall)).into())
}

fn sets(a: &SetsArgs) -> CmdResult {
    let s = load(&a.scenario)?;
    let ev = event(&s, &a.event)?;
    let (set, label) = match a.op {
        SetOp::Bayes => (
            set_bayes_update(&s.priors, &ev).map_err(domain("sets"))?,
            "bayes".to_string(),
        ),
        SetOp::Hull => (
            hull_mix(&s.priors, &ev).map_err(domain("sets"))?,
            "hull".to_string(),
        ),
        SetOp::Minkowski => {
            let d = match a.delta {
                Some(d) => d,
                None => s
                    .deltas
                    .get(&ev)
                    .copied()
                    .or(s.default_delta)
                    .ok_or_else(|| Failure::Domain {
                        op: "sets",
                        message: format!("no weight for event {}; pass --delta", s.event_name(&ev)),
                    })?,
            };
            (
                minkowski_mix(&s.priors, &ev, d).map_err(domain("sets"))?,
                format!("minkowski delta={}", num(d)),
            )
        }
        SetOp::Segment => {
            let mu = s.prior.as_ref().ok_or_else(|| Failure::Domain {
                op: "sets",
                message: "weight segments need a single `prior`".into(),
            })?;
            let (lo, hi) = match &a.weights {
                Some(w) => match numbers(w, "--weights")?[..] {
                    [lo, hi] => (lo, hi),
                    _ => return Err(usage("--weights takes `lo,hi`")),
                },
                None => s
                    .weights
                    .get(&ev)
                    .copied()
                    .or(s.default_weights)
                    .ok_or_else(|| Failure::Domain {
                        op: "sets",
                        message: format!(
                            "no weight interval for event {}; pass --weights",
                            s.event_name(&ev)
                        ),
                    })?,
            };
            (
                weight_segment(mu, &ev, lo, hi).map_err(domain("sets"))?,
                format!("segment weights=[{},{}]", num(lo), num(hi)),
            )
        }
    };
    Ok(render_set(&s, &set, &format!("{label} event={}", s.event_name(&ev))).into())
}

fn render_set(s: &Scenario, set: &BeliefSet, title: &str) -> String {
    let mut header = vec!["vertex".to_string()];
    header.extend(s.space.labels().iter().cloned());
    let mut vertices = Table::new(header).comment(title.to_string());
    for (k, mu) in set.extremes().iter().enumerate() {
        let mut row = vec![k.to_string()];
        row.extend(mu.probs().iter().map(|&p| num(p)));
        vertices.row(row);
    }
    let mut ranges = Table::new(["event", "min", "max"]);
    for (name, e) in &s.events {
        let (lo, hi) = set
            .prob_range(e)
            .expect("scenario events match the state space");
        ranges.row([name.clone(), num(lo), num(hi)]);
    }
    format!("{}\n{}", vertices.render(), ranges.render())
}

fn value(a: &ValueArgs) -> CmdResult {
    let s = load(&a.scenario)?;
    let act = match s.acts.get(&a.act) {
        Some(f) => f.clone(),
        None => Act::new(numbers(&a.act, "--act")?),
    };
    act.check(s.dim(), &s.utility).map_err(domain("value"))?;
    let (set, ev_name) = match &a.event {
        None => (s.priors.clone(), "S".to_string()),
        Some(e) => {
            let ev = event(&s, e)?;
            let m = s.multi_model().map_err(domain("value"))?;
            (
                m.posterior_set(&ev).map_err(domain("value"))?,
                s.event_name(&ev),
            )
        }
    };
    let label = match a.convention {
        Convention::Worst => AlphaLabel::Pessimism,
        Convention::Best => AlphaLabel::Optimism,
    };
    let v =
        alpha_meu_value_labeled(&set, &s.utility, &act, a.alpha, label).map_err(domain("value"))?;
    let (lo, hi) = set.eu_range(&act, &s.utility).map_err(domain("value"))?;
    let ce = s.utility.inverse(v).map_err(domain("value"))?;
    let mut t = Table::new([
        "act",
        "event",
        "alpha",
        "convention",
        "min_eu",
        "max_eu",
        "value",
        "ce",
    ]);
    let act_name = if s.acts.contains_key(&a.act) {
        a.act.clone()
    } else {
        render::act(&act)
    };
    let conv = match a.convention {
        Convention::Worst => "worst",
        Convention::Best => "best",
    };
    t.row([
        act_name,
        ev_name,
        num(a.alpha),
        conv.to_string(),
        num(lo),
        num(hi),
        num(v),
        num(ce),
    ]);
    Ok(t.render().into())
}

const REPRODUCE_TOL: f64 = 1e-9;

fn check(got: f64, want: f64, ok: &mut bool) -> String {
    let good = (got - want).abs() <= REPRODUCE_TOL;
    *ok &= good;
    if good { "ok" } else { "MISMATCH" }.to_string()
}

fn reproduce(a: &ReproduceArgs) -> CmdResult {
    let parse = |text: &str| parse_scenario(text).map_err(domain("reproduce"));
    let mut ok = true;
    let mut cells = 0;
    let text = match a.example {
        Example::Example1 => {
            let s = parse(scenario::EXAMPLE1)?;
            let mu = s.prior.clone().expect("bundled example has one prior");
            let (r, b, big_r) = (named(&s, "r")?, named(&s, "b")?, named(&s, "R")?);
            let mut t = Table::new([
                "delta",
                "posterior_R_after_r",
                "expected",
                "check",
                "posterior_R_after_b",
                "expected",
                "check",
            ])
            .comment("payoff state R: prior 5/8, Bayesian 4/5 after r and 1/3 after b");
            for d in [0.0, 0.25, 0.5, 0.75, 1.0] {
                let pr = mu
                    .conservative_update(&r, d)
                    .and_then(|p| p.event_prob(&big_r))
                    .map_err(domain("reproduce"))?;
                let pb = mu
                    .conservative_update(&b, d)
                    .and_then(|p| p.event_prob(&big_r))
                    .map_err(domain("reproduce"))?;
                let wr = d * 5.0 / 8.0 + (1.0 - d) * 4.0 / 5.0;
                let wb = d * 5.0 / 8.0 + (1.0 - d) / 3.0;
                let (cr, cb) = (check(pr, wr, &mut ok), check(pb, wb, &mut ok));
                cells += 2;
                t.row([num(d), num(pr), num(wr), cr, num(pb), num(wb), cb]);
            }
            t.render()
        }
        Example::Example3 => {
            let s = parse(scenario::EXAMPLE3)?;
            let (r, b, big_r) = (named(&s, "r")?, named(&s, "b")?, named(&s, "R")?);
            let mut t = Table::new([
                "signal",
                "delta",
                "min_R",
                "max_R",
                "expected_min",
                "expected_max",
                "check",
            ])
            .comment("marginal on payoff state R of the Minkowski posterior set");
            for (sig, ev, vary) in [("r", r, 1.0), ("b", b, -1.0)] {
                for k in 0..=10 {
                    let d = k as f64 / 10.0;
                    let set = minkowski_mix(&s.priors, &ev, d).map_err(domain("reproduce"))?;
                    let (lo, hi) = set.prob_range(&big_r).map_err(domain("reproduce"))?;
                    // after r the moving end is (4 - d)/5, after b it is (2 + d)/5
                    let moving = if vary > 0.0 {
                        (4.0 - d) / 5.0
                    } else {
                        (2.0 + d) / 5.0
                    };
                    let (wlo, whi) = (moving.min(0.6), moving.max(0.6));
                    let mut good = true;
                    check(lo, wlo, &mut good);
                    check(hi, whi, &mut good);
                    ok &= good;
                    cells += 2;
                    t.row([
                        sig.to_string(),
                        num(d),
                        num(lo),
                        num(hi),
                        num(wlo),
                        num(whi),
                        if good { "ok" } else { "MISMATCH" }.to_string(),
                    ]);
                }
            }
            t.render()
        }
        Example::Table3 => {
            let s = parse(scenario::EXAMPLE3)?;
            let (r, b) = (named(&s, "r")?, named(&s, "b")?);
            let bet = s
                .acts
                .get("bet_R")
                .cloned()
                .expect("bundled example has the bet");
            let u = &s.utility;
            let mut t = Table::new(["signal", "delta", "maxmin", "maxmax", "expected_maxmin", "expected_maxmax", "check"])
                .comment("certainty equivalents of the bet paying 1 on R and 0 otherwise")
                .comment("maxmin: alpha = 1 when alpha weights the worst case, alpha = 0 when it weights the best case");
            let expected = [
                ("r", r, [(0.0, 0.6, 0.8), (0.5, 0.6, 0.7), (1.0, 0.6, 0.6)]),
                ("b", b, [(0.0, 0.4, 0.6), (0.5, 0.5, 0.6), (1.0, 0.6, 0.6)]),
            ];
            for (sig, ev, rows) in expected {
                for (d, want_lo, want_hi) in rows {
                    let set = minkowski_mix(&s.priors, &ev, d).map_err(domain("reproduce"))?;
                    let ce = |alpha: f64| {
                        alpha_meu_value(&set, u, &bet, alpha)
                            .and_then(|v| u.inverse(v))
                            .map_err(domain("reproduce"))
                    };
                    let (lo, hi) = (ce(1.0)?, ce(0.0)?);
                    let mut good = true;
                    check(lo, want_lo, &mut good);
                    check(hi, want_hi, &mut good);
                    ok &= good;
                    cells += 2;
                    t.row([
                        sig.to_string(),
                        num(d),
                        num(lo),
                        num(hi),
                        num(want_lo),
                        num(want_hi),
                        if good { "ok" } else { "MISMATCH" }.to_string(),
                    ]);
                }
            }
            t.render()
        }
    };
    let verdict = if ok { "match" } else { "do not all match" };
    Ok(Report {
        text: format!("{text}{cells} values {verdict}\n"),
        ok,
    })
}

fn named(s: &Scenario, name: &str) -> Result<Event, Failure> {
    s.events.get(name).copied().ok_or_else(|| Failure::Domain {
        op: "reproduce",
        message: format!("bundled scenario lacks event `{name}`"),
    })
}
