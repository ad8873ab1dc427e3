use conservative::acts::{ConservativeSeuModel, ExplicitSeuModel, Utility};
use conservative::audit::{
    audit_consequentialism, audit_dc, audit_dom_c, audit_gcb, audit_wc, likelihood_order, ActGrid,
    Auditor, Axiom,
};
use conservative::identification::{decreasing_in_prior_witness, is_constant_delta, ConstantDelta};
use conservative::sampling::{proper_events, random_model, DeltaShape};
use conservative::{Act, Belief, Comparison, Event};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn table1() -> Belief {
    Belief::new(vec![0.5, 0.125, 0.125, 0.25]).unwrap()
}

fn r() -> Event {
    Event::from_indices(4, [0, 1]).unwrap()
}

fn linear() -> Utility {
    Utility::linear(0.0, 1.0).unwrap()
}

fn quarters() -> ActGrid {
    ActGrid::new(vec![0.0, 0.25, 0.5, 0.75, 1.0], 4).unwrap()
}

fn model(deltas: &[(Event, f64)]) -> ConservativeSeuModel {
    ConservativeSeuModel::new(linear(), table1(), deltas.iter().copied()).unwrap()
}

#[test]
fn bayesian_agent_passes_dc_and_consequentialism() {
    let m = model(&[(r(), 0.0)]);
    assert!(audit_dc(&m, &r(), &quarters()).unwrap().is_empty());
    assert!(audit_consequentialism(&m, &r(), &quarters())
        .unwrap()
        .is_empty());
}

#[test]
fn half_conservative_agent_breaks_dc() {
    let m = model(&[(r(), 0.5)]);
    let found = audit_dc(&m, &r(), &quarters()).unwrap();
    assert!(!found.is_empty());
    for v in found.iter().take(50) {
        assert_eq!(v.axiom, Axiom::DynamicConsistency);
        assert!(v.replay(&m).unwrap());
    }
    let stubborn = model(&[(r(), 1.0)]);
    assert!(!audit_dc(&stubborn, &r(), &quarters()).unwrap().is_empty());
}

#[test]
fn consequentialism_gap_matches_weight_on_complement() {
    let m = model(&[(r(), 0.5)]);
    let f = Act::new(vec![1.0, 1.0, 1.0, 1.0]);
    let g = Act::new(vec![1.0, 1.0, 0.0, 0.0]);
    let gap = m.value(&f, &r()).unwrap() - m.value(&g, &r()).unwrap();
    assert!((gap - 0.1875).abs() < 1e-12);
    let found = audit_consequentialism(&m, &r(), &quarters()).unwrap();
    assert!(found.iter().all(|v| v.replay(&m).unwrap()));
    assert!(found
        .iter()
        .any(|v| v.witness[0].1 == f && v.witness[1].1 == g));

    // nothing outside the event carries weight when its complement is null
    let mu = Belief::new(vec![0.5, 0.5, 0.0, 0.0]).unwrap();
    let m = ConservativeSeuModel::new(linear(), mu, [(r(), 0.7)]).unwrap();
    assert!(audit_consequentialism(&m, &r(), &quarters())
        .unwrap()
        .is_empty());
}

#[test]
fn conservative_agents_satisfy_dynamic_conservatism() {
    for d in [0.0, 0.25, 0.5, 1.0] {
        let m = model(&[(r(), d), (Event::full(4), d)]);
        assert!(
            audit_dom_c(&m, &r(), &quarters()).unwrap().is_empty(),
            "d = {d}"
        );
        assert!(audit_dom_c(&m, &Event::full(4), &quarters())
            .unwrap()
            .is_empty());
    }
}

#[test]
fn overshooting_posterior_breaks_dynamic_conservatism() {
    // Bayes gives (0.8, 0.2, 0, 0); this pushes further from the prior
    let mu = table1();
    let over = Belief::new(vec![0.9, 0.1, 0.0, 0.0]).unwrap();
    let m = ExplicitSeuModel::new(linear(), mu, [(r(), over)]).unwrap();
    let found = audit_dom_c(&m, &r(), &quarters()).unwrap();
    assert!(!found.is_empty());
    assert!(found.iter().take(50).all(|v| v.replay(&m).unwrap()));
}

#[test]
fn weak_consequentialism_examples() {
    let constant = ConservativeSeuModel::constant(linear(), table1(), 0.4).unwrap();
    assert!(audit_wc(&constant, &quarters()).unwrap().is_empty());

    let b = r().complement();
    let m = model(&[
        (r(), 0.2),
        (b, 0.8),
        (Event::from_indices(4, [0]).unwrap(), 0.2),
    ]);
    let found = audit_wc(&m, &quarters()).unwrap();
    assert!(!found.is_empty());
    assert!(found.iter().all(|v| v.replay(&m).unwrap()));

    // r and b cover the state space, so no disjoint third event exists
    let m = model(&[(r(), 0.2), (b, 0.8)]);
    assert!(audit_wc(&m, &quarters()).unwrap().is_empty());
}

#[test]
fn confirmation_bias_examples() {
    let constant = ConservativeSeuModel::constant(linear(), table1(), 0.4).unwrap();
    assert!(audit_gcb(&constant, &quarters()).unwrap().is_empty());

    // {0} has prior 1/2 and {1} has 1/8
    let (big, small) = (
        Event::from_indices(4, [0]).unwrap(),
        Event::from_indices(4, [1]).unwrap(),
    );
    let decreasing = model(&[(big, 0.2), (small, 0.6)]);
    assert!(audit_gcb(&decreasing, &quarters()).unwrap().is_empty());

    let rising = model(&[(big, 0.6), (small, 0.2)]);
    let found = audit_gcb(&rising, &quarters()).unwrap();
    assert!(!found.is_empty());
    assert!(found.iter().all(|v| v.replay(&rising).unwrap()));
    assert!(found
        .iter()
        .all(|v| v.events[0].1 == big && v.events[1].1 == small));
}

#[test]
fn likelihood_order_agrees_with_betting() {
    let levels: Vec<f64> = (0..=10).map(|k| k as f64 / 10.0).collect();
    let m = ConservativeSeuModel::constant(linear(), table1(), 0.3).unwrap();
    let s = Event::full(4);
    assert_eq!(
        likelihood_order(&m, &r(), &r().complement()).unwrap(),
        Comparison::First
    );
    for a in Event::power_set(4) {
        for b in Event::power_set(4) {
            let order = likelihood_order(&m, &a, &b).unwrap();
            let mut a_weakly = true;
            let mut b_weakly = true;
            for &x in &levels {
                for &y in levels.iter().filter(|&&y| y < x) {
                    let (cx, cy) = (Act::constant(x, 4), Act::constant(y, 4));
                    let xay = cx.splice(&a, &cy).unwrap();
                    let xby = cx.splice(&b, &cy).unwrap();
                    let c = m.prefers(&xay, &xby, &s).unwrap();
                    a_weakly &= c != Comparison::Second;
                    b_weakly &= c != Comparison::First;
                }
            }
            let betting = match (a_weakly, b_weakly) {
                (true, true) => Comparison::Indifferent,
                (true, false) => Comparison::First,
                (false, true) => Comparison::Second,
                (false, false) => unreachable!("expected utility orders every pair of bets"),
            };
            assert_eq!(order, betting, "A={a} B={b}");
        }
    }
}

#[test]
fn sampled_models_match_the_characterizations() {
    let u = linear();
    let grid = quarters();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..6 {
        let shape = [
            DeltaShape::Constant,
            DeltaShape::Free,
            DeltaShape::DecreasingInPrior,
        ][i % 3];
        let m = random_model(&mut rng, &u, 4, shape).unwrap();
        let auditor = Auditor::new(grid.clone()).with_limit(Some(3));
        for a in proper_events(4) {
            assert!(auditor.dynamic_conservatism(&m, &a).unwrap().is_clean());
            let moved = m.delta(&a).unwrap() > 0.0;
            assert_eq!(
                !auditor.dynamic_consistency(&m, &a).unwrap().is_clean(),
                moved
            );
            assert_eq!(!auditor.consequentialism(&m, &a).unwrap().is_clean(), moved);
        }
        let wc_clean = auditor.weak_consequentialism(&m).unwrap().is_clean();
        assert_eq!(
            wc_clean,
            matches!(is_constant_delta(&m).unwrap(), ConstantDelta::Constant(_))
        );
        let gcb_clean = auditor.confirmation_bias(&m).unwrap().is_clean();
        assert_eq!(
            gcb_clean,
            decreasing_in_prior_witness(&m).unwrap().is_none()
        );
    }
}

#[test]
fn subsampled_grids_are_deterministic() {
    let grid = ActGrid::new((0..=6).map(|k| k as f64 / 6.0).collect(), 4)
        .unwrap()
        .with_cap(Some(300), 9);
    let cov = grid.coverage();
    assert_eq!(cov.enumerated, 300);
    assert!(!cov.is_exhaustive());
    assert_eq!(grid.acts(), grid.clone().acts());
    let m = model(&[(r(), 0.5)]);
    let first = Auditor::new(grid.clone())
        .dynamic_consistency(&m, &r())
        .unwrap();
    let second = Auditor::new(grid).dynamic_consistency(&m, &r()).unwrap();
    assert_eq!(first, second);
}
