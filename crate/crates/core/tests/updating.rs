use conservative::acts::{ConservativeSeuModel, Utility};
use conservative::{Act, Belief, Comparison, Event};
use proptest::prelude::*;

fn table1() -> Belief {
    Belief::new(vec![0.5, 0.125, 0.125, 0.25]).unwrap()
}

fn payoff_r() -> Event {
    Event::from_indices(4, [0, 2]).unwrap()
}

fn belief(dim: usize) -> impl Strategy<Value = Belief> {
    prop::collection::vec(0.0f64..10.0, dim)
        .prop_filter("some mass", |w| w.iter().sum::<f64>() > 1e-3)
        .prop_map(|w| Belief::from_weights(w).unwrap())
}

fn event(dim: usize) -> impl Strategy<Value = Event> {
    (1u64..(1 << dim)).prop_map(move |m| Event::from_mask(dim, m).unwrap())
}

fn act(dim: usize) -> impl Strategy<Value = Act> {
    prop::collection::vec(0.0f64..=1.0, dim).prop_map(Act::new)
}

#[test]
fn example_one_marginals() {
    let r = Event::from_indices(4, [0, 1]).unwrap();
    let b = r.complement();
    for k in 0..=4 {
        let d = k as f64 / 4.0;
        let after_r = table1().conservative_update(&r, d).unwrap();
        let after_b = table1().conservative_update(&b, d).unwrap();
        let want_r = d * 5.0 / 8.0 + (1.0 - d) * 4.0 / 5.0;
        let want_b = d * 5.0 / 8.0 + (1.0 - d) / 3.0;
        assert!((after_r.event_prob(&payoff_r()).unwrap() - want_r).abs() < 1e-12);
        assert!((after_b.event_prob(&payoff_r()).unwrap() - want_b).abs() < 1e-12);
    }
}

proptest! {
    #[test]
    fn endpoints_are_bayes_and_prior(mu in belief(4), a in event(4)) {
        prop_assume!(mu.event_prob(&a).unwrap() > 1e-6);
        let bayes = mu.bayes_update(&a).unwrap();
        prop_assert!(mu.conservative_update(&a, 0.0).unwrap().approx_eq(&bayes, 1e-12));
        prop_assert!(mu.conservative_update(&a, 1.0).unwrap().approx_eq(&mu, 1e-12));
        prop_assert!((bayes.event_prob(&a).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn posterior_mass_on_event(mu in belief(4), a in event(4), k in 0u32..=10) {
        prop_assume!(mu.event_prob(&a).unwrap() > 1e-6);
        let d = f64::from(k) / 10.0;
        let post = mu.conservative_update(&a, d).unwrap();
        let want = 1.0 - d * (1.0 - mu.event_prob(&a).unwrap());
        prop_assert!((post.event_prob(&a).unwrap() - want).abs() < 1e-12);
    }

    #[test]
    fn sure_event_is_identity(mu in belief(5), d in 0.0f64..=1.0) {
        let s = Event::full(5);
        prop_assert!(mu.bayes_update(&s).unwrap().approx_eq(&mu, 1e-12));
        prop_assert!(mu.conservative_update(&s, d).unwrap().approx_eq(&mu, 1e-12));
    }

    #[test]
    fn mixing_matches_update(mu in belief(4), a in event(4), d in 0.0f64..=1.0) {
        prop_assume!(mu.event_prob(&a).unwrap() > 1e-6);
        let via_mix = mu.mix(&mu.bayes_update(&a).unwrap(), d).unwrap();
        prop_assert!(via_mix.approx_eq(&mu.conservative_update(&a, d).unwrap(), 1e-12));
    }

    #[test]
    fn splicing_an_act_with_itself(f in act(4), a in event(4)) {
        prop_assert_eq!(f.splice(&a, &f).unwrap(), f);
    }

    #[test]
    fn expected_utility_is_linear_in_acts(f in act(4), g in act(4), w in 0.0f64..=1.0, mu in belief(4)) {
        let u = Utility::linear(0.0, 1.0).unwrap();
        let mixed = f.mix(&g, w).unwrap();
        let lhs = conservative::expected_utility(&mixed, &mu, &u).unwrap();
        let rhs = w * conservative::expected_utility(&f, &mu, &u).unwrap()
            + (1.0 - w) * conservative::expected_utility(&g, &mu, &u).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-12);
    }

    #[test]
    fn certainty_equivalent_respects_dominance(
        f in act(4),
        bump in prop::collection::vec(0.0f64..=1.0, 4),
        mu in belief(4),
        a in event(4),
        d in 0.0f64..=1.0,
        exponent in 0.2f64..=1.0,
    ) {
        prop_assume!(mu.event_prob(&a).unwrap() > 1e-6);
        let u = Utility::power(exponent, 0.0, 1.0).unwrap();
        let g = Act::new(f.outcomes().iter().zip(&bump).map(|(x, b)| (x + b).min(1.0)).collect());
        let model = ConservativeSeuModel::constant(u, mu, d).unwrap();
        let (cf, cg) = (model.certainty_equivalent(&f, &a).unwrap(), model.certainty_equivalent(&g, &a).unwrap());
        prop_assert!(cg >= cf - 1e-9);
    }
}

/// Constant acts are ranked the same way before and after any event.
#[test]
fn constant_acts_rank_the_same_after_every_event() {
    let levels: Vec<f64> = (0..=20).map(|k| k as f64 / 20.0).collect();
    let utilities = [
        Utility::linear(0.0, 1.0).unwrap(),
        Utility::power(0.5, 0.0, 1.0).unwrap(),
        Utility::piecewise_linear(vec![(0.0, 0.0), (0.3, 0.6), (1.0, 1.0)]).unwrap(),
    ];
    let priors = [
        table1(),
        Belief::new(vec![0.4, 0.1, 0.2, 0.3]).unwrap(),
        Belief::new(vec![0.0, 0.5, 0.5, 0.0]).unwrap(),
    ];
    let s = Event::full(4);
    for u in &utilities {
        for mu in &priors {
            for d in [0.0, 0.3, 1.0] {
                let model = ConservativeSeuModel::constant(u.clone(), mu.clone(), d).unwrap();
                // null events included: they leave the ex-ante ranking in place
                for a in Event::power_set(4).filter(|e| !e.is_empty()) {
                    for &x in &levels {
                        for &y in &levels {
                            let (fx, fy) = (Act::constant(x, 4), Act::constant(y, 4));
                            let before = model.prefers(&fx, &fy, &s).unwrap();
                            let after = model.prefers(&fx, &fy, &a).unwrap();
                            assert_eq!(before, after, "x={x} y={y} A={a}");
                            assert_eq!(before, Comparison::of(x, y));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn null_events_leave_preferences_alone() {
    let mu = Belief::new(vec![0.0, 0.5, 0.5, 0.0]).unwrap();
    let u = Utility::linear(0.0, 1.0).unwrap();
    let model = ConservativeSeuModel::constant(u, mu.clone(), 0.4).unwrap();
    let null = Event::from_indices(4, [0, 3]).unwrap();
    assert_eq!(model.posterior(&null).unwrap(), mu);
    assert!(model.delta(&null).is_err());
    let certain = null.complement();
    assert_eq!(model.posterior(&certain).unwrap(), mu);
    assert!(!model.is_identified(&certain));
}
