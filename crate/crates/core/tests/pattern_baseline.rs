//! Recorded baseline: on even-order bases every pair is produced by a
//! pattern; odd-order bases go to the exact solver.

use hamlab_core::corpus::hamiltonian_connected_graphs;
use hamlab_core::lift::{mycielski_hc_certificate, CaseId, MethodTally};
use hamlab_core::suites::pattern_rate;

const EVEN_ORDER_PATTERN_RATE: f64 = 1.0;

fn tally(graphs: &[hamlab_core::Graph]) -> (MethodTally, std::collections::BTreeMap<CaseId, MethodTally>) {
    let mut t = MethodTally::default();
    let mut by_case = std::collections::BTreeMap::new();
    for g in graphs {
        let c = mycielski_hc_certificate(g).unwrap();
        t.merge(&c.tally);
        for (k, v) in c.by_case {
            by_case.entry(k).or_insert_with(MethodTally::default).merge(&v);
        }
    }
    (t, by_case)
}

#[test]
fn even_orders_meet_the_baseline() {
    for n in [4, 6] {
        let (t, by_case) = tally(&hamiltonian_connected_graphs(n).unwrap());
        assert!(pattern_rate(&t) >= EVEN_ORDER_PATTERN_RATE, "n={n}: {t:?}");
        if n == 6 {
            assert_eq!(by_case.keys().copied().collect::<Vec<_>>(), CaseId::ALL.to_vec(), "every case occurs");
        }
    }
}

#[test]
fn even_order_eight_sample_meets_the_baseline() {
    let all = hamiltonian_connected_graphs(8).unwrap();
    let sample: Vec<_> = all.iter().step_by(all.len() / 30 + 1).cloned().collect();
    let (t, _) = tally(&sample);
    assert!(pattern_rate(&t) >= EVEN_ORDER_PATTERN_RATE, "{t:?}");
}

#[test]
fn odd_orders_use_the_solver() {
    for n in [3, 5] {
        let (t, _) = tally(&hamiltonian_connected_graphs(n).unwrap());
        assert_eq!(t.pattern, 0, "n={n}");
        assert!(t.fallback > 0);
    }
}
