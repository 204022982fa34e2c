//! A critical-looking digraph with a source: the raw presentation still gives a
//! matroid whose pair (A, B) is blocked, and the source lets the pair be pushed
//! down to a smaller matroid.

use bo_core::critical::{build_z_delta, CriticalGraph};
use bo_core::exchange::{has_exchange_ordering, source_sink_reduction, OrderingOutcome};
use bo_core::Matroid;

fn with_source() -> CriticalGraph {
    // b3 has only outgoing edges
    CriticalGraph {
        r: 4,
        s: 2,
        t: 3,
        orientation: vec![vec![false, true, false], vec![true, false, false]],
    }
}

#[test]
fn rejected_by_the_checked_constructor() {
    let d = with_source();
    assert!(d.check().is_err());
    assert_eq!(d.source_or_sink().as_deref(), Some("b3"));
}

#[test]
fn reduction_keeps_the_pair_blocked() {
    let d = with_source();
    let z = build_z_delta(&d).unwrap();
    let m = Matroid::new(z.merged).unwrap();
    let (a, b) = (d.a(), d.b());
    let OrderingOutcome::Blocked(bl) = has_exchange_ordering(&m, a, b).unwrap() else {
        panic!("pair should be blocked");
    };
    assert_eq!(bl.x_side.len() + bl.y_side.len(), m.r() + 1);
    let red = source_sink_reduction(&m, a, b, &bl).unwrap().expect("a source exists");
    assert_eq!(red.minor.n(), m.n() - 2);
    assert_eq!(red.minor.r(), m.r() - 1);
    assert!(red.minor.is_basis(red.basis_a).unwrap() && red.minor.is_basis(red.basis_b).unwrap());
    assert!(!has_exchange_ordering(&red.minor, red.basis_a, red.basis_b).unwrap().is_ordering());
}
