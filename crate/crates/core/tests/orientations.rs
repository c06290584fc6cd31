//! Properties over arbitrary orientations of Aₙ, n ≤ 5.

use std::sync::Arc;

use proptest::prelude::*;
use tiltlab_core::bb::{
    b_hasse, bb_vertices, make_bb_tilt, transport_construct, verify_properties,
};
use tiltlab_core::quiver::{Arrow, Quiver};
use tiltlab_core::serial::{from_json, lambda_from_report, lambda_report, to_json};
use tiltlab_core::tilting::{build_ind_table, enumerate_tilting, exchange_quiver, hasse};

/// Aₙ with arrow k between vertices k and k+1, pointing right when `flips[k]` is false.
fn oriented_a(flips: &[bool]) -> Arc<Quiver> {
    let arrows = flips
        .iter()
        .enumerate()
        .map(|(k, &f)| {
            let (s, t) = if f { (k + 2, k + 1) } else { (k + 1, k + 2) };
            Arrow {
                name: format!("a{k}"),
                source: s,
                target: t,
            }
        })
        .collect();
    Arc::new(Quiver::new(flips.len() + 1, arrows).unwrap())
}

fn catalan(n: usize) -> usize {
    (0..n).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn counts_do_not_depend_on_orientation(flips in prop::collection::vec(any::<bool>(), 1..5)) {
        let n = flips.len() + 1;
        let tbl = build_ind_table(&oriented_a(&flips)).unwrap();
        prop_assert_eq!(tbl.len(), n * (n + 1) / 2);
        let tilts = enumerate_tilting(&tbl);
        prop_assert_eq!(tilts.len(), catalan(n));
        let k = hasse(&tbl, &tilts);
        prop_assert_eq!(&exchange_quiver(&tbl, &tilts).arrows, &k.arrows);
        prop_assert_eq!(k.sources().len(), 1);
        prop_assert_eq!(k.sinks().len(), 1);
        let back = lambda_from_report(&tbl, &from_json(&to_json(&lambda_report(&tbl, &k, None))).unwrap());
        prop_assert_eq!(back.unwrap(), k);
    }

    #[test]
    fn bb_tilts_pass_every_check(flips in prop::collection::vec(any::<bool>(), 1..5)) {
        let tbl = build_ind_table(&oriented_a(&flips)).unwrap();
        let k = hasse(&tbl, &enumerate_tilting(&tbl));
        for i in bb_vertices(&tbl).unwrap() {
            let d = make_bb_tilt(&tbl, i).unwrap();
            let oracle = b_hasse(&tbl, &d);
            let report = verify_properties(&tbl, &d, &k, &oracle).unwrap();
            prop_assert!(report.all_passed(), "vertex {}:\n{}", i, report);
            prop_assert_eq!(transport_construct(&tbl, &d, &k).unwrap(), oracle);
        }
    }
}
