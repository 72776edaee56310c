mod common;

use std::collections::BTreeSet;

use common::rat;
use floor_commutator::atlas::{
    build_atlas, enumerate_sporadic, limit_sequence, sporadic_points, AtlasWindow, FeatureKind,
};
use floor_commutator::classifier::{beta_from_params, decide, kind_of, Frame, Kind};
use floor_commutator::exactnum::Rat;
use floor_commutator::symmetry::phi_orbit;

fn window(frame: Frame, x: (&str, &str), y: (&str, &str), den: u64, index: u64) -> AtlasWindow {
    AtlasWindow::new(frame, (rat(x.0), rat(x.1)), (rat(y.0), rat(y.1)), den, index).unwrap()
}

#[test]
fn every_emitted_point_is_a_member() {
    let windows = [
        window(Frame::Primed, ("0", "8/5"), ("0", "6/5"), 4, 4),
        window(Frame::SigmaTau, ("0", "1"), ("0", "1"), 4, 4),
        window(Frame::Muv, ("0", "4"), ("0", "4"), 3, 3),
        window(Frame::Ab, ("-2", "0"), ("-2", "0"), 3, 3),
    ];
    for w in windows {
        let features = build_atlas(&w).unwrap();
        assert!(!features.is_empty(), "{w:?}");
        for feature in &features {
            for point in feature.member_points() {
                let (alpha, beta) = w.frame.to_ab(&point.x, &point.y).unwrap();
                assert!(
                    decide(&alpha, &beta).unwrap().verdict.holds,
                    "{:?} at {alpha}, {beta}",
                    feature.kind
                );
            }
            if let FeatureKind::SporadicPoint { alpha, beta, .. } = &feature.kind {
                assert_eq!(kind_of(alpha, beta).unwrap(), Kind::Sporadic);
            }
        }
    }
}

#[test]
fn sporadic_points_are_phi_images_of_case_i_seeds() {
    let (p, q, k) = (2u64, 3u64, 8u64);
    let alpha = -Rat::frac(q as i64, p as i64);
    let sweep: BTreeSet<Rat> = sporadic_points(p, q, k).unwrap().into_iter().map(|(b, _)| b).collect();

    let mut images = BTreeSet::new();
    for m in 0..=k {
        for n in 1..=k {
            if m * q + n * p >= p * q {
                continue;
            }
            // r = 1 points lie on case-(i) curves
            let seed = beta_from_params(p, q, m, n, 1).unwrap();
            assert_eq!(kind_of(&alpha, &seed).unwrap(), Kind::CaseICurve);
            let rs: Vec<u64> = (2..=k).collect();
            for beta in phi_orbit(p, &seed, &rs).unwrap() {
                if kind_of(&alpha, &beta).unwrap() == Kind::Sporadic {
                    images.insert(beta);
                }
            }
        }
    }
    assert_eq!(sweep, images);
    assert!(sweep.contains(&rat("-6/11")));
}

#[test]
fn enlarging_bounds_never_drops_features() {
    let base = (Frame::Primed, ("0", "8/5"), ("0", "6/5"));
    let small = window(base.0, base.1, base.2, 3, 3);
    let large = window(base.0, base.1, base.2, 5, 5);
    let before = build_atlas(&small).unwrap();
    let after = build_atlas(&large).unwrap();
    for feature in &before {
        let found = after
            .iter()
            .any(|other| other.kind == feature.kind && feature.geometry.iter().all(|pt| other.geometry.contains(pt)));
        assert!(found, "lost {:?}", feature.kind);
    }
    assert!(after.len() > before.len());
}

#[test]
fn sporadic_listing_is_sorted_and_windowed() {
    let w = AtlasWindow::figure_one();
    let features = enumerate_sporadic(3, 2, &w).unwrap();
    let betas: Vec<Rat> = features
        .iter()
        .map(|f| match &f.kind {
            FeatureKind::SporadicPoint { beta, .. } => beta.clone(),
            other => panic!("unexpected {other:?}"),
        })
        .collect();
    let mut sorted = betas.clone();
    sorted.sort();
    sorted.reverse();
    assert_eq!(betas, sorted);
    assert!(features.iter().all(|f| w.contains(&f.geometry[0])));
    assert!(enumerate_sporadic(1, 1, &w).unwrap().is_empty());
}

#[test]
fn limit_sequences_approach_the_segment_end() {
    for (p, q, m, n) in [(2u64, 3u64, 0u64, 1u64), (3, 2, 0, 1), (5, 3, 1, 1), (3, 5, 2, 1)] {
        let seq = limit_sequence(p, q, m, n, 40).unwrap();
        let end = -Rat::frac(1, p as i64);
        assert!(seq.windows(2).all(|w| w[0] < w[1]));
        assert!(seq.iter().all(|b| *b < end));
        let bound = Rat::frac(1, 40) * Rat::frac(1, p as i64);
        assert!((seq.last().unwrap() - &end).abs() < bound);
    }
    // β(2, 3, 1, 1, r) = −3r/(6r − 1)
    assert_eq!(
        limit_sequence(2, 3, 1, 1, 4).unwrap(),
        vec![rat("-3/5"), rat("-6/11"), rat("-9/17"), rat("-12/23")]
    );
    assert!(limit_sequence(2, 3, 2, 1, 4).is_err());
}
