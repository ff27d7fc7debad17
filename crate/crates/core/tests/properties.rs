//! Randomized invariants of the gauge, the symmetrization, the covering
//! oracle, and the certificate dispatcher.

mod common;

use common::*;
use latcover::criteria;
use latcover::geom::{regular_polygon, same_vertex_set, ConvexPolygon, Point};
use latcover::lattice::{self, Certificate};
use latcover::steiner;
use proptest::prelude::*;
use rand::Rng as _;
use std::f64::consts::PI;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gauge_is_positively_homogeneous(
        seed in any::<u64>(),
        lambda in 0.01f64..10.0,
        x in -2.0f64..2.0,
        y in -2.0f64..2.0,
    ) {
        let k = random_symmetric_polygon(&mut rng(seed));
        let v = Point::new(x, y);
        let g = k.gauge(v).unwrap();
        let scaled = k.gauge(v * lambda).unwrap();
        prop_assert!((scaled - lambda * g).abs() <= 1e-9 * (1.0 + lambda * g));
    }

    #[test]
    fn gauge_satisfies_triangle_inequality(
        seed in any::<u64>(),
        ux in -2.0f64..2.0,
        uy in -2.0f64..2.0,
        vx in -2.0f64..2.0,
        vy in -2.0f64..2.0,
    ) {
        let k = random_symmetric_polygon(&mut rng(seed));
        let u = Point::new(ux, uy);
        let v = Point::new(vx, vy);
        let sum = k.gauge(u + v).unwrap();
        prop_assert!(sum <= k.gauge(u).unwrap() + k.gauge(v).unwrap() + 1e-9);
    }

    #[test]
    fn gauge_is_rotation_invariant(
        seed in any::<u64>(),
        phi in 0.0f64..(2.0 * PI),
        x in -2.0f64..2.0,
        y in -2.0f64..2.0,
    ) {
        let k = random_symmetric_polygon(&mut rng(seed));
        let v = Point::new(x, y);
        let g = k.gauge(v).unwrap();
        let g_rot = k.rotate(phi).gauge(v.rotated(phi)).unwrap();
        prop_assert!((g - g_rot).abs() <= 1e-9 * (1.0 + g));
    }

    #[test]
    fn gauge_agrees_with_membership(
        seed in any::<u64>(),
        x in -2.0f64..2.0,
        y in -2.0f64..2.0,
    ) {
        let k = random_symmetric_polygon(&mut rng(seed));
        let v = Point::new(x, y);
        let g = k.gauge(v).unwrap();
        if g <= 1.0 - 1e-6 {
            prop_assert!(k.contains_point(v));
        } else if g >= 1.0 + 1e-6 {
            prop_assert!(!k.contains_point(v));
        }
    }

    #[test]
    fn steiner_preserves_area_and_chords(seed in any::<u64>()) {
        let k = random_convex_polygon(&mut rng(seed));
        if let Ok(st) = steiner::symmetrize(&k) {
            let sym = st.polygon();
            prop_assert!((sym.area() - k.area()).abs() <= 1e-9 * k.area().max(1.0));
            let (lo, hi) = k.bbox();
            for i in 0..10 {
                let x = lo.x + (hi.x - lo.x) * (0.05 + 0.09 * i as f64);
                let a = steiner::chord_length(&k, x);
                let b = steiner::chord_length(sym, x);
                prop_assert!((a - b).abs() <= 1e-9 * (1.0 + a), "chord at {x}: {a} vs {b}");
            }
            // mirror symmetry about the x axis
            let mirrored: Vec<Point> =
                sym.vertices().iter().rev().map(|v| Point::new(v.x, -v.y)).collect();
            let mirrored = ConvexPolygon::new(mirrored).unwrap();
            prop_assert!(same_vertex_set(sym, &mirrored, 1e-9));
        }
    }

    #[test]
    fn steiner_is_inclusion_monotone(seed in any::<u64>()) {
        let mut r = rng(seed);
        let inner = random_convex_polygon(&mut r);
        let mut pts = inner.vertices().to_vec();
        for _ in 0..5 {
            pts.push(Point::new(r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0)));
        }
        let outer = match ConvexPolygon::new(convex_hull(pts)) {
            Ok(k) => k,
            Err(_) => return Ok(()),
        };
        if let (Ok(st_in), Ok(st_out)) = (steiner::symmetrize(&inner), steiner::symmetrize(&outer)) {
            for v in st_in.polygon().vertices() {
                prop_assert!(
                    st_out.polygon().contains_point(*v),
                    "symmetral vertex {v} escaped the outer symmetral"
                );
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn corner_gauge_matches_oracle_on_doubly_symmetric_bodies(seed in any::<u64>()) {
        let k = random_doubly_symmetric_polygon(&mut rng(seed));
        let corner = lattice::covering_radius_doubly_symmetric(&k).unwrap();
        let hole = lattice::deep_hole_oracle(&k, 64, 3).unwrap();
        prop_assert!((corner - hole.radius).abs() <= 0.01, "corner {corner} oracle {}", hole.radius);
    }

    #[test]
    fn covering_radius_obeys_scaling_law(seed in any::<u64>()) {
        let k = random_symmetric_polygon(&mut rng(seed));
        let base = lattice::deep_hole_oracle(&k, 64, 3).unwrap().radius;
        for lambda in [0.5, 2.0] {
            let scaled = lattice::deep_hole_oracle(&k.scale(lambda), 64, 3).unwrap().radius;
            let expected = base / lambda;
            prop_assert!(
                (scaled - expected).abs() <= 0.01 * expected.max(1.0),
                "lambda {lambda}: {scaled} vs {expected}"
            );
        }
    }

    #[test]
    fn witnesses_are_always_verified(seed in any::<u64>(), scale in 0.4f64..1.2) {
        let k = random_symmetric_polygon(&mut rng(seed)).scale(scale);
        let v = lattice::covering_radius_with(&k, 64, 3).unwrap();
        if let Some(w) = v.witness {
            prop_assert!(!v.covers);
            prop_assert!(lattice::verify_witness(&k, 0.0, w));
        } else {
            prop_assert!(v.covers);
        }
    }

    #[test]
    fn sufficient_certificates_imply_small_oracle_radius(seed in any::<u64>(), scale in 0.6f64..1.6) {
        let k = random_symmetric_polygon(&mut rng(seed)).scale(scale);
        let v = lattice::covering_radius_with(&k, 64, 3).unwrap();
        if matches!(v.certificate, Certificate::InradiusBall | Certificate::SteinerSquare) {
            let hole = lattice::deep_hole_oracle(&k, 64, 3).unwrap();
            prop_assert!(hole.radius <= 1.0 + 0.01, "certified cover but oracle {}", hole.radius);
        }
    }
}

/// A sweep staying clearly below radius 1 means every placement of the
/// body contains a lattice point; checked against random placements.
#[test]
fn sub_critical_sweep_implies_lattice_point_in_every_placement() {
    let k = regular_polygon(6, 0.85, 0.0).unwrap();
    let report = lattice::has_covering_property(&k, 1024).unwrap();
    assert!(report.max_radius <= 0.99, "sweep max {}", report.max_radius);
    let mut r = rng(0x6c61747469636531);
    for i in 0..100_000 {
        let placed = sample_placement(&mut r, &k);
        assert!(
            lattice::contains_lattice_point(&placed),
            "placement {i} of a covering body missed the lattice"
        );
    }
}

/// The diagonal section function of the rotated hexagon attains its
/// minimum exactly at the interval endpoints, pinning the critical scale.
#[test]
fn hexagon_diagonal_minimum_sits_at_the_endpoints() {
    let n = 2000;
    let mut min = f64::INFINITY;
    for i in 0..=n {
        let theta = PI / 6.0 * i as f64 / n as f64;
        min = min.min(criteria::hexagon_diagonal(theta).unwrap());
    }
    let s0 = criteria::hexagon_diagonal(0.0).unwrap();
    assert!((min - s0).abs() <= 1e-9);
    let at_end = criteria::hexagon_diagonal(PI / 6.0).unwrap();
    assert!((at_end - s0).abs() <= 1e-12, "not attained at the far endpoint");
    assert!((2.0 * criteria::z_hexagon() * min - 1.0).abs() <= 1e-9);
}

/// Same for the decagon, over the full fold [0, pi/10] of lattice-distinct
/// rotations. Beyond pi/20 no closed form applies, so the diagonal value
/// is read off the constructed symmetral.
#[test]
fn decagon_diagonal_minimum_sits_at_the_endpoints() {
    let diagonal_value = |theta: f64| {
        let st = steiner::symmetrize_regular(10, theta).unwrap();
        1.0 / st.polygon().gauge(Point::new(1.0, 1.0)).unwrap()
    };
    let n = 400;
    let mut min = f64::INFINITY;
    for i in 0..=n {
        let theta = PI / 10.0 * i as f64 / n as f64;
        min = min.min(diagonal_value(theta));
    }
    let t0 = criteria::decagon_diagonal(0.0).unwrap();
    assert!((min - t0).abs() <= 1e-9, "min {min} vs t0 {t0}");
    assert!((diagonal_value(PI / 10.0) - t0).abs() <= 1e-9, "not attained at the far endpoint");
    assert!((2.0 * criteria::z_decagon() * min - 1.0).abs() <= 1e-9);
}
