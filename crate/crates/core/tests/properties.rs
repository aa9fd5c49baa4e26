//! Property tests for the geometric kernel and the constructions.

use proptest::prelude::*;

use ovals::construct::{
    b1_feasible, b2_family_equivalence, construct_oval_b1, construct_oval_b2,
    construct_oval_b2_angle_variant, encircle_adjacent, encircle_overlapping,
    encircle_separate_family, encircle_separate_single, validate_encompassing,
};
use ovals::geom::{
    intersect_circle_circle, intersect_line_circle, perpendicular_bisector, reflect_point,
    CircleSpec, LineSpec, Point, Tolerance, Vec2,
};
use ovals::oval::{measure_semiaxes, validate_oval};

const TOL: Tolerance = Tolerance {
    abs_eps: 1e-9,
    rel_eps: 1e-9,
};

fn coord() -> impl Strategy<Value = f64> {
    -10.0..10.0f64
}

fn radius() -> impl Strategy<Value = f64> {
    0.1..5.0f64
}

proptest! {
    #[test]
    fn circle_circle_intersections_lie_on_both(
        (x1, y1, r1) in (coord(), coord(), radius()),
        (x2, y2, r2) in (coord(), coord(), radius()),
    ) {
        let c1 = CircleSpec::new(Point::new(x1, y1), r1).unwrap();
        let c2 = CircleSpec::new(Point::new(x2, y2), r2).unwrap();
        if let Ok(points) = intersect_circle_circle(c1, c2, TOL) {
            for p in points {
                prop_assert!((p.dist(c1.centre) - r1).abs() < 1e-7);
                prop_assert!((p.dist(c2.centre) - r2).abs() < 1e-7);
            }
        }
    }

    #[test]
    fn line_circle_intersections_lie_on_both(
        (ax, ay) in (coord(), coord()),
        (dx, dy) in (coord(), coord()),
        (cx, cy, r) in (coord(), coord(), radius()),
    ) {
        prop_assume!(dx.hypot(dy) > 1e-3);
        let line = LineSpec::new(Point::new(ax, ay), Vec2::new(dx, dy)).unwrap();
        let circle = CircleSpec::new(Point::new(cx, cy), r).unwrap();
        for p in intersect_line_circle(line, circle, TOL) {
            prop_assert!((p.dist(circle.centre) - r).abs() < 1e-7);
            prop_assert!(line.distance_to(p) < 1e-7);
        }
    }

    #[test]
    fn reflection_is_an_involution(
        (px, py) in (coord(), coord()),
        (ax, ay) in (coord(), coord()),
        (dx, dy) in (coord(), coord()),
    ) {
        prop_assume!(dx.hypot(dy) > 1e-3);
        let line = LineSpec::new(Point::new(ax, ay), Vec2::new(dx, dy)).unwrap();
        let p = Point::new(px, py);
        let back = reflect_point(reflect_point(p, line), line);
        prop_assert!(back.dist(p) < 1e-8);
    }

    #[test]
    fn bisector_points_are_equidistant(
        (ax, ay) in (coord(), coord()),
        (bx, by) in (coord(), coord()),
        t in -5.0..5.0f64,
    ) {
        let a = Point::new(ax, ay);
        let b = Point::new(bx, by);
        prop_assume!(a.dist(b) > 1e-3);
        let bis = perpendicular_bisector(a, b, TOL).unwrap();
        let p = bis.point_at(t);
        prop_assert!((p.dist(a) - p.dist(b)).abs() < 1e-7);
    }

    #[test]
    fn b1_round_trips(ae in 0.1..10.0f64, span in 0.01..10.0f64, extra in 0.001..10.0f64) {
        let ce = ae + span;
        let oa = (ae * ae + ce * ce) / (2.0 * ae) + extra;
        let (oval, _) = construct_oval_b1(ae, ce, oa, TOL).unwrap();
        prop_assert!(validate_oval(&oval, TOL).valid);
        let (minor, major) = measure_semiaxes(&oval, TOL).unwrap();
        prop_assert!((minor - ae).abs() < 1e-9 * ae.max(1.0));
        prop_assert!((major - ce).abs() < 1e-9 * ce.max(1.0));
        prop_assert!((oval.r_large - oa).abs() < 1e-9 * oa.max(1.0));
    }

    #[test]
    fn b2_round_trips(ea in 0.1..10.0f64, span in 0.01..10.0f64, frac in 0.01..0.99f64) {
        let ec = ea + span;
        let ct = frac * ea;
        let (oval, tr) = construct_oval_b2(ea, ec, ct, TOL).unwrap();
        prop_assert!(validate_oval(&oval, TOL).valid);
        let (minor, major) = measure_semiaxes(&oval, TOL).unwrap();
        prop_assert!((minor - ea).abs() < 1e-9 * ea.max(1.0));
        prop_assert!((major - ec).abs() < 1e-9 * ec.max(1.0));
        prop_assert!((oval.r_small - ct).abs() < 1e-9 * ct.max(1.0));

        // Chain od = ot + ct = ox + xa = oa on the trace.
        let o = tr.find_point("o").unwrap();
        let d = tr.find_point("d").unwrap();
        let t = tr.find_point("t").unwrap();
        let x = tr.find_point("x").unwrap();
        let a = tr.find_point("a").unwrap();
        let od = o.dist(d);
        let band = 1e-9 * ec.max(1.0);
        prop_assert!((od - (o.dist(t) + ct)).abs() < band);
        prop_assert!((od - (o.dist(x) + x.dist(a))).abs() < band);
        prop_assert!((od - o.dist(a)).abs() < band);
    }

    #[test]
    fn b2_variant_agrees(ea in 0.1..10.0f64, span in 0.01..10.0f64, frac in 0.01..0.99f64) {
        let ec = ea + span;
        let ct = frac * ea;
        let (a, _) = construct_oval_b2(ea, ec, ct, TOL).unwrap();
        let (b, _) = construct_oval_b2_angle_variant(ea, ec, ct, TOL).unwrap();
        for (p, q) in a.centres.iter().zip(b.centres.iter()) {
            prop_assert!(p.dist(*q) < 1e-9 * ec.max(1.0));
        }
    }

    #[test]
    fn feasibility_forms_agree(ae in 0.1..10.0f64, span in 0.01..10.0f64, oa in 0.1..40.0f64) {
        let ce = ae + span;
        // b1_feasible itself errors if the two forms disagree away from the
        // boundary.
        let _ = b1_feasible(ae, ce, oa).unwrap();
    }

    #[test]
    fn encircle_adjacent_tangent(r1 in radius(), r2 in radius(), angle in 0.0..6.2f64) {
        let c1 = CircleSpec::new(Point::new(0.0, 0.0), r1).unwrap();
        let d = r1 + r2;
        let c2 = CircleSpec::new(Point::new(d * angle.cos(), d * angle.sin()), r2).unwrap();
        let res = encircle_adjacent(c1, c2, TOL).unwrap();
        prop_assert!(validate_encompassing(&res, &[c1, c2], TOL).is_ok());
    }

    #[test]
    fn encircle_overlapping_tangent(r1 in radius(), r2 in radius(), frac in 0.05..0.95f64) {
        let lo = (r1 - r2).abs();
        let hi = r1 + r2;
        let d = lo + frac * (hi - lo);
        prop_assume!(d > lo + 1e-3 && d < hi - 1e-3);
        let c1 = CircleSpec::new(Point::new(0.0, 0.0), r1).unwrap();
        let c2 = CircleSpec::new(Point::new(d, 0.0), r2).unwrap();
        let res = encircle_overlapping(c1, c2, TOL).unwrap();
        prop_assert!(validate_encompassing(&res, &[c1, c2], TOL).is_ok());
    }

    #[test]
    fn encircle_separate_single_tangent(r1 in radius(), r2 in radius(), gap in 0.01..1.0f64) {
        let d = r1 + r2 + gap;
        let c1 = CircleSpec::new(Point::new(0.0, 0.0), r1).unwrap();
        let c2 = CircleSpec::new(Point::new(d, 0.0), r2).unwrap();
        match encircle_separate_single(c1, c2, TOL) {
            Ok(res) => prop_assert!(validate_encompassing(&res, &[c1, c2], TOL).is_ok()),
            Err(ovals::Error::TooFarApart { .. }) => {}
            Err(e) => return Err(TestCaseError::fail(format!("unexpected error {e}"))),
        }
    }

    #[test]
    fn encircle_family_tangent_and_affine(
        r1 in radius(),
        r2 in radius(),
        gap in 0.01..3.0f64,
        d1 in 0.0..5.0f64,
        d2 in 0.0..5.0f64,
    ) {
        let dist = r1 + r2 + gap;
        let c1 = CircleSpec::new(Point::new(0.0, 0.0), r1).unwrap();
        let c2 = CircleSpec::new(Point::new(dist, 0.0), r2).unwrap();
        let a = encircle_separate_family(c1, c2, d1, TOL).unwrap();
        let b = encircle_separate_family(c1, c2, d2, TOL).unwrap();
        prop_assert!(validate_encompassing(&a, &[c1, c2], TOL).is_ok());
        prop_assert!(validate_encompassing(&b, &[c1, c2], TOL).is_ok());
        // Radius is affine in the parameter with unit slope.
        prop_assert!(((b.circle.radius - a.circle.radius) - (d2 - d1)).abs() < 1e-9 * dist);
    }

    #[test]
    fn b2_and_family_agree(ea in 0.1..10.0f64, span in 0.01..10.0f64, frac in 0.01..0.99f64) {
        let ec = ea + span;
        let ct = frac * ea;
        prop_assert!(b2_family_equivalence(ea, ec, ct, TOL).unwrap());
    }
}
