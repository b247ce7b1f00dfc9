//! Property-based tests of the kernel invariants.

use proptest::prelude::*;

use voronoi_census::geom::{circumcenter, in_circle, orientation, Point, Sign, SiteSet};
use voronoi_census::io::{format_points, parse_points};
use voronoi_census::regions::{feasible_witness, halfplane, HalfPlane};
use voronoi_census::Rat;

fn rat() -> impl Strategy<Value = Rat> {
    (-60i64..60, 1i64..8).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

fn point() -> impl Strategy<Value = Point<Rat>> {
    (rat(), rat()).prop_map(|(x, y)| Point::new(x, y))
}

proptest! {
    #[test]
    fn orientation_is_antisymmetric(p in point(), q in point(), r in point()) {
        prop_assert_eq!(orientation(&p, &q, &r), orientation(&q, &p, &r).flip());
    }

    #[test]
    fn orientation_is_cyclic(p in point(), q in point(), r in point()) {
        prop_assert_eq!(orientation(&p, &q, &r), orientation(&q, &r, &p));
    }

    #[test]
    fn in_circle_ignores_triple_order(a in point(), b in point(), c in point(), p in point()) {
        prop_assume!(orientation(&a, &b, &c) != Sign::Zero);
        let reference = in_circle(&a, &b, &c, &p).unwrap();
        prop_assert_eq!(in_circle(&b, &c, &a, &p).unwrap(), reference);
        prop_assert_eq!(in_circle(&c, &b, &a, &p).unwrap(), reference);
        prop_assert_eq!(in_circle(&a, &c, &b, &p).unwrap(), reference);
    }

    #[test]
    fn circumcenter_is_equidistant(a in point(), b in point(), c in point()) {
        prop_assume!(orientation(&a, &b, &c) != Sign::Zero);
        let (center, r2) = circumcenter(&a, &b, &c).unwrap();
        prop_assert_eq!(center.dist_sq(&a), r2.clone());
        prop_assert_eq!(center.dist_sq(&b), r2.clone());
        prop_assert_eq!(center.dist_sq(&c), r2.clone());
        // The defining points are exactly on the circle: any fourth point
        // of the circle is cocircular with them.
        prop_assert_eq!(in_circle(&a, &b, &c, &a).unwrap(), Sign::Zero);
    }

    #[test]
    fn halfplane_encodes_distance_comparison(x in point(), y in point(), p in point()) {
        prop_assume!(x != y);
        let h = halfplane(&x, &y).unwrap();
        prop_assert_eq!(h.contains(&p, false), p.dist_sq(&x) <= p.dist_sq(&y));
        prop_assert_eq!(h.contains(&p, true), p.dist_sq(&x) < p.dist_sq(&y));
    }

    #[test]
    fn feasibility_witness_is_sound(
        raw in prop::collection::vec((rat(), rat(), rat()), 0..12),
        strict: bool,
    ) {
        let constraints: Vec<HalfPlane<Rat>> = raw
            .into_iter()
            .map(|(a, b, c)| HalfPlane { a, b, c })
            .collect();
        if let Some(w) = feasible_witness(&constraints, strict) {
            for h in &constraints {
                prop_assert!(h.contains(&w, strict));
            }
        }
    }

    #[test]
    fn strict_feasibility_implies_nonstrict(
        raw in prop::collection::vec((rat(), rat(), rat()), 0..12),
    ) {
        let constraints: Vec<HalfPlane<Rat>> = raw
            .into_iter()
            .map(|(a, b, c)| HalfPlane { a, b, c })
            .collect();
        if feasible_witness(&constraints, true).is_some() {
            prop_assert!(feasible_witness(&constraints, false).is_some());
        }
    }

    #[test]
    fn points_file_round_trips(raw in prop::collection::vec((rat(), rat()), 3..9)) {
        let sites = raw.into_iter().map(|(x, y)| Point::new(x, y)).collect();
        let s = SiteSet::new(sites).unwrap();
        prop_assert_eq!(parse_points(&format_points(&s)).unwrap(), s);
    }
}
