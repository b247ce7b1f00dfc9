//! Cross-module campaigns on random instances: every identity, the poset
//! diagnostics, and independent oracles for the census paths.

use voronoi_census::census::{central_values, check_all, CentralValue};
use voronoi_census::geom::{orientation, Point, Sign, SiteSet};
use voronoi_census::instances::generate;
use voronoi_census::labels::LabelSet;
use voronoi_census::poset::{build_poset, LatticeSide};
use voronoi_census::regions::{region_full_dimensional, region_nonempty, region_witness};
use voronoi_census::unbounded::f_inf_vector;
use voronoi_census::Rat;

fn instance(n: usize, seed: u64) -> SiteSet<Rat> {
    generate(n, seed, 1_000_000).unwrap()
}

fn pt(x: i64, y: i64) -> Point<Rat> {
    Point::new(Rat::from_integer(x.into()), Rat::from_integer(y.into()))
}

/// Number of convex-hull vertices by monotone chain; an oracle for
/// `f_1_inf` that never looks at separability.
fn hull_vertex_count(s: &SiteSet<Rat>) -> i64 {
    fn chain<'a>(points: impl Iterator<Item = &'a Point<Rat>>) -> usize {
        let mut hull: Vec<&Point<Rat>> = Vec::new();
        for p in points {
            while hull.len() >= 2
                && orientation(hull[hull.len() - 2], hull[hull.len() - 1], p) != Sign::Positive
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.len()
    }
    let mut points: Vec<&Point<Rat>> = s.sites().iter().collect();
    points.sort_by(|a, b| (&a.x, &a.y).cmp(&(&b.x, &b.y)));
    let lower = chain(points.iter().copied());
    let upper = chain(points.iter().rev().copied());
    (lower + upper - 2) as i64
}

#[test]
fn campaign_small_instances_are_clean() {
    for n in 3..=8 {
        for seed in 0..3 {
            let s = instance(n, seed);
            let report = check_all(&s).unwrap();
            assert!(
                report.is_clean(),
                "n={n} seed={seed} failed: {:?}",
                report.failed_checks().collect::<Vec<_>>()
            );

            // The self-paired central entry is forced outright.
            match central_values(n) {
                CentralValue::RegionCount { k, value } => {
                    assert_eq!(report.f_enumerated[k], value, "n={n} seed={seed}")
                }
                CentralValue::VertexCount { k, value } => {
                    assert_eq!(report.v_from_circles[k], value, "n={n} seed={seed}")
                }
            }

            // Separability count of singletons against a hull oracle.
            assert_eq!(report.f_inf_separability[1], hull_vertex_count(&s));

            // Poset ranks must reproduce the f-vector, and be graded.
            let poset = build_poset(&s).unwrap();
            for k in 0..=n {
                assert_eq!(poset.rank(k).len() as i64, report.f_enumerated[k]);
            }
            assert_eq!(poset.is_graded(), (true, None));
            assert_eq!(poset.euler_characteristic().chi, report.chi);
        }
    }
}

#[test]
fn region_witnesses_have_their_subset_as_nearest_sites() {
    for n in 3..=6 {
        for seed in 0..2 {
            let s = instance(n, seed);
            for a in LabelSet::all_subsets(n) {
                if a.is_empty() || a == s.all_labels() {
                    continue;
                }
                match region_witness(&s, a) {
                    None => assert!(!region_nonempty(&s, a)),
                    Some(w) => {
                        let max_in = a.iter().map(|l| w.dist_sq(s.site(l))).max().unwrap();
                        let min_out = a
                            .complement(n)
                            .iter()
                            .map(|l| w.dist_sq(s.site(l)))
                            .min()
                            .unwrap();
                        assert!(max_in < min_out, "witness of V({a}) misplaced");
                    }
                }
            }
        }
    }
}

#[test]
fn nonempty_regions_are_full_dimensional() {
    for n in 3..=6 {
        for seed in 0..2 {
            let s = instance(n, seed);
            for a in LabelSet::all_subsets(n) {
                if a.is_empty() || a == s.all_labels() {
                    continue;
                }
                assert_eq!(
                    region_nonempty(&s, a),
                    region_full_dimensional(&s, a),
                    "degenerate region V({a}) at n={n} seed={seed}"
                );
            }
        }
    }
}

#[test]
fn n5_reduced_vectors_match_closed_form() {
    for seed in 0..5 {
        let report = check_all(&instance(5, seed)).unwrap();
        assert_eq!(report.reduced_f, vec![6, 12, 14]);
        assert_eq!(report.reduced_c, vec![6, 8]);
    }
}

#[test]
fn n12_reduced_vectors_match_closed_form() {
    let report = check_all(&instance(12, 0)).unwrap();
    assert!(report.is_clean());
    assert_eq!(report.reduced_f, vec![13, 33, 49, 61, 69, 73]);
    assert_eq!(report.reduced_c, vec![20, 36, 48, 56, 60]);
}

#[test]
fn convex_quad_is_the_two_empty_circle_class() {
    let s = SiteSet::new(vec![pt(0, 0), pt(4, 0), pt(5, 3), pt(1, 4)]).unwrap();
    assert_eq!(s.validate_general_position(), Ok(()));

    let report = check_all(&s).unwrap();
    assert!(report.is_clean());
    assert_eq!(report.c, vec![2, 2]);
    assert_eq!(report.f_enumerated, vec![1, 4, 5, 4, 1]);
    assert_eq!(report.v_from_circles, vec![0, 2, 4, 2, 0]);
    assert_eq!(report.chi, 1);

    // The one missing 2-set is the diagonal without an empty circle; its
    // endpoints then have the two surrounding triples as upper bounds.
    let poset = build_poset(&s).unwrap();
    let missing = LabelSet::from_labels(&[1, 3]);
    assert_eq!(poset.missing(), vec![missing]);
    assert_eq!(poset.size(), 15);
    let (a, b) = (LabelSet::singleton(1), LabelSet::singleton(3));
    assert_eq!(
        poset.minimal_upper_bounds(a, b),
        vec![
            LabelSet::from_labels(&[1, 2, 3]),
            LabelSet::from_labels(&[1, 3, 4])
        ]
    );
    let lattice = poset.is_lattice();
    assert!(!lattice.is_lattice);
    let witness = lattice.witness.unwrap();
    assert_eq!(witness.pair, (a, b));
    assert_eq!(witness.side, LatticeSide::Join);
}

#[test]
fn unbounded_census_counts_k_subsets_cut_off_by_lines() {
    // Five sites, one deep inside: singleton separability is exactly the
    // hull, and the dual symmetry pairs k with n - k.
    let s = SiteSet::new(vec![pt(0, 0), pt(20, 1), pt(9, 17), pt(8, 6), pt(3, 9)]).unwrap();
    assert_eq!(s.validate_general_position(), Ok(()));
    let f_inf = f_inf_vector(&s);
    assert_eq!(f_inf[1], hull_vertex_count(&s));
    assert_eq!(f_inf.iter().sum::<i64>(), 5 * 4);
    for k in 1..5 {
        assert_eq!(f_inf[k], f_inf[5 - k]);
    }
}
