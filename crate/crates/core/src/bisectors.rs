//! Direct edge census by bisector segmentation.
//!
//! The bisector of sites `a` and `b` passes through the circumcenters of
//! `(a, b, x)` for every third site `x`; under general position these
//! `n - 2` centers are distinct, so they cut the bisector into `n - 1` open
//! pieces. On each piece the number `j` of sites strictly closer than `a`
//! (equivalently `b`) is constant, and the piece is an edge of the order
//! `j + 1` diagram. Tallying the pieces of all `C(n,2)` bisectors therefore
//! yields the e-vector without ever touching the region oracle — the two
//! paths check each other.

use crate::geom::{circumcenter, Point, SiteSet};
use crate::scalar::{two, Scalar};

/// One bisector cut into segments, with the per-segment closer-site counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BisectorSegmentation<T> {
    /// The two labels `{a, b}`, ascending.
    pub pair: (usize, usize),
    /// Parameters of the `n - 2` circumcenters along the bisector,
    /// strictly increasing.
    pub cut_parameters: Vec<T>,
    /// For each of the `n - 1` open segments, the number of sites strictly
    /// closer than the defining pair. Consecutive entries differ by one.
    pub segment_orders: Vec<i64>,
}

/// Segments the bisector of sites `a` and `b`.
///
/// The bisector is parametrized as `M + t * D` with `M` the midpoint and `D`
/// the 90-degree rotation of the displacement; circumcenter parameters come
/// from exact projection. Sample points for the open segments are midpoints
/// of consecutive cuts, and one parameter unit beyond the extremes for the
/// two rays. A sample point never ties with a third site: a tie would make
/// it a circumcenter, i.e. one of the cuts.
///
/// Precondition: `S` in general position, `a != b`.
pub fn bisector_segments<T: Scalar>(s: &SiteSet<T>, a: usize, b: usize) -> BisectorSegmentation<T> {
    assert_ne!(a, b, "bisector needs two distinct labels");
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    let pa = s.site(a);
    let pb = s.site(b);

    let midpoint = Point::new(
        (pa.x.clone() + pb.x.clone()) / two::<T>(),
        (pa.y.clone() + pb.y.clone()) / two::<T>(),
    );
    let dir = Point::new(pa.y.clone() - pb.y.clone(), pb.x.clone() - pa.x.clone());
    let dir_norm = dir.norm_sq();

    let mut cut_parameters: Vec<T> = (1..=s.len())
        .filter(|&x| x != a && x != b)
        .map(|x| {
            let (center, _) =
                circumcenter(pa, pb, s.site(x)).expect("collinear triple: not in general position");
            // center = midpoint + t * dir, so t = (center - midpoint) . dir / |dir|^2
            let dx = center.x - midpoint.x.clone();
            let dy = center.y - midpoint.y.clone();
            (dx * dir.x.clone() + dy * dir.y.clone()) / dir_norm.clone()
        })
        .collect();
    cut_parameters.sort();
    for w in cut_parameters.windows(2) {
        assert!(
            w[0] != w[1],
            "coincident circumcenters on a bisector: not in general position"
        );
    }

    let at = |t: &T| {
        Point::new(
            midpoint.x.clone() + t.clone() * dir.x.clone(),
            midpoint.y.clone() + t.clone() * dir.y.clone(),
        )
    };
    let closer_count = |p: &Point<T>| {
        let d_pair = p.dist_sq(pa);
        (1..=s.len())
            .filter(|&z| z != a && z != b)
            .filter(|&z| p.dist_sq(s.site(z)) < d_pair)
            .count() as i64
    };

    let mut samples = Vec::with_capacity(cut_parameters.len() + 1);
    samples.push(cut_parameters[0].clone() - T::one());
    for w in cut_parameters.windows(2) {
        samples.push((w[0].clone() + w[1].clone()) / two::<T>());
    }
    samples.push(cut_parameters.last().unwrap().clone() + T::one());

    let segment_orders: Vec<i64> = samples.iter().map(|t| closer_count(&at(t))).collect();
    for w in segment_orders.windows(2) {
        debug_assert_eq!(
            (w[0] - w[1]).abs(),
            1,
            "crossing one circumcenter must toggle exactly one site"
        );
    }

    BisectorSegmentation {
        pair: (a, b),
        cut_parameters,
        segment_orders,
    }
}

/// The e-vector from direct segmentation: `e[k]` counts, over all bisectors,
/// the segments with `k - 1` strictly closer sites. Indexed by order `k` in
/// `0..=n`; `e[0] = e[n] = 0`.
pub fn e_vector<T: Scalar>(s: &SiteSet<T>) -> Vec<i64> {
    let n = s.len();
    let mut e = vec![0i64; n + 1];
    for a in 1..=n {
        for b in a + 1..=n {
            for j in bisector_segments(s, a, b).segment_orders {
                e[j as usize + 1] += 1;
            }
        }
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn pt(x: i64, y: i64) -> Point<Rat> {
        Point::new(Rat::from_integer(x.into()), Rat::from_integer(y.into()))
    }

    fn triangle() -> SiteSet<Rat> {
        SiteSet::new(vec![pt(0, 0), pt(4, 0), pt(0, 4)]).unwrap()
    }

    fn interior_site_quad() -> SiteSet<Rat> {
        SiteSet::new(vec![pt(0, 0), pt(10, 0), pt(5, 9), pt(5, 4)]).unwrap()
    }

    #[test]
    fn triangle_bisector_has_two_segments() {
        let seg = bisector_segments(&triangle(), 1, 2);
        assert_eq!(seg.pair, (1, 2));
        assert_eq!(seg.cut_parameters.len(), 1);
        let mut orders = seg.segment_orders.clone();
        orders.sort();
        assert_eq!(orders, vec![0, 1]);
    }

    #[test]
    fn triangle_segment_totals() {
        let s = triangle();
        let mut by_order = [0i64; 2];
        for a in 1..=3 {
            for b in a + 1..=3 {
                for j in bisector_segments(&s, a, b).segment_orders {
                    by_order[j as usize] += 1;
                }
            }
        }
        assert_eq!(by_order, [3, 3]);
    }

    #[test]
    fn e_vector_triangle() {
        assert_eq!(e_vector(&triangle()), vec![0, 3, 3, 0]);
    }

    #[test]
    fn e_vector_interior_site() {
        assert_eq!(e_vector(&interior_site_quad()), vec![0, 6, 9, 3, 0]);
    }

    #[test]
    fn segment_count_is_quadratic() {
        let s = interior_site_quad();
        let n = 4i64;
        let total: i64 = e_vector(&s).iter().sum();
        assert_eq!(total, n * (n - 1) * (n - 1) / 2);
        for a in 1..=4 {
            for b in a + 1..=4 {
                assert_eq!(bisector_segments(&s, a, b).segment_orders.len(), 3);
            }
        }
    }

    #[test]
    fn label_order_does_not_matter() {
        let s = interior_site_quad();
        assert_eq!(bisector_segments(&s, 3, 1), bisector_segments(&s, 1, 3));
    }
}
