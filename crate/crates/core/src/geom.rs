//! Exact planar geometry kernel: points, sign predicates, circumcircles, and
//! general-position validation of labeled site sets.
//!
//! All predicates return exact signs. There is no epsilon anywhere: a triple
//! is collinear iff its orientation determinant is exactly zero, and four
//! points are cocircular iff the lifted in-circle determinant is exactly zero.

use std::fmt;

use thiserror::Error;

use crate::labels::{LabelSet, MAX_LABELS};
use crate::scalar::{sq, two, Scalar};

/// A point of the plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    /// Squared Euclidean distance to `other`.
    pub fn dist_sq(&self, other: &Point<T>) -> T {
        sq(&(self.x.clone() - other.x.clone())) + sq(&(self.y.clone() - other.y.clone()))
    }

    /// Squared distance from the origin.
    pub fn norm_sq(&self) -> T {
        sq(&self.x) + sq(&self.y)
    }
}

impl<T: fmt::Display> fmt::Display for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of<T: Scalar>(value: &T) -> Sign {
        if value.is_positive() {
            Sign::Positive
        } else if value.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// Errors from predicates that require non-degenerate input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("degenerate triple: points are collinear")]
    CollinearTriple,
    #[error("identical points where distinct points are required")]
    IdenticalPoints,
}

/// Orientation of the ordered triple `(p, q, r)`.
///
/// `Positive` means counterclockwise, `Zero` collinear, `Negative` clockwise;
/// the value is the exact sign of the determinant `|q - p, r - p|`.
pub fn orientation<T: Scalar>(p: &Point<T>, q: &Point<T>, r: &Point<T>) -> Sign {
    let det = (q.x.clone() - p.x.clone()) * (r.y.clone() - p.y.clone())
        - (q.y.clone() - p.y.clone()) * (r.x.clone() - p.x.clone());
    Sign::of(&det)
}

/// Position of `p` relative to the circle through `a`, `b`, `c`.
///
/// Returns `Positive` iff `p` is strictly inside, `Zero` iff the four points
/// are cocircular, `Negative` iff strictly outside. The triple is reordered
/// to counterclockwise orientation internally, so the result does not depend
/// on the order of `a`, `b`, `c`. Fails if the triple is collinear.
pub fn in_circle<T: Scalar>(
    a: &Point<T>,
    b: &Point<T>,
    c: &Point<T>,
    p: &Point<T>,
) -> Result<Sign, GeomError> {
    let (b, c) = match orientation(a, b, c) {
        Sign::Zero => return Err(GeomError::CollinearTriple),
        Sign::Positive => (b, c),
        Sign::Negative => (c, b),
    };
    let row = |q: &Point<T>| {
        let dx = q.x.clone() - p.x.clone();
        let dy = q.y.clone() - p.y.clone();
        let d2 = sq(&dx) + sq(&dy);
        (dx, dy, d2)
    };
    let (ax, ay, ad) = row(a);
    let (bx, by, bd) = row(b);
    let (cx, cy, cd) = row(c);
    let det = ax * (by.clone() * cd.clone() - bd.clone() * cy.clone())
        - ay * (bx.clone() * cd - bd * cx.clone())
        + ad * (bx * cy - by * cx);
    Ok(Sign::of(&det))
}

/// Center and squared radius of the circle through three non-collinear points.
///
/// The center is the exact solution of the two perpendicular-bisector
/// equations; the squared radius is its squared distance to `a` (equal, by
/// construction, to the distances to `b` and `c`).
pub fn circumcenter<T: Scalar>(
    a: &Point<T>,
    b: &Point<T>,
    c: &Point<T>,
) -> Result<(Point<T>, T), GeomError> {
    let abx = b.x.clone() - a.x.clone();
    let aby = b.y.clone() - a.y.clone();
    let acx = c.x.clone() - a.x.clone();
    let acy = c.y.clone() - a.y.clone();
    let det = two::<T>() * (abx.clone() * acy.clone() - aby.clone() * acx.clone());
    if det.is_zero() {
        return Err(GeomError::CollinearTriple);
    }
    let db = b.norm_sq() - a.norm_sq();
    let dc = c.norm_sq() - a.norm_sq();
    let cx = (db.clone() * acy - dc.clone() * aby) / det.clone();
    let cy = (abx * dc - acx * db) / det;
    let center = Point::new(cx, cy);
    let r_squared = center.dist_sq(a);
    Ok((center, r_squared))
}

/// A circle determined by three labeled sites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circle<T> {
    /// The three defining labels, ascending.
    pub defining_labels: [usize; 3],
    pub center: Point<T>,
    pub r_squared: T,
}

/// Why a point set fails the general-position requirement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    Duplicate,
    Collinear,
    Cocircular,
}

/// A witnessed general-position violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    /// Offending labels, ascending.
    pub labels: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ViolationKind::Duplicate => "duplicate",
            ViolationKind::Collinear => "collinear",
            ViolationKind::Cocircular => "cocircular",
        };
        write!(f, "{kind} {}", LabelSet::from_labels(&self.labels))
    }
}

impl std::error::Error for Violation {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SiteSetError {
    #[error("need at least 3 sites, got {0}")]
    TooFewSites(usize),
    #[error("at most {MAX_LABELS} sites supported, got {0}")]
    TooManySites(usize),
}

/// A labeled planar point set `S = {s_1, ..., s_n}`; site `i` carries label `i`.
///
/// Construction only checks the size bounds. Whether the set is in general
/// position (no 3 sites collinear, no 4 cocircular, no duplicates) is decided
/// by [`SiteSet::validate_general_position`]; every census and oracle in this
/// crate states general position as a precondition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SiteSet<T> {
    sites: Vec<Point<T>>,
}

impl<T: Scalar> SiteSet<T> {
    pub fn new(sites: Vec<Point<T>>) -> Result<Self, SiteSetError> {
        if sites.len() < 3 {
            return Err(SiteSetError::TooFewSites(sites.len()));
        }
        if sites.len() > MAX_LABELS {
            return Err(SiteSetError::TooManySites(sites.len()));
        }
        Ok(SiteSet { sites })
    }

    /// Number of sites `n`.
    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        false // n >= 3 by construction
    }

    /// The site with 1-based `label`.
    pub fn site(&self, label: usize) -> &Point<T> {
        &self.sites[label - 1]
    }

    pub fn sites(&self) -> &[Point<T>] {
        &self.sites
    }

    /// The full label set `{1, ..., n}`.
    pub fn all_labels(&self) -> LabelSet {
        LabelSet::full(self.len())
    }

    /// The circle through the three sites named by `labels`.
    pub fn circle(&self, labels: [usize; 3]) -> Result<Circle<T>, GeomError> {
        let mut defining_labels = labels;
        defining_labels.sort_unstable();
        let [i, j, k] = defining_labels;
        let (center, r_squared) = circumcenter(self.site(i), self.site(j), self.site(k))?;
        Ok(Circle {
            defining_labels,
            center,
            r_squared,
        })
    }

    /// Checks the general-position requirement by brute force: every pair
    /// distinct, every 3-subset non-collinear, every 4-subset non-cocircular.
    /// The scan order (duplicates, then collinear triples, then cocircular
    /// quadruples, each in ascending label order) makes the reported witness
    /// deterministic.
    pub fn validate_general_position(&self) -> Result<(), Violation> {
        let n = self.len();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.site(i) == self.site(j) {
                    return Err(Violation {
                        kind: ViolationKind::Duplicate,
                        labels: vec![i, j],
                    });
                }
            }
        }
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    if orientation(self.site(i), self.site(j), self.site(k)) == Sign::Zero {
                        return Err(Violation {
                            kind: ViolationKind::Collinear,
                            labels: vec![i, j, k],
                        });
                    }
                }
            }
        }
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    for l in k + 1..=n {
                        let sign =
                            in_circle(self.site(i), self.site(j), self.site(k), self.site(l))
                                .expect("collinear triples were ruled out above");
                        if sign == Sign::Zero {
                            return Err(Violation {
                                kind: ViolationKind::Cocircular,
                                labels: vec![i, j, k, l],
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn pt(x: i64, y: i64) -> Point<Rat> {
        Point::new(Rat::from_integer(x.into()), Rat::from_integer(y.into()))
    }

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn orientation_signs() {
        assert_eq!(orientation(&pt(0, 0), &pt(1, 0), &pt(0, 1)), Sign::Positive);
        assert_eq!(orientation(&pt(0, 0), &pt(1, 1), &pt(2, 2)), Sign::Zero);
        assert_eq!(orientation(&pt(0, 0), &pt(0, 1), &pt(1, 0)), Sign::Negative);
    }

    #[test]
    fn orientation_antisymmetry() {
        let (p, q, r) = (pt(3, -1), pt(7, 2), pt(-4, 5));
        assert_eq!(orientation(&p, &q, &r), orientation(&q, &p, &r).flip());
    }

    #[test]
    fn in_circle_signs() {
        let (a, b, c) = (pt(0, 0), pt(4, 0), pt(0, 4));
        assert_eq!(in_circle(&a, &b, &c, &pt(1, 1)), Ok(Sign::Positive));
        assert_eq!(in_circle(&a, &b, &c, &pt(4, 4)), Ok(Sign::Zero));
        assert_eq!(in_circle(&a, &b, &c, &pt(10, 10)), Ok(Sign::Negative));
    }

    #[test]
    fn in_circle_rejects_collinear_triple() {
        assert_eq!(
            in_circle(&pt(0, 0), &pt(1, 1), &pt(2, 2), &pt(5, 0)),
            Err(GeomError::CollinearTriple)
        );
    }

    #[test]
    fn in_circle_is_permutation_invariant() {
        let (a, b, c, p) = (pt(0, 0), pt(4, 0), pt(0, 4), pt(1, 1));
        let expected = in_circle(&a, &b, &c, &p).unwrap();
        for (x, y, z) in [
            (&a, &b, &c),
            (&a, &c, &b),
            (&b, &a, &c),
            (&b, &c, &a),
            (&c, &a, &b),
            (&c, &b, &a),
        ] {
            assert_eq!(in_circle(x, y, z, &p).unwrap(), expected);
        }
    }

    #[test]
    fn circumcenter_right_isoceles() {
        let (center, r2) = circumcenter(&pt(0, 0), &pt(4, 0), &pt(0, 4)).unwrap();
        assert_eq!(center, pt(2, 2));
        assert_eq!(r2, rat(8, 1));
    }

    #[test]
    fn circumcenter_unit_example() {
        let (center, r2) = circumcenter(&pt(0, 0), &pt(2, 0), &pt(1, 1)).unwrap();
        assert_eq!(center, pt(1, 0));
        assert_eq!(r2, rat(1, 1));
    }

    #[test]
    fn circumcenter_exact_fraction() {
        // Independently: the bisector of (0,0),(10,0) is x = 5 and the
        // bisector of (0,0),(5,9) is 10x + 18y = 106, meeting at (5, 28/9).
        let (center, r2) = circumcenter(&pt(0, 0), &pt(10, 0), &pt(5, 9)).unwrap();
        assert_eq!(center, Point::new(rat(5, 1), rat(28, 9)));
        assert_eq!(r2, rat(25, 1) + rat(784, 81));
        // All three defining points at the same exact squared distance.
        for p in [pt(0, 0), pt(10, 0), pt(5, 9)] {
            assert_eq!(center.dist_sq(&p), r2);
        }
    }

    #[test]
    fn circumcenter_rejects_collinear() {
        assert_eq!(
            circumcenter(&pt(0, 0), &pt(1, 0), &pt(2, 0)),
            Err(GeomError::CollinearTriple)
        );
    }

    #[test]
    fn validate_accepts_triangle() {
        let s = SiteSet::new(vec![pt(0, 0), pt(4, 0), pt(0, 4)]).unwrap();
        assert_eq!(s.validate_general_position(), Ok(()));
    }

    #[test]
    fn validate_flags_cocircular_square() {
        let s = SiteSet::new(vec![pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)]).unwrap();
        let v = s.validate_general_position().unwrap_err();
        assert_eq!(v.kind, ViolationKind::Cocircular);
        assert_eq!(v.labels, vec![1, 2, 3, 4]);
        assert_eq!(v.to_string(), "cocircular {1,2,3,4}");
    }

    #[test]
    fn validate_flags_collinear() {
        let s = SiteSet::new(vec![pt(0, 0), pt(1, 0), pt(2, 0), pt(0, 5)]).unwrap();
        let v = s.validate_general_position().unwrap_err();
        assert_eq!(v.kind, ViolationKind::Collinear);
        assert_eq!(v.labels, vec![1, 2, 3]);
    }

    #[test]
    fn validate_flags_duplicate() {
        let s = SiteSet::new(vec![pt(0, 0), pt(1, 2), pt(1, 2)]).unwrap();
        let v = s.validate_general_position().unwrap_err();
        assert_eq!(v.kind, ViolationKind::Duplicate);
        assert_eq!(v.labels, vec![2, 3]);
    }

    #[test]
    fn site_set_size_bounds() {
        assert!(matches!(
            SiteSet::new(vec![pt(0, 0), pt(1, 0)]),
            Err(SiteSetError::TooFewSites(2))
        ));
    }

    #[test]
    fn circle_sorts_labels_and_lies_on_all_three() {
        let s = SiteSet::new(vec![pt(0, 0), pt(10, 0), pt(5, 9)]).unwrap();
        let circle = s.circle([3, 1, 2]).unwrap();
        assert_eq!(circle.defining_labels, [1, 2, 3]);
        for label in circle.defining_labels {
            assert_eq!(circle.center.dist_sq(s.site(label)), circle.r_squared);
        }
    }
}
