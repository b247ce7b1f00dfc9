//! Unbounded-region census via linear separability.
//!
//! Under general position, the order-`k` diagram has one unbounded region
//! per `k`-subset that a line can split off from the rest of the sites; this
//! module counts those subsets directly, independently of the Euler-derived
//! count `2(f_k - 1) - v_k`.
//!
//! Separability is decided by exhausting candidate lines through two sites:
//! the hulls of `A` and of its complement are disjoint iff some line through
//! two sites has all remaining `A`-sites strictly on one side and all
//! remaining complement-sites strictly on the other (the line can then be
//! nudged off the two defining sites, whichever side each belongs to). No 3
//! sites are collinear, so only the two defining sites lie on a candidate
//! line, which makes the test exact and complete.

use crate::geom::{orientation, Sign, SiteSet};
use crate::labels::LabelSet;
use crate::scalar::Scalar;

/// Whether a line separates the sites of `A` from the rest.
///
/// Precondition: `S` in general position and `A` a proper nonempty subset.
pub fn separable<T: Scalar>(s: &SiteSet<T>, a: LabelSet) -> bool {
    let table = OrientationTable::build(s);
    separable_in_table(&table, s.len(), a)
}

/// All pairwise-orientation signs of a site set, for the hot enumeration
/// loops: `sign(p, q, z)` of every ordered site triple, computed once.
pub struct OrientationTable {
    n: usize,
    signs: Vec<i8>,
}

impl OrientationTable {
    pub fn build<T: Scalar>(s: &SiteSet<T>) -> Self {
        let n = s.len();
        let mut signs = vec![0i8; n * n * n];
        for p in 1..=n {
            for q in 1..=n {
                if p == q {
                    continue;
                }
                for z in 1..=n {
                    if z == p || z == q {
                        continue;
                    }
                    signs[(p - 1) * n * n + (q - 1) * n + (z - 1)] =
                        orientation(s.site(p), s.site(q), s.site(z)).as_i8();
                }
            }
        }
        OrientationTable { n, signs }
    }

    fn sign(&self, p: usize, q: usize, z: usize) -> i8 {
        self.signs[(p - 1) * self.n * self.n + (q - 1) * self.n + (z - 1)]
    }
}

fn separable_in_table(table: &OrientationTable, n: usize, a: LabelSet) -> bool {
    debug_assert!(!a.is_empty() && a != LabelSet::full(n));
    for p in 1..=n {
        for q in 1..=n {
            if p == q {
                continue;
            }
            // A-sites must sit on the positive side, the rest on the negative.
            let ok = (1..=n).filter(|&z| z != p && z != q).all(|z| {
                let want = if a.contains(z) {
                    Sign::Positive
                } else {
                    Sign::Negative
                };
                table.sign(p, q, z) == want.as_i8()
            });
            if ok {
                return true;
            }
        }
    }
    false
}

/// The census of unbounded regions: `f_inf[k]` is the number of separable
/// `k`-subsets, indexed by order `k` in `0..=n`. The boundary entries are
/// fixed by definition: `f_inf[0] = f_inf[n] = 0`.
pub fn f_inf_vector<T: Scalar>(s: &SiteSet<T>) -> Vec<i64> {
    let n = s.len();
    let table = OrientationTable::build(s);
    let full = s.all_labels();
    let mut f_inf = vec![0i64; n + 1];
    for a in LabelSet::all_subsets(n) {
        if a.is_empty() || a == full {
            continue;
        }
        if separable_in_table(&table, n, a) {
            f_inf[a.len()] += 1;
        }
    }
    f_inf
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;
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
    fn hull_vertex_singleton_is_separable() {
        let s = interior_site_quad();
        for label in [1, 2, 3] {
            assert!(separable(&s, LabelSet::singleton(label)));
        }
    }

    #[test]
    fn interior_singleton_is_not_separable() {
        assert!(!separable(&interior_site_quad(), LabelSet::singleton(4)));
    }

    #[test]
    fn vertex_plus_interior_pair_is_separable() {
        // The segment from site 1 to the interior site avoids segment 2-3.
        assert!(separable(
            &interior_site_quad(),
            LabelSet::from_labels(&[1, 4])
        ));
    }

    #[test]
    fn f_inf_triangle() {
        assert_eq!(f_inf_vector(&triangle()), vec![0, 3, 3, 0]);
    }

    #[test]
    fn f_inf_interior_site() {
        assert_eq!(f_inf_vector(&interior_site_quad()), vec![0, 3, 6, 3, 0]);
    }

    #[test]
    fn singleton_count_equals_hull_vertices() {
        // Interior-site square-ish set: hull is the outer triangle.
        assert_eq!(f_inf_vector(&interior_site_quad())[1], 3);
        assert_eq!(f_inf_vector(&triangle())[1], 3);
    }

    #[test]
    fn complement_symmetry() {
        let s = interior_site_quad();
        for a in LabelSet::all_subsets(4) {
            if a.is_empty() || a == s.all_labels() {
                continue;
            }
            assert_eq!(separable(&s, a), separable(&s, a.complement(4)));
        }
    }
}
