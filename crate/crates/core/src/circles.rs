//! Circle census: the order of every site-triple circle and the derived
//! `c`- and `v`-vectors.
//!
//! The order of the circle through three sites is the number of further
//! sites strictly inside it. Each circle center is a Voronoi vertex of the
//! diagrams of orders `k + 1` and `k + 2`, where `k` is the circle's order,
//! which is what `v_vector_from_circles` encodes.
//!
//! Indexing convention: the c-vector has length `n - 2` and is indexed by
//! circle order `i` in `0..=n-3`. Per-order diagram vectors (here the
//! v-vector) have length `n + 1` and are indexed directly by the diagram
//! order `k` in `0..=n`, with the order-0 slot fixed by convention.

use crate::geom::{in_circle, Circle, Sign, SiteSet};
use crate::scalar::Scalar;

/// A circle together with its order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleRecord<T> {
    pub circle: Circle<T>,
    /// Number of sites strictly inside, the defining three excluded.
    pub order: i64,
}

/// Number of sites of `S` strictly inside the circle through the `triple`.
///
/// Precondition: `S` in general position (so no site lies exactly on the
/// circle and the triple is not collinear).
pub fn circle_order<T: Scalar>(s: &SiteSet<T>, triple: [usize; 3]) -> i64 {
    let [i, j, k] = triple;
    let (a, b, c) = (s.site(i), s.site(j), s.site(k));
    let mut order = 0;
    for z in 1..=s.len() {
        if z == i || z == j || z == k {
            continue;
        }
        let sign =
            in_circle(a, b, c, s.site(z)).expect("triple collinear: not in general position");
        if sign == Sign::Positive {
            order += 1;
        }
    }
    order
}

/// The record for one triple: circle geometry plus order.
pub fn circle_record<T: Scalar>(s: &SiteSet<T>, triple: [usize; 3]) -> CircleRecord<T> {
    CircleRecord {
        circle: s
            .circle(triple)
            .expect("triple collinear: not in general position"),
        order: circle_order(s, triple),
    }
}

/// All `C(n,3)` circle records, triples in ascending lexicographic order.
pub fn circle_records<T: Scalar>(s: &SiteSet<T>) -> Vec<CircleRecord<T>> {
    let n = s.len();
    let mut records = Vec::with_capacity(n * (n - 1) * (n - 2) / 6);
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                records.push(circle_record(s, [i, j, k]));
            }
        }
    }
    records
}

/// The c-vector: `counts[i]` is the number of triples whose circle has
/// order `i`, for `i` in `0..=n-3`.
pub fn c_vector<T: Scalar>(s: &SiteSet<T>) -> Vec<i64> {
    let n = s.len();
    let mut counts = vec![0i64; n - 2];
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                counts[circle_order(s, [i, j, k]) as usize] += 1;
            }
        }
    }
    counts
}

/// Vertex counts per order from the c-vector: `v_k = c_{k-1} + c_{k-2}`,
/// reading `c` as zero outside `0..=n-3`.
///
/// Returns the order-indexed vector of length `n + 1` (`v_0 = 0`).
pub fn v_vector_from_circles(c: &[i64]) -> Vec<i64> {
    let n = c.len() + 2;
    let c_at = |i: isize| {
        if i >= 0 && (i as usize) < c.len() {
            c[i as usize]
        } else {
            0
        }
    };
    (0..=n as isize)
        .map(|k| if k == 0 { 0 } else { c_at(k - 1) + c_at(k - 2) })
        .collect()
}
