//! Region oracle: decides emptiness and full-dimensionality of the Voronoi
//! region `V(A)` by exact linear feasibility, and enumerates the poset
//! membership set / f-vector over all label subsets.
//!
//! `V(A)` is the set of points at least as close to every site of `A` as to
//! every site outside `A`, i.e. the intersection of the `|A| * (n - |A|)`
//! halfplanes `h(x, y)` for `x` in `A`, `y` outside. Each halfplane is the
//! linearization `2(y - x) . p <= |y|^2 - |x|^2` of `d(x,p) <= d(y,p)`.
//!
//! Feasibility of a halfplane system is decided by Fourier-Motzkin
//! elimination in exact arithmetic: eliminate the first coordinate by
//! combining every lower bound with every upper bound, then resolve the
//! remaining one-variable system. The solver also produces a witness point,
//! which is handy for independent verification (a strict witness of `V(A)`
//! must have exactly `A` as its set of nearest sites).

use thiserror::Error;

use crate::geom::{GeomError, Point, SiteSet};
use crate::labels::LabelSet;
use crate::scalar::{two, Scalar};

/// The constraint `a*x + b*y <= c` (or `< c` in strict contexts).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfPlane<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Scalar> HalfPlane<T> {
    /// Whether `p` satisfies the constraint, with `<=` or `<` per `strict`.
    pub fn contains(&self, p: &Point<T>, strict: bool) -> bool {
        let lhs = self.a.clone() * p.x.clone() + self.b.clone() * p.y.clone();
        if strict {
            lhs < self.c
        } else {
            lhs <= self.c
        }
    }
}

/// The halfplane of points at least as close to `x` as to `y`.
pub fn halfplane<T: Scalar>(x: &Point<T>, y: &Point<T>) -> Result<HalfPlane<T>, GeomError> {
    if x == y {
        return Err(GeomError::IdenticalPoints);
    }
    Ok(HalfPlane {
        a: two::<T>() * (y.x.clone() - x.x.clone()),
        b: two::<T>() * (y.y.clone() - x.y.clone()),
        c: y.norm_sq() - x.norm_sq(),
    })
}

/// Solves the system by Fourier-Motzkin elimination; returns a point
/// satisfying every constraint (strictly, if `strict`), or `None` if the
/// system is infeasible. The empty system yields the origin.
pub fn feasible_witness<T: Scalar>(constraints: &[HalfPlane<T>], strict: bool) -> Option<Point<T>> {
    // Split on the sign of the x coefficient.
    let mut lowers = Vec::new(); // a < 0: x >= (c - b*y) / a
    let mut uppers = Vec::new(); // a > 0: x <= (c - b*y) / a
    let mut y_only = Vec::new(); // a = 0: b*y <= c
    for h in constraints {
        if h.a.is_negative() {
            lowers.push(h);
        } else if h.a.is_positive() {
            uppers.push(h);
        } else {
            y_only.push((h.b.clone(), h.c.clone()));
        }
    }

    // Positive combination of a lower and an upper bound eliminates x:
    // multiplying the lower by a_u > 0 and the upper by -a_l > 0 and adding
    // gives (a_u*b_l - a_l*b_u) * y <= a_u*c_l - a_l*c_u.
    for l in &lowers {
        for u in &uppers {
            let b = u.a.clone() * l.b.clone() - l.a.clone() * u.b.clone();
            let c = u.a.clone() * l.c.clone() - l.a.clone() * u.c.clone();
            y_only.push((b, c));
        }
    }

    let y = resolve_single_variable(&y_only, strict)?;

    // Back-substitute: x must lie between the tightest bounds at y.
    let bound_at = |h: &HalfPlane<T>| (h.c.clone() - h.b.clone() * y.clone()) / h.a.clone();
    let lo = lowers.iter().map(|h| bound_at(h)).max();
    let hi = uppers.iter().map(|h| bound_at(h)).min();
    let x = pick_between(lo, hi, strict)?;
    Some(Point::new(x, y))
}

/// Whether the system has a solution (a strict one, if `strict`).
pub fn feasible<T: Scalar>(constraints: &[HalfPlane<T>], strict: bool) -> bool {
    feasible_witness(constraints, strict).is_some()
}

/// Solves `b*y <= c` (or `<`) for all pairs; returns a satisfying value.
fn resolve_single_variable<T: Scalar>(constraints: &[(T, T)], strict: bool) -> Option<T> {
    let mut lo: Option<T> = None;
    let mut hi: Option<T> = None;
    for (b, c) in constraints {
        if b.is_zero() {
            // 0 <= c, resp. 0 < c
            let ok = if strict {
                c.is_positive()
            } else {
                !c.is_negative()
            };
            if !ok {
                return None;
            }
        } else {
            let bound = c.clone() / b.clone();
            if b.is_positive() {
                hi = Some(match hi {
                    Some(h) => h.min(bound),
                    None => bound,
                });
            } else {
                lo = Some(match lo {
                    Some(l) => l.max(bound),
                    None => bound,
                });
            }
        }
    }
    pick_between(lo, hi, strict)
}

/// A value in `[lo, hi]`, or in `(lo, hi)` when `strict`; `None` bounds are
/// unbounded sides. Rationals are dense, so the open case only needs
/// `lo < hi`.
fn pick_between<T: Scalar>(lo: Option<T>, hi: Option<T>, strict: bool) -> Option<T> {
    match (lo, hi) {
        (None, None) => Some(T::zero()),
        (Some(l), None) => Some(if strict { l + T::one() } else { l }),
        (None, Some(h)) => Some(if strict { h - T::one() } else { h }),
        (Some(l), Some(h)) => {
            if strict {
                (l < h).then(|| (l + h) / two::<T>())
            } else {
                (l <= h).then_some(l)
            }
        }
    }
}

/// Size guard for the `2^n` subset enumerations.
pub const DEFAULT_SIZE_GUARD: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("n = {n} exceeds the enumeration guard {guard}; raise it explicitly to proceed")]
pub struct SizeGuardError {
    pub n: usize,
    pub guard: usize,
}

/// The halfplane system defining `V(A)`.
fn region_constraints<T: Scalar>(s: &SiteSet<T>, a: LabelSet) -> Vec<HalfPlane<T>> {
    let outside = a.complement(s.len());
    let mut constraints = Vec::with_capacity(a.len() * outside.len());
    for x in a.iter() {
        for y in outside.iter() {
            constraints.push(
                halfplane(s.site(x), s.site(y)).expect("duplicate sites: not in general position"),
            );
        }
    }
    constraints
}

/// Whether `V(A)` is nonempty. `A = {}` and `A = [n]` are nonempty by
/// convention (their constraint systems are empty).
pub fn region_nonempty<T: Scalar>(s: &SiteSet<T>, a: LabelSet) -> bool {
    feasible(&region_constraints(s, a), false)
}

/// Whether `V(A)` has nonempty interior, i.e. the system is strictly
/// feasible. Under general position this agrees with `region_nonempty` for
/// every proper nonempty `A`.
pub fn region_full_dimensional<T: Scalar>(s: &SiteSet<T>, a: LabelSet) -> bool {
    feasible(&region_constraints(s, a), true)
}

/// An interior point of `V(A)`, if the region is full-dimensional. At such
/// a point every site of `A` is strictly closer than every site outside.
pub fn region_witness<T: Scalar>(s: &SiteSet<T>, a: LabelSet) -> Option<Point<T>> {
    feasible_witness(&region_constraints(s, a), true)
}

/// All label sets with nonempty region, including `{}` and `[n]`, in
/// (rank, lexicographic) order.
pub fn poset_members<T: Scalar>(s: &SiteSet<T>) -> Result<Vec<LabelSet>, SizeGuardError> {
    poset_members_with_guard(s, DEFAULT_SIZE_GUARD)
}

pub fn poset_members_with_guard<T: Scalar>(
    s: &SiteSet<T>,
    guard: usize,
) -> Result<Vec<LabelSet>, SizeGuardError> {
    let n = s.len();
    if n > guard {
        return Err(SizeGuardError { n, guard });
    }
    let full = s.all_labels();
    let mut members: Vec<LabelSet> = LabelSet::all_subsets(n)
        .filter(|&a| a.is_empty() || a == full || region_nonempty(s, a))
        .collect();
    members.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp_lex(*b)));
    Ok(members)
}

/// The enumerated f-vector: `f[k]` is the number of `k`-subsets with
/// nonempty region, indexed by order `k` in `0..=n` (`f[0] = 1` for the
/// empty set, `f[n] = 1` for the full set).
pub fn f_vector_enumerate<T: Scalar>(s: &SiteSet<T>) -> Result<Vec<i64>, SizeGuardError> {
    f_vector_enumerate_with_guard(s, DEFAULT_SIZE_GUARD)
}

pub fn f_vector_enumerate_with_guard<T: Scalar>(
    s: &SiteSet<T>,
    guard: usize,
) -> Result<Vec<i64>, SizeGuardError> {
    let mut f = vec![0i64; s.len() + 1];
    for member in poset_members_with_guard(s, guard)? {
        f[member.len()] += 1;
    }
    Ok(f)
}
