//! The poset of nonempty Voronoi regions of all orders, ordered by label-set
//! inclusion, with the empty set as bottom and the full label set as top.
//!
//! Built from the region oracle; offers gradedness and lattice diagnostics,
//! cover (Hasse) export, and the reduced Euler characteristic.

use std::fmt::Write as _;

use crate::geom::SiteSet;
use crate::labels::LabelSet;
use crate::regions::{poset_members_with_guard, SizeGuardError, DEFAULT_SIZE_GUARD};
use crate::scalar::Scalar;

/// The Voronoi poset: members grouped by rank (= cardinality), each rank
/// sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoronoiPoset {
    n: usize,
    by_rank: Vec<Vec<LabelSet>>,
    membership: Vec<bool>, // indexed by bitmask
}

/// Verdict of the lattice test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeReport {
    pub is_lattice: bool,
    pub witness: Option<LatticeWitness>,
}

/// First pair (in member order) with a non-unique minimal upper or maximal
/// lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeWitness {
    pub pair: (LabelSet, LabelSet),
    pub side: LatticeSide,
    /// The offending minimal upper (or maximal lower) bounds.
    pub bounds: Vec<LabelSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeSide {
    Join,
    Meet,
}

/// Face counts shifted to complex dimensions, and their alternating sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerReport {
    /// `face_counts[i]` is the number of faces of dimension `i - 1`; the
    /// leading entry counts the empty face (always 1), entry `i + 1` is the
    /// region count of the order-`(i + 1)` diagram.
    pub face_counts: Vec<i64>,
    /// Alternating sum starting with `-1` for the empty face.
    pub chi: i64,
}

/// Builds the poset of `S` via the region oracle.
pub fn build_poset<T: Scalar>(s: &SiteSet<T>) -> Result<VoronoiPoset, SizeGuardError> {
    build_poset_with_guard(s, DEFAULT_SIZE_GUARD)
}

pub fn build_poset_with_guard<T: Scalar>(
    s: &SiteSet<T>,
    guard: usize,
) -> Result<VoronoiPoset, SizeGuardError> {
    Ok(VoronoiPoset::from_members(
        s.len(),
        poset_members_with_guard(s, guard)?,
    ))
}

impl VoronoiPoset {
    /// Assembles a poset from an explicit member list (the bottom `{}` and
    /// top `{1..n}` must be included). Useful for synthetic test posets.
    pub fn from_members(n: usize, members: Vec<LabelSet>) -> Self {
        let mut by_rank = vec![Vec::new(); n + 1];
        let mut membership = vec![false; 1 << n];
        for m in members {
            assert!(m.is_subset_of(LabelSet::full(n)), "member outside [n]");
            if !membership[m.bits() as usize] {
                membership[m.bits() as usize] = true;
                by_rank[m.len()].push(m);
            }
        }
        assert!(membership[0], "poset must contain the empty set");
        assert!(
            membership[LabelSet::full(n).bits() as usize],
            "poset must contain the full set"
        );
        for rank in &mut by_rank {
            rank.sort_by(|a, b| a.cmp_lex(*b));
        }
        VoronoiPoset {
            n,
            by_rank,
            membership,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, set: LabelSet) -> bool {
        self.membership[set.bits() as usize]
    }

    /// Members of cardinality `rank`, lexicographic.
    pub fn rank(&self, rank: usize) -> &[LabelSet] {
        &self.by_rank[rank]
    }

    /// Total number of members, the empty set included.
    pub fn size(&self) -> usize {
        self.by_rank.iter().map(Vec::len).sum()
    }

    /// All members in (rank, lexicographic) order.
    pub fn members(&self) -> impl Iterator<Item = LabelSet> + '_ {
        self.by_rank.iter().flatten().copied()
    }

    /// Label sets in `[n]` that are not members.
    pub fn missing(&self) -> Vec<LabelSet> {
        let mut missing: Vec<LabelSet> = LabelSet::all_subsets(self.n)
            .filter(|m| !self.contains(*m))
            .collect();
        missing.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp_lex(*b)));
        missing
    }

    /// Checks that every member of rank `k > 0` contains a member of rank
    /// `k - 1` and every member of rank `k < n` is contained in a member of
    /// rank `k + 1`; returns the first element violating either direction.
    pub fn is_graded(&self) -> (bool, Option<LabelSet>) {
        for k in 0..=self.n {
            for &m in &self.by_rank[k] {
                let down_ok = k == 0
                    || m.iter()
                        .any(|l| self.contains(m.difference(LabelSet::singleton(l))));
                let up_ok = k == self.n
                    || m.complement(self.n)
                        .iter()
                        .any(|l| self.contains(m.with(l)));
                if !down_ok || !up_ok {
                    return (false, Some(m));
                }
            }
        }
        (true, None)
    }

    /// Inclusion-minimal members containing `x ∪ y`, in (rank, lexicographic)
    /// order.
    pub fn minimal_upper_bounds(&self, x: LabelSet, y: LabelSet) -> Vec<LabelSet> {
        let union = x.union(y);
        let mut minimal: Vec<LabelSet> = Vec::new();
        for k in union.len()..=self.n {
            for &m in &self.by_rank[k] {
                if union.is_subset_of(m) && !minimal.iter().any(|s| s.is_subset_of(m)) {
                    minimal.push(m);
                }
            }
        }
        minimal
    }

    /// Inclusion-maximal members contained in `x ∩ y`, in (rank,
    /// lexicographic) order.
    pub fn maximal_lower_bounds(&self, x: LabelSet, y: LabelSet) -> Vec<LabelSet> {
        let inter = x.intersection(y);
        let mut maximal: Vec<LabelSet> = Vec::new();
        for k in (0..=inter.len()).rev() {
            for &m in &self.by_rank[k] {
                if m.is_subset_of(inter) && !maximal.iter().any(|s| m.is_subset_of(*s)) {
                    maximal.push(m);
                }
            }
        }
        maximal.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp_lex(*b)));
        maximal
    }

    /// Tests the lattice property on both sides: every pair of members must
    /// have exactly one minimal upper bound and one maximal lower bound. The
    /// witness is the first violating pair in member order, joins checked
    /// before meets per pair.
    pub fn is_lattice(&self) -> LatticeReport {
        let members: Vec<LabelSet> = self.members().collect();
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                let (x, y) = (members[i], members[j]);
                let joins = self.minimal_upper_bounds(x, y);
                if joins.len() != 1 {
                    return LatticeReport {
                        is_lattice: false,
                        witness: Some(LatticeWitness {
                            pair: (x, y),
                            side: LatticeSide::Join,
                            bounds: joins,
                        }),
                    };
                }
                let meets = self.maximal_lower_bounds(x, y);
                if meets.len() != 1 {
                    return LatticeReport {
                        is_lattice: false,
                        witness: Some(LatticeWitness {
                            pair: (x, y),
                            side: LatticeSide::Meet,
                            bounds: meets,
                        }),
                    };
                }
            }
        }
        LatticeReport {
            is_lattice: true,
            witness: None,
        }
    }

    /// Reduced Euler characteristic of the member family, the empty face
    /// counted with dimension `-1`.
    pub fn euler_characteristic(&self) -> EulerReport {
        let face_counts: Vec<i64> = (0..=self.n).map(|k| self.by_rank[k].len() as i64).collect();
        let chi = face_counts
            .iter()
            .enumerate()
            .map(|(k, &count)| if k % 2 == 0 { -count } else { count })
            .sum();
        EulerReport { face_counts, chi }
    }

    /// All cover pairs `(L, L')` with both members, `L ⊂ L'` and
    /// `|L'| = |L| + 1`, in (rank, lexicographic) order.
    pub fn hasse_edges(&self) -> Vec<(LabelSet, LabelSet)> {
        let mut edges = Vec::new();
        for k in 0..self.n {
            for &lower in &self.by_rank[k] {
                for &upper in &self.by_rank[k + 1] {
                    if lower.is_subset_of(upper) {
                        edges.push((lower, upper));
                    }
                }
            }
        }
        edges
    }

    /// The Hasse diagram as line-oriented text, one `L < L'` pair per line.
    pub fn hasse_text(&self) -> String {
        let mut out = String::new();
        for (lower, upper) in self.hasse_edges() {
            let _ = writeln!(out, "{lower} < {upper}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;
    use crate::Rat;

    fn pt(x: i64, y: i64) -> Point<Rat> {
        Point::new(Rat::from_integer(x.into()), Rat::from_integer(y.into()))
    }

    fn triangle_poset() -> VoronoiPoset {
        let s = SiteSet::new(vec![pt(0, 0), pt(4, 0), pt(0, 4)]).unwrap();
        build_poset(&s).unwrap()
    }

    fn interior_site_poset() -> VoronoiPoset {
        let s = SiteSet::new(vec![pt(0, 0), pt(10, 0), pt(5, 9), pt(5, 4)]).unwrap();
        build_poset(&s).unwrap()
    }

    fn ls(labels: &[usize]) -> LabelSet {
        LabelSet::from_labels(labels)
    }

    #[test]
    fn triangle_poset_is_full_boolean() {
        let p = triangle_poset();
        assert_eq!(p.size(), 8);
        assert!(p.missing().is_empty());
        assert_eq!(p.rank(1).len(), 3);
    }

    #[test]
    fn interior_site_poset_misses_outer_triangle() {
        let p = interior_site_poset();
        assert_eq!(p.missing(), vec![ls(&[1, 2, 3])]);
        assert_eq!(p.size(), 15);
    }

    #[test]
    fn both_small_posets_are_graded() {
        assert_eq!(triangle_poset().is_graded(), (true, None));
        assert_eq!(interior_site_poset().is_graded(), (true, None));
    }

    #[test]
    fn synthetic_poset_missing_cover_is_flagged() {
        // {3} has no superset of rank 2: the up-direction fails at {3}.
        let members = vec![
            LabelSet::EMPTY,
            ls(&[1]),
            ls(&[2]),
            ls(&[3]),
            ls(&[1, 2]),
            ls(&[1, 2, 3]),
        ];
        let p = VoronoiPoset::from_members(3, members);
        assert_eq!(p.is_graded(), (false, Some(ls(&[3]))));
    }

    #[test]
    fn minimal_upper_bounds_in_boolean_poset() {
        let p = triangle_poset();
        assert_eq!(
            p.minimal_upper_bounds(ls(&[1]), ls(&[2])),
            vec![ls(&[1, 2])]
        );
        // Nested case: the larger element is the unique bound.
        assert_eq!(
            p.minimal_upper_bounds(ls(&[1]), ls(&[1, 3])),
            vec![ls(&[1, 3])]
        );
    }

    #[test]
    fn boolean_poset_is_lattice() {
        let report = triangle_poset().is_lattice();
        assert!(report.is_lattice);
        assert_eq!(report.witness, None);
    }

    #[test]
    fn interior_site_poset_is_lattice() {
        // All pairs keep unique bounds when only a top-rank triple is gone.
        let report = interior_site_poset().is_lattice();
        assert!(report.is_lattice);
    }

    #[test]
    fn missing_pair_breaks_the_lattice() {
        // Synthetic two-empty-circle shape: the pair {2,3} is missing, so
        // {2} and {3} have the two triples as minimal upper bounds.
        let members: Vec<LabelSet> = LabelSet::all_subsets(4)
            .filter(|&m| m != ls(&[2, 3]))
            .collect();
        let p = VoronoiPoset::from_members(4, members);
        assert_eq!(
            p.minimal_upper_bounds(ls(&[2]), ls(&[3])),
            vec![ls(&[1, 2, 3]), ls(&[2, 3, 4])]
        );
        let report = p.is_lattice();
        assert!(!report.is_lattice);
        let witness = report.witness.unwrap();
        assert_eq!(witness.pair, (ls(&[2]), ls(&[3])));
        assert_eq!(witness.side, LatticeSide::Join);
        assert_eq!(witness.bounds, vec![ls(&[1, 2, 3]), ls(&[2, 3, 4])]);
    }

    #[test]
    fn euler_characteristic_small_cases() {
        assert_eq!(triangle_poset().euler_characteristic().chi, 0);
        let report = interior_site_poset().euler_characteristic();
        assert_eq!(report.face_counts, vec![1, 4, 6, 3, 1]);
        assert_eq!(report.chi, -1);
    }

    #[test]
    fn euler_characteristic_two_empty_circle_shape() {
        let members: Vec<LabelSet> = LabelSet::all_subsets(4)
            .filter(|&m| m != ls(&[2, 3]))
            .collect();
        let p = VoronoiPoset::from_members(4, members);
        assert_eq!(p.euler_characteristic().chi, 1);
    }

    #[test]
    fn hasse_edges_of_boolean_cube() {
        let p = triangle_poset();
        let edges = p.hasse_edges();
        assert_eq!(edges.len(), 12);
        for i in 1..=3 {
            assert!(edges.contains(&(LabelSet::EMPTY, ls(&[i]))));
        }
    }

    #[test]
    fn hasse_edges_skip_missing_member() {
        let p = interior_site_poset();
        let edges = p.hasse_edges();
        assert!(edges.contains(&(ls(&[1, 2]), ls(&[1, 2, 4]))));
        assert!(!edges.contains(&(ls(&[1, 2]), ls(&[1, 2, 3]))));
    }

    #[test]
    fn hasse_text_is_line_oriented() {
        let text = triangle_poset().hasse_text();
        assert!(text.starts_with("{} < {1}\n"));
        assert!(text.contains("{1,2} < {1,2,3}\n"));
    }
}
