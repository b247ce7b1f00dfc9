//! Label sets: subsets of the site labels `1..=n` packed into a bitmask.
//!
//! Labels are 1-based everywhere in the public API, matching the convention
//! that a site set `{s_1, ..., s_n}` carries labels `[n] = {1, ..., n}`.
//! Bit `i` of the mask encodes membership of label `i + 1`, which caps the
//! supported universe at 32 labels — far above the enumeration sizes this
//! crate is built for.

use std::cmp::Ordering;
use std::fmt;

/// A subset of `{1, ..., n}` stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LabelSet(u32);

/// Largest label universe a `LabelSet` can represent.
pub const MAX_LABELS: usize = 32;

impl LabelSet {
    /// The empty set.
    pub const EMPTY: LabelSet = LabelSet(0);

    /// The full set `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_LABELS, "label universe too large: {n}");
        if n == 0 {
            LabelSet(0)
        } else {
            LabelSet(u32::MAX >> (MAX_LABELS - n))
        }
    }

    /// The singleton `{label}`.
    pub fn singleton(label: usize) -> Self {
        LabelSet::EMPTY.with(label)
    }

    pub fn from_labels(labels: &[usize]) -> Self {
        labels.iter().fold(LabelSet::EMPTY, |s, &l| s.with(l))
    }

    /// Interprets a raw bitmask (bit `i` ⇔ label `i + 1`).
    pub fn from_bits(bits: u32) -> Self {
        LabelSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// Set with `label` added.
    pub fn with(self, label: usize) -> Self {
        assert!(
            (1..=MAX_LABELS).contains(&label),
            "label out of range: {label}"
        );
        LabelSet(self.0 | 1 << (label - 1))
    }

    pub fn contains(self, label: usize) -> bool {
        (1..=MAX_LABELS).contains(&label) && self.0 & (1 << (label - 1)) != 0
    }

    /// Cardinality.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        LabelSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        LabelSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        LabelSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement within the universe `{1, ..., n}`.
    pub fn complement(self, n: usize) -> Self {
        LabelSet(Self::full(n).0 & !self.0)
    }

    /// Labels in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros();
                bits &= bits - 1;
                Some(i as usize + 1)
            }
        })
    }

    pub fn labels(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All `2^n` subsets of `{1, ..., n}`, in mask order.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = LabelSet> {
        assert!(n <= MAX_LABELS, "label universe too large: {n}");
        (0..=Self::full(n).0).map(LabelSet)
    }

    /// Lexicographic order on the ascending label sequences, used wherever a
    /// deterministic listing of same-universe sets is needed.
    pub fn cmp_lex(self, other: Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, label) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{label}")?;
        }
        write!(f, "}}")
    }
}

// Debug delegates to Display so assertion output stays readable.
impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
