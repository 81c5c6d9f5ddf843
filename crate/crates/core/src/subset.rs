//! Fixed-capacity bitsets over 1-based ground sets.
//!
//! Element `i` lives in bit `i - 1`, so every ground set holds at most
//! [`MAX_ELEMENTS`] elements. Sets order by cardinality first and then
//! lexicographically on their sorted element lists, which is the canonical
//! order used for circuit lists everywhere in the crate.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest ground set representable by a subset mask.
pub const MAX_ELEMENTS: usize = 64;

/// Mask with the lowest `n` bits set.
pub fn full_mask(n: usize) -> u64 {
    debug_assert!(n <= MAX_ELEMENTS);
    if n == MAX_ELEMENTS {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Compares two masks by cardinality, then lexicographically on their sorted elements.
pub fn canonical_cmp(a: u64, b: u64) -> Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| {
        let diff = a ^ b;
        if diff == 0 {
            Ordering::Equal
        } else if a & diff & diff.wrapping_neg() != 0 {
            // the smallest element where they differ belongs to `a`
            Ordering::Less
        } else {
            Ordering::Greater
        }
    })
}

macro_rules! subset_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(u64);

        impl $name {
            pub const EMPTY: Self = Self(0);

            pub const fn from_bits(bits: u64) -> Self {
                Self(bits)
            }

            pub const fn bits(self) -> u64 {
                self.0
            }

            /// The full ground set `{1, ..., n}`.
            pub fn full(n: usize) -> Self {
                Self(full_mask(n))
            }

            pub fn singleton(id: usize) -> Self {
                let mut s = Self::EMPTY;
                s.insert(id);
                s
            }

            pub fn contains(self, id: usize) -> bool {
                (1..=MAX_ELEMENTS).contains(&id) && self.0 >> (id - 1) & 1 == 1
            }

            pub fn insert(&mut self, id: usize) {
                assert!((1..=MAX_ELEMENTS).contains(&id), "element {id} outside bitset capacity");
                self.0 |= 1 << (id - 1);
            }

            pub fn remove(&mut self, id: usize) {
                if (1..=MAX_ELEMENTS).contains(&id) {
                    self.0 &= !(1 << (id - 1));
                }
            }

            pub fn with(mut self, id: usize) -> Self {
                self.insert(id);
                self
            }

            pub fn without(mut self, id: usize) -> Self {
                self.remove(id);
                self
            }

            pub fn len(self) -> usize {
                self.0.count_ones() as usize
            }

            pub fn is_empty(self) -> bool {
                self.0 == 0
            }

            pub fn union(self, other: Self) -> Self {
                Self(self.0 | other.0)
            }

            pub fn intersection(self, other: Self) -> Self {
                Self(self.0 & other.0)
            }

            pub fn difference(self, other: Self) -> Self {
                Self(self.0 & !other.0)
            }

            /// Complement within the ground set `{1, ..., n}`.
            pub fn complement(self, n: usize) -> Self {
                Self(!self.0 & full_mask(n))
            }

            pub fn is_subset(self, other: Self) -> bool {
                self.0 & !other.0 == 0
            }

            pub fn is_proper_subset(self, other: Self) -> bool {
                self.is_subset(other) && self != other
            }

            /// Largest element, if any.
            pub fn max(self) -> Option<usize> {
                (self.0 != 0).then(|| MAX_ELEMENTS - self.0.leading_zeros() as usize)
            }

            /// Smallest element, if any.
            pub fn min(self) -> Option<usize> {
                (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
            }

            /// Elements in increasing order.
            pub fn iter(self) -> impl Iterator<Item = usize> {
                let mut bits = self.0;
                std::iter::from_fn(move || {
                    if bits == 0 {
                        None
                    } else {
                        let i = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        Some(i + 1)
                    }
                })
            }

            pub fn to_vec(self) -> Vec<usize> {
                self.iter().collect()
            }

            /// Shifts every element up by `offset`.
            pub fn shifted(self, offset: usize) -> Self {
                self.iter().map(|i| i + offset).collect()
            }

            /// All subsets of this set, including the empty set and the set itself.
            pub fn subsets(self) -> impl Iterator<Item = Self> {
                let full = self.0;
                let mut next = Some(0u64);
                std::iter::from_fn(move || {
                    let cur = next?;
                    next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
                    Some(Self(cur))
                })
            }
        }

        impl FromIterator<usize> for $name {
            fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
                let mut s = Self::EMPTY;
                for id in iter {
                    s.insert(id);
                }
                s
            }
        }

        impl<const N: usize> From<[usize; N]> for $name {
            fn from(ids: [usize; N]) -> Self {
                ids.into_iter().collect()
            }
        }

        impl Ord for $name {
            fn cmp(&self, other: &Self) -> Ordering {
                canonical_cmp(self.0, other.0)
            }
        }

        impl PartialOrd for $name {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("{")?;
                for (k, id) in self.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{id}")?;
                }
                f.write_str("}")
            }
        }
    };
}

subset_type! {
    /// A set of vertices, also used for the ground set elements of explicit matroids.
    VertexSet
}

subset_type! {
    /// A set of edges, identified by their 1-based position in the edge list.
    EdgeSet
}

/// Every `k`-subset of `{1, ..., n}` as a mask, in increasing numeric order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = full_mask(n);
    let mut next = if k > n {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some(full_mask(k))
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let low = cur & cur.wrapping_neg();
            let ripple = cur.wrapping_add(low);
            if ripple == 0 {
                None
            } else {
                let ones = ((ripple ^ cur) >> 2) / low;
                let nxt = ripple | ones;
                (nxt & !limit == 0).then_some(nxt)
            }
        };
        Some(cur)
    })
}
