//! Fixed-width bitsets over vertex and edge ids.
//!
//! Ids are small integers below 64, so every subset of vertices or edges of a
//! graph fits in one machine word. Edge sets are keyed by the permanent edge id,
//! which keeps faces of nucleus complexes comparable across minors.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

macro_rules! id_set {
    ($(#[$meta:meta])* $name:ident, $id:ty) => {
        $(#[$meta])*
        #[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
        pub struct $name(pub u64);

        impl $name {
            pub const EMPTY: Self = Self(0);

            pub fn singleton(id: $id) -> Self {
                Self(1u64 << id)
            }

            pub fn range(n: u32) -> Self {
                if n >= 64 {
                    Self(u64::MAX)
                } else {
                    Self((1u64 << n) - 1)
                }
            }

            #[inline]
            pub fn bits(self) -> u64 {
                self.0
            }

            #[inline]
            pub fn contains(self, id: $id) -> bool {
                id < 64 && self.0 >> id & 1 == 1
            }

            #[inline]
            pub fn with(self, id: $id) -> Self {
                Self(self.0 | 1u64 << id)
            }

            #[inline]
            pub fn without(self, id: $id) -> Self {
                Self(self.0 & !(1u64 << id))
            }

            pub fn insert(&mut self, id: $id) {
                self.0 |= 1u64 << id;
            }

            pub fn remove(&mut self, id: $id) {
                self.0 &= !(1u64 << id);
            }

            #[inline]
            pub fn union(self, other: Self) -> Self {
                Self(self.0 | other.0)
            }

            #[inline]
            pub fn intersection(self, other: Self) -> Self {
                Self(self.0 & other.0)
            }

            #[inline]
            pub fn difference(self, other: Self) -> Self {
                Self(self.0 & !other.0)
            }

            #[inline]
            pub fn is_subset(self, other: Self) -> bool {
                self.0 & !other.0 == 0
            }

            #[inline]
            pub fn is_disjoint(self, other: Self) -> bool {
                self.0 & other.0 == 0
            }

            #[inline]
            pub fn len(self) -> usize {
                self.0.count_ones() as usize
            }

            #[inline]
            pub fn is_empty(self) -> bool {
                self.0 == 0
            }

            pub fn first(self) -> Option<$id> {
                (self.0 != 0).then(|| self.0.trailing_zeros() as $id)
            }

            pub fn iter(self) -> impl Iterator<Item = $id> + Clone {
                let mut rest = self.0;
                std::iter::from_fn(move || {
                    if rest == 0 {
                        None
                    } else {
                        let id = rest.trailing_zeros();
                        rest &= rest - 1;
                        Some(id as $id)
                    }
                })
            }

            pub fn to_vec(self) -> Vec<$id> {
                self.iter().collect()
            }
        }

        impl FromIterator<$id> for $name {
            fn from_iter<I: IntoIterator<Item = $id>>(iter: I) -> Self {
                let mut set = Self::EMPTY;
                for id in iter {
                    set.insert(id);
                }
                set
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set().entries(self.iter()).finish()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{{")?;
                for (i, id) in self.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{id}")?;
                }
                write!(f, "}}")
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                serializer.collect_seq(self.iter())
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
                let ids = Vec::<$id>::deserialize(deserializer)?;
                if let Some(bad) = ids.iter().find(|&&id| id >= 64) {
                    return Err(serde::de::Error::custom(format!("id {bad} out of range")));
                }
                Ok(ids.into_iter().collect())
            }
        }
    };
}

id_set!(
    /// Subset of vertex ids.
    VertexSet,
    u32
);
id_set!(
    /// Subset of edge ids.
    EdgeSet,
    u32
);

/// Iterates every subset of `set`, starting from the empty set, in increasing
/// order of the underlying bit pattern.
pub fn subsets(set: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == set {
            None
        } else {
            Some((current.wrapping_sub(set)) & set)
        };
        Some(current)
    })
}
