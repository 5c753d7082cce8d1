use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A subset of the elements `0..order` of some finite ring, stored as a dense
/// membership mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    mask: Vec<bool>,
}

impl ElementSet {
    pub fn empty(order: usize) -> Self {
        Self {
            mask: vec![false; order],
        }
    }

    pub fn full(order: usize) -> Self {
        Self {
            mask: vec![true; order],
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(order: usize, indices: I) -> Self {
        let mut set = Self::empty(order);
        for i in indices {
            set.insert(i);
        }
        set
    }

    pub fn from_predicate(order: usize, mut pred: impl FnMut(usize) -> bool) -> Self {
        Self {
            mask: (0..order).map(&mut pred).collect(),
        }
    }

    /// Size of the ambient ring.
    pub fn order(&self) -> usize {
        self.mask.len()
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.mask.iter().any(|&b| b)
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }

    /// Inserts `x`, returning `true` if it was not already present.
    ///
    /// Panics if `x` is outside the ambient ring.
    pub fn insert(&mut self, x: usize) -> bool {
        let slot = &mut self.mask[x];
        let fresh = !*slot;
        *slot = true;
        fresh
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.order() == other.order() && self.iter().all(|x| other.contains(x))
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet::from_predicate(self.order(), |x| self.contains(x) && other.contains(x))
    }

    /// First member of `self` that is not in `other`.
    pub fn first_outside(&self, other: &ElementSet) -> Option<usize> {
        self.iter().find(|&x| !other.contains(x))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct ElementSetRepr {
    order: usize,
    members: Vec<usize>,
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ElementSetRepr {
            order: self.order(),
            members: self.to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ElementSetRepr::deserialize(deserializer)?;
        if let Some(&bad) = repr.members.iter().find(|&&m| m >= repr.order) {
            return Err(serde::de::Error::custom(format!(
                "member {bad} out of range for order {}",
                repr.order
            )));
        }
        Ok(ElementSet::from_indices(repr.order, repr.members))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_and_intersection() {
        let a = ElementSet::from_indices(6, [0, 2, 4]);
        let b = ElementSet::from_indices(6, [0, 2, 3, 4]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(b.first_outside(&a), Some(3));
        assert_eq!(a.intersection(&b), a);
        assert_eq!(a.len(), 3);
    }
}
