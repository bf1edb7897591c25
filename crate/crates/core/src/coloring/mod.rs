//! Colourings as unlabeled partitions, and the exact colouring engine.

mod bounded;
mod chromatic;
mod enumerate;
mod property;
mod stats;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::graph::{bit, full_mask, Bits, Graph, MAX_VERTICES};
use crate::lonely::Frame;
use crate::{Error, Result};

pub use bounded::{
    bounded_chromatic_number, bounded_stats, bounded_stinginess_by_clique_search,
    for_each_optimal_bounded_coloring, optimal_bounded_colorings, BoundedStats,
};
pub use chromatic::{chromatic_number, min_coloring, optimal_coloring};
pub use enumerate::{for_each_partition, proper_colorings, Guards};
pub use property::{
    b_r, check_complete_condition, check_frame3_sufficiency, chi_p, frame_property_break,
    is_frame_property, is_singleton_friendly, p_optimal_colorings, singleton_friendly_break,
    ColoringProperty,
};
pub use stats::{
    enumerate_optimal_colorings, for_each_optimal_coloring, stats, stinginess_by_clique_search,
    ColoringStats,
};

/// A partition of `0..n` into nonempty classes, kept in canonical order:
/// classes sorted by size, then by smallest vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    n: usize,
    classes: Vec<u64>,
}

fn canonical_key(class: u64) -> (u32, u32) {
    (class.count_ones(), class.trailing_zeros())
}

impl Coloring {
    /// Builds a colouring from class bitsets, rejecting anything that is
    /// not a partition of `0..n`.
    pub fn from_classes(n: usize, classes: Vec<u64>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut seen = 0u64;
        for &c in &classes {
            if c == 0 {
                return Err(Error::NotPartition("empty class".into()));
            }
            if c & !full_mask(n) != 0 {
                return Err(Error::NotPartition(format!(
                    "class contains a vertex >= {n}"
                )));
            }
            if c & seen != 0 {
                let v = (c & seen).trailing_zeros();
                return Err(Error::NotPartition(format!(
                    "vertex {v} appears in two classes"
                )));
            }
            seen |= c;
        }
        if seen != full_mask(n) {
            let v = (!seen & full_mask(n)).trailing_zeros();
            return Err(Error::NotPartition(format!("vertex {v} is uncovered")));
        }
        Ok(Self::from_classes_unchecked(n, classes))
    }

    pub(crate) fn from_classes_unchecked(n: usize, mut classes: Vec<u64>) -> Self {
        classes.sort_unstable_by_key(|&c| canonical_key(c));
        Self { n, classes }
    }

    pub fn from_sets(n: usize, sets: &[&[usize]]) -> Result<Self> {
        let mut classes = Vec::with_capacity(sets.len());
        for set in sets {
            let mut mask = 0u64;
            for &v in *set {
                if v >= n {
                    return Err(Error::VertexOutOfRange { v, n });
                }
                if mask & bit(v) != 0 {
                    return Err(Error::NotPartition(format!("vertex {v} repeated")));
                }
                mask |= bit(v);
            }
            classes.push(mask);
        }
        Self::from_classes(n, classes)
    }

    /// Colouring whose classes are the label groups of `labels[v]`.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        let n = labels.len();
        let k = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut classes = vec![0u64; k];
        for (v, &l) in labels.iter().enumerate() {
            classes[l] |= bit(v);
        }
        classes.retain(|&c| c != 0);
        Self::from_classes(n, classes)
    }

    /// Every vertex in its own class.
    pub fn discrete(n: usize) -> Self {
        Self::from_classes_unchecked(n, (0..n).map(bit).collect())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of classes, `|C|`.
    #[inline]
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    #[inline]
    pub fn classes(&self) -> &[u64] {
        &self.classes
    }

    /// Index (in canonical order) of the class containing `v`.
    pub fn class_of(&self, v: usize) -> usize {
        self.classes
            .iter()
            .position(|&c| c & bit(v) != 0)
            .expect("colouring covers every vertex")
    }

    /// `labels[v]` = index of the class containing `v`.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (i, &c) in self.classes.iter().enumerate() {
            for v in Bits(c) {
                labels[v] = i;
            }
        }
        labels
    }

    pub fn singleton_count(&self) -> usize {
        self.classes
            .iter()
            .take_while(|c| c.count_ones() == 1)
            .count()
    }

    /// Union of the singleton classes.
    pub fn singleton_mask(&self) -> u64 {
        self.classes
            .iter()
            .filter(|c| c.count_ones() == 1)
            .fold(0, |a, c| a | c)
    }

    pub fn count_of_size(&self, size: usize) -> usize {
        self.classes
            .iter()
            .filter(|c| c.count_ones() as usize == size)
            .count()
    }

    pub fn max_class_size(&self) -> usize {
        self.classes.last().map_or(0, |c| c.count_ones() as usize)
    }

    pub fn frame(&self) -> Frame {
        crate::lonely::frame(self)
    }

    /// Every class independent in `g`. A colouring over a different
    /// vertex count is a structural error, not an improper colouring.
    pub fn is_proper(&self, g: &Graph) -> Result<bool> {
        if self.n != g.n() {
            return Err(Error::NotPartition(format!(
                "colouring covers {} vertices, graph has {}",
                self.n,
                g.n()
            )));
        }
        Ok(self.classes.iter().all(|&c| g.is_independent(c)))
    }

    pub fn first_conflict(&self, g: &Graph) -> Option<(usize, usize)> {
        for &c in &self.classes {
            for v in Bits(c) {
                if let Some(u) = Bits(g.neighbors(v) & c).next() {
                    return Some((v.min(u), v.max(u)));
                }
            }
        }
        None
    }

    /// Merges the classes at canonical positions `i` and `j`.
    pub fn merged(&self, i: usize, j: usize) -> Self {
        assert!(i != j, "cannot merge a class with itself");
        let mut classes = self.classes.clone();
        let (lo, hi) = (i.min(j), i.max(j));
        let c = classes.remove(hi);
        classes[lo] |= c;
        Self::from_classes_unchecked(self.n, classes)
    }

    /// The colouring restricted to a vertex subset and relabelled the way
    /// [`Graph::induced`] relabels.
    pub fn restricted(&self, keep: u64) -> Self {
        let keep = keep & full_mask(self.n);
        let verts: Vec<usize> = Bits(keep).collect();
        let mut index = [0usize; MAX_VERTICES];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let classes = self
            .classes
            .iter()
            .map(|&c| Bits(c & keep).fold(0u64, |a, v| a | bit(index[v])))
            .filter(|&c| c != 0)
            .collect();
        Self::from_classes_unchecked(verts.len(), classes)
    }

    /// Lifts classes of `G ∖ removed` (as produced by [`Graph::without`])
    /// back to the original labels and adds `extra` classes.
    pub(crate) fn lift(n: usize, removed: u64, sub_classes: &[u64], extra: &[u64]) -> Self {
        let kept: Vec<usize> = Bits(full_mask(n) & !removed).collect();
        let mut classes: Vec<u64> = sub_classes
            .iter()
            .map(|&c| Bits(c).fold(0u64, |a, i| a | bit(kept[i])))
            .collect();
        classes.extend_from_slice(extra);
        Self::from_classes_unchecked(n, classes)
    }

    /// Classes as sorted vertex lists, in canonical order.
    pub fn to_sets(&self) -> Vec<Vec<usize>> {
        self.classes.iter().map(|&c| Bits(c).collect()).collect()
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, set) in self.to_sets().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, v) in set.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct ColoringRepr {
    n: usize,
    classes: Vec<Vec<usize>>,
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ColoringRepr {
            n: self.n,
            classes: self.to_sets(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Coloring {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = ColoringRepr::deserialize(d)?;
        let sets: Vec<&[usize]> = repr.classes.iter().map(Vec::as_slice).collect();
        Coloring::from_sets(repr.n, &sets).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn is_proper_examples() {
        let c5 = generate(&Family::Cycle(5)).unwrap();
        let good = Coloring::from_sets(5, &[&[0, 2], &[1, 3], &[4]]).unwrap();
        assert!(good.is_proper(&c5).unwrap());
        let bad = Coloring::from_sets(5, &[&[0, 1], &[2, 3], &[4]]).unwrap();
        assert!(!bad.is_proper(&c5).unwrap());
        assert_eq!(bad.first_conflict(&c5), Some((0, 1)));
        let k1 = Graph::empty(1).unwrap();
        assert!(Coloring::discrete(1).is_proper(&k1).unwrap());
        assert!(matches!(good.is_proper(&k1), Err(Error::NotPartition(_))));
    }

    #[test]
    fn partition_errors_are_structural() {
        assert!(matches!(
            Coloring::from_sets(3, &[&[0, 1]]),
            Err(Error::NotPartition(_))
        ));
        assert!(matches!(
            Coloring::from_sets(3, &[&[0, 1], &[1, 2]]),
            Err(Error::NotPartition(_))
        ));
        assert!(matches!(
            Coloring::from_sets(3, &[&[0, 1], &[2, 3]]),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            Coloring::from_classes(2, vec![0b11, 0]),
            Err(Error::NotPartition(_))
        ));
    }

    #[test]
    fn canonical_order_is_unique() {
        let a = Coloring::from_sets(5, &[&[4], &[1, 3], &[0, 2]]).unwrap();
        let b = Coloring::from_sets(5, &[&[0, 2], &[4], &[3, 1]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_sets(), vec![vec![4], vec![0, 2], vec![1, 3]]);
        assert_eq!(format!("{a}"), "{{4},{0,2},{1,3}}");
        assert_eq!(Coloring::from_labels(&[1, 0, 1, 0, 2]).unwrap(), a);
    }

    #[test]
    fn merge_and_restrict() {
        let c = Coloring::discrete(3);
        let m = c.merged(0, 2);
        assert_eq!(m.to_sets(), vec![vec![1], vec![0, 2]]);
        let r = Coloring::from_sets(5, &[&[0, 2], &[1, 3], &[4]])
            .unwrap()
            .restricted(0b11010);
        assert_eq!(r.to_sets(), vec![vec![2], vec![0, 1]]);
    }

    #[test]
    fn serde_roundtrip() {
        let c = Coloring::from_sets(5, &[&[0, 2], &[1, 3], &[4]]).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"n":5,"classes":[[4],[0,2],[1,3]]}"#);
        assert_eq!(serde_json::from_str::<Coloring>(&s).unwrap(), c);
        assert!(serde_json::from_str::<Coloring>(r#"{"n":3,"classes":[[0]]}"#).is_err());
    }
}
