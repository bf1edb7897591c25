use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;

/// Nondecreasing sequence of class sizes. The zero-length frame is the
/// frame of the empty colouring.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Frame(Vec<usize>);

impl Frame {
    pub fn new(mut sizes: Vec<usize>) -> Self {
        sizes.sort_unstable();
        Self(sizes)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    /// `|Frame|`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Suffix starting at the first entry ≥ `m`.
    pub fn from_m(&self, m: usize) -> Frame {
        let start = self.0.partition_point(|&s| s < m);
        Frame(self.0[start..].to_vec())
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

pub fn frame(c: &Coloring) -> Frame {
    // canonical class order is already sorted by size
    Frame(
        c.classes()
            .iter()
            .map(|k| k.count_ones() as usize)
            .collect(),
    )
}

/// Frame_m: entries below `m` dropped.
pub fn frame_m(c: &Coloring, m: usize) -> Frame {
    frame(c).from_m(m)
}

/// Number of vertices in classes of size 1 or 2.
pub fn small(c: &Coloring) -> usize {
    c.classes()
        .iter()
        .map(|k| k.count_ones() as usize)
        .filter(|&s| s <= 2)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frames() {
        let c = Coloring::from_sets(5, &[&[0, 2], &[1, 3], &[4]]).unwrap();
        assert_eq!(frame(&c).sizes(), [1, 2, 2]);
        assert_eq!(frame(&Coloring::discrete(4)).sizes(), [1, 1, 1, 1]);
        assert_eq!(frame(&Coloring::discrete(0)), Frame::default());
        assert!(frame(&Coloring::discrete(0)).is_empty());
        assert_eq!(frame(&c).to_string(), "(1,2,2)");
    }

    #[test]
    fn frame_suffixes() {
        let c = Coloring::from_sets(5, &[&[0, 2], &[1, 3], &[4]]).unwrap();
        assert!(frame_m(&c, 3).is_empty());
        assert_eq!(Frame::new(vec![3, 1, 3, 2]).from_m(3).sizes(), [3, 3]);
        let big = Coloring::from_sets(9, &[&[0], &[1, 2], &[3, 4, 5], &[6, 7, 8]]).unwrap();
        assert_eq!(frame_m(&big, 3).sizes(), [3, 3]);
        // r-bounded iff Frame_{r+1} is empty
        for r in 1..5 {
            assert_eq!(frame_m(&big, r + 1).is_empty(), big.max_class_size() <= r);
        }
    }

    #[test]
    fn small_counts() {
        let c = Coloring::from_sets(5, &[&[0, 2], &[1, 3], &[4]]).unwrap();
        assert_eq!(small(&c), 5);
        assert_eq!(small(&Coloring::from_sets(3, &[&[0, 1, 2]]).unwrap()), 0);
        assert_eq!(small(&Coloring::discrete(4)), 4);
    }
}
