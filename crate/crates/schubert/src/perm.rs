//! Permutations of {0, .., n-1}, stored as image lists.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::NotPermutation(n));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// The order-reversing permutation i -> n-1-i.
    pub fn reversal(n: usize) -> Perm {
        Perm {
            images: (0..n).rev().collect(),
        }
    }

    /// i and i+1 swapped, everything else fixed.
    pub fn adjacent_transposition(n: usize, i: usize) -> Perm {
        assert!(i + 1 < n);
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, i + 1);
        Perm { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Perm { images }
    }

    /// self after other: (self * other)(i) = self(other(i)).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len());
        Perm {
            images: (0..self.len()).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    /// Number of pairs i < j with images out of order.
    pub fn inversions(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Image list shifted to 1-based positions, the form used in reports.
    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_images() {
        assert!(Perm::new(vec![1, 0, 2]).is_ok());
        assert!(Perm::new(vec![1, 1, 2]).is_err());
        assert!(Perm::new(vec![1, 3, 2]).is_err());
    }

    #[test]
    fn reversal_has_maximal_inversions() {
        // d = 4: every one of the 6 pairs is inverted
        assert_eq!(Perm::reversal(4).inversions(), 6);
        assert_eq!(Perm::identity(4).inversions(), 0);
    }

    #[test]
    fn adjacent_swap_composed_with_reversal() {
        let w = Perm::reversal(5);
        let s = Perm::adjacent_transposition(5, 2);
        let almost = w.compose(&s);
        assert_eq!(w.compose(&almost).inversions(), 1);
    }

    #[test]
    fn inverse_and_compose() {
        let p = Perm::new(vec![2, 0, 3, 1]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }
}
