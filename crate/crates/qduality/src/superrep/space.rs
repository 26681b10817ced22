//! Graded index bookkeeping for the natural space V = V₀ ⊕ V₁ with
//! dim V = (n, n), n = n0 + n1, and its k-fold tensor power W.
//!
//! V-basis order: the even block first (x-labels then y-labels), then the odd
//! block in the same order. W-basis order: row-major tuples, leftmost slot
//! most significant.

use serde::{Deserialize, Serialize};

use crate::field::FMatrix;

/// The graded space V with its (n0, n1) block split.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VSpace {
    pub n0: usize,
    pub n1: usize,
}

impl VSpace {
    pub fn new(n0: usize, n1: usize) -> Self {
        assert!(n0 >= 1 && n1 >= 1, "block sizes must be positive");
        VSpace { n0, n1 }
    }

    pub fn n(&self) -> usize {
        self.n0 + self.n1
    }

    pub fn dim(&self) -> usize {
        2 * self.n()
    }

    /// Degree of a basis index: 0 on the first n indices, 1 on the rest.
    pub fn deg(&self, idx: usize) -> u8 {
        u8::from(idx >= self.n())
    }

    pub fn degs(&self) -> Vec<u8> {
        (0..self.dim()).map(|i| self.deg(i)).collect()
    }

    /// Human label: x1…, y1…, x1'…, y1'.
    pub fn label(&self, idx: usize) -> String {
        let n = self.n();
        let (pos, prime) = if idx < n { (idx, "") } else { (idx - n, "'") };
        if pos < self.n0 {
            format!("x{}{}", pos + 1, prime)
        } else {
            format!("y{}{}", pos - self.n0 + 1, prime)
        }
    }
}

/// W = V^⊗k with row-major tuple indexing.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WSpace {
    pub v: VSpace,
    pub k: usize,
}

impl WSpace {
    pub fn new(v: VSpace, k: usize) -> Self {
        assert!(k >= 1, "tensor power must be positive");
        WSpace { v, k }
    }

    pub fn dim(&self) -> usize {
        self.v.dim().pow(self.k as u32)
    }

    pub fn decode(&self, mut idx: usize) -> Vec<usize> {
        let d = self.v.dim();
        let mut slots = vec![0usize; self.k];
        for s in (0..self.k).rev() {
            slots[s] = idx % d;
            idx /= d;
        }
        slots
    }

    pub fn encode(&self, slots: &[usize]) -> usize {
        let d = self.v.dim();
        slots.iter().fold(0, |acc, &s| acc * d + s)
    }

    /// Degree of a W basis index: sum of slot degrees mod 2.
    pub fn deg(&self, idx: usize) -> u8 {
        self.decode(idx).iter().map(|&s| self.v.deg(s) as usize).sum::<usize>() as u8 % 2
    }

    pub fn degs(&self) -> Vec<u8> {
        (0..self.dim()).map(|i| self.deg(i)).collect()
    }

    pub fn identity(&self) -> FMatrix {
        FMatrix::identity(self.dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_decode_round_trip() {
        let w = WSpace::new(VSpace::new(1, 2), 3);
        assert_eq!(w.dim(), 216);
        for idx in [0usize, 1, 17, 215] {
            assert_eq!(w.encode(&w.decode(idx)), idx);
        }
        assert_eq!(w.decode(0), vec![0, 0, 0]);
        assert_eq!(w.decode(1), vec![0, 0, 1]);
    }

    #[test]
    fn degrees_and_labels() {
        let v = VSpace::new(1, 1);
        assert_eq!(v.degs(), vec![0, 0, 1, 1]);
        assert_eq!(v.label(0), "x1");
        assert_eq!(v.label(1), "y1");
        assert_eq!(v.label(2), "x1'");
        assert_eq!(v.label(3), "y1'");
        let w = WSpace::new(v, 2);
        // Index (2,3): degrees 1+1 = 0 mod 2.
        assert_eq!(w.deg(w.encode(&[2, 3])), 0);
        assert_eq!(w.deg(w.encode(&[0, 3])), 1);
    }
}
