use std::fmt;

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts. Zero parts are stripped.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Accepts zero-padded input; rejects negative or increasing parts.
    pub fn new(parts: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(parts.len());
        for (i, &p) in parts.iter().enumerate() {
            if p < 0 {
                return Err(Error::InvalidPartition(format!("negative part {p}")));
            }
            if i > 0 && p > parts[i - 1] {
                return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
            }
            if p > 0 {
                out.push(p as u32);
            }
        }
        Ok(Partition { parts: out })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(a^m)`: `m` parts equal to `a`.
    pub fn rectangle(a: u32, m: usize) -> Self {
        if a == 0 {
            return Self::empty();
        }
        Partition { parts: vec![a; m] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let parts = (1..=self.first())
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction() {
        assert_eq!(Partition::new(&[3, 1, 0, 0]).unwrap().parts(), &[3, 1]);
        assert!(Partition::new(&[1, 2]).is_err());
        assert!(Partition::new(&[2, -1]).is_err());
        assert!(Partition::new(&[]).unwrap().is_empty());
    }

    #[test]
    fn conjugates() {
        assert_eq!(Partition::new(&[1]).unwrap().conjugate(), Partition::new(&[1]).unwrap());
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(
            Partition::new(&[4, 2, 1]).unwrap().conjugate(),
            Partition::new(&[3, 2, 1, 1]).unwrap()
        );
        // (d^N, k) with k <= d has conjugate ((N+1)^k, N^(d-k))
        for n in 1..4i64 {
            for d in 0..5i64 {
                for k in 0..=d {
                    let mut parts = vec![d; n as usize];
                    parts.push(k);
                    let lam = Partition::new(&parts).unwrap();
                    let mut expect = vec![n + 1; k as usize];
                    expect.extend(std::iter::repeat_n(n, (d - k) as usize));
                    assert_eq!(lam.conjugate(), Partition::new(&expect).unwrap());
                }
            }
        }
    }

    #[test]
    fn conjugate_is_involution() {
        for parts in [vec![5, 3, 3, 1], vec![2, 2], vec![7], vec![1, 1, 1, 1]] {
            let lam = Partition::new(&parts).unwrap();
            assert_eq!(lam.conjugate().conjugate(), lam);
            assert_eq!(lam.conjugate().size(), lam.size());
        }
    }
}
