//! Hypercube vertices as n-bit strings.
//!
//! Dimensions are 1-based. In textual form dimension 1 is the leftmost
//! character, so `0101000` has dimensions 2 and 4 set.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest dimension count stored in a single machine word.
pub const PACKED_MAX_DIMS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Bits {
    /// Bit `i - 1` holds dimension `i`.
    Packed(u64),
    Wide(Vec<bool>),
}

/// A vertex of the n-dimensional hypercube, `n >= 2`.
///
/// Vertices with at most [`PACKED_MAX_DIMS`] dimensions are packed into a
/// `u64`; larger ones fall back to one `bool` per dimension. The choice is
/// canonical for a given `n`, so equality and hashing are structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    n: usize,
    bits: Bits,
}

impl Vertex {
    pub fn zeros(n: usize) -> Result<Self> {
        check_dims(n)?;
        let bits = if n <= PACKED_MAX_DIMS {
            Bits::Packed(0)
        } else {
            Bits::Wide(vec![false; n])
        };
        Ok(Vertex { n, bits })
    }

    /// Builds a vertex from per-dimension bits, `bits[0]` being dimension 1.
    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        let n = bits.len();
        check_dims(n)?;
        if n <= PACKED_MAX_DIMS {
            let word = bits
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &b)| acc | (u64::from(b) << i));
            Ok(Vertex {
                n,
                bits: Bits::Packed(word),
            })
        } else {
            Ok(Vertex {
                n,
                bits: Bits::Wide(bits.to_vec()),
            })
        }
    }

    /// Inverse of [`Vertex::index`]: bit `i - 1` of `index` is dimension `i`.
    pub fn from_index(n: usize, index: u64) -> Result<Self> {
        check_dims(n)?;
        if n > PACKED_MAX_DIMS {
            return Err(Error::InvalidColoring(format!(
                "integer vertex ids need n <= {PACKED_MAX_DIMS}, got {n}"
            )));
        }
        if n < 64 && index >> n != 0 {
            return Err(Error::DimensionOutOfRange {
                dim: 64 - index.leading_zeros() as usize,
                n,
            });
        }
        Ok(Vertex {
            n,
            bits: Bits::Packed(index),
        })
    }

    /// Integer id of a packed vertex; `None` above [`PACKED_MAX_DIMS`].
    pub fn index(&self) -> Option<u64> {
        match self.bits {
            Bits::Packed(w) => Some(w),
            Bits::Wide(_) => None,
        }
    }

    pub fn dims(&self) -> usize {
        self.n
    }

    /// Value of dimension `dim` (1-based).
    ///
    /// # Panics
    /// If `dim` is outside `1..=n`.
    pub fn bit(&self, dim: usize) -> bool {
        assert!(
            dim >= 1 && dim <= self.n,
            "dimension {dim} out of range 1..={}",
            self.n
        );
        match &self.bits {
            Bits::Packed(w) => (w >> (dim - 1)) & 1 == 1,
            Bits::Wide(v) => v[dim - 1],
        }
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (1..=self.n).map(move |d| self.bit(d))
    }

    /// The neighbour across dimension `dim`.
    pub fn flipped(&self, dim: usize) -> Self {
        let mut out = self.clone();
        out.flip(dim);
        out
    }

    pub fn flip(&mut self, dim: usize) {
        assert!(
            dim >= 1 && dim <= self.n,
            "dimension {dim} out of range 1..={}",
            self.n
        );
        match &mut self.bits {
            Bits::Packed(w) => *w ^= 1 << (dim - 1),
            Bits::Wide(v) => v[dim - 1] = !v[dim - 1],
        }
    }

    /// Bitwise XOR. XOR by a fixed vertex is a colour-preserving
    /// automorphism of every dimension-based colouring.
    pub fn xor(&self, other: &Vertex) -> Result<Vertex> {
        self.same_dims(other)?;
        let bits = match (&self.bits, &other.bits) {
            (Bits::Packed(a), Bits::Packed(b)) => Bits::Packed(a ^ b),
            (Bits::Wide(a), Bits::Wide(b)) => {
                Bits::Wide(a.iter().zip(b).map(|(x, y)| x ^ y).collect())
            }
            _ => unreachable!("representation is canonical for a given n"),
        };
        Ok(Vertex { n: self.n, bits })
    }

    /// Dimensions (ascending) in which `self` and `other` differ.
    pub fn differing_dims(&self, other: &Vertex) -> Result<Vec<usize>> {
        self.same_dims(other)?;
        Ok((1..=self.n)
            .filter(|&d| self.bit(d) != other.bit(d))
            .collect())
    }

    pub fn hamming_distance(&self, other: &Vertex) -> Result<usize> {
        self.same_dims(other)?;
        Ok(match (&self.bits, &other.bits) {
            (Bits::Packed(a), Bits::Packed(b)) => (a ^ b).count_ones() as usize,
            _ => (1..=self.n)
                .filter(|&d| self.bit(d) != other.bit(d))
                .count(),
        })
    }

    /// Applies a permutation of dimensions: dimension `d` of the result is
    /// dimension `perm[d - 1]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Vertex> {
        if perm.len() != self.n {
            return Err(Error::mismatch("permutation", self.n, perm.len()));
        }
        let bits: Vec<bool> = perm.iter().map(|&src| self.bit(src)).collect();
        Vertex::from_bits(&bits)
    }

    pub(crate) fn same_dims(&self, other: &Vertex) -> Result<()> {
        if self.n != other.n {
            return Err(Error::mismatch("vertex", self.n, other.n));
        }
        Ok(())
    }
}

fn check_dims(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::TooFewDimensions(n));
    }
    Ok(())
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .enumerate()
            .map(|(i, ch)| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::parse(
                    s,
                    i,
                    format!("expected '0' or '1', found {other:?}"),
                )),
            })
            .collect::<Result<Vec<_>>>()?;
        if bits.len() < 2 {
            return Err(Error::parse(
                s,
                bits.len(),
                "a vertex needs at least 2 bits",
            ));
        }
        Vertex::from_bits(&bits)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_roundtrip() {
        let v: Vertex = "0101000".parse().unwrap();
        assert_eq!(v.dims(), 7);
        assert!(!v.bit(1));
        assert!(v.bit(2));
        assert!(v.bit(4));
        assert_eq!(v.to_string(), "0101000");
        assert_eq!(v.index(), Some(0b1010));
    }

    #[test]
    fn parse_reports_position() {
        match "01x1".parse::<Vertex>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!("1".parse::<Vertex>().is_err());
        assert!("".parse::<Vertex>().is_err());
    }

    #[test]
    fn wide_vertices() {
        let s: String = (0..70)
            .map(|i| if i % 3 == 0 { '1' } else { '0' })
            .collect();
        let v: Vertex = s.parse().unwrap();
        assert_eq!(v.index(), None);
        assert_eq!(v.to_string(), s);
        let z = Vertex::zeros(70).unwrap();
        assert_eq!(v.hamming_distance(&z).unwrap(), 24);
        assert_eq!(v.xor(&v).unwrap(), z);
        assert_eq!(v.flipped(70).flipped(70), v);
    }

    #[test]
    fn index_roundtrip_and_range() {
        let v = Vertex::from_index(5, 0b00111).unwrap();
        assert_eq!(v.to_string(), "11100");
        assert!(Vertex::from_index(5, 1 << 5).is_err());
        assert!(Vertex::from_index(1, 0).is_err());
    }

    #[test]
    fn mismatched_dims() {
        let a: Vertex = "000".parse().unwrap();
        let b: Vertex = "0000".parse().unwrap();
        assert!(matches!(a.xor(&b), Err(Error::DimensionMismatch { .. })));
        assert!(a.hamming_distance(&b).is_err());
    }
}
