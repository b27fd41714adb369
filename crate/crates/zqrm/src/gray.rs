//! The Gray map, Lee and Hamming metrics, and the isometry between them.

use std::fmt;

use crate::error::Error;
use crate::vector::MixedVector;

/// Largest supported binary image length (alpha + 2*beta <= 192 fits).
pub const MAX_BITS: usize = 256;

/// A fixed-length bit vector; XOR is the group law.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryVector {
    len: u16,
    words: [u64; 4],
}

impl BinaryVector {
    pub fn zero(len: usize) -> Result<Self, Error> {
        if len > MAX_BITS {
            return Err(Error::Capacity {
                what: "n",
                got: len,
                max: MAX_BITS,
            });
        }
        Ok(BinaryVector {
            len: len as u16,
            words: [0; 4],
        })
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self, Error> {
        let mut v = BinaryVector::zero(bits.len())?;
        for (i, &b) in bits.iter().enumerate() {
            if b > 1 {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("bit {} out of range", b),
                });
            }
            if b == 1 {
                v.set(i);
            }
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bit(&self, i: usize) -> u8 {
        debug_assert!(i < self.len());
        ((self.words[i / 64] >> (i % 64)) & 1) as u8
    }

    pub(crate) fn set(&mut self, i: usize) {
        debug_assert!(i < self.len());
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words == [0; 4]
    }

    pub fn xor(&self, other: &BinaryVector) -> Result<BinaryVector, Error> {
        if self.len != other.len {
            return Err(Error::Shape {
                expected: (self.len(), 0),
                got: (other.len(), 0),
            });
        }
        Ok(self.xor_raw(other))
    }

    pub(crate) fn xor_raw(&self, other: &BinaryVector) -> BinaryVector {
        debug_assert_eq!(self.len, other.len);
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(other.words.iter()) {
            *w ^= o;
        }
        BinaryVector {
            len: self.len,
            words,
        }
    }

    /// (self, other) glued end to end.
    pub fn concat(&self, other: &BinaryVector) -> Result<BinaryVector, Error> {
        let mut v = BinaryVector::zero(self.len() + other.len())?;
        v.words = self.words;
        for i in 0..other.len() {
            if other.bit(i) == 1 {
                v.set(self.len() + i);
            }
        }
        Ok(v)
    }

    /// The low bits as one word; only valid for len <= 64.
    pub fn as_u64(&self) -> u64 {
        debug_assert!(self.len() <= 64);
        self.words[0]
    }

    pub fn bits(&self) -> Vec<u8> {
        (0..self.len()).map(|i| self.bit(i)).collect()
    }
}

impl fmt::Display for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.bit(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

/// The Gray image of one quaternary symbol:
/// 0 -> (0,0), 1 -> (0,1), 2 -> (1,1), 3 -> (1,0).
pub fn gray_symbol(z: u8) -> (u8, u8) {
    match z & 3 {
        0 => (0, 0),
        1 => (0, 1),
        2 => (1, 1),
        _ => (1, 0),
    }
}

/// The Gray map: binary symbols copied, each quaternary symbol expanded to a
/// bit pair, giving a vector of length alpha + 2*beta. Injective.
pub fn gray_vector(v: &MixedVector) -> BinaryVector {
    let n = v.alpha() + 2 * v.beta();
    let mut out = BinaryVector::zero(n).expect("image length within capacity");
    for i in 0..v.alpha() {
        if v.bin_symbol(i) == 1 {
            out.set(i);
        }
    }
    for j in 0..v.beta() {
        let (a, b) = gray_symbol(v.quat_symbol(j));
        if a == 1 {
            out.set(v.alpha() + 2 * j);
        }
        if b == 1 {
            out.set(v.alpha() + 2 * j + 1);
        }
    }
    out
}

/// Lee weight: Hamming weight of the binary part plus sum of min(z, 4-z) over
/// the quaternary part. Equals the Hamming weight of the Gray image.
pub fn lee_weight(v: &MixedVector) -> u32 {
    v.lee_weight()
}

/// Lee distance between two vectors of the same shape.
pub fn lee_distance(u: &MixedVector, v: &MixedVector) -> Result<u32, Error> {
    Ok(lee_weight(&u.add(&v.neg())?))
}

/// Number of differing positions.
pub fn hamming_distance(x: &BinaryVector, y: &BinaryVector) -> Result<u32, Error> {
    Ok(x.xor(y)?.weight())
}
