//! Packed vectors over Z2^alpha x Z4^beta.
//!
//! The binary part lives in one `u64` (one bit per symbol) and the quaternary
//! part in one `u128` (two bits per symbol), so a codeword is `Copy` and the
//! exhaustive enumerations stay in memory at the default cap.

use std::fmt;

use crate::error::Error;

/// Largest supported binary length.
pub const MAX_ALPHA: usize = 64;
/// Largest supported quaternary length.
pub const MAX_BETA: usize = 64;

/// A vector in Z2^alpha x Z4^beta.
///
/// Addition is componentwise mod 2 on the binary part and mod 4 on the
/// quaternary part; the all-zero vector is the identity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedVector {
    alpha: u8,
    beta: u8,
    bin: u64,
    quat: u128,
}

/// 0b01 in every 2-bit lane of the quaternary word, masked to `beta` lanes.
fn lo_mask(beta: usize) -> u128 {
    const LO: u128 = 0x5555_5555_5555_5555_5555_5555_5555_5555;
    LO & lane_mask(beta)
}

fn lane_mask(beta: usize) -> u128 {
    if beta >= MAX_BETA {
        u128::MAX
    } else {
        (1u128 << (2 * beta)) - 1
    }
}

impl MixedVector {
    /// The zero vector of the given shape.
    pub fn zero(alpha: usize, beta: usize) -> Result<Self, Error> {
        if alpha > MAX_ALPHA {
            return Err(Error::Capacity {
                what: "alpha",
                got: alpha,
                max: MAX_ALPHA,
            });
        }
        if beta > MAX_BETA {
            return Err(Error::Capacity {
                what: "beta",
                got: beta,
                max: MAX_BETA,
            });
        }
        Ok(MixedVector {
            alpha: alpha as u8,
            beta: beta as u8,
            bin: 0,
            quat: 0,
        })
    }

    /// Build from explicit symbol slices; binary symbols in {0,1}, quaternary in {0..3}.
    pub fn from_symbols(bin: &[u8], quat: &[u8]) -> Result<Self, Error> {
        let mut v = MixedVector::zero(bin.len(), quat.len())?;
        for (i, &b) in bin.iter().enumerate() {
            if b > 1 {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("binary symbol {} out of range", b),
                });
            }
            v.bin |= (b as u64) << i;
        }
        for (j, &q) in quat.iter().enumerate() {
            if q > 3 {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("quaternary symbol {} out of range", q),
                });
            }
            v.quat |= (q as u128) << (2 * j);
        }
        Ok(v)
    }

    pub fn alpha(&self) -> usize {
        self.alpha as usize
    }

    pub fn beta(&self) -> usize {
        self.beta as usize
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.alpha(), self.beta())
    }

    pub fn bin_symbol(&self, i: usize) -> u8 {
        debug_assert!(i < self.alpha());
        ((self.bin >> i) & 1) as u8
    }

    pub fn quat_symbol(&self, j: usize) -> u8 {
        debug_assert!(j < self.beta());
        ((self.quat >> (2 * j)) & 3) as u8
    }

    pub fn bin_symbols(&self) -> Vec<u8> {
        (0..self.alpha()).map(|i| self.bin_symbol(i)).collect()
    }

    pub fn quat_symbols(&self) -> Vec<u8> {
        (0..self.beta()).map(|j| self.quat_symbol(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.bin == 0 && self.quat == 0
    }

    /// Componentwise sum, mod 2 left of the bar and mod 4 right of it.
    pub fn add(&self, other: &MixedVector) -> Result<MixedVector, Error> {
        if self.shape() != other.shape() {
            return Err(Error::Shape {
                expected: self.shape(),
                got: other.shape(),
            });
        }
        Ok(self.add_raw(other))
    }

    /// Same as [`add`](Self::add) for operands known to share a shape.
    pub(crate) fn add_raw(&self, other: &MixedVector) -> MixedVector {
        debug_assert_eq!(self.shape(), other.shape());
        let lo = lo_mask(self.beta());
        // 2-bit lane-wise add mod 4: xor plus the carry out of the low bit.
        let carry = (self.quat & other.quat & lo) << 1;
        MixedVector {
            alpha: self.alpha,
            beta: self.beta,
            bin: self.bin ^ other.bin,
            quat: self.quat ^ other.quat ^ carry,
        }
    }

    /// Scalar multiple; c is taken mod 4 (mod 2 on the binary part).
    pub fn scale(&self, c: u8) -> MixedVector {
        match c & 3 {
            0 => MixedVector {
                alpha: self.alpha,
                beta: self.beta,
                bin: 0,
                quat: 0,
            },
            1 => *self,
            2 => self.double(),
            _ => self.double().add_raw(self),
        }
    }

    /// 2*v: the binary part vanishes, quaternary lanes map 0,1,2,3 -> 0,2,0,2.
    pub fn double(&self) -> MixedVector {
        MixedVector {
            alpha: self.alpha,
            beta: self.beta,
            bin: 0,
            quat: (self.quat & lo_mask(self.beta())) << 1,
        }
    }

    /// Additive inverse: identity on the binary part, lane-wise 4-z on the rest.
    pub fn neg(&self) -> MixedVector {
        let mut v = self.scale(3);
        v.bin = self.bin;
        v
    }

    /// Smallest k in {1,2,4} with k*v = 0.
    pub fn order(&self) -> u32 {
        if self.is_zero() {
            1
        } else if self.quat & lo_mask(self.beta()) == 0 {
            2
        } else {
            4
        }
    }

    /// Hamming weight of the binary part plus Lee weights of the quaternary part.
    pub fn lee_weight(&self) -> u32 {
        let lo = lo_mask(self.beta());
        let ones_or_threes = self.quat & lo;
        let twos = (self.quat >> 1) & lo & !self.quat;
        self.bin.count_ones() + ones_or_threes.count_ones() + 2 * twos.count_ones()
    }

    /// The mod-2 reduction of the quaternary part as a lane mask (used by the
    /// canonical-form rank computations).
    pub(crate) fn quat_parity(&self) -> u128 {
        self.quat & lo_mask(self.beta())
    }
}

impl fmt::Display for MixedVector {
    /// Renders in the row syntax of the text formats: `1 0 | 2 3`, with the
    /// bar always present.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.alpha() {
            write!(f, "{} ", self.bin_symbol(i))?;
        }
        write!(f, "|")?;
        for j in 0..self.beta() {
            write!(f, " {}", self.quat_symbol(j))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MixedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}
