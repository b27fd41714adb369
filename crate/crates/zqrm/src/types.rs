use std::fmt;

/// The parameter tuple (alpha, beta; gamma, delta) of an additive code.
///
/// A code of this type is group-isomorphic to Z2^gamma x Z4^delta inside
/// Z2^alpha x Z4^beta, so it has 2^(gamma+2*delta) codewords of which
/// 2^(gamma+delta) have order at most two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeType {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub delta: usize,
}

impl CodeType {
    pub fn new(alpha: usize, beta: usize, gamma: usize, delta: usize) -> Self {
        CodeType {
            alpha,
            beta,
            gamma,
            delta,
        }
    }

    /// Binary length n = alpha + 2*beta.
    pub fn n(&self) -> usize {
        self.alpha + 2 * self.beta
    }

    /// log2 of the number of codewords.
    pub fn size_log2(&self) -> u32 {
        (self.gamma + 2 * self.delta) as u32
    }

    /// log2 of the number of codewords of order at most two.
    pub fn two_torsion_log2(&self) -> u32 {
        (self.gamma + self.delta) as u32
    }
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{};{},{})",
            self.alpha, self.beta, self.gamma, self.delta
        )
    }
}

/// A minimum distance; the zero code gets `Infinite` so that the construction
/// predictors stay total when one input is the zero code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    /// Multiply by a constant; infinity absorbs.
    pub fn times(self, k: u32) -> Distance {
        match self {
            Distance::Finite(d) => Distance::Finite(d * k),
            Distance::Infinite => Distance::Infinite,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    pub fn finite(&self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(*d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{}", d),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_type_derived_quantities() {
        let t = CodeType::new(4, 2, 2, 1);
        assert_eq!(t.n(), 8);
        assert_eq!(t.size_log2(), 4);
        assert_eq!(t.two_torsion_log2(), 3);
        assert_eq!(t.to_string(), "(4,2;2,1)");
    }

    #[test]
    fn distance_ordering_and_arithmetic() {
        assert!(Distance::Finite(4) < Distance::Infinite);
        assert!(Distance::Finite(2) < Distance::Finite(3));
        assert_eq!(Distance::Infinite.times(2), Distance::Infinite);
        assert_eq!(Distance::Finite(3).times(2), Distance::Finite(6));
        // min with infinity picks the finite side
        assert_eq!(
            Distance::Finite(8).min(Distance::Infinite),
            Distance::Finite(8)
        );
        assert_eq!(Distance::Infinite.to_string(), "inf");
    }
}
