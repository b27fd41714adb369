use std::fmt;

/// Errors raised by vector arithmetic, constructions, analyses, and the text formats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands disagree on the ambient shape (alpha, beta).
    Shape {
        expected: (usize, usize),
        got: (usize, usize),
    },
    /// An enumeration would exceed the configured cap.
    TooLarge { required_log2: u32, cap_log2: u32 },
    /// A row required to have order at most two contains a quaternary unit.
    NotOrderTwo,
    /// A row declared as order four actually has order at most two.
    NotOrderFour,
    /// No code family exists for this (s, m).
    NoSuchFamily { s: usize, m: usize },
    /// (s, r, m) is outside the defined index ranges.
    NoSuchCode { s: usize, r: i32, m: usize },
    /// Canonical reduction and span enumeration disagree; the matrix is malformed.
    RankInconsistency { detail: String },
    /// No generator set exists for this ambient shape.
    DegenerateShape { alpha: usize, beta: usize },
    /// The permutation search only supports short lengths.
    TooLong { len: usize, max: usize },
    /// A vector dimension exceeds what the packed representation holds.
    Capacity {
        what: &'static str,
        got: usize,
        max: usize,
    },
    /// Text format violation.
    Parse { line: usize, msg: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Shape { expected, got } => write!(
                f,
                "shape: expected (alpha,beta)=({},{}), got ({},{})",
                expected.0, expected.1, got.0, got.1
            ),
            Error::TooLarge {
                required_log2,
                cap_log2,
            } => write!(
                f,
                "too-large: enumeration needs 2^{} elements, cap is 2^{}",
                required_log2, cap_log2
            ),
            Error::NotOrderTwo => write!(f, "not-order-two: row contains a quaternary unit"),
            Error::NotOrderFour => write!(f, "not-order-four: row doubles to zero"),
            Error::NoSuchFamily { s, m } => {
                write!(f, "no-such-family: s={} is not defined for m={}", s, m)
            }
            Error::NoSuchCode { s, r, m } => {
                write!(f, "no-such-code: (s,r,m)=({},{},{}) out of range", s, r, m)
            }
            Error::RankInconsistency { detail } => write!(f, "rank-inconsistency: {}", detail),
            Error::DegenerateShape { alpha, beta } => {
                write!(f, "degenerate-shape: alpha={} beta={}", alpha, beta)
            }
            Error::TooLong { len, max } => {
                write!(f, "too-long: length {} exceeds supported maximum {}", len, max)
            }
            Error::Capacity { what, got, max } => {
                write!(f, "capacity: {}={} exceeds packed maximum {}", what, got, max)
            }
            Error::Parse { line, msg } => write!(f, "parse: line {}: {}", line, msg),
        }
    }
}

impl std::error::Error for Error {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_uses_stable_kebab_codes() {
        let cases: Vec<(Error, &str)> = vec![
            (
                Error::Shape {
                    expected: (2, 1),
                    got: (4, 0),
                },
                "shape:",
            ),
            (
                Error::TooLarge {
                    required_log2: 30,
                    cap_log2: 24,
                },
                "too-large:",
            ),
            (Error::NotOrderTwo, "not-order-two:"),
            (Error::NotOrderFour, "not-order-four:"),
            (Error::NoSuchFamily { s: 3, m: 2 }, "no-such-family:"),
            (Error::NoSuchCode { s: 1, r: 4, m: 3 }, "no-such-code:"),
            (
                Error::RankInconsistency {
                    detail: "x".into(),
                },
                "rank-inconsistency:",
            ),
            (Error::DegenerateShape { alpha: 0, beta: 0 }, "degenerate-shape:"),
            (Error::TooLong { len: 16, max: 8 }, "too-long:"),
            (
                Error::Capacity {
                    what: "alpha",
                    got: 70,
                    max: 64,
                },
                "capacity:",
            ),
            (
                Error::Parse {
                    line: 3,
                    msg: "bad".into(),
                },
                "parse:",
            ),
        ];
        for (e, prefix) in cases {
            assert!(e.to_string().starts_with(prefix), "{e}");
        }
    }
}
