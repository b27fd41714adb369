//! Exhaustive verification: distances, weight distributions, Gray images,
//! binary linearity, nesting, and the per-code verification report.

use std::collections::BTreeMap;
use std::fmt;

use crate::arm::{predicted_params, ArmBuilder, ArmIndex, ArmParams};
use crate::binary::{perm_equivalent, binary_rm, BinaryCodeSet, PERM_MAX_LEN};
use crate::code::AdditiveCode;
use crate::error::Error;
use crate::exec;
use crate::gray::gray_vector;
use crate::types::{CodeType, Distance};

/// Minimum Lee weight over the nonzero codewords; `Infinite` for the zero
/// code. Enumerates the span, so gamma + 2*delta must fit under the cap.
pub fn min_lee_distance(c: &AdditiveCode, cap_log2: u32) -> Result<Distance, Error> {
    min_dist_impl(c, cap_log2, false)
}

/// Sequential variant of [`min_lee_distance`].
pub fn min_lee_distance_seq(c: &AdditiveCode, cap_log2: u32) -> Result<Distance, Error> {
    min_dist_impl(c, cap_log2, true)
}

fn min_dist_impl(c: &AdditiveCode, cap_log2: u32, seq: bool) -> Result<Distance, Error> {
    let cap_log2 = crate::effective_cap(cap_log2);
    let bits = c.size_log2();
    if bits > cap_log2 {
        return Err(Error::TooLarge {
            required_log2: bits,
            cap_log2,
        });
    }
    let table = c.canonical().combo_table();
    let total = 1u64 << table.bits();
    let fold = |acc: u32, idx: u64| {
        if idx == 0 {
            acc
        } else {
            acc.min(table.codeword(idx).lee_weight())
        }
    };
    let best = if seq {
        exec::fold_reduce_seq(total, || u32::MAX, fold)
    } else {
        exec::fold_reduce(total, || u32::MAX, fold, |a, b| a.min(b))
    };
    if best == u32::MAX {
        Ok(Distance::Infinite)
    } else {
        Ok(Distance::Finite(best))
    }
}

/// Lee weight counts over all codewords; the counts sum to |C| and the zero
/// weight has count one.
pub fn weight_distribution(c: &AdditiveCode, cap_log2: u32) -> Result<BTreeMap<u32, u64>, Error> {
    weight_dist_impl(c, cap_log2, false)
}

/// Sequential variant of [`weight_distribution`].
pub fn weight_distribution_seq(
    c: &AdditiveCode,
    cap_log2: u32,
) -> Result<BTreeMap<u32, u64>, Error> {
    weight_dist_impl(c, cap_log2, true)
}

fn weight_dist_impl(
    c: &AdditiveCode,
    cap_log2: u32,
    seq: bool,
) -> Result<BTreeMap<u32, u64>, Error> {
    let cap_log2 = crate::effective_cap(cap_log2);
    let bits = c.size_log2();
    if bits > cap_log2 {
        return Err(Error::TooLarge {
            required_log2: bits,
            cap_log2,
        });
    }
    let table = c.canonical().combo_table();
    let total = 1u64 << table.bits();
    let n = c.n();
    let fold = |mut acc: Vec<u64>, idx: u64| {
        acc[table.codeword(idx).lee_weight() as usize] += 1;
        acc
    };
    let counts = if seq {
        exec::fold_reduce_seq(total, || vec![0u64; n + 1], fold)
    } else {
        exec::fold_reduce(
            total,
            || vec![0u64; n + 1],
            fold,
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
    };
    Ok(counts
        .into_iter()
        .enumerate()
        .filter(|(_, c)| *c > 0)
        .map(|(w, c)| (w as u32, c))
        .collect())
}

/// The Gray image of the whole code as an explicit binary set; the image has
/// exactly |C| elements since the Gray map is injective.
pub fn gray_image(c: &AdditiveCode, cap_log2: u32) -> Result<BinaryCodeSet, Error> {
    let cap_log2 = crate::effective_cap(cap_log2);
    let bits = c.size_log2();
    if bits > cap_log2 {
        return Err(Error::TooLarge {
            required_log2: bits,
            cap_log2,
        });
    }
    let table = c.canonical().combo_table();
    let words = exec::map_collect(1u64 << table.bits(), |i| gray_vector(&table.codeword(i)));
    let set = BinaryCodeSet::from_vectors(c.n(), words)?;
    debug_assert_eq!(set.len() as u64, 1u64 << bits);
    Ok(set)
}

/// Fixed seed for the sampled closure fallback; keeps reruns identical.
const LINEARITY_SEED: u64 = 0x5eed_1ee5_0001;
const LINEARITY_SAMPLES: u64 = 100_000;
/// Largest set checked pair-exhaustively.
const LINEARITY_EXHAUSTIVE: usize = 1 << 12;

/// Outcome of the XOR-closure check; `exhaustive` records whether every pair
/// was tried or only the seeded random sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearityCheck {
    pub linear: bool,
    pub exhaustive: bool,
}

/// Is the set closed under XOR? Exhaustive over all pairs up to 2^12
/// codewords, sampled with a fixed seed above that.
pub fn is_binary_linear(b: &BinaryCodeSet) -> LinearityCheck {
    let len = b.len();
    if len <= 1 {
        return LinearityCheck {
            linear: true,
            exhaustive: true,
        };
    }
    let words = b.words();
    if len <= LINEARITY_EXHAUSTIVE {
        let total = (len * len) as u64;
        let linear = exec::fold_reduce(
            total,
            || true,
            |acc, idx| {
                acc && {
                    let (i, j) = ((idx / len as u64) as usize, (idx % len as u64) as usize);
                    b.contains(&words[i].xor_raw(&words[j]))
                }
            },
            |a, b| a && b,
        );
        LinearityCheck {
            linear,
            exhaustive: true,
        }
    } else {
        let mut state = LINEARITY_SEED;
        let mut next = move || {
            state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
            z ^ (z >> 31)
        };
        let mut linear = true;
        for _ in 0..LINEARITY_SAMPLES {
            let i = (next() % len as u64) as usize;
            let j = (next() % len as u64) as usize;
            if !b.contains(&words[i].xor_raw(&words[j])) {
                linear = false;
                break;
            }
        }
        LinearityCheck {
            linear,
            exhaustive: false,
        }
    }
}

/// True when every generator row of `inner` lies in `outer`.
pub fn is_subcode(inner: &AdditiveCode, outer: &AdditiveCode) -> Result<bool, Error> {
    if inner.shape() != outer.shape() {
        return Err(Error::Shape {
            expected: outer.shape(),
            got: inner.shape(),
        });
    }
    Ok(inner
        .generator()
        .all_rows()
        .all(|row| outer.canonical().contains(row)))
}

/// Status of one claim line in a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimStatus {
    Pass,
    Fail,
    NotChecked,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaimStatus::Pass => write!(f, "pass"),
            ClaimStatus::Fail => write!(f, "fail"),
            ClaimStatus::NotChecked => write!(f, "not-checked"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ClaimLine {
    pub claim: &'static str,
    pub expected: String,
    pub measured: String,
    pub status: ClaimStatus,
}

/// Comparison of a Gray image against the Reed-Muller oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RmComparison {
    /// Same codewords under the construction's coordinate order.
    Equal,
    /// Equal only after the witnessed coordinate permutation.
    Equivalent(Vec<usize>),
    NotEquivalent,
}

/// Everything measured about one ARM code, against the claimed parameters.
/// A `Pass` requires exact equality; nothing is checked with a tolerance.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub index: ArmIndex,
    pub claimed: ArmParams,
    pub measured_type: CodeType,
    pub measured_d: Option<Distance>,
    pub nesting_ok: bool,
    pub gray_linear: Option<bool>,
    pub rm_equivalent: Option<RmComparison>,
    pub lines: Vec<ClaimLine>,
}

impl VerificationReport {
    /// True when no line failed; not-checked lines do not fail a report.
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.status != ClaimStatus::Fail)
    }

    /// One `claim<TAB>expected<TAB>measured<TAB>status` line per claim.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                l.claim, l.expected, l.measured, l.status
            ));
        }
        out
    }
}

/// Verify every claim about ARM_s(r, m): type, binary length, size, minimum
/// Lee distance, nesting in the next code up, and for m in {2, 3} linearity
/// and Reed-Muller equivalence of the Gray image. Items that cannot be
/// checked under the cap are reported as not-checked, never silently skipped.
pub fn verify_arm(
    builder: &ArmBuilder,
    s: usize,
    r: i32,
    m: usize,
    cap_log2: u32,
) -> Result<VerificationReport, Error> {
    let index = ArmIndex::new(s, r, m)?;
    let claimed = predicted_params(s, r, m)?;
    let code = builder.code(s, r, m)?;
    verify_code(builder, index, claimed, &code, cap_log2)
}

/// The report body, reusable for alternative construction routes.
pub fn verify_code(
    builder: &ArmBuilder,
    index: ArmIndex,
    claimed: ArmParams,
    code: &AdditiveCode,
    cap_log2: u32,
) -> Result<VerificationReport, Error> {
    let (s, r, m) = (index.s, index.r, index.m);
    let mut lines = Vec::new();

    let measured_type = code.generator().code_type(cap_log2)?;
    lines.push(ClaimLine {
        claim: "type",
        expected: claimed.ctype.to_string(),
        measured: measured_type.to_string(),
        status: if measured_type == claimed.ctype {
            ClaimStatus::Pass
        } else {
            ClaimStatus::Fail
        },
    });

    lines.push(ClaimLine {
        claim: "length",
        expected: (1usize << m).to_string(),
        measured: measured_type.n().to_string(),
        status: if measured_type.n() == 1 << m {
            ClaimStatus::Pass
        } else {
            ClaimStatus::Fail
        },
    });

    lines.push(ClaimLine {
        claim: "size",
        expected: format!("2^{}", claimed.k),
        measured: format!("2^{}", measured_type.size_log2()),
        status: if measured_type.size_log2() as u64 == claimed.k {
            ClaimStatus::Pass
        } else {
            ClaimStatus::Fail
        },
    });

    let measured_d = if code.size_log2() <= crate::effective_cap(cap_log2) {
        Some(min_lee_distance(code, cap_log2)?)
    } else {
        None
    };
    lines.push(match measured_d {
        Some(d) => ClaimLine {
            claim: "min_lee_distance",
            expected: claimed.d.to_string(),
            measured: d.to_string(),
            status: if d == claimed.d {
                ClaimStatus::Pass
            } else {
                ClaimStatus::Fail
            },
        },
        None => ClaimLine {
            claim: "min_lee_distance",
            expected: claimed.d.to_string(),
            measured: "(cap)".to_string(),
            status: ClaimStatus::NotChecked,
        },
    });

    // Nesting against r-1; vacuous at the bottom of the family.
    let nesting_ok;
    if r >= 0 {
        let inner = builder.code(s, r - 1, m)?;
        nesting_ok = is_subcode(&inner, code)?;
        lines.push(ClaimLine {
            claim: "nesting",
            expected: "subset".to_string(),
            measured: if nesting_ok { "subset" } else { "not-subset" }.to_string(),
            status: if nesting_ok {
                ClaimStatus::Pass
            } else {
                ClaimStatus::Fail
            },
        });
    } else {
        nesting_ok = true;
        lines.push(ClaimLine {
            claim: "nesting",
            expected: "subset".to_string(),
            measured: "vacuous".to_string(),
            status: ClaimStatus::Pass,
        });
    }

    // Gray-image checks are decisive only at the small lengths.
    let mut gray_linear = None;
    let mut rm_equivalent = None;
    if (2..=3).contains(&m) && (1usize << m) <= PERM_MAX_LEN {
        let image = gray_image(code, cap_log2)?;
        let lin = is_binary_linear(&image);
        gray_linear = Some(lin.linear);
        lines.push(ClaimLine {
            claim: "gray_linear",
            expected: "true".to_string(),
            measured: format!(
                "{}{}",
                lin.linear,
                if lin.exhaustive { "" } else { "(sampled)" }
            ),
            status: if lin.linear {
                ClaimStatus::Pass
            } else {
                ClaimStatus::Fail
            },
        });

        let oracle = binary_rm(r, m, cap_log2)?;
        let comparison = if image == oracle {
            RmComparison::Equal
        } else {
            match perm_equivalent(&image, &oracle)? {
                Some(w) => RmComparison::Equivalent(w),
                None => RmComparison::NotEquivalent,
            }
        };
        let (measured, status) = match &comparison {
            RmComparison::Equal => ("equal".to_string(), ClaimStatus::Pass),
            RmComparison::Equivalent(_) => ("equivalent".to_string(), ClaimStatus::Pass),
            RmComparison::NotEquivalent => ("not-equivalent".to_string(), ClaimStatus::Fail),
        };
        lines.push(ClaimLine {
            claim: "rm_equivalent",
            expected: "equivalent".to_string(),
            measured,
            status,
        });
        rm_equivalent = Some(comparison);
    } else {
        for claim in ["gray_linear", "rm_equivalent"] {
            lines.push(ClaimLine {
                claim,
                expected: "-".to_string(),
                measured: "(not-applicable)".to_string(),
                status: ClaimStatus::NotChecked,
            });
        }
    }

    Ok(VerificationReport {
        index,
        claimed,
        measured_type,
        measured_d,
        nesting_ok,
        gray_linear,
        rm_equivalent,
        lines,
    })
}
