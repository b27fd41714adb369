//! Generator matrices, span enumeration, and the canonical reduced form.

use crate::error::Error;
use crate::exec;
use crate::types::CodeType;
use crate::vector::MixedVector;

/// A generator matrix over Z2^alpha x Z4^beta, split into the block of rows of
/// order at most two and the block of rows of order four.
///
/// Rows are not assumed independent; `code_type` computes the true type of the
/// span and cross-checks it against enumeration when that is affordable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    alpha: usize,
    beta: usize,
    rows2: Vec<MixedVector>,
    rows4: Vec<MixedVector>,
}

impl GeneratorMatrix {
    pub fn new(
        alpha: usize,
        beta: usize,
        rows2: Vec<MixedVector>,
        rows4: Vec<MixedVector>,
    ) -> Result<Self, Error> {
        if alpha + beta == 0 {
            return Err(Error::DegenerateShape { alpha, beta });
        }
        // Surfaces capacity errors for oversized shapes.
        MixedVector::zero(alpha, beta)?;
        for r in &rows2 {
            if r.shape() != (alpha, beta) {
                return Err(Error::Shape {
                    expected: (alpha, beta),
                    got: r.shape(),
                });
            }
            if r.order() > 2 {
                return Err(Error::NotOrderTwo);
            }
        }
        for r in &rows4 {
            if r.shape() != (alpha, beta) {
                return Err(Error::Shape {
                    expected: (alpha, beta),
                    got: r.shape(),
                });
            }
            if r.order() != 4 {
                return Err(Error::NotOrderFour);
            }
        }
        Ok(GeneratorMatrix {
            alpha,
            beta,
            rows2,
            rows4,
        })
    }

    /// The matrix with no rows; it spans the zero code.
    pub fn empty(alpha: usize, beta: usize) -> Result<Self, Error> {
        GeneratorMatrix::new(alpha, beta, Vec::new(), Vec::new())
    }

    /// Build from an unsorted row list, partitioning by order.
    pub fn from_rows(
        alpha: usize,
        beta: usize,
        rows: impl IntoIterator<Item = MixedVector>,
    ) -> Result<Self, Error> {
        let mut rows2 = Vec::new();
        let mut rows4 = Vec::new();
        for r in rows {
            if r.order() == 4 {
                rows4.push(r);
            } else {
                rows2.push(r);
            }
        }
        GeneratorMatrix::new(alpha, beta, rows2, rows4)
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.alpha, self.beta)
    }

    pub fn rows2(&self) -> &[MixedVector] {
        &self.rows2
    }

    pub fn rows4(&self) -> &[MixedVector] {
        &self.rows4
    }

    pub fn all_rows(&self) -> impl Iterator<Item = &MixedVector> {
        self.rows2.iter().chain(self.rows4.iter())
    }

    /// log2 of the number of coefficient tuples spanned by the nominal blocks.
    pub fn combo_bits(&self) -> u32 {
        (self.rows2.len() + 2 * self.rows4.len()) as u32
    }

    /// Every combination sum over the rows, as a sorted duplicate-free set.
    /// Contains the zero vector and is closed under addition.
    pub fn span_enumerate(&self, cap_log2: u32) -> Result<Vec<MixedVector>, Error> {
        let cap_log2 = crate::effective_cap(cap_log2);
        let bits = self.combo_bits();
        if bits > cap_log2 {
            return Err(Error::TooLarge {
                required_log2: bits,
                cap_log2,
            });
        }
        let table = ComboTable::nominal(self);
        let mut words = exec::map_collect(1u64 << bits, |i| table.codeword(i));
        words.sort_unstable();
        words.dedup();
        Ok(words)
    }

    /// Sequential variant of [`span_enumerate`](Self::span_enumerate).
    pub fn span_enumerate_seq(&self, cap_log2: u32) -> Result<Vec<MixedVector>, Error> {
        let cap_log2 = crate::effective_cap(cap_log2);
        let bits = self.combo_bits();
        if bits > cap_log2 {
            return Err(Error::TooLarge {
                required_log2: bits,
                cap_log2,
            });
        }
        let table = ComboTable::nominal(self);
        let mut words = exec::map_collect_seq(1u64 << bits, |i| table.codeword(i));
        words.sort_unstable();
        words.dedup();
        Ok(words)
    }

    /// The canonical reduced generating set, repackaged as a matrix: pivot rows
    /// left to right, partitioned into the order-two and order-four blocks.
    /// Spans the same subgroup and is idempotent.
    pub fn standard_form(&self) -> GeneratorMatrix {
        let canon = CanonicalForm::from_matrix(self);
        let mut rows2 = Vec::new();
        let mut rows4 = Vec::new();
        for row in &canon.rows {
            if row.vec.order() == 4 {
                rows4.push(row.vec);
            } else {
                rows2.push(row.vec);
            }
        }
        GeneratorMatrix {
            alpha: self.alpha,
            beta: self.beta,
            rows2,
            rows4,
        }
    }

    /// The type (alpha, beta; gamma, delta) of the span, computed from the
    /// canonical reduction. When the nominal coefficient space fits under the
    /// cap the result is cross-checked against full enumeration: the span must
    /// hold exactly 2^(gamma+2*delta) elements, 2^(gamma+delta) of order at
    /// most two.
    pub fn code_type(&self, cap_log2: u32) -> Result<CodeType, Error> {
        let cap_log2 = crate::effective_cap(cap_log2);
        let canon = CanonicalForm::from_matrix(self);
        let ct = canon.code_type();
        if self.combo_bits() <= cap_log2 {
            let span = self.span_enumerate(cap_log2)?;
            if span.len() != 1usize << ct.size_log2() {
                return Err(Error::RankInconsistency {
                    detail: format!(
                        "reduction says 2^{} codewords, enumeration found {}",
                        ct.size_log2(),
                        span.len()
                    ),
                });
            }
            let torsion = span.iter().filter(|v| v.order() <= 2).count();
            if torsion != 1usize << ct.two_torsion_log2() {
                return Err(Error::RankInconsistency {
                    detail: format!(
                        "reduction says 2^{} order-two codewords, enumeration found {}",
                        ct.two_torsion_log2(),
                        torsion
                    ),
                });
            }
        }
        Ok(ct)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum PivotKind {
    /// Binary column, pivot 1; coefficient forced mod 2.
    Bin,
    /// Quaternary column, unit pivot normalized to 1; coefficient forced mod 4.
    Unit,
    /// Quaternary column, pivot 2; coefficient forced mod 2.
    Two,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct CanonRow {
    pub(crate) vec: MixedVector,
    pub(crate) col: usize,
    pub(crate) kind: PivotKind,
}

/// Echelon-like canonical generating set over the mixed alphabet.
///
/// Pivots are chosen left to right (binary columns first, then quaternary),
/// preferring unit pivots over the zero divisor 2. Whenever a pivot only pins
/// its coefficient mod 2 (binary columns and pivot-2 columns), the double of
/// the pivot row is fed back into the elimination so that greedy reduction
/// decides membership exactly. Every element of the span then has a unique
/// representation with coefficients in {0,1} per Bin/Two row and {0..3} per
/// Unit row, which yields the span size and the (gamma, delta) split without
/// enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    alpha: usize,
    beta: usize,
    rows: Vec<CanonRow>,
    gamma: usize,
    delta: usize,
}

fn entry(v: &MixedVector, alpha: usize, col: usize) -> u8 {
    if col < alpha {
        v.bin_symbol(col)
    } else {
        v.quat_symbol(col - alpha)
    }
}

impl CanonicalForm {
    pub fn from_matrix(g: &GeneratorMatrix) -> Self {
        Self::from_rows(g.alpha, g.beta, g.all_rows().copied())
    }

    pub fn from_rows(
        alpha: usize,
        beta: usize,
        rows: impl IntoIterator<Item = MixedVector>,
    ) -> Self {
        let mut work: Vec<MixedVector> = rows.into_iter().filter(|r| !r.is_zero()).collect();
        let mut pivots: Vec<CanonRow> = Vec::new();

        for col in 0..alpha + beta {
            let pick = if col < alpha {
                work.iter().position(|r| r.bin_symbol(col) == 1)
            } else {
                let q = col - alpha;
                work.iter()
                    .position(|r| r.quat_symbol(q) & 1 == 1)
                    .or_else(|| work.iter().position(|r| r.quat_symbol(q) == 2))
            };
            let Some(i) = pick else { continue };
            let mut p = work.remove(i);
            let kind = if col < alpha {
                PivotKind::Bin
            } else if entry(&p, alpha, col) & 1 == 1 {
                if entry(&p, alpha, col) == 3 {
                    p = p.scale(3); // normalize the unit pivot to 1
                }
                PivotKind::Unit
            } else {
                PivotKind::Two
            };

            work.retain_mut(|r| {
                let e = entry(r, alpha, col);
                if e != 0 {
                    let mult = match kind {
                        PivotKind::Bin => 1,
                        PivotKind::Unit => (4 - e) & 3,
                        PivotKind::Two => 3, // e == 2 here: 2 + 3*2 = 0 mod 4
                    };
                    *r = r.add_raw(&p.scale(mult));
                }
                !r.is_zero()
            });

            // Doubling a Bin/Two pivot gives an element with a zero at this
            // column; it must stay reachable by later pivots.
            if matches!(kind, PivotKind::Bin | PivotKind::Two) {
                let d = p.double();
                if !d.is_zero() {
                    work.push(d);
                }
            }
            pivots.push(CanonRow { vec: p, col, kind });
        }
        debug_assert!(work.iter().all(|r| r.is_zero()));

        // Back-reduce entries above each pivot to their canonical residues.
        for i in 0..pivots.len() {
            let (col, kind, vec) = (pivots[i].col, pivots[i].kind, pivots[i].vec);
            for earlier in pivots.iter_mut().take(i) {
                let e = entry(&earlier.vec, alpha, col);
                if e == 0 {
                    continue;
                }
                let adj = match kind {
                    PivotKind::Bin => Some(vec),
                    PivotKind::Unit => Some(vec.scale((4 - e) & 3)),
                    // residues {0,1} are canonical above a pivot 2
                    PivotKind::Two => (e >= 2).then(|| vec.scale(3)),
                };
                if let Some(a) = adj {
                    earlier.vec = earlier.vec.add_raw(&a);
                }
            }
        }

        let size_log2: usize = pivots
            .iter()
            .map(|r| match r.kind {
                PivotKind::Unit => 2,
                _ => 1,
            })
            .sum();
        // delta = F2-rank of the doubled generators (they span 2C, an F2-space
        // on the {0,2} quaternary lanes); 2r is encoded by the odd lanes of r.
        let mut basis: Vec<u128> = Vec::new();
        for row in &pivots {
            let mut x = row.vec.quat_parity();
            for &b in &basis {
                x = x.min(x ^ b);
            }
            if x != 0 {
                basis.push(x);
            }
        }
        let delta = basis.len();
        debug_assert!(size_log2 >= 2 * delta);
        let gamma = size_log2 - 2 * delta;

        CanonicalForm {
            alpha,
            beta,
            rows: pivots,
            gamma,
            delta,
        }
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn gamma(&self) -> usize {
        self.gamma
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn size_log2(&self) -> u32 {
        (self.gamma + 2 * self.delta) as u32
    }

    pub fn code_type(&self) -> CodeType {
        CodeType::new(self.alpha, self.beta, self.gamma, self.delta)
    }

    pub(crate) fn canon_rows(&self) -> impl Iterator<Item = &MixedVector> {
        self.rows.iter().map(|r| &r.vec)
    }

    /// Greedy left-to-right reduction; the residual is zero exactly for
    /// members of the span.
    pub fn reduce(&self, v: &MixedVector) -> MixedVector {
        let mut v = *v;
        for row in &self.rows {
            let e = entry(&v, self.alpha, row.col);
            if e == 0 {
                continue;
            }
            match row.kind {
                PivotKind::Bin => v = v.add_raw(&row.vec),
                PivotKind::Unit => v = v.add_raw(&row.vec.scale((4 - e) & 3)),
                PivotKind::Two => {
                    if e == 2 {
                        v = v.add_raw(&row.vec.scale(3));
                    }
                    // odd residues cannot be cleared: v stays nonzero
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &MixedVector) -> bool {
        debug_assert_eq!(v.shape(), (self.alpha, self.beta));
        self.reduce(v).is_zero()
    }

    /// Coefficient table enumerating the span exactly once per codeword.
    pub(crate) fn combo_table(&self) -> ComboTable {
        let zero = MixedVector::zero(self.alpha, self.beta).expect("validated shape");
        let mut parts = Vec::with_capacity(self.rows.len());
        let mut shift = 0u32;
        for row in &self.rows {
            match row.kind {
                PivotKind::Unit => {
                    parts.push(Part {
                        shift,
                        mask: 3,
                        mult: vec![zero, row.vec, row.vec.double(), row.vec.scale(3)],
                    });
                    shift += 2;
                }
                _ => {
                    parts.push(Part {
                        shift,
                        mask: 1,
                        mult: vec![zero, row.vec],
                    });
                    shift += 1;
                }
            }
        }
        ComboTable {
            zero,
            bits: shift,
            parts,
        }
    }
}

pub(crate) struct Part {
    shift: u32,
    mask: u64,
    mult: Vec<MixedVector>,
}

/// Decodes a coefficient index into the corresponding combination sum.
pub(crate) struct ComboTable {
    zero: MixedVector,
    bits: u32,
    parts: Vec<Part>,
}

impl ComboTable {
    /// One coefficient field per nominal row: 1 bit per order-two row, 2 bits
    /// per order-four row. Dependent rows make the map non-injective.
    pub(crate) fn nominal(g: &GeneratorMatrix) -> Self {
        let zero = MixedVector::zero(g.alpha, g.beta).expect("validated shape");
        let mut parts = Vec::with_capacity(g.rows2.len() + g.rows4.len());
        let mut shift = 0u32;
        for r in &g.rows2 {
            parts.push(Part {
                shift,
                mask: 1,
                mult: vec![zero, *r],
            });
            shift += 1;
        }
        for r in &g.rows4 {
            parts.push(Part {
                shift,
                mask: 3,
                mult: vec![zero, *r, r.double(), r.scale(3)],
            });
            shift += 2;
        }
        ComboTable {
            zero,
            bits: shift,
            parts,
        }
    }

    pub(crate) fn bits(&self) -> u32 {
        self.bits
    }

    pub(crate) fn codeword(&self, idx: u64) -> MixedVector {
        let mut acc = self.zero;
        for p in &self.parts {
            let c = ((idx >> p.shift) & p.mask) as usize;
            if c != 0 {
                acc = acc.add_raw(&p.mult[c]);
            }
        }
        acc
    }
}
