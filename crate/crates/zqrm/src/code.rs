//! An additive code: a generator matrix plus its verified type and canonical form.

use crate::error::Error;
use crate::matrix::{CanonicalForm, GeneratorMatrix};
use crate::types::CodeType;
use crate::vector::MixedVector;

/// A Z2Z4-additive code. Immutable after construction; the stored type always
/// agrees with the structure recomputed from the generator matrix.
#[derive(Debug, Clone)]
pub struct AdditiveCode {
    gen: GeneratorMatrix,
    ctype: CodeType,
    canon: CanonicalForm,
}

impl AdditiveCode {
    /// Wrap a generator matrix, computing the canonical form and the true type
    /// of its span. Dependent rows are fine: the type describes the span, not
    /// the nominal block sizes.
    pub fn new(gen: GeneratorMatrix) -> Self {
        let canon = CanonicalForm::from_matrix(&gen);
        let ctype = canon.code_type();
        AdditiveCode { gen, ctype, canon }
    }

    pub fn zero(alpha: usize, beta: usize) -> Result<Self, Error> {
        Ok(AdditiveCode::new(GeneratorMatrix::empty(alpha, beta)?))
    }

    pub fn generator(&self) -> &GeneratorMatrix {
        &self.gen
    }

    pub fn ctype(&self) -> CodeType {
        self.ctype
    }

    pub fn canonical(&self) -> &CanonicalForm {
        &self.canon
    }

    pub fn alpha(&self) -> usize {
        self.gen.alpha()
    }

    pub fn beta(&self) -> usize {
        self.gen.beta()
    }

    pub fn shape(&self) -> (usize, usize) {
        self.gen.shape()
    }

    /// Binary length alpha + 2*beta.
    pub fn n(&self) -> usize {
        self.ctype.n()
    }

    pub fn size_log2(&self) -> u32 {
        self.ctype.size_log2()
    }

    pub fn is_zero_code(&self) -> bool {
        self.size_log2() == 0
    }

    /// Membership test by reduction against the canonical form.
    pub fn contains(&self, v: &MixedVector) -> Result<bool, Error> {
        if v.shape() != self.shape() {
            return Err(Error::Shape {
                expected: self.shape(),
                got: v.shape(),
            });
        }
        Ok(self.canon.contains(v))
    }

    /// True when both codes are the same subgroup, decided by double inclusion
    /// of the canonical generating sets.
    pub fn same_span(&self, other: &AdditiveCode) -> bool {
        self.shape() == other.shape()
            && self.size_log2() == other.size_log2()
            && self.canon.canon_rows().all(|r| other.canon.contains(r))
            && other.canon.canon_rows().all(|r| self.canon.contains(r))
    }

    /// All codewords, sorted. Enumerates through the canonical coefficient
    /// table, which visits every codeword exactly once.
    pub fn codewords(&self, cap_log2: u32) -> Result<Vec<MixedVector>, Error> {
        let cap_log2 = crate::effective_cap(cap_log2);
        let bits = self.size_log2();
        if bits > cap_log2 {
            return Err(Error::TooLarge {
                required_log2: bits,
                cap_log2,
            });
        }
        let table = self.canon.combo_table();
        let mut words = crate::exec::map_collect(1u64 << table.bits(), |i| table.codeword(i));
        words.sort_unstable();
        debug_assert!(words.windows(2).all(|w| w[0] < w[1]));
        Ok(words)
    }
}
