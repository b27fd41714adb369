//! Explicit binary code sets: the Reed-Muller oracle and the coordinate
//! permutation search used to compare Gray images against it.

use std::collections::HashMap;

use crate::arm::binom_sum;
use crate::error::Error;
use crate::gray::BinaryVector;

/// An explicit set of fixed-length bit vectors, stored sorted and
/// duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCodeSet {
    bit_len: usize,
    words: Vec<BinaryVector>,
}

impl BinaryCodeSet {
    pub fn from_vectors(bit_len: usize, vectors: Vec<BinaryVector>) -> Result<Self, Error> {
        for v in &vectors {
            if v.len() != bit_len {
                return Err(Error::Shape {
                    expected: (bit_len, 0),
                    got: (v.len(), 0),
                });
            }
        }
        let mut words = vectors;
        words.sort_unstable();
        words.dedup();
        Ok(BinaryCodeSet { bit_len, words })
    }

    /// Number of codewords.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Length of each codeword in bits.
    pub fn bit_len(&self) -> usize {
        self.bit_len
    }

    pub fn contains(&self, v: &BinaryVector) -> bool {
        self.words.binary_search(v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &BinaryVector> {
        self.words.iter()
    }

    pub fn words(&self) -> &[BinaryVector] {
        &self.words
    }

    /// Counts of codewords by Hamming weight.
    pub fn weight_distribution(&self) -> std::collections::BTreeMap<u32, u64> {
        let mut dist = std::collections::BTreeMap::new();
        for w in &self.words {
            *dist.entry(w.weight()).or_insert(0u64) += 1;
        }
        dist
    }

    /// Reorder coordinates: output bit t of each word takes input bit perm[t].
    pub fn permute(&self, perm: &[usize]) -> Result<BinaryCodeSet, Error> {
        if perm.len() != self.bit_len {
            return Err(Error::Shape {
                expected: (self.bit_len, 0),
                got: (perm.len(), 0),
            });
        }
        let mut out = Vec::with_capacity(self.words.len());
        for w in &self.words {
            let mut v = BinaryVector::zero(self.bit_len)?;
            for (t, &src) in perm.iter().enumerate() {
                if w.bit(src) == 1 {
                    v.set(t);
                }
            }
            out.push(v);
        }
        BinaryCodeSet::from_vectors(self.bit_len, out)
    }
}

/// The classical binary Reed-Muller code RM(r, m) of length 2^m, built by the
/// (u, u+v) recursion from the repetition code and the full space. This is the
/// independent oracle the Gray images are compared against: it never touches
/// the mixed-alphabet machinery.
pub fn binary_rm(r: i32, m: usize, cap_log2: u32) -> Result<BinaryCodeSet, Error> {
    if m < 1 {
        return Err(Error::NoSuchCode { s: 0, r, m });
    }
    if (1usize << m) > crate::gray::MAX_BITS {
        return Err(Error::Capacity {
            what: "n",
            got: 1 << m,
            max: crate::gray::MAX_BITS,
        });
    }
    if r < -1 || r > m as i32 {
        return Err(Error::NoSuchCode { s: 0, r, m });
    }
    let cap_log2 = crate::effective_cap(cap_log2);
    let k = binom_sum(m, r);
    if k > cap_log2 as u64 {
        return Err(Error::TooLarge {
            required_log2: k as u32,
            cap_log2,
        });
    }
    let mut memo: HashMap<(i32, usize), Vec<BinaryVector>> = HashMap::new();
    let words = rm_rec(r, m, &mut memo)?;
    debug_assert_eq!(words.len() as u64, 1u64 << k);
    BinaryCodeSet::from_vectors(1 << m, words)
}

fn rm_rec(
    r: i32,
    m: usize,
    memo: &mut HashMap<(i32, usize), Vec<BinaryVector>>,
) -> Result<Vec<BinaryVector>, Error> {
    if let Some(v) = memo.get(&(r, m)) {
        return Ok(v.clone());
    }
    let n = 1usize << m;
    let out: Vec<BinaryVector> = if r < 0 {
        vec![BinaryVector::zero(n)?]
    } else if r == 0 {
        let ones = BinaryVector::from_bits(&vec![1u8; n])?;
        vec![BinaryVector::zero(n)?, ones]
    } else if r >= m as i32 {
        // the full space {0,1}^n
        let mut all = Vec::with_capacity(1 << n);
        for idx in 0u64..(1u64 << n) {
            let bits: Vec<u8> = (0..n).map(|i| ((idx >> i) & 1) as u8).collect();
            all.push(BinaryVector::from_bits(&bits)?);
        }
        all
    } else {
        let u_set = rm_rec(r, m - 1, memo)?;
        let v_set = rm_rec(r - 1, m - 1, memo)?;
        let mut out = Vec::with_capacity(u_set.len() * v_set.len());
        for u in &u_set {
            for v in &v_set {
                out.push(u.concat(&u.xor_raw(v))?);
            }
        }
        out
    };
    memo.insert((r, m), out.clone());
    Ok(out)
}

/// Maximum length handled by the permutation search.
pub const PERM_MAX_LEN: usize = 8;

/// Search for a coordinate permutation mapping `a` onto `b`; lengths must
/// match and are limited to 8. On success the witness `perm` satisfies
/// `a.permute(&perm) == b`. Candidates are pruned by per-coordinate weight
/// profiles and by prefix multiset comparisons at every search depth.
pub fn perm_equivalent(a: &BinaryCodeSet, b: &BinaryCodeSet) -> Result<Option<Vec<usize>>, Error> {
    if a.bit_len() != b.bit_len() {
        return Err(Error::Shape {
            expected: (a.bit_len(), 0),
            got: (b.bit_len(), 0),
        });
    }
    let n = a.bit_len();
    if n > PERM_MAX_LEN {
        return Err(Error::TooLong {
            len: n,
            max: PERM_MAX_LEN,
        });
    }
    if a.len() != b.len() {
        return Ok(None);
    }
    if n == 0 || a.is_empty() {
        return Ok(Some((0..n).collect()));
    }

    let pack = |s: &BinaryCodeSet| -> Vec<u8> {
        s.iter().map(|w| w.as_u64() as u8).collect()
    };
    let wa = pack(a);
    let wb = pack(b);

    // Weight profile of each coordinate: how many words of each weight have
    // the bit set. A coordinate can only map onto one with the same profile.
    let profile = |ws: &[u8], j: usize| -> [u32; 9] {
        let mut p = [0u32; 9];
        for &w in ws {
            if (w >> j) & 1 == 1 {
                p[w.count_ones() as usize] += 1;
            }
        }
        p
    };
    let prof_a: Vec<[u32; 9]> = (0..n).map(|j| profile(&wa, j)).collect();
    let prof_b: Vec<[u32; 9]> = (0..n).map(|t| profile(&wb, t)).collect();

    // Multiset of b-prefixes on coordinates 0..=t, as count tables.
    let mut b_counts: Vec<[u16; 256]> = vec![[0u16; 256]; n];
    for (t, counts) in b_counts.iter_mut().enumerate() {
        let mask = ((1u16 << (t + 1)) - 1) as u8;
        for &w in &wb {
            counts[(w & mask) as usize] += 1;
        }
    }

    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut prefixes = vec![0u8; wa.len()];
    if dfs(
        0, n, &wa, &prof_a, &prof_b, &b_counts, &mut perm, &mut used, &mut prefixes,
    ) {
        debug_assert_eq!(&a.permute(&perm)?, b);
        Ok(Some(perm))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    t: usize,
    n: usize,
    wa: &[u8],
    prof_a: &[[u32; 9]],
    prof_b: &[[u32; 9]],
    b_counts: &[[u16; 256]],
    perm: &mut [usize],
    used: &mut [bool],
    prefixes: &mut [u8],
) -> bool {
    if t == n {
        return true;
    }
    for j in 0..n {
        if used[j] || prof_a[j] != prof_b[t] {
            continue;
        }
        let mut counts = [0u16; 256];
        for (w, p) in wa.iter().zip(prefixes.iter()) {
            let v = p | (((w >> j) & 1) << t);
            counts[v as usize] += 1;
        }
        if counts != b_counts[t] {
            continue;
        }
        let saved = prefixes.to_vec();
        for (i, w) in wa.iter().enumerate() {
            prefixes[i] |= ((w >> j) & 1) << t;
        }
        used[j] = true;
        perm[t] = j;
        if dfs(t + 1, n, wa, prof_a, prof_b, b_counts, perm, used, prefixes) {
            return true;
        }
        used[j] = false;
        perm[t] = usize::MAX;
        prefixes.copy_from_slice(&saved);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bset(n: usize, rows: &[&[u8]]) -> BinaryCodeSet {
        BinaryCodeSet::from_vectors(
            n,
            rows.iter()
                .map(|r| BinaryVector::from_bits(r).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rm_base_cases() {
        let rm03 = binary_rm(0, 3, 24).unwrap();
        assert_eq!(rm03.len(), 2);
        assert!(rm03.contains(&BinaryVector::zero(8).unwrap()));
        assert!(rm03.contains(&BinaryVector::from_bits(&[1; 8]).unwrap()));

        let zero = binary_rm(-1, 3, 24).unwrap();
        assert_eq!(zero.len(), 1);
    }

    #[test]
    fn rm_1_2_is_the_even_weight_code() {
        let rm = binary_rm(1, 2, 24).unwrap();
        assert_eq!(rm.len(), 8);
        assert!(rm.iter().all(|w| w.weight() % 2 == 0));
    }

    #[test]
    fn rm_2_3_size_and_distance() {
        let rm = binary_rm(2, 3, 24).unwrap();
        assert_eq!(rm.len(), 128);
        let d = rm
            .iter()
            .filter(|w| !w.is_zero())
            .map(|w| w.weight())
            .min()
            .unwrap();
        assert_eq!(d, 2);
    }

    #[test]
    fn rm_self_check_sizes_and_distances() {
        for m in 1..=5usize {
            for r in -1..=(m as i32) {
                let k = binom_sum(m, r);
                if k > 16 {
                    continue;
                }
                let rm = binary_rm(r, m, 24).unwrap();
                assert_eq!(rm.len() as u64, 1u64 << k);
                if r >= 0 {
                    let d = rm
                        .iter()
                        .filter(|w| !w.is_zero())
                        .map(|w| w.weight())
                        .min()
                        .unwrap();
                    assert_eq!(d, 1u32 << (m as i32 - r), "distance of RM({r},{m})");
                }
            }
        }
    }

    #[test]
    fn rm_cap_and_range_errors() {
        assert!(matches!(binary_rm(5, 5, 22), Err(Error::TooLarge { .. })));
        assert!(matches!(binary_rm(4, 3, 24), Err(Error::NoSuchCode { .. })));
        assert!(matches!(binary_rm(1, 9, 24), Err(Error::Capacity { .. })));
    }

    #[test]
    fn perm_identity_cases() {
        let a = bset(2, &[&[0, 0], &[1, 1]]);
        let w = perm_equivalent(&a, &a).unwrap().unwrap();
        assert_eq!(a.permute(&w).unwrap(), a);
    }

    #[test]
    fn perm_finds_a_swap() {
        let a = bset(3, &[&[1, 0, 0], &[0, 1, 1]]);
        let b = bset(3, &[&[0, 0, 1], &[1, 1, 0]]);
        let w = perm_equivalent(&a, &b).unwrap().unwrap();
        assert_eq!(a.permute(&w).unwrap(), b);
    }

    #[test]
    fn perm_rejects_inequivalent() {
        let a = bset(2, &[&[0, 0], &[1, 1]]);
        let b = bset(2, &[&[0, 0], &[1, 0]]);
        assert_eq!(perm_equivalent(&a, &b).unwrap(), None);
        // different sizes
        let c = bset(2, &[&[0, 0]]);
        assert_eq!(perm_equivalent(&a, &c).unwrap(), None);
    }

    #[test]
    fn perm_too_long() {
        let a = BinaryCodeSet::from_vectors(9, vec![BinaryVector::zero(9).unwrap()]).unwrap();
        assert!(matches!(
            perm_equivalent(&a, &a),
            Err(Error::TooLong { .. })
        ));
    }

    #[test]
    fn weight_distribution_counts() {
        let a = bset(4, &[&[0, 0, 0, 0], &[1, 1, 0, 0], &[1, 1, 1, 1]]);
        let d = a.weight_distribution();
        assert_eq!(d.get(&0), Some(&1));
        assert_eq!(d.get(&2), Some(&1));
        assert_eq!(d.get(&4), Some(&1));
    }
}
