//! Versioned line-oriented text formats for generator matrices and codeword
//! sets. Serialization is canonical: parsing a serialized value and
//! re-serializing reproduces it byte for byte.

use crate::binary::BinaryCodeSet;
use crate::error::Error;
use crate::gray::BinaryVector;
use crate::matrix::GeneratorMatrix;
use crate::vector::MixedVector;

pub const MATRIX_MAGIC: &str = "Z2Z4-GEN v1";
pub const CODEWORDS_MAGIC: &str = "Z2Z4-CODE v1";
pub const BINARY_MAGIC: &str = "BIN-CODE v1";

fn render_row(v: &MixedVector) -> String {
    v.to_string()
}

/// `Z2Z4-GEN v1`, the shape line, then the `order2:` and `order4:` sections
/// with one row per line. The bar is always present in a row, even when one
/// side is empty.
pub fn write_matrix(g: &GeneratorMatrix) -> String {
    let mut out = String::new();
    out.push_str(MATRIX_MAGIC);
    out.push('\n');
    out.push_str(&format!("alpha={} beta={}\n", g.alpha(), g.beta()));
    out.push_str("order2:\n");
    for r in g.rows2() {
        out.push_str(&render_row(r));
        out.push('\n');
    }
    out.push_str("order4:\n");
    for r in g.rows4() {
        out.push_str(&render_row(r));
        out.push('\n');
    }
    out
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_symbols(text: &str, line: usize, max: u8) -> Result<Vec<u8>, Error> {
    text.split_whitespace()
        .map(|tok| {
            let v: u8 = tok
                .parse()
                .map_err(|_| parse_err(line, format!("bad symbol {:?}", tok)))?;
            if v > max {
                return Err(parse_err(line, format!("symbol {} out of range", v)));
            }
            Ok(v)
        })
        .collect()
}

fn parse_row(text: &str, line: usize, alpha: usize, beta: usize) -> Result<MixedVector, Error> {
    let mut sides = text.split('|');
    let (left, right) = match (sides.next(), sides.next(), sides.next()) {
        (Some(l), Some(r), None) => (l, r),
        _ => return Err(parse_err(line, "row needs exactly one '|'")),
    };
    let bin = parse_symbols(left, line, 1)?;
    let quat = parse_symbols(right, line, 3)?;
    if bin.len() != alpha || quat.len() != beta {
        return Err(parse_err(
            line,
            format!(
                "row has {} binary and {} quaternary symbols, expected {} and {}",
                bin.len(),
                quat.len(),
                alpha,
                beta
            ),
        ));
    }
    MixedVector::from_symbols(&bin, &quat).map_err(|e| match e {
        Error::Parse { msg, .. } => parse_err(line, msg),
        other => other,
    })
}

fn parse_shape_line(text: &str, line: usize) -> Result<(usize, usize), Error> {
    let mut alpha = None;
    let mut beta = None;
    for tok in text.split_whitespace() {
        match tok.split_once('=') {
            Some(("alpha", v)) => {
                alpha = Some(
                    v.parse()
                        .map_err(|_| parse_err(line, format!("bad alpha {:?}", v)))?,
                )
            }
            Some(("beta", v)) => {
                beta = Some(
                    v.parse()
                        .map_err(|_| parse_err(line, format!("bad beta {:?}", v)))?,
                )
            }
            _ => return Err(parse_err(line, format!("unexpected token {:?}", tok))),
        }
    }
    match (alpha, beta) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(parse_err(line, "expected `alpha=<int> beta=<int>`")),
    }
}

pub fn parse_matrix(text: &str) -> Result<GeneratorMatrix, Error> {
    let mut lines = text.lines().enumerate();
    let (_, magic) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    if magic.trim_end() != MATRIX_MAGIC {
        return Err(parse_err(1, format!("expected magic {:?}", MATRIX_MAGIC)));
    }
    let (_, shape) = lines
        .next()
        .ok_or_else(|| parse_err(2, "missing shape line"))?;
    let (alpha, beta) = parse_shape_line(shape, 2)?;
    let (_, hdr) = lines
        .next()
        .ok_or_else(|| parse_err(3, "missing order2: section"))?;
    if hdr.trim_end() != "order2:" {
        return Err(parse_err(3, "expected `order2:`"));
    }
    let mut rows2 = Vec::new();
    let mut rows4 = Vec::new();
    let mut in_order4 = false;
    for (i, line) in lines {
        let lineno = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        if line.trim_end() == "order4:" {
            if in_order4 {
                return Err(parse_err(lineno, "duplicate order4: section"));
            }
            in_order4 = true;
            continue;
        }
        let row = parse_row(line, lineno, alpha, beta)?;
        if in_order4 {
            if row.order() != 4 {
                return Err(parse_err(lineno, "row in order4: section has order <= 2"));
            }
            rows4.push(row);
        } else {
            if row.order() > 2 {
                return Err(parse_err(lineno, "row in order2: section has order 4"));
            }
            rows2.push(row);
        }
    }
    if !in_order4 {
        return Err(parse_err(0, "missing order4: section"));
    }
    GeneratorMatrix::new(alpha, beta, rows2, rows4)
}

/// `Z2Z4-CODE v1`, the shape line, then one codeword per line in row syntax;
/// sorted and duplicate-free.
pub fn write_codewords(alpha: usize, beta: usize, words: &[MixedVector]) -> String {
    let mut out = String::new();
    out.push_str(CODEWORDS_MAGIC);
    out.push('\n');
    out.push_str(&format!("alpha={} beta={}\n", alpha, beta));
    for w in words {
        out.push_str(&render_row(w));
        out.push('\n');
    }
    out
}

pub fn parse_codewords(text: &str) -> Result<(usize, usize, Vec<MixedVector>), Error> {
    let mut lines = text.lines().enumerate();
    let (_, magic) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    if magic.trim_end() != CODEWORDS_MAGIC {
        return Err(parse_err(1, format!("expected magic {:?}", CODEWORDS_MAGIC)));
    }
    let (_, shape) = lines
        .next()
        .ok_or_else(|| parse_err(2, "missing shape line"))?;
    let (alpha, beta) = parse_shape_line(shape, 2)?;
    let mut words = Vec::new();
    for (i, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        words.push(parse_row(line, i + 1, alpha, beta)?);
    }
    Ok((alpha, beta, words))
}

/// `BIN-CODE v1`, an `n=<len>` line, then one bit vector per line.
pub fn write_binary_set(set: &BinaryCodeSet) -> String {
    let mut out = String::new();
    out.push_str(BINARY_MAGIC);
    out.push('\n');
    out.push_str(&format!("n={}\n", set.bit_len()));
    for w in set.iter() {
        out.push_str(&w.to_string());
        out.push('\n');
    }
    out
}

pub fn parse_binary_set(text: &str) -> Result<BinaryCodeSet, Error> {
    let mut lines = text.lines().enumerate();
    let (_, magic) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    if magic.trim_end() != BINARY_MAGIC {
        return Err(parse_err(1, format!("expected magic {:?}", BINARY_MAGIC)));
    }
    let (_, nline) = lines.next().ok_or_else(|| parse_err(2, "missing n line"))?;
    let n: usize = nline
        .trim()
        .strip_prefix("n=")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| parse_err(2, "expected `n=<int>`"))?;
    let mut words = Vec::new();
    for (i, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let bits = parse_symbols(line, i + 1, 1)?;
        if bits.len() != n {
            return Err(parse_err(
                i + 1,
                format!("expected {} bits, found {}", n, bits.len()),
            ));
        }
        words.push(BinaryVector::from_bits(&bits)?);
    }
    BinaryCodeSet::from_vectors(n, words)
}
