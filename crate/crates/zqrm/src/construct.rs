//! The Plotkin and BA-Plotkin generator-matrix constructions and their
//! parameter predictors.

use crate::error::Error;
use crate::matrix::GeneratorMatrix;
use crate::types::{CodeType, Distance};
use crate::vector::MixedVector;

/// Predicted output parameters of a construction step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlotkinPrediction {
    pub ctype: CodeType,
    pub d: Distance,
}

fn check_shapes(a: (usize, usize), b: (usize, usize)) -> Result<(), Error> {
    if a != b {
        return Err(Error::Shape {
            expected: a,
            got: b,
        });
    }
    Ok(())
}

/// The (X, X; 0, Y) construction: both inputs over (alpha, beta), the output
/// over (2*alpha, 2*beta). X rows double up, Y rows move to the right half.
pub fn plotkin(gx: &GeneratorMatrix, gy: &GeneratorMatrix) -> Result<GeneratorMatrix, Error> {
    check_shapes(gx.shape(), gy.shape())?;
    let (alpha, beta) = gx.shape();

    let x_row = |x: &MixedVector| {
        let mut bin = x.bin_symbols();
        bin.extend(x.bin_symbols());
        let mut quat = x.quat_symbols();
        quat.extend(x.quat_symbols());
        MixedVector::from_symbols(&bin, &quat)
    };
    let y_row = |y: &MixedVector| {
        let mut bin = vec![0u8; alpha];
        bin.extend(y.bin_symbols());
        let mut quat = vec![0u8; beta];
        quat.extend(y.quat_symbols());
        MixedVector::from_symbols(&bin, &quat)
    };

    // X rows then Y rows within each block; the maps preserve row order.
    let mut rows = Vec::new();
    for x in gx.rows2() {
        rows.push(x_row(x)?);
    }
    for y in gy.rows2() {
        rows.push(y_row(y)?);
    }
    for x in gx.rows4() {
        rows.push(x_row(x)?);
    }
    for y in gy.rows4() {
        rows.push(y_row(y)?);
    }
    GeneratorMatrix::from_rows(2 * alpha, 2 * beta, rows)
}

/// Output parameters of [`plotkin`]: type (2a, 2b; gx+gy, dx+dy) and minimum
/// distance min(2*dX, dY).
pub fn predict_plotkin(
    tx: CodeType,
    dx: Distance,
    ty: CodeType,
    dy: Distance,
) -> Result<PlotkinPrediction, Error> {
    check_shapes((tx.alpha, tx.beta), (ty.alpha, ty.beta))?;
    Ok(PlotkinPrediction {
        ctype: CodeType::new(
            2 * tx.alpha,
            2 * tx.beta,
            tx.gamma + ty.gamma,
            tx.delta + ty.delta,
        ),
        d: dx.times(2).min(dy),
    })
}

/// Replace every quaternary 2 by 1 in a row of order at most two; the binary
/// part is untouched. The output generally has order four.
pub fn q2_switch(row: &MixedVector) -> Result<MixedVector, Error> {
    if row.order() > 2 {
        return Err(Error::NotOrderTwo);
    }
    let quat: Vec<u8> = row.quat_symbols().iter().map(|&q| q / 2).collect();
    MixedVector::from_symbols(&row.bin_symbols(), &quat)
}

/// The two-fold Plotkin variant on three codes over (alpha, beta). The output
/// lives over binary length 2*alpha and quaternary length alpha + 4*beta, with
/// quaternary column blocks [C|D|E|F|G] of widths [alpha, beta, beta, beta,
/// beta]:
///
/// 1. every row x of `gx`     -> (x, x | 2x_b, x_q, x_q, x_q, x_q)
/// 2. order-2 rows y of `gy`  -> (0, y | y_b,  0,  2y', y', 3y')   with y' = q2_switch(y)
/// 3. order-4 rows y of `gy`  -> (0, y | y_b,  0,  y_q, 2y_q, 3y_q)
/// 4. order-4 rows y again    -> (y, y | 0,    0,  0,   y_q,  y_q)
/// 5. every row z of `gz`     -> (0, z | 0,    0,  0,   0,    z_q)
///
/// Binary bits entering column block C embed as quaternary ones in blocks 2
/// and 3 and as twos in block 1.
pub fn ba_plotkin(
    gx: &GeneratorMatrix,
    gy: &GeneratorMatrix,
    gz: &GeneratorMatrix,
) -> Result<GeneratorMatrix, Error> {
    check_shapes(gx.shape(), gy.shape())?;
    check_shapes(gx.shape(), gz.shape())?;
    let (alpha, beta) = gx.shape();

    let assemble = |bin_a: &[u8],
                    bin_b: &[u8],
                    c: Vec<u8>,
                    d: Vec<u8>,
                    e: Vec<u8>,
                    f: Vec<u8>,
                    g: Vec<u8>| {
        let mut bin = bin_a.to_vec();
        bin.extend_from_slice(bin_b);
        let mut quat = c;
        quat.extend(d);
        quat.extend(e);
        quat.extend(f);
        quat.extend(g);
        MixedVector::from_symbols(&bin, &quat)
    };
    let zeros_a = vec![0u8; alpha];
    let zeros_b = vec![0u8; beta];
    let scale_q = |q: &[u8], c: u8| -> Vec<u8> { q.iter().map(|&z| (z * c) % 4).collect() };

    let block1 = |x: &MixedVector| {
        let xb = x.bin_symbols();
        let xq = x.quat_symbols();
        assemble(
            &xb,
            &xb,
            xb.iter().map(|&b| 2 * b).collect(),
            xq.clone(),
            xq.clone(),
            xq.clone(),
            xq,
        )
    };
    let block2 = |y: &MixedVector| -> Result<MixedVector, Error> {
        let yb = y.bin_symbols();
        let yq = q2_switch(y)?.quat_symbols();
        assemble(
            &zeros_a,
            &yb,
            yb.clone(),
            zeros_b.clone(),
            scale_q(&yq, 2),
            yq.clone(),
            scale_q(&yq, 3),
        )
    };
    let block3 = |y: &MixedVector| {
        let yb = y.bin_symbols();
        let yq = y.quat_symbols();
        assemble(
            &zeros_a,
            &yb,
            yb.clone(),
            zeros_b.clone(),
            yq.clone(),
            scale_q(&yq, 2),
            scale_q(&yq, 3),
        )
    };
    let block4 = |y: &MixedVector| {
        let yb = y.bin_symbols();
        let yq = y.quat_symbols();
        assemble(
            &yb,
            &yb,
            zeros_a.clone(),
            zeros_b.clone(),
            zeros_b.clone(),
            yq.clone(),
            yq,
        )
    };
    let block5 = |z: &MixedVector| {
        let zb = z.bin_symbols();
        assemble(
            &zeros_a,
            &zb,
            zeros_a.clone(),
            zeros_b.clone(),
            zeros_b.clone(),
            zeros_b.clone(),
            z.quat_symbols(),
        )
    };

    // Row order inside each output block: block 1, 2, 3, 4, 5.
    let mut rows = Vec::new();
    for x in gx.rows2() {
        rows.push(block1(x)?);
    }
    for x in gx.rows4() {
        rows.push(block1(x)?);
    }
    for y in gy.rows2() {
        rows.push(block2(y)?);
    }
    for y in gy.rows4() {
        rows.push(block3(y)?);
    }
    for y in gy.rows4() {
        rows.push(block4(y)?);
    }
    for z in gz.rows2() {
        rows.push(block5(z)?);
    }
    for z in gz.rows4() {
        rows.push(block5(z)?);
    }
    GeneratorMatrix::from_rows(2 * alpha, alpha + 4 * beta, rows)
}

/// Output parameters of [`ba_plotkin`]: type
/// (2a, a+4b; gX+gZ, dX+gY+2dY+dZ) and minimum distance min(4dX, 2dY, dZ).
pub fn predict_ba_plotkin(
    tx: CodeType,
    dx: Distance,
    ty: CodeType,
    dy: Distance,
    tz: CodeType,
    dz: Distance,
) -> Result<PlotkinPrediction, Error> {
    check_shapes((tx.alpha, tx.beta), (ty.alpha, ty.beta))?;
    check_shapes((tx.alpha, tx.beta), (tz.alpha, tz.beta))?;
    Ok(PlotkinPrediction {
        ctype: CodeType::new(
            2 * tx.alpha,
            tx.alpha + 4 * tx.beta,
            tx.gamma + tz.gamma,
            tx.delta + ty.gamma + 2 * ty.delta + tz.delta,
        ),
        d: dx.times(4).min(dy.times(2)).min(dz),
    })
}
