//! Lampe mutations and their hatted counterparts on `(x1, x2^2, x3^2)`.

use crate::{Error, QRationalFn};

fn check(i: usize, x: &[QRationalFn]) -> Result<(), Error> {
    if x.len() != 3 {
        return Err(Error::Dimension {
            expected: 3,
            got: x.len(),
        });
    }
    if i == 0 || i > 3 {
        return Err(Error::DirectionOutOfRange { k: i, n: 3 });
    }
    Ok(())
}

/// `μ_i` of the Lampe cluster algebra, as a rational map.
pub fn lampe_mutation(i: usize, x: &[QRationalFn]) -> Result<Vec<QRationalFn>, Error> {
    check(i, x)?;
    let sq = |v: &QRationalFn| v * v;
    let num = match i {
        1 => &sq(&sq(&x[1])) + &sq(&sq(&x[2])),
        2 => &x[0] + &sq(&x[2]),
        _ => &x[0] + &sq(&x[1]),
    };
    let mut out = x.to_vec();
    out[i - 1] = num.checked_div(&x[i - 1])?;
    Ok(out)
}

/// `μ̂_i`: `X1' = (X2^2 + X3^2)/X1`, `X2' = (X1 + X3)^2/X2`,
/// `X3' = (X1 + X2)^2/X3`.
pub fn hatted_mutation(i: usize, x: &[QRationalFn]) -> Result<Vec<QRationalFn>, Error> {
    check(i, x)?;
    let sq = |v: &QRationalFn| v * v;
    let num = match i {
        1 => &sq(&x[1]) + &sq(&x[2]),
        2 => sq(&(&x[0] + &x[2])),
        _ => sq(&(&x[0] + &x[1])),
    };
    let mut out = x.to_vec();
    out[i - 1] = num.checked_div(&x[i - 1])?;
    Ok(out)
}

/// `S(x1, x2, x3) = (x1, x2^2, x3^2)`.
pub fn square_map(x: &[QRationalFn]) -> Vec<QRationalFn> {
    vec![x[0].clone(), &x[1] * &x[1], &x[2] * &x[2]]
}
