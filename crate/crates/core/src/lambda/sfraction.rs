use crate::error::{Error, Result};
use crate::poly::PolyQQ;
use crate::series::TruncSeries;

use super::HSequence;

/// Coefficients `c_1 ..= c_depth` of the S-fraction
/// `H_u = 1/(1 - c_1 u/(1 - c_2 u/(1 - ...)))`.
///
/// Each step peels `f_{i-1} = 1/(1 - c_i u f_i)`: `c_i` is the `u^1`
/// coefficient of `1 - 1/f_{i-1}`, and `f_i` is that series divided by
/// `c_i u`. A coefficient must be a unit of the Laurent ring to continue.
pub fn sfraction(hseq: &HSequence, depth: usize) -> Result<Vec<PolyQQ>> {
    if depth == 0 {
        return Err(Error::InvalidArgument("continued fraction depth must be positive".into()));
    }
    let mut f = hseq.series(depth);
    let mut out = Vec::with_capacity(depth);
    for index in 1..=depth {
        let order = f.order();
        let g = TruncSeries::one(order).sub(&f.inverse()?);
        let c = g.coeff(1).clone();
        if c.is_zero() {
            return Err(Error::ZeroCoefficient { index });
        }
        out.push(c.clone());
        if index == depth {
            break;
        }
        if !c.is_unit() {
            return Err(Error::NonUnitCoefficient {
                index,
                value: c.to_string(),
            });
        }
        f = g.shift_down().scale(&c.inverse_unit()?);
    }
    Ok(out)
}
