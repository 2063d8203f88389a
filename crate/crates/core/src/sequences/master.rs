//! The four-way expansion of `C_r(q)` obtained from writing the discriminant
//! `(1-q)^2 u^2 - 2(1+q) u + 1` with signs `eta, zeta = ±1`.

use crate::arith::{gen_binomial, Rat};
use crate::error::{Error, Result};
use crate::poly::PolyQQ;

/// Evaluates
///
/// ```text
/// sum_{i,j >= 0, i+j <= r} 2^{-i-1} q^{r-i-j-1} (1+eta+q(1+zeta))^{2i+j-r+1}
///     (1+eta zeta)^{r-i-j} (-eta-zeta q)^j C(i+1, r-i-j) C(2i+j, j) C(2i, i)/(i+1)
/// ```
///
/// over Laurent polynomials with rational scalars. Terms whose first binomial
/// vanishes are skipped, which is exactly the set of terms with a negative
/// exponent on the first power. The result must come out integral.
pub fn master_formula(eta: i64, zeta: i64, r: usize) -> Result<PolyQQ> {
    if eta.abs() != 1 || zeta.abs() != 1 {
        return Err(Error::InvalidArgument(format!(
            "eta and zeta must be +1 or -1, got {eta}, {zeta}"
        )));
    }
    if r == 0 {
        return Err(Error::InvalidArgument("the expansion needs r >= 1".into()));
    }
    let r = r as i64;
    let base = PolyQQ::from_q_coeffs(&[1 + eta, 1 + zeta]);
    let corner = PolyQQ::int(1 + eta * zeta);
    let linear = PolyQQ::from_q_coeffs(&[-eta, -zeta]);
    let mut out = PolyQQ::zero();
    for i in 0..=r {
        for j in 0..=(r - i) {
            let b1 = gen_binomial(i + 1, r - i - j);
            if b1 == 0.into() {
                continue;
            }
            let scalar = Rat::from_integer(b1 * gen_binomial(2 * i + j, j) * gen_binomial(2 * i, i))
                / Rat::from_integer(num_bigint::BigInt::from(i + 1) << (i + 1) as usize);
            let term = PolyQQ::q_pow((r - i - j - 1) as i32)
                * base.pow((2 * i + j - r + 1) as u32)
                * corner.pow((r - i - j) as u32)
                * linear.pow(j as u32);
            out += &term.scale(&scalar);
        }
    }
    out.ensure_integral()
}
