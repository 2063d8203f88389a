//! Closed forms for `C_n(q)`, each evaluated literally.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::arith::{gen_binomial, sign, Rat};
use crate::error::{Error, Result};
use crate::poly::{one_minus_q, PolyQQ};

use super::{catalan_closed, narayana_number};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// `sum_k N(n, k) q^{k-1}`.
    BinomialN,
    /// `(1/(r+1)) sum_{m=0}^{r} (q-1)^m C(r+1, m) C(2r-m, r)`; this one is
    /// the large polynomial `q C_r(q)`.
    Eqde,
    /// `(1/(r+1)) sum_m (-1)^{m-1} (1-(1-q)^m)/q C(r+1, m) C(2r-m, r)`.
    Eqtr,
    /// `(1/(r+1)) sum_{m=0}^{r-1} (q-1)^m C(r-1, m) C(2r-m, r)`.
    Eqqu,
    /// `sum_{m=0}^{r} q^m (1-q)^{r-m} C(r+m, 2m) C_m`.
    Eqci,
    /// `sum_m q^m (q+1)^{r-2m-1} C(r-1, 2m) C_m`.
    Eqsi,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 6] = [
        ClosedForm::BinomialN,
        ClosedForm::Eqde,
        ClosedForm::Eqtr,
        ClosedForm::Eqqu,
        ClosedForm::Eqci,
        ClosedForm::Eqsi,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClosedForm::BinomialN => "binomial-N",
            ClosedForm::Eqde => "eqde",
            ClosedForm::Eqtr => "eqtr",
            ClosedForm::Eqqu => "eqqu",
            ClosedForm::Eqci => "eqci",
            ClosedForm::Eqsi => "eqsi",
        }
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClosedForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown closed form {s:?}")))
    }
}

fn big(c: BigInt) -> Rat {
    Rat::from_integer(c)
}

/// Evaluates the chosen closed form at `n >= 1`.
pub fn narayana_closed(n: usize, variant: ClosedForm) -> Result<PolyQQ> {
    if n == 0 {
        return Err(Error::InvalidArgument("closed forms need n >= 1".into()));
    }
    let r = n as i64;
    let q_minus_1 = PolyQQ::from_q_coeffs(&[-1, 1]);
    let inv = Rat::new(1.into(), (r + 1).into());
    let out = match variant {
        ClosedForm::BinomialN => (1..=n)
            .map(|k| PolyQQ::monomial(big(narayana_number(n, k)), k as i32 - 1, 0))
            .sum(),
        ClosedForm::Eqde => (0..=r)
            .map(|m| {
                q_minus_1
                    .pow(m as u32)
                    .scale(&big(gen_binomial(r + 1, m) * gen_binomial(2 * r - m, r)))
            })
            .sum::<PolyQQ>()
            .scale(&inv),
        ClosedForm::Eqtr => {
            let mut acc = PolyQQ::zero();
            for m in 0..=r {
                let ratio = (&PolyQQ::one() - &one_minus_q().pow(m as u32)).div_exact(&PolyQQ::q())?;
                let c = gen_binomial(r + 1, m) * gen_binomial(2 * r - m, r) * sign(m - 1);
                acc += &ratio.scale(&big(c));
            }
            acc.scale(&inv)
        }
        ClosedForm::Eqqu => (0..r)
            .map(|m| {
                q_minus_1
                    .pow(m as u32)
                    .scale(&big(gen_binomial(r - 1, m) * gen_binomial(2 * r - m, r)))
            })
            .sum::<PolyQQ>()
            .scale(&inv),
        ClosedForm::Eqci => (0..=r)
            .map(|m| {
                let c = gen_binomial(r + m, 2 * m) * catalan_closed(m as usize);
                (&PolyQQ::q().pow(m as u32) * &one_minus_q().pow((r - m) as u32)).scale(&big(c))
            })
            .sum(),
        ClosedForm::Eqsi => (0..=(r - 1) / 2)
            .map(|m| {
                let c = gen_binomial(r - 1, 2 * m) * catalan_closed(m as usize);
                let q_plus_1 = PolyQQ::from_q_coeffs(&[1, 1]);
                (&PolyQQ::q().pow(m as u32) * &q_plus_1.pow((r - 2 * m - 1) as u32)).scale(&big(c))
            })
            .sum(),
    };
    out.ensure_integral()
}
