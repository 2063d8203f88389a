//! Principal specializations `P_r(1^n; q)` of the one-row Hall–Littlewood
//! function, and the word-statistic oracle for `P_n(1^{n+1}; q)`.

use crate::arith::{gen_binomial, rat};
use crate::error::{Error, Result};
use crate::partitions::for_each_weakly_increasing;
use crate::poly::{one_minus_q, PolyQQ};

use super::{h_of, Alphabet};

/// Largest `n` accepted by [`strinc_oracle`]; the enumeration has
/// `C(2n, n)` words.
pub const STRINC_CAP: usize = 12;

fn check_args(r: usize, n: usize) -> Result<()> {
    if r == 0 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "P_r(1^n; q) needs r >= 1 and n >= 1, got r={r}, n={n}"
        )));
    }
    Ok(())
}

/// `(1 - q)^{-1} h_r[(1 - q) n]` with `q` of rank 1.
pub fn hall_littlewood_via_series(r: usize, n: usize) -> Result<PolyQQ> {
    check_args(r, n)?;
    let point = Alphabet::constant(n as i64).with_atom(rat(-(n as i64)), PolyQQ::q());
    h_of(r, &point).div_exact(&one_minus_q())
}

/// `sum_{m=0}^{r-1} (-q)^m C(r-1, m) C(n+r-m-1, r)`.
pub fn hall_littlewood_closed_form(r: usize, n: usize) -> Result<PolyQQ> {
    check_args(r, n)?;
    let (r, n) = (r as i64, n as i64);
    let mut out = PolyQQ::zero();
    for m in 0..r {
        let c = gen_binomial(r - 1, m) * gen_binomial(n + r - m - 1, r);
        let signed = if m % 2 == 0 { c } else { -c };
        out += &PolyQQ::monomial(num_rational::BigRational::from_integer(signed), m as i32, 0);
    }
    Ok(out)
}

/// `P_r(1^n; q)`, computed by the series route and the closed form; the two
/// must agree.
pub fn hall_littlewood_principal(r: usize, n: usize) -> Result<PolyQQ> {
    let via_series = hall_littlewood_via_series(r, n)?;
    let closed = hall_littlewood_closed_form(r, n)?;
    if via_series != closed {
        return Err(Error::RouteMismatch(format!(
            "P_{r}(1^{n}; q): series gives {via_series}, closed form gives {closed}"
        )));
    }
    Ok(closed)
}

/// `sum_w (1 - q)^{strinc(w)}` over weakly increasing words of length `n`
/// with entries in `1..=n+1`, where `strinc` counts strict ascents.
pub fn strinc_oracle(n: usize) -> Result<PolyQQ> {
    if n == 0 {
        return Err(Error::InvalidArgument("strinc oracle needs n >= 1".into()));
    }
    if n > STRINC_CAP {
        return Err(Error::CapExceeded {
            what: format!("strinc enumeration for n = {n}"),
            cap: STRINC_CAP,
        });
    }
    let mut histogram = vec![0u64; n];
    for_each_weakly_increasing(n, n as u32 + 1, |w| {
        let ascents = w.windows(2).filter(|p| p[0] < p[1]).count();
        histogram[ascents] += 1;
    });
    let base = one_minus_q();
    Ok(histogram
        .iter()
        .enumerate()
        .map(|(s, &count)| base.pow(s as u32).scale(&rat(count as i64)))
        .sum())
}
