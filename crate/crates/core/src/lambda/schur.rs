use num_bigint::BigInt;

use crate::arith::gen_binomial;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::poly::PolyQQ;

use super::Alphabet;

/// Longest partition accepted by the Jacobi–Trudi evaluators.
pub const SCHUR_LENGTH_CAP: usize = 12;

/// Determinant by fraction-free (Bareiss) elimination. Every intermediate
/// division is exact in the polynomial ring.
pub fn determinant(mut m: Vec<Vec<PolyQQ>>) -> Result<PolyQQ> {
    let n = m.len();
    if n == 0 {
        return Ok(PolyQQ::one());
    }
    let mut negate = false;
    let mut prev = PolyQQ::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(PolyQQ::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// `det(h_{mu_i - i + j})` for an arbitrary source of complete functions;
/// `h` is only called with nonnegative indices.
pub fn jacobi_trudi(mu: &Partition, h: impl Fn(usize) -> PolyQQ) -> Result<PolyQQ> {
    let l = mu.len();
    if l > SCHUR_LENGTH_CAP {
        return Err(Error::CapExceeded {
            what: format!("Jacobi-Trudi matrix for a partition of length {l}"),
            cap: SCHUR_LENGTH_CAP,
        });
    }
    let parts = mu.parts();
    let matrix = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let idx = parts[i] as i64 - i as i64 + j as i64;
                    if idx < 0 {
                        PolyQQ::zero()
                    } else {
                        h(idx as usize)
                    }
                })
                .collect()
        })
        .collect();
    determinant(matrix)
}

/// Schur function `s_mu` at an alphabet.
pub fn s_of(mu: &Partition, a: &Alphabet) -> Result<PolyQQ> {
    let top = mu.parts().first().copied().unwrap_or(0) as usize + mu.len();
    let h = a.h_series(top);
    jacobi_trudi(mu, |k| h.coeff(k).clone())
}

/// `s_{(a, 1^b)}[c] = C(a + b - 1, b) C(a + c - 1, a + b)`.
pub fn hook_schur_constant(arm: i64, leg: i64, c: i64) -> Result<BigInt> {
    if arm < 1 || leg < 0 {
        return Err(Error::InvalidArgument(format!(
            "hook needs arm >= 1 and leg >= 0, got ({arm}, 1^{leg})"
        )));
    }
    Ok(gen_binomial(arm + leg - 1, leg) * gen_binomial(arm + c - 1, arm + leg))
}
