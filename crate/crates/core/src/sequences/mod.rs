//! Narayana polynomials, their closed forms and specializations, and the
//! Narayana alphabet.

mod closed;
mod master;

use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use crate::arith::{exact_div, gen_binomial, rat, ratio, Rat};
use crate::error::{Error, Result};
use crate::lambda::HSequence;
use crate::partitions::Partition;
use crate::poly::{one_minus_q, PolyQQ};

pub use closed::{narayana_closed, ClosedForm};
pub use master::master_formula;

fn narayana_table() -> &'static Mutex<Vec<PolyQQ>> {
    static TABLE: OnceLock<Mutex<Vec<PolyQQ>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![PolyQQ::one()]))
}

/// `C_n(q)` from `C_0 = 1` and
/// `C_n = (1 - q) C_{n-1} + q sum_{i=0}^{n-1} C_i C_{n-1-i}`. Memoized.
pub fn narayana(n: usize) -> PolyQQ {
    let mut table = narayana_table().lock().unwrap_or_else(|e| e.into_inner());
    while table.len() <= n {
        let m = table.len();
        let conv: PolyQQ = (0..m).map(|i| &table[i] * &table[m - 1 - i]).sum();
        let next = &(&one_minus_q() * &table[m - 1]) + &(&PolyQQ::q() * &conv);
        table.push(next);
    }
    table[n].clone()
}

/// `C_n(q)` from the second recurrence, valid for `n >= 3`:
/// `C_n = (1 + q) C_{n-1} + q sum_{i=1}^{n-2} C_i C_{n-1-i}`.
pub fn narayana_second_recurrence(n: usize) -> Result<PolyQQ> {
    if n < 3 {
        return Err(Error::InvalidArgument("the second recurrence needs n >= 3".into()));
    }
    let mut table = vec![PolyQQ::one(), PolyQQ::one(), PolyQQ::from_q_coeffs(&[1, 1])];
    for m in 3..=n {
        let conv: PolyQQ = (1..m - 1).map(|i| &table[i] * &table[m - 1 - i]).sum();
        let next = &(&PolyQQ::from_q_coeffs(&[1, 1]) * &table[m - 1]) + &(&PolyQQ::q() * &conv);
        table.push(next);
    }
    Ok(table.swap_remove(n))
}

/// Large Narayana polynomial: `1` for `n = 0`, else `q C_n(q)`.
pub fn large_narayana(n: usize) -> PolyQQ {
    if n == 0 {
        PolyQQ::one()
    } else {
        &PolyQQ::q() * &narayana(n)
    }
}

/// Catalan number as `C_n(1)`.
pub fn catalan(n: usize) -> BigInt {
    eval_int(&narayana(n), 1)
}

/// `C(2n, n) / (n + 1)`, independent of the Narayana table.
pub fn catalan_closed(n: usize) -> BigInt {
    let n = n as i64;
    exact_div(&gen_binomial(2 * n, n), &BigInt::from(n + 1)).expect("Catalan division is exact")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchroederKind {
    /// `C_n(2)`.
    Small,
    /// Large Narayana at 2.
    Large,
}

pub fn schroeder(kind: SchroederKind, n: usize) -> BigInt {
    match kind {
        SchroederKind::Small => eval_int(&narayana(n), 2),
        SchroederKind::Large => eval_int(&large_narayana(n), 2),
    }
}

fn eval_int(p: &PolyQQ, q: i64) -> BigInt {
    p.eval(&rat(q), &rat(0))
        .expect("integral polynomial")
        .to_integer()
}

/// Narayana number `N(n, k) = C(n, k-1) C(n, k) / n`.
pub fn narayana_number(n: usize, k: usize) -> BigInt {
    let (n, k) = (n as i64, k as i64);
    exact_div(&(gen_binomial(n, k - 1) * gen_binomial(n, k)), &BigInt::from(n))
        .expect("Narayana numbers are integers")
}

/// The Narayana alphabet `A`, defined by `h_n(A) = C_n(q)`.
pub fn narayana_alphabet() -> HSequence {
    HSequence::new("narayana", narayana)
}

/// The Catalan alphabet `A_1`, defined by `h_n(A_1) = C_n`.
pub fn catalan_alphabet() -> HSequence {
    HSequence::new("catalan", |n| PolyQQ::from_big(catalan_closed(n)))
}

/// `p_r(A) = sum_{k=0}^{r-1} C(r-1, k) C(r, k) q^k`.
pub fn narayana_power_sum(r: usize) -> Result<PolyQQ> {
    if r == 0 {
        return Err(Error::InvalidArgument("power sums start at p_1".into()));
    }
    let r = r as i64;
    Ok((0..r)
        .map(|k| {
            PolyQQ::monomial(
                Rat::from_integer(gen_binomial(r - 1, k) * gen_binomial(r, k)),
                k as i32,
                0,
            )
        })
        .sum())
}

/// Largest partition weight accepted by [`narayana_schur`].
pub const NARAYANA_SCHUR_WEIGHT_CAP: u32 = 48;

/// `s_mu(A)` for the Narayana alphabet, by Jacobi–Trudi.
pub fn narayana_schur(mu: &Partition) -> Result<PolyQQ> {
    if mu.weight() > NARAYANA_SCHUR_WEIGHT_CAP {
        return Err(Error::CapExceeded {
            what: format!("Narayana Schur function for a partition of weight {}", mu.weight()),
            cap: NARAYANA_SCHUR_WEIGHT_CAP as usize,
        });
    }
    narayana_alphabet().schur(mu)
}

/// `P_n^{(1,1)}(x) = sum_m C(n+1, m) C(n+1, n-m) ((x-1)/2)^{n-m} ((x+1)/2)^m`,
/// returned with `x` in the first variable slot.
pub fn jacobi11(n: usize) -> PolyQQ {
    let n = n as i64;
    let half = ratio(1, 2);
    let minus = PolyQQ::from_q_coeffs(&[-1, 1]).scale(&half);
    let plus = PolyQQ::from_q_coeffs(&[1, 1]).scale(&half);
    (0..=n)
        .map(|m| {
            let c = Rat::from_integer(gen_binomial(n + 1, m) * gen_binomial(n + 1, n - m));
            (&minus.pow((n - m) as u32) * &plus.pow(m as u32)).scale(&c)
        })
        .sum()
}

/// Type-B Narayana polynomial `W_r(z) = sum_k C(r, k)^2 z^k`, with `z` in the
/// first variable slot.
pub fn type_b_w(r: usize) -> PolyQQ {
    let r = r as i64;
    (0..=r)
        .map(|k| {
            let c = gen_binomial(r, k);
            PolyQQ::monomial(Rat::from_integer(&c * &c), k as i32, 0)
        })
        .sum()
}

/// Named tables exposed on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceName {
    Narayana,
    LargeNarayana,
    Catalan,
    SchroederSmall,
    SchroederLarge,
    PowerSum,
    TypeB,
}

impl SequenceName {
    pub const ALL: [SequenceName; 7] = [
        SequenceName::Narayana,
        SequenceName::LargeNarayana,
        SequenceName::Catalan,
        SequenceName::SchroederSmall,
        SequenceName::SchroederLarge,
        SequenceName::PowerSum,
        SequenceName::TypeB,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SequenceName::Narayana => "narayana",
            SequenceName::LargeNarayana => "large-narayana",
            SequenceName::Catalan => "catalan",
            SequenceName::SchroederSmall => "schroeder-small",
            SequenceName::SchroederLarge => "schroeder-large",
            SequenceName::PowerSum => "power-sum",
            SequenceName::TypeB => "type-b",
        }
    }

    /// First index with a defined value.
    pub fn first_index(self) -> usize {
        match self {
            SequenceName::PowerSum => 1,
            _ => 0,
        }
    }

    /// Row `n` as a polynomial (integer sequences are constants).
    pub fn value(self, n: usize) -> Result<PolyQQ> {
        Ok(match self {
            SequenceName::Narayana => narayana(n),
            SequenceName::LargeNarayana => large_narayana(n),
            SequenceName::Catalan => PolyQQ::from_big(catalan(n)),
            SequenceName::SchroederSmall => PolyQQ::from_big(schroeder(SchroederKind::Small, n)),
            SequenceName::SchroederLarge => PolyQQ::from_big(schroeder(SchroederKind::Large, n)),
            SequenceName::PowerSum => narayana_power_sum(n)?,
            SequenceName::TypeB => type_b_w(n),
        })
    }
}

impl FromStr for SequenceName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown table {s:?}")))
    }
}

#[cfg(test)]
mod tests;
