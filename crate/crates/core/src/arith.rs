//! Exact integer and rational scalars, generalized binomial coefficients
//! and factorials.
//!
//! Everything here is exact. Binomial coefficients accept an arbitrary
//! (possibly negative, possibly rational) top argument; the bottom argument
//! is an integer and the coefficient vanishes when it is negative.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational;

/// Shorthand for the exact rational scalar type.
pub type Rat = BigRational;

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `a` or `a/b` into a rational. Decimal points are rejected.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::InvalidNumber(s.to_string());
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rat::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Generalized binomial coefficient `a(a-1)...(a-k+1)/k!` with integer top.
///
/// Zero for `k < 0`. Every partial product of `i` consecutive integers is
/// divisible by `i!`, so the running quotient stays integral.
pub fn gen_binomial(a: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    // Reflection keeps the loop short for large nonnegative tops.
    if a >= 0 && k > a {
        return BigInt::zero();
    }
    if a >= 0 && k > a - k {
        return gen_binomial(a, a - k);
    }
    let top = BigInt::from(a);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= &top - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial coefficient with a `BigInt` top.
pub fn gen_binomial_big(a: &BigInt, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial coefficient with a rational top.
pub fn rat_binomial(a: &Rat, k: i64) -> Rat {
    if k < 0 {
        return Rat::zero();
    }
    if a.is_integer() {
        return Rat::from_integer(gen_binomial_big(&a.to_integer(), k));
    }
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= a - Rat::from_integer(BigInt::from(i));
        acc /= Rat::from_integer(BigInt::from(i + 1));
    }
    acc
}

fn factorial_table() -> &'static Mutex<Vec<BigInt>> {
    static TABLE: OnceLock<Mutex<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![BigInt::one()]))
}

/// `n!`, memoized.
pub fn factorial(n: usize) -> BigInt {
    let mut table = factorial_table().lock().unwrap_or_else(|e| e.into_inner());
    while table.len() <= n {
        let next = table.last().unwrap() * table.len();
        table.push(next);
    }
    table[n].clone()
}

/// Integer division that fails unless the remainder is zero.
pub fn exact_div(num: &BigInt, den: &BigInt) -> Result<BigInt> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::InexactDivision(format!("{num} / {den}")));
    }
    Ok(q)
}

/// `(-1)^k` as a sign.
pub fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Canonical text for a rational: `a` or `a/b`.
pub fn render_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Returns the integer value of `r`, or an error if it has a denominator.
pub fn rat_to_int(r: &Rat) -> Result<BigInt> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::NonIntegral(render_rat(r)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(gen_binomial(7, 3), int(35));
        assert_eq!(gen_binomial(-3, 2), int(6));
        assert_eq!(gen_binomial(4, 6), int(0));
        assert_eq!(gen_binomial(5, -1), int(0));
        assert_eq!(gen_binomial(-1, 0), int(1));
        assert_eq!(gen_binomial(0, 0), int(1));
    }

    #[test]
    fn binomial_negative_top() {
        // h_{n-k}[-(k+1)] = C(n-2k-2, n-k) = (-1)^{n-k} C(k+1, n-k)
        for n in 0..12i64 {
            for k in 0..=n {
                let lhs = gen_binomial(n - 2 * k - 2, n - k);
                let rhs = gen_binomial(k + 1, n - k) * sign(n - k);
                assert_eq!(lhs, rhs, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn rational_binomial_matches_integer() {
        for a in -6..8 {
            for k in -1..7 {
                assert_eq!(rat_binomial(&rat(a), k), Rat::from_integer(gen_binomial(a, k)));
            }
        }
        // C(1/2, 2) = (1/2)(-1/2)/2 = -1/8
        assert_eq!(rat_binomial(&ratio(1, 2), 2), ratio(-1, 8));
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(5), int(120));
        assert_eq!(factorial(20), "2432902008176640000".parse::<BigInt>().unwrap());
        assert_eq!(factorial(3), int(6));
    }

    #[test]
    fn exact_division() {
        assert_eq!(exact_div(&int(12), &int(4)).unwrap(), int(3));
        assert!(matches!(exact_div(&int(13), &int(4)), Err(Error::InexactDivision(_))));
        assert!(matches!(exact_div(&int(1), &int(0)), Err(Error::DivisionByZero)));
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rat("3").unwrap(), rat(3));
        assert_eq!(parse_rat("-6/4").unwrap(), ratio(-3, 2));
        assert!(parse_rat("1.5").is_err());
        assert!(parse_rat("1/0").is_err());
        assert_eq!(render_rat(&ratio(-3, 2)), "-3/2");
    }

    proptest! {
        #[test]
        fn pascal(a in -40i64..40, k in 1i64..30) {
            prop_assert_eq!(gen_binomial(a, k), gen_binomial(a - 1, k) + gen_binomial(a - 1, k - 1));
        }

        #[test]
        fn reflection(a in -40i64..40, k in 0i64..30) {
            prop_assert_eq!(gen_binomial(k - a - 1, k) * sign(k), gen_binomial(a, k));
        }

        #[test]
        fn field_inverse(a in -1000i64..1000, b in -1000i64..1000) {
            prop_assume!(a != 0 && b != 0);
            let x = ratio(a, b);
            let y = ratio(b, a);
            prop_assert_eq!(x * y, rat(1));
        }

        #[test]
        fn addition_associative(a in -99i64..99, b in 1i64..99, c in -99i64..99, d in 1i64..99, e in -99i64..99, f in 1i64..99) {
            let (x, y, z) = (ratio(a, b), ratio(c, d), ratio(e, f));
            prop_assert_eq!((&x + &y) + &z, x + (y + z));
        }
    }
}
