//! Power series in an auxiliary variable `u`, truncated at a fixed order,
//! with [`PolyQQ`] coefficients.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::PolyQQ;

/// Coefficients of `u^0 ..= u^order`. Arithmetic on series of different
/// orders truncates to the smaller one.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<PolyQQ>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![PolyQQ::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(PolyQQ::one(), order)
    }

    pub fn constant(c: PolyQQ, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `u`.
    pub fn var(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = PolyQQ::one();
        }
        s
    }

    /// Builds a series from its leading coefficients, padding with zeros
    /// (or truncating) to `order`.
    pub fn from_coeffs(mut coeffs: Vec<PolyQQ>, order: usize) -> Self {
        coeffs.resize(order + 1, PolyQQ::zero());
        Self { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> PolyQQ) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &PolyQQ {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[PolyQQ] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<PolyQQ> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |k| &self.coeffs[k] + &other.coeffs[k])
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |k| &self.coeffs[k] - &other.coeffs[k])
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.order(), |k| -&self.coeffs[k])
    }

    pub fn scale(&self, c: &PolyQQ) -> Self {
        Self::from_fn(self.order(), |k| &self.coeffs[k] * c)
    }

    /// `f(u) -> f(c u)` for a polynomial `c`.
    pub fn dilate(&self, c: &PolyQQ) -> Self {
        let mut pow = PolyQQ::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pow);
            pow = &pow * c;
        }
        Self { coeffs: out }
    }

    /// Multiplies by `u^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        Self::from_fn(self.order(), |i| {
            if i >= k {
                self.coeffs[i - k].clone()
            } else {
                PolyQQ::zero()
            }
        })
    }

    /// Divides by `u`, dropping the constant term; the order drops by one.
    pub fn shift_down(&self) -> Self {
        debug_assert!(self.order() >= 1);
        Self {
            coeffs: self.coeffs[1..].to_vec(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![PolyQQ::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse. The constant term must be a unit of the
    /// Laurent ring (a single nonzero term).
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !c0.is_unit() {
            return Err(Error::NotInvertible(c0.to_string()));
        }
        let inv0 = c0.inverse_unit()?;
        let n = self.order();
        let mut out: Vec<PolyQQ> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = PolyQQ::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &(&self.coeffs[j] * &out[k - j]);
                }
            }
            out.push(-&(&acc * &inv0));
        }
        Ok(Self { coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        let n = self.order().min(other.order());
        Ok(self.truncate(n).mul(&other.truncate(n).inverse()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Integer power; negative exponents go through [`TruncSeries::inverse`].
    pub fn int_pow(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inverse()?.pow((-e) as u32))
        }
    }

    /// `self(g(u))` where `g` has zero constant term.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument(
                "inner series of a composition must have zero constant term".into(),
            ));
        }
        let n = self.order().min(g.order());
        let g = g.truncate(n);
        // Horner from the top coefficient down.
        let mut acc = Self::zero(n);
        for k in (0..=n).rev() {
            acc = acc.mul(&g);
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse: given `f(t) = t + f_2 t^2 + ...`, returns `g`
    /// with `g(f(t)) = t` through the truncation order.
    pub fn reverse(&self) -> Result<Self> {
        let n = self.order();
        if n < 1 || !self.coeffs[0].is_zero() || !self.coeffs[1].is_one_poly() {
            return Err(Error::ReversionPrecondition);
        }
        // g_n = -[t^n] sum_{k<n} g_k f^k, since f^n = t^n + O(t^{n+1}).
        let mut g = vec![PolyQQ::zero(); n + 1];
        g[1] = PolyQQ::one();
        let mut powers: Vec<TruncSeries> = vec![Self::one(n), self.clone()];
        for m in 2..=n {
            let mut acc = PolyQQ::zero();
            for (k, gk) in g.iter().enumerate().take(m).skip(1) {
                if !gk.is_zero() {
                    acc += &(gk * powers[k].coeff(m));
                }
            }
            g[m] = -&acc;
            let next = powers[m - 1].mul(self);
            powers.push(next);
        }
        Ok(Self { coeffs: g })
    }
}

impl PolyQQ {
    fn is_one_poly(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({c})*u^{k}"))
            .collect();
        write!(f, "[{}] + O(u^{})", parts.join(" + "), self.order() + 1)
    }
}

/// `(1 - c u)^{-1}` as a series.
pub fn geometric(c: &PolyQQ, order: usize) -> TruncSeries {
    let mut pow = PolyQQ::one();
    TruncSeries::from_fn(order, |_| {
        let out = pow.clone();
        pow = &pow * c;
        out
    })
}

/// `1 - c u`.
pub fn one_minus(c: &PolyQQ, order: usize) -> TruncSeries {
    TruncSeries::from_coeffs(vec![PolyQQ::one(), -c], order)
}
