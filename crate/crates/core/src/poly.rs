//! Sparse bivariate Laurent polynomials in `q` and `q2` (the second
//! variable, written q′ in the literature) with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{rat, render_rat, Rat};
use crate::error::{Error, Result};

/// Exponent pair `(deg_q, deg_q2)`.
pub type Exponent = (i32, i32);

/// A Laurent polynomial in `q` and `q2`. Zero coefficients are never stored,
/// so structural equality is equality of polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyQQ {
    terms: BTreeMap<Exponent, Rat>,
}

impl PolyQQ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(rat(c))
    }

    pub fn from_big(c: BigInt) -> Self {
        Self::constant(Rat::from_integer(c))
    }

    pub fn monomial(c: Rat, deg_q: i32, deg_q2: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_q, deg_q2), c);
        }
        Self { terms }
    }

    pub fn q() -> Self {
        Self::monomial(Rat::one(), 1, 0)
    }

    pub fn q2() -> Self {
        Self::monomial(Rat::one(), 0, 1)
    }

    /// `q^k`, with `k` possibly negative.
    pub fn q_pow(k: i32) -> Self {
        Self::monomial(Rat::one(), k, 0)
    }

    /// Univariate polynomial in `q` from ascending integer coefficients.
    pub fn from_q_coeffs(coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term((i as i32, 0), rat(c));
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponent, Rat)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exponent, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, deg_q: i32, deg_q2: i32) -> Rat {
        self.terms.get(&(deg_q, deg_q2)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(0, 0)
    }

    /// The value if this polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    /// Single-term polynomials are exactly the units of the Laurent ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when every coefficient is an integer and no exponent is negative.
    pub fn is_integral(&self) -> bool {
        self.terms
            .iter()
            .all(|(&(a, b), c)| a >= 0 && b >= 0 && c.is_integer())
    }

    pub fn ensure_integral(self) -> Result<Self> {
        if self.is_integral() {
            Ok(self)
        } else {
            Err(Error::NonIntegral(self.to_string()))
        }
    }

    /// Largest exponent of `q`, or `None` for the zero polynomial.
    pub fn degree_q(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.0).max()
    }

    pub fn uses_q2(&self) -> bool {
        self.terms.keys().any(|e| e.1 != 0)
    }

    /// Ascending coefficients in `q` of a polynomial free of `q2` with no
    /// negative exponents.
    pub fn q_coeffs(&self) -> Option<Vec<Rat>> {
        if self.terms.keys().any(|&(a, b)| a < 0 || b != 0) {
            return None;
        }
        let deg = self.degree_q().unwrap_or(0) as usize;
        let mut out = vec![Rat::zero(); deg + 1];
        for (&(a, _), c) in &self.terms {
            out[a as usize] = c.clone();
        }
        Some(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&rat(c))
    }

    /// Multiplies by the monomial `q^a q2^b`.
    pub fn shift(&self, a: i32, b: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), v)| ((x + a, y + b), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative powers are defined for units only.
    pub fn pow_i(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            return Ok(self.pow(e as u32));
        }
        Ok(self.inverse_unit()?.pow((-e) as u32))
    }

    /// Inverse of a single-term polynomial.
    pub fn inverse_unit(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !self.is_unit() {
            return Err(Error::NotInvertible(self.to_string()));
        }
        let (&(a, b), c) = self.terms.iter().next().unwrap();
        Ok(Self::monomial(c.recip(), -a, -b))
    }

    /// Exact value at `q = at_q`, `q2 = at_q2`.
    pub fn eval(&self, at_q: &Rat, at_q2: &Rat) -> Result<Rat> {
        let mut total = Rat::zero();
        for (&(a, b), c) in &self.terms {
            total += c * rat_pow(at_q, a)? * rat_pow(at_q2, b)?;
        }
        Ok(total)
    }

    /// Evaluates at `q = at_q`, leaving `q2` symbolic.
    pub fn eval_q(&self, at_q: &Rat) -> Result<Self> {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term((0, b), c * rat_pow(at_q, a)?);
        }
        Ok(out)
    }

    /// Substitutes polynomials for `q` and `q2`. Negative exponents need the
    /// substituted value to be a unit.
    pub fn subst(&self, for_q: &PolyQQ, for_q2: &PolyQQ) -> Result<Self> {
        let mut cache_q: BTreeMap<i32, PolyQQ> = BTreeMap::new();
        let mut cache_q2: BTreeMap<i32, PolyQQ> = BTreeMap::new();
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            if let std::collections::btree_map::Entry::Vacant(slot) = cache_q.entry(a) {
                slot.insert(for_q.pow_i(a as i64)?);
            }
            if let std::collections::btree_map::Entry::Vacant(slot) = cache_q2.entry(b) {
                slot.insert(for_q2.pow_i(b as i64)?);
            }
            out += &(&cache_q[&a] * &cache_q2[&b]).scale(c);
        }
        Ok(out)
    }

    /// Substitutes a polynomial for `q`, keeping `q2`.
    pub fn subst_q(&self, for_q: &PolyQQ) -> Result<Self> {
        self.subst(for_q, &Self::q2())
    }

    /// Renames `q` to `q2`.
    pub fn q_to_q2(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect(),
        }
    }

    fn leading(&self) -> Option<(Exponent, &Rat)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    fn min_exponents(&self) -> Exponent {
        let a = self.terms.keys().map(|e| e.0).min().unwrap_or(0);
        let b = self.terms.keys().map(|e| e.1).min().unwrap_or(0);
        (a, b)
    }

    /// Exact quotient in the Laurent ring; fails if `divisor` does not divide.
    pub fn div_exact(&self, divisor: &PolyQQ) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if divisor.is_unit() {
            return Ok(self * &divisor.inverse_unit()?);
        }
        let (sa, sb) = self.min_exponents();
        let (da, db) = divisor.min_exponents();
        let mut rem = self.shift(-sa, -sb);
        let den = divisor.shift(-da, -db);
        let (lead_e, lead_c) = den.leading().map(|(e, c)| (e, c.clone())).unwrap();
        let mut quot = Self::zero();
        while let Some((e, c)) = rem.leading() {
            let (qa, qb) = (e.0 - lead_e.0, e.1 - lead_e.1);
            if qa < 0 || qb < 0 {
                return Err(Error::InexactDivision(format!("({self}) / ({divisor})")));
            }
            let term = Self::monomial(c / &lead_c, qa, qb);
            rem -= &(&term * &den);
            quot += &term;
        }
        Ok(quot.shift(sa - da, sb - db))
    }

    /// Canonical rendering with custom variable names.
    pub fn render_with(&self, var_q: &str, var_q2: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&(a, b), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            let mut factors = Vec::new();
            for (name, deg) in [(var_q, a), (var_q2, b)] {
                match deg {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    d => factors.push(format!("{name}^{d}")),
                }
            }
            if factors.is_empty() {
                out.push_str(&render_rat(&abs));
            } else {
                if !abs.is_one() {
                    out.push_str(&render_rat(&abs));
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

fn rat_pow(x: &Rat, e: i32) -> Result<Rat> {
    if e >= 0 {
        return Ok(num_traits::pow(x.clone(), e as usize));
    }
    if x.is_zero() {
        return Err(Error::ZeroToNegativePower);
    }
    Ok(num_traits::pow(x.recip(), (-e) as usize))
}

impl fmt::Display for PolyQQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with("q", "q2"))
    }
}

impl fmt::Debug for PolyQQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyQQ({self})")
    }
}

impl From<i64> for PolyQQ {
    fn from(c: i64) -> Self {
        Self::int(c)
    }
}

impl From<Rat> for PolyQQ {
    fn from(c: Rat) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for PolyQQ {
    fn from(c: BigInt) -> Self {
        Self::from_big(c)
    }
}

impl AddAssign<&PolyQQ> for PolyQQ {
    fn add_assign(&mut self, rhs: &PolyQQ) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&PolyQQ> for PolyQQ {
    fn sub_assign(&mut self, rhs: &PolyQQ) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Add for &PolyQQ {
    type Output = PolyQQ;
    fn add(self, rhs: &PolyQQ) -> PolyQQ {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &PolyQQ {
    type Output = PolyQQ;
    fn sub(self, rhs: &PolyQQ) -> PolyQQ {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &PolyQQ {
    type Output = PolyQQ;
    fn mul(self, rhs: &PolyQQ) -> PolyQQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQQ::zero();
        }
        let mut acc: BTreeMap<Exponent, Rat> = BTreeMap::new();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                let slot = acc.entry((a1 + a2, b1 + b2)).or_insert_with(Rat::zero);
                *slot += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        PolyQQ { terms: acc }
    }
}

impl Neg for &PolyQQ {
    type Output = PolyQQ;
    fn neg(self) -> PolyQQ {
        PolyQQ {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for PolyQQ {
            type Output = PolyQQ;
            fn $m(self, rhs: PolyQQ) -> PolyQQ {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&PolyQQ> for PolyQQ {
            type Output = PolyQQ;
            fn $m(self, rhs: &PolyQQ) -> PolyQQ {
                (&self).$m(rhs)
            }
        }
        impl $tr<PolyQQ> for &PolyQQ {
            type Output = PolyQQ;
            fn $m(self, rhs: PolyQQ) -> PolyQQ {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PolyQQ {
    type Output = PolyQQ;
    fn neg(self) -> PolyQQ {
        -&self
    }
}

impl std::iter::Sum for PolyQQ {
    fn sum<I: Iterator<Item = PolyQQ>>(iter: I) -> PolyQQ {
        let mut acc = PolyQQ::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

/// `1 - q`, the rank-1 atom used in several sections.
pub fn one_minus_q() -> PolyQQ {
    &PolyQQ::one() - &PolyQQ::q()
}

/// `1 - q2`.
pub fn one_minus_q2() -> PolyQQ {
    &PolyQQ::one() - &PolyQQ::q2()
}
