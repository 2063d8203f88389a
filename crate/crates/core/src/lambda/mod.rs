//! Symmetric functions evaluated at formal specialization points.
//!
//! An [`Alphabet`] is a formal combination of a constant and rank-1 atoms.
//! Its complete-function generating series is
//!
//! ```text
//! H_u[c + sum_i a_i x_i] = (1 - u)^{-c} * prod_i (1 - u x_i)^{-a_i}
//! ```
//!
//! so sums of alphabets multiply series and differences divide them. Every
//! other basis is derived from this series or from power sums.

mod hall_littlewood;
mod hsequence;
mod schur;
mod sfraction;

use std::fmt;

use num_traits::Zero;

use crate::arith::{rat, rat_binomial, render_rat, Rat};
use crate::error::{Error, Result};
use crate::partitions::{composition_multiplicity, Partition};
use crate::poly::{one_minus_q, one_minus_q2, PolyQQ};
use crate::series::TruncSeries;

pub use hall_littlewood::{
    hall_littlewood_closed_form, hall_littlewood_principal, hall_littlewood_via_series,
    strinc_oracle, STRINC_CAP,
};
pub use hsequence::HSequence;
pub use schur::{determinant, hook_schur_constant, jacobi_trudi, s_of, SCHUR_LENGTH_CAP};
pub use sfraction::sfraction;

/// A specialization point: a constant plus weighted rank-1 atoms.
///
/// Coefficients are rational so that scalings such as `(z + k) A` with a
/// rational `z` stay inside the type; integer inputs are the common case.
/// The caller declares which values are rank 1; the engine never infers it.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Alphabet {
    constant: Rat,
    atoms: Vec<(Rat, PolyQQ)>,
}

impl Alphabet {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::constant_rat(rat(c))
    }

    pub fn constant_rat(c: Rat) -> Self {
        Self {
            constant: c,
            atoms: Vec::new(),
        }
    }

    /// One rank-1 atom with the given value.
    pub fn rank1(value: PolyQQ) -> Self {
        Self::atom(1, value)
    }

    pub fn atom(coeff: i64, value: PolyQQ) -> Self {
        Self::zero().with_atom(rat(coeff), value)
    }

    /// `q` declared rank 1.
    pub fn q() -> Self {
        Self::rank1(PolyQQ::q())
    }

    /// The element `q` when `1 - q` is declared rank 1: `1 - (1 - q)`.
    pub fn q_via_one_minus_q() -> Self {
        &Self::constant(1) - &Self::rank1(one_minus_q())
    }

    /// `1 - q` declared rank 1.
    pub fn big_q() -> Self {
        Self::rank1(one_minus_q())
    }

    pub fn q2() -> Self {
        Self::rank1(PolyQQ::q2())
    }

    pub fn big_q2() -> Self {
        Self::rank1(one_minus_q2())
    }

    pub fn with_constant(mut self, c: Rat) -> Self {
        self.constant += c;
        self
    }

    /// Adds `coeff * value`, merging with an existing atom of equal value.
    pub fn with_atom(mut self, coeff: Rat, value: PolyQQ) -> Self {
        if let Some(slot) = self.atoms.iter_mut().find(|(_, v)| *v == value) {
            slot.0 += coeff;
        } else {
            self.atoms.push((coeff, value));
        }
        self.atoms.retain(|(c, _)| !c.is_zero());
        self
    }

    pub fn constant_part(&self) -> &Rat {
        &self.constant
    }

    pub fn atoms(&self) -> &[(Rat, PolyQQ)] {
        &self.atoms
    }

    pub fn is_constant(&self) -> bool {
        self.atoms.is_empty()
    }

    /// `c * self` for a rational scalar `c`.
    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            constant: &self.constant * c,
            atoms: self.atoms.iter().map(|(a, v)| (a * c, v.clone())).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&rat(c))
    }

    /// Truncated `H_u[self]` through `u^order`.
    pub fn h_series(&self, order: usize) -> TruncSeries {
        let mut acc = binomial_series(&self.constant, &PolyQQ::one(), order);
        for (coeff, value) in &self.atoms {
            acc = acc.mul(&binomial_series(coeff, value, order));
        }
        acc
    }
}

/// `(1 - u v)^{-a} = sum_k C(a + k - 1, k) v^k u^k`.
fn binomial_series(a: &Rat, value: &PolyQQ, order: usize) -> TruncSeries {
    if a.is_zero() {
        return TruncSeries::one(order);
    }
    let mut pow = PolyQQ::one();
    TruncSeries::from_fn(order, |k| {
        let c = rat_binomial(&(a + rat(k as i64 - 1)), k as i64);
        let term = pow.scale(&c);
        pow = &pow * value;
        term
    })
}

impl std::ops::Add for &Alphabet {
    type Output = Alphabet;
    fn add(self, rhs: &Alphabet) -> Alphabet {
        let mut out = self.clone().with_constant(rhs.constant.clone());
        for (c, v) in &rhs.atoms {
            out = out.with_atom(c.clone(), v.clone());
        }
        out
    }
}

impl std::ops::Neg for &Alphabet {
    type Output = Alphabet;
    fn neg(self) -> Alphabet {
        self.scale(&rat(-1))
    }
}

impl std::ops::Sub for &Alphabet {
    type Output = Alphabet;
    fn sub(self, rhs: &Alphabet) -> Alphabet {
        self + &(-rhs)
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{c={}", render_rat(&self.constant))?;
        for (c, v) in &self.atoms {
            write!(f, ", atom({}, {})", render_rat(c), v)?;
        }
        write!(f, "}}")
    }
}

/// Complete function `h_n` at `a`.
pub fn h_of(n: usize, a: &Alphabet) -> PolyQQ {
    a.h_series(n).coeff(n).clone()
}

/// Elementary function `e_n` at `a`, from `E_u = (H_{-u})^{-1}`.
pub fn e_of(n: usize, a: &Alphabet) -> PolyQQ {
    let h_minus = a.h_series(n).dilate(&PolyQQ::int(-1));
    // H_{-u} has constant term 1, so the inverse always exists.
    h_minus.inverse().expect("unit constant term").coeff(n).clone()
}

/// Power sum `p_n` at `a`: `c + sum_i a_i x_i^n`.
pub fn p_of(n: usize, a: &Alphabet) -> Result<PolyQQ> {
    if n == 0 {
        return Err(Error::InvalidArgument("power sums start at p_1".into()));
    }
    let mut out = PolyQQ::constant(a.constant.clone());
    for (c, v) in &a.atoms {
        out += &v.pow(n as u32).scale(c);
    }
    Ok(out)
}

/// Monomial function `m_mu` at an integer constant `c`:
/// `C(c, l(mu)) * l(mu)! / prod_i m_i(mu)!`.
pub fn m_of_constant(mu: &Partition, c: i64) -> num_bigint::BigInt {
    crate::arith::gen_binomial(c, mu.len() as i64) * composition_multiplicity(mu)
}
