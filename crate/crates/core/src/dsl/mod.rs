//! A one-line query language for bracket evaluations.
//!
//! ```text
//! query := basis '[' alpha ']' | 'P' '{' nat ',' nat '}'
//! basis := ('h'|'e'|'p') nat | ('s'|'m') '{' nat (',' nat)* '}'
//! alpha := ['-'] term (('+'|'-') term)*
//! term  := [nat '*'] atom
//! atom  := nat | 'q' | 'Q' | 'q2' | 'Q2'
//! ```
//!
//! `q` and `q2` are rank-1 atoms with values `q` and `q2`; `Q` and `Q2` are
//! rank-1 atoms with values `1 - q` and `1 - q2`. A bare number is a
//! constant. `P{r,n}` is the principal specialization `P_r(1^n; q)`.
//!
//! ```
//! use narayana_core::dsl;
//! assert_eq!(dsl::eval_str("P{3,4}").unwrap().to_string(), "4*q^2 - 20*q + 20");
//! ```

mod lexer;
mod parser;

use std::fmt;

use crate::arith::Rat;
use crate::error::{Error, Result};
use crate::lambda::{e_of, h_of, hall_littlewood_principal, m_of_constant, p_of, s_of, Alphabet};
use crate::partitions::Partition;
use crate::poly::{one_minus_q, one_minus_q2, PolyQQ};

pub use parser::parse;

/// Largest degree or partition weight accepted by [`eval`].
pub const DEGREE_CAP: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    H,
    E,
    P,
    S,
    M,
}

impl Basis {
    fn letter(self) -> char {
        match self {
            Basis::H => 'h',
            Basis::E => 'e',
            Basis::P => 'p',
            Basis::S => 's',
            Basis::M => 'm',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Index {
    Degree(usize),
    Shape(Partition),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Atom {
    Int(u64),
    Q,
    BigQ,
    Q2,
    BigQ2,
}

/// A signed term; `offset` is the byte position in the source and does not
/// take part in equality.
#[derive(Clone, Debug, Eq)]
pub struct Term {
    pub negative: bool,
    pub multiplier: Option<u64>,
    pub atom: Atom,
    pub offset: usize,
}

impl PartialEq for Term {
    fn eq(&self, other: &Self) -> bool {
        self.negative == other.negative && self.multiplier == other.multiplier && self.atom == other.atom
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaExpr {
    pub terms: Vec<Term>,
}

impl AlphaExpr {
    /// The alphabet denoted by the terms.
    pub fn alphabet(&self) -> Alphabet {
        let mut out = Alphabet::zero();
        for t in &self.terms {
            let mult = Rat::from_integer(t.multiplier.unwrap_or(1).into());
            let coeff = if t.negative { -mult } else { mult };
            let value = match t.atom {
                Atom::Int(v) => {
                    out = out.with_constant(coeff * Rat::from_integer(v.into()));
                    continue;
                }
                Atom::Q => PolyQQ::q(),
                Atom::BigQ => one_minus_q(),
                Atom::Q2 => PolyQQ::q2(),
                Atom::BigQ2 => one_minus_q2(),
            };
            out = out.with_atom(coeff, value);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    BasisApp { basis: Basis, index: Index, alpha: AlphaExpr },
    PrincipalHL { r: usize, n: usize },
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Int(v) => write!(f, "{v}"),
            Atom::Q => f.write_str("q"),
            Atom::BigQ => f.write_str("Q"),
            Atom::Q2 => f.write_str("q2"),
            Atom::BigQ2 => f.write_str("Q2"),
        }
    }
}

impl fmt::Display for AlphaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            match (i, t.negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if let Some(m) = t.multiplier {
                write!(f, "{m}*")?;
            }
            write!(f, "{}", t.atom)?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::PrincipalHL { r, n } => write!(f, "P{{{r},{n}}}"),
            Expr::BasisApp { basis, index, alpha } => {
                write!(f, "{}", basis.letter())?;
                match index {
                    Index::Degree(k) => write!(f, "{k}")?,
                    Index::Shape(mu) => {
                        let parts: Vec<String> = mu.parts().iter().map(|p| p.to_string()).collect();
                        write!(f, "{{{}}}", parts.join(","))?;
                    }
                }
                write!(f, "[{alpha}]")
            }
        }
    }
}

fn check_cap(size: usize) -> Result<()> {
    if size > DEGREE_CAP {
        return Err(Error::CapExceeded {
            what: format!("degree {size}"),
            cap: DEGREE_CAP,
        });
    }
    Ok(())
}

pub fn eval(e: &Expr) -> Result<PolyQQ> {
    match e {
        Expr::PrincipalHL { r, n } => {
            check_cap(*r)?;
            check_cap(*n)?;
            hall_littlewood_principal(*r, *n)
        }
        Expr::BasisApp { basis, index, alpha } => {
            let point = alpha.alphabet();
            match (basis, index) {
                (Basis::H, Index::Degree(k)) => {
                    check_cap(*k)?;
                    Ok(h_of(*k, &point))
                }
                (Basis::E, Index::Degree(k)) => {
                    check_cap(*k)?;
                    Ok(e_of(*k, &point))
                }
                (Basis::P, Index::Degree(k)) => {
                    check_cap(*k)?;
                    p_of(*k, &point)
                }
                (Basis::S, Index::Shape(mu)) => {
                    check_cap(mu.weight() as usize)?;
                    s_of(mu, &point)
                }
                (Basis::M, Index::Shape(mu)) => m_at(mu, &point),
                _ => Err(Error::InvalidArgument(format!("malformed query {e}"))),
            }
        }
    }
}

fn m_at(mu: &Partition, point: &Alphabet) -> Result<PolyQQ> {
    let c = point
        .is_constant()
        .then(|| point.constant_part())
        .filter(|c| c.is_integer())
        .and_then(|c| num_traits::ToPrimitive::to_i64(&c.to_integer()))
        .ok_or_else(|| Error::InvalidArgument("m{...} needs an integer constant alphabet".into()))?;
    Ok(PolyQQ::from_big(m_of_constant(mu, c)))
}

/// Parses and evaluates one query.
pub fn eval_str(input: &str) -> Result<PolyQQ> {
    eval(&parse(input)?)
}

#[cfg(test)]
mod tests;
