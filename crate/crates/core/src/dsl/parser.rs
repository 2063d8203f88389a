use std::mem::discriminant;

use crate::error::{Error, Result};
use crate::partitions::Partition;

use super::lexer::{tokenize, Tok, Token};
use super::{AlphaExpr, Atom, Basis, Expr, Index, Term};

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Token {
        self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos];
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, at: Token, expected: &[Tok]) -> Error {
        let expected: Vec<String> = expected.iter().map(|t| t.describe().to_string()).collect();
        Error::Parse {
            offset: at.offset,
            message: format!("expected {}, found {}", expected.join(" or "), at.tok.describe()),
            expected,
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<Token> {
        let t = self.peek();
        if discriminant(&t.tok) == discriminant(&tok) {
            Ok(self.bump())
        } else {
            Err(self.error(t, &[tok]))
        }
    }

    fn nat(&mut self) -> Result<(u64, usize)> {
        let t = self.expect(Tok::Nat(0))?;
        match t.tok {
            Tok::Nat(v) => Ok((v, t.offset)),
            _ => unreachable!(),
        }
    }

    fn small_nat(&mut self) -> Result<usize> {
        let (v, offset) = self.nat()?;
        usize::try_from(v).ok().filter(|v| *v <= u32::MAX as usize).ok_or_else(|| Error::Parse {
            offset,
            message: format!("{v} is too large"),
            expected: Vec::new(),
        })
    }

    fn query(&mut self) -> Result<Expr> {
        let t = self.bump();
        let basis = match t.tok {
            Tok::H => Basis::H,
            Tok::E => Basis::E,
            Tok::P => Basis::P,
            Tok::S => Basis::S,
            Tok::M => Basis::M,
            Tok::Principal => {
                self.expect(Tok::LBrace)?;
                let r = self.small_nat()?;
                self.expect(Tok::Comma)?;
                let n = self.small_nat()?;
                self.expect(Tok::RBrace)?;
                return Ok(Expr::PrincipalHL { r, n });
            }
            _ => return Err(self.error(t, &[Tok::H, Tok::E, Tok::P, Tok::S, Tok::M, Tok::Principal])),
        };
        let index = match basis {
            Basis::H | Basis::E | Basis::P => Index::Degree(self.small_nat()?),
            Basis::S | Basis::M => Index::Shape(self.partition()?),
        };
        self.expect(Tok::LBracket)?;
        let alpha = self.alpha()?;
        self.expect(Tok::RBracket)?;
        if basis == Basis::M {
            if let Some(term) = alpha.terms.iter().find(|t| !matches!(t.atom, Atom::Int(_))) {
                return Err(Error::Parse {
                    offset: term.offset,
                    message: "m{...} needs a constant alphabet".into(),
                    expected: vec!["number".into()],
                });
            }
        }
        Ok(Expr::BasisApp { basis, index, alpha })
    }

    fn partition(&mut self) -> Result<Partition> {
        self.expect(Tok::LBrace)?;
        let mut parts = Vec::new();
        loop {
            let (v, offset) = self.nat()?;
            let bad = |message: String| Error::Parse {
                offset,
                message,
                expected: Vec::new(),
            };
            if v == 0 {
                return Err(bad("partition parts must be positive".into()));
            }
            let v = u32::try_from(v).map_err(|_| bad(format!("part {v} is too large")))?;
            if parts.last().is_some_and(|&prev| v > prev) {
                return Err(bad("partition parts must be weakly decreasing".into()));
            }
            parts.push(v);
            let t = self.peek();
            match t.tok {
                Tok::Comma => {
                    self.bump();
                }
                Tok::RBrace => {
                    self.bump();
                    break;
                }
                _ => return Err(self.error(t, &[Tok::Comma, Tok::RBrace])),
            }
        }
        Partition::new(parts)
    }

    fn alpha(&mut self) -> Result<AlphaExpr> {
        let mut terms = Vec::new();
        let mut negative = false;
        if self.peek().tok == Tok::Minus {
            self.bump();
            negative = true;
        }
        loop {
            terms.push(self.term(negative)?);
            match self.peek().tok {
                Tok::Plus => negative = false,
                Tok::Minus => negative = true,
                _ => break,
            }
            self.bump();
        }
        Ok(AlphaExpr { terms })
    }

    fn term(&mut self, negative: bool) -> Result<Term> {
        let t = self.peek();
        let atom_tokens = [Tok::Nat(0), Tok::LowQ, Tok::BigQ, Tok::LowQ2, Tok::BigQ2];
        let mut multiplier = None;
        if let Tok::Nat(v) = t.tok {
            if self.tokens[self.pos + 1].tok == Tok::Star {
                if v == 0 {
                    return Err(Error::Parse {
                        offset: t.offset,
                        message: "multipliers must be nonzero".into(),
                        expected: Vec::new(),
                    });
                }
                self.bump();
                self.bump();
                multiplier = Some(v);
            }
        }
        let a = self.bump();
        let atom = match a.tok {
            Tok::Nat(v) => Atom::Int(v),
            Tok::LowQ => Atom::Q,
            Tok::BigQ => Atom::BigQ,
            Tok::LowQ2 => Atom::Q2,
            Tok::BigQ2 => Atom::BigQ2,
            _ => return Err(self.error(a, &atom_tokens)),
        };
        Ok(Term {
            negative,
            multiplier,
            atom,
            offset: t.offset,
        })
    }
}

pub fn parse(input: &str) -> Result<Expr> {
    let mut p = Parser {
        tokens: tokenize(input)?,
        pos: 0,
    };
    let expr = p.query()?;
    p.expect(Tok::End)?;
    Ok(expr)
}
