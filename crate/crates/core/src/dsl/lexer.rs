use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(super) enum Tok {
    Nat(u64),
    H,
    E,
    P,
    S,
    M,
    Principal,
    LowQ,
    BigQ,
    LowQ2,
    BigQ2,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Plus,
    Minus,
    Star,
    End,
}

impl Tok {
    pub(super) fn describe(self) -> &'static str {
        match self {
            Tok::Nat(_) => "number",
            Tok::H => "'h'",
            Tok::E => "'e'",
            Tok::P => "'p'",
            Tok::S => "'s'",
            Tok::M => "'m'",
            Tok::Principal => "'P'",
            Tok::LowQ => "'q'",
            Tok::BigQ => "'Q'",
            Tok::LowQ2 => "'q2'",
            Tok::BigQ2 => "'Q2'",
            Tok::LBracket => "'['",
            Tok::RBracket => "']'",
            Tok::LBrace => "'{'",
            Tok::RBrace => "'}'",
            Tok::Comma => "','",
            Tok::Plus => "'+'",
            Tok::Minus => "'-'",
            Tok::Star => "'*'",
            Tok::End => "end of input",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub(super) struct Token {
    pub tok: Tok,
    pub offset: usize,
}

pub(super) fn tokenize(input: &str) -> Result<Vec<Token>> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let value = input[start..i].parse::<u64>().map_err(|_| Error::Parse {
                    offset: start,
                    message: format!("number {} is too large", &input[start..i]),
                    expected: Vec::new(),
                })?;
                out.push(Token { tok: Tok::Nat(value), offset: start });
                continue;
            }
            b'q' | b'Q' => {
                let two = bytes.get(i + 1) == Some(&b'2');
                if two {
                    i += 1;
                }
                match (c, two) {
                    (b'q', false) => Tok::LowQ,
                    (b'q', true) => Tok::LowQ2,
                    (_, false) => Tok::BigQ,
                    (_, true) => Tok::BigQ2,
                }
            }
            b'h' => Tok::H,
            b'e' => Tok::E,
            b'p' => Tok::P,
            b's' => Tok::S,
            b'm' => Tok::M,
            b'P' => Tok::Principal,
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b'{' => Tok::LBrace,
            b'}' => Tok::RBrace,
            b',' => Tok::Comma,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            _ => {
                let ch = input[start..].chars().next().unwrap_or('?');
                return Err(Error::Parse {
                    offset: start,
                    message: format!("unexpected character {ch:?}"),
                    expected: Vec::new(),
                });
            }
        };
        i += 1;
        out.push(Token { tok, offset: start });
    }
    out.push(Token {
        tok: Tok::End,
        offset: input.len(),
    });
    Ok(out)
}
