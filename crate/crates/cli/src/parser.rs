//! Recursive-descent parser for the expression language.
//!
//! Grammar:
//!   expr   := ["-"] term (("+" | "-") term)*
//!   term   := factor ("*" factor)*
//!   factor := atom ("^" exp)?
//!   atom   := number | "i" | "pi" | "eugamma" | ident
//!          | "abs" "(" "x" ")" | "absS" "(" "x" ")" | "(" expr ")"
//!   exp    := ["-"] integer | "(" rational ")"
//!   number := digits ("/" digits)?
//!
//! Identifiers: x<k>, xg<k>, z<k>, zc<k>, zg<k>, zgc<k>, e<k>, eg<k>,
//! f<k>, fd<k>, fg<k>, fgd<k>. Products preserve the written order, so
//! noncommuting factors are never reordered before canonicalization.
//! Exponents on ordinary atoms are nonnegative integers; `abs(x)`, `absS(x)`
//! and `pi` additionally accept rational exponents.

use supercliff::dims::Dims;
use supercliff::error::{Error, Result};
use supercliff::ops::vector::{
    abs_x_pow, z_var, z_var_conj, zg_var, zg_var_conj,
};
use supercliff::scalar::{GaussRat, Rat64, Scalar};
use supercliff::superexpr::SuperExpr;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Number(i64, i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    toks: Vec<(Tok, usize)>,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let mut lx = Lexer { src: src.as_bytes(), pos: 0, toks: Vec::new() };
    while lx.pos < lx.src.len() {
        let c = lx.src[lx.pos];
        let start = lx.pos;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                lx.pos += 1;
            }
            b'+' => {
                lx.toks.push((Tok::Plus, start));
                lx.pos += 1;
            }
            b'-' => {
                lx.toks.push((Tok::Minus, start));
                lx.pos += 1;
            }
            b'*' => {
                lx.toks.push((Tok::Star, start));
                lx.pos += 1;
            }
            b'^' => {
                lx.toks.push((Tok::Caret, start));
                lx.pos += 1;
            }
            b'(' => {
                lx.toks.push((Tok::LParen, start));
                lx.pos += 1;
            }
            b')' => {
                lx.toks.push((Tok::RParen, start));
                lx.pos += 1;
            }
            b'0'..=b'9' => {
                let mut num = 0i64;
                while lx.pos < lx.src.len() && lx.src[lx.pos].is_ascii_digit() {
                    num = num
                        .checked_mul(10)
                        .and_then(|v| v.checked_add((lx.src[lx.pos] - b'0') as i64))
                        .ok_or(Error::Parse {
                            position: start,
                            message: "integer literal overflows".into(),
                        })?;
                    lx.pos += 1;
                }
                let mut den = 1i64;
                if lx.pos < lx.src.len() && lx.src[lx.pos] == b'/' {
                    lx.pos += 1;
                    let dstart = lx.pos;
                    den = 0;
                    while lx.pos < lx.src.len() && lx.src[lx.pos].is_ascii_digit() {
                        den = den * 10 + (lx.src[lx.pos] - b'0') as i64;
                        lx.pos += 1;
                    }
                    if lx.pos == dstart || den == 0 {
                        return Err(Error::Parse {
                            position: dstart,
                            message: "expected a nonzero denominator".into(),
                        });
                    }
                }
                lx.toks.push((Tok::Number(num, den), start));
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                let mut end = lx.pos;
                while end < lx.src.len()
                    && (lx.src[end].is_ascii_alphanumeric())
                {
                    end += 1;
                }
                let word = std::str::from_utf8(&lx.src[lx.pos..end]).unwrap().to_string();
                lx.toks.push((Tok::Ident(word), start));
                lx.pos = end;
            }
            other => {
                return Err(Error::Parse {
                    position: start,
                    message: format!("unexpected character `{}`", other as char),
                });
            }
        }
    }
    Ok(lx.toks)
}

pub struct Parser {
    dims: Dims,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    len: usize,
}

impl Parser {
    pub fn new(dims: Dims, src: &str) -> Result<Self> {
        let toks = lex(src)?;
        Ok(Parser { dims, toks, pos: 0, len: src.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn position(&self) -> usize {
        self.toks.get(self.pos).map(|(_, p)| *p).unwrap_or(self.len)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        let pos = self.position();
        match self.bump() {
            Some(found) if found == t => Ok(()),
            found => Err(Error::Parse {
                position: pos,
                message: format!("expected {t:?}, found {found:?}"),
            }),
        }
    }

    pub fn parse(mut self) -> Result<SuperExpr> {
        let e = self.expr()?;
        if self.pos != self.toks.len() {
            return Err(Error::Parse {
                position: self.position(),
                message: "trailing input".into(),
            });
        }
        Ok(e)
    }

    fn expr(&mut self) -> Result<SuperExpr> {
        let negate = matches!(self.peek(), Some(Tok::Minus));
        if negate {
            self.bump();
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SuperExpr> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.bump();
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<Rat64> {
        let pos = self.position();
        match self.bump() {
            Some(Tok::Number(n, d)) => Ok(Rat64::new(n, d)),
            Some(Tok::Minus) => match self.bump() {
                Some(Tok::Number(n, d)) => Ok(Rat64::new(-n, d)),
                other => Err(Error::Parse {
                    position: pos,
                    message: format!("expected an integer exponent, found {other:?}"),
                }),
            },
            Some(Tok::LParen) => {
                let negate = matches!(self.peek(), Some(Tok::Minus));
                if negate {
                    self.bump();
                }
                let v = match self.bump() {
                    Some(Tok::Number(n, d)) => Rat64::new(n, d),
                    other => {
                        return Err(Error::Parse {
                            position: pos,
                            message: format!("expected a rational exponent, found {other:?}"),
                        })
                    }
                };
                self.expect(Tok::RParen)?;
                Ok(if negate { -v } else { v })
            }
            other => Err(Error::Parse {
                position: pos,
                message: format!("expected an exponent, found {other:?}"),
            }),
        }
    }

    fn factor(&mut self) -> Result<SuperExpr> {
        let pos = self.position();
        let (base, powerable) = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let e = self.exponent()?;
            return match powerable {
                Powerable::Rational(build) => build(self.dims, e),
                Powerable::IntegerOnly => {
                    if *e.denom() != 1 || e < Rat64::from_integer(0) {
                        Err(Error::Parse {
                            position: pos,
                            message: "this atom only takes nonnegative integer exponents".into(),
                        })
                    } else {
                        Ok(base.pow(*e.numer() as usize))
                    }
                }
            };
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<(SuperExpr, Powerable)> {
        let d = self.dims;
        let pos = self.position();
        match self.bump() {
            Some(Tok::Number(n, den)) => Ok((
                SuperExpr::scalar(d, Scalar::from_rat(Rat64::new(n, den))),
                Powerable::IntegerOnly,
            )),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok((e, Powerable::IntegerOnly))
            }
            Some(Tok::Ident(word)) => self.ident_atom(&word, pos),
            other => Err(Error::Parse {
                position: pos,
                message: format!("expected an atom, found {other:?}"),
            }),
        }
    }

    fn ident_atom(&mut self, word: &str, pos: usize) -> Result<(SuperExpr, Powerable)> {
        let d = self.dims;
        match word {
            "i" => {
                return Ok((SuperExpr::scalar(d, Scalar::i()), Powerable::IntegerOnly));
            }
            "pi" => {
                return Ok((
                    SuperExpr::scalar(d, Scalar::pi_half_pow(2)),
                    Powerable::Rational(|dims, e| {
                        let two_e = e * Rat64::from_integer(2);
                        if *two_e.denom() != 1 {
                            return Err(Error::Parse {
                                position: 0,
                                message: "π exponent must be a half-integer".into(),
                            });
                        }
                        Ok(SuperExpr::scalar(
                            dims,
                            Scalar::pi_half_pow(*two_e.numer() as i32),
                        ))
                    }),
                ));
            }
            "eugamma" => {
                return Ok((
                    SuperExpr::scalar(d, Scalar::tower(GaussRat::one(), 0, 1)),
                    Powerable::IntegerOnly,
                ));
            }
            "abs" => {
                self.expect(Tok::LParen)?;
                match self.bump() {
                    Some(Tok::Ident(x)) if x == "x" => {}
                    other => {
                        return Err(Error::Parse {
                            position: pos,
                            message: format!("expected `x` inside abs(), found {other:?}"),
                        })
                    }
                }
                self.expect(Tok::RParen)?;
                return Ok((
                    SuperExpr::radial(d, Rat64::from_integer(1)),
                    Powerable::Rational(|dims, e| Ok(SuperExpr::radial(dims, e))),
                ));
            }
            "absS" => {
                self.expect(Tok::LParen)?;
                match self.bump() {
                    Some(Tok::Ident(x)) if x == "x" => {}
                    other => {
                        return Err(Error::Parse {
                            position: pos,
                            message: format!("expected `x` inside absS(), found {other:?}"),
                        })
                    }
                }
                self.expect(Tok::RParen)?;
                return Ok((
                    abs_x_pow(d, Rat64::from_integer(1))?,
                    Powerable::Rational(abs_x_pow),
                ));
            }
            _ => {}
        }

        // indexed identifiers
        let split = word.find(|c: char| c.is_ascii_digit()).ok_or_else(|| Error::Parse {
            position: pos,
            message: format!("unknown symbol `{word}`"),
        })?;
        let (head, idx_str) = word.split_at(split);
        let k: usize = idx_str.parse().map_err(|_| Error::Parse {
            position: pos,
            message: format!("bad index in `{word}`"),
        })?;
        if k == 0 {
            return Err(Error::Parse {
                position: pos,
                message: format!("indices are 1-based in `{word}`"),
            });
        }
        let expr = match head {
            "x" => SuperExpr::x(d, k - 1),
            "xg" => SuperExpr::xg(d, k - 1),
            "e" => SuperExpr::e(d, k - 1),
            "eg" => SuperExpr::eg(d, k - 1),
            "z" => z_var(d, k),
            "zc" => z_var_conj(d, k),
            "zg" => zg_var(d, k),
            "zgc" => zg_var_conj(d, k),
            "f" | "fd" => {
                let m = d.m().map_err(|_| Error::Parse {
                    position: pos,
                    message: "Witt generators need even bosonic dimension".into(),
                })?;
                if k > m {
                    Err(Error::IndexOutOfRange { index: k, limit: m })
                } else {
                    let e = SuperExpr::e(d, k - 1)?;
                    let em = SuperExpr::e(d, m + k - 1)?;
                    if head == "f" {
                        Ok(e.sub(&em.scale(&Scalar::i()))
                            .scale(&Scalar::from_rat(Rat64::new(1, 2))))
                    } else {
                        Ok(e.add(&em.scale(&Scalar::i()))
                            .scale(&Scalar::from_rat(Rat64::new(-1, 2))))
                    }
                }
            }
            "fg" | "fgd" => {
                if k > d.n {
                    Err(Error::IndexOutOfRange { index: k, limit: d.n })
                } else {
                    let a = SuperExpr::eg(d, 2 * k - 2)?;
                    let b = SuperExpr::eg(d, 2 * k - 1)?;
                    if head == "fg" {
                        Ok(a.sub(&b.scale(&Scalar::i()))
                            .scale(&Scalar::from_rat(Rat64::new(1, 2))))
                    } else {
                        Ok(a.add(&b.scale(&Scalar::i()))
                            .scale(&Scalar::from_rat(Rat64::new(-1, 2))))
                    }
                }
            }
            _ => Err(Error::Parse {
                position: pos,
                message: format!("unknown symbol `{word}`"),
            }),
        };
        let expr = expr.map_err(|e| match e {
            Error::Parse { .. } => e,
            other => Error::Parse { position: pos, message: other.to_string() },
        })?;
        Ok((expr, Powerable::IntegerOnly))
    }
}

enum Powerable {
    IntegerOnly,
    Rational(fn(Dims, Rat64) -> Result<SuperExpr>),
}

/// Parses `src` in the given dimensions.
pub fn parse(dims: Dims, src: &str) -> Result<SuperExpr> {
    Parser::new(dims, src)?.parse()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d() -> Dims {
        Dims::hermitian(2, 1)
    }

    #[test]
    fn lowering_examples() {
        // z1^2*zg1
        let e = parse(d(), "z1^2*zg1").unwrap();
        let z1 = z_var(d(), 1).unwrap();
        let zg1 = zg_var(d(), 1).unwrap();
        assert_eq!(e, z1.mul(&z1).mul(&zg1));
        // nilpotency
        assert!(parse(d(), "xg1*xg1").unwrap().is_zero());
        // radial body with rational exponent
        let e2 = parse(d(), "abs(x)^-2 * x1").unwrap();
        let expect = SuperExpr::radial(d(), Rat64::new(-2, 1))
            .mul(&SuperExpr::x(d(), 0).unwrap());
        assert_eq!(e2, expect);
        // super absolute value
        let e3 = parse(d(), "absS(x)^(1/2)").unwrap();
        assert_eq!(e3, abs_x_pow(d(), Rat64::new(1, 2)).unwrap());
    }

    #[test]
    fn order_preserved() {
        // noncommutative: e2*e1 = -e1*e2
        let a = parse(d(), "e2*e1").unwrap();
        let b = parse(d(), "e1*e2").unwrap();
        assert_eq!(a, b.neg());
    }

    #[test]
    fn errors_carry_positions() {
        match parse(d(), "x1 + $") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse(d(), "x9").is_err());
        assert!(parse(d(), "x1^(1/2)").is_err());
        assert!(parse(d(), "zz1").is_err());
    }

    #[test]
    fn witt_generators_lower_correctly() {
        // f1*fd1 + fd1*f1 = 1
        let f1 = parse(d(), "f1").unwrap();
        let fd1 = parse(d(), "fd1").unwrap();
        let anti = f1.mul(&fd1).add(&fd1.mul(&f1));
        assert_eq!(anti, SuperExpr::one(d()));
    }

    #[test]
    fn render_roundtrip_samples() {
        for src in [
            "z1^2*zg1",
            "1/2*x1*abs(x)^-2",
            "x1*xg1*e1*eg2",
            "absS(x)^(-2)",
            "(1 - 2*i)*x2 + pi^(1/2)*x1",
            "eugamma*x1",
        ] {
            let e = parse(d(), src).unwrap();
            let rendered = format!("{e}");
            let re = parse(d(), &rendered)
                .unwrap_or_else(|err| panic!("render of `{src}` unparseable: {rendered}: {err}"));
            assert_eq!(re, e, "roundtrip of {src} via {rendered}");
        }
    }
}
