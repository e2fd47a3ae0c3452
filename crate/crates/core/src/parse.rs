//! Text grammar for words and polynomials.
//!
//! word       := atom+ | "1"
//! atom       := ident | "[" word "]"
//! ident      := [A-Za-z][A-Za-z0-9_]*
//! polynomial := ["-"] term (("+" | "-") term)*
//! term       := (coeff "*")* word
//! coeff      := integer ["/" integer] | parameter
//!
//! Whitespace separates adjacent idents inside a word: "x y" is a
//! two-letter word while "xy" is one generator named xy. "lam" and
//! "c" are reserved scalar parameter names and may not be used as
//! generators. Hole markers "*1" and "*2" are accepted in the word
//! entry point only (they never occur in user polynomials).

use crate::coeff::Coefficient;
use crate::poly::Poly;
use crate::words::{Atom, Word};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Names that always denote scalar parameters, never generators.
pub const RESERVED_PARAMS: [&str; 2] = ["lam", "c"];

pub fn is_reserved_param(name: &str) -> bool {
    RESERVED_PARAMS.contains(&name)
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Ident(String),
    Int(String),
    Plus,
    Minus,
    Times,
    Slash,
    LBrack,
    RBrack,
    Hole(u8),
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.toks.get(self.pos + 1).map(|(t, _)| t)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn column(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(_, c)| *c)
            .unwrap_or_else(|| self.toks.last().map(|(_, c)| c + 1).unwrap_or(1))
    }

    fn err(&self, msg: &str) -> String {
        format!("column {}: {}", self.column(), msg)
    }
}

fn lex(text: &str, word_mode: bool) -> Result<Lexer, String> {
    let mut toks = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        let ch = chars[i];
        match ch {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '[' => {
                toks.push((Tok::LBrack, col));
                i += 1;
            }
            ']' => {
                toks.push((Tok::RBrack, col));
                i += 1;
            }
            '+' => {
                toks.push((Tok::Plus, col));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, col));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, col));
                i += 1;
            }
            '*' => {
                if word_mode {
                    match chars.get(i + 1) {
                        Some('1') => toks.push((Tok::Hole(1), col)),
                        Some('2') => toks.push((Tok::Hole(2), col)),
                        _ => {
                            return Err(format!(
                                "column {}: expected *1 or *2 hole marker",
                                col
                            ))
                        }
                    }
                    i += 2;
                } else {
                    toks.push((Tok::Times, col));
                    i += 1;
                }
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push((Tok::Int(chars[start..i].iter().collect()), col));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
            }
            c => return Err(format!("column {}: unexpected character '{}'", col, c)),
        }
    }
    Ok(Lexer { toks, pos: 0 })
}

/// Parse a single word; hole markers allowed.
pub fn parse_word(text: &str) -> Result<Word, String> {
    let mut lx = lex(text, true)?;
    let w = parse_word_atoms(&mut lx, true)?;
    if lx.peek().is_some() {
        return Err(lx.err("trailing input after word"));
    }
    Ok(w)
}

/// Word body: atoms until a closing bracket or end of stream; the
/// literal "1" alone denotes the unit.
fn parse_word_atoms(lx: &mut Lexer, allow_holes: bool) -> Result<Word, String> {
    if let Some(Tok::Int(n)) = lx.peek() {
        if n == "1" {
            lx.next();
            match lx.peek() {
                None | Some(Tok::RBrack) => return Ok(Word::unit()),
                _ => return Err(lx.err("\"1\" must stand alone as a word")),
            }
        }
    }
    let mut atoms = Vec::new();
    loop {
        match lx.peek() {
            Some(Tok::Ident(name)) => {
                if is_reserved_param(name) {
                    return Err(lx.err(&format!(
                        "\"{}\" is a reserved parameter name, not a generator",
                        name
                    )));
                }
                atoms.push(Atom::Letter(name.clone()));
                lx.next();
            }
            Some(Tok::Hole(i)) => {
                if !allow_holes {
                    return Err(lx.err("hole markers are not allowed here"));
                }
                let i = *i;
                atoms.push(Atom::Star(i));
                lx.next();
            }
            Some(Tok::LBrack) => {
                lx.next();
                let inner = parse_word_atoms(lx, allow_holes)?;
                match lx.next() {
                    Some(Tok::RBrack) => atoms.push(Atom::Bracket(inner)),
                    _ => return Err(lx.err("unbalanced bracket: expected ']'")),
                }
            }
            _ => break,
        }
    }
    if atoms.is_empty() {
        return Err(lx.err("expected a word"));
    }
    Ok(Word(atoms))
}

/// Parse a polynomial in the full grammar.
pub fn parse_polynomial(text: &str) -> Result<Poly, String> {
    let mut lx = lex(text, false)?;
    if lx.peek().is_none() {
        return Err("empty input".to_string());
    }
    // A sole "0" denotes the zero polynomial.
    if lx.toks.len() == 1 {
        if let Some(Tok::Int(n)) = lx.peek() {
            if n == "0" {
                return Ok(Poly::zero());
            }
        }
    }
    let mut out = Poly::zero();
    let mut first = true;
    loop {
        let negative = match lx.peek() {
            Some(Tok::Minus) => {
                lx.next();
                true
            }
            Some(Tok::Plus) => {
                lx.next();
                false
            }
            None if !first => break,
            Some(_) if first => false,
            None => return Err(lx.err("expected a term")),
            Some(_) => return Err(lx.err("expected '+' or '-' between terms")),
        };
        let (coeff, word) = parse_term(&mut lx)?;
        let coeff = if negative { coeff.neg() } else { coeff };
        out = out.add(&Poly::from_term(word, coeff));
        first = false;
        if lx.peek().is_none() {
            break;
        }
    }
    Ok(out)
}

/// One term: coefficient factors joined by '*', then an optional word.
fn parse_term(lx: &mut Lexer) -> Result<(Coefficient, Word), String> {
    let mut coeff = Coefficient::one();
    loop {
        match lx.peek() {
            Some(Tok::Int(_)) => {
                let is_coeff = matches!(lx.peek2(), Some(Tok::Times) | Some(Tok::Slash));
                if is_coeff {
                    coeff = coeff.mul(&parse_rational(lx)?);
                    match lx.peek() {
                        Some(Tok::Times) => {
                            lx.next();
                        }
                        None | Some(Tok::Plus) | Some(Tok::Minus) => {
                            // Bare rational: scalar multiple of the unit word.
                            return Ok((coeff, Word::unit()));
                        }
                        _ => return Err(lx.err("expected '*' after coefficient")),
                    }
                } else {
                    // A lone integer token: the unit word "1" or a bare scalar.
                    if let Some(Tok::Int(n)) = lx.next() {
                        if n != "1" {
                            let r = BigRational::from_integer(
                                n.parse::<BigInt>().map_err(|e| e.to_string())?,
                            );
                            coeff = coeff.mul(&Coefficient::from_rational(r));
                        }
                    }
                    return Ok((coeff, Word::unit()));
                }
            }
            Some(Tok::Ident(name)) if is_reserved_param(name) => {
                let name = name.clone();
                lx.next();
                coeff = coeff.mul(&Coefficient::param(&name));
                match lx.peek() {
                    Some(Tok::Times) => {
                        lx.next();
                    }
                    None | Some(Tok::Plus) | Some(Tok::Minus) => {
                        return Ok((coeff, Word::unit()));
                    }
                    _ => return Err(lx.err("expected '*' after parameter")),
                }
            }
            Some(Tok::Ident(_)) | Some(Tok::LBrack) => {
                let w = parse_word_atoms(lx, false)?;
                match lx.peek() {
                    None | Some(Tok::Plus) | Some(Tok::Minus) => return Ok((coeff, w)),
                    _ => return Err(lx.err("unexpected token after word")),
                }
            }
            _ => return Err(lx.err("expected a term")),
        }
    }
}

/// integer ["/" integer], value nonzero denominator.
fn parse_rational(lx: &mut Lexer) -> Result<Coefficient, String> {
    let num = match lx.next() {
        Some(Tok::Int(n)) => n.parse::<BigInt>().map_err(|e| e.to_string())?,
        _ => return Err(lx.err("expected an integer")),
    };
    if lx.peek() == Some(&Tok::Slash) {
        lx.next();
        let den = match lx.next() {
            Some(Tok::Int(n)) => n.parse::<BigInt>().map_err(|e| e.to_string())?,
            _ => return Err(lx.err("expected a denominator")),
        };
        if den.is_zero() {
            return Err(lx.err("zero denominator"));
        }
        Ok(Coefficient::from_rational(BigRational::new(num, den)))
    } else {
        Ok(Coefficient::from_rational(BigRational::from_integer(num)))
    }
}
