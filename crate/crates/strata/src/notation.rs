//! Text notation for degeneration patterns.
//!
//! Distinct-zeros grammar (ASCII `>` for the cyclic separator):
//!
//! ```text
//! pattern := group+
//! group   := "(" int "+" int ("," int)* ")" ">"
//! ```
//!
//! Closed grammar: `-` is a direct gluing, `=` a cylinder; the leading glue
//! closes the cycle (glue i binds piece i-1 to piece i):
//!
//! ```text
//! pattern := (glue piece)+
//! glue    := "-" | "="
//! piece   := "(" kernel (";" int ("," int)*)? ")"
//! kernel  := "F" int "+" int | "H" int "," int
//! ```

use crate::closed::{ClosedConfig, ClosedPiece, Gluing, PieceKind};
use crate::distinct::{DistinctConfig, DistinctPiece};
use crate::error::{Error, Result};
use crate::stratum::Partition;

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Cursor<'a> {
        Cursor {
            text: text.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            got => Err(self.error(format!(
                "expected {:?}, found {:?}",
                c as char,
                got.map(|b| b as char)
            ))),
        }
    }

    fn skip_spaces(&mut self) {
        while matches!(self.peek(), Some(b' ')) {
            self.pos += 1;
        }
    }

    fn error(&self, message: String) -> Error {
        Error::ParseError {
            offset: self.pos,
            message,
        }
    }

    fn int(&mut self) -> Result<u32> {
        self.skip_spaces();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer".to_string()));
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("integer out of range".to_string()))
    }

    /// `";" int ("," int)*`, or empty.
    fn rest(&mut self) -> Result<Partition> {
        self.skip_spaces();
        let mut entries = Vec::new();
        if self.peek() == Some(b';') {
            self.bump();
            loop {
                entries.push(self.int()?);
                self.skip_spaces();
                if self.peek() == Some(b',') {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        Ok(Partition::new(entries))
    }
}

/// Parses the distinct-zeros pattern. The split sums determine `m1` and
/// `m2` via `m1 = sum a' + p - 1`, `m2 = sum a'' + p - 1`.
pub fn parse_distinct(text: &str) -> Result<DistinctConfig> {
    let mut cur = Cursor::new(text);
    let mut pieces = Vec::new();
    loop {
        cur.skip_spaces();
        if cur.peek().is_none() {
            break;
        }
        cur.expect(b'(')?;
        let a_prime = cur.int()?;
        cur.skip_spaces();
        cur.expect(b'+')?;
        let a_dprime = cur.int()?;
        cur.skip_spaces();
        let mut entries = Vec::new();
        while cur.peek() == Some(b',') {
            cur.bump();
            entries.push(cur.int()?);
            cur.skip_spaces();
        }
        let rest = Partition::new(entries);
        cur.expect(b')')?;
        cur.skip_spaces();
        cur.expect(b'>')?;
        pieces.push(DistinctPiece::new(a_prime, a_dprime, rest));
    }
    if pieces.is_empty() {
        return Err(cur.error("empty pattern".to_string()));
    }
    let p = pieces.len() as u32;
    let m1 = pieces.iter().map(|q| q.a_prime).sum::<u32>() + p - 1;
    let m2 = pieces.iter().map(|q| q.a_dprime).sum::<u32>() + p - 1;
    Ok(DistinctConfig { m1, m2, pieces })
}

pub fn print_distinct(cfg: &DistinctConfig) -> String {
    let mut out = String::new();
    for piece in &cfg.pieces {
        out.push('(');
        out.push_str(&piece.a_prime.to_string());
        out.push('+');
        out.push_str(&piece.a_dprime.to_string());
        for &e in piece.rest.entries() {
            out.push(',');
            out.push_str(&e.to_string());
        }
        out.push_str(")>");
    }
    out
}

/// Parses the closed pattern; rejects a trailing glue symbol (the leading
/// one already closes the cycle).
pub fn parse_closed(text: &str) -> Result<ClosedConfig> {
    let mut cur = Cursor::new(text);
    let mut pieces = Vec::new();
    let mut glue = Vec::new();
    loop {
        cur.skip_spaces();
        match cur.peek() {
            None if !pieces.is_empty() => break,
            Some(b'-') => {
                cur.bump();
                glue.push(Gluing::Direct);
            }
            Some(b'=') => {
                cur.bump();
                glue.push(Gluing::Cylinder);
            }
            got => {
                return Err(cur.error(format!(
                    "expected a gluing symbol '-' or '=', found {:?}",
                    got.map(|b| b as char)
                )))
            }
        }
        cur.skip_spaces();
        cur.expect(b'(')?;
        cur.skip_spaces();
        let kind = match cur.bump() {
            Some(b'F') => {
                let a_prime = cur.int()?;
                cur.skip_spaces();
                cur.expect(b'+')?;
                let a_dprime = cur.int()?;
                PieceKind::FigureEight { a_prime, a_dprime }
            }
            Some(b'H') => {
                let b_prime = cur.int()?;
                cur.skip_spaces();
                cur.expect(b',')?;
                let b_dprime = cur.int()?;
                PieceKind::PairOfHoles { b_prime, b_dprime }
            }
            got => {
                return Err(cur.error(format!(
                    "expected kernel tag 'F' or 'H', found {:?}",
                    got.map(|b| b as char)
                )))
            }
        };
        let rest = cur.rest()?;
        cur.expect(b')')?;
        pieces.push(ClosedPiece { kind, rest });
    }
    Ok(ClosedConfig { pieces, glue })
}

pub fn print_closed(cfg: &ClosedConfig) -> String {
    let mut out = String::new();
    for (i, piece) in cfg.pieces.iter().enumerate() {
        out.push(match cfg.glue[i] {
            Gluing::Direct => '-',
            Gluing::Cylinder => '=',
        });
        out.push('(');
        match piece.kind {
            PieceKind::FigureEight { a_prime, a_dprime } => {
                out.push('F');
                out.push_str(&a_prime.to_string());
                out.push('+');
                out.push_str(&a_dprime.to_string());
            }
            PieceKind::PairOfHoles { b_prime, b_dprime } => {
                out.push('H');
                out.push_str(&b_prime.to_string());
                out.push(',');
                out.push_str(&b_dprime.to_string());
            }
        }
        if !piece.rest.is_empty() {
            out.push(';');
            let strs: Vec<String> = piece.rest.entries().iter().map(|e| e.to_string()).collect();
            out.push_str(&strs.join(","));
        }
        out.push(')');
    }
    out
}
