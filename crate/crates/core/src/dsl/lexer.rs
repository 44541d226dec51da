use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Character cursor with line/column tracking shared by the `.grp` and `.ring` parsers.
/// `#` starts a comment running to the end of the line.
pub(crate) struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
}

pub(crate) type Pos = (usize, usize);

impl Cursor {
    pub fn new(text: &str) -> Self {
        Cursor { chars: text.chars().collect(), pos: 0, line: 1, col: 1 }
    }

    pub fn position(&self) -> Pos {
        (self.line, self.col)
    }

    fn bump(&mut self) -> Option<char> {
        let c = *self.chars.get(self.pos)?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    pub fn skip_ws(&mut self) {
        while let Some(&c) = self.chars.get(self.pos) {
            if c == '#' {
                while let Some(c) = self.bump() {
                    if c == '\n' {
                        break;
                    }
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    /// Next character without skipping whitespace.
    pub fn peek_raw(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { line: self.line, col: self.col, msg: msg.into() })
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = self.peek().map_or("end of input".to_string(), |c| format!("`{c}`"));
            self.error(format!("expected `{c}`, found {found}"))
        }
    }

    pub fn peek_ident_start(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == '_')
    }

    pub fn ident(&mut self) -> Result<(String, Pos)> {
        if !self.peek_ident_start() {
            return self.error("expected identifier");
        }
        let start = self.position();
        let mut s = String::new();
        while let Some(c) = self.peek_raw() {
            if c.is_ascii_alphanumeric() || c == '_' || c == '\'' {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        Ok((s, start))
    }

    pub fn keyword(&mut self, kw: &str) -> Result<()> {
        let (w, (line, col)) = self.ident()?;
        if w == kw {
            Ok(())
        } else {
            Err(Error::Syntax { line, col, msg: format!("expected `{kw}`, found `{w}`") })
        }
    }

    /// A presentation name: any run of non-whitespace characters other than `{`.
    pub fn name(&mut self) -> Result<String> {
        self.skip_ws();
        let mut s = String::new();
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() || c == '{' {
                break;
            }
            s.push(c);
            self.bump();
        }
        if s.is_empty() {
            return self.error("expected a name");
        }
        Ok(s)
    }

    pub fn peek_digit(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit())
    }

    pub fn uint(&mut self) -> Result<BigInt> {
        if !self.peek_digit() {
            return self.error("expected integer");
        }
        let mut s = String::new();
        while let Some(c) = self.peek_raw() {
            if c.is_ascii_digit() {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        Ok(s.parse().expect("digits parse"))
    }

    /// Optionally signed integer.
    pub fn int(&mut self) -> Result<BigInt> {
        let neg = self.eat('-');
        let v = self.uint()?;
        Ok(if neg { -v } else { v })
    }
}
