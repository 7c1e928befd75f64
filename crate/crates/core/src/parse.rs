//! Text forms: tuples are `(2,1)`, words are tuples joined by `.`.
//!
//! Whitespace is accepted between tokens. Error offsets are 1-based
//! character positions; running off the end reports `len + 1`.

use crate::error::{Error, Result};
use crate::scalar::Coord;

pub(crate) struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    pub(crate) fn new(src: &str) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    pub(crate) fn offset(&self) -> usize {
        self.pos + 1
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.offset(),
            message: message.into(),
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.chars.len()
    }

    pub(crate) fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{want}', found '{c}'"))),
            None => Err(self.error(format!("expected '{want}', found end of input"))),
        }
    }

    /// Parses `(c1,...,ck)` into raw coordinates; positivity is checked by
    /// the caller so the error names the coordinate index.
    pub(crate) fn tuple_coords<T: Coord>(&mut self) -> Result<Vec<T>> {
        self.expect('(')?;
        let mut coords = Vec::new();
        loop {
            coords.push(self.integer()?);
            self.skip_ws();
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(')') => {
                    self.pos += 1;
                    return Ok(coords);
                }
                Some(c) => return Err(self.error(format!("expected ',' or ')', found '{c}'"))),
                None => return Err(self.error("expected ',' or ')', found end of input")),
            }
        }
    }

    fn integer<T: Coord>(&mut self) -> Result<T> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(match self.peek() {
                Some(c) => self.error(format!("expected an integer, found '{c}'")),
                None => self.error("expected an integer, found end of input"),
            });
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse::<T>().map_err(|_| Error::Parse {
            offset: start + 1,
            message: format!("integer {digits} does not fit the coordinate type"),
        })
    }

    pub(crate) fn finish(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            let c = self.peek().unwrap_or(' ');
            Err(self.error(format!("unexpected trailing input '{c}'")))
        }
    }
}
