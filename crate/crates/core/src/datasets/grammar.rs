//! Text form `(n,g0;(d1,n1),(d2,n2),...)` with optional `(d,m)_r` repetition.

use std::fmt;
use std::str::FromStr;

use super::DataSet;
use crate::error::{Error, Result};

impl fmt::Display for DataSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};", self.n, self.g0)?;
        for (i, p) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({},{})", p.d, p.n)?;
        }
        write!(f, ")")
    }
}

impl FromStr for DataSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser::new(s).data_set()
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Self {
        Self {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn location(&self, pos: usize) -> (usize, usize) {
        let mut line = 1;
        let mut column = 1;
        for &c in &self.chars[..pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        (line, column)
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> Error {
        let (line, column) = self.location(pos);
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.error_at(self.pos, format!("expected '{want}', found '{c}'"))),
            None => Err(self.error_at(self.pos, format!("expected '{want}', found end of input"))),
        }
    }

    fn integer(&mut self) -> Result<(i64, usize)> {
        self.skip_ws();
        let start = self.pos;
        if self.chars.get(self.pos) == Some(&'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(match self.chars.get(self.pos) {
                Some(c) => self.error_at(self.pos, format!("expected an integer, found '{c}'")),
                None => self.error_at(self.pos, "expected an integer, found end of input"),
            });
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        let value = text
            .parse::<i64>()
            .map_err(|_| self.error_at(start, format!("integer {text} out of range")))?;
        Ok((value, start))
    }

    fn non_negative(&mut self, what: &str) -> Result<u64> {
        let (v, at) = self.integer()?;
        u64::try_from(v).map_err(|_| self.error_at(at, format!("{what} must be non-negative")))
    }

    fn data_set(&mut self) -> Result<DataSet> {
        self.expect('(')?;
        let n_at = {
            self.skip_ws();
            self.pos
        };
        let n = self.non_negative("degree n")?;
        self.expect(',')?;
        let g0 = self.non_negative("orbifold genus g0")?;
        self.expect(';')?;
        let mut pairs = Vec::new();
        if self.peek() != Some(')') {
            loop {
                self.pair(&mut pairs)?;
                match self.peek() {
                    Some(',') => self.pos += 1,
                    _ => break,
                }
            }
        }
        self.expect(')')?;
        if let Some(c) = self.peek() {
            return Err(self.error_at(self.pos, format!("unexpected trailing '{c}'")));
        }
        DataSet::new(n, g0, &pairs).map_err(|e| match e {
            Error::Malformed(m) => self.error_at(n_at, m),
            other => other,
        })
    }

    fn pair(&mut self, out: &mut Vec<(i64, i64)>) -> Result<()> {
        self.expect('(')?;
        let (d, _) = self.integer()?;
        self.expect(',')?;
        let (m, m_at) = self.integer()?;
        if m < 1 {
            return Err(self.error_at(m_at, "branch order must be positive"));
        }
        self.expect(')')?;
        let mut reps = 1;
        if self.peek() == Some('_') {
            self.pos += 1;
            let (r, r_at) = self.integer()?;
            if r < 1 {
                return Err(self.error_at(r_at, "repetition count must be positive"));
            }
            reps = r as usize;
        }
        out.extend(std::iter::repeat_n((d, m), reps));
        Ok(())
    }
}
