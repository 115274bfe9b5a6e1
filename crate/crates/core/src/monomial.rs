//! Monomials in the entries of an orthogonal matrix, and their text form.
//!
//! The grammar is a whitespace-separated list of terms, each `O(i,j)` or
//! `O(i,j)^k` with `i, j, k >= 1`. Juxtaposed terms without whitespace
//! (`O(1,1)O(2,1)`) are accepted as well.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// One factor `O(row, col)^power`. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub row: usize,
    pub col: usize,
    pub power: u32,
}

impl Factor {
    pub fn new(row: usize, col: usize, power: u32) -> Self {
        Self { row, col, power }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonomialError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("index must be >= 1 (found 0 at position {position})")]
    ZeroIndex { position: usize },
}

impl MonomialError {
    /// Byte offset into the input where the problem was found.
    pub fn position(&self) -> usize {
        match self {
            MonomialError::Syntax { position, .. } | MonomialError::ZeroIndex { position } => {
                *position
            }
        }
    }
}

/// A normalized product of matrix entries: `(row, col)` pairs are unique,
/// powers are positive and factors are sorted by `(row, col)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<Factor>,
}

impl Monomial {
    /// Builds a monomial, merging repeated `(row, col)` pairs and dropping
    /// zero powers. Panics on a zero index; use [`Monomial::try_new`] for
    /// untrusted input.
    pub fn new(factors: impl IntoIterator<Item = Factor>) -> Self {
        Self::try_new(factors).expect("monomial indices must be >= 1")
    }

    pub fn try_new(factors: impl IntoIterator<Item = Factor>) -> Result<Self, MonomialError> {
        let mut merged: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for f in factors {
            if f.row == 0 || f.col == 0 {
                return Err(MonomialError::ZeroIndex { position: 0 });
            }
            *merged.entry((f.row, f.col)).or_insert(0) += f.power;
        }
        let factors = merged
            .into_iter()
            .filter(|&(_, p)| p > 0)
            .map(|((row, col), power)| Factor { row, col, power })
            .collect();
        Ok(Self { factors })
    }

    /// Convenience constructor from `(row, col, power)` triples.
    pub fn from_triples(triples: &[(usize, usize, u32)]) -> Self {
        Self::new(triples.iter().map(|&(r, c, p)| Factor::new(r, c, p)))
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// Total degree `p`, the sum of all powers.
    pub fn order(&self) -> u32 {
        self.factors.iter().map(|f| f.power).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Swaps row and column of every factor.
    pub fn transpose(&self) -> Self {
        Self::new(
            self.factors
                .iter()
                .map(|f| Factor::new(f.col, f.row, f.power)),
        )
    }

    /// Applies index maps to rows and columns. The maps receive and return
    /// 1-based indices.
    pub fn relabel(&self, rows: impl Fn(usize) -> usize, cols: impl Fn(usize) -> usize) -> Self {
        Self::new(
            self.factors
                .iter()
                .map(|f| Factor::new(rows(f.row), cols(f.col), f.power)),
        )
    }

    pub fn max_row(&self) -> usize {
        self.factors.iter().map(|f| f.row).max().unwrap_or(0)
    }

    pub fn max_col(&self) -> usize {
        self.factors.iter().map(|f| f.col).max().unwrap_or(0)
    }

    /// Evaluates the monomial on a row-major matrix with `stride` columns.
    pub fn eval_f64(&self, matrix: &[f64], stride: usize) -> f64 {
        self.factors
            .iter()
            .map(|f| matrix[(f.row - 1) * stride + (f.col - 1)].powi(f.power as i32))
            .product()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, factor) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "O({},{})", factor.row, factor.col)?;
            if factor.power != 1 {
                write!(f, "^{}", factor.power)?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Monomial {
    type Err = MonomialError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_monomial(s)
    }
}

/// Parses the monomial text grammar and returns the normalized monomial.
pub fn parse_monomial(text: &str) -> Result<Monomial, MonomialError> {
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let mut factors = Vec::new();
    parser.skip_ws();
    while !parser.at_end() {
        factors.push(parser.term()?);
        parser.skip_ws();
    }
    Monomial::try_new(factors)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> MonomialError {
        MonomialError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), MonomialError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", byte as char)))
        }
    }

    fn number(&mut self) -> Result<(usize, usize), MonomialError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        let value = digits.parse::<usize>().map_err(|_| MonomialError::Syntax {
            position: start,
            message: "number out of range".into(),
        })?;
        Ok((value, start))
    }

    fn index(&mut self) -> Result<usize, MonomialError> {
        self.skip_ws();
        let (value, start) = self.number()?;
        if value == 0 {
            return Err(MonomialError::ZeroIndex { position: start });
        }
        self.skip_ws();
        Ok(value)
    }

    fn term(&mut self) -> Result<Factor, MonomialError> {
        self.expect(b'O')?;
        self.expect(b'(')?;
        let row = self.index()?;
        self.expect(b',')?;
        let col = self.index()?;
        self.expect(b')')?;
        let mut power = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let (value, start) = self.number()?;
            if value == 0 {
                return Err(MonomialError::Syntax {
                    position: start,
                    message: "exponent must be >= 1".into(),
                });
            }
            power = u32::try_from(value).map_err(|_| MonomialError::Syntax {
                position: start,
                message: "exponent out of range".into(),
            })?;
        }
        Ok(Factor { row, col, power })
    }
}
