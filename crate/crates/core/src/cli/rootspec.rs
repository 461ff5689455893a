//! Recursive-descent parser for root specs such as `e1+e2`, `2e2`, `-e1+e3`.
//!
//! ```text
//! spec  := sign? term (sign term)*
//! term  := digits? 'e' digits
//! sign  := '+' | '-'
//! ```

use std::fmt;

use crate::QWeight;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSpecError {
    /// 0-based character offset.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for RootSpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for RootSpecError {}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, RootSpecError> {
        Err(RootSpecError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_spaces(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn sign(&mut self) -> Option<i64> {
        self.skip_spaces();
        let s = match self.peek()? {
            '+' => 1,
            '-' => -1,
            _ => return None,
        };
        self.pos += 1;
        Some(s)
    }

    fn digits(&mut self) -> Result<Option<u64>, RootSpecError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        match s.parse() {
            Ok(n) => Ok(Some(n)),
            Err(_) => Err(RootSpecError {
                position: start,
                message: format!("number {s} is too large"),
            }),
        }
    }

    fn term(&mut self) -> Result<(usize, i64), RootSpecError> {
        self.skip_spaces();
        let coeff_pos = self.pos;
        let coeff = self.digits()?.unwrap_or(1);
        if coeff == 0 || coeff > i64::MAX as u64 {
            return Err(RootSpecError {
                position: coeff_pos,
                message: format!("coefficient {coeff} is not allowed"),
            });
        }
        match self.peek() {
            Some('e') => self.pos += 1,
            Some(c) => return self.error(format!("expected 'e', found '{c}'")),
            None => return self.error("expected 'e', found end of input"),
        }
        let index_pos = self.pos;
        let index = match self.digits()? {
            Some(i) if i >= 1 => i as usize,
            Some(_) => {
                return Err(RootSpecError {
                    position: index_pos,
                    message: "coordinate indices start at 1".into(),
                })
            }
            None => return self.error("expected a coordinate index after 'e'"),
        };
        Ok((index, coeff as i64))
    }

    fn spec(&mut self) -> Result<Vec<(usize, i64)>, RootSpecError> {
        let mut terms = Vec::new();
        let first = self.sign().unwrap_or(1);
        let (i, c) = self.term()?;
        terms.push((i, first * c));
        loop {
            self.skip_spaces();
            if self.peek().is_none() {
                return Ok(terms);
            }
            let Some(s) = self.sign() else {
                let c = self.peek().unwrap();
                return self.error(format!("expected '+' or '-', found '{c}'"));
            };
            let (i, c) = self.term()?;
            terms.push((i, s * c));
        }
    }
}

/// Parses `text` into a weight of the given rank.
pub fn parse_root_spec(text: &str, rank: usize) -> Result<QWeight, RootSpecError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        text,
    };
    if p.text.trim().is_empty() {
        return p.error("empty root spec");
    }
    let terms = p.spec()?;
    let mut coords = vec![0i64; rank];
    for (index, c) in terms {
        if index > rank {
            return Err(RootSpecError {
                position: 0,
                message: format!("e{index} exceeds rank {rank}"),
            });
        }
        coords[index - 1] += c;
    }
    Ok(QWeight::from_ints(&coords))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> QWeight {
        QWeight::from_ints(c)
    }

    #[test]
    fn accepted_forms() {
        assert_eq!(parse_root_spec("e1+e2", 2).unwrap(), w(&[1, 1]));
        assert_eq!(parse_root_spec("2e2", 2).unwrap(), w(&[0, 2]));
        assert_eq!(parse_root_spec("-e2 + e3", 3).unwrap(), w(&[0, -1, 1]));
        assert_eq!(parse_root_spec("-2e1", 1).unwrap(), w(&[-2]));
    }

    #[test]
    fn error_positions() {
        let e = parse_root_spec("e1+x2", 2).unwrap_err();
        assert_eq!(e.position, 3);
        let e = parse_root_spec("e1+", 2).unwrap_err();
        assert_eq!(e.position, 3);
        let e = parse_root_spec("e1e2", 2).unwrap_err();
        assert_eq!(e.position, 2);
        let e = parse_root_spec("e0", 2).unwrap_err();
        assert_eq!(e.position, 1);
        assert!(parse_root_spec("", 2).is_err());
        assert!(parse_root_spec("e3", 2).unwrap_err().message.contains("exceeds rank"));
    }

    #[test]
    fn round_trips_formatted_roots() {
        let rs = crate::QRootSystem::new(3).unwrap();
        for r in rs.roots() {
            let text = crate::rootsys::format_root(r);
            assert_eq!(&parse_root_spec(&text, 3).unwrap(), r, "{text}");
        }
    }
}
