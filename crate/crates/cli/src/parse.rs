//! Corpus files and construction expressions.
//!
//! ```text
//! Ring  := "Z(" int ")" | "Prod(" Ring "," Ring ")" | "M(" int "," Ring ")"
//!        | "UT(" int "," Ring ")" | "GR(" Ring "," Group ")"
//!        | "Quot(" Ring ",[" ints "])"
//! Group := "C(" int ")" | "E(" prime "," int ")" | "GProd(" Group "," Group ")"
//! ```
//!
//! A corpus file holds one expression per line. Whitespace is ignored,
//! `#` starts a comment, and `cap: N` / `out: PATH` lines set the size cap
//! and output path.

use std::fmt;

use dtring_core::group::is_prime;
use dtring_core::{GroupExpr, RingError, RingExpr};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    line: usize,
    src: &'a str,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        let chars = src
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i + 1, c))
            .collect();
        Self { chars, pos: 0, line, src }
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.src.chars().count() + 1, |&(col, _)| col)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.column(), message)
    }

    fn error_at(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn expect(&mut self, want: char) -> PResult<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{want}`, found end of input"))),
        }
    }

    fn ident(&mut self) -> PResult<(usize, String)> {
        let col = self.column();
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_alphabetic) {
            s.push(c);
            self.pos += 1;
        }
        if s.is_empty() {
            return Err(match self.peek() {
                Some(c) => self.error(format!("expected a constructor name, found `{c}`")),
                None => self.error("expected a constructor name, found end of input"),
            });
        }
        Ok((col, s))
    }

    fn int(&mut self) -> PResult<(usize, u64)> {
        let col = self.column();
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        if s.is_empty() {
            return Err(match self.peek() {
                Some(c) => self.error(format!("expected an integer, found `{c}`")),
                None => self.error("expected an integer, found end of input"),
            });
        }
        s.parse()
            .map(|n| (col, n))
            .map_err(|_| self.error_at(col, "integer too large"))
    }

    fn size(&mut self, min: u64, what: &str) -> PResult<usize> {
        let (col, n) = self.int()?;
        if n < min {
            return Err(self.error_at(col, format!("{what} must be at least {min}")));
        }
        usize::try_from(n).map_err(|_| self.error_at(col, "integer too large"))
    }

    fn ring(&mut self) -> PResult<RingExpr> {
        let (col, name) = self.ident()?;
        self.expect('(')?;
        let e = match name.as_str() {
            "Z" => RingExpr::Zn(self.size(2, "n in Z(n)")?),
            "Prod" => {
                let a = self.ring()?;
                self.expect(',')?;
                RingExpr::Prod(Box::new(a), Box::new(self.ring()?))
            }
            "M" | "UT" => {
                let k = self.size(1, "matrix size")?;
                self.expect(',')?;
                let r = Box::new(self.ring()?);
                if name == "M" {
                    RingExpr::Matrix(k, r)
                } else {
                    RingExpr::UpperTriangular(k, r)
                }
            }
            "GR" => {
                let r = self.ring()?;
                self.expect(',')?;
                RingExpr::GroupRing(Box::new(r), self.group()?)
            }
            "Quot" => {
                let r = self.ring()?;
                self.expect(',')?;
                self.expect('[')?;
                let mut gens = Vec::new();
                if self.peek() != Some(']') {
                    loop {
                        gens.push(self.size(0, "generator")?);
                        if self.peek() != Some(',') {
                            break;
                        }
                        self.pos += 1;
                    }
                }
                self.expect(']')?;
                RingExpr::Quot(Box::new(r), gens)
            }
            _ => return Err(self.error_at(col, format!("unknown ring constructor `{name}`"))),
        };
        self.expect(')')?;
        Ok(e)
    }

    fn group(&mut self) -> PResult<GroupExpr> {
        let (col, name) = self.ident()?;
        self.expect('(')?;
        let g = match name.as_str() {
            "C" => GroupExpr::Cyclic(self.size(1, "n in C(n)")?),
            "E" => {
                let (pcol, p) = self.int()?;
                if !is_prime(p) {
                    return Err(self.error_at(pcol, format!("{p} is not prime")));
                }
                self.expect(',')?;
                GroupExpr::Elementary(p, self.size(1, "k in E(p,k)")?)
            }
            "GProd" => {
                let a = self.group()?;
                self.expect(',')?;
                GroupExpr::Product(Box::new(a), Box::new(self.group()?))
            }
            _ => return Err(self.error_at(col, format!("unknown group constructor `{name}`"))),
        };
        self.expect(')')?;
        Ok(g)
    }

    fn finish(&self) -> PResult<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected `{c}` after expression"))),
        }
    }
}

fn parse_line(src: &str, line: usize) -> PResult<RingExpr> {
    let mut p = Parser::new(src, line);
    let e = p.ring()?;
    p.finish()?;
    Ok(e)
}

/// Parses a single ring expression such as `GR(Z(2),C(4))`.
pub fn parse_expr(src: &str) -> PResult<RingExpr> {
    parse_line(src, 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusLine {
    pub line: usize,
    pub expr: RingExpr,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub entries: Vec<CorpusLine>,
    pub size_cap: Option<usize>,
    pub output_path: Option<String>,
}

impl CorpusSpec {
    pub fn exprs(&self) -> Vec<RingExpr> {
        self.entries.iter().map(|e| e.expr.clone()).collect()
    }

    /// Entries whose order is known from the expression and exceeds `cap`.
    pub fn oversized(&self, cap: usize) -> Vec<(&CorpusLine, RingError)> {
        self.entries
            .iter()
            .filter_map(|e| e.expr.check_static_cap(cap).err().map(|err| (e, err)))
            .collect()
    }
}

fn directive(body: &str) -> Option<(&str, &str)> {
    let (key, value) = body.split_once(':')?;
    let key = key.trim();
    (!key.is_empty() && key.chars().all(|c| c.is_ascii_alphabetic() || c == '_'))
        .then(|| (key, value.trim()))
}

/// Parses a whole corpus file. Every line is parsed before anything is
/// built.
pub fn parse_corpus_spec(text: &str) -> PResult<CorpusSpec> {
    let mut spec = CorpusSpec {
        entries: Vec::new(),
        size_cap: None,
        output_path: None,
    };
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        if let Some((key, value)) = directive(body) {
            let column = raw.find(key).unwrap_or(0) + 1;
            let err = |message: String| ParseError { line, column, message };
            match key {
                "cap" => {
                    let cap = value
                        .parse()
                        .map_err(|_| err(format!("cap must be a positive integer, got `{value}`")))?;
                    spec.size_cap = Some(cap);
                }
                "out" => spec.output_path = Some(value.to_string()),
                _ => return Err(err(format!("unknown directive `{key}`"))),
            }
            continue;
        }
        let expr = parse_line(body, line)?;
        spec.entries.push(CorpusLine { line, expr });
    }
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expressions_round_trip() {
        for src in [
            "Z(4)",
            "GR(Z(2),C(4))",
            "Quot(Z(6),[2])",
            "Prod(Z(2),Z(7))",
            "M(2,Z(2))",
            "UT(2,Z(3))",
            "GR(Z(2),GProd(C(2),C(2)))",
            "GR(Z(2),E(2,2))",
            "Quot(Z(4),[])",
            "Quot(UT(2,Z(2)),[2,4])",
        ] {
            assert_eq!(parse_expr(src).unwrap().to_string(), src);
        }
        assert_eq!(parse_expr(" GR ( Z(2) ,\tC( 4 ) ) ").unwrap().to_string(), "GR(Z(2),C(4))");
    }

    #[test]
    fn quotient_example() {
        let r = parse_expr("Quot(Z(6),[2])").unwrap().build(4096).unwrap();
        assert_eq!(r.order(), 2);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_expr("Foo(2)").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        assert!(e.message.contains("unknown ring constructor `Foo`"));

        let e = parse_expr("GR(Z(2),Q(4))").unwrap_err();
        assert_eq!(e.column, 9);
        assert!(e.message.contains("unknown group constructor"));

        let e = parse_expr("Z(4").unwrap_err();
        assert_eq!(e.column, 4);

        let e = parse_expr("Z(4))").unwrap_err();
        assert_eq!(e.column, 5);

        let e = parse_expr("GR(Z(2),E(4,2))").unwrap_err();
        assert!(e.message.contains("not prime"));

        assert!(parse_expr("Z(1)").is_err());
        assert!(parse_expr("Z(x)").is_err());
    }

    #[test]
    fn corpus_files() {
        let text = "# comment\ncap: 100\n\nZ(4)  # trailing\n  GR(Z(2), C(4))\nout: report.json\n";
        let spec = parse_corpus_spec(text).unwrap();
        assert_eq!(spec.size_cap, Some(100));
        assert_eq!(spec.output_path.as_deref(), Some("report.json"));
        assert_eq!(spec.entries.len(), 2);
        assert_eq!(spec.entries[1].line, 5);
        assert!(spec.oversized(100).is_empty());
        assert_eq!(spec.oversized(10).len(), 1);

        let e = parse_corpus_spec("Z(2)\n\n  Prod(Z(2);Z(3))\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 12));
        let e = parse_corpus_spec("speed: 3\n").unwrap_err();
        assert!(e.message.contains("unknown directive"));
    }

    #[test]
    fn default_corpus_parses() {
        let spec = parse_corpus_spec(crate::DEFAULT_CORPUS).unwrap();
        assert_eq!(spec.entries.len(), 28);
        assert!(spec.oversized(spec.size_cap.unwrap()).is_empty());
    }
}
