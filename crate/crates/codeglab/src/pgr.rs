//! The `.pgr` permutation-generator text format.
//!
//! ```text
//! 3
//! #! order=6
//! # the symmetric group on three points
//! 2 1 3
//! 2 3 1
//! ```
//!
//! Line 1 holds the degree `n`. Header lines `#! order=<int>` and
//! `#! simple=<true|false>` may follow, before the first generator. Every
//! other non-comment line is an image array of `n` one-based integers
//! separated by single spaces. Lines end in LF only, blank lines are not
//! allowed, and the file may end with at most one LF.

use std::fmt;

use codeglab_core::{structure, PermGroup, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PgrFile {
    pub degree: usize,
    pub order: Option<u64>,
    pub simple: Option<bool>,
    pub generators: Vec<Permutation>,
    order_line: usize,
    simple_line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PgrErrorKind {
    #[error("empty file")]
    Empty,
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("expected {expected} images, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("image {value} out of range 1..={degree}")]
    OutOfRange { value: usize, degree: usize },
    #[error("duplicate image {value}")]
    DuplicateImage { value: usize },
    #[error("order assertion failed: declared {declared}, generated {actual}")]
    OrderAssertion { declared: u64, actual: u64 },
    #[error("simplicity assertion failed: declared {declared}, found {actual}")]
    SimpleAssertion { declared: bool, actual: bool },
    #[error("group construction failed: {0}")]
    Group(codeglab_core::Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PgrError {
    pub line: usize,
    pub kind: PgrErrorKind,
}

impl fmt::Display for PgrError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.kind)
    }
}

impl std::error::Error for PgrError {}

fn err(line: usize, kind: PgrErrorKind) -> PgrError {
    PgrError { line, kind }
}

fn malformed(line: usize, msg: impl Into<String>) -> PgrError {
    err(line, PgrErrorKind::Malformed(msg.into()))
}

fn parse_decimal(tok: &str, line: usize) -> Result<u64, PgrError> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed(line, format!("not a decimal integer: {tok:?}")));
    }
    tok.parse().map_err(|_| malformed(line, format!("integer too large: {tok}")))
}

impl PgrFile {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Self {
        PgrFile {
            degree,
            order: None,
            simple: None,
            generators,
            order_line: 0,
            simple_line: 0,
        }
    }

    pub fn parse(text: &str) -> Result<PgrFile, PgrError> {
        if text.is_empty() {
            return Err(err(1, PgrErrorKind::Empty));
        }
        let body = text.strip_suffix('\n').unwrap_or(text);
        let mut lines = body.split('\n').enumerate().map(|(i, l)| (i + 1, l));
        let (_, first) = lines.next().unwrap();
        check_line_shape(1, first)?;
        let degree = parse_decimal(first, 1)? as usize;
        if degree == 0 {
            return Err(malformed(1, "degree must be at least 1"));
        }
        let mut file = PgrFile::new(degree, Vec::new());
        for (no, line) in lines {
            check_line_shape(no, line)?;
            if let Some(header) = line.strip_prefix("#!") {
                if !file.generators.is_empty() {
                    return Err(malformed(no, "header after generator lines"));
                }
                file.parse_header(no, header)?;
                continue;
            }
            let content = match line.find('#') {
                Some(0) => continue,
                Some(i) => line[..i].trim_end_matches(' '),
                None => line,
            };
            if content.is_empty() {
                return Err(malformed(no, "no images before comment"));
            }
            file.generators.push(parse_images(no, content, degree)?);
        }
        Ok(file)
    }

    fn parse_header(&mut self, no: usize, header: &str) -> Result<(), PgrError> {
        let (key, value) = header
            .strip_prefix(' ')
            .and_then(|h| h.split_once('='))
            .ok_or_else(|| malformed(no, "header must read \"#! key=value\""))?;
        match key {
            "order" if self.order.is_none() => {
                self.order = Some(parse_decimal(value, no)?);
                self.order_line = no;
            }
            "simple" if self.simple.is_none() => {
                self.simple = Some(match value {
                    "true" => true,
                    "false" => false,
                    _ => return Err(malformed(no, format!("simple must be true or false, got {value:?}"))),
                });
                self.simple_line = no;
            }
            "order" | "simple" => return Err(malformed(no, format!("duplicate header {key}"))),
            _ => return Err(malformed(no, format!("unknown header {key:?}"))),
        }
        Ok(())
    }

    /// Canonical text: degree, headers, then one line per generator.
    pub fn serialize(&self) -> String {
        let mut out = format!("{}\n", self.degree);
        if let Some(o) = self.order {
            out.push_str(&format!("#! order={o}\n"));
        }
        if let Some(s) = self.simple {
            out.push_str(&format!("#! simple={s}\n"));
        }
        for g in &self.generators {
            let imgs: Vec<String> = g.one_based().iter().map(|x| x.to_string()).collect();
            out.push_str(&imgs.join(" "));
            out.push('\n');
        }
        out
    }

    /// Builds the group and enforces the header assertions.
    pub fn build(&self) -> Result<PermGroup, PgrError> {
        let last = self.order_line.max(self.simple_line).max(1);
        let g = PermGroup::new(self.degree, self.generators.clone()).map_err(|e| err(last, PgrErrorKind::Group(e)))?;
        if let Some(declared) = self.order {
            if g.order() != declared {
                return Err(err(
                    self.order_line,
                    PgrErrorKind::OrderAssertion {
                        declared,
                        actual: g.order(),
                    },
                ));
            }
        }
        if let Some(declared) = self.simple {
            let actual = structure::is_simple(&g).map_err(|e| err(self.simple_line, PgrErrorKind::Group(e)))?;
            if actual != declared {
                return Err(err(self.simple_line, PgrErrorKind::SimpleAssertion { declared, actual }));
            }
        }
        Ok(g)
    }
}

fn check_line_shape(no: usize, line: &str) -> Result<(), PgrError> {
    if line.is_empty() {
        return Err(malformed(no, "blank line"));
    }
    if line.contains('\r') {
        return Err(malformed(no, "carriage return"));
    }
    if line.ends_with([' ', '\t']) {
        return Err(malformed(no, "trailing whitespace"));
    }
    Ok(())
}

fn parse_images(no: usize, content: &str, degree: usize) -> Result<Permutation, PgrError> {
    let tokens: Vec<&str> = content.split(' ').collect();
    if tokens.iter().any(|t| t.is_empty()) {
        return Err(malformed(no, "images must be separated by single spaces"));
    }
    if tokens.len() != degree {
        return Err(err(
            no,
            PgrErrorKind::WrongLength {
                expected: degree,
                found: tokens.len(),
            },
        ));
    }
    let mut seen = vec![false; degree];
    let mut images = Vec::with_capacity(degree);
    for tok in tokens {
        let v = parse_decimal(tok, no)? as usize;
        if v == 0 || v > degree {
            return Err(err(no, PgrErrorKind::OutOfRange { value: v, degree }));
        }
        if std::mem::replace(&mut seen[v - 1], true) {
            return Err(err(no, PgrErrorKind::DuplicateImage { value: v }));
        }
        images.push(v);
    }
    Ok(Permutation::from_one_based(&images).expect("checked bijection"))
}
