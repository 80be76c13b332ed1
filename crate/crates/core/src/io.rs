//! Line-oriented text formats for keys and ciphertexts.
//!
//! Every artifact is a sequence of tagged lines (`tag word word ...`) and
//! embedded matrices (`rows cols` followed by one 0/1 string per row).
//! Parse errors carry the 1-based line number.

use std::fmt::Display;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::goppa::GoppaCode;
use crate::matrix::{BitMatrix, Permutation};

/// Space-separated rendering of a list.
pub(crate) fn join<T: Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Cursor over the lines of a text artifact.
pub(crate) struct TextReader<'a> {
    lines: Vec<&'a str>,
    pos: usize,
}

impl<'a> TextReader<'a> {
    pub(crate) fn new(text: &'a str) -> TextReader<'a> {
        TextReader { lines: text.lines().collect(), pos: 0 }
    }

    /// 1-based number of the next line.
    pub(crate) fn line_no(&self) -> usize {
        self.pos + 1
    }

    fn next_line(&mut self, what: &str) -> Result<&'a str> {
        let line = self
            .lines
            .get(self.pos)
            .ok_or_else(|| Error::parse(self.line_no(), format!("unexpected end of input, expected {what}")))?;
        self.pos += 1;
        Ok(line)
    }

    /// Consumes a line whose first word is `tag` and returns the remaining words.
    pub(crate) fn tagged(&mut self, tag: &str) -> Result<Vec<&'a str>> {
        let ln = self.line_no();
        let line = self.next_line(&format!("`{tag}`"))?;
        let mut words = line.split_whitespace();
        match words.next() {
            Some(w) if w == tag => Ok(words.collect()),
            _ => Err(Error::parse(ln, format!("expected a `{tag}` line"))),
        }
    }

    /// Consumes `tag key value` and parses the value.
    pub(crate) fn tagged_value<T: FromStr>(&mut self, tag: &str, key: &str) -> Result<T> {
        let ln = self.line_no();
        let words = self.tagged(tag)?;
        match words[..] {
            [k, v] if k == key => v.parse().map_err(|_| Error::parse(ln, format!("bad value `{v}` for `{key}`"))),
            _ => Err(Error::parse(ln, format!("expected `{tag} {key} <value>`"))),
        }
    }

    /// Parses `key=value` pairs of a header line into a lookup.
    pub(crate) fn header(&mut self, tag: &str) -> Result<Header> {
        let line = self.line_no();
        let words = self.tagged(tag)?;
        let mut pairs = Vec::new();
        for w in words {
            let (k, v) = w.split_once('=').ok_or_else(|| Error::parse(line, format!("expected key=value, found `{w}`")))?;
            pairs.push((k.to_owned(), v.to_owned()));
        }
        Ok(Header { line, pairs })
    }

    pub(crate) fn bit_matrix(&mut self) -> Result<BitMatrix> {
        let rest = self.lines[self.pos.min(self.lines.len())..].join("\n");
        let (m, used) = BitMatrix::from_text_at(&rest, self.line_no())?;
        self.pos += used;
        Ok(m)
    }

    /// `tag` followed by a hex string, decoded to bytes.
    pub(crate) fn hex(&mut self, tag: &str) -> Result<Vec<u8>> {
        let ln = self.line_no();
        let words = self.tagged(tag)?;
        hex::decode(words.concat()).map_err(|e| Error::parse(ln, format!("bad hex: {e}")))
    }

    pub(crate) fn indices(&mut self, tag: &str) -> Result<Vec<usize>> {
        let ln = self.line_no();
        self.tagged(tag)?
            .into_iter()
            .map(|w| w.parse().map_err(|_| Error::parse(ln, format!("`{w}` is not an index"))))
            .collect()
    }

    pub(crate) fn permutation(&mut self, tag: &str) -> Result<Permutation> {
        let ln = self.line_no();
        let v = self.indices(tag)?;
        Permutation::from_vec(v).map_err(|e| Error::parse(ln, e.to_string()))
    }

    /// The three-line Goppa description.
    pub(crate) fn goppa(&mut self) -> Result<GoppaCode> {
        let start = self.line_no();
        let end = (self.pos + 3).min(self.lines.len());
        let block = self.lines[self.pos..end].join("\n");
        self.pos = end;
        GoppaCode::from_text_at(&block, start)
    }

    /// Fails if anything but blank lines remains.
    pub(crate) fn finish(self) -> Result<()> {
        match self.lines[self.pos.min(self.lines.len())..].iter().position(|l| !l.trim().is_empty()) {
            Some(i) => Err(Error::parse(self.pos + i + 1, "trailing data")),
            None => Ok(()),
        }
    }
}

/// `key=value` pairs from a header line.
pub(crate) struct Header {
    line: usize,
    pairs: Vec<(String, String)>,
}

impl Header {
    pub(crate) fn get<T: FromStr>(&self, key: &str) -> Result<T> {
        let v = self
            .pairs
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v)
            .ok_or_else(|| Error::parse(self.line, format!("missing `{key}=`")))?;
        v.parse().map_err(|_| Error::parse(self.line, format!("bad value `{v}` for `{key}`")))
    }
}
