//! Line-oriented text format.
//!
//! One term per line: `<coeff> <word>` for a polynomial, or
//! `<coeff> <word> | <word>` for a 2-tensor polynomial. Words are
//! dot-separated letters (`x1.y2.x1`), with `1` for the empty word.
//! Blank lines and lines starting with `#` are ignored.

use super::poly::NcPoly;
use super::tensor::TensorPoly2;
use super::word::Word;
use crate::error::{Error, Result};
use crate::exact::ExactScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedPoly {
    Plain(NcPoly),
    Tensor(TensorPoly2),
}

pub fn format_poly(p: &NcPoly) -> String {
    let mut out = String::new();
    for (w, c) in p.terms() {
        out.push_str(&format!("{c} {w}\n"));
    }
    out
}

pub fn format_tensor(t: &TensorPoly2) -> String {
    let mut out = String::new();
    for (a, b, c) in t.terms() {
        out.push_str(&format!("{c} {a} | {b}\n"));
    }
    out
}

pub fn parse(text: &str) -> Result<ParsedPoly> {
    let mut plain = NcPoly::zero();
    let mut tensor = TensorPoly2::zero();
    let mut kind: Option<bool> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let (coeff, rest) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| err(format!("expected `<coeff> <word>`, got {line:?}")))?;
        let c: ExactScalar = coeff
            .parse()
            .map_err(|_| err(format!("bad coefficient {coeff:?}")))?;
        let is_tensor = rest.contains('|');
        if *kind.get_or_insert(is_tensor) != is_tensor {
            return Err(err("mixes plain and tensor terms".into()));
        }
        let word = |s: &str| {
            s.trim()
                .parse::<Word>()
                .map_err(|_| err(format!("bad word {:?}", s.trim())))
        };
        if is_tensor {
            let (a, b) = rest.split_once('|').expect("checked above");
            if b.contains('|') {
                return Err(err("more than two tensor slots".into()));
            }
            tensor.add_term(word(a)?, word(b)?, c);
        } else {
            plain.add_term(word(rest)?, c);
        }
    }
    Ok(match kind {
        Some(true) => ParsedPoly::Tensor(tensor),
        _ => ParsedPoly::Plain(plain),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "1 1\n-3/2 x1.y2.x1\n";
        match parse(text).unwrap() {
            ParsedPoly::Plain(p) => assert_eq!(format_poly(&p), text),
            _ => panic!("expected a plain polynomial"),
        }
        let text = "1 1 | x1\n2 x1 | y1.y1\n";
        match parse(text).unwrap() {
            ParsedPoly::Tensor(t) => assert_eq!(format_tensor(&t), text),
            _ => panic!("expected a tensor polynomial"),
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse("# c\n1 x1\n1 x1 | x2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        assert!(matches!(parse("q x1").unwrap_err(), Error::Parse { line: 1, .. }));
        assert!(parse("1 x1 | x2 | x3").is_err());
    }
}
