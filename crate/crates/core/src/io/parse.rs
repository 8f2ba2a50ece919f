use std::collections::HashMap;

use thiserror::Error;

use crate::field::FieldSpec;
use crate::io::document::{
    ArrowDecl, Document, MapDecl, ModuleDecl, Pos, RelationDecl, Scalar, TermDecl,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    SyntaxError,
    UnknownArrow,
    UnknownVertex,
    NonComposablePath,
    BadMatrixShape,
    DuplicateName,
    FieldMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {kind:?}: {message}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(kind: ParseErrorKind, pos: Pos, message: impl Into<String>) -> Self {
        ParseError {
            kind,
            line: pos.line,
            col: pos.col,
            message: message.into(),
        }
    }
}

type PResult<T> = Result<T, ParseError>;

#[derive(Clone, Copy)]
enum Section {
    Header,
    Quiver,
    Relations,
    Module(usize),
}

/// Parses the line-oriented algebra/module format. Never panics: every
/// input yields a `Document` or a positioned `ParseError`.
pub fn parse_document(text: &str) -> PResult<Document> {
    let mut doc = Document {
        name: None,
        field: FieldSpec::Rationals,
        max_length: None,
        vertices: Vec::new(),
        arrows: Vec::new(),
        relations: Vec::new(),
        modules: Vec::new(),
    };
    let mut field_seen = false;
    let mut section = Section::Header;
    // module index -> declared dimension per vertex name
    let mut module_dims: Vec<Option<HashMap<String, usize>>> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let content = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let mut cur = Cursor::new(content, line_no);
        cur.skip_ws();
        if cur.at_end() {
            continue;
        }
        let start = cur.pos();
        let word = cur.peek_word();
        match word.as_str() {
            "name" => {
                cur.take_word();
                cur.skip_ws();
                let p = cur.pos();
                let mut id = String::new();
                while let Some(c) = cur
                    .peek()
                    .filter(|&c| is_ident_char(c) || c == '-' || c == '.')
                {
                    id.push(c);
                    cur.bump();
                }
                if id.is_empty() {
                    return Err(ParseError::new(
                        ParseErrorKind::SyntaxError,
                        p,
                        "expected document name",
                    ));
                }
                doc.name = Some(id);
                cur.expect_end()?;
            }
            "field" => {
                cur.take_word();
                if field_seen {
                    return Err(ParseError::new(
                        ParseErrorKind::FieldMismatch,
                        start,
                        "field declared twice",
                    ));
                }
                field_seen = true;
                cur.skip_ws();
                let kind_pos = cur.pos();
                let kind = cur.expect_ident("field kind")?;
                doc.field = match kind.as_str() {
                    "Q" => FieldSpec::Rationals,
                    "F" => {
                        let p = cur.expect_uint("characteristic")?;
                        let p = u32::try_from(p).map_err(|_| {
                            ParseError::new(
                                ParseErrorKind::FieldMismatch,
                                kind_pos,
                                "modulus too large",
                            )
                        })?;
                        FieldSpec::Prime(p).validate().map_err(|e| {
                            ParseError::new(ParseErrorKind::FieldMismatch, kind_pos, e.to_string())
                        })?
                    }
                    other => {
                        return Err(ParseError::new(
                            ParseErrorKind::SyntaxError,
                            kind_pos,
                            format!("unknown field kind {other}"),
                        ))
                    }
                };
                cur.expect_end()?;
            }
            "max-length" => {
                cur.take_word();
                let n = cur.expect_uint("max-length")?;
                doc.max_length = Some(n as usize);
                cur.expect_end()?;
            }
            "quiver" => {
                cur.take_word();
                cur.expect_end()?;
                section = Section::Quiver;
            }
            "relations" => {
                cur.take_word();
                cur.expect_end()?;
                section = Section::Relations;
            }
            "module" => {
                cur.take_word();
                let name = cur.expect_ident("module name")?;
                cur.expect_end()?;
                if doc.modules.iter().any(|m| m.name == name) {
                    return Err(ParseError::new(
                        ParseErrorKind::DuplicateName,
                        start,
                        format!("module {name} declared twice"),
                    ));
                }
                doc.modules.push(ModuleDecl {
                    name,
                    dims: Vec::new(),
                    maps: Vec::new(),
                    pos: start,
                });
                module_dims.push(None);
                section = Section::Module(doc.modules.len() - 1);
            }
            "vertex" if matches!(section, Section::Quiver) => {
                cur.take_word();
                let id = cur.expect_ident("vertex id")?;
                cur.expect_end()?;
                if doc.vertices.contains(&id) {
                    return Err(ParseError::new(
                        ParseErrorKind::DuplicateName,
                        start,
                        format!("vertex {id} declared twice"),
                    ));
                }
                doc.vertices.push(id);
            }
            "arrow" if matches!(section, Section::Quiver) => {
                cur.take_word();
                let name = cur.expect_ident("arrow name")?;
                let mut ends = Vec::new();
                for what in ["source vertex", "target vertex"] {
                    cur.skip_ws();
                    let p = cur.pos();
                    let v = cur.expect_ident(what)?;
                    if !doc.vertices.contains(&v) {
                        return Err(ParseError::new(
                            ParseErrorKind::UnknownVertex,
                            p,
                            format!("unknown vertex {v}"),
                        ));
                    }
                    ends.push(v);
                }
                cur.expect_end()?;
                if doc.arrows.iter().any(|a| a.name == name) {
                    return Err(ParseError::new(
                        ParseErrorKind::DuplicateName,
                        start,
                        format!("arrow {name} declared twice"),
                    ));
                }
                let target = ends.pop().unwrap();
                let source = ends.pop().unwrap();
                doc.arrows.push(ArrowDecl {
                    name,
                    source,
                    target,
                    pos: start,
                });
            }
            "dim" if matches!(section, Section::Module(_)) => {
                let Section::Module(mi) = section else {
                    unreachable!()
                };
                cur.take_word();
                if module_dims[mi].is_some() {
                    return Err(ParseError::new(
                        ParseErrorKind::DuplicateName,
                        start,
                        "dim declared twice",
                    ));
                }
                let mut dims = Vec::new();
                let mut seen = HashMap::new();
                loop {
                    cur.skip_ws();
                    if cur.at_end() {
                        break;
                    }
                    let p = cur.pos();
                    let v = cur.expect_ident("vertex")?;
                    if !doc.vertices.contains(&v) {
                        return Err(ParseError::new(
                            ParseErrorKind::UnknownVertex,
                            p,
                            format!("unknown vertex {v}"),
                        ));
                    }
                    cur.expect_char('=')?;
                    let d = cur.expect_uint("dimension")? as usize;
                    if seen.insert(v.clone(), d).is_some() {
                        return Err(ParseError::new(
                            ParseErrorKind::DuplicateName,
                            p,
                            format!("vertex {v} listed twice"),
                        ));
                    }
                    dims.push((v, d));
                }
                doc.modules[mi].dims = dims;
                module_dims[mi] = Some(seen);
            }
            "map" if matches!(section, Section::Module(_)) => {
                let Section::Module(mi) = section else {
                    unreachable!()
                };
                cur.take_word();
                cur.skip_ws();
                let apos = cur.pos();
                let arrow = cur.expect_ident("arrow name")?;
                let Some(decl) = doc.arrows.iter().find(|a| a.name == arrow) else {
                    return Err(ParseError::new(
                        ParseErrorKind::UnknownArrow,
                        apos,
                        format!("unknown arrow {arrow}"),
                    ));
                };
                if doc.modules[mi].maps.iter().any(|m| m.arrow == arrow) {
                    return Err(ParseError::new(
                        ParseErrorKind::DuplicateName,
                        apos,
                        format!("map {arrow} given twice"),
                    ));
                }
                cur.skip_ws();
                let mpos = cur.pos();
                let rows = cur.matrix()?;
                cur.expect_end()?;
                let dims = module_dims[mi].clone().unwrap_or_default();
                let ds = dims.get(&decl.source).copied().unwrap_or(0);
                let dt = dims.get(&decl.target).copied().unwrap_or(0);
                if rows.len() != dt || rows.iter().any(|r| r.len() != ds) {
                    return Err(ParseError::new(
                        ParseErrorKind::BadMatrixShape,
                        mpos,
                        format!("map {arrow} must be {dt}x{ds}"),
                    ));
                }
                if let FieldSpec::Prime(p) = doc.field {
                    if rows.iter().flatten().any(|s| s.den % p as i64 == 0) {
                        return Err(ParseError::new(
                            ParseErrorKind::FieldMismatch,
                            mpos,
                            format!("denominator divisible by {p}"),
                        ));
                    }
                }
                doc.modules[mi].maps.push(MapDecl {
                    arrow,
                    rows,
                    pos: mpos,
                });
            }
            _ if matches!(section, Section::Relations) => {
                let rel = parse_relation(&mut cur, &doc)?;
                doc.relations.push(rel);
            }
            _ => {
                return Err(ParseError::new(
                    ParseErrorKind::SyntaxError,
                    start,
                    format!(
                        "unexpected `{}`",
                        if word.is_empty() { cur.rest() } else { &word }
                    ),
                ))
            }
        }
    }
    if !field_seen {
        return Err(ParseError::new(
            ParseErrorKind::SyntaxError,
            Pos { line: 1, col: 1 },
            "missing field declaration",
        ));
    }
    Ok(doc)
}

fn parse_relation(cur: &mut Cursor<'_>, doc: &Document) -> PResult<RelationDecl> {
    let start = cur.pos();
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.at_end() {
            break;
        }
        let tpos = cur.pos();
        let mut negative = false;
        match cur.peek() {
            Some('+') | Some('-') => {
                negative = cur.peek() == Some('-');
                cur.bump();
            }
            _ if !first => {
                return Err(ParseError::new(
                    ParseErrorKind::SyntaxError,
                    tpos,
                    "expected + or -",
                ))
            }
            _ => {}
        }
        first = false;
        cur.skip_ws();
        let mut coeff = Scalar::integer(1);
        let save = cur.clone();
        let w = cur.take_ident();
        cur.skip_ws();
        if !w.is_empty() && matches!(cur.peek(), Some('*') | Some('/')) {
            let num: i64 = w.parse().map_err(|_| {
                ParseError::new(
                    ParseErrorKind::SyntaxError,
                    tpos,
                    format!("bad coefficient {w}"),
                )
            })?;
            let mut den = 1;
            if cur.peek() == Some('/') {
                cur.bump();
                den = cur.expect_uint("denominator")? as i64;
                cur.skip_ws();
            }
            coeff = Scalar::new(num, den).ok_or_else(|| {
                ParseError::new(ParseErrorKind::FieldMismatch, tpos, "zero denominator")
            })?;
            if let FieldSpec::Prime(p) = doc.field {
                if coeff.den % p as i64 == 0 {
                    return Err(ParseError::new(
                        ParseErrorKind::FieldMismatch,
                        tpos,
                        format!("denominator divisible by {p}"),
                    ));
                }
            }
            cur.expect_char('*')?;
        } else {
            *cur = save;
        }
        if negative {
            coeff.num = -coeff.num;
        }
        cur.skip_ws();
        let mut path = Vec::new();
        let mut prev_target: Option<String> = None;
        loop {
            let apos = cur.pos();
            let name = cur.take_ident();
            if name.is_empty() {
                return Err(ParseError::new(
                    ParseErrorKind::SyntaxError,
                    apos,
                    "expected arrow name",
                ));
            }
            let Some(a) = doc.arrows.iter().find(|a| a.name == name) else {
                return Err(ParseError::new(
                    ParseErrorKind::UnknownArrow,
                    apos,
                    format!("unknown arrow {name}"),
                ));
            };
            if let Some(t) = &prev_target {
                if *t != a.source {
                    return Err(ParseError::new(
                        ParseErrorKind::NonComposablePath,
                        apos,
                        format!("{} does not start at {t}", a.name),
                    ));
                }
            }
            prev_target = Some(a.target.clone());
            path.push(name);
            if cur.peek() == Some('.') {
                cur.bump();
            } else {
                break;
            }
        }
        terms.push(TermDecl {
            coeff,
            path,
            pos: tpos,
        });
    }
    if terms.is_empty() {
        return Err(ParseError::new(
            ParseErrorKind::SyntaxError,
            start,
            "empty relation",
        ));
    }
    Ok(RelationDecl { terms, pos: start })
}

#[derive(Clone)]
struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    idx: usize,
    line: usize,
    text: &'a str,
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, line: usize) -> Self {
        Cursor {
            chars: text.char_indices().collect(),
            idx: 0,
            line,
            text,
        }
    }

    fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            col: self.idx + 1,
        }
    }

    fn at_end(&self) -> bool {
        self.idx >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).map(|c| c.1)
    }

    fn bump(&mut self) {
        self.idx += 1;
    }

    fn rest(&self) -> &'a str {
        match self.chars.get(self.idx) {
            Some((b, _)) => &self.text[*b..],
            None => "",
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    /// The next whitespace-delimited word, without consuming it.
    fn peek_word(&self) -> String {
        self.chars[self.idx..]
            .iter()
            .map(|c| c.1)
            .take_while(|c| !c.is_whitespace())
            .collect()
    }

    fn take_word(&mut self) {
        while matches!(self.peek(), Some(c) if !c.is_whitespace()) {
            self.bump();
        }
    }

    fn take_ident(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if is_ident_char(c) {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        s
    }

    fn expect_ident(&mut self, what: &str) -> PResult<String> {
        self.skip_ws();
        let p = self.pos();
        let s = self.take_ident();
        if s.is_empty() {
            return Err(ParseError::new(
                ParseErrorKind::SyntaxError,
                p,
                format!("expected {what}"),
            ));
        }
        Ok(s)
    }

    fn expect_uint(&mut self, what: &str) -> PResult<u64> {
        self.skip_ws();
        let p = self.pos();
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        s.parse().map_err(|_| {
            ParseError::new(ParseErrorKind::SyntaxError, p, format!("expected {what}"))
        })
    }

    fn expect_int(&mut self) -> PResult<i64> {
        self.skip_ws();
        let p = self.pos();
        let neg = if self.peek() == Some('-') {
            self.bump();
            true
        } else {
            false
        };
        let v = self.expect_uint("integer")?;
        let v = i64::try_from(v)
            .map_err(|_| ParseError::new(ParseErrorKind::SyntaxError, p, "integer too large"))?;
        Ok(if neg { -v } else { v })
    }

    fn expect_char(&mut self, c: char) -> PResult<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(ParseError::new(
                ParseErrorKind::SyntaxError,
                self.pos(),
                format!("expected `{c}`"),
            ))
        }
    }

    fn expect_end(&mut self) -> PResult<()> {
        self.skip_ws();
        if self.at_end() {
            Ok(())
        } else {
            Err(ParseError::new(
                ParseErrorKind::SyntaxError,
                self.pos(),
                format!("unexpected `{}`", self.rest()),
            ))
        }
    }

    fn scalar(&mut self) -> PResult<Scalar> {
        let p = self.pos();
        let num = self.expect_int()?;
        self.skip_ws();
        let den = if self.peek() == Some('/') {
            self.bump();
            self.expect_uint("denominator")? as i64
        } else {
            1
        };
        Scalar::new(num, den)
            .ok_or_else(|| ParseError::new(ParseErrorKind::FieldMismatch, p, "zero denominator"))
    }

    /// `[[a,b],[c,d]]`, `[]` or `[[],[]]`.
    fn matrix(&mut self) -> PResult<Vec<Vec<Scalar>>> {
        self.expect_char('[')?;
        let mut rows = Vec::new();
        self.skip_ws();
        if self.peek() == Some(']') {
            self.bump();
            return Ok(rows);
        }
        loop {
            self.expect_char('[')?;
            let mut row = Vec::new();
            self.skip_ws();
            if self.peek() == Some(']') {
                self.bump();
            } else {
                loop {
                    self.skip_ws();
                    row.push(self.scalar()?);
                    self.skip_ws();
                    match self.peek() {
                        Some(',') => self.bump(),
                        Some(']') => {
                            self.bump();
                            break;
                        }
                        _ => {
                            return Err(ParseError::new(
                                ParseErrorKind::SyntaxError,
                                self.pos(),
                                "expected `,` or `]`",
                            ))
                        }
                    }
                }
            }
            rows.push(row);
            self.skip_ws();
            match self.peek() {
                Some(',') => self.bump(),
                Some(']') => {
                    self.bump();
                    break;
                }
                _ => {
                    return Err(ParseError::new(
                        ParseErrorKind::SyntaxError,
                        self.pos(),
                        "expected `,` or `]`",
                    ))
                }
            }
        }
        Ok(rows)
    }
}
