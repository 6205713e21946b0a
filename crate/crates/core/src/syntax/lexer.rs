use super::ParseError;

#[derive(Clone, Debug, PartialEq)]
pub enum Tok {
    Name(String),
    Kw(&'static str),
    Int(i64),
    Float(f64),
    Str(String),
    Op(&'static str),
    Meta(String),
    Newline,
    Indent,
    Dedent,
    Eof,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub start: usize,
    pub end: usize,
    pub line: usize,
}

const KEYWORDS: &[&str] = &[
    "False", "None", "True", "and", "as", "assert", "async", "await", "break", "class",
    "continue", "def", "del", "elif", "else", "except", "finally", "for", "from", "global",
    "if", "import", "in", "is", "lambda", "nonlocal", "not", "or", "pass", "raise", "return",
    "try", "while", "with", "yield",
];

// Longest first so that maximal munch works with a simple prefix scan.
const OPERATORS: &[&str] = &[
    "**=", "//=", ">>=", "<<=", "...", "->", ":=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
    "@=", "**", "//", "<<", ">>", "<=", ">=", "==", "!=", "+", "-", "*", "/", "%", "@", "&", "|",
    "^", "~", "<", ">", "(", ")", "[", "]", "{", "}", ",", ":", ".", ";", "=",
];

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn unsupported(kind: &str) -> ParseError {
    ParseError::Unsupported {
        kind: kind.to_string(),
    }
}

pub fn tokenize(src: &str, template: bool) -> Result<Vec<Token>, ParseError> {
    Lexer {
        src,
        bytes: src.as_bytes(),
        pos: 0,
        line: 1,
        template,
        out: Vec::new(),
        indents: vec![0],
        depth: 0,
    }
    .run()
}

struct Lexer<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    line: usize,
    template: bool,
    out: Vec<Token>,
    indents: Vec<usize>,
    depth: usize,
}

impl<'a> Lexer<'a> {
    fn push(&mut self, tok: Tok, start: usize) {
        self.out.push(Token {
            tok,
            start,
            end: self.pos,
            line: self.line,
        });
    }

    fn peek(&self, off: usize) -> u8 {
        *self.bytes.get(self.pos + off).unwrap_or(&0)
    }

    fn run(mut self) -> Result<Vec<Token>, ParseError> {
        let mut at_line_start = true;
        while self.pos < self.bytes.len() {
            if at_line_start && self.depth == 0 {
                // measure indentation; skip blank and comment-only lines
                let mut col = 0;
                let mut p = self.pos;
                while p < self.bytes.len() {
                    match self.bytes[p] {
                        b' ' => col += 1,
                        b'\t' => col = (col / 8 + 1) * 8,
                        b'\x0c' => col = 0,
                        _ => break,
                    }
                    p += 1;
                }
                let c = *self.bytes.get(p).unwrap_or(&b'\n');
                if c == b'\n' || c == b'#' || c == b'\r' {
                    while p < self.bytes.len() && self.bytes[p] != b'\n' {
                        p += 1;
                    }
                    self.pos = p;
                    if self.pos < self.bytes.len() {
                        self.pos += 1;
                        self.line += 1;
                    }
                    continue;
                }
                self.pos = p;
                self.indent_to(col)?;
                at_line_start = false;
            }
            let c = self.peek(0);
            let start = self.pos;
            match c {
                b'\n' => {
                    self.pos += 1;
                    if self.depth == 0 {
                        self.out.push(Token {
                            tok: Tok::Newline,
                            start,
                            end: self.pos,
                            line: self.line,
                        });
                        at_line_start = true;
                    }
                    self.line += 1;
                }
                b' ' | b'\t' | b'\r' | b'\x0c' => self.pos += 1,
                b'#' => {
                    while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                b'\\' => {
                    if self.peek(1) == b'\n' {
                        self.pos += 2;
                        self.line += 1;
                    } else if self.peek(1) == b'\r' && self.peek(2) == b'\n' {
                        self.pos += 3;
                        self.line += 1;
                    } else {
                        return Err(err(self.line, "unexpected character after line continuation"));
                    }
                }
                b'0'..=b'9' => self.number()?,
                b'.' if self.peek(1).is_ascii_digit() => self.number()?,
                b'"' | b'\'' => {
                    let s = self.string(false)?;
                    self.push(Tok::Str(s), start);
                }
                b':' if self.template && self.peek(1) == b'[' && self.peek(2) == b'[' => {
                    let close = self.src[self.pos..]
                        .find("]]")
                        .ok_or_else(|| err(self.line, "unterminated template variable"))?;
                    let name = &self.src[self.pos + 3..self.pos + close];
                    if name.is_empty()
                        || !name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
                    {
                        return Err(err(self.line, format!("bad template variable {:?}", name)));
                    }
                    let name = name.to_string();
                    self.pos += close + 2;
                    self.push(Tok::Meta(name), start);
                }
                c if c == b'_' || c.is_ascii_alphabetic() || c >= 0x80 => {
                    let rest = &self.src[self.pos..];
                    let len = rest
                        .char_indices()
                        .find(|&(_, ch)| !(ch == '_' || ch.is_alphanumeric()))
                        .map(|(i, _)| i)
                        .unwrap_or(rest.len());
                    let word = &rest[..len];
                    let next = self.peek(len);
                    if next == b'"' || next == b'\'' {
                        let lower = word.to_ascii_lowercase();
                        match lower.as_str() {
                            "r" | "u" => {
                                self.pos += len;
                                let s = self.string(lower == "r")?;
                                self.push(Tok::Str(s), start);
                                continue;
                            }
                            "f" | "rf" | "fr" => return Err(unsupported("f-string")),
                            "b" | "rb" | "br" => return Err(unsupported("bytes literal")),
                            _ => {}
                        }
                    }
                    self.pos += len;
                    let tok = match KEYWORDS.iter().find(|k| **k == word) {
                        Some(k) => Tok::Kw(k),
                        None => Tok::Name(word.to_string()),
                    };
                    self.push(tok, start);
                }
                _ => {
                    let rest = &self.src[self.pos..];
                    let op = OPERATORS
                        .iter()
                        .find(|op| rest.starts_with(**op))
                        .ok_or_else(|| {
                            err(
                                self.line,
                                format!("unexpected character {:?}", rest.chars().next().unwrap()),
                            )
                        })?;
                    match *op {
                        "(" | "[" | "{" => self.depth += 1,
                        ")" | "]" | "}" => {
                            if self.depth == 0 {
                                return Err(err(self.line, format!("unmatched '{}'", op)));
                            }
                            self.depth -= 1;
                        }
                        _ => {}
                    }
                    self.pos += op.len();
                    self.push(Tok::Op(op), start);
                }
            }
        }
        if self.depth > 0 {
            return Err(err(self.line, "unexpected end of input inside brackets"));
        }
        let end = self.pos;
        if !matches!(
            self.out.last().map(|t| &t.tok),
            None | Some(Tok::Newline) | Some(Tok::Dedent)
        ) {
            self.out.push(Token {
                tok: Tok::Newline,
                start: end,
                end,
                line: self.line,
            });
        }
        while self.indents.len() > 1 {
            self.indents.pop();
            self.out.push(Token {
                tok: Tok::Dedent,
                start: end,
                end,
                line: self.line,
            });
        }
        self.out.push(Token {
            tok: Tok::Eof,
            start: end,
            end,
            line: self.line,
        });
        Ok(self.out)
    }

    fn indent_to(&mut self, col: usize) -> Result<(), ParseError> {
        let top = *self.indents.last().unwrap();
        let pos = self.pos;
        let mk = |tok, line| Token {
            tok,
            start: pos,
            end: pos,
            line,
        };
        if col > top {
            self.indents.push(col);
            self.out.push(mk(Tok::Indent, self.line));
        } else {
            while col < *self.indents.last().unwrap() {
                self.indents.pop();
                self.out.push(mk(Tok::Dedent, self.line));
            }
            if col != *self.indents.last().unwrap() {
                return Err(err(self.line, "unindent does not match any outer indentation level"));
            }
        }
        Ok(())
    }

    fn number(&mut self) -> Result<(), ParseError> {
        let start = self.pos;
        let b = self.bytes;
        let radix = if b[self.pos] == b'0' {
            match self.peek(1) | 0x20 {
                b'x' => 16,
                b'o' => 8,
                b'b' => 2,
                _ => 10,
            }
        } else {
            10
        };
        if radix != 10 {
            self.pos += 2;
            let s = self.pos;
            while self.pos < b.len() && (b[self.pos].is_ascii_alphanumeric() || b[self.pos] == b'_') {
                self.pos += 1;
            }
            let digits: String = self.src[s..self.pos].chars().filter(|&c| c != '_').collect();
            let v = i64::from_str_radix(&digits, radix)
                .map_err(|_| err(self.line, format!("invalid number literal {:?}", &self.src[start..self.pos])))?;
            self.push(Tok::Int(v), start);
            return Ok(());
        }
        let mut is_float = false;
        let digits = |lx: &mut Self| {
            while lx.pos < b.len() && (b[lx.pos].is_ascii_digit() || b[lx.pos] == b'_') {
                lx.pos += 1;
            }
        };
        digits(self);
        if self.peek(0) == b'.' && self.peek(1) != b'.' {
            is_float = true;
            self.pos += 1;
            digits(self);
        }
        if self.peek(0) | 0x20 == b'e'
            && (self.peek(1).is_ascii_digit()
                || ((self.peek(1) == b'+' || self.peek(1) == b'-') && self.peek(2).is_ascii_digit()))
        {
            is_float = true;
            self.pos += 2;
            digits(self);
        }
        if self.peek(0) | 0x20 == b'j' {
            return Err(unsupported("complex literal"));
        }
        if self.peek(0).is_ascii_alphabetic() || self.peek(0) == b'_' {
            return Err(err(self.line, "invalid decimal literal"));
        }
        let text: String = self.src[start..self.pos].chars().filter(|&c| c != '_').collect();
        let tok = if is_float {
            Tok::Float(text.parse().map_err(|_| err(self.line, "invalid float literal"))?)
        } else {
            if text.len() > 1 && text.starts_with('0') && text.bytes().any(|c| c != b'0') {
                return Err(err(self.line, "leading zeros in decimal integer literals are not permitted"));
            }
            Tok::Int(text.parse().map_err(|_| unsupported("integer literal beyond 64 bits"))?)
        };
        self.push(tok, start);
        Ok(())
    }

    fn string(&mut self, raw: bool) -> Result<String, ParseError> {
        let q = self.bytes[self.pos];
        let triple = self.peek(1) == q && self.peek(2) == q;
        self.pos += if triple { 3 } else { 1 };
        let start_line = self.line;
        let mut out = String::new();
        loop {
            let rest = &self.src[self.pos..];
            let Some(ch) = rest.chars().next() else {
                return Err(err(start_line, "unterminated string literal"));
            };
            if ch as u32 == q as u32 {
                if !triple {
                    self.pos += 1;
                    return Ok(out);
                }
                if self.peek(1) == q && self.peek(2) == q {
                    self.pos += 3;
                    return Ok(out);
                }
            }
            if ch == '\n' {
                if !triple {
                    return Err(err(start_line, "unterminated string literal"));
                }
                self.line += 1;
            }
            if ch == '\\' {
                let Some(nx) = rest[1..].chars().next() else {
                    return Err(err(start_line, "unterminated string literal"));
                };
                if raw {
                    out.push('\\');
                    out.push(nx);
                    if nx == '\n' {
                        self.line += 1;
                    }
                    self.pos += 1 + nx.len_utf8();
                    continue;
                }
                self.pos += 1 + nx.len_utf8();
                match nx {
                    '\n' => self.line += 1,
                    'n' => out.push('\n'),
                    't' => out.push('\t'),
                    'r' => out.push('\r'),
                    '0' => out.push('\0'),
                    'a' => out.push('\x07'),
                    'b' => out.push('\x08'),
                    'f' => out.push('\x0c'),
                    'v' => out.push('\x0b'),
                    '\\' | '\'' | '"' => out.push(nx),
                    'x' | 'u' | 'U' => {
                        let n = match nx {
                            'x' => 2,
                            'u' => 4,
                            _ => 8,
                        };
                        let hex = self.src.get(self.pos..self.pos + n).unwrap_or("");
                        let cp = u32::from_str_radix(hex, 16)
                            .ok()
                            .filter(|_| hex.len() == n)
                            .and_then(char::from_u32)
                            .ok_or_else(|| err(self.line, "invalid escape sequence"))?;
                        out.push(cp);
                        self.pos += n;
                    }
                    other => {
                        out.push('\\');
                        out.push(other);
                    }
                }
                continue;
            }
            out.push(ch);
            self.pos += ch.len_utf8();
        }
    }
}
