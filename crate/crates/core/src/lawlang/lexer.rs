use super::LawError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Num(String),
    Semi,
    Amp,
    Bar,
    Arrow,
    Implies,
    Iff,
    Leq,
    Eq,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Colon,
    Star,
    Eof,
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

pub(crate) const KEYWORDS: &[&str] = &["law", "sort", "var", "def", "assume", "conclude", "and"];

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) | Tok::Num(s) => format!("`{s}`"),
            Tok::Semi => "`;`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Bar => "`|`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Implies => "`=>`".into(),
            Tok::Iff => "`<=>`".into(),
            Tok::Leq => "`<=`".into(),
            Tok::Eq => "`=`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrack => "`[`".into(),
            Tok::RBrack => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Star => "`*`".into(),
            Tok::Eof => "end of input".into(),
        }
    }

    pub fn is_keyword(&self, kw: &str) -> bool {
        matches!(self, Tok::Ident(s) if s == kw)
    }
}

pub(crate) fn lex(text: &str) -> Result<Vec<Token>, LawError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let rest = |n: usize| chars[i..(i + n).min(chars.len())].iter().collect::<String>();
        let (tok, len) = if rest(3) == "<=>" {
            (Tok::Iff, 3)
        } else if rest(2) == "<=" {
            (Tok::Leq, 2)
        } else if rest(2) == "=>" {
            (Tok::Implies, 2)
        } else if rest(2) == "->" {
            (Tok::Arrow, 2)
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            let mut j = i;
            while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_' || chars[j] == '\'') {
                j += 1;
            }
            (Tok::Ident(chars[start..j].iter().collect()), j - start)
        } else if c.is_ascii_digit() {
            let start = i;
            let mut j = i;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            (Tok::Num(chars[start..j].iter().collect()), j - start)
        } else {
            let t = match c {
                ';' => Tok::Semi,
                '&' => Tok::Amp,
                '|' => Tok::Bar,
                '=' => Tok::Eq,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBrack,
                ']' => Tok::RBrack,
                ',' => Tok::Comma,
                ':' => Tok::Colon,
                '*' => Tok::Star,
                _ => {
                    return Err(LawError::Syntax { line: tl, col: tc, msg: format!("unexpected character `{c}`") })
                }
            };
            (t, 1)
        };
        i += len;
        col += len;
        out.push(Token { tok, line: tl, col: tc });
    }
    out.push(Token { tok: Tok::Eof, line, col });
    Ok(out)
}
