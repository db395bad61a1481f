use super::ParseError;

/// A whitespace-delimited token with its position.
#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub text: String,
    pub line: usize,
    pub column: usize,
}

impl Token {
    pub fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.column, message)
    }

    pub fn number(&self) -> Result<usize, ParseError> {
        self.text.parse().map_err(|_| self.error(format!("expected a number, found `{}`", self.text)))
    }

    /// Position `offset` characters into the token.
    pub fn at(&self, offset: usize) -> (usize, usize) {
        (self.line, self.column + offset)
    }
}

pub(crate) fn tokenize(line: usize, text: &str, first_column: usize) -> Vec<Token> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    let mut column = first_column;
    for (byte, c) in text.char_indices() {
        if c.is_whitespace() {
            if let Some((b, col)) = start.take() {
                out.push(Token { text: text[b..byte].to_string(), line, column: col });
            }
        } else if start.is_none() {
            start = Some((byte, column));
        }
        column += 1;
    }
    if let Some((b, col)) = start {
        out.push(Token { text: text[b..].to_string(), line, column: col });
    }
    out
}

/// A header line `key: rest…` with its indented item lines.
#[derive(Clone, Debug)]
pub(crate) struct Section {
    pub key: String,
    pub line: usize,
    pub rest: Vec<Token>,
    pub items: Vec<Vec<Token>>,
}

impl Section {
    pub fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, 1, message)
    }

    /// The single value after the colon.
    pub fn value(&self) -> Result<&Token, ParseError> {
        match self.rest.as_slice() {
            [t] => Ok(t),
            [] => Err(ParseError::new(self.line, self.key.chars().count() + 2, format!("`{}` needs a value", self.key))),
            [_, t, ..] => Err(t.error(format!("`{}` takes a single value", self.key))),
        }
    }

    /// Items of the form `a -> b`.
    pub fn arrows(&self) -> Result<Vec<(&Token, &Token)>, ParseError> {
        self.items
            .iter()
            .map(|item| match item.as_slice() {
                [a, arrow, b] if arrow.text == "->" => Ok((a, b)),
                _ => Err(item[0].error("expected an entry of the form `a -> b`")),
            })
            .collect()
    }
}

pub(crate) fn is_comment_or_blank(text: &str) -> bool {
    let t = text.trim();
    t.is_empty() || t.starts_with('#')
}

/// Splits numbered lines into sections.
pub(crate) fn sections(lines: &[(usize, String)]) -> Result<Vec<Section>, ParseError> {
    let mut out: Vec<Section> = Vec::new();
    for (number, text) in lines {
        if is_comment_or_blank(text) {
            continue;
        }
        if text.starts_with(char::is_whitespace) {
            let Some(section) = out.last_mut() else {
                let column = text.chars().take_while(|c| c.is_whitespace()).count() + 1;
                return Err(ParseError::new(*number, column, "indented entry outside any section"));
            };
            section.items.push(tokenize(*number, text, 1));
            continue;
        }
        let Some(colon) = text.find(':') else {
            return Err(ParseError::new(*number, 1, "expected a section header `key:`"));
        };
        let key = text[..colon].trim().to_string();
        let rest_column = text[..=colon].chars().count() + 1;
        out.push(Section { key, line: *number, rest: tokenize(*number, &text[colon + 1..], rest_column), items: Vec::new() });
    }
    Ok(out)
}

/// The sections of one document.
pub(crate) struct Sections {
    pub list: Vec<Section>,
    pub first_line: usize,
}

impl Sections {
    /// Checks that every key is allowed (a trailing space in `allowed` acts
    /// as a prefix) and that no key repeats.
    pub fn new(lines: &[(usize, String)], first_line: usize, allowed: &[&str]) -> Result<Self, ParseError> {
        let list = sections(lines)?;
        for (i, s) in list.iter().enumerate() {
            if !allowed.iter().any(|a| s.key == *a || (a.ends_with(' ') && s.key.starts_with(a))) {
                return Err(s.error(format!("unknown section `{}`", s.key)));
            }
            if let Some(prev) = list[..i].iter().find(|p| p.key == s.key) {
                return Err(s.error(format!("section `{}` repeats the one on line {}", s.key, prev.line)));
            }
        }
        Ok(Sections { list, first_line })
    }

    pub fn get(&self, key: &str) -> Option<&Section> {
        self.list.iter().find(|s| s.key == key)
    }

    pub fn require(&self, key: &str) -> Result<&Section, ParseError> {
        self.get(key).ok_or_else(|| ParseError::new(self.first_line, 1, format!("missing section `{key}`")))
    }

    /// Items of an optional section, empty when it is absent.
    pub fn arrows(&self, key: &str) -> Result<Vec<(&Token, &Token)>, ParseError> {
        self.get(key).map_or(Ok(Vec::new()), Section::arrows)
    }

    /// Finds the first token equal to `needle`, for locating semantic errors.
    pub fn locate(&self, needle: &str) -> (usize, usize) {
        for s in &self.list {
            for t in s.rest.iter().chain(s.items.iter().flatten()) {
                if t.text == needle || t.text.trim_end_matches(':') == needle {
                    return (t.line, t.column);
                }
            }
        }
        (self.first_line, 1)
    }

    /// Turns a validation error message into a located parse error, pointing
    /// at the first backquoted name the message mentions.
    pub fn semantic(&self, message: String) -> ParseError {
        let needle = message.split('`').nth(1).unwrap_or("");
        let (line, column) = if needle.is_empty() { (self.first_line, 1) } else { self.locate(needle) };
        ParseError::new(line, column, message)
    }
}
