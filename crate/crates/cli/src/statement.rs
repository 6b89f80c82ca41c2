//! Splitting session text into `;`-terminated statements with their source positions.

/// One statement without its terminating `;`. Comments are blanked out so that columns
/// inside the statement still match the file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Statement {
    pub text: String,
    pub line: usize,
    pub col: usize,
}

impl Statement {
    /// Converts a position relative to the statement text into a file position.
    pub fn absolute(&self, line: usize, col: usize) -> (usize, usize) {
        if line <= 1 {
            (self.line, self.col + col.saturating_sub(1))
        } else {
            (self.line + line - 1, col)
        }
    }

    /// The first word and the position where the rest starts.
    pub fn keyword(&self) -> &str {
        self.text.split_whitespace().next().unwrap_or("")
    }

    /// Text after the keyword, trimmed, together with its file position.
    pub fn rest(&self) -> (&str, usize, usize) {
        let kw = self.keyword();
        let start = self.text.find(kw).map_or(0, |i| i + kw.len());
        let tail = &self.text[start..];
        let skipped = tail.len() - tail.trim_start().len();
        let offset = start + skipped;
        let before = &self.text[..offset];
        let line = before.matches('\n').count() + 1;
        let col = match before.rfind('\n') {
            Some(i) => before[i + 1..].chars().count() + 1,
            None => before.chars().count() + 1,
        };
        let (l, c) = self.absolute(line, col);
        (self.text[offset..].trim_end(), l, c)
    }
}

/// Splits `text` at top-level `;`. Returns the position of an unterminated statement or
/// string on failure.
pub(crate) fn split(text: &str) -> Result<Vec<Statement>, (usize, usize, String)> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut start: Option<(usize, usize)> = None;
    let (mut line, mut col) = (1usize, 1usize);
    let mut chars = text.chars().peekable();
    let mut in_string = false;
    while let Some(c) = chars.next() {
        let here = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
        if in_string {
            current.push(c);
            if c == '"' {
                in_string = false;
            } else if c == '\n' {
                let (l, cl) = start.unwrap_or(here);
                return Err((l, cl, "unterminated string".into()));
            }
            continue;
        }
        match c {
            '#' => {
                // blank the comment but keep the newline for positions
                if start.is_some() {
                    current.push(' ');
                }
                while let Some(&n) = chars.peek() {
                    if n == '\n' {
                        break;
                    }
                    chars.next();
                    col += 1;
                    if start.is_some() {
                        current.push(' ');
                    }
                }
            }
            ';' => {
                let (l, cl) = start.unwrap_or(here);
                if start.is_none() {
                    return Err((l, cl, "empty statement".into()));
                }
                out.push(Statement {
                    text: std::mem::take(&mut current),
                    line: l,
                    col: cl,
                });
                start = None;
            }
            c if c.is_whitespace() && start.is_none() => {}
            c => {
                if start.is_none() {
                    start = Some(here);
                }
                if c == '"' {
                    in_string = true;
                }
                current.push(c);
            }
        }
    }
    if let Some((l, cl)) = start {
        return Err((l, cl, "statement is missing its terminating `;`".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_and_tracks_positions() {
        let text = "ring R vars x;  # base\n  module M in R^1\n  gens [(x)];\n";
        let s = split(text).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!((s[0].line, s[0].col), (1, 1));
        assert_eq!(s[0].keyword(), "ring");
        assert_eq!((s[1].line, s[1].col), (2, 3));
        assert_eq!(s[1].absolute(2, 3), (3, 3));
        let (rest, l, c) = s[1].rest();
        assert!(rest.starts_with("M in R^1"));
        assert_eq!((l, c), (2, 10));
    }

    #[test]
    fn rejects_unterminated() {
        assert_eq!(split("ring R vars x").unwrap_err().0, 1);
        assert!(split(";").is_err());
        assert!(split("include \"a;\nb\";").is_err());
    }

    #[test]
    fn semicolons_inside_strings_do_not_split() {
        let s = split("include \"a;b.dk\";").unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].text, "include \"a;b.dk\"");
    }
}
