//! Scanner for the word DSL.
//!
//! Grammar: `word := letter*`, `letter := ident "'"?`,
//! `ident := [A-Za-z_][A-Za-z0-9_]*`. Letters are separated by whitespace and
//! `ε` (or an empty input) denotes the unit.

use super::{Alphabet, Letter, Word};
use crate::error::{Error, Result};

struct Token {
    name: String,
    daggered: bool,
    column: usize,
}

fn err(column: usize, message: impl Into<String>) -> Error {
    Error::WordParse {
        column,
        message: message.into(),
    }
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().enumerate().peekable();
    while let Some(&(i, c)) = chars.peek() {
        let column = i + 1;
        if c.is_whitespace() {
            chars.next();
        } else if c == 'ε' {
            chars.next();
            if let Some(&(_, d)) = chars.peek() {
                if !d.is_whitespace() {
                    return Err(err(column, "ε denotes the unit and must stand alone"));
                }
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut name = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    name.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            let mut daggered = false;
            if let Some(&(_, '\'')) = chars.peek() {
                daggered = true;
                chars.next();
            }
            tokens.push(Token {
                name,
                daggered,
                column,
            });
        } else if c == '\'' {
            return Err(err(column, "dangling dagger mark `'`"));
        } else {
            return Err(err(column, format!("unexpected character `{c}`")));
        }
    }
    Ok(tokens)
}

pub(super) fn parse_word(alphabet: &Alphabet, input: &str) -> Result<Word> {
    let mut letters = Vec::new();
    for token in tokenize(input)? {
        let generator = alphabet.generator(&token.name).ok_or_else(|| {
            err(
                token.column,
                format!("unknown generator `{}`", token.name),
            )
        })?;
        letters.push(Letter::new(generator.clone(), token.daggered));
    }
    Ok(Word::from_letters(letters))
}

/// Distinct generator names occurring in `input`, in order of first
/// appearance. Used to infer an alphabet when none is given.
pub fn scan_generator_names(input: &str) -> Result<Vec<String>> {
    let mut names: Vec<String> = Vec::new();
    for token in tokenize(input)? {
        if !names.iter().any(|n| *n == token.name) {
            names.push(token.name);
        }
    }
    Ok(names)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_daggered_letters() {
        let a = Alphabet::free(&["a", "b"]).unwrap();
        let w = a.parse_word("a b' a").unwrap();
        assert_eq!(w.to_string(), "a b' a");
    }

    #[test]
    fn unit_spellings() {
        let a = Alphabet::free(&["a"]).unwrap();
        assert!(a.parse_word("").unwrap().is_unit());
        assert!(a.parse_word("   ").unwrap().is_unit());
        assert!(a.parse_word("ε").unwrap().is_unit());
    }

    #[test]
    fn reports_column_of_bad_input() {
        let a = Alphabet::free(&["a"]).unwrap();
        match a.parse_word("a ?b") {
            Err(Error::WordParse { column, .. }) => assert_eq!(column, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        match a.parse_word("a c'") {
            Err(Error::WordParse { column, message }) => {
                assert_eq!(column, 3);
                assert!(message.contains("unknown generator `c`"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn scans_names_in_order() {
        assert_eq!(
            scan_generator_names("b a' b c").unwrap(),
            vec!["b", "a", "c"]
        );
    }
}
