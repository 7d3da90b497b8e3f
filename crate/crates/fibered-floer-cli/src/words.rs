//! The twist-word grammar.
//!
//! Tokens are separated by whitespace or `*`. Each token is `g`, `d` or
//! `g<i>` (member `i` of the disjoint family), optionally followed by
//! `^<int>`; a missing exponent means power 1. The empty string is the
//! identity. Composition order is left to right.
//!
//! ```text
//! g^2 d^-3      g * d       g1^2 g3^-1
//! ```

use fibered_floer::{Curve, DehnTwist, TwistWord};

use crate::CliError;

/// Parses a word and pairs it with a genus, normalizing along the way.
pub fn parse_word(src: &str, genus: u32) -> Result<TwistWord, CliError> {
    Ok(TwistWord::new(genus, parse_twists(src)?)?)
}

/// Parses the raw twist sequence of a word.
pub fn parse_twists(src: &str) -> Result<Vec<DehnTwist>, CliError> {
    let mut twists = Vec::new();
    for (offset, token) in tokens(src) {
        twists.push(parse_token(token, offset)?);
    }
    Ok(twists)
}

fn tokens(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.split(|c: char| c.is_whitespace() || c == '*')
        .scan(0usize, move |pos, tok| {
            let offset = src[*pos..].find(tok).expect("token comes from src") + *pos;
            *pos = offset + tok.len();
            Some((offset, tok))
        })
        .filter(|(_, tok)| !tok.is_empty())
}

fn parse_token(token: &str, offset: usize) -> Result<DehnTwist, CliError> {
    let err = |at: usize, message: &str| CliError::Parse {
        offset: offset + at,
        message: message.to_string(),
    };

    let mut chars = token.char_indices().peekable();
    let curve_char = match chars.next() {
        Some((_, 'g')) => 'g',
        Some((_, 'd')) => 'd',
        Some((i, c)) => return Err(err(i, &format!("expected 'g' or 'd', found '{c}'"))),
        None => unreachable!("empty tokens are filtered out"),
    };

    let mut index_digits = String::new();
    while let Some(&(_, c)) = chars.peek() {
        if c.is_ascii_digit() {
            index_digits.push(c);
            chars.next();
        } else {
            break;
        }
    }
    let curve = match (curve_char, index_digits.is_empty()) {
        ('g', true) => Curve::Gamma,
        ('d', true) => Curve::Delta,
        ('g', false) => {
            let i: u32 = index_digits
                .parse()
                .map_err(|_| err(1, "curve index out of range"))?;
            Curve::GammaI(i)
        }
        ('d', false) => return Err(err(1, "only 'g' takes a curve index")),
        _ => unreachable!(),
    };

    let power = match chars.next() {
        None => 1,
        Some((i, '^')) => {
            let rest = &token[i + 1..];
            if rest.is_empty() {
                return Err(err(i + 1, "missing exponent after '^'"));
            }
            rest.parse::<i64>()
                .map_err(|_| err(i + 1, &format!("invalid exponent '{rest}'")))?
        }
        Some((i, c)) => return Err(err(i, &format!("expected '^', found '{c}'"))),
    };
    if power == 0 {
        return Err(CliError::Core(fibered_floer::Error::ZeroExponent));
    }

    Ok(DehnTwist::new(curve, power)?)
}
