//! Published complete weight enumerator for `(m, k1, k2) = (9, 2, 4)`.
//!
//! The fixture lists one monomial per line as `count t0 t1 t2`. Some exponent
//! triples appear more than once, so lines are aggregated on load.

use crate::code::CompleteWeightEnumerator;
use crate::error::{Error, Result};

pub const EXAMPLE1_TEXT: &str = include_str!("../data/example1_cwe.txt");

/// `(m, k1, k2)` of the published example.
pub const EXAMPLE1_PARAMS: (usize, usize, usize) = (9, 2, 4);

/// Parses `count t0 t1 t2` lines; blank lines and `#` comments are skipped.
pub fn parse_cwe_listing(text: &str) -> Result<CompleteWeightEnumerator> {
    let mut terms = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums: Vec<u64> = line
            .split_whitespace()
            .map(|tok| tok.parse::<u64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Parse { line: no + 1, msg: e.to_string() })?;
        let [c, t0, t1, t2] = nums[..] else {
            return Err(Error::Parse { line: no + 1, msg: format!("expected 4 integers, found {}", nums.len()) });
        };
        terms.push(([t0, t1, t2], c));
    }
    Ok(CompleteWeightEnumerator::from_terms(terms))
}

pub fn example1_cwe() -> CompleteWeightEnumerator {
    parse_cwe_listing(EXAMPLE1_TEXT).expect("embedded fixture parses")
}
