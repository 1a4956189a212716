//! Text inputs: length lists and codeword lists.

use crate::prefixcode::Codeword;

/// Comma-separated positive integers, e.g. `1,2,3,3`.
pub fn parse_lengths(text: &str) -> Result<Vec<u32>, String> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .enumerate()
        .map(|(i, item)| {
            let item = item.trim();
            match item.parse::<u32>() {
                Ok(0) => Err(format!("length {} must be positive, got 0", i + 1)),
                Ok(l) => Ok(l),
                Err(_) => Err(format!("length {}: expected a positive integer, got {item:?}", i + 1)),
            }
        })
        .collect()
}

/// Comma-separated codewords, e.g. `0,10,110,111`.
pub fn parse_word_list(text: &str) -> Result<Vec<Codeword>, String> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .enumerate()
        .map(|(i, item)| {
            item.trim().parse().map_err(|_| {
                format!(
                    "word {}: expected a non-empty string of 0/1, got {:?}",
                    i + 1,
                    item.trim()
                )
            })
        })
        .collect()
}

/// One codeword per line; `#` starts a comment, blank lines are skipped.
pub fn parse_word_file(text: &str) -> Result<Vec<Codeword>, String> {
    let mut words = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or_default().trim();
        if content.is_empty() {
            continue;
        }
        let word = content
            .parse()
            .map_err(|_| format!("line {}: expected a string of 0/1, got {content:?}", i + 1))?;
        words.push(word);
    }
    Ok(words)
}
