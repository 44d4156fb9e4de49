//! Integer ranges for `sweep`: `a..b` and `a..=b` (both inclusive), comma
//! lists, or a single value. A reversed range such as `5..4` is empty.

pub fn parse_range(text: &str) -> Result<Vec<u32>, String> {
    let text = text.trim();
    let num = |s: &str| s.trim().parse::<u32>().map_err(|e| format!("bad range `{text}`: {e}"));
    if let Some((a, b)) = text.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        return Ok((num(a)?..=num(b)?).collect());
    }
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(num).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        assert_eq!(parse_range("2..5").unwrap(), [2, 3, 4, 5]);
        assert_eq!(parse_range("2..=3").unwrap(), [2, 3]);
        assert_eq!(parse_range("3, 7,9").unwrap(), [3, 7, 9]);
        assert_eq!(parse_range("4").unwrap(), [4]);
        assert!(parse_range("5..4").unwrap().is_empty());
        assert!(parse_range("").unwrap().is_empty());
        assert!(parse_range("a..3").is_err());
        assert!(parse_range("-1").is_err());
    }
}
