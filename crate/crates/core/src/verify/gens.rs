use crate::error::{Error, Result};

/// Exponent vector (length `count`) of a product such as `j12^2 j3`.
/// `1` is the empty product.
pub fn parse_gen_monomial(text: &str, symbol: &str, count: usize, line: usize) -> Result<Vec<u32>> {
    let mut exps = vec![0u32; count];
    let text = text.trim();
    if text == "1" {
        return Ok(exps);
    }
    for tok in text.split_whitespace() {
        let (base, e) = match tok.split_once('^') {
            Some((b, e)) => (b, e.parse::<u32>().map_err(|_| Error::parse(line, format!("bad exponent in '{tok}'")))?),
            None => (tok, 1),
        };
        let idx: usize = base
            .strip_prefix(symbol)
            .and_then(|i| i.parse().ok())
            .ok_or_else(|| Error::parse(line, format!("expected {symbol}<index>, found '{tok}'")))?;
        if idx == 0 || idx > count {
            return Err(Error::parse(line, format!("{tok}: only {symbol}1..{symbol}{count} exist")));
        }
        exps[idx - 1] += e;
    }
    Ok(exps)
}

/// Σ eᵢ·deg(gᵢ).
pub fn monomial_degree(exps: &[u32], degrees: &[Vec<u32>]) -> Vec<u32> {
    let k = degrees.first().map_or(0, |d| d.len());
    let mut out = vec![0u32; k];
    for (e, d) in exps.iter().zip(degrees) {
        for (o, x) in out.iter_mut().zip(d) {
            *o += e * x;
        }
    }
    out
}

/// Generator indices with multiplicity, nondecreasing.
pub fn expand_indices(exps: &[u32]) -> Vec<usize> {
    exps.iter().enumerate().flat_map(|(i, &e)| std::iter::repeat(i).take(e as usize)).collect()
}

pub fn fmt_gen_monomial(exps: &[u32], symbol: &str) -> String {
    let parts: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { format!("{symbol}{}", i + 1) } else { format!("{symbol}{}^{e}", i + 1) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

/// Header lines `key: value` shared by the basis and relation files.
pub fn header<'a>(body: &'a str, key: &str) -> Option<&'a str> {
    body.strip_prefix(key).and_then(|r| r.strip_prefix(':')).map(str::trim)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let e = parse_gen_monomial("j12^2 j3", "j", 28, 1).unwrap();
        assert_eq!(e[11], 2);
        assert_eq!(e[2], 1);
        assert_eq!(fmt_gen_monomial(&e, "j"), "j3 j12^2");
        assert_eq!(expand_indices(&e), vec![2, 11, 11]);
        assert_eq!(parse_gen_monomial("1", "j", 3, 1).unwrap(), vec![0, 0, 0]);
        assert!(parse_gen_monomial("j29", "j", 28, 4).is_err());
        assert!(parse_gen_monomial("i3", "j", 28, 4).is_err());
        let d = monomial_degree(&[1, 2], &[vec![1, 0], vec![0, 2]]);
        assert_eq!(d, vec![1, 4]);
    }
}
