//! Parsing of linear combinations such as `s[2,1] - 1/2*s[1,1,1]` or
//! `S[1;1] + 2*P[2;-]`.

use wreathsf::{Basis, ColoredPartition, Cyclotomic, Error, Partition, Rational, Result, SymFunc, WreathRing, WreathSymFunc};
use wreathsf::wreath::WreathBasis;

/// One `coeff*b[label]` term.
#[derive(Debug, PartialEq)]
pub struct Term {
    pub coeff: Rational,
    pub basis: String,
    pub label: String,
}

/// Splits on top-level `+`/`-`, keeping the sign with each term.
fn split_terms(text: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    let mut negative = false;
    for ch in text.chars() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            _ => {}
        }
        // A sign right after `*` or at the start of a term belongs to the coefficient.
        let starts_term = current.trim().is_empty();
        if depth == 0 && (ch == '+' || ch == '-') && !starts_term && !current.trim_end().ends_with('*') {
            out.push((negative, current.trim().to_string()));
            current.clear();
            negative = ch == '-';
            continue;
        }
        if depth == 0 && ch == '-' && starts_term {
            negative = !negative;
            continue;
        }
        current.push(ch);
    }
    if !current.trim().is_empty() || out.is_empty() {
        out.push((negative, current.trim().to_string()));
    }
    out
}

pub fn parse_terms(text: &str) -> Result<Vec<Term>> {
    split_terms(text)
        .into_iter()
        .map(|(negative, raw)| {
            let (coeff, rest) = match raw.split_once('*') {
                Some((c, rest)) if !c.contains('[') => (parse_rational(c.trim())?, rest.trim()),
                _ => (Rational::from_integer(1.into()), raw.as_str()),
            };
            let open = rest.find('[').ok_or_else(|| Error::Parse(format!("expected `basis[label]`, got `{rest}`")))?;
            if !rest.ends_with(']') {
                return Err(Error::Parse(format!("unterminated label in `{rest}`")));
            }
            let coeff = if negative { -coeff } else { coeff };
            Ok(Term { coeff, basis: rest[..open].trim().to_string(), label: rest[open + 1..rest.len() - 1].to_string() })
        })
        .collect()
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    text.parse::<Rational>().map_err(|_| Error::Parse(format!("`{text}` is not a rational number")))
}

/// A symmetric function. Bare partitions are read in `default_basis`.
pub fn parse_symfunc(text: &str, default_basis: Option<Basis>) -> Result<SymFunc> {
    if !text.contains('[') {
        let basis = default_basis.ok_or_else(|| Error::Parse("a bare partition needs --from".into()))?;
        return Ok(SymFunc::basis_element(basis, text.trim().parse::<Partition>()?));
    }
    let terms = parse_terms(text)?;
    let basis: Basis = terms[0].basis.parse()?;
    let mut parsed = Vec::new();
    for t in terms {
        if t.basis.parse::<Basis>()? != basis {
            return Err(Error::Parse("all terms must use the same basis".into()));
        }
        parsed.push((t.label.trim().parse::<Partition>()?, t.coeff));
    }
    let degree = parsed[0].0.weight();
    SymFunc::from_terms(basis, degree, parsed)
}

/// A wreath symmetric function written in one of `p`, `P`, `S`.
pub fn parse_wreath(ring: &WreathRing, text: &str) -> Result<WreathSymFunc> {
    let terms = parse_terms(text)?;
    let basis: WreathBasis = terms[0].basis.parse()?;
    let mut parsed = Vec::new();
    for t in terms {
        if t.basis.parse::<WreathBasis>()? != basis {
            return Err(Error::Parse("all terms must use the same basis".into()));
        }
        parsed.push((t.label.trim().parse::<ColoredPartition>()?, Cyclotomic::from_rational(t.coeff)));
    }
    let degree = parsed[0].0.weight();
    WreathSymFunc::from_terms(ring.group_arc(), basis, degree, parsed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terms() {
        let t = parse_terms("-1/2*p[2] + 1/2*p[1,1]").unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].coeff, "-1/2".parse().unwrap());
        assert_eq!(t[1].label, "1,1");
        let t = parse_terms("S[1;-] - 3*S[-;1]").unwrap();
        assert_eq!(t[1].coeff, Rational::from_integer((-3).into()));
        assert_eq!(t[1].label, "-;1");
        assert!(parse_terms("2*p").is_err());
    }

    #[test]
    fn symfuncs() {
        let f = parse_symfunc("s[2,1]", None).unwrap();
        assert_eq!(f, SymFunc::basis_element(Basis::S, "2,1".parse().unwrap()));
        let g = parse_symfunc("2,1", Some(Basis::S)).unwrap();
        assert_eq!(f, g);
        assert!(parse_symfunc("s[2] + m[1,1]", None).is_err());
        let shown = parse_symfunc("-1/2*p[2] + 1/2*p[1,1]", None).unwrap();
        assert_eq!(parse_symfunc(&shown.to_string(), None).unwrap(), shown);
    }
}
