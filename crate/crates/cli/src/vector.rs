//! `root=rational` coefficient lists.

use hermpos::curvature::TangentVector;
use hermpos::{Error, HermitianSpace, Rational, Result, Root};

/// Splits on commas that are not inside parentheses or brackets.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

pub fn parse_pairs(space: &HermitianSpace, spec: &str) -> Result<Vec<(Root, Rational)>> {
    let rs = space.root_system();
    let mut out = Vec::new();
    for item in split_top_level(spec) {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let (root, coeff) = item
            .rsplit_once('=')
            .ok_or_else(|| Error::Argument(format!("`{item}` is not of the form root=coefficient")))?;
        let root = rs.parse_root(root)?;
        let coeff: Rational = coeff
            .trim()
            .parse()
            .map_err(|_| Error::Argument(format!("`{}` is not a rational number", coeff.trim())))?;
        out.push((root, coeff));
    }
    if out.is_empty() {
        return Err(Error::Argument("empty vector".into()));
    }
    Ok(out)
}

pub fn parse_vector(space: &HermitianSpace, spec: &str) -> Result<TangentVector<Rational>> {
    TangentVector::from_pairs(space, &parse_pairs(space, spec)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hermpos::{resolve, SpaceId};

    #[test]
    fn splits_outside_brackets() {
        assert_eq!(split_top_level("a=1,(1,2)=3,[4,5]=6"), vec!["a=1", "(1,2)=3", "[4,5]=6"]);
    }

    #[test]
    fn parses_named_roots() {
        let s = resolve(SpaceId::Grassmannian { p: 2, q: 2 }).unwrap();
        let x = parse_vector(&s, "e1-e3=1, e2-e4=-1/2").unwrap();
        assert_eq!(x.support().len(), 2);
        assert!(parse_vector(&s, "e1-e2=1").is_err());
        assert!(parse_vector(&s, "e1-e3").is_err());
        assert!(parse_vector(&s, "e1-e3=x").is_err());
        assert!(parse_vector(&s, "").is_err());
    }

    #[test]
    fn parses_coordinate_roots() {
        let s = resolve(SpaceId::E6).unwrap();
        let name = s.psi_root(0).name();
        let x = parse_vector(&s, &format!("{name}=2")).unwrap();
        assert_eq!(x.support(), vec![0]);
    }
}
