//! Plain-text polynomial format: `c*z{i}_{j}^e*...` terms joined by ` + ` and
//! ` - `, always with an explicit rational coefficient, e.g.
//! `1*z1_1*z2_2 - 1*z2_1*z1_2`. The zero polynomial is `0`.

use std::fmt::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::polynomial::{Coeff, Polynomial};
use super::ring::VariableRing;
use crate::error::{Error, Result};

pub fn format_polynomial(f: &Polynomial, ring: &VariableRing) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in f.terms().iter().enumerate() {
        match (k, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        write!(out, "{}", c.abs()).unwrap();
        for i in m.support() {
            write!(out, "*{}", ring.name(i)).unwrap();
            if m.exponent(i) > 1 {
                write!(out, "^{}", m.exponent(i)).unwrap();
            }
        }
    }
    out
}

pub fn parse_polynomial(text: &str, ring: &VariableRing) -> Result<Polynomial> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let n = ring.nvars();
    let mut terms = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let (negative, body) = match rest.as_bytes()[0] {
            b'-' => (true, &rest[1..]),
            b'+' => (false, &rest[1..]),
            _ if terms.is_empty() => (false, rest),
            _ => return Err(Error::Parse(format!("expected + or - before {rest:?}"))),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let (m, mut c) = parse_term(&body[..end], ring, n)?;
        if negative {
            c = -c;
        }
        terms.push((m, c));
        rest = &body[end..];
    }
    Ok(Polynomial::from_terms(n, terms))
}

fn parse_term(text: &str, ring: &VariableRing, n: usize) -> Result<(Monomial, Coeff)> {
    if text.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let mut c = Coeff::one();
    let mut exps = vec![0u16; n];
    for (k, factor) in text.split('*').enumerate() {
        if factor.starts_with(|ch: char| ch.is_ascii_digit()) {
            if k != 0 {
                return Err(Error::Parse(format!("coefficient {factor:?} must lead its term")));
            }
            c = parse_rational(factor)?;
            continue;
        }
        let (name, e) = match factor.split_once('^') {
            Some((name, e)) => {
                (name, e.parse::<u16>().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?)
            }
            None => (factor, 1),
        };
        let i = ring.index_of(name).ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
        exps[i] += e;
    }
    Ok((Monomial::from_exponents(exps), c))
}

fn parse_rational(text: &str) -> Result<Coeff> {
    let bad = || Error::Parse(format!("bad coefficient {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a.parse::<BigInt>().map_err(|_| bad())?, b.parse::<BigInt>().map_err(|_| bad())?),
        None => (text.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::polynomial::tests::arb_poly;
    use proptest::prelude::*;

    fn ring() -> VariableRing {
        VariableRing::standard(vec!["z1_1".into(), "z1_2".into(), "z2_1".into()]).unwrap()
    }

    #[test]
    fn formatting() {
        let r = ring();
        let f = parse_polynomial("z1_1*z1_2 - z2_1^2 + 3/2", &r).unwrap();
        assert_eq!(format_polynomial(&f, &r), "1*z1_1*z1_2 - 1*z2_1^2 + 3/2");
        assert_eq!(format_polynomial(&Polynomial::zero(3), &r), "0");
        let g = parse_polynomial("-2*z1_1", &r).unwrap();
        assert_eq!(format_polynomial(&g, &r), "-2*z1_1");
    }

    #[test]
    fn parse_errors() {
        let r = ring();
        assert!(parse_polynomial("", &r).is_err());
        assert!(parse_polynomial("z9_9", &r).is_err());
        assert!(parse_polynomial("z1_1*3", &r).is_err());
        assert!(parse_polynomial("1/0", &r).is_err());
        assert!(parse_polynomial("z1_1^x", &r).is_err());
    }

    proptest! {
        #[test]
        fn round_trip(f in arb_poly(3, 6)) {
            let r = ring();
            prop_assert_eq!(parse_polynomial(&format_polynomial(&f, &r), &r).unwrap(), f);
        }
    }
}
