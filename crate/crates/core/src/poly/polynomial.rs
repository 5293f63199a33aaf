use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::order::TermOrder;

/// Exact field coefficients.
pub type Coeff = BigRational;

pub fn coeff(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub type Term = (Monomial, Coeff);

/// A polynomial with exact rational coefficients. Terms are kept in
/// canonical (graded-diagonal, descending) order with no zero coefficients,
/// so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<Term>,
}

const CANON: TermOrder = TermOrder::GradedDiagonal;

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        Self::from_term(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coeff::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_term(Monomial::var(nvars, i), Coeff::one())
    }

    pub fn from_term(m: Monomial, c: Coeff) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Self { nvars, terms: vec![(m, c)] }
    }

    /// Builds a polynomial from arbitrary terms, combining like monomials.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = Term>) -> Self {
        let mut terms: Vec<Term> = terms.into_iter().collect();
        debug_assert!(terms.iter().all(|(m, _)| m.nvars() == nvars));
        terms.sort_by(|a, b| CANON.cmp(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if out.last().is_some_and(|(_, lc)| lc.is_zero()) {
                        out.pop();
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|(_, lc)| lc.is_zero()) {
            out.pop();
        }
        Self { nvars, terms: out }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The largest term under `ord`.
    pub fn lead_term(&self, ord: TermOrder) -> Option<&Term> {
        if ord == CANON {
            return self.terms.first();
        }
        self.terms.iter().max_by(|a, b| ord.cmp(&a.0, &b.0))
    }

    pub fn lead_monomial(&self, ord: TermOrder) -> Option<&Monomial> {
        self.lead_term(ord).map(|t| &t.0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// Lowest degree among the terms.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    /// The homogeneous component of the given total degree.
    pub fn degree_part(&self, d: u32) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect();
        Self { nvars: self.nvars, terms }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Self { nvars: self.nvars, terms }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect();
        Self { nvars: self.nvars, terms }
    }

    /// Divides by the leading coefficient under the canonical order.
    pub fn monic(&self, ord: TermOrder) -> Self {
        match self.lead_term(ord) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Sends variables through `map`; terms involving a variable mapped to
    /// `None` vanish (that variable is set to zero).
    pub fn restrict(&self, map: &[Option<usize>], new_nvars: usize) -> Self {
        let terms = self.terms.iter().filter_map(|(m, c)| m.remap(map, new_nvars).map(|m| (m, c.clone())));
        Self::from_terms(new_nvars, terms)
    }

    /// Variables that occur in some term.
    pub fn variables(&self) -> Vec<usize> {
        let mut seen = vec![false; self.nvars];
        for (m, _) in &self.terms {
            for i in m.support() {
                seen[i] = true;
            }
        }
        (0..self.nvars).filter(|&i| seen[i]).collect()
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        assert_eq!(self.nvars, other.nvars, "polynomials from different rings");
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &Coeff| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match CANON.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), sign(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        Self { nvars: self.nvars, terms: out }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { nvars: self.nvars, terms }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomials from different rings");
        let mut acc = Polynomial::zero(self.nvars);
        for (m, c) in &rhs.terms {
            acc = &acc + &self.mul_term(m, c);
        }
        acc
    }
}

/// Standard-degree homogenization with a new variable `t` placed at index 0.
pub fn homogenize_t(f: &Polynomial) -> Polynomial {
    let n = f.nvars() + 1;
    let Some(top) = f.total_degree() else {
        return Polynomial::zero(n);
    };
    let terms = f.terms().iter().map(|(m, c)| {
        let gap = (top - m.degree()) as u16;
        (Monomial::from_exponents(std::iter::once(gap).chain(m.exponents().iter().copied())), c.clone())
    });
    Polynomial::from_terms(n, terms)
}

/// Specializes the variable at index 0 to 1 and drops it from the ring.
pub fn set_t_to_one(f: &Polynomial) -> Polynomial {
    let n = f.nvars() - 1;
    let terms =
        f.terms().iter().map(|(m, c)| (Monomial::from_exponents(m.exponents()[1..].iter().copied()), c.clone()));
    Polynomial::from_terms(n, terms)
}
