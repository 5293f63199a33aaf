use std::fmt;

use smallvec::SmallVec;

type Exps = SmallVec<[u16; 16]>;

/// A monomial stored as a dense exponent vector over a fixed number of
/// variables, together with its total degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self { exps: smallvec::smallvec![0; nvars], degree: 0 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::var_pow(nvars, i, 1)
    }

    pub fn var_pow(nvars: usize, i: usize, e: u16) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = e;
        m.degree = e as u32;
        m
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = u16>) -> Self {
        let exps: Exps = exps.into_iter().collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Self { exps, degree }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Indices of the variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Self { exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// other / self, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Self {
        debug_assert!(self.divides(other));
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Self { exps, degree: other.degree - self.degree }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self::from_exponents(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Self::from_exponents(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)))
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Lowers the exponent of variable `i` by one, saturating at zero.
    pub fn colon_var(&self, i: usize) -> Self {
        let mut m = self.clone();
        if m.exps[i] > 0 {
            m.exps[i] -= 1;
            m.degree -= 1;
        }
        m
    }

    /// Moves exponents to new positions; `None` targets must carry exponent zero.
    pub fn remap(&self, map: &[Option<usize>], new_nvars: usize) -> Option<Self> {
        let mut out = Self::one(new_nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let j = map[i]?;
            out.exps[j] += e;
        }
        out.degree = self.degree;
        Some(out)
    }

    /// Weighted degree under an integer weight per variable.
    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.exps.iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{:?}", self.exps.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e.iter().copied())
    }

    #[test]
    fn arithmetic() {
        let a = m(&[2, 0, 1]);
        let b = m(&[1, 3, 0]);
        assert_eq!(a.mul(&b), m(&[3, 3, 1]));
        assert_eq!(a.mul(&b).degree(), 7);
        assert_eq!(a.lcm(&b), m(&[2, 3, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 0, 0]));
        assert!(m(&[1, 0, 1]).divides(&a));
        assert!(!b.divides(&a));
        assert_eq!(m(&[1, 0, 1]).quotient_of(&a), m(&[1, 0, 0]));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 2, 1])));
        assert_eq!(a.colon_var(0), m(&[1, 0, 1]));
        assert_eq!(a.colon_var(1), a);
        assert_eq!(a.support().collect::<Vec<_>>(), vec![0, 2]);
        assert!(Monomial::one(3).is_one());
    }

    #[test]
    fn remapping() {
        let a = m(&[2, 0, 1]);
        assert_eq!(a.remap(&[Some(1), None, Some(0)], 2), Some(m(&[1, 2])));
        assert_eq!(a.remap(&[None, Some(0), Some(1)], 2), None);
    }
}
