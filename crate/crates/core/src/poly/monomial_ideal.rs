//! Combinatorics of monomial ideals: minimal generators, Krull dimension and
//! degree of the quotient ring.

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Minimal generators under divisibility, sorted and de-duplicated.
pub fn minimalize(gens: impl IntoIterator<Item = Monomial>) -> Vec<Monomial> {
    let mut gens: Vec<Monomial> = gens.into_iter().collect();
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.exponents().cmp(b.exponents())));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Krull dimension of S/M: the number of variables minus the smallest set of
/// variables meeting every generator's support.
pub fn monomial_dimension(gens: &[Monomial], nvars: usize) -> usize {
    let mut supports: Vec<Vec<usize>> = gens.iter().map(|m| m.support().collect()).collect();
    if supports.iter().any(|s| s.is_empty()) {
        // The unit ideal: empty quotient, reported as dimension zero.
        return 0;
    }
    supports.sort_by_key(|s| s.len());
    supports.dedup();
    let mut chosen = vec![false; nvars];
    let mut best = nvars;
    hitting_set(&supports, &mut chosen, 0, &mut best);
    nvars - best
}

fn hitting_set(supports: &[Vec<usize>], chosen: &mut [bool], size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    let unhit = supports.iter().filter(|s| !s.iter().any(|&v| chosen[v]));
    let Some(edge) = unhit.min_by_key(|s| s.len()) else {
        *best = size;
        return;
    };
    // Any cover needs at least one more variable.
    if size + 1 >= *best {
        return;
    }
    for &v in edge {
        chosen[v] = true;
        hitting_set(supports, chosen, size + 1, best);
        chosen[v] = false;
    }
}

/// Numerator N(t) of the Hilbert series N(t)/(1−t)ⁿ of S/M under the
/// standard grading, as coefficients of 1, t, t², ….
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<i128> {
    let mut n = numerator(minimalize(gens.iter().cloned()));
    while n.len() > 1 && n.last() == Some(&0) {
        n.pop();
    }
    n
}

fn numerator(gens: Vec<Monomial>) -> Vec<i128> {
    if gens.is_empty() {
        return vec![1];
    }
    let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let mut acc = vec![1i128];
        for g in &gens {
            acc = poly_mul(&acc, &one_minus_t_pow(g.degree() as usize));
        }
        return acc;
    }
    let nvars = gens[0].nvars();
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let pivot = (0..nvars).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).unwrap();
    let x = Monomial::var(nvars, pivot);
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exponent(pivot) == 0).cloned().collect();
    plus.push(x);
    let colon = minimalize(gens.iter().map(|g| g.colon_var(pivot)));
    let a = numerator(plus);
    let b = numerator(colon);
    let mut out = a;
    if out.len() < b.len() + 1 {
        out.resize(b.len() + 1, 0);
    }
    for (i, c) in b.iter().enumerate() {
        out[i + 1] += c;
    }
    out
}

fn one_minus_t_pow(d: usize) -> Vec<i128> {
    let mut p = vec![0; d + 1];
    p[0] = 1;
    p[d] -= 1;
    p
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Degree of S/M: after cancelling (1−t) from the Hilbert numerator as often
/// as possible, the value of what remains at t = 1.
pub fn monomial_degree(gens: &[Monomial], nvars: usize) -> Result<u64> {
    let mut n = hilbert_numerator(gens);
    if n.iter().all(|&c| c == 0) {
        return Err(Error::Inconsistent("unit ideal has no degree".into()));
    }
    let mut cancelled = 0;
    while n.iter().sum::<i128>() == 0 {
        // Synthetic division by (1 − t).
        let mut q = Vec::with_capacity(n.len() - 1);
        let mut acc = 0i128;
        for &c in &n[..n.len() - 1] {
            acc += c;
            q.push(acc);
        }
        n = q;
        cancelled += 1;
    }
    let codim = nvars - monomial_dimension(gens, nvars);
    if cancelled != codim {
        return Err(Error::Inconsistent(format!(
            "Hilbert numerator vanishes to order {cancelled}, codimension is {codim}"
        )));
    }
    let value: i128 = n.iter().sum();
    u64::try_from(value)
        .ok()
        .filter(|&v| v > 0)
        .ok_or_else(|| Error::Inconsistent(format!("nonpositive degree {value}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e.iter().copied())
    }

    fn binom(n: i128, k: i128) -> i128 {
        if k < 0 || n < k {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    /// Number of degree-d monomials outside the ideal, by enumeration.
    fn standard_count(gens: &[Monomial], nvars: usize, d: u16) -> i128 {
        fn rec(exps: &mut Vec<u16>, left: u16, at: usize, gens: &[Monomial], count: &mut i128) {
            if at + 1 == exps.len() {
                exps[at] = left;
                let mono = Monomial::from_exponents(exps.iter().copied());
                if !gens.iter().any(|g| g.divides(&mono)) {
                    *count += 1;
                }
                return;
            }
            for e in 0..=left {
                exps[at] = e;
                rec(exps, left - e, at + 1, gens, count);
            }
        }
        let mut exps = vec![0; nvars];
        let mut count = 0;
        rec(&mut exps, d, 0, gens, &mut count);
        count
    }

    #[test]
    fn minimal_generators() {
        let g = minimalize(vec![m(&[2, 1]), m(&[1, 0]), m(&[0, 3]), m(&[1, 0])]);
        assert_eq!(g, vec![m(&[1, 0]), m(&[0, 3])]);
    }

    #[test]
    fn dimensions() {
        assert_eq!(monomial_dimension(&[], 5), 5);
        let all: Vec<_> = (0..4).map(|i| Monomial::var(4, i)).collect();
        assert_eq!(monomial_dimension(&all, 4), 0);
        // x0 x1, x1 x2, x2 x3: the 4-cycle path needs two variables.
        assert_eq!(monomial_dimension(&[m(&[1, 1, 0, 0]), m(&[0, 1, 1, 0]), m(&[0, 0, 1, 1])], 4), 2);
        assert_eq!(monomial_dimension(&[Monomial::one(3)], 3), 0);
    }

    #[test]
    fn degrees() {
        assert_eq!(monomial_degree(&[], 5).unwrap(), 1);
        assert_eq!(monomial_degree(&[m(&[2])], 1).unwrap(), 2);
        // Two coordinate lines in the plane meeting at a point: x*y.
        assert_eq!(monomial_degree(&[m(&[1, 1])], 2).unwrap(), 2);
        // Three coordinate axes in 3-space.
        assert_eq!(monomial_degree(&[m(&[1, 1, 0]), m(&[1, 0, 1]), m(&[0, 1, 1])], 3).unwrap(), 3);
        assert!(monomial_degree(&[Monomial::one(2)], 2).is_err());
    }

    fn mono_ideal(nvars: usize) -> impl Strategy<Value = Vec<Monomial>> {
        proptest::collection::vec(proptest::collection::vec(0u16..3, nvars).prop_map(Monomial::from_exponents), 0..5)
            .prop_map(|v| v.into_iter().filter(|g| !g.is_one()).collect())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn hilbert_series_matches_enumeration(gens in mono_ideal(4)) {
            let nvars = 4;
            let num = hilbert_numerator(&gens);
            for d in 0..8i128 {
                // Coefficient of t^d in N(t) / (1 − t)^n.
                let series: i128 = num.iter().enumerate().map(|(i, c)| c * binom(d - i as i128 + nvars as i128 - 1, nvars as i128 - 1)).sum();
                prop_assert_eq!(series, standard_count(&gens, nvars, d as u16));
            }
        }

        #[test]
        fn degree_matches_hilbert_polynomial(gens in mono_ideal(3)) {
            // For large d the Hilbert function is deg/(dim−1)! d^(dim−1) + …;
            // compare via the (dim−1)-th finite difference at large d.
            let nvars = 3;
            let dim = monomial_dimension(&gens, nvars);
            prop_assume!(dim > 0);
            let deg = monomial_degree(&gens, nvars).unwrap() as i128;
            let h = |d: u16| standard_count(&gens, nvars, d);
            let base = 14u16;
            let mut diff: i128 = 0;
            for k in 0..dim {
                let sign = if (dim - 1 - k).is_multiple_of(2) { 1 } else { -1 };
                diff += sign * binom(dim as i128 - 1, k as i128) * h(base + k as u16);
            }
            prop_assert_eq!(diff, deg);
        }
    }
}
