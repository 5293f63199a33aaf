//! Buchberger's algorithm with the normal selection strategy and the
//! Gebauer-Möller pair criteria, producing reduced Gröbner bases.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::monomial_ideal::minimalize;
use super::order::TermOrder;
use super::polynomial::{Coeff, Polynomial, Term};
use crate::budget;
use crate::error::Result;

/// A Gröbner basis together with the order it was computed for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: Vec<Polynomial>,
    order: TermOrder,
    reduced: bool,
    nvars: usize,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().filter_map(|g| g.lead_monomial(self.order).cloned()).collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.generators.iter().any(|g| !g.is_zero() && g.is_constant())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.generators, self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }
}

/// A polynomial with terms sorted descending under the working order.
#[derive(Clone, Debug)]
pub(crate) struct Working {
    terms: Vec<Term>,
    mask: u64,
}

fn support_mask(m: &Monomial) -> u64 {
    m.support().fold(0u64, |acc, i| acc | 1 << (i % 64))
}

impl Working {
    fn new(f: &Polynomial, ord: TermOrder) -> Self {
        let mut terms = f.terms().to_vec();
        if ord != TermOrder::GradedDiagonal {
            terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        }
        Self::from_sorted(terms)
    }

    fn from_sorted(terms: Vec<Term>) -> Self {
        let mask = terms.first().map_or(0, |t| support_mask(&t.0));
        Self { terms, mask }
    }

    fn lead(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn make_monic(&mut self) {
        let lc = self.terms[0].1.clone();
        if !lc.is_one() {
            let inv = lc.recip();
            for t in &mut self.terms {
                t.1 *= &inv;
            }
        }
    }

    fn to_polynomial(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().cloned())
    }
}

/// p − c·m·g for term lists sorted under `ord`.
fn sub_scaled(p: &[Term], c: &Coeff, m: &Monomial, g: &[Term], ord: TermOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut gi = g.iter().map(|(gm, gc)| (gm.mul(m), gc * c)).peekable();
    while i < p.len() {
        let Some((gm, _)) = gi.peek() else { break };
        match ord.cmp(&p[i].0, gm) {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (gm, gc) = gi.next().unwrap();
                out.push((gm, -gc));
            }
            Ordering::Equal => {
                let (gm, gc) = gi.next().unwrap();
                let nc = &p[i].1 - gc;
                if !nc.is_zero() {
                    out.push((gm, nc));
                }
                i += 1;
            }
        }
    }
    out.extend(p[i..].iter().cloned());
    out.extend(gi.map(|(gm, gc)| (gm, -gc)));
    out
}

fn find_divisor<'a>(m: &Monomial, basis: &'a [Working], active: Option<&[bool]>) -> Option<&'a Working> {
    let mask = support_mask(m);
    basis.iter().enumerate().find_map(|(k, g)| {
        let live = active.is_none_or(|a| a[k]);
        (live && g.mask & !mask == 0 && g.lead().divides(m)).then_some(g)
    })
}

/// Fully reduces sorted `terms` by monic `basis` elements.
fn reduce(terms: Vec<Term>, basis: &[Working], active: Option<&[bool]>, ord: TermOrder) -> Result<Vec<Term>> {
    let mut p = terms;
    let mut start = 0;
    let mut steps = 0u32;
    while start < p.len() {
        steps += 1;
        if steps.is_multiple_of(64) {
            budget::check()?;
        }
        let (lm, lc) = &p[start];
        match find_divisor(lm, basis, active) {
            Some(g) => {
                let q = g.lead().quotient_of(lm);
                let lc = lc.clone();
                let mut next: Vec<Term> = p.drain(..start).collect();
                let tail = sub_scaled(&p[1..], &lc, &q, &g.terms[1..], ord);
                next.extend(tail);
                p = next;
            }
            None => start += 1,
        }
    }
    Ok(p)
}

/// Remainder of `f` on division by `g` under `ord`.
pub fn normal_form(f: &Polynomial, g: &[Polynomial], ord: TermOrder) -> Polynomial {
    let basis: Vec<Working> = g
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let mut w = Working::new(p, ord);
            w.make_monic();
            w
        })
        .collect();
    let r = budget::suspended(|| reduce(Working::new(f, ord).terms, &basis, None, ord)).expect("no deadline installed");
    Polynomial::from_terms(f.nvars(), r)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Polynomial], ord: TermOrder) -> GroebnerBasis {
    budget::suspended(|| try_buchberger(gens, ord)).expect("no deadline installed")
}

/// [`buchberger`] honoring the current thread's deadline.
pub fn try_buchberger(gens: &[Polynomial], ord: TermOrder) -> Result<GroebnerBasis> {
    let nvars = gens.first().map_or(0, Polynomial::nvars);
    let mut basis: Vec<Working> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut input: Vec<Working> = gens.iter().filter(|g| !g.is_zero()).map(|g| Working::new(g, ord)).collect();
    input.sort_by(|a, b| ord.cmp(a.lead(), b.lead()));
    for w in input {
        let r = reduce(w.terms, &basis, Some(&active), ord)?;
        if !r.is_empty() && insert(r, &mut basis, &mut active, &mut pairs) {
            return Ok(finish(basis, active, ord, nvars));
        }
    }

    while !pairs.is_empty() {
        budget::check()?;
        let k = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.lcm
                    .degree()
                    .cmp(&q.lcm.degree())
                    .then_with(|| ord.cmp(&p.lcm, &q.lcm))
                    .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
            })
            .unwrap();
        let pair = pairs.swap_remove(k);
        let s = s_polynomial(&basis[pair.i], &basis[pair.j], &pair.lcm, ord);
        let r = reduce(s, &basis, Some(&active), ord)?;
        if !r.is_empty() && insert(r, &mut basis, &mut active, &mut pairs) {
            break;
        }
    }
    Ok(finish(basis, active, ord, nvars))
}

fn s_polynomial(f: &Working, g: &Working, lcm: &Monomial, ord: TermOrder) -> Vec<Term> {
    let mf = f.lead().quotient_of(lcm);
    let mg = g.lead().quotient_of(lcm);
    let scaled_f: Vec<Term> = f.terms[1..].iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
    sub_scaled(&scaled_f, &Coeff::one(), &mg, &g.terms[1..], ord)
}

/// Adds a new (nonzero, reduced) element and updates the pair set with the
/// Gebauer-Möller criteria. Returns true when the ideal became the unit ideal.
fn insert(terms: Vec<Term>, basis: &mut Vec<Working>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>) -> bool {
    let mut h = Working::from_sorted(terms);
    h.make_monic();
    let unit = h.lead().is_one();
    let hl = h.lead().clone();
    let hi = basis.len();

    let mut candidates: Vec<(usize, Monomial, bool)> =
        (0..hi).filter(|&g| active[g]).map(|g| (g, hl.lcm(basis[g].lead()), hl.is_coprime(basis[g].lead()))).collect();
    // Chain criterion among the new pairs: drop (h,g1) if some other (h,g2) has an lcm dividing it.
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    while let Some((g1, l1, coprime)) = candidates.pop() {
        let dominated = candidates.iter().chain(kept.iter()).any(|(_, l2, _)| l2.divides(&l1));
        if coprime || !dominated {
            kept.push((g1, l1, coprime));
        }
    }
    // Old pairs whose lcm is divisible by lt(h) with both new lcms differing are redundant.
    pairs.retain(|p| !(hl.divides(&p.lcm) && hl.lcm(basis[p.i].lead()) != p.lcm && hl.lcm(basis[p.j].lead()) != p.lcm));
    // Product criterion.
    pairs.extend(kept.into_iter().filter(|(_, _, coprime)| !coprime).map(|(g, lcm, _)| Pair { i: g, j: hi, lcm }));
    for g in 0..hi {
        if active[g] && hl.divides(basis[g].lead()) {
            active[g] = false;
        }
    }
    basis.push(h);
    active.push(true);
    unit
}

fn finish(basis: Vec<Working>, active: Vec<bool>, ord: TermOrder, nvars: usize) -> GroebnerBasis {
    let mut live: Vec<Working> = basis.into_iter().zip(active).filter(|(_, a)| *a).map(|(w, _)| w).collect();
    if let Some(unit) = live.iter().find(|w| w.lead().is_one()) {
        let one = unit.to_polynomial(nvars).monic(ord);
        return GroebnerBasis { generators: vec![one], order: ord, reduced: true, nvars };
    }
    // Drop elements whose lead is divisible by another's.
    live.sort_by(|a, b| ord.cmp(a.lead(), b.lead()));
    let mut minimal: Vec<Working> = Vec::new();
    for w in live {
        if !minimal.iter().any(|m| m.lead().divides(w.lead())) {
            minimal.push(w);
        }
    }
    // Tail-reduce each element by the others; leads are untouched.
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Working> =
            minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, w)| w.clone()).collect();
        let lead = minimal[k].terms[0].clone();
        let tail = budget::suspended(|| reduce(minimal[k].terms[1..].to_vec(), &others, None, ord))
            .expect("no deadline installed");
        let mut terms = vec![lead];
        terms.extend(tail);
        let mut w = Working::from_sorted(terms);
        w.make_monic();
        reduced.push(w.to_polynomial(nvars));
    }
    GroebnerBasis { generators: reduced, order: ord, reduced: true, nvars }
}

/// Whether two generating sets define the same ideal, by comparing reduced bases.
pub fn ideal_equal(a: &[Polynomial], b: &[Polynomial], ord: TermOrder) -> bool {
    let ga = buchberger(a, ord);
    let gb = buchberger(b, ord);
    let zero_a = ga.generators.is_empty();
    let zero_b = gb.generators.is_empty();
    if zero_a || zero_b {
        return zero_a == zero_b;
    }
    ga.generators == gb.generators
}

/// Minimal generators of the initial ideal.
pub fn initial_ideal(g: &GroebnerBasis) -> Vec<Monomial> {
    minimalize(g.lead_monomials())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::polynomial::{coeff, tests::arb_poly};
    use crate::poly::ring::VariableRing;
    use crate::poly::text::parse_polynomial;
    use proptest::prelude::*;

    fn ring(names: &[&str]) -> VariableRing {
        VariableRing::standard(names.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    fn polys(r: &VariableRing, text: &[&str]) -> Vec<Polynomial> {
        text.iter().map(|t| parse_polynomial(t, r).unwrap()).collect()
    }

    /// Every S-polynomial of the basis reduces to zero.
    fn is_groebner(g: &GroebnerBasis) -> bool {
        let gens = g.generators();
        let ord = g.order();
        for a in 0..gens.len() {
            for b in a + 1..gens.len() {
                let (la, ca) = gens[a].lead_term(ord).unwrap();
                let (lb, cb) = gens[b].lead_term(ord).unwrap();
                let l = la.lcm(lb);
                let s = &gens[a].mul_term(&la.quotient_of(&l), &cb.clone())
                    - &gens[b].mul_term(&lb.quotient_of(&l), &ca.clone());
                if !normal_form(&s, gens, ord).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(&["z1_1", "z1_2", "z1_3", "z3_1", "z4_1"]);
        let g = polys(&r, &["z1_1 - z3_1*z1_2 - z4_1*z1_3"]);
        let f = polys(&r, &["z1_1"])[0].clone();
        let expect = polys(&r, &["z3_1*z1_2 + z4_1*z1_3"])[0].clone();
        // z1_1 leads only under lex; graded orders pick a quadratic term.
        assert_eq!(normal_form(&f, &g, TermOrder::Lex), expect);
        assert_eq!(normal_form(&f, &g, TermOrder::GradedDiagonal), f);
        assert!(normal_form(&g[0], &g, TermOrder::Lex).is_zero());
        assert!(normal_form(&Polynomial::zero(5), &g, TermOrder::GradedDiagonal).is_zero());
    }

    #[test]
    fn twisted_cubic() {
        let r = ring(&["x", "y", "z", "w"]);
        let g = polys(&r, &["x*z - y^2", "y*w - z^2", "x*w - y*z"]);
        let gb = buchberger(&g, TermOrder::GradedDiagonal);
        assert!(is_groebner(&gb));
        assert_eq!(gb.generators().len(), 3);
        let lex = buchberger(&g, TermOrder::Lex);
        assert!(is_groebner(&lex));
        assert!(ideal_equal(gb.generators(), lex.generators(), TermOrder::GradedDiagonal));
    }

    #[test]
    fn unit_and_zero_ideals() {
        let r = ring(&["x", "y"]);
        let g = polys(&r, &["x*y - 1", "x"]);
        let gb = buchberger(&g, TermOrder::GradedDiagonal);
        assert!(gb.is_unit_ideal());
        assert_eq!(gb.generators(), &[Polynomial::one(2)]);
        assert!(buchberger(&[], TermOrder::Lex).generators().is_empty());
        assert!(buchberger(&[Polynomial::zero(2)], TermOrder::Lex).generators().is_empty());
    }

    #[test]
    fn monomial_input_is_its_own_basis() {
        let r = ring(&["x", "y", "z"]);
        let g = polys(&r, &["x^2*y", "y*z", "x^3"]);
        let gb = buchberger(&g, TermOrder::GradedDiagonal);
        let mut got = gb.generators().to_vec();
        let mut want = g.clone();
        got.sort_by_key(|p| format!("{p:?}"));
        want.sort_by_key(|p| format!("{p:?}"));
        assert_eq!(got, want);
    }

    #[test]
    fn scaling_and_self_equality() {
        let r = ring(&["z1_1"]);
        let a = polys(&r, &["z1_1"]);
        let b = polys(&r, &["2*z1_1"]);
        assert!(ideal_equal(&a, &b, TermOrder::GradedDiagonal));
        assert!(ideal_equal(&a, &a, TermOrder::Lex));
        assert!(!ideal_equal(&a, &[], TermOrder::Lex));
    }

    #[test]
    fn initial_ideal_of_principal() {
        let r = ring(&["x", "y"]);
        let f = polys(&r, &["x^2 + 3*y^3 - x"]);
        let gb = buchberger(&f, TermOrder::GradedDiagonal);
        assert_eq!(initial_ideal(&gb), vec![Monomial::var_pow(2, 1, 3)]);
        let _ = coeff(1);
    }

    #[test]
    fn deadline_interrupts() {
        let r = ring(&["a", "b", "c", "d"]);
        let g = polys(&r, &["a^3*b - c^2*d^2 + a", "b^3*c - d^4 + a*b", "a*c^3 - b*d^3 + c"]);
        let out =
            budget::with_deadline(Some(std::time::Duration::ZERO), || try_buchberger(&g, TermOrder::GradedDiagonal));
        assert_eq!(out, Err(crate::Error::Timeout));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn random_ideals(gens in proptest::collection::vec(arb_poly(3, 4), 1..4)) {
            for ord in TermOrder::ALL {
                let gb = buchberger(&gens, ord);
                prop_assert!(is_groebner(&gb));
                for g in &gens {
                    prop_assert!(gb.contains(g));
                }
                for g in gb.generators() {
                    // Generators lie in the ideal: they reduce to zero modulo a basis of the input
                    // computed for a different order.
                    let other = buchberger(&gens, TermOrder::GradedDiagonal);
                    prop_assert!(other.contains(g));
                }
                let mut shuffled = gens.clone();
                shuffled.reverse();
                prop_assert_eq!(buchberger(&shuffled, ord), gb);
            }
        }

        #[test]
        fn division_remainder(f in arb_poly(3, 6), gens in proptest::collection::vec(arb_poly(3, 3), 1..3)) {
            let ord = TermOrder::GradedDiagonal;
            let r = normal_form(&f, &gens, ord);
            let leads: Vec<Monomial> = gens.iter().filter_map(|g| g.lead_monomial(ord).cloned()).collect();
            for (m, _) in r.terms() {
                prop_assert!(!leads.iter().any(|l| l.divides(m)));
            }
            let gb = buchberger(&gens, ord);
            prop_assert!(gb.contains(&(&f - &r)));
        }
    }
}
