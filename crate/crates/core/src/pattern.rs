//! Classical and interval pattern embeddings, and loci generated by interval
//! patterns.
//!
//! An interval pattern [u,v] embeds in w at indices φ when v classically
//! embeds at φ and the induced permutation Φ(u) (w off φ, patterned as u on
//! φ) satisfies ℓ(v) − ℓ(u) = ℓ(w) − ℓ(Φ(u)).

use std::collections::BTreeSet;
use std::fmt;

use log::debug;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{BruhatInterval, Permutation};

/// Strictly increasing positions φ₁ < … < φ_m inside {1..n}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Embedding {
    indices: Vec<usize>,
    n: usize,
}

impl Embedding {
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Self> {
        let increasing = indices.windows(2).all(|p| p[0] < p[1]);
        let in_bounds = indices.iter().all(|&i| (1..=n).contains(&i));
        if !increasing || !in_bounds {
            return Err(Error::Precondition(format!("{indices:?} is not an increasing index set in 1..={n}")));
        }
        Ok(Self { indices, n })
    }

    /// The identity embedding of S_m into itself.
    pub fn identity(m: usize) -> Self {
        Self { indices: (1..=m).collect(), n: m }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn m(&self) -> usize {
        self.indices.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Positions of {1..n} outside the embedding, increasing.
    pub fn complement(&self) -> Vec<usize> {
        (1..=self.n).filter(|i| !self.indices.contains(i)).collect()
    }

    /// Index t with φ_t = pos, if pos is one of the embedding positions.
    pub fn position_of(&self, pos: usize) -> Option<usize> {
        self.indices.iter().position(|&i| i == pos).map(|t| t + 1)
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// An interval [u,v] used as a pattern.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntervalPattern {
    interval: BruhatInterval,
}

impl IntervalPattern {
    pub fn new(bottom: Permutation, top: Permutation) -> Result<Self> {
        Ok(Self { interval: BruhatInterval::new(bottom, top)? })
    }

    /// The pattern [p,p], which interval-embeds exactly where p classically embeds.
    pub fn classical(p: Permutation) -> Self {
        Self::new(p.clone(), p).expect("reflexive interval")
    }

    pub fn bottom(&self) -> &Permutation {
        self.interval.bottom()
    }

    pub fn top(&self) -> &Permutation {
        self.interval.top()
    }

    pub fn interval(&self) -> &BruhatInterval {
        &self.interval
    }
}

impl fmt::Display for IntervalPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.interval.fmt(f)
    }
}

/// A finite generating set of interval patterns for a property's order ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternIdealGenerators {
    pub name: String,
    pub generators: Vec<IntervalPattern>,
    /// Set when the generating set is only conjectured to be complete.
    pub conjectural: bool,
}

/// All index sets at which `w` contains `v` classically, in lexicographic order.
pub fn classical_embeddings(v: &Permutation, w: &Permutation) -> Vec<Embedding> {
    let (m, n) = (v.n(), w.n());
    let mut out = Vec::new();
    if m > n {
        return out;
    }
    let mut chosen = Vec::with_capacity(m);
    extend_embedding(v, w, &mut chosen, &mut out);
    out
}

fn extend_embedding(v: &Permutation, w: &Permutation, chosen: &mut Vec<usize>, out: &mut Vec<Embedding>) {
    let (m, n) = (v.n(), w.n());
    let t = chosen.len();
    if t == m {
        out.push(Embedding { indices: chosen.clone(), n });
        return;
    }
    let start = chosen.last().map_or(1, |&p| p + 1);
    // Leave room for the remaining m - t - 1 positions.
    for pos in start..=n - (m - t - 1) {
        let wv = w.at(pos);
        let consistent = chosen.iter().enumerate().all(|(s, &q)| (w.at(q) < wv) == (v.at(s + 1) < v.at(t + 1)));
        if consistent {
            chosen.push(pos);
            extend_embedding(v, w, chosen, out);
            chosen.pop();
        }
    }
}

fn is_classical_embedding(v: &Permutation, w: &Permutation, phi: &Embedding) -> bool {
    if phi.m() != v.n() || phi.n() != w.n() {
        return false;
    }
    let idx = phi.indices();
    (0..idx.len()).all(|a| (a + 1..idx.len()).all(|b| (w.at(idx[a]) < w.at(idx[b])) == (v.at(a + 1) < v.at(b + 1))))
}

/// Φ(u): agrees with `w` off φ and carries the pattern `u` on φ, with
/// Φ(u)(φ_j) = w(φ_{v⁻¹(u(j))}).
pub fn phi_image(u: &Permutation, v: &Permutation, w: &Permutation, phi: &Embedding) -> Result<Permutation> {
    if u.n() != v.n() {
        return Err(Error::RankMismatch(u.n(), v.n()));
    }
    if !is_classical_embedding(v, w, phi) {
        return Err(Error::NotAnEmbedding { pattern: v.to_string(), target: w.to_string() });
    }
    Ok(phi_image_unchecked(u, v, w, phi))
}

fn phi_image_unchecked(u: &Permutation, v: &Permutation, w: &Permutation, phi: &Embedding) -> Permutation {
    let vinv = v.inverse();
    let idx = phi.indices();
    let mut word = w.word();
    for j in 1..=u.n() {
        word[idx[j - 1] - 1] = w.at(idx[vinv.at(u.at(j)) - 1]);
    }
    Permutation::new(word).expect("Φ(u) is a permutation")
}

/// Whether φ carries [u,v] onto an interval [Φ(u),w] of the same height.
pub fn is_interval_embedding(u: &Permutation, v: &Permutation, w: &Permutation, phi: &Embedding) -> Result<bool> {
    if !u.bruhat_le(v) {
        return Err(Error::NotBelow { x: u.to_string(), w: v.to_string() });
    }
    let x = phi_image(u, v, w, phi)?;
    Ok(v.length() - u.length() + x.length() == w.length())
}

/// All interval embeddings of `pat` into `w` together with Φ(bottom).
pub fn interval_embeddings(pat: &IntervalPattern, w: &Permutation) -> Vec<(Embedding, Permutation)> {
    let (u, v) = (pat.bottom(), pat.top());
    let gap = v.length() - u.length();
    classical_embeddings(v, w)
        .into_iter()
        .filter_map(|phi| {
            let x = phi_image_unchecked(u, v, w, &phi);
            (x.length() + gap == w.length()).then_some((phi, x))
        })
        .collect()
}

pub fn interval_avoids(w: &Permutation, pat: &IntervalPattern) -> bool {
    interval_embeddings(pat, w).is_empty()
}

/// Bruhat-maximal points Φ(u) over all interval embeddings of the generators
/// into `w`. The locus is the union of the cells below these points.
pub fn locus_max_points(w: &Permutation, gens: &PatternIdealGenerators) -> BTreeSet<Permutation> {
    let mut candidates = BTreeSet::new();
    for pat in &gens.generators {
        if pat.top().n() > w.n() {
            continue;
        }
        candidates.extend(interval_embeddings(pat, w).into_iter().map(|(_, x)| x));
    }
    let maxima: BTreeSet<Permutation> =
        candidates.iter().filter(|x| !candidates.iter().any(|y| y != *x && x.bruhat_le(y))).cloned().collect();
    if maxima.len() != candidates.len() {
        debug!("{} locus of {w}: pruned {} comparable points", gens.name, candidates.len() - maxima.len());
    }
    maxima
}

/// Whether the property holds at e_x on X_w according to the generators.
pub fn locus_contains(x: &Permutation, w: &Permutation, gens: &PatternIdealGenerators) -> Result<bool> {
    if x.n() != w.n() {
        return Err(Error::RankMismatch(x.n(), w.n()));
    }
    if !x.bruhat_le(w) {
        return Err(Error::NotBelow { x: x.to_string(), w: w.to_string() });
    }
    Ok(locus_max_points(w, gens).iter().any(|p| x.bruhat_le(p)))
}

/// The segment j, j−1, …, i (empty when j < i).
fn segment(j: usize, i: usize) -> impl Iterator<Item = usize> {
    (i..=j).rev()
}

fn make(bottom: Vec<usize>, top: Vec<usize>) -> IntervalPattern {
    let bottom = Permutation::new(bottom).expect("family bottom is a permutation");
    let top = Permutation::new(top).expect("family top is a permutation");
    IntervalPattern::new(bottom, top).expect("family instance is an interval")
}

/// [(a+1)a⋯1 (a+b+2)⋯(a+2), (a+b+2)(a+1)a⋯2 (a+b+1)⋯(a+2) 1], in S_{a+b+2}.
pub fn family_one(a: usize, b: usize) -> IntervalPattern {
    let bottom = segment(a + 1, 1).chain(segment(a + b + 2, a + 2)).collect();
    let top = std::iter::once(a + b + 2)
        .chain(segment(a + 1, 2))
        .chain(segment(a + b + 1, a + 2))
        .chain(std::iter::once(1))
        .collect();
    make(bottom, top)
}

/// [(a+1)⋯1 (a+3)(a+2) (a+b+4)⋯(a+4), (a+3)(a+1)⋯2 (a+b+4) 1 (a+b+3)⋯(a+4) (a+2)], in S_{a+b+4}.
pub fn family_two(a: usize, b: usize) -> IntervalPattern {
    let bottom = segment(a + 1, 1).chain([a + 3, a + 2]).chain(segment(a + b + 4, a + 4)).collect();
    let top = std::iter::once(a + 3)
        .chain(segment(a + 1, 2))
        .chain([a + b + 4, 1])
        .chain(segment(a + b + 3, a + 4))
        .chain(std::iter::once(a + 2))
        .collect();
    make(bottom, top)
}

/// [1 (a+3)⋯2 (a+4), (a+3)(a+4)(a+2)⋯3 1 2], in S_{a+4}.
pub fn family_three(a: usize) -> IntervalPattern {
    let bottom = std::iter::once(1).chain(segment(a + 3, 2)).chain(std::iter::once(a + 4)).collect();
    let top = [a + 3, a + 4].into_iter().chain(segment(a + 2, 3)).chain([1, 2]).collect();
    make(bottom, top)
}

fn family_one_instances(n: usize, keep: impl Fn(usize, usize) -> bool) -> Vec<IntervalPattern> {
    let mut out = Vec::new();
    for a in 1..n {
        for b in 1..n {
            if a + b + 2 <= n && keep(a, b) {
                out.push(family_one(a, b));
            }
        }
    }
    out
}

fn family_two_instances(n: usize, keep: impl Fn(usize, usize) -> bool) -> Vec<IntervalPattern> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a + b + 4 <= n && keep(a, b) {
                out.push(family_two(a, b));
            }
        }
    }
    out
}

/// Minimal generators of the singular-locus order ideal fitting in S_m, m ≤ n.
pub fn singular_generators(n: usize) -> PatternIdealGenerators {
    let mut generators = family_one_instances(n, |_, _| true);
    generators.extend(family_two_instances(n, |_, _| true));
    generators.extend((1..).take_while(|a| a + 4 <= n).map(family_three));
    PatternIdealGenerators { name: "singular".into(), generators, conjectural: false }
}

/// Intervals whose avoidance characterises Gorenstein Schubert varieties.
pub fn gorenstein_generators(n: usize) -> PatternIdealGenerators {
    let mut generators = family_one_instances(n, |a, b| a != b);
    generators.extend(family_two_instances(n, |a, b| a > 0 || b > 0));
    PatternIdealGenerators { name: "gorenstein".into(), generators, conjectural: false }
}

/// Conjectured generators of the non-Gorenstein locus (same intervals as
/// [`gorenstein_generators`], read as locus generators).
pub fn non_gorenstein_generators(n: usize) -> PatternIdealGenerators {
    PatternIdealGenerators { name: "non-gorenstein".into(), conjectural: true, ..gorenstein_generators(n) }
}

/// Classical 4231 (as [4231,4231]) and the interval [3142,3412].
pub fn factorial_generators(n: usize) -> PatternIdealGenerators {
    let mut generators = Vec::new();
    if n >= 4 {
        generators.push(IntervalPattern::classical("4231".parse().unwrap()));
        generators.push(IntervalPattern::new("3142".parse().unwrap(), "3412".parse().unwrap()).unwrap());
    }
    PatternIdealGenerators { name: "factorial".into(), generators, conjectural: false }
}

/// Conjectured generators of the non-factorial locus: families one and two
/// without restriction.
pub fn non_factorial_generators(n: usize) -> PatternIdealGenerators {
    let mut generators = family_one_instances(n, |_, _| true);
    generators.extend(family_two_instances(n, |_, _| true));
    PatternIdealGenerators { name: "non-factorial".into(), generators, conjectural: true }
}
