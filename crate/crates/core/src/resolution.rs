//! Free resolutions of S/I for ideals homogeneous under a positive grading,
//! via Schreyer's algorithm.
//!
//! Level 1 is a reduced Gröbner basis of I. Each later level consists of the
//! syzygies of the previous one obtained from S-pairs sharing a lead
//! component; under the induced Schreyer order these are again a Gröbner
//! basis, so no further Buchberger runs are needed. The resulting resolution
//! is usually not minimal; Betti numbers are read off from the ranks of the
//! constant parts of the differentials, and [`minimize_resolution`] cancels
//! unit entries symbolically.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::budget;
use crate::error::{Error, Result};
use crate::klideal::KLIdealSpec;
use crate::poly::{try_buchberger, Coeff, Monomial, Polynomial, TermOrder};

const ORDER: TermOrder = TermOrder::GradedDiagonal;

/// A graded map F_k → F_{k−1} stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModuleMap {
    source_degrees: Vec<i64>,
    target_degrees: Vec<i64>,
    columns: Vec<BTreeMap<usize, Polynomial>>,
    nvars: usize,
}

impl FreeModuleMap {
    pub fn source_rank(&self) -> usize {
        self.source_degrees.len()
    }

    pub fn target_rank(&self) -> usize {
        self.target_degrees.len()
    }

    pub fn source_degrees(&self) -> &[i64] {
        &self.source_degrees
    }

    pub fn target_degrees(&self) -> &[i64] {
        &self.target_degrees
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// The image of the j-th source basis element, by target row.
    pub fn column(&self, j: usize) -> &BTreeMap<usize, Polynomial> {
        &self.columns[j]
    }

    pub fn entry(&self, row: usize, col: usize) -> Polynomial {
        self.columns[col].get(&row).cloned().unwrap_or_else(|| Polynomial::zero(self.nvars))
    }

    /// Whether some entry is a nonzero constant.
    pub fn has_unit_entry(&self) -> bool {
        self.columns.iter().any(|c| c.values().any(|p| !p.is_zero() && p.is_constant()))
    }

    /// The composite `self ∘ next`.
    pub fn compose(&self, next: &FreeModuleMap) -> FreeModuleMap {
        let columns = next
            .columns
            .iter()
            .map(|col| {
                let mut out: BTreeMap<usize, Polynomial> = BTreeMap::new();
                for (&mid, q) in col {
                    for (&row, p) in &self.columns[mid] {
                        let prod = p * q;
                        let slot = out.entry(row).or_insert_with(|| Polynomial::zero(self.nvars));
                        *slot = &*slot + &prod;
                    }
                }
                out.retain(|_, p| !p.is_zero());
                out
            })
            .collect();
        FreeModuleMap {
            source_degrees: next.source_degrees.clone(),
            target_degrees: self.target_degrees.clone(),
            columns,
            nvars: self.nvars,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(BTreeMap::is_empty)
    }
}

/// Betti numbers, total and graded by the coarse degree of the basis elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "BettiRepr", from = "BettiRepr")]
pub struct BettiTable {
    totals: Vec<usize>,
    graded: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    fn from_graded(graded: BTreeMap<(usize, i64), usize>) -> Self {
        let graded: BTreeMap<(usize, i64), usize> = graded.into_iter().filter(|(_, b)| *b > 0).collect();
        let len = graded.keys().map(|(i, _)| i + 1).max().unwrap_or(1);
        let mut totals = vec![0; len];
        for (&(i, _), &b) in &graded {
            totals[i] += b;
        }
        Self { totals, graded }
    }

    /// β₀, β₁, …, up to the last nonzero one.
    pub fn totals(&self) -> &[usize] {
        &self.totals
    }

    /// β_{i,d}: the number of degree-d basis elements in homological degree i.
    pub fn graded(&self, i: usize, d: i64) -> usize {
        self.graded.get(&(i, d)).copied().unwrap_or(0)
    }

    pub fn graded_entries(&self) -> impl Iterator<Item = (usize, i64, usize)> + '_ {
        self.graded.iter().map(|(&(i, d), &b)| (i, d, b))
    }

    /// Projective dimension of S/I.
    pub fn length(&self) -> usize {
        self.totals.len() - 1
    }

    /// The last nonzero Betti number.
    pub fn last(&self) -> usize {
        *self.totals.last().unwrap()
    }
}

/// Serialized form: totals plus (i, d, β_{i,d}) triples.
#[derive(Serialize, Deserialize)]
struct BettiRepr {
    totals: Vec<usize>,
    graded: Vec<(usize, i64, usize)>,
}

impl From<BettiTable> for BettiRepr {
    fn from(t: BettiTable) -> Self {
        let graded = t.graded_entries().collect();
        Self { totals: t.totals, graded }
    }
}

impl From<BettiRepr> for BettiTable {
    fn from(r: BettiRepr) -> Self {
        BettiTable::from_graded(r.graded.into_iter().map(|(i, d, b)| ((i, d), b)).collect())
    }
}

/// Rows are indexed by degree minus homological index, columns by the index.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols = self.totals.len();
        let rows: Vec<i64> = self.graded.keys().map(|&(i, d)| d - i as i64).collect();
        let lo = rows.iter().copied().min().unwrap_or(0).min(0);
        let hi = rows.iter().copied().max().unwrap_or(0);
        let label_width = format!("{hi}").len().max(format!("{lo}").len()).max("total".len());
        let cell = |v: usize| if v == 0 { ".".to_string() } else { v.to_string() };
        let width = self.totals.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        let totals: Vec<String> = self.totals.iter().map(|&v| format!("{:>width$}", v)).collect();
        writeln!(f, "{:>label_width$}: {}", "total", totals.join(" "))?;
        for r in lo..=hi {
            let entries: Vec<String> =
                (0..cols).map(|i| format!("{:>width$}", cell(self.graded(i, r + i as i64)))).collect();
            writeln!(f, "{:>label_width$}: {}", r, entries.join(" "))?;
        }
        Ok(())
    }
}

/// A term c·m·ε_comp together with its Schreyer total monomial m·T_comp.
#[derive(Clone, Debug)]
struct ModTerm {
    mono: Monomial,
    comp: usize,
    total: Monomial,
    coeff: Coeff,
}

/// One level of the frame: basis elements of F_L with their images in F_{L−1}.
#[derive(Debug)]
struct Level {
    /// Images of the basis elements, sorted descending in the order on F_{L−1}.
    images: Vec<Vec<ModTerm>>,
    /// Total monomials T_i = LM(image_i)·T_{comp}.
    totals: Vec<Monomial>,
    /// Position in the tie-break order; larger means larger.
    pos: Vec<usize>,
    degrees: Vec<i64>,
}

fn cmp_terms(a: &ModTerm, b: &ModTerm, pos: &[usize]) -> Ordering {
    ORDER.cmp(&a.total, &b.total).then_with(|| pos[a.comp].cmp(&pos[b.comp]))
}

fn weighted(m: &Monomial, weights: &[i64]) -> i64 {
    m.weighted_degree(weights)
}

/// The frame of a Schreyer resolution of S/⟨gens⟩ up to `max_level`.
struct Frame {
    levels: Vec<Level>,
    nvars: usize,
}

fn build_frame(gens: &[Polynomial], nvars: usize, weights: &[i64], max_level: Option<usize>) -> Result<Frame> {
    let base = Level { images: vec![Vec::new()], totals: vec![Monomial::one(nvars)], pos: vec![0], degrees: vec![0] };
    let mut levels = vec![base];
    let gb = try_buchberger(gens, ORDER)?;
    if gb.is_unit_ideal() {
        return Err(Error::Precondition("cannot resolve the unit ideal".into()));
    }
    if gb.generators().is_empty() {
        return Ok(Frame { levels, nvars });
    }
    // Level 1: the Gröbner basis, ordered lex-descending by lead monomial.
    let mut first: Vec<Vec<ModTerm>> = gb
        .generators()
        .iter()
        .map(|g| {
            g.terms()
                .iter()
                .map(|(m, c)| ModTerm { mono: m.clone(), comp: 0, total: m.clone(), coeff: c.clone() })
                .collect()
        })
        .collect();
    first.sort_by(|a, b| b[0].mono.exponents().cmp(a[0].mono.exponents()));
    levels.push(make_level(first, &levels[0], weights));

    loop {
        if max_level.is_some_and(|m| levels.len() > m) {
            break;
        }
        budget::check()?;
        let prev = &levels[levels.len() - 2];
        let cur = levels.last().unwrap();
        let next = syzygies(cur, prev)?;
        if next.is_empty() {
            break;
        }
        let level = make_level(next, cur, weights);
        levels.push(level);
    }
    Ok(Frame { levels, nvars })
}

/// Turns images (vectors over `below`) into a level, assigning totals,
/// degrees and tie-break positions.
fn make_level(images: Vec<Vec<ModTerm>>, below: &Level, weights: &[i64]) -> Level {
    let totals: Vec<Monomial> = images.iter().map(|img| img[0].total.clone()).collect();
    let degrees = totals.iter().map(|t| weighted(t, weights)).collect();
    // Smaller position for smaller lead component; within a component, earlier index is larger.
    let mut order: Vec<usize> = (0..images.len()).collect();
    order.sort_by(|&a, &b| below.pos[images[a][0].comp].cmp(&below.pos[images[b][0].comp]).then(b.cmp(&a)));
    let mut pos = vec![0; images.len()];
    for (rank, &i) in order.iter().enumerate() {
        pos[i] = rank;
    }
    Level { images, totals, pos, degrees }
}

/// Schreyer syzygies of the elements of `cur` (vectors over `prev`).
fn syzygies(cur: &Level, prev: &Level) -> Result<Vec<Vec<ModTerm>>> {
    let mut by_comp: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, img) in cur.images.iter().enumerate() {
        by_comp.entry(img[0].comp).or_default().push(i);
    }
    let mut leads: Vec<(usize, Monomial, usize)> = Vec::new();
    for members in by_comp.values() {
        for (a, &i) in members.iter().enumerate() {
            let li = &cur.images[i][0].mono;
            let quotients: Vec<(Monomial, usize)> =
                members[a + 1..].iter().map(|&j| (li.quotient_of(&li.lcm(&cur.images[j][0].mono)), j)).collect();
            // Keep only pairs whose lead monomial is minimal.
            let mut kept: Vec<(Monomial, usize)> = Vec::new();
            let mut sorted = quotients;
            sorted.sort_by(|x, y| x.0.degree().cmp(&y.0.degree()).then(x.1.cmp(&y.1)));
            for (m, j) in sorted {
                if !kept.iter().any(|(k, _)| k.divides(&m)) {
                    kept.push((m, j));
                }
            }
            leads.extend(kept.into_iter().map(|(m, j)| (i, m, j)));
        }
    }
    leads.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.exponents().cmp(a.1.exponents())));

    let mut out = Vec::with_capacity(leads.len());
    for (i, mi, j) in leads {
        budget::check()?;
        out.push(syzygy(cur, prev, i, &mi, j, &by_comp)?);
    }
    Ok(out)
}

/// mul·v for a term list, preserving order.
fn shift(v: &[ModTerm], mul: &Monomial, scale: &Coeff) -> Vec<ModTerm> {
    v.iter()
        .map(|t| ModTerm { mono: t.mono.mul(mul), comp: t.comp, total: t.total.mul(mul), coeff: &t.coeff * scale })
        .collect()
}

/// a − b for sorted term lists.
fn subtract(a: &[ModTerm], b: &[ModTerm], pos: &[usize]) -> Vec<ModTerm> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match cmp_terms(&a[i], &b[j], pos) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let mut t = b[j].clone();
                t.coeff = -t.coeff;
                out.push(t);
                j += 1;
            }
            Ordering::Equal => {
                let c = &a[i].coeff - &b[j].coeff;
                if !c.is_zero() {
                    out.push(ModTerm { coeff: c, ..a[i].clone() });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|t| ModTerm { coeff: -t.coeff.clone(), ..t.clone() }));
    out
}

/// Reduces the S-vector of elements i and j of `cur` to zero and returns the
/// recorded syzygy m_i ε_i − m_j ε_j − Σ q_u ε_u as a vector over `cur`.
fn syzygy(
    cur: &Level,
    prev: &Level,
    i: usize,
    mi: &Monomial,
    j: usize,
    by_comp: &HashMap<usize, Vec<usize>>,
) -> Result<Vec<ModTerm>> {
    let gi = &cur.images[i];
    let gj = &cur.images[j];
    let lcm = gi[0].mono.mul(mi);
    let mj = gj[0].mono.quotient_of(&lcm);
    let one = Coeff::one();
    let mut v = subtract(&shift(&gi[1..], mi, &one), &shift(&gj[1..], &mj, &one), &prev.pos);

    let mut record: Vec<(Monomial, usize, Coeff)> = vec![(mi.clone(), i, one.clone()), (mj, j, -one.clone())];
    let mut steps = 0u32;
    while let Some(lead) = v.first() {
        steps += 1;
        if steps.is_multiple_of(64) {
            budget::check()?;
        }
        let divisor = by_comp
            .get(&lead.comp)
            .and_then(|cands| cands.iter().copied().find(|&u| cur.images[u][0].mono.divides(&lead.mono)))
            .ok_or_else(|| Error::Inconsistent("syzygy reduction stalled".into()))?;
        let g = &cur.images[divisor];
        let q = g[0].mono.quotient_of(&lead.mono);
        let c = lead.coeff.clone();
        let rest = shift(&g[1..], &q, &c);
        v = subtract(&v[1..], &rest, &prev.pos);
        record.push((q, divisor, -c));
    }

    let mut terms: Vec<ModTerm> = record
        .into_iter()
        .map(|(m, comp, coeff)| {
            let total = m.mul(&cur.totals[comp]);
            ModTerm { mono: m, comp, total, coeff }
        })
        .collect();
    terms.sort_by(|a, b| cmp_terms(b, a, &cur.pos));
    let mut merged: Vec<ModTerm> = Vec::with_capacity(terms.len());
    for t in terms {
        match merged.last_mut() {
            Some(last) if last.comp == t.comp && last.mono == t.mono => last.coeff += t.coeff,
            _ => merged.push(t),
        }
    }
    merged.retain(|t| !t.coeff.is_zero());
    debug_assert!(merged[0].comp == i && merged[0].mono == *mi && merged[0].coeff.is_one());
    Ok(merged)
}

impl Frame {
    fn maps(&self) -> Vec<FreeModuleMap> {
        (1..self.levels.len())
            .map(|l| {
                let (level, below) = (&self.levels[l], &self.levels[l - 1]);
                let columns = level
                    .images
                    .iter()
                    .map(|img| {
                        let mut by_row: BTreeMap<usize, Vec<(Monomial, Coeff)>> = BTreeMap::new();
                        for t in img {
                            by_row.entry(t.comp).or_default().push((t.mono.clone(), t.coeff.clone()));
                        }
                        by_row.into_iter().map(|(r, ts)| (r, Polynomial::from_terms(self.nvars, ts))).collect()
                    })
                    .collect();
                FreeModuleMap {
                    source_degrees: level.degrees.clone(),
                    target_degrees: below.degrees.clone(),
                    columns,
                    nvars: self.nvars,
                }
            })
            .collect()
    }

    /// Graded Betti numbers from the ranks of the constant parts of the differentials.
    fn betti(&self) -> BTreeMap<(usize, i64), usize> {
        let nl = self.levels.len();
        // rank of the constant part of d_l in each degree, l = 1..nl−1
        let ranks: Vec<BTreeMap<i64, usize>> =
            (0..=nl)
                .map(|l| {
                    if l == 0 || l >= nl {
                        BTreeMap::new()
                    } else {
                        constant_ranks(&self.levels[l], &self.levels[l - 1])
                    }
                })
                .collect();
        let mut out = BTreeMap::new();
        for (l, level) in self.levels.iter().enumerate() {
            let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
            for &d in &level.degrees {
                *counts.entry(d).or_default() += 1;
            }
            for (d, f) in counts {
                let r = ranks[l].get(&d).copied().unwrap_or(0) + ranks[l + 1].get(&d).copied().unwrap_or(0);
                out.insert((l, d), f - r);
            }
        }
        out
    }
}

/// Per degree, the rank over ℚ of the scalar entries of d: F_l → F_{l−1}.
fn constant_ranks(level: &Level, below: &Level) -> BTreeMap<i64, usize> {
    let mut blocks: BTreeMap<i64, Vec<Vec<(usize, Coeff)>>> = BTreeMap::new();
    for (col, img) in level.images.iter().enumerate() {
        let entries: Vec<(usize, Coeff)> =
            img.iter().filter(|t| t.mono.is_one()).map(|t| (t.comp, t.coeff.clone())).collect();
        if !entries.is_empty() {
            debug_assert!(entries.iter().all(|(r, _)| below.degrees[*r] == level.degrees[col]));
            blocks.entry(level.degrees[col]).or_default().push(entries);
        }
    }
    blocks.into_iter().map(|(d, cols)| (d, rank_over_q(cols))).collect()
}

/// Rank over ℚ of a matrix given as sparse columns, by Gaussian elimination.
pub fn rank_over_q(columns: Vec<Vec<(usize, Coeff)>>) -> usize {
    // Pivot rows already used, each with its reduced column.
    let mut pivots: BTreeMap<usize, BTreeMap<usize, Coeff>> = BTreeMap::new();
    for col in columns {
        let mut v: BTreeMap<usize, Coeff> = col.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        while let Some((&row, _)) = v.iter().find(|(r, _)| pivots.contains_key(r)) {
            let p = &pivots[&row];
            let factor = &v[&row] / &p[&row];
            for (r, c) in p {
                let e = v.entry(*r).or_insert_with(Coeff::zero);
                *e -= &factor * c;
                if e.is_zero() {
                    v.remove(r);
                }
            }
        }
        if let Some((&row, _)) = v.iter().next() {
            pivots.insert(row, v);
        }
    }
    pivots.len()
}

fn spec_weights(spec: &KLIdealSpec) -> Vec<i64> {
    spec.coarse_degrees()
}

/// A (generally non-minimal) free resolution of S/I_{x,w}: the maps
/// d₁: F₁ → F₀ = S, d₂: F₂ → F₁, ….
pub fn schreyer_resolution(spec: &KLIdealSpec) -> Result<Vec<FreeModuleMap>> {
    let frame = build_frame(&spec.generators, spec.nvars(), &spec_weights(spec), None)?;
    Ok(frame.maps())
}

/// Resolution of S/⟨gens⟩ for generators homogeneous under `weights`.
pub fn resolve(gens: &[Polynomial], nvars: usize, weights: &[i64]) -> Result<Vec<FreeModuleMap>> {
    if weights.iter().any(|&w| w <= 0) {
        return Err(Error::Precondition("grading is not positive".into()));
    }
    Ok(build_frame(gens, nvars, weights, None)?.maps())
}

/// Graded Betti numbers of S/⟨gens⟩ under a positive grading.
pub fn betti_numbers(gens: &[Polynomial], nvars: usize, weights: &[i64]) -> Result<BettiTable> {
    if weights.iter().any(|&w| w <= 0) {
        return Err(Error::Precondition("grading is not positive".into()));
    }
    let frame = build_frame(gens, nvars, weights, None)?;
    Ok(BettiTable::from_graded(frame.betti()))
}

/// Cancels unit entries until no differential has a nonzero constant entry.
///
/// A unit u at (r, c) of d_k splits off the summand S ≅ S: row r and column c
/// leave d_k (the rest of d_k is corrected by the Schur complement), row c
/// leaves d_{k+1} and column r leaves d_{k−1}. Units are taken in row-major
/// order.
pub fn minimize_resolution(res: &[FreeModuleMap]) -> Result<Vec<FreeModuleMap>> {
    let mut maps: Vec<FreeModuleMap> = res.to_vec();
    for m in &maps {
        if m.source_degrees.iter().chain(&m.target_degrees).any(|&d| d < 0) {
            return Err(Error::Precondition("grading is not positive".into()));
        }
    }
    for k in 0..maps.len() {
        loop {
            budget::check()?;
            let Some((r, c, u)) = first_unit(&maps[k]) else { break };
            cancel(&mut maps, k, r, c, &u);
        }
    }
    Ok(maps)
}

fn first_unit(m: &FreeModuleMap) -> Option<(usize, usize, Coeff)> {
    let mut best: Option<(usize, usize, Coeff)> = None;
    for (c, col) in m.columns.iter().enumerate() {
        for (&r, p) in col {
            if !p.is_zero() && p.is_constant() && best.as_ref().is_none_or(|(br, bc, _)| (r, c) < (*br, *bc)) {
                best = Some((r, c, p.terms()[0].1.clone()));
            }
        }
    }
    best
}

fn cancel(maps: &mut [FreeModuleMap], k: usize, r: usize, c: usize, u: &Coeff) {
    let nvars = maps[k].nvars;
    let inv = u.recip();
    // Row r of d_k, outside column c.
    let row_r: Vec<(usize, Polynomial)> = maps[k]
        .columns
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != c)
        .filter_map(|(j, col)| col.get(&r).map(|p| (j, p.clone())))
        .collect();
    let col_c: BTreeMap<usize, Polynomial> = maps[k].columns[c].clone();
    {
        let m = &mut maps[k];
        for (j, p) in &row_r {
            let factor = p.scale(&inv);
            for (&a, q) in &col_c {
                if a == r {
                    continue;
                }
                let prod = q * &factor;
                let slot = m.columns[*j].entry(a).or_insert_with(|| Polynomial::zero(nvars));
                *slot = &*slot - &prod;
                if slot.is_zero() {
                    m.columns[*j].remove(&a);
                }
            }
        }
        m.columns.remove(c);
        m.source_degrees.remove(c);
        m.target_degrees.remove(r);
        for col in &mut m.columns {
            *col = std::mem::take(col)
                .into_iter()
                .filter(|(a, _)| *a != r)
                .map(|(a, p)| (if a > r { a - 1 } else { a }, p))
                .collect();
        }
    }
    if k + 1 < maps.len() {
        let next = &mut maps[k + 1];
        next.target_degrees.remove(c);
        for col in &mut next.columns {
            *col = std::mem::take(col)
                .into_iter()
                .filter(|(a, _)| *a != c)
                .map(|(a, p)| (if a > c { a - 1 } else { a }, p))
                .collect();
        }
    }
    if k > 0 {
        let prev = &mut maps[k - 1];
        prev.columns.remove(r);
        prev.source_degrees.remove(r);
    }
}

/// Betti table of the minimal resolution of S/I_{x,w} in the coarse grading.
pub fn betti_table(spec: &KLIdealSpec) -> Result<BettiTable> {
    betti_numbers(&spec.generators, spec.nvars(), &spec_weights(spec))
}

/// Betti table read directly off a minimized resolution.
pub fn betti_from_maps(maps: &[FreeModuleMap]) -> BettiTable {
    let mut graded = BTreeMap::new();
    *graded.entry((0, 0)).or_insert(0) += 1;
    for (k, m) in maps.iter().enumerate() {
        for &d in &m.source_degrees {
            *graded.entry((k + 1, d)).or_insert(0) += 1;
        }
    }
    BettiTable::from_graded(graded)
}

/// Cohen-Macaulay type: the last nonzero Betti number.
pub fn cm_type(spec: &KLIdealSpec) -> Result<usize> {
    Ok(betti_table(spec)?.last())
}

/// β₁: the number of minimal generators of I_{x,w}.
pub fn first_betti(spec: &KLIdealSpec) -> Result<usize> {
    let frame = build_frame(&spec.generators, spec.nvars(), &spec_weights(spec), Some(2))?;
    let graded = frame.betti();
    Ok(graded.iter().filter(|((i, _), _)| *i == 1).map(|(_, b)| *b).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::klideal::kl_ideal;
    use crate::perm::Permutation;
    use crate::poly::{parse_polynomial, VariableRing};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn check_complex(maps: &[FreeModuleMap]) {
        for w in maps.windows(2) {
            assert!(w[0].compose(&w[1]).is_zero());
        }
    }

    #[test]
    fn zero_and_principal() {
        let r = VariableRing::standard(vec!["x".into(), "y".into()]).unwrap();
        let t = betti_numbers(&[], 2, &[1, 1]).unwrap();
        assert_eq!(t.totals(), &[1]);
        let f = parse_polynomial("x^2 - y^2", &r).unwrap();
        let maps = resolve(std::slice::from_ref(&f), 2, &[1, 1]).unwrap();
        assert_eq!(maps.len(), 1);
        assert_eq!(betti_numbers(&[f], 2, &[1, 1]).unwrap().totals(), &[1, 1]);
        assert!(betti_numbers(&[], 2, &[0, 1]).is_err());
    }

    #[test]
    fn koszul_complex() {
        let r = VariableRing::standard(vec!["x".into(), "y".into(), "z".into()]).unwrap();
        let gens: Vec<Polynomial> = ["x", "y", "z"].iter().map(|s| parse_polynomial(s, &r).unwrap()).collect();
        let t = betti_numbers(&gens, 3, &[1, 1, 1]).unwrap();
        assert_eq!(t.totals(), &[1, 3, 3, 1]);
        assert_eq!(t.graded(2, 2), 3);
        assert_eq!(t.graded(3, 3), 1);
        let maps = resolve(&gens, 3, &[1, 1, 1]).unwrap();
        check_complex(&maps);
    }

    #[test]
    fn twisted_cubic() {
        let r = VariableRing::standard(vec!["a".into(), "b".into(), "c".into(), "d".into()]).unwrap();
        let gens: Vec<Polynomial> =
            ["a*c - b^2", "b*d - c^2", "a*d - b*c"].iter().map(|s| parse_polynomial(s, &r).unwrap()).collect();
        let t = betti_numbers(&gens, 4, &[1; 4]).unwrap();
        assert_eq!(t.totals(), &[1, 3, 2]);
        assert_eq!(t.graded(1, 2), 3);
        assert_eq!(t.graded(2, 3), 2);
        let maps = resolve(&gens, 4, &[1; 4]).unwrap();
        check_complex(&maps);
        let min = minimize_resolution(&maps).unwrap();
        check_complex(&min);
        assert_eq!(betti_from_maps(&min), t);
    }

    #[test]
    fn session_example_13254_35142() {
        let spec = kl_ideal(&p("13254"), &p("35142")).unwrap();
        let t = betti_table(&spec).unwrap();
        assert_eq!(t.totals(), &[1, 5, 9, 7, 2]);
        let expect = [
            (1, 3, 2),
            (1, 4, 3),
            (2, 5, 1),
            (2, 6, 2),
            (2, 7, 4),
            (2, 8, 2),
            (3, 8, 1),
            (3, 9, 2),
            (3, 10, 2),
            (3, 11, 2),
            (4, 12, 1),
            (4, 13, 1),
        ];
        let got: Vec<(usize, i64, usize)> = t.graded_entries().filter(|e| e.0 > 0).collect();
        assert_eq!(got, expect);
        assert_eq!(first_betti(&spec).unwrap(), 5);
        assert_eq!(cm_type(&spec).unwrap(), 2);

        let maps = schreyer_resolution(&spec).unwrap();
        check_complex(&maps);
        assert!(maps.len() <= spec.nvars());
        let min = minimize_resolution(&maps).unwrap();
        check_complex(&min);
        assert!(min.iter().all(|m| !m.has_unit_entry()));
        assert_eq!(betti_from_maps(&min), t);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(serde_json::from_str::<BettiTable>(&json).unwrap(), t);
        let again = minimize_resolution(&min).unwrap();
        assert_eq!(again, min);
    }

    #[test]
    fn display_layout() {
        let spec = kl_ideal(&p("13254"), &p("35142")).unwrap();
        let text = betti_table(&spec).unwrap().to_string();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "total: 1 5 9 7 2");
        assert_eq!(lines[1], "    0: 1 . . . .");
        assert_eq!(lines[3], "    2: . 2 . . .");
        assert_eq!(lines[10], "    9: . . . . 1");
    }

    #[test]
    fn complete_intersection_123546_461253() {
        let spec = kl_ideal(&p("123546"), &p("461253")).unwrap();
        let t = betti_table(&spec).unwrap();
        assert_eq!(t.totals(), &[1, 7, 21, 35, 35, 21, 7, 1]);
        assert_eq!(cm_type(&spec).unwrap(), 1);
    }

    #[test]
    fn trivial_resolutions() {
        let w = p("4231");
        let top = kl_ideal(&Permutation::identity(4), &Permutation::longest(4)).unwrap();
        assert_eq!(betti_table(&top).unwrap().totals(), &[1]);
        assert_eq!(first_betti(&top).unwrap(), 0);
        let spec = kl_ideal(&Permutation::identity(4), &w).unwrap();
        let t = betti_table(&spec).unwrap();
        assert_eq!(t.totals(), &[1, 1]);
    }
}
