//! Property checks shared by the acceptance gate and the property suites.
#![allow(dead_code)]

use schubsing::invariants::{cm_type_at, is_singular_at, kl_polynomial, multiplicity_at, tangent_space_dim};
use schubsing::klideal::{kl_ideal, kl_multigrading, KLIdealSpec};
use schubsing::pattern::{gorenstein_generators, interval_embeddings, singular_generators, IntervalPattern};
use schubsing::poly::{buchberger, initial_ideal, is_homogeneous, monomial_dimension, TermOrder};
use schubsing::{BruhatInterval, Permutation};

pub fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

/// Bruhat order by the tableau criterion: for every k the sorted first k
/// values of x are dominated entrywise by those of w.
pub fn bruhat_by_tableau(x: &Permutation, w: &Permutation) -> bool {
    let (xs, ws) = (x.word(), w.word());
    (1..=xs.len()).all(|k| {
        let mut a = xs[..k].to_vec();
        let mut b = ws[..k].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a.iter().zip(&b).all(|(u, v)| u <= v)
    })
}

/// All pairs x ≤ w in Sₙ.
pub fn comparable_pairs(n: usize) -> Vec<(Permutation, Permutation)> {
    let mut out = Vec::new();
    for w in Permutation::all(n) {
        for x in BruhatInterval::new(Permutation::identity(n), w.clone()).unwrap().elements() {
            out.push((x, w.clone()));
        }
    }
    out
}

pub fn check_bruhat(x: &Permutation, w: &Permutation) -> Result<(), String> {
    if x.bruhat_le(w) == bruhat_by_tableau(x, w) {
        Ok(())
    } else {
        Err(format!("Bruhat order disagrees with the tableau criterion at ({x},{w})"))
    }
}

pub fn check_dimension(spec: &KLIdealSpec) -> Result<(), String> {
    let gb = buchberger(&spec.generators, TermOrder::GradedDiagonal);
    let dim = monomial_dimension(&initial_ideal(&gb), spec.nvars());
    if dim == spec.expected_dimension() {
        Ok(())
    } else {
        Err(format!("dim 𝒩_{{{},{}}} = {dim}, expected {}", spec.x, spec.w, spec.expected_dimension()))
    }
}

pub fn check_homogeneity(spec: &KLIdealSpec) -> Result<(), String> {
    if spec.coarse_degrees().iter().any(|&d| d <= 0) {
        return Err(format!("non-positive coarse degree at ({},{})", spec.x, spec.w));
    }
    let multi = kl_multigrading(&spec.x);
    for g in &spec.generators {
        if !is_homogeneous(g, spec.ring.grading()) || !is_homogeneous(g, &multi) {
            return Err(format!("inhomogeneous generator at ({},{})", spec.x, spec.w));
        }
    }
    Ok(())
}

pub fn check_smooth_routes(x: &Permutation, w: &Permutation) -> Result<(), String> {
    let by_pattern = !is_singular_at(x, w).unwrap();
    let by_tangent = tangent_space_dim(x, w).unwrap() == w.length() - x.length();
    if by_pattern == by_tangent {
        Ok(())
    } else {
        Err(format!("smoothness routes disagree at ({x},{w}): pattern {by_pattern}, tangent space {by_tangent}"))
    }
}

pub fn check_pair(x: &Permutation, w: &Permutation) -> Result<(), String> {
    check_bruhat(x, w)?;
    let spec = kl_ideal(x, w).map_err(|e| e.to_string())?;
    check_dimension(&spec)?;
    check_homogeneity(&spec)?;
    check_smooth_routes(x, w)
}

/// Multiplicity and type never increase going up in [id, w].
pub fn check_semicontinuity(w: &Permutation) -> Result<(), String> {
    let below: Vec<Permutation> =
        BruhatInterval::new(Permutation::identity(w.n()), w.clone()).unwrap().elements().into_iter().collect();
    let data: Vec<(u64, usize)> =
        below.iter().map(|x| (multiplicity_at(x, w).unwrap(), cm_type_at(x, w).unwrap())).collect();
    for (i, lo) in below.iter().enumerate() {
        for c in lo.covers_up_to(w) {
            let j = below.binary_search(&c).unwrap();
            if data[i].0 < data[j].0 || data[i].1 < data[j].1 {
                return Err(format!("semicontinuity fails on {w} between {lo} and {c}"));
            }
        }
    }
    Ok(())
}

trait CoversUp {
    fn covers_up_to(&self, w: &Permutation) -> Vec<Permutation>;
}

impl CoversUp for Permutation {
    /// Elements covering `self` that stay below `w`.
    fn covers_up_to(&self, w: &Permutation) -> Vec<Permutation> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                let t = self.swap_positions(i, j);
                if t.length() == self.length() + 1 && t.bruhat_le(w) {
                    out.push(t);
                }
            }
        }
        out
    }
}

/// Generators whose KL polynomial and multiplicity are transported along
/// interval embeddings.
pub fn invariance_patterns() -> Vec<IntervalPattern> {
    let mut pats = singular_generators(5).generators;
    for g in gorenstein_generators(5).generators {
        if !pats.contains(&g) {
            pats.push(g);
        }
    }
    pats
}

/// KL polynomial and multiplicity agree between [u,v] and every interval
/// embedding of it into the given targets. Returns the number of embeddings checked.
pub fn check_embedding_invariance(targets: impl IntoIterator<Item = Permutation>) -> Result<usize, String> {
    let pats = invariance_patterns();
    let base: Vec<_> = pats
        .iter()
        .map(|pat| (kl_polynomial(pat.bottom(), pat.top()).unwrap(), multiplicity_at(pat.bottom(), pat.top()).unwrap()))
        .collect();
    let mut count = 0;
    for w in targets {
        for (pat, (kl, mult)) in pats.iter().zip(&base) {
            if pat.top().n() > w.n() {
                continue;
            }
            for (e, x) in interval_embeddings(pat, &w) {
                count += 1;
                if kl_polynomial(&x, &w).unwrap() != *kl {
                    return Err(format!("KL polynomial changes along {e} of {pat} into {w}"));
                }
                if multiplicity_at(&x, &w).unwrap() != *mult {
                    return Err(format!("multiplicity changes along {e} of {pat} into {w}"));
                }
            }
        }
    }
    Ok(count)
}
