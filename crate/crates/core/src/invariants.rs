//! Singularity invariants of Schubert varieties at torus fixed points.
//!
//! Combinatorial routes go through pattern avoidance and the loci of
//! [`crate::pattern`]; algebraic routes go through the Kazhdan-Lusztig ideal
//! of the slice 𝒩_{x,w}.

use std::collections::HashMap;
use std::fmt;
use std::time::Duration;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget;
use crate::error::{Error, Result};
use crate::klideal::{kl_ideal, KLIdealSpec};
use crate::pattern::{
    classical_embeddings, factorial_generators, gorenstein_generators, interval_avoids, locus_contains,
    locus_max_points, non_gorenstein_generators, singular_generators, PatternIdealGenerators,
};
use crate::perm::{BruhatInterval, Permutation};
use crate::poly::{homogenize_t, minimalize, monomial_degree, try_buchberger, Coeff, Monomial, TermOrder};
use crate::resolution;

/// Largest rank for which the conjectured non-Gorenstein locus is known to be exact.
pub const NON_GORENSTEIN_PROVEN_UP_TO: usize = 6;

/// Largest rank at which reports decide Gorensteinness by computing the type.
pub const EXACT_GORENSTEIN_UP_TO: usize = 5;

/// A Kazhdan-Lusztig polynomial, by coefficients of q⁰, q¹, ….
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct KLPolynomial {
    coefficients: Vec<u64>,
}

impl KLPolynomial {
    pub fn new(mut coefficients: Vec<u64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn one() -> Self {
        Self { coefficients: vec![1] }
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    /// Degree in q; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_one(&self) -> bool {
        self.coefficients == [1]
    }

    pub fn eval(&self, q: u64) -> u64 {
        self.coefficients.iter().rev().fold(0, |acc, &c| acc * q + c)
    }
}

impl fmt::Display for KLPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match (k, c) {
                (0, _) => c.to_string(),
                (1, 1) => "q".to_string(),
                (1, _) => format!("{c}q"),
                (_, 1) => format!("q^{k}"),
                _ => format!("{c}q^{k}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn check_pair(x: &Permutation, w: &Permutation) -> Result<()> {
    if x.n() != w.n() {
        return Err(Error::RankMismatch(x.n(), w.n()));
    }
    if !x.bruhat_le(w) {
        return Err(Error::NotBelow { x: x.to_string(), w: w.to_string() });
    }
    Ok(())
}

/// X_w is smooth iff w avoids 3412 and 4231.
pub fn is_smooth(w: &Permutation) -> bool {
    ["3412", "4231"].iter().all(|p| classical_embeddings(&p.parse().unwrap(), w).is_empty())
}

/// Maximal points of the singular locus of X_w.
pub fn singular_locus(w: &Permutation) -> Vec<Permutation> {
    locus_max_points(w, &singular_generators(w.n())).into_iter().collect()
}

/// Whether X_w is singular at e_x.
pub fn is_singular_at(x: &Permutation, w: &Permutation) -> Result<bool> {
    locus_contains(x, w, &singular_generators(w.n()))
}

/// Dimension of the Zariski tangent space of 𝒩_{x,w} at the origin.
pub fn tangent_space_dim(x: &Permutation, w: &Permutation) -> Result<usize> {
    check_pair(x, w)?;
    let spec = kl_ideal(x, w)?;
    Ok(tangent_space_dim_of(&spec))
}

fn tangent_space_dim_of(spec: &KLIdealSpec) -> usize {
    let columns: Vec<Vec<(usize, Coeff)>> = spec
        .generators
        .iter()
        .map(|g| {
            g.terms()
                .iter()
                .filter(|(m, _)| m.degree() == 1)
                .filter_map(|(m, c)| m.support().next().map(|v| (v, c.clone())))
                .collect()
        })
        .collect();
    spec.nvars() - resolution::rank_over_q(columns)
}

/// Whether X_w is Gorenstein, by interval pattern avoidance.
pub fn is_gorenstein(w: &Permutation) -> bool {
    gorenstein_generators(w.n()).generators.iter().all(|p| p.top().n() > w.n() || interval_avoids(w, p))
}

/// A locus together with whether its description is only conjectural.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Locus {
    pub points: Vec<Permutation>,
    pub conjectural: bool,
}

fn locus(w: &Permutation, gens: &PatternIdealGenerators, proven_up_to: usize) -> Locus {
    Locus {
        points: locus_max_points(w, gens).into_iter().collect(),
        conjectural: gens.conjectural && w.n() > proven_up_to,
    }
}

/// Maximal points of the non-Gorenstein locus of X_w.
pub fn non_gorenstein_locus(w: &Permutation) -> Locus {
    locus(w, &non_gorenstein_generators(w.n()), NON_GORENSTEIN_PROVEN_UP_TO)
}

/// Whether X_w is factorial, by avoidance of 4231 and [3142,3412].
pub fn is_factorial(w: &Permutation) -> bool {
    factorial_generators(w.n()).generators.iter().all(|p| p.top().n() > w.n() || interval_avoids(w, p))
}

/// Maximal points of the conjectured non-factorial locus of X_w.
pub fn non_factorial_locus(w: &Permutation) -> Locus {
    locus(w, &crate::pattern::non_factorial_generators(w.n()), 0)
}

/// Hilbert-Samuel multiplicity of X_w at e_x, as the degree of the tangent cone of 𝒩_{x,w}.
pub fn multiplicity_at(x: &Permutation, w: &Permutation) -> Result<u64> {
    check_pair(x, w)?;
    multiplicity_of(&kl_ideal(x, w)?)
}

fn multiplicity_of(spec: &KLIdealSpec) -> Result<u64> {
    let homogenized: Vec<_> = spec.generators.iter().map(homogenize_t).collect();
    let gb = try_buchberger(&homogenized, TermOrder::EliminateFirst)?;
    let leads = gb.lead_monomials().into_iter().map(|m| Monomial::from_exponents(m.exponents()[1..].iter().copied()));
    let cone = minimalize(leads);
    monomial_degree(&cone, spec.nvars())
}

/// Cohen-Macaulay type of X_w at e_x.
pub fn cm_type_at(x: &Permutation, w: &Permutation) -> Result<usize> {
    check_pair(x, w)?;
    resolution::cm_type(&kl_ideal(x, w)?)
}

/// Whether X_w is a local complete intersection at e_x.
pub fn is_lci_at(x: &Permutation, w: &Permutation) -> Result<bool> {
    check_pair(x, w)?;
    let spec = kl_ideal(x, w)?;
    lci_of(&spec)
}

fn lci_of(spec: &KLIdealSpec) -> Result<bool> {
    let codim = spec.nvars() - spec.expected_dimension();
    Ok(resolution::first_betti(spec)? == codim)
}

/// Memoized Kazhdan-Lusztig polynomials, as integer coefficient vectors.
#[derive(Default)]
pub struct KLTable {
    memo: HashMap<(Permutation, Permutation), Vec<i64>>,
}

fn right_descent(w: &Permutation) -> Option<usize> {
    (1..w.n()).find(|&i| w.at(i) > w.at(i + 1))
}

fn add_shifted(acc: &mut Vec<i64>, p: &[i64], shift: usize, sign: i64) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (k, &c) in p.iter().enumerate() {
        acc[k + shift] += sign * c;
    }
}

impl KLTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// P_{x,w}(q), zero when x ≰ w.
    pub fn get(&mut self, x: &Permutation, w: &Permutation) -> Result<KLPolynomial> {
        if x.n() != w.n() {
            return Err(Error::RankMismatch(x.n(), w.n()));
        }
        let raw = self.raw(x, w);
        raw.iter()
            .map(|&c| {
                u64::try_from(c).map_err(|_| Error::Inconsistent(format!("negative KL coefficient for ({x},{w})")))
            })
            .collect::<Result<Vec<u64>>>()
            .map(KLPolynomial::new)
    }

    fn mu(&mut self, z: &Permutation, v: &Permutation) -> i64 {
        let gap = v.length() - z.length();
        if gap.is_multiple_of(2) {
            return 0;
        }
        self.raw(z, v).get((gap - 1) / 2).copied().unwrap_or(0)
    }

    // For a right descent s of w, with v = ws and c = [us < u]:
    // P_{u,w} = q^{1−c} P_{us,v} + q^c P_{u,v} − Σ_{u ≤ z < v, zs < z} μ(z,v) q^{(ℓ(w)−ℓ(z))/2} P_{u,z}.
    fn raw(&mut self, u: &Permutation, w: &Permutation) -> Vec<i64> {
        if !u.bruhat_le(w) {
            return Vec::new();
        }
        if u == w {
            return vec![1];
        }
        let key = (u.clone(), w.clone());
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let s = right_descent(w).expect("non-identity permutation has a descent");
        let v = w.swap_positions(s, s + 1);
        let us = u.swap_positions(s, s + 1);
        let c = usize::from(u.at(s) > u.at(s + 1));
        let mut acc = Vec::new();
        let a = self.raw(&us, &v);
        add_shifted(&mut acc, &a, 1 - c, 1);
        let b = self.raw(u, &v);
        add_shifted(&mut acc, &b, c, 1);
        if u.bruhat_le(&v) {
            let interval = BruhatInterval::new(u.clone(), v.clone()).expect("u ≤ v");
            let lw = w.length();
            for z in interval.elements() {
                if z == v || z.at(s) < z.at(s + 1) {
                    continue;
                }
                let m = self.mu(&z, &v);
                if m != 0 {
                    let p = self.raw(u, &z);
                    add_shifted(&mut acc, &p, (lw - z.length()) / 2, -m);
                }
            }
        }
        while acc.last() == Some(&0) {
            acc.pop();
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}

/// The Kazhdan-Lusztig polynomial P_{x,w}(q).
pub fn kl_polynomial(x: &Permutation, w: &Permutation) -> Result<KLPolynomial> {
    check_pair(x, w)?;
    KLTable::new().get(x, w)
}

/// Whether X_w is Gorenstein at e_x, and whether that answer is conjectural.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinFlag {
    pub value: bool,
    pub conjectural: bool,
}

/// Invariants of X_w at e_x.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub x: Permutation,
    pub w: Permutation,
    pub smooth: bool,
    pub mult: u64,
    pub gorenstein: GorensteinFlag,
    pub cm_type: Option<usize>,
    pub lci: Option<bool>,
    pub kl_poly: Option<KLPolynomial>,
}

/// Which optional invariants to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct ReportOptions {
    pub cm_type: bool,
    pub lci: bool,
    pub kl_poly: bool,
}

impl ReportOptions {
    pub fn all() -> Self {
        Self { cm_type: true, lci: true, kl_poly: true }
    }
}

/// Computes the invariants of X_w at e_x.
///
/// Gorensteinness is decided by the type for n ≤ 5 and by the non-Gorenstein
/// locus above that.
pub fn report(x: &Permutation, w: &Permutation, options: ReportOptions) -> Result<InvariantReport> {
    check_pair(x, w)?;
    report_with(x, w, options, &mut KLTable::new())
}

fn report_with(x: &Permutation, w: &Permutation, options: ReportOptions, kl: &mut KLTable) -> Result<InvariantReport> {
    let n = w.n();
    let spec = kl_ideal(x, w)?;
    let smooth = !is_singular_at(x, w)?;
    let mult = multiplicity_of(&spec)?;
    let exact = n <= EXACT_GORENSTEIN_UP_TO;
    let cm_type = if options.cm_type || exact { Some(resolution::cm_type(&spec)?) } else { None };
    let gorenstein = if exact {
        GorensteinFlag { value: cm_type == Some(1), conjectural: false }
    } else {
        let gens = non_gorenstein_generators(n);
        GorensteinFlag { value: !locus_contains(x, w, &gens)?, conjectural: n > NON_GORENSTEIN_PROVEN_UP_TO }
    };
    let lci = if options.lci { Some(lci_of(&spec)?) } else { None };
    let kl_poly = if options.kl_poly { Some(kl.get(x, w)?) } else { None };
    Ok(InvariantReport {
        x: x.clone(),
        w: w.clone(),
        smooth,
        mult,
        gorenstein,
        cm_type: if options.cm_type { cm_type } else { None },
        lci,
        kl_poly,
    })
}

/// Which pairs a survey visits and what it computes.
#[derive(Clone, Debug, Default)]
pub struct SurveyOptions {
    pub invariants: ReportOptions,
    /// Restrict to these w; all of Sₙ when absent.
    pub targets: Option<Vec<Permutation>>,
    /// Skip points where X_w is smooth.
    pub singular_only: bool,
    /// Time limit per pair.
    pub timeout: Option<Duration>,
}

/// Reports for all pairs x ≤ w in Sₙ selected by `options`, ordered by w then x.
pub fn survey(n: usize, options: &SurveyOptions) -> Result<Vec<InvariantReport>> {
    let targets: Vec<Permutation> = match &options.targets {
        Some(ts) => {
            if let Some(t) = ts.iter().find(|t| t.n() != n) {
                return Err(Error::RankMismatch(n, t.n()));
            }
            ts.clone()
        }
        None => Permutation::all(n).collect(),
    };
    let per_w: Vec<Vec<InvariantReport>> = targets
        .par_iter()
        .map(|w| {
            let below = BruhatInterval::new(Permutation::identity(n), w.clone())?.elements();
            let singular = singular_generators(n);
            let points: Vec<Permutation> = below
                .into_iter()
                .filter(|x| !options.singular_only || locus_contains(x, w, &singular).unwrap_or(true))
                .collect();
            points
                .par_iter()
                .map_init(KLTable::new, |kl, x| {
                    budget::with_deadline(options.timeout, || report_with(x, w, options.invariants, kl))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(per_w.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{interval_embeddings, IntervalPattern};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// R-polynomials by the descent recursion.
    fn r_poly(u: &Permutation, w: &Permutation, memo: &mut HashMap<(Permutation, Permutation), Vec<i64>>) -> Vec<i64> {
        if !u.bruhat_le(w) {
            return vec![];
        }
        if u == w {
            return vec![1];
        }
        if let Some(r) = memo.get(&(u.clone(), w.clone())) {
            return r.clone();
        }
        let s = right_descent(w).unwrap();
        let ws = w.swap_positions(s, s + 1);
        let us = u.swap_positions(s, s + 1);
        let out = if u.at(s) > u.at(s + 1) {
            r_poly(&us, &ws, memo)
        } else {
            let a = r_poly(u, &ws, memo);
            let b = r_poly(&us, &ws, memo);
            let mut acc = vec![0; a.len().max(b.len()) + 1];
            for (k, c) in a.iter().enumerate() {
                acc[k + 1] += c;
                acc[k] -= c;
            }
            for (k, c) in b.iter().enumerate() {
                acc[k + 1] += c;
            }
            acc
        };
        memo.insert((u.clone(), w.clone()), out.clone());
        out
    }

    /// P_{x,w} from q^{ℓ(w)−ℓ(x)} P(1/q) − P(q) = Σ_{x<y≤w} R_{x,y} P_{y,w}.
    fn kl_oracle(w: &Permutation) -> HashMap<Permutation, Vec<i64>> {
        let mut r = HashMap::new();
        let mut below: Vec<Permutation> =
            BruhatInterval::new(Permutation::identity(w.n()), w.clone()).unwrap().elements().into_iter().collect();
        below.sort_by_key(|x| std::cmp::Reverse(x.length()));
        let mut out: HashMap<Permutation, Vec<i64>> = HashMap::new();
        for x in below {
            if x == *w {
                out.insert(x, vec![1]);
                continue;
            }
            let d = w.length() - x.length();
            let mut rhs = vec![0i64; d + 1];
            for (y, py) in &out {
                if y != &x && x.bruhat_le(y) {
                    let rxy = r_poly(&x, y, &mut r);
                    for (a, ca) in rxy.iter().enumerate() {
                        for (b, cb) in py.iter().enumerate() {
                            rhs[a + b] += ca * cb;
                        }
                    }
                }
            }
            let mut pxw: Vec<i64> = rhs[..=(d - 1) / 2].iter().map(|c| -c).collect();
            while pxw.last() == Some(&0) {
                pxw.pop();
            }
            out.insert(x, pxw);
        }
        out
    }

    #[test]
    fn kl_values() {
        assert_eq!(kl_polynomial(&p("2143"), &p("4231")).unwrap().coefficients(), &[1, 1]);
        assert_eq!(kl_polynomial(&p("21354"), &p("52341")).unwrap().coefficients(), &[1, 2, 1]);
        assert!(kl_polynomial(&p("4231"), &p("4231")).unwrap().is_one());
        assert_eq!(kl_polynomial(&p("1324"), &p("3412")).unwrap().coefficients(), &[1, 1]);
        assert!(kl_polynomial(&p("3412"), &p("1324")).is_err());
        assert_eq!(kl_polynomial(&p("21354"), &p("52341")).unwrap().to_string(), "1 + 2q + q^2");
    }

    #[test]
    fn kl_matches_r_polynomial_oracle() {
        for n in 3..=5 {
            for w in Permutation::all(n) {
                let oracle = kl_oracle(&w);
                let mut table = KLTable::new();
                for (x, expect) in oracle {
                    let got = table.get(&x, &w).unwrap();
                    let got: Vec<i64> = got.coefficients().iter().map(|&c| c as i64).collect();
                    assert_eq!(got, expect, "P_{{{x},{w}}}");
                }
            }
        }
    }

    #[test]
    fn kl_degree_bound_and_smoothness() {
        for w in Permutation::all(4) {
            let mut table = KLTable::new();
            for x in BruhatInterval::new(Permutation::identity(4), w.clone()).unwrap().elements() {
                let pk = table.get(&x, &w).unwrap();
                assert_eq!(pk.coefficients()[0], 1);
                let d = w.length() - x.length();
                assert!(pk.degree().unwrap() * 2 <= d.saturating_sub(1) || d == 0);
                assert_eq!(pk.is_one(), !is_singular_at(&x, &w).unwrap(), "({x},{w})");
            }
        }
    }

    #[test]
    fn smoothness() {
        assert!(!is_smooth(&p("3412")));
        assert!(is_smooth(&Permutation::identity(5)));
        for w in Permutation::all(5) {
            assert_eq!(is_smooth(&w), singular_locus(&w).is_empty(), "{w}");
        }
        assert_eq!(singular_locus(&p("4231")), vec![p("2143")]);
        let mut loc = singular_locus(&p("461253"));
        loc.sort();
        assert_eq!(loc, vec![p("142653"), p("143265"), p("241365")]);
    }

    #[test]
    fn tangent_space() {
        assert_eq!(tangent_space_dim(&p("35142"), &p("35142")).unwrap(), 0);
        assert!(tangent_space_dim(&p("13254"), &p("35142")).unwrap() > 4);
        for w in Permutation::all(4) {
            for x in BruhatInterval::new(Permutation::identity(4), w.clone()).unwrap().elements() {
                let smooth = tangent_space_dim(&x, &w).unwrap() == w.length() - x.length();
                assert_eq!(smooth, !is_singular_at(&x, &w).unwrap(), "({x},{w})");
            }
        }
    }

    #[test]
    fn gorenstein_and_factorial() {
        assert!(!is_gorenstein(&p("42513")));
        assert!(is_gorenstein(&p("526413")));
        assert!(is_gorenstein(&Permutation::identity(5)));
        let bad: Vec<Permutation> = Permutation::all(5).filter(|w| !is_gorenstein(w)).collect();
        let mut expect = vec![p("53241"), p("35142"), p("42513"), p("52431")];
        expect.sort();
        assert_eq!(bad, expect);
        assert!(Permutation::all(4).all(|w| is_gorenstein(&w)));

        let mut loc = non_gorenstein_locus(&p("461253"));
        loc.points.sort();
        assert_eq!(loc.points, vec![p("143265"), p("241365")]);
        assert!(!loc.conjectural);
        assert!(non_gorenstein_locus(&p("526413")).points.is_empty());

        assert!(!is_factorial(&p("4231")));
        assert!(!is_factorial(&p("3412")));
        assert!(is_factorial(&p("2143")));
        assert!(non_factorial_locus(&p("4231")).conjectural);
    }

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity_at(&p("2143"), &p("4231")).unwrap(), 2);
        assert_eq!(multiplicity_at(&p("21354"), &p("52341")).unwrap(), 5);
        assert_eq!(multiplicity_at(&Permutation::identity(4), &p("4231")).unwrap(), 2);
        assert_eq!(multiplicity_at(&p("4231"), &p("4231")).unwrap(), 1);
        assert!(multiplicity_at(&p("4231"), &p("2143")).is_err());
    }

    #[test]
    fn multiplicity_of_segre_slice() {
        // I_{13254,35142} is z11, z21 and the 2-minors of a generic 3×2 matrix,
        // whose zero set is a cone over P¹×P² of degree 3.
        let spec = kl_ideal(&p("13254"), &p("35142")).unwrap();
        let r = &spec.ring;
        let v = |s: &str| crate::poly::Polynomial::var(r.nvars(), r.index_of(s).unwrap());
        let rows = [[v("z1_2"), v("z1_3")], [-&v("z4_1"), v("z3_1")], [v("z2_2"), v("z2_3")]];
        let mut gens = vec![v("z1_1"), v("z2_1")];
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            gens.push(&(&rows[a][0] * &rows[b][1]) - &(&rows[a][1] * &rows[b][0]));
        }
        assert!(crate::poly::ideal_equal(&gens, &spec.generators, TermOrder::GradedDiagonal));
        let seg: Vec<crate::poly::Polynomial> = gens[2..].to_vec();
        let gb = crate::poly::buchberger(&seg, TermOrder::GradedDiagonal);
        assert_eq!(monomial_degree(&minimalize(gb.lead_monomials()), r.nvars()).unwrap(), 3);
        assert_eq!(multiplicity_at(&p("13254"), &p("35142")).unwrap(), 3);
    }

    #[test]
    fn catalan_multiplicities() {
        assert_eq!(multiplicity_at(&Permutation::identity(5), &p("52341")).unwrap(), 5);
    }

    #[test]
    fn lci() {
        assert!(is_lci_at(&p("35142"), &p("35142")).unwrap());
        assert!(!is_lci_at(&p("13254"), &p("35142")).unwrap());
        assert!(is_lci_at(&Permutation::identity(4), &p("4231")).unwrap());
    }

    #[test]
    fn reports() {
        let r = report(&p("13254"), &p("35142"), ReportOptions::all()).unwrap();
        assert!(!r.smooth);
        assert_eq!(r.mult, 3);
        assert_eq!(r.cm_type, Some(2));
        assert_eq!(r.gorenstein, GorensteinFlag { value: false, conjectural: false });
        assert_eq!(r.lci, Some(false));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["x"], "13254");
        assert_eq!(json["gorenstein"]["value"], false);
        assert_eq!(json["kl_poly"], serde_json::json!([1, 1]));

        let r = report(&p("4231"), &p("4231"), ReportOptions::default()).unwrap();
        assert!(r.smooth && r.mult == 1 && r.gorenstein.value);
        assert_eq!(r.cm_type, None);
    }

    #[test]
    fn survey_small() {
        let reports = survey(4, &SurveyOptions::default()).unwrap();
        assert!(reports.iter().all(|r| r.mult <= 2 && r.gorenstein.value));
        assert!(reports.iter().all(|r| r.smooth == (r.mult == 1)));
        let opts = SurveyOptions { targets: Some(vec![p("4231")]), singular_only: true, ..Default::default() };
        let reports = survey(4, &opts).unwrap();
        assert_eq!(reports.len(), 4);
    }

    #[test]
    fn invariance_under_embeddings_into_s5() {
        let mut patterns: Vec<IntervalPattern> = singular_generators(4).generators;
        patterns.extend(gorenstein_generators(5).generators);
        for pat in patterns {
            let base_kl = kl_polynomial(pat.bottom(), pat.top()).unwrap();
            let base_mult = multiplicity_at(pat.bottom(), pat.top()).unwrap();
            for w in Permutation::all(5) {
                for (_, x) in interval_embeddings(&pat, &w) {
                    assert_eq!(kl_polynomial(&x, &w).unwrap(), base_kl);
                    assert_eq!(multiplicity_at(&x, &w).unwrap(), base_mult);
                }
            }
        }
    }
}
