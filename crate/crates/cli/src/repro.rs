//! Replays of the worked examples, each as a list of checked assertions.

use std::collections::BTreeSet;
use std::fmt::Debug;

use schubsing::invariants::{
    cm_type_at, kl_polynomial, multiplicity_at, non_gorenstein_locus, singular_locus, survey, ReportOptions,
    SurveyOptions,
};
use schubsing::klideal::{kl_ideal, verify_interval_isomorphism};
use schubsing::pattern::{
    classical_embeddings, interval_avoids, interval_embeddings, is_interval_embedding, phi_image,
};
use schubsing::poly::{buchberger, ideal_equal, parse_polynomial, Polynomial, TermOrder};
use schubsing::resolution::betti_table;
use schubsing::{BruhatInterval, Embedding, Error, IntervalPattern, Permutation, Result};

/// One assertion of a replay.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub description: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn equal<T: PartialEq + Debug>(description: &str, expected: T, got: T) -> Self {
        let passed = expected == got;
        let detail = if passed { format!("{got:?}") } else { format!("expected {expected:?}, got {got:?}") };
        Self { description: description.to_string(), passed, detail }
    }

    fn holds(description: &str, passed: bool) -> Self {
        Self { description: description.to_string(), passed, detail: String::new() }
    }

    fn note(description: &str, detail: String) -> Self {
        Self { description: description.to_string(), passed: true, detail }
    }
}

type Replay = fn() -> Result<Vec<Check>>;

/// Replay ids with one-line descriptions.
pub const REPLAYS: &[(&str, &str, Replay)] = &[
    (
        "embedding-arithmetic",
        "Φ(13524) for the embedding {1,4,5,6,8} of [13524,35142] into 589716234",
        embedding_arithmetic,
    ),
    (
        "avoidance-despite-containment",
        "265314 contains 2413 twice yet avoids [2143,2413]",
        avoidance_despite_containment,
    ),
    ("ideal-generators", "the nine generators of I_{13254,35142}", ideal_generators),
    ("local-triviality", "I_{13524,35142} and the slice isomorphism along an interval embedding", local_triviality),
    ("singular-locus", "singular locus of X_461253", singular_locus_461253),
    ("non-gorenstein-locus", "non-Gorenstein locus of X_461253 and the resolution at 123546", non_gorenstein_461253),
    ("betti-session", "graded Betti numbers of I_{13254,35142}", betti_session),
    ("multiplicity-session", "multiplicity of X_35142 at e_13254 via the tangent cone", multiplicity_session),
    ("multiplicity-sweep", "multiplicities and types of all X_w, w in S5", multiplicity_sweep),
];

pub fn ids() -> impl Iterator<Item = &'static str> {
    REPLAYS.iter().map(|(id, _, _)| *id)
}

pub fn describe(id: &str) -> Option<&'static str> {
    REPLAYS.iter().find(|(i, _, _)| *i == id).map(|(_, d, _)| *d)
}

/// Runs one replay.
pub fn replay(id: &str) -> Result<Vec<Check>> {
    let (_, _, f) =
        REPLAYS.iter().find(|(i, _, _)| *i == id).ok_or_else(|| Error::Parse(format!("unknown example id {id:?}")))?;
    f()
}

fn p(s: &str) -> Permutation {
    s.parse().expect("literal permutation")
}

fn set(items: &[&str]) -> BTreeSet<Permutation> {
    items.iter().map(|s| p(s)).collect()
}

fn embedding(indices: &[usize], n: usize) -> Embedding {
    Embedding::new(indices.to_vec(), n).expect("literal embedding")
}

fn embedding_arithmetic() -> Result<Vec<Check>> {
    let (u, v, w) = (p("13524"), p("35142"), p("589716234"));
    let phi = embedding(&[1, 4, 5, 6, 8], 9);
    let x = phi_image(&u, &v, &w, &phi)?;
    Ok(vec![
        Check::equal("Φ(u)", p("189573264"), x.clone()),
        Check::equal("ℓ(w)", 24, w.length()),
        Check::equal("ℓ(Φ(u))", 21, x.length()),
        Check::equal("ℓ(v) − ℓ(u)", 3, v.length() - u.length()),
        Check::holds("interval embedding", is_interval_embedding(&u, &v, &w, &phi)?),
    ])
}

fn avoidance_despite_containment() -> Result<Vec<Check>> {
    let (u, v, w) = (p("2143"), p("2413"), p("265314"));
    let embs = classical_embeddings(&v, &w);
    let indices: Vec<Vec<usize>> = embs.iter().map(|e| e.indices().to_vec()).collect();
    let images: Vec<Permutation> = embs.iter().map(|e| phi_image(&u, &v, &w, e)).collect::<Result<_>>()?;
    let gaps: Vec<usize> = images.iter().map(|x| w.length() - x.length()).collect();
    let pat = IntervalPattern::new(u.clone(), v.clone())?;
    Ok(vec![
        Check::equal("classical embeddings of 2413", vec![vec![1, 2, 5, 6], vec![1, 3, 5, 6]], indices),
        Check::equal("Φ images", vec![p("215364"), p("261354")], images),
        Check::equal("ℓ(w) − ℓ(Φ(u))", vec![5, 3], gaps),
        Check::equal("ℓ(v) − ℓ(u)", 1, v.length() - u.length()),
        Check::holds("interval avoids [2143,2413]", interval_avoids(&w, &pat)),
    ])
}

fn parse_all(ring: &schubsing::poly::VariableRing, texts: &[&str]) -> Result<Vec<Polynomial>> {
    texts.iter().map(|t| parse_polynomial(t, ring)).collect()
}

fn ideal_generators() -> Result<Vec<Check>> {
    let spec = kl_ideal(&p("13254"), &p("35142"))?;
    let nine = parse_all(
        &spec.ring,
        &[
            "z1_1",
            "z2_1",
            "-z1_1*z2_3 + z2_1*z1_3 + z3_1*z1_2*z2_3 - z3_1*z1_3*z2_2",
            "z1_1*z2_2 - z2_1*z1_2 + z4_1*z1_2*z2_3 - z4_1*z1_3*z2_2",
            "z1_1 - z3_1*z1_2 - z4_1*z1_3",
            "z2_1 - z3_1*z2_2 - z4_1*z2_3",
            "z1_1*z2_2 - z2_1*z1_2",
            "z1_1*z2_3 - z2_1*z1_3",
            "z1_2*z2_3 - z2_2*z1_3",
        ],
    )?;
    let gb = buchberger(&spec.generators, TermOrder::GradedDiagonal);
    Ok(vec![
        Check::equal("variables", 8, spec.nvars()),
        Check::holds(
            "ideal equals the nine generators",
            ideal_equal(&spec.generators, &nine, TermOrder::GradedDiagonal),
        ),
        Check::equal("coarse degrees", vec![3, 2, 1, 4, 3, 2, 1, 2], spec.coarse_degrees()),
        Check::note("reduced Gröbner basis size", gb.generators().len().to_string()),
    ])
}

fn local_triviality() -> Result<Vec<Check>> {
    let (u, v, w) = (p("13524"), p("35142"), p("589716234"));
    let spec = kl_ideal(&u, &v)?;
    let expected = parse_all(&spec.ring, &["z1_1", "z2_1", "z2_2", "z4_1"])?;
    let phi = embedding(&[1, 4, 5, 6, 8], 9);
    Ok(vec![
        Check::holds(
            "I_{13524,35142} = ⟨z11, z21, z22, z41⟩",
            ideal_equal(&spec.generators, &expected, TermOrder::GradedDiagonal),
        ),
        Check::holds("𝒩_{u,v} × affine space ≅ 𝒩_{Φ(u),w}", verify_interval_isomorphism(&u, &v, &w, &phi)?),
    ])
}

fn singular_locus_461253() -> Result<Vec<Check>> {
    let w = p("461253");
    let found: BTreeSet<Permutation> = singular_locus(&w).into_iter().collect();
    let pat = IntervalPattern::new(p("1324"), p("3412"))?;
    let embs: Vec<(Vec<usize>, Permutation)> =
        interval_embeddings(&pat, &w).into_iter().map(|(e, x)| (e.indices().to_vec(), x)).collect();
    let pat2 = IntervalPattern::new(p("13254"), p("35142"))?;
    let images: BTreeSet<Permutation> = interval_embeddings(&pat2, &w).into_iter().map(|(_, x)| x).collect();
    Ok(vec![
        Check::equal("maximal singular points", set(&["142653", "241365", "143265"]), found),
        Check::equal("embeddings of [1324,3412]", vec![(vec![1, 2, 3, 4], p("142653"))], embs),
        Check::equal("images of [13254,35142]", set(&["241365", "143265"]), images),
    ])
}

fn non_gorenstein_461253() -> Result<Vec<Check>> {
    let w = p("461253");
    let locus = non_gorenstein_locus(&w);
    let maxima: BTreeSet<Permutation> = locus.points.iter().cloned().collect();
    let below = BruhatInterval::new(Permutation::identity(6), w.clone())?.elements();
    let mut agree = true;
    let mut in_locus = 0;
    for x in &below {
        let predicted = maxima.iter().any(|m| x.bruhat_le(m));
        in_locus += usize::from(predicted);
        agree &= (cm_type_at(x, &w)? > 1) == predicted;
    }
    let spec = kl_ideal(&p("123546"), &w)?;
    let table = betti_table(&spec)?;
    Ok(vec![
        Check::equal("maximal non-Gorenstein points", set(&["241365", "143265"]), maxima),
        Check::holds("locus description proven at n = 6", !locus.conjectural),
        Check::holds("type > 1 exactly on the locus, at every point of [id, w]", agree),
        Check::equal("Betti numbers at 123546", vec![1, 7, 21, 35, 35, 21, 7, 1], table.totals().to_vec()),
        Check::equal("type at 123546", 1, table.last()),
        Check::note("points of [id, w]", below.len().to_string()),
        Check::note("points in the locus", in_locus.to_string()),
    ])
}

fn betti_session() -> Result<Vec<Check>> {
    let spec = kl_ideal(&p("13254"), &p("35142"))?;
    let table = betti_table(&spec)?;
    let graded: Vec<(usize, i64, usize)> = table.graded_entries().collect();
    Ok(vec![
        Check::equal("total Betti numbers", vec![1, 5, 9, 7, 2], table.totals().to_vec()),
        Check::equal(
            "graded Betti numbers (i, degree, β)",
            vec![
                (0, 0, 1),
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
            ],
            graded,
        ),
    ])
}

fn multiplicity_session() -> Result<Vec<Check>> {
    Ok(vec![
        Check::equal("mult_{e_13254}(X_35142)", 2, multiplicity_at(&p("13254"), &p("35142"))?),
        Check::equal("mult_{e_2143}(X_4231)", 2, multiplicity_at(&p("2143"), &p("4231"))?),
        Check::equal("mult_{e_21354}(X_52341)", 5, multiplicity_at(&p("21354"), &p("52341"))?),
        Check::equal("mult_{e_id}(X_4231) = C₂", 2, multiplicity_at(&Permutation::identity(4), &p("4231"))?),
        Check::equal("P_{2143,4231}", vec![1, 1], kl_polynomial(&p("2143"), &p("4231"))?.coefficients().to_vec()),
        Check::equal(
            "P_{21354,52341}",
            vec![1, 2, 1],
            kl_polynomial(&p("21354"), &p("52341"))?.coefficients().to_vec(),
        ),
    ])
}

fn multiplicity_sweep() -> Result<Vec<Check>> {
    let opts =
        SurveyOptions { invariants: ReportOptions { cm_type: true, ..Default::default() }, ..Default::default() };
    let reports = survey(5, &opts)?;
    let non_gor = set(&["53241", "35142", "42513", "52431"]);
    let top = p("52341");
    let corner = p("21354");
    let mut special = true;
    let mut non_gorenstein = true;
    let mut others = true;
    for r in &reports {
        if r.w == top {
            let expect = if r.x.bruhat_le(&corner) {
                5
            } else if r.smooth {
                1
            } else {
                2
            };
            special &= r.mult == expect && r.gorenstein.value;
        } else if non_gor.contains(&r.w) {
            non_gorenstein &= if r.smooth { r.mult == 1 } else { r.mult == 3 && r.cm_type == Some(2) };
        } else {
            others &= if r.smooth { r.mult == 1 } else { r.mult == 2 };
        }
    }
    Ok(vec![
        Check::holds("X_52341: 5 below 21354, 1 where nonsingular, 2 elsewhere", special),
        Check::holds("non-Gorenstein X_w: multiplicity 3 and type 2 where singular", non_gorenstein),
        Check::holds("all other X_w: multiplicity 2 where singular", others),
        Check::note("pairs surveyed", reports.len().to_string()),
    ])
}
