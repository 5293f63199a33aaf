//! Rank matrices, diagrams, generic matrices Z^{(x)} and Kazhdan-Lusztig
//! ideals I_{x,w}.
//!
//! Grids are indexed (row from the top, column from the left), both 1-based.
//! A permutation w has its 1 in column j at row w(j). The cell at grid row a,
//! column b carries the variable z_{n−a+1,b}, so z_{11} sits in the bottom
//! left corner.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::pattern::{is_interval_embedding, phi_image, Embedding};
use crate::perm::Permutation;
use crate::poly::{buchberger, determinant, ideal_equal, Grading, Polynomial, TermOrder, VariableRing};

/// r_{ij} = #{k ≤ j : w(k) ≥ i}, the number of 1s weakly southwest of (i,j).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankMatrix {
    n: usize,
    entries: Vec<usize>,
}

impl RankMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries.chunks(self.n).map(<[usize]>::to_vec).collect()
    }
}

pub fn rank_matrix(w: &Permutation) -> RankMatrix {
    let n = w.n();
    let mut entries = vec![0; n * n];
    for i in 1..=n {
        let mut count = 0;
        for j in 1..=n {
            if w.at(j) >= i {
                count += 1;
            }
            entries[(i - 1) * n + (j - 1)] = count;
        }
    }
    RankMatrix { n, entries }
}

/// Cells outside every hook, where the hook of the 1 at (w(j), j) is the
/// cell itself, the cells to its right and the cells above it.
pub fn diagram(w: &Permutation) -> BTreeSet<(usize, usize)> {
    let n = w.n();
    let winv = w.inverse();
    let mut out = BTreeSet::new();
    for a in 1..=n {
        for b in 1..=n {
            // Row a's 1 is at column winv(a); column b's 1 is at row w(b).
            let in_row_hook = winv.at(a) <= b;
            let in_col_hook = w.at(b) >= a;
            if !in_row_hook && !in_col_hook {
                out.insert((a, b));
            }
        }
    }
    out
}

/// The northeast corner of each connected component of the diagram.
pub fn essential_set(w: &Permutation) -> BTreeSet<(usize, usize)> {
    let d = diagram(w);
    d.iter().filter(|&&(r, c)| !d.contains(&(r.wrapping_sub(1), c)) && !d.contains(&(r, c + 1))).copied().collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cell {
    Zero,
    One,
    /// A free variable z_{i,j}, stored by its label.
    Var(usize, usize),
}

/// The specialized generic matrix Z^{(x)}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericMatrix {
    x: Permutation,
    cells: Vec<Cell>,
}

impl GenericMatrix {
    pub fn n(&self) -> usize {
        self.x.n()
    }

    pub fn source(&self) -> &Permutation {
        &self.x
    }

    /// The cell at grid row a, column b.
    pub fn cell(&self, a: usize, b: usize) -> Cell {
        self.cells[(a - 1) * self.n() + (b - 1)]
    }

    /// Labels (i,j) of the free variables, in ring order (lexicographic).
    pub fn variables(&self) -> Vec<(usize, usize)> {
        let mut vars: Vec<(usize, usize)> = self
            .cells
            .iter()
            .filter_map(|c| match *c {
                Cell::Var(i, j) => Some((i, j)),
                _ => None,
            })
            .collect();
        vars.sort();
        vars
    }

    /// Grid position of the variable with label (i,j).
    pub fn position_of(&self, label: (usize, usize)) -> (usize, usize) {
        (self.n() - label.0 + 1, label.1)
    }
}

impl fmt::Display for GenericMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let text: Vec<String> = self
            .cells
            .iter()
            .map(|c| match *c {
                Cell::Zero => "0".to_string(),
                Cell::One => "1".to_string(),
                Cell::Var(i, j) => variable_name(i, j),
            })
            .collect();
        let width = text.iter().map(String::len).max().unwrap_or(1);
        for row in text.chunks(n) {
            let padded: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "{}", padded.join(" "))?;
        }
        Ok(())
    }
}

pub fn variable_name(i: usize, j: usize) -> String {
    format!("z{i}_{j}")
}

/// Z^{(x)}: a 1 at (x(i), i), zeros to the right of each 1 and above each 1,
/// and a variable everywhere else.
pub fn generic_matrix(x: &Permutation) -> GenericMatrix {
    let n = x.n();
    let xinv = x.inverse();
    let mut cells = Vec::with_capacity(n * n);
    for a in 1..=n {
        for b in 1..=n {
            let cell = if x.at(b) == a {
                Cell::One
            } else if xinv.at(a) < b || x.at(b) > a {
                Cell::Zero
            } else {
                Cell::Var(n - a + 1, b)
            };
            cells.push(cell);
        }
    }
    GenericMatrix { x: x.clone(), cells }
}

/// Which rank conditions feed the generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankPositions {
    /// Only essential-set positions of w (enough to generate the ideal).
    Essential,
    /// Every position (i,j); used to cross-check the essential reduction.
    All,
}

/// A Kazhdan-Lusztig ideal with its ring and the matrix it came from.
#[derive(Clone, Debug)]
pub struct KLIdealSpec {
    pub x: Permutation,
    pub w: Permutation,
    pub ring: VariableRing,
    pub generators: Vec<Polynomial>,
    pub matrix: GenericMatrix,
}

impl KLIdealSpec {
    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// Coarse integer degree of every ring variable.
    pub fn coarse_degrees(&self) -> Vec<i64> {
        self.ring.grading().scalar_degrees()
    }

    /// Dimension of 𝒩_{x,w}, namely ℓ(w) − ℓ(x).
    pub fn expected_dimension(&self) -> usize {
        self.w.length() - self.x.length()
    }
}

/// I_{x,w}: the (1 + r^w_{ij})-minors of the southwest submatrices of Z^{(x)}
/// at the essential positions of w.
pub fn kl_ideal(x: &Permutation, w: &Permutation) -> Result<KLIdealSpec> {
    kl_ideal_with(x, w, RankPositions::Essential)
}

pub fn kl_ideal_with(x: &Permutation, w: &Permutation, positions: RankPositions) -> Result<KLIdealSpec> {
    if x.n() != w.n() {
        return Err(Error::RankMismatch(x.n(), w.n()));
    }
    if !x.bruhat_le(w) {
        return Err(Error::NotBelow { x: x.to_string(), w: w.to_string() });
    }
    let matrix = generic_matrix(x);
    let labels = matrix.variables();
    let grading = Grading::coarse(coarse_degrees(x, &labels))?;
    let ring = VariableRing::new(labels.iter().map(|&(i, j)| variable_name(i, j)).collect(), grading)?;
    let generators = rank_minors(&matrix, &labels, w, positions);
    if generators.iter().any(|g| g.is_constant()) {
        return Err(Error::Inconsistent(format!("I_({x},{w}) is the unit ideal")));
    }
    Ok(KLIdealSpec { x: x.clone(), w: w.clone(), ring, generators, matrix })
}

/// The matrix Schubert ideal I_w in the fully generic n×n matrix ring.
pub fn matrix_schubert_ideal(w: &Permutation) -> KLIdealSpec {
    let n = w.n();
    let cells = (1..=n).flat_map(|a| (1..=n).map(move |b| Cell::Var(n - a + 1, b))).collect();
    // The source permutation of a fully generic matrix is irrelevant; keep the identity.
    let matrix = GenericMatrix { x: Permutation::identity(n), cells };
    let labels = matrix.variables();
    let ring = VariableRing::standard(labels.iter().map(|&(i, j)| variable_name(i, j)).collect())
        .expect("distinct variable names");
    let generators = rank_minors(&matrix, &labels, w, RankPositions::Essential);
    KLIdealSpec { x: Permutation::identity(n), w: w.clone(), ring, generators, matrix }
}

fn rank_minors(
    matrix: &GenericMatrix,
    labels: &[(usize, usize)],
    w: &Permutation,
    positions: RankPositions,
) -> Vec<Polynomial> {
    let n = w.n();
    let nvars = labels.len();
    let entry = |a: usize, b: usize| match matrix.cell(a, b) {
        Cell::Zero => Polynomial::zero(nvars),
        Cell::One => Polynomial::one(nvars),
        Cell::Var(i, j) => Polynomial::var(nvars, labels.binary_search(&(i, j)).expect("label in ring")),
    };
    let sites: Vec<(usize, usize)> = match positions {
        RankPositions::Essential => essential_set(w).into_iter().collect(),
        RankPositions::All => (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect(),
    };
    let ranks = rank_matrix(w);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (i, j) in sites {
        let size = 1 + ranks.get(i, j);
        let rows: Vec<usize> = (i..=n).collect();
        let cols: Vec<usize> = (1..=j).collect();
        if size > rows.len().min(cols.len()) {
            continue;
        }
        for rs in subsets(&rows, size) {
            for cs in subsets(&cols, size) {
                let m: Vec<Vec<Polynomial>> = rs.iter().map(|&a| cs.iter().map(|&b| entry(a, b)).collect()).collect();
                let d = determinant(&m).expect("square minor");
                if d.is_zero() {
                    continue;
                }
                let key = normalized_key(&d);
                if seen.insert(key) {
                    out.push(d);
                }
            }
        }
    }
    out
}

/// A key identifying a polynomial up to sign.
fn normalized_key(f: &Polynomial) -> Vec<(Vec<u16>, String)> {
    let flip = f.terms()[0].1 < num_traits::Zero::zero();
    f.terms()
        .iter()
        .map(|(m, c)| (m.exponents().to_vec(), if flip { (-c).to_string() } else { c.to_string() }))
        .collect()
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for t in start..items.len() {
            if items.len() - t < k - cur.len() {
                break;
            }
            cur.push(items[t]);
            rec(items, k, t + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

fn coarse_degrees(x: &Permutation, labels: &[(usize, usize)]) -> Vec<i64> {
    let n = x.n();
    let xinv = x.inverse();
    labels.iter().map(|&(i, j)| xinv.at(n - i + 1) as i64 - j as i64).collect()
}

/// The ℤⁿ-grading in which the variable at grid (a,b) has degree e_{x⁻¹(a)} − e_b.
pub fn kl_multigrading(x: &Permutation) -> Grading {
    let n = x.n();
    let xinv = x.inverse();
    let degrees = generic_matrix(x)
        .variables()
        .into_iter()
        .map(|(i, j)| {
            let mut d = vec![0i64; n];
            d[xinv.at(n - i + 1) - 1] += 1;
            d[j - 1] -= 1;
            d
        })
        .collect();
    Grading::multigrade(degrees)
}

/// The coarse ℤ-grading obtained by sending e_i − e_j to i − j.
pub fn kl_coarse_grading(x: &Permutation) -> Grading {
    let labels = generic_matrix(x).variables();
    Grading::coarse(coarse_degrees(x, &labels)).expect("Kazhdan-Lusztig degrees are positive")
}

/// Checks the local isomorphism between 𝒩_{Φ(u),w} and 𝒩_{u,v} induced by an
/// interval embedding: the coordinates of Z^{(Φ(u))} outside the embedded rows
/// and columns lie in I_{Φ(u),w} (as generators of its reduced basis), and
/// once they are set to zero the surviving coordinates, renamed along the
/// embedding, generate exactly I_{u,v}.
pub fn verify_interval_isomorphism(u: &Permutation, v: &Permutation, w: &Permutation, phi: &Embedding) -> Result<bool> {
    if !is_interval_embedding(u, v, w, phi)? {
        return Err(Error::Precondition(format!("{phi} is not an interval embedding of [{u},{v}] into {w}")));
    }
    let x = phi_image(u, v, w, phi)?;
    let big = kl_ideal(&x, w)?;
    let small = kl_ideal(u, v)?;
    let gb = buchberger(&big.generators, TermOrder::GradedDiagonal);

    let big_labels = big.matrix.variables();
    let small_labels = small.matrix.variables();
    let outside: BTreeSet<usize> = phi.complement().into_iter().collect();
    let forced_rows: BTreeSet<usize> = outside.iter().map(|&j| x.at(j)).collect();

    let mut map = vec![None; big_labels.len()];
    let mut hit = vec![false; small_labels.len()];
    for (k, &label) in big_labels.iter().enumerate() {
        let (a, b) = big.matrix.position_of(label);
        if outside.contains(&b) || forced_rows.contains(&a) {
            let var = Polynomial::var(big_labels.len(), k);
            if !gb.generators().contains(&var) {
                return Ok(false);
            }
            continue;
        }
        // Row a is x(φ_s) and column b is φ_t; they land on (u(s), t).
        let s = phi.position_of(x.inverse().at(a)).expect("row comes from an embedded column");
        let t = phi.position_of(b).expect("column is embedded");
        let Cell::Var(i, j) = small.matrix.cell(u.at(s), t) else {
            return Ok(false);
        };
        let target = small_labels.binary_search(&(i, j)).expect("label in ring");
        if hit[target] {
            return Ok(false);
        }
        hit[target] = true;
        map[k] = Some(target);
    }
    if hit.iter().any(|h| !h) {
        return Ok(false);
    }
    let image: Vec<Polynomial> =
        gb.generators().iter().map(|g| g.restrict(&map, small_labels.len())).filter(|g| !g.is_zero()).collect();
    Ok(ideal_equal(&image, &small.generators, TermOrder::GradedDiagonal))
}
