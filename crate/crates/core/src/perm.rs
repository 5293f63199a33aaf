//! Permutations of Sₙ in one-line notation, Coxeter length and Bruhat order.
//!
//! Values and positions are 1-indexed throughout: `w.at(i)` is w(i) for
//! `1 <= i <= n`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of the symmetric group Sₙ.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation (values 1..=n).
    pub fn new(word: impl IntoIterator<Item = usize>) -> Result<Self> {
        let word: Vec<usize> = word.into_iter().collect();
        let n = word.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty word".into()));
        }
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("rank {n} too large")));
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{word:?} is not a bijection on 1..={n}")));
            }
            seen[v] = true;
        }
        Ok(Self { word: word.into_iter().map(|v| v as u8).collect() })
    }

    /// Parses the text format: contiguous digits (`35142`) or comma-separated
    /// integers (`5,8,9,7,1,6,2,3,4`). With `zero_indexed` every entry is
    /// shifted up by one first.
    pub fn parse(text: &str, zero_indexed: bool) -> Result<Self> {
        let text = text.trim();
        let text = text.strip_prefix('{').and_then(|t| t.strip_suffix('}')).unwrap_or(text);
        if text.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        let raw: Vec<usize> = if text.contains(',') {
            text.split(',')
                .map(|tok| tok.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{tok:?}: {e}"))))
                .collect::<Result<_>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("unexpected character {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        let shifted = raw.into_iter().map(|v| if zero_indexed { v + 1 } else { v });
        Self::new(shifted).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn identity(n: usize) -> Self {
        Self { word: (1..=n as u8).collect() }
    }

    /// The longest element w₀(i) = n + 1 − i.
    pub fn longest(n: usize) -> Self {
        Self { word: (1..=n as u8).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// w(i), 1-indexed.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1] as usize
    }

    pub fn word(&self) -> Vec<usize> {
        self.word.iter().map(|&v| v as usize).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Self { word: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// w·(i↔j): swaps the entries in positions `i` and `j`.
    pub fn swap_positions(&self, i: usize, j: usize) -> Self {
        let mut word = self.word.clone();
        word.swap(i - 1, j - 1);
        Self { word }
    }

    /// (a↔b)·w: swaps the values `a` and `b`.
    pub fn swap_values(&self, a: usize, b: usize) -> Self {
        let word = self
            .word
            .iter()
            .map(|&v| match v as usize {
                x if x == a => b as u8,
                x if x == b => a as u8,
                _ => v,
            })
            .collect();
        Self { word }
    }

    /// Counts r_{ij} = #{k ≤ j : w(k) ≥ i}, stored row-major with
    /// `counts[(i-1)*n + (j-1)]`.
    pub fn rank_counts(&self) -> Vec<u8> {
        let n = self.n();
        let mut r = vec![0u8; n * n];
        for i in 1..=n {
            let mut acc = 0u8;
            for j in 1..=n {
                if self.at(j) >= i {
                    acc += 1;
                }
                r[(i - 1) * n + (j - 1)] = acc;
            }
        }
        r
    }

    /// Bruhat comparison `self <= other` by rank-matrix dominance.
    ///
    /// Panics if the permutations have different rank; see [`bruhat_leq`]
    /// for the checked form.
    pub fn bruhat_le(&self, other: &Self) -> bool {
        assert_eq!(self.n(), other.n(), "Bruhat comparison across ranks");
        let n = self.n();
        // Row-by-row running counts avoid materialising both matrices.
        for i in 1..=n {
            let (mut a, mut b) = (0usize, 0usize);
            for j in 1..=n {
                a += (self.at(j) >= i) as usize;
                b += (other.at(j) >= i) as usize;
                if a > b {
                    return false;
                }
            }
        }
        true
    }

    /// Downward covers: all w·(i↔j) of length ℓ(w) − 1.
    pub fn covers(&self) -> Vec<Self> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                let (a, b) = (self.at(i), self.at(j));
                if a <= b {
                    continue;
                }
                // Length drops by one iff no value strictly between sits between the positions.
                if (i + 1..j).all(|k| !(b < self.at(k) && self.at(k) < a)) {
                    out.push(self.swap_positions(i, j));
                }
            }
        }
        out
    }

    /// Embeds into S_m (m ≥ n) by fixing n+1..m.
    pub fn extend_to(&self, m: usize) -> Self {
        assert!(m >= self.n());
        let mut word = self.word.clone();
        word.extend(self.n() as u8 + 1..=m as u8);
        Self { word }
    }

    /// All elements of Sₙ in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Self> {
        let mut next = Some(Self::identity(n));
        std::iter::from_fn(move || {
            let cur = next.take()?;
            next = cur.lex_successor();
            Some(cur)
        })
    }

    fn lex_successor(&self) -> Option<Self> {
        let mut w = self.word.clone();
        let n = w.len();
        if n < 2 {
            return None;
        }
        let mut i = n - 1;
        while i > 0 && w[i - 1] > w[i] {
            i -= 1;
        }
        if i == 0 {
            return None;
        }
        let mut j = n - 1;
        while w[j] < w[i - 1] {
            j -= 1;
        }
        w.swap(i - 1, j);
        w[i..].reverse();
        Some(Self { word: w })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, false)
    }
}

impl TryFrom<String> for Permutation {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Permutation> for String {
    fn from(p: Permutation) -> String {
        p.to_string()
    }
}

/// Coxeter length ℓ(w).
pub fn length(w: &Permutation) -> usize {
    w.length()
}

/// Checked Bruhat comparison u ≤ w.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> Result<bool> {
    if u.n() != w.n() {
        return Err(Error::RankMismatch(u.n(), w.n()));
    }
    Ok(u.bruhat_le(w))
}

pub fn bruhat_covers(w: &Permutation) -> BTreeSet<Permutation> {
    w.covers().into_iter().collect()
}

pub fn longest_element(n: usize) -> Permutation {
    Permutation::longest(n)
}

/// A Bruhat interval [bottom, top].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BruhatInterval {
    bottom: Permutation,
    top: Permutation,
}

impl BruhatInterval {
    pub fn new(bottom: Permutation, top: Permutation) -> Result<Self> {
        if !bruhat_leq(&bottom, &top)? {
            return Err(Error::NotBelow { x: bottom.to_string(), w: top.to_string() });
        }
        Ok(Self { bottom, top })
    }

    pub fn bottom(&self) -> &Permutation {
        &self.bottom
    }

    pub fn top(&self) -> &Permutation {
        &self.top
    }

    /// ℓ(top) − ℓ(bottom).
    pub fn height(&self) -> usize {
        self.top.length() - self.bottom.length()
    }

    /// Every z with bottom ≤ z ≤ top, found by a downward search over covers.
    pub fn elements(&self) -> BTreeSet<Permutation> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([self.top.clone()]);
        seen.insert(self.top.clone());
        while let Some(z) = queue.pop_front() {
            for c in z.covers() {
                if !seen.contains(&c) && self.bottom.bruhat_le(&c) {
                    seen.insert(c.clone());
                    queue.push_back(c);
                }
            }
        }
        seen
    }
}

impl fmt::Display for BruhatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.bottom, self.top)
    }
}

pub fn interval_elements(iv: &BruhatInterval) -> BTreeSet<Permutation> {
    iv.elements()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(p("35142").length(), 6);
        assert_eq!(Permutation::identity(5).length(), 0);
        assert_eq!(p("589716234").length(), 24);
        assert_eq!(longest_element(5).length(), 10);
    }

    #[test]
    fn parse_formats() {
        assert_eq!(p("5,8,9,7,1,6,2,3,4"), p("589716234"));
        assert_eq!(Permutation::parse("24031", true).unwrap(), p("35142"));
        assert_eq!(Permutation::parse("{2,4,0,3,1}", true).unwrap(), p("35142"));
        assert!(Permutation::parse("3514", false).is_err());
        assert!(Permutation::parse("1123", false).is_err());
        assert!(Permutation::parse("", false).is_err());
        let big = Permutation::new([2, 1, 3, 4, 5, 6, 7, 8, 9, 10]).unwrap();
        assert_eq!(big.to_string(), "2,1,3,4,5,6,7,8,9,10");
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
    }

    #[test]
    fn longest_elements() {
        assert_eq!(longest_element(1), p("1"));
        assert_eq!(longest_element(4), p("4321"));
    }

    #[test]
    fn bruhat_examples() {
        assert!(bruhat_leq(&p("13524"), &p("35142")).unwrap());
        assert!(bruhat_leq(&p("35142"), &p("35142")).unwrap());
        assert_eq!(bruhat_leq(&p("123"), &p("1234")), Err(Error::RankMismatch(3, 4)));
    }

    #[test]
    fn covers_small_cases() {
        assert!(bruhat_covers(&Permutation::identity(4)).is_empty());
        assert_eq!(bruhat_covers(&p("21")), BTreeSet::from([p("12")]));
    }

    #[test]
    fn covers_of_3412_match_transposition_scan() {
        let w = p("3412");
        let mut expected = BTreeSet::new();
        for i in 1..=4 {
            for j in i + 1..=4 {
                let u = w.swap_positions(i, j);
                if u.length() + 1 == w.length() {
                    expected.insert(u);
                }
            }
        }
        assert_eq!(expected.len(), 4);
        assert_eq!(bruhat_covers(&w), expected);
    }

    /// Reflexive-transitive closure of length-increasing transpositions.
    fn closure_below(w: &Permutation) -> HashSet<Permutation> {
        let mut seen = HashSet::from([w.clone()]);
        let mut stack = vec![w.clone()];
        while let Some(z) = stack.pop() {
            for i in 1..=z.n() {
                for j in i + 1..=z.n() {
                    let u = z.swap_positions(i, j);
                    if u.length() < z.length() && seen.insert(u.clone()) {
                        stack.push(u);
                    }
                }
            }
        }
        seen
    }

    #[test]
    fn rank_dominance_matches_closure_oracle() {
        for n in [3, 4, 5] {
            let all: Vec<_> = Permutation::all(n).collect();
            for w in &all {
                let below = closure_below(w);
                for u in &all {
                    assert_eq!(u.bruhat_le(w), below.contains(u), "{u} vs {w}");
                }
            }
        }
    }

    #[test]
    fn bruhat_is_a_partial_order_on_s4() {
        let all: Vec<_> = Permutation::all(4).collect();
        assert_eq!(all.len(), 24);
        for a in &all {
            for b in &all {
                if a.bruhat_le(b) && b.bruhat_le(a) {
                    assert_eq!(a, b);
                }
                for c in &all {
                    if a.bruhat_le(b) && b.bruhat_le(c) {
                        assert!(a.bruhat_le(c));
                    }
                }
            }
        }
    }

    #[test]
    fn covers_are_graded_on_s5() {
        for w in Permutation::all(5) {
            for u in w.covers() {
                assert_eq!(u.length() + 1, w.length());
                assert!(u.bruhat_le(&w));
            }
        }
    }

    #[test]
    fn interval_sizes() {
        let w = p("461253");
        let iv = BruhatInterval::new(Permutation::identity(6), w.clone()).unwrap();
        let brute: BTreeSet<_> = Permutation::all(6).filter(|z| z.bruhat_le(&w)).collect();
        assert_eq!(iv.elements(), brute);
        let single = BruhatInterval::new(w.clone(), w.clone()).unwrap();
        assert_eq!(single.elements(), BTreeSet::from([w]));

        let iv = BruhatInterval::new(p("2143"), p("4231")).unwrap();
        let brute: BTreeSet<_> =
            Permutation::all(4).filter(|z| p("2143").bruhat_le(z) && z.bruhat_le(&p("4231"))).collect();
        assert_eq!(iv.elements(), brute);
        assert!(BruhatInterval::new(p("4231"), p("2143")).is_err());
    }

    #[test]
    fn inverse_and_swaps() {
        let w = p("35142");
        assert_eq!(w.inverse(), w);
        assert_eq!(p("231").inverse(), p("312"));
        assert_eq!(p("461253").inverse().inverse(), p("461253"));
        assert_eq!(w.swap_values(1, 2), p("35241"));
        assert_eq!(w.swap_positions(1, 2), p("53142"));
        assert_eq!(Permutation::all(5).count(), 120);
    }
}
