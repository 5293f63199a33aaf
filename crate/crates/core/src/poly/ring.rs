use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// How variable degrees are measured.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GradingMode {
    /// Each variable carries a vector e_i − e_j in ℤⁿ.
    Multigrade,
    /// Each variable carries a positive integer.
    Coarse,
    /// Every variable has degree one.
    Standard,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grading {
    mode: GradingMode,
    degrees: Vec<Vec<i64>>,
}

impl Grading {
    pub fn standard(nvars: usize) -> Self {
        Self { mode: GradingMode::Standard, degrees: vec![vec![1]; nvars] }
    }

    pub fn coarse(degrees: Vec<i64>) -> Result<Self> {
        if let Some(d) = degrees.iter().find(|&&d| d <= 0) {
            return Err(Error::Precondition(format!("coarse degree {d} is not positive")));
        }
        Ok(Self { mode: GradingMode::Coarse, degrees: degrees.into_iter().map(|d| vec![d]).collect() })
    }

    pub fn multigrade(degrees: Vec<Vec<i64>>) -> Self {
        Self { mode: GradingMode::Multigrade, degrees }
    }

    pub fn mode(&self) -> GradingMode {
        self.mode
    }

    pub fn nvars(&self) -> usize {
        self.degrees.len()
    }

    pub fn variable_degree(&self, i: usize) -> &[i64] {
        &self.degrees[i]
    }

    /// Integer degrees of the variables; only meaningful for coarse and standard gradings.
    pub fn scalar_degrees(&self) -> Vec<i64> {
        self.degrees.iter().map(|d| d[0]).collect()
    }

    pub fn degree_of(&self, m: &Monomial) -> Vec<i64> {
        let width = self.degrees.first().map_or(1, Vec::len);
        let mut out = vec![0; width];
        for i in m.support() {
            let e = m.exponent(i) as i64;
            for (o, d) in out.iter_mut().zip(&self.degrees[i]) {
                *o += e * d;
            }
        }
        out
    }
}

/// Whether every term of `f` has the same degree under `grading`.
pub fn is_homogeneous(f: &Polynomial, grading: &Grading) -> bool {
    let mut degs = f.terms().iter().map(|(m, _)| grading.degree_of(m));
    match degs.next() {
        None => true,
        Some(first) => degs.all(|d| d == first),
    }
}

/// Named variables and their grading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableRing {
    names: Vec<String>,
    grading: Grading,
}

impl VariableRing {
    pub fn new(names: Vec<String>, grading: Grading) -> Result<Self> {
        if names.len() != grading.nvars() {
            return Err(Error::Inconsistent(format!("{} names but {} graded variables", names.len(), grading.nvars())));
        }
        let mut seen = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if let Some(j) = seen.insert(n.as_str(), i) {
                return Err(Error::Inconsistent(format!("variable {n} repeated at {j} and {i}")));
            }
        }
        Ok(Self { names, grading })
    }

    pub fn standard(names: Vec<String>) -> Result<Self> {
        let n = names.len();
        Self::new(names, Grading::standard(n))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    /// The ring with the homogenizing variable `t` prepended, standard grading.
    pub fn with_t(&self) -> Result<Self> {
        let mut names = Vec::with_capacity(self.nvars() + 1);
        names.push("t".to_string());
        names.extend(self.names.iter().cloned());
        Self::standard(names)
    }
}
