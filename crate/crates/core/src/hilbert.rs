use std::fmt;

use serde::{Deserialize, Serialize};

/// Dimensions of the graded pieces of a graded vector space, indexed by
/// absolute degree from 0, with trailing zeros removed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HilbertFunction(Vec<usize>);

impl HilbertFunction {
    pub fn new(mut dims: Vec<usize>) -> Self {
        while dims.last() == Some(&0) {
            dims.pop();
        }
        Self(dims)
    }

    pub fn dims(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, d: usize) -> usize {
        self.0.get(d).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Index of the last nonzero piece.
    pub fn top(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Hilbert function of `self ⊗ other`.
    pub fn convolve(&self, other: &HilbertFunction) -> HilbertFunction {
        if self.is_zero() || other.is_zero() {
            return HilbertFunction::default();
        }
        let mut out = vec![0; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        HilbertFunction::new(out)
    }
}

impl From<Vec<usize>> for HilbertFunction {
    fn from(dims: Vec<usize>) -> Self {
        Self::new(dims)
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Number of monomials of degree `d` in `nvars` variables.
pub fn sym_dim(nvars: usize, d: usize) -> usize {
    if nvars == 0 {
        return usize::from(d == 0);
    }
    binomial(d + nvars - 1, nvars - 1)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}
