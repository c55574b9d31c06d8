//! Linear spaces `(E, V, L)` with `V = F^E` and `L` a row space.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{normalize_leading, Mat, Rat};
use crate::matroid::{ElementSet, Matroid};

/// A linear subspace `L` of `F^E`, stored as an RREF basis.
///
/// The standard basis of `F^E` fixes the trivializations of the coordinate
/// lines, so the coordinate functional of `e` restricted to `L` is column `e`
/// of the basis matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSpace {
    labels: Vec<String>,
    basis: Mat,
}

/// A nonzero vector of `L` with inclusion-minimal support, scaled so its first
/// nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryVector {
    pub coeffs: Vec<Rat>,
    pub support: Vec<usize>,
}

impl ElementaryVector {
    pub fn m(&self) -> usize {
        self.support.len()
    }

    pub fn support_set(&self) -> ElementSet {
        ElementSet::from_indices(&self.support)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphMode {
    /// `L` is the cut space (the row space of the incidence matrix).
    Graphical,
    /// `L` is the cycle space `H_1`.
    Cographical,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub tail: String,
    pub head: String,
    pub label: String,
}

/// Directed multigraph; loops and parallel edges allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    pub edges: Vec<Edge>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn edge(mut self, tail: &str, head: &str, label: &str) -> Self {
        self.edges.push(Edge {
            tail: tail.into(),
            head: head.into(),
            label: label.into(),
        });
        self
    }

    /// Vertices in order of first appearance.
    pub fn vertices(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for e in &self.edges {
            for v in [&e.tail, &e.head] {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
        }
        out
    }

    /// Vertex-by-edge incidence matrix with `+1` at the head and `-1` at the
    /// tail of each non-loop edge.
    pub fn incidence(&self) -> Mat {
        let vertices = self.vertices();
        let index: HashMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut m = Mat::zeros(vertices.len(), self.edges.len());
        for (j, e) in self.edges.iter().enumerate() {
            if e.tail == e.head {
                continue;
            }
            m[(index[e.head.as_str()], j)] += Rat::one();
            m[(index[e.tail.as_str()], j)] -= Rat::one();
        }
        m
    }

    pub fn is_connected(&self) -> bool {
        let vertices = self.vertices();
        if vertices.is_empty() {
            return true;
        }
        let index: HashMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut parent: Vec<usize> = (0..vertices.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut components = vertices.len();
        for e in &self.edges {
            let a = find(&mut parent, index[e.tail.as_str()]);
            let b = find(&mut parent, index[e.head.as_str()]);
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components == 1
    }
}

impl LinearSpace {
    /// Builds the row space of `rows` over the given labels.
    pub fn make<S: AsRef<str>>(labels: &[S], rows: &Mat) -> Result<Self> {
        assert_eq!(labels.len(), rows.cols(), "one label per column");
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let basis = rows.row_space();
        if basis.rows() < rows.rows() {
            return Err(Error::RankDeficient {
                rank: basis.rows(),
                rows: rows.rows(),
            });
        }
        Ok(Self { labels, basis })
    }

    /// Row space of an arbitrary spanning matrix (dependent rows allowed).
    pub fn spanned_by(labels: Vec<String>, rows: &Mat) -> Self {
        assert_eq!(labels.len(), rows.cols());
        Self {
            labels,
            basis: rows.row_space(),
        }
    }

    pub fn from_graph(graph: &Graph, mode: GraphMode) -> Result<Self> {
        if !graph.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        let labels: Vec<String> = graph.edges.iter().map(|e| e.label.clone()).collect();
        let incidence = graph.incidence();
        let rows = match mode {
            GraphMode::Graphical => incidence.row_space(),
            GraphMode::Cographical => incidence.kernel_basis(),
        };
        Self::make(&labels, &rows)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    /// `|E|`
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// `dim L`
    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn indices_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        let mut idx = labels
            .iter()
            .map(|l| self.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        idx.sort_unstable();
        idx.dedup();
        Ok(idx)
    }

    pub fn labels_of(&self, set: ElementSet) -> Vec<String> {
        set.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// The coordinate functional of `e` on `L`, in coordinates dual to the
    /// stored basis.
    pub fn chi(&self, e: usize) -> Vec<Rat> {
        self.basis.column(e)
    }

    /// Expands coordinates `y` (with respect to the stored basis) to the
    /// vector `y * basis` of `F^E`.
    pub fn vector(&self, y: &[Rat]) -> Vec<Rat> {
        self.basis.transpose().apply(y)
    }

    /// Coordinates of `v` with respect to the stored basis, if `v` is in `L`.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        self.basis.coordinates(v)
    }

    pub fn gale_dual(&self) -> Self {
        Self {
            labels: self.labels.clone(),
            basis: self.basis.kernel_basis(),
        }
    }

    pub fn localization<S: AsRef<str>>(&self, subset: &[S]) -> Result<Self> {
        Ok(self.localize(&self.indices_of(subset)?))
    }

    pub fn contraction<S: AsRef<str>>(&self, subset: &[S]) -> Result<Self> {
        Ok(self.contract(&self.indices_of(subset)?))
    }

    /// Projection of `L` onto the coordinates in `subset` (sorted indices).
    pub fn localize(&self, subset: &[usize]) -> Self {
        Self {
            labels: subset.iter().map(|&i| self.labels[i].clone()).collect(),
            basis: self.basis.select_columns(subset).row_space(),
        }
    }

    /// Vectors of `L` vanishing on `subset`, restricted to the complement.
    pub fn contract(&self, subset: &[usize]) -> Self {
        let rest: Vec<usize> = (0..self.n()).filter(|i| !subset.contains(i)).collect();
        let conditions = self.basis.select_columns(subset).transpose();
        let ys = conditions.kernel_basis();
        let vectors = ys.mul(&self.basis).select_columns(&rest);
        Self {
            labels: rest.iter().map(|&i| self.labels[i].clone()).collect(),
            basis: vectors.row_space(),
        }
    }

    /// Multiplies coordinate `e` by `scalars[e]`; all scalars must be nonzero.
    pub fn rescale_coordinates(&self, scalars: &[Rat]) -> Self {
        assert_eq!(scalars.len(), self.n());
        let mut m = self.basis.clone();
        for (j, s) in scalars.iter().enumerate() {
            assert!(!s.is_zero(), "coordinate rescaling by zero");
            m.scale_column(j, s);
        }
        Self {
            labels: self.labels.clone(),
            basis: m.row_space(),
        }
    }

    /// One normalized vector per circuit of the Gale dual matroid, sorted by
    /// support.
    pub fn elementary_vectors(&self) -> Vec<ElementaryVector> {
        let dual = Matroid::of(&self.gale_dual());
        let mut out: Vec<ElementaryVector> = dual
            .circuits()
            .into_iter()
            .map(|c| {
                self.vector_with_support(c)
                    .expect("circuit of the dual supports a vector of L")
            })
            .collect();
        out.sort_by(|a, b| a.support.cmp(&b.support));
        out
    }

    /// The (unique up to scale) vector of `L` whose support is `circuit`.
    pub fn vector_with_support(&self, circuit: ElementSet) -> Option<ElementaryVector> {
        let outside: Vec<usize> = (0..self.n()).filter(|&i| !circuit.contains(i)).collect();
        let ys = self
            .basis
            .select_columns(&outside)
            .transpose()
            .kernel_basis();
        if ys.rows() != 1 {
            return None;
        }
        let v = normalize_leading(&self.vector(ys.row(0)))?;
        let support: Vec<usize> = (0..self.n()).filter(|&i| !v[i].is_zero()).collect();
        (support == circuit.to_vec()).then_some(ElementaryVector { coeffs: v, support })
    }

    /// Minimal support size of a nonzero vector of `L`.
    pub fn rho(&self) -> Result<usize> {
        self.elementary_vectors()
            .iter()
            .map(ElementaryVector::m)
            .min()
            .ok_or(Error::EmptyL)
    }
}
