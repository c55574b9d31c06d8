//! Graded pieces of polynomial rings and the action of constant-coefficient
//! differential operators on them.
//!
//! A homogeneous polynomial of degree `d` in `nvars` variables is a coefficient
//! vector indexed by [`MonoBasis`]. A linear form `α = Σ a_i ∂_i` acts by plain
//! partial differentiation (no factorial normalization).

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{Mat, Rat, RowSpaceBuilder};
use crate::hilbert::{sym_dim, HilbertFunction};

pub type Exponent = Vec<u32>;

/// Monomials of one degree in graded-lex order (`x_1^d` first).
#[derive(Clone, Debug)]
pub struct MonoBasis {
    nvars: usize,
    degree: usize,
    monomials: Vec<Exponent>,
    index: HashMap<Exponent, usize>,
}

impl MonoBasis {
    pub fn new(nvars: usize, degree: usize) -> Self {
        let mut monomials = Vec::with_capacity(sym_dim(nvars, degree));
        let mut current = vec![0u32; nvars];
        fill(&mut monomials, &mut current, 0, degree as u32);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Self {
            nvars,
            degree,
            monomials,
            index,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Exponent] {
        &self.monomials
    }

    pub fn index_of(&self, m: &[u32]) -> Option<usize> {
        self.index.get(m).copied()
    }
}

fn fill(out: &mut Vec<Exponent>, current: &mut Exponent, var: usize, left: u32) {
    if current.is_empty() {
        if left == 0 {
            out.push(Vec::new());
        }
        return;
    }
    if var == current.len() - 1 {
        current[var] = left;
        out.push(current.clone());
        current[var] = 0;
        return;
    }
    for e in (0..=left).rev() {
        current[var] = e;
        fill(out, current, var + 1, left - e);
    }
    current[var] = 0;
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `Π a_i!`
pub fn exponent_factorial(a: &[u32]) -> Rat {
    Rat::from_integer(a.iter().map(|&x| factorial(x)).product())
}

/// Sparse polynomial, used for products and substitutions before converting
/// to coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponent, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn linear(coeffs: &[Rat]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn monomial(exp: Exponent, c: Rat) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    /// Homogeneous polynomial from coordinates in `MonoBasis(nvars, d)`.
    pub fn from_coords(basis: &MonoBasis, coords: &[Rat]) -> Self {
        let mut p = Self::zero(basis.nvars());
        for (m, c) in basis.monomials().iter().zip(coords) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: Exponent, c: Rat) {
        assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }

    pub fn product(nvars: usize, factors: impl IntoIterator<Item = Poly>) -> Poly {
        factors
            .into_iter()
            .fold(Poly::constant(nvars, Rat::one()), |acc, f| acc.mul(&f))
    }

    /// Directional derivative `Σ a_i ∂_i f`.
    pub fn derivative(&self, direction: &[Rat]) -> Poly {
        assert_eq!(direction.len(), self.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            for (i, a) in direction.iter().enumerate() {
                if a.is_zero() || e[i] == 0 {
                    continue;
                }
                let mut f = e.clone();
                f[i] -= 1;
                out.add_term(f, c * a * Rat::from_integer(BigInt::from(e[i])));
            }
        }
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(point).fold(c.clone(), |acc, (&k, x)| {
                    acc * num_traits::pow(x.clone(), k as usize)
                })
            })
            .sum()
    }

    /// Substitutes `x_i ↦ Σ_j images[i][j] y_j`.
    pub fn substitute_linear(&self, images: &[Vec<Rat>]) -> Poly {
        assert_eq!(images.len(), self.nvars);
        let m = images.first().map_or(0, Vec::len);
        let linear: Vec<Poly> = images.iter().map(|v| Poly::linear(v)).collect();
        let mut out = Poly::zero(m);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(m, c.clone());
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term = term.mul(&linear[i]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Coordinates of the degree-`d` part in `basis`.
    pub fn coords(&self, basis: &MonoBasis) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); basis.len()];
        for (e, c) in &self.terms {
            if let Some(i) = basis.index_of(e) {
                v[i] += c;
            }
        }
        v
    }

    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.terms
            .keys()
            .all(|e| e.iter().sum::<u32>() as usize == d)
    }
}

/// Matrix of `f ↦ α^p · f` from degree-`d` to degree-`(d-p)` coordinates.
pub fn pow_op_matrix(alpha: &[Rat], p: usize, d: usize, nvars: usize) -> Result<Mat> {
    if p > d {
        return Err(Error::DegreeUnderflow {
            order: p,
            degree: d,
        });
    }
    assert_eq!(alpha.len(), nvars);
    let source = MonoBasis::new(nvars, d);
    let target = MonoBasis::new(nvars, d - p);
    // α^p = Σ_{|b| = p} p!/b! α^b ∂^b
    let p_fact = Rat::from_integer(factorial(p as u32));
    let ops: Vec<(Exponent, Rat)> = MonoBasis::new(nvars, p)
        .monomials()
        .iter()
        .filter_map(|b| {
            let coeff = b
                .iter()
                .zip(alpha)
                .fold(p_fact.clone() / exponent_factorial(b), |acc, (&k, a)| {
                    acc * num_traits::pow(a.clone(), k as usize)
                });
            (!coeff.is_zero()).then(|| (b.clone(), coeff))
        })
        .collect();
    let mut m = Mat::zeros(target.len(), source.len());
    for (j, a) in source.monomials().iter().enumerate() {
        for (b, coeff) in &ops {
            if a.iter().zip(b).any(|(x, y)| y > x) {
                continue;
            }
            let rest: Exponent = a.iter().zip(b).map(|(x, y)| x - y).collect();
            // ∂^b x^a = a!/(a-b)! x^(a-b)
            let falling = exponent_factorial(a) / exponent_factorial(&rest);
            let i = target.index_of(&rest).expect("degree matches target basis");
            m[(i, j)] += coeff * falling;
        }
    }
    Ok(m)
}

/// RREF basis of the degree-`d` piece of the ideal generated by homogeneous
/// `generators`, each given as (degree, coordinates in that degree).
pub fn ideal_degree_piece(generators: &[(usize, Vec<Rat>)], d: usize, nvars: usize) -> Mat {
    let target = MonoBasis::new(nvars, d);
    let mut span = RowSpaceBuilder::new(target.len());
    let mut multipliers: HashMap<usize, MonoBasis> = HashMap::new();
    for (g, coords) in generators {
        if *g > d || span.is_full() {
            continue;
        }
        let gen = Poly::from_coords(&MonoBasis::new(nvars, *g), coords);
        if gen.is_zero() {
            continue;
        }
        let mult = multipliers
            .entry(d - g)
            .or_insert_with(|| MonoBasis::new(nvars, d - g));
        for m in mult.monomials() {
            let mut v = vec![Rat::zero(); target.len()];
            for (e, c) in gen.terms() {
                let shifted: Exponent = e.iter().zip(m).map(|(x, y)| x + y).collect();
                v[target.index_of(&shifted).expect("degree d monomial")] += c;
            }
            span.insert(v);
            if span.is_full() {
                break;
            }
        }
    }
    span.to_mat()
}

/// RREF basis of `{f ∈ Sym^d : α^p · f = 0 for every constraint (α, p)}`.
/// Constraints with `p > d` hold vacuously and are skipped.
pub fn annihilator_degree(constraints: &[(Vec<Rat>, usize)], d: usize, nvars: usize) -> Mat {
    let dim = sym_dim(nvars, d);
    let mut rows = RowSpaceBuilder::new(dim);
    for (alpha, p) in constraints {
        if *p > d {
            continue;
        }
        let m = pow_op_matrix(alpha, *p, d, nvars).expect("p <= d checked");
        for r in m.row_vecs() {
            rows.insert(r);
            if rows.is_full() {
                return Mat::zeros(0, dim);
            }
        }
    }
    rows.to_mat().kernel_basis()
}

/// Operators `D ∈ Sym^d` with `D · f = 0` for all `f` in the row space of
/// `slice` (the apolar annihilator).
pub fn apolar_annihilator(slice: &Mat, d: usize, nvars: usize) -> Mat {
    let basis = MonoBasis::new(nvars, d);
    assert_eq!(slice.cols(), basis.len());
    // ∂^a x^b = a! δ_ab
    let mut pairing = slice.clone();
    for (j, a) in basis.monomials().iter().enumerate() {
        pairing.scale_column(j, &exponent_factorial(a));
    }
    pairing.kernel_basis()
}

/// A graded subspace of a polynomial ring, one RREF slice per degree from 0
/// up to the last computed degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubspace {
    nvars: usize,
    slices: Vec<Mat>,
}

impl GradedSubspace {
    pub fn new(nvars: usize, slices: Vec<Mat>) -> Self {
        for (d, s) in slices.iter().enumerate() {
            assert_eq!(s.cols(), sym_dim(nvars, d), "slice {d} has the wrong width");
        }
        Self { nvars, slices }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn slices(&self) -> &[Mat] {
        &self.slices
    }

    /// Degree-`d` slice; degrees past the computed range are zero.
    pub fn slice(&self, d: usize) -> Mat {
        self.slices
            .get(d)
            .cloned()
            .unwrap_or_else(|| Mat::zeros(0, sym_dim(self.nvars, d)))
    }

    pub fn computed_degrees(&self) -> usize {
        self.slices.len()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.slices.iter().map(Mat::rows).collect()
    }

    pub fn hilbert(&self) -> HilbertFunction {
        HilbertFunction::new(self.dims())
    }

    /// Hilbert function of the quotient of the ambient ring by this subspace.
    pub fn quotient_hilbert(&self) -> HilbertFunction {
        HilbertFunction::new(
            self.slices
                .iter()
                .enumerate()
                .map(|(d, s)| sym_dim(self.nvars, d) - s.rows())
                .collect(),
        )
    }
}
