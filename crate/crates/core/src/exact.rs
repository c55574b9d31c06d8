//! Exact rational numbers and dense matrices over them.
//!
//! Every subspace in the crate is stored as the reduced row-echelon form of a
//! spanning matrix, so two subspaces are equal exactly when their stored
//! matrices are equal.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p/q`, `p` or `-p/q`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
    }
}

pub fn format_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(
            data.len(),
            rows * cols,
            "entry count must equal rows * cols"
        );
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![Rat::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed to describe matrices with
    /// no rows.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rat>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Self::new(n, cols, data)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn select_columns(&self, cols: &[usize]) -> Mat {
        let rows = (0..self.rows)
            .map(|i| cols.iter().map(|&j| self[(i, j)].clone()).collect())
            .collect();
        Mat::from_rows(cols.len(), rows)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Mat {
        Mat::from_rows(
            self.cols,
            rows.iter().map(|&i| self.row(i).to_vec()).collect(),
        )
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat::new(self.rows + other.rows, self.cols, data)
    }

    pub fn scale_row(&mut self, i: usize, s: &Rat) {
        for j in 0..self.cols {
            self[(i, j)] *= s;
        }
    }

    pub fn scale_column(&mut self, j: usize, s: &Rat) {
        for i in 0..self.rows {
            self[(i, j)] *= s;
        }
    }

    pub fn trace(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        (0..self.rows).map(|i| self[(i, i)].clone()).sum()
    }

    /// Reduced row-echelon form together with the (strictly increasing) pivot
    /// columns. Zero rows are kept at the bottom.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            m.scale_row(r, &inv);
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    m.sub_row_multiple(i, r, &f);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// RREF with zero rows removed: the canonical description of the row space.
    pub fn row_space(&self) -> Mat {
        let (m, pivots) = self.rref();
        m.select_rows(&(0..pivots.len()).collect::<Vec<_>>())
    }

    /// Basis of the right null space, in RREF.
    pub fn kernel_basis(&self) -> Mat {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let rows = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rat::zero(); self.cols];
                v[f] = Rat::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -m[(i, f)].clone();
                }
                v
            })
            .collect();
        Mat::from_rows(self.cols, rows).row_space()
    }

    pub fn row_space_equal(&self, other: &Mat) -> bool {
        assert_eq!(
            self.cols, other.cols,
            "row spaces live in different ambient spaces"
        );
        self.row_space() == other.row_space()
    }

    /// Whether `v` lies in the row space of `self`.
    pub fn contains(&self, v: &[Rat]) -> bool {
        self.row_space().coordinates(v).is_some()
    }

    /// For a matrix already in RREF with no zero rows, the unique coefficients
    /// expressing `v` as a combination of the rows, if any.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(v.len(), self.cols);
        let pivots = self.pivot_columns();
        let coeffs: Vec<Rat> = pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (r, x) in residual.iter_mut().zip(self.row(i)) {
                *r -= c * x;
            }
        }
        residual.iter().all(Zero::is_zero).then_some(coeffs)
    }

    /// Leading column of each row; meaningful for echelon matrices.
    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.rows)
            .filter_map(|i| self.row(i).iter().position(|x| !x.is_zero()))
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `row[target] -= f * row[source]`
    fn sub_row_multiple(&mut self, target: usize, source: usize, f: &Rat) {
        for j in 0..self.cols {
            let s = &self.data[source * self.cols + j];
            if s.is_zero() {
                continue;
            }
            let delta = f * s;
            self.data[target * self.cols + j] -= delta;
        }
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rat).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

/// Scales `v` so its first nonzero entry is 1. Returns `None` for the zero
/// vector.
pub fn normalize_leading(v: &[Rat]) -> Option<Vec<Rat>> {
    let lead = v.iter().find(|x| !x.is_zero())?.clone();
    Some(v.iter().map(|x| x / &lead).collect())
}

/// Incrementally built echelon basis of a row space.
///
/// Vectors are reduced against the current pivots on insertion, which lets
/// callers stop early once the span is everything.
#[derive(Clone, Debug)]
pub struct RowSpaceBuilder {
    cols: usize,
    // (pivot column, row with 1 at pivot and 0 at all other pivots)
    rows: Vec<(usize, Vec<Rat>)>,
}

impl RowSpaceBuilder {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Reduces `v` against the basis; the residual is zero iff `v` is in the span.
    pub fn reduce(&self, v: &mut [Rat]) {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<Rat>) -> bool {
        assert_eq!(v.len(), self.cols);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    /// The span in RREF (rows sorted by pivot).
    pub fn to_mat(&self) -> Mat {
        let mut rows = self.rows.clone();
        rows.sort_by_key(|(p, _)| *p);
        Mat::from_rows(self.cols, rows.into_iter().map(|(_, r)| r).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_rank_one() {
        let (r, p) = Mat::from_i64(&[&[2, 4], &[1, 2]]).rref();
        assert_eq!(r, Mat::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_identity() {
        let (r, p) = Mat::identity(3).rref();
        assert_eq!(r, Mat::identity(3));
        assert_eq!(p, vec![0, 1, 2]);
    }

    #[test]
    fn rref_already_reduced() {
        let m = Mat::from_i64(&[&[1, 0, -1], &[0, 1, -1]]);
        let (r, p) = m.rref();
        assert_eq!(r, m);
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn kernel_examples() {
        let k = Mat::identity(2).kernel_basis();
        assert_eq!((k.rows(), k.cols()), (0, 2));

        let k = Mat::from_i64(&[&[1, 1, 1]]).kernel_basis();
        assert_eq!(k, Mat::from_i64(&[&[1, 0, -1], &[0, 1, -1]]));

        let k = Mat::from_i64(&[&[1, 0, -1], &[0, 1, -1]]).kernel_basis();
        assert_eq!(k, Mat::from_i64(&[&[1, 1, 1]]));
    }

    #[test]
    fn row_space_examples() {
        let a = Mat::identity(2);
        let b = Mat::from_i64(&[&[2, 0], &[0, 3]]);
        assert!(a.row_space_equal(&b));
        assert!(!Mat::from_i64(&[&[1, 1]]).row_space_equal(&Mat::from_i64(&[&[1, -1]])));
        assert!(Mat::from_i64(&[&[1, 0, -1], &[0, 1, -1]])
            .row_space_equal(&Mat::from_i64(&[&[1, -1, 0], &[0, 1, -1]])));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("-3/6"), Some(ratio(-1, 2)));
        assert_eq!(parse_rat("7"), Some(rat(7)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("x"), None);
        assert_eq!(format_rat(&ratio(4, -6)), "-2/3");
        assert_eq!(format_rat(&rat(0)), "0");
    }

    #[test]
    fn coordinates_in_row_space() {
        let m = Mat::from_i64(&[&[1, 0, -1], &[0, 1, -1]]);
        assert_eq!(
            m.coordinates(&[rat(2), rat(3), rat(-5)]),
            Some(vec![rat(2), rat(3)])
        );
        assert_eq!(m.coordinates(&[rat(1), rat(1), rat(1)]), None);
    }

    #[test]
    fn builder_matches_rref() {
        let m = Mat::from_i64(&[&[0, 2, 4, 1], &[1, 1, 1, 1], &[1, 3, 5, 2], &[0, 0, 0, 3]]);
        let mut b = RowSpaceBuilder::new(4);
        for r in m.row_vecs() {
            b.insert(r);
        }
        assert_eq!(b.to_mat(), m.row_space());
        assert_eq!(b.dim(), m.rank());
    }
}
