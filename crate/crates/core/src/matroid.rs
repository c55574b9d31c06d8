//! Matroids realized by the columns of a linear space's basis matrix.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{Rat, RowSpaceBuilder};
use crate::hilbert::HilbertFunction;
use crate::space::LinearSpace;

/// Default bound on `|E|` for exhaustive subset enumeration.
pub const DEFAULT_MAX_N: usize = 24;

/// Enumeration bound, overridable through `ZONOTOPAL_MAX_N`.
pub fn max_ground_size() -> usize {
    std::env::var("ZONOTOPAL_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

/// Subset of a ground set of at most 64 elements.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet(pub u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn full(n: usize) -> Self {
        assert!(n <= 64);
        if n == 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices(idx: &[usize]) -> Self {
        ElementSet(idx.iter().fold(0, |acc, &i| acc | (1u64 << i)))
    }

    pub fn singleton(i: usize) -> Self {
        ElementSet(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, i: usize) -> Self {
        ElementSet(self.0 | (1u64 << i))
    }

    pub fn without(self, i: usize) -> Self {
        ElementSet(self.0 & !(1u64 << i))
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// All subsets of `{0..n}` of size `k`, in lexicographic order.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<ElementSet> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(ElementSet::from_indices(&idx));
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[derive(Clone, Debug)]
pub struct Matroid {
    labels: Vec<String>,
    columns: Vec<Vec<Rat>>,
    rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatLattice {
    /// Sorted by rank, then by element set.
    pub flats: Vec<ElementSet>,
    pub ranks: Vec<usize>,
    /// `μ(F, E)` for each flat.
    pub mobius_to_top: Vec<i64>,
}

impl FlatLattice {
    pub fn index_of(&self, f: ElementSet) -> Option<usize> {
        self.flats.iter().position(|&g| g == f)
    }

    pub fn mobius(&self, f: ElementSet) -> Option<i64> {
        self.index_of(f).map(|i| self.mobius_to_top[i])
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Counts {
    pub bases: u64,
    pub independent: u64,
    pub spanning: u64,
}

/// Bivariate integer polynomial in `x`, `y`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TuttePolynomial {
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl TuttePolynomial {
    fn one() -> Self {
        Self::monomial(0, 0)
    }

    pub fn monomial(i: u32, j: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert((i, j), BigInt::one());
        Self { coeffs }
    }

    pub fn coefficient(&self, i: u32, j: u32) -> BigInt {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.coeffs.iter()
    }

    pub fn eval(&self, x: i64, y: i64) -> BigInt {
        self.coeffs
            .iter()
            .map(|(&(i, j), c)| c * BigInt::from(x).pow(i) * BigInt::from(y).pow(j))
            .sum()
    }

    fn add(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (k, c) in &other.coeffs {
            *coeffs.entry(*k).or_default() += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self { coeffs }
    }

    fn shift(&self, di: u32, dj: u32) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(i, j), c)| ((i + di, j + dj), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for TuttePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest total degree first
        let mut terms: Vec<_> = self.coeffs.iter().collect();
        terms.sort_by_key(|&(&(i, j), _)| std::cmp::Reverse((i + j, i)));
        for (&(i, j), c) in terms {
            let mono = match (i, j) {
                (0, 0) => String::new(),
                _ => {
                    let mut parts = Vec::new();
                    if i == 1 {
                        parts.push("x".to_string());
                    } else if i > 1 {
                        parts.push(format!("x^{i}"));
                    }
                    if j == 1 {
                        parts.push("y".to_string());
                    } else if j > 1 {
                        parts.push(format!("y^{j}"));
                    }
                    parts.join("*")
                }
            };
            let abs = c.abs();
            let body = match (abs.is_one(), mono.is_empty()) {
                (_, true) => abs.to_string(),
                (true, false) => mono,
                (false, false) => format!("{abs}*{mono}"),
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                write!(f, "{body}")?;
                first = false;
            } else {
                write!(f, " {sign} {body}")?;
            }
        }
        Ok(())
    }
}

impl Matroid {
    /// The matroid of the coordinate functionals of `a` restricted to `L`.
    pub fn of(a: &LinearSpace) -> Self {
        assert!(
            a.n() <= 64,
            "ground sets larger than 64 elements are unsupported"
        );
        Self {
            labels: a.labels().to_vec(),
            columns: (0..a.n()).map(|e| a.chi(e)).collect(),
            rank: a.rank(),
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.n())
    }

    /// `rk(E)`
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rank_of(&self, set: ElementSet) -> usize {
        let mut b = RowSpaceBuilder::new(self.rank);
        for e in set.iter() {
            b.insert(self.columns[e].clone());
            if b.is_full() {
                break;
            }
        }
        b.dim()
    }

    /// `rk(E) - rk(S)`
    pub fn corank_of(&self, set: ElementSet) -> usize {
        self.rank - self.rank_of(set)
    }

    pub fn is_independent(&self, set: ElementSet) -> bool {
        self.rank_of(set) == set.len()
    }

    pub fn closure(&self, set: ElementSet) -> ElementSet {
        let r = self.rank_of(set);
        (0..self.n())
            .filter(|&e| !set.contains(e) && self.rank_of(set.with(e)) == r)
            .fold(set, ElementSet::with)
    }

    pub fn loops(&self) -> ElementSet {
        ElementSet::from_indices(
            &(0..self.n())
                .filter(|&e| self.columns[e].iter().all(Zero::is_zero))
                .collect::<Vec<_>>(),
        )
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().is_empty()
    }

    pub fn require_loopless(&self) -> Result<()> {
        match self.loops().iter().next() {
            Some(e) => Err(Error::LoopPresent(self.labels[e].clone())),
            None => Ok(()),
        }
    }

    fn guard(&self) -> Result<()> {
        let limit = max_ground_size();
        if self.n() > limit {
            return Err(Error::GroundTooLarge { n: self.n(), limit });
        }
        Ok(())
    }

    /// Minimal dependent sets, sorted by size and then lexicographically.
    pub fn circuits(&self) -> Vec<ElementSet> {
        let mut out = Vec::new();
        for k in 1..=(self.rank + 1).min(self.n()) {
            for s in subsets_of_size(self.n(), k) {
                if self.rank_of(s) == k - 1 && s.iter().all(|e| self.rank_of(s.without(e)) == k - 1)
                {
                    out.push(s);
                }
            }
        }
        out
    }

    /// Lattice of flats, generated upward from the closure of the empty set.
    pub fn flats(&self) -> FlatLattice {
        let bottom = self.closure(ElementSet::EMPTY);
        let mut seen: BTreeSet<ElementSet> = BTreeSet::from([bottom]);
        let mut frontier = vec![bottom];
        while let Some(f) = frontier.pop() {
            for e in self.ground().minus(f).iter() {
                let g = self.closure(f.with(e));
                if seen.insert(g) {
                    frontier.push(g);
                }
            }
        }
        let mut flats: Vec<(usize, ElementSet)> =
            seen.into_iter().map(|f| (self.rank_of(f), f)).collect();
        flats.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.to_vec().cmp(&b.1.to_vec())));
        let ranks: Vec<usize> = flats.iter().map(|x| x.0).collect();
        let flats: Vec<ElementSet> = flats.into_iter().map(|x| x.1).collect();

        let mut mobius = vec![0i64; flats.len()];
        for i in (0..flats.len()).rev() {
            mobius[i] = if flats[i] == self.ground() {
                1
            } else {
                -(i + 1..flats.len())
                    .filter(|&j| flats[i].is_subset(flats[j]))
                    .map(|j| mobius[j])
                    .sum::<i64>()
            };
        }
        FlatLattice {
            flats,
            ranks,
            mobius_to_top: mobius,
        }
    }

    /// Exhaustive counts of bases, independent sets and spanning sets.
    pub fn counts(&self) -> Result<Counts> {
        self.guard()?;
        let mut c = Counts {
            bases: 0,
            independent: 0,
            spanning: 0,
        };
        for mask in 0..(1u64 << self.n()) {
            let s = ElementSet(mask);
            let r = self.rank_of(s);
            let independent = r == s.len();
            let spanning = r == self.rank;
            c.independent += u64::from(independent);
            c.spanning += u64::from(spanning);
            c.bases += u64::from(independent && spanning);
        }
        Ok(c)
    }

    /// Tutte polynomial by deletion and contraction.
    pub fn tutte(&self) -> Result<TuttePolynomial> {
        self.guard()?;
        let mut memo = HashMap::new();
        Ok(self.tutte_minor(self.ground(), ElementSet::EMPTY, &mut memo))
    }

    /// Tutte polynomial of the minor on `remaining` obtained by contracting
    /// `contracted` (disjoint from `remaining`) and deleting everything else.
    fn tutte_minor(
        &self,
        remaining: ElementSet,
        contracted: ElementSet,
        memo: &mut HashMap<(ElementSet, ElementSet), TuttePolynomial>,
    ) -> TuttePolynomial {
        let Some(e) = remaining.iter().next() else {
            return TuttePolynomial::one();
        };
        if let Some(t) = memo.get(&(remaining, contracted)) {
            return t.clone();
        }
        let base = self.rank_of(contracted);
        let rest = remaining.without(e);
        let is_loop = self.rank_of(contracted.with(e)) == base;
        let is_coloop =
            self.rank_of(rest.union(contracted)) < self.rank_of(remaining.union(contracted));
        let t = if is_loop {
            self.tutte_minor(rest, contracted, memo).shift(0, 1)
        } else if is_coloop {
            self.tutte_minor(rest, contracted.with(e), memo).shift(1, 0)
        } else {
            self.tutte_minor(rest, contracted, memo)
                .add(&self.tutte_minor(rest, contracted.with(e), memo))
        };
        memo.insert((remaining, contracted), t.clone());
        t
    }

    /// h-vector of the broken-circuit complex for the ordering in which
    /// `order[0]` is the smallest element.
    pub fn broken_circuit_h_vector(&self, order: &[usize]) -> Result<HilbertFunction> {
        self.require_loopless()?;
        self.guard()?;
        let position = ordering_positions(order, self.n());
        let broken: Vec<ElementSet> = self
            .circuits()
            .into_iter()
            .map(|c| {
                let min = c
                    .iter()
                    .min_by_key(|&e| position[e])
                    .expect("circuits are nonempty");
                c.without(min)
            })
            .collect();
        let f = self.face_counts(|s| broken.iter().all(|b| !b.is_subset(s)));
        Ok(h_vector(&f, self.rank))
    }

    /// h-vector of the independence complex.
    pub fn independence_h_vector(&self) -> Result<HilbertFunction> {
        self.require_loopless()?;
        self.guard()?;
        let f = self.face_counts(|_| true);
        Ok(h_vector(&f, self.rank))
    }

    /// `f[i]` = number of independent sets of size `i` accepted by `keep`.
    fn face_counts(&self, keep: impl Fn(ElementSet) -> bool) -> Vec<u64> {
        (0..=self.rank)
            .map(|k| {
                subsets_of_size(self.n(), k)
                    .into_iter()
                    .filter(|&s| keep(s) && self.is_independent(s))
                    .count() as u64
            })
            .collect()
    }
}

/// `position[e]` = rank of `e` in `order`.
pub(crate) fn ordering_positions(order: &[usize], n: usize) -> Vec<usize> {
    assert_eq!(order.len(), n, "ordering must list every element once");
    let mut position = vec![usize::MAX; n];
    for (p, &e) in order.iter().enumerate() {
        assert!(position[e] == usize::MAX, "ordering repeats element {e}");
        position[e] = p;
    }
    position
}

/// `h(t) = Σ_i f_i t^i (1-t)^(d-i)` where `f_i` counts faces with `i` vertices.
fn h_vector(f: &[u64], d: usize) -> HilbertFunction {
    let mut h = vec![BigInt::zero(); d + 1];
    for (i, &fi) in f.iter().enumerate() {
        if fi == 0 {
            continue;
        }
        // t^i (1-t)^(d-i)
        let mut binom = BigInt::one();
        for j in 0..=(d - i) {
            let term = &binom * BigInt::from(fi);
            if j % 2 == 0 {
                h[i + j] += term;
            } else {
                h[i + j] -= term;
            }
            binom = binom * BigInt::from(d - i - j) / BigInt::from(j + 1);
        }
    }
    HilbertFunction::new(
        h.into_iter()
            .map(|x| {
                x.to_usize()
                    .expect("h-vectors of matroid complexes are nonnegative")
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Mat;
    use crate::fixtures;

    fn u13() -> Matroid {
        Matroid::of(&fixtures::k3())
    }

    fn u23() -> Matroid {
        Matroid::of(&fixtures::u23())
    }

    fn free2() -> Matroid {
        Matroid::of(&fixtures::b2())
    }

    fn set(idx: &[usize]) -> ElementSet {
        ElementSet::from_indices(idx)
    }

    #[test]
    fn ranks() {
        let m = u23();
        assert_eq!(m.rank(), 2);
        assert!(subsets_of_size(3, 2)
            .into_iter()
            .all(|s| m.is_independent(s)));
        assert_eq!(u13().rank(), 1);
        assert!(u13().is_loopless());
        assert_eq!(free2().rank_of(set(&[0, 1])), 2);
    }

    #[test]
    fn circuit_examples() {
        assert_eq!(u23().circuits(), vec![set(&[0, 1, 2])]);
        assert_eq!(
            u13().circuits(),
            vec![set(&[0, 1]), set(&[0, 2]), set(&[1, 2])]
        );
        assert!(free2().circuits().is_empty());
    }

    #[test]
    fn flat_examples() {
        let l = u13().flats();
        assert_eq!(l.flats, vec![ElementSet::EMPTY, set(&[0, 1, 2])]);
        assert_eq!(l.mobius(ElementSet::EMPTY), Some(-1));

        let l = u23().flats();
        assert_eq!(l.len(), 5);
        for i in 0..3 {
            assert_eq!(l.mobius(set(&[i])), Some(-1));
        }
        assert_eq!(l.mobius(ElementSet::EMPTY), Some(2));

        let l = free2().flats();
        assert_eq!(l.len(), 4);
        assert_eq!(l.mobius(ElementSet::EMPTY), Some(1));
    }

    #[test]
    fn count_examples() {
        assert_eq!(
            u23().counts().unwrap(),
            Counts {
                bases: 3,
                independent: 7,
                spanning: 4
            }
        );
        assert_eq!(
            u13().counts().unwrap(),
            Counts {
                bases: 3,
                independent: 4,
                spanning: 7
            }
        );
        assert_eq!(
            free2().counts().unwrap(),
            Counts {
                bases: 1,
                independent: 4,
                spanning: 1
            }
        );
    }

    #[test]
    fn tutte_examples() {
        assert_eq!(u23().tutte().unwrap().to_string(), "x^2 + x + y");
        let coloop = Matroid::of(&LinearSpace::make(&["a"], &Mat::identity(1)).unwrap());
        assert_eq!(coloop.tutte().unwrap(), TuttePolynomial::monomial(1, 0));
        let lp = Matroid::of(&LinearSpace::make(&["a"], &Mat::zeros(0, 1)).unwrap());
        assert_eq!(lp.tutte().unwrap(), TuttePolynomial::monomial(0, 1));
    }

    #[test]
    fn guard_respected() {
        let a = fixtures::uniform(1, 25);
        let m = Matroid::of(&a);
        if max_ground_size() < 25 {
            assert!(matches!(
                m.counts(),
                Err(Error::GroundTooLarge { n: 25, .. })
            ));
            assert!(matches!(m.tutte(), Err(Error::GroundTooLarge { .. })));
        }
    }

    #[test]
    fn h_vector_examples() {
        assert_eq!(
            u23().broken_circuit_h_vector(&[0, 1, 2]).unwrap().dims(),
            &[1, 1]
        );
        assert_eq!(
            u13().broken_circuit_h_vector(&[0, 1, 2]).unwrap().dims(),
            &[1]
        );
        assert_eq!(
            free2().broken_circuit_h_vector(&[0, 1]).unwrap().dims(),
            &[1]
        );
        assert_eq!(u13().independence_h_vector().unwrap().dims(), &[1, 2]);
        assert_eq!(u23().independence_h_vector().unwrap().dims(), &[1, 1, 1]);
        assert_eq!(free2().independence_h_vector().unwrap().dims(), &[1]);
    }

    #[test]
    fn loops_rejected() {
        let m = Matroid::of(&fixtures::b2().gale_dual());
        assert_eq!(
            m.independence_h_vector(),
            Err(Error::LoopPresent("1".into()))
        );
        assert_eq!(
            m.broken_circuit_h_vector(&[0, 1]),
            Err(Error::LoopPresent("1".into()))
        );
    }

    #[test]
    fn spanning_sets_by_mobius() {
        for a in [
            fixtures::k3(),
            fixtures::u23(),
            fixtures::dt(),
            fixtures::uniform(2, 4),
        ] {
            let m = Matroid::of(&a);
            let l = m.flats();
            let sum: i64 = l
                .flats
                .iter()
                .zip(&l.mobius_to_top)
                .map(|(f, mu)| mu * (1i64 << f.len()))
                .sum();
            assert_eq!(sum as u64, m.counts().unwrap().spanning);
        }
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets_of_size(4, 2).len(), 6);
        assert_eq!(subsets_of_size(3, 0), vec![ElementSet::EMPTY]);
        assert!(subsets_of_size(2, 3).is_empty());
    }
}
