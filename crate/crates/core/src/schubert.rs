//! Strata, boundary divisors, section dimensions and Betti data of the
//! Schubert variety `Y_A`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::matroid::{ElementSet, Matroid};
use crate::report::Report;
use crate::space::{ElementaryVector, LinearSpace};
use crate::zonotopal::{self, EXTERNAL, INTERNAL};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub flat: ElementSet,
    pub dim: usize,
}

/// One stratum per flat of `M_A`, with `dim L_F` the rank of the localization.
pub fn strata(a: &LinearSpace) -> Vec<Stratum> {
    Matroid::of(a)
        .flats()
        .flats
        .into_iter()
        .map(|flat| Stratum {
            flat,
            dim: a.localize(&flat.to_vec()).rank(),
        })
        .collect()
}

/// Stratum dimensions are the matroid ranks of the flats, and flat
/// containment implies the smaller stratum has the smaller dimension (with
/// equality only for equal flats).
pub fn strata_consistent(a: &LinearSpace) -> bool {
    let m = Matroid::of(a);
    let all = strata(a);
    all.iter().all(|s| s.dim == m.rank_of(s.flat))
        && all.iter().all(|f| {
            all.iter()
                .all(|g| !f.flat.is_subset(g.flat) || f.flat == g.flat || f.dim < g.dim)
        })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorEntry {
    pub flat: ElementSet,
    pub alpha: ElementaryVector,
    pub m: usize,
    pub coeff: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorData {
    pub k: i64,
    pub entries: Vec<DivisorEntry>,
}

/// `D_k = Σ_F (m(F) + k) D_F` over corank-1 flats of `M_A`.
pub fn divisor(a: &LinearSpace, k: i64) -> DivisorData {
    let m = Matroid::of(a);
    let lattice = m.flats();
    let entries = lattice
        .flats
        .iter()
        .zip(&lattice.ranks)
        .filter(|(_, &r)| r + 1 == m.rank())
        .map(|(&flat, _)| {
            let alpha = a
                .vector_with_support(m.ground().minus(flat))
                .expect("complement of a hyperplane supports an elementary vector");
            let size = alpha.m();
            DivisorEntry {
                flat,
                alpha,
                m: size,
                coeff: size as i64 + k,
            }
        })
        .collect();
    DivisorData { k, entries }
}

/// `dim H^0(O_Y(D_k)) = dim C_{A,k}`.
pub fn h0_dim(a: &LinearSpace, k: i64) -> Result<usize> {
    Ok(zonotopal::hilbert(a, k)?.total())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    #[serde(rename = "S")]
    pub s: Labels,
    pub mult: usize,
}

/// Element set rendered as its labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labels {
    pub set: ElementSet,
    pub labels: Vec<String>,
}

impl Serialize for Labels {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels.serialize(serializer)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub entries: Vec<BettiEntry>,
}

impl BettiTable {
    pub fn get(&self, i: usize, s: ElementSet) -> Option<usize> {
        self.entries
            .iter()
            .find(|e| e.i == i && e.s.set == s)
            .map(|e| e.mult)
    }

    pub fn max_index(&self) -> usize {
        self.entries.iter().map(|e| e.i).max().unwrap_or(0)
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{} {{{}}} {}", e.i, e.s.labels.join(","), e.mult)?;
        }
        Ok(())
    }
}

/// Entries `(crk(E∖S), S, dim R_-(A_S))` over flats `E∖S` of the dual
/// matroid, sorted by index and then by `S`.
pub fn betti_table(a: &LinearSpace) -> Result<BettiTable> {
    let dual = Matroid::of(&a.gale_dual());
    let lattice = dual.flats();
    let mut entries = Vec::new();
    for &flat in &lattice.flats {
        let s = dual.ground().minus(flat);
        let mult = zonotopal::hilbert(&a.localize(&s.to_vec()), INTERNAL)?.total();
        if mult > 0 {
            entries.push(BettiEntry {
                i: dual.corank_of(flat),
                s: Labels {
                    set: s,
                    labels: a.labels_of(s),
                },
                mult,
            });
        }
    }
    entries.sort_by(|x, y| x.i.cmp(&y.i).then(x.s.set.to_vec().cmp(&y.s.set.to_vec())));
    Ok(BettiTable { entries })
}

/// Renders `Σ ± t_j` as `"8 - 6 + 2"`, dropping zero terms.
fn signed_sum(terms: &[i64]) -> String {
    let mut out = String::new();
    for &t in terms.iter().filter(|&&t| t != 0) {
        if out.is_empty() {
            out = t.to_string();
        } else if t < 0 {
            out.push_str(&format!(" - {}", -t));
        } else {
            out.push_str(&format!(" + {t}"));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// `Σ_F μ(F,E) 2^{|F|} = #spanning sets of M_{A^!}` and the Betti-table
/// alternating sum `= dim R_+(A)`.
pub fn euler_identity(a: &LinearSpace) -> Result<Report> {
    let dual = Matroid::of(&a.gale_dual());
    dual.require_loopless()?;
    let mut report = Report::new("euler");

    let lattice = dual.flats();
    let mut flats: Vec<(ElementSet, i64)> = lattice
        .flats
        .iter()
        .copied()
        .zip(lattice.mobius_to_top.iter().copied())
        .collect();
    flats.sort_by(|x, y| {
        y.0.len()
            .cmp(&x.0.len())
            .then(x.0.to_vec().cmp(&y.0.to_vec()))
    });
    let terms: Vec<i64> = flats.iter().map(|(f, mu)| mu * (1i64 << f.len())).collect();
    let spanning = dual.counts()?.spanning as i64;
    let sum: i64 = terms.iter().sum();
    report.check(
        "mobius sum = spanning sets",
        signed_sum(&terms),
        spanning,
        sum == spanning,
    );

    let betti = betti_table(a)?;
    let n = a.n();
    let terms: Vec<i64> = (0..=betti.max_index())
        .map(|i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            sign * betti
                .entries
                .iter()
                .filter(|e| e.i == i)
                .map(|e| e.mult as i64 * (1i64 << (n - e.s.set.len())))
                .sum::<i64>()
        })
        .collect();
    let external = zonotopal::hilbert(a, EXTERNAL)?.total() as i64;
    let sum: i64 = terms.iter().sum();
    report.check(
        "betti sum = dim R+",
        signed_sum(&terms),
        external,
        sum == external,
    );
    Ok(report)
}

/// Integer Laurent polynomial in `t`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly(BTreeMap<i64, i64>);

impl LaurentPoly {
    pub fn monomial(exp: i64, c: i64) -> Self {
        let mut p = Self::default();
        p.add_term(exp, c);
        p
    }

    /// `Σ dims[i] t^i`
    pub fn from_dims(dims: &[usize]) -> Self {
        let mut p = Self::default();
        for (i, &d) in dims.iter().enumerate() {
            p.add_term(i as i64, d as i64);
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: i64) {
        let entry = self.0.entry(exp).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.0.remove(&exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, &c) in &other.0 {
            out.add_term(e, c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (&e, &c) in &self.0 {
            for (&f, &d) in &other.0 {
                out.add_term(e + f, c * d);
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::monomial(0, 1), |acc, _| acc.mul(self))
    }

    /// `p(t^{-1})`
    pub fn invert(&self) -> Self {
        Self(self.0.iter().map(|(&e, &c)| (-e, c)).collect())
    }

    pub fn coefficient(&self, exp: i64) -> i64 {
        self.0.get(&exp).copied().unwrap_or(0)
    }

    pub fn eval_one(&self) -> i64 {
        self.0.values().sum()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in &self.0 {
            let mag = c.abs();
            let var = match e {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{e}"),
            };
            let body = match (mag, var.is_empty()) {
                (_, true) => mag.to_string(),
                (1, false) => var,
                (_, false) => format!("{mag}{var}"),
            };
            if first {
                write!(f, "{}{body}", if c < 0 { "-" } else { "" })?;
                first = false;
            } else {
                write!(f, " {} {body}", if c < 0 { "-" } else { "+" })?;
            }
        }
        Ok(())
    }
}

/// Both sides of the graded identity
/// `Σ_S (-1)^c t^c P⁻_S(t⁻¹) (1+t)^{|E∖S|} = P⁺(t)`, with `c = crk(E∖S)`.
pub fn graded_euler_sides(a: &LinearSpace) -> Result<(LaurentPoly, LaurentPoly)> {
    let dual = Matroid::of(&a.gale_dual());
    dual.require_loopless()?;
    let one_plus_t = LaurentPoly::monomial(0, 1).add(&LaurentPoly::monomial(1, 1));
    let mut lhs = LaurentPoly::default();
    for &flat in &dual.flats().flats {
        let s = dual.ground().minus(flat);
        let c = dual.corank_of(flat) as i64;
        let minus = zonotopal::hilbert(&a.localize(&s.to_vec()), INTERNAL)?;
        let sign = if c % 2 == 0 { 1 } else { -1 };
        let term = LaurentPoly::monomial(c, sign)
            .mul(&LaurentPoly::from_dims(minus.dims()).invert())
            .mul(&one_plus_t.pow(flat.len()));
        lhs = lhs.add(&term);
    }
    let rhs = LaurentPoly::from_dims(zonotopal::hilbert(a, EXTERNAL)?.dims());
    Ok((lhs, rhs))
}

pub fn graded_euler(a: &LinearSpace) -> Result<Report> {
    let (lhs, rhs) = graded_euler_sides(a)?;
    let mut report = Report::new("graded euler");
    report.equal("alternating sum = P+(t)", lhs, rhs);
    Ok(report)
}
