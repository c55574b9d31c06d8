//! Monomial automorphisms of `(E, V, L)` and their traces on graded pieces.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::apolarity::{MonoBasis, Poly};
use crate::error::{Error, Result};
use crate::exact::{rat, Mat, Rat};
use crate::hilbert::sym_dim;
use crate::orlik_terao::k_slices_to;
use crate::report::Report;
use crate::space::{Graph, LinearSpace};
use crate::zonotopal::{self, CENTRAL, EXTERNAL, INTERNAL};

/// `v_e ↦ scalars[e] · v_{perm[e]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutoElem {
    pub perm: Vec<usize>,
    pub scalars: Vec<Rat>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Which {
    Pminus,
    Pcentral,
    Pplus,
    OTbar,
}

impl Which {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pminus" | "internal" => Some(Self::Pminus),
            "pcentral" | "central" => Some(Self::Pcentral),
            "pplus" | "external" => Some(Self::Pplus),
            "otbar" => Some(Self::OTbar),
            _ => None,
        }
    }
}

impl AutoElem {
    pub fn identity(n: usize) -> Self {
        Self {
            perm: (0..n).collect(),
            scalars: vec![Rat::one(); n],
        }
    }

    /// The `G_m` element acting by `λ` on every line.
    pub fn scalar(n: usize, lambda: Rat) -> Self {
        Self {
            perm: (0..n).collect(),
            scalars: vec![lambda; n],
        }
    }

    /// Permutation from disjoint cycles of labels; unlisted scalars are 1.
    pub fn from_cycles<S: AsRef<str>>(
        a: &LinearSpace,
        cycles: &[Vec<S>],
        scalars: &[(S, Rat)],
    ) -> Result<Self> {
        let mut g = Self::identity(a.n());
        let mut moved = vec![false; a.n()];
        for cycle in cycles {
            let idx: Vec<usize> = cycle
                .iter()
                .map(|l| a.index_of(l.as_ref()))
                .collect::<Result<_>>()?;
            for (pos, &e) in idx.iter().enumerate() {
                if moved[e] {
                    return Err(Error::Parse {
                        line: 0,
                        message: format!("`{}` appears twice in the cycles", a.labels()[e]),
                    });
                }
                moved[e] = true;
                g.perm[e] = idx[(pos + 1) % idx.len()];
            }
        }
        for (l, s) in scalars {
            if s.is_zero() {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("zero scalar for `{}`", l.as_ref()),
                });
            }
            g.scalars[a.index_of(l.as_ref())?] = s.clone();
        }
        Ok(g)
    }

    /// The signed edge permutation induced by a vertex permutation; `None`
    /// if the map is not a graph automorphism.
    pub fn from_vertex_permutation(graph: &Graph, map: &HashMap<String, String>) -> Option<Self> {
        let image = |v: &String| map.get(v).cloned().unwrap_or_else(|| v.clone());
        let n = graph.edges.len();
        let mut used = vec![false; n];
        let mut g = Self::identity(n);
        for (i, e) in graph.edges.iter().enumerate() {
            let (t, h) = (image(&e.tail), image(&e.head));
            let same =
                (0..n).find(|&j| !used[j] && graph.edges[j].tail == t && graph.edges[j].head == h);
            let (j, sign) = match same {
                Some(j) => (j, 1),
                None => {
                    let j = (0..n).find(|&j| {
                        !used[j] && graph.edges[j].tail == h && graph.edges[j].head == t
                    })?;
                    (j, -1)
                }
            };
            used[j] = true;
            g.perm[i] = j;
            g.scalars[i] = rat(sign);
        }
        Some(g)
    }

    pub fn inverse(&self) -> Self {
        let n = self.perm.len();
        let mut g = Self::identity(n);
        for e in 0..n {
            g.perm[self.perm[e]] = e;
            g.scalars[self.perm[e]] = Rat::one() / &self.scalars[e];
        }
        g
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.perm.len();
        let mut g = Self::identity(n);
        for e in 0..n {
            let f = other.perm[e];
            g.perm[e] = self.perm[f];
            g.scalars[e] = &other.scalars[e] * &self.scalars[f];
        }
        g
    }

    /// Image of a vector of `F^E`.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); v.len()];
        for (e, x) in v.iter().enumerate() {
            out[self.perm[e]] = &self.scalars[e] * x;
        }
        out
    }
}

pub fn check_auto(a: &LinearSpace, g: &AutoElem) -> bool {
    g.perm.len() == a.n()
        && a.basis()
            .row_vecs()
            .iter()
            .all(|b| a.basis().contains(&g.apply(b)))
}

/// Matrix `A` of `f ↦ f ∘ g` on `L*` in the basis dual to the stored basis
/// of `L`: if `g(b_i) = Σ_j A_ij b_j`, then coefficient vectors transform by `A`.
pub fn action_on_lstar(a: &LinearSpace, g: &AutoElem) -> Result<Mat> {
    if !check_auto(a, g) {
        return Err(Error::NotAutomorphism);
    }
    let rows: Vec<Vec<Rat>> = a
        .basis()
        .row_vecs()
        .iter()
        .map(|b| a.coordinates(&g.apply(b)).expect("g preserves L"))
        .collect();
    Ok(Mat::from_rows(a.rank(), rows))
}

/// Images of the variables of `Sym L*` under the induced action.
fn variable_images(action: &Mat) -> Vec<Vec<Rat>> {
    (0..action.cols()).map(|j| action.column(j)).collect()
}

/// Trace of the induced action on the row space of `rows` (RREF, `g`-stable)
/// inside `Sym^d L*`.
fn trace_on(rows: &Mat, images: &[Vec<Rat>], d: usize, r: usize) -> Rat {
    let basis = MonoBasis::new(r, d);
    let mut trace = Rat::zero();
    for (i, f) in rows.row_vecs().iter().enumerate() {
        let gf = Poly::from_coords(&basis, f).substitute_linear(images);
        let coords = rows
            .coordinates(&gf.coords(&basis))
            .expect("subspace is invariant");
        trace += &coords[i];
    }
    trace
}

fn zonotopal_k(which: Which) -> Option<i64> {
    match which {
        Which::Pminus => Some(INTERNAL),
        Which::Pcentral => Some(CENTRAL),
        Which::Pplus => Some(EXTERNAL),
        Which::OTbar => None,
    }
}

/// Largest degree accepted by [`char_on`].
pub fn char_degree_limit(a: &LinearSpace, which: Which) -> usize {
    match zonotopal_k(which) {
        Some(k) => zonotopal::degree_cap(a, k).max(1),
        None => a.n() + 1,
    }
}

/// Trace of `g` on the degree-`d` piece of the chosen space.
pub fn char_on(a: &LinearSpace, g: &AutoElem, which: Which, d: usize) -> Result<Rat> {
    let action = action_on_lstar(a, g)?;
    if d > char_degree_limit(a, which) {
        return Err(Error::DegreeOutOfRange(d));
    }
    let images = variable_images(&action);
    let r = a.rank();
    Ok(match zonotopal_k(which) {
        Some(k) => trace_on(&zonotopal::inverse_system(a, k)?.slice(d), &images, d, r),
        None => {
            let ideal = k_slices_to(a, d).slice(d);
            trace_on(&Mat::identity(sym_dim(r, d)), &images, d, r) - trace_on(&ideal, &images, d, r)
        }
    })
}

/// `char(P_-^d) = char(OTbar^d)` in every degree where either is nonzero.
pub fn verify_equivariant_internal(a: &LinearSpace, g: &AutoElem) -> Result<Report> {
    let action = action_on_lstar(a, g)?;
    let images = variable_images(&action);
    let r = a.rank();
    let p = zonotopal::inverse_system(a, INTERNAL)?;
    let top = p
        .computed_degrees()
        .max(crate::orlik_terao::k_slices(a).computed_degrees());
    let k = k_slices_to(a, top);
    let mut report = Report::new("equivariant internal");
    for d in 0..=top {
        let lhs = trace_on(&p.slice(d), &images, d, r);
        let rhs = trace_on(&Mat::identity(sym_dim(r, d)), &images, d, r)
            - trace_on(&k.slice(d), &images, d, r);
        report.equal(
            format!("degree {d}: tr P- = tr OTbar"),
            FmtRat(lhs),
            FmtRat(rhs),
        );
    }
    Ok(report)
}

#[derive(PartialEq)]
struct FmtRat(Rat);

impl std::fmt::Display for FmtRat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::exact::format_rat(&self.0))
    }
}
