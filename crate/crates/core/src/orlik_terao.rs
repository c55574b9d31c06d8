//! Circuit forms, the ideals `K`, `J`, `J_-` of `Sym L*`, and the
//! direct-sum decompositions of `Sym L*`.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::apolarity::{apolar_annihilator, ideal_degree_piece, GradedSubspace, MonoBasis, Poly};
use crate::error::{Error, Result};
use crate::exact::{format_rat, rat, Mat, Rat};
use crate::hilbert::{sym_dim, HilbertFunction};
use crate::matroid::{ordering_positions, ElementSet, Matroid};
use crate::report::Report;
use crate::space::{ElementaryVector, LinearSpace};
use crate::zonotopal::{self, CENTRAL, INTERNAL};

/// `h_α = Σ_{e ∈ Supp α} α_e Π_{f ∈ Supp α ∖ e} w_f` in `Sym V*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitForm {
    pub alpha: ElementaryVector,
    pub form: Poly,
}

impl CircuitForm {
    pub fn degree(&self) -> usize {
        self.alpha.m() - 1
    }

    /// Image in `Sym L*` under `w_e ↦ χ_e`.
    pub fn restrict(&self, a: &LinearSpace) -> Poly {
        let images: Vec<Vec<Rat>> = (0..a.n()).map(|e| a.chi(e)).collect();
        self.form.substitute_linear(&images)
    }
}

pub fn circuit_form(alpha: &ElementaryVector) -> CircuitForm {
    let n = alpha.coeffs.len();
    let mut form = Poly::zero(n);
    for &e in &alpha.support {
        let mut exp = vec![0u32; n];
        for &f in &alpha.support {
            if f != e {
                exp[f] = 1;
            }
        }
        form.add_term(exp, alpha.coeffs[e].clone());
    }
    CircuitForm {
        alpha: alpha.clone(),
        form,
    }
}

/// `χ_S = Π_{e ∈ S} χ_e` in `Sym L*`.
pub fn chi_product(a: &LinearSpace, set: ElementSet) -> Poly {
    Poly::product(a.rank(), set.iter().map(|e| Poly::linear(&a.chi(e))))
}

fn homogeneous_generators(polys: &[Poly], r: usize) -> Vec<(usize, Vec<Rat>)> {
    polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let d = p
                .terms()
                .keys()
                .next()
                .map_or(0, |e| e.iter().sum::<u32>() as usize);
            (d, p.coords(&MonoBasis::new(r, d)))
        })
        .collect()
}

/// Slices of the ideal generated by `polys`, until the first degree in which
/// the ideal is everything (or `max_degree`, if given).
fn ideal_slices(polys: &[Poly], r: usize, max_degree: Option<usize>, cap: usize) -> GradedSubspace {
    let generators = homogeneous_generators(polys, r);
    let mut slices = Vec::new();
    let last = max_degree.unwrap_or(cap);
    for d in 0..=last {
        let s = ideal_degree_piece(&generators, d, r);
        let full = s.rows() == sym_dim(r, d);
        slices.push(s);
        if full && max_degree.is_none() {
            break;
        }
    }
    GradedSubspace::new(r, slices)
}

fn slice_cap(a: &LinearSpace) -> usize {
    a.n() + 1
}

fn k_generators(a: &LinearSpace) -> Vec<Poly> {
    a.elementary_vectors()
        .iter()
        .map(|alpha| circuit_form(alpha).restrict(a))
        .collect()
}

fn j_generators(a: &LinearSpace) -> Vec<Poly> {
    a.elementary_vectors()
        .iter()
        .map(|alpha| chi_product(a, alpha.support_set()))
        .collect()
}

fn j_minus_generators(a: &LinearSpace, order: &[usize]) -> Vec<Poly> {
    let position = ordering_positions(order, a.n());
    a.elementary_vectors()
        .iter()
        .map(|alpha| {
            let c = alpha.support_set();
            let min = c
                .iter()
                .min_by_key(|&e| position[e])
                .expect("nonempty support");
            chi_product(a, c.without(min))
        })
        .collect()
}

/// `K(A^!)`: generated by the images of all circuit forms.
pub fn k_slices(a: &LinearSpace) -> GradedSubspace {
    ideal_slices(&k_generators(a), a.rank(), None, slice_cap(a))
}

pub fn k_slices_to(a: &LinearSpace, max_degree: usize) -> GradedSubspace {
    ideal_slices(&k_generators(a), a.rank(), Some(max_degree), slice_cap(a))
}

/// `J(A^!)`: generated by `χ_S` over circuits `S` of the dual matroid.
pub fn j_slices(a: &LinearSpace) -> GradedSubspace {
    ideal_slices(&j_generators(a), a.rank(), None, slice_cap(a))
}

pub fn j_slices_to(a: &LinearSpace, max_degree: usize) -> GradedSubspace {
    ideal_slices(&j_generators(a), a.rank(), Some(max_degree), slice_cap(a))
}

/// `J_-(A^!)` for the ordering in which `order[0]` is smallest: generated by
/// `χ_{C ∖ min C}`.
pub fn j_minus_slices(a: &LinearSpace, order: &[usize]) -> GradedSubspace {
    ideal_slices(&j_minus_generators(a, order), a.rank(), None, slice_cap(a))
}

pub fn otbar_hilbert(a: &LinearSpace) -> HilbertFunction {
    k_slices(a).quotient_hilbert()
}

/// Hilbert function of `Sym L* / J(A^!)`.
pub fn srbar_hilbert(a: &LinearSpace) -> HilbertFunction {
    j_slices(a).quotient_hilbert()
}

pub fn bc_hilbert_oracle(a: &LinearSpace, order: &[usize]) -> Result<HilbertFunction> {
    Matroid::of(&a.gale_dual()).broken_circuit_h_vector(order)
}

/// Reduces `v` modulo the row space of an RREF matrix.
pub fn reduce_mod(ideal: &Mat, v: &[Rat]) -> Vec<Rat> {
    let mut out = v.to_vec();
    for (i, p) in ideal.pivot_columns().into_iter().enumerate() {
        if out[p].is_zero() {
            continue;
        }
        let c = out[p].clone();
        for (x, y) in out.iter_mut().zip(ideal.row(i)) {
            *x -= &c * y;
        }
    }
    out
}

/// Coordinates in `Sym^d / I^d` with respect to the standard (non-pivot)
/// monomials of the RREF ideal slice.
pub fn quotient_coords(ideal: &Mat, v: &[Rat]) -> Vec<Rat> {
    let pivots = ideal.pivot_columns();
    let reduced = reduce_mod(ideal, v);
    reduced
        .into_iter()
        .enumerate()
        .filter(|(j, _)| !pivots.contains(j))
        .map(|(_, x)| x)
        .collect()
}

/// Matrix (columns = images) of `P^d ↪ Sym^d ↠ Sym^d / I^d`.
pub fn composite_matrix(p: &Mat, ideal: &Mat) -> Mat {
    let cols: Vec<Vec<Rat>> = p
        .row_vecs()
        .iter()
        .map(|f| quotient_coords(ideal, f))
        .collect();
    Mat::from_rows(ideal.cols() - ideal.rows(), cols).transpose()
}

/// Checks `Sym L* = P ⊕ I` degree by degree up to `max_degree`.
pub fn verify_direct_sum(p: &GradedSubspace, ideal: &GradedSubspace, max_degree: usize) -> Report {
    let r = p.nvars();
    let mut report = Report::new("");
    for d in 0..=max_degree {
        let ps = p.slice(d);
        let is = ideal.slice(d);
        let total = sym_dim(r, d);
        report.check(
            format!("degree {d}: dim P + dim I"),
            format!("{} + {}", ps.rows(), is.rows()),
            total,
            ps.rows() + is.rows() == total,
        );
        let stacked = ps.vstack(&is).rank();
        report.equal(
            format!("degree {d}: dim (P + I)"),
            stacked,
            ps.rows() + is.rows(),
        );
        let composite = composite_matrix(&ps, &is).rank();
        report.equal(format!("degree {d}: rank P -> Sym/I"), composite, ps.rows());
    }
    report
}

fn common_top(p: &GradedSubspace, ideal: &GradedSubspace) -> usize {
    p.computed_degrees()
        .max(ideal.computed_degrees())
        .saturating_sub(1)
}

/// `Sym L* = P_-(A) ⊕ K(A^!)`.
pub fn verify_internal(a: &LinearSpace) -> Result<Report> {
    let p = zonotopal::inverse_system(a, INTERNAL)?;
    let k = k_slices(a);
    let mut report = verify_direct_sum(&p, &k, common_top(&p, &k));
    report.title = "internal".into();
    Ok(report)
}

/// `Sym L* = P(A) ⊕ J(A^!)`.
pub fn verify_central(a: &LinearSpace) -> Result<Report> {
    let p = zonotopal::inverse_system(a, CENTRAL)?;
    let j = j_slices(a);
    let mut report = verify_direct_sum(&p, &j, common_top(&p, &j));
    report.title = "central".into();
    Ok(report)
}

/// The input order followed by `extra` seeded random orderings of `0..n`.
pub fn seeded_orderings(n: usize, extra: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![(0..n).collect::<Vec<_>>()];
    for _ in 0..extra {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        out.push(order);
    }
    out
}

/// `Sym L* = P_-(A) ⊕ J_-(A^!)` for each ordering.
pub fn verify_hr_internal(a: &LinearSpace, orderings: &[Vec<usize>]) -> Result<Report> {
    Matroid::of(&a.gale_dual()).require_loopless()?;
    let p = zonotopal::inverse_system(a, INTERNAL)?;
    let mut report = Report::new("hr-internal");
    for order in orderings {
        let jm = j_minus_slices(a, order);
        let mut sub = verify_direct_sum(&p, &jm, common_top(&p, &jm));
        let labels: Vec<&str> = order.iter().map(|&i| a.labels()[i].as_str()).collect();
        sub.title = format!("order {}", labels.join(","));
        report.extend(sub);
    }
    Ok(report)
}

/// Annihilators `E = K^⊥` and `D = J^⊥` in `Sym L` against the internal and
/// central zonotopal algebras.
pub fn dual_system_check(a: &LinearSpace) -> Result<Report> {
    let r = a.rank();
    let mut report = Report::new("dual systems");
    for (name, k, ideal) in [("E", INTERNAL, k_slices(a)), ("D", CENTRAL, j_slices(a))] {
        let inverse = zonotopal::inverse_system(a, k)?;
        let top = common_top(&inverse, &ideal);
        let defining = zonotopal::defining_ideal(a, k, top)?;
        for d in 0..=top {
            let annihilator = apolar_annihilator(&ideal.slice(d), d, r);
            let quotient_dim = inverse.slice(d).rows();
            report.equal(
                format!("degree {d}: dim {name}"),
                annihilator.rows(),
                quotient_dim,
            );
            let independent = annihilator.vstack(&defining.slice(d)).rank();
            report.equal(
                format!("degree {d}: dim ({name} + ideal)"),
                independent,
                sym_dim(r, d),
            );
        }
    }
    Ok(report)
}

/// `dim E^d` for each degree (annihilator of `K^d` in `Sym^d L`).
pub fn e_hilbert(a: &LinearSpace) -> HilbertFunction {
    let k = k_slices(a);
    let dims = (0..k.computed_degrees())
        .map(|d| apolar_annihilator(&k.slice(d), d, a.rank()).rows())
        .collect();
    HilbertFunction::new(dims)
}

/// `dim D^d` for each degree (annihilator of `J^d` in `Sym^d L`).
pub fn d_hilbert(a: &LinearSpace) -> HilbertFunction {
    let j = j_slices(a);
    let dims = (0..j.computed_degrees())
        .map(|d| apolar_annihilator(&j.slice(d), d, a.rank()).rows())
        .collect();
    HilbertFunction::new(dims)
}

/// Matrices of `P_-^d → Sym^d L* / K^d` in the RREF basis of `P_-^d` and the
/// standard monomial basis of the quotient.
pub fn ot_iso_witness(a: &LinearSpace) -> Result<Vec<Mat>> {
    Matroid::of(&a.gale_dual()).require_loopless()?;
    let p = zonotopal::inverse_system(a, INTERNAL)?;
    let top = p.hilbert().top().unwrap_or(0);
    let k = k_slices_to(a, top);
    Ok((0..=top)
        .map(|d| composite_matrix(&p.slice(d), &k.slice(d)))
        .collect())
}

/// Matrix of `P_-^d → Sym^d L* / K^d` with respect to chosen bases: `source`
/// spans `P_-^d` and the classes of `target` form a basis of the quotient.
/// Column `i` holds the coefficients of the class of `source[i]`.
pub fn ot_iso_witness_in(
    a: &LinearSpace,
    d: usize,
    source: &[Poly],
    target: &[Poly],
) -> Option<Mat> {
    let r = a.rank();
    let basis = MonoBasis::new(r, d);
    let k = k_slices_to(a, d).slice(d);
    let classes = |ps: &[Poly]| -> Vec<Vec<Rat>> {
        ps.iter()
            .map(|f| quotient_coords(&k, &f.coords(&basis)))
            .collect()
    };
    let target_classes = classes(target);
    let quotient_dim = sym_dim(r, d) - k.rows();
    if target_classes.len() != quotient_dim {
        return None;
    }
    // Solve T x = s for each source class s, T having the target classes as columns.
    let t = Mat::from_rows(quotient_dim, target_classes);
    if t.rank() != quotient_dim {
        return None;
    }
    let columns: Option<Vec<Vec<Rat>>> =
        classes(source).iter().map(|s| solve_rows(&t, s)).collect();
    Some(Mat::from_rows(target.len(), columns?).transpose())
}

/// Coefficients `x` with `Σ x_i rows_i = v`.
fn solve_rows(rows: &Mat, v: &[Rat]) -> Option<Vec<Rat>> {
    let n = rows.rows();
    let aug = rows.transpose();
    let mut system = Mat::zeros(aug.rows(), n + 1);
    for i in 0..aug.rows() {
        for j in 0..n {
            system[(i, j)] = aug[(i, j)].clone();
        }
        system[(i, n)] = v[i].clone();
    }
    let (reduced, pivots) = system.rref();
    if pivots.contains(&n) {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = reduced[(i, n)].clone();
    }
    Some(x)
}

/// The degree-1 witness for the doubled triangle with the class of
/// `χ_{e1}` as quotient basis and the internal generator normalized to take
/// the value 1 on the oriented cycle `e1 + f1 + g1`.
pub fn doubled_triangle_witness(a: &LinearSpace) -> Result<Rat> {
    let p = zonotopal::inverse_system(a, INTERNAL)?;
    let c = zonotopal::slice_polys(&p, 1)
        .into_iter()
        .next()
        .ok_or(Error::DegreeOutOfRange(1))?;
    let mut cycle = vec![rat(0); a.n()];
    for l in ["e1", "f1", "g1"] {
        cycle[a.index_of(l)?] = Rat::one();
    }
    let point = a
        .coordinates(&cycle)
        .ok_or(Error::UnknownLabel("e1+f1+g1".into()))?;
    let value = c.eval(&point);
    if value.is_zero() {
        return Err(Error::DegreeOutOfRange(1));
    }
    let c = c.scale(&(Rat::one() / value));
    let w = Poly::linear(&a.chi(a.index_of("e1")?));
    let m = ot_iso_witness_in(a, 1, &[c], &[w]).ok_or(Error::DegreeOutOfRange(1))?;
    Ok(m[(0, 0)].clone())
}

/// Renders a polynomial in `Sym V*` with variables named by the labels.
pub fn render_form(form: &Poly, labels: &[String]) -> String {
    let mut terms: Vec<String> = Vec::new();
    for (exp, c) in form.terms().iter().rev() {
        let vars: Vec<String> = exp
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat_n(format!("w_{}", labels[i]), k as usize))
            .collect();
        let coeff = format_rat(c);
        let term = match (vars.is_empty(), coeff.as_str()) {
            (true, _) => coeff,
            (false, "1") => vars.join("*"),
            (false, "-1") => format!("-{}", vars.join("*")),
            (false, _) => format!("{coeff}*{}", vars.join("*")),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}
