//! Inverse systems `C_{A,k}` of the zonotopal algebras `R_{A,k}` and their
//! Hilbert functions.
//!
//! Polynomials live in `Sym L*` with variables dual to the stored basis of `L`;
//! a vector of `L` acts by differentiation in the direction of its
//! coordinates. Only elementary vectors contribute constraints.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::apolarity::{
    annihilator_degree, ideal_degree_piece, pow_op_matrix, GradedSubspace, MonoBasis, Poly,
};
use crate::error::{Error, Result};
use crate::exact::{format_rat, rat, Mat, Rat};
use crate::hilbert::{sym_dim, HilbertFunction};
use crate::matroid::Matroid;
use crate::report::Report;
use crate::space::LinearSpace;

pub const INTERNAL: i64 = -2;
pub const CENTRAL: i64 = -1;
pub const EXTERNAL: i64 = 0;

/// Smallest admissible `k`, or `None` when `L = 0` (every `k` is admissible).
pub fn min_k(a: &LinearSpace) -> Option<i64> {
    a.rho().ok().map(|rho| -(rho as i64 + 1))
}

fn check_k(a: &LinearSpace, k: i64) -> Result<()> {
    let min = min_k(a).unwrap_or(INTERNAL.min(k));
    if k < min || k > 0 {
        return Err(Error::KOutOfRange { k, min });
    }
    Ok(())
}

/// Last degree ever examined for `C_{A,k}`.
pub fn degree_cap(a: &LinearSpace, k: i64) -> usize {
    let per_form = (a.n() as i64 + k + 1).max(0) as usize;
    a.rank() * per_form
}

/// `(coordinates of α, m(α) + k + 1)` for every elementary vector α.
pub fn constraints(a: &LinearSpace, k: i64) -> Vec<(Vec<Rat>, usize)> {
    a.elementary_vectors()
        .into_iter()
        .map(|alpha| {
            let y = a
                .coordinates(&alpha.coeffs)
                .expect("elementary vectors lie in L");
            let p = alpha.m() as i64 + k + 1;
            (
                y,
                usize::try_from(p).expect("k >= -(rho + 1) keeps exponents nonnegative"),
            )
        })
        .collect()
}

/// Per-degree bases of `C_{A,k}`, up to and including the first zero slice.
pub fn inverse_system(a: &LinearSpace, k: i64) -> Result<GradedSubspace> {
    check_k(a, k)?;
    let r = a.rank();
    let cons = constraints(a, k);
    let cap = degree_cap(a, k);
    let mut slices = Vec::new();
    for d in 0..=cap.max(1) {
        let s = annihilator_degree(&cons, d, r);
        let done = s.rows() == 0;
        slices.push(s);
        if done {
            break;
        }
    }
    Ok(GradedSubspace::new(r, slices))
}

pub fn hilbert(a: &LinearSpace, k: i64) -> Result<HilbertFunction> {
    Ok(inverse_system(a, k)?.hilbert())
}

/// Degree-`d` slices (`d <= max_degree`) of the defining ideal
/// `⟨α^{m(α)+k+1}⟩ ⊂ Sym L`, in variables dual to the coordinates of `L*`.
pub fn defining_ideal(a: &LinearSpace, k: i64, max_degree: usize) -> Result<GradedSubspace> {
    check_k(a, k)?;
    let r = a.rank();
    let generators: Vec<(usize, Vec<Rat>)> = constraints(a, k)
        .into_iter()
        .map(|(y, p)| {
            let form = Poly::linear(&y);
            let power = Poly::product(r, std::iter::repeat_n(form, p));
            (p, power.coords(&MonoBasis::new(r, p)))
        })
        .collect();
    let slices = (0..=max_degree)
        .map(|d| ideal_degree_piece(&generators, d, r))
        .collect();
    Ok(GradedSubspace::new(r, slices))
}

/// Totals of the internal, central and external algebras against matroid
/// counts of the Gale dual.
pub fn total_checks(a: &LinearSpace) -> Result<Report> {
    let dual = Matroid::of(&a.gale_dual());
    let mut report = Report::new("totals");

    let internal = hilbert(a, INTERNAL)?.total();
    let expected_internal = if dual.is_loopless() {
        let lattice = dual.flats();
        lattice
            .mobius(crate::matroid::ElementSet::EMPTY)
            .expect("empty set is a flat")
            .unsigned_abs() as usize
    } else {
        0
    };
    report.equal("internal = |mu(empty, E)|", internal, expected_internal);

    let counts = dual.counts()?;
    report.equal(
        "central = bases",
        hilbert(a, CENTRAL)?.total() as u64,
        counts.bases,
    );
    report.equal(
        "external = spanning sets of dual",
        hilbert(a, EXTERNAL)?.total() as u64,
        counts.spanning,
    );
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditSummary {
    pub k: i64,
    pub trials: usize,
    pub seed: u64,
    /// Number of (α, basis element) pairs tested.
    pub checked: usize,
}

/// Checks that random vectors of `L` (not only elementary ones) satisfy the
/// defining relations on every basis element of `C_{A,k}`.
pub fn random_alpha_audit(
    a: &LinearSpace,
    k: i64,
    trials: usize,
    seed: u64,
) -> Result<AuditSummary> {
    audit_system(a, &inverse_system(a, k)?, k, trials, seed)
}

/// [`random_alpha_audit`] against an arbitrary candidate for `C_{A,k}`.
pub fn audit_system(
    a: &LinearSpace,
    system: &GradedSubspace,
    k: i64,
    trials: usize,
    seed: u64,
) -> Result<AuditSummary> {
    let r = a.rank();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    if r == 0 {
        return Ok(AuditSummary {
            k,
            trials,
            seed,
            checked,
        });
    }
    for _ in 0..trials {
        let y = random_vector(a, &mut rng);
        let alpha = a.vector(&y);
        let m = alpha.iter().filter(|x| **x != rat(0)).count() as i64;
        let p = usize::try_from(m + k + 1).expect("exponent nonnegative in range");
        for (d, slice) in system.slices().iter().enumerate() {
            if slice.rows() == 0 {
                continue;
            }
            if p > d {
                continue;
            }
            let op = pow_op_matrix(&y, p, d, r)?;
            for f in slice.row_vecs() {
                checked += 1;
                if op.apply(&f).iter().any(|x| *x != rat(0)) {
                    let alpha: Vec<String> = alpha.iter().map(format_rat).collect();
                    let f: Vec<String> = f.iter().map(format_rat).collect();
                    return Err(Error::AuditFailure(format!(
                        "alpha = ({}), f = ({}), degree {d}",
                        alpha.join(", "),
                        f.join(", ")
                    )));
                }
            }
        }
    }
    Ok(AuditSummary {
        k,
        trials,
        seed,
        checked,
    })
}

/// Coordinates of a random nonzero vector of `L ∩ V_T` for a random subset
/// `T`, so that small supports occur often.
fn random_vector(a: &LinearSpace, rng: &mut ChaCha8Rng) -> Vec<Rat> {
    let r = a.rank();
    loop {
        let zero: Vec<usize> = (0..a.n()).filter(|_| rng.gen_bool(0.5)).collect();
        let ys = a.basis().select_columns(&zero).transpose().kernel_basis();
        if ys.rows() == 0 {
            continue;
        }
        let mut y = vec![rat(0); r];
        for row in ys.row_vecs() {
            let c = rat(rng.gen_range(-3i64..=3));
            for (yi, x) in y.iter_mut().zip(&row) {
                *yi += &c * x;
            }
        }
        if y.iter().any(|x| *x != rat(0)) {
            return y;
        }
    }
}

/// Largest degree accepted by [`deformed_internal`].
pub const DEFORMED_MAX_DEGREE: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeformedInternal {
    /// `dim Q_-^d` computed directly in `Sym V*`, for `d = 0..=d_max`.
    pub dims: Vec<usize>,
    /// `Σ_{i+j=d} dim P_-^i dim Sym^j L^⊥`.
    pub expected: Vec<usize>,
}

impl DeformedInternal {
    pub fn holds(&self) -> bool {
        self.dims == self.expected
    }

    pub fn hilbert(&self) -> HilbertFunction {
        HilbertFunction::new(self.dims.clone())
    }
}

/// The space of `f ∈ Sym V*` killed by `α^{m(α)-1}` for every elementary α,
/// compared degree by degree with `P_- ⊗ Sym L^⊥`.
pub fn deformed_internal(a: &LinearSpace, d_max: usize) -> Result<DeformedInternal> {
    if d_max > DEFORMED_MAX_DEGREE {
        return Err(Error::CostGuard {
            requested: d_max,
            limit: DEFORMED_MAX_DEGREE,
        });
    }
    let n = a.n();
    let cons: Vec<(Vec<Rat>, usize)> = a
        .elementary_vectors()
        .into_iter()
        .map(|alpha| {
            let p = alpha.m() - 1;
            (alpha.coeffs, p)
        })
        .collect();
    let dims: Vec<usize> = (0..=d_max)
        .map(|d| annihilator_degree(&cons, d, n).rows())
        .collect();

    let p_minus = hilbert(a, INTERNAL)?;
    let perp = n - a.rank();
    let expected = (0..=d_max)
        .map(|d| (0..=d).map(|i| p_minus.get(i) * sym_dim(perp, d - i)).sum())
        .collect();
    Ok(DeformedInternal { dims, expected })
}

/// Basis of `C^d` as polynomials.
pub fn slice_polys(space: &GradedSubspace, d: usize) -> Vec<Poly> {
    let basis = MonoBasis::new(space.nvars(), d);
    space
        .slice(d)
        .row_vecs()
        .iter()
        .map(|v| Poly::from_coords(&basis, v))
        .collect()
}

/// Polynomial ring dimension check helper used by reports: whether `m` spans
/// all of `Sym^d`.
pub fn is_full_slice(m: &Mat, nvars: usize, d: usize) -> bool {
    m.rows() == sym_dim(nvars, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn dims(a: &LinearSpace, k: i64) -> Vec<usize> {
        hilbert(a, k).unwrap().dims().to_vec()
    }

    #[test]
    fn k3_external() {
        assert_eq!(dims(&fixtures::k3(), 0), vec![1, 1, 1, 1]);
    }

    #[test]
    fn dt_internal_and_c() {
        let dt = fixtures::dt();
        let sys = inverse_system(&dt, INTERNAL).unwrap();
        assert_eq!(sys.dims(), vec![1, 1, 0]);
        let c = &slice_polys(&sys, 1)[0];
        let point = |v: &[i64]| {
            dt.coordinates(&v.iter().map(|&x| rat(x)).collect::<Vec<_>>())
                .unwrap()
        };
        for l in [[1, 1, 0, 0, 0, 0], [0, 0, 1, 1, 0, 0], [0, 0, 0, 0, 1, 1]] {
            assert_eq!(c.eval(&point(&l)), rat(0));
        }
        assert_ne!(c.eval(&point(&[1, 0, 1, 0, 1, 0])), rat(0));
    }

    #[test]
    fn degenerate_exponent_kills_everything() {
        let b2 = fixtures::b2();
        assert!(hilbert(&b2, INTERNAL).unwrap().is_zero());
    }

    #[test]
    fn u23_values() {
        let u23 = fixtures::u23();
        assert_eq!(dims(&u23, -1), vec![1, 2]);
        assert_eq!(dims(&u23, 0), vec![1, 2, 3, 1]);
        assert_eq!(dims(&u23, -2), vec![1]);
    }

    #[test]
    fn k_range_enforced() {
        let k3 = fixtures::k3();
        assert_eq!(min_k(&k3), Some(-4));
        assert!(hilbert(&k3, -4).is_ok());
        assert_eq!(hilbert(&k3, -5), Err(Error::KOutOfRange { k: -5, min: -4 }));
        assert!(matches!(hilbert(&k3, 1), Err(Error::KOutOfRange { .. })));
        assert_eq!(
            hilbert(&fixtures::b2(), -3),
            Err(Error::KOutOfRange { k: -3, min: -2 })
        );
    }

    #[test]
    fn zero_space_is_constants() {
        let a = LinearSpace::make(&["a", "b"], &Mat::zeros(0, 2)).unwrap();
        for k in [-2, -1, 0] {
            assert_eq!(dims(&a, k), vec![1]);
        }
    }

    #[test]
    fn totals() {
        for a in [
            fixtures::k3(),
            fixtures::u23(),
            fixtures::dt(),
            fixtures::b2(),
        ] {
            let r = total_checks(&a).unwrap();
            assert!(r.passed(), "{r}");
        }
        let r = total_checks(&fixtures::k3()).unwrap();
        assert_eq!(r.checks[2].lhs, "4");
        let r = total_checks(&fixtures::u23()).unwrap();
        let totals: Vec<&str> = r.checks.iter().map(|c| c.lhs.as_str()).collect();
        assert_eq!(totals, vec!["1", "3", "7"]);
        assert_eq!(total_checks(&fixtures::dt()).unwrap().checks[0].lhs, "2");
    }

    #[test]
    fn audits_pass() {
        for (a, k) in [
            (fixtures::b2(), 0),
            (fixtures::u23(), -1),
            (fixtures::dt(), -2),
        ] {
            let s = random_alpha_audit(&a, k, 100, 7).unwrap();
            assert_eq!(s.trials, 100);
        }
    }

    #[test]
    fn audit_is_seeded() {
        let dt = fixtures::dt();
        let a = random_alpha_audit(&dt, -2, 10, 1).unwrap();
        assert_eq!(a, random_alpha_audit(&dt, -2, 10, 1).unwrap());
        assert!(a.checked > 0);
    }

    #[test]
    fn audit_rejects_oversized_system() {
        let k3 = fixtures::k3();
        let bogus = GradedSubspace::new(
            1,
            vec![Mat::identity(1), Mat::identity(1), Mat::identity(1)],
        );
        assert!(matches!(
            audit_system(&k3, &bogus, -2, 5, 0),
            Err(Error::AuditFailure(_))
        ));
    }

    #[test]
    fn containment_in_k() {
        let a = fixtures::dt();
        for (k0, k1) in [(-2, -1), (-1, 0)] {
            let small = inverse_system(&a, k0).unwrap();
            let big = inverse_system(&a, k1).unwrap();
            for (d, s) in small.slices().iter().enumerate() {
                let b = big.slice(d);
                for row in s.row_vecs() {
                    assert!(b.contains(&row), "degree {d}");
                }
            }
        }
    }

    #[test]
    fn deformed_examples() {
        let b2 = deformed_internal(&fixtures::b2(), 3).unwrap();
        assert_eq!(b2.dims, vec![0, 0, 0, 0]);
        let u23 = deformed_internal(&fixtures::u23(), 3).unwrap();
        assert_eq!(u23.dims, vec![1, 1, 1, 1]);
        assert!(u23.holds());
        let dt = deformed_internal(&fixtures::dt(), 3).unwrap();
        assert_eq!(dt.dims, vec![1, 3, 5, 7]);
        assert!(dt.holds());
        assert_eq!(
            deformed_internal(&fixtures::u23(), 9),
            Err(Error::CostGuard {
                requested: 9,
                limit: 8
            })
        );
    }
}
