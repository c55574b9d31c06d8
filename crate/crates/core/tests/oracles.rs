//! Cross-checks of the library against brute-force or independently derived
//! computations.

use std::collections::BTreeSet;

use proptest::prelude::*;

use zonotopal::exact::{rat, Mat, Rat};
use zonotopal::hilbert::sym_dim;
use zonotopal::matroid::{ElementSet, Matroid};
use zonotopal::space::LinearSpace;
use zonotopal::{fixtures, orlik_terao as ot, zonotopal as zt};

fn small_instances() -> Vec<(String, LinearSpace)> {
    let mut out = vec![
        ("B2".to_string(), fixtures::b2()),
        ("U23".to_string(), fixtures::u23()),
        ("K3".to_string(), fixtures::k3()),
        ("DT".to_string(), fixtures::dt()),
    ];
    for seed in 0..6 {
        out.push((format!("random-{seed}"), fixtures::random_space(seed, 2, 5)));
    }
    out
}

/// Supports of nonzero vectors of `L`, found by solving for vectors vanishing
/// outside every subset.
fn brute_force_minimal_supports(a: &LinearSpace) -> BTreeSet<Vec<usize>> {
    let n = a.n();
    let mut supports = BTreeSet::new();
    for mask in 1u64..(1 << n) {
        let outside: Vec<usize> = (0..n).filter(|i| mask & (1 << i) == 0).collect();
        let ys = a
            .basis()
            .select_columns(&outside)
            .transpose()
            .kernel_basis();
        for y in ys.row_vecs() {
            let v = a.vector(&y);
            let s: Vec<usize> = (0..n).filter(|&i| v[i] != rat(0)).collect();
            supports.insert(s);
        }
    }
    let all: Vec<Vec<usize>> = supports.into_iter().collect();
    all.iter()
        .filter(|s| {
            !all.iter()
                .any(|t| t != *s && t.iter().all(|x| s.contains(x)))
        })
        .cloned()
        .collect()
}

#[test]
fn elementary_vectors_match_brute_force() {
    for (name, a) in small_instances() {
        let got: BTreeSet<Vec<usize>> = a
            .elementary_vectors()
            .into_iter()
            .map(|e| e.support)
            .collect();
        assert_eq!(got, brute_force_minimal_supports(&a), "{name}");
        for e in a.elementary_vectors() {
            assert!(a.basis().contains(&e.coeffs), "{name}");
            assert_eq!(e.coeffs[e.support[0]], rat(1), "{name}");
        }
    }
}

fn rank_by_rref(a: &LinearSpace, set: ElementSet) -> usize {
    a.basis().select_columns(&set.to_vec()).rank()
}

#[test]
fn circuits_match_rank_enumeration() {
    for (name, a) in small_instances() {
        let m = Matroid::of(&a);
        let n = a.n();
        let mut expected = Vec::new();
        for mask in 1u64..(1 << n) {
            let s = ElementSet(mask);
            let dependent = rank_by_rref(&a, s) < s.len();
            let minimal = s
                .iter()
                .all(|e| rank_by_rref(&a, s.without(e)) == s.len() - 1);
            if dependent && minimal {
                expected.push(s);
            }
        }
        let mut got = m.circuits();
        got.sort_by_key(|c| c.0);
        expected.sort_by_key(|c| c.0);
        assert_eq!(got, expected, "{name}");

        // Circuit elimination.
        let circuits = m.circuits();
        for (i, c1) in circuits.iter().enumerate() {
            for c2 in &circuits[i + 1..] {
                for e in c1.iter().filter(|&e| c2.contains(e)) {
                    let rest = c1.union(*c2).without(e);
                    assert!(circuits.iter().any(|c| c.is_subset(rest)), "{name}");
                }
            }
        }
    }
}

#[test]
fn flats_and_mobius_match_subset_expansion() {
    for (name, a) in small_instances() {
        let m = Matroid::of(&a.gale_dual());
        let n = a.n();
        let lattice = m.flats();
        let mut closures = BTreeSet::new();
        for mask in 0u64..(1 << n) {
            closures.insert(m.closure(ElementSet(mask)).0);
        }
        let got: BTreeSet<u64> = lattice.flats.iter().map(|f| f.0).collect();
        assert_eq!(got, closures, "{name}");
        if !m.is_loopless() {
            continue;
        }
        // μ(∅, E) = Σ_{S : cl(S) = E} (-1)^{|S|} for a loopless matroid.
        let expansion: i64 = (0u64..(1 << n))
            .filter(|&mask| m.closure(ElementSet(mask)) == m.ground())
            .map(|mask| {
                if ElementSet(mask).len().is_multiple_of(2) {
                    1
                } else {
                    -1
                }
            })
            .sum();
        assert_eq!(lattice.mobius(ElementSet::EMPTY), Some(expansion), "{name}");
    }
}

#[test]
fn tutte_evaluations_count_sets() {
    for (name, a) in small_instances() {
        let m = Matroid::of(&a);
        let t = m.tutte().unwrap();
        let c = m.counts().unwrap();
        assert_eq!(t.eval(1, 1), c.bases.into(), "{name}");
        assert_eq!(t.eval(2, 1), c.independent.into(), "{name}");
        assert_eq!(t.eval(1, 2), c.spanning.into(), "{name}");
        assert_eq!(t.eval(2, 2), (1u64 << a.n()).into(), "{name}");
    }
}

/// Quotient dimensions of `Sym L / ⟨α^{m(α)+k+1}⟩`, computed from the ideal
/// side rather than from the inverse system.
fn quotient_by_powers(a: &LinearSpace, k: i64, top: usize) -> Vec<usize> {
    let r = a.rank();
    let ideal = zt::defining_ideal(a, k, top).unwrap();
    let mut dims: Vec<usize> = (0..=top)
        .map(|d| sym_dim(r, d) - ideal.slice(d).rows())
        .collect();
    while dims.last() == Some(&0) {
        dims.pop();
    }
    dims
}

#[test]
fn inverse_systems_match_quotients() {
    for (name, a) in small_instances() {
        for k in [-2, -1, 0] {
            let h = zt::hilbert(&a, k).unwrap();
            let top = h.dims().len() + 1;
            assert_eq!(
                h.dims(),
                quotient_by_powers(&a, k, top).as_slice(),
                "{name}, k = {k}"
            );
        }
    }
}

#[test]
fn gale_dual_is_orthogonal_complement() {
    for (name, a) in small_instances() {
        let d = a.gale_dual();
        assert_eq!(a.rank() + d.rank(), a.n(), "{name}");
        let product = a.basis().mul(&d.basis().transpose());
        assert!(product.is_zero(), "{name}");
        assert_eq!(d.gale_dual(), a, "{name}");
    }
}

#[test]
fn u23_by_hand() {
    let u23 = fixtures::u23();
    let c = zt::inverse_system(&u23, -1).unwrap();
    assert_eq!(c.slice(1).rows(), 2);
    let ext = zt::inverse_system(&u23, 0).unwrap();
    assert_eq!(ext.slice(3).rows(), 1);
    let v: Vec<Rat> = ext.slice(3).row(0).to_vec();
    // The cubic is annihilated by the cube of each elementary direction.
    for alpha in u23.elementary_vectors() {
        let y = u23.coordinates(&alpha.coeffs).unwrap();
        let op = zonotopal::apolarity::pow_op_matrix(&y, 3, 3, 2).unwrap();
        assert_eq!(op.apply(&v), vec![rat(0)]);
    }
    assert_eq!(Mat::from_rows(4, vec![v]).rank(), 1);
}

fn instance() -> impl Strategy<Value = LinearSpace> {
    (0u64..1000, 1usize..=3, 0usize..=2)
        .prop_map(|(seed, r, extra)| fixtures::random_space(seed, r, r + extra + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn containment_in_k(a in instance()) {
        let min = zt::min_k(&a).unwrap_or(-2).max(-2);
        for k in min..0 {
            let small = zt::inverse_system(&a, k).unwrap();
            let big = zt::inverse_system(&a, k + 1).unwrap();
            for (d, s) in small.slices().iter().enumerate() {
                let b = big.slice(d);
                for row in s.row_vecs() {
                    prop_assert!(b.contains(&row));
                }
            }
        }
    }

    #[test]
    fn central_is_independence_h_vector(a in instance()) {
        let dual = Matroid::of(&a.gale_dual());
        prop_assume!(dual.is_loopless());
        prop_assert_eq!(zt::hilbert(&a, -1).unwrap(), dual.independence_h_vector().unwrap());
        prop_assert_eq!(ot::srbar_hilbert(&a), zt::hilbert(&a, -1).unwrap());
    }

    #[test]
    fn internal_equals_otbar(a in instance()) {
        prop_assert_eq!(ot::otbar_hilbert(&a), zt::hilbert(&a, -2).unwrap());
        prop_assert!(ot::verify_internal(&a).unwrap().passed());
        prop_assert!(ot::verify_central(&a).unwrap().passed());
    }

    #[test]
    fn stopping_is_sound(a in instance()) {
        // One degree past the first zero slice is still zero.
        for k in [-2, -1, 0] {
            if let Ok(sys) = zt::inverse_system(&a, k) {
                let d = sys.computed_degrees();
                let cons = zt::constraints(&a, k);
                let beyond = zonotopal::apolarity::annihilator_degree(&cons, d, a.rank());
                prop_assert_eq!(beyond.rows(), 0);
            }
        }
    }

    #[test]
    fn coordinate_rescaling_is_invisible(a in instance(), s in proptest::collection::vec(1i64..=5, 6)) {
        let scalars: Vec<Rat> = (0..a.n()).map(|i| rat(if i % 2 == 0 { s[i] } else { -s[i] })).collect();
        let b = a.rescale_coordinates(&scalars);
        for k in [-2, -1, 0] {
            prop_assert_eq!(zt::hilbert(&a, k).ok(), zt::hilbert(&b, k).ok());
        }
        prop_assert_eq!(ot::otbar_hilbert(&a), ot::otbar_hilbert(&b));
    }
}
