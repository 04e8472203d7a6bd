mod common;

use common::{homogeneous_matrix, parametrization, small_matrix};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use toric_core::oracle::enumerate_kernel_binomials;
use toric_core::{DegreeBound, IntegerMatrix, Parametrization, RationalMatrix};

fn nonsingular(max: usize) -> impl Strategy<Value = RationalMatrix> {
    proptest::collection::vec((-3i64..=3, 1i64..=2), max * max).prop_filter_map(
        "singular",
        move |entries| {
            let rows: Vec<Vec<(i64, i64)>> = entries.chunks(max).map(<[_]>::to_vec).collect();
            let q = RationalMatrix::from_fractions(&rows);
            q.is_nonsingular().then_some(q)
        },
    )
}

fn leading_block(q: &RationalMatrix, m: usize) -> Option<RationalMatrix> {
    let rows: Vec<Vec<(i64, i64)>> = (0..m)
        .map(|r| {
            (0..m)
                .map(|c| {
                    let v = q.get(r, c);
                    (
                        i64::try_from(v.numer()).unwrap(),
                        i64::try_from(v.denom()).unwrap(),
                    )
                })
                .collect()
        })
        .collect();
    let block = RationalMatrix::from_fractions(&rows);
    block.is_nonsingular().then_some(block)
}

proptest! {
    #[test]
    fn reparametrization_keeps_the_kernel(m in small_matrix(3, 4), q in nonsingular(3)) {
        let p = parametrization(m);
        let Some(q) = leading_block(&q, p.params().len()) else { return Ok(()) };
        let (r, c) = p.reparametrize(&q).unwrap();
        prop_assert!(c.is_positive());
        prop_assert_eq!(r.kernel_lattice(), p.kernel_lattice());
        prop_assert_eq!(r.dimension(), p.dimension());
        let bound = DegreeBound::new(3, 2).unwrap();
        for b in enumerate_kernel_binomials(&p, &bound) {
            prop_assert!(r.contains_binomial(&b));
        }
    }

    #[test]
    fn pinning_gives_a_pure_power(m in small_matrix(4, 5), seed in 0usize..5) {
        let p = parametrization(m);
        let i = seed % p.vars().len();
        match p.normalize_pin(i) {
            Ok(pin) => {
                let a = pin.parametrization.matrix();
                prop_assert!(pin.parametrization.is_maximal_rank());
                prop_assert_eq!(a.rows(), p.dimension());
                prop_assert!(pin.exponent.is_positive());
                for r in 0..a.rows() {
                    let expected = if r == pin.pinned_param { pin.exponent.clone() } else { BigInt::zero() };
                    prop_assert_eq!(a.get(r, i), &expected);
                }
                prop_assert_eq!(pin.parametrization.kernel_lattice(), p.kernel_lattice());
                // the homogeneity of the ideal is intrinsic
                prop_assert_eq!(
                    pin.parametrization.homogeneity_certificate().is_some(),
                    p.homogeneity_certificate().is_some()
                );
            }
            Err(_) => prop_assert!(p.matrix().column_is_zero(i)),
        }
    }

    #[test]
    fn certificate_exists_for_homogeneous_matrices(m in homogeneous_matrix(4, 5)) {
        let p = parametrization(m);
        let cert = p.homogeneity_certificate().expect("a row of ones certifies");
        prop_assert!(cert.verify(p.matrix()));
    }

    #[test]
    fn certificate_verifies_when_present(m in small_matrix(3, 4)) {
        let p = parametrization(m);
        if let Some(cert) = p.homogeneity_certificate() {
            prop_assert!(cert.verify(p.matrix()));
        }
    }

    #[test]
    fn lattice_round_trip(m in small_matrix(3, 5)) {
        let k = toric_core::linalg::kernel_lattice(&m);
        let p = Parametrization::from_lattice(&k);
        prop_assert_eq!(p.vars().len(), m.cols());
        prop_assert_eq!(p.kernel_lattice(), k);
    }

    #[test]
    fn dehomogenizing_a_pinned_variable(m in homogeneous_matrix(3, 4), seed in 0usize..4) {
        let p = parametrization(m);
        let i = seed % p.vars().len();
        let pin = p.normalize_pin(i).unwrap();
        let pinned = &pin.parametrization;
        let x = pinned.vars().name(i).to_string();
        let s = pinned.params().name(pin.pinned_param).to_string();
        let affine = pinned.dehomogenize(&x, &s).unwrap();
        let bound = DegreeBound::new(3, 2).unwrap();
        for b in enumerate_kernel_binomials(pinned, &bound) {
            prop_assert!(affine.contains_binomial(&b.dehomogenized(i)));
        }
        // move x to the end, then homogenize the affine kernel back
        let mut order: Vec<String> = affine.vars().names().to_vec();
        order.push(x.clone());
        let reordered = pinned
            .reorder_vars(&toric_core::VariableSet::new(&order).unwrap())
            .unwrap();
        for b in enumerate_kernel_binomials(&affine, &bound) {
            prop_assert!(reordered.contains_binomial(&b.homogenized()));
        }
    }
}

#[test]
fn twisted_cubic_basics() {
    let p = Parametrization::from_rows(
        &["t1", "t2"],
        &["x0", "x1", "x2", "x3"],
        &[[3, 2, 1, 0], [0, 1, 2, 3]],
    )
    .unwrap();
    assert_eq!(p.dimension(), 2);
    let omega: Vec<String> = p
        .homogeneity_certificate()
        .unwrap()
        .omega
        .iter()
        .map(ToString::to_string)
        .collect();
    assert_eq!(omega, ["1/3", "1/3"]);
}

#[test]
fn pin_on_the_conic() {
    let p = Parametrization::from_rows(&["t", "u"], &["x1", "x2", "x3"], &[[1, 1, 1], [0, 1, 2]]).unwrap();
    let pin = p.normalize_pin(2).unwrap();
    assert_eq!(pin.exponent, BigInt::from(2));
    assert_eq!(
        pin.parametrization.matrix(),
        &IntegerMatrix::from_rows(&[[0, 1, 2], [2, 1, 0]])
    );
    assert_eq!(pin.parametrization.kernel_lattice(), p.kernel_lattice());
}
