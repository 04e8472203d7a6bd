#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use toric_core::oracle::monomials_of_degree;
use toric_core::{Binomial, IntegerMatrix, Parametrization, VariableSet};

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Matrices with `1..=max_rows` rows, `1..=max_cols` columns and entries in
/// `[-3, 3]`.
pub fn small_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = IntegerMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(m, n)| {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, n), m)
            .prop_map(move |rows| IntegerMatrix::from_rows_with_cols(&rows, n))
    })
}

/// Matrices whose last row is all ones, so every column is nonzero and the
/// ideal is homogeneous.
pub fn homogeneous_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = IntegerMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(m, n)| {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, n), m - 1).prop_map(
            move |mut rows| {
                rows.push(vec![1; n]);
                IntegerMatrix::from_rows_with_cols(&rows, n)
            },
        )
    })
}

pub fn parametrization(matrix: IntegerMatrix) -> Parametrization {
    Parametrization::new_allow_degenerate(
        VariableSet::numbered("t", matrix.rows()),
        VariableSet::numbered("x", matrix.cols()),
        matrix,
    )
    .unwrap()
}

pub fn named(matrix: IntegerMatrix, params: &[String], vars: &[String]) -> Parametrization {
    Parametrization::new(
        VariableSet::new(params).unwrap(),
        VariableSet::new(vars).unwrap(),
        matrix,
    )
    .unwrap()
}

/// Every integer vector with coordinates in `[-radius, radius]`.
pub fn box_vectors(n: usize, radius: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-radius..=radius).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.parent[ra] = rb;
    }
}

/// Equivalence classes of degree-`e` monomials under the moves of `gens`
/// (each generator multiplied by every monomial that keeps it in degree
/// `e`). Generators must be balanced.
pub fn graded_classes(n: usize, e: u32, gens: &[Binomial]) -> (Vec<Vec<u32>>, UnionFind) {
    let monomials = monomials_of_degree(n, e);
    let index: BTreeMap<Vec<u32>, usize> = monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let mut uf = UnionFind::new(monomials.len());
    for g in gens {
        let d = g.plus_degree() as u32;
        if g.is_zero() || d > e {
            continue;
        }
        for c in monomials_of_degree(n, e - d) {
            let lhs: Vec<u32> = g.plus().iter().zip(&c).map(|(a, b)| a + b).collect();
            let rhs: Vec<u32> = g.minus().iter().zip(&c).map(|(a, b)| a + b).collect();
            uf.union(index[&lhs], index[&rhs]);
        }
    }
    (monomials, uf)
}

pub fn same_class(n: usize, b: &Binomial, gens: &[Binomial]) -> bool {
    let e = b.plus_degree() as u32;
    let (monomials, mut uf) = graded_classes(n, e, gens);
    let i = monomials.iter().position(|m| m == b.plus()).unwrap();
    let j = monomials.iter().position(|m| m == b.minus()).unwrap();
    uf.find(i) == uf.find(j)
}
