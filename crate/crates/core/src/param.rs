//! Monomial parametrizations `x_i ↦ t^{α_i}` and the single-ideal
//! constructions built on them.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    extend_to_basis, inverse_and_clear, kernel_lattice, rank, row_basis, solve_row_rational,
    LatticeBasis,
};
use crate::matrix::{IntegerMatrix, RationalMatrix};
use crate::monomial::{Binomial, VariableSet};

/// A parametrization of a toric ideal: parameter names `t` (the rows),
/// variable names `x` (the columns) and the integer matrix `A` whose column
/// `i` is the exponent vector of `x_i`'s image.
///
/// Zero columns (variables sent to the constant 1) are rejected unless the
/// parametrization was built with [`Parametrization::new_allow_degenerate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parametrization {
    params: VariableSet,
    vars: VariableSet,
    matrix: IntegerMatrix,
    allow_degenerate: bool,
}

/// `ω` with `α_i · ω = 1` for every nonzero column `α_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneityCertificate {
    pub omega: Vec<BigRational>,
}

impl HomogeneityCertificate {
    pub fn verify(&self, matrix: &IntegerMatrix) -> bool {
        if self.omega.len() != matrix.rows() {
            return false;
        }
        (0..matrix.cols())
            .filter(|&c| !matrix.column_is_zero(c))
            .all(|c| {
                let dot = (0..matrix.rows()).fold(BigRational::zero(), |acc, r| {
                    acc + &self.omega[r] * BigRational::from_integer(matrix.get(r, c).clone())
                });
                dot.is_one()
            })
    }
}

/// A maximal-rank parametrization in which the pinned variable maps to
/// `t_j^q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PinResult {
    pub parametrization: Parametrization,
    pub pinned_param: usize,
    pub exponent: BigInt,
}

impl Parametrization {
    pub fn new(params: VariableSet, vars: VariableSet, matrix: IntegerMatrix) -> Result<Self> {
        let p = Self::new_allow_degenerate(params, vars, matrix)?;
        if let Some(c) = (0..p.matrix.cols()).find(|&c| p.matrix.column_is_zero(c)) {
            return Err(Error::ZeroColumn { column: c });
        }
        Ok(Self {
            allow_degenerate: false,
            ..p
        })
    }

    pub fn new_allow_degenerate(
        params: VariableSet,
        vars: VariableSet,
        matrix: IntegerMatrix,
    ) -> Result<Self> {
        if matrix.rows() != params.len() {
            return Err(Error::DimensionMismatch {
                what: "matrix rows vs parameters",
                expected: params.len(),
                found: matrix.rows(),
            });
        }
        if matrix.cols() != vars.len() {
            return Err(Error::DimensionMismatch {
                what: "matrix columns vs variables",
                expected: vars.len(),
                found: matrix.cols(),
            });
        }
        Ok(Self {
            params,
            vars,
            matrix,
            allow_degenerate: true,
        })
    }

    /// Convenience constructor from name slices and machine-integer rows.
    pub fn from_rows<R: AsRef<[i64]>>(params: &[&str], vars: &[&str], rows: &[R]) -> Result<Self> {
        Self::new(
            VariableSet::new(params)?,
            VariableSet::new(vars)?,
            IntegerMatrix::from_rows_with_cols(rows, vars.len()),
        )
    }

    pub fn params(&self) -> &VariableSet {
        &self.params
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn matrix(&self) -> &IntegerMatrix {
        &self.matrix
    }

    pub fn allows_degenerate(&self) -> bool {
        self.allow_degenerate
    }

    /// Some variable maps to the constant monomial.
    pub fn is_degenerate(&self) -> bool {
        (0..self.matrix.cols()).any(|c| self.matrix.column_is_zero(c))
    }

    /// The same parametrization with parameters renamed.
    pub fn with_params(&self, params: VariableSet) -> Result<Self> {
        if params.len() != self.params.len() {
            return Err(Error::DimensionMismatch {
                what: "parameter count",
                expected: self.params.len(),
                found: params.len(),
            });
        }
        Ok(Self {
            params,
            ..self.clone()
        })
    }

    /// Columns permuted into the order of `order`, which must name the same
    /// variables.
    pub fn reorder_vars(&self, order: &VariableSet) -> Result<Self> {
        if order.len() != self.vars.len() {
            return Err(Error::DimensionMismatch {
                what: "variable count",
                expected: self.vars.len(),
                found: order.len(),
            });
        }
        let cols = order
            .iter()
            .map(|n| {
                self.vars
                    .index_of(n)
                    .ok_or_else(|| Error::UnknownName(n.into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            params: self.params.clone(),
            vars: order.clone(),
            matrix: self.matrix.select_columns(&cols),
            allow_degenerate: self.allow_degenerate,
        })
    }

    /// `A·u`: the exponent vector of the image of `x^u`.
    pub fn evaluate(&self, u: &[u32]) -> Vec<BigInt> {
        let u: Vec<BigInt> = u.iter().map(|&e| BigInt::from(e)).collect();
        self.matrix.mul_vec(&u)
    }

    /// `A·u+ = A·u-`.
    pub fn contains_binomial(&self, b: &Binomial) -> bool {
        assert_eq!(b.num_vars(), self.vars.len(), "binomial over the wrong variables");
        self.matrix.mul_vec(&b.difference_big()).iter().all(Zero::is_zero)
    }

    /// Krull dimension of the quotient, i.e. `rank A`.
    pub fn dimension(&self) -> usize {
        rank(&self.matrix)
    }

    pub fn is_maximal_rank(&self) -> bool {
        self.dimension() == self.params.len()
    }

    pub fn kernel_lattice(&self) -> LatticeBasis {
        kernel_lattice(&self.matrix)
    }

    /// Solves `ω·A = (1, …, 1)` on the nonzero columns. Present exactly when
    /// the ideal is homogeneous for the standard grading.
    pub fn homogeneity_certificate(&self) -> Option<HomogeneityCertificate> {
        let mask: Vec<usize> = (0..self.matrix.cols())
            .filter(|&c| !self.matrix.column_is_zero(c))
            .collect();
        let ones = alloc::vec![BigRational::one(); self.matrix.cols()];
        solve_row_rational(&self.matrix, &ones, &mask)
            .expect("mask and right-hand side are in range")
            .map(|omega| HomogeneityCertificate { omega })
    }

    /// `c·Q·A` with `c` the least positive integer making it integral.
    /// Returns the new parametrization and `c`.
    pub fn reparametrize(&self, q: &RationalMatrix) -> Result<(Self, BigInt)> {
        let m = self.params.len();
        if q.rows() != m || q.cols() != m {
            return Err(Error::DimensionMismatch {
                what: "change-of-basis matrix size",
                expected: m,
                found: if q.rows() != m { q.rows() } else { q.cols() },
            });
        }
        if !q.is_nonsingular() {
            return Err(Error::Singular);
        }
        let product = q.mul_integer(&self.matrix);
        let c = product.denominator_lcm();
        let matrix = product
            .scaled_to_integer(&c)
            .expect("lcm of denominators clears the product");
        Ok((
            Self {
                matrix,
                ..self.clone()
            },
            c,
        ))
    }

    /// Maximal-rank re-parametrization sending variable `i` to a pure power
    /// `t_j^q` of a single parameter.
    ///
    /// Keeps a greedy row basis (increasing row index), extends column `i` to
    /// a nonsingular column basis `A_S` (with `i` first), and returns
    /// `q·A_S⁻¹·A` for the least `q` making the product integral. The pinned
    /// parameter is therefore always the first one; parameters keep the names
    /// of the retained rows.
    pub fn normalize_pin(&self, i: usize) -> Result<PinResult> {
        if i >= self.vars.len() {
            return Err(Error::ColumnOutOfRange {
                column: i,
                cols: self.vars.len(),
            });
        }
        if self.matrix.column_is_zero(i) {
            return Err(Error::ZeroColumn { column: i });
        }
        let rows = row_basis(&self.matrix);
        let reduced = self.matrix.select_rows(&rows);
        let columns = extend_to_basis(&reduced, i)?;
        let (inv, _) = inverse_and_clear(&reduced.select_columns(&columns))?;
        let product = inv.mul_integer(&reduced);
        let q = product.denominator_lcm();
        let matrix = product
            .scaled_to_integer(&q)
            .expect("lcm of denominators clears the product");
        let names: Vec<&str> = rows.iter().map(|&r| self.params.name(r)).collect();
        let parametrization = Self {
            params: VariableSet::new(&names)?,
            vars: self.vars.clone(),
            matrix,
            allow_degenerate: self.allow_degenerate,
        };
        Ok(PinResult {
            parametrization,
            pinned_param: 0,
            exponent: q,
        })
    }

    /// Drops variable `x` and parameter `s`, where `x ↦ s^γ` with `γ ≠ 0`.
    ///
    /// The remaining block is the parametrization of the dehomogenized
    /// ideal. The result may contain zero columns (variables that only
    /// involved `s`), so it allows degeneracy.
    pub fn dehomogenize(&self, x: &str, s: &str) -> Result<Self> {
        let xi = self
            .vars
            .index_of(x)
            .ok_or_else(|| Error::UnknownName(x.into()))?;
        let si = self
            .params
            .index_of(s)
            .ok_or_else(|| Error::UnknownName(s.into()))?;
        if (0..self.matrix.rows()).any(|r| r != si && !self.matrix.get(r, xi).is_zero()) {
            return Err(Error::NotPinnedShape { variable: x.into() });
        }
        if self.matrix.get(si, xi).is_zero() {
            return Err(Error::ZeroGamma { variable: x.into() });
        }
        let rows: Vec<usize> = (0..self.matrix.rows()).filter(|&r| r != si).collect();
        let cols: Vec<usize> = (0..self.matrix.cols()).filter(|&c| c != xi).collect();
        Self::new_allow_degenerate(
            self.params.without(si),
            self.vars.without(xi),
            self.matrix.select_rows(&rows).select_columns(&cols),
        )
    }

    /// A parametrization whose integer kernel is the saturation of `b`.
    ///
    /// The rows are the canonical integer basis of the left annihilator of
    /// `B`; variables are named `x1..xn`, parameters `t1..tm`.
    pub fn from_lattice(b: &LatticeBasis) -> Self {
        let n = b.ambient_dim();
        let annihilator = kernel_lattice(&b.row_matrix());
        let matrix = annihilator.row_matrix();
        Self {
            params: VariableSet::numbered("t", matrix.rows()),
            vars: VariableSet::numbered("x", n),
            matrix,
            allow_degenerate: true,
        }
    }
}
