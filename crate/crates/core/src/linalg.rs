//! Exact linear algebra over ℤ and ℚ.
//!
//! Everything here works on [`IntegerMatrix`] values with arbitrary-precision
//! entries; intermediate growth in the normal-form computations is never
//! truncated. The matrices met in practice are small, so the algorithms are
//! the textbook ones driven by extended-gcd row and column operations.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{IntegerMatrix, RationalMatrix};

/// Extended Euclid: returns `(g, s, t)` with `s·a + t·b = g = gcd(a, b) ≥ 0`.
pub fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = &old_r / &r;
        let next_r = &old_r - &q * &r;
        old_r = core::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = core::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = core::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Unimodular 2x2 transform `[[s, t], [-b/g, a/g]]` that maps `(a, b)` to `(g, 0)`.
fn gcd_transform(a: &BigInt, b: &BigInt) -> [BigInt; 4] {
    // plain elimination when possible, so the pivot line is never swapped out
    if !a.is_zero() && b.is_multiple_of(a) {
        return [BigInt::one(), BigInt::zero(), -(b / a), BigInt::one()];
    }
    let (g, s, t) = extended_gcd(a, b);
    [s, t, -(b / &g), a / &g]
}

/// Replaces rows `r`, `i` by `(x0·row_r + x1·row_i, x2·row_r + x3·row_i)`.
fn combine_rows(m: &mut IntegerMatrix, r: usize, i: usize, x: &[BigInt; 4]) {
    for c in 0..m.cols() {
        let a = m.get(r, c).clone();
        let b = m.get(i, c).clone();
        m.set(r, c, &x[0] * &a + &x[1] * &b);
        m.set(i, c, &x[2] * &a + &x[3] * &b);
    }
}

/// Replaces columns `c`, `j` by `(x0·col_c + x1·col_j, x2·col_c + x3·col_j)`.
fn combine_cols(m: &mut IntegerMatrix, c: usize, j: usize, x: &[BigInt; 4]) {
    for r in 0..m.rows() {
        let a = m.get(r, c).clone();
        let b = m.get(r, j).clone();
        m.set(r, c, &x[0] * &a + &x[1] * &b);
        m.set(r, j, &x[2] * &a + &x[3] * &b);
    }
}

/// `row_i -= factor · row_r`
fn sub_row_multiple(m: &mut IntegerMatrix, i: usize, r: usize, factor: &BigInt) {
    for c in 0..m.cols() {
        let v = m.get(r, c) * factor;
        *m.get_mut(i, c) -= v;
    }
}

/// Row-style Hermite normal form.
///
/// Returns `(H, U)` with `U` unimodular and `U·M = H`. `H` is upper echelon,
/// every pivot is positive and the entries above a pivot lie in `[0, pivot)`.
pub fn hermite_normal_form(m: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix) {
    let rows = m.rows();
    let mut h = m.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut r = 0;
    for c in 0..m.cols() {
        if r == rows {
            break;
        }
        for i in r + 1..rows {
            if h.get(i, c).is_zero() {
                continue;
            }
            let x = gcd_transform(h.get(r, c), h.get(i, c));
            combine_rows(&mut h, r, i, &x);
            combine_rows(&mut u, r, i, &x);
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        let pivot = h.get(r, c).clone();
        for i in 0..r {
            let q = h.get(i, c).div_floor(&pivot);
            if !q.is_zero() {
                sub_row_multiple(&mut h, i, r, &q);
                sub_row_multiple(&mut u, i, r, &q);
            }
        }
        r += 1;
    }
    (h, u)
}

/// `D = P·M·Q` with `P`, `Q` unimodular and `D` diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub d: IntegerMatrix,
    pub p: IntegerMatrix,
    pub q: IntegerMatrix,
}

impl SmithDecomposition {
    /// The diagonal entries `d_1 | d_2 | … | d_min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|v| !v.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut p = IntegerMatrix::identity(rows);
    let mut q = IntegerMatrix::identity(cols);

    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let v = d.get(i, j);
                if v.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| v.abs() < d.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        d.swap_rows(t, bi);
        p.swap_rows(t, bi);
        d.swap_cols(t, bj);
        q.swap_cols(t, bj);

        loop {
            for i in t + 1..rows {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let x = gcd_transform(d.get(t, t), d.get(i, t));
                combine_rows(&mut d, t, i, &x);
                combine_rows(&mut p, t, i, &x);
            }
            for j in t + 1..cols {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let x = gcd_transform(d.get(t, t), d.get(t, j));
                combine_cols(&mut d, t, j, &x);
                combine_cols(&mut q, t, j, &x);
            }
            if (t + 1..rows).any(|i| !d.get(i, t).is_zero()) {
                continue;
            }
            let pivot = d.get(t, t).clone();
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !d.get(i, j).is_multiple_of(&pivot))
            });
            match offender {
                Some(i) => {
                    // row_t += row_i, then clear again
                    let minus_one = -BigInt::one();
                    sub_row_multiple(&mut d, t, i, &minus_one);
                    sub_row_multiple(&mut p, t, i, &minus_one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            p.negate_row(t);
        }
        t += 1;
    }
    SmithDecomposition { d, p, q }
}

/// Rank over ℚ, by fraction-free elimination with content removal.
pub fn rank(m: &IntegerMatrix) -> usize {
    let mut a = m.clone();
    let rows = a.rows();
    let mut r = 0;
    for c in 0..a.cols() {
        if r == rows {
            break;
        }
        let Some(pivot_row) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(r, pivot_row);
        for i in r + 1..rows {
            if a.get(i, c).is_zero() {
                continue;
            }
            let p = a.get(r, c).clone();
            let f = a.get(i, c).clone();
            for j in c..a.cols() {
                let v = &p * a.get(i, j) - &f * a.get(r, j);
                a.set(i, j, v);
            }
            let content = a
                .row(i)
                .iter()
                .fold(BigInt::zero(), |g, v| g.gcd(v));
            if content > BigInt::one() {
                for v in a.row_mut(i) {
                    *v /= &content;
                }
            }
        }
        r += 1;
    }
    r
}

/// Indices of a maximal set of independent rows, chosen greedily in
/// increasing index order.
pub fn row_basis(m: &IntegerMatrix) -> Vec<usize> {
    let mut kept: Vec<usize> = Vec::new();
    for r in 0..m.rows() {
        let mut candidate = kept.clone();
        candidate.push(r);
        if rank(&m.select_rows(&candidate)) == candidate.len() {
            kept = candidate;
        }
    }
    kept
}

/// A sublattice of `ℤ^n`, stored canonically.
///
/// The stored vectors are the nonzero rows of the Hermite normal form of any
/// generating set (equivalently, the columns of the column-style HNF of the
/// basis matrix `B`). Two lattices are equal exactly when their
/// representations are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeBasis {
    ambient_dim: usize,
    vectors: Vec<Vec<BigInt>>,
}

impl LatticeBasis {
    /// The lattice spanned by `generators` (which need not be independent).
    pub fn from_generators(ambient_dim: usize, generators: &[Vec<BigInt>]) -> Result<Self> {
        let g = IntegerMatrix::from_big_rows(generators, ambient_dim)?;
        let (h, _) = hermite_normal_form(&g);
        let vectors = (0..h.rows())
            .map(|r| h.row(r).to_vec())
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        Ok(Self {
            ambient_dim,
            vectors,
        })
    }

    pub fn from_i64(ambient_dim: usize, generators: &[&[i64]]) -> Result<Self> {
        let g: Vec<Vec<BigInt>> = generators
            .iter()
            .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_generators(ambient_dim, &g)
    }

    pub fn empty(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            vectors: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Basis vectors as the rows of a `rank x n` matrix.
    pub fn row_matrix(&self) -> IntegerMatrix {
        IntegerMatrix::from_big_rows(&self.vectors, self.ambient_dim)
            .expect("basis vectors have ambient length")
    }

    /// Basis vectors as the columns of an `n x rank` matrix `B`.
    pub fn column_matrix(&self) -> IntegerMatrix {
        self.row_matrix().transpose()
    }

    /// Exact membership test against the echelon basis.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        let mut rest = v.to_vec();
        for b in &self.vectors {
            let p = b.iter().position(|x| !x.is_zero()).expect("nonzero basis vector");
            let (coef, rem) = rest[p].div_rem(&b[p]);
            if !rem.is_zero() {
                return false;
            }
            if !coef.is_zero() {
                for (x, y) in rest.iter_mut().zip(b) {
                    *x -= &coef * y;
                }
            }
        }
        rest.iter().all(Zero::is_zero)
    }

    pub fn contains_i64(&self, v: &[i64]) -> bool {
        let v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.contains(&v)
    }
}

/// `{u ∈ ℤ^n : M·u = 0}` in canonical form.
///
/// The basis comes from the unimodular transform of the HNF of `Mᵀ`: the rows
/// of `U` that map to zero rows of `H` span the integer kernel exactly.
pub fn kernel_lattice(m: &IntegerMatrix) -> LatticeBasis {
    let n = m.cols();
    let (h, u) = hermite_normal_form(&m.transpose());
    let nonzero = (0..h.rows())
        .filter(|&r| h.row(r).iter().any(|x| !x.is_zero()))
        .count();
    let generators: Vec<Vec<BigInt>> = (nonzero..n).map(|r| u.row(r).to_vec()).collect();
    LatticeBasis::from_generators(n, &generators).expect("kernel vectors have length n")
}

/// `span_ℚ(B) ∩ ℤ^n`, computed as the kernel of the integer left-annihilator
/// of `B`.
pub fn saturate_lattice(b: &LatticeBasis) -> LatticeBasis {
    let annihilator = kernel_lattice(&b.row_matrix());
    kernel_lattice(&annihilator.row_matrix())
}

/// Finds `ω` with `(ω·A)_k = b_k` for every column `k` in `mask`.
///
/// `b` is indexed by column and must have `A.cols()` entries; entries outside
/// the mask are ignored. Returns `Ok(None)` for an inconsistent system. The
/// solution is the reduced-echelon particular solution with every free
/// coordinate set to zero.
pub fn solve_row_rational(
    a: &IntegerMatrix,
    b: &[BigRational],
    mask: &[usize],
) -> Result<Option<Vec<BigRational>>> {
    if b.len() != a.cols() {
        return Err(Error::DimensionMismatch {
            what: "right-hand side length",
            expected: a.cols(),
            found: b.len(),
        });
    }
    if let Some(&c) = mask.iter().find(|&&c| c >= a.cols()) {
        return Err(Error::ColumnOutOfRange {
            column: c,
            cols: a.cols(),
        });
    }
    let m = a.rows();
    // one equation per masked column: Σ_j ω_j A[j][k] = b_k
    let mut sys: Vec<Vec<BigRational>> = mask
        .iter()
        .map(|&k| {
            let mut eq: Vec<BigRational> = (0..m)
                .map(|j| BigRational::from_integer(a.get(j, k).clone()))
                .collect();
            eq.push(b[k].clone());
            eq
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m {
        let Some(p) = (r..sys.len()).find(|&i| !sys[i][c].is_zero()) else {
            continue;
        };
        sys.swap(r, p);
        let inv = sys[r][c].recip();
        for v in sys[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..sys.len() {
            if i == r || sys[i][c].is_zero() {
                continue;
            }
            let f = sys[i][c].clone();
            for j in 0..=m {
                let s = &f * &sys[r][j];
                sys[i][j] -= s;
            }
        }
        pivots.push(c);
        r += 1;
    }
    if sys[r..].iter().any(|eq| !eq[m].is_zero()) {
        return Ok(None);
    }
    let mut omega = vec![BigRational::zero(); m];
    for (row, &c) in pivots.iter().enumerate() {
        omega[c] = sys[row][m].clone();
    }
    Ok(Some(omega))
}

/// Greedy column selection starting from `seed`: scans the remaining columns
/// in increasing index order and keeps a column iff it raises the rank.
///
/// The seed columns come first in the output, followed by the accepted
/// columns in scan order.
pub fn greedy_column_basis(a: &IntegerMatrix, seed: &[usize]) -> Vec<usize> {
    let mut chosen = seed.to_vec();
    let mut current = rank(&a.select_columns(&chosen));
    for c in 0..a.cols() {
        if current == a.rows() {
            break;
        }
        if chosen.contains(&c) {
            continue;
        }
        chosen.push(c);
        let r = rank(&a.select_columns(&chosen));
        if r > current {
            current = r;
        } else {
            chosen.pop();
        }
    }
    chosen
}

/// Extends column `i` of a full-row-rank `A` to a set of `rows` columns whose
/// submatrix is nonsingular over ℚ.
///
/// The result starts with `i`; the remaining columns follow in increasing
/// index order.
pub fn extend_to_basis(a: &IntegerMatrix, i: usize) -> Result<Vec<usize>> {
    if i >= a.cols() {
        return Err(Error::ColumnOutOfRange {
            column: i,
            cols: a.cols(),
        });
    }
    if a.column_is_zero(i) {
        return Err(Error::ZeroColumn { column: i });
    }
    let r = rank(a);
    if r < a.rows() {
        return Err(Error::RankDeficient { rank: r, rows: a.rows() });
    }
    Ok(greedy_column_basis(a, &[i]))
}

/// Inverse of a nonsingular square integer matrix, together with the least
/// common multiple of the inverse's denominators.
pub fn inverse_and_clear(a: &IntegerMatrix) -> Result<(RationalMatrix, BigInt)> {
    let inv = a.to_rational().inverse()?;
    let q = inv.denominator_lcm();
    Ok((inv, q))
}
