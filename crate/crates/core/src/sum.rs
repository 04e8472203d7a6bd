//! Sums of toric ideals.
//!
//! Two homogeneous toric ideals sharing a single variable `x` are glued by
//! pinning `x` to a pure power of one parameter in each parametrization,
//! rescaling those parameter rows to a common exponent `γ` and assembling
//!
//! ```text
//! [ A1'  0   0 ]
//! [ 0    A2' 0 ]
//! [ α1   α2  γ ]
//! ```
//!
//! over disjoint parameters `t1_*`, `t2_*`, `s`. Ideals with disjoint
//! variables are combined block-diagonally, and families whose graph is a
//! forest are summed by peeling leaves.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::IdealFamilyGraph;
use crate::linalg::{rank, row_basis};
use crate::matrix::IntegerMatrix;
use crate::monomial::VariableSet;
use crate::oracle::{enumerate_kernel_binomials, DegreeBound};
use crate::param::{HomogeneityCertificate, Parametrization};

/// Name of the shared parameter introduced by [`sum_shared`].
pub const SHARED_PARAM: &str = "s";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumOptions {
    /// Degree bound for checking that the shared variable occurs in some
    /// kernel binomial of each input; `None` skips the check.
    pub witness_bound: Option<DegreeBound>,
}

impl Default for SumOptions {
    fn default() -> Self {
        Self {
            witness_bound: Some(DegreeBound::new(3, DegreeBound::DEFAULT_SLACK).expect("nonzero")),
        }
    }
}

/// Output of [`sum_shared`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumConstruction {
    pub result: Parametrization,
    /// `lcm(|γ1|, |γ2|)`, the exponent of `s` in the image of `x`.
    pub gamma: BigInt,
    /// `dim P1 + dim P2 - 1`.
    pub predicted_dimension: usize,
    /// `rank` of the assembled matrix.
    pub rank_dimension: usize,
    /// `(ω1, ω2, 1/γ)`.
    pub certificate: HomogeneityCertificate,
    pub warnings: Vec<String>,
}

/// A parametrization brought into the shape `[[head, 0], [alpha, gamma]]`
/// with the shared variable last.
struct Pinned {
    head: IntegerMatrix,
    head_params: VariableSet,
    alpha: Vec<BigInt>,
    gamma: BigInt,
    z_vars: VariableSet,
}

fn pin_shared(p: &Parametrization, x: &str) -> Result<Pinned> {
    let xi = p
        .vars()
        .index_of(x)
        .ok_or_else(|| Error::UnknownName(x.into()))?;
    if p.matrix().column_is_zero(xi) {
        return Err(Error::ZeroGamma { variable: x.into() });
    }
    let support: Vec<usize> = (0..p.matrix().rows())
        .filter(|&r| !p.matrix().get(r, xi).is_zero())
        .collect();
    // already pinned: keep the matrix as given
    let (pinned, j) = if support.len() == 1 && p.is_maximal_rank() {
        (p.clone(), support[0])
    } else {
        let pin = p.normalize_pin(xi)?;
        (pin.parametrization, pin.pinned_param)
    };
    let m = pinned.matrix();
    let head_rows: Vec<usize> = (0..m.rows()).filter(|&r| r != j).collect();
    let z_cols: Vec<usize> = (0..m.cols()).filter(|&c| c != xi).collect();
    let mut alpha: Vec<BigInt> = z_cols.iter().map(|&c| m.get(j, c).clone()).collect();
    let mut gamma = m.get(j, xi).clone();
    if gamma.is_negative() {
        gamma = -gamma;
        for a in &mut alpha {
            *a = -core::mem::take(a);
        }
    }
    let names: Vec<&str> = head_rows.iter().map(|&r| pinned.params().name(r)).collect();
    Ok(Pinned {
        head: m.select_rows(&head_rows).select_columns(&z_cols),
        head_params: VariableSet::new(&names)?,
        alpha,
        gamma,
        z_vars: pinned.vars().without(xi),
    })
}

/// The pinned block `[[head, 0], [alpha, gamma]]` as a matrix.
fn pinned_matrix(p: &Pinned) -> IntegerMatrix {
    let (m, n) = (p.head.rows(), p.head.cols());
    let mut out = IntegerMatrix::zeros(m + 1, n + 1);
    for r in 0..m {
        for c in 0..n {
            out.set(r, c, p.head.get(r, c).clone());
        }
    }
    for c in 0..n {
        out.set(m, c, p.alpha[c].clone());
    }
    out.set(m, n, p.gamma.clone());
    out
}

fn shared_variable_warning(p: &Parametrization, x: &str, label: &str, bound: &DegreeBound) -> Option<String> {
    let xi = p.vars().index_of(x)?;
    let hit = enumerate_kernel_binomials(p, bound)
        .iter()
        .any(|b| b.plus()[xi] != 0 || b.minus()[xi] != 0);
    (!hit).then(|| {
        format!(
            "{x} occurs in no kernel binomial of {label} up to degree {}",
            bound.max_degree()
        )
    })
}

/// Glues two homogeneous toric ideals along their unique shared variable.
pub fn sum_shared(p1: &Parametrization, p2: &Parametrization, x: &str) -> Result<SumConstruction> {
    sum_shared_with(p1, p2, x, &SumOptions::default())
}

pub fn sum_shared_with(
    p1: &Parametrization,
    p2: &Parametrization,
    x: &str,
    options: &SumOptions,
) -> Result<SumConstruction> {
    sum_shared_labeled(p1, "first ideal", p2, "second ideal", x, options)
}

fn sum_shared_labeled(
    p1: &Parametrization,
    label1: &str,
    p2: &Parametrization,
    label2: &str,
    x: &str,
    options: &SumOptions,
) -> Result<SumConstruction> {
    let shared = p1.vars().intersection(p2.vars());
    if shared.len() != 1 || shared[0] != x {
        return Err(Error::SharedVariableCount {
            expected_one_of: Some(x.into()),
            shared,
        });
    }
    for (p, label) in [(p1, label1), (p2, label2)] {
        if p.homogeneity_certificate().is_none() {
            return Err(Error::NotHomogeneous {
                ideal: label.into(),
            });
        }
    }

    let mut a = pin_shared(p1, x)?;
    let mut b = pin_shared(p2, x)?;
    let gamma = a.gamma.lcm(&b.gamma);
    for side in [&mut a, &mut b] {
        let factor = &gamma / &side.gamma;
        for v in &mut side.alpha {
            *v *= &factor;
        }
        side.gamma = gamma.clone();
    }

    let (m1, n1) = (a.head.rows(), a.head.cols());
    let (m2, n2) = (b.head.rows(), b.head.cols());
    let mut matrix = IntegerMatrix::zeros(m1 + m2 + 1, n1 + n2 + 1);
    for r in 0..m1 {
        for c in 0..n1 {
            matrix.set(r, c, a.head.get(r, c).clone());
        }
    }
    for r in 0..m2 {
        for c in 0..n2 {
            matrix.set(m1 + r, n1 + c, b.head.get(r, c).clone());
        }
    }
    let last = m1 + m2;
    for c in 0..n1 {
        matrix.set(last, c, a.alpha[c].clone());
    }
    for c in 0..n2 {
        matrix.set(last, n1 + c, b.alpha[c].clone());
    }
    matrix.set(last, n1 + n2, gamma.clone());

    let mut params: Vec<String> = a.head_params.prefixed("t1_").names().to_vec();
    params.extend(b.head_params.prefixed("t2_").names().iter().cloned());
    params.push(SHARED_PARAM.into());
    let mut vars: Vec<String> = a.z_vars.names().to_vec();
    vars.extend(b.z_vars.names().iter().cloned());
    vars.push(x.into());
    let result = Parametrization::new_allow_degenerate(
        VariableSet::new(&params)?,
        VariableSet::new(&vars)?,
        matrix,
    )?;
    let result = if p1.allows_degenerate() || p2.allows_degenerate() {
        result
    } else {
        Parametrization::new(result.params().clone(), result.vars().clone(), result.matrix().clone())?
    };

    // (ω1, ω2, 1/γ): each pinned block has full row rank, so its certificate
    // is unique and ends in 1/γ.
    let mut omega: Vec<BigRational> = Vec::with_capacity(m1 + m2 + 1);
    for (side, label) in [(&a, label1), (&b, label2)] {
        let block = Parametrization::new_allow_degenerate(
            VariableSet::numbered("r", side.head.rows() + 1),
            VariableSet::numbered("c", side.head.cols() + 1),
            pinned_matrix(side),
        )?;
        let cert = block
            .homogeneity_certificate()
            .ok_or_else(|| Error::NotHomogeneous {
                ideal: label.into(),
            })?;
        omega.extend(cert.omega[..side.head.rows()].iter().cloned());
    }
    omega.push(BigRational::new(BigInt::one(), gamma.clone()));
    let certificate = HomogeneityCertificate { omega };
    debug_assert!(certificate.verify(result.matrix()));

    let mut warnings = Vec::new();
    if let Some(bound) = &options.witness_bound {
        warnings.extend(shared_variable_warning(p1, x, label1, bound));
        warnings.extend(shared_variable_warning(p2, x, label2, bound));
    }

    Ok(SumConstruction {
        rank_dimension: result.dimension(),
        predicted_dimension: p1.dimension() + p2.dimension() - 1,
        result,
        gamma,
        certificate,
        warnings,
    })
}

/// Block-diagonal sum of parametrizations with pairwise disjoint variables.
///
/// Each input is first cut down to a greedy row basis, so the output has
/// maximal rank and its dimension is the sum of the input dimensions.
/// Parameters are kept when their names are already distinct, otherwise
/// every parameter of input `k` is renamed `p{k}_{name}`.
pub fn sum_disjoint(ps: &[Parametrization]) -> Result<Parametrization> {
    let mut vars: Vec<String> = Vec::new();
    for p in ps {
        for v in p.vars().iter() {
            if vars.iter().any(|w| w == v) {
                return Err(Error::OverlappingVariables { variable: v.into() });
            }
            vars.push(v.into());
        }
    }
    let reduced: Vec<(IntegerMatrix, VariableSet)> = ps
        .iter()
        .map(|p| {
            let rows = row_basis(p.matrix());
            let names: Vec<&str> = rows.iter().map(|&r| p.params().name(r)).collect();
            Ok((p.matrix().select_rows(&rows), VariableSet::new(&names)?))
        })
        .collect::<Result<_>>()?;

    let all_names: Vec<&str> = reduced.iter().flat_map(|(_, n)| n.iter()).collect();
    let params = match VariableSet::new(&all_names) {
        Ok(set) => set,
        Err(_) => {
            let renamed: Vec<String> = reduced
                .iter()
                .enumerate()
                .flat_map(|(k, (_, n))| n.prefixed(&format!("p{}_", k + 1)).names().to_vec())
                .collect();
            VariableSet::new(&renamed)?
        }
    };

    let total_rows: usize = reduced.iter().map(|(m, _)| m.rows()).sum();
    let mut matrix = IntegerMatrix::zeros(total_rows, vars.len());
    let (mut r0, mut c0) = (0, 0);
    for (m, _) in &reduced {
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                matrix.set(r0 + r, c0 + c, m.get(r, c).clone());
            }
        }
        r0 += m.rows();
        c0 += m.cols();
    }
    let vars = VariableSet::new(&vars)?;
    if ps.iter().all(|p| !p.allows_degenerate()) {
        Parametrization::new(params, vars, matrix)
    } else {
        Parametrization::new_allow_degenerate(params, vars, matrix)
    }
}

/// Summary numbers of a family sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    /// `k`
    pub ideal_count: usize,
    /// `r`
    pub component_count: usize,
    pub input_dimensions: Vec<usize>,
    /// Rank of the assembled matrix; the authoritative dimension.
    pub rank_dimension: usize,
    /// `Σ dim_i - (k - r)`, one per shared-variable merge.
    pub iterated_prediction: i64,
    /// `Σ dim_i + r - k + 1`.
    pub printed_formula: i64,
    pub warnings: Vec<String>,
}

impl FamilyReport {
    pub fn formula_mismatch(&self) -> bool {
        self.iterated_prediction != self.printed_formula
            || self.iterated_prediction != self.rank_dimension as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySum {
    pub result: Parametrization,
    pub report: FamilyReport,
}

/// Default peeling order for a tree component: repeatedly remove the
/// smallest-index leaf. Returns the peeled vertices; the last remaining
/// vertex is the root.
pub fn default_peel_order(graph: &IdealFamilyGraph, component: &[usize]) -> Vec<usize> {
    let mut remaining: Vec<usize> = component.to_vec();
    let mut order = Vec::new();
    while remaining.len() > 1 {
        let leaf = *remaining
            .iter()
            .find(|&&v| {
                graph
                    .neighbors(v)
                    .filter(|(w, _)| remaining.contains(w))
                    .count()
                    == 1
            })
            .expect("a tree with two or more vertices has a leaf");
        remaining.retain(|&v| v != leaf);
        order.push(leaf);
    }
    order
}

/// Checks `order` against the tree on `component` and returns, for each
/// peeled vertex, the variable it shares with the rest, plus the root.
fn validate_peel_order(
    graph: &IdealFamilyGraph,
    component: &[usize],
    order: &[usize],
) -> Result<(Vec<String>, usize)> {
    if order.len() + 1 != component.len() {
        return Err(Error::InvalidPeelOrder(format!(
            "expected {} peeled vertices, got {}",
            component.len() - 1,
            order.len()
        )));
    }
    let mut remaining: Vec<usize> = component.to_vec();
    let mut shared = Vec::with_capacity(order.len());
    for &v in order {
        if !remaining.contains(&v) {
            return Err(Error::InvalidPeelOrder(format!(
                "{} is not an unpeeled vertex of the component",
                graph.name(v)
            )));
        }
        let links: Vec<&str> = graph
            .neighbors(v)
            .filter(|(w, _)| remaining.contains(w))
            .map(|(_, x)| x)
            .collect();
        if links.len() != 1 {
            return Err(Error::InvalidPeelOrder(format!(
                "{} is not a leaf when peeled",
                graph.name(v)
            )));
        }
        shared.push(links[0].into());
        remaining.retain(|&w| w != v);
    }
    Ok((shared, remaining[0]))
}

fn sum_tree(
    members: &[(String, Parametrization)],
    graph: &IdealFamilyGraph,
    component: &[usize],
    order: &[usize],
    options: &SumOptions,
    warnings: &mut Vec<String>,
) -> Result<Parametrization> {
    let (shared, root) = validate_peel_order(graph, component, order)?;
    let mut acc = members[root].1.clone();
    let mut label = members[root].0.clone();
    let mut first = root;
    // the block holding the lower input index goes first
    for (&leaf, x) in order.iter().zip(&shared).rev() {
        let (leaf_name, leaf_p) = &members[leaf];
        let sum = if leaf < first {
            first = leaf;
            label = format!("{leaf_name}+{label}");
            sum_shared_labeled(leaf_p, leaf_name, &acc, &label, x, options)?
        } else {
            label = format!("{label}+{leaf_name}");
            sum_shared_labeled(&acc, &label, leaf_p, leaf_name, x, options)?
        };
        warnings.extend(sum.warnings);
        acc = sum.result;
    }
    Ok(acc)
}

/// Sums a family whose members form a single tree, peeling leaves in the
/// given order (vertex indices into `members`).
pub fn sum_tree_with_order(
    members: &[(String, Parametrization)],
    order: &[usize],
) -> Result<Parametrization> {
    let graph = family_graph(members)?;
    if graph.component_count() != 1 {
        return Err(Error::InvalidPeelOrder(format!(
            "family has {} components, expected one",
            graph.component_count()
        )));
    }
    graph.check_forest()?;
    check_homogeneous(members, &graph)?;
    let component = graph.components()[0].vertices.clone();
    let options = SumOptions {
        witness_bound: None,
    };
    sum_tree(members, &graph, &component, order, &options, &mut Vec::new())
}

fn family_graph(members: &[(String, Parametrization)]) -> Result<IdealFamilyGraph> {
    let vertices: Vec<(String, VariableSet)> = members
        .iter()
        .map(|(n, p)| (n.clone(), p.vars().clone()))
        .collect();
    IdealFamilyGraph::build(&vertices)
}

fn check_homogeneous(members: &[(String, Parametrization)], graph: &IdealFamilyGraph) -> Result<()> {
    for c in graph.components() {
        if c.vertices.len() < 2 {
            continue;
        }
        for &v in &c.vertices {
            if members[v].1.homogeneity_certificate().is_none() {
                return Err(Error::NotHomogeneous {
                    ideal: members[v].0.clone(),
                });
            }
        }
    }
    Ok(())
}

/// Sums a family of named parametrizations whose graph is a forest.
///
/// Each tree component is summed by leaf peeling with [`sum_shared`]; the
/// components are then combined with [`sum_disjoint`].
pub fn sum_family(members: &[(String, Parametrization)]) -> Result<FamilySum> {
    sum_family_with(members, &SumOptions::default())
}

pub fn sum_family_with(members: &[(String, Parametrization)], options: &SumOptions) -> Result<FamilySum> {
    let graph = family_graph(members)?;
    graph.check_forest()?;
    check_homogeneous(members, &graph)?;

    let mut warnings = Vec::new();
    let mut parts = Vec::with_capacity(graph.component_count());
    for c in graph.components() {
        let order = default_peel_order(&graph, &c.vertices);
        parts.push(sum_tree(members, &graph, &c.vertices, &order, options, &mut warnings)?);
    }
    let result = if parts.len() == 1 {
        parts.pop().expect("one part")
    } else {
        sum_disjoint(&parts)?
    };

    let input_dimensions: Vec<usize> = members.iter().map(|(_, p)| p.dimension()).collect();
    let total: i64 = input_dimensions.iter().map(|&d| d as i64).sum();
    let k = members.len() as i64;
    let r = graph.component_count() as i64;
    let report = FamilyReport {
        ideal_count: members.len(),
        component_count: graph.component_count(),
        input_dimensions,
        rank_dimension: rank(result.matrix()),
        iterated_prediction: total - (k - r),
        printed_formula: total + r - k + 1,
        warnings,
    };
    Ok(FamilySum { result, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::kernel_lattice;
    use crate::monomial::Binomial;
    use crate::oracle::{certify_sum, VerdictStatus};
    use alloc::string::ToString;
    use alloc::vec;

    fn quadric(params: &[&str], vars: &[&str], last: i64) -> Parametrization {
        Parametrization::from_rows(params, vars, &[[1, -1, 0], [last, last, last]]).unwrap()
    }

    #[test]
    fn glued_quadrics() {
        let p1 = quadric(&["t", "s"], &["z1", "z2", "x"], 1);
        let p2 = quadric(&["w", "s"], &["w1", "w2", "x"], 1);
        let s = sum_shared(&p1, &p2, "x").unwrap();
        assert_eq!(
            s.result.matrix(),
            &IntegerMatrix::from_rows(&[[1, -1, 0, 0, 0], [0, 0, 1, -1, 0], [1, 1, 1, 1, 1]])
        );
        assert_eq!(s.result.vars().names(), &["z1", "z2", "w1", "w2", "x"]);
        assert_eq!(s.result.params().names(), &["t1_t", "t2_w", "s"]);
        assert_eq!(s.gamma, BigInt::one());
        assert_eq!((s.predicted_dimension, s.rank_dimension), (3, 3));
        assert!(s.certificate.verify(s.result.matrix()));
        assert!(s.warnings.is_empty());
    }

    #[test]
    fn glued_quadrics_with_doubled_row() {
        let p1 = quadric(&["t", "s"], &["z1", "z2", "x"], 1);
        let p2 = quadric(&["w", "s"], &["w1", "w2", "x"], 2);
        let s = sum_shared(&p1, &p2, "x").unwrap();
        assert_eq!(s.gamma, BigInt::from(2));
        assert_eq!(
            s.result.matrix(),
            &IntegerMatrix::from_rows(&[[1, -1, 0, 0, 0], [0, 0, 1, -1, 0], [2, 2, 2, 2, 2]])
        );
        assert_eq!(s.rank_dimension, 3);
        assert!(s.certificate.verify(s.result.matrix()));
    }

    #[test]
    fn two_shared_variables_rejected() {
        let p1 = quadric(&["t", "s"], &["a", "b", "x"], 1);
        let p2 = quadric(&["w", "s"], &["a", "c", "x"], 1);
        let err = sum_shared(&p1, &p2, "x").unwrap_err();
        assert!(matches!(err, Error::SharedVariableCount { ref shared, .. } if shared.len() == 2));
    }

    #[test]
    fn non_homogeneous_rejected() {
        let p1 = Parametrization::from_rows(&["t"], &["z", "x"], &[[1, 2]]).unwrap();
        let p2 = quadric(&["w", "s"], &["w1", "w2", "x"], 1);
        assert_eq!(
            sum_shared(&p1, &p2, "x").unwrap_err(),
            Error::NotHomogeneous {
                ideal: "first ideal".into()
            }
        );
    }

    #[test]
    fn unpinned_inputs_are_normalized() {
        // x's column is (1, 1): pinning is needed before gluing
        let p1 = Parametrization::from_rows(&["a", "b"], &["z1", "z2", "x"], &[[2, 0, 1], [0, 2, 1]])
            .unwrap();
        let p2 = quadric(&["w", "s"], &["w1", "w2", "x"], 1);
        let s = sum_shared(&p1, &p2, "x").unwrap();
        assert!(s.certificate.verify(s.result.matrix()));
        assert_eq!(s.rank_dimension, p1.dimension() + p2.dimension() - 1);
        let v = s.result.vars().clone();
        let g1 = Binomial::parse("z1*z2 - x^2", &v).unwrap();
        let g2 = Binomial::parse("w1*w2 - x^2", &v).unwrap();
        assert!(s.result.contains_binomial(&g1) && s.result.contains_binomial(&g2));
        let verdict = certify_sum(&s, &[g1], &[g2], &DegreeBound::new(3, 2).unwrap());
        assert_eq!(verdict.status, VerdictStatus::EqualUpToDegree);
    }

    #[test]
    fn degenerate_shared_variable_warns() {
        // x ↦ s alone in an ideal with no binomial involving x
        let p1 = Parametrization::from_rows(&["t", "s"], &["z", "x"], &[[1, 0], [0, 1]]).unwrap();
        let p2 = quadric(&["w", "s"], &["w1", "w2", "x"], 1);
        let s = sum_shared(&p1, &p2, "x").unwrap();
        assert_eq!(s.warnings.len(), 1);
        assert!(s.warnings[0].contains("first ideal"));
    }

    #[test]
    fn disjoint_examples() {
        let p = Parametrization::from_rows(&["a", "b"], &["z1", "z2"], &[[1, -1], [1, 1]]).unwrap();
        let q = Parametrization::from_rows(&["a", "b"], &["w1", "w2"], &[[1, -1], [1, 1]]).unwrap();
        let s = sum_disjoint(&[p.clone(), q]).unwrap();
        assert_eq!((s.matrix().rows(), s.matrix().cols()), (4, 4));
        assert_eq!(s.dimension(), 4);
        assert_eq!(s.params().names(), &["p1_a", "p1_b", "p2_a", "p2_b"]);

        assert_eq!(sum_disjoint(core::slice::from_ref(&p)).unwrap(), p);
        let empty = sum_disjoint(&[]).unwrap();
        assert_eq!(empty.dimension(), 0);
        assert!(empty.vars().is_empty());

        assert_eq!(
            sum_disjoint(&[p.clone(), p]).unwrap_err(),
            Error::OverlappingVariables {
                variable: "z1".into()
            }
        );
    }

    #[test]
    fn disjoint_kernel_is_direct_sum() {
        let p = Parametrization::from_rows(&["a"], &["z1", "z2", "z3"], &[[1, 1, 1]]).unwrap();
        let q = Parametrization::from_rows(&["b", "c"], &["w1", "w2"], &[[1, 1], [2, 2]]).unwrap();
        let s = sum_disjoint(&[p.clone(), q.clone()]).unwrap();
        let mut gens: Vec<Vec<BigInt>> = Vec::new();
        for v in p.kernel_lattice().vectors() {
            let mut w = v.clone();
            w.extend([BigInt::zero(), BigInt::zero()]);
            gens.push(w);
        }
        for v in q.kernel_lattice().vectors() {
            let mut w = vec![BigInt::zero(); 3];
            w.extend(v.iter().cloned());
            gens.push(w);
        }
        let direct = crate::linalg::LatticeBasis::from_generators(5, &gens).unwrap();
        assert_eq!(kernel_lattice(s.matrix()), direct);
    }

    fn path_family() -> Vec<(String, Parametrization)> {
        vec![
            ("I1".to_string(), quadric(&["t", "s"], &["z1", "z2", "x"], 1)),
            (
                "I2".to_string(),
                Parametrization::from_rows(
                    &["u1", "u2"],
                    &["w1", "x", "y", "w2"],
                    &[[3, 2, 1, 0], [0, 1, 2, 3]],
                )
                .unwrap(),
            ),
            ("I3".to_string(), quadric(&["v", "s"], &["v1", "v2", "y"], 1)),
        ]
    }

    #[test]
    fn family_path() {
        let fam = sum_family(&path_family()).unwrap();
        let r = &fam.report;
        assert_eq!(r.rank_dimension, 4);
        assert_eq!(r.iterated_prediction, 4);
        assert_eq!(r.printed_formula, 5);
        assert!(r.formula_mismatch());
        assert!(r.warnings.is_empty());
        assert!(fam.result.homogeneity_certificate().is_some());
    }

    #[test]
    fn family_single_ideal() {
        let fam = sum_family(&path_family()[..1]).unwrap();
        assert_eq!(fam.result, path_family()[0].1);
        assert_eq!(fam.report.rank_dimension, 2);
        assert_eq!(fam.report.iterated_prediction, 2);
    }

    #[test]
    fn family_triangle_rejected() {
        let fam = vec![
            ("I1".to_string(), quadric(&["t", "s"], &["a1", "a2", "x"], 1)),
            ("I2".to_string(), quadric(&["t", "s"], &["b1", "b2", "x"], 1)),
            ("I3".to_string(), quadric(&["t", "s"], &["c1", "c2", "x"], 1)),
        ];
        assert!(matches!(sum_family(&fam), Err(Error::Cycle { vertices }) if vertices.len() == 3));
    }

    #[test]
    fn family_two_components() {
        let mut fam = path_family();
        fam.push((
            "J".to_string(),
            Parametrization::from_rows(&["t", "s"], &["a", "b"], &[[1, 0], [1, 1], ]).unwrap(),
        ));
        let out = sum_family(&fam).unwrap();
        assert_eq!(out.report.component_count, 2);
        assert_eq!(out.report.rank_dimension, 4 + 2);
        assert_eq!(out.report.iterated_prediction, 6);
    }

    #[test]
    fn peel_order_validation() {
        let fam = path_family();
        // I2 is not a leaf at the start
        assert!(matches!(
            sum_tree_with_order(&fam, &[1, 0]),
            Err(Error::InvalidPeelOrder(_))
        ));
        assert!(sum_tree_with_order(&fam, &[2, 1]).is_ok());
        assert!(sum_tree_with_order(&fam, &[0]).is_err());
    }
}
