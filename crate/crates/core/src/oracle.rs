//! Brute-force certification at small degree.
//!
//! Two independent tools: enumeration of kernel binomials by bucketing
//! monomials on their image, and a membership test for binomial ideals by
//! breadth-first monomial rewriting. For homogeneous generators rewriting
//! never leaves a graded piece, so the search is exhaustive and exact.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::monomial::Binomial;
use crate::param::Parametrization;
use crate::sum::SumConstruction;

/// Degree limits for the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeBound {
    max_degree: u32,
    search_slack: u32,
}

impl DegreeBound {
    pub const DEFAULT_SLACK: u32 = 2;

    pub fn new(max_degree: u32, search_slack: u32) -> Result<Self> {
        if max_degree == 0 {
            return Err(Error::InvalidDegreeBound);
        }
        Ok(Self {
            max_degree,
            search_slack,
        })
    }

    /// Largest generator degree plus two, slack two.
    pub fn for_generators(gens: &[Binomial]) -> Self {
        let top = gens.iter().map(Binomial::degree).max().unwrap_or(0);
        let top = u32::try_from(top).unwrap_or(u32::MAX - 2);
        Self {
            max_degree: top + 2,
            search_slack: Self::DEFAULT_SLACK,
        }
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn search_slack(&self) -> u32 {
        self.search_slack
    }
}

/// All exponent vectors of total degree `e` in `n` variables, in increasing
/// lexicographic order.
pub fn monomials_of_degree(n: usize, e: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if n == 0 {
        if e == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut current = vec![0u32; n];
    fill(&mut current, 0, e, &mut out);
    out
}

fn fill(current: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<Vec<u32>>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(current.to_vec());
        return;
    }
    for v in 0..=remaining {
        current[pos] = v;
        fill(current, pos + 1, remaining - v, out);
    }
    current[pos] = 0;
}

/// Order used for all oracle output: by degree, then larger leading side
/// first.
pub fn graded_order(a: &Binomial, b: &Binomial) -> Ordering {
    let key = |x: &Binomial| (x.degree(), Reverse(x.plus().to_vec()), Reverse(x.minus().to_vec()));
    key(a).cmp(&key(b))
}

/// Kernel binomials with both sides of degree at most `bound.max_degree()`.
///
/// Monomials are bucketed by their image `A·u`; every bucket member is paired
/// with the bucket's representative (the first member met in graded,
/// lexicographically increasing order) and the common factor is cancelled.
/// Since toric ideals are prime, cancelling a monomial factor keeps the
/// binomial in the ideal. The output is deduplicated and sorted by
/// [`graded_order`]. For a homogeneous parametrization every binomial of the
/// ideal up to the degree bound is a monomial multiple of one in the output.
pub fn enumerate_kernel_binomials(p: &Parametrization, bound: &DegreeBound) -> Vec<Binomial> {
    let n = p.vars().len();
    let mut reps: BTreeMap<Vec<BigInt>, Vec<u32>> = BTreeMap::new();
    let mut found: BTreeSet<(Vec<u32>, Vec<u32>)> = BTreeSet::new();
    for e in 0..=bound.max_degree {
        for m in monomials_of_degree(n, e) {
            let image = p.evaluate(&m);
            match reps.get(&image) {
                Some(rep) => {
                    let b = Binomial::from_monomials(rep, &m);
                    if !b.is_zero() {
                        found.insert((b.plus().to_vec(), b.minus().to_vec()));
                    }
                }
                None => {
                    reps.insert(image, m);
                }
            }
        }
    }
    let mut out: Vec<Binomial> = found
        .into_iter()
        .map(|(plus, minus)| Binomial::new(plus, minus).expect("canonical by construction"))
        .collect();
    out.sort_by(graded_order);
    out
}

/// One rewriting move: replace a divisor equal to one side of generator
/// `generator` by its other side (`forward`: plus side by minus side).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RewriteStep {
    pub generator: usize,
    pub forward: bool,
}

fn apply_move(m: &[u32], from: &[u32], to: &[u32]) -> Option<Vec<u32>> {
    if m.iter().zip(from).any(|(a, b)| a < b) {
        return None;
    }
    Some(
        m.iter()
            .zip(from)
            .zip(to)
            .map(|((&a, &f), &t)| a - f + t)
            .collect(),
    )
}

/// Applies `steps` to `start`; `None` if some move does not apply.
pub fn replay(start: &[u32], steps: &[RewriteStep], gens: &[Binomial]) -> Option<Vec<u32>> {
    let mut m = start.to_vec();
    for step in steps {
        let g = gens.get(step.generator)?;
        let (from, to) = if step.forward {
            (g.plus(), g.minus())
        } else {
            (g.minus(), g.plus())
        };
        m = apply_move(&m, from, to)?;
    }
    Some(m)
}

/// Breadth-first search for a rewriting chain from `x^{u+}` to `x^{u-}`.
///
/// With degree-balanced generators the search stays in the graded piece of
/// `b` and is exhaustive. Otherwise intermediate monomials are limited to
/// degree `deg(b) + search_slack`, and `None` only means "not found within
/// the bound".
pub fn rewrite_chain(
    b: &Binomial,
    gens: &[Binomial],
    bound: &DegreeBound,
) -> Option<Vec<RewriteStep>> {
    if b.is_zero() {
        return Some(Vec::new());
    }
    let active: Vec<usize> = (0..gens.len()).filter(|&i| !gens[i].is_zero()).collect();
    let balanced = active.iter().all(|&i| gens[i].is_balanced());
    if balanced && !b.is_balanced() {
        return None;
    }
    let cap = if balanced {
        b.plus_degree()
    } else {
        b.degree() + u64::from(bound.search_slack)
    };
    let degree = |m: &[u32]| m.iter().map(|&e| u64::from(e)).sum::<u64>();

    let start = b.plus().to_vec();
    let target = b.minus();
    let mut parent: BTreeMap<Vec<u32>, Option<(Vec<u32>, RewriteStep)>> = BTreeMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    while let Some(m) = queue.pop_front() {
        if m.as_slice() == target {
            let mut steps = Vec::new();
            let mut cur = m;
            while let Some(Some((prev, step))) = parent.get(&cur) {
                steps.push(*step);
                cur = prev.clone();
            }
            steps.reverse();
            return Some(steps);
        }
        for &i in &active {
            let g = &gens[i];
            for forward in [true, false] {
                let (from, to) = if forward {
                    (g.plus(), g.minus())
                } else {
                    (g.minus(), g.plus())
                };
                let Some(next) = apply_move(&m, from, to) else {
                    continue;
                };
                if degree(&next) > cap || parent.contains_key(&next) {
                    continue;
                }
                parent.insert(
                    next.clone(),
                    Some((
                        m.clone(),
                        RewriteStep {
                            generator: i,
                            forward,
                        },
                    )),
                );
                queue.push_back(next);
            }
        }
    }
    None
}

/// Membership of `b` in the ideal generated by `gens`, decided by
/// [`rewrite_chain`].
pub fn reduces_to_zero(b: &Binomial, gens: &[Binomial], bound: &DegreeBound) -> bool {
    rewrite_chain(b, gens, bound).is_some()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerdictStatus {
    EqualUpToDegree,
    /// A kernel binomial that the generators do not reach.
    MissingInSum(Binomial),
    /// A generator that is not in the kernel.
    MissingInKernel(Binomial),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificationVerdict {
    pub status: VerdictStatus,
    pub degree_checked: u32,
    /// `false` when some generator is unbalanced, in which case membership
    /// answers were only searched up to the slack bound.
    pub exact: bool,
}

impl CertificationVerdict {
    pub fn is_equal(&self) -> bool {
        self.status == VerdictStatus::EqualUpToDegree
    }
}

/// Checks that `gens` generate `Ker(p)` up to the degree bound: every
/// generator lies in the kernel, and every enumerated kernel binomial
/// rewrites to zero modulo `gens`. The first failure is returned as witness.
pub fn certify(p: &Parametrization, gens: &[Binomial], bound: &DegreeBound) -> CertificationVerdict {
    let exact = gens.iter().all(Binomial::is_balanced);
    let verdict = |status| CertificationVerdict {
        status,
        degree_checked: bound.max_degree,
        exact,
    };
    if let Some(g) = gens.iter().find(|g| !p.contains_binomial(g)) {
        return verdict(VerdictStatus::MissingInKernel(g.clone()));
    }
    for b in enumerate_kernel_binomials(p, bound) {
        if !reduces_to_zero(&b, gens, bound) {
            return verdict(VerdictStatus::MissingInSum(b));
        }
    }
    verdict(VerdictStatus::EqualUpToDegree)
}

/// [`certify`] for a two-ideal sum; both generator lists must already be
/// expressed over the result's variables.
pub fn certify_sum(
    construction: &SumConstruction,
    gens1: &[Binomial],
    gens2: &[Binomial],
    bound: &DegreeBound,
) -> CertificationVerdict {
    let mut all = gens1.to_vec();
    all.extend_from_slice(gens2);
    certify(&construction.result, &all, bound)
}
