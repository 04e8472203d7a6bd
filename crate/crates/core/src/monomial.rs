//! Variables, monomials and binomials with `±1` coefficients.
//!
//! Exponent vectors are always interpreted against an ordered
//! [`VariableSet`]; a binomial `x^{u+} - x^{u-}` is stored as the pair of
//! exponent vectors with disjoint supports and a canonical sign, so that two
//! binomials generating the same principal ideal compare equal.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::param::Parametrization;

/// Ordered list of distinct variable (or parameter) names.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VariableSet {
    names: Vec<String>,
}

impl VariableSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut out = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            if out.iter().any(|m: &String| m == n) {
                return Err(Error::DuplicateName(n.to_string()));
            }
            out.push(n.to_string());
        }
        Ok(Self { names: out })
    }

    /// `prefix1, …, prefixN`.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        Self {
            names: (1..=n).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    /// Names present in both sets, in `self`'s order.
    pub fn intersection(&self, other: &Self) -> Vec<String> {
        self.names
            .iter()
            .filter(|n| other.contains(n))
            .cloned()
            .collect()
    }

    /// Appends a fresh name.
    pub fn push(&mut self, name: &str) -> Result<()> {
        if self.contains(name) {
            return Err(Error::NameNotFresh(name.to_string()));
        }
        self.names.push(name.to_string());
        Ok(())
    }

    pub fn without(&self, index: usize) -> Self {
        let mut names = self.names.clone();
        names.remove(index);
        Self { names }
    }

    pub fn prefixed(&self, prefix: &str) -> Self {
        Self {
            names: self.names.iter().map(|n| format!("{prefix}{n}")).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }
}

/// Exponent vector of a monomial `z^u`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(alloc::vec![0; n])
    }

    /// `|u| = Σ u_i`.
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn render(&self, vars: &VariableSet) -> String {
        render_monomial(&self.0, vars)
    }
}

fn render_monomial(exps: &[u32], vars: &VariableSet) -> String {
    let mut out = String::new();
    for (i, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        out.push_str(vars.name(i));
        if e > 1 {
            let _ = write!(out, "^{e}");
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// `x^{plus} - x^{minus}` with disjoint supports and canonical sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Binomial {
    plus: Vec<u32>,
    minus: Vec<u32>,
}

fn first_difference_negative(plus: &[u32], minus: &[u32]) -> bool {
    plus.iter()
        .zip(minus)
        .find(|(a, b)| a != b)
        .is_some_and(|(a, b)| a < b)
}

impl Binomial {
    /// Validates disjoint supports and puts the sides in canonical order.
    pub fn new(plus: Vec<u32>, minus: Vec<u32>) -> Result<Self> {
        if plus.len() != minus.len() {
            return Err(Error::DimensionMismatch {
                what: "binomial side length",
                expected: plus.len(),
                found: minus.len(),
            });
        }
        if plus.iter().zip(&minus).any(|(&a, &b)| a != 0 && b != 0) {
            return Err(Error::NonDisjointSupport);
        }
        Ok(Self::canonical(plus, minus).0)
    }

    fn canonical(plus: Vec<u32>, minus: Vec<u32>) -> (Self, bool) {
        if first_difference_negative(&plus, &minus) {
            (
                Self {
                    plus: minus,
                    minus: plus,
                },
                true,
            )
        } else {
            (Self { plus, minus }, false)
        }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            plus: alloc::vec![0; n],
            minus: alloc::vec![0; n],
        }
    }

    /// Splits `u` into its positive and negative parts.
    ///
    /// The flag is `true` when the canonical binomial is `x^{u-} - x^{u+}`,
    /// i.e. the sign of `u` had to be flipped.
    pub fn split_disjoint(u: &[i64]) -> Result<(Self, bool)> {
        let mut plus = Vec::with_capacity(u.len());
        let mut minus = Vec::with_capacity(u.len());
        for &x in u {
            let e = u32::try_from(x.unsigned_abs()).map_err(|_| Error::ExponentOverflow)?;
            if x >= 0 {
                plus.push(e);
                minus.push(0);
            } else {
                plus.push(0);
                minus.push(e);
            }
        }
        Ok(Self::canonical(plus, minus))
    }

    pub fn split_big(u: &[BigInt]) -> Result<(Self, bool)> {
        let small = u
            .iter()
            .map(|x| x.to_i64().ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Self::split_disjoint(&small)
    }

    /// Cancels the common factor of two monomials and returns the canonical
    /// binomial of their quotient.
    pub fn from_monomials(a: &[u32], b: &[u32]) -> Self {
        let (plus, minus) = a
            .iter()
            .zip(b)
            .map(|(&x, &y)| if x >= y { (x - y, 0) } else { (0, y - x) })
            .unzip();
        Self::canonical(plus, minus).0
    }

    pub fn num_vars(&self) -> usize {
        self.plus.len()
    }

    pub fn plus(&self) -> &[u32] {
        &self.plus
    }

    pub fn minus(&self) -> &[u32] {
        &self.minus
    }

    pub fn is_zero(&self) -> bool {
        self.plus.iter().chain(&self.minus).all(|&e| e == 0)
    }

    /// `u+ - u-`.
    pub fn difference(&self) -> Vec<i64> {
        self.plus
            .iter()
            .zip(&self.minus)
            .map(|(&a, &b)| i64::from(a) - i64::from(b))
            .collect()
    }

    pub fn difference_big(&self) -> Vec<BigInt> {
        self.difference().into_iter().map(BigInt::from).collect()
    }

    pub fn plus_degree(&self) -> u64 {
        self.plus.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn minus_degree(&self) -> u64 {
        self.minus.iter().map(|&e| u64::from(e)).sum()
    }

    /// Larger of the two side degrees.
    pub fn degree(&self) -> u64 {
        self.plus_degree().max(self.minus_degree())
    }

    /// `|u+| = |u-|`.
    pub fn is_balanced(&self) -> bool {
        self.plus_degree() == self.minus_degree()
    }

    /// Homogenization by a new last variable: the lower-degree side is
    /// multiplied by `x^{||u-| - |u+||}`.
    pub fn homogenized(&self) -> Self {
        let (dp, dm) = (self.plus_degree(), self.minus_degree());
        let gap = u32::try_from(dp.abs_diff(dm)).expect("degree gap fits in u32");
        let mut plus = self.plus.clone();
        let mut minus = self.minus.clone();
        if dp < dm {
            plus.push(gap);
            minus.push(0);
        } else {
            plus.push(0);
            minus.push(gap);
        }
        Self::canonical(plus, minus).0
    }

    /// Sets the variable at `index` to 1 and drops it.
    pub fn dehomogenized(&self, index: usize) -> Self {
        let mut plus = self.plus.clone();
        let mut minus = self.minus.clone();
        plus.remove(index);
        minus.remove(index);
        Self::canonical(plus, minus).0
    }

    /// Re-indexes the binomial from `from` to `to`, padding with zeros.
    /// Every variable of `from` with a nonzero exponent must exist in `to`.
    pub fn extended(&self, from: &VariableSet, to: &VariableSet) -> Result<Self> {
        let mut plus = alloc::vec![0; to.len()];
        let mut minus = alloc::vec![0; to.len()];
        for (i, name) in from.iter().enumerate() {
            if self.plus[i] == 0 && self.minus[i] == 0 {
                continue;
            }
            let j = to
                .index_of(name)
                .ok_or_else(|| Error::UnknownName(name.to_string()))?;
            plus[j] = self.plus[i];
            minus[j] = self.minus[i];
        }
        Ok(Self::canonical(plus, minus).0)
    }

    /// Renders as `z1^2*z2 - x^3` (exponent 1 omitted, the empty monomial
    /// as `1`).
    pub fn render(&self, vars: &VariableSet) -> String {
        assert_eq!(vars.len(), self.num_vars(), "variable set does not match binomial");
        format!(
            "{} - {}",
            render_monomial(&self.plus, vars),
            render_monomial(&self.minus, vars)
        )
    }

    /// Parses the textual form produced by [`Binomial::render`].
    ///
    /// Repeated factors accumulate (`x*x` is `x^2`). The two sides must have
    /// disjoint supports.
    pub fn parse(text: &str, vars: &VariableSet) -> Result<Self> {
        let mut sides = text.split('-');
        let (Some(lhs), Some(rhs), None) = (sides.next(), sides.next(), sides.next()) else {
            return Err(Error::Parse(format!(
                "expected `monomial - monomial`, got `{}`",
                text.trim()
            )));
        };
        let plus = parse_monomial(lhs, vars)?;
        let minus = parse_monomial(rhs, vars)?;
        Self::new(plus, minus)
    }
}

fn parse_monomial(text: &str, vars: &VariableSet) -> Result<Vec<u32>> {
    let text = text.trim();
    let mut exps = alloc::vec![0u32; vars.len()];
    if text.is_empty() {
        return Err(Error::Parse("empty monomial".to_string()));
    }
    if text == "1" {
        return Ok(exps);
    }
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let e = e.trim();
                let e: u32 = e
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent `{e}`")))?;
                (n.trim(), e)
            }
            None => (factor, 1),
        };
        let valid = name
            .chars()
            .next()
            .is_some_and(|c| c.is_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_alphanumeric() || c == '_');
        if !valid {
            return Err(Error::Parse(format!("bad factor `{factor}`")));
        }
        let i = vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))?;
        exps[i] = exps[i]
            .checked_add(exp)
            .ok_or(Error::ExponentOverflow)?;
    }
    Ok(exps)
}

/// `homogenize_binomial(b, x)` over named variables: returns the extended
/// variable set (with `x` appended) and the homogenized binomial.
pub fn homogenize_binomial(
    vars: &VariableSet,
    b: &Binomial,
    x: &str,
) -> Result<(VariableSet, Binomial)> {
    let mut out = vars.clone();
    out.push(x)?;
    Ok((out, b.homogenized()))
}

/// `dehomogenize_binomial(b, x)` over named variables.
pub fn dehomogenize_binomial(
    vars: &VariableSet,
    b: &Binomial,
    x: &str,
) -> Result<(VariableSet, Binomial)> {
    let i = vars
        .index_of(x)
        .ok_or_else(|| Error::UnknownName(x.to_string()))?;
    Ok((vars.without(i), b.dehomogenized(i)))
}

/// A binomial ideal given by generators, optionally with the parametrization
/// it is expected to be the kernel of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealPresentation {
    pub vars: VariableSet,
    pub generators: Vec<Binomial>,
    pub parametrization: Option<Parametrization>,
}

impl IdealPresentation {
    pub fn new(vars: VariableSet, generators: Vec<Binomial>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.num_vars() != vars.len()) {
            return Err(Error::DimensionMismatch {
                what: "generator length",
                expected: vars.len(),
                found: g.num_vars(),
            });
        }
        Ok(Self {
            vars,
            generators,
            parametrization: None,
        })
    }

    pub fn with_parametrization(mut self, p: Parametrization) -> Result<Self> {
        if p.vars() != &self.vars {
            return Err(Error::DimensionMismatch {
                what: "parametrization variables",
                expected: self.vars.len(),
                found: p.vars().len(),
            });
        }
        self.parametrization = Some(p);
        Ok(self)
    }

    /// Largest generator degree (0 without generators).
    pub fn max_degree(&self) -> u64 {
        self.generators.iter().map(Binomial::degree).max().unwrap_or(0)
    }
}
