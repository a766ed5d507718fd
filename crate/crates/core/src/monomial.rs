//! Monomials as exponent vectors and monomial ideals.
//!
//! A monomial in `d` variables is a vector of `d` checked unsigned exponents.
//! Divisibility, gcd and lcm are entrywise; products are checked sums. The
//! canonical order everywhere is graded lexicographic: total degree first,
//! then lexicographic on exponents.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial, stored as its exponent vector.
///
/// The variable set is `x_1 .. x_d` in human-readable output; array positions
/// are zero-based.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    /// The monomial 1 in `d` variables.
    pub fn one(d: usize) -> Self {
        ExponentVector(vec![0; d])
    }

    /// The variable `x_{i+1}`, i.e. exponent 1 in zero-based position `i`.
    pub fn variable(i: usize, d: usize) -> Self {
        let mut e = vec![0; d];
        e[i] = 1;
        ExponentVector(e)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Zero-based indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.0[i] > 0).collect()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            })
        }
    }

    /// Entrywise minimum.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        ))
    }

    /// Entrywise maximum.
    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        ))
    }

    /// Product, i.e. entrywise checked sum.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = Vec::with_capacity(self.dim());
        for (i, (&a, &b)) in self.0.iter().zip(&other.0).enumerate() {
            out.push(
                a.checked_add(b)
                    .ok_or(Error::ExponentOverflow { coordinate: i })?,
            );
        }
        Ok(ExponentVector(out))
    }

    /// Quotient `self / other`; fails naming the first short coordinate.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = Vec::with_capacity(self.dim());
        for (i, (&a, &b)) in self.0.iter().zip(&other.0).enumerate() {
            if a < b {
                return Err(Error::NotDivisible {
                    coordinate: i,
                    num: a,
                    den: b,
                });
            }
            out.push(a - b);
        }
        Ok(ExponentVector(out))
    }

    /// Entrywise `<=`, i.e. `self` divides `other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(&a, &b)| a <= b)
    }

    /// lcm of a nonempty slice.
    pub fn lcm_of(list: &[Self]) -> Result<Self> {
        let mut it = list.iter();
        let first = it
            .next()
            .ok_or_else(|| Error::Inconsistency("lcm of an empty list".into()))?;
        let mut acc = first.clone();
        for v in it {
            acc = acc.lcm(v)?;
        }
        Ok(acc)
    }

    /// gcd of a nonempty slice.
    pub fn gcd_of(list: &[Self]) -> Result<Self> {
        let mut it = list.iter();
        let first = it
            .next()
            .ok_or_else(|| Error::Inconsistency("gcd of an empty list".into()))?;
        let mut acc = first.clone();
        for v in it {
            acc = acc.gcd(v)?;
        }
        Ok(acc)
    }

    /// Renders a divisor `sum a_i E_i` in the `E`-notation of reports,
    /// e.g. `E_1+E_6`, `2E_3+E_7` or `0`.
    pub fn e_notation(&self) -> String {
        let mut parts = Vec::new();
        for (i, &a) in self.0.iter().enumerate() {
            if a == 1 {
                parts.push(format!("E_{}", i + 1));
            } else if a > 1 {
                parts.push(format!("{}E_{}", a, i + 1));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

/// Graded lexicographic order: total degree first, then lexicographic.
impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x_{}", i + 1)?;
            } else {
                write!(f, "x_{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

// Debug defers to Display; keeps assertion output readable.
impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `x_1*x_4^2`-style products; `1` is the unit. `d` fixes the
/// variable count, which must cover every index that occurs.
pub fn parse_monomial(s: &str, d: usize) -> Result<ExponentVector> {
    let s = s.trim();
    let bad = |msg: &str| Error::Inconsistency(format!("cannot parse monomial {s:?}: {msg}"));
    if s == "1" {
        return Ok(ExponentVector::one(d));
    }
    let mut exps = vec![0u32; d];
    for factor in s.split('*') {
        let factor = factor.trim();
        let rest = factor
            .strip_prefix("x_")
            .or_else(|| factor.strip_prefix('x'))
            .ok_or_else(|| bad("factors look like x_3 or x_3^2"))?;
        let (idx_str, exp_str) = match rest.split_once('^') {
            Some((i, e)) => (i, Some(e)),
            None => (rest, None),
        };
        let idx: usize = idx_str.parse().map_err(|_| bad("bad variable index"))?;
        if idx == 0 || idx > d {
            return Err(bad(&format!("variable x_{idx} outside 1..={d}")));
        }
        let exp: u32 = match exp_str {
            Some(e) => e.parse().map_err(|_| bad("bad exponent"))?,
            None => 1,
        };
        exps[idx - 1] = exps[idx - 1]
            .checked_add(exp)
            .ok_or(Error::ExponentOverflow { coordinate: idx - 1 })?;
    }
    Ok(ExponentVector(exps))
}

/// A monomial as it appears in input JSON: either a raw exponent array or
/// a product string such as `"x_1*x_4^2"` (`"1"` is the unit).
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum MonomialInput {
    Exponents(Vec<u32>),
    Product(String),
}

impl MonomialInput {
    /// Resolves to an exponent vector in `d` variables.
    pub fn resolve(self, d: usize) -> Result<ExponentVector> {
        match self {
            MonomialInput::Exponents(e) => {
                if e.len() != d {
                    return Err(Error::DimensionMismatch {
                        left: d,
                        right: e.len(),
                    });
                }
                Ok(ExponentVector(e))
            }
            MonomialInput::Product(s) => parse_monomial(&s, d),
        }
    }
}

impl FromStr for ExponentVector {
    type Err = Error;

    /// Parses with the variable count inferred from the largest index seen.
    fn from_str(s: &str) -> Result<Self> {
        let mut d = 0usize;
        for factor in s.split('*') {
            if let Some(rest) = factor.trim().strip_prefix("x_") {
                let idx_str = rest.split('^').next().unwrap_or("");
                if let Ok(idx) = idx_str.parse::<usize>() {
                    d = d.max(idx);
                }
            }
        }
        parse_monomial(s, d)
    }
}

/// A monomial ideal, kept in canonical form: the unique minimal generating
/// set, sorted graded lexicographically.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialIdeal {
    ambient_dim: usize,
    generators: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// The zero ideal (no generators).
    pub fn zero(d: usize) -> Self {
        MonomialIdeal {
            ambient_dim: d,
            generators: Vec::new(),
        }
    }

    /// The unit ideal `<1>`.
    pub fn unit(d: usize) -> Self {
        MonomialIdeal {
            ambient_dim: d,
            generators: vec![ExponentVector::one(d)],
        }
    }

    /// Builds an ideal from arbitrary generators, minimalizing them: a
    /// generator survives iff no other generator properly divides it.
    pub fn from_generators(d: usize, gens: Vec<ExponentVector>) -> Result<Self> {
        for g in &gens {
            if g.dim() != d {
                return Err(Error::DimensionMismatch {
                    left: d,
                    right: g.dim(),
                });
            }
        }
        Ok(MonomialIdeal {
            ambient_dim: d,
            generators: minimalize(gens),
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// The minimal generators, sorted graded lexicographically.
    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(ExponentVector::is_one)
    }

    /// Membership test for a monomial.
    pub fn contains(&self, m: &ExponentVector) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Ideal equality as mutual divisibility of the minimal generators.
    /// Because both sides are canonical this agrees with `==`, but states
    /// the intended meaning and tolerates non-canonical callers.
    pub fn equals(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.generators.iter().all(|g| other.contains(g))
            && other.generators.iter().all(|g| self.contains(g))
    }

    /// Minimal primes of the ideal, as sorted lists of zero-based variable
    /// indices. Each minimal prime of a monomial ideal is generated by a
    /// set of variables that is a minimal cover of the generator supports.
    ///
    /// The zero ideal has no support constraint and the unit ideal cuts out
    /// the empty set; both return no primes and callers distinguish them
    /// through [`MonomialIdeal::is_zero`] / [`MonomialIdeal::is_unit`].
    pub fn minimal_primes(&self) -> Vec<Vec<usize>> {
        if self.is_zero() || self.is_unit() {
            return Vec::new();
        }
        let supports: Vec<Vec<usize>> = self.generators.iter().map(|g| g.support()).collect();
        minimal_covers(&supports)
    }

    /// Generators rendered as product strings.
    pub fn generator_strings(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.to_string()).collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "<0>");
        }
        write!(f, "<{}>", self.generator_strings().join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Keeps exactly the divisibility-minimal elements, sorted and deduplicated.
fn minimalize(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<ExponentVector> = Vec::new();
    for g in gens {
        // Sorted graded-lex, so earlier kept generators never have larger
        // total degree; a divisor of g must already be in `kept`.
        if !kept.iter().any(|h| h.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// All minimal covers of a family of nonempty sets: subsets of variables
/// meeting every set, minimal under inclusion. Branch on the first
/// uncovered set; every minimal cover is reached along some branch, and a
/// final inclusion pass discards the non-minimal leftovers.
fn minimal_covers(supports: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut found: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut current: BTreeSet<usize> = BTreeSet::new();
    branch(supports, &mut current, &mut found);
    let covers: Vec<BTreeSet<usize>> = found.into_iter().collect();
    let mut minimal: Vec<Vec<usize>> = covers
        .iter()
        .filter(|c| !covers.iter().any(|o| o.len() < c.len() && o.is_subset(c)))
        .map(|c| c.iter().copied().collect())
        .collect();
    minimal.sort();
    minimal
}

fn branch(
    supports: &[Vec<usize>],
    current: &mut BTreeSet<usize>,
    found: &mut BTreeSet<BTreeSet<usize>>,
) {
    match supports
        .iter()
        .find(|s| !s.iter().any(|v| current.contains(v)))
    {
        None => {
            found.insert(current.clone());
        }
        Some(uncovered) => {
            for &v in uncovered {
                current.insert(v);
                branch(supports, current, found);
                current.remove(&v);
            }
        }
    }
}
