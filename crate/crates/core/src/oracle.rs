//! Independent brute-force verification engine.
//!
//! The fine `Z^d` grading makes every graded piece of a free module
//! `⊕_i S(-d_i)` at most one-dimensional per summand: the piece in degree
//! `delta` has one basis vector `x^(delta - d_i) b_i` for each position with
//! `d_i <= delta` entrywise.  A map whose matrix entries are signed monomials
//! therefore acts on each piece as a constant sign matrix, and kernels,
//! membership, and minimal generators can be computed degree by degree with
//! exact integer linear algebra and no polynomial arithmetic at all.
//!
//! Everything here is deliberately independent of the structural shortcuts
//! in [`syzygy`](crate::syzygy): generators are discovered by walking all
//! fine degrees of a [`FineDegreeWindow`] in ascending graded-lex order and
//! keeping each kernel vector that the previously found generators fail to
//! span over the integers.  Degrees of minimal generators of the modules
//! under test divide the lcm of the input monomials (the Taylor resolution
//! bound), so a window covering that lcm sees every generator.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::circuits::TranspositionTable;
use crate::error::{Error, Result};
use crate::linalg::kernel_basis;
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::syzygy::{beta_generators, edge_degrees, SyzygyElement};

/// Bounding box of fine degrees searched by the oracle: all `delta` with
/// `0 <= delta <= upper` entrywise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FineDegreeWindow {
    upper: ExponentVector,
}

/// Hard cap on window enumeration, to fail loudly instead of thrashing.
const MAX_WINDOW_POINTS: usize = 4_000_000;

impl FineDegreeWindow {
    pub fn new(upper: ExponentVector) -> Self {
        FineDegreeWindow { upper }
    }

    /// Window reaching `margin` past the lcm of the given monomials in every
    /// coordinate.  The lcm is the Taylor bound on minimal generator
    /// degrees; the margin lets tests probe past it.
    pub fn covering(monomials: &[ExponentVector], margin: u32) -> Result<Self> {
        let lcm = ExponentVector::lcm_of(monomials)?;
        let pad = ExponentVector::new(vec![margin; lcm.dim()]);
        Ok(FineDegreeWindow { upper: lcm.mul(&pad)? })
    }

    pub fn upper(&self) -> &ExponentVector {
        &self.upper
    }

    pub fn contains(&self, delta: &ExponentVector) -> bool {
        delta.divides(&self.upper)
    }

    /// All degrees in the box, ascending in the graded lexicographic order.
    /// Ascending enumeration is what makes greedy generator extraction
    /// sound: every divisor of a degree is visited before the degree.
    pub fn degrees(&self) -> Result<Vec<ExponentVector>> {
        let mut count: usize = 1;
        for &u in self.upper.exponents() {
            count = count
                .checked_mul(u as usize + 1)
                .filter(|&c| c <= MAX_WINDOW_POINTS)
                .ok_or(Error::ArithmeticOverflow)?;
        }
        let d = self.upper.dim();
        let mut out = Vec::with_capacity(count);
        let mut current = vec![0u32; d];
        loop {
            out.push(ExponentVector::new(current.clone()));
            let mut pos = d;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                if current[pos] < self.upper.exponents()[pos] {
                    current[pos] += 1;
                    current[pos + 1..].iter_mut().for_each(|c| *c = 0);
                    break;
                }
                if pos == 0 {
                    out.sort();
                    return Ok(out);
                }
            }
            if d == 0 {
                out.sort();
                return Ok(out);
            }
        }
    }
}

fn require_covers(window: &FineDegreeWindow, monomials: &[ExponentVector]) -> Result<()> {
    let lcm = ExponentVector::lcm_of(monomials)?;
    for (i, (&have, &need)) in window
        .upper
        .exponents()
        .iter()
        .zip(lcm.exponents())
        .enumerate()
    {
        if have < need {
            return Err(Error::WindowTooSmall { coordinate: i });
        }
    }
    Ok(())
}

/// A homogeneous element of a graded free module, recorded as its fine
/// degree together with its integer coordinates in the (at most
/// one-dimensional per summand) graded piece of that degree.
///
/// Keys of `coords` are zero-based positions into the module's degree list,
/// and the coordinate at position `i` is the coefficient of
/// `x^(delta - d_i) b_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleElement {
    pub delta: ExponentVector,
    pub coords: BTreeMap<usize, i64>,
}

impl ModuleElement {
    pub fn new(delta: ExponentVector, coords: BTreeMap<usize, i64>) -> Self {
        let mut coords = coords;
        coords.retain(|_, c| *c != 0);
        ModuleElement { delta, coords }
    }

    /// Reads a signed-monomial element into coordinate form, given the fine
    /// degrees of the basis vectors of its module.
    pub fn from_syzygy(
        elem: &SyzygyElement,
        degrees: &[ExponentVector],
    ) -> Result<ModuleElement> {
        let delta = elem.fine_degree(degrees)?;
        let mut coords = BTreeMap::new();
        for (&index, (sign, _)) in elem.terms() {
            coords.insert(index - 1, i64::from(*sign));
        }
        Ok(ModuleElement { delta, coords })
    }

    fn coord_vector(&self, width: usize) -> Vec<i64> {
        let mut v = vec![0i64; width];
        for (&i, &c) in &self.coords {
            v[i] = c;
        }
        v
    }

    fn width(&self) -> usize {
        self.coords.keys().next_back().map_or(0, |&i| i + 1)
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coords
            .iter()
            .map(|(i, c)| format!("{c}*b_{}", i + 1))
            .collect();
        write!(out, "[{}] in degree {}", parts.join(", "), self.delta)
    }
}

/// Echelon-form basis of a sublattice of `Z^width`, supporting exact
/// integer membership tests.  Rows are kept with strictly increasing pivot
/// columns and zero entries left of each pivot.
#[derive(Debug, Clone)]
struct LatticeBasis {
    width: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

fn sub_scaled(v: &mut [BigInt], b: &[BigInt], q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for (x, y) in v.iter_mut().zip(b) {
        *x -= q * y;
    }
}

impl LatticeBasis {
    fn new(width: usize) -> Self {
        LatticeBasis {
            width,
            rows: Vec::new(),
        }
    }

    fn insert_i64(&mut self, v: &[i64]) {
        self.insert(v.iter().map(|&x| BigInt::from(x)).collect());
    }

    fn insert(&mut self, mut v: Vec<BigInt>) {
        debug_assert_eq!(v.len(), self.width);
        loop {
            let Some(c) = v.iter().position(|x| !x.is_zero()) else {
                return;
            };
            match self.rows.binary_search_by_key(&c, |(p, _)| *p) {
                Ok(idx) => {
                    let q = &v[c] / &self.rows[idx].1[c];
                    sub_scaled(&mut v, &self.rows[idx].1, &q);
                    if v[c].is_zero() {
                        continue;
                    }
                    // Remainder is smaller than the pivot: swap and keep
                    // reducing, Euclid-style.
                    std::mem::swap(&mut self.rows[idx].1, &mut v);
                }
                Err(pos) => {
                    if v[c].is_negative() {
                        v.iter_mut().for_each(|x| *x = -std::mem::take(x));
                    }
                    self.rows.insert(pos, (c, v));
                    return;
                }
            }
        }
    }

    /// Exact membership of an integer vector in the lattice.
    fn contains(&self, target: &[i64]) -> bool {
        debug_assert_eq!(target.len(), self.width);
        let mut t: Vec<BigInt> = target.iter().map(|&x| BigInt::from(x)).collect();
        loop {
            let Some(c) = t.iter().position(|x| !x.is_zero()) else {
                return true;
            };
            let Ok(idx) = self.rows.binary_search_by_key(&c, |(p, _)| *p) else {
                return false;
            };
            let (q, r) = t[c].div_rem(&self.rows[idx].1[c]);
            if !r.is_zero() {
                return false;
            }
            sub_scaled(&mut t, &self.rows[idx].1, &q);
        }
    }
}

/// Integer span of a growing set of module generators, with per-degree
/// membership tests.
///
/// At degree `delta` the span's graded piece is the lattice generated by the
/// coordinate vectors of the generators whose degree divides `delta`
/// (multiplying a generator by a monomial does not change its coordinate
/// vector).  Echelon bases are cached per participating set; appending a
/// generator never invalidates existing entries.
struct SpanOracle {
    width: usize,
    gens: Vec<ModuleElement>,
    cache: BTreeMap<Vec<usize>, LatticeBasis>,
}

impl SpanOracle {
    fn new(width: usize) -> Self {
        SpanOracle {
            width,
            gens: Vec::new(),
            cache: BTreeMap::new(),
        }
    }

    fn with_generators(width: usize, gens: &[ModuleElement]) -> Self {
        let mut s = SpanOracle::new(width);
        for g in gens {
            s.add(g.clone());
        }
        s
    }

    fn add(&mut self, gen: ModuleElement) {
        self.gens.push(gen);
    }

    fn member(&mut self, delta: &ExponentVector, vector: &[i64]) -> bool {
        let mask: Vec<usize> = self
            .gens
            .iter()
            .enumerate()
            .filter(|(_, g)| g.delta.divides(delta))
            .map(|(i, _)| i)
            .collect();
        if mask.is_empty() {
            return vector.iter().all(|&x| x == 0);
        }
        if !self.cache.contains_key(&mask) {
            let mut basis = LatticeBasis::new(self.width);
            for &i in &mask {
                basis.insert_i64(&self.gens[i].coord_vector(self.width));
            }
            self.cache.insert(mask.clone(), basis);
        }
        self.cache[&mask].contains(vector)
    }
}

/// A graded map between free modules whose matrix entries are signed
/// monomials consistent with the grading: the entry in row `i`, column `j`
/// carries the monomial `x^(domain[j] - codomain[i])`.
struct GradedMap {
    domain: Vec<ExponentVector>,
    codomain: Vec<ExponentVector>,
    signs: Vec<Vec<i8>>,
}

impl GradedMap {
    fn new(
        domain: Vec<ExponentVector>,
        codomain: Vec<ExponentVector>,
        entries: &[Vec<Option<(i8, ExponentVector)>>],
    ) -> Result<GradedMap> {
        if entries.len() != codomain.len() {
            return Err(Error::DimensionMismatch {
                left: entries.len(),
                right: codomain.len(),
            });
        }
        let mut signs = vec![vec![0i8; domain.len()]; codomain.len()];
        for (i, row) in entries.iter().enumerate() {
            if row.len() != domain.len() {
                return Err(Error::DimensionMismatch {
                    left: row.len(),
                    right: domain.len(),
                });
            }
            for (j, entry) in row.iter().enumerate() {
                if let Some((sign, mono)) = entry {
                    let expected = domain[j].div(&codomain[i])?;
                    if *mono != expected {
                        return Err(Error::Inconsistency(format!(
                            "entry ({i}, {j}) has degree {mono}, grading requires {expected}"
                        )));
                    }
                    signs[i][j] = *sign;
                }
            }
        }
        Ok(GradedMap {
            domain,
            codomain,
            signs,
        })
    }

    /// Kernel of the sign matrix restricted to the degree-`delta` piece,
    /// as full-width primitive integer vectors.
    fn kernel_at(&self, delta: &ExponentVector) -> Result<Vec<Vec<i64>>> {
        let cols: Vec<usize> = (0..self.domain.len())
            .filter(|&j| self.domain[j].divides(delta))
            .collect();
        if cols.is_empty() {
            return Ok(Vec::new());
        }
        let rows: Vec<usize> = (0..self.codomain.len())
            .filter(|&i| self.codomain[i].divides(delta))
            .collect();
        let matrix: Vec<Vec<i128>> = rows
            .iter()
            .map(|&i| cols.iter().map(|&j| i128::from(self.signs[i][j])).collect())
            .collect();
        let kernel = kernel_basis(&matrix, cols.len())?;
        let mut out = Vec::with_capacity(kernel.len());
        for v in kernel {
            let mut full = vec![0i64; self.domain.len()];
            for (t, &j) in cols.iter().enumerate() {
                full[j] =
                    i64::try_from(v[t]).map_err(|_| Error::ArithmeticOverflow)?;
            }
            out.push(full);
        }
        Ok(out)
    }
}

/// Walks the window in ascending graded-lex order and keeps every kernel
/// vector that the generators found so far do not span over the integers.
fn minimal_generators(
    map: &GradedMap,
    window: &FineDegreeWindow,
) -> Result<Vec<ModuleElement>> {
    let width = map.domain.len();
    let mut span = SpanOracle::new(width);
    for delta in window.degrees()? {
        for vector in map.kernel_at(&delta)? {
            if !span.member(&delta, &vector) {
                let coords: BTreeMap<usize, i64> = vector
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| (i, c))
                    .collect();
                span.add(ModuleElement::new(delta.clone(), coords));
            }
        }
    }
    Ok(span.gens)
}

/// Minimal generators of the kernel of the spoke map `e_j -> f^j`, found by
/// degree-by-degree search.  The window must cover the lcm of the spokes.
pub fn oracle_kernel(
    f: &[ExponentVector],
    window: &FineDegreeWindow,
) -> Result<Vec<ModuleElement>> {
    require_covers(window, f)?;
    let map = GradedMap::new(
        f.to_vec(),
        vec![ExponentVector::one(f[0].dim())],
        &[f.iter().map(|m| Some((1i8, m.clone()))).collect()],
    )?;
    minimal_generators(&map, window)
}

/// Minimal generators of the syzygies among the first `k` pairwise
/// generators `beta_1, ..., beta_k`, found by degree-by-degree search in the
/// edge basis.  The window must cover the lcm of the spokes.
pub fn oracle_syzygies(
    f: &[ExponentVector],
    k: usize,
    window: &FineDegreeWindow,
) -> Result<Vec<ModuleElement>> {
    require_covers(window, f)?;
    let m = f.len();
    let table = TranspositionTable::new(m)?;
    let n = table.len();
    if k == 0 || k > n {
        return Err(Error::StepOutOfRange { k, n });
    }
    let betas = beta_generators(f)?;
    let degrees = edge_degrees(f)?;
    let mut entries = vec![vec![None; k]; m];
    for (j, beta) in betas.iter().take(k).enumerate() {
        for (&row, (sign, mono)) in beta.terms() {
            entries[row - 1][j] = Some((*sign, mono.clone()));
        }
    }
    let map = GradedMap::new(degrees[..k].to_vec(), f.to_vec(), &entries)?;
    minimal_generators(&map, window)
}

/// The colon ideal `{ s : s * target lies in the span of gens }`, searched
/// over the window.  Candidates are visited in ascending graded-lex order
/// and anything divisible by a generator already found is pruned, which is
/// sound because colon sets of monomials are closed under multiplication.
pub fn oracle_ideal(
    gens: &[ModuleElement],
    target: &ModuleElement,
    window: &FineDegreeWindow,
) -> Result<MonomialIdeal> {
    let width = gens
        .iter()
        .chain([target])
        .map(ModuleElement::width)
        .max()
        .unwrap_or(0);
    let mut span = SpanOracle::with_generators(width, gens);
    let vector = target.coord_vector(width);
    let mut found: Vec<ExponentVector> = Vec::new();
    for s in window.degrees()? {
        if found.iter().any(|g| g.divides(&s)) {
            continue;
        }
        let shifted = target.delta.mul(&s)?;
        if span.member(&shifted, &vector) {
            found.push(s);
        }
    }
    MonomialIdeal::from_generators(window.upper.dim(), found)
}

/// Exact equality of the integer submodules generated by two sets of
/// homogeneous elements of the same graded free module, by mutual
/// membership of generators.
pub fn modules_equal(a: &[ModuleElement], b: &[ModuleElement]) -> bool {
    first_discrepancy(a, b).is_none()
}

/// A generator of one module that the other does not contain, if any; its
/// fine degree is a counterexample multidegree for `modules_equal`.
pub fn first_discrepancy(a: &[ModuleElement], b: &[ModuleElement]) -> Option<ModuleElement> {
    let width = a
        .iter()
        .chain(b)
        .map(ModuleElement::width)
        .max()
        .unwrap_or(0);
    let mut span_b = SpanOracle::with_generators(width, b);
    if let Some(g) = a
        .iter()
        .find(|g| !span_b.member(&g.delta, &g.coord_vector(width)))
    {
        return Some(g.clone());
    }
    let mut span_a = SpanOracle::with_generators(width, a);
    b.iter()
        .find(|g| !span_a.member(&g.delta, &g.coord_vector(width)))
        .cloned()
}
