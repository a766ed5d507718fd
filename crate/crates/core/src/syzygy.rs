//! Syzygies between the spoke monomials.
//!
//! For spoke monomials `f^1, ..., f^m` the pairwise syzygies are indexed by
//! transpositions of `m` letters in the order fixed by
//! [`TranspositionTable`](crate::circuits::TranspositionTable).  The generator
//! attached to the pair `(mu, nu)` with `mu < nu` is
//!
//! ```text
//!   beta_{(mu,nu)} = (f^{mu,nu}/f^nu) e_nu - (f^{mu,nu}/f^mu) e_mu
//! ```
//!
//! where `f^{mu,nu} = lcm(f^mu, f^nu)`.  Every term of every element handled
//! here is a signed monomial times a basis vector, which keeps the whole
//! calculus exact: no polynomial arithmetic beyond monomial lcm/quotients is
//! ever required.
//!
//! A circuit `gamma` in the graph on edges `1..=k` yields the relation
//!
//! ```text
//!   sigma_gamma = sum over edges e of gamma of sign_gamma(e) (f^gamma/f^e) eps_e
//! ```
//!
//! with `sign_gamma(e) = +1` exactly when the traversal walks `e` from its
//! smaller vertex to its larger one.  These relations generate the second
//! syzygies, and their supports walk the minimal circuits of the graph that
//! keeps only the first `k` edges.

use std::collections::BTreeMap;
use std::fmt;

use crate::circuits::{minimal_circuits, Circuit, TranspositionTable};
use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};

/// Which free module an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    /// Spoke basis `e_1, ..., e_m` of the module surjecting onto the ideal.
    E,
    /// Edge basis `eps_1, ..., eps_n` indexed by transpositions.
    Epsilon,
}

impl Basis {
    fn symbol(self) -> &'static str {
        match self {
            Basis::E => "e",
            Basis::Epsilon => "eps",
        }
    }
}

/// An element of a free module whose coordinates are signed monomials.
///
/// Keys are one-based basis indices; each present index carries a sign and a
/// monomial, so the coordinate is `sign * x^mono`.  Elements with general
/// polynomial coordinates occur only transiently in tests and images and are
/// handled by [`Combination`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyElement {
    basis: Basis,
    terms: BTreeMap<usize, (i8, ExponentVector)>,
}

impl SyzygyElement {
    /// Builds an element from `(index, sign, monomial)` triples.
    ///
    /// Indices are one-based and must be distinct; signs must be `+1` or `-1`.
    pub fn from_terms(
        basis: Basis,
        entries: Vec<(usize, i8, ExponentVector)>,
    ) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (index, sign, mono) in entries {
            if index == 0 {
                return Err(Error::Inconsistency(
                    "syzygy element indices are one-based; got index 0".into(),
                ));
            }
            if sign != 1 && sign != -1 {
                return Err(Error::Inconsistency(format!(
                    "syzygy element signs must be +1 or -1; got {sign}"
                )));
            }
            if terms.insert(index, (sign, mono)).is_some() {
                return Err(Error::Inconsistency(format!(
                    "duplicate index {index} in syzygy element"
                )));
            }
        }
        Ok(SyzygyElement { basis, terms })
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Signed-monomial coordinates keyed by one-based basis index.
    pub fn terms(&self) -> &BTreeMap<usize, (i8, ExponentVector)> {
        &self.terms
    }

    pub fn coefficient(&self, index: usize) -> Option<(i8, &ExponentVector)> {
        self.terms.get(&index).map(|(s, m)| (*s, m))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest basis index present, or 0 for the zero element.
    pub fn max_index(&self) -> usize {
        self.terms.keys().next_back().copied().unwrap_or(0)
    }

    pub fn neg(&self) -> SyzygyElement {
        SyzygyElement {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(&i, (s, m))| (i, (-s, m.clone())))
                .collect(),
        }
    }

    /// Multiplies every coordinate by the monomial `x^scale`.
    pub fn scaled(&self, scale: &ExponentVector) -> Result<SyzygyElement> {
        let mut terms = BTreeMap::new();
        for (&i, (s, m)) in &self.terms {
            terms.insert(i, (*s, m.mul(scale)?));
        }
        Ok(SyzygyElement {
            basis: self.basis,
            terms,
        })
    }

    /// Common fine degree of all terms, where basis vector `i` has degree
    /// `degrees[i-1]`.
    ///
    /// A homogeneous element satisfies `term monomial + basis degree = const`;
    /// anything else is rejected, as is the zero element (its degree is not
    /// determined).
    pub fn fine_degree(&self, degrees: &[ExponentVector]) -> Result<ExponentVector> {
        let mut common: Option<ExponentVector> = None;
        for (&i, (_, m)) in &self.terms {
            let base = degrees.get(i - 1).ok_or(Error::VertexOutOfRange {
                vertex: i,
                m: degrees.len(),
            })?;
            let total = m.mul(base)?;
            match &common {
                None => common = Some(total),
                Some(prev) if *prev == total => {}
                Some(prev) => {
                    return Err(Error::Inconsistency(format!(
                        "element is not homogeneous: degrees {prev} and {total}"
                    )))
                }
            }
        }
        common.ok_or_else(|| {
            Error::Inconsistency("zero element has no fine degree".into())
        })
    }
}

impl fmt::Display for SyzygyElement {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        let symbol = self.basis.symbol();
        for (pos, (&i, (sign, mono))) in self.terms.iter().enumerate() {
            if pos == 0 {
                if *sign < 0 {
                    write!(out, "-")?;
                }
            } else if *sign < 0 {
                write!(out, " - ")?;
            } else {
                write!(out, " + ")?;
            }
            if !mono.is_one() {
                write!(out, "{mono}*")?;
            }
            write!(out, "{symbol}_{i}")?;
        }
        Ok(())
    }
}

/// A module element with general polynomial coordinates: basis index (one
/// based) to polynomial, polynomial stored as monomial-to-coefficient.
///
/// Used to accumulate images and linear combinations exactly; an empty outer
/// map is the zero element.
pub type Combination = BTreeMap<usize, BTreeMap<ExponentVector, i64>>;

fn add_term(acc: &mut Combination, index: usize, mono: ExponentVector, coeff: i64) {
    if coeff == 0 {
        return;
    }
    let poly = acc.entry(index).or_default();
    let slot = poly.entry(mono).or_insert(0);
    *slot += coeff;
    if *slot == 0 {
        poly.retain(|_, c| *c != 0);
    }
    if poly.is_empty() {
        acc.remove(&index);
    }
}

/// Adds `coeff * x^scale * elem` into the accumulator.
pub fn accumulate(
    acc: &mut Combination,
    coeff: i64,
    scale: &ExponentVector,
    elem: &SyzygyElement,
) -> Result<()> {
    for (&i, (sign, mono)) in elem.terms() {
        add_term(acc, i, mono.mul(scale)?, coeff * i64::from(*sign));
    }
    Ok(())
}

fn check_spokes(f: &[ExponentVector]) -> Result<usize> {
    let mut nvars = None;
    for mono in f {
        match nvars {
            None => nvars = Some(mono.dim()),
            Some(n) if n == mono.dim() => {}
            Some(n) => {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: mono.dim(),
                })
            }
        }
    }
    nvars.ok_or(Error::UnsupportedSpokeCount { m: 0 })
}

/// Pairwise syzygies of the spoke list, one per transposition, in the fixed
/// transposition order.
pub fn beta_generators(f: &[ExponentVector]) -> Result<Vec<SyzygyElement>> {
    check_spokes(f)?;
    let table = TranspositionTable::new(f.len())?;
    let mut out = Vec::with_capacity(table.len());
    for &(a, b) in table.pairs() {
        let lcm = f[a - 1].lcm(&f[b - 1])?;
        out.push(SyzygyElement::from_terms(
            Basis::E,
            vec![
                (b, 1, lcm.div(&f[b - 1])?),
                (a, -1, lcm.div(&f[a - 1])?),
            ],
        )?);
    }
    Ok(out)
}

/// Fine degrees of the edge basis vectors: `lcm(f^a, f^b)` per transposition
/// `(a, b)` in the fixed order.
pub fn edge_degrees(f: &[ExponentVector]) -> Result<Vec<ExponentVector>> {
    check_spokes(f)?;
    let table = TranspositionTable::new(f.len())?;
    table
        .pairs()
        .iter()
        .map(|&(a, b)| f[a - 1].lcm(&f[b - 1]))
        .collect()
}

/// The relation among pairwise syzygies carried by a circuit.
///
/// Coefficients are `f^gamma / f^e` over the traversed edges `e`, where
/// `f^gamma` is the lcm of the spokes at the circuit's vertices; the sign of
/// an edge is `+1` exactly when the traversal walks it from its smaller
/// vertex to its larger one.
pub fn circuit_syzygy(circuit: &Circuit, f: &[ExponentVector]) -> Result<SyzygyElement> {
    check_spokes(f)?;
    let m = f.len();
    if circuit.max_vertex() > m {
        return Err(Error::VertexOutOfRange {
            vertex: circuit.max_vertex(),
            m,
        });
    }
    let table = TranspositionTable::new(m)?;
    let mut support = ExponentVector::one(f[0].dim());
    for &v in circuit.vertices() {
        support = support.lcm(&f[v - 1])?;
    }
    let mut entries = Vec::new();
    for (small, large, sign) in circuit.edges() {
        let index = table.index_of(small, large)?;
        let edge = f[small - 1].lcm(&f[large - 1])?;
        entries.push((index, sign, support.div(&edge)?));
    }
    SyzygyElement::from_terms(Basis::Epsilon, entries)
}

/// Generators of the syzygies among `beta_1, ..., beta_k`: the circuit
/// relations of the minimal circuits of the graph with edges `1..=k`.
pub fn syzygy_generators(f: &[ExponentVector], k: usize) -> Result<Vec<SyzygyElement>> {
    check_spokes(f)?;
    minimal_circuits(f.len(), k)?
        .iter()
        .map(|c| circuit_syzygy(c, f))
        .collect()
}

/// Image of an edge-basis element under `eps_(mu,nu) -> beta_(mu,nu)`,
/// collected as polynomial coordinates in the spoke basis.
///
/// Circuit relations map to zero; the returned combination is empty exactly
/// in that case.
pub fn beta_image(elem: &SyzygyElement, f: &[ExponentVector]) -> Result<Combination> {
    if elem.basis() != Basis::Epsilon {
        return Err(Error::Inconsistency(
            "beta_image expects an edge-basis element".into(),
        ));
    }
    check_spokes(f)?;
    let table = TranspositionTable::new(f.len())?;
    let mut acc = Combination::new();
    for (&index, (sign, mono)) in elem.terms() {
        let (a, b) = table.pair(index)?;
        let lcm = f[a - 1].lcm(&f[b - 1])?;
        let coeff = i64::from(*sign);
        add_term(&mut acc, b, lcm.div(&f[b - 1])?.mul(mono)?, coeff);
        add_term(&mut acc, a, lcm.div(&f[a - 1])?.mul(mono)?, -coeff);
    }
    Ok(acc)
}

/// Image of a spoke-basis element under `e_j -> f^j`, collected as a
/// polynomial.  Pairwise syzygies map to zero.
pub fn spoke_image(
    elem: &SyzygyElement,
    f: &[ExponentVector],
) -> Result<BTreeMap<ExponentVector, i64>> {
    if elem.basis() != Basis::E {
        return Err(Error::Inconsistency(
            "spoke_image expects a spoke-basis element".into(),
        ));
    }
    check_spokes(f)?;
    let mut acc: BTreeMap<ExponentVector, i64> = BTreeMap::new();
    for (&j, (sign, mono)) in elem.terms() {
        if j > f.len() {
            return Err(Error::VertexOutOfRange {
                vertex: j,
                m: f.len(),
            });
        }
        let product = mono.mul(&f[j - 1])?;
        let slot = acc.entry(product).or_insert(0);
        *slot += i64::from(*sign);
        if *slot == 0 {
            acc.retain(|_, c| *c != 0);
        }
    }
    Ok(acc)
}

fn lcm_over<'a>(
    mut base: ExponentVector,
    rest: impl IntoIterator<Item = &'a ExponentVector>,
) -> Result<ExponentVector> {
    for mono in rest {
        base = base.lcm(mono)?;
    }
    Ok(base)
}

/// Generators of the colon ideal of the k-th filtration step, in the order in
/// which the underlying circuit relations produce them.
///
/// With `m` spokes and `n = m(m-1)/2` steps the cases are:
/// forest range `k < m` gives the zero ideal; `k = m` is principal with
/// generator `f^{1..m}/f^{1,m}`; for `m < k <= 2m-3` with `nu = k-m+2` the
/// generators are `f^{1,nu,nu+1,...,m}/f^{1,nu}` then `f^{1,nu-1,nu}/f^{1,nu}`;
/// for larger `k` with `tau_k = (mu_k, nu_k)` they are
/// `f^{mu,mu_k,nu_k}/f^{mu_k,nu_k}` for `mu = 1, ..., mu_k - 1` and finally
/// `mu = nu_k - 1`.
pub fn filtration_ideal_raw(f: &[ExponentVector], k: usize) -> Result<Vec<ExponentVector>> {
    check_spokes(f)?;
    let m = f.len();
    let table = TranspositionTable::new(m)?;
    let n = table.len();
    if k == 0 || k > n {
        return Err(Error::StepOutOfRange { k, n });
    }
    if k < m {
        return Ok(Vec::new());
    }
    if k == m {
        let all = lcm_over(f[0].clone(), &f[1..])?;
        let den = f[0].lcm(&f[m - 1])?;
        return Ok(vec![all.div(&den)?]);
    }
    if k <= 2 * m - 3 {
        let nu = k - m + 2;
        let den = f[0].lcm(&f[nu - 1])?;
        let long = lcm_over(f[0].clone(), &f[nu - 1..])?;
        let triangle = lcm_over(f[0].clone(), [&f[nu - 2], &f[nu - 1]])?;
        return Ok(vec![long.div(&den)?, triangle.div(&den)?]);
    }
    let (mu_k, nu_k) = table.pair(k)?;
    let den = f[mu_k - 1].lcm(&f[nu_k - 1])?;
    let mut gens = Vec::new();
    for mu in (1..mu_k).chain([nu_k - 1]) {
        gens.push(den.lcm(&f[mu - 1])?.div(&den)?);
    }
    Ok(gens)
}

/// The colon ideal of the k-th filtration step as a canonical monomial ideal.
pub fn filtration_ideal(f: &[ExponentVector], k: usize) -> Result<MonomialIdeal> {
    let nvars = check_spokes(f)?;
    MonomialIdeal::from_generators(nvars, filtration_ideal_raw(f, k)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testdata::{ev, hex_spokes};
    use proptest::prelude::*;

    #[test]
    fn hex_beta_spot_checks() {
        let f = hex_spokes();
        let betas = beta_generators(&f).unwrap();
        assert_eq!(betas.len(), 15);

        // beta_1 for (1,2): x6*e_2 - x2*x7*e_1.
        assert_eq!(
            betas[0],
            SyzygyElement::from_terms(
                Basis::E,
                vec![
                    (2, 1, ev(&[0, 0, 0, 0, 0, 1, 0])),
                    (1, -1, ev(&[0, 1, 0, 0, 0, 0, 1])),
                ],
            )
            .unwrap()
        );
        assert_eq!(betas[0].to_string(), "-x_2*x_7*e_1 + x_6*e_2");

        // beta_6 for (1,6): x1*e_6 - x5*e_1.
        assert_eq!(
            betas[5],
            SyzygyElement::from_terms(
                Basis::E,
                vec![
                    (6, 1, ev(&[1, 0, 0, 0, 0, 0, 0])),
                    (1, -1, ev(&[0, 0, 0, 0, 1, 0, 0])),
                ],
            )
            .unwrap()
        );

        // beta_15 for (4,6): x3*x4*e_6 - x5*x6*e_4.
        assert_eq!(
            betas[14],
            SyzygyElement::from_terms(
                Basis::E,
                vec![
                    (6, 1, ev(&[0, 0, 1, 1, 0, 0, 0])),
                    (4, -1, ev(&[0, 0, 0, 0, 1, 1, 0])),
                ],
            )
            .unwrap()
        );

        // Every pairwise syzygy maps to zero under e_j -> f^j.
        for beta in &betas {
            assert!(spoke_image(beta, &f).unwrap().is_empty());
        }
    }

    #[test]
    fn hex_rim_circuit_maps_to_zero() {
        let f = hex_spokes();
        let rim = Circuit::new(vec![1, 2, 3, 4, 5, 6]).unwrap();
        let sigma = circuit_syzygy(&rim, &f).unwrap();
        // Support lcm of all six spokes is x1..x7; rim edge (1,2) has
        // lcm x1*x2*x6*x7, so the eps_1 coefficient is x3*x4*x5.
        assert_eq!(
            sigma.coefficient(1),
            Some((1, &ev(&[0, 0, 1, 1, 1, 0, 0])))
        );
        // Closing edge (1,6) is walked from 6 to 1: sign -1.
        assert_eq!(sigma.coefficient(6).unwrap().0, -1);
        assert!(beta_image(&sigma, &f).unwrap().is_empty());
    }

    #[test]
    fn hex_filtration_values() {
        let f = hex_spokes();
        // Forest range: zero ideal.
        for k in 1..=5 {
            let ideal = filtration_ideal(&f, k).unwrap();
            assert!(ideal.is_zero(), "k={k}");
        }
        // Rim step: principal, lcm(all)/lcm(f1,f6) = x2*x3*x4*x7.
        assert_eq!(
            filtration_ideal_raw(&f, 6).unwrap(),
            vec![ev(&[0, 1, 1, 1, 0, 0, 1])]
        );
        // First middle step: long then triangle generator.
        assert_eq!(
            filtration_ideal_raw(&f, 7).unwrap(),
            vec![ev(&[0, 0, 0, 1, 1, 0, 1]), ev(&[0, 0, 0, 0, 0, 0, 1])]
        );
        // k=15, tau=(4,6): quotients for mu = 1, 2, 3, 5.
        assert_eq!(
            filtration_ideal_raw(&f, 15).unwrap(),
            vec![
                ev(&[1, 0, 0, 0, 0, 0, 0]),
                ev(&[1, 1, 0, 0, 0, 0, 1]),
                ev(&[0, 1, 0, 0, 0, 0, 0]),
                ev(&[0, 0, 0, 0, 0, 0, 1]),
            ]
        );
        assert_eq!(
            filtration_ideal(&f, 15).unwrap().generators(),
            &[
                ev(&[0, 0, 0, 0, 0, 0, 1]),
                ev(&[0, 1, 0, 0, 0, 0, 0]),
                ev(&[1, 0, 0, 0, 0, 0, 0]),
            ]
        );
    }

    #[test]
    fn hex_unit_steps() {
        let f = hex_spokes();
        let unit_steps: Vec<usize> = (1..=15)
            .filter(|&k| filtration_ideal(&f, k).unwrap().is_unit())
            .collect();
        assert_eq!(unit_steps, vec![9, 10, 12, 13]);
    }

    #[test]
    fn step_bounds_rejected() {
        let f = hex_spokes();
        assert_eq!(
            filtration_ideal_raw(&f, 0),
            Err(Error::StepOutOfRange { k: 0, n: 15 })
        );
        assert_eq!(
            filtration_ideal_raw(&f, 16),
            Err(Error::StepOutOfRange { k: 16, n: 15 })
        );
    }

    #[test]
    fn chord_split_identity_on_pentagon() {
        // sigma_gamma = (f^gamma/f^gamma1) sigma_gamma1
        //             + (f^gamma/f^gamma2) sigma_gamma2 for any chord.
        let f = vec![
            ev(&[2, 0, 0]),
            ev(&[1, 1, 0]),
            ev(&[0, 2, 1]),
            ev(&[0, 0, 2]),
            ev(&[1, 0, 1]),
        ];
        let gamma = Circuit::new(vec![1, 2, 3, 4, 5]).unwrap();
        let (inner, outer) = crate::circuits::chord_split(&gamma, 1, 3).unwrap();
        let support = |c: &Circuit| -> ExponentVector {
            let mut acc = ExponentVector::one(3);
            for &v in c.vertices() {
                acc = acc.lcm(&f[v - 1]).unwrap();
            }
            acc
        };
        let big = support(&gamma);
        let mut acc = Combination::new();
        accumulate(
            &mut acc,
            1,
            &big.div(&support(&inner)).unwrap(),
            &circuit_syzygy(&inner, &f).unwrap(),
        )
        .unwrap();
        accumulate(
            &mut acc,
            1,
            &big.div(&support(&outer)).unwrap(),
            &circuit_syzygy(&outer, &f).unwrap(),
        )
        .unwrap();
        accumulate(
            &mut acc,
            -1,
            &ExponentVector::one(3),
            &circuit_syzygy(&gamma, &f).unwrap(),
        )
        .unwrap();
        assert!(acc.is_empty(), "residue: {acc:?}");
    }

    #[test]
    fn homogeneous_degrees() {
        let f = hex_spokes();
        let betas = beta_generators(&f).unwrap();
        let spoke_degs: Vec<ExponentVector> = f.clone();
        let edge_degs = edge_degrees(&f).unwrap();
        for (i, beta) in betas.iter().enumerate() {
            // deg beta_k = lcm of its pair of spokes = the edge degree.
            assert_eq!(beta.fine_degree(&spoke_degs).unwrap(), edge_degs[i]);
        }
        let rim = Circuit::new(vec![1, 2, 3, 4, 5, 6]).unwrap();
        let sigma = circuit_syzygy(&rim, &f).unwrap();
        // deg sigma_gamma = lcm over the circuit = x1..x7.
        assert_eq!(
            sigma.fine_degree(&edge_degs).unwrap(),
            ev(&[1, 1, 1, 1, 1, 1, 1])
        );
    }

    fn small_spokes() -> impl Strategy<Value = Vec<ExponentVector>> {
        (3usize..=5, 1usize..=4).prop_flat_map(|(m, nvars)| {
            proptest::collection::vec(
                proptest::collection::vec(0u32..=2, nvars).prop_map(ExponentVector::new),
                m,
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn circuit_relations_map_to_zero(f in small_spokes()) {
            let m = f.len();
            let n = m * (m - 1) / 2;
            for k in 1..=n {
                for sigma in syzygy_generators(&f, k).unwrap() {
                    prop_assert!(beta_image(&sigma, &f).unwrap().is_empty());
                }
            }
        }

        #[test]
        fn chord_identity_on_rim(f in small_spokes(), shift in 0usize..5) {
            let m = f.len();
            prop_assume!(m >= 4);
            let nvars = f[0].dim();
            let gamma = Circuit::new((1..=m).collect()).unwrap();
            // Any chord (a, b) of the full rim: skip one vertex.
            let a = 1 + shift % m;
            let b = 1 + (shift + 2) % m;
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            prop_assume!(hi - lo != 1 && hi - lo != m - 1);
            let (inner, outer) = crate::circuits::chord_split(&gamma, lo, hi).unwrap();
            let support = |c: &Circuit| -> ExponentVector {
                let mut acc = ExponentVector::one(nvars);
                for &v in c.vertices() {
                    acc = acc.lcm(&f[v - 1]).unwrap();
                }
                acc
            };
            let big = support(&gamma);
            let mut acc = Combination::new();
            accumulate(&mut acc, 1, &big.div(&support(&inner)).unwrap(),
                       &circuit_syzygy(&inner, &f).unwrap()).unwrap();
            accumulate(&mut acc, 1, &big.div(&support(&outer)).unwrap(),
                       &circuit_syzygy(&outer, &f).unwrap()).unwrap();
            accumulate(&mut acc, -1, &ExponentVector::one(nvars),
                       &circuit_syzygy(&gamma, &f).unwrap()).unwrap();
            prop_assert!(acc.is_empty());
        }

        #[test]
        fn filtration_matches_rim_lcm(f in small_spokes()) {
            let m = f.len();
            let raw = filtration_ideal_raw(&f, m).unwrap();
            prop_assert_eq!(raw.len(), 1);
            let mut all = f[0].clone();
            for mono in &f[1..] {
                all = all.lcm(mono).unwrap();
            }
            let den = f[0].lcm(&f[m - 1]).unwrap();
            prop_assert_eq!(&raw[0], &all.div(&den).unwrap());
        }
    }
}
