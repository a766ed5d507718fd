//! Wheel data and the four-term monomial complex it defines.
//!
//! A wheel with `m >= 3` spokes over `dim` variables records four families of
//! monomials, all indexed cyclically by `j = 1, ..., m`:
//!
//! * `f_out[j]`, the spoke monomials: the right map sends `e_j` to
//!   `f_out[j] * e_L`;
//! * `rim_fwd[j]` and `rim_bwd[j]`, the rim pair: the middle map sends the
//!   rim basis vector `e_{j,j+1}` to
//!   `rim_fwd[j] * e_{j+1} - rim_bwd[j] * e_j`;
//! * `f_in[j]`, the hub monomials: the left map sends `e_L` to
//!   `sum_j f_in[j] * e_{j,j+1}`.
//!
//! The three maps compose to zero exactly when two families of rhombus
//! relations hold, one per rim position:
//!
//! ```text
//!   (12)  rim_fwd[j] * f_out[j+1] == rim_bwd[j] * f_out[j]
//!   (13)  rim_fwd[j-1] * f_in[j-1] == rim_bwd[j] * f_in[j]
//! ```
//!
//! Construction of a [`Wheel`] only validates shapes, so that deliberately
//! broken inputs can be loaded and diagnosed; [`build_complex`] insists on
//! the relations and reports the first violated rhombus by family and index.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialInput};
use crate::syzygy::{beta_generators, Basis, SyzygyElement};
use crate::toric::{is_cartier, Fan};

/// Shape-validated wheel data.  See the module docs for the meaning of the
/// four monomial families.
///
/// `base_divisor` is an optional ray-indexed divisor fixing the twist of the
/// rightmost sheaf; `None` means the structure sheaf.  Serialized form is the
/// plain exponent lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawWheel")]
pub struct Wheel {
    dim: usize,
    f_out: Vec<ExponentVector>,
    f_in: Vec<ExponentVector>,
    rim_fwd: Vec<ExponentVector>,
    rim_bwd: Vec<ExponentVector>,
    base_divisor: Option<Vec<i64>>,
}

/// Input form: monomials may be exponent arrays or product strings, `m` is
/// an optional cross-check against the list lengths, `rim_bwd` may be
/// omitted (or null) when it is determined by the outgoing rhombus
/// relation, and the base twist also answers to the key `base_class`.
#[derive(Deserialize)]
struct RawWheel {
    #[serde(default)]
    m: Option<usize>,
    dim: usize,
    f_out: Vec<MonomialInput>,
    f_in: Vec<MonomialInput>,
    rim_fwd: Vec<MonomialInput>,
    #[serde(default)]
    rim_bwd: Option<Vec<MonomialInput>>,
    #[serde(default, alias = "base_class")]
    base_divisor: Option<Vec<i64>>,
}

impl TryFrom<RawWheel> for Wheel {
    type Error = Error;

    fn try_from(raw: RawWheel) -> Result<Wheel> {
        let d = raw.dim;
        let lift = |v: Vec<MonomialInput>| -> Result<Vec<ExponentVector>> {
            v.into_iter().map(|mono| mono.resolve(d)).collect()
        };
        let f_out = lift(raw.f_out)?;
        let f_in = lift(raw.f_in)?;
        let rim_fwd = lift(raw.rim_fwd)?;
        if let Some(m) = raw.m {
            if m != f_out.len() {
                return Err(Error::WheelShape {
                    field: "f_out",
                    got: f_out.len(),
                    expected: m,
                });
            }
        }
        let rim_bwd = match raw.rim_bwd {
            Some(v) => lift(v)?,
            None => derive_rim_bwd(&f_out, &rim_fwd)?,
        };
        Wheel::new(d, f_out, f_in, rim_fwd, rim_bwd, raw.base_divisor)
    }
}

/// Solves the outgoing rhombus relation for the backward rim monomials,
/// `rim_bwd[j] = rim_fwd[j] * f_out[j+1] / f_out[j]`, failing when some
/// quotient is not a monomial.
fn derive_rim_bwd(
    f_out: &[ExponentVector],
    rim_fwd: &[ExponentVector],
) -> Result<Vec<ExponentVector>> {
    let m = f_out.len();
    if m < 3 {
        return Err(Error::UnsupportedSpokeCount { m });
    }
    if rim_fwd.len() != m {
        return Err(Error::WheelShape {
            field: "rim_fwd",
            got: rim_fwd.len(),
            expected: m,
        });
    }
    (0..m)
        .map(|j| rim_fwd[j].mul(&f_out[(j + 1) % m])?.div(&f_out[j]))
        .collect()
}

impl Wheel {
    pub fn new(
        dim: usize,
        f_out: Vec<ExponentVector>,
        f_in: Vec<ExponentVector>,
        rim_fwd: Vec<ExponentVector>,
        rim_bwd: Vec<ExponentVector>,
        base_divisor: Option<Vec<i64>>,
    ) -> Result<Wheel> {
        let m = f_out.len();
        if m < 3 {
            return Err(Error::UnsupportedSpokeCount { m });
        }
        for (field, list) in [
            ("f_in", &f_in),
            ("rim_fwd", &rim_fwd),
            ("rim_bwd", &rim_bwd),
        ] {
            if list.len() != m {
                return Err(Error::WheelShape {
                    field,
                    got: list.len(),
                    expected: m,
                });
            }
        }
        for list in [&f_out, &f_in, &rim_fwd, &rim_bwd] {
            for mono in list.iter() {
                if mono.dim() != dim {
                    return Err(Error::DimensionMismatch {
                        left: dim,
                        right: mono.dim(),
                    });
                }
            }
        }
        if let Some(base) = &base_divisor {
            if base.len() != dim {
                return Err(Error::WheelShape {
                    field: "base_divisor",
                    got: base.len(),
                    expected: dim,
                });
            }
        }
        Ok(Wheel {
            dim,
            f_out,
            f_in,
            rim_fwd,
            rim_bwd,
            base_divisor,
        })
    }

    pub fn m(&self) -> usize {
        self.f_out.len()
    }

    /// Number of variables (equals the ray count when a fan is attached).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn f_out(&self) -> &[ExponentVector] {
        &self.f_out
    }

    pub fn f_in(&self) -> &[ExponentVector] {
        &self.f_in
    }

    pub fn rim_fwd(&self) -> &[ExponentVector] {
        &self.rim_fwd
    }

    pub fn rim_bwd(&self) -> &[ExponentVector] {
        &self.rim_bwd
    }

    pub fn base_divisor(&self) -> Option<&[i64]> {
        self.base_divisor.as_deref()
    }

    /// All violated rhombus relations as `(family, position)` pairs, family
    /// 12 before family 13, positions one-based and ascending.
    pub fn check_relations(&self) -> Vec<(u8, usize)> {
        let m = self.m();
        let mut failures = Vec::new();
        for j in 1..=m {
            let next = j % m + 1;
            let lhs = self.rim_fwd[j - 1].mul(&self.f_out[next - 1]);
            let rhs = self.rim_bwd[j - 1].mul(&self.f_out[j - 1]);
            if !matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b) {
                failures.push((12, j));
            }
        }
        for j in 1..=m {
            let prev = (j + m - 2) % m + 1;
            let lhs = self.rim_fwd[prev - 1].mul(&self.f_in[prev - 1]);
            let rhs = self.rim_bwd[j - 1].mul(&self.f_in[j - 1]);
            if !matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b) {
                failures.push((13, j));
            }
        }
        failures
    }
}

/// Validation summary: rhombus relations, plus Cartier checks of the twisting
/// sheaves when a fan is supplied.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub m: usize,
    /// Violated rhombus relations as `(family, position)`.
    pub relation_failures: Vec<(u8, usize)>,
    pub is_complex: bool,
    /// Labels of sheaves whose divisor is not Cartier, e.g. `"spoke[3]"`.
    pub cartier_failures: Vec<String>,
    /// `None` when no fan was supplied.
    pub all_cartier: Option<bool>,
}

/// Checks the rhombus relations and, given a fan, that the base twist and
/// every spoke and rim sheaf is a line bundle on the corresponding variety.
///
/// Variables are identified with rays in order, so the fan must have exactly
/// `wheel.dim()` rays.
pub fn validate_wheel(wheel: &Wheel, fan: Option<&Fan>) -> Result<ValidationReport> {
    let relation_failures = wheel.check_relations();
    let mut cartier_failures = Vec::new();
    let mut all_cartier = None;
    if let Some(fan) = fan {
        if fan.ray_count() != wheel.dim() {
            return Err(Error::DimensionMismatch {
                left: fan.ray_count(),
                right: wheel.dim(),
            });
        }
        let base: Vec<i64> = match wheel.base_divisor() {
            Some(b) => b.to_vec(),
            None => vec![0; wheel.dim()],
        };
        let mut checks: Vec<(String, Vec<i64>)> = vec![("base".into(), base.clone())];
        let twist = |mono: &ExponentVector| -> Vec<i64> {
            base.iter()
                .zip(mono.exponents())
                .map(|(b, &e)| b - i64::from(e))
                .collect()
        };
        for (j, mono) in wheel.f_out().iter().enumerate() {
            checks.push((format!("spoke[{}]", j + 1), twist(mono)));
        }
        for (j, mono) in wheel.f_in().iter().enumerate() {
            checks.push((format!("rim[{}]", j + 1), twist(mono)));
        }
        for (label, divisor) in checks {
            if !is_cartier(fan, &divisor)? {
                cartier_failures.push(label);
            }
        }
        all_cartier = Some(cartier_failures.is_empty());
    }
    Ok(ValidationReport {
        m: wheel.m(),
        is_complex: relation_failures.is_empty(),
        relation_failures,
        cartier_failures,
        all_cartier,
    })
}

/// The three maps of the four-term complex in explicit matrix form, together
/// with the fine degrees of all basis vectors.
///
/// Conventions: the right copy of the hub has fine degree zero, so spoke
/// basis vector `e_j` has degree `f_out[j]`, rim basis vector `e_{j,j+1}` has
/// degree `rim_fwd[j] + f_out[j+1]`, and the left hub degree is
/// `f_in[j] + deg e_{j,j+1}` (independent of `j` by the rhombus relations).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexMaps {
    pub m: usize,
    pub dim: usize,
    /// Right map: `e_j -> phi1[j-1] * e_L`.
    pub phi1: Vec<ExponentVector>,
    /// Middle map, row-major `m x m`: entry `[i][j]` is the signed monomial
    /// coefficient of `e_{i+1}` in the image of rim vector `j+1`.
    pub phi2: Vec<Vec<Option<(i8, ExponentVector)>>>,
    /// Left map: `e_L -> sum_j phi3[j-1] * e_{j,j+1}`.
    pub phi3: Vec<ExponentVector>,
    pub fine_degree_spokes: Vec<ExponentVector>,
    pub fine_degree_rim: Vec<ExponentVector>,
    pub fine_degree_left: ExponentVector,
}

impl ComplexMaps {
    /// Recomputes both compositions as exact polynomials and confirms every
    /// coefficient cancels.  Independent of the rhombus bookkeeping: works
    /// directly on the stored matrices.
    pub fn verify_zero_compositions(&self) -> Result<()> {
        use std::collections::BTreeMap;
        let m = self.m;
        // Right o middle, one polynomial per rim column.
        for col in 0..m {
            let mut acc: BTreeMap<ExponentVector, i64> = BTreeMap::new();
            for row in 0..m {
                if let Some((sign, mono)) = &self.phi2[row][col] {
                    let term = mono.mul(&self.phi1[row])?;
                    let slot = acc.entry(term).or_insert(0);
                    *slot += i64::from(*sign);
                }
            }
            acc.retain(|_, c| *c != 0);
            if !acc.is_empty() {
                return Err(Error::Inconsistency(format!(
                    "composition right o middle is nonzero in rim column {}",
                    col + 1
                )));
            }
        }
        // Middle o left, one polynomial per spoke row.
        for row in 0..m {
            let mut acc: BTreeMap<ExponentVector, i64> = BTreeMap::new();
            for col in 0..m {
                if let Some((sign, mono)) = &self.phi2[row][col] {
                    let term = mono.mul(&self.phi3[col])?;
                    let slot = acc.entry(term).or_insert(0);
                    *slot += i64::from(*sign);
                }
            }
            acc.retain(|_, c| *c != 0);
            if !acc.is_empty() {
                return Err(Error::Inconsistency(format!(
                    "composition middle o left is nonzero in spoke row {}",
                    row + 1
                )));
            }
        }
        Ok(())
    }
}

/// Assembles the complex, refusing wheels that violate a rhombus relation;
/// the error names the first violated family and position.
pub fn build_complex(wheel: &Wheel) -> Result<ComplexMaps> {
    if let Some(&(relation, j)) = wheel.check_relations().first() {
        return Err(Error::NotAComplex { relation, j });
    }
    let m = wheel.m();
    let mut phi2: Vec<Vec<Option<(i8, ExponentVector)>>> = vec![vec![None; m]; m];
    for j in 1..=m {
        let next = j % m + 1;
        phi2[next - 1][j - 1] = Some((1, wheel.rim_fwd()[j - 1].clone()));
        phi2[j - 1][j - 1] = Some((-1, wheel.rim_bwd()[j - 1].clone()));
    }
    let fine_degree_spokes: Vec<ExponentVector> = wheel.f_out().to_vec();
    let mut fine_degree_rim = Vec::with_capacity(m);
    for j in 1..=m {
        let next = j % m + 1;
        let fwd = wheel.rim_fwd()[j - 1].mul(&wheel.f_out()[next - 1])?;
        let bwd = wheel.rim_bwd()[j - 1].mul(&wheel.f_out()[j - 1])?;
        debug_assert_eq!(fwd, bwd);
        fine_degree_rim.push(fwd);
    }
    let fine_degree_left = wheel.f_in()[0].mul(&fine_degree_rim[0])?;
    for j in 2..=m {
        let other = wheel.f_in()[j - 1].mul(&fine_degree_rim[j - 1])?;
        if other != fine_degree_left {
            return Err(Error::Inconsistency(format!(
                "left hub degree disagrees at rim position {j}"
            )));
        }
    }
    Ok(ComplexMaps {
        m,
        dim: wheel.dim(),
        phi1: wheel.f_out().to_vec(),
        phi2,
        phi3: wheel.f_in().to_vec(),
        fine_degree_spokes,
        fine_degree_rim,
        fine_degree_left,
    })
}

/// A rim column written as unit * scalar * pairwise syzygy.
///
/// For `j < m` the rim column `alpha_j` is `gcd(rim pair) * beta_j` on the
/// nose; the closing column `alpha_m` walks the pair `(1, m)` downward, so
/// its unit is `-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaFactorization {
    /// One-based rim position.
    pub index: usize,
    pub alpha: SyzygyElement,
    /// The content `gcd(rim_fwd[j], rim_bwd[j])`.
    pub scalar: ExponentVector,
    /// `+1` for `j < m`, `-1` for the closing column.
    pub unit: i8,
    /// The pairwise syzygy `beta_j` of the spoke list.
    pub beta: SyzygyElement,
}

/// Factors every rim column of a relation-satisfying wheel through the
/// pairwise syzygies of its spoke list.
pub fn alpha_generators(wheel: &Wheel) -> Result<Vec<AlphaFactorization>> {
    if let Some(&(relation, j)) = wheel.check_relations().first() {
        return Err(Error::NotAComplex { relation, j });
    }
    let m = wheel.m();
    let betas = beta_generators(wheel.f_out())?;
    let mut out = Vec::with_capacity(m);
    for j in 1..=m {
        let next = j % m + 1;
        let alpha = SyzygyElement::from_terms(
            Basis::E,
            vec![
                (next, 1, wheel.rim_fwd()[j - 1].clone()),
                (j, -1, wheel.rim_bwd()[j - 1].clone()),
            ],
        )?;
        let scalar = wheel.rim_fwd()[j - 1].gcd(&wheel.rim_bwd()[j - 1])?;
        let unit: i8 = if j < m { 1 } else { -1 };
        let beta = &betas[j - 1];
        let scaled = beta.scaled(&scalar)?;
        let expected = if unit == 1 { scaled } else { scaled.neg() };
        if alpha != expected {
            return Err(Error::Inconsistency(format!(
                "rim column {j} does not factor through the pairwise syzygy"
            )));
        }
        out.push(AlphaFactorization {
            index: j,
            alpha,
            scalar,
            unit,
            beta: beta.clone(),
        });
    }
    Ok(out)
}
