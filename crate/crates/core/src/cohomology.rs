//! Cohomology sheaves of a wheel complex.
//!
//! For a wheel whose rhombus relations hold, the four-term complex has
//! cohomology in degrees `0, -1, -2, -3`:
//!
//! * degree 0 is the structure sheaf of the intersection of the spoke
//!   divisors, twisted by the base sheaf;
//! * degree -1 carries an n-step filtration, `n = m(m-1)/2`, whose k-th
//!   quotient is the structure sheaf of a subscheme `Z_k` cut out by
//!   explicit divisors, twisted by a class determined by the transposition
//!   `tau_k`;
//! * degree -2 is supported on the common divisor of the hub monomials and
//!   vanishes exactly when their gcd is 1;
//! * degree -3 always vanishes.
//!
//! Each `Z_k` is computed twice: once through the colon-ideal formulas on
//! the spoke monomials ([`wheel_filtration_raw`]) and once through divisor
//! arithmetic ([`cutting_divisors`]).  The two routes must agree generator
//! by generator, and [`subscheme_z`] enforces that.

use serde::Serialize;

use crate::circuits::TranspositionTable;
use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::syzygy::filtration_ideal_raw;
use crate::toric::{class_group, ClassGroup, DivisorClass, Fan};
use crate::wheel::Wheel;

/// Generators of the k-th filtration colon ideal of the wheel, in
/// definition order.
///
/// For `k <= m` the generators are the rim-pair gcd at position `k` and the
/// quotient `lcm(all spokes, later rim gcds) / lcm(f^k, f^{k+1})`; for
/// `k > m` the rim columns have been replaced by pairwise syzygies and the
/// generators coincide with the plain colon-ideal formulas on the spoke
/// list.
pub fn wheel_filtration_raw(wheel: &Wheel, k: usize) -> Result<Vec<ExponentVector>> {
    let m = wheel.m();
    let table = TranspositionTable::new(m)?;
    let n = table.len();
    if k == 0 || k > n {
        return Err(Error::StepOutOfRange { k, n });
    }
    if k > m {
        return filtration_ideal_raw(wheel.f_out(), k);
    }
    let next = k % m + 1;
    let first = wheel.rim_fwd()[k - 1].gcd(&wheel.rim_bwd()[k - 1])?;
    let mut total = ExponentVector::lcm_of(wheel.f_out())?;
    for i in k + 1..=m {
        let g = wheel.rim_fwd()[i - 1].gcd(&wheel.rim_bwd()[i - 1])?;
        total = total.lcm(&g)?;
    }
    let pair = wheel.f_out()[k - 1].lcm(&wheel.f_out()[next - 1])?;
    Ok(vec![first, total.div(&pair)?])
}

/// The k-th filtration colon ideal in canonical form.
pub fn wheel_filtration_ideal(wheel: &Wheel, k: usize) -> Result<MonomialIdeal> {
    MonomialIdeal::from_generators(wheel.dim(), wheel_filtration_raw(wheel, k)?)
}

/// Exponent vectors of the effective divisors cutting out `Z_k`, computed by
/// divisor arithmetic: lcm of divisors is the entrywise maximum and the
/// difference of nested divisors is the entrywise difference.
///
/// This is an independent route to the same list as
/// [`wheel_filtration_raw`]; callers that need the agreement enforced should
/// go through [`subscheme_z`].
pub fn cutting_divisors(wheel: &Wheel, k: usize) -> Result<Vec<ExponentVector>> {
    let m = wheel.m();
    let table = TranspositionTable::new(m)?;
    let n = table.len();
    if k == 0 || k > n {
        return Err(Error::StepOutOfRange { k, n });
    }
    let spoke = |j: usize| &wheel.f_out()[(j - 1) % m];
    if k <= m {
        // Rim-pair gcd at k, then the excess of the total lcm (including the
        // rim gcds strictly after k) over the adjacent-spoke lcm.
        let rim_gcd = |j: usize| -> Result<ExponentVector> {
            wheel.rim_fwd()[j - 1].gcd(&wheel.rim_bwd()[j - 1])
        };
        let mut big = spoke(1).clone();
        for j in 2..=m {
            big = big.lcm(spoke(j))?;
        }
        for j in k + 1..=m {
            big = big.lcm(&rim_gcd(j)?)?;
        }
        let small = spoke(k).lcm(spoke(k + 1))?;
        return Ok(vec![rim_gcd(k)?, big.div(&small)?]);
    }
    if k <= 2 * m - 3 {
        let nu = k - m + 2;
        let small = spoke(1).lcm(spoke(nu))?;
        let mut long = small.clone();
        for j in nu + 1..=m {
            long = long.lcm(spoke(j))?;
        }
        let triangle = small.lcm(spoke(nu - 1))?;
        return Ok(vec![long.div(&small)?, triangle.div(&small)?]);
    }
    let (mu_k, nu_k) = table.pair(k)?;
    let small = spoke(mu_k).lcm(spoke(nu_k))?;
    let mut cuts = Vec::new();
    for mu in (1..mu_k).chain([nu_k - 1]) {
        cuts.push(small.lcm(spoke(mu))?.div(&small)?);
    }
    Ok(cuts)
}

/// The subscheme `Z_k` of the toric variety: cutting divisors, the monomial
/// ideal they generate, and its fan-realizable components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubschemeZ {
    pub k: usize,
    /// Exponent vectors of the cutting divisors, in definition order.
    pub cutting_divisors: Vec<ExponentVector>,
    /// The same divisors in `E`-notation, e.g. `E_457`.
    pub cutting_divisor_labels: Vec<String>,
    /// Canonical form of the ideal they generate.
    pub ideal: MonomialIdeal,
    /// All minimal primes, as sorted zero-based ray index sets.
    pub minimal_primes: Vec<Vec<usize>>,
    /// The minimal primes whose rays span a cone of the fan; these are the
    /// components of `Z_k` as a subscheme of the variety.
    pub components: Vec<Vec<usize>>,
    /// The components as intersections of prime divisors, e.g. `E_1 ∩ E_7`.
    pub component_labels: Vec<String>,
    /// True when no component is realizable, i.e. `Z_k` is empty.
    pub empty: bool,
}

/// Computes `Z_k`, checking that divisor arithmetic and the colon-ideal
/// formulas produce the same cutting divisors in the same order.
pub fn subscheme_z(wheel: &Wheel, k: usize, fan: &Fan) -> Result<SubschemeZ> {
    if fan.ray_count() != wheel.dim() {
        return Err(Error::DimensionMismatch {
            left: fan.ray_count(),
            right: wheel.dim(),
        });
    }
    let cuts = cutting_divisors(wheel, k)?;
    let raw = wheel_filtration_raw(wheel, k)?;
    if cuts != raw {
        return Err(Error::Inconsistency(format!(
            "step {k}: cutting divisors {cuts:?} disagree with colon-ideal generators {raw:?}"
        )));
    }
    let ideal = MonomialIdeal::from_generators(wheel.dim(), cuts.clone())?;
    let minimal_primes = ideal.minimal_primes();
    let components: Vec<Vec<usize>> = minimal_primes
        .iter()
        .filter(|p| fan.prime_set_realizable(p))
        .cloned()
        .collect();
    Ok(SubschemeZ {
        k,
        cutting_divisor_labels: cuts.iter().map(divisor_label).collect(),
        cutting_divisors: cuts,
        empty: components.is_empty(),
        ideal,
        minimal_primes,
        component_labels: components.iter().map(|p| component_label(p)).collect(),
        components,
    })
}

/// One step of the degree `-1` filtration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationStep {
    pub k: usize,
    /// The transposition `(mu_k, nu_k)`.
    pub tau: (usize, usize),
    /// Colon-ideal generators in definition order.
    pub raw_generators: Vec<ExponentVector>,
    pub ideal: MonomialIdeal,
    /// Canonical minimal generators of the ideal as product strings.
    pub ideal_generators: Vec<String>,
    /// True when the quotient module is zero, i.e. the ideal is the unit
    /// ideal.  Distinct from `subscheme.empty`: a nonzero quotient module
    /// can still be supported outside every cone of the fan.
    pub vanishes: bool,
    /// Class of the twist of the quotient: spoke classes at `mu_k` and
    /// `nu_k`, minus the base, plus the class of the spokes' common divisor.
    pub shift_class: DivisorClass,
    /// Human-readable form of the twist.
    pub shift_symbolic: String,
    pub subscheme: SubschemeZ,
}

/// Degree 0: structure sheaf of the intersection of the spoke divisors,
/// twisted by the base class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct H0Report {
    pub ideal: MonomialIdeal,
    pub minimal_primes: Vec<Vec<usize>>,
    pub components: Vec<Vec<usize>>,
    /// The components as intersections of prime divisors.
    pub component_labels: Vec<String>,
    pub empty: bool,
    pub class: DivisorClass,
}

/// Degree -2: supported on the common divisor of the hub monomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct H2Report {
    /// Exponents of `gcd` of the hub monomials.
    pub divisor: ExponentVector,
    /// The same divisor in `E`-notation.
    pub divisor_label: String,
    pub is_zero: bool,
    pub class: DivisorClass,
}

/// Cohomology of the wheel complex in all four degrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub m: usize,
    pub n: usize,
    pub base_class: DivisorClass,
    pub h0: H0Report,
    pub h1_steps: Vec<FiltrationStep>,
    pub h2: H2Report,
    /// Degree -3 vanishes for every wheel complex: the leftmost map is a
    /// nonzero map of invertible sheaves, hence injective.
    pub h3_zero: bool,
}

fn divisor_exponent_label(e: &ExponentVector) -> String {
    if e.is_one() {
        return "0".into();
    }
    let all_simple = e.exponents().iter().all(|&c| c <= 1);
    if all_simple {
        let digits: Vec<String> = e
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 1)
            .map(|(i, _)| (i + 1).to_string())
            .collect();
        return format!("E_{}", digits.join(""));
    }
    e.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(i, &c)| {
            if c == 1 {
                format!("E_{}", i + 1)
            } else {
                format!("{}E_{}", c, i + 1)
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Renders a ray index set as an intersection of prime divisors, e.g.
/// `E_1 ∩ E_2 ∩ E_7` for the zero-based set `{0, 1, 6}`.
pub fn component_label(prime: &[usize]) -> String {
    prime
        .iter()
        .map(|i| format!("E_{}", i + 1))
        .collect::<Vec<_>>()
        .join(" ∩ ")
}

/// Renders a cutting divisor as `E`-notation, e.g. `E_457` for
/// `x4*x5*x7`.
pub fn divisor_label(e: &ExponentVector) -> String {
    divisor_exponent_label(e)
}

fn base_divisor_vec(wheel: &Wheel) -> Vec<i64> {
    match wheel.base_divisor() {
        Some(b) => b.to_vec(),
        None => vec![0; wheel.dim()],
    }
}

fn shift_class_for(
    cl: &ClassGroup,
    base: &DivisorClass,
    wheel: &Wheel,
    mu: usize,
    nu: usize,
) -> Result<DivisorClass> {
    let f_mu = &wheel.f_out()[mu - 1];
    let f_nu = &wheel.f_out()[nu - 1];
    let via_lcm = cl.sub(base, &cl.class_of_exponents(&f_mu.lcm(f_nu)?)?);
    // Independent route: class(L_mu) + class(L_nu) - class(L) + class(gcd).
    let l = |f: &ExponentVector| -> Result<DivisorClass> {
        Ok(cl.sub(base, &cl.class_of_exponents(f)?))
    };
    let four_term = cl.add(
        &cl.sub(&cl.add(&l(f_mu)?, &l(f_nu)?), base),
        &cl.class_of_exponents(&f_mu.gcd(f_nu)?)?,
    );
    if via_lcm != four_term {
        return Err(Error::Inconsistency(format!(
            "twist class mismatch for pair ({mu}, {nu})"
        )));
    }
    Ok(via_lcm)
}

/// Full cohomology computation for a wheel on a fan.
///
/// Fails with [`Error::NotAComplex`] when a rhombus relation is violated,
/// naming the first broken family and position.
pub fn cohomology_report(wheel: &Wheel, fan: &Fan) -> Result<CohomologyReport> {
    if let Some(&(relation, j)) = wheel.check_relations().first() {
        return Err(Error::NotAComplex { relation, j });
    }
    if fan.ray_count() != wheel.dim() {
        return Err(Error::DimensionMismatch {
            left: fan.ray_count(),
            right: wheel.dim(),
        });
    }
    let m = wheel.m();
    let table = TranspositionTable::new(m)?;
    let n = table.len();
    let cl = class_group(fan)?;
    let base = cl.class(&base_divisor_vec(wheel))?;

    let h0_ideal = MonomialIdeal::from_generators(wheel.dim(), wheel.f_out().to_vec())?;
    let h0_primes = h0_ideal.minimal_primes();
    let h0_components: Vec<Vec<usize>> = h0_primes
        .iter()
        .filter(|p| fan.prime_set_realizable(p))
        .cloned()
        .collect();
    let h0 = H0Report {
        ideal: h0_ideal,
        empty: h0_components.is_empty(),
        minimal_primes: h0_primes,
        component_labels: h0_components.iter().map(|p| component_label(p)).collect(),
        components: h0_components,
        class: base.clone(),
    };

    let mut h1_steps = Vec::with_capacity(n);
    for k in 1..=n {
        let (mu, nu) = table.pair(k)?;
        let subscheme = subscheme_z(wheel, k, fan)?;
        let raw_generators = subscheme.cutting_divisors.clone();
        let ideal = subscheme.ideal.clone();
        let shift_class = shift_class_for(&cl, &base, wheel, mu, nu)?;
        h1_steps.push(FiltrationStep {
            k,
            tau: (mu, nu),
            raw_generators,
            vanishes: ideal.is_unit(),
            ideal_generators: ideal.generator_strings(),
            ideal,
            shift_class,
            shift_symbolic: format!(
                "class(L_{mu}) + class(L_{nu}) - class(L) + class(gcd(D^{mu}, D^{nu}))"
            ),
            subscheme,
        });
    }

    let hub_gcd = ExponentVector::gcd_of(wheel.f_in())?;
    let h2_class = cl.add(&base, &cl.class_of_exponents(&hub_gcd)?);
    let h2 = H2Report {
        is_zero: hub_gcd.is_one(),
        divisor_label: divisor_label(&hub_gcd),
        divisor: hub_gcd,
        class: h2_class,
    };

    Ok(CohomologyReport {
        m,
        n,
        base_class: base,
        h0,
        h1_steps,
        h2,
        h3_zero: true,
    })
}

impl CohomologyReport {
    /// Plain-text rendering of the full report.
    pub fn render(&self, cl: &ClassGroup) -> String {
        let mut out = String::new();
        let push = |out: &mut String, s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        push(&mut out, format!("wheel: m = {}, steps n = {}", self.m, self.n));
        push(
            &mut out,
            format!("base class: {}", cl.render(&self.base_class)),
        );
        let h0_state = if self.h0.empty {
            "zero (intersection of spoke divisors is empty)".to_string()
        } else {
            format!(
                "supported on {}",
                self.h0
                    .components
                    .iter()
                    .map(|p| component_label(p))
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        };
        push(&mut out, format!("H^0: {h0_state}"));
        push(&mut out, "H^-1 filtration:".into());
        for step in &self.h1_steps {
            let (mu, nu) = step.tau;
            let status = if step.vanishes {
                "quotient vanishes".to_string()
            } else if step.subscheme.empty {
                "nonzero module, empty subscheme".to_string()
            } else {
                format!(
                    "Z_{} = {} with components {}",
                    step.k,
                    step.subscheme
                        .cutting_divisors
                        .iter()
                        .map(divisor_label)
                        .collect::<Vec<_>>()
                        .join(" ∩ "),
                    step.subscheme
                        .components
                        .iter()
                        .map(|p| component_label(p))
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            };
            push(
                &mut out,
                format!(
                    "  k={:<2} tau=({mu},{nu}) twist {}: {status}",
                    step.k,
                    cl.render(&step.shift_class)
                ),
            );
        }
        if self.h2.is_zero {
            push(&mut out, "H^-2: zero (hub monomials are coprime)".into());
        } else {
            push(
                &mut out,
                format!(
                    "H^-2: supported on {} with class {}",
                    divisor_label(&self.h2.divisor),
                    cl.render(&self.h2.class)
                ),
            );
        }
        push(&mut out, "H^-3: zero".into());
        out
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::testdata::{ev, hex_fan, hex_wheel};

    #[test]
    fn hex_low_steps() {
        let wheel = hex_wheel();
        // k=3: rim-pair gcd x7, then lcm(all spokes, rim gcds 4..6) minus
        // the pair lcm: x1..x7 over x2*x3*x4 leaves x1*x5*x6*x7.
        assert_eq!(
            wheel_filtration_raw(&wheel, 3).unwrap(),
            vec![ev(&[0, 0, 0, 0, 0, 0, 1]), ev(&[1, 0, 0, 0, 1, 1, 1])]
        );
        // k=6 wraps to the pair (6, 1).
        assert_eq!(
            wheel_filtration_raw(&wheel, 6).unwrap(),
            vec![ev(&[0, 0, 0, 0, 0, 0, 1]), ev(&[0, 1, 1, 1, 0, 0, 1])]
        );
        // High steps delegate to the plain colon-ideal formulas.
        assert_eq!(
            wheel_filtration_raw(&wheel, 7).unwrap(),
            crate::syzygy::filtration_ideal_raw(wheel.f_out(), 7).unwrap()
        );
    }

    #[test]
    fn cutting_divisors_agree_with_colon_ideals() {
        let wheel = hex_wheel();
        for k in 1..=15 {
            assert_eq!(
                cutting_divisors(&wheel, k).unwrap(),
                wheel_filtration_raw(&wheel, k).unwrap(),
                "step {k}"
            );
        }
    }

    #[test]
    fn hex_subschemes() {
        let wheel = hex_wheel();
        let fan = hex_fan();
        // Z_3 is supported on the exceptional divisor E_7.
        let z3 = subscheme_z(&wheel, 3, &fan).unwrap();
        assert_eq!(z3.components, vec![vec![6]]);
        assert!(!z3.empty);
        // Z_11 has a unique minimal prime {x3, x6} but no cone contains
        // rays {2, 5}: nonzero module, empty subscheme.
        let z11 = subscheme_z(&wheel, 11, &fan).unwrap();
        assert_eq!(z11.minimal_primes, vec![vec![2, 5]]);
        assert!(z11.components.is_empty());
        assert!(z11.empty);
        // Z_15 is the torus-invariant point E_1 cap E_2 cap E_7.
        let z15 = subscheme_z(&wheel, 15, &fan).unwrap();
        assert_eq!(z15.components, vec![vec![0, 1, 6]]);
        assert_eq!(component_label(&z15.components[0]), "E_1 ∩ E_2 ∩ E_7");
    }

    #[test]
    fn hex_report() {
        let wheel = hex_wheel();
        let fan = hex_fan();
        let report = cohomology_report(&wheel, &fan).unwrap();
        assert!(report.h0.empty);
        assert!(report.h2.is_zero);
        assert!(report.h3_zero);
        let vanishing: Vec<usize> = report
            .h1_steps
            .iter()
            .filter(|s| s.vanishes)
            .map(|s| s.k)
            .collect();
        assert_eq!(vanishing, vec![1, 2, 4, 5, 9, 10, 12, 13]);
        // The twist of step 15 is base - class(lcm(f^4, f^6)).
        let cl = class_group(&fan).unwrap();
        let lcm = ev(&[0, 0, 1, 1, 1, 1, 0]);
        let expected = cl.sub(
            &report.base_class,
            &cl.class_of_exponents(&lcm).unwrap(),
        );
        assert_eq!(report.h1_steps[14].shift_class, expected);
    }

    #[test]
    fn labels() {
        assert_eq!(divisor_label(&ev(&[0, 0, 0, 1, 1, 0, 1])), "E_457");
        assert_eq!(divisor_label(&ev(&[0, 0, 0, 0, 0, 0, 0])), "0");
        assert_eq!(divisor_label(&ev(&[2, 0, 1])), "2E_1 + E_3");
    }

    #[test]
    fn broken_wheel_refused() {
        let wheel = hex_wheel();
        let fan = hex_fan();
        let mut f_in = wheel.f_in().to_vec();
        f_in[0] = f_in[0].mul(&ev(&[1, 0, 0, 0, 0, 0, 0])).unwrap();
        let broken = Wheel::new(
            7,
            wheel.f_out().to_vec(),
            f_in,
            wheel.rim_fwd().to_vec(),
            wheel.rim_bwd().to_vec(),
            None,
        )
        .unwrap();
        let err = cohomology_report(&broken, &fan).unwrap_err();
        assert!(matches!(err, Error::NotAComplex { relation: 13, .. }));
    }
}
