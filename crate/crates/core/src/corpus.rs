//! Seeded random instances for property and equivalence testing.
//!
//! Wheels are built so that the defining relations hold by construction:
//! each rim pair is a common monomial times the coprime lcm quotients of the
//! adjacent spokes, which settles the outgoing relations, and the incoming
//! monomials are then forced up to a global unit by telescoping the rim
//! ratios around the cycle.  The telescope closes because the rim ratios
//! multiply to one around the rim, so the construction never has to reject
//! and retry.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::monomial::ExponentVector;
use crate::wheel::Wheel;

pub fn corpus_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_monomial(
    rng: &mut ChaCha8Rng,
    nvars: usize,
    max_exp: u32,
    allow_unit: bool,
) -> ExponentVector {
    loop {
        let exps: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect();
        if allow_unit || exps.iter().any(|&e| e > 0) {
            return ExponentVector::new(exps);
        }
    }
}

/// `m` non-unit monomials in `nvars` variables with exponents `<= max_exp`.
pub fn random_spoke_list(
    rng: &mut ChaCha8Rng,
    m: usize,
    nvars: usize,
    max_exp: u32,
) -> Vec<ExponentVector> {
    (0..m)
        .map(|_| random_monomial(rng, nvars, max_exp, false))
        .collect()
}

/// Deterministic mixed corpus of spoke lists: 3 to 6 spokes in 2 to 5
/// variables with exponents up to 2.
pub fn spoke_corpus(seed: u64, count: usize) -> Vec<Vec<ExponentVector>> {
    let mut rng = corpus_rng(seed);
    (0..count)
        .map(|_| {
            let m = rng.gen_range(3..=6);
            let nvars = rng.gen_range(2..=5);
            random_spoke_list(&mut rng, m, nvars, 2)
        })
        .collect()
}

/// Like [`spoke_corpus`] but with the spoke count fixed.
pub fn spoke_corpus_m(seed: u64, count: usize, m: usize) -> Result<Vec<Vec<ExponentVector>>> {
    if m < 3 {
        return Err(Error::UnsupportedSpokeCount { m });
    }
    let mut rng = corpus_rng(seed);
    Ok((0..count)
        .map(|_| {
            let nvars = rng.gen_range(2..=5);
            random_spoke_list(&mut rng, m, nvars, 2)
        })
        .collect())
}

/// A random wheel satisfying both relation families exactly.
pub fn random_wheel(
    rng: &mut ChaCha8Rng,
    m: usize,
    nvars: usize,
    max_exp: u32,
) -> Result<Wheel> {
    let f_out = random_spoke_list(rng, m, nvars, max_exp);
    let mut rim_fwd = Vec::with_capacity(m);
    let mut rim_bwd = Vec::with_capacity(m);
    for j in 0..m {
        let next = (j + 1) % m;
        let l = f_out[j].lcm(&f_out[next])?;
        let scale = random_monomial(rng, nvars, 1, true);
        rim_fwd.push(scale.mul(&l.div(&f_out[next])?)?);
        rim_bwd.push(scale.mul(&l.div(&f_out[j])?)?);
    }

    // Telescope the incoming relation around the rim, then normalize the
    // exponents to be nonnegative with minimum zero in each variable.
    let mut raw: Vec<Vec<i64>> = vec![vec![0; nvars]];
    for j in 1..m {
        let row: Vec<i64> = (0..nvars)
            .map(|v| {
                raw[j - 1][v] + i64::from(rim_fwd[j - 1].exponents()[v])
                    - i64::from(rim_bwd[j].exponents()[v])
            })
            .collect();
        raw.push(row);
    }
    for v in 0..nvars {
        let min = raw.iter().map(|r| r[v]).min().unwrap_or(0);
        raw.iter_mut().for_each(|r| r[v] -= min);
    }

    // A common factor keeps the gcd of the incoming monomials sometimes
    // nontrivial, which exercises the divisorial part of the cohomology.
    let h = random_monomial(rng, nvars, 1, true);
    let mut f_in = Vec::with_capacity(m);
    for row in raw {
        let exps: Vec<u32> = row
            .into_iter()
            .map(|e| u32::try_from(e).map_err(|_| Error::ArithmeticOverflow))
            .collect::<Result<_>>()?;
        f_in.push(ExponentVector::new(exps).mul(&h)?);
    }

    let wheel = Wheel::new(nvars, f_out, f_in, rim_fwd, rim_bwd, None)?;
    let failures = wheel.check_relations();
    if !failures.is_empty() {
        return Err(Error::Inconsistency(format!(
            "random wheel violates its own relations: {failures:?}"
        )));
    }
    Ok(wheel)
}

/// A wheel with one monomial bumped, together with the exact set of
/// relations the bump must break.
///
/// The expected set is derived purely from the incidence structure: a
/// monomial appears in exactly two relations, and bumping one side of an
/// equality that held before always breaks it.
pub struct Perturbation {
    pub wheel: Wheel,
    pub field: &'static str,
    /// One-based index of the perturbed monomial.
    pub index: usize,
    /// Sorted by family then index, matching the relation checker's order.
    pub expected_failures: Vec<(u8, usize)>,
}

pub fn perturb_wheel(rng: &mut ChaCha8Rng, wheel: &Wheel) -> Result<Perturbation> {
    let m = wheel.m();
    let nvars = wheel.dim();
    let j = rng.gen_range(0..m);
    let var = rng.gen_range(0..nvars);
    let field = ["f_out", "f_in", "rim_fwd", "rim_bwd"][rng.gen_range(0..4)];

    let bump = |list: &[ExponentVector]| -> Vec<ExponentVector> {
        let mut out = list.to_vec();
        let mut exps = out[j].exponents().to_vec();
        exps[var] += 1;
        out[j] = ExponentVector::new(exps);
        out
    };
    let (f_out, f_in, rim_fwd, rim_bwd) = match field {
        "f_out" => (
            bump(wheel.f_out()),
            wheel.f_in().to_vec(),
            wheel.rim_fwd().to_vec(),
            wheel.rim_bwd().to_vec(),
        ),
        "f_in" => (
            wheel.f_out().to_vec(),
            bump(wheel.f_in()),
            wheel.rim_fwd().to_vec(),
            wheel.rim_bwd().to_vec(),
        ),
        "rim_fwd" => (
            wheel.f_out().to_vec(),
            wheel.f_in().to_vec(),
            bump(wheel.rim_fwd()),
            wheel.rim_bwd().to_vec(),
        ),
        _ => (
            wheel.f_out().to_vec(),
            wheel.f_in().to_vec(),
            wheel.rim_fwd().to_vec(),
            bump(wheel.rim_bwd()),
        ),
    };

    let one = j + 1;
    let prev = (j + m - 1) % m + 1;
    let next = (j + 1) % m + 1;
    let mut expected = match field {
        "f_out" => vec![(12, prev), (12, one)],
        "f_in" => vec![(13, one), (13, next)],
        "rim_fwd" => vec![(12, one), (13, next)],
        _ => vec![(12, one), (13, one)],
    };
    expected.sort();

    Ok(Perturbation {
        wheel: Wheel::new(nvars, f_out, f_in, rim_fwd, rim_bwd, None)?,
        field,
        index: one,
        expected_failures: expected,
    })
}
