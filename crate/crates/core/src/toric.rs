//! Fans, class groups and torus-invariant divisors.
//!
//! A fan is given by primitive ray generators and maximal cones. The class
//! group is the cokernel of the pairing map `M -> Z^d`, `m -> (<m, v_rho>)`,
//! presented through a Smith normal form with unimodular transforms; degrees
//! of divisors are read off from the selected rows of the left transform.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::ExponentVector;
use crate::snf::{smith_normal_form, solve_integer};

/// A fan in `Z^dim`, described by primitive rays and maximal cones.
///
/// Serialized form uses zero-based ray indices in `max_cones`.
/// Deserialization runs the same validation as [`Fan::new`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFan")]
pub struct Fan {
    dim: usize,
    rays: Vec<Vec<i64>>,
    max_cones: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawFan {
    dim: usize,
    rays: Vec<Vec<i64>>,
    max_cones: Vec<Vec<usize>>,
}

impl TryFrom<RawFan> for Fan {
    type Error = Error;

    fn try_from(raw: RawFan) -> Result<Fan> {
        Fan::new(raw.dim, raw.rays, raw.max_cones)
    }
}

impl Fan {
    /// Validates rays (nonzero, primitive, right length) and cone indices.
    pub fn new(dim: usize, rays: Vec<Vec<i64>>, max_cones: Vec<Vec<usize>>) -> Result<Self> {
        for (i, ray) in rays.iter().enumerate() {
            if ray.len() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: ray.len(),
                });
            }
            let g = ray
                .iter()
                .fold(0u64, |acc, &x| num_integer::gcd(acc, x.unsigned_abs()));
            if g != 1 {
                return Err(Error::NonPrimitiveRay { ray: i, gcd: g });
            }
        }
        let mut cones: Vec<Vec<usize>> = Vec::with_capacity(max_cones.len());
        for (c, cone) in max_cones.iter().enumerate() {
            let set: BTreeSet<usize> = cone.iter().copied().collect();
            for &idx in &set {
                if idx >= rays.len() {
                    return Err(Error::ConeIndexOutOfRange {
                        cone: c,
                        index: idx,
                        count: rays.len(),
                    });
                }
            }
            cones.push(set.into_iter().collect());
        }
        cones.sort();
        cones.dedup();
        Ok(Fan {
            dim,
            rays,
            max_cones: cones,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of rays, i.e. the variable count of the Cox ring.
    pub fn ray_count(&self) -> usize {
        self.rays.len()
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    /// True iff the given zero-based variable set is contained in some cone
    /// of the fan. Every cone is a face of a maximal cone, so a direct
    /// subset test against the maximal cones decides this.
    pub fn prime_set_realizable(&self, vars: &[usize]) -> bool {
        if vars.iter().any(|&v| v >= self.ray_count()) {
            return false;
        }
        self.max_cones
            .iter()
            .any(|cone| vars.iter().all(|v| cone.contains(v)))
    }
}

/// The divisor class group `Cl(X) = Z^d / im(M)` of a fan without torus
/// factors, with the map `Z^d -> Cl(X)` in explicit coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassGroup {
    ray_count: usize,
    /// One entry per coordinate of the class group: `0` marks a free factor,
    /// an entry `q >= 2` a torsion factor `Z/q`. Torsion comes first.
    invariant_factors: Vec<u64>,
    /// One row per coordinate; the class of a divisor `D` has coordinates
    /// `row . D`, with torsion rows reduced modulo their factor.
    degree_rows: Vec<Vec<i64>>,
}

/// A divisor class in the coordinates of a [`ClassGroup`]. Torsion
/// coordinates are kept reduced to `0..q`, so equality is componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    pub coords: Vec<i64>,
}

impl ClassGroup {
    pub fn ray_count(&self) -> usize {
        self.ray_count
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.invariant_factors.iter().filter(|&&q| q == 0).count()
    }

    pub fn torsion_factors(&self) -> Vec<u64> {
        self.invariant_factors
            .iter()
            .copied()
            .filter(|&q| q != 0)
            .collect()
    }

    pub fn zero_class(&self) -> DivisorClass {
        DivisorClass {
            coords: vec![0; self.invariant_factors.len()],
        }
    }

    fn reduce(&self, mut coords: Vec<i64>) -> DivisorClass {
        for (c, &q) in coords.iter_mut().zip(&self.invariant_factors) {
            if q != 0 {
                let q = q as i64;
                *c = c.rem_euclid(q);
            }
        }
        DivisorClass { coords }
    }

    /// Class of an integer divisor `sum a_i E_i` given by its coefficients.
    pub fn class(&self, divisor: &[i64]) -> Result<DivisorClass> {
        if divisor.len() != self.ray_count {
            return Err(Error::DivisorLength {
                got: divisor.len(),
                expected: self.ray_count,
            });
        }
        let mut coords = Vec::with_capacity(self.degree_rows.len());
        for row in &self.degree_rows {
            let mut acc: i64 = 0;
            for (&r, &a) in row.iter().zip(divisor) {
                let term = r.checked_mul(a).ok_or(Error::ClassGroupOverflow)?;
                acc = acc.checked_add(term).ok_or(Error::ClassGroupOverflow)?;
            }
            coords.push(acc);
        }
        Ok(self.reduce(coords))
    }

    /// Class of an effective divisor given as a monomial exponent vector.
    pub fn class_of_exponents(&self, e: &ExponentVector) -> Result<DivisorClass> {
        let divisor: Vec<i64> = e.exponents().iter().map(|&x| i64::from(x)).collect();
        self.class(&divisor)
    }

    pub fn add(&self, a: &DivisorClass, b: &DivisorClass) -> DivisorClass {
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .map(|(&x, &y)| x + y)
            .collect();
        self.reduce(coords)
    }

    pub fn sub(&self, a: &DivisorClass, b: &DivisorClass) -> DivisorClass {
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .map(|(&x, &y)| x - y)
            .collect();
        self.reduce(coords)
    }

    pub fn neg(&self, a: &DivisorClass) -> DivisorClass {
        let coords = a.coords.iter().map(|&x| -x).collect();
        self.reduce(coords)
    }

    /// Human-readable form, e.g. `(3, -1; 1 mod 2)`.
    pub fn render(&self, c: &DivisorClass) -> String {
        let mut free = Vec::new();
        let mut tors = Vec::new();
        for (x, &q) in c.coords.iter().zip(&self.invariant_factors) {
            if q == 0 {
                free.push(x.to_string());
            } else {
                tors.push(format!("{x} mod {q}"));
            }
        }
        match (free.is_empty(), tors.is_empty()) {
            (true, true) => "0".to_string(),
            (false, true) => format!("({})", free.join(", ")),
            (true, false) => format!("({})", tors.join(", ")),
            (false, false) => format!("({}; {})", free.join(", "), tors.join(", ")),
        }
    }
}

impl DivisorClass {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Computes the class group of the fan.
///
/// The pairing matrix `A` has one row per ray; `Cl(X)` is its cokernel.
/// Requires the rays to span the ambient lattice rationally (no torus
/// factor), i.e. `rank A = dim`.
pub fn class_group(fan: &Fan) -> Result<ClassGroup> {
    let d = fan.ray_count();
    let n = fan.dim();
    let a: Vec<Vec<i64>> = fan.rays().to_vec();
    let snf = smith_normal_form(&a);
    if snf.rank < n {
        return Err(Error::TorusFactor);
    }
    let mut invariant_factors = Vec::new();
    let mut degree_rows = Vec::new();
    let big_to_i64 = |x: &BigInt| x.to_i64().ok_or(Error::ClassGroupOverflow);
    // Torsion coordinates: diagonal entries > 1.
    for i in 0..snf.rank {
        if snf.diagonal[i] > BigInt::from(1) {
            invariant_factors.push(
                snf.diagonal[i]
                    .to_u64()
                    .ok_or(Error::ClassGroupOverflow)?,
            );
            degree_rows.push(
                snf.left[i]
                    .iter()
                    .map(big_to_i64)
                    .collect::<Result<Vec<i64>>>()?,
            );
        }
    }
    // Free coordinates: rows beyond the rank.
    for i in snf.rank..d {
        invariant_factors.push(0);
        degree_rows.push(
            snf.left[i]
                .iter()
                .map(big_to_i64)
                .collect::<Result<Vec<i64>>>()?,
        );
    }
    let cg = ClassGroup {
        ray_count: d,
        invariant_factors,
        degree_rows,
    };
    // Exactness: the composite deg . div vanishes, i.e. principal divisors
    // map to zero. div(e_i) is the i-th column of the ray matrix.
    for i in 0..n {
        let principal: Vec<i64> = fan.rays().iter().map(|ray| ray[i]).collect();
        let c = cg.class(&principal)?;
        if !c.is_zero() {
            return Err(Error::Inconsistency(format!(
                "degree map does not kill the principal divisor of lattice coordinate {i}"
            )));
        }
    }
    Ok(cg)
}

/// Convenience wrapper: the class of `divisor` in `Cl(X)`.
pub fn divisor_class(fan: &Fan, divisor: &[i64]) -> Result<DivisorClass> {
    class_group(fan)?.class(divisor)
}

/// Decides whether `D = sum a_rho E_rho` is Cartier: on every maximal cone
/// there must be an integer lattice point `m` with `<m, v_rho> = -a_rho`
/// for all rays `rho` of the cone. The integer solvability test runs
/// through the Smith normal form, so rational-but-not-integral systems are
/// rejected exactly.
pub fn is_cartier(fan: &Fan, divisor: &[i64]) -> Result<bool> {
    if divisor.len() != fan.ray_count() {
        return Err(Error::DivisorLength {
            got: divisor.len(),
            expected: fan.ray_count(),
        });
    }
    for cone in fan.max_cones() {
        let a: Vec<Vec<i64>> = cone.iter().map(|&r| fan.rays()[r].clone()).collect();
        let b: Vec<i64> = cone.iter().map(|&r| -divisor[r]).collect();
        if solve_integer(&a, &b)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn p2_fan() -> Fan {
        Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, -1]],
            vec![vec![0, 1], vec![0, 2], vec![1, 2]],
        )
        .unwrap()
    }

    pub(crate) fn quadric_cone_fan() -> Fan {
        Fan::new(
            3,
            vec![vec![1, 0, 1], vec![0, 1, 1], vec![-1, 0, 1], vec![0, -1, 1]],
            vec![vec![0, 1, 2, 3]],
        )
        .unwrap()
    }

    #[test]
    fn rejects_non_primitive_rays() {
        let err = Fan::new(2, vec![vec![2, 4]], vec![vec![0]]).unwrap_err();
        assert_eq!(err, Error::NonPrimitiveRay { ray: 0, gcd: 2 });
        let err = Fan::new(2, vec![vec![0, 0]], vec![vec![0]]).unwrap_err();
        assert_eq!(err, Error::NonPrimitiveRay { ray: 0, gcd: 0 });
    }

    #[test]
    fn rejects_out_of_range_cone_indices() {
        let err = Fan::new(2, vec![vec![1, 0], vec![0, 1]], vec![vec![0, 2]]).unwrap_err();
        assert!(matches!(err, Error::ConeIndexOutOfRange { index: 2, .. }));
    }

    #[test]
    fn projective_plane_class_group_is_the_degree() {
        let cg = class_group(&p2_fan()).unwrap();
        assert_eq!(cg.invariant_factors(), &[0]);
        let e1 = cg.class(&[1, 0, 0]).unwrap();
        let e2 = cg.class(&[0, 1, 0]).unwrap();
        let e3 = cg.class(&[0, 0, 1]).unwrap();
        assert_eq!(e1, e2);
        assert_eq!(e2, e3);
        assert!(!e1.is_zero());
        let sum = cg.class(&[1, 1, 1]).unwrap();
        assert_eq!(sum.coords[0], 3 * e1.coords[0]);
        // A principal divisor: the first lattice coordinate pairing.
        assert!(cg.class(&[1, 0, -1]).unwrap().is_zero());
    }

    #[test]
    fn quadric_cone_has_free_rank_one_and_two_torsion() {
        let cg = class_group(&quadric_cone_fan()).unwrap();
        assert_eq!(cg.free_rank(), 1);
        assert_eq!(cg.torsion_factors(), vec![2]);
        // Known principal divisors: E_1 - E_3 pairs with (1,0,0) and
        // E_1 + E_2 + E_3 + E_4 with (0,0,1).
        assert!(cg.class(&[1, 0, -1, 0]).unwrap().is_zero());
        assert!(cg.class(&[1, 1, 1, 1]).unwrap().is_zero());
        // E_1 + E_2 is 2-torsion: twice it is principal but it is not
        // (E_1 ~ E_3 and E_2 ~ E_4, so 2(E_1 + E_2) ~ sum of all rays ~ 0).
        let t = cg.class(&[1, 1, 0, 0]).unwrap();
        assert!(!t.is_zero());
        assert!(cg.add(&t, &t).is_zero());
        assert_eq!(cg.sub(&cg.zero_class(), &t), t);
    }

    #[test]
    fn torus_factor_is_rejected() {
        // Two rays in a plane inside Z^3: rank 2 < 3.
        let fan = Fan::new(3, vec![vec![1, 0, 0], vec![0, 1, 0]], vec![vec![0, 1]]).unwrap();
        assert_eq!(class_group(&fan).unwrap_err(), Error::TorusFactor);
    }

    #[test]
    fn cartier_on_smooth_fans_is_unconditional() {
        let fan = p2_fan();
        assert!(is_cartier(&fan, &[1, 0, 0]).unwrap());
        assert!(is_cartier(&fan, &[3, -2, 5]).unwrap());
    }

    #[test]
    fn cartier_fails_on_the_quadric_cone_ray_divisor() {
        let fan = quadric_cone_fan();
        // No rational solution at all.
        assert!(!is_cartier(&fan, &[1, 0, 0, 0]).unwrap());
        // Rationally solvable but the lattice point is half-integral.
        assert!(!is_cartier(&fan, &[1, 1, 0, 0]).unwrap());
        // The anticanonical divisor is Cartier: m = (0, 0, -1).
        assert!(is_cartier(&fan, &[1, 1, 1, 1]).unwrap());
        assert!(is_cartier(&fan, &[0, 0, 0, 0]).unwrap());
    }

    #[test]
    fn realizability_is_subset_of_some_cone() {
        let fan = p2_fan();
        assert!(fan.prime_set_realizable(&[0, 1]));
        assert!(fan.prime_set_realizable(&[2]));
        assert!(fan.prime_set_realizable(&[]));
        assert!(!fan.prime_set_realizable(&[0, 1, 2]));
        assert!(!fan.prime_set_realizable(&[7]));
    }

    proptest! {
        /// Principal divisors are zero in the class group, and shifting any
        /// divisor by one never changes whether it is Cartier.
        #[test]
        fn principal_divisors_vanish_and_cartier_is_a_class_property(
            m in proptest::collection::vec(-4i64..5, 2),
            d in proptest::collection::vec(-3i64..4, 3)
        ) {
            let fan = p2_fan();
            let cg = class_group(&fan).unwrap();
            let principal: Vec<i64> = fan.rays().iter()
                .map(|ray| ray[0] * m[0] + ray[1] * m[1])
                .collect();
            prop_assert!(cg.class(&principal).unwrap().is_zero());

            let shifted: Vec<i64> = d.iter().zip(&principal).map(|(&a, &p)| a + p).collect();
            prop_assert_eq!(
                is_cartier(&fan, &d).unwrap(),
                is_cartier(&fan, &shifted).unwrap()
            );
        }
    }
}
