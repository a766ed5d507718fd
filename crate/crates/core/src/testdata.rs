//! Shared fixtures for the unit-test suite: the running six-spoke example
//! in seven variables and its smooth three-dimensional fan.

use crate::monomial::ExponentVector;
use crate::toric::Fan;
use crate::wheel::Wheel;

pub(crate) fn ev(exps: &[u32]) -> ExponentVector {
    ExponentVector::new(exps.to_vec())
}

/// Spoke monomials of the running example:
/// `x1*x6, x1*x2*x7, x2*x3, x3*x4, x4*x5*x7, x5*x6`.
pub(crate) fn hex_spokes() -> Vec<ExponentVector> {
    vec![
        ev(&[1, 0, 0, 0, 0, 1, 0]),
        ev(&[1, 1, 0, 0, 0, 0, 1]),
        ev(&[0, 1, 1, 0, 0, 0, 0]),
        ev(&[0, 0, 1, 1, 0, 0, 0]),
        ev(&[0, 0, 0, 1, 1, 0, 1]),
        ev(&[0, 0, 0, 0, 1, 1, 0]),
    ]
}

/// The full wheel over the spokes of [`hex_spokes`], untwisted.
pub(crate) fn hex_wheel() -> Wheel {
    Wheel::new(
        7,
        hex_spokes(),
        vec![
            ev(&[0, 0, 1, 1, 1, 0, 0]), // x3*x4*x5
            ev(&[0, 0, 0, 1, 1, 1, 0]), // x4*x5*x6
            ev(&[1, 0, 0, 0, 1, 1, 0]), // x1*x5*x6
            ev(&[1, 1, 0, 0, 0, 1, 0]), // x1*x2*x6
            ev(&[1, 1, 1, 0, 0, 0, 0]), // x1*x2*x3
            ev(&[0, 1, 1, 1, 0, 0, 0]), // x2*x3*x4
        ],
        vec![
            ev(&[0, 0, 0, 0, 0, 1, 0]), // x6
            ev(&[1, 0, 0, 0, 0, 0, 1]), // x1*x7
            ev(&[0, 1, 0, 0, 0, 0, 1]), // x2*x7
            ev(&[0, 0, 1, 0, 0, 0, 0]), // x3
            ev(&[0, 0, 0, 1, 0, 0, 1]), // x4*x7
            ev(&[0, 0, 0, 0, 1, 0, 1]), // x5*x7
        ],
        vec![
            ev(&[0, 1, 0, 0, 0, 0, 1]), // x2*x7
            ev(&[0, 0, 1, 0, 0, 0, 0]), // x3
            ev(&[0, 0, 0, 1, 0, 0, 1]), // x4*x7
            ev(&[0, 0, 0, 0, 1, 0, 1]), // x5*x7
            ev(&[0, 0, 0, 0, 0, 1, 0]), // x6
            ev(&[1, 0, 0, 0, 0, 0, 1]), // x1*x7
        ],
        None,
    )
    .unwrap()
}

/// Smooth fan with seven rays at height one whose variety carries the
/// running example; ray `i` corresponds to variable `x_{i+1}`.
pub(crate) fn hex_fan() -> Fan {
    Fan::new(
        3,
        vec![
            vec![1, 0, 1],
            vec![0, 1, 1],
            vec![-1, 1, 1],
            vec![-1, 0, 1],
            vec![0, -1, 1],
            vec![1, -1, 1],
            vec![0, 0, 1],
        ],
        vec![
            vec![0, 1, 6],
            vec![0, 4, 5],
            vec![0, 4, 6],
            vec![1, 2, 3],
            vec![1, 3, 6],
            vec![3, 4, 6],
        ],
    )
    .unwrap()
}
