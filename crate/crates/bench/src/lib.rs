//! Fixture loaders shared by the benchmark targets.

use toric_wheels::{ExponentVector, Fan, Wheel};

pub fn hex_wheel() -> Wheel {
    serde_json::from_str(include_str!("../../../fixtures/hex_wheel.json"))
        .expect("bundled wheel fixture parses")
}

pub fn hex_fan() -> Fan {
    serde_json::from_str(include_str!("../../../fixtures/hex_fan.json"))
        .expect("bundled fan fixture parses")
}

pub fn hex_spokes() -> Vec<ExponentVector> {
    hex_wheel().f_out().to_vec()
}
