//! Exact computation of the cohomology sheaves of wheel-shaped four-term
//! complexes of invertible sheaves on normal toric varieties.
//!
//! The library works over the Cox ring of a fan with the fine `Z^d` grading.
//! Everything is exact: exponent vectors are checked machine integers, class
//! groups come from arbitrary-precision Smith normal forms, and the oracle
//! does fraction-free integer elimination.
//!
//! The main entry points are:
//!
//! * [`monomial`]: exponent-vector arithmetic, monomial ideals, minimal
//!   primes via minimal vertex covers.
//! * [`toric`]: fans, class groups, divisor classes, Cartier tests.
//! * [`circuits`]: the transposition order on edges of the complete graph,
//!   minimal circuits of the prefix graphs, chord splitting.
//! * [`syzygy`]: Taylor-type syzygies of monomial lists, circuit syzygies,
//!   and the one-step filtration ideals.
//! * [`wheel`]: wheel data, validation, complex construction.
//! * [`cohomology`]: cutting divisors, subschemes, and the full report.
//! * [`oracle`]: independent fine-degree-by-fine-degree verification of
//!   kernels, syzygy modules, and colon ideals.
//! * [`corpus`]: reproducible random instances for verification runs.

pub mod circuits;
pub mod cohomology;
pub mod corpus;
mod error;
mod linalg;
pub mod monomial;
pub mod oracle;
pub mod snf;
pub mod syzygy;
#[cfg(test)]
mod testdata;
pub mod toric;
pub mod wheel;

pub use circuits::{
    chord_split, minimal_circuits, minimal_circuits_brute, transposition_order, Circuit,
    TranspositionTable,
};
pub use cohomology::{
    cohomology_report, component_label, cutting_divisors, divisor_label, subscheme_z,
    wheel_filtration_ideal, wheel_filtration_raw, CohomologyReport, FiltrationStep, H0Report,
    H2Report, SubschemeZ,
};
pub use error::{Error, Result};
pub use monomial::{parse_monomial, ExponentVector, MonomialIdeal, MonomialInput};
pub use corpus::{
    corpus_rng, perturb_wheel, random_spoke_list, random_wheel, spoke_corpus, spoke_corpus_m,
    Perturbation,
};
pub use oracle::{
    first_discrepancy, modules_equal, oracle_ideal, oracle_kernel, oracle_syzygies,
    FineDegreeWindow, ModuleElement,
};
pub use syzygy::{
    accumulate, beta_generators, beta_image, circuit_syzygy, edge_degrees, filtration_ideal,
    filtration_ideal_raw, spoke_image, syzygy_generators, Basis, Combination, SyzygyElement,
};
pub use toric::{class_group, divisor_class, is_cartier, ClassGroup, DivisorClass, Fan};
pub use wheel::{
    alpha_generators, build_complex, validate_wheel, AlphaFactorization, ComplexMaps,
    ValidationReport, Wheel,
};
