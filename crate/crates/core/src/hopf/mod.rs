//! Finite bialgebras and Hopf algebras by structure constants, convolution,
//! integrals and the Nakayama automorphism.

mod bialgebra;
mod convolution;
pub mod examples;
mod integral;

pub use bialgebra::{
    kron_matrix, verify_bialgebra, verify_hopf, FiniteBialgebra, FiniteHopfAlgebra, LinearMapBetween, Terms,
};
pub use convolution::{convolution, convolution_inverse, solve_antipode, unit_counit};
pub use integral::{check_integral_data, check_semisimple_identities, compute_integral, IntegralData};
