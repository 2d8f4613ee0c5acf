//! Curvatures of groups of area-preserving diffeomorphisms of the flat torus,
//! the Klein bottle, the round sphere and the real projective plane.
//!
//! Torus and Klein bottle quantities are computed on the torus cover in a
//! complexified Fourier basis; sphere quantities come from closed forms in
//! spherical harmonics. Every closed form on the torus side can be checked
//! against the brute-force oracles in [`oracle`].

pub mod algebra;
pub mod basis;
pub mod convention;
pub mod error;
pub mod harmonics;
pub mod klein;
pub mod mode;
pub mod oracle;
pub mod sphere;
pub mod vector;
pub mod weather;

pub use num_complex::Complex64;

pub use algebra::{
    b_operator, covariant_derivative, curvature_operator, d_coefficient, hermitian_product,
    inner_product, poisson_bracket, riemann_quadruple,
};
pub use basis::{
    anti_invariance_check, basis_element, count_basis, enumerate_basis, involution_klein,
    BasisKind, IndexSets, KleinBasisElement,
};
pub use convention::{NormConvention, Surface};
pub use error::{Error, Result};
pub use harmonics::{evaluate_ylm, legendre_p, SphericalMode};
pub use klein::{
    asymptotic_limit, curvature_bound, f_lambda_average, klein_sweep, pos_sequence_element,
    pos_sequence_limit, ricci_analytic, ricci_partial_sums, sectional_klein, sectional_klein_pair,
    sectional_torus, torus_sweep, RicciPartialSum, TorusKind,
};
pub use mode::LatticeMode;
pub use oracle::{curvature_form, sectional_curvature_oracle, OracleMethod};
pub use sphere::{
    asymptotic_e02, asymptotic_e03, ricci_analytic_sphere, ricci_numeric_estimate, sectional_e01,
    sectional_e02, sectional_e03, sphere_sweep, theta_rho_gamma, RicciDiagnostic, SphereField,
};
pub use vector::{FourierVector, DEFAULT_TORUS_AREA};
pub use weather::{alpha, digits_per_month, preset, Rescale, WeatherRecord, WeatherScenario};
