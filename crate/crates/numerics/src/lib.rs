//! Floating-point companions to the exact layer: β-ensemble samplers,
//! reproducible Monte Carlo, quadrature, the Airy function and the
//! soft-edge scaling of characteristic polynomial averages.

pub mod airy;
pub mod checks;
pub mod edge;
pub mod matrix;
pub mod mc;
pub mod quad;
pub mod sampler;
