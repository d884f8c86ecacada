//! Universal polynomials of λ-rings, concrete λ-ring instances, and the
//! λ-module structure on the positive part of a square-zero graded λ-ring.

pub mod intpoly;
pub mod symfun;
pub mod report;
pub mod universal;
pub mod lambda;
pub mod lambda_module;
pub mod suite;
