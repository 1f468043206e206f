//! Data generation for the shipped bundles: group realizations, exact
//! character tables (Dixon-Schneider), reference tables transcribed from the
//! published computations, and bundle/golden emission with verification.

pub mod dixon;
pub mod groups;
pub mod reference;
