//! Errors of curve evaluation and differential-geometric operations.

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum GeometryError {
    /// `|v₀'|` at or below the cylindrical floor.
    #[error("cylindrical point at s = {s} (|v0'| = {speed:e})")]
    CylindricalPoint { s: f64, speed: f64 },
    /// The curve cannot supply derivatives to the requested order.
    #[error("derivative order {requested} unavailable (curve supplies {available})")]
    OrderUnavailable { requested: usize, available: usize },
    /// Parameter outside the curve's domain.
    #[error("parameter {s} outside the domain [{start}, {end}]")]
    OutsideDomain { s: f64, start: f64, end: f64 },
    /// The two invariant computation paths disagree.
    #[error("invariant paths disagree for {name} derivative {k}: {a} vs {b}")]
    JetMismatch { name: &'static str, k: usize, a: f64, b: f64 },
    /// A canonical jet was requested at a regular point.
    #[error("not a singular point: kappa1 = {kappa1:e}")]
    NotSingular { kappa1: f64 },
    /// Frontal data requested for a non-developable surface.
    #[error("surface is not developable: sup |kappa1| = {max_kappa1:e}")]
    NotDevelopable { max_kappa1: f64 },
    /// `e × e'` vanishes.
    #[error("degenerate director at s = {s}")]
    DegenerateDirector { s: f64 },
    /// Underlying algebra error.
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
