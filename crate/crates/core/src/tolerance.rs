//! Default tolerances shared across modules.

/// Absolute tolerance for unit-ness checks on dual vectors and quaternions.
pub const TOL_UNIT: f64 = 1e-9;

/// Floor on `|v₀'|` below which a curve is treated as cylindrical.
pub const CYL_FLOOR: f64 = 1e-6;

/// Relative zero threshold for classification conditions.
pub const TOL_CLS: f64 = 1e-7;

/// Dual orthonormality defect allowed in integrated frames.
pub const ODE_TOL: f64 = 1e-10;

/// Scale-relative tolerance for geometric predicates.
pub fn tol_geo(scale: f64) -> f64 {
    1e-9 * (1.0 + scale.abs())
}

/// Agreement tolerance between the two invariant computation paths.
pub fn jet_tol(value: f64) -> f64 {
    1e-6 * (1.0 + value.abs())
}

/// Bound on `sup |κ₁|` under which a surface is treated as developable.
pub const DEV_TOL: f64 = 1e-8;
