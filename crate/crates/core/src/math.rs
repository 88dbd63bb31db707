// Float helpers routed through libm so the crate stays no_std.

#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub(crate) fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

#[inline]
pub(crate) fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

#[inline]
pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub(crate) fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

#[inline]
pub(crate) fn log10(x: f64) -> f64 {
    libm::log10(x)
}

#[inline]
pub(crate) fn floor(x: f64) -> f64 {
    libm::floor(x)
}

#[inline]
pub(crate) fn round(x: f64) -> f64 {
    libm::round(x)
}

/// `true` when `lhs <= rhs` up to `tol * max(1, |rhs|)`.
pub(crate) fn le_tol(lhs: f64, rhs: f64, tol: f64) -> bool {
    lhs <= rhs + tol * max(1.0, abs(rhs))
}

#[inline]
pub(crate) fn max(a: f64, b: f64) -> f64 {
    if a >= b {
        a
    } else {
        b
    }
}
