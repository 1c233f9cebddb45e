#pragma once

// Numeric tolerances shared by every module. Each operation that takes a
// tolerance defaults to one of these values.

namespace hobs::tol {

// Normalization of spinors and unit-norm of expectation vectors.
inline constexpr double state = 1e-12;

// Accepted deviation from |n| = 1 for field directions and Zeeman axes.
inline constexpr double direction = 1e-9;

// Accepted deviation from |alpha|^2 + |beta|^2 = 1 on user-supplied coefficients.
inline constexpr double coefficients = 1e-9;

// A fitted BS-ring with radius below this is reported as a single point.
inline constexpr double ring_degenerate = 1e-9;

// An unwrapped winding must land this close to an integer.
inline constexpr double winding_integrality = 1e-6;

// |s3| below this is reported as linear polarization.
inline constexpr double linear_polarization = 1e-9;

// Largest |omega * dt| accepted by the fixed-step integrator.
inline constexpr double max_step_phase = 0.5;

}  // namespace hobs::tol
