#pragma once

/**
 * @file higher_order.hpp
 * @brief Generalized higher-order sphere built from an orthogonal basis pair
 *        and two topological charges.
 *
 * A frame fixes the base-sphere basis
 *
 *   lambda+ = ( cos(tl/2),  e^{i pl} sin(tl/2) )
 *   lambda- = ( sin(tl/2), -e^{i pl} cos(tl/2) )
 *
 * and the charges (l, m) of the azimuthal phase factors
 *
 *   chi+(phi) = e^{i l phi} lambda+,   chi-(phi) = e^{i m phi} lambda-.
 *
 * The higher-order poles are
 *
 *   N(phi) = cos(tl/2) chi+ + sin(tl/2) chi-
 *   S(phi) = e^{-i pl} ( sin(tl/2) chi+ - cos(tl/2) chi- )
 *
 * and a state at higher-order coordinates (theta', phi') is
 * cos(theta'/2) N(phi) + e^{i phi'} sin(theta'/2) S(phi). At phi = 0, or for
 * l = m = 0, the poles collapse to (1, 0) and (0, 1) and the state reduces to
 * the ordinary sphere state at the same coordinates.
 *
 * The azimuth phi is any real number; it is never wrapped.
 */

#include <cmath>
#include <cstdlib>
#include <utility>

#include "hobs/sphere_algebra.hpp"

namespace hobs {

/// Base-sphere coordinates (theta_lambda, phi_lambda) of the lambda+ basis state.
struct BasisPair {
    SphereCoords coords;
    SphereKind kind = SphereKind::B;

    bool operator==(const BasisPair&) const = default;
};

/// Topological charges attached to the + and - basis states.
struct Charges {
    int l = 0;
    int m = 0;

    /// m - l: signed number of turns the orientation makes per azimuthal cycle.
    constexpr int winding() const { return m - l; }

    bool operator==(const Charges&) const = default;
};

struct HigherOrderFrame {
    BasisPair basis;
    Charges charges;

    SphereKind kind() const { return basis.kind; }

    bool operator==(const HigherOrderFrame&) const = default;
};

/// A point (theta', phi') on the higher-order sphere of `frame`.
struct HigherOrderState {
    HigherOrderFrame frame;
    SphereCoords coords;

    SphereKind kind() const { return frame.kind(); }

    bool operator==(const HigherOrderState&) const = default;
};

/// Coefficients of a higher-order state in the {chi+, chi-} basis. They do not
/// depend on the azimuth.
struct ChiCoefficients {
    Complex alpha;
    Complex beta;
};

inline HigherOrderState make_state(const HigherOrderFrame& frame, const SphereCoords& coords) {
    validate(frame.basis.coords);
    validate(coords);
    return {frame, coords};
}

inline Spinor lambda_plus(const BasisPair& b) {
    validate(b.coords);
    const double c = std::cos(b.coords.theta / 2.0);
    const double s = std::sin(b.coords.theta / 2.0);
    return Spinor(Complex(c), std::polar(1.0, b.coords.phi) * s, b.kind);
}

inline Spinor lambda_minus(const BasisPair& b) {
    validate(b.coords);
    const double c = std::cos(b.coords.theta / 2.0);
    const double s = std::sin(b.coords.theta / 2.0);
    return Spinor(Complex(s), -std::polar(1.0, b.coords.phi) * c, b.kind);
}

inline Spinor chi_plus(const HigherOrderFrame& f, double phi) {
    detail::require_finite(phi, "azimuth");
    return lambda_plus(f.basis).with_phase(std::polar(1.0, f.charges.l * phi));
}

inline Spinor chi_minus(const HigherOrderFrame& f, double phi) {
    detail::require_finite(phi, "azimuth");
    return lambda_minus(f.basis).with_phase(std::polar(1.0, f.charges.m * phi));
}

namespace detail {

/// a * chi+ + b * chi- at azimuth phi, renormalized against rounding.
inline Spinor combine_chi(const HigherOrderFrame& f, double phi, Complex a, Complex b) {
    const Spinor cp = chi_plus(f, phi);
    const Spinor cm = chi_minus(f, phi);
    const Complex n = a * cp.north() + b * cm.north();
    const Complex s = a * cp.south() + b * cm.south();
    const double len = std::sqrt(std::norm(n) + std::norm(s));
    return Spinor(n / len, s / len, f.kind());
}

}  // namespace detail

/// Higher-order north pole N(phi).
inline Spinor north_pole(const HigherOrderFrame& f, double phi) {
    const double c = std::cos(f.basis.coords.theta / 2.0);
    const double s = std::sin(f.basis.coords.theta / 2.0);
    return detail::combine_chi(f, phi, Complex(c), Complex(s));
}

/// Higher-order south pole S(phi).
inline Spinor south_pole(const HigherOrderFrame& f, double phi) {
    const double c = std::cos(f.basis.coords.theta / 2.0);
    const double s = std::sin(f.basis.coords.theta / 2.0);
    const Complex e = std::polar(1.0, -f.basis.coords.phi);
    return detail::combine_chi(f, phi, e * s, -e * c);
}

/// (alpha, beta) such that the state equals alpha chi+(phi) + beta chi-(phi) for every phi.
inline ChiCoefficients coefficients(const HigherOrderState& st) {
    validate(st.frame.basis.coords);
    validate(st.coords);
    const double c = std::cos(st.frame.basis.coords.theta / 2.0);
    const double s = std::sin(st.frame.basis.coords.theta / 2.0);
    const Complex e = std::polar(1.0, -st.frame.basis.coords.phi);
    const Complex pn(std::cos(st.coords.theta / 2.0));
    const Complex ps = std::polar(1.0, st.coords.phi) * std::sin(st.coords.theta / 2.0);
    // N = (c, s) and S = e (s, -c) in the chi basis.
    return {pn * c + ps * e * s, pn * s - ps * e * c};
}

/// Inverse of coefficients(); the global phase of (alpha, beta) is discarded.
inline HigherOrderState from_coefficients(const HigherOrderFrame& f, Complex alpha, Complex beta) {
    validate(f.basis.coords);
    detail::require_finite(alpha, "alpha");
    detail::require_finite(beta, "beta");
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > tol::coefficients)
        throw DomainError("coefficients must satisfy |alpha|^2 + |beta|^2 = 1");
    const double c = std::cos(f.basis.coords.theta / 2.0);
    const double s = std::sin(f.basis.coords.theta / 2.0);
    const Complex e = std::polar(1.0, f.basis.coords.phi);
    // Project onto the poles: <N|psi> and <S|psi> expressed in the chi basis.
    return {f, sphere_from_spinor(c * alpha + s * beta, e * (s * alpha - c * beta))};
}

/// The physical spinor of the state at real-space azimuth phi.
inline Spinor state_at(const HigherOrderState& st, double phi) {
    const auto [alpha, beta] = coefficients(st);
    return detail::combine_chi(st.frame, phi, alpha, beta);
}

/// Bloch map of (alpha, beta): (2 Re(conj(a) b), 2 Im(conj(a) b), |a|^2 - |b|^2).
/// Coordinates of the state on its own higher-order sphere measured against the
/// chi basis. For l = m it is the ordinary expectation vector written in the
/// frame whose third axis is the lambda+ direction.
inline Vec3 higher_order_vector(const HigherOrderState& st) {
    const auto [alpha, beta] = coefficients(st);
    const Complex c = std::conj(alpha) * beta;
    return {2.0 * c.real(), 2.0 * c.imag(), std::norm(alpha) - std::norm(beta)};
}

}  // namespace hobs
