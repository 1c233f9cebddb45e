#pragma once

/**
 * @file sphere_algebra.hpp
 * @brief Two-level (SU(2)) state algebra shared by the Poincare and Bloch spheres.
 *
 * Pole basis convention: |N> = (1, 0), |S> = (0, 1). For the Poincare sphere the
 * poles are {|R>, |L>}, for the Bloch sphere {|up>, |down>}. The two families are
 * algebraically identical; the label only decides how vector components are named
 * on output and prevents accidentally mixing photon and spin states.
 *
 * Expectation vectors use s = (sin(theta) cos(phi), sin(theta) sin(phi), cos(theta)),
 * i.e. the poles sit on the third axis.
 */

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <string_view>

#include "hobs/error.hpp"
#include "hobs/tolerance.hpp"

namespace hobs {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr Complex I{0.0, 1.0};

enum class SphereKind { P, B };

inline std::string_view to_string(SphereKind k) { return k == SphereKind::P ? "P" : "B"; }

/// Component names for the expectation vector of a sphere family.
inline std::array<std::string_view, 3> axis_names(SphereKind k) {
    if (k == SphereKind::P) return {"s1", "s2", "s3"};
    return {"sx", "sy", "sz"};
}

namespace detail {

inline void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

inline void require_finite(Complex v, const char* what) {
    require_finite(v.real(), what);
    require_finite(v.imag(), what);
}

/// Wraps an angle into [0, 2pi).
inline double wrap_two_pi(double a) {
    double r = std::fmod(a, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r = 0.0;
    return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Vec3

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double k) const { return {k * x, k * y, k * z}; }
    constexpr bool operator==(const Vec3&) const = default;

    constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

constexpr Vec3 operator*(double k, const Vec3& v) { return v * k; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline double max_abs_diff(const Vec3& a, const Vec3& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

/// Throws unless |n| = 1 within `tolerance`.
inline void require_unit(const Vec3& n, double tolerance = tol::direction) {
    detail::require_finite(n.x, "vector component");
    detail::require_finite(n.y, "vector component");
    detail::require_finite(n.z, "vector component");
    if (std::abs(norm(n) - 1.0) > tolerance) throw DomainError("direction must be a unit vector");
}

/// Right-handed rotation of v about unit axis u by `angle` (Rodrigues formula).
inline Vec3 rodrigues(const Vec3& v, const Vec3& u, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return c * v + s * cross(u, v) + ((1.0 - c) * dot(u, v)) * u;
}

// ---------------------------------------------------------------------------
// SphereCoords

/// Polar angle theta in [0, pi] and azimuth phi in [0, 2pi).
struct SphereCoords {
    double theta = 0.0;
    double phi = 0.0;

    bool operator==(const SphereCoords&) const = default;
};

inline void validate(const SphereCoords& c) {
    detail::require_finite(c.theta, "theta");
    detail::require_finite(c.phi, "phi");
    if (c.theta < 0.0 || c.theta > pi) throw DomainError("theta must lie in [0, pi]");
    if (c.phi < 0.0 || c.phi >= two_pi) throw DomainError("phi must lie in [0, 2pi)");
}

// ---------------------------------------------------------------------------
// Spinor

/// Normalized two-component amplitude with respect to the pole basis of a sphere family.
class Spinor {
public:
    /// Checked construction: amplitudes must be finite and normalized within `tolerance`.
    Spinor(Complex north, Complex south, SphereKind kind, double tolerance = tol::state)
        : north_(north), south_(south), kind_(kind) {
        detail::require_finite(north, "amplitude");
        detail::require_finite(south, "amplitude");
        if (std::abs(norm_sq() - 1.0) > tolerance) throw DomainError("spinor is not normalized");
    }

    /// Divides by the norm. Zero vectors are rejected.
    static Spinor normalized(Complex north, Complex south, SphereKind kind) {
        detail::require_finite(north, "amplitude");
        detail::require_finite(south, "amplitude");
        const double n = std::sqrt(std::norm(north) + std::norm(south));
        if (!(n > 0.0)) throw DomainError("zero-norm spinor");
        return Spinor(north / n, south / n, kind);
    }

    Complex north() const { return north_; }
    Complex south() const { return south_; }
    SphereKind kind() const { return kind_; }
    double norm_sq() const { return std::norm(north_) + std::norm(south_); }

    /// Same amplitudes, different sphere family.
    Spinor relabeled(SphereKind kind) const { return Spinor(north_, south_, kind); }

    /// Multiplies both amplitudes by a unit-modulus phase factor.
    Spinor with_phase(Complex phase) const {
        return Spinor(phase * north_, phase * south_, kind_, 10.0 * tol::state);
    }

    bool operator==(const Spinor&) const = default;

private:
    Complex north_;
    Complex south_;
    SphereKind kind_;
};

inline double max_abs_diff(const Spinor& a, const Spinor& b) {
    return std::max(std::abs(a.north() - b.north()), std::abs(a.south() - b.south()));
}

/// |psi> = cos(theta/2)|N> + e^{i phi} sin(theta/2)|S>.
inline Spinor spinor_from_sphere(const SphereCoords& c, SphereKind kind) {
    validate(c);
    return Spinor(Complex(std::cos(c.theta / 2.0), 0.0),
                  std::polar(1.0, c.phi) * std::sin(c.theta / 2.0), kind);
}

/// Inverse of spinor_from_sphere up to global phase. The north amplitude is made
/// real and nonnegative; phi is 0 at the poles.
inline SphereCoords sphere_from_spinor(Complex north, Complex south) {
    detail::require_finite(north, "amplitude");
    detail::require_finite(south, "amplitude");
    const double an = std::abs(north);
    const double as = std::abs(south);
    if (!(std::hypot(an, as) > 0.0)) throw DomainError("zero-norm spinor");

    const double theta = 2.0 * std::atan2(as, an);
    if (an == 0.0 || as == 0.0) return {theta, 0.0};
    const Complex s = south * std::conj(north) / an;
    return {theta, detail::wrap_two_pi(std::arg(s))};
}

inline SphereCoords sphere_from_spinor(const Spinor& s) { return sphere_from_spinor(s.north(), s.south()); }

/// Hermitian inner product <a|b>.
inline Complex inner_product(const Spinor& a, const Spinor& b) {
    if (a.kind() != b.kind()) throw DomainError("inner product between different sphere families");
    return std::conj(a.north()) * b.north() + std::conj(a.south()) * b.south();
}

/// True if a and b differ only by a global phase.
inline bool equal_up_to_phase(const Spinor& a, const Spinor& b, double tolerance = tol::state) {
    return std::abs(std::abs(inner_product(a, b)) - 1.0) <= tolerance;
}

/// (<sigma_x>, <sigma_y>, <sigma_z>).
inline Vec3 expectation_vector(const Spinor& s) {
    const Complex c = std::conj(s.north()) * s.south();
    return {2.0 * c.real(), 2.0 * c.imag(), std::norm(s.north()) - std::norm(s.south())};
}

// ---------------------------------------------------------------------------
// Operator2

/// 2x2 complex matrix, row-major.
struct Operator2 {
    std::array<Complex, 4> m{};

    static constexpr Operator2 identity() { return {{Complex(1.0), Complex(0.0), Complex(0.0), Complex(1.0)}}; }

    Complex operator()(int row, int col) const { return m[static_cast<std::size_t>(2 * row + col)]; }

    Operator2 operator+(const Operator2& o) const {
        return {{m[0] + o.m[0], m[1] + o.m[1], m[2] + o.m[2], m[3] + o.m[3]}};
    }
    Operator2 operator-(const Operator2& o) const {
        return {{m[0] - o.m[0], m[1] - o.m[1], m[2] - o.m[2], m[3] - o.m[3]}};
    }
    Operator2 operator*(Complex k) const { return {{k * m[0], k * m[1], k * m[2], k * m[3]}}; }
    Operator2 operator*(const Operator2& o) const {
        return {{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
                 m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]}};
    }

    Operator2 adjoint() const { return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}}; }
    Complex trace() const { return m[0] + m[3]; }
    Complex determinant() const { return m[0] * m[3] - m[1] * m[2]; }

    bool operator==(const Operator2&) const = default;
};

inline Operator2 operator*(Complex k, const Operator2& op) { return op * k; }

inline double max_abs_diff(const Operator2& a, const Operator2& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(a.m[i] - b.m[i]));
    return d;
}

enum class PauliAxis { identity, x, y, z };

inline Operator2 pauli(PauliAxis axis) {
    switch (axis) {
    case PauliAxis::x: return {{Complex(0.0), Complex(1.0), Complex(1.0), Complex(0.0)}};
    case PauliAxis::y: return {{Complex(0.0), -I, I, Complex(0.0)}};
    case PauliAxis::z: return {{Complex(1.0), Complex(0.0), Complex(0.0), Complex(-1.0)}};
    case PauliAxis::identity: break;
    }
    return Operator2::identity();
}

/// n . sigma for a unit vector n.
inline Operator2 pauli_dot(const Vec3& n) {
    require_unit(n);
    return {{Complex(n.z), Complex(n.x, -n.y), Complex(n.x, n.y), Complex(-n.z)}};
}

/// R_n(angle) = exp(-i angle/2 n.sigma) = cos(angle/2) I - i sin(angle/2) n.sigma.
/// Rotates expectation vectors right-handedly about n by `angle`.
inline Operator2 rotation_operator(const Vec3& n, double angle) {
    detail::require_finite(angle, "rotation angle");
    const Operator2 ns = pauli_dot(n);
    return Operator2::identity() * Complex(std::cos(angle / 2.0)) + ns * (-I * std::sin(angle / 2.0));
}

/// U|s>. The result is renormalized to absorb rounding; a correction larger
/// than the state tolerance means U was not unitary.
inline Spinor apply(const Operator2& u, const Spinor& s) {
    const Complex n = u.m[0] * s.north() + u.m[1] * s.south();
    const Complex so = u.m[2] * s.north() + u.m[3] * s.south();
    const double len = std::sqrt(std::norm(n) + std::norm(so));
    if (std::abs(len - 1.0) > tol::state) throw DomainError("operator is not unitary on this state");
    return Spinor(n / len, so / len, s.kind());
}

}  // namespace hobs
