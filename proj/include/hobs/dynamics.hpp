#pragma once

/**
 * @file dynamics.hpp
 * @brief Larmor precession of higher-order spin states in a static field.
 *
 * The Zeeman Hamiltonian H = (hbar omega / 2) n.sigma generates
 * R_n(omega t) = exp(-i omega t / 2 n.sigma). Applied to alpha chi+ + beta chi-
 * it rotates both basis states, so the evolved state is alpha chi+(t) + beta chi-(t)
 * with unchanged coefficients: the state stays put on a higher-order sphere whose
 * basis precesses about n.
 *
 * Internally hbar = 1 and time is measured in the same unit as 1/omega.
 */

#include <cmath>
#include <optional>
#include <vector>

#include "hobs/orientation_field.hpp"

namespace hobs {

struct ZeemanField {
    Vec3 n{0.0, 0.0, 1.0};  // unit direction of B
    double omega = 0.0;     // precession angular frequency; sign follows g
};

inline void validate(const ZeemanField& f) {
    require_unit(f.n);
    detail::require_finite(f.omega, "omega");
}

/// Builds a field from an arbitrary nonzero direction.
inline ZeemanField make_field(const Vec3& direction, double omega) {
    const double len = norm(direction);
    if (!std::isfinite(len) || !(len > 0.0)) throw DomainError("field direction must be nonzero");
    ZeemanField f{direction * (1.0 / len), omega};
    validate(f);
    return f;
}

/// g, B (tesla), Bohr magneton (J/T) and hbar (J s).
struct PhysicalParams {
    double g = 0.0;
    double B = 0.0;
    double muB = 9.2740100783e-24;
    double hbar = 1.054571817e-34;
};

/// omega = g muB B / hbar.
inline double larmor_frequency(const PhysicalParams& p) {
    detail::require_finite(p.g, "g");
    detail::require_finite(p.B, "B");
    if (!(p.muB > 0.0) || !std::isfinite(p.muB)) throw DomainError("Bohr magneton must be positive");
    if (!(p.hbar > 0.0) || !std::isfinite(p.hbar)) throw DomainError("hbar must be positive");
    if (p.B < 0.0) throw DomainError("field magnitude must be nonnegative");
    return p.g * p.muB * p.B / p.hbar;
}

/// (hbar omega / 2) n.sigma; hbar = 1 unless physical parameters are given.
inline Operator2 hamiltonian(const ZeemanField& f, const std::optional<PhysicalParams>& p = std::nullopt) {
    validate(f);
    double hbar = 1.0;
    if (p) {
        if (!(p->hbar > 0.0)) throw DomainError("hbar must be positive");
        hbar = p->hbar;
    }
    return pauli_dot(f.n) * Complex(0.5 * hbar * f.omega);
}

/// Higher-order basis after time t: chi+-(t, phi) = rotation chi+-(phi).
struct EvolvedFrame {
    HigherOrderFrame base;
    Operator2 rotation = Operator2::identity();
    double t = 0.0;

    Spinor chi_plus(double phi) const { return apply(rotation, hobs::chi_plus(base, phi)); }
    Spinor chi_minus(double phi) const { return apply(rotation, hobs::chi_minus(base, phi)); }
};

struct Evolution {
    HigherOrderState initial;
    EvolvedFrame frame;
    Complex alpha;
    Complex beta;

    /// Evolved physical spinor at azimuth phi.
    Spinor state_at(double phi) const { return apply(frame.rotation, hobs::state_at(initial, phi)); }

    OrientationField field(const AzimuthGrid& grid) const {
        OrientationField out{initial.frame, initial.coords, {}};
        out.points.reserve(static_cast<std::size_t>(grid.size()));
        for (int k = 0; k < grid.size(); ++k) out.points.push_back({grid[k], expectation_vector(state_at(grid[k]))});
        return out;
    }
};

inline Evolution evolve_exact(const HigherOrderState& st, const ZeemanField& f, double t) {
    validate(f);
    detail::require_finite(t, "time");
    const auto [alpha, beta] = coefficients(st);
    return {st, {st.frame, rotation_operator(f.n, f.omega * t), t}, alpha, beta};
}

struct NumericEvolution {
    Spinor state;
    /// Largest |1 - norm| removed by per-step renormalization.
    double max_correction = 0.0;
};

/// Fixed-step classical Runge-Kutta integration of i d/dt psi = H psi starting
/// from the state at azimuth phi. Refuses steps with |omega dt| > 0.5.
inline NumericEvolution evolve_numeric(const HigherOrderState& st, const ZeemanField& f, double t, int steps,
                                       double phi) {
    validate(f);
    detail::require_finite(t, "time");
    if (steps < 1) throw DomainError("integrator needs at least one step");
    const double dt = t / steps;
    if (std::abs(f.omega * dt) > tol::max_step_phase)
        throw InconsistencyError("step too large: |omega dt| = " + std::to_string(std::abs(f.omega * dt)) +
                                 " exceeds " + std::to_string(tol::max_step_phase) + "; increase the step count");

    // d psi / dt = A psi with A = -i H.
    const Operator2 a = hamiltonian(f) * (-I);
    auto rhs = [&a](Complex n, Complex s) {
        return std::pair{a.m[0] * n + a.m[1] * s, a.m[2] * n + a.m[3] * s};
    };

    const Spinor start = state_at(st, phi);
    Complex n = start.north();
    Complex s = start.south();
    double max_correction = 0.0;
    for (int i = 0; i < steps; ++i) {
        const auto [k1n, k1s] = rhs(n, s);
        const auto [k2n, k2s] = rhs(n + 0.5 * dt * k1n, s + 0.5 * dt * k1s);
        const auto [k3n, k3s] = rhs(n + 0.5 * dt * k2n, s + 0.5 * dt * k2s);
        const auto [k4n, k4s] = rhs(n + dt * k3n, s + dt * k3s);
        n += dt / 6.0 * (k1n + 2.0 * k2n + 2.0 * k3n + k4n);
        s += dt / 6.0 * (k1s + 2.0 * k2s + 2.0 * k3s + k4s);
        const double len = std::sqrt(std::norm(n) + std::norm(s));
        max_correction = std::max(max_correction, std::abs(1.0 - len));
        n /= len;
        s /= len;
    }
    return {Spinor(n, s, st.kind()), max_correction};
}

struct Snapshot {
    double t = 0.0;
    Evolution evolution;
    OrientationField field;
};

/// `frames` uniformly spaced exact snapshots from t0 to t1 inclusive.
inline std::vector<Snapshot> trajectory(const HigherOrderState& st, const ZeemanField& f, double t0, double t1,
                                        int frames, const AzimuthGrid& grid = AzimuthGrid{}) {
    if (!(t1 > t0)) throw DomainError("trajectory needs t1 > t0");
    if (frames < 2) throw DomainError("trajectory needs at least two frames");
    std::vector<Snapshot> out;
    out.reserve(static_cast<std::size_t>(frames));
    for (int k = 0; k < frames; ++k) {
        const double t = k + 1 == frames ? t1 : t0 + (t1 - t0) * k / (frames - 1);
        Evolution ev = evolve_exact(st, f, t);
        OrientationField field = ev.field(grid);
        out.push_back({t, std::move(ev), std::move(field)});
    }
    return out;
}

}  // namespace hobs
