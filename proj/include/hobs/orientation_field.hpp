#pragma once

/**
 * @file orientation_field.hpp
 * @brief Azimuth-dependent expectation vectors of a higher-order state and the
 *        BS-ring that summarizes them.
 *
 * For a state alpha chi+ + beta chi-, the orientation at azimuth phi is the
 * orientation at phi = 0 rotated right-handedly about the lambda+ expectation
 * axis by (m - l) phi. The orientations therefore trace the circle where the
 * sphere meets the plane perpendicular to that axis through s(0), |m - l| times
 * per azimuthal cycle.
 */

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hobs/higher_order.hpp"

namespace hobs {

/// Uniform azimuth samples phi_k = 2 pi k / n, k = 0..n-1.
class AzimuthGrid {
public:
    static constexpr int default_samples = 64;
    static constexpr int samples_per_turn = 8;

    explicit AzimuthGrid(int n = default_samples) : n_(n) {
        if (n < 1) throw DomainError("azimuth grid needs at least one sample");
    }

    /// Smallest grid accepted by ring extraction for the given charges.
    static int minimum_for(const Charges& c) {
        return samples_per_turn * std::max(1, std::abs(c.winding()));
    }

    int size() const { return n_; }
    double operator[](int k) const { return two_pi * static_cast<double>(k) / static_cast<double>(n_); }

private:
    int n_;
};

struct FieldPoint {
    double phi = 0.0;
    Vec3 s;
};

/// Sampled map phi -> expectation vector of one higher-order state.
struct OrientationField {
    HigherOrderFrame frame;
    SphereCoords coords;
    std::vector<FieldPoint> points;
};

/// Geometric summary of an orientation field.
struct BSRing {
    Vec3 axis;          // unit; expectation vector of lambda+
    double offset = 0;  // axis . s(0)
    double radius = 0;  // sqrt(1 - offset^2)
    int winding = 0;    // signed turns per azimuthal cycle, right-handed about axis
    Vec3 anchor;        // s(0)
    bool degenerate = false;
};

inline OrientationField sample_field(const HigherOrderState& st, const AzimuthGrid& grid) {
    OrientationField field{st.frame, st.coords, {}};
    field.points.reserve(static_cast<std::size_t>(grid.size()));
    for (int k = 0; k < grid.size(); ++k) {
        const double phi = grid[k];
        field.points.push_back({phi, expectation_vector(state_at(st, phi))});
    }
    return field;
}

inline BSRing ring_analytic(const HigherOrderState& st) {
    BSRing ring;
    ring.axis = expectation_vector(lambda_plus(st.frame.basis));
    ring.anchor = expectation_vector(state_at(st, 0.0));
    ring.offset = std::clamp(dot(ring.axis, ring.anchor), -1.0, 1.0);
    ring.radius = std::sqrt(std::max(0.0, 1.0 - ring.offset * ring.offset));
    ring.winding = st.frame.charges.winding();
    ring.degenerate = ring.radius < tol::ring_degenerate;
    return ring;
}

/// Fits a plane to the sampled orientations and counts how many times they wind
/// around its normal. The fitted normal is oriented so the winding is
/// nonnegative. A field whose points all coincide yields a point-ring with
/// winding 0 and `degenerate` set.
inline BSRing ring_from_field(const OrientationField& field) {
    const auto& pts = field.points;
    const int n = static_cast<int>(pts.size());
    if (n < AzimuthGrid::samples_per_turn)
        throw DomainError("ring extraction needs at least " + std::to_string(AzimuthGrid::samples_per_turn) +
                          " samples");

    Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
    for (const auto& p : pts) centroid += Eigen::Vector3d(p.s.x, p.s.y, p.s.z);
    centroid /= static_cast<double>(n);

    Eigen::Matrix3d scatter = Eigen::Matrix3d::Zero();
    double spread = 0.0;
    for (const auto& p : pts) {
        const Eigen::Vector3d d = Eigen::Vector3d(p.s.x, p.s.y, p.s.z) - centroid;
        scatter += d * d.transpose();
        spread = std::max(spread, d.norm());
    }

    BSRing ring;
    ring.anchor = pts.front().s;
    if (spread < tol::ring_degenerate) {
        ring.axis = ring.anchor * (1.0 / norm(ring.anchor));
        ring.offset = dot(ring.axis, ring.anchor);
        ring.radius = 0.0;
        ring.winding = 0;
        ring.degenerate = true;
        return ring;
    }

    // Eigenvalues ascend; the first eigenvector is the plane normal.
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(scatter);
    const Eigen::Vector3d normal = solver.eigenvectors().col(0).normalized();
    const Vec3 axis{normal.x(), normal.y(), normal.z()};
    const Vec3 center{centroid.x(), centroid.y(), centroid.z()};

    const Vec3 e1 = [&] {
        const Vec3 r = ring.anchor - center;
        const Vec3 in_plane = r - dot(r, axis) * axis;
        return in_plane * (1.0 / norm(in_plane));
    }();
    const Vec3 e2 = cross(axis, e1);

    auto angle_of = [&](const Vec3& s) {
        const Vec3 r = s - center;
        return std::atan2(dot(r, e2), dot(r, e1));
    };

    // Unwrapped in-plane angle swept from the first to the last sample, per
    // radian of azimuth. A rigid rotation gives exactly the integer winding.
    double swept = 0.0;
    double radius_sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const Vec3& a = pts[static_cast<std::size_t>(k)].s;
        if (k + 1 < n) swept += std::remainder(angle_of(pts[static_cast<std::size_t>(k + 1)].s) - angle_of(a), two_pi);
        const Vec3 r = a - center;
        radius_sum += norm(r - dot(r, axis) * axis);
    }

    const double span = pts.back().phi - pts.front().phi;
    if (!(span > 0.0)) throw DomainError("field azimuths must increase");
    const double turns = swept / span;
    const double rounded = std::round(turns);
    if (std::abs(turns - rounded) > tol::winding_integrality)
        throw InconsistencyError("unwrapped winding " + std::to_string(turns) + " is not an integer");

    int winding = static_cast<int>(rounded);
    if (n < AzimuthGrid::samples_per_turn * std::abs(winding))
        throw InconsistencyError("field is undersampled for winding " + std::to_string(winding));

    const double sign = winding < 0 ? -1.0 : 1.0;
    ring.axis = sign * axis;
    ring.winding = std::abs(winding);
    ring.offset = dot(ring.axis, center);
    ring.radius = radius_sum / static_cast<double>(n);
    ring.degenerate = ring.radius < tol::ring_degenerate;
    return ring;
}

/// Largest disagreement between an analytic ring and a fitted one. The fitted
/// ring's normal is only defined up to sign, so it is flipped to match the
/// analytic winding direction. When the field is degenerate only the anchor is
/// compared, and the analytic ring must describe a field that does not move.
inline double ring_discrepancy(const BSRing& analytic, const BSRing& fitted) {
    if (fitted.degenerate) {
        const bool still = analytic.degenerate || analytic.winding == 0;
        const double d = max_abs_diff(analytic.anchor, fitted.anchor);
        return still ? d : std::max(d, analytic.radius);
    }
    const double sign = analytic.winding < 0 ? -1.0 : 1.0;
    double d = max_abs_diff(analytic.axis, sign * fitted.axis);
    d = std::max(d, std::abs(analytic.offset - sign * fitted.offset));
    d = std::max(d, std::abs(analytic.radius - fitted.radius));
    d = std::max(d, static_cast<double>(std::abs(analytic.winding - static_cast<int>(sign) * fitted.winding)));
    d = std::max(d, max_abs_diff(analytic.anchor, fitted.anchor));
    return d;
}

enum class Handedness { right, left, linear };

inline std::string_view to_string(Handedness h) {
    switch (h) {
    case Handedness::right: return "right";
    case Handedness::left: return "left";
    case Handedness::linear: break;
    }
    return "linear";
}

struct PolarizationEllipse {
    double orientation = 0.0;  // major-axis angle in [0, pi)
    double ellipticity = 0.0;  // in [-pi/4, pi/4]
    Handedness handedness = Handedness::linear;
};

/// Standard ellipse parameters of a unit Stokes vector. Positive s3 is right-handed.
inline PolarizationEllipse stokes_to_ellipse(const Vec3& s) {
    require_unit(s);
    PolarizationEllipse e;
    double orientation = 0.5 * std::atan2(s.y, s.x);
    if (orientation < 0.0) orientation += pi;
    if (orientation >= pi) orientation -= pi;
    e.orientation = orientation;
    e.ellipticity = 0.5 * std::asin(std::clamp(s.z, -1.0, 1.0));
    if (s.z > tol::linear_polarization)
        e.handedness = Handedness::right;
    else if (s.z < -tol::linear_polarization)
        e.handedness = Handedness::left;
    else
        e.handedness = Handedness::linear;
    return e;
}

}  // namespace hobs
