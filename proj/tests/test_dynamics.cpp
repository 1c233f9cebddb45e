#include <gtest/gtest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "test_support.hpp"

namespace hobs {
namespace {

using testing::Rng;

constexpr double kTol = 1e-12;

HigherOrderFrame vortex_frame() { return {{{pi / 2, 0}, SphereKind::B}, {-1, 1}}; }

TEST(LarmorFrequency, Examples) {
    EXPECT_DOUBLE_EQ(larmor_frequency({2.0, 1.0, 1.0, 1.0}), 2.0);
    EXPECT_EQ(larmor_frequency({2.0, 0.0, 1.0, 1.0}), 0.0);

    // -0.44 * 9.274e-24 * 1.0 / 1.0546e-34 = -3.8693e10 rad/s.
    const double omega = larmor_frequency({-0.44, 1.0, 9.274e-24, 1.0546e-34});
    EXPECT_NEAR(omega, -0.44 * 9.274e-24 / 1.0546e-34, 1e-6 * std::abs(omega));
    EXPECT_NEAR(omega / 3.870e10, -1.0, 1e-3);
}

TEST(LarmorFrequency, Errors) {
    EXPECT_THROW(larmor_frequency({2.0, 1.0, 0.0, 1.0}), DomainError);
    EXPECT_THROW(larmor_frequency({2.0, 1.0, 1.0, -1.0}), DomainError);
    EXPECT_THROW(larmor_frequency({2.0, -1.0, 1.0, 1.0}), DomainError);
}

TEST(Hamiltonian, NaturalUnits) {
    const Operator2 h = hamiltonian({{0, 0, 1}, 1.0});
    EXPECT_LE(max_abs_diff(h, Operator2{{Complex(0.5), Complex(0), Complex(0), Complex(-0.5)}}), kTol);
    EXPECT_THROW(hamiltonian({{0, 0, 2}, 1.0}), DomainError);
}

TEST(Hamiltonian, HermitianWithGapHbarOmega) {
    Rng rng;
    for (int i = 0; i < 100; ++i) {
        const ZeemanField f{rng.unit_vector(), rng.uniform(-5, 5)};
        const PhysicalParams p{2.0, 1.0, 1.0, rng.uniform(0.1, 3.0)};
        const Operator2 h = hamiltonian(f, p);
        EXPECT_LE(max_abs_diff(h, h.adjoint()), kTol);

        testing::CMat m;
        m << h(0, 0), h(0, 1), h(1, 0), h(1, 1);
        const Eigen::SelfAdjointEigenSolver<testing::CMat> solver(m);
        EXPECT_NEAR(solver.eigenvalues()(1) - solver.eigenvalues()(0), p.hbar * std::abs(f.omega), 1e-12);
    }
}

TEST(EvolveExact, ZeroTimeIsIdentity) {
    Rng rng;
    const HigherOrderState st = rng.state();
    const Evolution ev = evolve_exact(st, {rng.unit_vector(), 3.0}, 0.0);
    EXPECT_LE(max_abs_diff(ev.frame.rotation, Operator2::identity()), kTol);
    EXPECT_LE(max_abs_diff(ev.state_at(0.8), state_at(st, 0.8)), kTol);
}

TEST(EvolveExact, ChiPlusAlongXAboutY) {
    const HigherOrderState st = from_coefficients(vortex_frame(), Complex(1), Complex(0));
    const Evolution ev = evolve_exact(st, {{0, 1, 0}, 1.0}, pi / 2);
    EXPECT_LE(max_abs_diff(expectation_vector(ev.state_at(0.0)), Vec3{0, 0, -1}), kTol);
}

TEST(EvolveExact, PrecessionAboutYField) {
    const HigherOrderState st = make_state(vortex_frame(), {0, 0});
    for (double wt : {0.0, pi / 2, pi, 3 * pi / 2, 0.37}) {
        const Evolution ev = evolve_exact(st, {{0, 1, 0}, 1.0}, wt);
        for (const auto& p : ev.field(AzimuthGrid(64)).points) {
            const Vec3 expected{std::cos(2 * p.phi) * std::sin(wt), -std::sin(2 * p.phi),
                                std::cos(2 * p.phi) * std::cos(wt)};
            EXPECT_LE(max_abs_diff(p.s, expected), 1e-10);
        }
    }
}

TEST(EvolveExact, MatchesMatrixExponentialOfHamiltonian) {
    Rng rng;
    for (int i = 0; i < 50; ++i) {
        const HigherOrderState st = rng.state();
        const ZeemanField f{rng.unit_vector(), rng.uniform(-3, 3)};
        const double t = rng.uniform(-4, 4), phi = rng.uniform(0, two_pi);
        const testing::CMat h = 0.5 * f.omega *
                                (f.n.x * testing::sigma_x() + f.n.y * testing::sigma_y() + f.n.z * testing::sigma_z());
        const testing::CMat u = (std::complex<double>(0, -t) * h).exp();
        const testing::CVec expected = u * testing::brute_state(st, phi);
        EXPECT_LE(testing::max_abs_diff(expected, evolve_exact(st, f, t).state_at(phi)), 1e-12);
    }
}

TEST(EvolveExact, CoefficientsStayConstant) {
    Rng rng;
    for (int i = 0; i < 50; ++i) {
        const HigherOrderState st = rng.state();
        const ZeemanField f{rng.unit_vector(), rng.uniform(-3, 3)};
        const auto [alpha, beta] = coefficients(st);
        for (double t : {0.0, 0.5, 2.0, -1.5, 10.0}) {
            const Evolution ev = evolve_exact(st, f, t);
            EXPECT_EQ(ev.alpha, alpha);
            EXPECT_EQ(ev.beta, beta);
            const double phi = rng.uniform(-3, 3);
            const Spinor psi = ev.state_at(phi);
            EXPECT_NEAR(std::abs(inner_product(ev.frame.chi_plus(phi), psi) - alpha), 0.0, kTol);
            EXPECT_NEAR(std::abs(inner_product(ev.frame.chi_minus(phi), psi) - beta), 0.0, kTol);
            EXPECT_NEAR(psi.norm_sq(), 1.0, kTol);
        }
    }
}

TEST(EvolveExact, AdjointTransportOfField) {
    Rng rng;
    for (int i = 0; i < 50; ++i) {
        const HigherOrderState st = rng.state();
        const ZeemanField f{rng.unit_vector(), rng.uniform(-3, 3)};
        const double t = rng.uniform(-5, 5);
        const AzimuthGrid grid(48);
        const OrientationField before = sample_field(st, grid);
        const OrientationField after = evolve_exact(st, f, t).field(grid);
        for (std::size_t k = 0; k < before.points.size(); ++k) {
            EXPECT_LE(max_abs_diff(after.points[k].s, rodrigues(before.points[k].s, f.n, f.omega * t)), 1e-10);
        }
    }
}

TEST(EvolveExact, FieldAlongLambdaAxisKeepsRing) {
    Rng rng;
    for (int i = 0; i < 50; ++i) {
        const HigherOrderState st = rng.state();
        const ZeemanField f{expectation_vector(lambda_plus(st.frame.basis)), rng.uniform(-3, 3)};
        const BSRing initial = ring_analytic(st);
        const Evolution ev = evolve_exact(st, f, rng.uniform(0, 10));
        const Vec3 anchor = expectation_vector(ev.state_at(0.0));
        const Vec3 axis = expectation_vector(ev.frame.chi_plus(0.0));
        EXPECT_LE(max_abs_diff(axis, initial.axis), 1e-10);
        EXPECT_NEAR(dot(axis, anchor), initial.offset, 1e-10);
        EXPECT_NEAR(norm(anchor - dot(axis, anchor) * axis), norm(initial.anchor - initial.offset * initial.axis),
                    1e-10);
    }
}

TEST(EvolveNumeric, ZeroFrequencyIsStatic) {
    Rng rng;
    const HigherOrderState st = rng.state();
    for (int steps : {1, 7, 100}) {
        const auto r = evolve_numeric(st, {{0, 0, 1}, 0.0}, 3.0, steps, 0.4);
        EXPECT_LE(max_abs_diff(r.state, state_at(st, 0.4)), kTol);
    }
}

TEST(EvolveNumeric, DiagonalHamiltonianPhase) {
    // H = (omega/2) sigma_z on (1, 0) gives e^{-i omega t / 2} (1, 0).
    const HigherOrderState up = make_state({{{0, 0}, SphereKind::B}, {0, 0}}, {0, 0});
    const auto r = evolve_numeric(up, {{0, 0, 1}, 1.0}, pi, 1000, 0.0);
    EXPECT_NEAR(std::abs(r.state.north() - std::polar(1.0, -pi / 2)), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(r.state.south()), 0.0, 1e-10);
}

TEST(EvolveNumeric, AgreesWithExactAtTenThousandSteps) {
    Rng rng;
    for (int i = 0; i < 10; ++i) {
        const HigherOrderState st = rng.state();
        const ZeemanField f{rng.unit_vector(), 1.0};
        const double phi = rng.uniform(0, two_pi);
        const auto r = evolve_numeric(st, f, 4 * pi, 10000, phi);
        EXPECT_LE(max_abs_diff(r.state, evolve_exact(st, f, 4 * pi).state_at(phi)), 1e-8);
    }
}

TEST(EvolveNumeric, FourthOrderConvergence) {
    Rng rng;
    const HigherOrderState st = rng.state();
    const ZeemanField f{rng.unit_vector(), 1.0};
    const double t = 4 * pi;
    const Spinor exact = evolve_exact(st, f, t).state_at(0.3);
    double previous = 0.0;
    for (int steps : {32, 64, 128, 256}) {
        const double err = max_abs_diff(evolve_numeric(st, f, t, steps, 0.3).state, exact);
        if (previous > 0.0) {
            const double ratio = previous / err;
            EXPECT_GE(ratio, 12.0) << steps;
            EXPECT_LE(ratio, 20.0) << steps;
        }
        previous = err;
    }
}

TEST(EvolveNumeric, RenormalizationMatchesRungeKuttaAmplification) {
    // One RK4 step with eigenphases +-y (y = omega dt / 2) scales the norm by
    // |1 + iy - y^2/2 - iy^3/6 + y^4/24| = sqrt(1 - y^6/72 + y^8/576).
    Rng rng;
    const HigherOrderState st = rng.state();
    for (double wdt : {0.02, 0.05, 0.1}) {
        const double y = wdt / 2;
        const double expected = 1.0 - std::sqrt(1.0 - std::pow(y, 6) / 72 + std::pow(y, 8) / 576);
        const auto r = evolve_numeric(st, {rng.unit_vector(), 1.0}, 100 * wdt, 100, 0.0);
        EXPECT_NEAR(r.max_correction, expected, 1e-3 * expected + 1e-15);
        EXPECT_LT(r.max_correction, 1.1e-10);
    }
}

TEST(EvolveNumeric, RefusesLargeSteps) {
    Rng rng;
    const HigherOrderState st = rng.state();
    EXPECT_THROW(evolve_numeric(st, {{0, 0, 1}, 1.0}, 10.0, 10, 0.0), InconsistencyError);
    EXPECT_NO_THROW(evolve_numeric(st, {{0, 0, 1}, 1.0}, -10.0, 20, 0.0));
    EXPECT_THROW(evolve_numeric(st, {{0, 0, 1}, 1.0}, 1.0, 0, 0.0), DomainError);
}

TEST(Trajectory, EndpointsAndSpacing) {
    Rng rng;
    const HigherOrderState st = rng.state();
    const ZeemanField f{rng.unit_vector(), 2.0};
    const auto two = trajectory(st, f, 0.5, 1.5, 2);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0].t, 0.5);
    EXPECT_EQ(two[1].t, 1.5);

    const auto four = trajectory(st, f, 0.0, 3.0, 4);
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(four[static_cast<std::size_t>(k)].t, k, kTol);

    EXPECT_THROW(trajectory(st, f, 1.0, 1.0, 3), DomainError);
    EXPECT_THROW(trajectory(st, f, 0.0, 1.0, 1), DomainError);
}

TEST(Trajectory, FourQuarterPeriodPanels) {
    const HigherOrderState st = make_state(vortex_frame(), {0, 0});
    const auto snaps = trajectory(st, {{0, 1, 0}, 1.0}, 0.0, 3 * pi / 2, 4);
    for (const auto& snap : snaps) {
        for (const auto& p : snap.field.points) {
            const Vec3 expected{std::cos(2 * p.phi) * std::sin(snap.t), -std::sin(2 * p.phi),
                                std::cos(2 * p.phi) * std::cos(snap.t)};
            EXPECT_LE(max_abs_diff(p.s, expected), 1e-10);
        }
    }
}

TEST(Trajectory, FullPeriodReturns) {
    Rng rng;
    const HigherOrderState st = rng.state();
    const ZeemanField f{rng.unit_vector(), 2.0};
    const double t0 = 0.3;
    const auto snaps = trajectory(st, f, t0, t0 + two_pi / f.omega, 2);
    for (std::size_t k = 0; k < snaps[0].field.points.size(); ++k)
        EXPECT_LE(max_abs_diff(snaps[0].field.points[k].s, snaps[1].field.points[k].s), 1e-10);
    const Spinor a = snaps[0].evolution.state_at(0.2), b = snaps[1].evolution.state_at(0.2);
    EXPECT_LE(max_abs_diff(a, b.with_phase(Complex(-1))), 1e-10);
}

}  // namespace
}  // namespace hobs
