#pragma once

/**
 * @file transfer.hpp
 * @brief Ideal photon-to-electron-spin transfer through a V-shaped three-level system.
 *
 * An in-plane field splits the light-hole doublet into |+-x> = (|up> +- |down>)/sqrt(2).
 * Optical transitions to the degenerate electron doublet from |-x> carry
 * alpha|R> + beta|L> over to (alpha|up> + beta|down>) (x) |-x>. The amplitudes and,
 * for higher-order states, every frame parameter are copied unchanged; only the
 * sphere family changes from P to B.
 */

#include <cmath>

#include "hobs/higher_order.hpp"

namespace hobs {

struct LHBasis {
    Spinor plus_x;
    Spinor minus_x;
};

inline LHBasis light_hole_basis() {
    const double r = 1.0 / std::sqrt(2.0);
    return {Spinor(Complex(r), Complex(r), SphereKind::B), Spinor(Complex(r), Complex(-r), SphereKind::B)};
}

struct TransferResult {
    Spinor electron;
    Spinor hole;
    double fidelity = 1.0;
};

struct HigherOrderTransferResult {
    HigherOrderState electron;
    Spinor hole;
    double fidelity = 1.0;
};

inline TransferResult transfer_state(const Spinor& photon) {
    if (photon.kind() != SphereKind::P) throw DomainError("transfer expects a polarization (P) state");
    return {photon.relabeled(SphereKind::B), light_hole_basis().minus_x, 1.0};
}

inline HigherOrderTransferResult transfer_higher_order(const HigherOrderState& photon) {
    if (photon.kind() != SphereKind::P) throw DomainError("transfer expects a polarization (P) state");
    HigherOrderState electron = photon;
    electron.frame.basis.kind = SphereKind::B;
    return {electron, light_hole_basis().minus_x, 1.0};
}

}  // namespace hobs
