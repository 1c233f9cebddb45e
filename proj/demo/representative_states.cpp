// Prints the BS-ring of six states on the (pi/2, 0), (l, m) = (-1, 1) sphere.
// The poles and D/A share one ring in the s_x = 0 plane; chi+ and chi- collapse to points.

#include <cstdio>

#include "hobs/hobs.hpp"

int main() {
    using namespace hobs;
    const HigherOrderFrame frame{{{pi / 2, 0}, SphereKind::B}, {-1, 1}};

    const struct {
        const char* name;
        HigherOrderState state;
    } states[] = {
        {"N", make_state(frame, {0, 0})},
        {"S", make_state(frame, {pi, 0})},
        {"D", make_state(frame, {pi / 2, pi / 2})},
        {"A", make_state(frame, {pi / 2, 3 * pi / 2})},
        {"chi+", from_coefficients(frame, Complex(1), Complex(0))},
        {"chi-", from_coefficients(frame, Complex(0), Complex(1))},
    };

    std::printf("%-5s %-22s %-22s %7s %7s %7s\n", "state", "axis", "s(0)", "offset", "radius", "winding");
    for (const auto& [name, st] : states) {
        const BSRing r = ring_from_field(sample_field(st, AzimuthGrid(64)));
        std::printf("%-5s (%6.3f,%6.3f,%6.3f) (%6.3f,%6.3f,%6.3f) %7.3f %7.3f %7d\n", name, r.axis.x, r.axis.y,
                    r.axis.z, r.anchor.x, r.anchor.y, r.anchor.z, r.offset, r.radius, r.winding);
    }
}
