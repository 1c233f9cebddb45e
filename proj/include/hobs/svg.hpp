#pragma once

// Static SVG panels of an orientation field: one glyph per azimuth sample,
// placed counterclockwise on a circle starting from the +x direction.
//
//   arrows    spin orientation projected along the (1,1,1) view direction;
//             the third component sets the colour (blue -1, white 0, red +1).
//   ellipses  polarization ellipse from the Stokes vector; red right-handed,
//             blue left-handed, black linear.
//
// Output depends only on the input rows, so identical documents render to
// identical bytes.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "hobs/serialization.hpp"

namespace hobs::svg {

enum class Style { arrows, ellipses };

inline Style parse_style(const std::string& s) {
    if (s == "arrows") return Style::arrows;
    if (s == "ellipses") return Style::ellipses;
    throw DomainError("style must be 'arrows' or 'ellipses', got '" + s + "'");
}

namespace detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

inline std::string colour_for(double t) {
    t = std::clamp(t, -1.0, 1.0);
    const auto channel = [](double x) { return static_cast<int>(std::lround(255.0 * std::clamp(x, 0.0, 1.0))); };
    int r = 255, g = 255, b = 255;
    if (t >= 0.0) {
        g = b = channel(1.0 - t);
    } else {
        r = g = channel(1.0 + t);
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
}

// Screen basis orthogonal to the view direction (1,1,1)/sqrt(3), third axis up.
inline constexpr Vec3 screen_right{-0.70710678118654752, 0.70710678118654752, 0.0};
inline constexpr Vec3 screen_up{-0.40824829046386302, -0.40824829046386302, 0.81649658092772603};

}  // namespace detail

struct Layout {
    double size = 480.0;
    double ring_radius = 180.0;
    double glyph_length = 16.0;
};

inline std::string render(const io::FieldDocument& doc, Style style, const Layout& layout = {}) {
    io::validate(doc);
    using detail::num;
    const double c = layout.size / 2.0;
    const double half = layout.glyph_length / 2.0;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(layout.size) +
           "\" height=\"" + num(layout.size) + "\" viewBox=\"0 0 " + num(layout.size) + ' ' + num(layout.size) +
           "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    out += "<circle cx=\"" + num(c) + "\" cy=\"" + num(c) + "\" r=\"" + num(layout.ring_radius) +
           "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

    for (const auto& row : doc.rows) {
        const double px = c + layout.ring_radius * std::cos(row.phi);
        const double py = c - layout.ring_radius * std::sin(row.phi);

        if (style == Style::arrows) {
            const double dx = dot(row.s, detail::screen_right);
            const double dy = -dot(row.s, detail::screen_up);
            const double x0 = px - half * dx, y0 = py - half * dy;
            const double x1 = px + half * dx, y1 = py + half * dy;
            // Arrow head: two barbs at 25% of the glyph length.
            const double hx = -0.25 * layout.glyph_length * dx, hy = -0.25 * layout.glyph_length * dy;
            const double bx1 = x1 + 0.8 * hx - 0.5 * hy, by1 = y1 + 0.8 * hy + 0.5 * hx;
            const double bx2 = x1 + 0.8 * hx + 0.5 * hy, by2 = y1 + 0.8 * hy - 0.5 * hx;
            out += "<path class=\"glyph\" d=\"M " + num(x0) + ' ' + num(y0) + " L " + num(x1) + ' ' + num(y1) +
                   " M " + num(bx1) + ' ' + num(by1) + " L " + num(x1) + ' ' + num(y1) + " L " + num(bx2) + ' ' +
                   num(by2) + "\" fill=\"none\" stroke=\"" + detail::colour_for(row.s.z) +
                   "\" stroke-width=\"2\" stroke-linecap=\"round\"/>\n";
        } else {
            const PolarizationEllipse e = stokes_to_ellipse(row.s);
            const double a = half;
            const double b = half * std::abs(std::tan(e.ellipticity));
            const double ux = std::cos(e.orientation), uy = -std::sin(e.orientation);
            const double rot = -e.orientation * 180.0 / pi;
            const std::string arc = " A " + num(a) + ' ' + num(b) + ' ' + num(rot) + " 1 0 ";
            const char* colour = e.handedness == Handedness::right  ? "#d62728"
                                 : e.handedness == Handedness::left ? "#1f77b4"
                                                                    : "#000000";
            out += "<path class=\"glyph\" d=\"M " + num(px + a * ux) + ' ' + num(py + a * uy) + arc +
                   num(px - a * ux) + ' ' + num(py - a * uy) + arc + num(px + a * ux) + ' ' + num(py + a * uy) +
                   "\" fill=\"none\" stroke=\"" + colour + "\" stroke-width=\"1.5\"/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace hobs::svg
