#pragma once

// Command-line front end. Subcommands:
//
//   state     spinor and expectation vector of a base-sphere point
//   field     sampled orientation field of a higher-order state (JSON or CSV)
//   ring      analytic and fitted BS-ring of a higher-order state
//   precess   Larmor precession trajectory (exact or numerically integrated)
//   transfer  photon (P) state spec -> electron (B) state spec
//   render    SVG panel of a field document
//
// Exit codes: 0 success, 2 invalid input, 3 numeric inconsistency, 4 I/O failure.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hobs/dynamics.hpp"
#include "hobs/serialization.hpp"
#include "hobs/svg.hpp"
#include "hobs/transfer.hpp"

namespace hobs::cli {

enum ExitCode : int { ok = 0, invalid_input = 2, numeric_failure = 3, io_failure = 4 };

namespace detail {

struct StateFlags {
    std::string state_file;
    std::string sphere = "B";
    std::string theta_lambda = "0";
    std::string phi_lambda = "0";
    int l = 0;
    int m = 0;
    std::string theta = "0";
    std::string phi = "0";

    void attach(CLI::App* cmd) {
        cmd->add_option("--state", state_file, "StateSpec JSON file (overrides the flags below)");
        cmd->add_option("--sphere", sphere, "sphere family: P (polarization) or B (spin)");
        cmd->add_option("--theta-lambda", theta_lambda, "polar angle of the lambda+ basis state");
        cmd->add_option("--phi-lambda", phi_lambda, "azimuth of the lambda+ basis state");
        cmd->add_option("--l", l, "topological charge of the + basis");
        cmd->add_option("--m", m, "topological charge of the - basis");
        cmd->add_option("--theta", theta, "polar angle on the higher-order sphere");
        cmd->add_option("--phi", phi, "azimuth on the higher-order sphere");
    }

    HigherOrderState resolve() const {
        if (!state_file.empty()) return io::state_from_json(parse_json(io::read_file(state_file)));
        const HigherOrderFrame frame{
            {{io::parse_angle(theta_lambda), io::parse_angle(phi_lambda)}, io::parse_sphere(sphere)}, {l, m}};
        return make_state(frame, {io::parse_angle(theta), io::parse_angle(phi)});
    }

    static io::Json parse_json(const std::string& text) {
        try {
            return io::Json::parse(text);
        } catch (const io::Json::exception& e) {
            throw DomainError(std::string("malformed JSON: ") + e.what());
        }
    }
};

inline void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << text;
    else
        io::write_file_atomic(out_path, text);
}

inline std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

inline int required_samples(const HigherOrderState& st) { return AzimuthGrid::minimum_for(st.frame.charges); }

inline void check_samples(int n, const HigherOrderState& st) {
    if (n < required_samples(st))
        throw DomainError("--samples must be at least " + std::to_string(required_samples(st)) + " for |l - m| = " +
                          std::to_string(std::abs(st.frame.charges.winding())));
}

inline Vec3 parse_axis(const std::string& text) {
    std::vector<double> v;
    std::istringstream in(text);
    std::string cell;
    while (std::getline(in, cell, ',')) v.push_back(io::parse_double(cell));
    if (v.size() != 3) throw DomainError("--axis expects three comma-separated components");
    return {v[0], v[1], v[2]};
}

inline io::Json operator_json(const Operator2& op) {
    io::Json j = io::Json::array();
    for (const auto& c : op.m) j.push_back(io::complex_json(c));
    return j;
}

}  // namespace detail

/// Runs one command line. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Higher-order Bloch and Poincare sphere toolkit", "hobs"};
    app.require_subcommand(1);

    // state
    auto* state_cmd = app.add_subcommand("state", "spinor and expectation vector of a base-sphere point");
    std::string st_theta = "0", st_phi = "0", st_sphere = "B", st_out;
    state_cmd->add_option("--theta", st_theta, "polar angle in [0, pi]");
    state_cmd->add_option("--phi", st_phi, "azimuth in [0, 2pi)");
    state_cmd->add_option("--sphere", st_sphere, "P or B");
    state_cmd->add_option("--out", st_out, "output file (default stdout)");

    // field
    auto* field_cmd = app.add_subcommand("field", "sampled orientation field");
    detail::StateFlags field_flags;
    field_flags.attach(field_cmd);
    std::optional<int> field_samples;
    std::string field_format = "json", field_out;
    field_cmd->add_option("--samples", field_samples, "number of azimuth samples (default 64)");
    field_cmd->add_option("--format", field_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    field_cmd->add_option("--out", field_out, "output file (default stdout)");

    // ring
    auto* ring_cmd = app.add_subcommand("ring", "analytic and fitted BS-ring");
    detail::StateFlags ring_flags;
    ring_flags.attach(ring_cmd);
    std::optional<int> ring_samples;
    std::string ring_out;
    ring_cmd->add_option("--samples", ring_samples, "samples used for the fit (default 256)");
    ring_cmd->add_option("--out", ring_out, "output file (default stdout)");

    // precess
    auto* precess_cmd = app.add_subcommand("precess", "Larmor precession trajectory");
    detail::StateFlags precess_flags;
    precess_flags.attach(precess_cmd);
    std::string pr_axis = "0,0,1", pr_omega = "1", pr_t0 = "0", pr_t1, pr_method = "exact", pr_out;
    int pr_frames = 4, pr_steps = 10000;
    std::optional<int> pr_samples;
    precess_cmd->add_option("--axis", pr_axis, "field direction as x,y,z (normalized)");
    precess_cmd->add_option("--omega", pr_omega, "precession angular frequency");
    precess_cmd->add_option("--t0", pr_t0, "first snapshot time");
    precess_cmd->add_option("--t1", pr_t1, "last snapshot time")->required();
    precess_cmd->add_option("--frames", pr_frames, "number of snapshots (>= 2)");
    precess_cmd->add_option("--method", pr_method, "exact or numeric")->check(CLI::IsMember({"exact", "numeric"}));
    precess_cmd->add_option("--steps", pr_steps, "integrator steps per snapshot (numeric method)");
    precess_cmd->add_option("--samples", pr_samples, "azimuth samples per snapshot (default 64)");
    precess_cmd->add_option("--out", pr_out, "output file (default stdout)");

    // transfer
    auto* transfer_cmd = app.add_subcommand("transfer", "photon state spec -> electron state spec");
    std::string tr_input, tr_out;
    transfer_cmd->add_option("--input", tr_input, "StateSpec JSON with sphere P")->required();
    transfer_cmd->add_option("--out", tr_out, "output file (default stdout)");

    // render
    auto* render_cmd = app.add_subcommand("render", "SVG panel of a field document");
    std::string rd_input, rd_style = "arrows", rd_out;
    render_cmd->add_option("--input", rd_input, "field document (JSON or CSV)")->required();
    render_cmd->add_option("--style", rd_style, "arrows or ellipses");
    render_cmd->add_option("--out", rd_out, "output SVG file (default stdout)");

    std::vector<const char*> argv{"hobs"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : invalid_input;
    }

    try {
        if (*state_cmd) {
            const SphereKind kind = io::parse_sphere(st_sphere);
            const SphereCoords c{io::parse_angle(st_theta), io::parse_angle(st_phi)};
            const Spinor s = spinor_from_sphere(c, kind);
            io::Json j;
            j["sphere"] = std::string(to_string(kind));
            j["theta"] = c.theta;
            j["phi"] = c.phi;
            j["spinor"] = {{"north", io::complex_json(s.north())}, {"south", io::complex_json(s.south())}};
            const auto names = axis_names(kind);
            j["axes"] = io::Json::array({names[0], names[1], names[2]});
            j["vector"] = io::vec_json(expectation_vector(s));
            detail::emit(detail::dump(j), st_out, out);
        } else if (*field_cmd) {
            const HigherOrderState st = field_flags.resolve();
            const int n = field_samples.value_or(std::max(AzimuthGrid::default_samples, detail::required_samples(st)));
            detail::check_samples(n, st);
            const auto doc = io::FieldDocument::from_field(sample_field(st, AzimuthGrid(n)));
            detail::emit(field_format == "csv" ? io::to_csv_text(doc) : io::to_json_text(doc), field_out, out);
        } else if (*ring_cmd) {
            const HigherOrderState st = ring_flags.resolve();
            const int n = ring_samples.value_or(std::max(256, detail::required_samples(st)));
            detail::check_samples(n, st);
            const BSRing analytic = ring_analytic(st);
            const BSRing fitted = ring_from_field(sample_field(st, AzimuthGrid(n)));
            io::Json j;
            j["state"] = io::state_to_json(st);
            j["samples"] = n;
            j["analytic"] = io::ring_to_json(analytic);
            j["fitted"] = io::ring_to_json(fitted);
            j["max_discrepancy"] = ring_discrepancy(analytic, fitted);
            detail::emit(detail::dump(j), ring_out, out);
        } else if (*precess_cmd) {
            const HigherOrderState st = precess_flags.resolve();
            const ZeemanField field = make_field(detail::parse_axis(pr_axis), io::parse_angle(pr_omega));
            const int n = pr_samples.value_or(std::max(AzimuthGrid::default_samples, detail::required_samples(st)));
            detail::check_samples(n, st);
            const AzimuthGrid grid(n);
            const bool numeric = pr_method == "numeric";

            io::Json j;
            j["state"] = io::state_to_json(st);
            j["field"] = {{"axis", io::vec_json(field.n)}, {"omega", field.omega}};
            j["method"] = pr_method;
            j["samples"] = n;
            if (numeric) j["steps"] = pr_steps;
            io::Json snaps = io::Json::array();
            double max_dev = 0.0;
            for (const auto& snap : trajectory(st, field, io::parse_angle(pr_t0), io::parse_angle(pr_t1), pr_frames, grid)) {
                io::Json s;
                s["t"] = snap.t;
                s["rotation"] = detail::operator_json(snap.evolution.frame.rotation);
                s["alpha"] = io::complex_json(snap.evolution.alpha);
                s["beta"] = io::complex_json(snap.evolution.beta);
                std::vector<FieldPoint> rows = snap.field.points;
                if (numeric) {
                    for (auto& row : rows) {
                        const Spinor psi = evolve_numeric(st, field, snap.t, pr_steps, row.phi).state;
                        max_dev = std::max(max_dev, max_abs_diff(psi, snap.evolution.state_at(row.phi)));
                        row.s = expectation_vector(psi);
                    }
                }
                s["rows"] = io::rows_json(rows);
                snaps.push_back(std::move(s));
            }
            j["snapshots"] = std::move(snaps);
            if (numeric) j["max_deviation"] = max_dev;
            detail::emit(detail::dump(j), pr_out, out);
        } else if (*transfer_cmd) {
            const HigherOrderState photon =
                io::state_from_json(detail::StateFlags::parse_json(io::read_file(tr_input)));
            const auto result = transfer_higher_order(photon);
            detail::emit(detail::dump(io::state_to_json(result.electron)), tr_out, out);
        } else if (*render_cmd) {
            const svg::Style style = svg::parse_style(rd_style);
            const io::FieldDocument doc = io::field_from_text(io::read_file(rd_input));
            detail::emit(svg::render(doc, style), rd_out, out);
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return invalid_input;
    } catch (const InconsistencyError& e) {
        err << "numeric error: " << e.what() << '\n';
        return numeric_failure;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return io_failure;
    }
    return ok;
}

}  // namespace hobs::cli
