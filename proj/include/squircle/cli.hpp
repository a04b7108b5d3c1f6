#ifndef SQUIRCLE_CLI_HPP
#define SQUIRCLE_CLI_HPP

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "contour2d.hpp"
#include "core.hpp"
#include "domains.hpp"
#include "fields2d.hpp"
#include "fields3d.hpp"
#include "mesh_io.hpp"
#include "polygonize3d.hpp"
#include "verification.hpp"

namespace squircle::cli {

/// Bad command line; the message names the offending flag.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// --help was given; carries the text to print.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Subcommand { curve, surface, sweep, verify, info };
enum class Format { svg, csv, obj, stl };

inline std::string_view extension(Format f) {
    switch (f) {
    case Format::svg: return ".svg";
    case Format::csv: return ".csv";
    case Format::obj: return ".obj";
    case Format::stl: return ".stl";
    }
    return "";
}

struct Command {
    Subcommand subcommand = Subcommand::curve;
    bool is3d = false;
    ShapeSpec2D spec2d;
    ShapeSpec3D spec3d;
    DomainOverride domain;
    int grid = 512;
    int tiles = 1;
    Format format = Format::svg;
    std::string out;
    bool clip = true;
    char sweep_param = 's';
    double sweep_from = 0.0;
    double sweep_to = 1.0;
    int sweep_steps = 1;
    Suite suite = Suite::all;
    std::optional<std::string> info_family;
    unsigned workers = 0;
};

/// Real number, "inf", or a multiple of pi such as "pi", "-pi", "2pi", "pi/2", "2pi/3".
inline std::optional<double> parse_real(std::string_view text) {
    auto number = [](std::string_view t) -> std::optional<double> {
        if (t.empty()) return std::nullopt;
        const std::string s(t);
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (end != s.c_str() + s.size() || !std::isfinite(v)) return std::nullopt;
        return v;
    };
    if (text.empty()) return std::nullopt;
    double sign = 1.0;
    std::string_view body = text;
    if (body.front() == '+' || body.front() == '-') {
        if (body.front() == '-') sign = -1.0;
        body.remove_prefix(1);
    }
    if (body == "inf" || body == "infinity") return sign * kInfinity;
    const auto pi_at = body.find("pi");
    if (pi_at == std::string_view::npos) {
        if (body.empty() || body.front() == '+' || body.front() == '-') return std::nullopt;
        const auto v = number(body);
        return v ? std::optional<double>(sign * *v) : std::nullopt;
    }
    double coeff = 1.0, divisor = 1.0;
    if (pi_at > 0) {
        std::string_view c = body.substr(0, pi_at);
        if (c.back() == '*') c.remove_suffix(1);
        const auto v = number(c);
        if (!v) return std::nullopt;
        coeff = *v;
    }
    std::string_view rest = body.substr(pi_at + 2);
    if (!rest.empty()) {
        if (rest.front() != '/') return std::nullopt;
        const auto v = number(rest.substr(1));
        if (!v || *v == 0.0) return std::nullopt;
        divisor = *v;
    }
    return sign * coeff * std::numbers::pi / divisor;
}

namespace detail {

/// Flag responsible for a validation message, by longest matching prefix.
inline std::string flag_for_message(std::string_view message) {
    static constexpr std::pair<std::string_view, std::string_view> table[] = {
        {"squareness", "--squareness"}, {"overshoot", "--overshoot"}, {"exponent", "--exponent"},
        {"cone exponent", "--exponent"}, {"radius", "--radius"},       {"tube radius", "--r"},
        {"ring radius", "--R"},          {"cone height", "--c"},        {"cone semi-axes", "--a/--b"},
        {"scale k", "--k"},              {"cross-term", "--cc"},        {"domain", "--xmin/--xmax/--ymin/--ymax/--zmin/--zmax"},
        {"frantz", "--family"},
    };
    std::string_view best = "--family";
    std::size_t best_len = 0;
    for (const auto& [prefix, flag] : table) {
        if (message.substr(0, prefix.size()) == prefix && prefix.size() > best_len) {
            best = flag;
            best_len = prefix.size();
        }
    }
    return std::string(best);
}

template <typename F>
void rethrow_as_usage(F&& f, std::optional<std::string> flag = std::nullopt) {
    try {
        f();
    } catch (const std::invalid_argument& e) {
        throw UsageError((flag ? *flag : flag_for_message(e.what())) + ": " + e.what());
    }
}

struct RawOptions {
    std::string family, squareness, exponent, radius, ring, overshoot, a, b, c, k, cc;
    std::string xmin, xmax, ymin, ymax, zmin, zmax;
    std::string from, to, param = "s", format, out, suite = "all";
    int grid = 0, tiles = 1, steps = 0;
    bool no_clip = false;
    unsigned workers = 0;
};

inline void add_shape_options(CLI::App* sub, RawOptions& o) {
    sub->add_option("--family", o.family, "shape family (see `info`)");
    sub->add_option("--squareness", o.squareness, "squareness s");
    sub->add_option("--exponent", o.exponent, "Lame exponent p (accepts inf)");
    sub->add_option("--radius,--r", o.radius, "scale r, or tube radius for toroids");
    sub->add_option("--R", o.ring, "toroid ring radius");
    sub->add_option("--overshoot", o.overshoot, "oblique overshoot h");
    sub->add_option("--a", o.a, "cone semi-axis a");
    sub->add_option("--b", o.b, "cone semi-axis b");
    sub->add_option("--c", o.c, "cone height c");
    sub->add_option("--k", o.k, "cuboctahedron scale k");
    sub->add_option("--cc", o.cc, "cuboctahedron cross-term constant");
    sub->add_option("--xmin", o.xmin);
    sub->add_option("--xmax", o.xmax);
    sub->add_option("--ymin", o.ymin);
    sub->add_option("--ymax", o.ymax);
    sub->add_option("--zmin", o.zmin);
    sub->add_option("--zmax", o.zmax);
    sub->add_option("--grid", o.grid, "cells per axis (default 512 for curves, 96 for surfaces)");
    sub->add_option("--tiles", o.tiles, "repeat the default window 2*tiles-1 times per axis");
    sub->add_option("--format", o.format, "svg|csv for curves, obj|stl for surfaces");
    sub->add_option("--out,-o", o.out, "output path");
    sub->add_flag("--no-clip", o.no_clip, "keep periodic copies and extraneous branches");
    sub->add_option("--workers", o.workers, "worker threads (default: SQUIRCLE_WORKERS or all cores)");
}

inline double real_flag(std::string_view flag, const std::string& text) {
    const auto v = parse_real(text);
    if (!v) throw UsageError(std::string(flag) + ": cannot parse '" + text + "' as a number");
    return *v;
}

inline void set_if(std::string_view flag, const std::string& text, double& dst) {
    if (!text.empty()) dst = real_flag(flag, text);
}

inline void set_if(std::string_view flag, const std::string& text, std::optional<double>& dst) {
    if (!text.empty()) dst = real_flag(flag, text);
}

inline bool has_parameter(const Command& cmd, char param) {
    if (param == 'r') return true;
    if (cmd.is3d) {
        switch (cmd.spec3d.family) {
        case Family3D::lame3d: return param == 'p';
        case Family3D::cone_lame: return param == 'p';
        case Family3D::oblique3d: return param == 's' || param == 'h';
        case Family3D::cuboctahedron: return false;
        default: return param == 's';
        }
    }
    switch (cmd.spec2d.family) {
    case Family2D::lame: return param == 'p';
    case Family2D::oblique: return param == 's' || param == 'h';
    case Family2D::phase_grid: return false;
    default: return param == 's';
    }
}

} // namespace detail

/// Copy of the command's shape with the sweep parameter set to `value`.
inline Command with_parameter(Command cmd, double value) {
    auto set = [&](auto& spec) {
        switch (cmd.sweep_param) {
        case 's': spec.s = value; break;
        case 'p': spec.p = value; break;
        case 'h': spec.h = value; break;
        case 'r': spec.r = value; break;
        }
    };
    if (cmd.is3d)
        set(cmd.spec3d);
    else
        set(cmd.spec2d);
    return cmd;
}

inline double sweep_value(const Command& cmd, int step) {
    if (cmd.sweep_steps <= 1) return cmd.sweep_from;
    return cmd.sweep_from + (cmd.sweep_to - cmd.sweep_from) * step / (cmd.sweep_steps - 1);
}

inline Domain2D curve_domain(const Command& cmd) {
    return default_domain2d(cmd.spec2d, cmd.grid, cmd.tiles, cmd.domain);
}

inline Domain3D surface_domain(const Command& cmd) {
    return default_domain3d(cmd.spec3d, cmd.grid, cmd.tiles, cmd.domain);
}

/// Parses a full argument list (without the program name).
inline Command parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Squircle curves and squircular surfaces", "squircle"};
    app.require_subcommand(1);
    detail::RawOptions o;
    std::string info_family;

    auto* curve = app.add_subcommand("curve", "contour a planar squircle");
    auto* surface = app.add_subcommand("surface", "mesh a squircular surface");
    auto* sweep = app.add_subcommand("sweep", "one output file per parameter step");
    auto* verify = app.add_subcommand("verify", "run numerical checks");
    auto* info = app.add_subcommand("info", "print a family's equation and parameter ranges");
    for (auto* sub : {curve, surface, sweep}) detail::add_shape_options(sub, o);
    sweep->add_option("--param", o.param, "swept parameter: s, p, h or r");
    sweep->add_option("--from", o.from)->required();
    sweep->add_option("--to", o.to)->required();
    sweep->add_option("--steps", o.steps)->required();
    verify->add_option("--suite", o.suite, "all|limits|square|equivalence|mesh");
    verify->add_option("--workers", o.workers);
    info->add_option("--family", info_family);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        for (const auto* sub : app.get_subcommands()) throw HelpRequested(sub->help());
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    Command cmd;
    cmd.workers = o.workers;
    if (info->parsed()) {
        cmd.subcommand = Subcommand::info;
        if (!info_family.empty()) {
            if (!parse_family2d(info_family) && !parse_family3d(info_family))
                throw UsageError("--family: unknown family '" + info_family + "'");
            cmd.info_family = info_family;
        }
        return cmd;
    }
    if (verify->parsed()) {
        cmd.subcommand = Subcommand::verify;
        const auto suite = parse_suite(o.suite);
        if (!suite) throw UsageError("--suite: unknown suite '" + o.suite + "'");
        cmd.suite = *suite;
        return cmd;
    }
    cmd.subcommand = curve->parsed() ? Subcommand::curve : surface->parsed() ? Subcommand::surface : Subcommand::sweep;

    if (o.family.empty()) throw UsageError("--family is required");
    const auto f2 = parse_family2d(o.family);
    const auto f3 = parse_family3d(o.family);
    if (!f2 && !f3) throw UsageError("--family: unknown family '" + o.family + "'");
    cmd.is3d = f3.has_value();
    if (cmd.subcommand == Subcommand::curve && cmd.is3d)
        throw UsageError("--family: '" + o.family + "' is a surface family; use `surface`");
    if (cmd.subcommand == Subcommand::surface && !cmd.is3d)
        throw UsageError("--family: '" + o.family + "' is a curve family; use `curve`");

    if (cmd.is3d) {
        auto& sp = cmd.spec3d;
        sp.family = *f3;
        detail::set_if("--squareness", o.squareness, sp.s);
        detail::set_if("--exponent", o.exponent, sp.p);
        detail::set_if("--radius", o.radius, sp.r);
        detail::set_if("--R", o.ring, sp.ring_radius);
        detail::set_if("--overshoot", o.overshoot, sp.h);
        detail::set_if("--a", o.a, sp.a);
        detail::set_if("--b", o.b, sp.b);
        detail::set_if("--c", o.c, sp.c);
        detail::set_if("--k", o.k, sp.k);
        detail::set_if("--cc", o.cc, sp.cc);
        if (sp.family == Family3D::toroid || sp.family == Family3D::toroid_octic) {
            // the tube radius defaults to a quarter of the ring radius
            if (o.radius.empty()) sp.r = 0.25 * sp.ring_radius;
        }
    } else {
        auto& sp = cmd.spec2d;
        sp.family = *f2;
        detail::set_if("--squareness", o.squareness, sp.s);
        detail::set_if("--exponent", o.exponent, sp.p);
        detail::set_if("--radius", o.radius, sp.r);
        detail::set_if("--overshoot", o.overshoot, sp.h);
    }

    detail::set_if("--xmin", o.xmin, cmd.domain.xmin);
    detail::set_if("--xmax", o.xmax, cmd.domain.xmax);
    detail::set_if("--ymin", o.ymin, cmd.domain.ymin);
    detail::set_if("--ymax", o.ymax, cmd.domain.ymax);
    detail::set_if("--zmin", o.zmin, cmd.domain.zmin);
    detail::set_if("--zmax", o.zmax, cmd.domain.zmax);

    cmd.grid = o.grid != 0 ? o.grid : (cmd.is3d ? 96 : 512);
    if (cmd.grid < 8) throw UsageError("--grid: must be >= 8");
    if (o.tiles < 1) throw UsageError("--tiles: must be >= 1");
    cmd.tiles = o.tiles;
    cmd.clip = !o.no_clip;

    if (o.format.empty()) {
        cmd.format = cmd.is3d ? Format::obj : Format::svg;
    } else if (o.format == "svg" || o.format == "csv") {
        if (cmd.is3d) throw UsageError("--format: surfaces are written as obj or stl");
        cmd.format = o.format == "svg" ? Format::svg : Format::csv;
    } else if (o.format == "obj" || o.format == "stl") {
        if (!cmd.is3d) throw UsageError("--format: curves are written as svg or csv");
        cmd.format = o.format == "obj" ? Format::obj : Format::stl;
    } else {
        throw UsageError("--format: unknown format '" + o.format + "'");
    }
    cmd.out = o.out.empty() ? o.family + std::string(extension(cmd.format)) : o.out;

    auto check_shape = [](const Command& c, const std::optional<std::string>& flag = std::nullopt) {
        detail::rethrow_as_usage(
            [&] {
                if (c.is3d) {
                    validate(c.spec3d);
                } else if (c.spec2d.family != Family2D::frantz) {
                    make_field2d(c.spec2d);
                } else {
                    validate(c.spec2d);
                }
            },
            flag);
        detail::rethrow_as_usage(
            [&] {
                if (c.is3d)
                    surface_domain(c);
                else
                    curve_domain(c);
            },
            "--xmin/--xmax/--ymin/--ymax/--zmin/--zmax");
    };

    if (cmd.subcommand == Subcommand::sweep) {
        if (o.param.size() != 1 || std::string_view("sphr").find(o.param[0]) == std::string_view::npos)
            throw UsageError("--param: must be one of s, p, h, r");
        cmd.sweep_param = o.param[0];
        if (!detail::has_parameter(cmd, cmd.sweep_param))
            throw UsageError("--param: family '" + o.family + "' has no parameter '" + o.param + "'");
        cmd.sweep_from = detail::real_flag("--from", o.from);
        cmd.sweep_to = detail::real_flag("--to", o.to);
        if (o.steps < 1) throw UsageError("--steps: must be >= 1");
        cmd.sweep_steps = o.steps;
        check_shape(with_parameter(cmd, cmd.sweep_from), std::string("--from"));
        check_shape(with_parameter(cmd, cmd.sweep_to), std::string("--to"));
    } else {
        check_shape(cmd);
    }
    return cmd;
}

// ---------------------------------------------------------------------------
// Rendering

struct CurveResult {
    Domain2D domain;
    std::vector<Polyline> lines;
};

inline CurveResult render_curve(const Command& cmd) {
    const ShapeSpec2D& spec = cmd.spec2d;
    CurveResult res{curve_domain(cmd), {}};
    if (spec.family == Family2D::frantz) {
        res.lines.push_back(frantz_polyline(spec.s, spec.r, cmd.grid));
        return res;
    }
    const ScalarField2D field = cmd.clip && cmd.tiles == 1 ? make_closed_field2d(spec) : make_field2d(spec);
    const Grid2D grid = sample_grid2d(field, res.domain, cmd.workers);
    if (has_sign_change(grid.samples)) res.lines = marching_squares(grid, &field, cmd.workers);
    return res;
}

inline TriangleMesh render_surface(const Command& cmd) {
    const ShapeSpec3D& spec = cmd.spec3d;
    const ScalarField3D field = cmd.clip && cmd.tiles == 1 ? make_closed_field3d(spec) : make_field3d(spec);
    const Grid3D grid = sample_grid3d(field, surface_domain(cmd), cmd.workers);
    if (!has_sign_change(grid.samples)) return {};
    return marching_cubes(grid, cmd.workers);
}

namespace detail {

inline std::ofstream open_sink(const std::string& path) {
    std::ofstream sink(path, std::ios::binary | std::ios::trunc);
    if (!sink) throw IoError("cannot open '" + path + "' for writing");
    return sink;
}

inline void finish_sink(std::ofstream& sink, const std::string& path) {
    sink.flush();
    if (!sink) throw IoError("write to '" + path + "' failed");
}

/// Renders one shape and writes it to `path`; returns false on an empty level set.
inline bool emit(const Command& cmd, const std::string& path, std::ostream& out, std::ostream& err) {
    if (cmd.is3d) {
        for (const auto& w : warnings(cmd.spec3d)) err << "warning: " << w << '\n';
        const TriangleMesh mesh = render_surface(cmd);
        std::ofstream sink = open_sink(path);
        const std::string label = describe(cmd.spec3d);
        if (cmd.format == Format::obj)
            write_obj(mesh, sink, label);
        else
            write_stl(mesh, sink, label);
        finish_sink(sink, path);
        if (mesh.empty()) {
            out << "empty level set: " << label << " (wrote " << path << ")\n";
            return false;
        }
        out << "wrote " << path << " vertices=" << mesh.vertices.size() << " triangles=" << mesh.triangles.size() << '\n';
        return true;
    }
    const CurveResult res = render_curve(cmd);
    std::ofstream sink = open_sink(path);
    if (cmd.format == Format::svg)
        write_svg(res.lines, res.domain, sink);
    else
        write_csv(res.lines, sink);
    finish_sink(sink, path);
    if (res.lines.empty()) {
        out << "empty level set: " << describe(cmd.spec2d) << " (wrote " << path << ")\n";
        return false;
    }
    out << "wrote " << path << " polylines=" << res.lines.size() << '\n';
    return true;
}

inline std::string sweep_path(const std::string& out, int step, int steps) {
    const std::filesystem::path p(out);
    int width = 1;
    for (int n = std::max(steps - 1, 0); n >= 10; n /= 10) ++width;
    width = std::max(width, 2);
    std::string suffix = std::to_string(step);
    suffix.insert(0, static_cast<std::size_t>(std::max(0, width - static_cast<int>(suffix.size()))), '0');
    std::filesystem::path named = p.parent_path() / (p.stem().string() + "_" + suffix + p.extension().string());
    return named.string();
}

struct FamilyInfo {
    std::string_view name;
    std::string_view equation;
    std::string_view parameters;
};

inline constexpr FamilyInfo kFamilyInfo[] = {
    {"lame", "|x|^p + |y|^p = r^p", "p in [1, inf] (1: tilted square, 2: circle, inf: square), r > 0"},
    {"fg", "x^2 + y^2 - (s^2/r^2) x^2 y^2 = r^2", "s in [0, 1] (0: circle, 1: square), r > 0"},
    {"periodic", "cos(s pi x / 2r) cos(s pi y / 2r) = cos(s pi / 2)",
     "s in [0, 1] (0: circle, 1: square grid), r > 0; period 4r/s"},
    {"oblique", "cos(s pi x / r) + cos(s pi y / r) = 1 + cos(s pi) - floor(s) h",
     "s in [0, 1] (0: circle, 1: tilted square), h in [0, 2] at s = 1, r > 0; period 2r/s"},
    {"frantz", "(x, y) = r (tanh(s cos t), tanh(s sin t)) / tanh(s), t in [0, 2 pi)",
     "s >= 0 (0: circle, inf: square), r > 0; parametric only"},
    {"phase_grid", "sin(pi x) sin(pi y) = 0", "no parameters"},
    {"lame3d", "|x|^p + |y|^p + |z|^p = r^p", "p in [1, inf] (2: sphere, inf: cube), r > 0"},
    {"sphube", "x^2 + y^2 + z^2 - (s^2/r^2)(x^2 y^2 + y^2 z^2 + z^2 x^2) + (s^4/r^4) x^2 y^2 z^2 = r^2",
     "s in [0, 1] (0: sphere, 1: cube), r > 0"},
    {"periodic3d", "cos(s pi x / 2r) cos(s pi y / 2r) cos(s pi z / 2r) = cos(s pi / 2)",
     "s in [0, 1] (0: sphere, 1: cube), r > 0; period 4r/s"},
    {"oblique3d", "cos(s pi x / r) + cos(s pi y / r) + cos(s pi z / r) = 2 + cos(s pi) - floor(s) h",
     "s in [0, 1] (1: sham octahedron), h in [0, 4] at s = 1 (h = 1, r = pi: sham Schwarz surface), r > 0"},
    {"toroid", "u^2 + z^2 - (s^2/r^2) z^2 u^2 = r^2, u = sqrt(x^2 + y^2) - R",
     "s in [0, 1] (0: round torus, 1: square toroid), R > r > 0"},
    {"toroid_octic", "(q + z^2 + R^2 - r^2 - k (q + R^2))^2 = 4 R^2 q (1 - k)^2, q = x^2 + y^2, k = s^2 z^2 / r^2",
     "s in [0, 1], R > r > 0; same zero set as toroid"},
    {"cone_fg", "x^2 z^2 + y^2 z^2 - s^2 c^2 x^2 y^2 = z^4 / c^2, |x| <= z/c, |y| <= z/c, 0 <= z <= c",
     "s in [0, 1] (0: round cone, 1: square pyramid), c > 0"},
    {"cone_lame", "|x/a|^p + |y/b|^p = (z/c)^p, 0 <= z <= c",
     "p in [1, 2] (1: diamond pyramid, 2: elliptic cone), a, b, c > 0"},
    {"cuboctahedron",
     "X + Y + Z - (XY + YZ + ZX) + cc XYZ = 1, X = x^2/k^2, Y = y^2/k^2, Z = z^2/k^2, |x|, |y|, |z| <= k",
     "k > 0, cc in [1.5, 4] recommended (default 2)"},
};

} // namespace detail

/// Executes `cmd`. Exit codes: 0 success, 1 usage, 2 numeric failure or failed check, 3 I/O failure.
inline int run(const Command& cmd, std::ostream& out, std::ostream& err) {
    try {
        switch (cmd.subcommand) {
        case Subcommand::info: {
            for (const auto& fi : detail::kFamilyInfo) {
                if (cmd.info_family && *cmd.info_family != fi.name) continue;
                out << fi.name << ": " << fi.equation << "\n  parameters: " << fi.parameters << '\n';
            }
            return 0;
        }
        case Subcommand::verify: {
            const auto results = run_suite(cmd.suite, cmd.workers);
            std::size_t failed = 0;
            for (const auto& r : results) {
                out << r.line() << '\n';
                if (!r.passed()) ++failed;
            }
            out << "checks=" << results.size() << " failed=" << failed << '\n';
            return failed == 0 ? 0 : 2;
        }
        case Subcommand::curve:
        case Subcommand::surface:
            detail::emit(cmd, cmd.out, out, err);
            return 0;
        case Subcommand::sweep:
            for (int step = 0; step < cmd.sweep_steps; ++step) {
                const Command one = with_parameter(cmd, sweep_value(cmd, step));
                detail::emit(one, detail::sweep_path(cmd.out, step, cmd.sweep_steps), out, err);
            }
            return 0;
        }
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

/// Parses and runs; `args` excludes the program name.
inline int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Command cmd;
    try {
        cmd = parse_args(args);
    } catch (const HelpRequested& h) {
        out << h.what();
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\nrun 'squircle --help' for usage\n";
        return 1;
    }
    return run(cmd, out, err);
}

} // namespace squircle::cli

#endif
