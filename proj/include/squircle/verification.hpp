#ifndef SQUIRCLE_VERIFICATION_HPP
#define SQUIRCLE_VERIFICATION_HPP

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domains.hpp"
#include "fields2d.hpp"
#include "fields3d.hpp"
#include "mesh_io.hpp"
#include "oracle.hpp"
#include "polygonize3d.hpp"

namespace squircle {

enum class Suite { all, limits, square, equivalence, mesh };

inline std::optional<Suite> parse_suite(std::string_view name) {
    if (name == "all") return Suite::all;
    if (name == "limits") return Suite::limits;
    if (name == "square") return Suite::square;
    if (name == "equivalence") return Suite::equivalence;
    if (name == "mesh") return Suite::mesh;
    return std::nullopt;
}

/// One measured quantity and the bound it is held to.
struct CheckResult {
    enum class Compare { at_most, at_least, equal };

    std::string name;
    double value = 0.0;
    double bound = 0.0;
    Compare compare = Compare::at_most;

    bool passed() const {
        switch (compare) {
        case Compare::at_most: return value <= bound;
        case Compare::at_least: return value >= bound;
        case Compare::equal: return value == bound;
        }
        return false;
    }

    /// name=... value=... bound=... status=PASS
    std::string line() const {
        const char* op = compare == Compare::at_most ? "<=" : compare == Compare::at_least ? ">=" : "==";
        return "name=" + name + " value=" + format_general(value) + " bound=" + op + format_general(bound) +
               " status=" + (passed() ? "PASS" : "FAIL");
    }
};

namespace detail {

inline CheckResult at_most(std::string name, double value, double bound) {
    return {std::move(name), value, bound, CheckResult::Compare::at_most};
}
inline CheckResult at_least(std::string name, double value, double bound) {
    return {std::move(name), value, bound, CheckResult::Compare::at_least};
}

inline double radial_error(const ScalarField2D& field, const std::function<double(double)>& ref) {
    return radial_profile_report(field, 360, 3.0, ref).max_abs_error;
}

inline ShapeSpec2D spec2d(Family2D f, double s, double p = 2.0) {
    ShapeSpec2D sp;
    sp.family = f;
    sp.s = s;
    sp.p = p;
    return sp;
}

} // namespace detail

/// Circle limits and the quadratic convergence of the periodic families.
inline std::vector<CheckResult> limits_suite() {
    using detail::at_most, detail::spec2d;
    std::vector<CheckResult> out;
    auto unit = [](double) { return 1.0; };
    out.push_back(at_most("circle.lame_p2", detail::radial_error(make_field2d(spec2d(Family2D::lame, 0, 2)), unit), 1e-12));
    out.push_back(at_most("circle.fg_s0", detail::radial_error(make_field2d(spec2d(Family2D::fg, 0)), unit), 1e-12));
    out.push_back(at_most("circle.periodic_s1e-3",
                          detail::radial_error(make_field2d(spec2d(Family2D::periodic, 1e-3)), unit), 1e-3));
    out.push_back(at_most("circle.oblique_s1e-3",
                          detail::radial_error(make_field2d(spec2d(Family2D::oblique, 1e-3)), unit), 1e-3));
    double frantz = 0.0;
    for (int n = 0; n < 360; ++n) {
        const Point2 q = frantz_point(2.0 * std::numbers::pi * n / 360, 1e-3, 1.0);
        frantz = std::max(frantz, std::fabs(std::hypot(q.x, q.y) - 1.0));
    }
    out.push_back(at_most("circle.frantz_s1e-3", frantz, 1e-3));

    const auto ys = default_y_grid(50);
    const double omegas[] = {0.2, 0.1, 0.05};
    for (auto [family, label] : {std::pair{PeriodicFamily::periodic, "periodic"}, std::pair{PeriodicFamily::oblique, "oblique"}}) {
        const auto rep = limit_convergence_check(family, ys, omegas);
        double lo = kInfinity, hi = -kInfinity;
        for (double q : rep.ratios) {
            lo = std::min(lo, q);
            hi = std::max(hi, q);
        }
        out.push_back(detail::at_least(std::string("convergence.") + label + ".ratio_min", lo, 3.5));
        out.push_back(at_most(std::string("convergence.") + label + ".ratio_max", hi, 4.5));
    }
    return out;
}

/// Square limits against the exact square metrics, and the straight-line zero sets at squareness 1.
inline std::vector<CheckResult> square_suite() {
    using detail::at_most, detail::spec2d;
    std::vector<CheckResult> out;
    auto axis = [](double t) { return axis_square_radius(1.0, t); };
    auto tilted = [](double t) { return tilted_square_radius(1.0, t); };
    out.push_back(at_most("square.lame_pinf", detail::radial_error(make_field2d(spec2d(Family2D::lame, 0, kInfinity)), axis), 1e-9));
    out.push_back(at_most("square.lame_p1", detail::radial_error(make_field2d(spec2d(Family2D::lame, 0, 1.0)), tilted), 1e-9));
    out.push_back(at_most("square.fg_s1", detail::radial_error(make_closed_field2d(spec2d(Family2D::fg, 1)), axis), 1e-9));
    out.push_back(at_most("square.periodic_s1",
                          detail::radial_error(make_closed_field2d(spec2d(Family2D::periodic, 1)), axis), 1e-9));
    out.push_back(at_most("square.oblique_s1",
                          detail::radial_error(make_closed_field2d(spec2d(Family2D::oblique, 1)), tilted), 1e-9));
    out.push_back(at_most("lines.periodic_r1", square_case_check(PeriodicFamily::periodic, 1.0, 1000), 1e-12));
    out.push_back(at_most("lines.periodic_r3", square_case_check(PeriodicFamily::periodic, 3.0, 1000), 1e-12));
    out.push_back(at_most("lines.oblique_r1", square_case_check(PeriodicFamily::oblique, 1.0, 1000), 1e-12));
    return out;
}

/// Cross-form equivalences, 2D restrictions and periodicity.
inline std::vector<CheckResult> equivalence_suite() {
    using detail::at_most, detail::at_least;
    std::vector<CheckResult> out;

    for (double s : {0.0, 0.5, 1.0}) {
        ShapeSpec3D t;
        t.family = Family3D::toroid;
        t.s = s;
        t.ring_radius = 2.0;
        t.r = 0.5;
        ShapeSpec3D o = t;
        o.family = Family3D::toroid_octic;
        // seeds on the tube's centre circle
        std::vector<Point3> seeds;
        for (int k = 0; k < 8; ++k) {
            const double phi = 2.0 * std::numbers::pi * k / 8;
            seeds.push_back({2.0 * std::cos(phi), 2.0 * std::sin(phi), 0.0});
        }
        const double residual = zero_set_residual(make_closed_field3d(t), make_field3d(o), seeds, 1000, 2.0 * (t.ring_radius + t.r));
        const double r4 = std::pow(t.ring_radius, 4);
        out.push_back(at_most("toroid_octic.s" + format_general(s), residual / r4, 1e-9));
    }

    {
        double worst = 0.0;
        std::mt19937_64 rng(kProbeSeed);
        for (int n = 0; n < 10000; ++n) {
            const double x = 10.0 * (2.0 * detail::unit_uniform(rng) - 1.0);
            const double y = 10.0 * (2.0 * detail::unit_uniform(rng) - 1.0);
            const double z = 10.0 * (2.0 * detail::unit_uniform(rng) - 1.0);
            const double a = eval_oblique3d(x, y, z, 1.0, std::numbers::pi, 1.0);
            worst = std::max(worst, std::fabs(a + (std::cos(x) + std::cos(y) + std::cos(z))));
        }
        out.push_back(at_most("schwarz.oblique3d_s1_rpi_h1", worst, 1e-12));
    }

    {
        double sphube = 0.0, periodic = 0.0;
        std::mt19937_64 rng(kProbeSeed);
        for (int n = 0; n < 10000; ++n) {
            const double x = 3.0 * (2.0 * detail::unit_uniform(rng) - 1.0);
            const double y = 3.0 * (2.0 * detail::unit_uniform(rng) - 1.0);
            const double s = detail::unit_uniform(rng);
            const double r = 0.5 + 2.0 * detail::unit_uniform(rng);
            sphube = std::max(sphube, std::fabs(eval_sphube(x, y, 0.0, s, r) - eval_fg(x, y, s, r)));
            periodic = std::max(periodic, std::fabs(eval_periodic3d(x, y, 0.0, s, r) - eval_periodic(x, y, s, r)));
        }
        out.push_back(at_most("restriction.sphube_z0", sphube, 0.0));
        out.push_back(at_most("restriction.periodic3d_z0", periodic, 0.0));
    }

    {
        ShapeSpec2D p2{Family2D::periodic, 2.0, 0.5, 1.0, 0.0};
        ShapeSpec2D o2{Family2D::oblique, 2.0, 0.5, 1.0, 0.0};
        ShapeSpec2D f2{Family2D::fg, 2.0, 0.5, 1.0, 0.0};
        ShapeSpec2D l2{Family2D::lame, 3.0, 0.0, 1.0, 0.0};
        out.push_back(at_most("periodicity.periodic", periodicity_check(make_field2d(p2), 8.0, 1000), 1e-9));
        out.push_back(at_most("periodicity.oblique", periodicity_check(make_field2d(o2), 4.0, 1000), 1e-9));
        out.push_back(at_least("periodicity.fg_control", periodicity_check(make_field2d(f2), 4.0, 1000), 0.1));
        out.push_back(at_least("periodicity.lame_control", periodicity_check(make_field2d(l2), 4.0, 1000), 0.1));

        ShapeSpec3D p3;
        p3.family = Family3D::periodic3d;
        p3.s = 0.5;
        ShapeSpec3D o3 = p3;
        o3.family = Family3D::oblique3d;
        ShapeSpec3D f3 = p3;
        f3.family = Family3D::sphube;
        ShapeSpec3D l3 = p3;
        l3.family = Family3D::lame3d;
        l3.p = 3.0;
        out.push_back(at_most("periodicity.periodic3d", periodicity_check(make_field3d(p3), 8.0, 1000), 1e-9));
        out.push_back(at_most("periodicity.oblique3d", periodicity_check(make_field3d(o3), 4.0, 1000), 1e-9));
        out.push_back(at_least("periodicity.sphube_control", periodicity_check(make_field3d(f3), 4.0, 1000), 0.1));
        out.push_back(at_least("periodicity.lame3d_control", periodicity_check(make_field3d(l3), 4.0, 1000), 0.1));
    }
    return out;
}

/// A surface, its meshing resolution and the Euler characteristic it should have.
struct MeshCase {
    std::string name;
    ShapeSpec3D spec;
    int euler = 2;
};

inline std::vector<MeshCase> mesh_cases() {
    std::vector<MeshCase> cases;
    auto add = [&](std::string name, ShapeSpec3D sp, int euler = 2) { cases.push_back({std::move(name), sp, euler}); };
    for (double p : {1.0, 2.0, 4.0, kInfinity}) {
        ShapeSpec3D sp;
        sp.family = Family3D::lame3d;
        sp.p = p;
        add("lame3d_p" + format_general(p), sp);
    }
    for (auto family : {Family3D::sphube, Family3D::periodic3d, Family3D::oblique3d}) {
        for (double s : family == Family3D::sphube ? std::vector<double>{0.0, 1.0} : std::vector<double>{0.5, 1.0}) {
            ShapeSpec3D sp;
            sp.family = family;
            sp.s = s;
            add(std::string(to_string(family)) + "_s" + format_general(s), sp);
        }
    }
    {
        ShapeSpec3D sp;
        sp.family = Family3D::cone_fg;
        sp.s = 0.8;
        sp.c = 3.0;
        add("cone_fg", sp);
    }
    {
        ShapeSpec3D sp;
        sp.family = Family3D::cone_lame;
        sp.p = 1.5;
        sp.c = 2.0;
        add("cone_lame", sp);
    }
    {
        ShapeSpec3D sp;
        sp.family = Family3D::cuboctahedron;
        add("cuboctahedron", sp);
    }
    for (double s : {0.0, 1.0}) {
        ShapeSpec3D sp;
        sp.family = Family3D::toroid;
        sp.s = s;
        sp.ring_radius = 2.0;
        sp.r = 0.5;
        add("toroid_s" + format_general(s), sp, 0);
    }
    return cases;
}

/// Meshes a closed surface on its default domain at `cells` per axis.
inline TriangleMesh mesh_closed_surface(const ShapeSpec3D& spec, int cells, unsigned workers = 0) {
    const Domain3D domain = default_domain3d(spec, cells);
    return marching_cubes(sample_grid3d(make_closed_field3d(spec), domain, workers), workers);
}

/// Watertightness and Euler characteristic at 96^3, plus the sphere area.
inline std::vector<CheckResult> mesh_suite(int cells = 96, unsigned workers = 0) {
    std::vector<CheckResult> out;
    for (const auto& mc : mesh_cases()) {
        const MeshStats st = mesh_stats(mesh_closed_surface(mc.spec, cells, workers));
        const double open_edges = static_cast<double>(st.watertight ? 0 : std::max<std::size_t>(st.boundary_edge_count, 1));
        out.push_back(detail::at_most("mesh." + mc.name + ".open_edges", open_edges, 0.0));
        out.push_back({"mesh." + mc.name + ".euler", static_cast<double>(st.euler_characteristic),
                       static_cast<double>(mc.euler), CheckResult::Compare::equal});
    }
    ShapeSpec3D sphere;
    sphere.family = Family3D::lame3d;
    const MeshStats st = mesh_stats(mesh_closed_surface(sphere, cells, workers));
    out.push_back(detail::at_most("mesh.sphere.area_rel_error", std::fabs(st.total_area / (4.0 * std::numbers::pi) - 1.0), 0.01));
    return out;
}

inline std::vector<CheckResult> run_suite(Suite suite, unsigned workers = 0) {
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> more) { out.insert(out.end(), more.begin(), more.end()); };
    if (suite == Suite::all || suite == Suite::limits) append(limits_suite());
    if (suite == Suite::all || suite == Suite::square) append(square_suite());
    if (suite == Suite::all || suite == Suite::equivalence) append(equivalence_suite());
    if (suite == Suite::all || suite == Suite::mesh) append(mesh_suite(96, workers));
    return out;
}

} // namespace squircle

#endif
