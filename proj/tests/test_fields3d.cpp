#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include <squircle/fields3d.hpp>
#include <squircle/oracle.hpp>
#include <squircle/polygonize3d.hpp>

using namespace squircle;

namespace squircle {
void PrintTo(const ShapeSpec3D& spec, std::ostream* os) { *os << describe(spec); }
} // namespace squircle

namespace {

constexpr double kPi = std::numbers::pi;

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * squircle::detail::unit_uniform(rng); }

ShapeSpec3D spec(Family3D f) {
    ShapeSpec3D sp;
    sp.family = f;
    return sp;
}

std::string message_of(const ShapeSpec3D& sp) {
    try {
        validate(sp);
    } catch (const std::invalid_argument& e) {
        return e.what();
    }
    return "";
}

/// The 48 signed permutations of three coordinates.
std::array<std::array<double, 3>, 48> signed_permutations(double x, double y, double z) {
    std::array<std::array<double, 3>, 48> out{};
    std::array<int, 3> idx{0, 1, 2};
    const double v[3] = {x, y, z};
    int n = 0;
    do {
        for (int signs = 0; signs < 8; ++signs) {
            for (int a = 0; a < 3; ++a) out[n][a] = (signs >> a & 1 ? -1.0 : 1.0) * v[idx[a]];
            ++n;
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

} // namespace

TEST(EvalLame3D, Examples) {
    EXPECT_EQ(eval_lame3d(0, 0, 1, 2, 1), 0.0);
    EXPECT_EQ(eval_lame3d(1, 1, 1, kInfinity, 1), 0.0);
    EXPECT_NEAR(eval_lame3d(1.0 / 3, 1.0 / 3, 1.0 / 3, 1, 1), 0.0, 1e-15);
}

TEST(EvalSphube, Examples) {
    EXPECT_EQ(eval_sphube(1, 1, 1, 1, 1), 0.0);
    EXPECT_EQ(eval_sphube(1, 0, 0, 0.4, 1), 0.0);
    EXPECT_EQ(eval_sphube(0, 0, 0, 0.9, 1), -1.0);
}

TEST(EvalSphube, MatchesTheExpandedPolynomial) {
    std::mt19937_64 rng(5);
    for (int n = 0; n < 1000; ++n) {
        const double x = uniform(rng, -2, 2), y = uniform(rng, -2, 2), z = uniform(rng, -2, 2);
        const double s = uniform(rng, 0, 1), r = uniform(rng, 0.5, 2);
        const double x2 = x * x, y2 = y * y, z2 = z * z, q = s * s / (r * r);
        const double expanded = x2 + y2 + z2 - q * (x2 * y2 + y2 * z2 + x2 * z2) + q * q * x2 * y2 * z2 - r * r;
        EXPECT_NEAR(eval_sphube(x, y, z, s, r), expanded, 1e-12 * (1 + std::fabs(expanded)));
    }
}

TEST(EvalPeriodic3D, Examples) {
    EXPECT_EQ(eval_periodic3d(1, 1, 1, 1, 1), 0.0);
    EXPECT_NEAR(eval_periodic3d(1, 0, 0, 0.5, 1), 0.0, 1e-16);
    EXPECT_EQ(eval_periodic3d(0, 0, 0, 1, 1), -1.0);
}

TEST(EvalOblique3D, Examples) {
    EXPECT_NEAR(eval_oblique3d(kPi / 2, kPi / 2, kPi / 2, 1, kPi, 1), 0.0, 1e-15);
    EXPECT_NEAR(eval_oblique3d(1, 0, 0, 0.3, 1, 0), 0.0, 1e-15);
    EXPECT_EQ(eval_oblique3d(0, 0, 0, 1, 1, 4), -6.0);
}

TEST(EvalToroid, Examples) {
    EXPECT_EQ(eval_toroid(2.5, 0, 0, 0, 2, 0.5), 0.0);
    EXPECT_EQ(eval_toroid(2.5, 0, 0.5, 1, 2, 0.5), 0.0);
    for (double s : {0.0, 0.3, 1.0}) EXPECT_EQ(eval_toroid(2, 0, 0, s, 2, 0.5), -0.25);
}

TEST(EvalToroidOctic, Examples) {
    EXPECT_EQ(eval_toroid_octic(2.5, 0, 0, 0, 2, 0.5), 0.0);
    EXPECT_EQ(eval_toroid_octic(0, 0, 0, 0, 2, 0.5), 14.0625);
}

TEST(EvalConeFg, Examples) {
    EXPECT_EQ(eval_cone_fg(1, 0, 3, 0.8, 3), 0.0);
    EXPECT_EQ(eval_cone_fg(0, 0, 0, 0.5, 3), 0.0);
    EXPECT_EQ(eval_cone_fg(0, 0, 1.5, 1, 3), -0.5625);
}

TEST(EvalConeFg, PrunesSheetsOutsideTheSlabs) {
    // on the quartic's extraneous sheet far from the axis the slab term dominates
    EXPECT_GT(eval_cone_fg(2.0, 2.0, 1.0, 1.0, 3.0), 0.0);
    EXPECT_GT(eval_cone_fg(0.0, 0.0, -0.5, 0.5, 3.0), 0.0);
    EXPECT_GT(eval_cone_fg(0.0, 0.0, 3.5, 0.5, 3.0), 0.0);
}

TEST(EvalConeLame, Examples) {
    EXPECT_NEAR(eval_cone_lame(1, 0, 2, 1.5, 1, 1, 2), 0.0, 1e-15);
    EXPECT_EQ(eval_cone_lame(0, 0, 1, 2, 1, 1, 2), -0.5);
    EXPECT_EQ(eval_cone_lame(0, 1, 2, 1, 1, 1, 2), 0.0);
}

TEST(EvalShamCuboctahedron, Examples) {
    EXPECT_EQ(eval_sham_cuboctahedron(1, 1, 0, 1, 2), 0.0);
    EXPECT_EQ(eval_sham_cuboctahedron(1, 0, 0, 1, 2), 0.0);
    EXPECT_EQ(eval_sham_cuboctahedron(0, 0, 0, 1, 2), -1.0);
}

TEST(EvalShamCuboctahedron, ScaleIsASimilarity) {
    std::mt19937_64 rng(9);
    for (int n = 0; n < 200; ++n) {
        const double x = uniform(rng, -1, 1), y = uniform(rng, -1, 1), z = uniform(rng, -1, 1);
        const double unit = eval_sham_cuboctahedron(x, y, z, 1, 2.5);
        const double scaled = eval_sham_cuboctahedron(3 * x, 3 * y, 3 * z, 3, 2.5);
        EXPECT_EQ(unit < 0, scaled < 0);
    }
}

class OctahedralFamilies : public ::testing::TestWithParam<ShapeSpec3D> {};

TEST_P(OctahedralFamilies, InvariantUnderSignedPermutations) {
    const auto f = make_field3d(GetParam());
    std::mt19937_64 rng(13);
    double worst = 0.0;
    for (int n = 0; n < 10000; ++n) {
        const double x = uniform(rng, -2, 2), y = uniform(rng, -2, 2), z = uniform(rng, -2, 2);
        const double v = f(x, y, z);
        for (const auto& p : signed_permutations(x, y, z)) worst = std::max(worst, std::fabs(f(p[0], p[1], p[2]) - v));
    }
    EXPECT_LE(worst, 1e-12);
}

namespace {
ShapeSpec3D with(Family3D f, double s, double p = 2.0, double r = 1.0) {
    ShapeSpec3D sp = spec(f);
    sp.s = s;
    sp.p = p;
    sp.r = r;
    return sp;
}
} // namespace

INSTANTIATE_TEST_SUITE_P(AllParameters, OctahedralFamilies,
                         ::testing::Values(with(Family3D::lame3d, 0, 1.0), with(Family3D::lame3d, 0, 3.3, 1.5),
                                           with(Family3D::lame3d, 0, kInfinity), with(Family3D::sphube, 0.6),
                                           with(Family3D::sphube, 1.0, 2, 2.0), with(Family3D::periodic3d, 0.4),
                                           with(Family3D::periodic3d, 1.0), with(Family3D::oblique3d, 0.7),
                                           with(Family3D::oblique3d, 1.0, 2, 3.0), spec(Family3D::cuboctahedron)),
                         [](const ::testing::TestParamInfo<ShapeSpec3D>& info) {
                             std::string name;
                             for (char c : describe(info.param)) name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
                             return name;
                         });

TEST(Symmetry3D, ToroidsAreAxiallySymmetric) {
    for (auto family : {Family3D::toroid, Family3D::toroid_octic}) {
        ShapeSpec3D sp = with(family, 0.7, 2, 0.5);
        const auto f = make_field3d(sp);
        std::mt19937_64 rng(17);
        double worst = 0.0;
        for (int n = 0; n < 10000; ++n) {
            const double x = uniform(rng, -3, 3), y = uniform(rng, -3, 3), z = uniform(rng, -1, 1);
            const double v = f(x, y, z);
            const double phi = uniform(rng, 0, 2 * kPi);
            const double xr = x * std::cos(phi) - y * std::sin(phi), yr = x * std::sin(phi) + y * std::cos(phi);
            worst = std::max({worst, std::fabs(f(x, y, -z) - v), std::fabs(f(y, x, z) - v), std::fabs(f(-x, y, z) - v),
                              std::fabs(f(x, -y, z) - v)});
            EXPECT_NEAR(f(xr, yr, z), v, 1e-9 * (1 + std::fabs(v)));
        }
        EXPECT_LE(worst, 1e-12);
    }
}

TEST(Symmetry3D, ConesAreSymmetricInTheBasePlane) {
    ShapeSpec3D fg = with(Family3D::cone_fg, 0.8);
    fg.c = 3;
    ShapeSpec3D lame = with(Family3D::cone_lame, 0, 1.5);
    lame.c = 2;
    for (const auto& sp : {fg, lame}) {
        const auto f = make_field3d(sp);
        std::mt19937_64 rng(19);
        double worst = 0.0;
        for (int n = 0; n < 10000; ++n) {
            const double x = uniform(rng, -2, 2), y = uniform(rng, -2, 2), z = uniform(rng, -0.5, 3.5);
            const double v = f(x, y, z);
            worst = std::max({worst, std::fabs(f(-x, y, z) - v), std::fabs(f(x, -y, z) - v), std::fabs(f(y, x, z) - v)});
        }
        EXPECT_LE(worst, 1e-12);
    }
}

TEST(Periodicity3D, PeriodicAndObliqueRepeatAlongEachAxis) {
    EXPECT_LE(periodicity_check(make_field3d(with(Family3D::periodic3d, 0.5)), 8.0, 2000), 1e-9);
    EXPECT_LE(periodicity_check(make_field3d(with(Family3D::oblique3d, 0.5)), 4.0, 2000), 1e-9);
    EXPECT_LE(periodicity_check(make_field3d(with(Family3D::periodic3d, 0.8, 2, 2.0)), 10.0, 2000), 1e-9);
    EXPECT_GT(periodicity_check(make_field3d(with(Family3D::sphube, 0.5)), 4.0, 200), 0.1);
}

TEST(ShamSchwarz, ObliqueReducesToCosineSum) {
    std::mt19937_64 rng(23);
    double worst = 0.0;
    for (int n = 0; n < 10000; ++n) {
        const double x = uniform(rng, -10, 10), y = uniform(rng, -10, 10), z = uniform(rng, -10, 10);
        worst = std::max(worst, std::fabs(eval_oblique3d(x, y, z, 1, kPi, 1) + std::cos(x) + std::cos(y) + std::cos(z)));
    }
    EXPECT_LE(worst, 1e-12);
}

TEST(Restriction, ThreeDimensionalFieldsMatchPlanarOnesAtZEqualsZero) {
    std::mt19937_64 rng(29);
    for (int n = 0; n < 10000; ++n) {
        const double x = uniform(rng, -3, 3), y = uniform(rng, -3, 3);
        const double s = uniform(rng, 0, 1), r = uniform(rng, 0.3, 3);
        ASSERT_EQ(eval_sphube(x, y, 0.0, s, r), eval_fg(x, y, s, r));
        ASSERT_EQ(eval_periodic3d(x, y, 0.0, s, r), eval_periodic(x, y, s, r));
    }
}

TEST(OvershootRecession, FullOvershootLeavesNoCrossing) {
    const auto f = make_field3d([] {
        ShapeSpec3D sp = with(Family3D::oblique3d, 1.0);
        sp.h = 4.0;
        return sp;
    }());
    const Domain3D d{-1.2, 1.2, -1.2, 1.2, -1.2, 1.2, 64, 64, 64};
    const Grid3D g = sample_grid3d(f, d);
    double top = -kInfinity;
    for (std::size_t n = 0; n < g.samples.size(); ++n) top = std::max(top, g.samples[n]);
    EXPECT_LE(top, 0.0);
    EXPECT_FALSE(has_sign_change(g.samples));
    EXPECT_EQ(f(0, 0, 0), -6.0);
    EXPECT_EQ(f(1, 1, 1), 0.0);
    // just short of full overshoot the zero set is small pockets at the corners
    ShapeSpec3D near = with(Family3D::oblique3d, 1.0);
    near.h = 3.9;
    EXPECT_TRUE(has_sign_change(sample_grid3d(make_field3d(near), d).samples));
}

TEST(Validate3D, NamesTheParameter) {
    ShapeSpec3D t = with(Family3D::toroid, 0.5, 2, 0.5);
    t.ring_radius = 0.4;
    EXPECT_EQ(message_of(t).rfind("ring radius", 0), 0u);
    t = with(Family3D::toroid, 0.5, 2, -1);
    EXPECT_EQ(message_of(t).rfind("tube radius", 0), 0u);
    ShapeSpec3D o = with(Family3D::oblique3d, 1.0);
    o.h = 4.5;
    EXPECT_EQ(message_of(o).rfind("overshoot", 0), 0u);
    ShapeSpec3D c = with(Family3D::cone_lame, 0, 2.5);
    EXPECT_EQ(message_of(c).rfind("cone exponent", 0), 0u);
    c = with(Family3D::cone_fg, 0.5);
    c.c = 0;
    EXPECT_EQ(message_of(c).rfind("cone height", 0), 0u);
    ShapeSpec3D k = spec(Family3D::cuboctahedron);
    k.k = -2;
    EXPECT_EQ(message_of(k).rfind("scale k", 0), 0u);
    EXPECT_EQ(message_of(with(Family3D::sphube, 1.2)).rfind("squareness", 0), 0u);
}

TEST(Validate3D, CrossTermRangeIsOnlyAWarning) {
    ShapeSpec3D k = spec(Family3D::cuboctahedron);
    k.cc = 5.0;
    EXPECT_NO_THROW(validate(k));
    EXPECT_EQ(warnings(k).size(), 1u);
    k.cc = 2.0;
    EXPECT_TRUE(warnings(k).empty());
}

TEST(CsgIntersect, TakesThePointwiseMaximum) {
    const ScalarField3D sphere = [](double x, double y, double z) { return x * x + y * y + z * z - 1; };
    const ScalarField3D everything = [](double, double, double) { return -1e30; };
    const auto same = csg_intersect(sphere, everything);
    EXPECT_EQ(same(0.3, 0.4, 0.5), sphere(0.3, 0.4, 0.5));
    EXPECT_EQ(same(2, 0, 0), sphere(2, 0, 0));
    const auto hemi = csg_intersect(sphere, [](double, double, double z) { return z; });
    EXPECT_GT(hemi(0, 0, 0.5), 0.0);
    EXPECT_LT(hemi(0, 0, -0.5), 0.0);
}

TEST(MakeField3D, ZeroSquarenessGivesTheSphere) {
    for (auto family : {Family3D::periodic3d, Family3D::oblique3d}) {
        const auto f = make_field3d(with(family, 0.0, 2, 2.0));
        EXPECT_EQ(f(1, 1, 1), -1.0);
        EXPECT_EQ(f(2, 0, 0), 0.0);
    }
}

TEST(ParseFamily3D, RoundTrips) {
    for (const auto& [family, name] : kFamily3DNames) {
        ASSERT_TRUE(parse_family3d(name).has_value());
        EXPECT_EQ(*parse_family3d(name), family);
        EXPECT_EQ(to_string(family), name);
    }
    EXPECT_FALSE(parse_family3d("fg").has_value());
}
