#include "fermat_torus/geodesic.hpp"
#include "fermat_torus/torus.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace fermat;

namespace {

constexpr double kPi = kTwoPi / 2.0;

// Central-difference Christoffels straight from the metric definition:
// Gamma^u_uv = g^uu dE/dv / 2, Gamma^v_uu = -g^vv dE/dv / 2.
ChristoffelSymbols christoffels_numeric(const Torus& t, double v, double h = 1e-6) {
    auto E = [&](double vv) { return first_fundamental_form(t, vv).E; };
    double dE = (E(v + h) - E(v - h)) / (2.0 * h);
    FirstFundamentalForm f = first_fundamental_form(t, v);
    return {0.5 * dE / f.E, -0.5 * dE / f.G};
}

}  // namespace

TEST_CASE("torus invariants") {
    CHECK_THROWS_AS(Torus(1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Torus(1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(Torus(2.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Torus(2.0, -1.0), std::invalid_argument);
}

TEST_CASE("embed hits the cardinal points") {
    Torus t(2.0, 1.0);
    Vec3 p = embed(t, {0.0, 0.0});
    CHECK(p.x == doctest::Approx(3.0));
    CHECK(p.y == doctest::Approx(0.0));
    CHECK(p.z == doctest::Approx(0.0));

    p = embed(t, {kPi / 2.0, 0.0});
    CHECK(p.x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p.y == doctest::Approx(3.0));

    p = embed(t, {0.0, kPi});
    CHECK(p.x == doctest::Approx(1.0));
    CHECK(p.z == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("embedded points satisfy the implicit surface equation") {
    Torus t(2.0, 1.0);
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    for (int i = 0; i < 10000; ++i) {
        Vec3 p = embed(t, {ang(rng), ang(rng)});
        double c = std::sqrt(p.x * p.x + p.y * p.y) - t.major();
        CHECK(std::abs(c * c + p.z * p.z - t.minor() * t.minor()) < 1e-12);
    }
}

TEST_CASE("first fundamental form by substitution") {
    Torus t(2.0, 1.0);
    auto f0 = first_fundamental_form(t, 0.0);
    CHECK(f0.E == doctest::Approx(9.0));
    CHECK(f0.F == 0.0);
    CHECK(f0.G == doctest::Approx(1.0));
    auto fpi = first_fundamental_form(t, kPi);
    CHECK(fpi.E == doctest::Approx(1.0));
    auto fh = first_fundamental_form(t, kPi / 2.0);
    CHECK(fh.E == doctest::Approx(4.0));
    CHECK(fh.G == doctest::Approx(1.0));
}

TEST_CASE("christoffels closed form vs numeric metric derivative") {
    Torus t(2.0, 1.0);
    auto g0 = christoffels(t, 0.0);
    CHECK(g0.u_uv == doctest::Approx(0.0));
    CHECK(g0.v_uu == doctest::Approx(0.0));
    auto gpi = christoffels(t, kPi);
    CHECK(gpi.u_uv == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(gpi.v_uu == doctest::Approx(0.0).epsilon(1e-12));

    auto gh = christoffels(t, kPi / 2.0);
    CHECK(gh.u_uv == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(gh.v_uu == doctest::Approx(2.0).epsilon(1e-12));
    auto gh_num = christoffels_numeric(t, kPi / 2.0);
    CHECK(gh.u_uv == doctest::Approx(gh_num.u_uv).epsilon(1e-8));
    CHECK(gh.v_uu == doctest::Approx(gh_num.v_uu).epsilon(1e-8));

    for (int i = 0; i < 1000; ++i) {
        double v = kTwoPi * i / 1000.0;
        auto closed = christoffels(t, v);
        auto numeric = christoffels_numeric(t, v);
        CHECK(std::abs(closed.u_uv - numeric.u_uv) < 1e-8);
        CHECK(std::abs(closed.v_uu - numeric.v_uu) < 1e-8);
    }
}

TEST_CASE("geodesic_rhs on the distinguished families") {
    Torus t(2.0, 1.0);
    auto eq = geodesic_rhs(t, {0.3, 0.0, 1.0, 0.0});
    CHECK(eq.du == 1.0);
    CHECK(eq.ddu == 0.0);
    CHECK(eq.ddv == doctest::Approx(0.0));

    auto mer = geodesic_rhs(t, {0.0, 1.2, 0.0, 1.0});
    CHECK(mer.dv == 1.0);
    CHECK(mer.ddu == doctest::Approx(0.0));
    CHECK(mer.ddv == doctest::Approx(0.0));

    auto gen = geodesic_rhs(t, {0.0, kPi / 2.0, 1.0, 1.0});
    CHECK(gen.ddu == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gen.ddv == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("conserved quantities by substitution") {
    Torus t(2.0, 1.0);
    auto eq = conserved_quantities(t, {0.0, 0.0, 1.0, 0.0});
    CHECK(eq.k == doctest::Approx(9.0));
    CHECK(eq.energy == doctest::Approx(9.0));
    auto mer = conserved_quantities(t, {0.0, 0.0, 0.0, 1.0});
    CHECK(mer.k == doctest::Approx(0.0));
    CHECK(mer.energy == doctest::Approx(1.0));
}

TEST_CASE("equator and meridian close after one turn") {
    Torus t(2.0, 1.0);
    auto eq = integrate_geodesic(t, {0.0, 0.0, 1.0, 0.0}, kTwoPi, 1e-3);
    const auto& last = eq.samples.back().state;
    CHECK(wrap_angle(last.u) == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(last.v == doctest::Approx(0.0).epsilon(1e-10));

    auto mer = integrate_geodesic(t, {0.5, 0.0, 0.0, 1.0}, kTwoPi, 1e-3);
    const auto& mlast = mer.samples.back().state;
    CHECK(wrap_angle(mlast.v) == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(mlast.u == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("distinguished families stay put per unit time") {
    Torus t(2.0, 1.0);
    auto eq = integrate_geodesic(t, {0.0, 0.0, 1.3, 0.0}, 1.0, 1e-3);
    for (const auto& s : eq.samples) {
        CHECK(std::abs(s.state.v) < 1e-10);
        CHECK(std::abs(s.state.dv) < 1e-10);
    }
    auto mer = integrate_geodesic(t, {1.0, 0.2, 0.0, 0.9}, 1.0, 1e-3);
    for (const auto& s : mer.samples) {
        CHECK(std::abs(s.state.u - 1.0) < 1e-10);
        CHECK(std::abs(s.state.du) < 1e-10);
    }
}

TEST_CASE("conservation along a generic geodesic") {
    Torus t(2.0, 1.0);
    auto traj = integrate_geodesic(t, {0.0, 0.7, 0.9, 0.3}, 100.0, 1e-3);
    CHECK(traj.k_drift < 1e-8);
    CHECK(traj.energy_drift < 1e-8);
    CHECK(traj.samples.front().t == 0.0);
    CHECK(traj.samples.back().t == doctest::Approx(100.0));
    for (std::size_t i = 1; i < traj.samples.size(); ++i) {
        CHECK(traj.samples[i].t > traj.samples[i - 1].t);
    }
}

TEST_CASE("drift shrinks at 4th order in the truncation regime") {
    Torus t(2.0, 1.0);
    GeodesicState s0{0.0, 0.7, 0.9, 0.3};
    auto coarse = integrate_geodesic(t, s0, 100.0, 0.04);
    auto fine = integrate_geodesic(t, s0, 100.0, 0.02);
    CHECK(coarse.k_drift / fine.k_drift > 12.0);
    CHECK(coarse.energy_drift / fine.energy_drift > 12.0);
}

TEST_CASE("conserved quantities hold for random states") {
    Torus t(2.0, 1.0);
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    std::uniform_real_distribution<double> vel(0.5, 1.5);
    for (int i = 0; i < 5; ++i) {
        GeodesicState s0{ang(rng), ang(rng), vel(rng), vel(rng)};
        auto traj = integrate_geodesic(t, s0, 20.0, 1e-3);
        CHECK(traj.k_drift < 1e-8);
        CHECK(traj.energy_drift < 1e-8);
    }
}

TEST_CASE("integration argument checks") {
    Torus t(2.0, 1.0);
    GeodesicState s0{0.0, 0.0, 1.0, 0.0};
    CHECK_THROWS_AS(integrate_geodesic(t, s0, -1.0, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(integrate_geodesic(t, s0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(integrate_geodesic(t, s0, 1.0, 2.0), std::invalid_argument);
    GeodesicState bad{0.0, 0.0, std::nan(""), 0.0};
    CHECK_THROWS_AS(integrate_geodesic(t, bad, 1.0, 1e-3), std::invalid_argument);
}
