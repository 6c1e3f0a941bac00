#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "doctest.h"
#include "gravdiscord/error.hpp"
#include "gravdiscord/spacetime.hpp"

using namespace gravdiscord;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

namespace {

// Literal 50-digit evaluation of
//   ratio = (1 + eps (a/rB) sqrt(M/rB)) / (C sqrt(1 - 3M/rB + 2 eps (a/rB) sqrt(M/rB)))
//   C = [1 - (2M/rA)(1 + 2 a w) + (rA^2 + a^2 - 2 M a^2 / rA) w^2]^(-1/2)
// Shares nothing with the log1p route of the library.
BigFloat oracle_ratio(const KerrBody& body, double height, int eps) {
    const BigFloat m = body.mass_geometric();
    const BigFloat a = body.kerr_parameter();
    const BigFloat w = body.angular_velocity_geometric();
    const BigFloat ra = body.surface_radius();
    const BigFloat rb = ra + BigFloat(height);
    const BigFloat drag = eps * (a / rb) * sqrt(m / rb);
    const BigFloat c = pow(1 - 2 * m / ra * (1 + 2 * a * w) + (ra * ra + a * a - 2 * m * a * a / ra) * w * w,
                           BigFloat(-0.5));
    return (1 + drag) / (c * sqrt(1 - 3 * m / rb + 2 * drag));
}

double oracle_delta(const KerrBody& body, double height, int eps = 1) {
    return static_cast<double>(sqrt(oracle_ratio(body, height, eps)) - 1);
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("earth constants") {
    const KerrBody earth = KerrBody::earth();
    CHECK(earth.schwarzschild_radius() == 2.0 * earth.mass_geometric());
    CHECK(earth.schwarzschild_radius() == doctest::Approx(9e-3));
    CHECK(earth.surface_radius() == 6.371e6);
    CHECK(earth.kerr_parameter() == doctest::Approx(3.95).epsilon(1e-2));
    CHECK(earth.angular_velocity_geometric() == doctest::Approx(7.2921150e-5 / 299792458.0));

    const KerrBody si = KerrBody::from_si(constants::kEarthMass, constants::kEarthAngularMomentum,
                                          constants::kEarthSiderealRate, constants::kEarthRadius);
    CHECK(si.kerr_parameter() == doctest::Approx(earth.kerr_parameter()));
    // G m / c^2 for 5.9722e24 kg is 4.435 mm; the 9 mm Schwarzschild radius rounds it.
    CHECK(si.mass_geometric() == doctest::Approx(4.435e-3).epsilon(1e-3));
}

TEST_CASE("body and orbit validation") {
    CHECK_THROWS_AS(KerrBody(0.0, 0.0, 1.0, 0.0), Error);
    CHECK_THROWS_AS(KerrBody(1.0, 0.0, 2.0, 0.0), Error);  // surface at r_S
    CHECK_THROWS_AS(KerrBody(1.0, -1.0, 10.0, 0.0), Error);
    CHECK_THROWS_AS(KerrBody(1.0, 0.0, 10.0, -1.0), Error);
    CHECK_THROWS_AS(OrbitSpec(-1.0), Error);
    CHECK_THROWS_AS(OrbitSpec(1.0, static_cast<Direction>(0)), Error);
    CHECK(parse_direction("-1") == Direction::CounterRotating);
    CHECK(parse_direction("+1") == Direction::CoRotating);
    CHECK_THROWS_AS(parse_direction("2"), Error);
}

TEST_CASE("frequency ratio: flat space-time") {
    const KerrBody nearly_flat(1e-30, 0.0, 6.371e6, 0.0);
    for (double h : {0.0, 1e5, 3.6e7, 1e9}) {
        CHECK(std::abs(frequency_ratio_exact(nearly_flat, OrbitSpec(h)) - 1.0) < 1e-15);
    }
}

TEST_CASE("frequency ratio: Schwarzschild limit") {
    // Strong field so that the comparison is not trivially 1 = 1.
    for (const KerrBody& body : {KerrBody(1.0, 0.0, 10.0, 0.0), KerrBody::earth().with_rotation(0.0, 0.0)}) {
        const double ra = body.surface_radius();
        const double m = body.mass_geometric();
        for (double h : {0.0, 0.3 * ra, 2.0 * ra, 9.0 * ra}) {
            const double rb = ra + h;
            const double closed = std::sqrt(1.0 - 2.0 * m / ra) / std::sqrt(1.0 - 3.0 * m / rb);
            CHECK(rel(frequency_ratio_exact(body, OrbitSpec(h)), closed) < 1e-15);
        }
    }
}

TEST_CASE("frequency ratio: earth at geostationary height") {
    const KerrBody earth = KerrBody::earth();
    const OrbitSpec geo(3.6e7);
    const double eta_oracle = static_cast<double>(oracle_ratio(earth, 3.6e7, 1) - 1);
    // Frozen from the 50-digit oracle.
    CHECK(eta_oracle == doctest::Approx(-5.4581772e-10).epsilon(1e-7));
    CHECK(rel(frequency_ratio_offset(earth, geo), eta_oracle) < 1e-9);
    CHECK(rel(shift_exact(earth, geo), -2.7290886e-10) < 1e-7);
    CHECK(rel(shift_parameter_exact(frequency_ratio_exact(earth, geo)), oracle_delta(earth, 3.6e7)) <
          1e-6);
}

TEST_CASE("shift parameter from a ratio") {
    CHECK(shift_parameter_exact(1.0) == 0.0);
    CHECK(shift_parameter_exact(4.0) == doctest::Approx(1.0).epsilon(1e-15));
    const double ratio = 1.0 - 1.09e-9;
    const double want = static_cast<double>(sqrt(BigFloat(ratio)) - 1);
    CHECK(want == doctest::Approx(-5.45e-10).epsilon(1e-3));
    CHECK(rel(shift_parameter_exact(ratio), want) < 1e-9);
    CHECK(rel(shift_parameter_from_offset(-1.09e-9), -5.4500000014851e-10) < 1e-9);
    CHECK_THROWS_AS(shift_parameter_exact(0.0), Error);
    CHECK_THROWS_AS(shift_parameter_exact(-2.0), Error);
    try {
        shift_parameter_exact(0.0);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonPositiveRatio);
    }
}

TEST_CASE("invalid orbit names the failing radicand") {
    const KerrBody compact(1.0, 0.0, 2.5, 0.0);  // r_B = 2.5 < 3M: no circular orbit
    try {
        (void)frequency_ratio_exact(compact, OrbitSpec(0.0));
        FAIL("expected InvalidOrbit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidOrbit);
        CHECK(std::string(e.what()).find("receiver") != std::string::npos);
    }
    const KerrBody spinning(1.0, 1.0, 2.1, 0.2);  // frame dragging drives C^-2 below 0
    try {
        (void)frequency_ratio_exact(spinning, OrbitSpec(100.0));
        FAIL("expected InvalidOrbit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidOrbit);
        CHECK(std::string(e.what()).find("emitter") != std::string::npos);
    }
}

TEST_CASE("perturbative shift terms") {
    const KerrBody earth = KerrBody::earth();
    const double ra = earth.surface_radius();

    const ShiftBreakdown half = shift_parameter_perturbative(earth, OrbitSpec(ra / 2.0));
    CHECK(half.schwarzschild_term == 0.0);
    CHECK(half.total == half.schwarzschild_term + half.rotation_term + half.higher_order_term);

    const ShiftBreakdown geo = shift_parameter_perturbative(earth, OrbitSpec(3.6e7));
    // (1/8)(r_S/r_A)(r_A - 2h)/(r_A + h) and (r_A w)^2 / 4
    CHECK(geo.schwarzschild_term == doctest::Approx(-2.7350923e-10).epsilon(1e-7));
    CHECK(geo.rotation_term == doctest::Approx(6.00373e-13).epsilon(1e-5));
    CHECK(std::abs(geo.higher_order_term) < 1e-20);

    const ShiftBreakdown ground = shift_parameter_perturbative(earth, OrbitSpec(0.0));
    CHECK(ground.schwarzschild_term == doctest::Approx(0.125 * 9e-3 / ra).epsilon(1e-14));
    CHECK(ground.schwarzschild_term == doctest::Approx(1.7658e-10).epsilon(1e-4));

    const KerrBody still = earth.with_rotation(earth.kerr_parameter(), 0.0);
    const ShiftBreakdown no_spin = shift_parameter_perturbative(still, OrbitSpec(1e6));
    CHECK(no_spin.rotation_term == 0.0);
    CHECK(no_spin.higher_order_term == 0.0);

    // Direction does not enter at this order.
    CHECK(shift_parameter_perturbative(earth, OrbitSpec(1e7, Direction::CounterRotating)).total ==
          shift_parameter_perturbative(earth, OrbitSpec(1e7)).total);
}

TEST_CASE("exact and perturbative agree for earth orbits") {
    const KerrBody earth = KerrBody::earth();
    const double ra = earth.surface_radius();
    for (int i = 0; i <= 1000; ++i) {
        const double h = 10.0 * ra * i / 1000.0;
        const double exact = shift_exact(earth, OrbitSpec(h));
        const double pert = shift_parameter_perturbative(earth, OrbitSpec(h)).total;
        REQUIRE(std::abs(exact - pert) / std::max(std::abs(exact), 1e-14) < 1e-3);
        CHECK(exact == doctest::Approx(oracle_delta(earth, h)).epsilon(1e-6));
    }
}

TEST_CASE("sign structure and monotonicity in height") {
    const KerrBody earth = KerrBody::earth();
    const double ra = earth.surface_radius();
    double prev_sch = INFINITY;
    double prev_ratio = INFINITY;
    for (int i = 0; i <= 1000; ++i) {
        const double h = 10.0 * ra * i / 1000.0;
        const OrbitSpec orbit(h);
        const double sch = shift_parameter_perturbative(earth, orbit).schwarzschild_term;
        if (h < ra / 2.0) CHECK(sch > 0.0);
        if (h > ra / 2.0) CHECK(sch < 0.0);
        CHECK(sch < prev_sch);
        const double ratio = frequency_ratio_exact(earth, orbit);
        CHECK(ratio < prev_ratio);
        prev_sch = sch;
        prev_ratio = ratio;
    }
}

TEST_CASE("co- and counter-rotating orbits differ only through frame dragging") {
    const KerrBody earth = KerrBody::earth();
    const double co = shift_exact(earth, OrbitSpec(2e7, Direction::CoRotating));
    const double counter = shift_exact(earth, OrbitSpec(2e7, Direction::CounterRotating));
    CHECK(co != counter);
    CHECK(std::abs(co - counter) < 1e-18);
    CHECK(std::abs(co - oracle_delta(earth, 2e7, 1)) < 1e-20);
    CHECK(std::abs(counter - oracle_delta(earth, 2e7, -1)) < 1e-20);
}

TEST_CASE("compensation height") {
    const KerrBody earth = KerrBody::earth();
    const double ra = earth.surface_radius();

    const KerrBody static_earth = earth.with_rotation(0.0, 0.0);
    const double h_static =
        compensation_height(static_earth, Direction::CoRotating, ShiftMode::Perturbative);
    CHECK(h_static == doctest::Approx(ra / 2.0).epsilon(1e-14));

    const double h_pert = compensation_height(earth, Direction::CoRotating, ShiftMode::Perturbative);
    const double h_exact = compensation_height(earth, Direction::CoRotating, ShiftMode::Exact);
    CHECK(std::abs(h_pert - ra / 2.0) / ra < 0.05);
    CHECK(std::abs(h_exact - ra / 2.0) / ra < 0.05);
    CHECK(h_exact != ra / 2.0);
    CHECK(std::abs(h_exact - h_pert) / h_exact < 5e-5);  // 4 significant digits
    CHECK(std::abs(shift_exact(earth, OrbitSpec(h_exact))) < 1e-16);
    // Receiver rotation pushes the balance point slightly outward.
    CHECK(h_exact > ra / 2.0);

    const KerrBody fast(earth.mass_geometric(), 0.0, ra, 1e-3 / ra);
    try {
        (void)compensation_height(fast, Direction::CoRotating, ShiftMode::Perturbative);
        FAIL("expected NoRoot");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoRoot);
    }
}
