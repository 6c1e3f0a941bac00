#include "gravdiscord/spacetime.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gravdiscord/error.hpp"

namespace gravdiscord {

namespace {

constexpr int kBisectionIterations = 200;
constexpr double kRootTolerance = 1e-16;

void require(bool ok, const std::string& message) {
    if (!ok) throw Error(ErrorKind::InvalidArgument, message);
}

}  // namespace

KerrBody::KerrBody(double mass_geometric, double kerr_parameter, double surface_radius,
                   double angular_velocity_geometric)
    : mass_(mass_geometric),
      kerr_(kerr_parameter),
      radius_(surface_radius),
      omega_(angular_velocity_geometric) {
    require(std::isfinite(mass_) && mass_ > 0.0, "mass_geometric must be positive");
    require(std::isfinite(radius_) && radius_ > 2.0 * mass_,
            "surface_radius must exceed the Schwarzschild radius");
    require(std::isfinite(kerr_) && kerr_ >= 0.0, "kerr_parameter must be non-negative");
    require(std::isfinite(omega_) && omega_ >= 0.0,
            "angular_velocity_geometric must be non-negative");
}

KerrBody KerrBody::from_si(double mass_kg, double angular_momentum, double angular_velocity,
                           double surface_radius) {
    using namespace constants;
    require(mass_kg > 0.0, "mass must be positive");
    const double c = kSpeedOfLight;
    return KerrBody(kGravitational * mass_kg / (c * c), angular_momentum / (mass_kg * c),
                    surface_radius, angular_velocity / c);
}

KerrBody KerrBody::earth() {
    using namespace constants;
    const double c = kSpeedOfLight;
    return KerrBody(0.5 * kEarthSchwarzschildRadius, kEarthAngularMomentum / (kEarthMass * c),
                    kEarthRadius, kEarthSiderealRate / c);
}

Direction parse_direction(const char* text) {
    const std::string s(text);
    if (s == "+1" || s == "1") return Direction::CoRotating;
    if (s == "-1") return Direction::CounterRotating;
    throw Error(ErrorKind::InvalidArgument, "direction must be +1 or -1, got '" + s + "'");
}

OrbitSpec::OrbitSpec(double height, Direction direction) : height_(height), direction_(direction) {
    require(std::isfinite(height) && height >= 0.0, "orbit height must be non-negative");
    require(direction == Direction::CoRotating || direction == Direction::CounterRotating,
            "direction must be +1 or -1");
}

double log_frequency_ratio(const KerrBody& body, const OrbitSpec& orbit) {
    const double m = body.mass_geometric();
    const double a = body.kerr_parameter();
    const double w = body.angular_velocity_geometric();
    const double ra = body.surface_radius();
    const double rb = ra + orbit.height();
    const double eps = sign(orbit.direction());

    // Orbital frame-dragging term eps (a/r_B) sqrt(M/r_B).
    const double drag = eps * (a / rb) * std::sqrt(m / rb);

    // Receiver radicand 1 - 3M/r_B + 2 drag, carried as its offset from 1.
    const double receiver_offset = -3.0 * m / rb + 2.0 * drag;
    if (!(receiver_offset > -1.0)) {
        throw Error(ErrorKind::InvalidOrbit,
                    "receiver radicand 1 - 3M/r_B + 2eps(a/r_B)sqrt(M/r_B) is not positive at r_B = " +
                        std::to_string(rb));
    }

    // Emitter radicand 1/C^2 = 1 - (2M/r_A)(1 + 2 a w) + (r_A^2 + a^2 - 2 M a^2 / r_A) w^2.
    const double emitter_offset =
        -2.0 * m / ra * (1.0 + 2.0 * a * w) + (ra * ra + a * a - 2.0 * m * a * a / ra) * w * w;
    if (!(emitter_offset > -1.0)) {
        throw Error(ErrorKind::InvalidOrbit,
                    "emitter radicand C^-2 is not positive at r_A = " + std::to_string(ra));
    }

    return std::log1p(drag) + 0.5 * std::log1p(emitter_offset) - 0.5 * std::log1p(receiver_offset);
}

double frequency_ratio_exact(const KerrBody& body, const OrbitSpec& orbit) {
    return std::exp(log_frequency_ratio(body, orbit));
}

double frequency_ratio_offset(const KerrBody& body, const OrbitSpec& orbit) {
    return std::expm1(log_frequency_ratio(body, orbit));
}

double shift_parameter_exact(double ratio) {
    if (!(ratio > 0.0)) {
        throw Error(ErrorKind::NonPositiveRatio, "frequency ratio must be positive");
    }
    return shift_parameter_from_offset(ratio - 1.0);
}

double shift_parameter_from_offset(double eta) {
    if (!(eta > -1.0)) {
        throw Error(ErrorKind::NonPositiveRatio, "frequency ratio must be positive");
    }
    return std::expm1(0.5 * std::log1p(eta));
}

double shift_exact(const KerrBody& body, const OrbitSpec& orbit) {
    return std::expm1(0.5 * log_frequency_ratio(body, orbit));
}

ShiftBreakdown shift_parameter_perturbative(const KerrBody& body, const OrbitSpec& orbit) {
    const double rs = body.schwarzschild_radius();
    const double ra = body.surface_radius();
    const double h = orbit.height();
    const double a = body.kerr_parameter();
    const double w = body.angular_velocity_geometric();

    const double potential = 0.5 * rs / ra;  // M / r_A
    const double spin = ra * w * ra * w;     // (r_A w)^2

    const double schwarzschild = 0.125 * (rs / ra) * (ra - 2.0 * h) / (ra + h);
    const double rotation = 0.25 * spin;
    // Products of the surface potential with the ground velocity and with
    // frame dragging; both vanish identically when w = 0.
    const double higher = -potential * a * w + 0.5 * potential * spin;
    return ShiftBreakdown::from_terms(schwarzschild, rotation, higher);
}

double shift_parameter(const KerrBody& body, const OrbitSpec& orbit, ShiftMode mode) {
    return mode == ShiftMode::Exact ? shift_exact(body, orbit)
                                    : shift_parameter_perturbative(body, orbit).total;
}

double compensation_height(const KerrBody& body, Direction direction, ShiftMode mode) {
    auto delta = [&](double h) { return shift_parameter(body, OrbitSpec(h, direction), mode); };

    double lo = 0.0;
    double hi = 10.0 * body.surface_radius();
    double f_lo = delta(lo);
    double f_hi = delta(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
        throw Error(ErrorKind::NoRoot, "shift parameter does not change sign on [0, 10 r_A]");
    }

    // Run to the resolution of h; the tolerance is checked on the result.
    for (int i = 0; i < kBisectionIterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double f_mid = delta(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    const double root = std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
    if (!(std::min(std::abs(f_lo), std::abs(f_hi)) < kRootTolerance)) {
        throw Error(ErrorKind::NoRoot, "bisection did not reach |delta| < 1e-16");
    }
    return root;
}

}  // namespace gravdiscord
