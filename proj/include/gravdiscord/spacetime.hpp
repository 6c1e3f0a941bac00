#pragma once

// Frequency shift between a ground emitter and a satellite receiver on a
// circular equatorial orbit of a slowly rotating (Kerr) planet.
//
// All lengths are meters in geometric units (G = c = 1): the mass is stored as
// M = G m / c^2, the angular velocity as omega / c (per meter) and the Kerr
// parameter as a = J / (m c).

namespace gravdiscord {

namespace constants {
inline constexpr double kSpeedOfLight = 299792458.0;     // m/s
inline constexpr double kGravitational = 6.67430e-11;    // m^3 kg^-1 s^-2
inline constexpr double kEarthRadius = 6.371e6;          // m
inline constexpr double kEarthSchwarzschildRadius = 9e-3;  // m
inline constexpr double kEarthMass = 5.9722e24;          // kg
inline constexpr double kEarthSiderealRate = 7.2921150e-5;  // rad/s
inline constexpr double kEarthAngularMomentum = 7.07e33;    // kg m^2/s
inline constexpr double kGeostationaryHeight = 3.6e7;       // m
}  // namespace constants

class KerrBody {
public:
    /// Geometric-unit constructor; throws InvalidArgument on unphysical input.
    KerrBody(double mass_geometric, double kerr_parameter, double surface_radius,
             double angular_velocity_geometric);

    /// SI constructor: mass in kg, angular momentum in kg m^2/s, angular
    /// velocity in rad/s. Converted to geometric units once, here.
    static KerrBody from_si(double mass_kg, double angular_momentum, double angular_velocity,
                            double surface_radius);

    /// r_S = 9 mm, r_A = 6371 km, sidereal rotation, a from J = 7.07e33 kg m^2/s.
    static KerrBody earth();

    double mass_geometric() const noexcept { return mass_; }
    double kerr_parameter() const noexcept { return kerr_; }
    double surface_radius() const noexcept { return radius_; }
    double angular_velocity_geometric() const noexcept { return omega_; }
    double schwarzschild_radius() const noexcept { return 2.0 * mass_; }

    KerrBody with_rotation(double kerr_parameter, double angular_velocity_geometric) const {
        return KerrBody(mass_, kerr_parameter, radius_, angular_velocity_geometric);
    }

private:
    double mass_;
    double kerr_;
    double radius_;
    double omega_;
};

enum class Direction : int { CoRotating = +1, CounterRotating = -1 };

inline int sign(Direction d) noexcept { return static_cast<int>(d); }

/// Parses "+1", "1" or "-1".
Direction parse_direction(const char* text);

class OrbitSpec {
public:
    explicit OrbitSpec(double height, Direction direction = Direction::CoRotating);

    double height() const noexcept { return height_; }
    Direction direction() const noexcept { return direction_; }

private:
    double height_;
    Direction direction_;
};

struct ShiftBreakdown {
    double schwarzschild_term = 0.0;
    double rotation_term = 0.0;
    double higher_order_term = 0.0;
    double total = 0.0;

    static ShiftBreakdown from_terms(double schwarzschild, double rotation, double higher_order) {
        return {schwarzschild, rotation, higher_order, schwarzschild + rotation + higher_order};
    }
};

enum class ShiftMode { Exact, Perturbative };

/// ln(Omega_B / Omega_A) for a circular equatorial receiver orbit.
/// Throws InvalidOrbit naming the radicand that is not positive.
double log_frequency_ratio(const KerrBody& body, const OrbitSpec& orbit);

/// Omega_B / Omega_A.
double frequency_ratio_exact(const KerrBody& body, const OrbitSpec& orbit);

/// eta = Omega_B / Omega_A - 1 without forming the ratio first.
double frequency_ratio_offset(const KerrBody& body, const OrbitSpec& orbit);

/// delta = sqrt(ratio) - 1. Accurate for ratio close to 1.
double shift_parameter_exact(double ratio);

/// delta from eta = ratio - 1; preferred when eta is already available.
double shift_parameter_from_offset(double eta);

/// delta for a body and orbit through the exact frequency ratio.
double shift_exact(const KerrBody& body, const OrbitSpec& orbit);

/// First-order expansion of shift_exact in M/r and (r_A omega)^2 together
/// with the leading gravity-rotation cross terms.
ShiftBreakdown shift_parameter_perturbative(const KerrBody& body, const OrbitSpec& orbit);

double shift_parameter(const KerrBody& body, const OrbitSpec& orbit, ShiftMode mode);

/// Height where delta changes sign (emitter and receiver clocks tick alike).
/// Bracketed bisection on [0, 10 r_A]; throws NoRoot if delta keeps its sign.
double compensation_height(const KerrBody& body, Direction direction, ShiftMode mode);

}  // namespace gravdiscord
