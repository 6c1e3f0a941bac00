#include "gravdiscord/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gravdiscord/error.hpp"

namespace gravdiscord {

namespace {

constexpr double kMinNarrowness = 1e3;
constexpr double kQuadratureTolerance = 1e-10;
constexpr double kTruncationWidths = 12.0;

void require_shift(double delta) {
    if (!(std::isfinite(delta) && 1.0 + delta > 0.0)) {
        throw Error(ErrorKind::InvalidShift, "1 + delta must be positive, got delta = " +
                                                 std::to_string(delta));
    }
}

// (2 pi)^(-1/4) exp(-t^2 / 4): the sent profile in units where sigma = 1.
double unit_profile(double t) {
    static const double norm = std::pow(2.0 * std::numbers::pi, -0.25);
    return norm * std::exp(-0.25 * t * t);
}

}  // namespace

WavePacketSpec::WavePacketSpec(double peak_frequency, double bandwidth, double peak_anchor,
                               double bandwidth_anchor)
    : peak_(peak_frequency),
      bandwidth_(bandwidth),
      peak_anchor_(peak_anchor),
      bandwidth_anchor_(bandwidth_anchor) {
    if (!(std::isfinite(peak_) && peak_ > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "peak_frequency must be positive");
    }
    if (!(std::isfinite(bandwidth_) && bandwidth_ > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "bandwidth must be positive");
    }
    if (!(peak_anchor_ > 0.0 && bandwidth_anchor_ > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "rescale anchors must be positive");
    }
    if (!(peak_over_bandwidth() >= kMinNarrowness)) {
        throw Error(ErrorKind::InvalidArgument,
                    "packet is not narrow: Omega_0 / sigma = " +
                        std::to_string(peak_over_bandwidth()) + " must be at least 1e3");
    }
}

ChannelOverlap ChannelOverlap::from_loss(double loss) {
    if (!(loss >= 0.0 && loss <= 1.0)) {
        throw Error(ErrorKind::OutOfRange,
                    "channel loss must lie in [0, 1], got " + std::to_string(loss));
    }
    return ChannelOverlap(loss);
}

double packet_amplitude(const WavePacketSpec& spec, double frequency) {
    const double t = (frequency - spec.peak_frequency()) * spec.peak_anchor() / spec.bandwidth_hz();
    return packet_amplitude_detuned(spec, t);
}

double packet_amplitude_detuned(const WavePacketSpec& spec, double detuning) {
    return unit_profile(detuning) / std::sqrt(spec.bandwidth_hz());
}

double received_packet_amplitude(const WavePacketSpec& spec, double delta, double frequency) {
    const double t = (frequency - spec.peak_frequency()) * spec.peak_anchor() / spec.bandwidth_hz();
    return received_packet_amplitude_detuned(spec, delta, t);
}

double received_packet_amplitude_detuned(const WavePacketSpec& spec, double delta,
                                         double detuning) {
    require_shift(delta);
    // Omega / (1 + delta) - Omega_0 = (Omega - Omega_0 - delta Omega_0) / (1 + delta), in sigma units.
    const double scaled = (detuning - delta * spec.peak_over_bandwidth()) / (1.0 + delta);
    return unit_profile(scaled) / std::sqrt((1.0 + delta) * spec.bandwidth_hz());
}

ChannelOverlap overlap_exact(const WavePacketSpec& spec, double delta) {
    require_shift(delta);
    const double r = spec.peak_over_bandwidth();
    // 1 + (1 + delta)^2 = 2 (1 + delta) + delta^2
    const double denom = 2.0 * (1.0 + delta) + delta * delta;
    const double log_prefactor = -0.5 * std::log1p(delta * delta / (2.0 * (1.0 + delta)));
    const double exponent = (delta * r) * (delta * r) / (4.0 * denom);
    return ChannelOverlap::from_loss(-std::expm1(log_prefactor - exponent));
}

ChannelOverlap overlap_perturbative(const WavePacketSpec& spec, double delta) {
    const double x = delta * spec.peak_over_bandwidth();
    if (!(std::abs(x) < 1.0)) {
        throw Error(ErrorKind::OutOfRegime,
                    "|delta| Omega_0 / sigma = " + std::to_string(std::abs(x)) + " is not below 1");
    }
    return ChannelOverlap::from_loss(x * x / 8.0);
}

ChannelOverlap overlap_quadrature(const WavePacketSpec& spec, double delta) {
    require_shift(delta);
    const double r = spec.peak_over_bandwidth();
    const double shift = delta * r;  // received peak, in sigma units from the sent peak

    // The integrand is a Gaussian in t; integrate around its maximum.
    const double s2 = (1.0 + delta) * (1.0 + delta);
    const double centre = shift / (1.0 + s2);
    const double width = std::sqrt(2.0 * s2 / (1.0 + s2));
    const double lower = std::max(-r, centre - kTruncationWidths * width);
    const double upper = centre + kTruncationWidths * width;

    auto integrand = [&](double t) {
        return received_packet_amplitude_detuned(spec, delta, t) *
               packet_amplitude_detuned(spec, t) * spec.bandwidth_hz();
    };

    double error = 0.0;
    const double theta = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, lower, upper, 15, 1e-14, &error);
    if (!(error <= kQuadratureTolerance) || !std::isfinite(theta)) {
        throw Error(ErrorKind::QuadratureFailure,
                    "overlap quadrature error estimate " + std::to_string(error) +
                        " exceeds 1e-10");
    }
    return ChannelOverlap::from_theta(std::clamp(theta, 0.0, 1.0));
}

ChannelOverlap overlap(const WavePacketSpec& spec, double delta, OverlapMode mode) {
    return mode == OverlapMode::Exact ? overlap_exact(spec, delta)
                                      : overlap_perturbative(spec, delta);
}

}  // namespace gravdiscord
