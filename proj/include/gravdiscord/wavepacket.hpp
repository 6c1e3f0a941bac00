#pragma once

namespace gravdiscord {

namespace constants {
inline constexpr double kPeakFrequencyAnchor = 5e14;  // Hz, 500 THz
inline constexpr double kBandwidthAnchor = 1e6;       // Hz, 1 MHz
/// Down-conversion source wavelength behind the 500 THz anchor (documentation only).
inline constexpr double kSourceWavelength = 598e-9;   // m
}  // namespace constants

/// Gaussian frequency profile of the photon, in anchor units: the physical
/// peak is peak_frequency * peak_anchor and the width bandwidth * bandwidth_anchor.
class WavePacketSpec {
public:
    WavePacketSpec(double peak_frequency, double bandwidth,
                   double peak_anchor = constants::kPeakFrequencyAnchor,
                   double bandwidth_anchor = constants::kBandwidthAnchor);

    double peak_frequency() const noexcept { return peak_; }
    double bandwidth() const noexcept { return bandwidth_; }
    double peak_anchor() const noexcept { return peak_anchor_; }
    double bandwidth_anchor() const noexcept { return bandwidth_anchor_; }

    double peak_hz() const noexcept { return peak_ * peak_anchor_; }
    double bandwidth_hz() const noexcept { return bandwidth_ * bandwidth_anchor_; }
    /// Omega_0 / sigma in physical units; the only combination the overlap sees.
    double peak_over_bandwidth() const noexcept { return peak_hz() / bandwidth_hz(); }

private:
    double peak_;
    double bandwidth_;
    double peak_anchor_;
    double bandwidth_anchor_;
};

/// Channel transmissivity Theta, stored through its loss 1 - Theta.
/// Theta may underflow to 0 for packets that no longer overlap.
class ChannelOverlap {
public:
    static ChannelOverlap from_loss(double loss);
    static ChannelOverlap from_theta(double theta) { return from_loss(1.0 - theta); }

    double loss() const noexcept { return loss_; }
    double theta() const noexcept { return 1.0 - loss_; }
    double fidelity() const noexcept { return theta() * theta(); }

private:
    explicit ChannelOverlap(double loss) : loss_(loss) {}
    double loss_;
};

enum class OverlapMode { Exact, Perturbative };

/// Sent amplitude F(Omega) = (2 pi sigma^2)^(-1/4) exp(-(Omega - Omega_0)^2 / (4 sigma^2))
/// in Hz^(-1/2); `frequency` is dimensionless (units of the peak anchor).
double packet_amplitude(const WavePacketSpec& spec, double frequency);

/// Same profile addressed by detuning t = (Omega - Omega_0) / sigma, which
/// keeps full precision for packets with Omega_0 / sigma ~ 1e8.
double packet_amplitude_detuned(const WavePacketSpec& spec, double detuning);

/// Received amplitude: the sent profile with every frequency scaled by 1 + delta,
/// F_B(Omega) = (1 + delta)^(-1/2) F_A(Omega / (1 + delta)). L2 norm is preserved.
/// Throws InvalidShift when 1 + delta <= 0.
double received_packet_amplitude(const WavePacketSpec& spec, double delta, double frequency);

/// Received amplitude at detuning t from the *sent* peak.
double received_packet_amplitude_detuned(const WavePacketSpec& spec, double delta,
                                         double detuning);

/// Closed-form overlap of the received and sent profiles:
/// Theta = sqrt(2 (1 + delta) / (1 + (1 + delta)^2)) exp(-delta^2 R^2 / (4 (1 + (1 + delta)^2)))
/// with R = Omega_0 / sigma.
ChannelOverlap overlap_exact(const WavePacketSpec& spec, double delta);

/// Second-order expansion, loss = delta^2 R^2 / 8. Requires |delta| R < 1 (OutOfRegime).
ChannelOverlap overlap_perturbative(const WavePacketSpec& spec, double delta);

/// Adaptive Gauss-Kronrod evaluation of the overlap integral to 1e-10 absolute.
/// Independent of the closed form; throws QuadratureFailure when the error
/// estimate stays above tolerance.
ChannelOverlap overlap_quadrature(const WavePacketSpec& spec, double delta);

ChannelOverlap overlap(const WavePacketSpec& spec, double delta, OverlapMode mode);

}  // namespace gravdiscord
