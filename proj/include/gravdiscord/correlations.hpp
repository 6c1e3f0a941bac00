#pragma once

#include "gravdiscord/gaussian_state.hpp"

namespace gravdiscord {

/// Pure single-mode Gaussian measurement seed R(angle) diag(lambda, 1/lambda) R(angle)^T.
/// lambda = 1 is heterodyne; lambda -> 0 or infinity approaches homodyne.
class MeasurementSeed {
public:
    MeasurementSeed(double lambda, double angle);

    static MeasurementSeed heterodyne() { return MeasurementSeed(1.0, 0.0); }

    double lambda() const noexcept { return lambda_; }
    /// Reduced into [0, pi).
    double angle() const noexcept { return angle_; }
    Matrix2 covariance() const;

private:
    double lambda_;
    double angle_;
};

struct ChannelDiagnostics {
    double delta = 0.0;
    double theta = 1.0;
    double loss = 0.0;
};

struct CorrelationReport {
    double mutual_information = 0.0;  // I2, nats
    double classical = 0.0;           // J2(A|B)
    double discord = 0.0;             // D2(A|B)
    MeasurementSeed optimal_seed = MeasurementSeed::heterodyne();
    ChannelDiagnostics channel;
};

struct ClassicalCorrelation {
    double value = 0.0;
    MeasurementSeed seed = MeasurementSeed::heterodyne();
};

struct ChangeRates {
    double mutual_information = 0.0;
    double classical = 0.0;
    double discord = 0.0;
};

/// I2 = 1/2 ln(det A det B / det sigma_AB).
double mutual_information(const StandardForm& state);

/// Covariance of A conditioned on the Gaussian measurement of B:
/// A - C (B + sigma_m)^{-1} C^T. Outcome independent.
Matrix2 conditional_covariance(const StandardForm& state, const MeasurementSeed& seed);

/// J2(A|B): sup over pure Gaussian seeds of 1/2 ln(det A / det sigma_A|m).
ClassicalCorrelation classical_correlation(const StandardForm& state);

/// J2(B|A), the measurement moved to subsystem A.
ClassicalCorrelation classical_correlation_swapped(const StandardForm& state);

/// 1/2 ln(det B det sigma_A|m / det sigma_AB) at a given seed. Its infimum over
/// seeds is the discord.
double discord_at_seed(const StandardForm& state, const MeasurementSeed& seed);

/// D2 = I2 - J2, cross-checked against discord_at_seed at the optimal seed.
double quantum_discord(const StandardForm& state);

/// All three measures in one pass, sharing the optimization.
CorrelationReport analyze(const StandardForm& state, ChannelDiagnostics channel = {});

/// Relative change (C - C0) / C0 per measure. Throws ZeroBaseline if any C0 is 0.
ChangeRates change_rate(const CorrelationReport& current, const CorrelationReport& baseline);

}  // namespace gravdiscord
