#include "gravdiscord/correlations.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "gravdiscord/error.hpp"

namespace gravdiscord {

namespace {

constexpr double kLogLambdaBound = 20.0;
constexpr double kGoldenTolerance = 1e-10;
constexpr double kNegativeSlack = 1e-12;
constexpr double kTieSlack = 1e-14;
constexpr double kDiscordAgreement = 1e-10;
constexpr int kGridLambda = 64;
constexpr int kGridAngle = 32;
constexpr int kRefineRounds = 40;

const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;

struct Minimum {
    double x;
    double value;
};

void require_finite(double v, const char* where) {
    if (!std::isfinite(v)) {
        throw Error(ErrorKind::OptimizerStall, std::string("non-finite objective in ") + where);
    }
}

// Golden-section minimization on [lo, hi]; returns the best point seen,
// including the bracket ends.
Minimum golden_section(const std::function<double(double)>& f, double lo, double hi,
                       double tol) {
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    require_finite(f1, "golden section");
    require_finite(f2, "golden section");
    int iterations = 0;
    while (hi - lo > tol) {
        if (++iterations > 400) {
            throw Error(ErrorKind::OptimizerStall, "golden section did not shrink its bracket");
        }
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = f(x1);
            require_finite(f1, "golden section");
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = f(x2);
            require_finite(f2, "golden section");
        }
    }
    Minimum best = f1 <= f2 ? Minimum{x1, f1} : Minimum{x2, f2};
    for (double edge : {lo, hi}) {
        const double fe = f(edge);
        if (fe < best.value) best = {edge, fe};
    }
    return best;
}

Matrix2 rotation(double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Matrix2 r;
    r << c, -s, s, c;
    return r;
}

// det sigma = (ab - c1^2)(ab - c2^2), kept in log1p form so nearly pure states
// do not cancel.
double log_det_sigma(const StandardForm& state) {
    const double ab = state.a * state.b;
    return 2.0 * std::log(ab) + std::log1p(-state.c1 * state.c1 / ab) +
           std::log1p(-state.c2 * state.c2 / ab);
}

// ln det of the conditional covariance for a seed, from the explicit Schur complement.
double log_det_conditional(const StandardForm& state, double log_lambda, double angle) {
    return std::log(
        conditional_covariance(state, MeasurementSeed(std::exp(log_lambda), angle)).determinant());
}

// Rotation-invariant case |c1| = |c2|: det is (a - c^2/(b+l)) (a - c^2/(b+1/l)).
double log_det_conditional_symmetric(double a, double b, double c_sq, double log_lambda) {
    const double l = std::exp(log_lambda);
    return std::log(a - c_sq / (b + l)) + std::log(a - c_sq / (b + 1.0 / l));
}

struct SeedMinimum {
    double log_det;
    MeasurementSeed seed;
};

SeedMinimum minimize_conditional(const StandardForm& state) {
    const double c_sq = std::abs(state.c1 * state.c2);
    const double scale = std::max({1.0, std::abs(state.c1), std::abs(state.c2)});
    if (std::abs(std::abs(state.c1) - std::abs(state.c2)) <= 1e-12 * scale) {
        auto f = [&](double x) { return log_det_conditional_symmetric(state.a, state.b, c_sq, x); };
        Minimum best = golden_section(f, -kLogLambdaBound, kLogLambdaBound, kGoldenTolerance);
        // Heterodyne is the symmetric point of the lambda <-> 1/lambda invariance;
        // it wins ties, which matters for pure states where the objective is flat.
        const double at_heterodyne = f(0.0);
        if (at_heterodyne <= best.value + kTieSlack) best = {0.0, at_heterodyne};
        return {best.value, MeasurementSeed(std::exp(best.x), 0.0)};
    }

    // General (c1, c2): coarse grid over (ln lambda, angle), then alternating
    // golden-section refinement in each coordinate.
    double best_x = 0.0;
    double best_t = 0.0;
    double best_v = log_det_conditional(state, 0.0, 0.0);
    const double dx = 2.0 * kLogLambdaBound / (kGridLambda - 1);
    const double dt = std::numbers::pi / kGridAngle;
    for (int i = 0; i < kGridLambda; ++i) {
        for (int j = 0; j < kGridAngle; ++j) {
            const double x = -kLogLambdaBound + i * dx;
            const double t = j * dt;
            const double v = log_det_conditional(state, x, t);
            require_finite(v, "measurement grid");
            if (v < best_v) {
                best_v = v;
                best_x = x;
                best_t = t;
            }
        }
    }
    double span_x = dx;
    double span_t = dt;
    for (int round = 0; round < kRefineRounds; ++round) {
        const Minimum mx = golden_section(
            [&](double x) { return log_det_conditional(state, x, best_t); },
            std::max(-kLogLambdaBound, best_x - span_x), std::min(kLogLambdaBound, best_x + span_x),
            kGoldenTolerance);
        if (mx.value <= best_v) {
            best_v = mx.value;
            best_x = mx.x;
        }
        const Minimum mt = golden_section(
            [&](double t) { return log_det_conditional(state, best_x, t); }, best_t - span_t,
            best_t + span_t, kGoldenTolerance);
        if (mt.value <= best_v) {
            best_v = mt.value;
            best_t = mt.x;
        }
        span_x *= 0.7;
        span_t *= 0.7;
    }
    return {best_v, MeasurementSeed(std::exp(best_x), best_t)};
}

double clamp_nonnegative(double v, const char* name) {
    if (v < -kNegativeSlack) {
        throw Error(ErrorKind::NonPhysical,
                    std::string(name) + " is negative: " + std::to_string(v));
    }
    return v < 0.0 ? 0.0 : v;
}

}  // namespace

MeasurementSeed::MeasurementSeed(double lambda, double angle) : lambda_(lambda) {
    if (!(std::isfinite(lambda) && lambda > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "measurement squeezing lambda must be positive");
    }
    if (!std::isfinite(angle)) {
        throw Error(ErrorKind::InvalidArgument, "measurement angle must be finite");
    }
    angle_ = std::fmod(angle, std::numbers::pi);
    if (angle_ < 0.0) angle_ += std::numbers::pi;
}

Matrix2 MeasurementSeed::covariance() const {
    const Matrix2 r = rotation(angle_);
    return r * Eigen::Vector2d(lambda_, 1.0 / lambda_).asDiagonal() * r.transpose();
}

double mutual_information(const StandardForm& state) {
    state.validate();
    const double value =
        0.5 * (2.0 * std::log(state.a) + 2.0 * std::log(state.b) - log_det_sigma(state));
    return clamp_nonnegative(value, "mutual information");
}

Matrix2 conditional_covariance(const StandardForm& state, const MeasurementSeed& seed) {
    const Matrix2 a = state.a * Matrix2::Identity();
    const Matrix2 b = state.b * Matrix2::Identity();
    const Matrix2 c = Eigen::Vector2d(state.c1, state.c2).asDiagonal();
    const Matrix2 schur = a - c * (b + seed.covariance()).inverse() * c.transpose();
    return 0.5 * (schur + schur.transpose());
}

ClassicalCorrelation classical_correlation(const StandardForm& state) {
    state.validate();
    const SeedMinimum m = minimize_conditional(state);
    const double value = 0.5 * (2.0 * std::log(state.a) - m.log_det);
    // Heterodyne closed form is a lower bound on the supremum.
    const double c_sq = std::abs(state.c1 * state.c2);
    const double heterodyne = std::log(state.a / (state.a - c_sq / (state.b + 1.0)));
    const bool symmetric = std::abs(std::abs(state.c1) - std::abs(state.c2)) <=
                           1e-12 * std::max({1.0, std::abs(state.c1), std::abs(state.c2)});
    if (symmetric && value < heterodyne - 1e-12) {
        throw Error(ErrorKind::OptimizerStall, "optimizer fell below the heterodyne value");
    }
    return {clamp_nonnegative(value, "classical correlation"), m.seed};
}

ClassicalCorrelation classical_correlation_swapped(const StandardForm& state) {
    return classical_correlation(StandardForm{state.b, state.a, state.c1, state.c2});
}

double discord_at_seed(const StandardForm& state, const MeasurementSeed& seed) {
    const double log_det_cond = std::log(conditional_covariance(state, seed).determinant());
    return 0.5 * (2.0 * std::log(state.b) + log_det_cond - log_det_sigma(state));
}

double quantum_discord(const StandardForm& state) { return analyze(state).discord; }

CorrelationReport analyze(const StandardForm& state, ChannelDiagnostics channel) {
    CorrelationReport report;
    report.channel = channel;
    report.mutual_information = mutual_information(state);
    const ClassicalCorrelation j = classical_correlation(state);
    report.classical = j.value;
    report.optimal_seed = j.seed;

    const double by_subtraction = report.mutual_information - report.classical;
    const double direct = discord_at_seed(state, j.seed);
    // The two routes evaluate the conditional determinant differently; their
    // rounding grows like eps * a, which only matters far beyond s = 3.
    const double tolerance = std::max(kDiscordAgreement, 64.0 * std::numeric_limits<double>::epsilon() *
                                                             std::max(state.a, state.b));
    if (std::abs(by_subtraction - direct) > tolerance) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "discord by subtraction %.17g disagrees with the direct form %.17g",
                      by_subtraction, direct);
        throw Error(ErrorKind::NonPhysical, buf);
    }
    report.discord = clamp_nonnegative(by_subtraction, "discord");
    return report;
}

ChangeRates change_rate(const CorrelationReport& current, const CorrelationReport& baseline) {
    const std::array<double, 3> base{baseline.mutual_information, baseline.classical,
                                     baseline.discord};
    for (double v : base) {
        if (!(v > 0.0)) {
            throw Error(ErrorKind::ZeroBaseline, "baseline correlation is zero");
        }
    }
    return {(current.mutual_information - base[0]) / base[0],
            (current.classical - base[1]) / base[1], (current.discord - base[2]) / base[2]};
}

}  // namespace gravdiscord
