#pragma once

#include <string>
#include <vector>

#include "gravdiscord/correlations.hpp"
#include "gravdiscord/spacetime.hpp"
#include "gravdiscord/wavepacket.hpp"

namespace gravdiscord {

enum class SweepAxis { Height, Squeezing, Frequency, ChangeRate };

/// Reference point for the change rates. Ground (h = 0) is the default; a
/// perfect channel (Theta = 1) is offered for sensitivity studies.
enum class Baseline { Ground, PerfectChannel };

struct AxisRange {
    double min = 0.0;
    double max = 0.0;
    int steps = 101;
};

/// Default grid for an axis: heights [0, 4e7] m, squeezing [0, 3], frequency [0.5, 2].
AxisRange default_range(SweepAxis axis);

struct RunConfig {
    KerrBody body = KerrBody::earth();
    Direction direction = Direction::CoRotating;
    double squeezing = 1.0;
    double peak_frequency = 1.0;
    double bandwidth = 1.0;
    /// Receiver height for point evaluations and the squeezing/frequency sweeps.
    double height = constants::kGeostationaryHeight;
    ShiftMode shift_mode = ShiftMode::Exact;
    OverlapMode overlap_mode = OverlapMode::Exact;
    Baseline baseline = Baseline::Ground;
    SweepAxis axis = SweepAxis::Height;
    AxisRange range = default_range(SweepAxis::Height);
    bool allow_large_squeezing = false;

    /// Throws Error(InvalidConfig) naming the offending field.
    void validate() const;
};

struct SweepRow {
    double axis = 0.0;
    double delta = 0.0;
    double theta = 1.0;
    double mutual_information = 0.0;
    double classical = 0.0;
    double discord = 0.0;
    double mu_mutual_information = 0.0;
    double mu_classical = 0.0;
    double mu_discord = 0.0;
};

using SweepTable = std::vector<SweepRow>;

/// Spacetime -> overlap -> lossy state -> correlations at one receiver height,
/// with the config's squeezing and packet.
CorrelationReport evaluate(const RunConfig& config, double height);

/// Report of the configured baseline (h = 0, or Theta = 1).
CorrelationReport baseline_report(const RunConfig& config);

/// One row at height h; change rates against baseline_report(config).
SweepRow run_point(const RunConfig& config, double height);

/// Evaluates run_point over the uniform grid of config.axis; rows in axis order.
SweepTable sweep(const RunConfig& config);

/// Writes `axis,delta,theta,I2,J2,D2,mu_I2,mu_J2,mu_D2` and one line per row,
/// 12 significant digits, via a temporary file renamed into place.
void emit_csv(const SweepTable& table, const std::string& path);

/// CSV text as written by emit_csv.
std::string format_csv(const SweepTable& table);

/// gnuplot script plotting the three correlations (or the three change rates
/// for the change-rate axis) from `csv_path`.
void emit_plot_script(const SweepTable& table, SweepAxis axis, const std::string& csv_path,
                      const std::string& script_path);

std::string format_plot_script(SweepAxis axis, const std::string& csv_path);

}  // namespace gravdiscord
