#include "gravdiscord/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gravdiscord/error.hpp"

namespace gravdiscord {

namespace {

constexpr double kMaxDefaultSqueezing = 3.0;

void config_error(const std::string& message) { throw Error(ErrorKind::InvalidConfig, message); }

bool is_height_axis(SweepAxis axis) {
    return axis == SweepAxis::Height || axis == SweepAxis::ChangeRate;
}

ChangeRates rates_against(const CorrelationReport& current, const CorrelationReport& baseline) {
    try {
        return change_rate(current, baseline);
    } catch (const Error& e) {
        // Unsqueezed input: every measure is exactly 0 at both points, so nothing changed.
        const bool all_zero = baseline.mutual_information == 0.0 && baseline.classical == 0.0 &&
                              baseline.discord == 0.0 && current.mutual_information == 0.0 &&
                              current.classical == 0.0 && current.discord == 0.0;
        if (e.kind() == ErrorKind::ZeroBaseline && all_zero) return {};
        throw;
    }
}

SweepRow make_row(double axis_value, const CorrelationReport& report,
                  const CorrelationReport& baseline) {
    const ChangeRates mu = rates_against(report, baseline);
    return {axis_value,
            report.channel.delta,
            report.channel.theta,
            report.mutual_information,
            report.classical,
            report.discord,
            mu.mutual_information,
            mu.classical,
            mu.discord};
}

void write_atomically(const std::string& text, const std::string& path) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::IoError, "cannot open '" + tmp.string() + "' for writing");
        out << text;
        out.flush();
        if (!out) throw Error(ErrorKind::IoError, "write to '" + tmp.string() + "' failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error(ErrorKind::IoError, "cannot move output into '" + path + "'");
    }
}

void append_number(std::string& out, double v) {
    if (v == 0.0) v = 0.0;  // no "-0"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    out += buf;
}

}  // namespace

AxisRange default_range(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::Height:
        case SweepAxis::ChangeRate: return {0.0, 4e7, 101};
        case SweepAxis::Squeezing: return {0.0, 3.0, 101};
        case SweepAxis::Frequency: return {0.5, 2.0, 101};
    }
    return {};
}

void RunConfig::validate() const {
    if (!(std::isfinite(squeezing) && squeezing >= 0.0)) config_error("s must be non-negative");
    if (squeezing > kMaxDefaultSqueezing && !allow_large_squeezing) {
        config_error("s > 3 leaves the perturbative regime; pass --allow-large-s to override");
    }
    if (!(std::isfinite(height) && height >= 0.0)) config_error("h must be non-negative");
    try {
        WavePacketSpec(peak_frequency, bandwidth);
    } catch (const Error& e) {
        config_error(std::string("packet: ") + e.what());
    }
    if (range.steps < 2) config_error("steps must be at least 2");
    if (!(std::isfinite(range.min) && std::isfinite(range.max) && range.min < range.max)) {
        config_error("sweep needs min < max");
    }
    switch (axis) {
        case SweepAxis::Height:
        case SweepAxis::ChangeRate:
            if (range.min < 0.0) config_error("height sweep needs min >= 0");
            break;
        case SweepAxis::Squeezing:
            if (range.min < 0.0) config_error("squeezing sweep needs min >= 0");
            if (range.max > kMaxDefaultSqueezing && !allow_large_squeezing) {
                config_error("squeezing sweep beyond s = 3 needs --allow-large-s");
            }
            break;
        case SweepAxis::Frequency:
            if (range.min <= 0.0) config_error("frequency sweep needs min > 0");
            try {
                WavePacketSpec(range.min, bandwidth);
            } catch (const Error& e) {
                config_error(std::string("frequency sweep: ") + e.what());
            }
            break;
    }
}

CorrelationReport evaluate(const RunConfig& config, double height) {
    const double delta =
        shift_parameter(config.body, OrbitSpec(height, config.direction), config.shift_mode);
    const WavePacketSpec packet(config.peak_frequency, config.bandwidth);
    const ChannelOverlap channel = overlap(packet, delta, config.overlap_mode);
    const StandardForm state = lossy_standard_form(config.squeezing, channel.theta());
    return analyze(state, {delta, channel.theta(), channel.loss()});
}

CorrelationReport baseline_report(const RunConfig& config) {
    if (config.baseline == Baseline::PerfectChannel) {
        return analyze(lossy_standard_form(config.squeezing, 1.0), {0.0, 1.0, 0.0});
    }
    return evaluate(config, 0.0);
}

SweepRow run_point(const RunConfig& config, double height) {
    return make_row(height, evaluate(config, height), baseline_report(config));
}

SweepTable sweep(const RunConfig& config) {
    config.validate();
    const AxisRange& r = config.range;
    SweepTable table;
    table.reserve(static_cast<std::size_t>(r.steps));

    if (is_height_axis(config.axis)) {
        const CorrelationReport baseline = baseline_report(config);
        for (int i = 0; i < r.steps; ++i) {
            const double h = r.min + (r.max - r.min) * i / (r.steps - 1);
            table.push_back(make_row(h, evaluate(config, h), baseline));
        }
        return table;
    }

    for (int i = 0; i < r.steps; ++i) {
        const double x = r.min + (r.max - r.min) * i / (r.steps - 1);
        RunConfig point = config;
        if (config.axis == SweepAxis::Squeezing) {
            point.squeezing = x;
        } else {
            point.peak_frequency = x;
        }
        table.push_back(make_row(x, evaluate(point, point.height), baseline_report(point)));
    }
    return table;
}

std::string format_csv(const SweepTable& table) {
    std::string out = "axis,delta,theta,I2,J2,D2,mu_I2,mu_J2,mu_D2\n";
    for (const SweepRow& row : table) {
        const double fields[] = {row.axis,
                                 row.delta,
                                 row.theta,
                                 row.mutual_information,
                                 row.classical,
                                 row.discord,
                                 row.mu_mutual_information,
                                 row.mu_classical,
                                 row.mu_discord};
        bool first = true;
        for (double v : fields) {
            if (!first) out += ',';
            first = false;
            append_number(out, v);
        }
        out += '\n';
    }
    return out;
}

void emit_csv(const SweepTable& table, const std::string& path) {
    if (table.empty()) throw Error(ErrorKind::InvalidArgument, "refusing to write an empty table");
    write_atomically(format_csv(table), path);
}

std::string format_plot_script(SweepAxis axis, const std::string& csv_path) {
    std::string xlabel;
    switch (axis) {
        case SweepAxis::Height:
        case SweepAxis::ChangeRate: xlabel = "orbit height h (m)"; break;
        case SweepAxis::Squeezing: xlabel = "squeezing parameter s"; break;
        case SweepAxis::Frequency: xlabel = "peak frequency (units of 500 THz)"; break;
    }
    const bool rates = axis == SweepAxis::ChangeRate;
    const int first_column = rates ? 7 : 4;
    const char* titles_corr[] = {"I_2", "J_2", "D_2"};
    const char* titles_rate[] = {"mu_{I_2}", "mu_{J_2}", "mu_{D_2}"};
    const char* const* titles = rates ? titles_rate : titles_corr;

    const std::filesystem::path image = std::filesystem::path(csv_path).replace_extension(".svg");
    std::ostringstream s;
    s << "# gnuplot script\n"
      << "set terminal svg size 800,600\n"
      << "set output '" << image.string() << "'\n"
      << "set datafile separator ','\n"
      << "set key top right\n"
      << "set xlabel '" << xlabel << "'\n"
      << "set ylabel '" << (rates ? "change rate mu_C" : "correlation (nats)") << "'\n"
      << "plot '" << csv_path << "' every ::1 using 1:" << first_column << " with lines title '"
      << titles[0] << "', \\\n"
      << "     '' every ::1 using 1:" << first_column + 1 << " with lines title '" << titles[1]
      << "', \\\n"
      << "     '' every ::1 using 1:" << first_column + 2 << " with lines title '" << titles[2]
      << "'\n";
    return s.str();
}

void emit_plot_script(const SweepTable& table, SweepAxis axis, const std::string& csv_path,
                      const std::string& script_path) {
    if (table.empty()) throw Error(ErrorKind::InvalidArgument, "refusing to plot an empty table");
    write_atomically(format_plot_script(axis, csv_path), script_path);
}

}  // namespace gravdiscord
