// Command-line front end: single points and the four parameter sweeps.
//
// Exit codes: 0 success, 2 invalid configuration, 3 numeric/module failure.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gravdiscord/error.hpp"
#include "gravdiscord/experiments.hpp"

namespace {

using namespace gravdiscord;

constexpr int kExitInvalidConfig = 2;
constexpr int kExitNumeric = 3;

struct Flags {
    std::optional<double> s;
    std::optional<double> omega;
    std::optional<double> sigma;
    std::optional<double> h;
    std::string direction = "+1";
    std::string shift = "exact";
    std::string overlap = "exact";
    std::string baseline = "ground";
    std::optional<double> min;
    std::optional<double> max;
    std::optional<int> steps;
    std::string out;
    std::string plot_script;
    bool allow_large_s = false;
};

RunConfig build_config(const Flags& f, SweepAxis axis) {
    RunConfig cfg;
    cfg.axis = axis;
    cfg.range = default_range(axis);
    if (f.s) cfg.squeezing = *f.s;
    if (f.omega) cfg.peak_frequency = *f.omega;
    if (f.sigma) cfg.bandwidth = *f.sigma;
    if (f.h) cfg.height = *f.h;
    if (f.min) cfg.range.min = *f.min;
    if (f.max) cfg.range.max = *f.max;
    if (f.steps) cfg.range.steps = *f.steps;
    cfg.allow_large_squeezing = f.allow_large_s;
    try {
        cfg.direction = parse_direction(f.direction.c_str());
    } catch (const Error& e) {
        throw Error(ErrorKind::InvalidConfig, e.what());
    }
    cfg.shift_mode = f.shift == "perturbative" ? ShiftMode::Perturbative : ShiftMode::Exact;
    cfg.overlap_mode = f.overlap == "perturbative" ? OverlapMode::Perturbative : OverlapMode::Exact;
    cfg.baseline = f.baseline == "perfect" ? Baseline::PerfectChannel : Baseline::Ground;
    cfg.validate();
    return cfg;
}

void write_outputs(const SweepTable& table, SweepAxis axis, const Flags& f) {
    if (f.out.empty()) {
        std::cout << format_csv(table);
    } else {
        emit_csv(table, f.out);
    }
    if (!f.plot_script.empty()) {
        emit_plot_script(table, axis, f.out.empty() ? std::string("sweep.csv") : f.out,
                         f.plot_script);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Correlations of a two-mode squeezed state with one photon sent from the ground\n"
        "to a satellite through the Earth's Kerr space-time. All entropies in nats.\n"
        "Squeezing and frequency sweeps hold h at --h (default 3.6e7 m, geostationary);\n"
        "use --h 2e7 for the 2x10^4 km orbit quoted with the squeezing-sweep figure."};
    app.set_help_flag("--help", "Print this help message and exit");
    app.set_config("--config", "", "Flat key = value file; keys are the long flag names");
    app.fallthrough();

    Flags f;
    app.add_option("--s", f.s, "Squeezing parameter s (default 1)");
    app.add_option("--omega", f.omega, "Peak frequency in units of 500 THz (default 1)");
    app.add_option("--sigma", f.sigma, "Bandwidth in units of 1 MHz (default 1)");
    app.add_option("--h", f.h, "Receiver height in meters (default 3.6e7)");
    app.add_option("--direction", f.direction, "Orbit direction, +1 co-rotating or -1")
        ->check(CLI::IsMember({"+1", "1", "-1"}));
    app.add_option("--shift", f.shift, "Shift parameter: exact or perturbative")
        ->check(CLI::IsMember({"exact", "perturbative"}));
    app.add_option("--overlap", f.overlap, "Overlap: exact or perturbative")
        ->check(CLI::IsMember({"exact", "perturbative"}));
    app.add_option("--baseline", f.baseline,
                   "Change-rate reference: ground (h = 0) or perfect (Theta = 1, sensitivity only)")
        ->check(CLI::IsMember({"ground", "perfect"}));
    app.add_option("--min", f.min, "Sweep axis minimum");
    app.add_option("--max", f.max, "Sweep axis maximum");
    app.add_option("--steps", f.steps, "Number of grid points (>= 2, default 101)");
    app.add_option("--out", f.out, "CSV output path (stdout when omitted)");
    app.add_option("--plot-script", f.plot_script, "Write a gnuplot script for the CSV");
    app.add_flag("--allow-large-s", f.allow_large_s, "Permit s > 3");

    struct Command {
        const char* name;
        const char* help;
        std::optional<SweepAxis> axis;
    };
    const Command commands[] = {
        {"point", "Evaluate one receiver height (--h)", std::nullopt},
        {"sweep-height", "Correlations versus orbit height", SweepAxis::Height},
        {"sweep-squeezing", "Correlations versus squeezing s", SweepAxis::Squeezing},
        {"sweep-frequency", "Correlations versus peak frequency", SweepAxis::Frequency},
        {"sweep-change-rate", "Change rates versus orbit height", SweepAxis::ChangeRate},
    };
    std::vector<CLI::App*> subs;
    for (const Command& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->set_help_flag("--help", "Print this help message and exit");
        subs.push_back(sub);
    }
    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidConfig;
    }

    try {
        for (std::size_t i = 0; i < subs.size(); ++i) {
            if (!subs[i]->parsed()) continue;
            if (!commands[i].axis) {
                const RunConfig cfg = build_config(f, SweepAxis::Height);
                write_outputs({run_point(cfg, cfg.height)}, SweepAxis::Height, f);
            } else {
                const RunConfig cfg = build_config(f, *commands[i].axis);
                write_outputs(sweep(cfg), *commands[i].axis, f);
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        const bool config = e.kind() == ErrorKind::InvalidConfig ||
                            e.kind() == ErrorKind::InvalidArgument;
        return config ? kExitInvalidConfig : kExitNumeric;
    }
    return 0;
}
