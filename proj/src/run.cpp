#include "qwalk/run.hpp"

#include "qwalk/emit.hpp"
#include "qwalk/evolution.hpp"

#include <fmt/format.h>

#include <ostream>

namespace qwalk {

namespace {

AveragedSeries classical_series(const RunConfig& config)
{
    AveragedSeries out;
    out.steps = config.steps;
    out.trials = 1;
    SeriesStats stats;
    for (int t = 0; t <= config.steps; ++t) {
        stats.mean.push_back(msd(measured_walk_distribution(t)));
    }
    stats.stddev.assign(stats.mean.size(), 0.0);
    out.msd = std::move(stats);
    if (config.observables.prob) {
        out.distribution = measured_walk_distribution(config.steps);
    }
    return out;
}

} // namespace

RunResult execute(const RunConfig& config)
{
    RunResult result;
    result.series = config.walk == Walk::classical ? classical_series(config) : run_ensemble(to_ensemble_config(config));
    if (config.observables.alpha) {
        result.alpha = fit_alpha(result.series.mean_msd_series(), config.effective_fit_window());
    }
    if (!config.observables.msd) {
        result.series.msd.reset();
    }
    return result;
}

std::string default_distribution_path(const std::string& output)
{
    if (output == "-" || output.empty()) {
        return "distribution.csv";
    }
    const auto slash = output.find_last_of('/');
    const auto dot = output.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return output + "_distribution.csv";
    }
    return output.substr(0, dot) + "_distribution.csv";
}

void run_and_emit(const RunConfig& config, std::ostream& log)
{
    const RunResult result = execute(config);

    nlohmann::ordered_json meta;
    meta["config"] = config_to_json(config);
    if (result.alpha) {
        meta["alpha"] = {{"value", result.alpha->alpha},
                         {"t_min", result.alpha->window.t_min},
                         {"t_max", result.alpha->window.t_max},
                         {"residual", result.alpha->residual}};
        log << fmt::format("alpha = {:.6f} (fit window {}..{}, rms residual {:.3g})\n", result.alpha->alpha,
                           result.alpha->window.t_min, result.alpha->window.t_max, result.alpha->residual);
    }

    const bool has_columns = result.series.msd || result.series.c_l1 || result.series.c_re;
    if (has_columns) {
        emit_timeseries(result.series, config.format, config.output, meta);
    }
    if (config.observables.prob && result.series.distribution) {
        const std::string path =
            config.distribution_output.empty() ? default_distribution_path(config.output) : config.distribution_output;
        emit_distribution(*result.series.distribution, path, config.drop_zeros);
    }
}

} // namespace qwalk
