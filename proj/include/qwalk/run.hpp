#pragma once

#include "qwalk/config.hpp"
#include "qwalk/ensemble.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace qwalk {

struct RunResult {
    AveragedSeries series;
    std::optional<AlphaEstimate> alpha;
};

/// Computes everything a RunConfig asks for without writing files.
RunResult execute(const RunConfig& config);

/// `run.csv` -> `run_distribution.csv`; stdout output gets `distribution.csv`.
std::string default_distribution_path(const std::string& output);

/// execute() plus emission of the time series and, if requested, the
/// distribution. A one-line alpha summary goes to `log`.
void run_and_emit(const RunConfig& config, std::ostream& log);

} // namespace qwalk
