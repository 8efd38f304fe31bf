#pragma once

#include "qwalk/config.hpp"
#include "qwalk/ensemble.hpp"
#include "qwalk/observables.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>

namespace qwalk {

/// "%.12g" rendering used by every emitted float.
std::string format_real(double value);

/// Time series as CSV (header `step,msd,msd_std,c_l1,c_l1_std,c_re,c_re_std`,
/// absent observables omitted) or JSON (same columns as arrays under
/// "series", plus the `meta` object merged at top level, e.g. "config").
void write_timeseries(std::ostream& out, const AveragedSeries& series, OutputFormat format,
                      const nlohmann::ordered_json& meta = {});

/// Writes to `path`, or stdout when path is "-". Throws IoError.
void emit_timeseries(const AveragedSeries& series, OutputFormat format, const std::string& path,
                     const nlohmann::ordered_json& meta = {});

/// CSV `position,probability`; with drop_zeros, rows with p < 1e-15 are skipped.
void write_distribution(std::ostream& out, const PositionDistribution& dist, bool drop_zeros);
void emit_distribution(const PositionDistribution& dist, const std::string& path, bool drop_zeros);

} // namespace qwalk
