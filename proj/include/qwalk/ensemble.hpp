#pragma once

#include "qwalk/coins.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/observables.hpp"

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwalk {

/// Walk family plus the parameters that the deterministic families use.
struct WalkSpec {
    ScheduleKind kind = ScheduleKind::homogeneous;
    double theta0 = std::numbers::pi / 4;
    double acceleration = 0.02;
};

/// Realizes the schedule for one trial. Disorder tables are drawn from
/// `seed` and sized for `horizon` steps.
CoinSchedule make_schedule(const WalkSpec& walk, std::uint64_t seed, int horizon);

struct EnsembleConfig {
    WalkSpec walk;
    int trials = 1;
    std::uint64_t master_seed = 0;
    int steps = 100;
    bool record_msd = true;
    bool record_c_l1 = false;
    bool record_c_re = false;
    /// Also average the final position distribution.
    bool record_distribution = false;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Mixes (master_seed, trial_index) into the seed of one trial.
std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) noexcept;

struct SeriesStats {
    std::vector<double> mean;
    /// Sample (n-1) standard deviation; zero for a single trial.
    std::vector<double> stddev;
};

struct AveragedSeries {
    int steps = 0;
    int trials = 0;
    std::optional<SeriesStats> msd;
    std::optional<SeriesStats> c_l1;
    std::optional<SeriesStats> c_re;
    std::optional<PositionDistribution> distribution;

    MsdSeries mean_msd_series() const;
};

/// A trial failed; wraps the original message with the trial index.
class TrialError : public std::runtime_error {
public:
    TrialError(int trial_index, const std::string& what);
    int trial_index() const noexcept { return trial_index_; }

private:
    int trial_index_;
};

/// Runs every trial from the fixed (1/sqrt2, 1/sqrt2) (x) |0> start and
/// reduces in trial order, so the output is bit-identical for any thread count.
AveragedSeries run_ensemble(const EnsembleConfig& config);

/// Single trajectory viewed as a one-trial ensemble.
AveragedSeries as_averaged(const Trajectory& trajectory);

} // namespace qwalk
