#include "qwalk/ensemble.hpp"

#include "qwalk/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace qwalk {

namespace {

struct TrialResult {
    std::vector<double> msd;
    std::vector<double> c_l1;
    std::vector<double> c_re;
    std::vector<double> p;
};

// Moments are accumulated as offsets from the first trial, so identical
// trials give that trial's values back exactly and a zero deviation.
SeriesStats reduce(const std::vector<TrialResult>& results, std::vector<double> TrialResult::*member)
{
    const std::vector<double>& ref = results.front().*member;
    const std::size_t len = ref.size();
    const auto n = static_cast<double>(results.size());
    std::vector<double> sum(len, 0.0);
    std::vector<double> sum_sq(len, 0.0);
    for (const auto& r : results) {
        const auto& v = r.*member;
        for (std::size_t i = 0; i < len; ++i) {
            const double d = v[i] - ref[i];
            sum[i] += d;
            sum_sq[i] += d * d;
        }
    }
    SeriesStats stats{std::vector<double>(len), std::vector<double>(len, 0.0)};
    for (std::size_t i = 0; i < len; ++i) {
        stats.mean[i] = ref[i] + sum[i] / n;
        if (results.size() > 1) {
            const double var = (sum_sq[i] - sum[i] * sum[i] / n) / (n - 1.0);
            stats.stddev[i] = var > 0.0 ? std::sqrt(var) : 0.0;
        }
    }
    return stats;
}

} // namespace

CoinSchedule make_schedule(const WalkSpec& walk, std::uint64_t seed, int horizon)
{
    switch (walk.kind) {
    case ScheduleKind::homogeneous: return CoinSchedule::homogeneous(walk.theta0);
    case ScheduleKind::accelerated: return CoinSchedule::accelerated(walk.theta0, walk.acceleration);
    case ScheduleKind::temporal_disorder: return CoinSchedule::temporal_disorder(seed, std::max(horizon, 1));
    case ScheduleKind::spatial_disorder: return CoinSchedule::spatial_disorder(seed, horizon);
    }
    throw InternalError("unhandled schedule kind");
}

std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) noexcept
{
    std::uint64_t z = master_seed ^ 0x5851F42D4C957F2DULL;
    z += (trial_index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

MsdSeries AveragedSeries::mean_msd_series() const
{
    if (!msd) {
        throw ValidationError("ensemble did not record msd");
    }
    MsdSeries series;
    series.msd = msd->mean;
    series.steps.resize(series.msd.size());
    for (std::size_t i = 0; i < series.steps.size(); ++i) {
        series.steps[i] = static_cast<int>(i);
    }
    return series;
}

TrialError::TrialError(int trial_index, const std::string& what)
    : std::runtime_error("trial " + std::to_string(trial_index) + ": " + what)
    , trial_index_(trial_index)
{
}

AveragedSeries run_ensemble(const EnsembleConfig& config)
{
    if (config.trials < 1) {
        throw ValidationError("ensemble needs trials >= 1, got " + std::to_string(config.trials));
    }
    if (config.steps < 0) {
        throw ValidationError("ensemble needs steps >= 0, got " + std::to_string(config.steps));
    }

    const Recorder recorder{
        .msd = config.record_msd, .c_l1 = config.record_c_l1, .c_re = config.record_c_re, .snapshots = false};
    std::vector<TrialResult> results(static_cast<std::size_t>(config.trials));

    auto run_trial = [&](int index) {
        const std::uint64_t seed = derive_trial_seed(config.master_seed, static_cast<std::uint64_t>(index));
        const CoinSchedule schedule = make_schedule(config.walk, seed, config.steps);
        Trajectory traj = evolve(new_localized_state(CoinAmplitudes::symmetric(), config.steps), schedule,
                                 config.steps, recorder);
        auto& r = results[static_cast<std::size_t>(index)];
        r.msd = std::move(traj.msd);
        r.c_l1 = std::move(traj.c_l1);
        r.c_re = std::move(traj.c_re);
        if (config.record_distribution) {
            r.p = probability_distribution(traj.final_state).p;
        }
    };

    unsigned workers = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
    workers = std::clamp<unsigned>(workers, 1U, static_cast<unsigned>(config.trials));

    std::atomic<int> next{0};
    std::mutex error_mutex;
    int failed_index = -1;
    std::exception_ptr failure;
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < config.trials; i = next.fetch_add(1)) {
            try {
                run_trial(i);
            } catch (...) {
                const std::lock_guard lock(error_mutex);
                if (failed_index < 0 || i < failed_index) {
                    failed_index = i;
                    failure = std::current_exception();
                }
            }
        }
    };

    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }

    if (failure) {
        try {
            std::rethrow_exception(failure);
        } catch (const std::exception& e) {
            throw TrialError(failed_index, e.what());
        }
    }

    AveragedSeries out;
    out.steps = config.steps;
    out.trials = config.trials;
    if (config.record_msd) {
        out.msd = reduce(results, &TrialResult::msd);
    }
    if (config.record_c_l1) {
        out.c_l1 = reduce(results, &TrialResult::c_l1);
    }
    if (config.record_c_re) {
        out.c_re = reduce(results, &TrialResult::c_re);
    }
    if (config.record_distribution) {
        out.distribution = PositionDistribution{LatticeWindow(config.steps), reduce(results, &TrialResult::p).mean};
    }
    return out;
}

AveragedSeries as_averaged(const Trajectory& trajectory)
{
    AveragedSeries out;
    out.steps = trajectory.steps;
    out.trials = 1;
    auto wrap = [](const std::vector<double>& v) -> std::optional<SeriesStats> {
        if (v.empty()) {
            return std::nullopt;
        }
        return SeriesStats{v, std::vector<double>(v.size(), 0.0)};
    };
    out.msd = wrap(trajectory.msd);
    out.c_l1 = wrap(trajectory.c_l1);
    out.c_re = wrap(trajectory.c_re);
    out.distribution = probability_distribution(trajectory.final_state);
    return out;
}

} // namespace qwalk
