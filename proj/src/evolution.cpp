#include "qwalk/evolution.hpp"

#include "qwalk/errors.hpp"

#include <string>
#include <utility>

namespace qwalk {

void step(WalkerState& state, const CoinSchedule& schedule)
{
    const LatticeWindow& window = state.window();
    const int t = state.step();
    if (t >= window.horizon()) {
        throw CapacityError("state at step " + std::to_string(t) + " has reached its horizon "
                            + std::to_string(window.horizon()));
    }

    const auto& up = state.mutable_up();
    const auto& down = state.mutable_down();
    auto& next_up = state.scratch_up();
    auto& next_down = state.scratch_down();

    // Entries of the new support that receive no write below. Everything
    // else in the scratch buffers outside [-t-1, t+1] is already zero.
    next_up[window.offset(t)] = Amplitude{};
    next_up[window.offset(t + 1)] = Amplitude{};
    next_down[window.offset(-t)] = Amplitude{};
    next_down[window.offset(-t - 1)] = Amplitude{};

    const int coin_step = t + 1;
    if (schedule.position_independent()) {
        const CoinMatrix c = schedule.coin_at(coin_step, 0);
        const auto [a11, a12, a21, a22] = c.entries;
        for (int x = -t; x <= t; ++x) {
            const std::size_t i = window.offset(x);
            const Amplitude u = up[i];
            const Amplitude d = down[i];
            next_up[i - 1] = a11 * u + a12 * d;
            next_down[i + 1] = a21 * u + a22 * d;
        }
    } else {
        for (int x = -t; x <= t; ++x) {
            const std::size_t i = window.offset(x);
            const auto [a11, a12, a21, a22] = schedule.coin_at(coin_step, x).entries;
            const Amplitude u = up[i];
            const Amplitude d = down[i];
            next_up[i - 1] = a11 * u + a12 * d;
            next_down[i + 1] = a21 * u + a22 * d;
        }
    }
    state.swap_buffers_and_advance();
}

MsdSeries Trajectory::msd_series() const
{
    if (msd.empty()) {
        throw ValidationError("trajectory did not record msd");
    }
    MsdSeries series;
    series.msd = msd;
    series.steps.resize(msd.size());
    for (std::size_t i = 0; i < msd.size(); ++i) {
        series.steps[i] = static_cast<int>(i);
    }
    return series;
}

Trajectory evolve(WalkerState initial, const CoinSchedule& schedule, int steps, const Recorder& recorder)
{
    if (steps < 0) {
        throw ValidationError("step count must be >= 0, got " + std::to_string(steps));
    }
    if (initial.step() + steps > initial.window().horizon()) {
        throw CapacityError("evolving " + std::to_string(steps) + " steps from step " + std::to_string(initial.step())
                            + " exceeds horizon " + std::to_string(initial.window().horizon()));
    }

    Trajectory traj{.steps = steps, .final_state = std::move(initial)};
    WalkerState& state = traj.final_state;
    const bool keep_snapshots = recorder.snapshots && steps <= recorder.snapshot_cap;
    const auto n = static_cast<std::size_t>(steps) + 1;
    if (recorder.msd) {
        traj.msd.reserve(n);
    }
    if (recorder.c_l1) {
        traj.c_l1.reserve(n);
    }
    if (recorder.c_re) {
        traj.c_re.reserve(n);
    }

    auto record = [&] {
        if (recorder.msd) {
            traj.msd.push_back(msd(probability_distribution(state)));
        }
        if (recorder.c_l1) {
            traj.c_l1.push_back(l1_coherence_normalized(state, recorder.coherence_threads));
        }
        if (recorder.c_re) {
            traj.c_re.push_back(relative_entropy_coherence(state));
        }
        if (keep_snapshots) {
            traj.snapshots.push_back(state);
        }
    };

    record();
    for (int i = 0; i < steps; ++i) {
        step(state, schedule);
        record();
    }
    return traj;
}

std::vector<CoherenceRecord> coherence_series(const Trajectory& trajectory)
{
    const auto n = static_cast<std::size_t>(trajectory.steps) + 1;
    if (trajectory.c_l1.size() != n || trajectory.c_re.size() != n) {
        throw ValidationError("trajectory was not recorded with both coherence measures");
    }
    std::vector<CoherenceRecord> records;
    records.reserve(n - 1);
    for (std::size_t t = 1; t < n; ++t) {
        records.push_back({static_cast<int>(t), trajectory.c_l1[t], trajectory.c_re[t]});
    }
    return records;
}

PositionDistribution measured_walk_distribution(int steps)
{
    if (steps < 0) {
        throw ValidationError("step count must be >= 0, got " + std::to_string(steps));
    }
    // Row of C(t, k) / 2^t built by repeated halving, k = number of right moves.
    std::vector<double> row(static_cast<std::size_t>(steps) + 1, 0.0);
    row[0] = 1.0;
    for (int t = 1; t <= steps; ++t) {
        for (auto k = static_cast<std::size_t>(t); k >= 1; --k) {
            row[k] = 0.5 * (row[k] + row[k - 1]);
        }
        row[0] *= 0.5;
    }

    const LatticeWindow window(steps);
    std::vector<double> p(window.sites(), 0.0);
    for (int k = 0; k <= steps; ++k) {
        p[window.offset(2 * k - steps)] = row[static_cast<std::size_t>(k)];
    }
    return {window, std::move(p)};
}

} // namespace qwalk
