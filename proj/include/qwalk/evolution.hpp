#pragma once

#include "qwalk/coherence.hpp"
#include "qwalk/coins.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/state.hpp"

#include <vector>

namespace qwalk {

/// Applies one walk step in place: coin_at(step+1, x) at every site, then
/// the up component moves to x-1 and the down component to x+1.
/// Throws CapacityError when the state already sits at its horizon.
void step(WalkerState& state, const CoinSchedule& schedule);

/// Which per-step observables `evolve` computes while stepping.
struct Recorder {
    bool msd = true;
    bool c_l1 = false;
    bool c_re = false;
    /// Keep full-state snapshots, only honoured when steps <= snapshot_cap.
    bool snapshots = false;
    int snapshot_cap = 64;
    /// Workers for the l1 pair sum.
    unsigned coherence_threads = 1;
};

/// Result of `evolve`. Recorded series hold steps + 1 entries (step 0 first).
struct Trajectory {
    int steps = 0;
    std::vector<double> msd{};
    std::vector<double> c_l1{};
    std::vector<double> c_re{};
    std::vector<WalkerState> snapshots{};
    WalkerState final_state;

    MsdSeries msd_series() const;
};

Trajectory evolve(WalkerState initial, const CoinSchedule& schedule, int steps, const Recorder& recorder = {});

/// One record per step 1..T. Requires a trajectory recorded with both
/// coherence measures.
std::vector<CoherenceRecord> coherence_series(const Trajectory& trajectory);

/// Distribution of the walk whose coin is measured after every step: the
/// symmetric binomial on [-t, t] with variance t.
PositionDistribution measured_walk_distribution(int steps);

} // namespace qwalk
