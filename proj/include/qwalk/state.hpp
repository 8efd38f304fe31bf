#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qwalk {

using Amplitude = std::complex<double>;

/// Initial coin state c1|up> + c2|down>, normalized in modulus.
struct CoinAmplitudes {
    Amplitude c1;
    Amplitude c2;

    static CoinAmplitudes symmetric();
};

/// Fixed lattice window of 2*horizon+1 sites, x in [-horizon, horizon].
class LatticeWindow {
public:
    explicit LatticeWindow(int horizon);

    int horizon() const noexcept { return horizon_; }
    std::size_t sites() const noexcept { return static_cast<std::size_t>(2 * horizon_ + 1); }
    bool contains(int x) const noexcept { return x >= -horizon_ && x <= horizon_; }
    std::size_t offset(int x) const noexcept { return static_cast<std::size_t>(x + horizon_); }
    int position(std::size_t offset) const noexcept { return static_cast<int>(offset) - horizon_; }

    friend bool operator==(const LatticeWindow&, const LatticeWindow&) = default;

private:
    int horizon_;
};

/// Pure coin (x) position state on a preallocated window.
///
/// Storage is two contiguous amplitude arrays indexed by x + horizon. The
/// state also owns the write buffers used by the stepping kernel so that a
/// step never allocates.
class WalkerState {
public:
    WalkerState(LatticeWindow window, std::vector<Amplitude> up, std::vector<Amplitude> down, int step);

    const LatticeWindow& window() const noexcept { return window_; }
    int step() const noexcept { return step_; }

    std::span<const Amplitude> up() const noexcept { return up_; }
    std::span<const Amplitude> down() const noexcept { return down_; }

    Amplitude up_at(int x) const { return up_[window_.offset(x)]; }
    Amplitude down_at(int x) const { return down_[window_.offset(x)]; }

    /// Lattice coordinates that can carry amplitude at the current step.
    int support_min() const noexcept { return -step_; }
    int support_max() const noexcept { return step_; }

    // Mutable access for the evolution kernel.
    std::vector<Amplitude>& mutable_up() noexcept { return up_; }
    std::vector<Amplitude>& mutable_down() noexcept { return down_; }
    std::vector<Amplitude>& scratch_up() noexcept { return next_up_; }
    std::vector<Amplitude>& scratch_down() noexcept { return next_down_; }
    void swap_buffers_and_advance() noexcept;

private:
    LatticeWindow window_;
    std::vector<Amplitude> up_;
    std::vector<Amplitude> down_;
    std::vector<Amplitude> next_up_;
    std::vector<Amplitude> next_down_;
    int step_;
};

/// (c1|up> + c2|down>) (x) |0> on a window of the given horizon.
WalkerState new_localized_state(const CoinAmplitudes& coin, int horizon);

double norm_squared(const WalkerState& state) noexcept;

} // namespace qwalk
