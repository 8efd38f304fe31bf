#pragma once

#include "qwalk/state.hpp"

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace qwalk {

/// 2x2 unitary acting on the coin space, row-major (a11, a12, a21, a22).
struct CoinMatrix {
    std::array<Amplitude, 4> entries;

    Amplitude operator()(int row, int col) const { return entries[static_cast<std::size_t>(2 * row + col)]; }
    Amplitude determinant() const { return entries[0] * entries[3] - entries[1] * entries[2]; }

    friend bool operator==(const CoinMatrix&, const CoinMatrix&) = default;
};

/// [[e^{i xi} cos th, e^{i eta} sin th], [-e^{-i eta} sin th, e^{-i xi} cos th]]
CoinMatrix su2_coin(double xi, double eta, double theta);

/// su2_coin(0, pi/2, theta): real cos on the diagonal, i*sin off the diagonal.
CoinMatrix homogeneous_coin(double theta);

/// theta0 * exp(-a * step). The first applied coin is step 1.
double accelerated_theta(double theta0, double a, int step);

/// Maps (seed, index) to a uniform double in [0, 1). Stateless, so any
/// element of a stream can be produced independently of the others.
double counter_uniform(std::uint64_t seed, std::uint64_t index) noexcept;

/// `count` angles uniform in [0, pi), element i depends only on (seed, i).
std::vector<double> sample_disorder_angles(std::uint64_t seed, int count);

enum class ScheduleKind { homogeneous, accelerated, temporal_disorder, spatial_disorder };

std::string_view to_string(ScheduleKind kind) noexcept;

/// Assigns a coin to every (step, position). Disorder schedules carry their
/// realized angle table; a schedule never changes after construction.
class CoinSchedule {
public:
    static CoinSchedule homogeneous(double theta);
    static CoinSchedule accelerated(double theta0, double a);
    /// One angle per step 1..horizon.
    static CoinSchedule temporal_disorder(std::uint64_t seed, int horizon);
    /// One angle per site -horizon..horizon.
    static CoinSchedule spatial_disorder(std::uint64_t seed, int horizon);

    ScheduleKind kind() const noexcept { return kind_; }
    double theta0() const noexcept { return theta0_; }
    double acceleration() const noexcept { return acceleration_; }
    std::uint64_t seed() const noexcept { return seed_; }
    const std::vector<double>& angles() const noexcept { return angles_; }

    /// True when every site sees the same coin at a given step.
    bool position_independent() const noexcept { return kind_ != ScheduleKind::spatial_disorder; }

    /// Coin angle applied at (step, position); step counts from 1.
    double theta_at(int step, int position) const;
    CoinMatrix coin_at(int step, int position) const { return homogeneous_coin(theta_at(step, position)); }

private:
    CoinSchedule(ScheduleKind kind, double theta0, double acceleration, std::uint64_t seed, int horizon,
                 std::vector<double> angles);

    ScheduleKind kind_;
    double theta0_ = 0.0;
    double acceleration_ = 0.0;
    std::uint64_t seed_ = 0;
    int horizon_ = 0;
    std::vector<double> angles_;
};

} // namespace qwalk
