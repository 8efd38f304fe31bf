#include "qwalk/coins.hpp"

#include "qwalk/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace qwalk {

namespace {

constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

CoinMatrix su2_coin(double xi, double eta, double theta)
{
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Amplitude exi = std::polar(1.0, xi);
    const Amplitude eeta = std::polar(1.0, eta);
    return CoinMatrix{{exi * c, eeta * s, -std::conj(eeta) * s, std::conj(exi) * c}};
}

CoinMatrix homogeneous_coin(double theta)
{
    // Written out so that cos(pi/2) noise does not leak through polar().
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return CoinMatrix{{Amplitude{c, 0.0}, Amplitude{0.0, s}, Amplitude{0.0, s}, Amplitude{c, 0.0}}};
}

double accelerated_theta(double theta0, double a, int step)
{
    if (!(a >= 0.0)) {
        throw ValidationError("acceleration parameter must be >= 0, got " + std::to_string(a));
    }
    if (step < 1) {
        throw ValidationError("accelerated walk steps count from 1, got " + std::to_string(step));
    }
    return theta0 * std::exp(-a * static_cast<double>(step));
}

double counter_uniform(std::uint64_t seed, std::uint64_t index) noexcept
{
    // Two rounds: one keyed on the seed, one on the counter.
    const std::uint64_t key = mix64(seed + 0x9E3779B97F4A7C15ULL);
    const std::uint64_t bits = mix64(key ^ mix64(index * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL));
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::vector<double> sample_disorder_angles(std::uint64_t seed, int count)
{
    if (count <= 0) {
        throw ValidationError("disorder angle count must be >= 1, got " + std::to_string(count));
    }
    std::vector<double> angles(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < angles.size(); ++i) {
        angles[i] = std::numbers::pi * counter_uniform(seed, i);
    }
    return angles;
}

std::string_view to_string(ScheduleKind kind) noexcept
{
    switch (kind) {
    case ScheduleKind::homogeneous: return "homogeneous";
    case ScheduleKind::accelerated: return "accelerated";
    case ScheduleKind::temporal_disorder: return "temporal";
    case ScheduleKind::spatial_disorder: return "spatial";
    }
    return "unknown";
}

CoinSchedule::CoinSchedule(ScheduleKind kind, double theta0, double acceleration, std::uint64_t seed, int horizon,
                           std::vector<double> angles)
    : kind_(kind)
    , theta0_(theta0)
    , acceleration_(acceleration)
    , seed_(seed)
    , horizon_(horizon)
    , angles_(std::move(angles))
{
}

CoinSchedule CoinSchedule::homogeneous(double theta)
{
    return CoinSchedule(ScheduleKind::homogeneous, theta, 0.0, 0, 0, {});
}

CoinSchedule CoinSchedule::accelerated(double theta0, double a)
{
    if (!(a >= 0.0)) {
        throw ValidationError("acceleration parameter must be >= 0, got " + std::to_string(a));
    }
    return CoinSchedule(ScheduleKind::accelerated, theta0, a, 0, 0, {});
}

CoinSchedule CoinSchedule::temporal_disorder(std::uint64_t seed, int horizon)
{
    if (horizon < 1) {
        throw ValidationError("temporal disorder needs horizon >= 1");
    }
    return CoinSchedule(ScheduleKind::temporal_disorder, 0.0, 0.0, seed, horizon,
                        sample_disorder_angles(seed, horizon));
}

CoinSchedule CoinSchedule::spatial_disorder(std::uint64_t seed, int horizon)
{
    if (horizon < 0) {
        throw ValidationError("spatial disorder needs horizon >= 0");
    }
    return CoinSchedule(ScheduleKind::spatial_disorder, 0.0, 0.0, seed, horizon,
                        sample_disorder_angles(seed, 2 * horizon + 1));
}

double CoinSchedule::theta_at(int step, int position) const
{
    if (step < 1) {
        throw ValidationError("coin step must be >= 1, got " + std::to_string(step));
    }
    switch (kind_) {
    case ScheduleKind::homogeneous:
        return theta0_;
    case ScheduleKind::accelerated:
        return accelerated_theta(theta0_, acceleration_, step);
    case ScheduleKind::temporal_disorder:
        if (step > horizon_) {
            throw ValidationError("step " + std::to_string(step) + " beyond disorder horizon "
                                  + std::to_string(horizon_));
        }
        return angles_[static_cast<std::size_t>(step - 1)];
    case ScheduleKind::spatial_disorder:
        if (step > horizon_) {
            throw ValidationError("step " + std::to_string(step) + " beyond disorder horizon "
                                  + std::to_string(horizon_));
        }
        if (position < -horizon_ || position > horizon_) {
            throw ValidationError("position " + std::to_string(position) + " outside disorder window");
        }
        return angles_[static_cast<std::size_t>(position + horizon_)];
    }
    throw InternalError("unhandled schedule kind");
}

} // namespace qwalk
