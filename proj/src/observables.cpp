#include "qwalk/observables.hpp"

#include "qwalk/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qwalk {

double PositionDistribution::total() const noexcept
{
    double sum = 0.0;
    for (double v : p) {
        sum += v;
    }
    return sum;
}

PositionDistribution probability_distribution(const WalkerState& state)
{
    const auto up = state.up();
    const auto down = state.down();
    std::vector<double> p(up.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = std::norm(up[i]) + std::norm(down[i]);
    }
    return {state.window(), std::move(p)};
}

double moment(const PositionDistribution& dist, int n)
{
    if (n <= 0) {
        throw ValidationError("moment order must be >= 1, got " + std::to_string(n));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < dist.p.size(); ++i) {
        if (dist.p[i] == 0.0) {
            continue;
        }
        const double x = dist.window.position(i);
        double xn = x;
        for (int k = 1; k < n; ++k) {
            xn *= x;
        }
        sum += xn * dist.p[i];
    }
    return sum;
}

double msd(const PositionDistribution& dist)
{
    const double mean = moment(dist, 1);
    const double value = moment(dist, 2) - mean * mean;
    if (value < 0.0) {
        if (value < -1e-12) {
            throw InternalError("negative mean squared displacement " + std::to_string(value));
        }
        return 0.0;
    }
    return value;
}

AlphaEstimate fit_alpha(const MsdSeries& series, FitWindow window)
{
    if (series.steps.size() != series.msd.size() || series.steps.empty()) {
        throw ValidationError("msd series is empty or has mismatched lengths");
    }
    if (window.t_min < 1) {
        throw ValidationError("fit window must start at t >= 1, got " + std::to_string(window.t_min));
    }
    if (window.t_max > series.steps.back()) {
        throw ValidationError("fit window end " + std::to_string(window.t_max) + " beyond last step "
                              + std::to_string(series.steps.back()));
    }
    if (window.t_max <= window.t_min) {
        throw ValidationError("fit window needs t_max > t_min");
    }

    std::vector<double> lx;
    std::vector<double> ly;
    for (std::size_t i = 0; i < series.steps.size(); ++i) {
        const int t = series.steps[i];
        if (t < window.t_min || t > window.t_max) {
            continue;
        }
        if (!(series.msd[i] > 0.0)) {
            throw ValidationError("non-positive msd at step " + std::to_string(t) + " inside fit window");
        }
        lx.push_back(std::log(static_cast<double>(t)));
        ly.push_back(std::log(series.msd[i]));
    }
    if (lx.size() < 2) {
        throw ValidationError("fit window holds fewer than two points");
    }

    const double n = static_cast<double>(lx.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }

    AlphaEstimate est;
    est.alpha = sxy / sxx;
    est.log_prefactor = my - est.alpha * mx;
    est.window = window;
    double ss = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        const double r = ly[i] - (est.log_prefactor + est.alpha * lx[i]);
        ss += r * r;
    }
    est.residual = std::sqrt(ss / n);
    return est;
}

AlphaEstimate fit_alpha(const MsdSeries& series)
{
    if (series.steps.empty()) {
        throw ValidationError("msd series is empty");
    }
    return fit_alpha(series, FitWindow{1, series.steps.back()});
}

double localization_length(double theta)
{
    if (theta == 0.0) {
        throw DomainError("localization length diverges at theta = 0");
    }
    if (!(theta > 0.0 && theta < std::numbers::pi / 2)) {
        throw DomainError("localization length needs 0 < theta < pi/2, got " + std::to_string(theta));
    }
    const double log_cos = std::log(std::cos(theta));
    if (!(log_cos < 0.0)) {
        throw DomainError("localization length diverges: cos(theta) rounds to 1");
    }
    return -1.0 / log_cos;
}

} // namespace qwalk
