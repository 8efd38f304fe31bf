#pragma once

#include "qwalk/state.hpp"

#include <vector>

namespace qwalk {

/// Probability mass over the sites of a lattice window.
struct PositionDistribution {
    LatticeWindow window;
    std::vector<double> p;

    double at(int x) const { return p[window.offset(x)]; }
    double total() const noexcept;
};

/// p(x) = |psi_up(x)|^2 + |psi_down(x)|^2
PositionDistribution probability_distribution(const WalkerState& state);

/// sum_x x^n p(x), n >= 1.
double moment(const PositionDistribution& dist, int n);

/// Second central moment <x^2> - <x>^2. Cancellation noise down to -1e-12
/// is clamped to zero; anything more negative is an internal error.
double msd(const PositionDistribution& dist);

struct MsdSeries {
    std::vector<int> steps;
    std::vector<double> msd;
};

/// Inclusive range of steps used for a power-law fit.
struct FitWindow {
    int t_min = 1;
    int t_max = 0;
};

struct AlphaEstimate {
    double alpha = 0.0;
    double log_prefactor = 0.0;
    FitWindow window;
    /// RMS residual of the fit in ln(msd).
    double residual = 0.0;
};

/// Least-squares slope of ln(msd) against ln(t) over the window.
AlphaEstimate fit_alpha(const MsdSeries& series, FitWindow window);

/// Full-series window (1, last step).
AlphaEstimate fit_alpha(const MsdSeries& series);

/// xi = -1 / ln(cos theta) for 0 < theta < pi/2.
double localization_length(double theta);

} // namespace qwalk
