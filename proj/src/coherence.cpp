#include "qwalk/coherence.hpp"

#include "qwalk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

namespace qwalk {

namespace {

constexpr std::size_t row_block = 64;

double pair_sum_rows(std::span<const Amplitude> up, std::span<const Amplitude> down, std::size_t row_begin,
                     std::size_t row_end)
{
    double sum = 0.0;
    for (std::size_t j = row_begin; j < row_end; ++j) {
        const Amplitude uj = up[j];
        const Amplitude dj = down[j];
        if (uj == Amplitude{} && dj == Amplitude{}) {
            continue;
        }
        for (std::size_t k = 0; k < j; ++k) {
            const Amplitude rho = uj * std::conj(up[k]) + dj * std::conj(down[k]);
            sum += std::sqrt(rho.real() * rho.real() + rho.imag() * rho.imag());
        }
    }
    return sum;
}

} // namespace

ReducedDensityMatrix::ReducedDensityMatrix(int min_position, std::size_t dimension, std::vector<Amplitude> entries)
    : min_position_(min_position)
    , dimension_(dimension)
    , entries_(std::move(entries))
{
    if (entries_.size() != dimension_ * dimension_) {
        throw ValidationError("density matrix storage does not match its dimension");
    }
}

ReducedDensityMatrix reduced_position_density(const WalkerState& state)
{
    const int lo = state.support_min();
    const int hi = state.support_max();
    const auto n = static_cast<std::size_t>(hi - lo + 1);
    std::vector<Amplitude> rho(n * n);
    for (int j = lo; j <= hi; ++j) {
        const Amplitude uj = state.up_at(j);
        const Amplitude dj = state.down_at(j);
        for (int k = lo; k <= hi; ++k) {
            rho[static_cast<std::size_t>(j - lo) * n + static_cast<std::size_t>(k - lo)] =
                uj * std::conj(state.up_at(k)) + dj * std::conj(state.down_at(k));
        }
    }
    return ReducedDensityMatrix(lo, n, std::move(rho));
}

std::array<double, 2> GramMatrix::eigenvalues() const noexcept
{
    const double half_trace = 0.5 * (up_up + down_down);
    const double half_gap = 0.5 * (up_up - down_down);
    const double radius = std::sqrt(half_gap * half_gap + std::norm(up_down));
    return {half_trace + radius, half_trace - radius};
}

GramMatrix gram_matrix(const WalkerState& state)
{
    GramMatrix g;
    const auto up = state.up();
    const auto down = state.down();
    for (std::size_t i = 0; i < up.size(); ++i) {
        g.up_up += std::norm(up[i]);
        g.down_down += std::norm(down[i]);
        g.up_down += std::conj(up[i]) * down[i];
    }
    return g;
}

double shannon_entropy(std::span<const double> p) noexcept
{
    double h = 0.0;
    for (double v : p) {
        if (v > 0.0) {
            h -= v * std::log(v);
        }
    }
    return h;
}

double von_neumann_entropy(std::span<const double> eigenvalues)
{
    double s = 0.0;
    for (double lambda : eigenvalues) {
        if (lambda < -1e-9) {
            throw InternalError("density matrix eigenvalue " + std::to_string(lambda) + " is negative");
        }
        const double v = std::clamp(lambda, 0.0, 1.0);
        if (v > 0.0) {
            s -= v * std::log(v);
        }
    }
    return s;
}

double l1_coherence_normalized(const WalkerState& state, unsigned threads)
{
    const int t = state.step();
    if (t == 0) {
        return 0.0;
    }
    const auto lo = state.window().offset(state.support_min());
    const auto n = static_cast<std::size_t>(2 * t + 1);
    const auto up = state.up().subspan(lo, n);
    const auto down = state.down().subspan(lo, n);

    const std::size_t blocks = (n + row_block - 1) / row_block;
    std::vector<double> block_sums(blocks, 0.0);
    auto run_block = [&](std::size_t b) {
        block_sums[b] = pair_sum_rows(up, down, b * row_block, std::min(n, (b + 1) * row_block));
    };

    const std::size_t workers = std::min<std::size_t>(std::max(threads, 1U), blocks);
    if (workers <= 1) {
        for (std::size_t b = 0; b < blocks; ++b) {
            run_block(b);
        }
    } else {
        // Strided assignment balances the triangular workload.
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t b = w; b < blocks; b += workers) {
                    run_block(b);
                }
            });
        }
    }

    double sum = 0.0;
    for (double v : block_sums) {
        sum += v;
    }
    return sum / static_cast<double>(t);
}

double relative_entropy_coherence(const WalkerState& state)
{
    const auto up = state.up();
    const auto down = state.down();
    double h = 0.0;
    for (std::size_t i = 0; i < up.size(); ++i) {
        const double p = std::norm(up[i]) + std::norm(down[i]);
        if (p > 0.0) {
            h -= p * std::log(p);
        }
    }
    const auto lambda = gram_matrix(state).eigenvalues();
    const double value = h - von_neumann_entropy(lambda);
    if (value < 0.0) {
        if (value < -1e-12) {
            throw InternalError("negative relative entropy of coherence " + std::to_string(value));
        }
        return 0.0;
    }
    return value;
}

} // namespace qwalk
