#pragma once

#include "qwalk/state.hpp"

#include <array>
#include <span>
#include <vector>

namespace qwalk {

/// Position density matrix after tracing out the coin, restricted to the
/// light cone [-t, t]; dimension 2t+1, row-major.
class ReducedDensityMatrix {
public:
    ReducedDensityMatrix(int min_position, std::size_t dimension, std::vector<Amplitude> entries);

    std::size_t dimension() const noexcept { return dimension_; }
    int min_position() const noexcept { return min_position_; }

    /// Entry at lattice coordinates (j, k).
    Amplitude operator()(int j, int k) const
    {
        return entries_[static_cast<std::size_t>(j - min_position_) * dimension_
                        + static_cast<std::size_t>(k - min_position_)];
    }
    std::span<const Amplitude> data() const noexcept { return entries_; }

private:
    int min_position_;
    std::size_t dimension_;
    std::vector<Amplitude> entries_;
};

ReducedDensityMatrix reduced_position_density(const WalkerState& state);

/// Coin-overlap matrix G(s, s') = sum_x conj(psi_s(x)) psi_s'(x). For a pure
/// joint state its spectrum is the nonzero spectrum of the reduced position
/// density matrix.
struct GramMatrix {
    double up_up = 0.0;
    double down_down = 0.0;
    Amplitude up_down{}; ///< G(up, down); G(down, up) is its conjugate.

    double trace() const noexcept { return up_up + down_down; }
    /// Eigenvalues, largest first.
    std::array<double, 2> eigenvalues() const noexcept;
};

GramMatrix gram_matrix(const WalkerState& state);

/// -sum p ln p with 0 ln 0 = 0.
double shannon_entropy(std::span<const double> p) noexcept;

/// Entropy of a spectrum. Eigenvalues are clamped to [0, 1]; a negative
/// eigenvalue below -1e-9 throws InternalError.
double von_neumann_entropy(std::span<const double> eigenvalues);

/// (1/t) sum_{j>k} |rho(j,k)|, streamed from the amplitude arrays without
/// building rho. Zero at t = 0. Rows are summed in fixed blocks and the
/// block sums reduced in order, so the result does not depend on `threads`.
double l1_coherence_normalized(const WalkerState& state, unsigned threads = 1);

/// S(rho_diag) - S(rho) = H(p) - S(G), in nats.
double relative_entropy_coherence(const WalkerState& state);

struct CoherenceRecord {
    int step = 0;
    double c_l1 = 0.0;
    double c_re = 0.0;
};

} // namespace qwalk
