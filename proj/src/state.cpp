#include "qwalk/state.hpp"

#include "qwalk/errors.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qwalk {

CoinAmplitudes CoinAmplitudes::symmetric()
{
    const double h = 1.0 / std::sqrt(2.0);
    return {Amplitude{h, 0.0}, Amplitude{h, 0.0}};
}

LatticeWindow::LatticeWindow(int horizon)
    : horizon_(horizon)
{
    if (horizon < 0) {
        throw ValidationError("lattice horizon must be >= 0, got " + std::to_string(horizon));
    }
}

WalkerState::WalkerState(LatticeWindow window, std::vector<Amplitude> up, std::vector<Amplitude> down, int step)
    : window_(window)
    , up_(std::move(up))
    , down_(std::move(down))
    , next_up_(window.sites())
    , next_down_(window.sites())
    , step_(step)
{
    if (up_.size() != window_.sites() || down_.size() != window_.sites()) {
        throw ValidationError("amplitude arrays must have 2*horizon+1 entries");
    }
    if (step < 0 || step > window_.horizon()) {
        throw ValidationError("state step " + std::to_string(step) + " outside [0, horizon]");
    }
    for (std::size_t i = 0; i < up_.size(); ++i) {
        const int x = window_.position(i);
        if ((x < -step || x > step) && (up_[i] != Amplitude{} || down_[i] != Amplitude{})) {
            throw ValidationError("nonzero amplitude at x=" + std::to_string(x) + " outside the light cone of step "
                                  + std::to_string(step));
        }
    }
}

void WalkerState::swap_buffers_and_advance() noexcept
{
    std::swap(up_, next_up_);
    std::swap(down_, next_down_);
    ++step_;
}

WalkerState new_localized_state(const CoinAmplitudes& coin, int horizon)
{
    const LatticeWindow window(horizon);
    const double norm = std::norm(coin.c1) + std::norm(coin.c2);
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-9) {
        throw ValidationError("coin amplitudes not normalized: |c1|^2+|c2|^2 = " + std::to_string(norm));
    }
    std::vector<Amplitude> up(window.sites());
    std::vector<Amplitude> down(window.sites());
    up[window.offset(0)] = coin.c1;
    down[window.offset(0)] = coin.c2;
    return WalkerState(window, std::move(up), std::move(down), 0);
}

double norm_squared(const WalkerState& state) noexcept
{
    double sum = 0.0;
    const auto up = state.up();
    const auto down = state.down();
    for (std::size_t i = 0; i < up.size(); ++i) {
        sum += std::norm(up[i]) + std::norm(down[i]);
    }
    return sum;
}

} // namespace qwalk
