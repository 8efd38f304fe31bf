// Acceptance suite. `acceptance` runs every criterion; `acceptance N` runs
// criterion N only. One PASS/FAIL line per criterion; exit code 1 on any FAIL.

#include "oracles.hpp"

#include "qwalk/coherence.hpp"
#include "qwalk/ensemble.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/observables.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace qwalk;
using std::numbers::pi;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            notes.push_back("FAILED: " + what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

WalkerState symmetric_start(int horizon)
{
    return new_localized_state(CoinAmplitudes::symmetric(), horizon);
}

AveragedSeries ensemble(ScheduleKind kind, int trials, int steps, std::uint64_t seed, bool coherence,
                        double accel = 0.02)
{
    EnsembleConfig cfg;
    cfg.walk = {kind, pi / 4, accel};
    cfg.trials = trials;
    cfg.steps = steps;
    cfg.master_seed = seed;
    cfg.record_c_l1 = coherence;
    cfg.record_c_re = coherence;
    return run_ensemble(cfg);
}

// 1. Hand-derived one- and two-step values.
Outcome micro_oracles()
{
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const double tol = 1e-10;
    auto s = symmetric_start(4);
    const auto hom = CoinSchedule::homogeneous(pi / 4);

    step(s, hom);
    auto p = probability_distribution(s);
    out.require(std::abs(s.up_at(-1) - Amplitude{0.5, 0.5}) < tol, "psi_up(-1) = (1+i)/2");
    out.require(std::abs(s.down_at(1) - Amplitude{0.5, 0.5}) < tol, "psi_down(1) = (1+i)/2");
    out.require(std::abs(p.at(-1) - 0.5) < tol && std::abs(p.at(1) - 0.5) < tol, "p = {1/2, 1/2}");
    out.require(std::abs(l1_coherence_normalized(s)) < tol, "c_l1(1) = 0");
    out.require(std::abs(relative_entropy_coherence(s)) < tol, "c_re(1) = 0");

    step(s, hom);
    p = probability_distribution(s);
    const double r = 1.0 / (2.0 * std::sqrt(2.0));
    out.require(std::abs(s.up_at(-2) - Amplitude{r, r}) < tol && std::abs(s.up_at(0) - Amplitude{-r, r}) < tol
                    && std::abs(s.down_at(0) - Amplitude{-r, r}) < tol && std::abs(s.down_at(2) - Amplitude{r, r}) < tol,
                "two-step amplitudes");
    out.require(std::abs(p.at(-2) - 0.25) < tol && std::abs(p.at(0) - 0.5) < tol && std::abs(p.at(2) - 0.25) < tol,
                "p = {1/4, 1/2, 1/4}");
    const double l1 = l1_coherence_normalized(s);
    const double re = relative_entropy_coherence(s);
    // 1.5 ln 2 - S(3/4, 1/4)
    const double re_expected = 1.5 * std::log(2.0) + 0.75 * std::log(0.75) + 0.25 * std::log(0.25);
    out.require(std::abs(l1 - 0.25) < tol, fmt::format("c_l1(2) = 0.25, got {}", l1));
    out.require(std::abs(re - re_expected) < tol, fmt::format("c_re(2) = {:.10f}, got {:.10f}", re_expected, re));
    const double elapsed = seconds_since(t0);
    out.require(elapsed < 1.0, fmt::format("runtime {:.3f}s < 1s", elapsed));
    out.note(fmt::format("c_l1(2) = {:.12g}, c_re(2) = {:.12g}", l1, re));
    return out;
}

// 2. Exponent table, full-window OLS.
Outcome exponent_table()
{
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const int T = 100;
    const FitWindow window{1, T};

    auto alpha_of = [&](const AveragedSeries& s) { return fit_alpha(s.mean_msd_series(), window).alpha; };

    const double acc = alpha_of(ensemble(ScheduleKind::accelerated, 1, T, 0, false));
    const double hom = alpha_of(ensemble(ScheduleKind::homogeneous, 1, T, 0, false));
    const double temporal = alpha_of(ensemble(ScheduleKind::temporal_disorder, 100, T, 0, false));
    const double spatial = alpha_of(ensemble(ScheduleKind::spatial_disorder, 100, T, 0, false));

    MsdSeries classical;
    for (int t = 0; t <= T; ++t) {
        classical.steps.push_back(t);
        classical.msd.push_back(msd(measured_walk_distribution(t)));
    }
    const double cls = fit_alpha(classical, window).alpha;

    out.note(fmt::format("alpha acc={:.4f} hom={:.4f} temporal={:.4f} spatial={:.4f} classical={:.12f}", acc, hom,
                         temporal, spatial, cls));
    out.require(std::abs(acc - 1.85) <= 0.15, fmt::format("alpha_accelerated {:.4f} in 1.85 +- 0.15", acc));
    out.require(std::abs(hom - 1.64) <= 0.15, fmt::format("alpha_homogeneous {:.4f} in 1.64 +- 0.15", hom));
    out.require(std::abs(temporal - 0.99) <= 0.15, fmt::format("alpha_temporal {:.4f} in 0.99 +- 0.15", temporal));
    out.require(std::abs(spatial - 0.68) <= 0.20, fmt::format("alpha_spatial {:.4f} in 0.68 +- 0.20", spatial));
    out.require(std::abs(cls - 1.0) <= 1e-9, fmt::format("alpha_classical {:.12f} = 1 +- 1e-9", cls));

    for (std::uint64_t seed : {0ULL, 1ULL, 2ULL, 31337ULL, 0xFFFFFFFFFFFFFFFFULL}) {
        const double te = alpha_of(ensemble(ScheduleKind::temporal_disorder, 100, T, seed, false));
        const double sp = alpha_of(ensemble(ScheduleKind::spatial_disorder, 100, T, seed, false));
        out.require(acc > hom && hom > te && te > sp,
                    fmt::format("ordering acc > hom > temporal > spatial at seed {} ({:.3f} > {:.3f} > {:.3f} > {:.3f})",
                                seed, acc, hom, te, sp));
    }
    const double elapsed = seconds_since(t0);
    out.require(elapsed < 120.0, fmt::format("runtime {:.1f}s < 120s", elapsed));
    return out;
}

// 3. Homogeneous variance law.
Outcome variance_law()
{
    Outcome out;
    const auto traj = evolve(symmetric_start(100), CoinSchedule::homogeneous(pi / 4), 100);
    const double expected = (1.0 - std::sin(pi / 4)) * 100.0 * 100.0;
    const double got = traj.msd.back();
    out.note(fmt::format("msd(100) = {:.4f}, (1 - sin(pi/4)) 100^2 = {:.4f}", got, expected));
    out.require(std::abs(got - expected) / expected <= 0.15, "within 15%");
    return out;
}

// 4. Classical baseline variance.
Outcome classical_variance()
{
    Outcome out;
    for (int t : {1, 2, 10, 100}) {
        const double v = msd(measured_walk_distribution(t));
        out.require(std::abs(v - t) <= 1e-9 * t, fmt::format("variance({}) = {:.15g}", t, v));
    }
    return out;
}

// 5. Superdiffusive walks carry more coherence than spatial disorder.
Outcome coherence_vs_disorder()
{
    Outcome out;
    const int T = 100;
    const auto hom = ensemble(ScheduleKind::homogeneous, 1, T, 0, true);
    const auto acc = ensemble(ScheduleKind::accelerated, 1, T, 0, true);
    const auto spatial = ensemble(ScheduleKind::spatial_disorder, 100, T, 0, true);
    int violations = 0;
    for (std::size_t t = 10; t <= 100; ++t) {
        for (const auto* walk : {&hom, &acc}) {
            if (!(walk->c_l1->mean[t] > spatial.c_l1->mean[t]) || !(walk->c_re->mean[t] > spatial.c_re->mean[t])) {
                ++violations;
            }
        }
    }
    out.note(fmt::format("t=100: c_l1 hom={:.4f} acc={:.4f} spatial={:.4f}; c_re hom={:.4f} acc={:.4f} spatial={:.4f}",
                         hom.c_l1->mean[100], acc.c_l1->mean[100], spatial.c_l1->mean[100], hom.c_re->mean[100],
                         acc.c_re->mean[100], spatial.c_re->mean[100]));
    out.require(violations == 0, fmt::format("{} (walk, step) pairs where spatial disorder is not below", violations));
    return out;
}

// 6. Faster acceleration kills coherence sooner.
Outcome accelerated_decay()
{
    Outcome out;
    const int T = 500;
    const Recorder rec{.msd = false, .c_l1 = true, .c_re = true};
    std::vector<double> l1;
    std::vector<double> re;
    for (double a : {0.005, 0.05, 0.5}) {
        const auto traj = evolve(symmetric_start(T), CoinSchedule::accelerated(pi / 4, a), T, rec);
        l1.push_back(traj.c_l1.back());
        re.push_back(traj.c_re.back());
    }
    const auto hom = evolve(symmetric_start(T), CoinSchedule::homogeneous(pi / 4), T, rec);
    out.note(fmt::format("t=500 c_l1 a=0.005/0.05/0.5: {:.4g} {:.4g} {:.4g}; c_re hom {:.4f} vs {:.4f} {:.4f} {:.4f}",
                         l1[0], l1[1], l1[2], hom.c_re.back(), re[0], re[1], re[2]));
    out.require(l1[0] > l1[1] && l1[1] > l1[2], "c_l1(500) strictly decreasing in a");
    for (double v : re) {
        out.require(hom.c_re.back() > v, "homogeneous c_re(500) exceeds accelerated");
    }
    return out;
}

// 7. Fast kernels against dense reference computations.
Outcome oracle_equivalence()
{
    Outcome out;
    double worst_amp = 0.0;
    const int small = 6;
    for (const auto& schedule : {CoinSchedule::homogeneous(pi / 4), CoinSchedule::accelerated(pi / 4, 0.02),
                                 CoinSchedule::temporal_disorder(1, small), CoinSchedule::spatial_disorder(1, small)}) {
        auto s = symmetric_start(small);
        const int n = 2 * small + 1;
        for (int t = 1; t <= small; ++t) {
            step(s, schedule);
            const auto psi = oracle::dense_evolve(small, CoinAmplitudes::symmetric().c1, CoinAmplitudes::symmetric().c2,
                                                  schedule, t);
            for (int x = -small; x <= small; ++x) {
                worst_amp = std::max(worst_amp, std::abs(s.up_at(x) - psi(x + small)));
                worst_amp = std::max(worst_amp, std::abs(s.down_at(x) - psi(n + x + small)));
            }
        }
    }
    out.require(worst_amp < 1e-12, fmt::format("(a) amplitude deviation {:.3g} < 1e-12", worst_amp));

    double worst_s = 0.0;
    double worst_l1 = 0.0;
    const int T = 20;
    for (const auto& schedule : {CoinSchedule::homogeneous(pi / 4), CoinSchedule::accelerated(pi / 4, 0.02),
                                 CoinSchedule::temporal_disorder(2, T), CoinSchedule::spatial_disorder(2, T)}) {
        auto s = symmetric_start(T);
        for (int t = 1; t <= T; ++t) {
            step(s, schedule);
            const auto rho = oracle::materialized_rho(s);
            worst_s = std::max(worst_s, std::abs(von_neumann_entropy(gram_matrix(s).eigenvalues())
                                                 - oracle::entropy_full(rho)));
            worst_l1 = std::max(worst_l1, std::abs(l1_coherence_normalized(s) - oracle::l1_full(rho, t)));
        }
    }
    out.require(worst_s < 1e-10, fmt::format("(b) entropy deviation {:.3g} < 1e-10", worst_s));
    out.require(worst_l1 < 1e-10, fmt::format("(b) l1 deviation {:.3g} < 1e-10", worst_l1));
    return out;
}

// 8. Unitarity, symmetry, coherence bounds, parity.
Outcome invariants()
{
    Outcome out;
    const int T = 500;
    double worst_norm = 0.0;
    double worst_l1 = 0.0;
    double worst_re = 0.0;
    bool parity_ok = true;
    for (const auto& schedule : {CoinSchedule::homogeneous(pi / 4), CoinSchedule::accelerated(pi / 4, 0.02),
                                 CoinSchedule::temporal_disorder(3, T), CoinSchedule::spatial_disorder(3, T)}) {
        auto s = symmetric_start(T);
        for (int t = 1; t <= T; ++t) {
            step(s, schedule);
            worst_norm = std::max(worst_norm, std::abs(norm_squared(s) - 1.0));
            if (t % 25 == 0 || t <= 20) {
                const double l1 = l1_coherence_normalized(s);
                const double re = relative_entropy_coherence(s);
                worst_l1 = std::max({worst_l1, -l1, l1 - 1.0});
                worst_re = std::max({worst_re, -re, re - std::log(2.0 * t + 1.0)});
            }
            for (int x = -T; x <= T; ++x) {
                if (((x + t) % 2 != 0 || x < -t || x > t)
                    && (s.up_at(x) != Amplitude{} || s.down_at(x) != Amplitude{})) {
                    parity_ok = false;
                }
            }
        }
    }
    out.require(worst_norm < 1e-10, fmt::format("unitarity drift {:.3g} < 1e-10 over 500 steps", worst_norm));
    out.require(worst_l1 <= 0.0, "0 <= c_l1 <= 1");
    out.require(worst_re <= 0.0, "0 <= c_re <= ln(2t+1)");
    out.require(parity_ok, "parity and light-cone zeros exact");

    double worst_sym = 0.0;
    auto s = symmetric_start(T);
    const auto hom = CoinSchedule::homogeneous(pi / 4);
    for (int t = 1; t <= T; ++t) {
        step(s, hom);
        const auto p = probability_distribution(s);
        for (int x = 1; x <= t; ++x) {
            worst_sym = std::max(worst_sym, std::abs(p.at(x) - p.at(-x)));
        }
    }
    out.require(worst_sym < 1e-12, fmt::format("|p(x) - p(-x)| = {:.3g} < 1e-12", worst_sym));
    return out;
}

// 9. Byte-identical output for identical configurations.
Outcome determinism()
{
    Outcome out;
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "qwalk_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::vector<std::string> recipes = {
        "--walk spatial --steps 100 --trials 100 --seed 7 --observables prob,msd,alpha,l1,re --threads 4",
        "--walk temporal --steps 100 --trials 100 --seed 7 --format json --threads 3",
        "--walk accelerated --accel 0.02 --steps 100 --format json",
        "--walk classical --steps 100",
    };
    for (std::size_t i = 0; i < recipes.size(); ++i) {
        std::vector<std::string> outputs;
        for (int run = 0; run < 2; ++run) {
            const fs::path series = dir / fmt::format("r{}_{}.out", i, run);
            const fs::path dist = dir / fmt::format("r{}_{}_dist.csv", i, run);
            const std::string cmd = fmt::format("{} {} --output {} --distribution-output {} 2>/dev/null",
                                                QWALK_CLI_PATH, recipes[i], series.string(), dist.string());
            const int rc = std::system(cmd.c_str());
            out.require(rc == 0, "exit code 0 for: " + recipes[i]);
            outputs.push_back(slurp(series) + (fs::exists(dist) ? slurp(dist) : std::string{}));
        }
        out.require(!outputs[0].empty() && outputs[0] == outputs[1], "byte-identical rerun: " + recipes[i]);
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"hand-derived one/two-step oracles", micro_oracles},
        {"anomalous exponent table (full-window OLS)", exponent_table},
        {"homogeneous variance law", variance_law},
        {"classical baseline variance = t", classical_variance},
        {"coherence exceeds spatial disorder for t in [10,100]", coherence_vs_disorder},
        {"accelerated coherence decay ordering at t=500", accelerated_decay},
        {"dense-oracle equivalences", oracle_equivalence},
        {"invariant suite", invariants},
        {"byte-identical reruns", determinism},
    };

    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        selected.push_back(std::atoi(argv[i]));
    }
    if (selected.empty()) {
        for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) {
            selected.push_back(i);
        }
    }

    bool all = true;
    for (int id : selected) {
        if (id < 1 || id > static_cast<int>(criteria.size())) {
            std::cerr << "no criterion " << id << '\n';
            return 2;
        }
        const auto& [name, check] = criteria[static_cast<std::size_t>(id - 1)];
        const auto t0 = std::chrono::steady_clock::now();
        const Outcome o = check();
        std::cout << fmt::format("[{}] criterion {}: {} ({:.2f}s)\n", o.pass ? "PASS" : "FAIL", id, name,
                                 seconds_since(t0));
        for (const auto& n : o.notes) {
            std::cout << "       " << n << '\n';
        }
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
