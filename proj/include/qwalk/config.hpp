#pragma once

#include "qwalk/ensemble.hpp"
#include "qwalk/observables.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qwalk {

enum class Walk { homogeneous, accelerated, temporal, spatial, classical };
enum class OutputFormat { csv, json };

std::string_view to_string(Walk walk) noexcept;
Walk parse_walk(std::string_view token);

struct ObservableSet {
    bool prob = false;
    bool msd = false;
    bool alpha = false;
    bool l1 = false;
    bool re = false;

    bool any_coherence() const noexcept { return l1 || re; }
    friend bool operator==(const ObservableSet&, const ObservableSet&) = default;
};

/// Comma-separated subset of {prob, msd, alpha, l1, re}.
ObservableSet parse_observables(std::string_view list);
std::string to_string(const ObservableSet& set);

struct RunConfig {
    Walk walk = Walk::homogeneous;
    int steps = 100;
    double theta0 = 0.7853981633974483;
    double accel = 0.02;
    int trials = 1;
    std::uint64_t seed = 0;
    ObservableSet observables;
    /// Unset means the full series (1, steps).
    std::optional<FitWindow> fit_window;
    std::string output = "-";
    OutputFormat format = OutputFormat::csv;
    /// Where `prob` writes; empty derives a name from `output`.
    std::string distribution_output;
    bool drop_zeros = false;
    unsigned threads = 0;

    FitWindow effective_fit_window() const { return fit_window.value_or(FitWindow{1, steps}); }
    bool disordered() const noexcept { return walk == Walk::temporal || walk == Walk::spatial; }
};

/// Decimal radians or a rational multiple of pi: "pi/4", "3pi/4", "3*pi/4", "-pi".
double parse_angle(std::string_view token);

/// Parses command-line arguments (without the program name). A --config
/// JSON file supplies base values; explicit flags override it.
RunConfig parse_config(const std::vector<std::string>& args);

/// Builds a RunConfig from a JSON object with the same keys as the echo block.
RunConfig config_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json config_to_json(const RunConfig& config);

/// Walk spec and ensemble settings for a non-classical run.
EnsembleConfig to_ensemble_config(const RunConfig& config);

} // namespace qwalk
