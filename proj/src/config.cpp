#include "qwalk/config.hpp"

#include "qwalk/errors.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace qwalk {

namespace {

using json = nlohmann::ordered_json;

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::optional<double> to_double(std::string_view s)
{
    s = trim(s);
    if (s.empty()) {
        return std::nullopt;
    }
    // from_chars rejects a leading '+'.
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

template <typename Int>
Int parse_integer(std::string_view token, std::string_view what)
{
    const std::string_view s = trim(token);
    Int value{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw UsageError("invalid " + std::string(what) + ": '" + std::string(token) + "'");
    }
    return value;
}

template <typename Int>
Int integer_field(const json& j, const char* key)
{
    const json& v = j.at(key);
    if (v.is_string()) {
        return parse_integer<Int>(v.get<std::string>(), key);
    }
    if (!v.is_number_integer()) {
        throw UsageError(std::string("invalid ") + key + ": '" + v.dump() + "'");
    }
    if constexpr (std::is_unsigned_v<Int>) {
        if (v.is_number_unsigned()) {
            return v.get<Int>();
        }
        throw UsageError(std::string("invalid ") + key + ": '" + v.dump() + "'");
    } else {
        return v.get<Int>();
    }
}

double real_field(const json& j, const char* key, bool angle)
{
    const json& v = j.at(key);
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (angle) {
            return parse_angle(s);
        }
        if (auto d = to_double(s)) {
            return *d;
        }
        throw UsageError(std::string("invalid ") + key + ": '" + s + "'");
    }
    throw UsageError(std::string("invalid ") + key + ": '" + v.dump() + "'");
}

FitWindow fit_window_field(const json& v)
{
    std::vector<std::string> parts;
    if (v.is_array() && v.size() == 2) {
        for (const auto& e : v) {
            parts.push_back(e.is_string() ? e.get<std::string>() : e.dump());
        }
    } else if (v.is_string()) {
        const auto s = v.get<std::string>();
        const auto comma = s.find(',');
        if (comma == std::string::npos) {
            throw UsageError("invalid fit window: '" + s + "' (expected tmin,tmax)");
        }
        parts = {s.substr(0, comma), s.substr(comma + 1)};
    } else {
        throw UsageError("invalid fit window: '" + v.dump() + "'");
    }
    return FitWindow{parse_integer<int>(parts[0], "fit window start"), parse_integer<int>(parts[1], "fit window end")};
}

bool bool_field(const json& v, const char* key)
{
    if (v.is_boolean()) {
        return v.get<bool>();
    }
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "true" || s == "1") {
            return true;
        }
        if (s == "false" || s == "0") {
            return false;
        }
    }
    throw UsageError(std::string("invalid ") + key + ": '" + v.dump() + "'");
}

json read_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open config file '" + path + "'");
    }
    try {
        json j = json::parse(in);
        if (!j.is_object()) {
            throw UsageError("config file '" + path + "' must hold a JSON object");
        }
        // An emitted result file carries its settings under "config".
        if (j.contains("config") && j["config"].is_object()) {
            return j["config"];
        }
        return j;
    } catch (const json::parse_error& e) {
        throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
    }
}

} // namespace

std::string_view to_string(Walk walk) noexcept
{
    switch (walk) {
    case Walk::homogeneous: return "homogeneous";
    case Walk::accelerated: return "accelerated";
    case Walk::temporal: return "temporal";
    case Walk::spatial: return "spatial";
    case Walk::classical: return "classical";
    }
    return "unknown";
}

Walk parse_walk(std::string_view token)
{
    for (Walk w : {Walk::homogeneous, Walk::accelerated, Walk::temporal, Walk::spatial, Walk::classical}) {
        if (trim(token) == to_string(w)) {
            return w;
        }
    }
    throw UsageError("unknown walk '" + std::string(token) + "'");
}

ObservableSet parse_observables(std::string_view list)
{
    ObservableSet set;
    if (trim(list).empty()) {
        return set;
    }
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t end = std::min(list.find(',', start), list.size());
        const std::string_view item = trim(list.substr(start, end - start));
        if (item == "prob") {
            set.prob = true;
        } else if (item == "msd") {
            set.msd = true;
        } else if (item == "alpha") {
            set.alpha = true;
        } else if (item == "l1") {
            set.l1 = true;
        } else if (item == "re") {
            set.re = true;
        } else {
            throw UsageError("unknown observable '" + std::string(item) + "'");
        }
        start = end + 1;
    }
    return set;
}

std::string to_string(const ObservableSet& set)
{
    std::string out;
    auto add = [&](bool on, const char* name) {
        if (on) {
            out += out.empty() ? "" : ",";
            out += name;
        }
    };
    add(set.prob, "prob");
    add(set.msd, "msd");
    add(set.alpha, "alpha");
    add(set.l1, "l1");
    add(set.re, "re");
    return out;
}

double parse_angle(std::string_view token)
{
    const std::string_view s = trim(token);
    const auto bad = [&] { return UsageError("invalid angle '" + std::string(token) + "'"); };

    const std::size_t pi = s.find("pi");
    if (pi == std::string_view::npos) {
        if (auto v = to_double(s)) {
            return *v;
        }
        throw bad();
    }

    // [sign][coefficient][*]pi[/denominator]
    std::string_view coeff = s.substr(0, pi);
    std::string_view rest = s.substr(pi + 2);
    if (!coeff.empty() && coeff.back() == '*') {
        coeff.remove_suffix(1);
    }
    double factor = 1.0;
    if (coeff == "-") {
        factor = -1.0;
    } else if (coeff == "+" || coeff.empty()) {
        factor = 1.0;
    } else if (auto v = to_double(coeff)) {
        factor = *v;
    } else {
        throw bad();
    }
    double denominator = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/') {
            throw bad();
        }
        const auto d = to_double(rest.substr(1));
        if (!d || *d == 0.0) {
            throw bad();
        }
        denominator = *d;
    }
    return factor * std::numbers::pi / denominator;
}

RunConfig config_from_json(const json& j)
{
    if (!j.is_object()) {
        throw UsageError("configuration must be a JSON object");
    }
    static const std::vector<std::string> known = {"walk",   "steps",   "theta0", "accel",
                                                   "trials", "seed",    "observables", "fit_window",
                                                   "output", "format",  "distribution_output",
                                                   "drop_zeros", "threads"};
    for (const auto& item : j.items()) {
        if (std::find(known.begin(), known.end(), item.key()) == known.end()) {
            throw UsageError("unknown configuration key '" + item.key() + "'");
        }
    }

    RunConfig c;
    if (j.contains("walk")) {
        const json& w = j["walk"];
        c.walk = parse_walk(w.is_string() ? w.get<std::string>() : w.dump());
    }
    if (j.contains("steps")) {
        c.steps = integer_field<int>(j, "steps");
    }
    if (j.contains("theta0")) {
        c.theta0 = real_field(j, "theta0", true);
    }
    if (j.contains("accel")) {
        if (c.walk != Walk::accelerated) {
            throw UsageError("accel only applies to --walk accelerated, not '" + std::string(to_string(c.walk)) + "'");
        }
        c.accel = real_field(j, "accel", false);
    }
    c.trials = c.disordered() ? 100 : 1;
    if (j.contains("trials")) {
        c.trials = integer_field<int>(j, "trials");
    }
    if (j.contains("seed")) {
        c.seed = integer_field<std::uint64_t>(j, "seed");
    }
    if (j.contains("observables")) {
        const json& o = j["observables"];
        if (o.is_array()) {
            std::string joined;
            for (const auto& e : o) {
                joined += (joined.empty() ? "" : ",") + (e.is_string() ? e.get<std::string>() : e.dump());
            }
            c.observables = parse_observables(joined);
        } else if (o.is_string()) {
            c.observables = parse_observables(o.get<std::string>());
        } else {
            throw UsageError("invalid observables: '" + o.dump() + "'");
        }
    } else {
        c.observables = ObservableSet{.msd = true, .alpha = true};
        if (c.walk != Walk::classical) {
            c.observables.l1 = true;
            c.observables.re = true;
        }
    }
    if (j.contains("fit_window") && !j["fit_window"].is_null()) {
        c.fit_window = fit_window_field(j["fit_window"]);
    }
    if (j.contains("output")) {
        c.output = j["output"].get<std::string>();
    }
    if (j.contains("format")) {
        const auto f = j["format"].get<std::string>();
        if (f == "csv") {
            c.format = OutputFormat::csv;
        } else if (f == "json") {
            c.format = OutputFormat::json;
        } else {
            throw UsageError("unknown format '" + f + "'");
        }
    }
    if (j.contains("distribution_output")) {
        c.distribution_output = j["distribution_output"].get<std::string>();
    }
    if (j.contains("drop_zeros")) {
        c.drop_zeros = bool_field(j["drop_zeros"], "drop_zeros");
    }
    if (j.contains("threads")) {
        c.threads = integer_field<unsigned>(j, "threads");
    }

    if (c.steps < 1) {
        throw UsageError("steps must be >= 1, got '" + std::to_string(c.steps) + "'");
    }
    if (c.trials < 1) {
        throw UsageError("trials must be >= 1, got '" + std::to_string(c.trials) + "'");
    }
    if (c.walk == Walk::accelerated && !(c.accel >= 0.0)) {
        throw UsageError("accel must be >= 0, got '" + std::to_string(c.accel) + "'");
    }
    if (c.observables == ObservableSet{}) {
        throw UsageError("no observables selected");
    }
    if (c.walk == Walk::classical && c.observables.any_coherence()) {
        throw UsageError(std::string("observable '") + (c.observables.l1 ? "l1" : "re")
                         + "' is undefined for the classical walk");
    }
    if (c.fit_window) {
        const FitWindow w = *c.fit_window;
        if (w.t_min < 1 || w.t_max > c.steps || w.t_max <= w.t_min) {
            throw UsageError("fit window '" + std::to_string(w.t_min) + "," + std::to_string(w.t_max)
                             + "' must satisfy 1 <= tmin < tmax <= steps");
        }
    }
    return c;
}

json config_to_json(const RunConfig& c)
{
    json j;
    j["walk"] = std::string(to_string(c.walk));
    j["steps"] = c.steps;
    j["theta0"] = c.theta0;
    if (c.walk == Walk::accelerated) {
        j["accel"] = c.accel;
    }
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["observables"] = to_string(c.observables);
    if (c.fit_window) {
        j["fit_window"] = json::array({c.fit_window->t_min, c.fit_window->t_max});
    }
    j["format"] = c.format == OutputFormat::csv ? "csv" : "json";
    j["drop_zeros"] = c.drop_zeros;
    return j;
}

RunConfig parse_config(const std::vector<std::string>& args)
{
    CLI::App app{"Discrete-time quantum walk diffusion and coherence"};
    app.set_help_flag();

    std::string config_path;
    std::string walk, steps, theta0, accel, trials, seed, observables, fit_window, output, format, dist_output,
        threads;
    bool drop_zeros = false;

    app.add_option("--config", config_path, "JSON configuration file");
    auto* walk_opt = app.add_option("--walk", walk, "homogeneous|accelerated|temporal|spatial|classical");
    auto* steps_opt = app.add_option("--steps", steps, "number of steps");
    auto* theta_opt = app.add_option("--theta0", theta0, "coin angle (radians or e.g. pi/4)");
    auto* accel_opt = app.add_option("--accel", accel, "acceleration parameter a");
    auto* trials_opt = app.add_option("--trials", trials, "disorder trials");
    auto* seed_opt = app.add_option("--seed", seed, "master seed");
    auto* obs_opt = app.add_option("--observables", observables, "subset of prob,msd,alpha,l1,re");
    auto* fit_opt = app.add_option("--fit-window", fit_window, "tmin,tmax for the alpha fit");
    auto* out_opt = app.add_option("--output,-o", output, "output path, '-' for stdout");
    auto* fmt_opt = app.add_option("--format", format, "csv|json");
    auto* dist_opt = app.add_option("--distribution-output", dist_output, "path for the prob observable");
    auto* drop_opt = app.add_flag("--drop-zeros", drop_zeros, "omit numerically zero probabilities");
    auto* threads_opt = app.add_option("--threads", threads, "worker threads, 0 = all cores");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    json merged = config_path.empty() ? json::object() : read_config_file(config_path);
    auto overlay = [&](CLI::Option* opt, const char* key, const std::string& value) {
        if (opt->count() > 0) {
            merged[key] = value;
        }
    };
    if (walk_opt->count() > 0 && merged.contains("accel") && walk != "accelerated" && accel_opt->count() == 0) {
        merged.erase("accel");
    }
    overlay(walk_opt, "walk", walk);
    overlay(steps_opt, "steps", steps);
    overlay(theta_opt, "theta0", theta0);
    overlay(accel_opt, "accel", accel);
    overlay(trials_opt, "trials", trials);
    overlay(seed_opt, "seed", seed);
    overlay(obs_opt, "observables", observables);
    overlay(fit_opt, "fit_window", fit_window);
    overlay(out_opt, "output", output);
    overlay(fmt_opt, "format", format);
    overlay(dist_opt, "distribution_output", dist_output);
    overlay(threads_opt, "threads", threads);
    if (drop_opt->count() > 0) {
        merged["drop_zeros"] = true;
    }
    return config_from_json(merged);
}

EnsembleConfig to_ensemble_config(const RunConfig& config)
{
    EnsembleConfig e;
    switch (config.walk) {
    case Walk::homogeneous: e.walk.kind = ScheduleKind::homogeneous; break;
    case Walk::accelerated: e.walk.kind = ScheduleKind::accelerated; break;
    case Walk::temporal: e.walk.kind = ScheduleKind::temporal_disorder; break;
    case Walk::spatial: e.walk.kind = ScheduleKind::spatial_disorder; break;
    case Walk::classical: throw ValidationError("the classical walk is analytic and has no ensemble");
    }
    e.walk.theta0 = config.theta0;
    e.walk.acceleration = config.walk == Walk::accelerated ? config.accel : 0.0;
    e.trials = config.trials;
    e.master_seed = config.seed;
    e.steps = config.steps;
    e.record_msd = config.observables.msd || config.observables.alpha;
    e.record_c_l1 = config.observables.l1;
    e.record_c_re = config.observables.re;
    e.record_distribution = config.observables.prob;
    e.threads = config.threads;
    return e;
}

} // namespace qwalk
