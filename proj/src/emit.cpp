#include "qwalk/emit.hpp"

#include "qwalk/errors.hpp"

#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <ostream>
#include <string_view>
#include <utility>
#include <vector>

namespace qwalk {

namespace {

using json = nlohmann::ordered_json;

struct Column {
    std::string_view name;
    const std::vector<double>* values;
};

std::vector<Column> columns_of(const AveragedSeries& series)
{
    std::vector<Column> cols;
    auto add = [&](const std::optional<SeriesStats>& stats, std::string_view mean, std::string_view sd) {
        if (stats) {
            cols.push_back({mean, &stats->mean});
            cols.push_back({sd, &stats->stddev});
        }
    };
    add(series.msd, "msd", "msd_std");
    add(series.c_l1, "c_l1", "c_l1_std");
    add(series.c_re, "c_re", "c_re_std");
    return cols;
}

// Round-trips through the 12-digit text so JSON numbers match the CSV.
double rounded(double value)
{
    return std::stod(format_real(value));
}

template <typename Writer>
void with_output(const std::string& path, Writer&& write)
{
    if (path == "-") {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    write(out);
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

} // namespace

std::string format_real(double value)
{
    return fmt::format("{:.12g}", value);
}

void write_timeseries(std::ostream& out, const AveragedSeries& series, OutputFormat format, const json& meta)
{
    const auto cols = columns_of(series);
    if (cols.empty()) {
        throw ValidationError("time series has no recorded observables");
    }
    const std::size_t rows = cols.front().values->size();

    if (format == OutputFormat::csv) {
        std::string text = "step";
        for (const auto& c : cols) {
            text += ',';
            text += c.name;
        }
        text += '\n';
        for (std::size_t r = 0; r < rows; ++r) {
            text += std::to_string(r);
            for (const auto& c : cols) {
                text += ',';
                text += format_real((*c.values)[r]);
            }
            text += '\n';
        }
        out << text;
        return;
    }

    json doc = json::object();
    if (meta.is_object()) {
        for (const auto& item : meta.items()) {
            doc[item.key()] = item.value();
        }
    }
    json data = json::object();
    json steps = json::array();
    for (std::size_t r = 0; r < rows; ++r) {
        steps.push_back(r);
    }
    data["step"] = std::move(steps);
    for (const auto& c : cols) {
        json arr = json::array();
        for (double v : *c.values) {
            arr.push_back(rounded(v));
        }
        data[std::string(c.name)] = std::move(arr);
    }
    doc["trials"] = series.trials;
    doc["series"] = std::move(data);
    out << doc.dump(2) << '\n';
}

void emit_timeseries(const AveragedSeries& series, OutputFormat format, const std::string& path, const json& meta)
{
    with_output(path, [&](std::ostream& out) { write_timeseries(out, series, format, meta); });
}

void write_distribution(std::ostream& out, const PositionDistribution& dist, bool drop_zeros)
{
    std::string text = "position,probability\n";
    for (std::size_t i = 0; i < dist.p.size(); ++i) {
        if (drop_zeros && dist.p[i] < 1e-15) {
            continue;
        }
        text += std::to_string(dist.window.position(i));
        text += ',';
        text += format_real(dist.p[i]);
        text += '\n';
    }
    out << text;
}

void emit_distribution(const PositionDistribution& dist, const std::string& path, bool drop_zeros)
{
    with_output(path, [&](std::ostream& out) { write_distribution(out, dist, drop_zeros); });
}

} // namespace qwalk
