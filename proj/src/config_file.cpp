#include "cuqoe/config_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "cuqoe/errors.hpp"

namespace cuqoe {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double to_double(const std::string& key, std::string_view text) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError("config: key '" + key + "' expects a number, got '" + std::string(text) + "'");
    }
    return value;
}

bool to_bool(const std::string& key, std::string_view text) {
    if (text == "true" || text == "1" || text == "yes") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no") {
        return false;
    }
    throw ConfigError("config: key '" + key + "' expects true or false, got '" + std::string(text) + "'");
}

std::vector<std::string_view> split_list(std::string_view text) {
    std::vector<std::string_view> items;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = trim(text.substr(0, comma));
        if (!item.empty()) {
            items.push_back(item);
        }
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return items;
}

class Reader {
public:
    explicit Reader(const KeyValues& kv) : kv_(kv) {}

    std::optional<std::string> text(const std::string& key) {
        used_.insert(key);
        const auto it = kv_.find(key);
        if (it == kv_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    std::optional<double> number(const std::string& key) {
        const auto t = text(key);
        if (!t) {
            return std::nullopt;
        }
        return to_double(key, *t);
    }

    double required(const std::string& key) {
        const auto v = number(key);
        if (!v) {
            throw ConfigError("config: missing required key '" + key + "'");
        }
        return *v;
    }

    void reject_unknown() const {
        for (const auto& [key, value] : kv_) {
            if (!used_.contains(key)) {
                throw ConfigError("config: unknown key '" + key + "'");
            }
        }
    }

private:
    const KeyValues& kv_;
    std::set<std::string> used_;
};

SweptVariable parse_swept(std::string_view s) {
    if (s == "a_H") return SweptVariable::AccelHot;
    if (s == "R_hot") return SweptVariable::RadiusHot;
    if (s == "delta_E") return SweptVariable::GapDifference;
    throw ConfigError("config: swept must be a_H, R_hot or delta_E, got '" + std::string(s) + "'");
}

SeriesVariable parse_series(std::string_view s) {
    if (s == "p") return SeriesVariable::Population;
    if (s == "v") return SeriesVariable::Speed;
    if (s == "a_H") return SeriesVariable::AccelHot;
    if (s == "none") return SeriesVariable::None;
    throw ConfigError("config: series must be p, v or a_H, got '" + std::string(s) + "'");
}

SweepOutput parse_output(std::string_view s) {
    if (s == "delta_p_H") return SweepOutput::DeltaPHot;
    if (s == "p_cyc") return SweepOutput::PCyc;
    if (s == "W_ext") return SweepOutput::WExt;
    if (s == "efficiency") return SweepOutput::Efficiency;
    if (s == "ledger") return SweepOutput::Ledger;
    if (s == "T_H") return SweepOutput::DurationHot;
    if (s == "T_C") return SweepOutput::DurationCold;
    if (s == "gamma") return SweepOutput::Gamma;
    throw ConfigError("config: unknown output '" + std::string(s) + "'");
}

std::optional<double> parse_population(Reader& r) {
    const auto p = r.text("p");
    if (!p || *p == "cyc") {
        return std::nullopt;
    }
    return to_double("p", *p);
}

}  // namespace

KeyValues parse_key_values(std::istream& in) {
    KeyValues kv;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) {
            continue;
        }
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key(trim(view.substr(0, eq)));
        const std::string value(trim(view.substr(eq + 1)));
        if (key.empty() || value.empty()) {
            throw ConfigError("config line " + std::to_string(line_no) + ": empty key or value");
        }
        if (!kv.emplace(key, value).second) {
            throw ConfigError("config line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        }
    }
    return kv;
}

KeyValues read_key_values(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw ConfigError("config: cannot open '" + path + "'");
    }
    return parse_key_values(file);
}

SweepSpec sweep_spec_from(const KeyValues& kv) {
    Reader r(kv);
    SweepSpec spec;
    if (const auto name = r.text("name")) {
        spec.name = *name;
    }
    const auto swept = r.text("swept");
    if (!swept) {
        throw ConfigError("config: missing required key 'swept'");
    }
    spec.swept = parse_swept(*swept);
    spec.grid.min = r.required("min");
    spec.grid.max = r.required("max");
    const double count = r.required("count");
    if (!(count >= 2.0) || count != static_cast<double>(static_cast<std::size_t>(count))) {
        throw ConfigError("config: count must be an integer >= 2");
    }
    spec.grid.count = static_cast<std::size_t>(count);
    if (const auto spacing = r.text("spacing")) {
        if (*spacing == "log") {
            spec.grid.spacing = GridSpacing::Log;
        } else if (*spacing != "linear") {
            throw ConfigError("config: spacing must be linear or log");
        }
    }

    spec.speed = r.required("v");
    spec.accel_hot = r.number("a_H");
    spec.radius_hot = r.number("R_hot");
    spec.accel_cold = r.number("a_C");
    spec.radius_cold = r.number("R_cold");
    spec.gap_low = r.number("E1");
    spec.gap_high = r.number("E2");
    spec.gap_difference = r.number("delta_E");
    spec.population = parse_population(r);
    spec.duration_hot = r.number("T_H");
    if (const auto d = r.text("decoupled_T")) {
        spec.decoupled_duration = to_bool("decoupled_T", *d);
    }
    if (const auto s = r.text("series")) {
        spec.series = parse_series(*s);
    }
    if (const auto values = r.text("series_values")) {
        for (auto item : split_list(*values)) {
            spec.series_values.push_back(to_double("series_values", item));
        }
    }
    if (const auto outputs = r.text("outputs")) {
        for (auto item : split_list(*outputs)) {
            spec.outputs.push_back(parse_output(item));
        }
    } else {
        throw ConfigError("config: missing required key 'outputs'");
    }
    if (const auto oc = r.text("oracle_check")) {
        spec.oracle_check = to_bool("oracle_check", *oc);
    }
    r.reject_unknown();
    return spec;
}

CycleConfig cycle_config_from(const KeyValues& kv) {
    Reader r(kv);
    const double v = r.required("v");
    const auto a_hot = r.number("a_H");
    const auto r_hot = r.number("R_hot");
    const auto a_cold = r.number("a_C");
    const auto r_cold = r.number("R_cold");
    const double e1 = r.required("E1");
    const double e2 = r.required("E2");
    const auto population = parse_population(r);
    r.reject_unknown();

    if (a_hot.has_value() == r_hot.has_value() || a_cold.has_value() == r_cold.has_value()) {
        throw ConfigError("config: give exactly one of a_H/R_hot and one of a_C/R_cold");
    }
    try {
        const auto hot = a_hot ? CircularMotion::from_acceleration(v, *a_hot) : CircularMotion::from_radius(v, *r_hot);
        const auto cold =
            a_cold ? CircularMotion::from_acceleration(v, *a_cold) : CircularMotion::from_radius(v, *r_cold);
        return CycleConfig::from_motions(hot, cold, e1, e2, population);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
}

}  // namespace cuqoe
