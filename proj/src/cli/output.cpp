// Copyright 2026 The dimerqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "dimerqc/cli.hpp"
#include "internal.hpp"

namespace dimerqc::cli {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> Trajectory::column(const std::string& name) const {
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c] != name) continue;
        std::vector<double> out;
        out.reserve(rows.size());
        for (const auto& r : rows) out.push_back(r[c]);
        return out;
    }
    throw ConfigError("trajectory has no column '" + name + "'");
}

void write_csv(const Trajectory& t, std::ostream& out) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c];
    out << '\n';
    for (const auto& r : t.rows) {
        for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << format_double(r[c]);
        out << '\n';
    }
}

namespace detail {

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(what + ": malformed JSON (" + e.what() + ")");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& location) {
    if (!obj.is_object()) throw ConfigError(location + ": expected an object");
    for (const auto& [key, value] : obj.items()) {
        if (allowed.count(key)) continue;
        std::string list;
        for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
        throw ConfigError(location + "." + key + ": unknown key (allowed: " + list + ")");
    }
}

double number_at(const json& obj, const std::string& key, const std::string& location) {
    if (!obj.contains(key)) throw ConfigError(location + "." + key + ": required");
    const json& v = obj.at(key);
    if (!v.is_number()) throw ConfigError(location + "." + key + ": expected a number");
    return v.get<double>();
}

double number_or(const json& obj, const std::string& key, double fallback,
                 const std::string& location) {
    return obj.contains(key) ? number_at(obj, key, location) : fallback;
}

std::string string_or(const json& obj, const std::string& key, const std::string& fallback,
                      const std::string& location) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_string()) throw ConfigError(location + "." + key + ": expected a string");
    return v.get<std::string>();
}

}  // namespace detail
}  // namespace dimerqc::cli
