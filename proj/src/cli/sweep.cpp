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

#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#include "dimerqc/cli.hpp"
#include "dimerqc/errors.hpp"
#include "internal.hpp"

namespace dimerqc::cli {

namespace {

using detail::json;

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

json json_number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

struct Row {
    std::vector<double> params;
    std::vector<double> values;
    std::string reference;
    std::optional<double> paper_value;
    std::optional<double> deviation;
    std::string status = "ok";
};

Row evaluate_point(const Observable& o, const ParamMap& p) {
    Row row;
    for (const auto& name : o.parameters) row.params.push_back(p.at(name));
    try {
        row.values = o.evaluate(p);
        for (double v : row.values)
            if (!std::isfinite(v)) row.status = "non-finite";
        if (const auto anchor = o.paper(p)) {
            const auto& [ref, column, value] = *anchor;
            row.reference = ref;
            row.paper_value = value;
            for (std::size_t i = 0; i < o.outputs.size(); ++i)
                if (o.outputs[i] == column) row.deviation = (row.values[i] - value) / value;
        }
    } catch (const Error& e) {
        row.values.assign(o.outputs.size(), std::numeric_limits<double>::quiet_NaN());
        row.status = std::string("error: ") + e.what();
    }
    return row;
}

std::string render_csv(const Row& r) {
    std::string line;
    for (double v : r.params) line += format_double(v) + ",";
    for (double v : r.values) line += format_double(v) + ",";
    line += csv_field(r.reference) + ",";
    line += (r.paper_value ? format_double(*r.paper_value) : "") + ",";
    line += (r.deviation ? format_double(*r.deviation) : "") + ",";
    line += csv_field(r.status);
    return line + "\n";
}

std::string render_json(const Observable& o, const Row& r) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < o.parameters.size(); ++i)
        obj[o.parameters[i]] = json_number(r.params[i]);
    for (std::size_t i = 0; i < o.outputs.size(); ++i)
        obj[o.outputs[i]] = json_number(r.values[i]);
    obj["paper_reference"] = r.reference;
    obj["paper_value"] = r.paper_value ? json_number(*r.paper_value) : json(nullptr);
    obj["relative_deviation"] = r.deviation ? json_number(*r.deviation) : json(nullptr);
    obj["status"] = r.status;
    return obj.dump();
}

std::vector<ParamMap> expand_grid(const Observable& o, const SweepConfig& cfg) {
    ParamMap base = o.defaults;
    for (const auto& [k, v] : cfg.fixed) base[k] = v;
    std::vector<ParamMap> points{base};
    for (const auto& [name, axis] : cfg.grid) {
        std::vector<ParamMap> next;
        next.reserve(points.size() * axis.size());
        for (const auto& p : points) {
            for (double v : axis) {
                ParamMap q = p;
                q[name] = v;
                next.push_back(std::move(q));
            }
        }
        points = std::move(next);
    }
    return points;
}

}  // namespace

int worker_count() {
    if (const char* env = std::getenv("DIMERQC_WORKERS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n >= 1 && n <= 1024) return static_cast<int>(n);
        throw ConfigError("DIMERQC_WORKERS: expected an integer in [1, 1024]");
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

int run_sweep(const SweepConfig& cfg, std::ostream& out, int workers) {
    const Observable* obs = nullptr;
    for (const auto& o : observables())
        if (o.name == cfg.observable) obs = &o;
    if (!obs) throw ConfigError("config.observable: unknown observable '" + cfg.observable + "'");
    const Observable& o = *obs;
    const bool as_json = cfg.format == "json";
    const std::vector<ParamMap> points = expand_grid(o, cfg);

    if (as_json) {
        out << "[\n";
    } else {
        std::string header;
        for (const auto& p : o.parameters) header += p + ",";
        for (const auto& v : o.outputs) header += v + ",";
        out << header << "paper_reference,paper_value,relative_deviation,status\n";
    }
    out.flush();

    // Workers fill slots; this thread writes them strictly in grid order.
    std::vector<std::optional<Row>> slots(points.size());
    std::mutex mu;
    std::condition_variable ready;
    std::size_t next_index = 0;
    auto work = [&] {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard lock(mu);
                if (next_index >= points.size()) return;
                i = next_index++;
            }
            Row row = evaluate_point(o, points[i]);
            {
                std::lock_guard lock(mu);
                slots[i] = std::move(row);
            }
            ready.notify_one();
        }
    };
    std::vector<std::jthread> pool;
    const int n = std::max(1, std::min<int>(workers, static_cast<int>(points.size())));
    for (int w = 0; w < n; ++w) pool.emplace_back(work);

    int flagged = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Row row;
        {
            std::unique_lock lock(mu);
            ready.wait(lock, [&] { return slots[i].has_value(); });
            row = std::move(*slots[i]);
            slots[i].reset();
        }
        if (row.status != "ok") ++flagged;
        if (as_json) {
            out << "  " << render_json(o, row) << (i + 1 < points.size() ? ",\n" : "\n");
        } else {
            out << render_csv(row);
        }
        out.flush();
    }
    if (as_json) out << "]\n";
    out.flush();
    return flagged;
}

int cmd_sweep(const std::string& config_path, const std::string& out_path,
              const std::vector<std::string>& overrides, std::ostream& err) {
    SweepConfig cfg;
    int workers = 1;
    try {
        cfg = parse_sweep_config(detail::read_file(config_path));
        std::vector<std::string> params;
        for (const auto& item : overrides) {
            if (item.rfind("format=", 0) == 0) {
                cfg.format = item.substr(7);
                if (cfg.format != "csv" && cfg.format != "json")
                    throw ConfigError("--set format: expected 'csv' or 'json'");
            } else {
                params.push_back(item);
            }
        }
        apply_overrides(cfg, params);
        workers = worker_count();
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        err << "error: cannot write '" << out_path << "'\n";
        return kExitUsage;
    }
    const int flagged = run_sweep(cfg, out, workers);
    if (flagged > 0) err << "warning: " << flagged << " row(s) flagged\n";
    return kExitOk;
}

}  // namespace dimerqc::cli
