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

#ifndef DIMERQC_CLI_INTERNAL_HPP
#define DIMERQC_CLI_INTERNAL_HPP

#include <set>
#include <string>

#include "json.hpp"

namespace dimerqc::cli::detail {

using nlohmann::json;

json parse_json(const std::string& text, const std::string& what);

std::string read_file(const std::string& path);

/// Throws ConfigError if obj (at location) has a key outside allowed.
void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& location);

double number_at(const json& obj, const std::string& key, const std::string& location);

double number_or(const json& obj, const std::string& key, double fallback,
                 const std::string& location);

std::string string_or(const json& obj, const std::string& key, const std::string& fallback,
                      const std::string& location);

}  // namespace dimerqc::cli::detail

#endif  // DIMERQC_CLI_INTERNAL_HPP
