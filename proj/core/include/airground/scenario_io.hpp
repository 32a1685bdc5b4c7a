// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The airground Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "airground/errors.hpp"
#include "airground/scenario.hpp"

#include <filesystem>
#include <string>

namespace airground {

/// Malformed or invalid scenario text. `what()` carries either the
/// line/column of a syntax error or the dotted path of the offending field.
class ScenarioError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// Parses and validates a YAML scenario document. Unknown keys are
/// rejected; omitted optional fields take their documented defaults.
Scenario parse_scenario(const std::string &text);

Scenario load_scenario(const std::filesystem::path &path);

/// Canonical YAML rendering with every default spelled out;
/// parse_scenario(emit_scenario(s)) == s for any valid s.
std::string emit_scenario(const Scenario &scenario);

/// Semantic checks shared by the parser and programmatic callers.
void validate_scenario(const Scenario &scenario);

} // namespace airground
