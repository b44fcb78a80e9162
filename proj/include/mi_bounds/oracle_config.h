// Copyright 2026 The MI Bounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// JSON configuration for oracle runs. Schema:
//
//   {
//     "probs": [0.5, 0.3, ...],
//     "mechanism": {"type": "randomized_response", "flip_prob": 0.25}
//   }
//
// or, with an explicit table (rows ordered by ascending dataset mask):
//
//   {
//     "probs": [...],
//     "mechanism": {"type": "table", "outcomes": 3, "rows": [[...], ...]}
//   }

#ifndef MI_BOUNDS_ORACLE_CONFIG_H_
#define MI_BOUNDS_ORACLE_CONFIG_H_

#include <filesystem>
#include <string>

#include "mi_bounds/oracle.h"

namespace mi_bounds {

struct OracleConfig {
  Universe universe;
  FiniteMechanism mechanism;
};

// Parses a config from JSON text. Throws std::invalid_argument on schema or
// value errors.
OracleConfig ParseOracleConfig(const std::string& json_text);

// Loads a config file. Throws std::runtime_error when the file cannot be
// read, std::invalid_argument on schema or value errors.
OracleConfig LoadOracleConfig(const std::filesystem::path& path);

}  // namespace mi_bounds

#endif  // MI_BOUNDS_ORACLE_CONFIG_H_
