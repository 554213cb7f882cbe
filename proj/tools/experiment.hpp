/*
 * Copyright 2026 The drinfeld-level Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Experiment configs, grid expansion and the four evidence commands shared
// by the command line tool, the acceptance suite and the Python module.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drinfeld/deformation.hpp"
#include "json.hpp"

namespace drinfeld::experiments {

using json = nlohmann::json;

enum class Command { Torsion, Equivalence, Tangent, Isogeny };

const char* to_string(Command c);
std::optional<Command> command_from_string(const std::string& name);

struct Bounds {
  std::uint64_t max_card = kDefaultMaxCard;
  /// Degree bound for isomorphisms in orbit searches; 0 means 2d.
  unsigned iso_degree = 0;
  unsigned split_degree = 12;
  unsigned char_degree = 4;
};

struct Config {
  Bounds bounds;
  /// Fully expanded case objects, explicit cases first, then the grid.
  std::vector<json> cases;
};

/**
 * Reads a config document:
 *
 *   { "bounds": {"max_card": 65536, "iso_degree": 0, "split_degree": 12,
 *                "char_degree": 4},
 *     "cases": [ {...}, ... ],
 *     "grid":  { "axes": ["p", "base", ...], "p": [2, 3], ... } }
 *
 * Every array-valued grid entry is a product axis; "axes" fixes the nesting
 * order (first slowest), default alphabetical. Scalars are shared by every
 * grid case. Throws ParseError with the offending field.
 */
Config parse_config(const json& doc);
Config load_config(const std::string& path);

/// The built-in config of each command (also shipped under configs/).
json default_config(Command c);

struct RunOptions {
  unsigned jobs = 1;
  std::optional<std::uint64_t> max_card;
};

struct RunResult {
  /// {"command", "payload", "payload_hash", "timing"}.
  json document;
  /// One flat row per case.
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::size_t failed = 0;
  std::size_t bound_exceeded = 0;
};

/// Runs every case. Case-level ParseError / InvalidArgument propagate (the
/// config is malformed); bound violations are reported per case.
RunResult run(Command c, const Config& config, const RunOptions& opts = {});

/// Deterministic serialisation used for files and the payload hash.
std::string dump(const json& j);
std::string to_csv(const RunResult& r);
std::uint64_t fnv1a(const std::string& bytes);
std::string hex64(std::uint64_t v);

// Building blocks, exposed for tests.
AlgebraPtr base_of(const json& c, std::uint64_t max_card, const std::string& where);
AlgebraElement element_of(const AlgebraPtr& B, const json& v, const std::string& where);
DrinfeldModule module_of(const AlgebraPtr& B, const json& c, const std::string& where);
/// "T^2+1", "irreducible:2", or coefficient arrays (low degree first).
APoly apoly_of(const GroundFieldPtr& F, const json& v, const std::string& where);
/// The ideal of a case: "ideal", or "prime" raised to "exponent" (default 1).
APoly ideal_of(const GroundFieldPtr& F, const json& c, const std::string& where);

}  // namespace drinfeld::experiments
