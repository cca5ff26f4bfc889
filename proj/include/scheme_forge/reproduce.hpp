// Copyright 2026 The scheme-forge Authors
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

#ifndef SCHEME_FORGE_REPRODUCE_HPP
#define SCHEME_FORGE_REPRODUCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "scheme_forge/design.hpp"
#include "scheme_forge/eigenmatrix.hpp"
#include "scheme_forge/translation_scheme.hpp"

namespace scheme_forge {

inline constexpr const char* report_schema = "scheme-forge/1";

struct Assertion {
  std::string name;
  nlohmann::json expected;
  nlohmann::json computed;
  std::string provenance;
  bool pass = false;
};

struct ReproductionReport {
  std::string target;
  nlohmann::json options = nlohmann::json::object();
  std::vector<Assertion> assertions;
  /// Named eigenmatrices and designs, in insertion order.
  std::vector<std::pair<std::string, IntMatrix>> matrices;
  std::vector<std::pair<std::string, Incidence>> designs;
  nlohmann::json artifacts = nlohmann::json::object();
  /// Wall-clock seconds per stage.
  std::vector<std::pair<std::string, double>> timing;

  bool passed() const;
  /// Records an assertion comparing two JSON values for equality.
  void check(std::string name, nlohmann::json expected, nlohmann::json computed, std::string provenance);
};

struct ReproduceOptions {
  std::int64_t a = 1;
  std::optional<std::vector<std::uint32_t>> modulus;
};

/// Reproduction targets: example1, example2, example3, vls,
/// corollary-fusions, spread-amorphy.
const std::vector<std::string>& reproduction_targets();

/// Runs the named pipeline end to end. Throws std::invalid_argument for an
/// unknown target or an `a` that is not a unit modulo the class count of the
/// grouping. Mathematical mismatches become failing assertions.
ReproductionReport reproduce(const std::string& target, const ReproduceOptions& options = {});

/// Field, frame and grouped scheme behind a published example.
struct ExampleScheme {
  std::uint32_t p;
  std::uint32_t m;
  std::uint32_t e;
  std::uint32_t step;
  std::uint32_t count;
  std::uint32_t stride;
  /// `a` must be coprime to this.
  std::int64_t unit_modulus;
};

/// example1 | example2 | example3 | vls.
ExampleScheme example_scheme(const std::string& name);
TranslationScheme build_example_scheme(const std::string& name, const ReproduceOptions& options = {});

/// Printed class-4 eigenmatrices of the three published examples.
IntMatrix published_line_fusion(const std::string& example);

enum class ReportFormat { json, tsv, markdown };

ReportFormat parse_report_format(const std::string& s);

/// Deterministic serialization. Timing is wall-clock and therefore left out
/// unless asked for.
std::string emit(const ReproductionReport& report, ReportFormat format, bool include_timing = false);

/// Tab-separated rows, LF line endings.
std::string matrix_tsv(const IntMatrix& m);

nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const SrgReport& r);
/// One bitstring per block.
nlohmann::json to_json(const Incidence& m);

}  // namespace scheme_forge

#endif  // SCHEME_FORGE_REPRODUCE_HPP
