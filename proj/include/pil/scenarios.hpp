#pragma once

// Scenario runners. Each builds its arrangements, computes the quantities of
// interest and compares them to expected values exactly. Reports are plain
// JSON documents with sorted keys so that two runs are byte-identical.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pil/arrangement.hpp"
#include "pil/linalg.hpp"
#include "pil/powerideal.hpp"

namespace pil {

using json = nlohmann::json;

/// Where an expected value comes from: the published statement being
/// reproduced, or an independent derivation (hand computation, enumeration,
/// a standard identity).
enum class Provenance { Published, Derived };

const char* provenance_name(Provenance p);

class ScenarioReport {
 public:
  explicit ScenarioReport(std::string id) : id_(std::move(id)) {}

  const std::string& id() const { return id_; }
  bool passed() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }

  json& inputs() { return inputs_; }

  /// Record a computed quantity with no expectation attached.
  void record(const std::string& name, json value);

  /// Record a computed quantity and compare it exactly to `expected`.
  bool expect(const std::string& name, json actual, json expected, Provenance provenance);

  void set_elapsed_ms(double ms) { elapsed_ms_ = ms; }

  /// Folds a sub-report in under `prefix/`.
  void merge(const ScenarioReport& sub);

  json to_json() const;
  std::string to_text() const;

 private:
  std::string id_;
  json inputs_ = json::object();
  json results_ = json::object();
  json expected_ = json::object();
  json provenance_ = json::object();
  std::vector<std::string> failures_;
  std::optional<double> elapsed_ms_;
};

struct ScenarioOptions {
  std::size_t m = 3;
  std::uint64_t seed = 1;
  bool timing = false;
};

ScenarioReport scenario_prop1(const ScenarioOptions& opts);
ScenarioReport scenario_prop2(const ScenarioOptions& opts);
ScenarioReport scenario_prop3(const ScenarioOptions& opts);
ScenarioReport scenario_lemmas(const ScenarioOptions& opts);
ScenarioReport scenario_all(const ScenarioOptions& opts);

/// Dispatch by name: prop1, prop2, prop3, lemmas, all. Throws
/// std::invalid_argument for anything else.
ScenarioReport run_scenario(const std::string& name, const ScenarioOptions& opts);

// JSON helpers shared with the CLI.
json json_of(const Rational& q);
json json_of(std::span<const Rational> v);
json json_of(const Matrix& m);
json json_of(const Arrangement& a);
json json_of(const HilbertFunction& h);

}  // namespace pil
