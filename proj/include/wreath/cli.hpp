#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wreath/generator_set.hpp"
#include "wreath/lamp_group.hpp"

namespace wreath::cli {

inline constexpr const char* kToolName = "wreath-dc";
inline constexpr const char* kToolVersion = "0.1.0";

inline constexpr std::uint64_t kDefaultElementBudget = 5'000'000;
inline constexpr std::uint64_t kDefaultPairBudget = 1'000'000'000;
inline constexpr const char* kBudgetEnv = "WREATH_DC_BUDGET";

/// Grammar:  C<q>wrZ (q >= 2) | ZwrZ | table:<path>wrZ.
/// A table path that does not exist is also tried as a bundled table name,
/// so "table:S3wrZ" loads the bundled S3 table. Errors are InputError with
/// the 1-based column of the offending character, or TableAxiomError.
LampGroup parse_group_spec(const std::string& text);

/// Default radius per lamp group, sized for the default element budget.
std::size_t default_radius(const LampGroup& lamps);

/// A word over the alphabet labels, e.g. "a0 t", "t^-2 a0 t^2", "a0*t";
/// "e" is the identity. Powers apply to the preceding label.
WreathElement parse_element(const WreathGroup& group, const GeneratorSet& gens, const std::string& text);

enum class Format { csv, json };
Format parse_format(const std::string& text);

struct RunConfig {
  std::string command;
  std::string group;
  std::optional<std::size_t> radius;
  std::optional<std::string> method;
  Format format = Format::csv;
  unsigned workers = 0;  // 0: available parallelism
  std::optional<std::uint64_t> element_budget;  // falls back to WREATH_DC_BUDGET, then the default
  std::uint64_t pair_budget = kDefaultPairBudget;
  std::int64_t lamp_index = 0;
  std::size_t conjugator_radius = 8;
  std::optional<std::string> element;
  std::vector<std::int64_t> exponents;  // empty: the default exponents
  std::string predicate = "in_base";
  bool list = false;  // ball: list elements instead of per-radius counts

  /// Throws InputError on invalid settings.
  void validate() const;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {"ball", "growth", "dc", "conj-dc", "centralizer",
                                                 "tau",  "bounds", "comb", "density"};
  return names;
}

/// Element budget after applying the flag, then the environment.
std::uint64_t effective_element_budget(const RunConfig& config);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> notes;  // "# ..." trailer lines in CSV
};

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

enum ExitCode : int { kOk = 0, kTruncated = 1, kInputError = 2, kInvariantFailure = 3 };

struct RunResult {
  int exit_code = kOk;
  std::string output;  // rendered table; partial on truncation, empty on input errors
  std::string error;   // diagnostic for stderr
};

RunResult run(const RunConfig& config);

}  // namespace wreath::cli
