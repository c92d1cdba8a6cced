#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <limits>

#include "wreath/cli.hpp"
#include "wreath/dc.hpp"
#include "wreath/errors.hpp"
#include "wreath/finite_group_table.hpp"

#ifndef WREATH_TABLE_DIR
#define WREATH_TABLE_DIR "data/tables"
#endif

namespace wreath::cli {

namespace {

[[noreturn]] void syntax_error(const std::string& text, std::size_t pos, const std::string& what) {
  throw InputError("group spec '" + text + "', column " + std::to_string(pos + 1) + ": " + what);
}

constexpr std::string_view kSuffix = "wrZ";
constexpr std::string_view kTablePrefix = "table:";

std::filesystem::path resolve_table(const std::string& name) {
  std::filesystem::path path(name);
  if (std::filesystem::exists(path)) return path;
  for (const auto& candidate : {std::filesystem::path(WREATH_TABLE_DIR) / name,
                                std::filesystem::path(WREATH_TABLE_DIR) / (name + ".txt")}) {
    if (std::filesystem::exists(candidate)) return candidate;
  }
  throw InputError("table file '" + name + "' not found (also looked in " WREATH_TABLE_DIR ")");
}

}  // namespace

LampGroup parse_group_spec(const std::string& text) {
  if (text.empty()) syntax_error(text, 0, "empty group spec");
  if (text.rfind(kTablePrefix, 0) == 0) {
    if (text.size() < kTablePrefix.size() + kSuffix.size() || text.compare(text.size() - 3, 3, kSuffix) != 0) {
      syntax_error(text, text.size(), "expected 'wrZ' after the table path");
    }
    const std::string path = text.substr(kTablePrefix.size(), text.size() - kTablePrefix.size() - kSuffix.size());
    if (path.empty()) syntax_error(text, kTablePrefix.size(), "empty table path");
    return LampGroup::table(FiniteGroupTable::load(resolve_table(path)));
  }

  std::size_t pos = 0;
  std::optional<std::uint64_t> q;
  if (text[0] == 'Z') {
    pos = 1;
  } else if (text[0] == 'C') {
    pos = 1;
    const std::size_t digits_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_begin) syntax_error(text, pos, "expected the cyclic order after 'C'");
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(text.data() + digits_begin, text.data() + pos, value);
    if (ec != std::errc() || value > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max())) {
      syntax_error(text, digits_begin, "cyclic order out of range");
    }
    if (value < 2) syntax_error(text, digits_begin, "cyclic lamp group must be non-trivial (q >= 2)");
    q = value;
  } else {
    syntax_error(text, 0, "expected 'C<q>wrZ', 'ZwrZ' or 'table:<path>wrZ'");
  }
  if (text.compare(pos, std::string::npos, kSuffix) != 0) {
    std::size_t bad = pos;
    while (bad < text.size() && bad - pos < kSuffix.size() && text[bad] == kSuffix[bad - pos]) ++bad;
    syntax_error(text, bad, "expected 'wrZ'");
  }
  return q ? LampGroup::cyclic(static_cast<LampValue>(*q)) : LampGroup::integers();
}

std::size_t default_radius(const LampGroup& lamps) {
  switch (lamps.kind()) {
    case LampGroup::Kind::cyclic:
      return *lamps.order() == 2 ? 14 : 10;
    case LampGroup::Kind::integers:
      return 10;
    case LampGroup::Kind::table:
      return *lamps.order() >= 6 ? 6 : 8;
  }
  return 8;
}

WreathElement parse_element(const WreathGroup& group, const GeneratorSet& gens, const std::string& text) {
  WreathElement out = group.identity();
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> WreathElement {
    throw InputError("element '" + text + "', column " + std::to_string(pos + 1) + ": " + what);
  };
  auto is_sep = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == '*'; };
  if (std::all_of(text.begin(), text.end(), is_sep)) fail("empty word; write 'e' for the identity");
  while (true) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos == text.size()) break;
    const std::size_t begin = pos;
    while (pos < text.size() && !is_sep(text[pos]) && text[pos] != '^') ++pos;
    const std::string label = text.substr(begin, pos - begin);
    std::int64_t exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const std::size_t exp_begin = pos;
      if (pos < text.size() && text[pos] == '-') ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      const auto [end, ec] = std::from_chars(text.data() + exp_begin, text.data() + pos, exponent);
      if (ec != std::errc() || end != text.data() + pos) {
        pos = exp_begin;
        fail("expected an integer exponent");
      }
    }
    if (label == "e") continue;
    const Generator* gen = nullptr;
    for (const auto& g : gens.alphabet())
      if (g.label == label) gen = &g;
    if (!gen) {
      pos = begin;
      std::string labels;
      for (const auto& g : gens.alphabet()) labels += (labels.empty() ? "" : " ") + g.label;
      fail("unknown generator '" + label + "' (known: " + labels + ")");
    }
    out = group.multiply(out, group.power(gen->element, exponent));
  }
  return out;
}

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw InputError("unknown format '" + text + "' (expected csv or json)");
}

void RunConfig::validate() const {
  bool known = false;
  for (const auto& c : commands()) known = known || c == command;
  if (!known) throw InputError("unknown command '" + command + "'");
  if (element_budget && *element_budget == 0) throw InputError("element budget must be positive");
  if (pair_budget == 0) throw InputError("pair budget must be positive");
  if (method) {
    if (command == "dc") {
      parse_pair_method(*method);
    } else if (command == "conj-dc") {
      if (*method != "both" && *method != "invariant" && *method != "saturation") {
        throw InputError("conj-dc method must be both, invariant or saturation, got '" + *method + "'");
      }
    } else {
      throw InputError("--method applies only to dc and conj-dc");
    }
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] <= 0 || (i > 0 && exponents[i] <= exponents[i - 1])) {
      throw InputError("exponents must be positive and strictly increasing");
    }
  }
}

std::uint64_t effective_element_budget(const RunConfig& config) {
  if (config.element_budget) return *config.element_budget;
  if (const char* env = std::getenv(kBudgetEnv); env && *env) {
    std::uint64_t value = 0;
    const std::string_view s(env);
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || end != s.data() + s.size() || value == 0) {
      throw InputError(std::string(kBudgetEnv) + "='" + env + "' is not a positive integer");
    }
    return value;
  }
  return kDefaultElementBudget;
}

}  // namespace wreath::cli
