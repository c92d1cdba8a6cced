#include "wreath/generator_set.hpp"

#include <algorithm>
#include <set>

#include "wreath/errors.hpp"

namespace wreath {

GeneratorSet::GeneratorSet(const WreathGroup& group, std::vector<Generator> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) throw InputError("generating set is empty");
  std::set<std::string> labels;
  for (const auto& g : generators_) {
    if (g.element.group_id() != group.id()) throw SpecMismatchError("generator '" + g.label + "' is over another group");
    if (g.element.is_identity()) throw InputError("generator '" + g.label + "' is the identity");
    if (!labels.insert(g.label).second) throw InputError("duplicate generator label '" + g.label + "'");
  }
  alphabet_ = generators_;
  for (const auto& g : generators_) {
    WreathElement inv = group.inverse(g.element);
    const bool present = std::any_of(alphabet_.begin(), alphabet_.end(),
                                     [&](const Generator& x) { return x.element == inv; });
    if (!present) alphabet_.push_back({g.label + "^-1", std::move(inv)});
  }
}

std::string GeneratorSet::describe() const {
  std::string out;
  for (const auto& g : generators_) {
    if (!out.empty()) out += ',';
    out += g.label;
  }
  return out;
}

GeneratorSet standard_genset(const WreathGroup& group, std::int64_t lamp_index) {
  std::vector<Generator> gens;
  const std::string a = "a" + std::to_string(lamp_index);
  if (group.lamps().kind() == LampGroup::Kind::table) {
    const auto m = *group.lamps().order();
    for (std::uint64_t x = 1; x < m; ++x) {
      gens.push_back({a + "=" + std::to_string(x), group.lamp(lamp_index, static_cast<LampValue>(x))});
    }
  } else {
    gens.push_back({a, group.lamp(lamp_index, 1)});
  }
  gens.push_back({"t", group.t(1)});
  GeneratorSet set(group, std::move(gens));
  set.standard_index_ = lamp_index;
  return set;
}

}  // namespace wreath
