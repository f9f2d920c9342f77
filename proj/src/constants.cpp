#include "warpcheck/constants.hpp"

#include <stdexcept>

namespace warpcheck {

void ConstantRegistry::add(DefinableConstant c) {
  std::string name = c.name;
  by_name_.insert_or_assign(std::move(name), std::move(c));
}

const DefinableConstant& ConstantRegistry::get(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end())
    throw std::invalid_argument("unknown constant: " + name);
  return it->second;
}

std::set<std::string> ConstantRegistry::names() const {
  std::set<std::string> out;
  for (const auto& [name, c] : by_name_) out.insert(name);
  return out;
}

WarpAssignment ConstantRegistry::values() const {
  WarpAssignment out;
  for (const auto& [name, c] : by_name_) out.emplace(name, c.value);
  return out;
}

ConstantRegistry builtin_constants() {
  ConstantRegistry reg;

  DefinableConstant bot;
  bot.name = "bot";
  bot.value = RegularWarp::bottom();
  bot.graph = [](FOTerm, FOTerm y, const std::function<FOTerm()>&) {
    return fo_eq(y, FOTerm::zero());
  };
  bot.last_at = [](FOTerm z, const std::function<FOTerm()>&) {
    return fo_eq(z, FOTerm::zero());
  };
  reg.add(std::move(bot));

  DefinableConstant top;
  top.name = "top";
  top.value = RegularWarp::top();
  top.graph = [](FOTerm x, FOTerm y, const std::function<FOTerm()>&) {
    return fo_and({fo_implies(fo_eq(x, FOTerm::zero()), fo_eq(y, FOTerm::zero())),
                   fo_implies(fo_lt(FOTerm::zero(), x), fo_eq(y, FOTerm::omega_c()))});
  };
  top.last_at = [](FOTerm z, const std::function<FOTerm()>&) {
    return fo_eqsuc(z, FOTerm::zero()); // z = S(0), i.e. the sup is reached at 1
  };
  reg.add(std::move(top));

  return reg;
}

} // namespace warpcheck
