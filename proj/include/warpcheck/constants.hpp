#pragma once

#include "warpcheck/fo.hpp"
#include "warpcheck/warp.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>

namespace warpcheck {

/* A named warp usable in equations. The two formula builders axiomatise
   it inside generated constraints: graph(x, y) holds iff value(x) = y,
   and last_at(z) holds iff z is where the warp reaches its sup. Builders
   needing scratch variables draw them from fresh_aux. */
struct DefinableConstant {
  std::string name;
  RegularWarp value = RegularWarp::identity();
  std::function<FOPtr(FOTerm x, FOTerm y, const std::function<FOTerm()>& fresh_aux)> graph;
  std::function<FOPtr(FOTerm z, const std::function<FOTerm()>& fresh_aux)> last_at;
};

class ConstantRegistry {
public:
  void add(DefinableConstant c);
  bool contains(const std::string& name) const { return by_name_.count(name) != 0; }
  const DefinableConstant& get(const std::string& name) const;
  std::set<std::string> names() const;
  WarpAssignment values() const;

private:
  std::map<std::string, DefinableConstant> by_name_;
};

/* bot (constant zero) and top (w from 1 on). */
ConstantRegistry builtin_constants();

} // namespace warpcheck
