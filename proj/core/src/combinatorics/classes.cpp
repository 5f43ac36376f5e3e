#include "gph/combinatorics/classes.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace gph::comb {

std::vector<EchelonClass> partition_classes(int n, int cap) {
  std::map<CollisionMap, std::vector<EchelonClass::Member>> groups;
  for (const CollisionMap& m : enumerate_maps(n, cap)) {
    Reduction red = reduce_to_echelon(m);
    groups[red.echelon].push_back(EchelonClass::Member{m, red.perm, red.moves});
  }
  std::vector<EchelonClass> out;
  out.reserve(groups.size());
  for (auto& [rep, members] : groups) {
    std::set<std::vector<int>> perms;
    for (const auto& mem : members)
      if (!perms.insert(mem.perm.one_line()).second)
        throw std::logic_error("partition_classes: duplicate permutation within a class");
    out.push_back(EchelonClass{rep, std::move(members)});
  }
  return out;
}

double SimplexDomain::measure() const {
  if (perms.empty() || t1 <= 0.0) return 0.0;
  double simplex = 1.0;
  const int n = perms.front().size();
  for (int i = 1; i <= n; ++i) simplex *= t1 / i;
  return static_cast<double>(perms.size()) * simplex;
}

SimplexDomain build_domain(const EchelonClass& cls, double t1) {
  if (cls.members.empty()) throw std::invalid_argument("build_domain: empty class");
  if (t1 < 0.0) throw std::invalid_argument("build_domain: t1 must be >= 0");
  SimplexDomain d;
  d.t1 = t1;
  d.perms.reserve(cls.members.size());
  for (const auto& mem : cls.members) d.perms.push_back(mem.perm);
  return d;
}

}  // namespace gph::comb
