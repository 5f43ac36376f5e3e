#pragma once

#include <vector>

#include "gph/combinatorics/collision_map.hpp"

namespace gph::comb {

// One equivalence class of the deterministic reduction: all maps whose
// reduction lands on the same upper-echelon representative, together with the
// permutation each reduction produced (starting from the identity).
struct EchelonClass {
  struct Member {
    CollisionMap map;
    TimePermutation perm;
    std::vector<int> moves;
  };
  CollisionMap representative;
  std::vector<Member> members;
};

// Partition of enumerate_maps(n) by reduction target. Classes are ordered by
// representative (lexicographic); members keep enumeration order. Within a
// class the permutations are pairwise distinct (validated).
std::vector<EchelonClass> partition_classes(int n, int cap = kDefaultEnumerationCap);

// Union of the time-ordered simplices {t1 >= t_{sigma(2)} >= ... >= 0} over
// the permutations of one class. Distinct permutations overlap in measure
// zero, so the total measure is count * t1^n / n!.
struct SimplexDomain {
  double t1 = 0.0;
  std::vector<TimePermutation> perms;
  double measure() const;
};

SimplexDomain build_domain(const EchelonClass& cls, double t1);

}  // namespace gph::comb
