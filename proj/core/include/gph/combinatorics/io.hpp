#pragma once

#include <string>
#include <vector>

#include "gph/combinatorics/classes.hpp"
#include "gph/combinatorics/counting.hpp"

namespace gph::comb {

// {"n":3,"mu":[1,2,1]}
std::string map_json(const CollisionMap& map);

// {"representative":[1,1,2],"members":[{"mu":[1,1,2],"sigma":[2,3,4]},...]}
std::string class_json(const EchelonClass& cls);

std::string classes_json(const std::vector<EchelonClass>& classes);
std::string maps_json(const std::vector<CollisionMap>& maps);

// CSV with header n,n_factorial,echelon_count,four_pow_n,partition_count
std::string counts_csv(const std::vector<CountRow>& rows);

}  // namespace gph::comb
