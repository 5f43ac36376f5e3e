#pragma once

#include <utility>
#include <vector>

namespace gph::comb {

inline constexpr int kDefaultEnumerationCap = 8;

// Column-indexed choice of one collision operator per expansion level:
// mu maps column j in {2, ..., n+1} to a row in {1, ..., j-1}, with mu(2) = 1.
class CollisionMap {
 public:
  // values[i] = mu(i + 2); validated on construction.
  explicit CollisionMap(std::vector<int> values);

  int depth() const { return n_; }  // n; columns run 2..n+1
  int at(int column) const;         // mu(column)
  const std::vector<int>& values() const { return v_; }

  bool operator==(const CollisionMap& o) const { return v_ == o.v_; }
  bool operator<(const CollisionMap& o) const { return v_ < o.v_; }

 private:
  int n_;
  std::vector<int> v_;
};

// Permutation of the column labels {2, ..., n+1}. Stored with its inverse;
// the board header in column c reads t_{inverse(c)}.
class TimePermutation {
 public:
  explicit TimePermutation(int n);  // identity
  static TimePermutation from_one_line(std::vector<int> image);  // [sigma(2)..sigma(n+1)]

  int size() const { return n_; }
  int apply(int j) const;    // sigma(j)
  int inverse(int j) const;  // sigma^{-1}(j)
  std::vector<int> one_line() const;
  bool is_identity() const;

  // Column exchange at (j, j+1): the new inverse is inverse composed with the
  // transposition, i.e. header entries in columns j and j+1 swap.
  TimePermutation after_column_swap(int j) const;

  bool operator==(const TimePermutation& o) const { return inv_ == o.inv_; }
  bool operator<(const TimePermutation& o) const { return inv_ < o.inv_; }

 private:
  int n_ = 0;
  std::vector<int> fwd_;  // fwd_[j-2] = sigma(j)
  std::vector<int> inv_;  // inv_[j-2] = sigma^{-1}(j)
};

struct BoardState {
  CollisionMap map;
  TimePermutation perm;
};

// All admissible maps for depth n in lexicographic order of (mu(2),...,mu(n+1)).
// Count is n!. Throws ResourceLimitError above the cap.
std::vector<CollisionMap> enumerate_maps(int n, int cap = kDefaultEnumerationCap);

// A move at column j (2 <= j <= n) requires mu(j+1) < mu(j).
bool move_admissible(const CollisionMap& map, int j);

// Exchanges the highlighted entries of columns j, j+1 and of rows j, j+1:
// mu' = (j,j+1) o mu o (j,j+1), and the header row swaps in columns j, j+1.
// Throws MoveError if not admissible.
BoardState acceptable_move(const BoardState& state, int j);

// Nondecreasing-values characterization of the canonical form in which every
// highlighted entry of a higher row sits left of those of lower rows.
bool is_upper_echelon(const CollisionMap& map);

struct Reduction {
  CollisionMap echelon;
  TimePermutation perm;       // such that the start pair (map, id) maps to (echelon, perm)
  std::vector<int> moves;     // columns, in application order
};

// Deterministic reduction: repeatedly apply the move at the leftmost
// admissible column. Each move lowers the value sequence lexicographically,
// so the loop terminates; the fixed point is upper echelon.
Reduction reduce_to_echelon(const CollisionMap& map);

// Board rendering used by reports and tests: header subscripts per column and
// the highlighted (row, column) set.
std::vector<int> header_row(const BoardState& state);
std::vector<std::pair<int, int>> highlights(const CollisionMap& map);

}  // namespace gph::comb
