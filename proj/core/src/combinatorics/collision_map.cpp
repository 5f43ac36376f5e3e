#include "gph/combinatorics/collision_map.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gph/common/errors.hpp"

namespace gph::comb {

CollisionMap::CollisionMap(std::vector<int> values) : n_(static_cast<int>(values.size())), v_(std::move(values)) {
  if (n_ < 1) throw std::invalid_argument("CollisionMap: depth must be >= 1");
  if (v_[0] != 1) throw std::invalid_argument("CollisionMap: mu(2) must be 1");
  for (int j = 2; j <= n_ + 1; ++j) {
    int mu = v_[j - 2];
    if (mu < 1 || mu >= j)
      throw std::invalid_argument("CollisionMap: mu(" + std::to_string(j) + ") = " +
                                  std::to_string(mu) + " violates 1 <= mu(j) < j");
  }
}

int CollisionMap::at(int column) const {
  if (column < 2 || column > n_ + 1) throw std::out_of_range("CollisionMap::at: column out of range");
  return v_[column - 2];
}

TimePermutation::TimePermutation(int n) : n_(n), fwd_(n), inv_(n) {
  if (n < 1) throw std::invalid_argument("TimePermutation: size must be >= 1");
  for (int i = 0; i < n; ++i) fwd_[i] = inv_[i] = i + 2;
}

TimePermutation TimePermutation::from_one_line(std::vector<int> image) {
  const int n = static_cast<int>(image.size());
  TimePermutation p(n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    int v = image[i];
    if (v < 2 || v > n + 1 || seen[v - 2])
      throw std::invalid_argument("TimePermutation: not a bijection on {2..n+1}");
    seen[v - 2] = true;
    p.fwd_[i] = v;
    p.inv_[v - 2] = i + 2;
  }
  return p;
}

int TimePermutation::apply(int j) const {
  if (j < 2 || j > n_ + 1) throw std::out_of_range("TimePermutation::apply: label out of range");
  return fwd_[j - 2];
}

int TimePermutation::inverse(int j) const {
  if (j < 2 || j > n_ + 1) throw std::out_of_range("TimePermutation::inverse: label out of range");
  return inv_[j - 2];
}

std::vector<int> TimePermutation::one_line() const { return fwd_; }

bool TimePermutation::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (fwd_[i] != i + 2) return false;
  return true;
}

TimePermutation TimePermutation::after_column_swap(int j) const {
  if (j < 2 || j + 1 > n_ + 1) throw std::out_of_range("TimePermutation::after_column_swap");
  TimePermutation out = *this;
  std::swap(out.inv_[j - 2], out.inv_[j - 1]);
  for (int i = 0; i < n_; ++i) out.fwd_[out.inv_[i] - 2] = i + 2;
  return out;
}

std::vector<CollisionMap> enumerate_maps(int n, int cap) {
  if (n < 1) throw std::invalid_argument("enumerate_maps: n must be >= 1");
  if (n > cap)
    throw ResourceLimitError("enumerate_maps: n = " + std::to_string(n) +
                             " exceeds enumeration cap " + std::to_string(cap));
  std::vector<CollisionMap> out;
  std::vector<int> v(n, 1);
  // odometer over columns 3..n+1 (column 2 is pinned to row 1)
  while (true) {
    out.emplace_back(v);
    int j = n + 1;
    for (; j >= 3; --j) {
      if (v[j - 2] < j - 1) {
        ++v[j - 2];
        for (int c = j + 1; c <= n + 1; ++c) v[c - 2] = 1;
        break;
      }
    }
    if (j < 3) break;
  }
  return out;
}

bool move_admissible(const CollisionMap& map, int j) {
  if (j < 2 || j > map.depth()) return false;
  return map.at(j + 1) < map.at(j);
}

BoardState acceptable_move(const BoardState& state, int j) {
  const CollisionMap& m = state.map;
  const int n = m.depth();
  if (j < 2 || j > n)
    throw MoveError(j, 0, 0, "acceptable_move: column " + std::to_string(j) + " out of range");
  if (!move_admissible(m, j))
    throw MoveError(j, m.at(j), m.at(j + 1),
                    "acceptable_move: mu(" + std::to_string(j + 1) + ") = " + std::to_string(m.at(j + 1)) +
                        " not below mu(" + std::to_string(j) + ") = " + std::to_string(m.at(j)));
  std::vector<int> v = m.values();
  std::swap(v[j - 2], v[j - 1]);  // column exchange: mu o (j, j+1)
  for (int& r : v) {              // row exchange: relabel values j <-> j+1
    if (r == j)
      r = j + 1;
    else if (r == j + 1)
      r = j;
  }
  return BoardState{CollisionMap(std::move(v)), state.perm.after_column_swap(j)};
}

bool is_upper_echelon(const CollisionMap& map) {
  const auto& v = map.values();
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] < v[i - 1]) return false;
  return true;
}

Reduction reduce_to_echelon(const CollisionMap& map) {
  const int n = map.depth();
  BoardState board{map, TimePermutation(n)};
  std::vector<int> moves;
  while (true) {
    int j = 0;
    for (int c = 2; c <= n; ++c) {
      if (board.map.at(c + 1) < board.map.at(c)) {
        j = c;
        break;
      }
    }
    if (j == 0) break;
    board = acceptable_move(board, j);
    moves.push_back(j);
  }
  return Reduction{board.map, board.perm, std::move(moves)};
}

std::vector<int> header_row(const BoardState& state) {
  std::vector<int> out;
  const int n = state.map.depth();
  out.reserve(n);
  for (int c = 2; c <= n + 1; ++c) out.push_back(state.perm.inverse(c));
  return out;
}

std::vector<std::pair<int, int>> highlights(const CollisionMap& map) {
  std::vector<std::pair<int, int>> out;
  for (int c = 2; c <= map.depth() + 1; ++c) out.emplace_back(map.at(c), c);
  return out;
}

}  // namespace gph::comb
