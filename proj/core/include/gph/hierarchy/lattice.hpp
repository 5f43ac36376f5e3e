#pragma once

#include <vector>

namespace gph::hier {

// Discrete periodic grid [0, 2pi)^dim with `points` sites per axis and integer
// frequencies {-m/2, ..., m/2 - 1}. Sites per particle slot: M = points^dim.
class LatticeGrid {
 public:
  LatticeGrid(int dim, int points);

  int dim() const { return dim_; }
  int points() const { return points_; }
  int site_count() const { return sites_; }  // M

  // Integer frequency for a 1-d index in [0, points): standard FFT layout.
  int freq1(int index) const { return index < (points_ + 1) / 2 ? index : index - points_; }

  // |xi|^2 and |xi| for the composite site index of one slot.
  double freq_sq(int site) const { return freq_sq_[site]; }
  double freq_abs(int site) const { return freq_abs_[site]; }

  bool operator==(const LatticeGrid& o) const { return dim_ == o.dim_ && points_ == o.points_; }

 private:
  int dim_;
  int points_;
  int sites_;
  std::vector<double> freq_sq_;
  std::vector<double> freq_abs_;
};

}  // namespace gph::hier
