#include "gph/hierarchy/lattice.hpp"

#include <cmath>
#include <stdexcept>

#include "gph/common/fft.hpp"

namespace gph::hier {

LatticeGrid::LatticeGrid(int dim, int points) : dim_(dim), points_(points) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("LatticeGrid: dim must be 1..3");
  if (points < 2 || !is_power_of_two(points))
    throw std::invalid_argument("LatticeGrid: points must be a power of two >= 2");
  sites_ = 1;
  for (int a = 0; a < dim; ++a) sites_ *= points;
  freq_sq_.resize(sites_);
  freq_abs_.resize(sites_);
  for (int s = 0; s < sites_; ++s) {
    int rest = s;
    double sq = 0.0;
    for (int a = 0; a < dim; ++a) {
      int idx = rest % points_;
      rest /= points_;
      double f = freq1(idx);
      sq += f * f;
    }
    freq_sq_[s] = sq;
    freq_abs_[s] = std::sqrt(sq);
  }
}

}  // namespace gph::hier
