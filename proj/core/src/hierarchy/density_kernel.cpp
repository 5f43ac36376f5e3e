#include "gph/hierarchy/density_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "gph/common/fft.hpp"

namespace gph::hier {

namespace {

std::size_t checked_size(const LatticeGrid& grid, int k) {
  const double bytes = std::pow(static_cast<double>(grid.site_count()), 2.0 * k) * sizeof(cplx);
  if (bytes > 1.5e9) throw std::invalid_argument("DensityKernel: tensor would exceed 1.5 GB");
  std::size_t n = 1;
  for (int i = 0; i < 2 * k; ++i) n *= static_cast<std::size_t>(grid.site_count());
  return n;
}

void decompose(std::size_t flat, int axes, int base, int* out) {
  for (int a = axes - 1; a >= 0; --a) {
    out[a] = static_cast<int>(flat % base);
    flat /= base;
  }
}

}  // namespace

DensityKernel::DensityKernel(const LatticeGrid& grid, std::vector<int> slots)
    : grid_(grid), slots_(std::move(slots)) {
  if (slots_.empty()) throw std::invalid_argument("DensityKernel: need at least one slot");
  if (!std::is_sorted(slots_.begin(), slots_.end()) ||
      std::adjacent_find(slots_.begin(), slots_.end()) != slots_.end())
    throw std::invalid_argument("DensityKernel: slot labels must be strictly increasing");
  data_.assign(checked_size(grid_, particle_count()), cplx(0.0, 0.0));
}

std::size_t DensityKernel::flat_index(std::span<const int> x, std::span<const int> xp) const {
  const int k = particle_count();
  const int M = grid_.site_count();
  std::size_t f = 0;
  for (int i = 0; i < k; ++i) f = f * M + static_cast<std::size_t>(x[i]);
  for (int i = 0; i < k; ++i) f = f * M + static_cast<std::size_t>(xp[i]);
  return f;
}

double DensityKernel::l2_norm() const {
  double s = 0.0;
  for (const cplx& v : data_) s += std::norm(v);
  const double weight = std::pow(static_cast<double>(grid_.site_count()), -2.0 * particle_count());
  return std::sqrt(s * weight);
}

DensityKernel& DensityKernel::operator*=(cplx factor) {
  for (cplx& v : data_) v *= factor;
  return *this;
}

DensityKernel& DensityKernel::operator+=(const DensityKernel& o) {
  if (!(grid_ == o.grid_) || slots_ != o.slots_)
    throw std::invalid_argument("DensityKernel: mismatched operands");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

DensityKernel& DensityKernel::operator-=(const DensityKernel& o) {
  if (!(grid_ == o.grid_) || slots_ != o.slots_)
    throw std::invalid_argument("DensityKernel: mismatched operands");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

void DensityKernel::to_freq(std::vector<cplx>& buf) const {
  const int m = grid_.points();
  const int slot_axes = 2 * particle_count();
  const int d = grid_.dim();
  const std::size_t n = buf.size();
  // Slot axis a (0 slowest) has stride M^{slot_axes-1-a}; its scalar sub-axis
  // t (fastest digit t = 0) has stride = slot_stride * m^t.
  std::size_t slot_stride = n / static_cast<std::size_t>(grid_.site_count());
  for (int a = 0; a < slot_axes; ++a) {
    std::size_t sub = slot_stride;
    for (int t = 0; t < d; ++t) {
      fft_axis(buf.data(), n, m, sub, /*inverse=*/false);
      sub *= static_cast<std::size_t>(m);
    }
    slot_stride /= static_cast<std::size_t>(grid_.site_count());
  }
  const double scale = std::pow(1.0 / m, slot_axes * d);
  for (cplx& v : buf) v *= scale;
}

void DensityKernel::from_freq(std::vector<cplx>& buf, const LatticeGrid& grid, int slot_count) {
  const int m = grid.points();
  const int slot_axes = 2 * slot_count;
  const int d = grid.dim();
  const std::size_t n = buf.size();
  std::size_t slot_stride = n / static_cast<std::size_t>(grid.site_count());
  for (int a = 0; a < slot_axes; ++a) {
    std::size_t sub = slot_stride;
    for (int t = 0; t < d; ++t) {
      fft_axis(buf.data(), n, m, sub, /*inverse=*/true);
      sub *= static_cast<std::size_t>(m);
    }
    slot_stride /= static_cast<std::size_t>(grid.site_count());
  }
}

DensityKernel DensityKernel::propagated(double t) const {
  if (!std::isfinite(t)) throw std::invalid_argument("propagated: time must be finite");
  DensityKernel out = *this;
  to_freq(out.data_);
  const int k = particle_count();
  const int M = grid_.site_count();
  std::vector<int> digits(2 * k);
  for (std::size_t f = 0; f < out.data_.size(); ++f) {
    decompose(f, 2 * k, M, digits.data());
    double sum = 0.0;
    for (int i = 0; i < k; ++i) sum += grid_.freq_sq(digits[i]);
    for (int i = 0; i < k; ++i) sum -= grid_.freq_sq(digits[k + i]);
    out.data_[f] *= std::polar(1.0, -t * sum);
  }
  from_freq(out.data_, grid_, k);
  return out;
}

DensityKernel DensityKernel::with_R() const {
  DensityKernel out = *this;
  to_freq(out.data_);
  const int k = particle_count();
  const int M = grid_.site_count();
  std::vector<int> digits(2 * k);
  for (std::size_t f = 0; f < out.data_.size(); ++f) {
    decompose(f, 2 * k, M, digits.data());
    double prod = 1.0;
    for (int i = 0; i < 2 * k; ++i) prod *= grid_.freq_abs(digits[i]);
    out.data_[f] *= prod;
  }
  from_freq(out.data_, grid_, k);
  return out;
}

DensityKernel DensityKernel::collided(int row, int col, CollisionPart part) const {
  if (row >= col) throw std::invalid_argument("collided: need row < col");
  auto rit = std::find(slots_.begin(), slots_.end(), row);
  auto cit = std::find(slots_.begin(), slots_.end(), col);
  if (rit == slots_.end() || cit == slots_.end())
    throw std::invalid_argument("collided: slot label not present");
  if (particle_count() < 2) throw std::invalid_argument("collided: need at least two slots");
  const int pr = static_cast<int>(rit - slots_.begin());
  const int pc = static_cast<int>(cit - slots_.begin());

  std::vector<int> out_slots;
  out_slots.reserve(slots_.size() - 1);
  for (int s : slots_)
    if (s != col) out_slots.push_back(s);
  DensityKernel out(grid_, out_slots);

  const int k = particle_count();
  const int ko = k - 1;
  const int M = grid_.site_count();
  std::vector<int> od(2 * ko);      // output digits
  std::vector<int> in_x(k), in_xp(k);
  // kept_pos[i] = position in the input slot list of output slot i
  std::vector<int> kept(ko);
  for (int i = 0, t = 0; i < k; ++i)
    if (i != pc) kept[t++] = i;

  const bool gain_only = part == CollisionPart::gain;
  const bool loss_only = part == CollisionPart::loss;
  for (std::size_t f = 0; f < out.data_.size(); ++f) {
    decompose(f, 2 * ko, M, od.data());
    for (int i = 0; i < ko; ++i) {
      in_x[kept[i]] = od[i];
      in_xp[kept[i]] = od[ko + i];
    }
    cplx val(0.0, 0.0);
    // output slot position of `row`
    const int out_pr = pr < pc ? pr : pr - 1;
    if (!loss_only) {
      in_x[pc] = od[out_pr];
      in_xp[pc] = od[out_pr];
      val += data_[flat_index(in_x, in_xp)];
    }
    if (!gain_only) {
      in_x[pc] = od[ko + out_pr];
      in_xp[pc] = od[ko + out_pr];
      val -= data_[flat_index(in_x, in_xp)];
    }
    if (loss_only) val = -val;  // loss part alone is the positive contraction
    out.data_[f] = val;
  }
  return out;
}

DensityKernel DensityKernel::slot_positions_permuted(std::span<const int> pi) const {
  const int k = particle_count();
  if (static_cast<int>(pi.size()) != k)
    throw std::invalid_argument("slot_positions_permuted: permutation size mismatch");
  DensityKernel out(grid_, slots_);
  const int M = grid_.site_count();
  std::vector<int> od(2 * k), in_x(k), in_xp(k);
  for (std::size_t f = 0; f < out.data_.size(); ++f) {
    decompose(f, 2 * k, M, od.data());
    for (int i = 0; i < k; ++i) {
      in_x[i] = od[pi[i]];
      in_xp[i] = od[k + pi[i]];
    }
    out.data_[f] = data_[flat_index(in_x, in_xp)];
  }
  return out;
}

DensityKernel DensityKernel::hermitian_adjoint() const {
  DensityKernel out(grid_, slots_);
  const int k = particle_count();
  const int M = grid_.site_count();
  std::vector<int> od(2 * k), in_x(k), in_xp(k);
  for (std::size_t f = 0; f < out.data_.size(); ++f) {
    decompose(f, 2 * k, M, od.data());
    for (int i = 0; i < k; ++i) {
      in_x[i] = od[k + i];
      in_xp[i] = od[i];
    }
    out.data_[f] = std::conj(data_[flat_index(in_x, in_xp)]);
  }
  return out;
}

double DensityKernel::hermitian_residual() const {
  DensityKernel h = hermitian_adjoint();
  h -= *this;
  return h.l2_norm() / std::max(l2_norm(), 1e-300);
}

double DensityKernel::symmetry_residual() const {
  const int k = particle_count();
  if (k == 1) return 0.0;
  const double norm = std::max(l2_norm(), 1e-300);
  double worst = 0.0;
  std::vector<int> pi(k);
  std::iota(pi.begin(), pi.end(), 0);
  if (k <= 4) {
    while (std::next_permutation(pi.begin(), pi.end())) {
      DensityKernel p = slot_positions_permuted(pi);
      p -= *this;
      worst = std::max(worst, p.l2_norm() / norm);
    }
  } else {
    for (int i = 0; i + 1 < k; ++i) {
      std::iota(pi.begin(), pi.end(), 0);
      std::swap(pi[i], pi[i + 1]);
      DensityKernel p = slot_positions_permuted(pi);
      p -= *this;
      worst = std::max(worst, p.l2_norm() / norm);
    }
  }
  return worst;
}

void DensityKernel::symmetrize() {
  const int k = particle_count();
  if (k > 1) {
    std::vector<int> pi(k);
    std::iota(pi.begin(), pi.end(), 0);
    DensityKernel acc(grid_, slots_);
    std::size_t count = 0;
    do {
      acc += slot_positions_permuted(pi);
      ++count;
    } while (std::next_permutation(pi.begin(), pi.end()));
    acc *= cplx(1.0 / static_cast<double>(count), 0.0);
    data_ = std::move(acc.data_);
  }
  DensityKernel h = hermitian_adjoint();
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = 0.5 * (data_[i] + h.data_[i]);
}

double l2_distance(const DensityKernel& a, const DensityKernel& b) {
  DensityKernel d = a;
  d -= b;
  return d.l2_norm();
}

double relative_residual(const DensityKernel& a, const DensityKernel& b, double floor) {
  return l2_distance(a, b) / std::max(a.l2_norm(), floor);
}

DensityKernel collision_op(const DensityKernel& gamma, int j, DensityKernel::CollisionPart part) {
  const auto& slots = gamma.slots();
  const int col = slots.back();
  if (j < 1 || j >= col) throw std::invalid_argument("collision_op: index out of range");
  return gamma.collided(j, col, part);
}

DensityKernel apply_propagator(const DensityKernel& gamma, double t) { return gamma.propagated(t); }

DensityKernel apply_R(const DensityKernel& gamma) { return gamma.with_R(); }

DensityKernel random_symmetric_kernel(int k, const LatticeGrid& grid, std::uint64_t seed) {
  std::vector<int> slots(k);
  std::iota(slots.begin(), slots.end(), 1);
  DensityKernel out(grid, slots);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    double re = gauss(rng);
    double im = gauss(rng);
    out[i] = cplx(re, im);
  }
  out.symmetrize();
  const double norm = out.l2_norm();
  if (norm > 0.0) out *= cplx(1.0 / norm, 0.0);
  return out;
}

DensityKernel factorized_kernel(const LatticeGrid& grid, int k, std::span<const cplx> phi) {
  if (static_cast<int>(phi.size()) != grid.site_count())
    throw std::invalid_argument("factorized_kernel: field size mismatch");
  std::vector<int> slots(k);
  std::iota(slots.begin(), slots.end(), 1);
  DensityKernel out(grid, slots);
  const int M = grid.site_count();
  std::vector<int> od(2 * k);
  for (std::size_t f = 0; f < out.size(); ++f) {
    std::size_t rest = f;
    for (int a = 2 * k - 1; a >= 0; --a) {
      od[a] = static_cast<int>(rest % M);
      rest /= M;
    }
    cplx v(1.0, 0.0);
    for (int i = 0; i < k; ++i) v *= phi[od[i]];
    for (int i = 0; i < k; ++i) v *= std::conj(phi[od[k + i]]);
    out[f] = v;
  }
  return out;
}

}  // namespace gph::hier
