#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "gph/hierarchy/lattice.hpp"

namespace gph::hier {

using cplx = std::complex<double>;

// A density kernel gamma(x_{s1..sk}; x'_{s1..sk}) over labeled particle
// slots, stored in position space as a row-major tensor with one axis of
// size M per slot (unprimed block first, then primed). Slot labels survive
// contractions, which lets operator compositions that skip levels keep their
// bookkeeping: a propagator always acts on the full current slot set.
//
// Conventions: sites x = 2 pi s / m, plane waves e^{i xi x} with integer
// frequencies; the L2 norm carries the normalized counting measure (1/M per
// slot pair), so position and frequency norms coincide. The free evolution
// multiplies the (xi; xi') coefficient by exp(-i t (|xi|^2 - |xi'|^2)), the
// sign fixed so that (i d/dt + Delta_x - Delta_{x'}) gamma = 0.
class DensityKernel {
 public:
  enum class CollisionPart { full, gain, loss };  // B = gain - loss

  DensityKernel(const LatticeGrid& grid, std::vector<int> slots);

  const LatticeGrid& grid() const { return grid_; }
  const std::vector<int>& slots() const { return slots_; }
  int particle_count() const { return static_cast<int>(slots_.size()); }
  std::size_t size() const { return data_.size(); }

  cplx& operator[](std::size_t i) { return data_[i]; }
  const cplx& operator[](std::size_t i) const { return data_[i]; }
  std::vector<cplx>& data() { return data_; }
  const std::vector<cplx>& data() const { return data_; }

  // Flat index from per-slot site values (slot order as in slots()).
  std::size_t flat_index(std::span<const int> x, std::span<const int> xp) const;

  double l2_norm() const;
  DensityKernel& operator*=(cplx factor);
  DensityKernel& operator+=(const DensityKernel& o);
  DensityKernel& operator-=(const DensityKernel& o);

  // e^{i t Delta_pm} over all current slots.
  DensityKernel propagated(double t) const;

  // Fourier multiplier prod_j |xi_j| * prod_j |xi'_j|.
  DensityKernel with_R() const;

  // Collision contraction B_{row,col}: evaluates slot `col` on the diagonal
  // x_col = x'_col = x_row (gain part) minus the x'_row counterpart (loss
  // part) and removes slot `col`. Requires row < col, both present.
  DensityKernel collided(int row, int col, CollisionPart part = CollisionPart::full) const;

  // gamma(x_{pi(.)}; x'_{pi(.)}) for a permutation pi of slot positions.
  DensityKernel slot_positions_permuted(std::span<const int> pi) const;

  // conj(gamma(x'; x)) — equals gamma itself for Hermitian kernels.
  DensityKernel hermitian_adjoint() const;

  double hermitian_residual() const;
  double symmetry_residual() const;

  // Projects onto the permutation-symmetric, Hermitian part.
  void symmetrize();

 private:
  void to_freq(std::vector<cplx>& buf) const;
  static void from_freq(std::vector<cplx>& buf, const LatticeGrid& grid, int slot_count);

  LatticeGrid grid_;
  std::vector<int> slots_;
  std::vector<cplx> data_;
};

double l2_distance(const DensityKernel& a, const DensityKernel& b);

// Relative difference with floor guard; floor defaults to 1e-14.
double relative_residual(const DensityKernel& a, const DensityKernel& b, double floor = 1e-14);

// B_{j,k+1} applied to a (k+1)-particle kernel with slots {1..k+1}.
DensityKernel collision_op(const DensityKernel& gamma, int j,
                           DensityKernel::CollisionPart part = DensityKernel::CollisionPart::full);

DensityKernel apply_propagator(const DensityKernel& gamma, double t);
DensityKernel apply_R(const DensityKernel& gamma);

// Deterministic, permutation-symmetric, Hermitian, unit-norm test kernel on
// slots {1..k}.
DensityKernel random_symmetric_kernel(int k, const LatticeGrid& grid, std::uint64_t seed);

// gamma^(k) = prod_j phi(x_j) conj(phi(x'_j)) for a single-particle field phi
// given by its M site values.
DensityKernel factorized_kernel(const LatticeGrid& grid, int k, std::span<const cplx> phi);

}  // namespace gph::hier
