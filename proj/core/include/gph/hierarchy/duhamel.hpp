#pragma once

#include <functional>
#include <vector>

#include "gph/combinatorics/collision_map.hpp"
#include "gph/hierarchy/density_kernel.hpp"

namespace gph::hier {

// Nested Gauss-Legendre rule over the ordered simplex
// {t1 >= t_{sigma(2)} >= ... >= t_{sigma(n+1)} >= 0}.
struct SimplexQuadrature {
  int points_per_dim = 8;
  comb::TimePermutation nesting;

  static SimplexQuadrature for_board(const comb::BoardState& board, int points_per_dim = 8);
};

// J(t; mu) = e^{i(t1-t2)D(1)} B_{1,2} e^{i(t2-t3)D(2)} B_{mu(3),3} ...
//            e^{i(tn-t_{n+1})D(n)} B_{mu(n+1),n+1} gamma.
// `times` holds (t_1, ..., t_{n+1}); gamma carries slots {1..n+1}.
DensityKernel evaluate_J(const std::vector<double>& times, const comb::CollisionMap& map,
                         const DensityKernel& gamma_source);

// I(mu, sigma): iterated integral of J over the ordered simplex, with the
// nesting order given by the board permutation.
DensityKernel integrate_I(const comb::BoardState& board, const DensityKernel& gamma_source,
                          double t1, const SimplexQuadrature& quad);

// One Duhamel layer with the fully summed collision operator:
// integral over [0, t] of e^{i(t-s)D(k)} B^{(k+1)} gamma_next(s) ds.
// gamma_next(s) must return a (k+1)-particle kernel with slots {1..k+1}.
DensityKernel duhamel_step(const std::function<DensityKernel(double)>& gamma_next, int k,
                           double t, int quad_points);

}  // namespace gph::hier
