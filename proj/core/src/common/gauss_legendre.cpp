#include "gph/common/gauss_legendre.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace gph {

namespace {

GaussRule compute_rule(int q) {
  if (q < 1 || q > 256) throw std::invalid_argument("gauss_legendre: order out of range");
  GaussRule rule;
  rule.nodes.resize(q);
  rule.weights.resize(q);
  for (int i = 0; i < q; ++i) {
    // Newton iteration from the Chebyshev-like initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (q + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      if (q == 1) { p1 = x; }
      for (int k = 2; k <= q; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double pq = (q == 1) ? x : p1;
      double pq1 = (q == 1) ? 1.0 : p0;
      dp = q * (x * pq - pq1) / (x * x - 1.0);
      double dx = pq / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int q) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, compute_rule(q)).first;
  return it->second;
}

MappedRule gauss_on_interval(int q, double a, double b) {
  const GaussRule& r = gauss_legendre(q);
  MappedRule m;
  m.nodes.resize(q);
  m.weights.resize(q);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (int i = 0; i < q; ++i) {
    m.nodes[i] = mid + half * r.nodes[i];
    m.weights[i] = half * r.weights[i];
  }
  return m;
}

}  // namespace gph
