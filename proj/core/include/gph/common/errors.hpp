#pragma once

#include <stdexcept>
#include <string>

namespace gph {

// Thrown when a request would exceed a configured enumeration or size cap.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a board move is requested at a column where it is not admissible.
class MoveError : public std::runtime_error {
 public:
  MoveError(int column, int mu_j, int mu_j1, const std::string& what)
      : std::runtime_error(what), column(column), mu_j(mu_j), mu_j1(mu_j1) {}
  int column;
  int mu_j;
  int mu_j1;
};

// Thrown when an operation requires a permutation-symmetric kernel and the
// input fails the symmetry check.
class SymmetryError : public std::runtime_error {
 public:
  SymmetryError(double residual, const std::string& what)
      : std::runtime_error(what), residual(residual) {}
  double residual;
};

// Thrown when a quadrature exhausts its evaluation budget before reaching the
// target tolerance. Carries the partial value for diagnostics.
class QuadratureBudgetError : public std::runtime_error {
 public:
  QuadratureBudgetError(double partial_value, double abs_err, long evals,
                        const std::string& what)
      : std::runtime_error(what),
        partial_value(partial_value),
        abs_err(abs_err),
        evals(evals) {}
  double partial_value;
  double abs_err;
  long evals;
};

// Thrown by the NLS solver when the field amplitude exceeds the blow-up guard.
class BlowupError : public std::runtime_error {
 public:
  BlowupError(double time, double peak, const std::string& what)
      : std::runtime_error(what), time(time), peak(peak) {}
  double time;
  double peak;
};

}  // namespace gph
