#pragma once

#include <span>

namespace gph {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
};

// Ordinary least squares y = slope * x + intercept with the usual stderr of
// the slope. Requires at least two distinct x values.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

// Fit in log-log coordinates; all inputs must be positive.
LineFit fit_loglog(std::span<const double> x, std::span<const double> y);

}  // namespace gph
