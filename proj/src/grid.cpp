#include "ellmean/grid.hpp"

#include <cmath>
#include <cstddef>
#include <exception>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ellmean::grid {

std::vector<double> interior(int n) {
  if (n < 1) throw std::invalid_argument("grid::interior: need n >= 1");
  std::vector<double> xs(n);
  const double den = n + 1;
  for (int i = 0; i < n; ++i) xs[i] = (i + 1) / den;
  return xs;
}

std::vector<double> closed(int n) {
  if (n < 2) throw std::invalid_argument("grid::closed: need n >= 2");
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = static_cast<double>(i) / (n - 1);
  return xs;
}

std::vector<double> map(const std::vector<double>& xs,
                        const std::function<double(double)>& f) {
  std::vector<double> out(xs.size());
  std::exception_ptr error;  // exceptions may not escape the parallel region
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(xs.size()); ++i) {
    try {
      out[i] = f(xs[i]);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<double> map_serial(const std::vector<double>& xs,
                               const std::function<double(double)>& f) {
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
  return out;
}

std::size_t argmax_abs(const std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::fabs(v[i]) > std::fabs(v[best])) best = i;
  return best;
}

}  // namespace ellmean::grid
