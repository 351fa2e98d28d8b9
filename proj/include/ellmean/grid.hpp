#pragma once

#include <functional>
#include <vector>

namespace ellmean::grid {

/// n interior points i/(n+1), i = 1..n; stays clear of the endpoint
/// singularities of the ratio functions.
std::vector<double> interior(int n);

/// n points spanning [0,1] inclusive (n >= 2).
std::vector<double> closed(int n);

/// Pointwise map, fanned across OpenMP workers.  f must be a pure function;
/// each slot is written exactly once, so results are bitwise identical to the
/// serial reference for any worker count.
std::vector<double> map(const std::vector<double>& xs,
                        const std::function<double(double)>& f);

/// Serial reference implementation kept for testing and benchmarking.
std::vector<double> map_serial(const std::vector<double>& xs,
                               const std::function<double(double)>& f);

/// Index of the entry with the largest absolute value (first on ties).
std::size_t argmax_abs(const std::vector<double>& v);

}  // namespace ellmean::grid
