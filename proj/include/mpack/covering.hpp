#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mpack/geometry.hpp"

namespace mpack {

// Random covering of the unit sphere S^{n-1} by K spherical caps of angular
// radius alpha, K = ceil(oversample * e^{n ln(1/sin alpha)}).
struct CapCovering {
  int n = 0;
  double alpha = 0.0;
  std::vector<Point> centers;  // unit vectors
  double oversample = 1.0;
};

CapCovering build_covering(int n, double alpha, double oversample, std::uint64_t seed);

// Fraction of `samples` uniform sphere points y with max_c <y, c> >= cos(alpha).
double coverage_fraction(const CapCovering& cov, std::uint64_t samples,
                         std::uint64_t seed, int workers = 1);

// Double-counting identity for a code on the sphere of squared radius nP
// (inferred from the rows): the average of avg_sq_radius over all C(M, L)
// subsets (lhs, enumerated when C(M, L) <= 1e6, else the exact pairwise
// shortcut) against its closed form
//   (L-1)/L nP - (L-1)/(L M(M-1)) (M^2 |xbar|^2 - M nP)   (rhs).
std::pair<double, double> cap_code_identity(const Code& code, int L);

struct PlotkinCheck {
  double min_avg_rad_sq = 0.0;
  double bound = 0.0;
  bool ok = false;
};

// For a code on the cap {x on sphere sqrt(nP) : x(1) >= sqrt(nP) cos(alpha)}:
// the minimum over L-subsets of the average squared radius never exceeds
// (L-1)/L nP sin^2(alpha) (1 + 1/(M-1)).  ok reports that inequality.
PlotkinCheck plotkin_cap_check(const Code& code, int L, double alpha);

}  // namespace mpack
