#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mpack/geometry.hpp"
#include "mpack/rng.hpp"

namespace mpack {

enum class EnsembleKind { gaussian, sphere, ball, truncated_gaussian };

std::string to_string(EnsembleKind k);
EnsembleKind ensemble_from_string(const std::string& s);

// A random-code ensemble at per-coordinate power `power` in dimension n.
//   gaussian            iid N(0, P) coordinates (unbounded)
//   sphere              uniform on the sphere of squared radius nP
//   ball                uniform in the ball of squared radius nP
//   truncated_gaussian  iid N(0, P) conditioned on nP - delta <= |x|^2 <= nP
// shell_delta is the truncation width delta; required for truncated_gaussian.
struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::sphere;
  int n = 0;
  double power = 1.0;
  std::optional<double> shell_delta;
  std::uint64_t seed = 0;
};

void validate(const EnsembleSpec& spec);

// Fill `row` (resized to spec.n) with one draw, consuming `g` only.
void draw_row(const EnsembleSpec& spec, rng_stream& g, Point& row);

// M rows, row i drawn from substream (spec.seed, i).  The bounded ensembles
// carry power_limit = spec.power; the Gaussian ensemble leaves it unset.
Code sample(const EnsembleSpec& spec, std::size_t M);

// Exact probability that one truncated-Gaussian proposal lands in the shell
// nP - delta <= |x|^2 <= nP, and its large-n approximation delta/(2P sqrt(pi n)).
double trunc_acceptance_exact(int n, double power, double delta);
double trunc_acceptance_asymptotic(int n, double power, double delta);

// M points uniform on the spherical cap {x : <x, e1> >= |x| cos(alpha)} of
// the sphere of squared radius nP.  The first coordinate's latitude
// t = x(1)/sqrt(nP) has CDF Beta((n-1)/2, (n-1)/2) in (1+t)/2, inverted by
// bisection; the remaining block is a uniform sub-sphere direction.
Code sample_cap(int n, double power, double alpha, std::size_t M, std::uint64_t seed);

}  // namespace mpack
