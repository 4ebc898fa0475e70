#pragma once

#include <cstdint>
#include <vector>

#include "mpack/ensembles.hpp"
#include "mpack/specfn.hpp"

namespace mpack {

// One tail-probability measurement: p_hat estimates the probability that a
// random L-list from the ensemble has average squared radius <= nN.
struct TailEstimate {
  EnsembleKind kind = EnsembleKind::gaussian;
  int n = 0;
  int L = 2;
  double nN = 0.0;
  std::uint64_t samples = 0;
  double p_hat = 0.0;
  double std_err = 0.0;       // binomial: sqrt(p(1-p)/samples)
  double neg_log_rate = 0.0;  // -ln(p_hat)/n, +inf when p_hat = 0
};

// Exact bad-list probability for the Gaussian ensemble at variance P: the
// average squared radius of L iid N(0, P I_n) points is P/(L n) times a
// chi-square with (L-1)n degrees of freedom, so the tail is
// chi2_cdf((L-1)n, L n N / P).
double gaussian_tail_exact(int n, int L, double P, double N);

// Monte Carlo estimate over `samples` independent lists.  Sample i draws its
// L rows from substream (seed, i), so the result is bit-identical for any
// worker count.
TailEstimate mc_tail(const EnsembleSpec& spec, int L, double nN,
                     std::uint64_t samples, std::uint64_t seed, int workers = 1);

// Least-squares slope of -ln p_hat against n.  Needs at least three
// estimates, all with p_hat > 0.
double exponent_fit(const std::vector<TailEstimate>& estimates);

}  // namespace mpack
