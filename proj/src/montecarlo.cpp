#include "mpack/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace mpack {

double gaussian_tail_exact(int n, int L, double P, double N) {
  if (n < 1 || L < 2 || !(P > 0.0) || !(N > 0.0))
    throw std::domain_error("gaussian_tail_exact: bad parameters");
  const double k = static_cast<double>(L - 1) * static_cast<double>(n);
  const double x = static_cast<double>(L) * static_cast<double>(n) * N / P;
  return chi2_cdf(k, x);
}

namespace {

// bad-list count over samples [first, last) of the given substream family
std::uint64_t count_chunk(const EnsembleSpec& spec, int L, double nN,
                          std::uint64_t seed, std::uint64_t first,
                          std::uint64_t last) {
  std::vector<Point> list(static_cast<std::size_t>(L));
  std::uint64_t hits = 0;
  for (std::uint64_t s = first; s < last; ++s) {
    rng_stream g(seed, s);
    for (auto& row : list) draw_row(spec, g, row);
    if (avg_sq_radius(list) <= nN) ++hits;
  }
  return hits;
}

}  // namespace

TailEstimate mc_tail(const EnsembleSpec& spec, int L, double nN,
                     std::uint64_t samples, std::uint64_t seed, int workers) {
  validate(spec);
  if (L < 2) throw std::invalid_argument("mc_tail: L must be at least 2");
  if (samples < 1) throw std::invalid_argument("mc_tail: need samples >= 1");
  if (workers < 1) workers = 1;

  std::uint64_t hits = 0;
  if (workers == 1) {
    hits = count_chunk(spec, L, nN, seed, 0, samples);
  } else {
    // sample i always comes from substream (seed, i); the partition only
    // decides who computes it, so the count is worker-count independent
    std::vector<std::uint64_t> part(static_cast<std::size_t>(workers), 0);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (samples + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t first = chunk * static_cast<std::uint64_t>(w);
      const std::uint64_t last = std::min(samples, first + chunk);
      if (first >= last) break;
      pool.emplace_back([&, w, first, last] {
        part[static_cast<std::size_t>(w)] = count_chunk(spec, L, nN, seed, first, last);
      });
    }
    for (auto& t : pool) t.join();
    for (std::uint64_t c : part) hits += c;
  }

  TailEstimate est;
  est.kind = spec.kind;
  est.n = spec.n;
  est.L = L;
  est.nN = nN;
  est.samples = samples;
  est.p_hat = static_cast<double>(hits) / static_cast<double>(samples);
  est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(samples));
  est.neg_log_rate = est.p_hat > 0.0
                         ? -std::log(est.p_hat) / static_cast<double>(spec.n)
                         : std::numeric_limits<double>::infinity();
  return est;
}

double exponent_fit(const std::vector<TailEstimate>& estimates) {
  if (estimates.size() < 3)
    throw std::invalid_argument("exponent_fit: need at least 3 estimates");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& e : estimates) {
    if (!(e.p_hat > 0.0)) throw std::invalid_argument("exponent_fit: p_hat = 0");
    const double x = static_cast<double>(e.n);
    const double y = -std::log(e.p_hat);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(estimates.size());
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("exponent_fit: degenerate n grid");
  return (m * sxy - sx * sy) / denom;
}

}  // namespace mpack
