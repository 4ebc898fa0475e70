#include "mpack/covering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "mpack/rng.hpp"

namespace mpack {

namespace {

constexpr double kPi = 3.14159265358979323846;

void unit_gaussian(rng_stream& g, Point& p) {
  double nn = 0.0;
  do {
    nn = 0.0;
    for (double& v : p) {
      v = g.normal();
      nn += v * v;
    }
  } while (nn == 0.0);
  const double inv = 1.0 / std::sqrt(nn);
  for (double& v : p) v *= inv;
}

}  // namespace

CapCovering build_covering(int n, double alpha, double oversample, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("build_covering: need dimension >= 2");
  if (!(alpha > 0.0 && alpha < kPi))
    throw std::invalid_argument("build_covering: need alpha in (0, pi)");
  if (!(oversample >= 1.0)) throw std::invalid_argument("build_covering: need oversample >= 1");

  const double log_k = std::log(oversample) + n * std::log(1.0 / std::sin(alpha));
  if (log_k > std::log(double(1 << 24)))
    throw std::invalid_argument("build_covering: cap count exceeds the 2^24 guard");
  const std::size_t K = static_cast<std::size_t>(std::ceil(std::exp(log_k)));

  CapCovering cov;
  cov.n = n;
  cov.alpha = alpha;
  cov.oversample = oversample;
  cov.centers.resize(std::max<std::size_t>(K, 1), Point(static_cast<std::size_t>(n)));
  for (std::size_t i = 0; i < cov.centers.size(); ++i) {
    rng_stream g(seed, i);
    unit_gaussian(g, cov.centers[i]);
  }
  return cov;
}

double coverage_fraction(const CapCovering& cov, std::uint64_t samples,
                         std::uint64_t seed, int workers) {
  if (cov.n < 2 || cov.centers.empty())
    throw std::invalid_argument("coverage_fraction: empty covering");
  if (samples < 1) throw std::invalid_argument("coverage_fraction: need samples >= 1");
  for (const auto& c : cov.centers)
    if (static_cast<int>(c.size()) != cov.n || std::fabs(sq_norm(c) - 1.0) > 1e-9)
      throw std::invalid_argument("coverage_fraction: centers must be unit vectors");
  if (workers < 1) workers = 1;

  const double threshold = std::cos(cov.alpha);
  auto count_chunk = [&](std::uint64_t first, std::uint64_t last) {
    Point y(static_cast<std::size_t>(cov.n));
    std::uint64_t covered = 0;
    for (std::uint64_t s = first; s < last; ++s) {
      rng_stream g(seed, s);
      unit_gaussian(g, y);
      for (const auto& c : cov.centers) {
        double dot = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) dot += y[i] * c[i];
        if (dot >= threshold) {
          ++covered;
          break;
        }
      }
    }
    return covered;
  };

  std::uint64_t covered = 0;
  if (workers == 1) {
    covered = count_chunk(0, samples);
  } else {
    std::vector<std::uint64_t> part(static_cast<std::size_t>(workers), 0);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (samples + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t first = chunk * static_cast<std::uint64_t>(w);
      const std::uint64_t last = std::min(samples, first + chunk);
      if (first >= last) break;
      pool.emplace_back([&, w, first, last] {
        part[static_cast<std::size_t>(w)] = count_chunk(first, last);
      });
    }
    for (auto& t : pool) t.join();
    for (std::uint64_t c : part) covered += c;
  }
  return static_cast<double>(covered) / static_cast<double>(samples);
}

namespace {

// nP inferred from the first row; every row must sit on the same sphere
double common_sq_norm(const Code& code) {
  if (code.size() == 0) throw std::invalid_argument("empty code");
  const double nP = sq_norm(code.points.front());
  for (const auto& p : code.points)
    if (std::fabs(sq_norm(p) - nP) > 1e-9 * (1.0 + nP))
      throw std::invalid_argument("rows are not on a common sphere");
  return nP;
}

double subsets_count_capped(std::size_t M, int L, double cap) {
  double c = 1.0;
  for (int i = 0; i < L; ++i) {
    c *= static_cast<double>(M - static_cast<std::size_t>(i)) / static_cast<double>(i + 1);
    if (c > cap) return cap + 1.0;
  }
  return c;
}

}  // namespace

std::pair<double, double> cap_code_identity(const Code& code, int L) {
  if (L < 2) throw std::invalid_argument("cap_code_identity: L must be at least 2");
  if (code.size() < static_cast<std::size_t>(L))
    throw std::invalid_argument("cap_code_identity: fewer than L rows");
  const double nP = common_sq_norm(code);
  const double M = static_cast<double>(code.size());
  const double Ld = static_cast<double>(L);

  double lhs;
  if (subsets_count_capped(code.size(), L, 1e6) <= 1e6) {
    // exact average over all C(M, L) subsets
    double sum = 0.0;
    std::size_t count = 0;
    std::vector<int> idx(static_cast<std::size_t>(L));
    std::vector<Point> list(static_cast<std::size_t>(L));
    auto rec = [&](auto&& self, int k, std::size_t start) -> void {
      const std::size_t last = code.size() - static_cast<std::size_t>(L - 1 - k);
      for (std::size_t i = start; i < last; ++i) {
        idx[static_cast<std::size_t>(k)] = static_cast<int>(i);
        if (k + 1 == L) {
          for (int j = 0; j < L; ++j)
            list[static_cast<std::size_t>(j)] =
                code.points[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
          sum += avg_sq_radius(list);
          ++count;
        } else {
          self(self, k + 1, i + 1);
        }
      }
    };
    rec(rec, 0, 0);
    lhs = sum / static_cast<double>(count);
  } else {
    // pairwise shortcut: each unordered pair lies in C(M-2, L-2) subsets
    double pair_sum = 0.0;
    for (std::size_t i = 0; i < code.size(); ++i)
      for (std::size_t j = i + 1; j < code.size(); ++j)
        pair_sum += sq_dist(code.points[i], code.points[j]);
    lhs = (Ld - 1.0) / (Ld * M * (M - 1.0)) * pair_sum;
  }

  const Point xbar = centroid(code.points);
  const double rhs = (Ld - 1.0) / Ld * nP -
                     (Ld - 1.0) / (Ld * M * (M - 1.0)) *
                         (M * M * sq_norm(xbar) - M * nP);
  return {lhs, rhs};
}

PlotkinCheck plotkin_cap_check(const Code& code, int L, double alpha) {
  if (L < 2) throw std::invalid_argument("plotkin_cap_check: L must be at least 2");
  // the |xbar|^2 >= nP cos^2(alpha) step needs cos(alpha) >= 0
  if (!(alpha > 0.0 && alpha <= kPi / 2.0))
    throw std::invalid_argument("plotkin_cap_check: need alpha in (0, pi/2]");
  if (code.size() < static_cast<std::size_t>(L) || code.size() < 2)
    throw std::invalid_argument("plotkin_cap_check: fewer than max(L, 2) rows");
  const double nP = common_sq_norm(code);
  const double floor1 = std::sqrt(nP) * std::cos(alpha);
  for (const auto& p : code.points)
    if (p.front() < floor1 - 1e-9 * (1.0 + std::sqrt(nP)))
      throw std::invalid_argument("plotkin_cap_check: row outside the cap");

  const double M = static_cast<double>(code.size());
  const double Ld = static_cast<double>(L);
  const double sin2 = std::sin(alpha) * std::sin(alpha);

  PlotkinCheck chk;
  chk.min_avg_rad_sq = code_min_radius(code, L, Notion::average_radius).radius_sq;
  chk.bound = (Ld - 1.0) / Ld * nP * sin2 * (1.0 + 1.0 / (M - 1.0));
  chk.ok = chk.min_avg_rad_sq <= chk.bound + 1e-9 * (1.0 + std::fabs(chk.bound));
  return chk;
}

}  // namespace mpack
