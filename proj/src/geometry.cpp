#include "mpack/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mpack/detail/subset_scan.hpp"

namespace mpack {

std::string to_string(Notion n) {
  switch (n) {
    case Notion::chebyshev: return "chebyshev";
    case Notion::average_radius: return "average-radius";
    case Notion::max_to_centroid: return "max-to-centroid";
  }
  return "?";
}

Notion notion_from_string(const std::string& s) {
  if (s == "cheb" || s == "chebyshev") return Notion::chebyshev;
  if (s == "avg" || s == "average-radius") return Notion::average_radius;
  if (s == "max" || s == "max-to-centroid") return Notion::max_to_centroid;
  throw std::invalid_argument("unknown notion: " + s);
}

Code make_code(int n, std::vector<Point> points, std::optional<double> power_limit) {
  if (n < 1) throw std::invalid_argument("make_code: dimension must be positive");
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != n)
      throw std::invalid_argument("make_code: row length differs from dimension");
    for (double v : p)
      if (!std::isfinite(v)) throw std::invalid_argument("make_code: non-finite coordinate");
  }
  if (power_limit) {
    if (!(*power_limit > 0.0)) throw std::invalid_argument("make_code: power limit must be positive");
    const double cap = n * *power_limit;
    for (const auto& p : points)
      if (sq_norm(p) > cap * (1.0 + 1e-9) + 1e-12)
        throw std::invalid_argument("make_code: row violates the power constraint");
  }
  // duplicate detection via lexicographic sort of row indices
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points[a] < points[b];
  });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (points[order[i - 1]] == points[order[i]])
      throw std::invalid_argument("make_code: duplicate rows");
  Code c;
  c.n = n;
  c.points = std::move(points);
  c.power_limit = power_limit;
  return c;
}

void validate(const PackingParams& params) {
  if (params.n < 1) throw std::invalid_argument("params: dimension must be positive");
  if (params.L < 2) throw std::invalid_argument("params: L must be at least 2");
  if (!(params.N > 0.0)) throw std::invalid_argument("params: N must be positive");
  if (params.P && !(*params.P > 0.0)) throw std::invalid_argument("params: P must be positive");
}

// ---- radii ------------------------------------------------------------------

namespace {

void check_list(const std::vector<Point>& list) {
  if (list.empty()) throw std::invalid_argument("radius of an empty list");
  const std::size_t n = list.front().size();
  for (const auto& p : list)
    if (p.size() != n) throw std::invalid_argument("dimension mismatch in list");
}

}  // namespace

Point centroid(const std::vector<Point>& list) {
  check_list(list);
  const std::size_t n = list.front().size();
  Point c(n, 0.0);
  for (const auto& p : list)
    for (std::size_t i = 0; i < n; ++i) c[i] += p[i];
  for (double& v : c) v /= static_cast<double>(list.size());
  return c;
}

double avg_sq_radius(const std::vector<Point>& list, AvgForm form) {
  check_list(list);
  const double L = static_cast<double>(list.size());
  switch (form) {
    case AvgForm::definition: {
      const Point c = centroid(list);
      double s = 0.0;
      for (const auto& p : list) s += sq_dist(p, c);
      return s / L;
    }
    case AvgForm::norm_minus_centroid: {
      // (1/L) sum |x_i|^2 - |centroid|^2
      double s = 0.0;
      for (const auto& p : list) s += sq_norm(p);
      return s / L - sq_norm(centroid(list));
    }
    case AvgForm::power_minus_correlation: {
      // ((L-1)/L^2) sum |x_i|^2 - (1/L^2) sum_{i != j} <x_i, x_j>
      double power = 0.0;
      for (const auto& p : list) power += sq_norm(p);
      double cross = 0.0;
      const std::size_t n = list.front().size();
      for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = 0; j < list.size(); ++j) {
          if (i == j) continue;
          double dot = 0.0;
          for (std::size_t k = 0; k < n; ++k) dot += list[i][k] * list[j][k];
          cross += dot;
        }
      return (L - 1.0) / (L * L) * power - cross / (L * L);
    }
    case AvgForm::pairwise: {
      // (1/(2L^2)) sum_{i != j} |x_i - x_j|^2
      double s = 0.0;
      for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = i + 1; j < list.size(); ++j) s += sq_dist(list[i], list[j]);
      return s / (L * L);  // unordered pairs counted once: 2*s / (2 L^2)
    }
  }
  throw std::invalid_argument("avg_sq_radius: bad form");
}

// ---- smallest enclosing ball -------------------------------------------------

namespace {

constexpr double kBoundaryTol = 1e-12;

struct Ball {
  Point center;
  double r2 = -1.0;  // r2 < 0 marks "no ball yet": contains nothing
  // barycentric coefficients of the center in its support (lambda[0] belongs
  // to the first support point); kept for the convex-hull certificate
  std::vector<double> lambda;
  bool degenerate = false;
};

bool in_ball(const Ball& b, const Point& p) {
  if (b.r2 < 0.0) return false;
  return sq_dist(b.center, p) <= b.r2 + kBoundaryTol * (1.0 + b.r2);
}

// Circumscribed ball of the support set: all points on the boundary, center
// in their affine hull.  Solved as 2 G lambda = rhs by Gaussian elimination.
Ball ball_of_support(const std::vector<const Point*>& support) {
  Ball b;
  if (support.empty()) return b;
  const Point& q0 = *support.front();
  const std::size_t m = support.size() - 1;
  if (m == 0) {
    b.center = q0;
    b.r2 = 0.0;
    b.lambda = {1.0};
    return b;
  }
  const std::size_t n = q0.size();
  std::vector<std::vector<double>> v(m, std::vector<double>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k) v[i][k] = (*support[i + 1])[k] - q0[k];

  std::vector<std::vector<double>> a(m, std::vector<double>(m + 1));
  double scale = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) dot += v[i][k] * v[j][k];
      a[i][j] = 2.0 * dot;
      scale = std::max(scale, std::fabs(a[i][j]));
    }
    double nn = 0.0;
    for (std::size_t k = 0; k < n; ++k) nn += v[i][k] * v[i][k];
    a[i][m] = nn;
  }

  // partial-pivot elimination; a tiny pivot means the support is affinely
  // dependent and the caller must fall back
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < m; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (std::fabs(a[piv][col]) <= 1e-12 * std::max(scale, 1.0)) {
      b.degenerate = true;
      return b;
    }
    std::swap(a[piv], a[col]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (std::size_t c2 = col; c2 <= m; ++c2) a[r][c2] -= f * a[col][c2];
    }
  }
  std::vector<double> lam(m);
  for (std::size_t i = 0; i < m; ++i) lam[i] = a[i][m] / a[i][i];

  b.center = q0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k) b.center[k] += lam[i] * v[i][k];
  b.r2 = sq_dist(b.center, q0);
  b.lambda.resize(m + 1);
  b.lambda[0] = 1.0 - std::accumulate(lam.begin(), lam.end(), 0.0);
  for (std::size_t i = 0; i < m; ++i) b.lambda[i + 1] = lam[i];
  return b;
}

Ball welzl(std::vector<const Point*>& pts, std::size_t end,
           std::vector<const Point*>& support, std::size_t support_cap) {
  if (end == 0 || support.size() == support_cap) return ball_of_support(support);
  const Point* p = pts[end - 1];
  Ball b = welzl(pts, end - 1, support, support_cap);
  if (!b.degenerate && in_ball(b, *p)) return b;
  support.push_back(p);
  Ball b2 = welzl(pts, end - 1, support, support_cap);
  support.pop_back();
  // move-to-front so later calls test this boundary point early
  std::rotate(pts.begin(), pts.begin() + (end - 1), pts.begin() + end);
  return b2;
}

// Exact fallback for degenerate inputs: the optimal ball is the circumball
// of some affinely independent subset, so the minimum over all containing
// circumballs is the answer.  Cost 2^L small solves; L <= 16 in practice.
ChebResult brute_cheb(const std::vector<Point>& list) {
  const std::size_t L = list.size();
  ChebResult best;
  best.radius_sq = std::numeric_limits<double>::infinity();
  std::vector<const Point*> subset;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << L); ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < L; ++i)
      if (mask & (std::uint64_t{1} << i)) subset.push_back(&list[i]);
    if (subset.size() > list.front().size() + 1) continue;
    Ball b = ball_of_support(subset);
    if (b.degenerate || b.r2 < 0.0 || b.r2 >= best.radius_sq) continue;
    bool contains = true;
    for (const auto& p : list)
      if (sq_dist(b.center, p) > b.r2 + kBoundaryTol * (1.0 + b.r2)) {
        contains = false;
        break;
      }
    if (contains) {
      best.radius_sq = b.r2;
      best.center = b.center;
    }
  }
  return best;
}

}  // namespace

ChebResult cheb_sq_radius(const std::vector<Point>& list) {
  check_list(list);
  if (list.size() == 1) return {0.0, list.front()};

  std::vector<const Point*> pts(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) pts[i] = &list[i];
  std::vector<const Point*> support;
  Ball b = welzl(pts, pts.size(), support, list.front().size() + 1);

  // verify: containment of all points, and the shrink certificate that the
  // center is a convex combination of its support
  bool ok = !b.degenerate && b.r2 >= 0.0;
  if (ok)
    for (const auto& p : list)
      if (sq_dist(b.center, p) > b.r2 + 1e-9 * (1.0 + b.r2)) {
        ok = false;
        break;
      }
  if (ok)
    for (double l : b.lambda)
      if (l < -1e-9) {
        ok = false;
        break;
      }
  if (!ok) {
    ChebResult r = brute_cheb(list);
    if (!std::isfinite(r.radius_sq))
      throw std::runtime_error("cheb_sq_radius: enclosing-ball search failed");
    return r;
  }
  return {b.r2, std::move(b.center)};
}

double max_sq_radius(const std::vector<Point>& list) {
  const Point c = centroid(list);
  double m = 0.0;
  for (const auto& p : list) m = std::max(m, sq_dist(p, c));
  return m;
}

double radius_for_notion(const std::vector<Point>& list, Notion notion) {
  switch (notion) {
    case Notion::chebyshev: return cheb_sq_radius(list).radius_sq;
    case Notion::average_radius: return avg_sq_radius(list);
    case Notion::max_to_centroid: return max_sq_radius(list);
  }
  throw std::invalid_argument("bad notion");
}

// ---- code-level operations -----------------------------------------------------

namespace {

// distance oracle with a cached matrix when it fits
class DistCache {
 public:
  explicit DistCache(const Code& code) : code_(code) {
    if (code.size() <= 2048) {
      const std::size_t M = code.size();
      cache_.resize(M * M, 0.0);
      for (std::size_t i = 0; i < M; ++i)
        for (std::size_t j = i + 1; j < M; ++j) {
          double d = sq_dist(code.points[i], code.points[j]);
          cache_[i * M + j] = d;
          cache_[j * M + i] = d;
        }
    }
  }
  double operator()(std::size_t i, std::size_t j) const {
    if (!cache_.empty()) return cache_[i * code_.size() + j];
    return sq_dist(code_.points[i], code_.points[j]);
  }

 private:
  const Code& code_;
  std::vector<double> cache_;
};

std::vector<Point> gather(const Code& code, const std::vector<int>& idx) {
  std::vector<Point> list;
  list.reserve(idx.size());
  for (int i : idx) list.push_back(code.points[static_cast<std::size_t>(i)]);
  return list;
}

ListWitness make_witness(const Code& code, const std::vector<int>& idx, Notion notion) {
  ListWitness w;
  w.indices = idx;
  w.notion = notion;
  const auto list = gather(code, idx);
  if (notion == Notion::chebyshev) {
    auto r = cheb_sq_radius(list);
    w.radius_sq = r.radius_sq;
    w.center = std::move(r.center);
  } else {
    w.center = centroid(list);
    w.radius_sq = notion == Notion::average_radius ? avg_sq_radius(list) : max_sq_radius(list);
  }
  return w;
}

}  // namespace

ListWitness code_min_radius(const Code& code, int L, Notion notion) {
  if (L < 1) throw std::invalid_argument("code_min_radius: L must be positive");
  if (code.size() < static_cast<std::size_t>(L))
    throw std::invalid_argument("code_min_radius: fewer than L points");

  const DistCache d2(code);
  // each unordered pair is summed once, so avg radius = pair_sum / L^2
  const double LL = static_cast<double>(L) * static_cast<double>(L);
  double incumbent = std::numeric_limits<double>::infinity();
  std::vector<int> best;

  detail::scan_subsets(
      code.size(), L, d2,
      [&] { return incumbent * LL * (1.0 + 1e-9); },
      [&](const std::vector<int>& idx, double pair_sum) {
        double r;
        if (notion == Notion::average_radius) {
          r = pair_sum / LL;
        } else {
          if (pair_sum / LL > incumbent) return;  // avg lower-bounds cheb and max
          r = radius_for_notion(gather(code, idx), notion);
        }
        if (r < incumbent) {
          incumbent = r;
          best = idx;
        }
      });

  return make_witness(code, best, notion);
}

VerifyResult verify_packing(const Code& code, const PackingParams& params) {
  validate(params);
  if (code.n != params.n) throw std::invalid_argument("verify_packing: dimension mismatch");
  VerifyResult res;
  if (params.P) {
    const double cap = params.n * *params.P;
    for (std::size_t i = 0; i < code.size(); ++i)
      if (sq_norm(code.points[i]) > cap * (1.0 + 1e-9) + 1e-12)
        res.norm_violations.push_back(static_cast<int>(i));
  }
  if (code.size() < static_cast<std::size_t>(params.L)) return res;  // vacuous
  ListWitness w = code_min_radius(code, params.L, params.notion);
  const double nN = static_cast<double>(params.n) * params.N;
  if (!(w.radius_sq > nN)) {  // strict: equality is a violation
    res.ok = false;
    res.witness = std::move(w);
  }
  return res;
}

std::vector<int> list_decode(const Code& code, const Point& y, double N) {
  if (static_cast<int>(y.size()) != code.n)
    throw std::invalid_argument("list_decode: dimension mismatch");
  const double nN = static_cast<double>(code.n) * N;
  std::vector<int> hits;
  for (std::size_t i = 0; i < code.size(); ++i)
    if (sq_dist(code.points[i], y) <= nN) hits.push_back(static_cast<int>(i));
  return hits;
}

Code lift_ball_to_sphere(const Code& code) {
  if (!code.power_limit)
    throw std::invalid_argument("lift_ball_to_sphere: code has no power limit");
  const double P = *code.power_limit;
  const double target = (code.n + 1) * P;
  std::vector<Point> rows;
  rows.reserve(code.size());
  for (const auto& p : code.points) {
    const double s = target - sq_norm(p);
    if (s < -1e-9 * (1.0 + target))
      throw std::invalid_argument("lift_ball_to_sphere: row violates the power constraint");
    Point q = p;
    q.push_back(std::sqrt(std::max(s, 0.0)));
    rows.push_back(std::move(q));
  }
  return make_code(code.n + 1, std::move(rows), P);
}

double bf_multipack_floor(const Code& code, int L) {
  if (code.size() < 2) throw std::invalid_argument("bf_multipack_floor: need at least 2 points");
  if (L < 2) throw std::invalid_argument("bf_multipack_floor: L must be at least 2");
  double dmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j)
      dmin = std::min(dmin, sq_dist(code.points[i], code.points[j]));
  return (static_cast<double>(L) - 1.0) / (2.0 * static_cast<double>(L)) * dmin;
}

}  // namespace mpack
