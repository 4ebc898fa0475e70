#include "mpack/ensembles.hpp"

#include <cmath>
#include <stdexcept>

#include "mpack/specfn.hpp"

namespace mpack {

std::string to_string(EnsembleKind k) {
  switch (k) {
    case EnsembleKind::gaussian: return "gaussian";
    case EnsembleKind::sphere: return "sphere";
    case EnsembleKind::ball: return "ball";
    case EnsembleKind::truncated_gaussian: return "trunc-gaussian";
  }
  return "?";
}

EnsembleKind ensemble_from_string(const std::string& s) {
  if (s == "gaussian") return EnsembleKind::gaussian;
  if (s == "sphere") return EnsembleKind::sphere;
  if (s == "ball") return EnsembleKind::ball;
  if (s == "trunc-gaussian" || s == "truncated-gaussian") return EnsembleKind::truncated_gaussian;
  throw std::invalid_argument("unknown ensemble: " + s);
}

void validate(const EnsembleSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("ensemble: dimension must be positive");
  if (!(spec.power > 0.0) || !std::isfinite(spec.power))
    throw std::invalid_argument("ensemble: power must be positive and finite");
  if (spec.kind == EnsembleKind::truncated_gaussian) {
    if (!spec.shell_delta) throw std::invalid_argument("ensemble: trunc-gaussian needs shell_delta");
    if (!(*spec.shell_delta > 0.0)) throw std::invalid_argument("ensemble: shell_delta must be positive");
  }
}

namespace {

// unit vector uniform on S^{dim-1}, written into row[offset..offset+dim)
void unit_direction(rng_stream& g, Point& row, std::size_t offset, std::size_t dim) {
  double nn = 0.0;
  do {
    nn = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      double v = g.normal();
      row[offset + i] = v;
      nn += v * v;
    }
  } while (nn == 0.0);
  const double inv = 1.0 / std::sqrt(nn);
  for (std::size_t i = 0; i < dim; ++i) row[offset + i] *= inv;
}

}  // namespace

void draw_row(const EnsembleSpec& spec, rng_stream& g, Point& row) {
  const std::size_t n = static_cast<std::size_t>(spec.n);
  row.resize(n);
  const double sd = std::sqrt(spec.power);
  switch (spec.kind) {
    case EnsembleKind::gaussian:
      for (std::size_t i = 0; i < n; ++i) row[i] = sd * g.normal();
      return;
    case EnsembleKind::sphere: {
      unit_direction(g, row, 0, n);
      const double r = std::sqrt(static_cast<double>(spec.n) * spec.power);
      for (double& v : row) v *= r;
      return;
    }
    case EnsembleKind::ball: {
      unit_direction(g, row, 0, n);
      // radius r with P[R <= r] = (r/rmax)^n, i.e. rmax * U^(1/n)
      const double r = std::sqrt(static_cast<double>(spec.n) * spec.power) *
                       std::pow(g.uniform(), 1.0 / static_cast<double>(spec.n));
      for (double& v : row) v *= r;
      return;
    }
    case EnsembleKind::truncated_gaussian: {
      const double hi = static_cast<double>(spec.n) * spec.power;
      const double lo = hi - *spec.shell_delta;
      for (;;) {
        double nn = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          double v = sd * g.normal();
          row[i] = v;
          nn += v * v;
        }
        if (nn >= lo && nn <= hi) return;
      }
    }
  }
  throw std::invalid_argument("draw_row: bad ensemble kind");
}

Code sample(const EnsembleSpec& spec, std::size_t M) {
  validate(spec);
  std::vector<Point> rows(M);
  for (std::size_t i = 0; i < M; ++i) {
    rng_stream g(spec.seed, i);
    draw_row(spec, g, rows[i]);
  }
  std::optional<double> limit;
  if (spec.kind != EnsembleKind::gaussian) limit = spec.power;
  return make_code(spec.n, std::move(rows), limit);
}

double trunc_acceptance_exact(int n, double power, double delta) {
  if (n < 1 || !(power > 0.0) || !(delta > 0.0))
    throw std::invalid_argument("trunc_acceptance_exact: bad arguments");
  // |x|^2 / P is chi-square with n degrees of freedom
  const double hi = static_cast<double>(n);
  const double lo = hi - delta / power;
  const double upper = chi2_cdf(hi, hi);
  if (lo <= 0.0) return upper;
  return upper - chi2_cdf(hi, lo);
}

double trunc_acceptance_asymptotic(int n, double power, double delta) {
  if (n < 1 || !(power > 0.0) || !(delta > 0.0))
    throw std::invalid_argument("trunc_acceptance_asymptotic: bad arguments");
  return delta / (2.0 * power * std::sqrt(3.14159265358979323846 * static_cast<double>(n)));
}

Code sample_cap(int n, double power, double alpha, std::size_t M, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("sample_cap: need dimension >= 2");
  if (!(power > 0.0)) throw std::invalid_argument("sample_cap: power must be positive");
  if (!(alpha > 0.0 && alpha <= 3.14159265358979323846))
    throw std::invalid_argument("sample_cap: need alpha in (0, pi]");

  const double a = 0.5 * (static_cast<double>(n) - 1.0);
  const double t0 = std::cos(alpha);
  const double i0 = beta_inc(a, a, 0.5 * (1.0 + t0));  // mass below the cap
  const double rad = std::sqrt(static_cast<double>(n) * power);

  std::vector<Point> rows(M);
  for (std::size_t m = 0; m < M; ++m) {
    rng_stream g(seed, m);
    // invert the latitude CDF restricted to [cos(alpha), 1] by bisection
    const double target = i0 + g.uniform() * (1.0 - i0);
    double lo = t0, hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (beta_inc(a, a, 0.5 * (1.0 + mid)) < target)
        lo = mid;
      else
        hi = mid;
    }
    const double t = 0.5 * (lo + hi);
    Point& row = rows[m];
    row.resize(static_cast<std::size_t>(n));
    unit_direction(g, row, 1, static_cast<std::size_t>(n) - 1);
    const double block = rad * std::sqrt(std::max(0.0, 1.0 - t * t));
    for (std::size_t i = 1; i < row.size(); ++i) row[i] *= block;
    row[0] = rad * t;
  }
  return make_code(n, std::move(rows), power);
}

}  // namespace mpack
