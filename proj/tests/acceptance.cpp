// Acceptance gate: ten end-to-end checks with pinned tolerances, one printed
// line each, exit code equal to the number of failures.  Checks that miss
// their target report the measured value instead of loosening the tolerance.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mpack/bounds.hpp"
#include "mpack/covering.hpp"
#include "mpack/ensembles.hpp"
#include "mpack/expurgation.hpp"
#include "mpack/geometry.hpp"
#include "mpack/montecarlo.hpp"
#include "mpack/rng.hpp"
#include "test_util.hpp"

using namespace mpack;
using testutil::random_list;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

// certified branch-and-bound oracle for the minimax squared radius: a cell
// survives only while a clipping lower bound says it could still beat the
// incumbent by more than kGap, so an empty active set certifies the result
// within kGap.  Returns nothing if certification is not reached.
std::optional<double> grid_minimax_sq(const std::vector<Point>& list) {
  constexpr double kGap = 1e-5;
  const std::size_t n = list.front().size();
  Point lo(n, std::numeric_limits<double>::infinity());
  Point hi(n, -std::numeric_limits<double>::infinity());
  for (const auto& p : list)
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }

  const auto worst_of = [&](const Point& c) {
    double worst = 0.0;
    for (const auto& p : list) worst = std::max(worst, sq_dist(p, c));
    return worst;
  };

  Point widths(n);
  for (std::size_t i = 0; i < n; ++i) widths[i] = hi[i] - lo[i];
  std::vector<Point> cells = {lo};
  Point c(n);
  double best = worst_of(lo);
  for (int level = 0; level < 60 && !cells.empty(); ++level) {
    for (std::size_t i = 0; i < n; ++i) widths[i] *= 0.5;
    std::vector<Point> next;
    next.reserve(cells.size() * 2);
    for (const auto& corner : cells) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Point clo(n);
        for (std::size_t i = 0; i < n; ++i)
          clo[i] = corner[i] + ((mask >> i) & 1u ? widths[i] : 0.0);
        for (std::size_t i = 0; i < n; ++i) c[i] = clo[i] + 0.5 * widths[i];
        best = std::min(best, worst_of(c));
        double lb = 0.0;
        for (const auto& p : list) {
          double d = 0.0;
          for (std::size_t i = 0; i < n; ++i) {
            const double v = std::clamp(p[i], clo[i], clo[i] + widths[i]);
            d += (p[i] - v) * (p[i] - v);
          }
          lb = std::max(lb, d);
        }
        if (lb < best - kGap) next.push_back(std::move(clo));
      }
    }
    cells = std::move(next);
    if (cells.size() >= std::size_t{4} << 20) return std::nullopt;
  }
  if (!cells.empty()) return std::nullopt;
  return best;
}

// golden-section coordinate ascent on E over s, lambda >= 0, independent of
// the closed-form maximizer beyond a generous bounding box
struct AscentResult {
  double s = 0.0, lambda = 0.0, value = 0.0;
};

AscentResult ascend_E(int L, double P, double N, double s0, double l0) {
  const double s_hi = (1.0 / (2.0 * P)) * (1.0 - 1e-12);
  const double l_hi = (L - 1.0) / (2.0 * L * N) + 1.0;

  auto golden = [](const std::function<double(double)>& f, double a, double b) {
    const double phi = 0.6180339887498948482;
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 200 && b - a > 1e-14; ++it) {
      if (fc > fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - phi * (b - a);
        fc = f(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + phi * (b - a);
        fd = f(d);
      }
    }
    return 0.5 * (a + b);
  };

  AscentResult o;
  o.s = s0;
  o.lambda = l0;
  for (int sweep = 0; sweep < 200; ++sweep) {
    const double prev_s = o.s, prev_l = o.lambda;
    o.s = golden([&](double s) { return exponent_E(s, o.lambda, L, P, N); }, 0.0, s_hi);
    o.lambda = golden([&](double l) { return exponent_E(o.s, l, L, P, N); }, 0.0, l_hi);
    if (std::fabs(o.s - prev_s) < 1e-12 && std::fabs(o.lambda - prev_l) < 1e-12) break;
  }
  o.value = exponent_E(o.s, o.lambda, L, P, N);
  return o;
}

// 1. four average-radius forms agree and the radius chain holds
Outcome c1_representations() {
  int bad = 0;
  double worst = 0.0;
  for (std::uint64_t tag = 0; tag < 10000; ++tag) {
    const int L = 2 + static_cast<int>(tag % 7);
    const int n = 1 + static_cast<int>(tag % 64);
    const auto list = random_list(L, n, 1.0 + static_cast<double>(tag % 3), 101, tag);
    const double a = avg_sq_radius(list, AvgForm::definition);
    const double b = avg_sq_radius(list, AvgForm::norm_minus_centroid);
    const double c = avg_sq_radius(list, AvgForm::power_minus_correlation);
    const double d = avg_sq_radius(list, AvgForm::pairwise);
    const double rel = std::max({std::fabs(a - b), std::fabs(a - c), std::fabs(a - d)}) /
                       (1.0 + std::fabs(a));
    worst = std::max(worst, rel);
    if (rel > 1e-9) ++bad;

    const double cheb = cheb_sq_radius(list).radius_sq;
    const double mx = max_sq_radius(list);
    const double slack = 1e-9 * (1.0 + mx);
    if (!(a <= cheb + slack && cheb <= mx + slack)) ++bad;
  }
  return {bad == 0, fmt("four avg-radius forms within 1e-9 relative and avg <= cheb <= max "
                        "on 10000 lists, n <= 64, L <= 8 (worst form spread %.1e)",
                        worst)};
}

// 2. chebyshev radius against the certified grid oracle and analytic fixtures
Outcome c2_cheb_oracle() {
  bool ok = true;
  std::string why;

  const double pair = cheb_sq_radius({{0.0, 0.0}, {2.0, 0.0}}).radius_sq;
  const double equi =
      cheb_sq_radius({{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}}).radius_sq;
  const double right = cheb_sq_radius({{0.0, 0.0}, {2.0, 0.0}, {0.0, 2.0}}).radius_sq;
  if (std::fabs(pair - 1.0) > 1e-9 || std::fabs(equi - 1.0 / 3.0) > 1e-9 ||
      std::fabs(right - 2.0) > 1e-9) {
    ok = false;
    why = fmt("fixtures gave %.12f, %.12f, %.12f", pair, equi, right);
  }

  double worst = 0.0;
  for (std::uint64_t tag = 0; tag < 200 && ok; ++tag) {
    const int L = 2 + static_cast<int>(tag % 4);
    const int n = 1 + static_cast<int>(tag % 3);
    const auto list = random_list(L, n, 1.0, 13, tag);
    const auto oracle = grid_minimax_sq(list);
    if (!oracle) {
      ok = false;
      why = fmt("oracle failed to certify list %llu", static_cast<unsigned long long>(tag));
      break;
    }
    const double got = cheb_sq_radius(list).radius_sq;
    worst = std::max(worst, std::fabs(got - *oracle));
    if (std::fabs(got - *oracle) > 1e-4 || got > *oracle + 1e-9) {
      ok = false;
      why = fmt("list %llu: got %.8f vs oracle %.8f",
                static_cast<unsigned long long>(tag), got, *oracle);
    }
  }
  if (ok)
    why = fmt("200 random lists within 1e-4 of the certified oracle (worst gap %.1e); "
              "fixtures 1, 1/3, 2 within 1e-9",
              worst);
  return {ok, why};
}

// 3. Monte Carlo gaussian tail against the closed form
Outcome c3_golden_tail() {
  EnsembleSpec spec;
  spec.kind = EnsembleKind::gaussian;
  spec.n = 20;
  spec.power = 1.0;
  spec.seed = 424242;

  const double exact = gaussian_tail_exact(20, 3, 1.0, 0.3);
  const auto est = mc_tail(spec, 3, 20 * 0.3, 1000000, 424242, 4);
  const bool ok = est.std_err > 0.0 && std::fabs(est.p_hat - exact) <= 3.0 * est.std_err;
  return {ok, fmt("10^6 samples at n=20, L=3, N/P=0.3: p_hat %.6e vs exact %.6e "
                  "(|diff| = %.2f std errors, limit 3)",
                  est.p_hat, exact, std::fabs(est.p_hat - exact) / est.std_err)};
}

// 4. tail exponent at n = 800 against the analytic rate
Outcome c4_exponent_convergence() {
  const int L = 3;
  const double rho = 0.25;  // 1 - (N/P) L/(L-1) at N/P = 0.5
  const double target = 0.5 * (L - 1) * (-std::log(1.0 - rho) - rho);
  const double half_target = eval_bound(BoundName::lb_gaussian, L, 0.5);

  const double e800 = -std::log(gaussian_tail_exact(800, L, 1.0, 0.5)) / 800.0;
  const double e6400 = -std::log(gaussian_tail_exact(6400, L, 1.0, 0.5)) / 6400.0;
  const bool ok = std::fabs(e800 - target) <= 0.02 * target &&
                  std::fabs(e800 / (L - 1) - half_target) <= 0.02 * half_target;
  return {ok, fmt("-ln(p)/n at n=800 is %.7f vs analytic rate %.7f (%+.1f%%, tolerance 2%%); "
                  "the gap is the finite-n excess of order ln(n)/n, still %+.1f%% at n=6400",
                  e800, target, 100.0 * (e800 / target - 1.0),
                  100.0 * (e6400 / target - 1.0))};
}

// 5. closed-form bound curves: zeros, ordering, limits, transform, ranking
Outcome c5_bound_curves() {
  bool ok = true;
  std::string why;
  const auto fail = [&](std::string msg) {
    if (ok) why = std::move(msg);
    ok = false;
  };

  const BoundName lbs[] = {BoundName::lb_gaussian, BoundName::lb_spherical,
                           BoundName::lb_spherical_improved, BoundName::lb_blachman_few};
  for (int L = 2; L <= 10; ++L) {
    const double pp = plotkin_point(L);
    for (int i = 1; i <= 1000; ++i) {
      const double x = pp * (static_cast<double>(i) / 1000.0);
      const double ub = eval_bound(BoundName::ub_eb, L, x);
      const double sph = eval_bound(BoundName::lb_spherical, L, x);
      const double imp = eval_bound(BoundName::lb_spherical_improved, L, x);
      for (BoundName name : lbs) {
        const double lb = eval_bound(name, L, x);
        if (std::isfinite(lb) && std::isfinite(ub) && lb > ub + 1e-12)
          fail(fmt("ordering fails at L=%d, x=%.4f", L, x));
      }
      if (std::isfinite(sph) && std::isfinite(imp) && sph > imp + 1e-12)
        fail(fmt("spherical above improved at L=%d, x=%.4f", L, x));
    }
    for (BoundName name : {BoundName::lb_gaussian, BoundName::lb_spherical,
                           BoundName::lb_spherical_improved, BoundName::lb_blachman_few,
                           BoundName::ub_eb})
      if (std::fabs(eval_bound(name, L, pp)) > 1e-12)
        fail(fmt("nonzero value at the critical ratio for L=%d", L));

    for (double N : {0.05, 0.15, 0.25, 0.35, 0.45})
      if (std::fabs(bounded_to_unbounded_rate(eval_bound(BoundName::ub_eb, L, N), 1.0) -
                    eval_bound(BoundName::ub_eb_unbdd, L, N)) > 1e-12)
        fail(fmt("transform identity fails at L=%d, N=%.2f", L, N));
  }
  for (double N : {0.1, 0.5, 0.9})  // transform with a non-unit power
    if (std::fabs(bounded_to_unbounded_rate(eval_bound(BoundName::ub_eb, 4, N / 2.0), 2.0) -
                  eval_bound(BoundName::ub_eb_unbdd, 4, N)) > 1e-12)
      fail(fmt("transform identity fails at P=2, N=%.2f", N));

  const int bigL = 1000000;
  for (int i = 1; i <= 99; ++i) {
    const double x = 0.01 * i;
    const double cap = eval_bound(BoundName::cap_large_L, 2, x);
    if (std::fabs(eval_bound(BoundName::ub_eb, bigL, x) - cap) > 1e-5 ||
        std::fabs(eval_bound(BoundName::lb_spherical_improved, bigL, x) - cap) > 1e-5)
      fail(fmt("bounded large-L limit off at x=%.2f", x));
    const double ucap = eval_bound(BoundName::cap_large_L_unbdd, 2, x);
    if (std::fabs(eval_bound(BoundName::ub_eb_unbdd, bigL, x) - ucap) > 1e-5 ||
        std::fabs(eval_bound(BoundName::lb_ppp, bigL, x) - ucap) > 1e-5)
      fail(fmt("unbounded large-L limit off at N=%.2f", x));
  }

  const double g = eval_bound(BoundName::lb_gaussian, 5, 0.4);
  const double s = eval_bound(BoundName::lb_spherical, 5, 0.4);
  const double im = eval_bound(BoundName::lb_spherical_improved, 5, 0.4);
  const double bf = eval_bound(BoundName::lb_blachman_few, 5, 0.4);
  const double eb = eval_bound(BoundName::ub_eb, 5, 0.4);
  if (std::fabs(im - 0.209247) > 1e-4 || std::fabs(bf - 0.143841) > 1e-4 ||
      std::fabs(s - 0.112673) > 1e-4 || std::fabs(g - 0.096574) > 1e-4 ||
      std::fabs(eb - 0.5 * std::log(2.0)) > 1e-9 || !(im > bf && bf > s && s > g && g < eb))
    fail("plug-in ranking at L=5, x=0.4 does not reproduce");

  if (ok)
    why = fmt("zeros (1e-12), ordering, large-L limits (1e-5), transform identity (1e-12) "
              "for L in 2..10 on 1000-point grids; ranking at L=5, x=0.4: "
              "%.4f > %.4f > %.4f > %.4f < %.4f",
              im, bf, s, g, eb);
  return {ok, why};
}

// 6. closed-form exponent maximizer against the ascent oracle
Outcome c6_exponent_max() {
  bool ok = true;
  std::string why;
  double worst_arg = 0.0, worst_val = 0.0;
  for (int L = 2; L <= 21 && ok; ++L) {
    for (int j = 0; j < 20 && ok; ++j) {
      const double P = 1.0;
      const double N = P * plotkin_point(L) * ((j + 0.5) / 20.0);
      const auto pt = maximize_E(L, P, N);
      const auto oracle = ascend_E(L, P, N, pt.s / 2.0, pt.lambda / 2.0);
      worst_arg = std::max({worst_arg, std::fabs(oracle.s - pt.s),
                            std::fabs(oracle.lambda - pt.lambda)});
      worst_val = std::max(worst_val, std::fabs(oracle.value - pt.value));
      const double imp = eval_bound(BoundName::lb_spherical_improved, L, N / P);
      if (std::fabs(oracle.s - pt.s) > 1e-6 || std::fabs(oracle.lambda - pt.lambda) > 1e-6 ||
          std::fabs(oracle.value - pt.value) > 1e-9 * (1.0 + std::fabs(pt.value)) ||
          std::fabs(pt.value / (L - 1) - imp) > 1e-9) {
        ok = false;
        why = fmt("mismatch at L=%d, N=%.4f", L, N);
      }
    }
  }
  for (const auto [P, N] : {std::pair{1.0, 0.1}, {1.0, 0.25}, {1.0, 0.4}, {2.0, 0.5}}) {
    const double want = 0.5 * std::log(P * P / (4.0 * N * (P - N)));
    if (std::fabs(maximize_E(2, P, N).value - want) > 1e-9) {
      ok = false;
      why = fmt("L=2 reduction fails at P=%.1f, N=%.2f", P, N);
    }
  }
  if (ok)
    why = fmt("closed form matches the ascent oracle on a 20x20 grid "
              "(worst arg gap %.1e, value gap %.1e) and the L=2 closed form",
              worst_arg, worst_val);
  return {ok, why};
}

// 7. random coding with expurgation at 80%% of the achievable rate
Outcome c7_expurgation() {
  const int n = 50, L = 3;
  const double rate = 0.8 * eval_bound(BoundName::lb_gaussian, L, 0.45);
  int ok_runs = 0, big_runs = 0;
  std::size_t initial = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    EnsembleSpec spec;
    spec.kind = EnsembleKind::gaussian;
    spec.n = n;
    spec.power = 1.0;
    spec.seed = seed;
    PackingParams params;
    params.n = n;
    params.L = L;
    params.N = 0.45;
    params.notion = Notion::average_radius;
    auto [out, report] = construct(spec, params, rate);
    initial = report.initial_size;
    if (report.verified) ++ok_runs;
    if (report.final_size * 2 >= report.initial_size) ++big_runs;
  }
  const bool ok = ok_runs == 20 && big_runs >= 19;
  return {ok, fmt("n=50, L=3, N=0.45 gaussian at 0.8x the achievable rate (M=%zu): "
                  "%d/20 runs verified, %d/20 kept at least half the points (need 20 and 19)",
                  initial, ok_runs, big_runs)};
}

// 8. cap-code identity, cap version of the critical-ratio check, size bound,
// and sampled covering density
Outcome c8_caps_and_covering() {
  bool id_ok = true;
  for (std::uint64_t k = 0; k < 1000; ++k) {
    const int L = 2 + static_cast<int>(k % 3);
    const int M = L + static_cast<int>(k % 61);
    EnsembleSpec spec;
    spec.kind = EnsembleKind::sphere;
    spec.n = 3 + static_cast<int>(k % 6);
    spec.power = 1.0 + 0.25 * static_cast<double>(k % 3);
    spec.seed = 9000 + k;
    const Code code = sample(spec, static_cast<std::size_t>(M));
    const auto [lhs, rhs] = cap_code_identity(code, L);
    if (std::fabs(lhs - rhs) > 1e-9 * (1.0 + std::fabs(rhs))) id_ok = false;
  }

  bool cap_ok = true;
  for (std::uint64_t k = 0; k < 1000; ++k) {
    const int n = 3 + static_cast<int>(k % 6);
    const int L = 2 + static_cast<int>(k % 3);
    const int M = L + 2 + static_cast<int>(k % 18);
    const double alpha = 0.3 + 0.028 * static_cast<double>(k % 40);
    const double power = 1.0 + 0.1 * static_cast<double>(k % 5);
    const Code code = sample_cap(n, power, alpha, static_cast<std::size_t>(M), 17000 + k);
    if (!plotkin_cap_check(code, L, alpha).ok) cap_ok = false;
  }

  bool size_ok = true;
  for (const double rho : {1.0, 0.5}) {
    const std::size_t cap_size = rho == 1.0 ? 2 : 3;
    for (std::uint64_t seed = 50; seed < 60; ++seed) {
      const Code raw = sample_cap(6, 1.0, kPi / 2.0, 40, seed);
      PackingParams params;
      params.n = 6;
      params.L = 2;
      params.P = 1.0;
      params.N = (1.0 + rho) * 0.5;  // (1+rho)(L-1)/L with sin^2(pi/2) = 1
      params.notion = Notion::average_radius;
      auto [out, report] = expurgate(raw, params);
      if (!report.verified || out.size() > cap_size) size_ok = false;
    }
  }

  int clear4 = 0, clear48 = 0;
  double mean4 = 0.0;
  std::size_t K4 = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto cov = build_covering(8, kPi / 3.0, 4.0, seed);
    K4 = cov.centers.size();
    const double frac = coverage_fraction(cov, 20000, 1000 + seed);
    mean4 += frac / 20.0;
    if (frac >= 0.999) ++clear4;
    const auto dense = build_covering(8, kPi / 3.0, 48.0, seed);
    if (coverage_fraction(dense, 20000, 1000 + seed) >= 0.999) ++clear48;
  }
  const bool cover_ok = clear4 >= 18;

  const bool ok = id_ok && cap_ok && size_ok && cover_ok;
  return {ok, fmt("identity %s (1000 codes), cap check %s (1000 codes), size bound %s; "
                  "covering at n=8, alpha=pi/3, oversample 4 (K=%zu) reaches 99.9%% in "
                  "%d/20 seeds, mean coverage %.3f (need 18/20; oversample 48 clears %d/20)",
                  id_ok ? "holds" : "FAILS", cap_ok ? "holds" : "FAILS",
                  size_ok ? "holds" : "FAILS", K4, clear4, mean4, clear48)};
}

// 9. Khinchin constants: exact p=2 values and the MC moment inequality
Outcome c9_khinchin() {
  bool exact_ok = true;
  for (int n = 2; n <= 64; ++n) {
    if (std::fabs(khinchin_constant(n, 2, Support::sphere) - 1.0) > 1e-12) exact_ok = false;
    const double want = std::sqrt(static_cast<double>(n) / (n + 2.0));
    if (std::fabs(khinchin_constant(n, 2, Support::ball) - want) > 1e-12) exact_ok = false;
  }

  const int n = 16, L = 4;
  EnsembleSpec spec;
  spec.kind = EnsembleKind::sphere;
  spec.n = n;
  spec.power = 1.0 / n;  // unit vectors
  spec.seed = 3131;

  bool mc_ok = true;
  double worst_ratio = 0.0;
  const std::uint64_t lists = 300000;
  for (int p : {2, 4, 8}) {
    double sum = 0.0, sum_sq = 0.0;
    Point row(n), acc(n);
    for (std::uint64_t s = 0; s < lists; ++s) {
      auto g = rng_stream(spec.seed, s);
      std::fill(acc.begin(), acc.end(), 0.0);
      for (int i = 0; i < L; ++i) {
        draw_row(spec, g, row);
        for (int j = 0; j < n; ++j) acc[j] += row[j];
      }
      const double v = std::pow(sq_norm(acc), p / 2.0);
      sum += v;
      sum_sq += v * v;
    }
    const double mean = sum / lists;
    const double rel_se = std::sqrt((sum_sq / lists - mean * mean) / lists) / mean;
    const double cap = std::pow(khinchin_constant(n, p, Support::sphere),
                                static_cast<double>(p)) *
                       std::pow(static_cast<double>(L), p / 2.0);
    worst_ratio = std::max(worst_ratio, mean / cap);
    if (mean > cap * (1.0 + 5.0 * rel_se)) mc_ok = false;
  }
  const bool ok = exact_ok && mc_ok;
  return {ok, fmt("C(n,2) exact to 1e-12 for n <= 64 (sphere 1, ball sqrt(n/(n+2))); "
                  "MC moments at n=16, L=4, p in {2,4,8} stay within the cap "
                  "(worst mean/cap ratio %.3f, margin 5 std errors)",
                  worst_ratio)};
}

// 10. ball-to-sphere lift: exact norms and non-decreasing radii
Outcome c10_lift() {
  bool ok = true;
  for (std::uint64_t k = 0; k < 1000 && ok; ++k) {
    const int n = 2 + static_cast<int>(k % 10);
    const double P = 0.5 + 0.25 * static_cast<double>(k % 4);
    const std::size_t M = 3 + k % 10;
    const int L = 2 + static_cast<int>(k % 2);
    EnsembleSpec spec;
    spec.kind = EnsembleKind::ball;
    spec.n = n;
    spec.power = P;
    spec.seed = 23000 + k;
    const Code ball = sample(spec, M);
    const Code sph = lift_ball_to_sphere(ball);

    const double target = (n + 1) * P;
    for (const auto& p : sph.points)
      if (std::fabs(sq_norm(p) - target) > 1e-9 * (1.0 + target)) ok = false;

    // two sampled L-subsets per code, radii compared before and after
    rng_stream g(777, k);
    for (int rep = 0; rep < 2; ++rep) {
      std::vector<std::size_t> idx(M);
      for (std::size_t i = 0; i < M; ++i) idx[i] = i;
      for (std::size_t i = 0; i < static_cast<std::size_t>(L); ++i) {
        const auto j = i + static_cast<std::size_t>(g.uniform() * (M - i)) % (M - i);
        std::swap(idx[i], idx[j]);
      }
      std::vector<Point> lo, hi;
      for (int i = 0; i < L; ++i) {
        lo.push_back(ball.points[idx[i]]);
        hi.push_back(sph.points[idx[i]]);
      }
      const double a0 = avg_sq_radius(lo), a1 = avg_sq_radius(hi);
      const double c0 = cheb_sq_radius(lo).radius_sq, c1 = cheb_sq_radius(hi).radius_sq;
      if (a1 < a0 - 1e-9 * (1.0 + a0) || c1 < c0 - 1e-9 * (1.0 + c0)) ok = false;
    }
  }
  return {ok, "1000 lifted ball codes: norms equal (n+1)P to 1e-9 and average/chebyshev "
              "radii never shrink on sampled subsets"};
}

}  // namespace

int main() {
  struct Entry {
    int id;
    double budget_s;
    Outcome (*fn)();
  };
  const Entry entries[] = {
      {1, 5.0, c1_representations}, {2, 30.0, c2_cheb_oracle},
      {3, 60.0, c3_golden_tail},    {4, 1.0, c4_exponent_convergence},
      {5, 5.0, c5_bound_curves},    {6, 5.0, c6_exponent_max},
      {7, 120.0, c7_expurgation},   {8, 120.0, c8_caps_and_covering},
      {9, 60.0, c9_khinchin},       {10, 10.0, c10_lift},
  };

  int failures = 0;
  for (const auto& e : entries) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.fn();
    } catch (const std::exception& ex) {
      o = {false, fmt("threw: %s", ex.what())};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && secs > e.budget_s) {
      o.pass = false;
      o.detail += fmt("; exceeded the %.0f s budget", e.budget_s);
    }
    std::printf("criterion %2d %s (%6.2f s) %s\n", e.id, o.pass ? "PASS" : "FAIL", secs,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures;
}
