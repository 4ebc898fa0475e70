#include "mpack/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mpack {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

// ln(2 pi e) / 2
const double kHalfLog2PiE = 0.5 * std::log(2.0 * kPi) + 0.5;

void require_L(int L) {
  if (L < 2) throw std::domain_error("bounds: L must be at least 2");
}

}  // namespace

std::string to_string(BoundName name) {
  switch (name) {
    case BoundName::lb_gaussian: return "lb_gaussian";
    case BoundName::lb_spherical: return "lb_spherical";
    case BoundName::lb_spherical_improved: return "lb_spherical_improved";
    case BoundName::lb_blachman_few: return "lb_blachman_few";
    case BoundName::ub_eb: return "ub_eb";
    case BoundName::cap_large_L: return "cap_large_L";
    case BoundName::lb_ppp: return "lb_ppp";
    case BoundName::lb_bf_unbdd: return "lb_bf_unbdd";
    case BoundName::ub_eb_unbdd: return "ub_eb_unbdd";
    case BoundName::cap_large_L_unbdd: return "cap_large_L_unbdd";
  }
  return "?";
}

BoundName bound_from_string(const std::string& s) {
  for (BoundName b : family_bounds(true))
    if (s == to_string(b)) return b;
  for (BoundName b : family_bounds(false))
    if (s == to_string(b)) return b;
  throw std::invalid_argument("unknown bound: " + s);
}

bool is_bounded_family(BoundName name) {
  switch (name) {
    case BoundName::lb_ppp:
    case BoundName::lb_bf_unbdd:
    case BoundName::ub_eb_unbdd:
    case BoundName::cap_large_L_unbdd:
      return false;
    default:
      return true;
  }
}

std::vector<BoundName> family_bounds(bool bounded) {
  if (bounded)
    return {BoundName::lb_gaussian,      BoundName::lb_spherical,
            BoundName::lb_spherical_improved, BoundName::lb_blachman_few,
            BoundName::ub_eb,            BoundName::cap_large_L};
  return {BoundName::lb_ppp, BoundName::lb_bf_unbdd, BoundName::ub_eb_unbdd,
          BoundName::cap_large_L_unbdd};
}

double plotkin_point(int L) {
  require_L(L);
  return (static_cast<double>(L) - 1.0) / static_cast<double>(L);
}

double eval_bound(BoundName name, int L, double x) {
  if (!std::isfinite(x)) throw std::domain_error("eval_bound: x must be finite");

  // the L-independent capacity limits
  if (name == BoundName::cap_large_L) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("cap_large_L: need 0 < x <= 1");
    if (x == 0.0) return kInf;
    return -0.5 * std::log(x);
  }
  if (name == BoundName::cap_large_L_unbdd) {
    if (x <= 0.0) throw std::domain_error("cap_large_L_unbdd: need x > 0");
    return -0.5 * std::log(x) - kHalfLog2PiE;
  }

  require_L(L);
  const double Ld = static_cast<double>(L);

  if (!is_bounded_family(name)) {
    if (x <= 0.0) throw std::domain_error("eval_bound: need x > 0");
    switch (name) {
      case BoundName::lb_ppp:
        return 0.5 * std::log((Ld - 1.0) / (Ld * x)) - kHalfLog2PiE -
               std::log(Ld) / (2.0 * (Ld - 1.0));
      case BoundName::lb_bf_unbdd:
        return 0.5 * std::log((Ld - 1.0) / (2.0 * Ld * x)) - kHalfLog2PiE;
      case BoundName::ub_eb_unbdd:
        return 0.5 * std::log((Ld - 1.0) / (Ld * x)) - kHalfLog2PiE;
      default:
        break;
    }
    throw std::domain_error("eval_bound: bad name");
  }

  const double plotkin = (Ld - 1.0) / Ld;
  if (x < 0.0 || x > plotkin)
    throw std::domain_error("eval_bound: need 0 < x <= (L-1)/L");
  if (x == plotkin) return 0.0;  // every bounded-family bound vanishes here
  if (x == 0.0) {
    // divergent limits, except the spherical bound's finite value
    if (name == BoundName::lb_spherical)
      return 0.5 * (1.0 - std::log(Ld) / (Ld - 1.0));
    return kInf;
  }

  const double ratio = (Ld - 1.0) / (Ld * x);  // > 1 strictly inside the domain
  switch (name) {
    case BoundName::lb_gaussian:
      return 0.5 * (std::log(ratio) + 1.0 / ratio - 1.0);
    case BoundName::lb_spherical:
      return 0.5 * (1.0 - 1.0 / ratio - std::log(Ld * (1.0 - x)) / (Ld - 1.0));
    case BoundName::lb_spherical_improved:
      return 0.5 * std::log(ratio) - std::log(Ld * (1.0 - x)) / (2.0 * (Ld - 1.0));
    case BoundName::lb_blachman_few:
      return 0.5 * std::log((Ld - 1.0) * (Ld - 1.0) /
                            (Ld * x * (2.0 * (Ld - 1.0) - Ld * x)));
    case BoundName::ub_eb:
      return 0.5 * std::log(ratio);
    default:
      break;
  }
  throw std::domain_error("eval_bound: bad name");
}

BoundCurve eval_curve(BoundName name, int L, const std::vector<double>& grid) {
  BoundCurve c;
  c.name = name;
  c.L = L;
  c.grid = grid;
  c.values.reserve(grid.size());
  for (double x : grid) {
    double v;
    try {
      v = eval_bound(name, L, x);
    } catch (const std::domain_error&) {
      v = std::numeric_limits<double>::quiet_NaN();
    }
    c.values.push_back(v);
  }
  return c;
}

double exponent_E(double s, double lambda, int L, double P, double N) {
  require_L(L);
  if (!(P > 0.0) || !(N > 0.0)) throw std::domain_error("exponent_E: need P, N > 0");
  const double a = 1.0 / (2.0 * P) - s;
  if (!(a > 0.0) || !(a + lambda > 0.0))
    throw std::domain_error("exponent_E: outside the log domain");
  const double Ld = static_cast<double>(L);
  return -lambda * Ld * N + s * Ld * P + 0.5 * std::log(a) +
         (Ld - 1.0) / 2.0 * std::log(a + lambda) + Ld / 2.0 * std::log(2.0 * P);
}

ExponentPoint maximize_E(int L, double P, double N) {
  require_L(L);
  if (!(P > 0.0) || !(N > 0.0)) throw std::domain_error("maximize_E: need P, N > 0");
  const double Ld = static_cast<double>(L);
  if (N / P > (Ld - 1.0) / Ld + 1e-15)
    throw std::domain_error("maximize_E: N/P above the Plotkin point");

  ExponentPoint pt;
  pt.s = 0.5 * (1.0 / P - 1.0 / (Ld * (P - N)));
  pt.lambda = (Ld - 1.0) / (2.0 * Ld * N) - 1.0 / (2.0 * P) + pt.s;
  if (pt.s < 0.0 && pt.s > -1e-15) pt.s = 0.0;      // rounding at the boundary
  if (pt.lambda < 0.0 && pt.lambda > -1e-12) pt.lambda = 0.0;
  pt.value = exponent_E(pt.s, pt.lambda, L, P, N);

  // concavity makes a local stencil check a global certificate
  const double hs = 1e-4 * (1.0 + std::fabs(pt.s));
  const double hl = 1e-4 * (1.0 + std::fabs(pt.lambda));
  const double slack = 1e-9 * (1.0 + std::fabs(pt.value));
  for (int ds = -1; ds <= 1; ++ds)
    for (int dl = -1; dl <= 1; ++dl) {
      if (ds == 0 && dl == 0) continue;
      const double s = pt.s + ds * hs;
      const double l = pt.lambda + dl * hl;
      if (1.0 / (2.0 * P) - s <= 0.0 || 1.0 / (2.0 * P) - s + l <= 0.0) continue;
      if (exponent_E(s, l, L, P, N) > pt.value + slack)
        throw std::runtime_error("maximize_E: stencil check failed");
    }
  return pt;
}

double chi2_tail_exponent(double delta, TailSide side) {
  if (side == TailSide::upper) {
    if (!(delta > 0.0)) throw std::domain_error("chi2_tail_exponent: need delta > 0");
    return 0.5 * (-delta + std::log1p(delta));
  }
  if (!(delta > 0.0 && delta < 1.0))
    throw std::domain_error("chi2_tail_exponent: need 0 < delta < 1");
  return 0.5 * (delta + std::log1p(-delta));
}

double khinchin_constant(int n, double p, Support support) {
  if (!(p >= 1.0)) throw std::domain_error("khinchin_constant: need p >= 1");
  const int nmin = support == Support::sphere ? 2 : 1;
  if (n < nmin) throw std::domain_error("khinchin_constant: dimension too small");
  const double nd = static_cast<double>(n);
  const double gam =
      std::exp((std::lgamma((p + nd) / 2.0) - std::lgamma(nd / 2.0)) / p);
  const double front = support == Support::sphere ? std::sqrt(2.0 / nd)
                                                  : std::sqrt(2.0 / (nd + 2.0));
  return front * gam;
}

double bounded_to_unbounded_rate(double rate_nats, double P) {
  if (!(P > 0.0)) throw std::domain_error("bounded_to_unbounded_rate: need P > 0");
  return rate_nats - kHalfLog2PiE - 0.5 * std::log(P);
}

}  // namespace mpack
