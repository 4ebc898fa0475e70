#pragma once

#include <string>
#include <vector>

namespace mpack {

// Density bounds in nats per dimension.  The bounded family is parameterized
// by the noise-to-signal ratio x = N/P on 0 < x <= (L-1)/L; the unbounded
// family by x = N > 0 (its rates may be negative).  The cap_large_L variants
// ignore L.
enum class BoundName {
  lb_gaussian,
  lb_spherical,
  lb_spherical_improved,
  lb_blachman_few,
  ub_eb,
  cap_large_L,
  lb_ppp,
  lb_bf_unbdd,
  ub_eb_unbdd,
  cap_large_L_unbdd,
};

std::string to_string(BoundName name);
BoundName bound_from_string(const std::string& s);
bool is_bounded_family(BoundName name);

// The six bounded-family names, or the four unbounded ones, in display order.
std::vector<BoundName> family_bounds(bool bounded);

// (L-1)/L, the ratio above which no positive-rate bounded packing exists.
double plotkin_point(int L);

// Closed-form evaluation.  At x = (L-1)/L the five L-dependent bounded-family
// bounds return exactly 0; past it they throw.  As x -> 0 the divergent
// bounds return +infinity; lb_spherical attains its finite limit
// (1 - ln(L)/(L-1))/2.
double eval_bound(BoundName name, int L, double x);

struct BoundCurve {
  BoundName name = BoundName::ub_eb;
  int L = 2;
  std::vector<double> grid;
  std::vector<double> values;  // NaN marks a domain-invalid cell
};

// Evaluate one bound over a grid; out-of-domain abscissae yield NaN cells
// instead of throwing.
BoundCurve eval_curve(BoundName name, int L, const std::vector<double>& grid);

// Two-parameter exponent whose maximum over s, lambda >= 0 gives the improved
// spherical-code bound:
//   E(s,l) = -l L N + s L P + ln(1/(2P) - s)/2
//          + (L-1)/2 ln(1/(2P) - s + l) + L/2 ln(2P)
// Requires 1/(2P) - s > 0 and 1/(2P) - s + lambda > 0.
double exponent_E(double s, double lambda, int L, double P, double N);

struct ExponentPoint {
  double s = 0.0;
  double lambda = 0.0;
  double value = 0.0;  // E(s, lambda), nats
};

// Closed-form maximizer of E over s, lambda >= 0 for 0 < N/P <= (L-1)/L
// (the right endpoint gives s* = lambda* = 0, E = 0).  The result is stencil
// checked as a local maximum; value/(L-1) equals lb_spherical_improved.
ExponentPoint maximize_E(int L, double P, double N);

// Normalized log-probability rates of chi-square deviations: per degree of
// freedom, P[x >= k(1+delta)] decays at upper(delta) and P[x <= k(1-delta)]
// at lower(delta); both are <= 0.
enum class TailSide { upper, lower };
double chi2_tail_exponent(double delta, TailSide side);

// Best constant C with (E |sum_i u_i|^p)^(1/p) <= C sqrt(n) ... normalized so
// that E|<u,v>|^p-type moments of uniform directions obey
//   sphere: C = sqrt(2/n) (Gamma((p+n)/2) / Gamma(n/2))^(1/p)
//   ball:   C = sqrt(2/(n+2)) (Gamma((p+n)/2) / Gamma(n/2))^(1/p)
// C = 1 (sphere) and sqrt(n/(n+2)) (ball) at p = 2.
enum class Support { sphere, ball };
double khinchin_constant(int n, double p, Support support);

// R - ln(2 pi e P)/2: the density of a bounded constellation re-measured per
// unit volume; maps each bounded-family rate onto the unbounded scale.
double bounded_to_unbounded_rate(double rate_nats, double P);

}  // namespace mpack
