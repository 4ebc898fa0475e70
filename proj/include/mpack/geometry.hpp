#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace mpack {

using Point = std::vector<double>;

enum class Notion { chebyshev, average_radius, max_to_centroid };

std::string to_string(Notion n);
Notion notion_from_string(const std::string& s);

// A finite point set in n dimensions.  Rows are distinct; when power_limit P
// is set, every row satisfies |x|^2 <= nP (up to rounding slack).
struct Code {
  int n = 0;
  std::vector<Point> points;
  std::optional<double> power_limit;

  std::size_t size() const { return points.size(); }
};

// Validating constructor: checks row lengths, finiteness, distinctness and
// the power constraint.  Throws std::invalid_argument on violation.
Code make_code(int n, std::vector<Point> points,
               std::optional<double> power_limit = std::nullopt);

// An L-subset together with its radius under the stated notion and the
// optimal center (for average/max notions: the centroid).
struct ListWitness {
  std::vector<int> indices;
  double radius_sq = 0.0;
  Point center;
  Notion notion = Notion::chebyshev;
};

struct PackingParams {
  int n = 0;
  int L = 2;
  std::optional<double> P;
  double N = 0.0;
  Notion notion = Notion::average_radius;
};

void validate(const PackingParams& params);

// ---- radii ------------------------------------------------------------------

Point centroid(const std::vector<Point>& list);

// The four equivalent forms of the average squared radius
// (1/L) sum_i |x_i - centroid|^2.
enum class AvgForm { definition, norm_minus_centroid, power_minus_correlation, pairwise };

double avg_sq_radius(const std::vector<Point>& list,
                     AvgForm form = AvgForm::definition);

// Smallest enclosing ball (Chebyshev radius).  Welzl's move-to-front
// recursion over at most n+1 support points; 1e-12 boundary tolerance.
struct ChebResult {
  double radius_sq = 0.0;
  Point center;
};
ChebResult cheb_sq_radius(const std::vector<Point>& list);

// max_i |x_i - centroid|^2
double max_sq_radius(const std::vector<Point>& list);

double radius_for_notion(const std::vector<Point>& list, Notion notion);

// ---- code-level operations ----------------------------------------------------

// Minimum radius over all L-subsets, exhaustive with a sound pruning rule
// (the partial sum over unordered pairs of squared distances, divided by L^2,
// never exceeds the subset's radius under any notion).  Ties resolve to the
// lexicographically smallest index set.
ListWitness code_min_radius(const Code& code, int L, Notion notion);

struct VerifyResult {
  bool ok = true;
  std::optional<ListWitness> witness;
  std::vector<int> norm_violations;  // rows with |x|^2 > nP when params.P set
};

// ok iff every L-subset has radius^2 strictly greater than nN.
VerifyResult verify_packing(const Code& code, const PackingParams& params);

// Indices of all codewords within squared distance nN of y.
std::vector<int> list_decode(const Code& code, const Point& y, double N);

// Append coordinate sqrt((n+1)P - |x|^2): ball code -> spherical code one
// dimension up, with every list radius non-decreasing.
Code lift_ball_to_sphere(const Code& code);

// Guaranteed floor on every L-subset's average squared radius from the
// minimum pairwise distance: ((L-1)/(2L)) * d_min^2.
double bf_multipack_floor(const Code& code, int L);

// ---- small helpers -------------------------------------------------------------

inline double sq_norm(const Point& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return s;
}

inline double sq_dist(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

}  // namespace mpack
