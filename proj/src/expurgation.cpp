#include "mpack/expurgation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mpack/detail/subset_scan.hpp"

namespace mpack {

namespace {

// inclusive threshold: exact-boundary lists (radius == nN) violate the strict
// packing condition and must be counted despite floating-point rounding
double bad_threshold(double nN) { return nN * (1.0 + 1e-9) + 1e-12; }

}  // namespace

std::vector<ListWitness> find_bad_lists(const Code& code, int L, double nN, Notion notion) {
  std::vector<ListWitness> bad;
  if (L < 1 || code.size() < static_cast<std::size_t>(L)) return bad;

  const double cut = bad_threshold(nN);
  const double LL = static_cast<double>(L) * static_cast<double>(L);
  std::vector<Point> list(static_cast<std::size_t>(L));

  detail::scan_subsets(
      code.size(), L,
      [&](std::size_t i, std::size_t j) { return sq_dist(code.points[i], code.points[j]); },
      [&] { return cut * LL; },
      [&](const std::vector<int>& idx, double pair_sum) {
        for (int k = 0; k < L; ++k) list[static_cast<std::size_t>(k)] = code.points[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
        ListWitness w;
        w.notion = notion;
        if (notion == Notion::chebyshev) {
          auto r = cheb_sq_radius(list);
          w.radius_sq = r.radius_sq;
          w.center = std::move(r.center);
        } else {
          w.center = centroid(list);
          w.radius_sq =
              notion == Notion::average_radius ? avg_sq_radius(list) : max_sq_radius(list);
        }
        (void)pair_sum;  // the scan's sum/L^2 already screened avg <= cut
        if (w.radius_sq <= cut) {
          w.indices = idx;
          bad.push_back(std::move(w));
        }
      });
  return bad;
}

std::pair<Code, ExpurgationReport> expurgate(const Code& code, const PackingParams& params) {
  validate(params);
  if (code.n != params.n) throw std::invalid_argument("expurgate: dimension mismatch");

  ExpurgationReport rep;
  rep.initial_size = code.size();

  // pass 1: the power filter
  std::vector<Point> rows;
  rows.reserve(code.size());
  if (params.P) {
    const double cap = params.n * *params.P * (1.0 + 1e-9) + 1e-12;
    for (const auto& p : code.points) {
      if (sq_norm(p) > cap)
        ++rep.power_violations;
      else
        rows.push_back(p);
    }
  } else {
    rows = code.points;
  }
  Code work = make_code(code.n, std::move(rows),
                        params.P ? params.P : code.power_limit);

  // pass 2: greedy removal, highest bad-list degree first
  const double nN = static_cast<double>(params.n) * params.N;
  std::vector<ListWitness> bad = find_bad_lists(work, params.L, nN, params.notion);
  rep.bad_lists_found = bad.size();

  std::vector<bool> alive(work.size(), true);
  while (!bad.empty()) {
    std::vector<std::size_t> degree(work.size(), 0);
    for (const auto& w : bad)
      for (int i : w.indices) ++degree[static_cast<std::size_t>(i)];
    std::size_t victim = 0;
    for (std::size_t i = 1; i < degree.size(); ++i)
      if (degree[i] > degree[victim]) victim = i;  // ties keep the lowest index
    alive[victim] = false;
    ++rep.points_removed;
    // a list dies with its member; no new bad lists can appear
    std::erase_if(bad, [&](const ListWitness& w) {
      return std::find(w.indices.begin(), w.indices.end(), static_cast<int>(victim)) !=
             w.indices.end();
    });
  }

  std::vector<Point> kept;
  kept.reserve(work.size());
  for (std::size_t i = 0; i < work.size(); ++i)
    if (alive[i]) kept.push_back(work.points[i]);
  Code out = make_code(work.n, std::move(kept), work.power_limit);

  rep.final_size = out.size();
  VerifyResult vr = verify_packing(out, params);
  rep.verified = vr.ok && vr.norm_violations.empty();
  rep.rate_nats = out.size() > 0
                      ? std::log(static_cast<double>(out.size())) / static_cast<double>(params.n)
                      : -std::numeric_limits<double>::infinity();
  return {std::move(out), rep};
}

std::pair<Code, ExpurgationReport> construct(const EnsembleSpec& spec,
                                             const PackingParams& params,
                                             double rate_nats, std::size_t M_cap) {
  validate(spec);
  validate(params);
  if (spec.n != params.n) throw std::invalid_argument("construct: dimension mismatch");
  if (!(rate_nats >= 0.0)) throw std::invalid_argument("construct: rate must be >= 0");
  if (M_cap < 1) throw std::invalid_argument("construct: M_cap must be >= 1");

  const double exponent = static_cast<double>(spec.n) * rate_nats;
  std::size_t M = M_cap;
  if (exponent < std::log(static_cast<double>(M_cap)))  // avoid overflow in exp
    M = std::min<std::size_t>(M_cap, static_cast<std::size_t>(std::ceil(std::exp(exponent))));
  M = std::max<std::size_t>(M, 1);

  Code sampled = sample(spec, M);
  return expurgate(sampled, params);
}

}  // namespace mpack
