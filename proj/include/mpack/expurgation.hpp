#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mpack/ensembles.hpp"
#include "mpack/geometry.hpp"

namespace mpack {

// Bookkeeping of one random-coding-with-expurgation run.
struct ExpurgationReport {
  std::size_t initial_size = 0;
  std::size_t power_violations = 0;   // rows dropped for |x|^2 > nP
  std::size_t bad_lists_found = 0;    // bad lists after the power filter
  std::size_t points_removed = 0;     // greedy removals (excludes power drops)
  std::size_t final_size = 0;         // initial - power_violations - points_removed
  bool verified = false;
  double rate_nats = 0.0;             // ln(final_size)/n, -inf when empty
};

// Every L-subset whose radius under `notion` is <= nN (with relative slack
// 1e-9 so exact-boundary lists are caught despite rounding).  Uses the same
// pruning as code_min_radius; returns witnesses in lexicographic index order.
std::vector<ListWitness> find_bad_lists(const Code& code, int L, double nN,
                                        Notion notion);

// Power-filter (when params.P is set), then repeatedly remove the point
// belonging to the most surviving bad lists (ties to the lowest index) until
// none remain.  The output is a subset of the input rows and passes
// verify_packing.
std::pair<Code, ExpurgationReport> expurgate(const Code& code,
                                             const PackingParams& params);

// Sample M = min(ceil(e^{n * rate_nats}), M_cap) rows from the ensemble,
// then expurgate down to a valid packing.
std::pair<Code, ExpurgationReport> construct(const EnsembleSpec& spec,
                                             const PackingParams& params,
                                             double rate_nats,
                                             std::size_t M_cap = std::size_t{1} << 14);

}  // namespace mpack
