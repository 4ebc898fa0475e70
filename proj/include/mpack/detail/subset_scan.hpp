#pragma once

#include <cstddef>
#include <vector>

namespace mpack::detail {

// Lexicographic scan over the L-subsets of {0,...,M-1}, carrying the running
// sum over unordered pairs of squared distances.  A prefix is abandoned once
// its sum exceeds limit(): completions only add nonnegative terms, and
// sum/L^2 is a lower bound on the subset's radius under every notion (it
// equals the average radius of the completed subset), so the skip is sound.
//
//   d2(i, j)  -> squared distance between rows i and j
//   limit()   -> current pairwise-sum cap (+inf disables pruning)
//   visit(idx, pair_sum) -> called for every surviving complete subset
template <class DistFn, class LimitFn, class VisitFn>
void scan_subsets(std::size_t M, int L, DistFn&& d2, LimitFn&& limit, VisitFn&& visit) {
  if (L <= 0 || static_cast<std::size_t>(L) > M) return;
  std::vector<int> idx(static_cast<std::size_t>(L));
  std::vector<double> acc(static_cast<std::size_t>(L) + 1, 0.0);

  auto rec = [&](auto&& self, int k, std::size_t start) -> void {
    const std::size_t last = M - static_cast<std::size_t>(L - 1 - k);
    for (std::size_t i = start; i < last; ++i) {
      double add = 0.0;
      for (int j = 0; j < k; ++j) add += d2(static_cast<std::size_t>(idx[j]), i);
      const double tot = acc[k] + add;
      if (tot > limit()) continue;
      idx[k] = static_cast<int>(i);
      if (k + 1 == L) {
        visit(idx, tot);
      } else {
        acc[k + 1] = tot;
        self(self, k + 1, i + 1);
      }
    }
  };
  rec(rec, 0, 0);
}

}  // namespace mpack::detail
