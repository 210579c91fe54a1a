#include "seriesid/discover.hpp"

#include "seriesid/error.hpp"
#include "seriesid/parser.hpp"

namespace seriesid {

std::vector<DiscoveryEntry> discover(const std::vector<LinearFactor>& pool, std::size_t min_size,
                                     std::size_t max_size) {
  if (min_size < 2 || min_size > max_size || max_size > pool.size()) {
    throw SeriesError(ErrorKind::PreconditionViolated,
                      "need 2 <= min size <= max size <= pool size (" + std::to_string(pool.size()) + ")");
  }
  require_distinct(pool);
  std::vector<DiscoveryEntry> out;
  for (std::size_t k = min_size; k <= max_size; ++k) {
    // Index combinations in lexicographic order.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      DiscoveryEntry entry;
      for (auto i : idx) entry.factors.push_back(pool[i]);
      const SeriesDef s(Sign::positive, Polynomial::constant(1), entry.factors);
      try {
        entry.record = IdentityRecord{render_series(s), s, closed_form(s), "discovered"};
      } catch (const SeriesError& e) {
        if (e.kind() != ErrorKind::UnsupportedConstantBasis) throw;
        entry.error = e.what();
      }
      out.push_back(std::move(entry));

      std::size_t i = k;
      while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace seriesid
