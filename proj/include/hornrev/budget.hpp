#ifndef HORNREV_BUDGET_HPP
#define HORNREV_BUDGET_HPP

#include <cstdint>

namespace hornrev {

// Caps on the exhaustive enumerations. subset_limit bounds families explored
// as 2^n subsets (kernels, minimal explanations, repair search); the
// relevance_limit bounds the candidate sets tried by the postulate checker.
struct Budget {
  std::uint64_t subset_limit = std::uint64_t{1} << 20;
  std::uint64_t relevance_limit = std::uint64_t{1} << 16;

  // Largest n with 2^n within subset_limit.
  int max_subset_bits() const {
    int n = 0;
    while ((std::uint64_t{1} << (n + 1)) <= subset_limit && n < 62) ++n;
    return n;
  }
};

// Reads HORNREV_BUDGET (a single number applied to both limits) if set.
Budget budget_from_env();

}  // namespace hornrev

#endif
