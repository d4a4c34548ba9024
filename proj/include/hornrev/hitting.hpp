#ifndef HORNREV_HITTING_HPP
#define HORNREV_HITTING_HPP

#include <algorithm>
#include <set>
#include <vector>

namespace hornrev {

// All subset-minimal hitting sets of a family of non-empty sets, i.e. the
// minimal H with H subset of the union and H meeting every member. The empty
// family has the single hitting set {}. Members that are empty are skipped
// (nothing can hit them; callers guard that case). Output is sorted.
template <typename T>
std::vector<std::set<T>> minimal_hitting_sets_of(
    const std::vector<std::set<T>>& family) {
  std::vector<std::set<T>> todo;
  for (const auto& m : family)
    if (!m.empty()) todo.push_back(m);

  std::vector<T> universe_vec;
  {
    std::set<T> u;
    for (const auto& m : todo) u.insert(m.begin(), m.end());
    universe_vec.assign(u.begin(), u.end());
  }

  const std::size_t n = universe_vec.size();
  std::vector<std::set<T>> result;
  if (todo.empty()) {
    result.push_back({});
    return result;
  }

  // Subsets in increasing cardinality; supersets of a found hitting set are
  // never minimal, so they are filtered on the way.
  std::vector<std::uint64_t> masks;
  masks.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint64_t a, std::uint64_t b) {
                     return __builtin_popcountll(a) < __builtin_popcountll(b);
                   });

  std::vector<std::uint64_t> member_masks;
  for (const auto& m : todo) {
    std::uint64_t mm = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m.count(universe_vec[i])) mm |= std::uint64_t{1} << i;
    member_masks.push_back(mm);
  }

  std::vector<std::uint64_t> found;
  for (std::uint64_t cand : masks) {
    bool dominated = false;
    for (std::uint64_t f : found)
      if ((f & cand) == f) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    bool hits_all = true;
    for (std::uint64_t mm : member_masks)
      if ((mm & cand) == 0) {
        hits_all = false;
        break;
      }
    if (!hits_all) continue;
    found.push_back(cand);
    std::set<T> h;
    for (std::size_t i = 0; i < n; ++i)
      if (cand & (std::uint64_t{1} << i)) h.insert(universe_vec[i]);
    result.push_back(std::move(h));
  }
  std::sort(result.begin(), result.end());
  return result;
}

// Plain hitting-set test: H meets every non-empty member and stays inside
// the family union.
template <typename T>
bool is_hitting_set(const std::set<T>& h,
                    const std::vector<std::set<T>>& family) {
  std::set<T> u;
  for (const auto& m : family) u.insert(m.begin(), m.end());
  for (const auto& x : h)
    if (!u.count(x)) return false;
  for (const auto& m : family) {
    if (m.empty()) continue;
    bool hit = false;
    for (const auto& x : h)
      if (m.count(x)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace hornrev

#endif
