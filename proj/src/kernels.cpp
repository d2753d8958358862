#include "braidq/kernels.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace braidq::kernels {

namespace {

using PermSet = std::unordered_set<Permutation, PermutationHash>;

bool stabilizes(const Permutation& g, const std::vector<Permutation>& set, const PermSet& lookup) {
  const Permutation ginv = g.inverse();
  for (const auto& s : set)
    if (!lookup.count(g * s * ginv)) return false;
  return true;
}

bool conjugates(const Permutation& h, const std::vector<std::pair<Permutation, Permutation>>& pairs) {
  const Permutation hinv = h.inverse();
  for (const auto& [a, b] : pairs)
    if (h * a * hinv != b) return false;
  return true;
}

}  // namespace

std::vector<std::size_t> conj_stabilizer_scan_serial(const std::vector<Permutation>& elements,
                                                     const std::vector<Permutation>& set) {
  const PermSet lookup(set.begin(), set.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (stabilizes(elements[i], set, lookup)) out.push_back(i);
  return out;
}

std::vector<std::size_t> conj_stabilizer_scan_omp(const std::vector<Permutation>& elements,
                                                  const std::vector<Permutation>& set) {
  const PermSet lookup(set.begin(), set.end());
  std::vector<char> keep(elements.size(), 0);
  const long long count = static_cast<long long>(elements.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i)
    keep[static_cast<std::size_t>(i)] = stabilizes(elements[static_cast<std::size_t>(i)], set, lookup) ? 1 : 0;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < keep.size(); ++i)
    if (keep[i]) out.push_back(i);
  return out;
}

std::optional<std::size_t> conjugator_scan_serial(const std::vector<Permutation>& elements,
                                                  const std::vector<std::pair<Permutation, Permutation>>& pairs) {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (conjugates(elements[i], pairs)) return i;
  return std::nullopt;
}

std::optional<std::size_t> conjugator_scan_omp(const std::vector<Permutation>& elements,
                                               const std::vector<std::pair<Permutation, Permutation>>& pairs) {
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::size_t best = none;
  const long long count = static_cast<long long>(elements.size());
#pragma omp parallel for schedule(static) reduction(min : best)
  for (long long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx < best && conjugates(elements[idx], pairs)) best = idx;
  }
  if (best == none) return std::nullopt;
  return best;
}

}  // namespace braidq::kernels
