#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "braidq/hom.hpp"
#include "braidq/permgroup.hpp"
#include "braidq/presentations.hpp"
#include "braidq/tss.hpp"

namespace braidq {

// Dense indexing of a small group: elements sorted, products by table or hash.
class ElementTable {
 public:
  // Multiplication table only up to this order; larger groups multiply directly.
  static constexpr std::size_t kTableCap = 1000;

  explicit ElementTable(const PermGroup& g, std::uint64_t cap = kExhaustiveCap);

  std::size_t size() const { return elems_.size(); }
  const Permutation& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<Permutation>& elements() const { return elems_; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t a) const { return inv_[a]; }
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t index_of(const Permutation& p) const;  // throws MembershipError

  // Conjugacy classes, each sorted; classes ordered by smallest member.
  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }

 private:
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  std::vector<std::size_t> inv_;
  std::vector<std::uint32_t> table_;  // empty when size > kTableCap
  std::size_t identity_ = 0;
  std::vector<std::vector<std::size_t>> classes_;
};

enum class SearchMode { Full, Conj };
std::string to_string(SearchMode m);

struct SearchConfig {
  SearchMode mode = SearchMode::Full;
  // First assigned generator runs over one representative per conjugacy
  // class; each hom carries multiplicity = class size. Implied by Conj.
  bool pin_first = false;
  bool parallel = true;
  int workers = 0;               // 0: OpenMP default
  std::uint64_t max_nodes = 0;   // 0: unlimited
};

struct SearchResult {
  std::vector<Homomorphism> homs;
  // Full: 1. pin_first: size of the pinned class. Conj: size of the conjugacy orbit.
  std::vector<std::uint64_t> multiplicity;
  bool partial = false;  // node budget exhausted
  std::uint64_t nodes = 0;
  std::uint64_t represented() const;  // sum of multiplicities
};

// Generator order used by the DFS: taus before sigmas.
std::vector<Generator> assignment_order(const GroupPresentation& p);

/// Every homomorphism P -> G, each emitted once (once per orbit in Conj
/// mode). Emission order is lexicographic in the assignment-order tuple of
/// element indices, independent of worker count.
SearchResult enumerate_homs(const GroupPresentation& p, const PermGroup& g, const SearchConfig& cfg = {});

// Single-threaded reference with identical output.
SearchResult enumerate_homs_serial(const GroupPresentation& p, const PermGroup& g, const SearchConfig& cfg = {});

// Every image tuple checked against every relator; test oracle for tiny cases.
std::vector<Homomorphism> brute_force_homs(const GroupPresentation& p, const PermGroup& g);

struct HomReport {
  Classification classification = Classification::Cyclic;
  std::uint64_t image_order = 1;
  std::vector<SplitReport> splits;  // families_for(kind, n)
  long long p = 1;                  // minimal common power of the sigma images
  long long d = 1;                  // common order of the sigma images
};

HomReport report(const Homomorphism& h);

struct Violation {
  std::size_t hom_index;
  std::string message;
};

// Braid homs, n > 4: commuting adjacent images force a cyclic image.
std::vector<Violation> commuting_adjacent_scan(const std::vector<Homomorphism>& homs, bool allow_out_of_range = false);
// Braid homs, n > 5: a non-cyclic hom splits both SOdd and SEven.
std::vector<Violation> split_both_scan(const std::vector<Homomorphism>& homs, bool allow_out_of_range = false);

}  // namespace braidq
