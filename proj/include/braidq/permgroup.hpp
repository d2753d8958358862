#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidq/perm.hpp"

namespace braidq {

// Groups at or below this order are handled by materialising every element.
inline constexpr std::uint64_t kExhaustiveCap = 1'000'000;

/// Concrete permutation group with a base and strong generating set built by
/// deterministic Schreier-Sims. Immutable after construction.
class PermGroup {
 public:
  struct Level {
    int base_point = 0;
    std::vector<Permutation> gens;  // strong generators fixing earlier base points
    std::vector<int> orbit;
    std::vector<int> rep_of;         // point -> index into reps, -1 if outside orbit
    std::vector<Permutation> reps;   // reps[k](base_point) == orbit[k]
  };

  PermGroup() : PermGroup(1, {}) {}
  // Throws InvalidParameter on degree mismatch.
  PermGroup(int degree, std::vector<Permutation> generators);

  static PermGroup symmetric(int n);
  static PermGroup alternating(int n);
  static PermGroup cyclic(int n);
  static PermGroup dihedral(int n);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<Level>& levels() const { return levels_; }
  std::vector<int> base() const;

  std::uint64_t order() const { return order_; }
  bool contains(const Permutation& p) const;
  Permutation identity() const { return Permutation(degree_); }

  // Every element, sorted lexicographically by image array. Throws
  // ResourceError above `cap`.
  std::vector<Permutation> elements(std::uint64_t cap = kExhaustiveCap) const;

  bool is_abelian() const;

 private:
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;
  void build();
  void compute_orbit(Level& level) const;

  int degree_;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

/// Reference path: breadth-first closure of the generators, no stabiliser
/// chain involved. Sorted. Throws ResourceError above `cap`.
std::vector<Permutation> closure_elements(int degree, const std::vector<Permutation>& gens,
                                          std::uint64_t cap = kExhaustiveCap);

// Exact |<elems>|; throws MembershipError if some element is not in G.
std::uint64_t subgroup_order(const PermGroup& g, const std::vector<Permutation>& elems);

using ConjugationPair = std::pair<Permutation, Permutation>;  // (a, b): want h a h^-1 = b

enum class ConjugatorStrategy { Auto, Exhaustive, Backtrack };

/// Some h in G with h a h^-1 = b for every pair, or nullopt if none exists.
/// Auto enumerates G when |G| <= cap and backtracks over the stabiliser chain
/// otherwise. The answer is always re-verified by multiplication.
std::optional<Permutation> find_conjugator(const PermGroup& g, const std::vector<ConjugationPair>& pairs,
                                           ConjugatorStrategy strategy = ConjugatorStrategy::Auto,
                                           std::uint64_t cap = kExhaustiveCap);

// Elements of {g in G : g S g^-1 = S}, sorted. Exhaustive; ResourceError above cap.
std::vector<Permutation> conj_setwise_stabilizer_elements(const PermGroup& g, const std::vector<Permutation>& set,
                                                          std::uint64_t cap = kExhaustiveCap);
PermGroup conj_setwise_stabilizer(const PermGroup& g, const std::vector<Permutation>& set,
                                  std::uint64_t cap = kExhaustiveCap);

// Group generated by a subset of `elements` that already generates all of them.
PermGroup group_from_elements(int degree, const std::vector<Permutation>& elements);

/// Built-in targets: S2-S8, A3-A8, Z2-Z24, D4-D12 (dihedral of order 2n on n
/// points). Throws InvalidParameter for anything else.
PermGroup named_group(const std::string& name);
std::vector<std::string> builtin_group_names();

}  // namespace braidq
