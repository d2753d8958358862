#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidq/perm.hpp"
#include "braidq/presentations.hpp"
#include "braidq/word.hpp"

namespace braidq {

/// Assignment of target permutations to the generators of a presentation, in
/// the order of make_presentation(kind, n).generators.
struct Homomorphism {
  PresentationKind kind = PresentationKind::Braid;
  int n = 2;
  std::vector<Permutation> images;

  int degree() const { return images.empty() ? 1 : images.front().degree(); }
  // Throws InvalidParameter if g is not a generator of the presentation.
  const Permutation& image(Generator g) const;
  Permutation evaluate(const Word& w) const;
  // Images of the sigma generators (tau generators for Symmetric).
  std::vector<Permutation> primary_images() const;

  auto operator<=>(const Homomorphism&) const = default;
};

// Index of the first relator whose two sides differ, or nullopt.
std::optional<std::size_t> failing_relator(const Homomorphism& h);
inline bool verify_relations(const Homomorphism& h) { return !failing_relator(h); }

// Same map with every image conjugated by c.
Homomorphism conjugate(const Permutation& c, const Homomorphism& h);

enum class Classification { Cyclic, AbelianNoncyclic, Nonabelian };
std::string to_string(Classification c);
Classification parse_classification(const std::string& s);

// Order of the image subgroup.
std::uint64_t image_order(const Homomorphism& h);
Classification classify(const Homomorphism& h);

// Restriction to an arbitrary list of elements (e.g. sigma_{i,j} for PwB_n).
Classification classify_elements(const std::vector<Permutation>& elems, int degree);

}  // namespace braidq
