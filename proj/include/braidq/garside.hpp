#pragma once

#include <string>
#include <vector>

#include "braidq/perm.hpp"
#include "braidq/word.hpp"

namespace braidq {

/// Left normal form Delta^k A_1 ... A_r of a braid. Each A_j is a permutation
/// braid (positive braid in which any two strands cross at most once),
/// stored as its permutation; no A_j is the identity or Delta, and every
/// adjacent pair is left-weighted.
///
/// A permutation braid for the word s_{i1} s_{i2} ... has permutation
/// (i1 i1+1) * (i2 i2+1) * ... in the composition order of Permutation.
struct GarsideNormalForm {
  int n = 2;
  long long delta_power = 0;
  std::vector<Permutation> factors;

  bool is_identity() const { return delta_power == 0 && factors.empty(); }
  auto operator<=>(const GarsideNormalForm&) const = default;
};

// Descent sets, as 1-based generator indices.
std::vector<int> finishing_set(const Permutation& simple);  // pi * s_i shorter
std::vector<int> starting_set(const Permutation& simple);   // s_i * pi shorter
bool is_left_weighted(const Permutation& a, const Permutation& b);

Permutation delta_permutation(int n);

// Throws WrongGroup on tau letters, InvalidParameter on indices >= n.
GarsideNormalForm normal_form(const Word& w, int n);

bool braid_equal(const Word& w1, const Word& w2, int n);

// h a h^-1 == b in B_n.
bool braid_conjugation_check(const Word& h, const Word& a, const Word& b, int n);

// A positive word for a permutation braid (shortest: one letter per inversion).
Word simple_factor_word(const Permutation& simple);
// Word spelling the normal form; normal_form(to_word(nf)) == nf.
Word to_word(const GarsideNormalForm& nf);

}  // namespace braidq
