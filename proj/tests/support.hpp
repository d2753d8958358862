#pragma once

#include <random>

#include "braidq/hom.hpp"
#include "braidq/perm.hpp"
#include "braidq/word.hpp"

namespace testsupport {

using namespace braidq;

// Uniform word over sigma^{+-1} (and tau^{+-1} if with_tau) for indices 1..n-1.
inline Word random_word(std::mt19937& rng, int n, int length, bool with_tau = false) {
  std::uniform_int_distribution<int> idx(1, n - 1), coin(0, 1);
  Word w;
  for (int k = 0; k < length; ++k) {
    const GenKind kind = with_tau && coin(rng) ? GenKind::Tau : GenKind::Sigma;
    w.push_back(Letter{Generator{kind, idx(rng)}, coin(rng) ? 1 : -1});
  }
  return w;
}

inline Permutation cyc(const char* text, int degree) { return Permutation::from_cycles(text, degree); }

// s_i, t_i -> (i i+1) on n points.
inline Homomorphism standard_projection(PresentationKind kind, int n) {
  Homomorphism h{kind, n, {}};
  const int copies = kind == PresentationKind::Virtual || kind == PresentationKind::Welded ? 2 : 1;
  for (int c = 0; c < copies; ++c)
    for (int i = 1; i < n; ++i) h.images.push_back(Permutation::transposition(i, i + 1, n));
  return h;
}

// Every generator to the same element g.
inline Homomorphism constant_map(PresentationKind kind, int n, const Permutation& g) {
  Homomorphism h{kind, n, {}};
  const int copies = kind == PresentationKind::Virtual || kind == PresentationKind::Welded ? 2 : 1;
  for (int c = 0; c < copies * (n - 1); ++c) h.images.push_back(g);
  return h;
}

}  // namespace testsupport
