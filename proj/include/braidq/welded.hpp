#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "braidq/perm.hpp"
#include "braidq/presentations.hpp"
#include "braidq/word.hpp"

namespace braidq {

/// Reduced word in the free group on x_1..x_n. Letter +k is x_k, -k is x_k^-1.
class FreeWord {
 public:
  FreeWord() = default;
  // Reduces on construction.
  explicit FreeWord(std::vector<int> letters);
  static FreeWord basis(int k) { return FreeWord({k}); }

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;
  // "x2^-1 x1 x2"; "1" for the empty word.
  std::string to_string() const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  auto operator<=>(const FreeWord&) const = default;

 private:
  std::vector<int> letters_;
};

/// Endomorphism of F_n given by the images of x_1..x_n.
class FreeAutomorphism {
 public:
  explicit FreeAutomorphism(int n);  // identity
  FreeAutomorphism(int n, std::vector<FreeWord> images);

  int n() const { return static_cast<int>(images_.size()); }
  const std::vector<FreeWord>& images() const { return images_; }
  const FreeWord& image(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }

  FreeWord apply(const FreeWord& w) const;
  bool is_identity() const;

  // (a * b)(x) = a(b(x)).
  friend FreeAutomorphism operator*(const FreeAutomorphism& a, const FreeAutomorphism& b);
  auto operator<=>(const FreeAutomorphism&) const = default;

 private:
  std::vector<FreeWord> images_;
};

/// s_i: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}.
/// t_i: x_i <-> x_{i+1}. Inverse letters give the inverse automorphisms.
FreeAutomorphism generator_action(Letter l, int n);
FreeAutomorphism generator_action(Generator g, int n);

// Leftmost letter outermost: action(ab) = action(a) * action(b).
FreeAutomorphism word_action(const Word& w, int n);

bool welded_equal(const Word& w1, const Word& w2, int n);

// s_i, t_i -> (i i+1); product in word order.
Permutation project_to_symmetric(const Word& w, int n);

// Each x_k maps to a conjugate of some x_{pi(k)}; returns pi, or nullopt if
// some image is not of that shape.
std::optional<Permutation> underlying_permutation(const FreeAutomorphism& a);

// ---- vB_n semi-decision -------------------------------------------------

enum class RewriteDirection { LeftToRight, RightToLeft, InverseLeftToRight, InverseRightToLeft };

std::string to_string(RewriteDirection d);
RewriteDirection parse_rewrite_direction(const std::string& s);

// Replace the occurrence of one side of relator `relator` at letter offset
// `position` by the other side (or the inverse forms).
struct DerivationStep {
  std::size_t relator = 0;
  std::size_t position = 0;
  RewriteDirection direction = RewriteDirection::LeftToRight;

  auto operator<=>(const DerivationStep&) const = default;
};

enum class Verdict { ProvenEqual, ProvenDistinct, Unknown };
std::string to_string(Verdict v);

struct VirtualVerdict {
  Verdict verdict = Verdict::Unknown;
  std::vector<DerivationStep> derivation;  // ProvenEqual: steps from normalize(w1) to normalize(w2)
  std::string witness;                     // ProvenDistinct: which quotient separates
  std::size_t nodes = 0;                   // words visited
};

struct VirtualSearchConfig {
  int depth = 4;             // rewrite steps
  int length_slack = 6;      // max word length = longest input + slack
  std::size_t max_nodes = 200'000;
  bool parallel = true;
};

// T_i -> t_i (tau_i has order 2), then free reduction.
Word virtual_normalize(const Word& w);

/// Sound in both directions: ProvenDistinct only from the welded action or the
/// symmetric projection, ProvenEqual only with an explicit derivation in the
/// vB_n presentation. Deterministic for a fixed config.
VirtualVerdict virtual_equal_semidecide(const Word& w1, const Word& w2, int n,
                                        const VirtualSearchConfig& cfg = {});

// Single rewrite step; nullopt if the step does not apply.
std::optional<Word> apply_step(const GroupPresentation& vb, const Word& w, const DerivationStep& step);

// Replays a derivation from normalize(w1); true iff it ends at normalize(w2).
bool replay_derivation(const Word& w1, const Word& w2, int n, const std::vector<DerivationStep>& steps);

}  // namespace braidq
