#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace braidq {

/// Bijection of {0, .., d-1}. Printed and parsed 1-based.
///
/// Products are function composition: (a * b)(x) = a(b(x)). Conjugation
/// h * a * h.inverse() therefore relabels each cycle (x1 x2 ..) of a as
/// (h(x1) h(x2) ..).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);
  // 0-based images; throws InvalidParameter if not a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation from_one_based(const std::vector<int>& images);
  // "(1 2)(3 4)"; "()" or "" is the identity.
  static Permutation from_cycles(std::string_view text, int degree);
  static Permutation transposition(int a, int b, int degree);  // 1-based points

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }
  std::vector<int> one_based() const;

  Permutation inverse() const;
  Permutation pow(long long k) const;
  bool is_identity() const;
  long long order() const;

  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

// h a h^-1
Permutation conjugate(const Permutation& h, const Permutation& a);
bool commute(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace braidq
