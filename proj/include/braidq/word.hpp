#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace braidq {

enum class GenKind : std::uint8_t { Sigma, Tau };

// sigma_i or tau_i, 1-based index.
struct Generator {
  GenKind kind = GenKind::Sigma;
  int index = 1;

  auto operator<=>(const Generator&) const = default;
};

inline Generator sigma_gen(int i) { return {GenKind::Sigma, i}; }
inline Generator tau_gen(int i) { return {GenKind::Tau, i}; }

// Token form: "s3", "t2".
std::string to_token(Generator g);

struct Letter {
  Generator gen;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {gen, -sign}; }
  auto operator<=>(const Letter&) const = default;
};

// Token form: "s3" / "S3" (inverse) / "t2" / "T2".
std::string to_token(Letter l);
Letter parse_letter(std::string_view token);

/// A signed sequence of braid-like generators. Words are stored verbatim;
/// free reduction only happens through free_reduce().
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(Letter l) { letters_.push_back(l); }
  Word inverse() const;
  Word power(int k) const;

  bool has_tau() const;
  // Largest generator index mentioned, 0 for the empty word.
  int max_index() const;

  std::string to_string() const;
  std::vector<std::string> tokens() const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

inline Word sigma(int i, int sign = 1) { return Word{Letter{sigma_gen(i), sign}}; }
inline Word tau(int i, int sign = 1) { return Word{Letter{tau_gen(i), sign}}; }

Word word_from_tokens(const std::vector<std::string>& tokens);

// Cancels adjacent g g^-1 pairs until none remain. Idempotent, never longer.
Word free_reduce(const Word& w);

}  // namespace braidq
