#include "braidq/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "braidq/errors.hpp"

namespace braidq {

std::string to_token(Generator g) {
  return (g.kind == GenKind::Sigma ? "s" : "t") + std::to_string(g.index);
}

std::string to_token(Letter l) {
  std::string head = l.gen.kind == GenKind::Sigma ? "s" : "t";
  if (l.sign < 0) head[0] = static_cast<char>(head[0] - 'a' + 'A');
  return head + std::to_string(l.gen.index);
}

Letter parse_letter(std::string_view token) {
  if (token.size() < 2) throw InvalidParameter("bad generator token '" + std::string(token) + "'");
  Letter l;
  switch (token[0]) {
    case 's': l = {sigma_gen(0), 1}; break;
    case 'S': l = {sigma_gen(0), -1}; break;
    case 't': l = {tau_gen(0), 1}; break;
    case 'T': l = {tau_gen(0), -1}; break;
    default: throw InvalidParameter("bad generator token '" + std::string(token) + "'");
  }
  int index = 0;
  auto digits = token.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || index < 1)
    throw InvalidParameter("bad generator token '" + std::string(token) + "'");
  l.gen.index = index;
  return l;
}

Word Word::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Letter> letters;
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;  // identity
    letters.push_back(parse_letter(tok));
  }
  return Word(std::move(letters));
}

Word word_from_tokens(const std::vector<std::string>& tokens) {
  std::vector<Letter> letters;
  letters.reserve(tokens.size());
  for (const auto& t : tokens) letters.push_back(parse_letter(t));
  return Word(std::move(letters));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word Word::power(int k) const {
  Word base = k < 0 ? inverse() : *this;
  Word out;
  for (int i = 0; i < std::abs(k); ++i) out *= base;
  return out;
}

bool Word::has_tau() const {
  return std::any_of(letters_.begin(), letters_.end(),
                     [](const Letter& l) { return l.gen.kind == GenKind::Tau; });
}

int Word::max_index() const {
  int m = 0;
  for (const auto& l : letters_) m = std::max(m, l.gen.index);
  return m;
}

std::vector<std::string> Word::tokens() const {
  std::vector<std::string> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(to_token(l));
  return out;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += to_token(l);
  }
  return out;
}

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

}  // namespace braidq
