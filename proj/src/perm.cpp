#include "braidq/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "braidq/errors.hpp"

namespace braidq {

Permutation::Permutation(int degree) : img_(static_cast<std::size_t>(degree)) {
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)])
      throw InvalidParameter("image array is not a permutation");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> zero(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) zero[i] = images[i] - 1;
  return Permutation(std::move(zero));
}

Permutation Permutation::from_cycles(std::string_view text, int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  std::size_t pos = 0;
  auto fail = [&] { throw InvalidParameter("bad cycle notation '" + std::string(text) + "'"); };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') fail();
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) fail();
    std::istringstream in{std::string(text.substr(pos + 1, close - pos - 1))};
    std::vector<int> cycle;
    std::string tok;
    while (in >> tok) {
      for (auto& c : tok)
        if (c == ',') c = ' ';
      std::istringstream sub(tok);
      int v = 0;
      while (sub >> v) {
        if (v < 1 || v > degree || used[static_cast<std::size_t>(v - 1)]) fail();
        used[static_cast<std::size_t>(v - 1)] = 1;
        cycle.push_back(v - 1);
      }
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      img[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    pos = close + 1;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int a, int b, int degree) {
  Permutation p(degree);
  std::swap(p.img_[static_cast<std::size_t>(a - 1)], p.img_[static_cast<std::size_t>(b - 1)]);
  return p;
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(img_);
  for (auto& x : out) ++x;
  return out;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) p.img_[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  return p;
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = static_cast<unsigned long long>(k < 0 ? -k : k);
  Permutation result(degree());
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

long long Permutation::order() const {
  std::vector<char> seen(img_.size(), 0);
  long long result = 1;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img_[j])) {
      seen[j] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == static_cast<int>(i)) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img_[j])) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidParameter("degree mismatch in permutation product");
  Permutation p;
  p.img_.resize(b.img_.size());
  for (std::size_t i = 0; i < b.img_.size(); ++i) p.img_[i] = a.img_[static_cast<std::size_t>(b.img_[i])];
  return p;
}

Permutation conjugate(const Permutation& h, const Permutation& a) { return h * a * h.inverse(); }

bool commute(const Permutation& a, const Permutation& b) { return a * b == b * a; }

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : p.images()) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace braidq
