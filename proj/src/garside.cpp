#include "braidq/garside.hpp"

#include "braidq/errors.hpp"

namespace braidq {

namespace {

Permutation adjacent(int i, int n) { return Permutation::transposition(i, i + 1, n); }

bool right_descent(const Permutation& p, int i) { return p(i - 1) > p(i); }

bool left_descent(const Permutation& p, int i) {
  const Permutation inv = p.inverse();
  return inv(i - 1) > inv(i);
}

// delta * p * delta; the inner automorphism X -> Delta X Delta^-1 on simples.
Permutation flip(const Permutation& p, const Permutation& delta) { return delta * p * delta; }

// Makes (a, b) left-weighted by sliding starting letters of b into a.
// Returns true if anything moved.
bool left_weight(Permutation& a, Permutation& b) {
  const int n = a.degree();
  bool moved = false;
  for (bool again = true; again;) {
    again = false;
    for (int i = 1; i < n; ++i) {
      if (left_descent(b, i) && !right_descent(a, i)) {
        const Permutation s = adjacent(i, n);
        a = a * s;
        b = s * b;
        moved = again = true;
        break;
      }
    }
  }
  return moved;
}

void normalize(GarsideNormalForm& nf) {
  const Permutation delta = delta_permutation(nf.n);
  auto& f = nf.factors;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = f.size(); j-- > 1;)
      if (left_weight(f[j - 1], f[j])) changed = true;
  }
  std::size_t lead = 0;
  while (lead < f.size() && f[lead] == delta) ++lead;
  nf.delta_power += static_cast<long long>(lead);
  f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lead));
  while (!f.empty() && f.back().is_identity()) f.pop_back();
}

}  // namespace

std::vector<int> finishing_set(const Permutation& simple) {
  std::vector<int> out;
  for (int i = 1; i < simple.degree(); ++i)
    if (right_descent(simple, i)) out.push_back(i);
  return out;
}

std::vector<int> starting_set(const Permutation& simple) {
  std::vector<int> out;
  for (int i = 1; i < simple.degree(); ++i)
    if (left_descent(simple, i)) out.push_back(i);
  return out;
}

bool is_left_weighted(const Permutation& a, const Permutation& b) {
  for (int i = 1; i < a.degree(); ++i)
    if (left_descent(b, i) && !right_descent(a, i)) return false;
  return true;
}

Permutation delta_permutation(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) img[static_cast<std::size_t>(x)] = n - 1 - x;
  return Permutation(std::move(img));
}

GarsideNormalForm normal_form(const Word& w, int n) {
  if (n < 2) throw InvalidParameter("braid group needs n >= 2");
  const Permutation delta = delta_permutation(n);
  GarsideNormalForm nf;
  nf.n = n;
  for (const auto& l : w) {
    if (l.gen.kind != GenKind::Sigma) throw WrongGroup("tau letter in a braid word");
    if (l.gen.index < 1 || l.gen.index >= n) throw InvalidParameter("generator index out of range: " + to_token(l));
    if (l.sign > 0) {
      nf.factors.push_back(adjacent(l.gen.index, n));
    } else {
      // s_i^-1 = Delta^-1 (Delta s_i^-1); push Delta^-1 past the factors.
      for (auto& f : nf.factors) f = flip(f, delta);
      --nf.delta_power;
      nf.factors.push_back(delta * adjacent(l.gen.index, n));
    }
    normalize(nf);
  }
  return nf;
}

bool braid_equal(const Word& w1, const Word& w2, int n) { return normal_form(w1, n) == normal_form(w2, n); }

bool braid_conjugation_check(const Word& h, const Word& a, const Word& b, int n) {
  return normal_form(h * a * h.inverse() * b.inverse(), n).is_identity();
}

Word simple_factor_word(const Permutation& simple) {
  // Peel right descents: simple = rest * s_i with rest shorter.
  Permutation p = simple;
  std::vector<Letter> rev;
  for (bool found = true; found;) {
    found = false;
    for (int i = 1; i < p.degree(); ++i) {
      if (right_descent(p, i)) {
        rev.push_back(Letter{sigma_gen(i), 1});
        p = p * adjacent(i, p.degree());
        found = true;
        break;
      }
    }
  }
  return Word(std::vector<Letter>(rev.rbegin(), rev.rend()));
}

Word to_word(const GarsideNormalForm& nf) {
  const Word d = simple_factor_word(delta_permutation(nf.n));
  Word out = d.power(static_cast<int>(nf.delta_power));
  for (const auto& f : nf.factors) out *= simple_factor_word(f);
  return out;
}

}  // namespace braidq
