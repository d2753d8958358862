#include "braidq/hom.hpp"

#include <numeric>

#include "braidq/errors.hpp"
#include "braidq/permgroup.hpp"

namespace braidq {

namespace {

int generator_slot(PresentationKind kind, int n, Generator g) {
  if (g.index < 1 || g.index >= n) return -1;
  switch (kind) {
    case PresentationKind::Braid: return g.kind == GenKind::Sigma ? g.index - 1 : -1;
    case PresentationKind::Symmetric: return g.kind == GenKind::Tau ? g.index - 1 : -1;
    default: return (g.kind == GenKind::Sigma ? 0 : n - 1) + g.index - 1;
  }
}

}  // namespace

const Permutation& Homomorphism::image(Generator g) const {
  const int slot = generator_slot(kind, n, g);
  if (slot < 0 || static_cast<std::size_t>(slot) >= images.size())
    throw InvalidParameter(to_token(g) + " is not a generator of " + to_string(kind) + "(" + std::to_string(n) + ")");
  return images[static_cast<std::size_t>(slot)];
}

Permutation Homomorphism::evaluate(const Word& w) const {
  Permutation p(degree());
  for (const auto& l : w) {
    const auto& g = image(l.gen);
    p = p * (l.sign > 0 ? g : g.inverse());
  }
  return p;
}

std::vector<Permutation> Homomorphism::primary_images() const {
  std::vector<Permutation> out;
  const GenKind want = kind == PresentationKind::Symmetric ? GenKind::Tau : GenKind::Sigma;
  for (int i = 1; i < n; ++i) out.push_back(image(Generator{want, i}));
  return out;
}

std::optional<std::size_t> failing_relator(const Homomorphism& h) {
  const auto pres = make_presentation(h.kind, h.n);
  for (std::size_t r = 0; r < pres.relators.size(); ++r)
    if (h.evaluate(pres.relators[r].lhs) != h.evaluate(pres.relators[r].rhs)) return r;
  return std::nullopt;
}

Homomorphism conjugate(const Permutation& c, const Homomorphism& h) {
  Homomorphism out = h;
  for (auto& g : out.images) g = conjugate(c, g);
  return out;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Cyclic: return "cyclic";
    case Classification::AbelianNoncyclic: return "abelian-noncyclic";
    case Classification::Nonabelian: return "nonabelian";
  }
  return "?";
}

Classification parse_classification(const std::string& s) {
  for (auto c : {Classification::Cyclic, Classification::AbelianNoncyclic, Classification::Nonabelian})
    if (to_string(c) == s) return c;
  throw InvalidParameter("unknown classification '" + s + "'");
}

std::uint64_t image_order(const Homomorphism& h) { return PermGroup(h.degree(), h.images).order(); }

Classification classify_elements(const std::vector<Permutation>& elems, int degree) {
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = a + 1; b < elems.size(); ++b)
      if (!commute(elems[a], elems[b])) return Classification::Nonabelian;
  // An abelian group is cyclic iff its exponent equals its order.
  std::uint64_t exponent = 1;
  for (const auto& g : elems) exponent = std::lcm(exponent, static_cast<std::uint64_t>(g.order()));
  return exponent == PermGroup(degree, elems).order() ? Classification::Cyclic : Classification::AbelianNoncyclic;
}

Classification classify(const Homomorphism& h) { return classify_elements(h.images, h.degree()); }

}  // namespace braidq
