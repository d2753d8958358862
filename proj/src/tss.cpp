#include "braidq/tss.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "braidq/bounds.hpp"
#include "braidq/errors.hpp"
#include "braidq/garside.hpp"

namespace braidq {

std::string to_string(WordAmbientKind k) {
  switch (k) {
    case WordAmbientKind::BraidExact: return "braid";
    case WordAmbientKind::WeldedExact: return "welded";
    case WordAmbientKind::VirtualSemi: return "virtual";
  }
  return "?";
}

Truth WordAmbient::equal(const Word& a, const Word& b) const {
  switch (kind) {
    case WordAmbientKind::BraidExact: return braid_equal(a, b, n) ? Truth::True : Truth::False;
    case WordAmbientKind::WeldedExact: return welded_equal(a, b, n) ? Truth::True : Truth::False;
    case WordAmbientKind::VirtualSemi: {
      const auto v = virtual_equal_semidecide(a, b, n, budget);
      if (v.verdict == Verdict::ProvenEqual) return Truth::True;
      if (v.verdict == Verdict::ProvenDistinct) return Truth::False;
      return Truth::Unknown;
    }
  }
  return Truth::Unknown;
}

Truth WordAmbient::conjugates(const Word& h, const Word& a, const Word& b) const {
  return equal(h * a * h.inverse(), b);
}

std::string to_string(TSSFailure f) {
  switch (f) {
    case TSSFailure::None: return "none";
    case TSSFailure::Commutation: return "commutation";
    case TSSFailure::Conjugation: return "conjugation";
    case TSSFailure::Unknown: return "unknown";
  }
  return "?";
}

namespace {

std::string transposition_label(std::size_t a) {
  return "(" + std::to_string(a + 1) + " " + std::to_string(a + 2) + ")";
}

// Targets for transposition a: member k goes to member swap_a(k).
template <class T>
std::vector<std::pair<T, T>> swap_pairs(const std::vector<T>& m, std::size_t a) {
  std::vector<std::pair<T, T>> out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const std::size_t t = k == a ? a + 1 : k == a + 1 ? a : k;
    out.emplace_back(m[k], m[t]);
  }
  return out;
}

// Combines tri-state checks: False dominates, then Unknown.
Truth check_pairs(const WordAmbient& amb, const Word& h, const std::vector<std::pair<Word, Word>>& pairs) {
  Truth acc = Truth::True;
  for (const auto& [a, b] : pairs) {
    const Truth t = amb.conjugates(h, a, b);
    if (t == Truth::False) return Truth::False;
    if (t == Truth::Unknown) acc = Truth::Unknown;
  }
  return acc;
}

}  // namespace

std::optional<Word> search_word_conjugator(const std::vector<std::pair<Word, Word>>& pairs,
                                           const WordAmbient& ambient, const ConjugatorSearchConfig& cfg) {
  if (ambient.kind == WordAmbientKind::VirtualSemi) return std::nullopt;
  std::vector<Letter> alphabet;
  for (int i = 1; i < ambient.n; ++i) {
    alphabet.push_back({sigma_gen(i), 1});
    alphabet.push_back({sigma_gen(i), -1});
    if (ambient.kind == WordAmbientKind::WeldedExact) alphabet.push_back({tau_gen(i), 1});
  }
  // Element keys: the normal form or the automorphism, printed.
  auto key = [&](const Word& w) {
    std::string k;
    if (ambient.kind == WordAmbientKind::BraidExact) {
      const auto nf = normal_form(w, ambient.n);
      k = std::to_string(nf.delta_power);
      for (const auto& f : nf.factors) k += "|" + f.to_cycles();
    } else {
      for (const auto& img : word_action(w, ambient.n).images()) k += img.to_string() + "|";
    }
    return k;
  };
  std::set<std::string> seen{key(Word{})};
  std::deque<Word> queue{Word{}};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    if (check_pairs(ambient, w, pairs) == Truth::True) return w;
    if (static_cast<int>(w.size()) >= cfg.max_length) continue;
    for (const auto& l : alphabet) {
      if (!w.empty() && w.letters().back() == l.inverse()) continue;
      Word next = w;
      next.push_back(l);
      if (!seen.insert(key(next)).second) continue;
      if (seen.size() > cfg.max_nodes) return std::nullopt;
      queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

TSSResult verify_totally_symmetric(const std::vector<Word>& members, const WordAmbient& ambient,
                                   const std::vector<Word>& candidates, const ConjugatorSearchConfig& search) {
  if (members.empty()) throw InvalidParameter("totally symmetric set must be nonempty");
  TSSResult res;
  auto& cert = res.certificate;
  for (const auto& m : members) cert.members.push_back(m.to_string());

  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const Truth t = ambient.equal(members[a] * members[b], members[b] * members[a]);
      if (t == Truth::False) {
        res.failure = TSSFailure::Commutation;
        res.detail = "members " + cert.members[a] + " and " + cert.members[b] + " do not commute";
        return res;
      }
      if (t == Truth::Unknown) cert.conditional = true;
      ++cert.commuting_pairs;
    }
  }

  for (std::size_t a = 0; a + 1 < members.size(); ++a) {
    const auto pairs = swap_pairs(members, a);
    std::optional<Word> found;
    bool from_candidate = false;
    if (a < candidates.size() && !candidates[a].empty()) {
      const Truth t = check_pairs(ambient, candidates[a], pairs);
      if (t != Truth::False) {
        found = candidates[a];
        from_candidate = true;
        if (t == Truth::Unknown) cert.conditional = true;
      }
    }
    if (!found) found = search_word_conjugator(pairs, ambient, search);
    if (!found) {
      const bool semi = ambient.kind == WordAmbientKind::VirtualSemi;
      res.failure = semi ? TSSFailure::Unknown : TSSFailure::Conjugation;
      res.detail = "no conjugator found for transposition " + transposition_label(a);
      return res;
    }
    cert.conjugators.push_back(found->to_string());
    cert.from_candidates.push_back(from_candidate);
  }
  return res;
}

TSSResult verify_family(const GeneratorFamily& fam, const WordAmbient& ambient, const ConjugatorSearchConfig& search) {
  return verify_totally_symmetric(fam.members, ambient, known_conjugators(fam, ambient.n), search);
}

TSSResult verify_totally_symmetric(const std::vector<Permutation>& members, const PermGroup& g,
                                   const std::vector<Permutation>& candidates) {
  if (members.empty()) throw InvalidParameter("totally symmetric set must be nonempty");
  TSSResult res;
  auto& cert = res.certificate;
  for (const auto& m : members) cert.members.push_back(m.to_cycles());
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (!commute(members[a], members[b])) {
        res.failure = TSSFailure::Commutation;
        res.detail = "members " + cert.members[a] + " and " + cert.members[b] + " do not commute";
        return res;
      }
      ++cert.commuting_pairs;
    }
  for (std::size_t a = 0; a + 1 < members.size(); ++a) {
    const auto pairs = swap_pairs(members, a);
    auto works = [&](const Permutation& h) {
      for (const auto& [x, y] : pairs)
        if (conjugate(h, x) != y) return false;
      return true;
    };
    std::optional<Permutation> h;
    bool from_candidate = false;
    if (a < candidates.size() && g.contains(candidates[a]) && works(candidates[a])) {
      h = candidates[a];
      from_candidate = true;
    } else {
      h = find_conjugator(g, pairs);
    }
    if (!h) {
      res.failure = TSSFailure::Conjugation;
      res.detail = "no conjugator in G for transposition " + transposition_label(a);
      return res;
    }
    cert.conjugators.push_back(h->to_cycles());
    cert.from_candidates.push_back(from_candidate);
  }
  return res;
}

bool replay_certificate(const TSSCertificate& cert, const std::vector<Word>& members, const WordAmbient& ambient) {
  if (cert.conjugators.size() + 1 != members.size() && !(members.size() <= 1 && cert.conjugators.empty())) return false;
  for (std::size_t a = 0; a < cert.conjugators.size(); ++a) {
    const Truth t = check_pairs(ambient, Word::parse(cert.conjugators[a]), swap_pairs(members, a));
    if (t == Truth::False || (t == Truth::Unknown && !cert.conditional)) return false;
  }
  return true;
}

bool replay_certificate(const TSSCertificate& cert, const std::vector<Permutation>& members) {
  if (members.empty() || cert.conjugators.size() + 1 != members.size()) return false;
  const int d = members.front().degree();
  for (std::size_t a = 0; a < cert.conjugators.size(); ++a) {
    const auto h = Permutation::from_cycles(cert.conjugators[a], d);
    for (const auto& [x, y] : swap_pairs(members, a))
      if (conjugate(h, x) != y) return false;
  }
  return true;
}

PowerReport minimal_common_power(const std::vector<Permutation>& images) {
  PowerReport rep;
  if (images.size() < 2) return rep;
  long long bound = 1;
  for (const auto& g : images) bound = std::lcm(bound, g.order());
  for (long long q = 1; q <= bound; ++q) {
    std::vector<Permutation> pw;
    for (const auto& g : images) pw.push_back(g.pow(q));
    std::size_t agreeing = 0, total = 0;
    for (std::size_t a = 0; a < pw.size(); ++a)
      for (std::size_t b = a + 1; b < pw.size(); ++b, ++total)
        if (pw[a] == pw[b]) ++agreeing;
    if (agreeing == total) {
      rep.p = q;
      return rep;
    }
    if (agreeing > 0) rep.propagation_ok = false;
  }
  rep.p = bound;  // unreachable: every power agrees at the lcm
  return rep;
}

SplitReport split_report(const Homomorphism& phi, const GeneratorFamily& fam) {
  SplitReport rep;
  rep.family = fam.name();
  rep.family_size = fam.size();
  rep.conjugation_only = fam.conjugation_only;
  std::vector<Permutation> imgs;
  for (const auto& w : fam.members) imgs.push_back(phi.evaluate(w));
  std::set<Permutation> distinct(imgs.begin(), imgs.end());
  rep.image_size = distinct.size();
  rep.splits = rep.image_size == rep.family_size;
  rep.dichotomy_ok = rep.image_size == 1 || rep.splits;
  const auto pw = minimal_common_power(imgs);
  rep.p = pw.p;
  rep.propagation_ok = pw.propagation_ok;
  return rep;
}

BoundCheck generated_order_bound_check(const std::vector<Permutation>& images, long long p, const PermGroup& g) {
  BoundCheck c;
  c.measured = subgroup_order(g, images);
  c.bound = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(images.size() - 1));
  c.pass = c.measured >= c.bound;
  return c;
}

BoundCheck ambient_size_bound_check(const std::vector<Permutation>& images, long long p, const PermGroup& g) {
  BoundCheck c;
  c.measured = g.order();
  const auto k = static_cast<long long>(images.size());
  c.bound = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(k - 1)) * factorial(static_cast<int>(k));
  c.pass = c.measured >= c.bound;
  return c;
}

// ---- welded images ------------------------------------------------------

std::optional<Permutation> family_image(const Homomorphism& phi, int i) {
  const auto fam = family(FamilyLabel::A, phi.n, i, phi.kind);
  const Permutation g = phi.evaluate(fam.members.front());
  for (const auto& w : fam.members)
    if (phi.evaluate(w) != g) return std::nullopt;
  return g;
}

bool pwb_braid_relators_hold(const Homomorphism& phi) {
  const int n = phi.n;
  std::vector<std::vector<Permutation>> s(static_cast<std::size_t>(n + 1),
                                          std::vector<Permutation>(static_cast<std::size_t>(n + 1)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = phi.evaluate(sigma_ij(i, j, n));
  auto at = [&](int i, int j) -> const Permutation& { return s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        if (at(i, j) * at(i, k) * at(j, k) != at(j, k) * at(i, k) * at(i, j)) return false;
      }
  return true;
}

std::optional<bool> square_identity_holds(const Homomorphism& phi) {
  std::vector<Permutation> g;
  for (int i = 1; i <= phi.n; ++i) {
    auto gi = family_image(phi, i);
    if (!gi) return std::nullopt;
    g.push_back(*gi);
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (i != j && g[i] * g[i] * g[j] != g[j] * g[i] * g[i]) return false;
  return true;
}

std::string to_string(BalloonFailure f) {
  switch (f) {
    case BalloonFailure::None: return "none";
    case BalloonFailure::Abelian: return "abelian image";
    case BalloonFailure::SplitDetected: return "split detected";
    case BalloonFailure::SquaresCollide: return "squares collide";
  }
  return "?";
}

BalloonResult hot_air_balloon(const Homomorphism& phi, const std::vector<int>& indices) {
  if (phi.kind != PresentationKind::Welded) throw WrongGroup("hot air balloon needs a welded homomorphism");
  if (indices.empty()) throw InvalidParameter("hot air balloon needs at least one index");
  for (int i : indices)
    if (i < 1 || i > phi.n) throw InvalidParameter("index out of range: " + std::to_string(i));
  BalloonResult res;
  std::vector<Permutation> g;
  for (int i : indices) {
    auto gi = family_image(phi, i);
    if (!gi) {
      res.failure = BalloonFailure::SplitDetected;
      res.detail = "A" + std::to_string(i) + " splits";
      return res;
    }
    g.push_back(*gi);
    res.squares.push_back(*gi * *gi);
  }
  const std::set<Permutation> distinct(res.squares.begin(), res.squares.end());
  if (distinct.size() != res.squares.size()) {
    res.failure = BalloonFailure::SquaresCollide;
    res.detail = "squares of the A_i images are not distinct";
    return res;
  }
  if (classify(phi) != Classification::Nonabelian) {
    res.failure = BalloonFailure::Abelian;
    res.detail = "image is abelian";
    return res;
  }

  const PermGroup image(phi.degree(), phi.images);
  std::vector<Permutation> candidates;
  for (std::size_t a = 0; a + 1 < indices.size(); ++a)
    candidates.push_back(phi.evaluate(transposition_word(indices[a], indices[a + 1])));
  res.tss = verify_totally_symmetric(res.squares, image, candidates);

  res.square_commutation_ok = true;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b)
      if (a != b && g[a] * g[a] * g[b] != g[b] * g[a] * g[a]) res.square_commutation_ok = false;

  // tau_i relabels A_i <-> A_i+1 and fixes the other A_k; check on every index pair present.
  res.tau_action_ok = true;
  for (int t = 1; t < phi.n; ++t) {
    const Permutation ti = phi.image(tau_gen(t));
    for (std::size_t a = 0; a < indices.size(); ++a) {
      const int k = indices[a];
      const int to = k == t ? t + 1 : k == t + 1 ? t : k;
      const auto target = family_image(phi, to);
      if (!target || conjugate(ti, g[a]) != *target) res.tau_action_ok = false;
    }
  }
  res.pwb_relators_ok = pwb_braid_relators_hold(phi);
  res.p = minimal_common_power(res.squares).p;
  res.size_bound = ambient_size_bound_check(res.squares, res.p, image);
  return res;
}

}  // namespace braidq
