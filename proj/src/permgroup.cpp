#include "braidq/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_set>

#include "braidq/errors.hpp"
#include "braidq/kernels.hpp"

namespace braidq {

PermGroup::PermGroup(int degree, std::vector<Permutation> generators) : degree_(degree) {
  if (degree < 1) throw InvalidParameter("degree must be positive");
  for (auto& g : generators) {
    if (g.degree() != degree) throw InvalidParameter("generator degree mismatch");
    if (!g.is_identity() && std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(std::move(g));
  }
  build();
}

PermGroup PermGroup::symmetric(int n) {
  if (n < 1) throw InvalidParameter("symmetric group needs n >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::transposition(1, 2, n));
  if (n >= 3) {
    std::vector<int> cyc(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % n;
    gens.emplace_back(std::move(cyc));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup PermGroup::alternating(int n) {
  if (n < 3) throw InvalidParameter("alternating group needs n >= 3");
  std::vector<Permutation> gens;
  for (int k = 3; k <= n; ++k) gens.push_back(Permutation::from_cycles("(1 2 " + std::to_string(k) + ")", n));
  return PermGroup(n, std::move(gens));
}

PermGroup PermGroup::cyclic(int n) {
  if (n < 1) throw InvalidParameter("cyclic group needs n >= 1");
  std::vector<int> cyc(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % n;
  return PermGroup(n, {Permutation(std::move(cyc))});
}

PermGroup PermGroup::dihedral(int n) {
  if (n < 3) throw InvalidParameter("dihedral group needs n >= 3");
  std::vector<int> rot(static_cast<std::size_t>(n)), refl(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<std::size_t>(i)] = (i + 1) % n;
    refl[static_cast<std::size_t>(i)] = n - 1 - i;
  }
  return PermGroup(n, {Permutation(std::move(rot)), Permutation(std::move(refl))});
}

std::vector<int> PermGroup::base() const {
  std::vector<int> out;
  for (const auto& l : levels_) out.push_back(l.base_point);
  return out;
}

void PermGroup::compute_orbit(Level& level) const {
  level.orbit.assign(1, level.base_point);
  level.rep_of.assign(static_cast<std::size_t>(degree_), -1);
  level.reps.assign(1, identity());
  level.rep_of[static_cast<std::size_t>(level.base_point)] = 0;
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (const auto& s : level.gens) {
      const int y = s(level.orbit[k]);
      if (level.rep_of[static_cast<std::size_t>(y)] >= 0) continue;
      level.rep_of[static_cast<std::size_t>(y)] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(y);
      level.reps.push_back(s * level.reps[k]);
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const auto& l = levels_[i];
    const int idx = l.rep_of[static_cast<std::size_t>(g(l.base_point))];
    if (idx < 0) return {std::move(g), i};
    g = l.reps[static_cast<std::size_t>(idx)].inverse() * g;
  }
  return {std::move(g), levels_.size()};
}

namespace {

int first_moved_point(const Permutation& p) {
  for (int x = 0; x < p.degree(); ++x)
    if (p(x) != x) return x;
  return -1;
}

}  // namespace

// Deterministic Schreier-Sims: level i is complete once every Schreier
// generator sifts to the identity through levels i+1.. .
void PermGroup::build() {
  levels_.clear();
  auto fixes_base_prefix = [&](const Permutation& g, std::size_t upto) {
    for (std::size_t l = 0; l < upto; ++l)
      if (g(levels_[l].base_point) != levels_[l].base_point) return false;
    return true;
  };
  for (const auto& g : gens_) {
    if (fixes_base_prefix(g, levels_.size())) {
      Level l;
      l.base_point = first_moved_point(g);
      levels_.push_back(std::move(l));
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : gens_)
      if (fixes_base_prefix(g, i)) levels_[i].gens.push_back(g);
    compute_orbit(levels_[i]);
  }

  long long i = static_cast<long long>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    auto& level = levels_[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < level.orbit.size() && !restarted; ++k) {
      for (std::size_t si = 0; si < level.gens.size(); ++si) {
        const auto& s = level.gens[si];
        const int y = s(level.orbit[k]);
        Permutation h = level.reps[static_cast<std::size_t>(level.rep_of[static_cast<std::size_t>(y)])].inverse() *
                        s * level.reps[k];
        auto [residue, j] = sift(std::move(h), static_cast<std::size_t>(i) + 1);
        if (residue.is_identity()) continue;
        if (j == levels_.size()) {
          Level fresh;
          fresh.base_point = first_moved_point(residue);
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels_[l].gens.push_back(residue);
          compute_orbit(levels_[l]);
        }
        i = static_cast<long long>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }

  order_ = 1;
  for (const auto& l : levels_) {
    std::uint64_t next = 0;
    if (__builtin_mul_overflow(order_, static_cast<std::uint64_t>(l.orbit.size()), &next))
      throw ResourceError("group order overflows 64 bits");
    order_ = next;
  }
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, j] = sift(p, 0);
  return j == levels_.size() && residue.is_identity();
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
  if (order_ > cap) throw ResourceError("group of order " + std::to_string(order_) + " exceeds enumeration cap");
  std::vector<Permutation> out;
  out.reserve(order_);
  std::function<void(std::size_t, const Permutation&)> walk = [&](std::size_t lvl, const Permutation& prefix) {
    if (lvl == levels_.size()) {
      out.push_back(prefix);
      return;
    }
    for (const auto& r : levels_[lvl].reps) walk(lvl + 1, prefix * r);
  };
  walk(0, identity());
  std::sort(out.begin(), out.end());
  return out;
}

bool PermGroup::is_abelian() const {
  for (std::size_t a = 0; a < gens_.size(); ++a)
    for (std::size_t b = a + 1; b < gens_.size(); ++b)
      if (!commute(gens_[a], gens_[b])) return false;
  return true;
}

std::vector<Permutation> closure_elements(int degree, const std::vector<Permutation>& gens, std::uint64_t cap) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  Permutation id(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation y = g * x;
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw ResourceError("closure exceeds enumeration cap");
        queue.push_back(std::move(y));
      }
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t subgroup_order(const PermGroup& g, const std::vector<Permutation>& elems) {
  for (const auto& e : elems)
    if (!g.contains(e)) throw MembershipError("element " + e.to_cycles() + " is not in the ambient group");
  return PermGroup(g.degree(), elems).order();
}

namespace {

bool conjugates_all(const Permutation& h, const std::vector<ConjugationPair>& pairs) {
  const Permutation hinv = h.inverse();
  for (const auto& [a, b] : pairs)
    if (h * a * hinv != b) return false;
  return true;
}

// Walks h = r_0 r_1 ... r_k (one coset representative per level), fixing
// h(base_l) level by level and pruning on h(a(x)) == b(h(x)) whenever both
// x and a(x) are already-determined base points.
std::optional<Permutation> backtrack_conjugator(const PermGroup& g, const std::vector<ConjugationPair>& pairs) {
  const auto& levels = g.levels();
  const auto base = g.base();
  std::vector<int> base_index(static_cast<std::size_t>(g.degree()), -1);
  for (std::size_t l = 0; l < base.size(); ++l) base_index[static_cast<std::size_t>(base[l])] = static_cast<int>(l);

  std::optional<Permutation> found;
  std::function<void(std::size_t, const Permutation&)> walk = [&](std::size_t lvl, const Permutation& prefix) {
    if (found) return;
    if (lvl == levels.size()) {
      if (conjugates_all(prefix, pairs)) found = prefix;
      return;
    }
    for (const auto& r : levels[lvl].reps) {
      Permutation p = prefix * r;
      bool ok = true;
      for (std::size_t l = 0; l <= lvl && ok; ++l) {
        const int x = base[l];
        for (const auto& [a, b] : pairs) {
          const int ax = a(x);
          const int m = base_index[static_cast<std::size_t>(ax)];
          if (m < 0 || static_cast<std::size_t>(m) > lvl) continue;
          if (p(ax) != b(p(x))) {
            ok = false;
            break;
          }
        }
      }
      if (ok) walk(lvl + 1, p);
      if (found) return;
    }
  };
  walk(0, g.identity());
  return found;
}

}  // namespace

std::optional<Permutation> find_conjugator(const PermGroup& g, const std::vector<ConjugationPair>& pairs,
                                           ConjugatorStrategy strategy, std::uint64_t cap) {
  for (const auto& [a, b] : pairs) {
    if (!g.contains(a)) throw MembershipError(a.to_cycles() + " is not in the ambient group");
    if (!g.contains(b)) throw MembershipError(b.to_cycles() + " is not in the ambient group");
    // Conjugation preserves cycle type; cheap early exit.
    if (a.order() != b.order()) return std::nullopt;
  }
  if (strategy == ConjugatorStrategy::Auto)
    strategy = g.order() <= cap ? ConjugatorStrategy::Exhaustive : ConjugatorStrategy::Backtrack;

  std::optional<Permutation> h;
  if (strategy == ConjugatorStrategy::Exhaustive) {
    const auto elems = g.elements(cap);
    if (auto idx = kernels::conjugator_scan_omp(elems, pairs)) h = elems[*idx];
  } else {
    h = backtrack_conjugator(g, pairs);
  }
  if (h && !conjugates_all(*h, pairs)) throw std::logic_error("conjugator failed post-verification");
  return h;
}

std::vector<Permutation> conj_setwise_stabilizer_elements(const PermGroup& g, const std::vector<Permutation>& set,
                                                          std::uint64_t cap) {
  for (const auto& s : set)
    if (!g.contains(s)) throw MembershipError(s.to_cycles() + " is not in the ambient group");
  const auto elems = g.elements(cap);
  std::vector<Permutation> out;
  for (auto idx : kernels::conj_stabilizer_scan_omp(elems, set)) out.push_back(elems[idx]);
  return out;
}

PermGroup group_from_elements(int degree, const std::vector<Permutation>& elements) {
  std::vector<Permutation> gens;
  PermGroup current(degree, {});
  for (const auto& e : elements) {
    if (current.contains(e)) continue;
    gens.push_back(e);
    current = PermGroup(degree, gens);
  }
  return current;
}

PermGroup conj_setwise_stabilizer(const PermGroup& g, const std::vector<Permutation>& set, std::uint64_t cap) {
  return group_from_elements(g.degree(), conj_setwise_stabilizer_elements(g, set, cap));
}

PermGroup named_group(const std::string& name) {
  auto bad = [&] { return InvalidParameter("unknown target group '" + name + "'"); };
  if (name.size() < 2) throw bad();
  int k = 0;
  try {
    std::size_t pos = 0;
    k = std::stoi(name.substr(1), &pos);
    if (pos != name.size() - 1) throw bad();
  } catch (const std::logic_error&) {
    throw bad();
  }
  switch (name[0]) {
    case 'S':
      if (k >= 2 && k <= 8) return PermGroup::symmetric(k);
      break;
    case 'A':
      if (k >= 3 && k <= 8) return PermGroup::alternating(k);
      break;
    case 'Z':
      if (k >= 2 && k <= 24) return PermGroup::cyclic(k);
      break;
    case 'D':
      if (k >= 4 && k <= 12) return PermGroup::dihedral(k);
      break;
    default: break;
  }
  throw bad();
}

std::vector<std::string> builtin_group_names() {
  std::vector<std::string> out;
  for (int k = 2; k <= 8; ++k) out.push_back("S" + std::to_string(k));
  for (int k = 3; k <= 8; ++k) out.push_back("A" + std::to_string(k));
  for (int k = 2; k <= 24; ++k) out.push_back("Z" + std::to_string(k));
  for (int k = 4; k <= 12; ++k) out.push_back("D" + std::to_string(k));
  return out;
}

}  // namespace braidq
