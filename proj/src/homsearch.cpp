#include "braidq/homsearch.hpp"

#include <algorithm>
#include <atomic>
#include <functional>

#include <omp.h>

#include "braidq/errors.hpp"

namespace braidq {

ElementTable::ElementTable(const PermGroup& g, std::uint64_t cap) : elems_(g.elements(cap)) {
  const std::size_t n = elems_.size();
  index_.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elems_[i], i);
  identity_ = index_.at(g.identity());
  inv_.resize(n);
  for (std::size_t i = 0; i < n; ++i) inv_[i] = index_.at(elems_[i].inverse());
  if (n <= kTableCap) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table_[a * n + b] = static_cast<std::uint32_t>(index_.at(elems_[a] * elems_[b]));
  }
  std::vector<char> done(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t y = mul(mul(c, x), inv_[c]);
      if (!done[y]) {
        done[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
}

std::size_t ElementTable::mul(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * elems_.size() + b];
  return index_.at(elems_[a] * elems_[b]);
}

std::size_t ElementTable::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw MembershipError(p.to_cycles() + " is not in the target group");
  return it->second;
}

std::string to_string(SearchMode m) { return m == SearchMode::Full ? "full" : "conj"; }

std::uint64_t SearchResult::represented() const {
  std::uint64_t s = 0;
  for (auto m : multiplicity) s += m;
  return s;
}

std::vector<Generator> assignment_order(const GroupPresentation& p) {
  std::vector<Generator> out;
  for (const auto& g : p.generators)
    if (g.kind == GenKind::Tau) out.push_back(g);
  for (const auto& g : p.generators)
    if (g.kind == GenKind::Sigma) out.push_back(g);
  return out;
}

namespace {

struct CompiledRelator {
  std::vector<std::pair<std::size_t, int>> letters;  // (slot, sign) of lhs * rhs^-1
  std::size_t level = 0;                            // last slot it mentions
};

class Searcher {
 public:
  Searcher(const GroupPresentation& p, const PermGroup& g, const SearchConfig& cfg)
      : pres_(p), table_(g), cfg_(cfg), order_(assignment_order(p)) {
    for (const auto& r : p.relators) {
      CompiledRelator c;
      auto add = [&](const Letter& l, int sign) {
        const auto slot = slot_of(l.gen);
        c.letters.emplace_back(slot, l.sign * sign);
        c.level = std::max(c.level, slot);
      };
      for (const auto& l : r.lhs) add(l, 1);
      for (auto it = r.rhs.letters().rbegin(); it != r.rhs.letters().rend(); ++it) add(*it, -1);
      by_level_.resize(order_.size());
      by_level_[c.level].push_back(std::move(c));
    }
    by_level_.resize(order_.size());
    pinned_ = cfg.pin_first || cfg.mode == SearchMode::Conj;
    if (pinned_) {
      for (const auto& cls : table_.classes()) {
        firsts_.push_back(cls.front());
        class_size_.push_back(cls.size());
      }
    } else {
      for (std::size_t i = 0; i < table_.size(); ++i) firsts_.push_back(i);
    }
  }

  SearchResult run(bool parallel) {
    const std::size_t parts = firsts_.size();
    std::vector<std::vector<std::vector<std::size_t>>> found(parts);
    std::vector<std::vector<std::uint64_t>> mult(parts);
    if (parallel) {
      const int workers = cfg_.workers > 0 ? cfg_.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
      for (long long t = 0; t < static_cast<long long>(parts); ++t)
        run_part(static_cast<std::size_t>(t), found[static_cast<std::size_t>(t)], mult[static_cast<std::size_t>(t)]);
    } else {
      for (std::size_t t = 0; t < parts; ++t) run_part(t, found[t], mult[t]);
    }
    SearchResult res;
    res.partial = exhausted_.load();
    res.nodes = nodes_.load();
    for (std::size_t t = 0; t < parts; ++t)
      for (std::size_t k = 0; k < found[t].size(); ++k) {
        res.homs.push_back(to_hom(found[t][k]));
        res.multiplicity.push_back(mult[t][k]);
      }
    return res;
  }

 private:
  std::size_t slot_of(Generator g) const {
    for (std::size_t s = 0; s < order_.size(); ++s)
      if (order_[s] == g) return s;
    throw InvalidParameter("relator mentions undeclared generator " + to_token(g));
  }

  bool relators_hold(const std::vector<std::size_t>& a, std::size_t level) const {
    for (const auto& r : by_level_[level]) {
      std::size_t v = table_.identity();
      for (const auto& [slot, sign] : r.letters) v = table_.mul(v, sign > 0 ? a[slot] : table_.inverse(a[slot]));
      if (v != table_.identity()) return false;
    }
    return true;
  }

  std::size_t conj(std::size_t c, std::size_t x) const { return table_.mul(table_.mul(c, x), table_.inverse(c)); }

  // Conj mode: keep the lexicographically least tuple of its C(first)-orbit;
  // returns the orbit size under all of G, or 0 if not canonical.
  std::uint64_t canonical_orbit(const std::vector<std::size_t>& a) const {
    std::uint64_t stab = 0;
    std::vector<std::size_t> img(a.size());
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (conj(c, a[0]) != a[0]) continue;
      for (std::size_t s = 0; s < a.size(); ++s) img[s] = conj(c, a[s]);
      if (img < a) return 0;
      if (img == a) ++stab;
    }
    return table_.size() / stab;
  }

  void run_part(std::size_t part, std::vector<std::vector<std::size_t>>& out, std::vector<std::uint64_t>& mult) {
    std::vector<std::size_t> a(order_.size());
    a[0] = firsts_[part];
    std::function<void(std::size_t)> dfs = [&](std::size_t depth) {
      if (exhausted_.load(std::memory_order_relaxed)) return;
      const auto count = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
      if (cfg_.max_nodes && count > cfg_.max_nodes) {
        exhausted_.store(true);
        return;
      }
      if (!relators_hold(a, depth)) return;
      if (depth + 1 == a.size()) {
        std::uint64_t m = 1;
        if (cfg_.mode == SearchMode::Conj) {
          m = canonical_orbit(a);
          if (m == 0) return;
        } else if (pinned_) {
          m = class_size_[part];
        }
        out.push_back(a);
        mult.push_back(m);
        return;
      }
      for (std::size_t x = 0; x < table_.size(); ++x) {
        a[depth + 1] = x;
        dfs(depth + 1);
      }
    };
    dfs(0);
  }

  Homomorphism to_hom(const std::vector<std::size_t>& a) const {
    Homomorphism h;
    h.kind = pres_.kind;
    h.n = pres_.n;
    h.images.resize(pres_.generators.size());
    for (std::size_t s = 0; s < order_.size(); ++s)
      h.images[static_cast<std::size_t>(pres_.generator_position(order_[s]))] = table_[a[s]];
    return h;
  }

  const GroupPresentation& pres_;
  ElementTable table_;
  SearchConfig cfg_;
  std::vector<Generator> order_;
  std::vector<std::vector<CompiledRelator>> by_level_;
  bool pinned_ = false;
  std::vector<std::size_t> firsts_;
  std::vector<std::uint64_t> class_size_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> exhausted_{false};
};

}  // namespace

SearchResult enumerate_homs(const GroupPresentation& p, const PermGroup& g, const SearchConfig& cfg) {
  if (cfg.workers < 0) throw InvalidParameter("worker count must be >= 0");
  return Searcher(p, g, cfg).run(cfg.parallel);
}

SearchResult enumerate_homs_serial(const GroupPresentation& p, const PermGroup& g, const SearchConfig& cfg) {
  return Searcher(p, g, cfg).run(false);
}

std::vector<Homomorphism> brute_force_homs(const GroupPresentation& p, const PermGroup& g) {
  const auto elems = g.elements();
  const std::size_t k = p.generators.size();
  std::vector<std::size_t> idx(k, 0);
  std::vector<Homomorphism> out;
  while (true) {
    Homomorphism h{p.kind, p.n, {}};
    for (auto i : idx) h.images.push_back(elems[i]);
    if (verify_relations(h)) out.push_back(std::move(h));
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == elems.size()) idx[pos++] = 0;
    if (pos == k) break;
  }
  return out;
}

HomReport report(const Homomorphism& h) {
  HomReport r;
  r.classification = classify(h);
  r.image_order = image_order(h);
  for (const auto& fam : families_for(h.kind, h.n)) r.splits.push_back(split_report(h, fam));
  const auto prim = h.primary_images();
  r.p = minimal_common_power(prim).p;
  r.d = prim.front().order();
  return r;
}

namespace {

void require_braid(const Homomorphism& h, int min_n, bool allow) {
  if (h.kind != PresentationKind::Braid) throw WrongGroup("scan expects braid group homomorphisms");
  if (!allow && h.n < min_n) throw InvalidParameter("scan needs n >= " + std::to_string(min_n));
}

}  // namespace

std::vector<Violation> commuting_adjacent_scan(const std::vector<Homomorphism>& homs, bool allow_out_of_range) {
  std::vector<Violation> out;
  for (std::size_t k = 0; k < homs.size(); ++k) {
    const auto& h = homs[k];
    require_braid(h, 5, allow_out_of_range);
    const auto s = h.primary_images();
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (commute(s[i], s[i + 1]) && classify(h) != Classification::Cyclic) {
        out.push_back({k, "s" + std::to_string(i + 1) + " and s" + std::to_string(i + 2) +
                              " have commuting images but the image is not cyclic"});
        break;
      }
    }
  }
  return out;
}

std::vector<Violation> split_both_scan(const std::vector<Homomorphism>& homs, bool allow_out_of_range) {
  std::vector<Violation> out;
  for (std::size_t k = 0; k < homs.size(); ++k) {
    const auto& h = homs[k];
    require_braid(h, 6, allow_out_of_range);
    if (classify(h) == Classification::Cyclic) continue;
    for (auto label : {FamilyLabel::SOdd, FamilyLabel::SEven}) {
      const auto rep = split_report(h, family(label, h.n, 0, h.kind));
      if (!rep.splits) out.push_back({k, "non-cyclic hom does not split " + rep.family});
    }
  }
  return out;
}

}  // namespace braidq
