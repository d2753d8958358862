#include "braidq/welded.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include "braidq/errors.hpp"

namespace braidq {

FreeWord::FreeWord(std::vector<int> letters) {
  letters_.reserve(letters.size());
  for (int x : letters) {
    if (!letters_.empty() && letters_.back() == -x)
      letters_.pop_back();
    else
      letters_.push_back(x);
  }
}

FreeWord FreeWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (auto& x : out) x = -x;
  FreeWord w;
  w.letters_ = std::move(out);
  return w;
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (int x : letters_) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(std::abs(x));
    if (x < 0) out += "^-1";
  }
  return out;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<int> all(a.letters_);
  all.insert(all.end(), b.letters_.begin(), b.letters_.end());
  return FreeWord(std::move(all));
}

FreeAutomorphism::FreeAutomorphism(int n) {
  for (int k = 1; k <= n; ++k) images_.push_back(FreeWord::basis(k));
}

FreeAutomorphism::FreeAutomorphism(int n, std::vector<FreeWord> images) : images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != n) throw InvalidParameter("need one image per basis letter");
}

FreeWord FreeAutomorphism::apply(const FreeWord& w) const {
  std::vector<int> out;
  for (int x : w.letters()) {
    const auto& img = images_[static_cast<std::size_t>(std::abs(x) - 1)].letters();
    if (x > 0)
      out.insert(out.end(), img.begin(), img.end());
    else
      for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back(-*it);
  }
  return FreeWord(std::move(out));
}

bool FreeAutomorphism::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (images_[k].letters() != std::vector<int>{static_cast<int>(k) + 1}) return false;
  return true;
}

FreeAutomorphism operator*(const FreeAutomorphism& a, const FreeAutomorphism& b) {
  std::vector<FreeWord> imgs;
  imgs.reserve(b.images_.size());
  for (const auto& w : b.images_) imgs.push_back(a.apply(w));
  return FreeAutomorphism(a.n(), std::move(imgs));
}

FreeAutomorphism generator_action(Letter l, int n) {
  const int i = l.gen.index;
  if (i < 1 || i >= n) throw InvalidParameter("generator index out of range: " + to_token(l));
  std::vector<FreeWord> img;
  for (int k = 1; k <= n; ++k) img.push_back(FreeWord::basis(k));
  auto& xi = img[static_cast<std::size_t>(i - 1)];
  auto& xj = img[static_cast<std::size_t>(i)];
  if (l.gen.kind == GenKind::Tau) {
    std::swap(xi, xj);
  } else if (l.sign > 0) {
    xi = FreeWord({i + 1});
    xj = FreeWord({-(i + 1), i, i + 1});
  } else {
    xi = FreeWord({i, i + 1, -i});
    xj = FreeWord({i});
  }
  return FreeAutomorphism(n, std::move(img));
}

FreeAutomorphism generator_action(Generator g, int n) { return generator_action(Letter{g, 1}, n); }

FreeAutomorphism word_action(const Word& w, int n) {
  FreeAutomorphism result(n);
  for (const auto& l : w) result = result * generator_action(l, n);
  return result;
}

bool welded_equal(const Word& w1, const Word& w2, int n) { return word_action(w1, n) == word_action(w2, n); }

Permutation project_to_symmetric(const Word& w, int n) {
  Permutation p(n);
  for (const auto& l : w) {
    if (l.gen.index < 1 || l.gen.index >= n) throw InvalidParameter("generator index out of range: " + to_token(l));
    p = p * Permutation::transposition(l.gen.index, l.gen.index + 1, n);
  }
  return p;
}

std::optional<Permutation> underlying_permutation(const FreeAutomorphism& a) {
  std::vector<int> img;
  for (const auto& w : a.images()) {
    const auto& L = w.letters();
    if (L.size() % 2 == 0) return std::nullopt;
    const std::size_t mid = L.size() / 2;
    if (L[mid] <= 0) return std::nullopt;
    for (std::size_t t = 0; t < mid; ++t)
      if (L[t] != -L[L.size() - 1 - t]) return std::nullopt;
    img.push_back(L[mid] - 1);
  }
  try {
    return Permutation(std::move(img));
  } catch (const InvalidParameter&) {
    return std::nullopt;
  }
}

// ---- semi-decision ------------------------------------------------------

std::string to_string(RewriteDirection d) {
  switch (d) {
    case RewriteDirection::LeftToRight: return "l2r";
    case RewriteDirection::RightToLeft: return "r2l";
    case RewriteDirection::InverseLeftToRight: return "inv-l2r";
    case RewriteDirection::InverseRightToLeft: return "inv-r2l";
  }
  return "?";
}

RewriteDirection parse_rewrite_direction(const std::string& s) {
  for (auto d : {RewriteDirection::LeftToRight, RewriteDirection::RightToLeft, RewriteDirection::InverseLeftToRight,
                 RewriteDirection::InverseRightToLeft})
    if (to_string(d) == s) return d;
  throw InvalidParameter("unknown rewrite direction '" + s + "'");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ProvenEqual: return "equal";
    case Verdict::ProvenDistinct: return "distinct";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

Word virtual_normalize(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto l : w) {
    if (l.gen.kind == GenKind::Tau) l.sign = 1;
    out.push_back(l);
  }
  return free_reduce(Word(std::move(out)));
}

namespace {

struct Rule {
  std::size_t relator;
  RewriteDirection direction;
  std::vector<Letter> pattern;
  std::vector<Letter> replacement;
};

Rule make_rule(const GroupPresentation& vb, std::size_t r, RewriteDirection d) {
  const auto& rel = vb.relators.at(r);
  Word from = rel.lhs, to = rel.rhs;
  if (d == RewriteDirection::RightToLeft || d == RewriteDirection::InverseRightToLeft) std::swap(from, to);
  if (d == RewriteDirection::InverseLeftToRight || d == RewriteDirection::InverseRightToLeft) {
    from = from.inverse();
    to = to.inverse();
  }
  return {r, d, virtual_normalize(from).letters(), virtual_normalize(to).letters()};
}

std::vector<Rule> all_rules(const GroupPresentation& vb) {
  std::vector<Rule> out;
  for (std::size_t r = 0; r < vb.relators.size(); ++r)
    for (auto d : {RewriteDirection::LeftToRight, RewriteDirection::RightToLeft,
                   RewriteDirection::InverseLeftToRight, RewriteDirection::InverseRightToLeft})
      out.push_back(make_rule(vb, r, d));
  return out;
}

std::optional<Word> rewrite_at(const std::vector<Letter>& w, const Rule& rule, std::size_t pos) {
  const auto& pat = rule.pattern;
  if (pos + pat.size() > w.size()) return std::nullopt;
  if (!std::equal(pat.begin(), pat.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) return std::nullopt;
  std::vector<Letter> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), rule.replacement.begin(), rule.replacement.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + pat.size()), w.end());
  return virtual_normalize(Word(std::move(out)));
}

struct Child {
  Word word;
  DerivationStep step;
};

std::vector<Child> children(const Word& w, const std::vector<Rule>& rules, std::size_t max_len) {
  std::vector<Child> out;
  const auto& L = w.letters();
  for (const auto& rule : rules) {
    for (std::size_t pos = 0; pos + rule.pattern.size() <= L.size(); ++pos) {
      auto c = rewrite_at(L, rule, pos);
      if (c && c->size() <= max_len) out.push_back({std::move(*c), {rule.relator, pos, rule.direction}});
    }
  }
  return out;
}

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const auto& l : w) {
      h ^= static_cast<std::size_t>(l.gen.index * 4 + (l.gen.kind == GenKind::Tau ? 2 : 0) + (l.sign > 0 ? 1 : 0));
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

std::optional<Word> apply_step(const GroupPresentation& vb, const Word& w, const DerivationStep& step) {
  if (step.relator >= vb.relators.size()) return std::nullopt;
  return rewrite_at(w.letters(), make_rule(vb, step.relator, step.direction), step.position);
}

bool replay_derivation(const Word& w1, const Word& w2, int n, const std::vector<DerivationStep>& steps) {
  const auto vb = make_presentation(PresentationKind::Virtual, n);
  Word cur = virtual_normalize(w1);
  for (const auto& s : steps) {
    auto next = apply_step(vb, cur, s);
    if (!next) return false;
    cur = std::move(*next);
  }
  return cur == virtual_normalize(w2);
}

VirtualVerdict virtual_equal_semidecide(const Word& w1, const Word& w2, int n, const VirtualSearchConfig& cfg) {
  if (cfg.depth < 0) throw InvalidParameter("depth budget must be >= 0");
  VirtualVerdict out;
  if (project_to_symmetric(w1, n) != project_to_symmetric(w2, n)) {
    out.verdict = Verdict::ProvenDistinct;
    out.witness = "symmetric projection";
    return out;
  }
  const auto a1 = word_action(w1, n), a2 = word_action(w2, n);
  if (a1 != a2) {
    out.verdict = Verdict::ProvenDistinct;
    for (int k = 1; k <= n; ++k)
      if (a1.image(k) != a2.image(k)) {
        out.witness = "welded action differs on x" + std::to_string(k);
        break;
      }
    return out;
  }

  const Word start = virtual_normalize(w1), goal = virtual_normalize(w2);
  out.nodes = 1;
  if (start == goal) {
    out.verdict = Verdict::ProvenEqual;
    return out;
  }
  const auto rules = all_rules(make_presentation(PresentationKind::Virtual, n));
  const std::size_t max_len = std::max(start.size(), goal.size()) + static_cast<std::size_t>(cfg.length_slack);

  struct Node {
    Word word;
    long parent;
    DerivationStep step;
  };
  std::vector<Node> nodes{{start, -1, {}}};
  std::unordered_map<Word, std::size_t, WordHash> seen{{start, 0}};
  std::vector<std::size_t> frontier{0};

  auto finish = [&](std::size_t idx) {
    for (long i = static_cast<long>(idx); nodes[static_cast<std::size_t>(i)].parent >= 0;
         i = nodes[static_cast<std::size_t>(i)].parent)
      out.derivation.push_back(nodes[static_cast<std::size_t>(i)].step);
    std::reverse(out.derivation.begin(), out.derivation.end());
    out.verdict = Verdict::ProvenEqual;
  };

  for (int depth = 0; depth < cfg.depth && !frontier.empty(); ++depth) {
    std::vector<std::vector<Child>> kids(frontier.size());
    const long long count = static_cast<long long>(frontier.size());
#pragma omp parallel for schedule(dynamic, 8) if (cfg.parallel)
    for (long long f = 0; f < count; ++f)
      kids[static_cast<std::size_t>(f)] = children(nodes[frontier[static_cast<std::size_t>(f)]].word, rules, max_len);

    std::vector<std::size_t> next;
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      for (auto& c : kids[f]) {
        if (seen.count(c.word)) continue;
        const std::size_t idx = nodes.size();
        seen.emplace(c.word, idx);
        nodes.push_back({std::move(c.word), static_cast<long>(frontier[f]), c.step});
        out.nodes = nodes.size();
        if (nodes.back().word == goal) {
          finish(idx);
          return out;
        }
        if (nodes.size() >= cfg.max_nodes) return out;
        next.push_back(idx);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace braidq
