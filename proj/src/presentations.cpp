#include "braidq/presentations.hpp"

#include <algorithm>
#include <cctype>

#include "braidq/errors.hpp"

namespace braidq {

std::string to_string(PresentationKind k) {
  switch (k) {
    case PresentationKind::Braid: return "braid";
    case PresentationKind::Symmetric: return "symmetric";
    case PresentationKind::Virtual: return "virtual";
    case PresentationKind::Welded: return "welded";
  }
  return "?";
}

PresentationKind parse_presentation_kind(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "braid" || s == "b") return PresentationKind::Braid;
  if (s == "symmetric" || s == "sigma") return PresentationKind::Symmetric;
  if (s == "virtual" || s == "vb") return PresentationKind::Virtual;
  if (s == "welded" || s == "wb") return PresentationKind::Welded;
  throw InvalidParameter("unknown presentation '" + name + "'");
}

std::string to_string(RelationType t) {
  switch (t) {
    case RelationType::FarCommutativity: return "far-commutativity";
    case RelationType::Braid: return "braid";
    case RelationType::TauSquare: return "tau-square";
    case RelationType::TauFarCommutativity: return "tau-far-commutativity";
    case RelationType::TauBraid: return "tau-braid";
    case RelationType::MixedFarCommutativity: return "mixed-far-commutativity";
    case RelationType::MixedBraid: return "mixed-braid";
    case RelationType::OverCrossingsCommute: return "over-crossings-commute";
  }
  return "?";
}

bool GroupPresentation::declares(Generator g) const { return generator_position(g) >= 0; }

int GroupPresentation::generator_position(Generator g) const {
  auto it = std::find(generators.begin(), generators.end(), g);
  return it == generators.end() ? -1 : static_cast<int>(it - generators.begin());
}

namespace {

void add_far_commutativity(std::vector<Relator>& out, int n, GenKind a, GenKind b,
                           RelationType type, bool ordered_pairs) {
  Generator ga{a, 1}, gb{b, 1};
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - 1; ++j) {
      if (std::abs(i - j) < 2) continue;
      if (!ordered_pairs && j < i) continue;
      ga.index = i;
      gb.index = j;
      Word x{Letter{ga, 1}}, y{Letter{gb, 1}};
      out.push_back({x * y, y * x, type});
    }
  }
}

void add_braid(std::vector<Relator>& out, int n, GenKind k, RelationType type) {
  for (int i = 1; i <= n - 2; ++i) {
    Word a{Letter{{k, i}, 1}}, b{Letter{{k, i + 1}, 1}};
    out.push_back({a * b * a, b * a * b, type});
  }
}

}  // namespace

GroupPresentation make_presentation(PresentationKind kind, int n) {
  if (n < 2) throw InvalidParameter("presentation needs n >= 2, got " + std::to_string(n));
  GroupPresentation p{kind, n, {}, {}};
  const bool has_sigma = kind != PresentationKind::Symmetric;
  const bool has_tau = kind != PresentationKind::Braid;
  if (has_sigma)
    for (int i = 1; i < n; ++i) p.generators.push_back(sigma_gen(i));
  if (has_tau)
    for (int i = 1; i < n; ++i) p.generators.push_back(tau_gen(i));

  auto& r = p.relators;
  if (has_sigma) {
    add_far_commutativity(r, n, GenKind::Sigma, GenKind::Sigma, RelationType::FarCommutativity, false);
    add_braid(r, n, GenKind::Sigma, RelationType::Braid);
  }
  if (has_tau) {
    for (int i = 1; i < n; ++i) r.push_back({tau(i) * tau(i), Word{}, RelationType::TauSquare});
    add_far_commutativity(r, n, GenKind::Tau, GenKind::Tau, RelationType::TauFarCommutativity, false);
    add_braid(r, n, GenKind::Tau, RelationType::TauBraid);
  }
  if (has_sigma && has_tau) {
    add_far_commutativity(r, n, GenKind::Sigma, GenKind::Tau, RelationType::MixedFarCommutativity, true);
    for (int i = 1; i <= n - 2; ++i)
      r.push_back({tau(i + 1) * sigma(i) * tau(i + 1), tau(i) * sigma(i + 1) * tau(i),
                   RelationType::MixedBraid});
  }
  if (kind == PresentationKind::Welded) {
    for (int i = 1; i <= n - 2; ++i)
      r.push_back({tau(i) * sigma(i + 1) * sigma(i), sigma(i + 1) * sigma(i) * tau(i + 1),
                   RelationType::OverCrossingsCommute});
  }
  return p;
}

Word sigma_ij(int i, int j, int n) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw InvalidParameter("sigma_ij needs distinct indices in [1, n]");
  Word w;
  if (i < j) {
    for (int k = i; k <= j - 1; ++k) w *= tau(k);
    w *= sigma(j - 1);
    for (int k = j - 2; k >= i; --k) w *= tau(k);
  } else {
    for (int k = i - 1; k >= j + 1; --k) w *= tau(k);
    w *= sigma(j);
    w *= tau(j);
    for (int k = j + 1; k <= i - 1; ++k) w *= tau(k);
  }
  return w;
}

Word transposition_word(int a, int b) {
  if (a == b || a < 1 || b < 1) throw InvalidParameter("transposition_word needs distinct points");
  if (a > b) std::swap(a, b);
  Word w;
  for (int k = a; k <= b - 1; ++k) w *= tau(k);
  for (int k = b - 2; k >= a; --k) w *= tau(k);
  return w;
}

std::string GeneratorFamily::name() const {
  switch (label) {
    case FamilyLabel::SOdd: return "SOdd";
    case FamilyLabel::SEven: return "SEven";
    case FamilyLabel::TOdd: return "TOdd";
    case FamilyLabel::TEven: return "TEven";
    case FamilyLabel::TauSigmaOdd: return "TauSigmaOdd";
    case FamilyLabel::TauSigmaEven: return "TauSigmaEven";
    case FamilyLabel::A: return "A" + std::to_string(index);
    case FamilyLabel::R: return "R" + std::to_string(index);
    case FamilyLabel::L: return "L" + std::to_string(index);
    case FamilyLabel::RightDiagBottomRow: return "RightDiagBottomRow";
    case FamilyLabel::LeftDiagTopRow: return "LeftDiagTopRow";
  }
  return "?";
}

GeneratorFamily family(FamilyLabel label, int n, int index, PresentationKind ambient) {
  if (n < 2) throw InvalidParameter("family needs n >= 2");
  GeneratorFamily fam{label, 0, {}, false};
  auto parity = [&](int start, auto make) {
    for (int i = start; i <= n - 1; i += 2) fam.members.push_back(make(i));
  };
  auto needs_index = [&] {
    if (index < 1 || index > n)
      throw InvalidParameter(fam.name() + " needs 1 <= i <= n, got " + std::to_string(index));
    fam.index = index;
  };
  switch (label) {
    case FamilyLabel::SOdd: parity(1, [](int i) { return sigma(i); }); break;
    case FamilyLabel::SEven: parity(2, [](int i) { return sigma(i); }); break;
    case FamilyLabel::TOdd: parity(1, [](int i) { return tau(i); }); break;
    case FamilyLabel::TEven: parity(2, [](int i) { return tau(i); }); break;
    case FamilyLabel::TauSigmaOdd: parity(1, [](int i) { return tau(i) * sigma(i); }); break;
    case FamilyLabel::TauSigmaEven: parity(2, [](int i) { return tau(i) * sigma(i); }); break;
    case FamilyLabel::A:
      fam.index = index;
      needs_index();
      for (int j = 1; j <= n; ++j)
        if (j != index) fam.members.push_back(sigma_ij(index, j, n));
      break;
    case FamilyLabel::R:
      fam.index = index;
      needs_index();
      for (int j = index + 1; j <= n; ++j) fam.members.push_back(sigma_ij(index, j, n));
      break;
    case FamilyLabel::L:
      fam.index = index;
      needs_index();
      for (int j = 1; j < index; ++j) fam.members.push_back(sigma_ij(index, j, n));
      break;
    case FamilyLabel::RightDiagBottomRow:
      for (int i = 1; i < n; ++i) fam.members.push_back(sigma_ij(i, n, n).inverse());
      fam.conjugation_only = true;
      break;
    case FamilyLabel::LeftDiagTopRow:
      for (int i = 2; i <= n; ++i) fam.members.push_back(sigma_ij(i, 1, n).inverse());
      fam.conjugation_only = true;
      break;
  }
  if ((label == FamilyLabel::A || label == FamilyLabel::R || label == FamilyLabel::L) &&
      ambient == PresentationKind::Virtual)
    fam.conjugation_only = true;
  if (fam.members.empty())
    throw InvalidParameter("family " + fam.name() + " is empty for n = " + std::to_string(n));
  return fam;
}

GeneratorFamily family_by_name(const std::string& name, int n, PresentationKind ambient) {
  static const std::pair<const char*, FamilyLabel> fixed[] = {
      {"SOdd", FamilyLabel::SOdd},
      {"SEven", FamilyLabel::SEven},
      {"TOdd", FamilyLabel::TOdd},
      {"TEven", FamilyLabel::TEven},
      {"TauSigmaOdd", FamilyLabel::TauSigmaOdd},
      {"TauSigmaEven", FamilyLabel::TauSigmaEven},
      {"RightDiagBottomRow", FamilyLabel::RightDiagBottomRow},
      {"LeftDiagTopRow", FamilyLabel::LeftDiagTopRow},
  };
  for (const auto& [key, label] : fixed)
    if (name == key) return family(label, n, 0, ambient);
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'R' || name[0] == 'L')) {
    std::size_t pos = 0;
    int idx = 0;
    try {
      idx = std::stoi(name.substr(1), &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == name.size() - 1) {
      FamilyLabel label = name[0] == 'A' ? FamilyLabel::A : name[0] == 'R' ? FamilyLabel::R : FamilyLabel::L;
      return family(label, n, idx, ambient);
    }
  }
  throw InvalidParameter("unknown family '" + name + "'");
}

std::vector<GeneratorFamily> families_for(PresentationKind kind, int n) {
  std::vector<GeneratorFamily> out;
  auto try_add = [&](FamilyLabel label, int index = 0) {
    try {
      out.push_back(family(label, n, index, kind));
    } catch (const InvalidParameter&) {
    }
  };
  if (kind != PresentationKind::Symmetric) {
    try_add(FamilyLabel::SOdd);
    try_add(FamilyLabel::SEven);
  }
  if (kind != PresentationKind::Braid) {
    try_add(FamilyLabel::TOdd);
    try_add(FamilyLabel::TEven);
  }
  if (kind == PresentationKind::Virtual || kind == PresentationKind::Welded) {
    try_add(FamilyLabel::TauSigmaOdd);
    try_add(FamilyLabel::TauSigmaEven);
    for (int i = 1; i <= n; ++i) try_add(FamilyLabel::A, i);
    for (int i = 1; i < n; ++i) try_add(FamilyLabel::R, i);
    for (int i = 2; i <= n; ++i) try_add(FamilyLabel::L, i);
    try_add(FamilyLabel::RightDiagBottomRow);
    try_add(FamilyLabel::LeftDiagTopRow);
  }
  return out;
}

namespace {

// Half twist on strands i..i+3 of the given kind; conjugation swaps
// generators i and i+2 and commutes with generators at distance >= 2.
Word half_twist4(int i, GenKind k) {
  auto g = [k](int j) { return Word{Letter{{k, j}, 1}}; };
  return g(i) * g(i + 1) * g(i + 2) * g(i) * g(i + 1) * g(i);
}

}  // namespace

std::vector<Word> known_conjugators(const GeneratorFamily& fam, int n) {
  std::vector<Word> out;
  const auto k = fam.members.size();
  if (k < 2) return out;
  out.resize(k - 1);
  switch (fam.label) {
    case FamilyLabel::SOdd:
    case FamilyLabel::SEven: {
      const int start = fam.label == FamilyLabel::SOdd ? 1 : 2;
      for (std::size_t a = 0; a + 1 < k; ++a) out[a] = half_twist4(start + 2 * static_cast<int>(a), GenKind::Sigma);
      break;
    }
    case FamilyLabel::TOdd:
    case FamilyLabel::TEven:
    case FamilyLabel::TauSigmaOdd:
    case FamilyLabel::TauSigmaEven: {
      const bool odd = fam.label == FamilyLabel::TOdd || fam.label == FamilyLabel::TauSigmaOdd;
      for (std::size_t a = 0; a + 1 < k; ++a) {
        const int i = (odd ? 1 : 2) + 2 * static_cast<int>(a);
        out[a] = tau(i + 1) * tau(i + 2) * tau(i) * tau(i + 1);
      }
      break;
    }
    case FamilyLabel::A: {
      std::vector<int> js;
      for (int j = 1; j <= n; ++j)
        if (j != fam.index) js.push_back(j);
      for (std::size_t a = 0; a + 1 < k; ++a) {
        const int j = js[a], jn = js[a + 1];
        if (jn == j + 1)
          out[a] = tau(j);
        else  // the i-1 <-> i+1 swap
          out[a] = tau(fam.index - 1) * tau(fam.index) * tau(fam.index - 1);
      }
      break;
    }
    case FamilyLabel::R:
      for (std::size_t a = 0; a + 1 < k; ++a) out[a] = tau(fam.index + 1 + static_cast<int>(a));
      break;
    case FamilyLabel::L:
      for (std::size_t a = 0; a + 1 < k; ++a) out[a] = tau(1 + static_cast<int>(a));
      break;
    case FamilyLabel::RightDiagBottomRow:
      for (std::size_t a = 0; a + 1 < k; ++a) out[a] = tau(1 + static_cast<int>(a));
      break;
    case FamilyLabel::LeftDiagTopRow:
      for (std::size_t a = 0; a + 1 < k; ++a) out[a] = tau(2 + static_cast<int>(a));
      break;
  }
  return out;
}

}  // namespace braidq
