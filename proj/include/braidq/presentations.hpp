#pragma once

#include <string>
#include <vector>

#include "braidq/word.hpp"

namespace braidq {

enum class PresentationKind { Braid, Symmetric, Virtual, Welded };

std::string to_string(PresentationKind k);
PresentationKind parse_presentation_kind(const std::string& name);

// Relation families, in the order make_presentation emits them.
enum class RelationType {
  FarCommutativity,       // s_i s_j = s_j s_i, |i-j| >= 2
  Braid,                  // s_i s_i+1 s_i = s_i+1 s_i s_i+1
  TauSquare,              // t_i t_i = 1
  TauFarCommutativity,
  TauBraid,
  MixedFarCommutativity,  // s_i t_j = t_j s_i, |i-j| >= 2
  MixedBraid,             // t_i+1 s_i t_i+1 = t_i s_i+1 t_i
  OverCrossingsCommute,   // t_i s_i+1 s_i = s_i+1 s_i t_i+1
};

std::string to_string(RelationType t);

// lhs = rhs
struct Relator {
  Word lhs;
  Word rhs;
  RelationType type;
};

struct GroupPresentation {
  PresentationKind kind;
  int n;  // strands
  std::vector<Generator> generators;
  std::vector<Relator> relators;

  bool declares(Generator g) const;
  // Position of g in `generators`, or -1.
  int generator_position(Generator g) const;
};

// n >= 2. Welded = Virtual plus the n-2 over-crossings-commute relators.
GroupPresentation make_presentation(PresentationKind kind, int n);

/// Pure braid generator sigma_{i,j}, 1 <= i, j <= n, i != j.
///
/// For i < j this is t_i ... t_{j-1} s_{j-1} t_{j-2} ... t_i. For j < i it is
/// t_{i-1} ... t_{j+1} s_j t_j t_{j+1} ... t_{i-1}. In both cases the welded
/// action fixes every basis letter except x_j, which goes to x_i^-1 x_j x_i,
/// and sigma_{i,i+1} = t_i s_i, sigma_{i,i-1} = s_{i-1} t_{i-1}.
Word sigma_ij(int i, int j, int n);

// Product of taus realising the transposition (a b) in Sigma_n, a != b.
Word transposition_word(int a, int b);

enum class FamilyLabel {
  SOdd,
  SEven,
  TOdd,
  TEven,
  TauSigmaOdd,
  TauSigmaEven,
  A,
  R,
  L,
  RightDiagBottomRow,
  LeftDiagTopRow,
};

struct GeneratorFamily {
  FamilyLabel label;
  int index = 0;  // i for A(i), R(i), L(i); 0 otherwise
  std::vector<Word> members;
  // True when the set is only known to satisfy the conjugation condition.
  bool conjugation_only = false;

  std::string name() const;
  std::size_t size() const { return members.size(); }
};

/// Named generator family on n strands.
///
/// `ambient` only affects the conjugation_only flag: A/R/L commute in wB_n
/// but not in vB_n. Throws InvalidParameter when the family would be empty.
GeneratorFamily family(FamilyLabel label, int n, int index = 0,
                       PresentationKind ambient = PresentationKind::Welded);

// Parses "SOdd", "A2", "R3", "RightDiagBottomRow", ...
GeneratorFamily family_by_name(const std::string& name, int n,
                               PresentationKind ambient = PresentationKind::Welded);

// Every nonempty family meaningful for the presentation kind, in a fixed order.
std::vector<GeneratorFamily> families_for(PresentationKind kind, int n);

/// Candidate conjugators for the adjacent transpositions of a family, tried
/// before any search. Entry a realises the swap of members a and a+1; an
/// empty word means "no known candidate".
std::vector<Word> known_conjugators(const GeneratorFamily& fam, int n);

}  // namespace braidq
