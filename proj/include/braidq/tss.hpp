#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidq/bigint.hpp"
#include "braidq/hom.hpp"
#include "braidq/permgroup.hpp"
#include "braidq/presentations.hpp"
#include "braidq/welded.hpp"

namespace braidq {

enum class Truth { False, True, Unknown };

enum class WordAmbientKind { BraidExact, WeldedExact, VirtualSemi };
std::string to_string(WordAmbientKind k);

/// Equality service over one of the three word-problem engines.
struct WordAmbient {
  WordAmbientKind kind = WordAmbientKind::WeldedExact;
  int n = 2;
  VirtualSearchConfig budget{};  // VirtualSemi only

  Truth equal(const Word& a, const Word& b) const;
  // h a h^-1 == b
  Truth conjugates(const Word& h, const Word& a, const Word& b) const;
};

/// Evidence for Def.-style total symmetry: all pairs commute, and for every
/// adjacent transposition (a a+1) of the member list some conjugator swaps
/// members a, a+1 and fixes the rest. Adjacent transpositions generate the
/// full symmetric group on the members.
struct TSSCertificate {
  std::vector<std::string> members;
  std::vector<std::string> conjugators;  // entry a realises (a+1 a+2), 1-based
  std::vector<bool> from_candidates;     // true when a supplied candidate worked
  std::size_t commuting_pairs = 0;
  bool conditional = false;              // some check came back Unknown
};

enum class TSSFailure { None, Commutation, Conjugation, Unknown };
std::string to_string(TSSFailure f);

struct TSSResult {
  TSSFailure failure = TSSFailure::None;
  std::string detail;
  TSSCertificate certificate;

  bool ok() const { return failure == TSSFailure::None; }
};

struct ConjugatorSearchConfig {
  int max_length = 8;
  std::size_t max_nodes = 200'000;
};

/// Word ambient. `candidates[a]` (if present and nonempty) is tried first for
/// transposition a; otherwise a breadth-first search over words of length <=
/// max_length runs (BraidExact / WeldedExact only).
TSSResult verify_totally_symmetric(const std::vector<Word>& members, const WordAmbient& ambient,
                                   const std::vector<Word>& candidates = {},
                                   const ConjugatorSearchConfig& search = {});

// Uses known_conjugators(fam) as candidates.
TSSResult verify_family(const GeneratorFamily& fam, const WordAmbient& ambient,
                        const ConjugatorSearchConfig& search = {});

/// Finite ambient: conjugators come from `candidates` first, else find_conjugator in G.
TSSResult verify_totally_symmetric(const std::vector<Permutation>& members, const PermGroup& g,
                                   const std::vector<Permutation>& candidates = {});

// Re-checks every stored conjugator against the ambient.
bool replay_certificate(const TSSCertificate& cert, const std::vector<Word>& members, const WordAmbient& ambient);
bool replay_certificate(const TSSCertificate& cert, const std::vector<Permutation>& members);

// Shortest word h (BFS, dedup by ambient element) with h a h^-1 = b for every pair.
std::optional<Word> search_word_conjugator(const std::vector<std::pair<Word, Word>>& pairs,
                                           const WordAmbient& ambient, const ConjugatorSearchConfig& cfg = {});

struct PowerReport {
  long long p = 1;
  bool propagation_ok = true;  // no power where some but not all pairs agree
};

// Smallest p >= 1 with g^p equal for all members; scans 1..lcm(orders).
PowerReport minimal_common_power(const std::vector<Permutation>& images);

struct SplitReport {
  std::string family;
  std::size_t family_size = 0;
  std::size_t image_size = 0;
  bool splits = false;
  bool conjugation_only = false;
  long long p = 1;
  bool dichotomy_ok = true;  // image_size in {1, family_size}
  bool propagation_ok = true;
};

SplitReport split_report(const Homomorphism& phi, const GeneratorFamily& fam);

struct BoundCheck {
  BigInt measured;
  BigInt bound;
  bool pass = false;
};

// |<S>| >= p^(k-1)
BoundCheck generated_order_bound_check(const std::vector<Permutation>& images, long long p, const PermGroup& g);
// |G| >= p^(k-1) k!
BoundCheck ambient_size_bound_check(const std::vector<Permutation>& images, long long p, const PermGroup& g);

// ---- welded images ------------------------------------------------------

// phi(A_i) when the family does not split, else nullopt.
std::optional<Permutation> family_image(const Homomorphism& phi, int i);

// phi(s_ij s_ik s_jk) == phi(s_jk s_ik s_ij) for all distinct i, j, k.
bool pwb_braid_relators_hold(const Homomorphism& phi);

// g_i^2 g_j == g_j g_i^2 for all i != j, where g_i = phi(A_i); nullopt if some A_i splits.
std::optional<bool> square_identity_holds(const Homomorphism& phi);

enum class BalloonFailure { None, Abelian, SplitDetected, SquaresCollide };
std::string to_string(BalloonFailure f);

struct BalloonResult {
  BalloonFailure failure = BalloonFailure::None;
  std::string detail;
  std::vector<Permutation> squares;  // g_{i_j}^2
  TSSResult tss;
  bool square_commutation_ok = false;  // g_i^2 g_j = g_j g_i^2
  bool tau_action_ok = false;          // phi(t_i) swaps g_i, g_i+1, fixes the rest
  bool pwb_relators_ok = false;
  long long p = 1;
  BoundCheck size_bound;  // |phi(wB_n)| >= p^(m-1) m!

  bool ok() const { return failure == BalloonFailure::None && tss.ok(); }
};

/// The squares of the images of the A_i, for the listed 1-based indices.
/// Requires a Welded homomorphism (WrongGroup otherwise).
BalloonResult hot_air_balloon(const Homomorphism& phi, const std::vector<int>& indices);

}  // namespace braidq
