#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidq/bigint.hpp"
#include "braidq/hom.hpp"
#include "braidq/tss.hpp"

namespace braidq {

/// Re-run of the Theorem A counting argument on one non-cyclic braid
/// homomorphism. O = phi(SOdd), E = phi(SEven), Gamma = conjugation
/// stabiliser of O in the image B. Every observation is a theorem, so a
/// failure throws AuditFailure instead of being reported.
struct TheoremAAudit {
  int n = 0;
  long long p = 1;
  long long d = 1;
  long long lpf_p = 1;
  std::vector<Permutation> odd;   // O
  std::vector<Permutation> even;  // E
  std::uint64_t image_order = 0;
  std::uint64_t gamma_order = 0;
  std::uint64_t odd_generated_order = 0;  // |<O>|
  bool psi_surjective = false;            // Gamma -> Sym(O) onto

  bool obs1 = false;  // s_i^m in Gamma (m < p) fixes O pointwise
  bool obs2 = false;  // s_i not in Gamma, i even
  bool obs3 = false;  // s_i^m not in Gamma, i even, m coprime to p and d
  bool obs4 = false;  // s_i^-m1 s_j^m2 not in Gamma for admissible pairs
  std::vector<long long> witnesses;  // exponents used for the coset count
  std::size_t coset_count = 0;       // distinct cosets s_i^m Gamma, i even, m in witnesses
  std::size_t coset_required = 0;    // (lpf(p)-1)|E|
  bool obs5 = false;

  bool eq3 = false;          // |B - Gamma| >= (lpf(p)-1)|E||Gamma|
  bool gamma_bound = false;  // |Gamma| >= |<O>| k!
  bool eq4 = false;          // |B| >= ((lpf(p)-1)|E|+1)|<O>| k!
  BigInt bound_a;            // theorem_a_bound(n)
  BigInt bound_ap;           // theorem_a_bound_p(n, p)
  bool final_bound = false;  // |B| >= both
};

// Braid hom, n >= 6, non-cyclic; InvalidParameter otherwise.
TheoremAAudit theorem_a_audit(const Homomorphism& phi);

/// Case assignment for Theorem B (welded) or C (virtual), dispatched in the
/// order of the theorem statement. `flags` lists bound comparisons that fail;
/// they are evidence, not aborts.
struct CaseReport {
  std::string theorem;  // "B" or "C"
  std::string case_label;
  std::uint64_t image_order = 0;
  std::vector<std::string> evidence;
  std::vector<std::string> flags;
  std::vector<SplitReport> splits;
  std::optional<bool> factors_through_welded;  // C: OC relator images agree
  std::optional<bool> welded_relators_hold;    // C: every welded relator holds
  std::optional<TheoremAAudit> restriction_audit;
  std::optional<BalloonResult> balloon;
};

CaseReport theorem_b_case(const Homomorphism& phi);
CaseReport theorem_c_case(const Homomorphism& phi);

// Images of the OC relators agree: t_i s_i+1 s_i = s_i+1 s_i t_i+1 for all i.
bool oc_images_agree(const Homomorphism& phi);

// Sigma-only restriction as a braid homomorphism.
Homomorphism braid_restriction(const Homomorphism& phi);

}  // namespace braidq
