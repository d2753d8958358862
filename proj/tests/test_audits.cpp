#include <doctest.h>

#include "braidq/audits.hpp"
#include "braidq/errors.hpp"
#include "braidq/homsearch.hpp"
#include "support.hpp"

using namespace braidq;
using testsupport::cyc;

TEST_CASE("Theorem A audit on the standard projection to S_6") {
  const auto proj = testsupport::standard_projection(PresentationKind::Braid, 6);
  const auto a = theorem_a_audit(proj);
  CHECK(a.p == 2);
  CHECK(a.d == 2);
  CHECK(a.gamma_order == 48);
  CHECK(a.gamma_order == conj_setwise_stabilizer_elements(PermGroup::symmetric(6), a.odd).size());
  CHECK(a.image_order == 720);
  CHECK(a.odd_generated_order == 8);
  CHECK(a.psi_surjective);
  CHECK(a.obs1);
  CHECK(a.obs2);
  CHECK(a.obs3);
  CHECK(a.obs4);
  CHECK(a.obs5);
  CHECK(a.coset_count >= a.coset_required);
  CHECK(a.eq3);
  CHECK(a.eq4);
  CHECK(a.bound_a == 216);
  CHECK(a.final_bound);
}

TEST_CASE("Theorem A audit is invariant under inner automorphisms") {
  const auto proj = testsupport::standard_projection(PresentationKind::Braid, 6);
  const auto base = theorem_a_audit(proj);
  for (const char* c : {"(1 2 3 4 5 6)", "(1 4)(2 5)", "(2 6 3)"}) {
    const auto a = theorem_a_audit(conjugate(cyc(c, 6), proj));
    CHECK(a.p == base.p);
    CHECK(a.gamma_order == base.gamma_order);
    CHECK(a.coset_count == base.coset_count);
    CHECK(a.obs5 == base.obs5);
    CHECK(a.final_bound == base.final_bound);
  }
}

TEST_CASE("Theorem A audit preconditions") {
  CHECK_THROWS_AS(theorem_a_audit(testsupport::constant_map(PresentationKind::Braid, 6, cyc("(1 2)", 2))),
                  InvalidParameter);
  CHECK_THROWS_AS(theorem_a_audit(testsupport::standard_projection(PresentationKind::Braid, 5)), InvalidParameter);
  CHECK_THROWS_AS(theorem_a_audit(testsupport::standard_projection(PresentationKind::Welded, 6)), WrongGroup);
}

TEST_CASE("Theorem A audit on every non-cyclic B_6 -> S_6 class representative") {
  SearchConfig cfg;
  cfg.mode = SearchMode::Conj;
  const auto homs = enumerate_homs(make_presentation(PresentationKind::Braid, 6), PermGroup::symmetric(6), cfg).homs;
  int audited = 0;
  for (const auto& h : homs) {
    if (classify(h) == Classification::Cyclic) continue;
    const auto a = theorem_a_audit(h);
    CHECK(a.final_bound);
    ++audited;
  }
  CHECK(audited > 0);
}

TEST_CASE("Theorem B dispatch examples") {
  const auto ab = testsupport::constant_map(PresentationKind::Welded, 6, cyc("(1 2 3)", 3));
  // tau must be an involution; send it to the identity.
  auto welded_ab = ab;
  for (int i = 5; i < 10; ++i) welded_ab.images[static_cast<std::size_t>(i)] = Permutation(3);
  REQUIRE(verify_relations(welded_ab));
  CHECK(theorem_b_case(welded_ab).case_label == "1");

  const auto triv = testsupport::constant_map(PresentationKind::Welded, 6, Permutation(2));
  CHECK(theorem_b_case(triv).case_label == "1");

  const auto proj = testsupport::standard_projection(PresentationKind::Welded, 6);
  REQUIRE(verify_relations(proj));
  const auto r = theorem_b_case(proj);
  CHECK(r.case_label == "2");
  CHECK(r.image_order == 720);
}

TEST_CASE("Theorem C dispatch examples") {
  const auto proj = testsupport::standard_projection(PresentationKind::Virtual, 4);
  REQUIRE(verify_relations(proj));
  CHECK(oc_images_agree(proj));
  const auto r = theorem_c_case(proj);
  CHECK(r.case_label == "2a");
  CHECK(r.factors_through_welded == true);
  CHECK(r.welded_relators_hold == true);

  const auto triv = testsupport::constant_map(PresentationKind::Virtual, 4, Permutation(3));
  CHECK(theorem_c_case(triv).case_label == "1");

  // Abelian on each of B_3 and Sigma_3 separately, non-abelian overall, and
  // breaks over-crossings-commute.
  const Homomorphism odd{PresentationKind::Virtual, 3,
                         {cyc("(1 2 3)", 3), cyc("(1 2 3)", 3), cyc("(1 2)", 3), cyc("(1 2)", 3)}};
  REQUIRE(verify_relations(odd));
  CHECK_FALSE(oc_images_agree(odd));
  const auto c = theorem_c_case(odd);
  CHECK(c.case_label == "3");
  CHECK(c.factors_through_welded == false);
  CHECK(c.welded_relators_hold == false);
  CHECK_THROWS_AS(theorem_c_case(testsupport::standard_projection(PresentationKind::Welded, 4)), WrongGroup);
}

TEST_CASE("every small welded and virtual hom lands in exactly one case") {
  for (const char* name : {"S3", "S4", "D4", "Z4"}) {
    const auto g = named_group(name);
    for (const auto& h : enumerate_homs(make_presentation(PresentationKind::Welded, 4), g).homs) {
      const auto r = theorem_b_case(h);
      REQUIRE((r.case_label == "1" || r.case_label == "2" || r.case_label == "3" || r.case_label == "4"));
    }
    for (const auto& h : enumerate_homs(make_presentation(PresentationKind::Virtual, 3), g).homs) {
      const auto r = theorem_c_case(h);
      REQUIRE(r.factors_through_welded.has_value());
      REQUIRE(*r.factors_through_welded == *r.welded_relators_hold);
    }
  }
}
