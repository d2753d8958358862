#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "braidq/errors.hpp"
#include "braidq/homsearch.hpp"
#include "support.hpp"

using namespace braidq;
using testsupport::cyc;

namespace {

std::vector<Homomorphism> sorted(std::vector<Homomorphism> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("B_3 into S_3") {
  const auto p = make_presentation(PresentationKind::Braid, 3);
  const auto s3 = PermGroup::symmetric(3);
  const auto res = enumerate_homs(p, s3);
  REQUIRE(res.homs.size() == 12);
  CHECK_FALSE(res.partial);
  CHECK(sorted(res.homs) == sorted(brute_force_homs(p, s3)));
  int equal = 0, noncyclic = 0;
  for (const auto& h : res.homs) {
    CHECK(verify_relations(h));
    if (h.images[0] == h.images[1]) ++equal;
    if (classify(h) != Classification::Cyclic) ++noncyclic;
  }
  CHECK(equal == 6);
  CHECK(noncyclic == 6);
}

TEST_CASE("B_2 is free of rank one") {
  for (const char* name : {"S3", "D5", "Z7", "A4"}) {
    const auto g = named_group(name);
    CHECK(enumerate_homs(make_presentation(PresentationKind::Braid, 2), g).homs.size() == g.order());
  }
}

TEST_CASE("B_4 into S_3 contains a non-cyclic map") {
  const auto homs = enumerate_homs(make_presentation(PresentationKind::Braid, 4), PermGroup::symmetric(3)).homs;
  const Homomorphism want{PresentationKind::Braid, 4, {cyc("(1 2)", 3), cyc("(2 3)", 3), cyc("(1 2)", 3)}};
  CHECK(std::find(homs.begin(), homs.end(), want) != homs.end());
  CHECK(classify(want) == Classification::Nonabelian);
}

TEST_CASE("search matches brute force on small welded and virtual cases") {
  for (auto kind : {PresentationKind::Virtual, PresentationKind::Welded, PresentationKind::Symmetric})
    for (const char* name : {"S3", "Z4"}) {
      const auto p = make_presentation(kind, 3);
      const auto g = named_group(name);
      CHECK(sorted(enumerate_homs(p, g).homs) == sorted(brute_force_homs(p, g)));
    }
}

TEST_CASE("assignment order puts taus first") {
  const auto order = assignment_order(make_presentation(PresentationKind::Welded, 3));
  REQUIRE(order.size() == 4);
  CHECK(order[0] == tau_gen(1));
  CHECK(order[2] == sigma_gen(1));
}

TEST_CASE("pinned and conjugacy modes account for every hom") {
  struct Case {
    PresentationKind kind;
    int n;
    const char* target;
  };
  for (const auto& c : {Case{PresentationKind::Braid, 4, "S4"}, Case{PresentationKind::Welded, 3, "S4"},
                        Case{PresentationKind::Virtual, 3, "D4"}, Case{PresentationKind::Braid, 5, "A5"}}) {
    const auto p = make_presentation(c.kind, c.n);
    const auto g = named_group(c.target);
    const auto full = enumerate_homs(p, g);
    SearchConfig pin;
    pin.pin_first = true;
    SearchConfig conj;
    conj.mode = SearchMode::Conj;
    const auto pinned = enumerate_homs(p, g, pin);
    const auto orbits = enumerate_homs(p, g, conj);
    CHECK(pinned.represented() == full.homs.size());
    CHECK(orbits.represented() == full.homs.size());
    CHECK(orbits.homs.size() <= pinned.homs.size());
    // Every orbit representative is a genuine hom; every full hom is conjugate to one.
    for (const auto& h : orbits.homs) REQUIRE(std::find(full.homs.begin(), full.homs.end(), h) != full.homs.end());
  }
}

TEST_CASE("serial and parallel enumeration agree for any worker count") {
  const auto p = make_presentation(PresentationKind::Braid, 5);
  const auto g = named_group("S5");
  const auto ref = enumerate_homs_serial(p, g);
  for (int workers : {1, 2, 3, 8}) {
    SearchConfig cfg;
    cfg.workers = workers;
    const auto par = enumerate_homs(p, g, cfg);
    CHECK(par.homs == ref.homs);
    CHECK(par.multiplicity == ref.multiplicity);
  }
  SearchConfig conj;
  conj.mode = SearchMode::Conj;
  CHECK(enumerate_homs(p, g, conj).homs == enumerate_homs_serial(p, g, conj).homs);
}

TEST_CASE("node budget marks the result partial") {
  SearchConfig cfg;
  cfg.max_nodes = 10;
  const auto res = enumerate_homs(make_presentation(PresentationKind::Braid, 4), named_group("S4"), cfg);
  CHECK(res.partial);
  CHECK(res.homs.size() < enumerate_homs(make_presentation(PresentationKind::Braid, 4), named_group("S4")).homs.size());
}

TEST_CASE("classification") {
  CHECK(classify_elements({cyc("(1 2 3 4 5)", 5)}, 5) == Classification::Cyclic);
  CHECK(classify_elements({cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)}, 4) == Classification::AbelianNoncyclic);
  CHECK(classify_elements({cyc("(1 2)", 3), cyc("(1 2 3)", 3)}, 3) == Classification::Nonabelian);
  CHECK(classify_elements({cyc("(1 2)", 5), cyc("(3 4 5)", 5)}, 5) == Classification::Cyclic);
  CHECK(classify(testsupport::standard_projection(PresentationKind::Braid, 6)) == Classification::Nonabelian);
  for (auto c : {Classification::Cyclic, Classification::AbelianNoncyclic, Classification::Nonabelian})
    CHECK(parse_classification(to_string(c)) == c);
}

TEST_CASE("image order agrees with closure") {
  const auto homs = enumerate_homs(make_presentation(PresentationKind::Welded, 3), named_group("S4")).homs;
  for (const auto& h : homs) REQUIRE(image_order(h) == closure_elements(h.degree(), h.images).size());
}

TEST_CASE("reports") {
  const auto r = report(testsupport::standard_projection(PresentationKind::Braid, 6));
  CHECK(r.classification == Classification::Nonabelian);
  CHECK(r.image_order == 720);
  CHECK(r.p == 2);
  CHECK(r.d == 2);
  for (const auto& h : enumerate_homs(make_presentation(PresentationKind::Braid, 4), named_group("S4")).homs) {
    const auto rep = report(h);
    REQUIRE(24 % rep.image_order == 0);
    if (rep.classification == Classification::Cyclic) REQUIRE(classify(h) != Classification::Nonabelian);
  }
}

TEST_CASE("cyclicity and split-both scans") {
  const auto b5s3 = enumerate_homs(make_presentation(PresentationKind::Braid, 5), named_group("S3")).homs;
  CHECK(commuting_adjacent_scan(b5s3).empty());
  const auto proj = testsupport::standard_projection(PresentationKind::Braid, 6);
  CHECK(split_both_scan({proj}).empty());
  CHECK(commuting_adjacent_scan({testsupport::constant_map(PresentationKind::Braid, 6, cyc("(1 2 3)", 3))}).empty());
  // A fabricated non-hom with commuting adjacent images and a non-cyclic image is caught.
  const Homomorphism fake{PresentationKind::Braid, 6,
                          {cyc("(1 2)", 4), cyc("(3 4)", 4), cyc("(1 2)", 4), cyc("(3 4)", 4), cyc("(1 2)", 4)}};
  CHECK_FALSE(commuting_adjacent_scan({fake}).empty());
  CHECK(split_both_scan({testsupport::constant_map(PresentationKind::Braid, 6, cyc("(1 2)", 2))}).empty());
}

TEST_CASE("element table") {
  const ElementTable t(named_group("S4"));
  CHECK(t.size() == 24);
  CHECK(t[t.identity()].is_identity());
  std::size_t total = 0;
  for (const auto& cls : t.classes()) total += cls.size();
  CHECK(total == 24);
  CHECK(t.classes().size() == 5);
  for (std::size_t a = 0; a < t.size(); ++a) {
    CHECK(t.mul(a, t.inverse(a)) == t.identity());
    for (std::size_t b = 0; b < t.size(); ++b) REQUIRE(t[t.mul(a, b)] == t[a] * t[b]);
  }
  CHECK_THROWS_AS(t.index_of(Permutation(5)), MembershipError);
}
