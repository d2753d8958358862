#include <doctest.h>

#include <algorithm>
#include <map>

#include "braidq/errors.hpp"
#include "braidq/presentations.hpp"
#include "braidq/welded.hpp"

using namespace braidq;

namespace {

std::map<RelationType, int> count_types(const GroupPresentation& p) {
  std::map<RelationType, int> c;
  for (const auto& r : p.relators) ++c[r.type];
  return c;
}

int choose2(int m) { return m < 2 ? 0 : m * (m - 1) / 2; }

}  // namespace

TEST_CASE("braid presentation at n = 3 has only the braid relator") {
  const auto p = make_presentation(PresentationKind::Braid, 3);
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0].lhs == Word::parse("s1 s2 s1"));
  CHECK(p.relators[0].rhs == Word::parse("s2 s1 s2"));
}

TEST_CASE("virtual presentation at n = 3") {
  auto c = count_types(make_presentation(PresentationKind::Virtual, 3));
  CHECK(c[RelationType::Braid] == 1);
  CHECK(c[RelationType::TauBraid] == 1);
  CHECK(c[RelationType::TauSquare] == 2);
  CHECK(c[RelationType::MixedBraid] == 1);
  CHECK(c[RelationType::FarCommutativity] == 0);
  CHECK(c[RelationType::MixedFarCommutativity] == 0);
  CHECK(c[RelationType::OverCrossingsCommute] == 0);
}

TEST_CASE("welded adds one OC relator per i <= n-2") {
  const auto v = make_presentation(PresentationKind::Virtual, 4);
  const auto w = make_presentation(PresentationKind::Welded, 4);
  CHECK(w.relators.size() == v.relators.size() + 2);
  CHECK(count_types(w)[RelationType::OverCrossingsCommute] == 2);
  const auto& oc = w.relators.back();
  CHECK(oc.lhs == Word::parse("t2 s3 s2"));
  CHECK(oc.rhs == Word::parse("s3 s2 t3"));
}

TEST_CASE("relator counts follow the closed forms") {
  for (int n = 2; n <= 9; ++n) {
    auto b = count_types(make_presentation(PresentationKind::Braid, n));
    CHECK(b[RelationType::Braid] == n - 2);
    CHECK(b[RelationType::FarCommutativity] == choose2(n - 2));
    auto s = count_types(make_presentation(PresentationKind::Symmetric, n));
    CHECK(s[RelationType::TauSquare] == n - 1);
    CHECK(s[RelationType::TauBraid] == n - 2);
    CHECK(s[RelationType::TauFarCommutativity] == choose2(n - 2));
    auto v = count_types(make_presentation(PresentationKind::Virtual, n));
    CHECK(v[RelationType::MixedBraid] == n - 2);
    CHECK(v[RelationType::MixedFarCommutativity] == (n - 1) * (n - 1) - (n - 1) - 2 * (n - 2));
  }
}

TEST_CASE("relators mention only declared generators; braid sides have three sigmas") {
  for (auto kind : {PresentationKind::Braid, PresentationKind::Symmetric, PresentationKind::Virtual,
                    PresentationKind::Welded})
    for (int n = 2; n <= 8; ++n) {
      const auto p = make_presentation(kind, n);
      for (const auto& r : p.relators) {
        for (const auto& l : r.lhs) REQUIRE(p.declares(l.gen));
        for (const auto& l : r.rhs) REQUIRE(p.declares(l.gen));
        if (r.type == RelationType::Braid) {
          CHECK(r.lhs.size() == 3);
          CHECK(r.rhs.size() == 3);
        }
      }
    }
}

TEST_CASE("make_presentation rejects n < 2") {
  CHECK_THROWS_AS(make_presentation(PresentationKind::Braid, 1), InvalidParameter);
}

TEST_CASE("sigma_ij words") {
  CHECK(sigma_ij(1, 2, 2) == Word::parse("t1 s1"));
  CHECK(sigma_ij(2, 1, 2) == Word::parse("s1 t1"));
  CHECK(sigma_ij(1, 3, 3) == Word::parse("t1 t2 s2 t1"));
  CHECK_THROWS_AS(sigma_ij(2, 2, 3), InvalidParameter);
  CHECK_THROWS_AS(sigma_ij(1, 4, 3), InvalidParameter);
  for (int n = 2; n <= 7; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j) CHECK(sigma_ij(i, j, n).size() == static_cast<std::size_t>(2 * std::abs(j - i)));
}

TEST_CASE("family members and sizes") {
  const auto odd = family(FamilyLabel::SOdd, 6);
  REQUIRE(odd.size() == 3);
  CHECK(odd.members[0] == sigma(1));
  CHECK(odd.members[1] == sigma(3));
  CHECK(odd.members[2] == sigma(5));

  const auto a2 = family(FamilyLabel::A, 4, 2);
  REQUIRE(a2.size() == 3);
  CHECK(a2.members[0] == sigma_ij(2, 1, 4));
  CHECK(a2.members[1] == sigma_ij(2, 3, 4));
  CHECK(a2.members[2] == sigma_ij(2, 4, 4));

  const auto row = family(FamilyLabel::RightDiagBottomRow, 5);
  REQUIRE(row.size() == 4);
  for (int i = 1; i <= 4; ++i) CHECK(row.members[static_cast<std::size_t>(i - 1)] == sigma_ij(i, 5, 5).inverse());
  CHECK(row.conjugation_only);

  for (int n = 2; n <= 10; ++n) {
    for (int i = 1; i <= n; ++i) CHECK(family(FamilyLabel::A, n, i).size() == static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) CHECK(family(FamilyLabel::R, n, i).size() == static_cast<std::size_t>(n - i));
    for (int i = 2; i <= n; ++i) CHECK(family(FamilyLabel::L, n, i).size() == static_cast<std::size_t>(i - 1));
  }
  for (int n = 3; n <= 10; ++n)
    CHECK(family(FamilyLabel::SOdd, n).size() + family(FamilyLabel::SEven, n).size() + 1 ==
          static_cast<std::size_t>(n));
}

TEST_CASE("conjugation_only flags depend on the ambient") {
  CHECK_FALSE(family(FamilyLabel::A, 5, 2, PresentationKind::Welded).conjugation_only);
  CHECK(family(FamilyLabel::A, 5, 2, PresentationKind::Virtual).conjugation_only);
  CHECK(family(FamilyLabel::LeftDiagTopRow, 5).conjugation_only);
  CHECK_FALSE(family(FamilyLabel::SOdd, 5).conjugation_only);
}

TEST_CASE("empty families are rejected") {
  CHECK_THROWS_AS(family(FamilyLabel::SEven, 2), InvalidParameter);
  CHECK_THROWS_AS(family(FamilyLabel::A, 4, 5), InvalidParameter);
  CHECK_THROWS_AS(family(FamilyLabel::L, 4, 1), InvalidParameter);
}

TEST_CASE("family_by_name") {
  CHECK(family_by_name("A3", 5).members == family(FamilyLabel::A, 5, 3).members);
  CHECK(family_by_name("SOdd", 5).name() == "SOdd");
  CHECK_THROWS_AS(family_by_name("Q2", 5), InvalidParameter);
}

TEST_CASE("left and right families partition A_i") {
  for (int n = 3; n <= 7; ++n)
    for (int i = 1; i <= n; ++i) {
      std::vector<Word> lr;
      if (i > 1) {
        const auto l = family(FamilyLabel::L, n, i).members;
        lr.insert(lr.end(), l.begin(), l.end());
      }
      if (i < n) {
        const auto r = family(FamilyLabel::R, n, i).members;
        lr.insert(lr.end(), r.begin(), r.end());
      }
      CHECK(lr == family(FamilyLabel::A, n, i).members);
    }
}

TEST_CASE("transposition words project to transpositions") {
  for (int n = 2; n <= 7; ++n)
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        CHECK(project_to_symmetric(transposition_word(a, b), n) == Permutation::transposition(a, b, n));
}
