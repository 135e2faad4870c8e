#include "doctest.h"

#include "xsg/dagger_category.hpp"
#include "xsg/fin_group.hpp"

using namespace xsg;

namespace {

// One-object category of a commutative (or not) monoid with the identity
// map as dagger.
DaggerCategory monoid_category(const std::string& name,
                               const std::vector<std::string>& elems,
                               const std::vector<std::vector<int>>& table,
                               int unit) {
  DaggerCategory C;
  C.name = name;
  C.objects = {"x"};
  for (const auto& e : elems) C.morphisms.push_back({e, 0, 0});
  C.identity = {unit};
  C.comp = table;
  for (std::size_t f = 0; f < elems.size(); ++f)
    C.dagger.push_back(static_cast<int>(f));
  return C;
}

} // namespace

TEST_CASE("groupoids carry the inverse dagger") {
  for (const FinGroup& G :
       {cyclic_group(2), symmetric_group_3(), quaternion_group()}) {
    const auto C = groupoid_from_group(G);
    CHECK(validate_dagger(C).ok());
    CHECK(check_unitarity(C).holds);
  }
  const auto C2 = groupoid_from_group(cyclic_group(2));
  // composing the non-identity arrow with itself gives the identity
  CHECK(C2.then(1, 1) == C2.identity[0]);
}

TEST_CASE("identity dagger needs commutativity") {
  // commutative: max(a, b) monoid on {0, 1}
  const auto lattice = monoid_category("join", {"0", "1"},
                                       {{0, 1}, {1, 1}}, 0);
  CHECK(validate_dagger(lattice).ok());

  // non-commutative: left-projection monoid {e, a, b} with xy = x for
  // x, y != e
  const auto proj = monoid_category(
      "lproj", {"e", "a", "b"}, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0);
  CHECK(validate_category(proj).ok());
  const Report r = validate_dagger(proj);
  CHECK_FALSE(r.ok());
  CHECK(r.issues[0].find("contravariance") != std::string::npos);
}

TEST_CASE("unitarity flags non-invertible morphisms") {
  const auto C = groupoid_from_group(symmetric_group_3());
  CHECK(check_unitarity(C).holds);

  const auto lattice = monoid_category("join", {"0", "1"},
                                       {{0, 1}, {1, 1}}, 0);
  const auto flag = check_unitarity(lattice);
  CHECK_FALSE(flag.holds);
  REQUIRE(flag.witnesses.size() == 1);
  CHECK(lattice.morphisms[static_cast<std::size_t>(flag.witnesses[0])].name ==
        "1");
}

TEST_CASE("indiscrete groupoids validate") {
  const auto C = indiscrete_groupoid(cyclic_group(2), 2);
  CHECK(C.object_count() == 2);
  CHECK(C.mor_count() == 8);
  CHECK(validate_dagger(C).ok());
  CHECK(check_unitarity(C).holds);

  const auto pair3 = indiscrete_groupoid(cyclic_group(1), 3);
  CHECK(pair3.mor_count() == 9);
  CHECK(validate_dagger(pair3).ok());
  CHECK(check_unitarity(pair3).holds);
}

TEST_CASE("dagger is an involution everywhere") {
  for (const auto& C :
       {groupoid_from_group(quaternion_group()),
        indiscrete_groupoid(cyclic_group(2), 2)}) {
    for (int f = 0; f < C.mor_count(); ++f) CHECK(C.dag(C.dag(f)) == f);
  }
}
