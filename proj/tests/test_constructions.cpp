#include "doctest.h"

#include <cmath>
#include <numeric>

#include "xsg/constructions.hpp"
#include "xsg/errors.hpp"
#include "xsg/weyl.hpp"

using namespace xsg;

namespace {

std::uint32_t index_of_label(const CrossedSet& X, int n, const std::string& lab) {
  const auto& labels = X.labels[static_cast<std::size_t>(n)];
  for (std::uint32_t i = 0; i < labels.size(); ++i)
    if (labels[i] == lab) return i;
  FAIL("label not found: ", lab);
  return 0;
}

// act of a single generator, looked up by label
std::string act(const CrossedSet& X, int n, const GenName& g,
                const std::string& lab) {
  const auto* t = X.action_table(n, g);
  REQUIRE(t != nullptr);
  return X.labels[static_cast<std::size_t>(n)]
                 [(*t)[index_of_label(X, n, lab)]];
}

const GenName kTau{GenName::Kind::Tau, 0};
const GenName kOmega{GenName::Kind::Omega, 0};
const GenName kKappa{GenName::Kind::Kappa, 0};

} // namespace

TEST_CASE("bar actions follow the family formulas") {
  const auto s3 = symmetric_group_3();

  const auto cyc = bar_construction(s3, Family::Cyclic, 2);
  CHECK(act(cyc, 2, kTau, "((12),(13),(23))") == "((23),(12),(13))");

  const auto weyl = bar_construction(s3, Family::Weyl, 1);
  CHECK(act(weyl, 1, kKappa, "((123),(12))") == "((132),(12))");
  CHECK(act(weyl, 1, {GenName::Kind::Sigma, 1}, "((123),(12))") ==
        "((12),(123))");

  // reflexosymmetric omega reverses and inverts the whole tuple
  const auto rsym = bar_construction(s3, Family::Reflexosymmetric, 1);
  CHECK(act(rsym, 1, kOmega, "((123),(12))") == "((12),(132))");

  // reflexive/dihedral omega fixes the basepoint coordinate
  const auto dih = bar_construction(s3, Family::Dihedral, 2);
  CHECK(act(dih, 2, kOmega, "((123),(12),(13))") == "((132),(13),(12))");

  // level cardinalities |G|^(n+1)
  for (int n = 0; n <= 2; ++n)
    CHECK(cyc.level_size(n) ==
          static_cast<std::size_t>(std::pow(6.0, n + 1) + 0.5));
}

TEST_CASE("bar of the one-object groupoid equals the cyclic nerve") {
  const auto c2 = cyclic_group(2);
  const auto bar = bar_construction(c2, Family::Cyclic, 3);
  const auto nerve = cyclic_nerve(groupoid_from_group(c2), 3);
  CHECK(same_tables(bar, nerve));
  CHECK(bar.labels == nerve.labels);

  const auto dbar = bar_construction(c2, Family::Dihedral, 3);
  const auto dnerve = dihedral_nerve(groupoid_from_group(c2), 3);
  CHECK(same_tables(dbar, dnerve));
}

TEST_CASE("one-object nerves coincide with the bar constructions") {
  // daggers are inverses on a groupoid, so tuples of morphisms transform
  // exactly like tuples of group elements
  const auto s3 = symmetric_group_3();
  const auto C = groupoid_from_group(s3);
  for (Family f :
       {Family::Symmetric, Family::Reflexosymmetric, Family::Weyl}) {
    const auto nerve = one_object_nerve(C, f, 2);
    const auto bar = bar_construction(s3, f, 2);
    CAPTURE(family_name(f));
    CHECK(same_tables(bar, nerve));
  }
}

TEST_CASE("cyclic nerve satisfies the quoted operator identities") {
  const auto C = indiscrete_groupoid(cyclic_group(2), 2);
  const auto X = cyclic_nerve(C, 3);
  for (int n = 1; n <= 3; ++n) {
    const auto* tau = X.action_table(n, kTau);
    // d_0 . tau = d_n pointwise
    const auto& d0 = X.face[static_cast<std::size_t>(n)][0];
    const auto& dn = X.face[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)];
    for (std::uint32_t x = 0; x < X.level_size(n); ++x)
      CHECK(d0[(*tau)[x]] == dn[x]);
    // tau^{n+1} = id
    std::vector<std::uint32_t> acc(X.level_size(n));
    std::iota(acc.begin(), acc.end(), 0);
    for (int k = 0; k <= n; ++k)
      for (auto& v : acc) v = (*tau)[v];
    for (std::uint32_t x = 0; x < X.level_size(n); ++x) CHECK(acc[x] == x);
  }
}

TEST_CASE("dihedral nerve involution laws") {
  const auto C = indiscrete_groupoid(cyclic_group(2), 2);
  const auto X = dihedral_nerve(C, 3);
  for (int n = 0; n <= 3; ++n) {
    const auto* omega = X.action_table(n, kOmega);
    const auto* tau = X.action_table(n, kTau);
    for (std::uint32_t x = 0; x < X.level_size(n); ++x) {
      CHECK((*omega)[(*omega)[x]] == x);
      // (tau omega)^2 = id, applied as actions
      const std::uint32_t y = (*omega)[(*tau)[(*omega)[(*tau)[x]]]];
      CHECK(y == x);
    }
  }
  // on a groupoid, omega at level 1 matches the dihedral bar action
  const auto g = groupoid_from_group(cyclic_group(2));
  const auto Xg = dihedral_nerve(g, 1);
  const auto bar = bar_construction(cyclic_group(2), Family::Dihedral, 1);
  CHECK(*Xg.action_table(1, kOmega) == *bar.action_table(1, kOmega));
}

TEST_CASE("the paper's dagger-swap is the derived signed transposition") {
  // sigma_1 with both signs flipped: kappa sigma_1 kappa as a word
  const auto C = groupoid_from_group(symmetric_group_3());
  const auto X = one_object_nerve(C, Family::Weyl, 2);
  SignedPerm swapdag({1, 0, 2}, {-1, -1, 1});
  const Word w = generator_word(Family::Weyl, swapdag);
  auto apply_word = [&](std::string lab) {
    for (const auto& g : w) lab = act(X, 2, g, lab);
    return lab;
  };
  // (a, b, c) -> (b+, a+, c) with + the group inverse
  CHECK(apply_word("((123),(12),(13))") == "((12),(132),(13))");
  CHECK(apply_word("((12),(123),e)") == "((132),(12),e)");
}

TEST_CASE("one-object nerve relations at small degree") {
  const auto C = groupoid_from_group(symmetric_group_3());
  const auto X = one_object_nerve(C, Family::Weyl, 2);
  const auto* s1 = X.action_table(2, {GenName::Kind::Sigma, 1});
  const auto* s2 = X.action_table(2, {GenName::Kind::Sigma, 2});
  const auto* kap = X.action_table(2, kKappa);
  for (std::uint32_t x = 0; x < X.level_size(2); ++x) {
    // (sigma_1 sigma_2)^3 = 1
    std::uint32_t y = x;
    for (int r = 0; r < 3; ++r) y = (*s2)[(*s1)[y]];
    CHECK(y == x);
    // (sigma_1 kappa)^4 = 1
    std::uint32_t z = x;
    for (int r = 0; r < 4; ++r) z = (*kap)[(*s1)[z]];
    CHECK(z == x);
  }
  CHECK_THROWS_AS(one_object_nerve(indiscrete_groupoid(cyclic_group(2), 2),
                                   Family::Weyl, 2),
                  precondition_error);
  CHECK_THROWS_AS(one_object_nerve(C, Family::Cyclic, 2), precondition_error);
}

TEST_CASE("twisted bar actions and preconditions") {
  const auto c4 = cyclic_group(4);
  const auto X = twisted_bar(Family::Cyclic, c4, c4.index_of("2"), 3);
  CHECK(act(X, 2, kTau, "(1,3)") == "(2,1)");

  // tau^{n+1} = id for a central twist
  for (int n = 1; n <= 3; ++n) {
    const auto* tau = X.action_table(n, kTau);
    std::vector<std::uint32_t> acc(X.level_size(n));
    std::iota(acc.begin(), acc.end(), 0);
    for (int k = 0; k <= n; ++k)
      for (auto& v : acc) v = (*tau)[v];
    for (std::uint32_t x = 0; x < X.level_size(n); ++x) CHECK(acc[x] == x);
  }

  // dihedral: (tau omega)^2 = id when z^2 = e
  const auto q8 = quaternion_group();
  const auto D = twisted_bar(Family::Dihedral, q8, q8.index_of("-1"), 2);
  for (int n = 0; n <= 2; ++n) {
    const auto* tau = D.action_table(n, kTau);
    const auto* omega = D.action_table(n, kOmega);
    for (std::uint32_t x = 0; x < D.level_size(n); ++x)
      CHECK((*omega)[(*tau)[(*omega)[(*tau)[x]]]] == x);
  }

  // non-central twist and order > 2 dihedral twists are refused
  const auto s3 = symmetric_group_3();
  CHECK_THROWS_AS(twisted_bar(Family::Cyclic, s3, s3.index_of("(12)"), 2),
                  precondition_error);
  CHECK_THROWS_AS(twisted_bar(Family::Dihedral, c4, c4.index_of("1"), 2),
                  precondition_error);
  CHECK_THROWS_AS(twisted_bar(Family::Symmetric, c4, 0, 2),
                  precondition_error);

  // level cardinalities |G|^n
  for (int n = 0; n <= 3; ++n)
    CHECK(X.level_size(n) ==
          static_cast<std::size_t>(std::pow(4.0, n) + 0.5));
}

TEST_CASE("twisted categorical nerve") {
  const auto c2 = cyclic_group(2);
  const auto C = groupoid_from_group(c2);
  for (Family f : {Family::Cyclic, Family::Dihedral}) {
    const auto nerve = twisted_categorical_nerve(f, C, 3);
    const auto bar = twisted_bar(f, c2, identity_of(c2), 3);
    CAPTURE(family_name(f));
    CHECK(same_tables(bar, nerve));
  }

  // underlying simplicial set is the classical nerve
  const auto ind = indiscrete_groupoid(c2, 2);
  const auto nerve = twisted_categorical_nerve(Family::Cyclic, ind, 3);
  const auto classical = classical_nerve(ind, 3);
  CHECK(same_tables(underlying_simplicial(nerve), classical));
  CHECK(underlying_simplicial(nerve).labels == classical.labels);

  // tau^{n+1} = id on a groupoid nerve
  const auto Xs3 = twisted_categorical_nerve(Family::Cyclic,
                                             groupoid_from_group(symmetric_group_3()), 3);
  for (int n = 1; n <= 3; ++n) {
    const auto* tau = Xs3.action_table(n, kTau);
    std::vector<std::uint32_t> acc(Xs3.level_size(n));
    std::iota(acc.begin(), acc.end(), 0);
    for (int k = 0; k <= n; ++k)
      for (auto& v : acc) v = (*tau)[v];
    for (std::uint32_t x = 0; x < Xs3.level_size(n); ++x) CHECK(acc[x] == x);
  }

  // a monoid with a non-invertible morphism is rejected
  DaggerCategory proj;
  proj.name = "proj";
  proj.objects = {"x"};
  proj.morphisms = {{"idx", 0, 0}, {"p", 0, 0}};
  proj.identity = {0};
  proj.comp = {{0, 1}, {1, 1}};
  proj.dagger = {0, 1};
  REQUIRE(validate_dagger(proj).ok());
  CHECK_THROWS_AS(twisted_categorical_nerve(Family::Cyclic, proj, 2),
                  precondition_error);
}
