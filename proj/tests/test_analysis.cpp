#include "doctest.h"

#include <functional>

#include "oracles.hpp"
#include "xsg/analysis.hpp"
#include "xsg/constructions.hpp"
#include "xsg/errors.hpp"

using namespace xsg;

TEST_CASE("smith normal form basics") {
  {
    IntegerMatrix M(1, 1);
    M.at(0, 0) = 2;
    CHECK(smith_normal_form(M) == std::vector<BigInt>{2});
  }
  {
    IntegerMatrix M(3, 2); // zero matrix
    CHECK(smith_normal_form(M).empty());
  }
  {
    IntegerMatrix M(2, 2);
    M.at(0, 0) = 2;
    M.at(1, 1) = 3;
    CHECK(smith_normal_form(M) == std::vector<BigInt>{1, 6});
  }
  {
    // a matrix needing row and column work
    IntegerMatrix M(3, 3);
    const int vals[3][3] = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) M.at(r, c) = vals[r][c];
    CHECK(smith_normal_form(M) == std::vector<BigInt>{2, 2, 156});
  }
}

TEST_CASE("invariant factors divide and match determinant divisors") {
  // deterministic small matrices via an LCG
  std::uint64_t state = 0x2545F4914F6CDD1DULL;
  auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>((state >> 33) % 11) - 5;
  };
  int checked = 0;
  while (checked < 12) {
    const std::size_t n = 2 + (static_cast<std::size_t>(next() + 5) % 3);
    IntegerMatrix M(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) M.at(r, c) = next();
    std::vector<std::vector<BigInt>> full(n, std::vector<BigInt>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) full[r][c] = M.at(r, c);
    if (oracles::determinant(full) == 0) continue;
    ++checked;
    const auto factors = smith_normal_form(M);
    REQUIRE(factors.size() == n);
    BigInt prod = 1;
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(factors[k] > 0);
      if (k) CHECK(factors[k] % factors[k - 1] == 0);
      prod *= factors[k];
      CHECK(prod == oracles::determinant_divisor(M, static_cast<int>(k) + 1));
    }
  }
}

TEST_CASE("homology of the classifying space of C2") {
  const auto c2 = cyclic_group(2);
  const auto X = twisted_bar(Family::Cyclic, c2, identity_of(c2), 4);
  const auto H = homology(X, 3);
  REQUIRE(H.size() == 4);
  CHECK(H[0] == HomologyGroup{1, {}});
  CHECK(H[1] == HomologyGroup{0, {2}});
  CHECK(H[2] == HomologyGroup{0, {}});
  CHECK(H[3] == HomologyGroup{0, {2}});
  CHECK_THROWS_AS(homology(X, 4), precondition_error);
}

TEST_CASE("H0 counts connected components") {
  const auto c2 = cyclic_group(2);
  for (const auto& X :
       {twisted_bar(Family::Cyclic, c2, identity_of(c2), 2),
        bar_construction(c2, Family::Cyclic, 2),
        bar_construction(symmetric_group_3(), Family::Cyclic, 2),
        classical_nerve(indiscrete_groupoid(c2, 2), 2)}) {
    CHECK(homology(X, 0)[0].free_rank == oracles::component_count(X));
    CHECK(homology(X, 0)[0].torsion.empty());
  }
  // the cyclic bar of an abelian group splits into |G| components
  CHECK(homology(bar_construction(c2, Family::Cyclic, 2), 0)[0].free_rank == 2);
}

TEST_CASE("H1 is the abelianization") {
  for (const FinGroup& G : {cyclic_group(2), cyclic_group(3), cyclic_group(4),
                            symmetric_group_3(), quaternion_group()}) {
    const auto X = twisted_bar(Family::Cyclic, G, identity_of(G), 2);
    const auto H = homology(X, 1);
    const auto expected = oracles::abelianization_factors(G);
    CAPTURE(G.name);
    CHECK(H[1].free_rank == 0);
    REQUIRE(H[1].torsion.size() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k)
      CHECK(H[1].torsion[k] == expected[k]);
  }
}

TEST_CASE("burnside counts agree with orbit enumeration") {
  const auto c2 = cyclic_group(2);
  const auto bar = bar_construction(c2, Family::Cyclic, 3);
  CHECK(burnside_count(bar, 1) == 3);
  CHECK(burnside_count(bar, 2) == 4);
  for (const auto& X :
       {bar_construction(c2, Family::Dihedral, 3),
        bar_construction(c2, Family::Weyl, 3),
        bar_construction(cyclic_group(3), Family::Reflexosymmetric, 2),
        twisted_bar(Family::Dihedral, quaternion_group(),
                    quaternion_group().index_of("-1"), 2),
        one_object_nerve(groupoid_from_group(symmetric_group_3()),
                         Family::Symmetric, 2)}) {
    for (int n = 0; n <= X.max_dim; ++n) {
      if (X.level_size(n) > 512) continue;
      CAPTURE(X.name);
      CHECK(burnside_count(X, n) == orbit_set(X, n).size());
    }
  }
  // trivial family: every element is its own orbit
  const auto plain = bar_construction(c2, Family::Trivial, 2);
  for (int n = 0; n <= 2; ++n)
    CHECK(burnside_count(plain, n) == plain.level_size(n));
}
