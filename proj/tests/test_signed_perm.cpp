#include "doctest.h"

#include <algorithm>
#include <set>

#include "xsg/errors.hpp"
#include "xsg/signed_perm.hpp"
#include "xsg/weyl.hpp"

using namespace xsg;

namespace {

std::size_t factorial(int n) {
  std::size_t out = 1;
  for (int k = 2; k <= n; ++k) out *= static_cast<std::size_t>(k);
  return out;
}

// Closed-form subgroup orders, used as the oracle against the BFS closure.
std::size_t expected_order(Family f, int n) {
  const auto m = static_cast<std::size_t>(n) + 1;
  switch (f) {
    case Family::Trivial: return 1;
    case Family::Cyclic: return m;
    case Family::Reflexive: return 2;
    case Family::Dihedral: return 2 * m;
    case Family::Symmetric: return factorial(n + 1);
    case Family::Reflexosymmetric: return 2 * factorial(n + 1);
    case Family::Weyl: return (std::size_t{1} << m) * factorial(n + 1);
  }
  return 0;
}

const Family kFamilies[] = {
    Family::Trivial,       Family::Cyclic,   Family::Symmetric,
    Family::Reflexive,     Family::Dihedral, Family::Reflexosymmetric,
    Family::Weyl,
};

} // namespace

TEST_CASE("distinguished generators") {
  CHECK(rotation(2).images == std::vector<std::uint8_t>{2, 0, 1});
  CHECK(rotation(2).signs == std::vector<std::int8_t>{1, 1, 1});
  CHECK(reversal(2).images == std::vector<std::uint8_t>{2, 1, 0});
  CHECK(reversal(2).signs == std::vector<std::int8_t>{-1, -1, -1});
  CHECK(adjacent_swap(1, 2).images == std::vector<std::uint8_t>{1, 0, 2});
  CHECK(leading_flip(3).images == std::vector<std::uint8_t>{0, 1, 2, 3});
  CHECK(leading_flip(3).signs == std::vector<std::int8_t>{-1, 1, 1, 1});

  CHECK(generator(Family::Cyclic, {GenName::Kind::Tau, 0}, 2) == rotation(2));
  CHECK(generator(Family::Weyl, {GenName::Kind::Kappa, 0}, 3) ==
        leading_flip(3));
  CHECK_THROWS_AS(generator(Family::Cyclic, {GenName::Kind::Kappa, 0}, 2),
                  precondition_error);
  CHECK_THROWS_AS(generator(Family::Symmetric, {GenName::Kind::Sigma, 3}, 2),
                  precondition_error);
}

TEST_CASE("composition and inverses") {
  const auto id2 = identity_perm(2);
  const auto tau = rotation(2);
  const auto omega = reversal(2);

  CHECK(compose(id2, tau) == tau);
  CHECK(compose(tau, id2) == tau);
  CHECK(compose(omega, omega) == id2);
  CHECK(compose(tau, compose(tau, tau)) == id2);
  CHECK(inverse(id2) == id2);
  CHECK(inverse(tau) == compose(tau, tau));
  CHECK(inverse(leading_flip(1)) == leading_flip(1));
  CHECK_THROWS_AS(compose(rotation(2), rotation(3)), precondition_error);

  // inverse is two-sided on the whole Weyl closure at small degree
  for (const auto& g : family_closure(Family::Weyl, 2)) {
    CHECK(compose(g, inverse(g)) == id2);
    CHECK(compose(inverse(g), g) == id2);
  }
}

TEST_CASE("compose is associative on closures") {
  for (int n = 0; n <= 2; ++n) {
    const auto closure = family_closure(Family::Weyl, n);
    for (const auto& a : closure)
      for (const auto& b : closure)
        for (const auto& c : closure)
          CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
  const auto closure3 = family_closure(Family::Dihedral, 3);
  for (const auto& a : closure3)
    for (const auto& b : closure3)
      for (const auto& c : closure3)
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
}

TEST_CASE("presentation relations evaluate to the identity") {
  for (Family f : kFamilies)
    for (int n = 0; n <= 4; ++n)
      for (const Word& rel : presentation_relations(f, n)) {
        CAPTURE(family_name(f));
        CAPTURE(n);
        CAPTURE(word_string(rel));
        CHECK(evaluate_word(f, rel, n) == identity_perm(n));
      }
}

TEST_CASE("closure orders match the closed forms") {
  for (Family f : kFamilies)
    for (int n = 0; n <= 4; ++n) {
      CAPTURE(family_name(f));
      CAPTURE(n);
      CHECK(closure_order(f, n) == expected_order(f, n));
    }
  CHECK(closure_order(Family::Weyl, 4) == 3840);
  CHECK(closure_order(Family::Cyclic, 3) == 4);
  CHECK(closure_order(Family::Weyl, 1) == 8);
  CHECK(closure_order(Family::Dihedral, 2) == 6);
}

TEST_CASE("membership") {
  CHECK_FALSE(is_member(Family::Symmetric, leading_flip(2)));
  CHECK(is_member(Family::Dihedral, compose(rotation(3), rotation(3))));
  CHECK(is_member(Family::Reflexosymmetric, reversal(2)));
  CHECK(is_member(Family::Trivial, identity_perm(3)));
  CHECK_FALSE(is_member(Family::Trivial, rotation(3)));
  CHECK_FALSE(is_member(Family::Cyclic, reversal(2)));
  CHECK(is_member(Family::Reflexive, reversal(4)));
  CHECK_FALSE(is_member(Family::Reflexive, rotation(4)));
}

TEST_CASE("membership selects exactly the closure inside the Weyl group") {
  for (int n = 0; n <= 3; ++n) {
    const auto weyl = family_closure(Family::Weyl, n);
    for (Family f : kFamilies) {
      const std::size_t count = static_cast<std::size_t>(
          std::count_if(weyl.begin(), weyl.end(),
                        [&](const SignedPerm& g) { return is_member(f, g); }));
      CAPTURE(family_name(f));
      CAPTURE(n);
      CHECK(count == closure_order(f, n));
    }
  }
}

TEST_CASE("closures respect the inclusion lattice") {
  auto contains = [](const std::vector<SignedPerm>& big,
                     const std::vector<SignedPerm>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  for (int n = 0; n <= 3; ++n) {
    const auto cyc = family_closure(Family::Cyclic, n);
    const auto sym = family_closure(Family::Symmetric, n);
    const auto ref = family_closure(Family::Reflexive, n);
    const auto dih = family_closure(Family::Dihedral, n);
    const auto rsym = family_closure(Family::Reflexosymmetric, n);
    const auto weyl = family_closure(Family::Weyl, n);
    CHECK(contains(dih, cyc));
    CHECK(contains(dih, ref));
    CHECK(contains(sym, cyc));
    CHECK(contains(rsym, dih));
    CHECK(contains(rsym, sym));
    CHECK(contains(weyl, rsym));
  }
}

TEST_CASE("generator words round-trip") {
  CHECK(generator_word(Family::Cyclic, identity_perm(2)).empty());
  const auto tau2 = compose(rotation(2), rotation(2));
  CHECK(word_string(generator_word(Family::Cyclic, tau2)) == "tau tau");
  CHECK_THROWS_AS(generator_word(Family::Cyclic, reversal(2)),
                  precondition_error);

  for (Family f : kFamilies)
    for (int n = 0; n <= 3; ++n)
      for (const auto& g : family_closure(f, n))
        CHECK(evaluate_word(f, generator_word(f, g), n) == g);
}
