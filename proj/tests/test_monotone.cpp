#include "doctest.h"

#include "xsg/errors.hpp"
#include "xsg/monotone.hpp"

using namespace xsg;

namespace {

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t out = 1;
  for (int i = 1; i <= k; ++i)
    out = out * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return out;
}

} // namespace

TEST_CASE("faces and degeneracies") {
  CHECK(face_map(0, 1).values == std::vector<std::uint8_t>{1});
  CHECK(face_map(2, 2).values == std::vector<std::uint8_t>{0, 1});
  CHECK(face_map(1, 2).values == std::vector<std::uint8_t>{0, 2});
  CHECK(degeneracy_map(0, 0).values == std::vector<std::uint8_t>{0, 0});
  CHECK(degeneracy_map(1, 1).values == std::vector<std::uint8_t>{0, 1, 1});
  CHECK(degeneracy_map(0, 1).values == std::vector<std::uint8_t>{0, 0, 1});
  CHECK_THROWS_AS(face_map(3, 2), precondition_error);
  CHECK_THROWS_AS(degeneracy_map(-1, 2), precondition_error);
}

TEST_CASE("composition") {
  const auto a = face_map(0, 1); // [0] -> [1]
  CHECK(compose(identity_map(1), a) == a);
  CHECK(compose(face_map(2, 2), face_map(0, 1)) ==
        MonotoneMap(2, {1}));
  CHECK(compose(degeneracy_map(0, 0), face_map(0, 1)) == identity_map(0));
  CHECK_THROWS_AS(compose(face_map(0, 1), face_map(0, 1)),
                  precondition_error);
}

TEST_CASE("cosimplicial identities") {
  // delta_j . delta_i = delta_i . delta_{j-1} for i < j, maps [n-2] -> [n]
  for (int n = 2; n <= 5; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        CHECK(compose(face_map(j, n), face_map(i, n - 1)) ==
              compose(face_map(i, n), face_map(j - 1, n - 1)));
  // eta_j . eta_i = eta_i . eta_{j+1} for i <= j, maps [n+2] -> [n]
  for (int n = 0; n <= 5; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        CHECK(compose(degeneracy_map(j, n), degeneracy_map(i, n + 1)) ==
              compose(degeneracy_map(i, n), degeneracy_map(j + 1, n + 1)));
  // mixed: eta_j . delta_i
  for (int n = 1; n <= 5; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        const auto lhs = compose(degeneracy_map(j, n), face_map(i, n + 1));
        if (i == j || i == j + 1) {
          CHECK(lhs == identity_map(n));
        } else if (i < j) {
          CHECK(lhs == compose(face_map(i, n), degeneracy_map(j - 1, n - 1)));
        } else {
          CHECK(lhs == compose(face_map(i - 1, n), degeneracy_map(j, n - 1)));
        }
      }
}

TEST_CASE("exhaustive enumeration counts") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      CHECK(all_monotone(m, n).size() ==
            binomial(n + m + 1, m + 1));
}

TEST_CASE("epi-mono factorisation") {
  {
    const auto [epi, mono] = epi_mono_factor(identity_map(2));
    CHECK(epi == identity_map(2));
    CHECK(mono == identity_map(2));
  }
  {
    const auto [epi, mono] = epi_mono_factor(face_map(0, 1));
    CHECK(epi == identity_map(0));
    CHECK(mono == face_map(0, 1));
  }
  {
    const auto phi = MonotoneMap(2, {0, 0, 2});
    const auto [epi, mono] = epi_mono_factor(phi);
    CHECK(epi == MonotoneMap(1, {0, 0, 1}));
    CHECK(mono == MonotoneMap(2, {0, 2}));
  }
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      for (const auto& phi : all_monotone(m, n)) {
        const auto [epi, mono] = epi_mono_factor(phi);
        CHECK(is_surjective(epi));
        CHECK(is_injective(mono));
        CHECK(compose(mono, epi) == phi);
      }
}
