#ifndef XSG_ANALYSIS_HPP
#define XSG_ANALYSIS_HPP

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "xsg/crossed_set.hpp"

namespace xsg {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix of exact integers.
struct IntegerMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> data;

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  BigInt& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }
};

/// Invariant factors d_1 | d_2 | ... (positive, one per nonzero diagonal
/// entry of the Smith normal form).
std::vector<BigInt> smith_normal_form(IntegerMatrix M);

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion; // factors >= 2, each dividing the next

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Integral homology of the underlying simplicial set in degrees 0..k_max,
/// computed from the normalized chain complex (free on nondegenerate
/// simplices, boundary the alternating face sum with degenerate faces
/// dropped). Requires X.max_dim >= k_max + 1.
std::vector<HomologyGroup> homology(const CrossedSet& X, int k_max);

/// Orbit count of X_n by the Burnside average over the family closure,
/// with every group element's action assembled from its generator word.
std::size_t burnside_count(const CrossedSet& X, int level);

} // namespace xsg

#endif
