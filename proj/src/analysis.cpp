#include "xsg/analysis.hpp"

#include <algorithm>
#include <numeric>

#include "xsg/errors.hpp"
#include "xsg/weyl.hpp"

namespace xsg {

namespace {

using boost::multiprecision::abs;

// Row/column reduction at pivot (r, c) until every entry in its row and
// column is divisible by the pivot and cleared.
void clear_pivot(IntegerMatrix& M, std::size_t r, std::size_t c) {
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (std::size_t i = r + 1; i < M.rows; ++i) {
      if (M.at(i, c) == 0) continue;
      const BigInt q = M.at(i, c) / M.at(r, c);
      for (std::size_t j = c; j < M.cols; ++j) M.at(i, j) -= q * M.at(r, j);
      if (M.at(i, c) != 0) {
        // remainder smaller than the pivot: swap it up and restart
        for (std::size_t j = c; j < M.cols; ++j)
          std::swap(M.at(r, j), M.at(i, j));
        dirty = true;
      }
    }
    for (std::size_t j = c + 1; j < M.cols; ++j) {
      if (M.at(r, j) == 0) continue;
      const BigInt q = M.at(r, j) / M.at(r, c);
      for (std::size_t i = r; i < M.rows; ++i) M.at(i, j) -= q * M.at(i, c);
      if (M.at(r, j) != 0) {
        for (std::size_t i = r; i < M.rows; ++i)
          std::swap(M.at(i, c), M.at(i, j));
        dirty = true;
      }
    }
  }
}

} // namespace

std::vector<BigInt> smith_normal_form(IntegerMatrix M) {
  std::vector<BigInt> factors;
  std::size_t r = 0, c = 0;
  while (r < M.rows && c < M.cols) {
    // smallest nonzero entry in the remaining block as pivot
    std::size_t pr = M.rows, pc = M.cols;
    for (std::size_t i = r; i < M.rows; ++i)
      for (std::size_t j = c; j < M.cols; ++j)
        if (M.at(i, j) != 0 &&
            (pr == M.rows || abs(M.at(i, j)) < abs(M.at(pr, pc))))
          pr = i, pc = j;
    if (pr == M.rows) break;
    if (pr != r)
      for (std::size_t j = c; j < M.cols; ++j) std::swap(M.at(r, j), M.at(pr, j));
    if (pc != c)
      for (std::size_t i = r; i < M.rows; ++i) std::swap(M.at(i, c), M.at(i, pc));
    clear_pivot(M, r, c);
    if (M.at(r, c) < 0) M.at(r, c) = -M.at(r, c);
    factors.push_back(M.at(r, c));
    ++r, ++c;
  }
  // enforce the divisibility chain
  for (std::size_t i = 0; i + 1 < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (factors[j] % factors[i] != 0) {
        const BigInt g = gcd(factors[i], factors[j]);
        const BigInt l = factors[i] / g * factors[j];
        factors[i] = g;
        factors[j] = l;
      }
  std::sort(factors.begin(), factors.end());
  return factors;
}

namespace {

// Nondegenerate simplices: those not hit by any degeneracy map.
std::vector<std::vector<std::uint32_t>> nondegenerate(const CrossedSet& X) {
  std::vector<std::vector<bool>> degenerate(
      static_cast<std::size_t>(X.max_dim) + 1);
  for (int n = 0; n <= X.max_dim; ++n)
    degenerate[static_cast<std::size_t>(n)].assign(X.level_size(n), false);
  for (int n = 0; n < X.max_dim; ++n)
    for (const auto& table : X.degen[static_cast<std::size_t>(n)])
      for (std::uint32_t img : table)
        degenerate[static_cast<std::size_t>(n + 1)][img] = true;
  std::vector<std::vector<std::uint32_t>> basis(
      static_cast<std::size_t>(X.max_dim) + 1);
  for (int n = 0; n <= X.max_dim; ++n)
    for (std::uint32_t x = 0; x < X.level_size(n); ++x)
      if (!degenerate[static_cast<std::size_t>(n)][x])
        basis[static_cast<std::size_t>(n)].push_back(x);
  return basis;
}

} // namespace

std::vector<HomologyGroup> homology(const CrossedSet& X, int k_max) {
  if (k_max < 0) throw precondition_error("homology: k_max must be >= 0");
  if (X.max_dim < k_max + 1)
    throw precondition_error(
        "homology: truncation level must be at least k_max + 1");

  const auto basis = nondegenerate(X);
  std::vector<std::vector<int>> pos(static_cast<std::size_t>(X.max_dim) + 1);
  for (int n = 0; n <= X.max_dim; ++n) {
    pos[static_cast<std::size_t>(n)].assign(X.level_size(n), -1);
    for (std::size_t k = 0; k < basis[static_cast<std::size_t>(n)].size(); ++k)
      pos[static_cast<std::size_t>(n)]
         [basis[static_cast<std::size_t>(n)][k]] = static_cast<int>(k);
  }

  // boundary_n : C_n -> C_{n-1} for 1 <= n <= k_max + 1
  std::vector<IntegerMatrix> boundary(static_cast<std::size_t>(k_max) + 2);
  for (int n = 1; n <= k_max + 1; ++n) {
    const auto& rows_basis = basis[static_cast<std::size_t>(n - 1)];
    const auto& cols_basis = basis[static_cast<std::size_t>(n)];
    IntegerMatrix M(rows_basis.size(), cols_basis.size());
    for (std::size_t cidx = 0; cidx < cols_basis.size(); ++cidx) {
      const std::uint32_t x = cols_basis[cidx];
      for (int i = 0; i <= n; ++i) {
        const std::uint32_t fx =
            X.face[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][x];
        const int ridx = pos[static_cast<std::size_t>(n - 1)][fx];
        if (ridx < 0) continue; // degenerate face
        M.at(static_cast<std::size_t>(ridx), cidx) += (i % 2 == 0 ? 1 : -1);
      }
    }
    boundary[static_cast<std::size_t>(n)] = std::move(M);
  }

  std::vector<HomologyGroup> out;
  for (int k = 0; k <= k_max; ++k) {
    const std::size_t dim = basis[static_cast<std::size_t>(k)].size();
    const auto snf_in = k == 0 ? std::vector<BigInt>{}
                               : smith_normal_form(boundary[static_cast<std::size_t>(k)]);
    const auto snf_out =
        smith_normal_form(boundary[static_cast<std::size_t>(k + 1)]);
    const std::size_t rank_in = snf_in.size();
    const std::size_t rank_out = snf_out.size();
    HomologyGroup H;
    H.free_rank = dim - rank_in - rank_out;
    for (const BigInt& d : snf_out)
      if (d >= 2) H.torsion.push_back(d);
    out.push_back(std::move(H));
  }
  return out;
}

std::size_t burnside_count(const CrossedSet& X, int level) {
  if (level < 0 || level > X.max_dim)
    throw precondition_error("burnside_count: level out of range");
  const auto group = family_closure(X.family, level);
  const std::size_t size = X.level_size(level);
  std::size_t total = 0;
  std::vector<std::uint32_t> acted(size);
  for (const SignedPerm& g : group) {
    const Word w = generator_word(X.family, g);
    std::iota(acted.begin(), acted.end(), 0);
    for (const GenName& gen : w) {
      const CrossedSet::Table* t = X.action_table(level, gen);
      if (!t)
        throw precondition_error("burnside_count: missing action for " +
                                 gen_name_string(gen));
      for (auto& v : acted) v = (*t)[v];
    }
    for (std::uint32_t x = 0; x < size; ++x)
      if (acted[x] == x) ++total;
  }
  return total / group.size();
}

} // namespace xsg
