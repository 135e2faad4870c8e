#ifndef XSG_CROSSED_SET_HPP
#define XSG_CROSSED_SET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "xsg/family.hpp"
#include "xsg/report.hpp"

namespace xsg {

/// A levelwise-finite crossed simplicial set, truncated at level max_dim.
///
/// Tables are index maps between the per-level element lists:
///   face[n][i]   : X_n -> X_{n-1}   (1 <= n <= max_dim, 0 <= i <= n)
///   degen[n][i]  : X_n -> X_{n+1}   (0 <= n <  max_dim, 0 <= i <= n)
///   action[n]    : one table per family generator at degree n
struct CrossedSet {
  using Table = std::vector<std::uint32_t>;

  std::string name;
  Family family = Family::Trivial;
  int max_dim = 0;
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<Table>> face;
  std::vector<std::vector<Table>> degen;
  std::vector<std::vector<std::pair<GenName, Table>>> action;

  std::size_t level_size(int n) const { return labels[static_cast<std::size_t>(n)].size(); }
  const Table* action_table(int n, const GenName& g) const;

  friend bool operator==(const CrossedSet&, const CrossedSet&) = default;
};

/// Structural sanity: table shapes and index ranges. Run before the
/// relation checks; validate_truncation includes it.
Report validate_shape(const CrossedSet& X);

/// Checks, pointwise on every level:
///  (a) the simplicial identities,
///  (b) every presentation relation of the family, as actions,
///  (c) the face exchange d_i . act_g = act_h . d_j derived from the
///      canonical decomposition, with act_h expanded via generator words,
///  (d) the degeneracy exchange, where both sides stay inside the
///      truncation (levels n < max_dim).
Report validate_truncation(const CrossedSet& X);

/// Same levels, faces and degeneracies with the actions erased.
CrossedSet underlying_simplicial(const CrossedSet& X);

/// Keeps only the generator actions of `sub` (requires sub's generators to
/// be a subset of the family's, e.g. Dihedral -> Cyclic).
CrossedSet restrict_family(const CrossedSet& X, Family sub);

/// Orbits of X_n under the generator actions, each orbit sorted, orbits
/// ordered by least element.
std::vector<std::vector<std::uint32_t>> orbit_set(const CrossedSet& X, int level);

/// Levelwise comparison of all tables, ignoring names and labels.
bool same_tables(const CrossedSet& a, const CrossedSet& b);

} // namespace xsg

#endif
