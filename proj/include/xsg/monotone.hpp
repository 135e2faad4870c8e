#ifndef XSG_MONOTONE_HPP
#define XSG_MONOTONE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace xsg {

/// A weakly increasing map [m] -> [n], stored by its value table.
struct MonotoneMap {
  int target = 0;
  std::vector<std::uint8_t> values; // length m+1

  MonotoneMap() = default;
  MonotoneMap(int target_rank, std::vector<std::uint8_t> vals);

  int source() const { return static_cast<int>(values.size()) - 1; }
  int operator()(int j) const { return values[static_cast<std::size_t>(j)]; }

  std::string to_string() const;

  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
  friend std::strong_ordering operator<=>(const MonotoneMap& a,
                                          const MonotoneMap& b);
};

MonotoneMap identity_map(int n);
MonotoneMap face_map(int i, int n);       // delta_i : [n-1] -> [n], skips i
MonotoneMap degeneracy_map(int i, int n); // eta_i : [n+1] -> [n], hits i twice

/// after . first  (requires first.target == after.source()).
MonotoneMap compose(const MonotoneMap& after, const MonotoneMap& first);

/// Unique factorisation phi = mono . epi through the image of phi.
std::pair<MonotoneMap, MonotoneMap> epi_mono_factor(const MonotoneMap& phi);

bool is_injective(const MonotoneMap& phi);
bool is_surjective(const MonotoneMap& phi);

/// All monotone maps [m] -> [n] in lexicographic value order.
std::vector<MonotoneMap> all_monotone(int m, int n);

} // namespace xsg

#endif
