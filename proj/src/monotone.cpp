#include "xsg/monotone.hpp"

#include <algorithm>

#include "xsg/errors.hpp"

namespace xsg {

MonotoneMap::MonotoneMap(int target_rank, std::vector<std::uint8_t> vals)
    : target(target_rank), values(std::move(vals)) {
  if (target < 0 || values.empty())
    throw precondition_error("monotone map: empty value table");
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] > target)
      throw precondition_error("monotone map: value out of range");
    if (j && values[j] < values[j - 1])
      throw precondition_error("monotone map: values must be weakly increasing");
  }
}

std::string MonotoneMap::to_string() const {
  std::string out = "[" + std::to_string(source()) + "]->[" +
                    std::to_string(target) + "](";
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j) out += ' ';
    out += std::to_string(static_cast<int>(values[j]));
  }
  out += ')';
  return out;
}

std::strong_ordering operator<=>(const MonotoneMap& a, const MonotoneMap& b) {
  if (auto c = a.target <=> b.target; c != 0) return c;
  return a.values <=> b.values;
}

MonotoneMap identity_map(int n) {
  std::vector<std::uint8_t> vals(static_cast<std::size_t>(n) + 1);
  for (std::size_t j = 0; j < vals.size(); ++j)
    vals[j] = static_cast<std::uint8_t>(j);
  return MonotoneMap(n, std::move(vals));
}

MonotoneMap face_map(int i, int n) {
  if (n < 1 || i < 0 || i > n)
    throw precondition_error("face_map: need n >= 1 and 0 <= i <= n");
  std::vector<std::uint8_t> vals(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    vals[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(j < i ? j : j + 1);
  return MonotoneMap(n, std::move(vals));
}

MonotoneMap degeneracy_map(int i, int n) {
  if (n < 0 || i < 0 || i > n)
    throw precondition_error("degeneracy_map: need 0 <= i <= n");
  std::vector<std::uint8_t> vals(static_cast<std::size_t>(n) + 2);
  for (int j = 0; j <= n + 1; ++j)
    vals[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(j <= i ? j : j - 1);
  return MonotoneMap(n, std::move(vals));
}

MonotoneMap compose(const MonotoneMap& after, const MonotoneMap& first) {
  if (first.target != after.source())
    throw precondition_error("compose: dimension mismatch");
  std::vector<std::uint8_t> vals(first.values.size());
  for (std::size_t j = 0; j < vals.size(); ++j)
    vals[j] = after.values[first.values[j]];
  return MonotoneMap(after.target, std::move(vals));
}

std::pair<MonotoneMap, MonotoneMap> epi_mono_factor(const MonotoneMap& phi) {
  std::vector<std::uint8_t> image;
  for (std::uint8_t v : phi.values)
    if (image.empty() || image.back() != v) image.push_back(v);
  const int k = static_cast<int>(image.size()) - 1;
  std::vector<std::uint8_t> epi_vals(phi.values.size());
  for (std::size_t j = 0; j < phi.values.size(); ++j) {
    auto it = std::lower_bound(image.begin(), image.end(), phi.values[j]);
    epi_vals[j] = static_cast<std::uint8_t>(it - image.begin());
  }
  return {MonotoneMap(k, std::move(epi_vals)),
          MonotoneMap(phi.target, std::move(image))};
}

bool is_injective(const MonotoneMap& phi) {
  for (std::size_t j = 1; j < phi.values.size(); ++j)
    if (phi.values[j] == phi.values[j - 1]) return false;
  return true;
}

bool is_surjective(const MonotoneMap& phi) {
  std::vector<bool> hit(static_cast<std::size_t>(phi.target) + 1, false);
  for (std::uint8_t v : phi.values) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<MonotoneMap> all_monotone(int m, int n) {
  if (m < 0 || n < 0) throw precondition_error("all_monotone: negative rank");
  std::vector<MonotoneMap> out;
  std::vector<std::uint8_t> vals(static_cast<std::size_t>(m) + 1, 0);
  while (true) {
    out.emplace_back(n, vals);
    int j = m;
    while (j >= 0 && vals[static_cast<std::size_t>(j)] == n) --j;
    if (j < 0) break;
    const std::uint8_t next = static_cast<std::uint8_t>(vals[static_cast<std::size_t>(j)] + 1);
    for (int t = j; t <= m; ++t) vals[static_cast<std::size_t>(t)] = next;
  }
  return out;
}

} // namespace xsg
