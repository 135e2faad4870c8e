#include "xsg/crossed.hpp"

#include <algorithm>

#include "xsg/errors.hpp"

namespace xsg {

CrossedMorphism::CrossedMorphism(Family f, MonotoneMap phi, SignedPerm g)
    : family(f), mono(std::move(phi)), grp(std::move(g)) {
  if (grp.degree() != mono.source())
    throw precondition_error("crossed morphism: group part degree " +
                             std::to_string(grp.degree()) +
                             " does not match source rank " +
                             std::to_string(mono.source()));
  if (!is_member(family, grp))
    throw precondition_error("crossed morphism: group part is not in the " +
                             family_name(family) + " family");
}

std::pair<MonotoneMap, SignedPerm> act_on_monotone(const SignedPerm& g,
                                                   const MonotoneMap& phi) {
  if (phi.target != g.degree())
    throw precondition_error("act_on_monotone: dimension mismatch");
  const std::size_t m1 = phi.values.size();

  std::vector<std::uint8_t> vals(m1);
  for (std::size_t j = 0; j < m1; ++j)
    vals[j] = static_cast<std::uint8_t>(g.image(phi.values[j]));

  std::vector<std::uint8_t> sorted = vals;
  std::sort(sorted.begin(), sorted.end());

  // Fibers of phi are contiguous runs of equal values; each run lands on a
  // contiguous block of the sorted table, traversed forwards for sign + and
  // backwards for sign -.
  std::vector<std::uint8_t> hperm(m1);
  std::vector<std::int8_t> hsigns(m1);
  std::size_t j = 0;
  while (j < m1) {
    std::size_t k = j;
    while (k + 1 < m1 && phi.values[k + 1] == phi.values[j]) ++k;
    const std::size_t len = k - j + 1;
    const std::size_t lo = static_cast<std::size_t>(
        std::lower_bound(sorted.begin(), sorted.end(), vals[j]) -
        sorted.begin());
    const int sign = g.sign(phi.values[j]);
    for (std::size_t t = 0; t < len; ++t) {
      hperm[j + t] = static_cast<std::uint8_t>(sign > 0 ? lo + t
                                                        : lo + len - 1 - t);
      hsigns[j + t] = static_cast<std::int8_t>(sign);
    }
    j = k + 1;
  }

  return {MonotoneMap(phi.target, std::move(sorted)),
          SignedPerm(std::move(hperm), std::move(hsigns))};
}

CrossedMorphism compose(const CrossedMorphism& second,
                        const CrossedMorphism& first) {
  if (second.family != first.family)
    throw precondition_error("compose: family mismatch");
  if (first.target() != second.source())
    throw precondition_error("compose: dimension mismatch");
  auto [psi, h] = act_on_monotone(second.grp, first.mono);
  return CrossedMorphism(first.family, compose(second.mono, psi),
                         compose(h, first.grp));
}

CrossedMorphism identity_morphism(Family f, int n) {
  return CrossedMorphism(f, identity_map(n), identity_perm(n));
}

std::vector<CrossedMorphism> hom_set(Family f, int m, int n) {
  const auto monos = all_monotone(m, n);
  const auto group = family_closure(f, m);
  std::vector<CrossedMorphism> out;
  out.reserve(monos.size() * group.size());
  for (const auto& phi : monos)
    for (const auto& g : group) out.emplace_back(f, phi, g);
  return out;
}

OperatorExchange operator_exchange(const SignedPerm& g, OpKind kind, int i) {
  const int n = g.degree();
  if (kind == OpKind::Face) {
    auto [psi, h] = act_on_monotone(g, face_map(i, n));
    // psi is injective and skips exactly one value.
    int skipped = n;
    for (int j = 0; j < n; ++j)
      if (psi.values[static_cast<std::size_t>(j)] != j) {
        skipped = j;
        break;
      }
    return {skipped, std::move(h)};
  }
  auto [psi, h] = act_on_monotone(g, degeneracy_map(i, n));
  int doubled = -1;
  for (std::size_t j = 1; j < psi.values.size(); ++j)
    if (psi.values[j] == psi.values[j - 1]) {
      doubled = psi.values[j];
      break;
    }
  return {doubled, std::move(h)};
}

} // namespace xsg
