#include "xsg/fin_group.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "xsg/errors.hpp"

namespace xsg {

int FinGroup::index_of(const std::string& label) const {
  auto it = std::find(elements.begin(), elements.end(), label);
  return it == elements.end() ? -1 : static_cast<int>(it - elements.begin());
}

Report validate_group(const FinGroup& G) {
  Report report;
  const int n = G.size();
  if (n == 0) {
    report.fail("group is empty");
    return report;
  }
  if (static_cast<int>(G.mul.size()) != n) {
    report.fail("multiplication table has " + std::to_string(G.mul.size()) +
                " rows, expected " + std::to_string(n));
    return report;
  }
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(G.mul[static_cast<std::size_t>(g)].size()) != n) {
      report.fail("row " + G.elements[static_cast<std::size_t>(g)] +
                  " has wrong length");
      return report;
    }
    for (int h = 0; h < n; ++h)
      if (G.product(g, h) < 0 || G.product(g, h) >= n) {
        report.fail("table entry out of range at (" +
                    G.elements[static_cast<std::size_t>(g)] + ", " +
                    G.elements[static_cast<std::size_t>(h)] + ")");
        return report;
      }
  }

  for (int a = 0; a < n && report.ok(); ++a)
    for (int b = 0; b < n && report.ok(); ++b)
      for (int c = 0; c < n; ++c)
        if (G.product(G.product(a, b), c) != G.product(a, G.product(b, c))) {
          report.fail("associativity fails on (" +
                      G.elements[static_cast<std::size_t>(a)] + ", " +
                      G.elements[static_cast<std::size_t>(b)] + ", " +
                      G.elements[static_cast<std::size_t>(c)] + ")");
          break;
        }

  int e = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int g = 0; g < n; ++g)
      if (G.product(cand, g) != g || G.product(g, cand) != g) {
        ok = false;
        break;
      }
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e < 0) {
    report.fail("no two-sided identity element");
    return report;
  }
  for (int g = 0; g < n; ++g) {
    bool has_inverse = false;
    for (int h = 0; h < n; ++h)
      if (G.product(g, h) == e && G.product(h, g) == e) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) {
      report.fail("element " + G.elements[static_cast<std::size_t>(g)] +
                  " has no inverse");
      break;
    }
  }
  return report;
}

namespace {

void require_valid(const FinGroup& G) {
  Report r = validate_group(G);
  if (!r.ok())
    throw precondition_error("invalid group " + G.name + ": " + r.issues[0]);
}

} // namespace

int identity_of(const FinGroup& G) {
  for (int cand = 0; cand < G.size(); ++cand) {
    bool ok = true;
    for (int g = 0; g < G.size(); ++g)
      if (G.product(cand, g) != g || G.product(g, cand) != g) {
        ok = false;
        break;
      }
    if (ok) return cand;
  }
  throw precondition_error("group " + G.name + " has no identity");
}

int inverse_of(const FinGroup& G, int g) {
  const int e = identity_of(G);
  for (int h = 0; h < G.size(); ++h)
    if (G.product(g, h) == e && G.product(h, g) == e) return h;
  throw precondition_error("element has no inverse");
}

std::vector<int> center(const FinGroup& G) {
  require_valid(G);
  std::vector<int> out;
  for (int z = 0; z < G.size(); ++z) {
    bool central = true;
    for (int g = 0; g < G.size(); ++g)
      if (G.product(z, g) != G.product(g, z)) {
        central = false;
        break;
      }
    if (central) out.push_back(z);
  }
  return out;
}

int element_order(const FinGroup& G, int g) {
  require_valid(G);
  const int e = identity_of(G);
  int acc = g;
  int k = 1;
  while (acc != e) {
    acc = G.product(acc, g);
    ++k;
  }
  return k;
}

FinGroup cyclic_group(int k) {
  if (k < 1) throw precondition_error("cyclic_group: order must be >= 1");
  FinGroup G;
  G.name = "C" + std::to_string(k);
  for (int i = 0; i < k; ++i) G.elements.push_back(std::to_string(i));
  G.mul.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      G.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % k;
  return G;
}

FinGroup klein_group() {
  FinGroup G;
  G.name = "V4";
  G.elements = {"e", "a", "b", "ab"};
  G.mul = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return G;
}

FinGroup symmetric_group_3() {
  // Elements as permutations of {1,2,3}; the product g.h applies g first.
  const std::array<std::array<int, 3>, 6> perms = {{
      {{0, 1, 2}}, // e
      {{1, 0, 2}}, // (12)
      {{2, 1, 0}}, // (13)
      {{0, 2, 1}}, // (23)
      {{1, 2, 0}}, // (123)
      {{2, 0, 1}}, // (132)
  }};
  FinGroup G;
  G.name = "S3";
  G.elements = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  std::map<std::array<int, 3>, int> lookup;
  for (int i = 0; i < 6; ++i) lookup[perms[static_cast<std::size_t>(i)]] = i;
  G.mul.assign(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> prod{};
      for (int x = 0; x < 3; ++x)
        prod[static_cast<std::size_t>(x)] =
            perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(
                perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)])];
      G.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = lookup.at(prod);
    }
  return G;
}

FinGroup quaternion_group() {
  FinGroup G;
  G.name = "Q8";
  G.elements = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  // index: 1:-1 pairs (2m, 2m+1); i*j = k, j*k = i, k*i = j.
  auto idx = [&](const std::string& s) { return G.index_of(s); };
  const int one = idx("1"), mone = idx("-1");
  auto neg = [&](int g) { return g ^ 1; };
  G.mul.assign(8, std::vector<int>(8, -1));
  auto set = [&](int a, int b, int c) { G.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = c; };
  const int I = idx("i"), J = idx("j"), K = idx("k");
  // products of the base units
  std::map<std::pair<int, int>, int> base = {
      {{I, I}, mone}, {{J, J}, mone}, {{K, K}, mone},
      {{I, J}, K},    {{J, I}, neg(K)}, {{J, K}, I},
      {{K, J}, neg(I)}, {{K, I}, J},  {{I, K}, neg(J)},
  };
  auto unit = [&](int g) { return g & ~1; };   // strip the sign
  auto sign = [&](int g) { return g & 1; };    // 1 when negative
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int prod;
      if (unit(a) == one) prod = unit(b);
      else if (unit(b) == one) prod = unit(a);
      else prod = base.at({unit(a), unit(b)});
      if (sign(a) ^ sign(b)) prod = neg(prod);
      set(a, b, prod);
    }
  return G;
}

} // namespace xsg
