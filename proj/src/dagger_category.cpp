#include "xsg/dagger_category.hpp"

#include <algorithm>

#include "xsg/errors.hpp"

namespace xsg {

int DaggerCategory::mor_index(const std::string& label) const {
  for (int f = 0; f < mor_count(); ++f)
    if (morphisms[static_cast<std::size_t>(f)].name == label) return f;
  return -1;
}

Report validate_category(const DaggerCategory& C) {
  Report report;
  const int nobj = C.object_count();
  const int nmor = C.mor_count();
  if (nobj == 0) {
    report.fail("category has no objects");
    return report;
  }
  if (static_cast<int>(C.identity.size()) != nobj ||
      static_cast<int>(C.comp.size()) != nmor ||
      static_cast<int>(C.dagger.size()) != nmor) {
    report.fail("table sizes do not match object/morphism counts");
    return report;
  }
  for (int f = 0; f < nmor; ++f)
    if (static_cast<int>(C.comp[static_cast<std::size_t>(f)].size()) != nmor) {
      report.fail("composition row for " +
                  C.morphisms[static_cast<std::size_t>(f)].name +
                  " has wrong length");
      return report;
    }

  auto mor_name = [&](int f) { return C.morphisms[static_cast<std::size_t>(f)].name; };

  for (int x = 0; x < nobj; ++x) {
    const int id = C.identity[static_cast<std::size_t>(x)];
    if (id < 0 || id >= nmor || C.src(id) != x || C.tgt(id) != x) {
      report.fail("object " + C.objects[static_cast<std::size_t>(x)] +
                  " has no valid identity morphism");
      return report;
    }
  }

  // comp defined exactly on composable pairs, with matching endpoints
  for (int f = 0; f < nmor && report.ok(); ++f)
    for (int g = 0; g < nmor; ++g) {
      const int fg = C.then(f, g);
      const bool composable = C.tgt(f) == C.src(g);
      if (composable) {
        if (fg < 0 || fg >= nmor) {
          report.fail("composite " + mor_name(f) + ";" + mor_name(g) +
                      " is missing");
          break;
        }
        if (C.src(fg) != C.src(f) || C.tgt(fg) != C.tgt(g)) {
          report.fail("composite " + mor_name(f) + ";" + mor_name(g) +
                      " has wrong endpoints");
          break;
        }
      } else if (fg != -1) {
        report.fail("composite defined on non-composable pair " + mor_name(f) +
                    ";" + mor_name(g));
        break;
      }
    }
  if (!report.ok()) return report;

  for (int f = 0; f < nmor; ++f) {
    if (C.then(C.identity[static_cast<std::size_t>(C.src(f))], f) != f ||
        C.then(f, C.identity[static_cast<std::size_t>(C.tgt(f))]) != f) {
      report.fail("identity law fails at " + mor_name(f));
      return report;
    }
  }

  for (int f = 0; f < nmor && report.ok(); ++f)
    for (int g = 0; g < nmor && report.ok(); ++g) {
      if (C.tgt(f) != C.src(g)) continue;
      for (int h = 0; h < nmor; ++h) {
        if (C.tgt(g) != C.src(h)) continue;
        if (C.then(C.then(f, g), h) != C.then(f, C.then(g, h))) {
          report.fail("associativity fails on (" + mor_name(f) + ", " +
                      mor_name(g) + ", " + mor_name(h) + ")");
          break;
        }
      }
    }
  return report;
}

Report validate_dagger(const DaggerCategory& C) {
  Report report = validate_category(C);
  if (!report.ok()) return report;
  const int nobj = C.object_count();
  const int nmor = C.mor_count();
  auto mor_name = [&](int f) { return C.morphisms[static_cast<std::size_t>(f)].name; };

  for (int f = 0; f < nmor; ++f) {
    const int fd = C.dag(f);
    if (fd < 0 || fd >= nmor) {
      report.fail("dagger of " + mor_name(f) + " is missing");
      return report;
    }
    if (C.src(fd) != C.tgt(f) || C.tgt(fd) != C.src(f)) {
      report.fail("dagger of " + mor_name(f) + " has wrong endpoints");
      return report;
    }
    if (C.dag(fd) != f) {
      report.fail("dagger is not an involution at " + mor_name(f));
      return report;
    }
  }
  for (int x = 0; x < nobj; ++x) {
    const int id = C.identity[static_cast<std::size_t>(x)];
    if (C.dag(id) != id) {
      report.fail("identity of " + C.objects[static_cast<std::size_t>(x)] +
                  " is not dagger-fixed");
      return report;
    }
  }
  for (int f = 0; f < nmor && report.ok(); ++f)
    for (int g = 0; g < nmor; ++g) {
      if (C.tgt(f) != C.src(g)) continue;
      if (C.dag(C.then(f, g)) != C.then(C.dag(g), C.dag(f))) {
        report.fail("contravariance fails on (" + mor_name(f) + ", " +
                    mor_name(g) + ")");
        break;
      }
    }
  return report;
}

UnitarityFlag check_unitarity(const DaggerCategory& C) {
  UnitarityFlag flag;
  for (int f = 0; f < C.mor_count(); ++f)
    if (C.then(f, C.dag(f)) != C.identity[static_cast<std::size_t>(C.src(f))])
      flag.witnesses.push_back(f);
  flag.holds = flag.witnesses.empty();
  return flag;
}

DaggerCategory groupoid_from_group(const FinGroup& G) {
  Report r = validate_group(G);
  if (!r.ok())
    throw precondition_error("groupoid_from_group: invalid group: " +
                             r.issues[0]);
  DaggerCategory C;
  C.name = G.name;
  C.objects = {"x"};
  for (int g = 0; g < G.size(); ++g)
    C.morphisms.push_back({G.elements[static_cast<std::size_t>(g)], 0, 0});
  C.identity = {identity_of(G)};
  C.comp = G.mul;
  for (int g = 0; g < G.size(); ++g) C.dagger.push_back(inverse_of(G, g));
  return C;
}

DaggerCategory indiscrete_groupoid(const FinGroup& G, int k) {
  Report r = validate_group(G);
  if (!r.ok())
    throw precondition_error("indiscrete_groupoid: invalid group: " +
                             r.issues[0]);
  if (k < 1) throw precondition_error("indiscrete_groupoid: need k >= 1");
  DaggerCategory C;
  C.name = G.name + "x" + std::to_string(k);
  for (int a = 0; a < k; ++a)
    C.objects.push_back(std::string(1, static_cast<char>('x' + a)));
  const int n = G.size();
  auto mor_id = [&](int g, int a, int b) { return (a * k + b) * n + g; };
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int g = 0; g < n; ++g)
        C.morphisms.push_back({G.elements[static_cast<std::size_t>(g)] + "_" +
                                   C.objects[static_cast<std::size_t>(a)] +
                                   C.objects[static_cast<std::size_t>(b)],
                               a, b});
  const int e = identity_of(G);
  for (int a = 0; a < k; ++a) C.identity.push_back(mor_id(e, a, a));
  const int total = k * k * n;
  C.comp.assign(static_cast<std::size_t>(total),
                std::vector<int>(static_cast<std::size_t>(total), -1));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        for (int g = 0; g < n; ++g)
          for (int h = 0; h < n; ++h)
            C.comp[static_cast<std::size_t>(mor_id(g, a, b))]
                  [static_cast<std::size_t>(mor_id(h, b, c))] =
                mor_id(G.product(g, h), a, c);
  C.dagger.assign(static_cast<std::size_t>(total), -1);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int g = 0; g < n; ++g)
        C.dagger[static_cast<std::size_t>(mor_id(g, a, b))] =
            mor_id(inverse_of(G, g), b, a);
  return C;
}

} // namespace xsg
