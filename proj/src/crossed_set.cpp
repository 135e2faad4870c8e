#include "xsg/crossed_set.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "xsg/crossed.hpp"
#include "xsg/errors.hpp"
#include "xsg/weyl.hpp"

namespace xsg {

const CrossedSet::Table* CrossedSet::action_table(int n,
                                                  const GenName& g) const {
  for (const auto& [gen, table] : action[static_cast<std::size_t>(n)])
    if (gen == g) return &table;
  return nullptr;
}

Report validate_shape(const CrossedSet& X) {
  Report report;
  const int N = X.max_dim;
  if (N < 0) {
    report.fail("negative truncation level");
    return report;
  }
  const auto levels = static_cast<std::size_t>(N) + 1;
  if (X.labels.size() != levels || X.face.size() != levels ||
      X.degen.size() != levels || X.action.size() != levels) {
    report.fail("per-level containers must all have max_dim+1 entries");
    return report;
  }
  auto check_table = [&](const CrossedSet::Table& t, int n, int target,
                         const std::string& what) {
    if (t.size() != X.level_size(n)) {
      report.fail(what + ": table length " + std::to_string(t.size()) +
                  ", expected " + std::to_string(X.level_size(n)));
      return;
    }
    for (std::uint32_t v : t)
      if (v >= X.level_size(target)) {
        report.fail(what + ": index out of range");
        return;
      }
  };
  for (int n = 0; n <= N && report.ok(); ++n) {
    const auto un = static_cast<std::size_t>(n);
    if (n >= 1) {
      if (static_cast<int>(X.face[un].size()) != n + 1) {
        report.fail("level " + std::to_string(n) + ": expected " +
                    std::to_string(n + 1) + " face maps");
        break;
      }
      for (int i = 0; i <= n; ++i)
        check_table(X.face[un][static_cast<std::size_t>(i)], n, n - 1,
                    "d_" + std::to_string(i) + " at level " + std::to_string(n));
    } else if (!X.face[0].empty()) {
      report.fail("level 0 must not carry face maps");
    }
    if (n < N) {
      if (static_cast<int>(X.degen[un].size()) != n + 1) {
        report.fail("level " + std::to_string(n) + ": expected " +
                    std::to_string(n + 1) + " degeneracy maps");
        break;
      }
      for (int i = 0; i <= n; ++i)
        check_table(X.degen[un][static_cast<std::size_t>(i)], n, n + 1,
                    "s_" + std::to_string(i) + " at level " + std::to_string(n));
    } else if (!X.degen[un].empty()) {
      report.fail("top level must not carry degeneracy maps");
    }
    const auto expected = family_generators(X.family, n);
    if (X.action[un].size() != expected.size()) {
      report.fail("level " + std::to_string(n) + ": expected " +
                  std::to_string(expected.size()) + " generator actions");
      break;
    }
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (X.action[un][k].first != expected[k]) {
        report.fail("level " + std::to_string(n) +
                    ": generator actions out of order");
        break;
      }
      check_table(X.action[un][k].second, n, n,
                  gen_name_string(expected[k]) + " at level " +
                      std::to_string(n));
    }
  }
  return report;
}

namespace {

// act_h as a table on X_n, assembled from the generator tables along a word.
CrossedSet::Table word_action(const CrossedSet& X, int n, const Word& w) {
  const std::size_t size = X.level_size(n);
  CrossedSet::Table out(size);
  std::iota(out.begin(), out.end(), 0);
  for (const auto& gen : w) {
    const CrossedSet::Table* t = X.action_table(n, gen);
    if (!t)
      throw precondition_error("missing action table for " +
                               gen_name_string(gen) + " at level " +
                               std::to_string(n));
    for (auto& v : out) v = (*t)[v];
  }
  return out;
}

void check_simplicial(const CrossedSet& X, Report& report) {
  const int N = X.max_dim;
  auto label = [&](int n, std::uint32_t x) {
    return X.labels[static_cast<std::size_t>(n)][x];
  };
  // d_i d_j = d_{j-1} d_i  (i < j)
  for (int n = 2; n <= N; ++n) {
    const auto& fn = X.face[static_cast<std::size_t>(n)];
    const auto& fm = X.face[static_cast<std::size_t>(n - 1)];
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (std::uint32_t x = 0; x < X.level_size(n); ++x) {
          const std::uint32_t lhs = fm[static_cast<std::size_t>(i)][fn[static_cast<std::size_t>(j)][x]];
          const std::uint32_t rhs = fm[static_cast<std::size_t>(j - 1)][fn[static_cast<std::size_t>(i)][x]];
          if (lhs != rhs) {
            report.fail("level " + std::to_string(n) + ": d_" +
                        std::to_string(i) + " d_" + std::to_string(j) +
                        " != d_" + std::to_string(j - 1) + " d_" +
                        std::to_string(i) + " at " + label(n, x));
            if (report.issues.size() > 200) return;
          }
        }
  }
  // s_i s_j = s_{j+1} s_i  (i <= j)
  for (int n = 0; n + 2 <= N; ++n) {
    const auto& sn = X.degen[static_cast<std::size_t>(n)];
    const auto& sm = X.degen[static_cast<std::size_t>(n + 1)];
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (std::uint32_t x = 0; x < X.level_size(n); ++x) {
          const std::uint32_t lhs = sm[static_cast<std::size_t>(i)][sn[static_cast<std::size_t>(j)][x]];
          const std::uint32_t rhs = sm[static_cast<std::size_t>(j + 1)][sn[static_cast<std::size_t>(i)][x]];
          if (lhs != rhs) {
            report.fail("level " + std::to_string(n) + ": s_" +
                        std::to_string(i) + " s_" + std::to_string(j) +
                        " != s_" + std::to_string(j + 1) + " s_" +
                        std::to_string(i) + " at " + label(n, x));
            if (report.issues.size() > 200) return;
          }
        }
  }
  // d_i s_j mixed identities
  for (int n = 0; n + 1 <= N; ++n) {
    const auto& sn = X.degen[static_cast<std::size_t>(n)];
    const auto& fup = X.face[static_cast<std::size_t>(n + 1)];
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i)
        for (std::uint32_t x = 0; x < X.level_size(n); ++x) {
          const std::uint32_t lhs = fup[static_cast<std::size_t>(i)][sn[static_cast<std::size_t>(j)][x]];
          std::uint32_t rhs;
          if (i == j || i == j + 1) {
            rhs = x;
          } else if (i < j) {
            rhs = X.degen[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(j - 1)]
                         [X.face[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][x]];
          } else {
            rhs = X.degen[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(j)]
                         [X.face[static_cast<std::size_t>(n)][static_cast<std::size_t>(i - 1)][x]];
          }
          if (lhs != rhs) {
            report.fail("level " + std::to_string(n) + ": d_" +
                        std::to_string(i) + " s_" + std::to_string(j) +
                        " identity fails at " + label(n, x));
            if (report.issues.size() > 200) return;
          }
        }
  }
}

void check_relations(const CrossedSet& X, Report& report) {
  for (int n = 0; n <= X.max_dim; ++n)
    for (const Word& rel : presentation_relations(X.family, n)) {
      const auto table = word_action(X, n, rel);
      for (std::uint32_t x = 0; x < X.level_size(n); ++x)
        if (table[x] != x) {
          report.fail("level " + std::to_string(n) + ": relation " +
                      word_string(rel) + " is not the identity at " +
                      X.labels[static_cast<std::size_t>(n)][x]);
          break;
        }
    }
}

void check_exchanges(const CrossedSet& X, Report& report) {
  for (int n = 0; n <= X.max_dim; ++n) {
    for (const GenName& gname : family_generators(X.family, n)) {
      const SignedPerm g = generator(X.family, gname, n);
      const CrossedSet::Table& act_g = *X.action_table(n, gname);
      if (n >= 1) {
        for (int i = 0; i <= n; ++i) {
          const auto [j, h] = operator_exchange(g, OpKind::Face, i);
          const auto act_h =
              word_action(X, n - 1, generator_word(X.family, h));
          const auto& di = X.face[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
          const auto& dj = X.face[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
          for (std::uint32_t x = 0; x < X.level_size(n); ++x)
            if (di[act_g[x]] != act_h[dj[x]]) {
              report.fail("level " + std::to_string(n) + ": d_" +
                          std::to_string(i) + " . " + gen_name_string(gname) +
                          " != " + word_string(generator_word(X.family, h)) +
                          " . d_" + std::to_string(j) + " at " +
                          X.labels[static_cast<std::size_t>(n)][x]);
              break;
            }
        }
      }
      if (n < X.max_dim) {
        for (int i = 0; i <= n; ++i) {
          const auto [j, h] = operator_exchange(g, OpKind::Degeneracy, i);
          const auto act_h =
              word_action(X, n + 1, generator_word(X.family, h));
          const auto& si = X.degen[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
          const auto& sj = X.degen[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
          for (std::uint32_t x = 0; x < X.level_size(n); ++x)
            if (si[act_g[x]] != act_h[sj[x]]) {
              report.fail("level " + std::to_string(n) + ": s_" +
                          std::to_string(i) + " . " + gen_name_string(gname) +
                          " != " + word_string(generator_word(X.family, h)) +
                          " . s_" + std::to_string(j) + " at " +
                          X.labels[static_cast<std::size_t>(n)][x]);
              break;
            }
        }
      }
    }
  }
}

} // namespace

Report validate_truncation(const CrossedSet& X) {
  Report report = validate_shape(X);
  if (!report.ok()) return report;
  check_simplicial(X, report);
  check_relations(X, report);
  check_exchanges(X, report);
  return report;
}

CrossedSet underlying_simplicial(const CrossedSet& X) {
  CrossedSet out = X;
  out.family = Family::Trivial;
  for (auto& acts : out.action) acts.clear();
  return out;
}

CrossedSet restrict_family(const CrossedSet& X, Family sub) {
  CrossedSet out = X;
  out.family = sub;
  for (int n = 0; n <= X.max_dim; ++n) {
    std::vector<std::pair<GenName, CrossedSet::Table>> kept;
    for (const GenName& gname : family_generators(sub, n)) {
      const CrossedSet::Table* t = X.action_table(n, gname);
      if (!t)
        throw precondition_error("restrict_family: generator " +
                                 gen_name_string(gname) +
                                 " is absent at level " + std::to_string(n));
      kept.emplace_back(gname, *t);
    }
    out.action[static_cast<std::size_t>(n)] = std::move(kept);
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> orbit_set(const CrossedSet& X,
                                                  int level) {
  if (level < 0 || level > X.max_dim)
    throw precondition_error("orbit_set: level out of range");
  const std::size_t size = X.level_size(level);
  std::vector<std::uint32_t> parent(size);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::uint32_t(std::uint32_t)> find =
      [&](std::uint32_t x) -> std::uint32_t {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& [gen, table] : X.action[static_cast<std::size_t>(level)]) {
    (void)gen;
    for (std::uint32_t x = 0; x < size; ++x) {
      const std::uint32_t a = find(x);
      const std::uint32_t b = find(table[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<std::uint32_t>> orbits;
  std::vector<int> slot(size, -1);
  for (std::uint32_t x = 0; x < size; ++x) {
    const std::uint32_t root = find(x);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(orbits.size());
      orbits.emplace_back();
    }
    orbits[static_cast<std::size_t>(slot[root])].push_back(x);
  }
  return orbits;
}

bool same_tables(const CrossedSet& a, const CrossedSet& b) {
  if (a.family != b.family || a.max_dim != b.max_dim) return false;
  for (int n = 0; n <= a.max_dim; ++n)
    if (a.level_size(n) != b.level_size(n)) return false;
  if (a.face != b.face || a.degen != b.degen) return false;
  if (a.action.size() != b.action.size()) return false;
  for (std::size_t n = 0; n < a.action.size(); ++n) {
    if (a.action[n].size() != b.action[n].size()) return false;
    for (std::size_t k = 0; k < a.action[n].size(); ++k)
      if (a.action[n][k] != b.action[n][k]) return false;
  }
  return true;
}

} // namespace xsg
