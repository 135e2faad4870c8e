#include "xsg/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "xsg/errors.hpp"
#include "xsg/weyl.hpp"

namespace xsg {

namespace {

using Tuple = std::vector<int>;

struct Level {
  std::vector<Tuple> tuples;
  std::vector<std::string> labels;
  std::map<Tuple, std::uint32_t> index;
};

Level make_level(std::vector<Tuple> tuples,
                 const std::function<std::string(const Tuple&)>& label_of) {
  std::vector<std::pair<std::string, Tuple>> tagged;
  tagged.reserve(tuples.size());
  for (auto& t : tuples) tagged.emplace_back(label_of(t), std::move(t));
  std::sort(tagged.begin(), tagged.end());
  Level lv;
  lv.tuples.reserve(tagged.size());
  lv.labels.reserve(tagged.size());
  for (auto& [lab, tup] : tagged) {
    lv.index.emplace(tup, static_cast<std::uint32_t>(lv.tuples.size()));
    lv.labels.push_back(lab);
    lv.tuples.push_back(std::move(tup));
  }
  return lv;
}

CrossedSet::Table table_from(const Level& src, const Level& dst,
                             const std::function<Tuple(const Tuple&)>& f) {
  CrossedSet::Table t(src.tuples.size());
  for (std::size_t x = 0; x < src.tuples.size(); ++x)
    t[x] = dst.index.at(f(src.tuples[x]));
  return t;
}

std::vector<Tuple> all_tuples(int alphabet, int len) {
  std::vector<Tuple> out;
  Tuple cur(static_cast<std::size_t>(len), 0);
  if (len == 0) {
    out.push_back(cur);
    return out;
  }
  while (true) {
    out.push_back(cur);
    int j = len - 1;
    while (j >= 0 && cur[static_cast<std::size_t>(j)] == alphabet - 1) {
      cur[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++cur[static_cast<std::size_t>(j)];
  }
  return out;
}

void init_set(CrossedSet& X, const std::string& name, Family family,
              int max_dim, const std::vector<Level>& levels) {
  X.name = name;
  X.family = family;
  X.max_dim = max_dim;
  const auto count = static_cast<std::size_t>(max_dim) + 1;
  X.labels.resize(count);
  X.face.resize(count);
  X.degen.resize(count);
  X.action.resize(count);
  for (std::size_t n = 0; n < count; ++n) X.labels[n] = levels[n].labels;
}

Tuple rotate_right(const Tuple& t) {
  Tuple out(t.size());
  out[0] = t.back();
  std::copy(t.begin(), t.end() - 1, out.begin() + 1);
  return out;
}

} // namespace

CrossedSet bar_construction(const FinGroup& G, Family family, int max_dim) {
  {
    Report r = validate_group(G);
    if (!r.ok())
      throw precondition_error("bar_construction: invalid group: " +
                               r.issues[0]);
  }
  if (max_dim < 0)
    throw precondition_error("bar_construction: max_dim must be >= 0");
  const int order = G.size();
  const int e = identity_of(G);
  std::vector<int> inv(static_cast<std::size_t>(order));
  for (int g = 0; g < order; ++g)
    inv[static_cast<std::size_t>(g)] = inverse_of(G, g);

  // The swap-style families only carry the crossed exchange relations over
  // the homogeneous (coordinate-deletion) simplicial structure; the
  // rotation-style families need the multiplication faces.
  const bool deletion_style = family == Family::Symmetric ||
                              family == Family::Reflexosymmetric ||
                              family == Family::Weyl;

  auto label_of = [&](const Tuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) s += ',';
      s += G.elements[static_cast<std::size_t>(t[i])];
    }
    return s + ")";
  };

  std::vector<Level> levels;
  for (int n = 0; n <= max_dim; ++n)
    levels.push_back(make_level(all_tuples(order, n + 1), label_of));

  CrossedSet X;
  init_set(X, "bar-" + G.name + "-" + family_name(family), family, max_dim,
           levels);

  for (int n = 1; n <= max_dim; ++n) {
    auto& out = X.face[static_cast<std::size_t>(n)];
    for (int i = 0; i <= n; ++i) {
      auto fn = [&, i, n](const Tuple& t) {
        Tuple r;
        if (deletion_style) {
          r = t;
          r.erase(r.begin() + i);
        } else if (i < n) {
          r = t;
          r[static_cast<std::size_t>(i)] =
              G.product(t[static_cast<std::size_t>(i)],
                        t[static_cast<std::size_t>(i) + 1]);
          r.erase(r.begin() + i + 1);
        } else {
          r.assign(t.begin(), t.end() - 1);
          r[0] = G.product(t.back(), t[0]);
        }
        return r;
      };
      out.push_back(table_from(levels[static_cast<std::size_t>(n)],
                               levels[static_cast<std::size_t>(n - 1)], fn));
    }
  }
  for (int n = 0; n < max_dim; ++n) {
    auto& out = X.degen[static_cast<std::size_t>(n)];
    for (int i = 0; i <= n; ++i) {
      auto fn = [&, i](const Tuple& t) {
        Tuple r = t;
        r.insert(r.begin() + i + 1,
                 deletion_style ? t[static_cast<std::size_t>(i)] : e);
        return r;
      };
      out.push_back(table_from(levels[static_cast<std::size_t>(n)],
                               levels[static_cast<std::size_t>(n + 1)], fn));
    }
  }

  for (int n = 0; n <= max_dim; ++n) {
    const auto& lv = levels[static_cast<std::size_t>(n)];
    auto& acts = X.action[static_cast<std::size_t>(n)];
    for (const GenName& gname : family_generators(family, n)) {
      std::function<Tuple(const Tuple&)> fn;
      switch (gname.kind) {
        case GenName::Kind::Tau:
          fn = rotate_right;
          break;
        case GenName::Kind::Omega:
          if (deletion_style) {
            // reflexosymmetric: full reversal with inverses
            fn = [&](const Tuple& t) {
              Tuple r(t.rbegin(), t.rend());
              for (auto& v : r) v = inv[static_cast<std::size_t>(v)];
              return r;
            };
          } else {
            // reflexive/dihedral: reversal fixing position 0
            fn = [&](const Tuple& t) {
              Tuple r(t.size());
              r[0] = inv[static_cast<std::size_t>(t[0])];
              for (std::size_t k = 1; k < t.size(); ++k)
                r[k] = inv[static_cast<std::size_t>(t[t.size() - k])];
              return r;
            };
          }
          break;
        case GenName::Kind::Sigma:
          fn = [&, gname](const Tuple& t) {
            Tuple r = t;
            std::swap(r[static_cast<std::size_t>(gname.index - 1)],
                      r[static_cast<std::size_t>(gname.index)]);
            return r;
          };
          break;
        case GenName::Kind::Kappa:
          fn = [&](const Tuple& t) {
            Tuple r = t;
            r[0] = inv[static_cast<std::size_t>(r[0])];
            return r;
          };
          break;
      }
      acts.emplace_back(gname, table_from(lv, lv, fn));
    }
  }
  return X;
}

namespace {

std::vector<Tuple> composable_loops(const DaggerCategory& C, int n) {
  std::vector<Tuple> out;
  Tuple cur;
  std::function<void()> grow = [&] {
    if (static_cast<int>(cur.size()) == n + 1) {
      if (C.tgt(cur.back()) == C.src(cur[0])) out.push_back(cur);
      return;
    }
    for (int f = 0; f < C.mor_count(); ++f) {
      if (!cur.empty() && C.src(f) != C.tgt(cur.back())) continue;
      cur.push_back(f);
      grow();
      cur.pop_back();
    }
  };
  grow();
  return out;
}

std::vector<Tuple> composable_chains(const DaggerCategory& C, int n) {
  std::vector<Tuple> out;
  Tuple cur;
  std::function<void()> grow = [&] {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int f = 0; f < C.mor_count(); ++f) {
      if (!cur.empty() && C.src(f) != C.tgt(cur.back())) continue;
      cur.push_back(f);
      grow();
      cur.pop_back();
    }
  };
  grow();
  return out;
}

std::string mor_tuple_label(const DaggerCategory& C, const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += C.morphisms[static_cast<std::size_t>(t[i])].name;
  }
  return s + ")";
}

// Loop-style faces: compose neighbours, wrapping the top face around.
void loop_faces(const DaggerCategory& C, const std::vector<Level>& levels,
                CrossedSet& X) {
  for (int n = 1; n <= X.max_dim; ++n) {
    auto& out = X.face[static_cast<std::size_t>(n)];
    for (int i = 0; i <= n; ++i) {
      auto fn = [&, i, n](const Tuple& t) {
        Tuple r;
        if (i < n) {
          r = t;
          r[static_cast<std::size_t>(i)] =
              C.then(t[static_cast<std::size_t>(i)],
                     t[static_cast<std::size_t>(i) + 1]);
          r.erase(r.begin() + i + 1);
        } else {
          r.assign(t.begin(), t.end() - 1);
          r[0] = C.then(t.back(), t[0]);
        }
        return r;
      };
      out.push_back(table_from(levels[static_cast<std::size_t>(n)],
                               levels[static_cast<std::size_t>(n - 1)], fn));
    }
  }
  for (int n = 0; n < X.max_dim; ++n) {
    auto& out = X.degen[static_cast<std::size_t>(n)];
    for (int i = 0; i <= n; ++i) {
      auto fn = [&, i](const Tuple& t) {
        Tuple r = t;
        r.insert(r.begin() + i + 1,
                 C.identity[static_cast<std::size_t>(
                     C.tgt(t[static_cast<std::size_t>(i)]))]);
        return r;
      };
      out.push_back(table_from(levels[static_cast<std::size_t>(n)],
                               levels[static_cast<std::size_t>(n + 1)], fn));
    }
  }
}

CrossedSet loop_nerve(const DaggerCategory& C, Family family, int max_dim,
                      const std::string& name) {
  std::vector<Level> levels;
  for (int n = 0; n <= max_dim; ++n)
    levels.push_back(make_level(
        composable_loops(C, n),
        [&](const Tuple& t) { return mor_tuple_label(C, t); }));

  CrossedSet X;
  init_set(X, name, family, max_dim, levels);
  loop_faces(C, levels, X);

  for (int n = 0; n <= max_dim; ++n) {
    const auto& lv = levels[static_cast<std::size_t>(n)];
    auto& acts = X.action[static_cast<std::size_t>(n)];
    for (const GenName& gname : family_generators(family, n)) {
      std::function<Tuple(const Tuple&)> fn;
      if (gname.kind == GenName::Kind::Tau) {
        fn = rotate_right;
      } else {
        // omega: dagger-reversal fixing the basepoint arrow
        fn = [&](const Tuple& t) {
          Tuple r(t.size());
          r[0] = C.dag(t[0]);
          for (std::size_t k = 1; k < t.size(); ++k)
            r[k] = C.dag(t[t.size() - k]);
          return r;
        };
      }
      acts.emplace_back(gname, table_from(lv, lv, fn));
    }
  }
  return X;
}

} // namespace

CrossedSet cyclic_nerve(const DaggerCategory& C, int max_dim) {
  if (max_dim < 0)
    throw precondition_error("cyclic_nerve: max_dim must be >= 0");
  {
    Report r = validate_category(C);
    if (!r.ok())
      throw precondition_error("cyclic_nerve: invalid category: " +
                               r.issues[0]);
  }
  return loop_nerve(C, Family::Cyclic, max_dim, "cnerve-" + C.name);
}

CrossedSet dihedral_nerve(const DaggerCategory& C, int max_dim) {
  if (max_dim < 0)
    throw precondition_error("dihedral_nerve: max_dim must be >= 0");
  {
    Report r = validate_dagger(C);
    if (!r.ok())
      throw precondition_error("dihedral_nerve: dagger axioms fail: " +
                               r.issues[0]);
  }
  return loop_nerve(C, Family::Dihedral, max_dim, "dnerve-" + C.name);
}

CrossedSet one_object_nerve(const DaggerCategory& C, Family family,
                            int max_dim) {
  if (max_dim < 0)
    throw precondition_error("one_object_nerve: max_dim must be >= 0");
  if (family != Family::Symmetric && family != Family::Reflexosymmetric &&
      family != Family::Weyl)
    throw precondition_error(
        "one_object_nerve: family must be symmetric, reflexosymmetric or weyl");
  if (C.object_count() != 1)
    throw precondition_error("one_object_nerve: category must have exactly "
                             "one object");
  {
    Report r = validate_dagger(C);
    if (!r.ok())
      throw precondition_error("one_object_nerve: dagger axioms fail: " +
                               r.issues[0]);
  }

  std::vector<Level> levels;
  for (int n = 0; n <= max_dim; ++n)
    levels.push_back(make_level(
        all_tuples(C.mor_count(), n + 1),
        [&](const Tuple& t) { return mor_tuple_label(C, t); }));

  CrossedSet X;
  init_set(X, "onerve-" + C.name + "-" + family_name(family), family, max_dim,
           levels);

  for (int n = 1; n <= max_dim; ++n) {
    auto& out = X.face[static_cast<std::size_t>(n)];
    for (int i = 0; i <= n; ++i) {
      auto fn = [i](const Tuple& t) {
        Tuple r = t;
        r.erase(r.begin() + i);
        return r;
      };
      out.push_back(table_from(levels[static_cast<std::size_t>(n)],
                               levels[static_cast<std::size_t>(n - 1)], fn));
    }
  }
  for (int n = 0; n < max_dim; ++n) {
    auto& out = X.degen[static_cast<std::size_t>(n)];
    for (int i = 0; i <= n; ++i) {
      auto fn = [i](const Tuple& t) {
        Tuple r = t;
        r.insert(r.begin() + i + 1, t[static_cast<std::size_t>(i)]);
        return r;
      };
      out.push_back(table_from(levels[static_cast<std::size_t>(n)],
                               levels[static_cast<std::size_t>(n + 1)], fn));
    }
  }

  for (int n = 0; n <= max_dim; ++n) {
    const auto& lv = levels[static_cast<std::size_t>(n)];
    auto& acts = X.action[static_cast<std::size_t>(n)];
    for (const GenName& gname : family_generators(family, n)) {
      std::function<Tuple(const Tuple&)> fn;
      switch (gname.kind) {
        case GenName::Kind::Sigma:
          fn = [gname](const Tuple& t) {
            Tuple r = t;
            std::swap(r[static_cast<std::size_t>(gname.index - 1)],
                      r[static_cast<std::size_t>(gname.index)]);
            return r;
          };
          break;
        case GenName::Kind::Kappa:
          fn = [&](const Tuple& t) {
            Tuple r = t;
            r[0] = C.dag(r[0]);
            return r;
          };
          break;
        case GenName::Kind::Omega:
          fn = [&](const Tuple& t) {
            Tuple r(t.rbegin(), t.rend());
            for (auto& v : r) v = C.dag(v);
            return r;
          };
          break;
        default:
          throw precondition_error("one_object_nerve: unexpected generator");
      }
      acts.emplace_back(gname, table_from(lv, lv, fn));
    }
  }
  return X;
}

namespace {

// Shared level/face/degeneracy structure of the classical nerve; chains of
// n arrows, level 0 the objects.
std::vector<Level> chain_levels(const DaggerCategory& C, int max_dim) {
  std::vector<Level> levels;
  for (int n = 0; n <= max_dim; ++n) {
    if (n == 0) {
      std::vector<Tuple> objs;
      for (int x = 0; x < C.object_count(); ++x) objs.push_back({x});
      levels.push_back(make_level(std::move(objs), [&](const Tuple& t) {
        return C.objects[static_cast<std::size_t>(t[0])];
      }));
    } else {
      levels.push_back(make_level(
          composable_chains(C, n),
          [&](const Tuple& t) { return mor_tuple_label(C, t); }));
    }
  }
  return levels;
}

void chain_faces(const DaggerCategory& C, const std::vector<Level>& levels,
                 CrossedSet& X) {
  for (int n = 1; n <= X.max_dim; ++n) {
    auto& out = X.face[static_cast<std::size_t>(n)];
    for (int i = 0; i <= n; ++i) {
      auto fn = [&, i, n](const Tuple& t) {
        if (n == 1)
          return Tuple{i == 0 ? C.tgt(t[0]) : C.src(t[0])};
        Tuple r;
        if (i == 0) {
          r.assign(t.begin() + 1, t.end());
        } else if (i == n) {
          r.assign(t.begin(), t.end() - 1);
        } else {
          r = t;
          r[static_cast<std::size_t>(i - 1)] =
              C.then(t[static_cast<std::size_t>(i - 1)],
                     t[static_cast<std::size_t>(i)]);
          r.erase(r.begin() + i);
        }
        return r;
      };
      out.push_back(table_from(levels[static_cast<std::size_t>(n)],
                               levels[static_cast<std::size_t>(n - 1)], fn));
    }
  }
  for (int n = 0; n < X.max_dim; ++n) {
    auto& out = X.degen[static_cast<std::size_t>(n)];
    for (int i = 0; i <= n; ++i) {
      auto fn = [&, i, n](const Tuple& t) {
        const int vertex_obj =
            n == 0 ? t[0]
                   : (i == 0 ? C.src(t[0])
                             : C.tgt(t[static_cast<std::size_t>(i - 1)]));
        Tuple r = n == 0 ? Tuple{} : t;
        r.insert(r.begin() + i,
                 C.identity[static_cast<std::size_t>(vertex_obj)]);
        return r;
      };
      out.push_back(table_from(levels[static_cast<std::size_t>(n)],
                               levels[static_cast<std::size_t>(n + 1)], fn));
    }
  }
}

} // namespace

CrossedSet classical_nerve(const DaggerCategory& C, int max_dim) {
  if (max_dim < 0)
    throw precondition_error("classical_nerve: max_dim must be >= 0");
  {
    Report r = validate_category(C);
    if (!r.ok())
      throw precondition_error("classical_nerve: invalid category: " +
                               r.issues[0]);
  }
  auto levels = chain_levels(C, max_dim);
  CrossedSet X;
  init_set(X, "nerve-" + C.name, Family::Trivial, max_dim, levels);
  chain_faces(C, levels, X);
  return X;
}

CrossedSet twisted_bar(Family family, const FinGroup& G, int z, int max_dim) {
  if (family != Family::Cyclic && family != Family::Dihedral)
    throw precondition_error("twisted_bar: family must be cyclic or dihedral");
  if (max_dim < 0)
    throw precondition_error("twisted_bar: max_dim must be >= 0");
  {
    Report r = validate_group(G);
    if (!r.ok())
      throw precondition_error("twisted_bar: invalid group: " + r.issues[0]);
  }
  if (z < 0 || z >= G.size())
    throw precondition_error("twisted_bar: twist element out of range");
  {
    const auto zs = center(G);
    if (std::find(zs.begin(), zs.end(), z) == zs.end())
      throw precondition_error("twisted_bar: twist element " +
                               G.elements[static_cast<std::size_t>(z)] +
                               " is not central in " + G.name);
  }
  if (family == Family::Dihedral && element_order(G, z) > 2)
    throw precondition_error("twisted_bar: dihedral twist element " +
                             G.elements[static_cast<std::size_t>(z)] +
                             " must have order at most two");

  const int order = G.size();
  const int e = identity_of(G);
  std::vector<int> inv(static_cast<std::size_t>(order));
  for (int g = 0; g < order; ++g)
    inv[static_cast<std::size_t>(g)] = inverse_of(G, g);

  auto label_of = [&](const Tuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) s += ',';
      s += G.elements[static_cast<std::size_t>(t[i])];
    }
    return s + ")";
  };

  std::vector<Level> levels;
  for (int n = 0; n <= max_dim; ++n)
    levels.push_back(make_level(all_tuples(order, n), label_of));

  CrossedSet X;
  init_set(X,
           "twisted-" + G.name + "-" +
               G.elements[static_cast<std::size_t>(z)] + "-" +
               family_name(family),
           family, max_dim, levels);

  for (int n = 1; n <= max_dim; ++n) {
    auto& out = X.face[static_cast<std::size_t>(n)];
    for (int i = 0; i <= n; ++i) {
      auto fn = [&, i, n](const Tuple& t) {
        Tuple r;
        if (i == 0) {
          r.assign(t.begin() + 1, t.end());
        } else if (i == n) {
          r.assign(t.begin(), t.end() - 1);
        } else {
          r = t;
          r[static_cast<std::size_t>(i - 1)] =
              G.product(t[static_cast<std::size_t>(i - 1)],
                        t[static_cast<std::size_t>(i)]);
          r.erase(r.begin() + i);
        }
        return r;
      };
      out.push_back(table_from(levels[static_cast<std::size_t>(n)],
                               levels[static_cast<std::size_t>(n - 1)], fn));
    }
  }
  for (int n = 0; n < max_dim; ++n) {
    auto& out = X.degen[static_cast<std::size_t>(n)];
    for (int i = 0; i <= n; ++i) {
      auto fn = [&, i](const Tuple& t) {
        Tuple r = t;
        r.insert(r.begin() + i, e);
        return r;
      };
      out.push_back(table_from(levels[static_cast<std::size_t>(n)],
                               levels[static_cast<std::size_t>(n + 1)], fn));
    }
  }

  for (int n = 0; n <= max_dim; ++n) {
    const auto& lv = levels[static_cast<std::size_t>(n)];
    auto& acts = X.action[static_cast<std::size_t>(n)];
    for (const GenName& gname : family_generators(family, n)) {
      std::function<Tuple(const Tuple&)> fn;
      if (gname.kind == GenName::Kind::Tau) {
        fn = [&, n](const Tuple& t) {
          if (n == 0) return t;
          int prod = e;
          for (int v : t) prod = G.product(prod, v);
          Tuple r(t.size());
          r[0] = G.product(z, inv[static_cast<std::size_t>(prod)]);
          std::copy(t.begin(), t.end() - 1, r.begin() + 1);
          return r;
        };
      } else {
        // The twist enters only through tau: a twisted reversal breaks
        // both (tau omega)^2 = id and the face exchanges whenever z != e.
        fn = [&](const Tuple& t) {
          Tuple r(t.rbegin(), t.rend());
          for (auto& v : r) v = inv[static_cast<std::size_t>(v)];
          return r;
        };
      }
      acts.emplace_back(gname, table_from(lv, lv, fn));
    }
  }
  return X;
}

CrossedSet twisted_categorical_nerve(Family family, const DaggerCategory& C,
                                     int max_dim) {
  if (family != Family::Cyclic && family != Family::Dihedral)
    throw precondition_error(
        "twisted_categorical_nerve: family must be cyclic or dihedral");
  if (max_dim < 0)
    throw precondition_error(
        "twisted_categorical_nerve: max_dim must be >= 0");
  {
    Report r = validate_dagger(C);
    if (!r.ok())
      throw precondition_error(
          "twisted_categorical_nerve: dagger axioms fail: " + r.issues[0]);
  }
  {
    const UnitarityFlag u = check_unitarity(C);
    if (!u.holds)
      throw precondition_error(
          "twisted_categorical_nerve: category is not unitary, witness " +
          C.morphisms[static_cast<std::size_t>(u.witnesses[0])].name);
  }

  auto levels = chain_levels(C, max_dim);
  CrossedSet X;
  init_set(X, "tnerve-" + C.name + "-" + family_name(family), family, max_dim,
           levels);
  chain_faces(C, levels, X);

  for (int n = 0; n <= max_dim; ++n) {
    const auto& lv = levels[static_cast<std::size_t>(n)];
    auto& acts = X.action[static_cast<std::size_t>(n)];
    for (const GenName& gname : family_generators(family, n)) {
      std::function<Tuple(const Tuple&)> fn;
      if (gname.kind == GenName::Kind::Tau) {
        fn = [&, n](const Tuple& t) {
          if (n == 0) return t;
          int comp = t[0];
          for (std::size_t k = 1; k < t.size(); ++k)
            comp = C.then(comp, t[k]);
          Tuple r(t.size());
          r[0] = C.dag(comp);
          std::copy(t.begin(), t.end() - 1, r.begin() + 1);
          return r;
        };
      } else {
        fn = [&, n](const Tuple& t) {
          if (n == 0) return t;
          Tuple r(t.rbegin(), t.rend());
          for (auto& v : r) v = C.dag(v);
          return r;
        };
      }
      acts.emplace_back(gname, table_from(lv, lv, fn));
    }
  }
  return X;
}

} // namespace xsg
