#ifndef XSG_DAGGER_CATEGORY_HPP
#define XSG_DAGGER_CATEGORY_HPP

#include <string>
#include <vector>

#include "xsg/fin_group.hpp"
#include "xsg/report.hpp"

namespace xsg {

/// A finite category with a chosen dagger involution. The composition
/// table is diagrammatic: compose(f, g) is "f then g", defined exactly on
/// pairs with tgt(f) == src(g) (-1 elsewhere).
struct DaggerCategory {
  struct Mor {
    std::string name;
    int src = 0;
    int tgt = 0;
  };

  std::string name;
  std::vector<std::string> objects;
  std::vector<Mor> morphisms;
  std::vector<int> identity;            // per object
  std::vector<std::vector<int>> comp;   // comp[f][g] = f;g or -1
  std::vector<int> dagger;              // per morphism

  int object_count() const { return static_cast<int>(objects.size()); }
  int mor_count() const { return static_cast<int>(morphisms.size()); }
  int src(int f) const { return morphisms[static_cast<std::size_t>(f)].src; }
  int tgt(int f) const { return morphisms[static_cast<std::size_t>(f)].tgt; }
  int then(int f, int g) const { return comp[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)]; }
  int dag(int f) const { return dagger[static_cast<std::size_t>(f)]; }
  int mor_index(const std::string& label) const; // -1 when absent
};

/// Category axioms only: identities, totality on composable pairs,
/// associativity.
Report validate_category(const DaggerCategory& C);

/// Category axioms plus the dagger axioms: id+ = id, (f;g)+ = g+;f+,
/// f++ = f and src(f+) = tgt(f).
Report validate_dagger(const DaggerCategory& C);

struct UnitarityFlag {
  bool holds = false;
  std::vector<int> witnesses; // morphisms with f;f+ != id_src(f)
};

/// Strict unitarity: every morphism satisfies f;f+ = id_src(f).
UnitarityFlag check_unitarity(const DaggerCategory& C);

/// One object, morphisms the group elements, composition the group product
/// and dagger the inverse.
DaggerCategory groupoid_from_group(const FinGroup& G);

/// k objects with Hom(a, b) a copy of G for every pair, composition induced
/// by the group product. Morphism labels are "<g>_<a><b>".
DaggerCategory indiscrete_groupoid(const FinGroup& G, int k);

} // namespace xsg

#endif
