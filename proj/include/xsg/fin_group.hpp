#ifndef XSG_FIN_GROUP_HPP
#define XSG_FIN_GROUP_HPP

#include <string>
#include <vector>

#include "xsg/report.hpp"

namespace xsg {

/// A finite group given by its multiplication table. mul[g][h] is the
/// product "g then h" (rows and columns in element order).
struct FinGroup {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<int>> mul;

  int size() const { return static_cast<int>(elements.size()); }
  int index_of(const std::string& label) const; // -1 when absent
  int product(int g, int h) const { return mul[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]; }
};

/// Checks totality, associativity, identity and inverses. The report lists
/// the first failing triple of each kind.
Report validate_group(const FinGroup& G);

/// Requires a valid group for the queries below.
int identity_of(const FinGroup& G);
int inverse_of(const FinGroup& G, int g);
std::vector<int> center(const FinGroup& G);
int element_order(const FinGroup& G, int g);

// Table builders used by tests and tooling.
FinGroup cyclic_group(int k);          // labels 0..k-1, additive
FinGroup klein_group();                // labels e a b ab
FinGroup symmetric_group_3();          // labels e (12) (13) (23) (123) (132)
FinGroup quaternion_group();           // labels 1 -1 i -i j -j k -k

} // namespace xsg

#endif
