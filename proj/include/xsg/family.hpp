#ifndef XSG_FAMILY_HPP
#define XSG_FAMILY_HPP

#include <compare>
#include <string>
#include <vector>

namespace xsg {

/// The seven simple crossed simplicial groups.
enum class Family {
  Trivial,
  Cyclic,
  Symmetric,
  Reflexive,
  Dihedral,
  Reflexosymmetric,
  Weyl,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// Name of one distinguished generator: tau, omega, sigma(i) or kappa.
struct GenName {
  enum class Kind { Tau, Omega, Sigma, Kappa };
  Kind kind = Kind::Tau;
  int index = 0; // sigma only, 1-based

  friend bool operator==(const GenName&, const GenName&) = default;
  friend std::strong_ordering operator<=>(const GenName&,
                                          const GenName&) = default;
};

/// A word in the generators, applied left to right under composition.
using Word = std::vector<GenName>;

std::string gen_name_string(const GenName& g);
GenName gen_name_from_string(const std::string& s);
std::string word_string(const Word& w);
Word word_from_string(const std::string& text);

} // namespace xsg

#endif
