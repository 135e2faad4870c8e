#ifndef XSG_SIGNED_PERM_HPP
#define XSG_SIGNED_PERM_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace xsg {

/// An element of the hyperoctahedral group W_{n+1}: a bijection of {0..n}
/// together with a sign (+1/-1) attached to every position.
///
/// Composition follows the wreath-product rule
///   (a*b).image(i) = a.image(b.image(i))
///   (a*b).sign(i)  = b.sign(i) * a.sign(b.image(i))
/// so `compose(a, b)` applies `b` first.
struct SignedPerm {
  std::vector<std::uint8_t> images;
  std::vector<std::int8_t> signs;

  SignedPerm() = default;
  SignedPerm(std::vector<std::uint8_t> imgs, std::vector<std::int8_t> sgns);

  int degree() const { return static_cast<int>(images.size()) - 1; }
  int image(int i) const { return images[static_cast<std::size_t>(i)]; }
  int sign(int i) const { return signs[static_cast<std::size_t>(i)]; }

  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend std::strong_ordering operator<=>(const SignedPerm& a,
                                          const SignedPerm& b);
};

SignedPerm identity_perm(int degree);
SignedPerm compose(const SignedPerm& a, const SignedPerm& b);
SignedPerm inverse(const SignedPerm& g);

} // namespace xsg

#endif
