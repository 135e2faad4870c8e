#include "xsg/signed_perm.hpp"

#include <algorithm>

#include "xsg/errors.hpp"

namespace xsg {

SignedPerm::SignedPerm(std::vector<std::uint8_t> imgs,
                       std::vector<std::int8_t> sgns)
    : images(std::move(imgs)), signs(std::move(sgns)) {
  if (images.empty() || images.size() != signs.size())
    throw precondition_error("signed permutation: images/signs size mismatch");
  std::vector<bool> seen(images.size(), false);
  for (std::uint8_t v : images) {
    if (v >= images.size() || seen[v])
      throw precondition_error("signed permutation: images are not a bijection");
    seen[v] = true;
  }
  for (std::int8_t s : signs)
    if (s != 1 && s != -1)
      throw precondition_error("signed permutation: signs must be +1 or -1");
}

bool SignedPerm::is_identity() const {
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] != i || signs[i] != 1) return false;
  return true;
}

std::string SignedPerm::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) out += ' ';
    out += (signs[i] < 0 ? "-" : "");
    out += std::to_string(static_cast<int>(images[i]));
  }
  out += ']';
  return out;
}

std::strong_ordering operator<=>(const SignedPerm& a, const SignedPerm& b) {
  if (auto c = a.images <=> b.images; c != 0) return c;
  return a.signs <=> b.signs;
}

SignedPerm identity_perm(int degree) {
  if (degree < 0) throw precondition_error("degree must be >= 0");
  std::vector<std::uint8_t> imgs(static_cast<std::size_t>(degree) + 1);
  for (std::size_t i = 0; i < imgs.size(); ++i)
    imgs[i] = static_cast<std::uint8_t>(i);
  std::vector<std::int8_t> sgns(imgs.size(), 1);
  return SignedPerm(std::move(imgs), std::move(sgns));
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  if (a.degree() != b.degree())
    throw precondition_error("compose: degree mismatch");
  const std::size_t n = a.images.size();
  std::vector<std::uint8_t> imgs(n);
  std::vector<std::int8_t> sgns(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t bi = b.images[i];
    imgs[i] = a.images[bi];
    sgns[i] = static_cast<std::int8_t>(b.signs[i] * a.signs[bi]);
  }
  return SignedPerm(std::move(imgs), std::move(sgns));
}

SignedPerm inverse(const SignedPerm& g) {
  const std::size_t n = g.images.size();
  std::vector<std::uint8_t> imgs(n);
  std::vector<std::int8_t> sgns(n);
  for (std::size_t i = 0; i < n; ++i)
    imgs[g.images[i]] = static_cast<std::uint8_t>(i);
  for (std::size_t i = 0; i < n; ++i) sgns[i] = g.signs[imgs[i]];
  return SignedPerm(std::move(imgs), std::move(sgns));
}

} // namespace xsg
