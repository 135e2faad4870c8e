#ifndef XSG_CROSSED_HPP
#define XSG_CROSSED_HPP

#include <compare>
#include <utility>
#include <vector>

#include "xsg/family.hpp"
#include "xsg/monotone.hpp"
#include "xsg/signed_perm.hpp"
#include "xsg/weyl.hpp"

namespace xsg {

/// A morphism [m] -> [n] of the crossed category, in canonical form: a
/// monotone map following an automorphism of [m].
struct CrossedMorphism {
  Family family = Family::Trivial;
  MonotoneMap mono; // [m] -> [n]
  SignedPerm grp;   // degree m

  CrossedMorphism() = default;
  CrossedMorphism(Family f, MonotoneMap phi, SignedPerm g);

  int source() const { return mono.source(); }
  int target() const { return mono.target; }

  friend bool operator==(const CrossedMorphism&,
                         const CrossedMorphism&) = default;
};

/// Rewrites g . i(phi) into canonical form i(psi) . h.
///
/// psi is the monotone sort of the multiset { |g|(phi(j)) }; h is the unique
/// bijection over it that is order-preserving on each fiber of phi when the
/// sign of g at that fiber's source is + and order-reversing when -, with
/// h.sign(j) = g.sign(phi(j)).
std::pair<MonotoneMap, SignedPerm> act_on_monotone(const SignedPerm& g,
                                                   const MonotoneMap& phi);

/// Composite `second . first` in canonical form.
CrossedMorphism compose(const CrossedMorphism& second,
                        const CrossedMorphism& first);

CrossedMorphism identity_morphism(Family f, int n);

/// All morphisms [m] -> [n], ordered by (monotone part, group part).
std::vector<CrossedMorphism> hom_set(Family f, int m, int n);

enum class OpKind { Face, Degeneracy };

/// The exchange g . delta_i = delta_j . h (resp. g . eta_i = eta_j . h),
/// so that d_i . act_g = act_h . d_j on any crossed set.
struct OperatorExchange {
  int index;       // j
  SignedPerm part; // h
};

OperatorExchange operator_exchange(const SignedPerm& g, OpKind kind, int i);

} // namespace xsg

#endif
