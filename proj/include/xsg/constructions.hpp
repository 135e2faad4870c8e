#ifndef XSG_CONSTRUCTIONS_HPP
#define XSG_CONSTRUCTIONS_HPP

#include "xsg/crossed_set.hpp"
#include "xsg/dagger_category.hpp"
#include "xsg/family.hpp"
#include "xsg/fin_group.hpp"

namespace xsg {

/// Bar construction of a group with the family's generator actions.
/// Level n holds the (n+1)-tuples of group elements.
///
/// The simplicial structure depends on the family: the rotation-style
/// families (Trivial, Cyclic, Reflexive, Dihedral) use the multiplication
/// faces d_i = (g_0,...,g_i g_{i+1},...,g_n), d_n = (g_n g_0, g_1,...)
/// with identity-insertion degeneracies, while the swap-style families
/// (Symmetric, Reflexosymmetric, Weyl) use coordinate-deletion faces with
/// coordinate-repetition degeneracies; each is the unique convention under
/// which the family's actions satisfy the crossed exchange relations.
CrossedSet bar_construction(const FinGroup& G, Family family, int max_dim);

/// Loops of n+1 composable arrows with the rotation action.
CrossedSet cyclic_nerve(const DaggerCategory& C, int max_dim);

/// Cyclic nerve plus the reversal action
/// omega(a_0,...,a_n) = (a_0+, a_n+, ..., a_1+).
CrossedSet dihedral_nerve(const DaggerCategory& C, int max_dim);

/// Tuples of endomorphisms of the unique object, deletion faces, with the
/// family's swap/flip actions (sigma_i swaps, kappa daggers position 0,
/// the reflexosymmetric omega dagger-reverses).
CrossedSet one_object_nerve(const DaggerCategory& C, Family family,
                            int max_dim);

/// Classical nerve levels (chains of n arrows); no actions.
CrossedSet classical_nerve(const DaggerCategory& C, int max_dim);

/// Classical nerve of a group twisted by a central element z:
///   tau(g_1,...,g_n)   = (z (g_1...g_n)^-1, g_1, ..., g_{n-1})
///   omega(g_1,...,g_n) = (g_n^-1, ..., g_1^-1)          (Dihedral only)
/// Dihedral additionally requires z^2 = e, which makes
/// (tau omega)^2 = (z^2 g_1, g_2, ..., g_n) the identity.
CrossedSet twisted_bar(Family family, const FinGroup& G, int z, int max_dim);

/// Classical nerve of a unitary dagger category with
///   tau(a_1,...,a_n)   = ((a_1...a_n)+, a_1, ..., a_{n-1})
///   omega(a_1,...,a_n) = (a_n+, ..., a_1+)               (Dihedral only)
CrossedSet twisted_categorical_nerve(Family family, const DaggerCategory& C,
                                     int max_dim);

} // namespace xsg

#endif
