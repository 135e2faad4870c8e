#ifndef XSG_WEYL_HPP
#define XSG_WEYL_HPP

#include <cstddef>
#include <vector>

#include "xsg/family.hpp"
#include "xsg/signed_perm.hpp"

namespace xsg {

// Distinguished elements of W_{n+1}.
SignedPerm rotation(int n);        // tau:   i -> i-1 (mod n+1), all signs +
SignedPerm reversal(int n);        // omega: i -> n-i, all signs -
SignedPerm adjacent_swap(int i, int n); // sigma_i: swap i-1, i, all signs +
SignedPerm leading_flip(int n);    // kappa: identity map, sign - at 0

/// The generator `name` of `family` at degree n. Throws precondition_error
/// when the family does not carry that generator (or the index is out of
/// range).
SignedPerm generator(Family family, const GenName& name, int n);

/// The family's generator list at degree n, in the fixed order
/// tau < omega < sigma(1) < ... < sigma(n) < kappa.
std::vector<GenName> family_generators(Family family, int n);

/// Defining relations of the family's presentation at degree n, as words
/// that must evaluate to the identity.
std::vector<Word> presentation_relations(Family family, int n);

/// Closed-form membership test for the subgroup of W_{n+1} realising the
/// family at degree g.degree().
bool is_member(Family family, const SignedPerm& g);

/// All elements generated by the family's generators at degree n, sorted.
std::vector<SignedPerm> family_closure(Family family, int n);

/// Order of the subgroup generated at degree n (breadth-first closure).
std::size_t closure_order(Family family, int n);

/// A shortest generator word evaluating to g (ties broken by the fixed
/// generator order). Requires is_member(family, g).
Word generator_word(Family family, const SignedPerm& g);

/// Left-to-right evaluation of a word at degree n.
SignedPerm evaluate_word(Family family, const Word& w, int n);

} // namespace xsg

#endif
