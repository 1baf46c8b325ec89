#ifndef WEDGEMASS_FAMILIES_HPP_
#define WEDGEMASS_FAMILIES_HPP_

#include "wedgemass/wedge15.hpp"

namespace wedgemass {

/// The three progressively-distorted element families of the accuracy
/// study. Each reduces to the parent element at delta = 0.
///
///   F1: node 4 z, node 5 x, node 6 y   -> 1 + delta
///   F2: node 1 x, node 2 y             -> delta;  node 2 z -> -1 + delta
///   F3: nodes 4, 5, 10 z               -> 1 - delta
enum class FamilyId { F1 = 1, F2 = 2, F3 = 3 };

FamilyId family_from_int(int id);  // throws on anything but 1, 2, 3

/// Parent node set with the family's components overridden at coarseness
/// delta. Throws InvalidElementError when the resulting volume is <= 0.
NodeSet family_nodes(FamilyId id, const Rational& delta);
NodeSet family_nodes(FamilyId id, double delta);

}  // namespace wedgemass

#endif  // WEDGEMASS_FAMILIES_HPP_
