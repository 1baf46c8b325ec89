#include "wedgemass/families.hpp"

#include <stdexcept>

namespace wedgemass {

FamilyId family_from_int(int id) {
  if (id < 1 || id > 3) throw std::invalid_argument("family id must be 1, 2 or 3");
  return static_cast<FamilyId>(id);
}

NodeSet family_nodes(FamilyId id, const Rational& delta) {
  if (delta.sign() < 0) throw std::invalid_argument("family_nodes: delta must be >= 0");
  NodeSet nodes = NodeSet::parent();
  switch (id) {
    case FamilyId::F1:
      nodes.node(3)[2] = Rational(1) + delta;   // node 4 z
      nodes.node(4)[0] = Rational(1) + delta;   // node 5 x
      nodes.node(5)[1] = Rational(1) + delta;   // node 6 y
      break;
    case FamilyId::F2:
      nodes.node(0)[0] = delta;                 // node 1 x
      nodes.node(1)[1] = delta;                 // node 2 y
      nodes.node(1)[2] = Rational(-1) + delta;  // node 2 z
      break;
    case FamilyId::F3:
      nodes.node(3)[2] = Rational(1) - delta;   // node 4 z
      nodes.node(4)[2] = Rational(1) - delta;   // node 5 z
      nodes.node(9)[2] = Rational(1) - delta;   // node 10 z
      break;
  }
  nodes.refresh();
  if (volume_exact(nodes).sign() <= 0)
    throw InvalidElementError("family " + std::to_string(static_cast<int>(id)) +
                              " at delta " + delta.str() + ": non-positive volume");
  return nodes;
}

NodeSet family_nodes(FamilyId id, double delta) {
  return family_nodes(id, Rational::from_double(delta));
}

}  // namespace wedgemass
