#ifndef WEDGEMASS_NODE_IO_HPP_
#define WEDGEMASS_NODE_IO_HPP_

#include <iosfwd>
#include <string>

#include "wedgemass/massmat.hpp"
#include "wedgemass/wedge15.hpp"

namespace wedgemass {

/// Reads a node file in either supported format, detected by content:
///  - text: 15 whitespace "x y z" rows (blank lines and '#' comments
///    ignored),
///  - JSON: an ordered array of 15 [x, y, z] arrays.
/// Both follow the NodeSet ordering convention. Errors carry the path.
NodeSet read_node_file(const std::string& path);

NodeSet parse_nodes_text(std::istream& is);
NodeSet parse_nodes_json(std::string_view text);

/// 15 x 15 full-precision decimal floats, row-major, comma-separated.
void write_mass_csv(const MassMatrix& mass, std::ostream& os);
void write_mass_csv(const MassMatrix& mass, const std::string& path);

/// Exact-rational variant ("n/d" entries) for the exact-oracle path.
void write_mass_rational_csv(const SymRational15& mass, std::ostream& os);
void write_mass_rational_csv(const SymRational15& mass, const std::string& path);

}  // namespace wedgemass

#endif  // WEDGEMASS_NODE_IO_HPP_
