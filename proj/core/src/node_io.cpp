#include "wedgemass/node_io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace wedgemass {
namespace {

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string read_whole_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open node file '" + path + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

template <class Os>
void write_stream_or_throw(Os& os, const std::string& path) {
  os.flush();
  if (!os) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace

NodeSet parse_nodes_text(std::istream& is) {
  std::array<std::array<double, 3>, kNodeCount> coords{};
  int row = 0;
  std::string line;
  while (std::getline(is, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (row >= kNodeCount)
      throw std::runtime_error("node file has more than 15 coordinate rows");
    std::istringstream ls(line);
    double x, y, z;
    if (!(ls >> x >> y >> z))
      throw std::runtime_error("node file row " + std::to_string(row + 1) +
                               " is not three numbers: '" + line + "'");
    std::string extra;
    if (ls >> extra)
      throw std::runtime_error("node file row " + std::to_string(row + 1) +
                               " has trailing content: '" + extra + "'");
    coords[static_cast<size_t>(row++)] = {x, y, z};
  }
  if (row != kNodeCount)
    throw std::runtime_error("node file has " + std::to_string(row) +
                             " coordinate rows, expected 15");
  return NodeSet::from_doubles(coords);
}

NodeSet parse_nodes_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_array() || doc.size() != kNodeCount)
    throw std::runtime_error("node document must be an array of 15 [x, y, z] arrays");
  std::array<std::array<double, 3>, kNodeCount> coords{};
  for (size_t i = 0; i < kNodeCount; ++i) {
    const auto& row = doc[i];
    if (!row.is_array() || row.size() != 3)
      throw std::runtime_error("node document entry " + std::to_string(i + 1) +
                               " is not an [x, y, z] array");
    for (size_t m = 0; m < 3; ++m) coords[i][m] = row[m].get<double>();
  }
  return NodeSet::from_doubles(coords);
}

NodeSet read_node_file(const std::string& path) {
  const std::string text = read_whole_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && text[first] == '[') return parse_nodes_json(text);
    std::istringstream is(text);
    return parse_nodes_text(is);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_mass_csv(const MassMatrix& mass, std::ostream& os) {
  for (int i = 0; i < kNodeCount; ++i) {
    for (int j = 0; j < kNodeCount; ++j) {
      if (j) os << ',';
      os << format_double(mass.entries(i, j));
    }
    os << '\n';
  }
}

void write_mass_csv(const MassMatrix& mass, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_mass_csv(mass, os);
  write_stream_or_throw(os, path);
}

void write_mass_rational_csv(const SymRational15& mass, std::ostream& os) {
  for (int i = 0; i < kNodeCount; ++i) {
    for (int j = 0; j < kNodeCount; ++j) {
      if (j) os << ',';
      os << mass.at(i, j).str();
    }
    os << '\n';
  }
}

void write_mass_rational_csv(const SymRational15& mass, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_mass_rational_csv(mass, os);
  write_stream_or_throw(os, path);
}

}  // namespace wedgemass
