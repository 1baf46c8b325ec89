// Bootstrap generator: emits coeff_embedded.cpp, the exact coefficient
// tables consumed by embedded_coeff_matrices(). Run at build time; the
// output is compiled into the main library.

#include <fstream>
#include <iostream>

#include "wedgemass/schemes.hpp"

namespace {

void emit_table(std::ostream& os, const char* name, const wedgemass::CoeffMatrices& coeffs) {
  os << "const char* const " << name << "[" << coeffs.matrices.size() << " * kPackedEntries] = {\n";
  for (const auto& mat : coeffs.matrices) {
    int col = 0;
    os << "    ";
    for (const auto& value : mat.packed()) {
      os << "\"" << value.str() << "\", ";
      if (++col % 8 == 0) os << "\n    ";
    }
    os << "\n";
  }
  os << "};\n\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: coeff_table_gen <output.cpp>\n";
    return 2;
  }
  std::ofstream out(argv[1]);
  if (!out) {
    std::cerr << "cannot open " << argv[1] << " for writing\n";
    return 1;
  }
  out << "// Generated by coeff_table_gen. Do not edit.\n\n";
  out << "#include \"coeff_tables.hpp\"\n\n";
  out << "namespace wedgemass::detail {\n\n";
  emit_table(out, "kCmCoeffTable", wedgemass::generate_coeff_matrices(wedgemass::SchemeKind::CM));
  emit_table(out, "kLmCoeffTable", wedgemass::generate_coeff_matrices(wedgemass::SchemeKind::LM));
  emit_table(out, "kQmCoeffTable", wedgemass::generate_coeff_matrices(wedgemass::SchemeKind::QM));
  out << "}  // namespace wedgemass::detail\n";
  return out.good() ? 0 : 1;
}
