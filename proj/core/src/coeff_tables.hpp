#ifndef WEDGEMASS_CORE_SRC_COEFF_TABLES_HPP_
#define WEDGEMASS_CORE_SRC_COEFF_TABLES_HPP_

// Declarations for the build-time generated coefficient tables
// (see coeff_table_gen.cpp). Entries are "n/d" strings, one matrix per
// scheme point, each packed i <= j row-major (120 entries).

namespace wedgemass::detail {

inline constexpr int kPackedEntries = 120;

extern const char* const kCmCoeffTable[1 * kPackedEntries];
extern const char* const kLmCoeffTable[4 * kPackedEntries];
extern const char* const kQmCoeffTable[10 * kPackedEntries];

}  // namespace wedgemass::detail

#endif  // WEDGEMASS_CORE_SRC_COEFF_TABLES_HPP_
