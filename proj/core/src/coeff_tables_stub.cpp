// Link-only stub for the bootstrap generator, which never reads the
// embedded tables it is about to produce.

#include "coeff_tables.hpp"

namespace wedgemass::detail {

const char* const kCmCoeffTable[1 * kPackedEntries] = {};
const char* const kLmCoeffTable[4 * kPackedEntries] = {};
const char* const kQmCoeffTable[10 * kPackedEntries] = {};

}  // namespace wedgemass::detail
