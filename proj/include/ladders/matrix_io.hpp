#pragma once

#include <string>
#include <string_view>

#include "ladders/matrix_core.hpp"

namespace ladders {

// Text form of a complex number: `re+imi` / `re-imi`, lowercase i, no spaces,
// 17 significant digits, so that parse_complex(format_complex(z)) == z
// bit-for-bit (signed zeros included).
std::string format_complex(cdouble z);
// Throws DomainError on malformed input.
cdouble parse_complex(std::string_view text);

// One row per line, entries space-separated.
std::string format_matrix(const ComplexMatrix &x);
// Accepts the format_matrix layout; blank lines are ignored. The result must
// be square (DimensionError otherwise).
ComplexMatrix parse_matrix(std::string_view text);

// Throw IoError on filesystem failures.
void dump_matrix(const ComplexMatrix &x, const std::string &path);
ComplexMatrix load_matrix(const std::string &path);

} // namespace ladders
