#pragma once

#include <cstdint>

namespace wittkit {

// Process-wide cap on the total degree produced by polynomial
// multiplication and exponentiation.  Exceeding it throws DegreeCapError,
// which keeps runaway symbolic expansion from eating the machine.  The
// command line tool seeds this from the WITTKIT_MAX_DEGREE environment
// variable; the library default is 64.
std::uint64_t max_degree();
void set_max_degree(std::uint64_t cap);

} // namespace wittkit
