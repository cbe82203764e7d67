#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace largeness {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Largest m >= 0 with m^k <= x.  Exact; x >= 0, k >= 1.
Int nth_root_floor(const Int& x, unsigned k);

/// x^k for k >= 0.
Int ipow(const Int& x, unsigned long k);

/// "p/q" (or "p" when q == 1), canonical sign on the numerator.
std::string rat_string(const Rat& r);

/// Fixed-precision decimal rendering for report output only.
std::string rat_decimal(const Rat& r, int digits = 12);

} // namespace largeness
