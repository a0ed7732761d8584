#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace monomialis {

/// Arbitrary-precision integer used for counts, binomials and exact ranks.
using BigInt = boost::multiprecision::cpp_int;

} // namespace monomialis
