#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace repdecomp {

/// Exact arbitrary-precision integer used for every multiplicity,
/// coefficient and dimension in the library.
using Int = boost::multiprecision::cpp_int;

}  // namespace repdecomp
