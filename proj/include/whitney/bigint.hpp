#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace whitney {

/// Exact arbitrary-precision integer used for every count in the library.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace whitney
