#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cyclone {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

} // namespace cyclone
