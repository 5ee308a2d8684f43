#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace flagpath {

// Exact arithmetic only; counts never pass through floating point.
using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

}  // namespace flagpath
