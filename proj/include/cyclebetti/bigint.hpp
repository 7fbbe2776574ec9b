#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclebetti {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace cyclebetti
