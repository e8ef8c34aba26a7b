#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace zsurg {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

}  // namespace zsurg
