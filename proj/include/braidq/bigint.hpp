#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace braidq {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace braidq
