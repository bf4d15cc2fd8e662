#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lz76 {

using big_int = boost::multiprecision::cpp_int;
using big_rational = boost::multiprecision::cpp_rational;

inline big_int ipow(big_int base, std::size_t exp) {
    big_int result = 1;
    while (exp > 0) {
        if (exp & 1) result *= base;
        exp >>= 1;
        if (exp > 0) base *= base;
    }
    return result;
}

} // namespace lz76
