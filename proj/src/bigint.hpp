#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ffgroup {

/// Unbounded integer used for group orders and exponents.
using Bigint = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Bigint& v) { return v.str(); }

inline Bigint bigint_pow(std::uint64_t base, unsigned exp) {
    Bigint r = 1;
    Bigint b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

}  // namespace ffgroup
