#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace kontsevich {

// All coefficients and counts are exact unbounded integers.
using Int = boost::multiprecision::cpp_int;

// C(a, b) with the convention that it vanishes unless 0 <= b <= a.
Int binomial(std::int64_t a, std::int64_t b);

Int pow2(std::int64_t e);

}  // namespace kontsevich
