#include "kontsevich/bigint.hpp"

#include <stdexcept>

namespace kontsevich {

Int binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Int result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;  // exact: result is C(a-b+i, i) after this step
  }
  return result;
}

Int pow2(std::int64_t e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  return Int(1) << static_cast<unsigned>(e);
}

}  // namespace kontsevich
