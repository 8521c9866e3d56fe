#pragma once

#include <string>
#include <vector>

#include "kontsevich/ncpoly.hpp"
#include "kontsevich/special.hpp"
#include "kontsevich/verify.hpp"
#include "kontsevich/word.hpp"

namespace kontsevich {

// JSON encodings.  Coefficients are decimal strings; term lists are in
// canonical order; position sets are sorted 1-based arrays.
std::string two_row_to_json(const TwoRowWord& w);
std::string ncpoly_to_json(const NCPoly& p);
std::string commpoly_to_json(const CommPoly& p);
std::string qpoly_to_json(const QPoly& p);
std::string positions_to_json(const std::vector<int>& v);
std::string report_to_json(const VerifyReport& rep);

// Text form: one `<coeff> * <word>` line per term, canonical order.
std::string ncpoly_to_text(const NCPoly& p);

}  // namespace kontsevich
