#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kontsevich/bigint.hpp"
#include "kontsevich/word.hpp"

namespace kontsevich {

// Sparse non-commutative Laurent polynomial: finite map from reduced words
// to integer coefficients.  Zero coefficients are never stored.
class NCPoly {
 public:
  using Terms = std::unordered_map<Word, Int, WordHash>;

  NCPoly() = default;
  static NCPoly monomial(Word w, Int coeff = 1);

  void add_term(const Word& w, const Int& coeff);

  NCPoly& operator+=(const NCPoly& rhs);
  NCPoly& operator-=(const NCPoly& rhs);
  NCPoly operator-() const;
  friend NCPoly operator+(NCPoly lhs, const NCPoly& rhs) { return lhs += rhs; }
  friend NCPoly operator-(NCPoly lhs, const NCPoly& rhs) { return lhs -= rhs; }
  friend NCPoly operator*(const NCPoly& lhs, const NCPoly& rhs);
  NCPoly& operator*=(const Int& scalar);

  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  const Int* coeff(const Word& w) const;

  // Terms sorted by the canonical word order.
  std::vector<std::pair<Word, Int>> canonical_terms() const;

  // max |y-degree| over stored words; 0 for the zero polynomial.
  std::int64_t max_abs_y_degree() const;

 private:
  Terms terms_;
};

// Exact substitution x -> xyx^{-1}, y -> y^r x^{-1}; monomials map to
// monomials and no denominators arise.
Word apply_G_word(const Word& w, int r);
NCPoly apply_G(const NCPoly& p, int r);

// Truncation controls for the Kontsevich-map oracle: each (1+y^r)^{-1}
// factor is expanded as a geometric series capped at series_cap terms, and
// reduced words with |total y-degree| > y_degree_bound are dropped.
struct TruncationPolicy {
  int series_cap = 0;                // K
  std::int64_t y_degree_bound = 0;   // B
};

struct OracleReport {
  TruncationPolicy policy;
  std::uint64_t retained = 0;
  std::uint64_t discarded = 0;       // dropped words / pruned branches
  bool truncated = false;            // any inverse-series factor appeared
  std::int64_t d_min = 0;            // min base y-degree over truncated terms
  // Coefficients of retained words with |y-degree| <= min(B, D) are exact,
  // where D = d_min + r*K; with no truncation everything retained is exact.
  std::int64_t exact_threshold() const {
    return d_min + static_cast<std::int64_t>(policy.series_cap) * r;
  }
  bool exact_up_to_bound() const {
    return !truncated || policy.y_degree_bound <= exact_threshold();
  }
  int r = 2;
};

// The Kontsevich map x -> xyx^{-1}, y -> (1+y^r)x^{-1} with truncated
// series handling of (1+y^r)^{-1}.  The independent oracle for the
// combinatorial formula.
NCPoly apply_F_truncated(const NCPoly& p, int r, const TruncationPolicy& policy,
                         OracleReport* report = nullptr);

// True iff series caps K and K+1 retain identical term maps within the
// same degree bound.
bool stability_check(const NCPoly& p, int r, int series_cap, std::int64_t y_degree_bound);

}  // namespace kontsevich
