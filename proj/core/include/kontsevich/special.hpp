#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "kontsevich/bigint.hpp"
#include "kontsevich/ncpoly.hpp"

namespace kontsevich {

struct XYKey {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend auto operator<=>(const XYKey&, const XYKey&) = default;
};

// Commutative Laurent polynomial in x and y.
class CommPoly {
 public:
  using Terms = std::map<XYKey, Int>;

  CommPoly() = default;
  static CommPoly monomial(XYKey k, Int coeff = 1);
  static CommPoly constant(Int c) { return monomial({0, 0}, std::move(c)); }

  void add_term(const XYKey& k, const Int& coeff);

  CommPoly& operator+=(const CommPoly& rhs);
  CommPoly& operator-=(const CommPoly& rhs);
  friend CommPoly operator+(CommPoly lhs, const CommPoly& rhs) { return lhs += rhs; }
  friend CommPoly operator-(CommPoly lhs, const CommPoly& rhs) { return lhs -= rhs; }
  friend CommPoly operator*(const CommPoly& lhs, const CommPoly& rhs);
  CommPoly pow(int e) const;  // e >= 0

  friend bool operator==(const CommPoly&, const CommPoly&) = default;

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

 private:
  Terms terms_;
};

// Multiplication with a term cap and a pairwise-product budget; throws
// CapacityError when exceeded.  Used by large exchange-relation sweeps.
CommPoly comm_mul_capped(const CommPoly& a, const CommPoly& b, std::size_t term_cap,
                         std::uint64_t& op_budget);

// Exact division in Z[x^{+-1}, y^{+-1}] by leading-term peeling; throws
// InexactDivision if a remainder survives.
CommPoly comm_exact_div(const CommPoly& a, const CommPoly& d);

// Abelianization: each word maps to (sum of x exponents, sum of y exponents).
CommPoly commutative_specialize(const NCPoly& p);
void accumulate_commutative(CommPoly& acc, const Word& w, const Int& coeff = 1);

// Laurent polynomial in x, y whose coefficients are Laurent polynomials in q.
class QPoly {
 public:
  using QCoeff = std::map<std::int64_t, Int>;  // q-exponent -> coefficient
  using Terms = std::map<XYKey, QCoeff>;

  void add_term(const XYKey& k, std::int64_t q_exp, const Int& coeff);

  friend bool operator==(const QPoly&, const QPoly&) = default;

  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  CommPoly at_q_one() const;
  Int total_at_q_one() const;  // sum of all coefficients at q = 1

 private:
  Terms terms_;
};

// Specialization at x*y = q^e*y*x: every word normal-orders to
// q^{e*s} y^{sum beta} x^{sum alpha} with s the swap count of moving
// y-powers to the left.
QPoly q_specialize(const NCPoly& p, std::int64_t e);

// Commutative shadow of the Kontsevich map: x_0 = x, x_1 = y and
// x_{m+1} = (1 + x_m^r) / x_{m-1}, each step an exact Laurent division.
CommPoly cluster_recurrence(int r, int n);

// x_0 .. x_{n_max}, stopping early with CapacityError when a step would
// exceed the caps.
std::vector<CommPoly> cluster_sequence(int r, int n_max, std::size_t term_cap,
                                       std::uint64_t op_budget);

// Closed binomial formula for the commutative r = 2 variables:
//   sum_q C(n-1,q) x^{-n+1} y^{2q-n+2}
// + sum_{p>=1} sum_q C(n-2-q,p) C(n-1-p,q) x^{2p-n+1} y^{2q-n+2}.
CommPoly cz_formula(int n);

// Number of p-element subsets of [n-1]\{1} with t maximal runs:
// C(p-1,t-1) * C(n-1-p,t); the empty subset counts once at t = 0.
Int subset_component_count(int n, int p, int t);

}  // namespace kontsevich
