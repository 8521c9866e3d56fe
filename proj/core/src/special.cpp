#include "kontsevich/special.hpp"

#include <array>
#include <limits>
#include <stdexcept>
#include <string>

#include "kontsevich/errors.hpp"

namespace kontsevich {

CommPoly CommPoly::monomial(XYKey k, Int coeff) {
  CommPoly p;
  p.add_term(k, coeff);
  return p;
}

void CommPoly::add_term(const XYKey& k, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

CommPoly& CommPoly::operator+=(const CommPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

CommPoly operator*(const CommPoly& lhs, const CommPoly& rhs) {
  CommPoly out;
  for (const auto& [ka, ca] : lhs.terms_)
    for (const auto& [kb, cb] : rhs.terms_)
      out.add_term({ka.x + kb.x, ka.y + kb.y}, ca * cb);
  return out;
}

CommPoly CommPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("CommPoly::pow: negative exponent");
  CommPoly out = CommPoly::constant(1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

CommPoly comm_mul_capped(const CommPoly& a, const CommPoly& b, std::size_t term_cap,
                         std::uint64_t& op_budget) {
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(a.term_count()) * static_cast<std::uint64_t>(b.term_count());
  if (pairs > op_budget)
    throw CapacityError("comm_mul_capped: " + std::to_string(pairs) +
                        " pair products exceed remaining budget");
  op_budget -= pairs;
  CommPoly out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      out.add_term({ka.x + kb.x, ka.y + kb.y}, ca * cb);
  if (out.term_count() > term_cap)
    throw CapacityError("comm_mul_capped: result has " + std::to_string(out.term_count()) +
                        " terms, cap " + std::to_string(term_cap));
  return out;
}

CommPoly comm_exact_div(const CommPoly& a, const CommPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("comm_exact_div: zero divisor");
  if (a.is_zero()) return {};

  auto span = [](const CommPoly& p) {
    std::int64_t xmin = std::numeric_limits<std::int64_t>::max(), xmax = std::numeric_limits<std::int64_t>::min();
    std::int64_t ymin = xmin, ymax = xmax;
    for (const auto& [k, c] : p.terms()) {
      xmin = std::min(xmin, k.x);
      xmax = std::max(xmax, k.x);
      ymin = std::min(ymin, k.y);
      ymax = std::max(ymax, k.y);
    }
    return std::array<std::int64_t, 4>{xmin, xmax, ymin, ymax};
  };
  const auto sa = span(a), sd = span(d);
  // If a = q*d, the support of q sits inside this box.
  const std::int64_t qx_min = sa[0] - sd[0], qx_max = sa[1] - sd[1];
  const std::int64_t qy_min = sa[2] - sd[2], qy_max = sa[3] - sd[3];

  CommPoly rem = a, quot;
  const auto& dterms = d.terms();
  const auto dl = std::prev(dterms.end());  // leading term under lex (x, y)
  while (!rem.is_zero()) {
    const auto rl = std::prev(rem.terms().end());
    const XYKey qk{rl->first.x - dl->first.x, rl->first.y - dl->first.y};
    if (qk.x < qx_min || qk.x > qx_max || qk.y < qy_min || qk.y > qy_max)
      throw InexactDivision("comm_exact_div: leading term not divisible");
    Int qc = rl->second / dl->second;
    if (qc * dl->second != rl->second)
      throw InexactDivision("comm_exact_div: leading coefficient not divisible");
    quot.add_term(qk, qc);
    for (const auto& [k, c] : dterms) rem.add_term({qk.x + k.x, qk.y + k.y}, -qc * c);
  }
  return quot;
}

CommPoly commutative_specialize(const NCPoly& p) {
  CommPoly out;
  for (const auto& [w, c] : p.terms()) accumulate_commutative(out, w, c);
  return out;
}

void accumulate_commutative(CommPoly& acc, const Word& w, const Int& coeff) {
  acc.add_term({w.x_degree(), w.y_degree()}, coeff);
}

void QPoly::add_term(const XYKey& k, std::int64_t q_exp, const Int& coeff) {
  if (coeff == 0) return;
  QCoeff& qc = terms_[k];
  auto [it, inserted] = qc.try_emplace(q_exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) qc.erase(it);
  }
  if (qc.empty()) terms_.erase(k);
}

CommPoly QPoly::at_q_one() const {
  CommPoly out;
  for (const auto& [k, qc] : terms_)
    for (const auto& [e, c] : qc) out.add_term(k, c);
  return out;
}

Int QPoly::total_at_q_one() const {
  Int total = 0;
  for (const auto& [k, qc] : terms_)
    for (const auto& [e, c] : qc) total += c;
  return total;
}

QPoly q_specialize(const NCPoly& p, std::int64_t e) {
  QPoly out;
  for (const auto& [w, c] : p.terms()) {
    const TwoRowWord t = to_two_row(w);
    const std::size_t m = t.columns();
    // s counts (x,y) swaps when moving all y-powers to the left:
    // s = sum_i alpha_i * (beta_i + ... + beta_{m-1}).
    std::int64_t s = 0, suffix = 0;
    for (std::size_t i = m; i-- > 1;) {
      suffix += t.beta[i];
      s += t.alpha[i - 1] * suffix;
    }
    std::int64_t xd = 0, yd = 0;
    for (std::size_t i = 0; i < m; ++i) {
      xd += t.alpha[i];
      yd += t.beta[i];
    }
    out.add_term({xd, yd}, e * s, c);
  }
  return out;
}

std::vector<CommPoly> cluster_sequence(int r, int n_max, std::size_t term_cap,
                                       std::uint64_t op_budget) {
  if (r < 2) throw std::invalid_argument("cluster_sequence: r must be >= 2");
  if (n_max < 0) throw std::invalid_argument("cluster_sequence: n_max must be >= 0");
  std::vector<CommPoly> seq;
  seq.push_back(CommPoly::monomial({1, 0}));  // x_0 = x
  if (n_max >= 1) seq.push_back(CommPoly::monomial({0, 1}));
  for (int m = 2; m <= n_max; ++m) {
    CommPoly p = seq[static_cast<std::size_t>(m) - 1];
    CommPoly power = CommPoly::constant(1);
    for (int i = 0; i < r; ++i) power = comm_mul_capped(power, p, term_cap, op_budget);
    power += CommPoly::constant(1);
    seq.push_back(comm_exact_div(power, seq[static_cast<std::size_t>(m) - 2]));
  }
  return seq;
}

CommPoly cluster_recurrence(int r, int n) {
  std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
  auto seq = cluster_sequence(r, n, std::numeric_limits<std::size_t>::max(), budget);
  return seq.at(static_cast<std::size_t>(n));
}

CommPoly cz_formula(int n) {
  if (n < 2) throw std::invalid_argument("cz_formula: n must be >= 2");
  CommPoly out;
  for (int q = 0; q <= n - 1; ++q)
    out.add_term({-n + 1, 2 * q - n + 2}, binomial(n - 1, q));
  for (int p = 1; p <= n - 2; ++p)
    for (int q = 0; q <= n - 1 - p; ++q)
      out.add_term({2 * p - n + 1, 2 * q - n + 2},
                   binomial(n - 2 - q, p) * binomial(n - 1 - p, q));
  return out;
}

Int subset_component_count(int n, int p, int t) {
  if (n < 2 || p < 0 || t < 0) throw std::invalid_argument("subset_component_count");
  if (p == 0) return t == 0 ? 1 : 0;
  return binomial(p - 1, t - 1) * binomial(n - 1 - p, t);
}

}  // namespace kontsevich
