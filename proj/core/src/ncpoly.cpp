#include "kontsevich/ncpoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace kontsevich {

NCPoly NCPoly::monomial(Word w, Int coeff) {
  NCPoly p;
  p.add_term(w, coeff);
  return p;
}

void NCPoly::add_term(const Word& w, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

NCPoly operator*(const NCPoly& lhs, const NCPoly& rhs) {
  NCPoly out;
  for (const auto& [wa, ca] : lhs.terms_)
    for (const auto& [wb, cb] : rhs.terms_)
      out.add_term(group_mul(wa, wb), ca * cb);
  return out;
}

NCPoly& NCPoly::operator*=(const Int& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

const Int* NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? nullptr : &it->second;
}

std::vector<std::pair<Word, Int>> NCPoly::canonical_terms() const {
  std::vector<std::pair<Word, Int>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::int64_t NCPoly::max_abs_y_degree() const {
  std::int64_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, std::abs(w.y_degree()));
  return m;
}

Word apply_G_word(const Word& w, int r) {
  if (r < 2) throw std::invalid_argument("apply_G: r must be >= 2");
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto [gen, exp] = w.syllable(i);
    if (gen == Gen::x) {
      // x^a -> x y^a x^{-1}
      out.push(Gen::x, 1);
      out.push(Gen::y, exp);
      out.push(Gen::x, -1);
    } else if (exp > 0) {
      // y -> y^r x^{-1}
      for (std::int64_t k = 0; k < exp; ++k) {
        out.push(Gen::y, r);
        out.push(Gen::x, -1);
      }
    } else {
      // y^{-1} -> x y^{-r}
      for (std::int64_t k = 0; k < -exp; ++k) {
        out.push(Gen::x, 1);
        out.push(Gen::y, -r);
      }
    }
  }
  return out;
}

NCPoly apply_G(const NCPoly& p, int r) {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) out.add_term(apply_G_word(w, r), c);
  return out;
}

namespace {

struct Branch {
  Word word;
  int sign;           // +1 or -1
  std::int64_t ydeg;  // y-degree contribution of this branch
};

struct Factor {
  std::vector<Branch> branches;
  std::int64_t min_ydeg = 0;
  std::int64_t max_ydeg = 0;
};

// F-image of one syllable as a list of truncated factors.
void append_factors(std::vector<Factor>& factors, Gen gen, std::int64_t exp, int r,
                    int series_cap) {
  if (gen == Gen::x) {
    Word w;
    w.push(Gen::x, 1);
    w.push(Gen::y, exp);
    w.push(Gen::x, -1);
    Factor f;
    f.branches.push_back({std::move(w), 1, exp});
    f.min_ydeg = f.max_ydeg = exp;
    factors.push_back(std::move(f));
  } else if (exp > 0) {
    // (1 + y^r) x^{-1}, expanded; one factor per unit power.
    Factor f;
    f.branches.push_back({Word::generator(Gen::x, -1), 1, 0});
    Word w = Word::generator(Gen::y, r);
    w.push(Gen::x, -1);
    f.branches.push_back({std::move(w), 1, r});
    f.min_ydeg = 0;
    f.max_ydeg = r;
    for (std::int64_t k = 0; k < exp; ++k) factors.push_back(f);
  } else {
    // x * sum_{k<=K} (-1)^k y^{rk}, one factor per unit power.
    Factor f;
    for (int k = 0; k <= series_cap; ++k) {
      Word w = Word::generator(Gen::x, 1);
      w.push(Gen::y, static_cast<std::int64_t>(r) * k);
      f.branches.push_back({std::move(w), (k % 2 == 0) ? 1 : -1,
                            static_cast<std::int64_t>(r) * k});
    }
    f.min_ydeg = 0;
    f.max_ydeg = static_cast<std::int64_t>(r) * series_cap;
    for (std::int64_t k = 0; k < -exp; ++k) factors.push_back(f);
  }
}

struct PartialTerm {
  Int coeff;
  std::int64_t ydeg;
};

using PartialMap = std::unordered_map<Word, PartialTerm, WordHash>;

}  // namespace

NCPoly apply_F_truncated(const NCPoly& p, int r, const TruncationPolicy& policy,
                         OracleReport* report) {
  if (r < 2) throw std::invalid_argument("apply_F_truncated: r must be >= 2");
  if (policy.series_cap < 0 || policy.y_degree_bound < 0)
    throw std::invalid_argument("apply_F_truncated: negative truncation policy");

  OracleReport rep;
  rep.policy = policy;
  rep.r = r;
  const std::int64_t bound = policy.y_degree_bound;

  NCPoly out;
  for (const auto& [src, coeff] : p.terms()) {
    bool has_series = false;
    std::vector<Factor> factors;
    for (std::size_t i = 0; i < src.size(); ++i) {
      const auto [gen, exp] = src.syllable(i);
      if (gen == Gen::y && exp < 0) has_series = true;
      append_factors(factors, gen, exp, r, policy.series_cap);
    }
    if (has_series) {
      // Every branch of this term has y-degree >= its all-zero-picks base,
      // which is exactly the source word's x-degree.
      const std::int64_t base = src.x_degree();
      if (!rep.truncated || base < rep.d_min) rep.d_min = base;
      rep.truncated = true;
    }

    // suffix_min/max[i] bound the y-degree contribution of factors i..end
    const std::size_t nf = factors.size();
    std::vector<std::int64_t> suffix_min(nf + 1, 0), suffix_max(nf + 1, 0);
    for (std::size_t i = nf; i-- > 0;) {
      suffix_min[i] = suffix_min[i + 1] + factors[i].min_ydeg;
      suffix_max[i] = suffix_max[i + 1] + factors[i].max_ydeg;
    }

    PartialMap cur;
    cur.emplace(Word{}, PartialTerm{coeff, 0});
    for (std::size_t i = 0; i < nf; ++i) {
      PartialMap next;
      next.reserve(cur.size() * factors[i].branches.size());
      for (const auto& [pw, acc] : cur) {
        for (const Branch& br : factors[i].branches) {
          const std::int64_t d = acc.ydeg + br.ydeg;
          if (d + suffix_min[i + 1] > bound || d + suffix_max[i + 1] < -bound) {
            ++rep.discarded;
            continue;
          }
          Word w = group_mul(pw, br.word);
          Int c = br.sign > 0 ? acc.coeff : -acc.coeff;
          auto [it, inserted] = next.try_emplace(std::move(w), PartialTerm{std::move(c), d});
          if (!inserted) {
            it->second.coeff += br.sign > 0 ? acc.coeff : -acc.coeff;
            if (it->second.coeff == 0) next.erase(it);
          }
        }
      }
      cur = std::move(next);
    }
    for (auto& [w, acc] : cur) {
      if (std::abs(w.y_degree()) > bound) {
        ++rep.discarded;
        continue;
      }
      out.add_term(w, acc.coeff);
    }
  }
  rep.retained = out.term_count();
  if (report) *report = rep;
  return out;
}

bool stability_check(const NCPoly& p, int r, int series_cap, std::int64_t y_degree_bound) {
  TruncationPolicy a{series_cap, y_degree_bound};
  TruncationPolicy b{series_cap + 1, y_degree_bound};
  return apply_F_truncated(p, r, a) == apply_F_truncated(p, r, b);
}

}  // namespace kontsevich
