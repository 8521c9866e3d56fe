#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace kontsevich {

enum class Gen : std::uint8_t { x = 0, y = 1 };

constexpr Gen other(Gen g) { return g == Gen::x ? Gen::y : Gen::x; }
constexpr char gen_char(Gen g) { return g == Gen::x ? 'x' : 'y'; }

struct Syllable {
  Gen gen;
  std::int64_t exp;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Two-row presentation of a monomial
//
//   y^{b0} x^{a1} y^{b1} x^{a2} ... y^{b_{m-1}} x^{am}
//
// recorded as alpha = (a1..am), beta = (b0..b_{m-1}).  Entries may be zero;
// presentations are deliberately non-minimal.
struct TwoRowWord {
  std::vector<std::int64_t> alpha;
  std::vector<std::int64_t> beta;

  std::size_t columns() const { return alpha.size(); }
  friend bool operator==(const TwoRowWord&, const TwoRowWord&) = default;
};

// Concatenation of presentations; the semantic product of the two monomials.
TwoRowWord concat(const TwoRowWord& a, const TwoRowWord& b);

// Free-group normal form: alternating generators, no zero exponents.
// This is the canonical key for polynomial term maps.
class Word {
 public:
  Word() = default;
  static Word generator(Gen g, std::int64_t exp);

  bool empty() const { return exps_.empty(); }
  std::size_t size() const { return exps_.size(); }
  Gen gen_at(std::size_t i) const { return (i % 2 == 0) ? first_ : other(first_); }
  std::int64_t exp_at(std::size_t i) const { return exps_[i]; }
  Syllable syllable(std::size_t i) const { return {gen_at(i), exps_[i]}; }

  // Multiply on the right by g^exp / by w, reducing at the seam.
  void push(Gen g, std::int64_t exp);
  void push(const Word& w);

  std::int64_t x_degree() const;  // sum of x exponents
  std::int64_t y_degree() const;  // sum of y exponents

  std::size_t hash() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Gen first_ = Gen::x;
  std::vector<std::int32_t> exps_;
};

// Canonical total order: lexicographic on syllables with x < y and exponents
// ascending; a proper prefix precedes its extensions.
std::strong_ordering compare(const Word& a, const Word& b);
inline bool operator<(const Word& a, const Word& b) { return compare(a, b) < 0; }

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

Word group_mul(const Word& a, const Word& b);

// Drop zeros, merge adjacent like-generator powers, repeat to fixpoint.
Word reduce(const TwoRowWord& w);

// Minimal two-row presentation; reduce(to_two_row(w)) == w.
TwoRowWord to_two_row(const Word& w);

// Text form: space-separated `x^k` / `y^k` tokens, "1" for the identity.
std::string format_word(const Word& w);

// Accepts non-alternating input and reduces it.  Throws ParseError.
Word parse_word(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace kontsevich
